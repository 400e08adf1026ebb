import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from msrecon.generators import PlainGraph, gen_vc_gadget  # noqa: E402
from msrecon.graph_core import parse_instance  # noqa: E402

# s=1 a1=2 a2=3 b1=4 b2=5 t=6
FIX_A_TEXT = """\
# two parallel paths
p msr 6 6
e 1 2
e 2 3
e 3 6
e 1 4
e 4 5
e 5 6
s 1
t 6
A 2 4
B 3 5
"""

# s=1 x1=2 y1=3 x2=4 y2=5 t=6, crossings x1-y2 and x2-y1
FIX_DEAD_TEXT = """\
p msr 6 8
e 1 2
e 1 3
e 2 4
e 3 5
e 4 6
e 5 6
e 2 5
e 3 4
s 1
t 6
A 2 3
B 4 5
"""

SINGLE_PATH_TEXT = """\
p msr 4 3
e 1 2
e 2 3
e 3 4
s 1
t 4
A 2
B 3
"""


# filled by test_acceptance; echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def fix_a():
    return parse_instance(FIX_A_TEXT)


@pytest.fixture
def fix_b():
    return gen_vc_gadget(PlainGraph.complete(2), 1)[0]


@pytest.fixture
def fix_c():
    return gen_vc_gadget(PlainGraph.complete(3), 2)[0]


@pytest.fixture
def fix_dead():
    return parse_instance(FIX_DEAD_TEXT)


@pytest.fixture
def single_path():
    return parse_instance(SINGLE_PATH_TEXT)


@pytest.fixture
def fixtures(fix_a, fix_b, fix_c, fix_dead, single_path):
    return {"A": fix_a, "B": fix_b, "C": fix_c, "DEAD": fix_dead, "PATH": single_path}
