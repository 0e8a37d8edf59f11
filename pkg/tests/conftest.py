import numpy as np
from hypothesis import strategies as st

# Entries are zero or at least 1e-100 in magnitude, so squares stay normal numbers.
moderate = st.one_of(
    st.just(0.0),
    st.floats(1e-100, 1.0),
    st.floats(-1.0, -1e-100),
)

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
