"""The thirteen reproduction criteria, one test each.

Every test prints a PASS or FAIL line (visible even under output capture)
and then asserts the check passed.  All comparisons are exact.  Run the file
directly to get just the thirteen lines.
"""

import pytest

from turaev_lab.reproduce import CHECKS, run_check


@pytest.mark.parametrize("name", list(CHECKS))
def test_criterion(name, capsys):
    res = run_check(name)
    with capsys.disabled():
        print(f"\n{res.line()}")
        if not res.passed:
            for line in res.details:
                print(f"    {line}")
    assert res.passed, "\n".join(res.details)


if __name__ == "__main__":
    for name in CHECKS:
        print(run_check(name).line())
