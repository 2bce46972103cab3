"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]`` or ``[FAIL]`` line (visible in the
pytest log regardless of capture). Run this file directly for the same
lines without pytest.
"""

import pytest

from superchar import acceptance


@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number, capsys):
    result = acceptance.run(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.seconds < 60, f"criterion {number} took {result.seconds:.1f}s"
    assert result.passed, result.detail + "".join(f"\n  {f}" for f in result.failures[:5])


if __name__ == "__main__":
    for r in acceptance.run_all():
        print(r.line())
