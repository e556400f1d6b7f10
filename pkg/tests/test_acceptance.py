"""Acceptance battery: every check runs at its stated tolerance and prints
one pass/fail line (run with ``pytest -s`` to see the lines inline)."""

import pytest

from osctomo.selftest import ALL_CHECKS


@pytest.mark.parametrize("check", ALL_CHECKS, ids=lambda c: c.ident)
def test_acceptance(check):
    result = check.run()
    print(result.line())
    assert result.passed, result.line()
