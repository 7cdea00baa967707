"""The acceptance gate: one test per criterion, each printing its line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the pass/fail
line of every criterion; the ``strictcat selftest`` command runs the
same suite.
"""

import pytest

from strictcat import acceptance


@pytest.mark.parametrize(
    "criterion", acceptance.CRITERIA, ids=lambda c: c.__name__
)
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.ok, result.detail
    assert result.within_budget, (
        f"{result.name} took {result.seconds:.2f}s, budget {result.budget}s"
    )
