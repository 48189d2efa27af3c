"""Every self-check suite must pass on a healthy build."""

import pytest

from zetafield import SUITE_NAMES, OutOfDomain, run_suite


def test_suite_names_are_stable():
    assert SUITE_NAMES == ("zeta", "quadrature", "theorem1", "symmetry")


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_suite_passes(suite):
    checks = run_suite(suite)
    assert checks, suite
    names = [c.name for c in checks]
    assert len(names) == len(set(names))
    for check in checks:
        assert check.allowed >= 0.0
        assert check.passed, f"{suite}/{check.name}: {check.observed} > {check.allowed}"


def test_unknown_suite_is_rejected():
    with pytest.raises(OutOfDomain):
        run_suite("everything")
