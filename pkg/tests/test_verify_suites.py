import pytest

from powercrit.verify import SUITE_NAMES, builtin_family, run_suites


def test_builtin_family_respects_max_order():
    family = builtin_family(50)
    assert family and all(g.order <= 50 for g in family)
    descriptors = {g.descriptor for g in family}
    assert "C:50" in descriptors and "D:25" in descriptors and "S:4" in descriptors
    assert "Q:5" in descriptors and "C:7 x C:7" in descriptors
    assert any(d.startswith("M:") for d in descriptors)


def test_run_suites_all_names():
    results = run_suites(["all"], 48)
    assert [r.name for r in results] == list(SUITE_NAMES)
    for res in results:
        assert res.checks > 0 and res.passed, (res.name, res.failures[:3])


def test_run_suites_rejects_unknown():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suites(["bogus"], 24)
