import dataclasses

import pytest

from powercrit import (
    MetacyclicParams,
    PowerGraph,
    census,
    classify_group,
    eppo_metacyclic_equivalence_check,
    exists_for,
    make_cyclic,
    make_metacyclic,
    make_symmetric,
    multiplicative_order,
    recognize_critical_structure,
    validate,
)


def test_validate_minimum_critical_tuple():
    flags = validate(MetacyclicParams(5, 2, 2, 2, 7))
    assert flags.well_defined and flags.eppo and flags.frobenius and flags.critical


def test_validate_exponent_one_kernel():
    # Frobenius but not critical: a = 1
    flags = validate(MetacyclicParams(5, 1, 2, 2, 2))
    assert flags.well_defined and flags.frobenius and not flags.critical
    assert flags.eppo  # |2| mod 5 = 4 = q^b


def test_validate_frobenius_impossible_for_p7_qb4():
    # 4 does not divide 7 - 1, so no r can be Frobenius
    pa = 49
    rs = [r for r in range(2, pa) if pow(r, 4, pa) == 1]
    assert rs  # well-defined tuples do exist
    for r in rs:
        flags = validate(MetacyclicParams(7, 2, 2, 2, r))
        assert flags.well_defined and not flags.frobenius


def test_validate_inversion_action_not_critical():
    # r = 24 = -1 mod 25: well defined, but the action has order 2
    flags = validate(MetacyclicParams(5, 2, 2, 2, 24))
    assert flags.well_defined and not flags.eppo and not flags.frobenius and not flags.critical


@pytest.mark.parametrize(
    "params,reason",
    [
        (MetacyclicParams(4, 2, 2, 2, 7), "not prime"),
        (MetacyclicParams(5, 2, 5, 2, 7), "distinct"),
        (MetacyclicParams(5, 0, 2, 2, 7), ">= 1"),
        (MetacyclicParams(5, 2, 2, 2, 1), "2 <= r"),
        (MetacyclicParams(5, 2, 2, 2, 10), "divides r"),
        (MetacyclicParams(5, 2, 2, 2, 3), "not well defined"),
    ],
)
def test_validate_names_violations(params, reason):
    flags = validate(params)
    assert not flags.well_defined
    assert reason in flags.reason


# -- exists_for --------------------------------------------------------------------


def test_exists_for_examples():
    assert exists_for(5, 2, 2, 2) == 7
    assert exists_for(3, 2, 2, 2) is None  # 4 does not divide 2
    assert exists_for(3, 2, 2, 3) is None
    assert exists_for(7, 1, 2, 2) is None  # 4 does not divide 6
    r = exists_for(13, 2, 2, 2)
    assert r is not None
    assert multiplicative_order(r, 13) == 4 and pow(r, 4, 169) == 1


def test_exists_for_skips_residues_that_lift_badly():
    # |4| mod 5 = 2 but 4^2 = 16 != 1 (mod 25); the search must continue to 24
    r = exists_for(5, 2, 2, 1)
    assert r == 24
    flags = validate(MetacyclicParams(5, 2, 2, 1, r))
    assert flags.well_defined and flags.frobenius


def test_exists_for_rejects_bad_input():
    with pytest.raises(ValueError):
        exists_for(4, 2, 2, 2)
    with pytest.raises(ValueError):
        exists_for(5, 2, 5, 2)


def test_exists_for_presence_iff_divisibility():
    from powercrit.numtheory import primes_upto

    for p in primes_upto(60):
        for q, b in ((2, 2), (2, 3), (3, 2)):
            if p == q:
                continue
            r = exists_for(p, 2, q, b)
            assert (r is not None) == ((p - 1) % q**b == 0), (p, q, b)
            if r is not None:
                flags = validate(MetacyclicParams(p, 2, q, b, r))
                assert flags.well_defined and flags.frobenius


# -- recognizer ---------------------------------------------------------------------


def test_recognize_minimum_critical_group():
    fs = recognize_critical_structure(make_metacyclic(5, 2, 2, 2, 7))
    assert fs is not None
    assert (fs.p, fs.a, fs.q, fs.b) == (5, 2, 2, 2)
    assert fs.kernel.order == 25 and fs.complement.order == 4


def test_recognize_rejects_non_examples():
    assert recognize_critical_structure(make_symmetric(4)) is None
    assert recognize_critical_structure(make_cyclic(100)) is None
    # well-defined but non-Frobenius action: y^2 centralizes the kernel
    assert recognize_critical_structure(make_metacyclic(5, 2, 2, 2, 24)) is None


# -- census -----------------------------------------------------------------------------


def test_census_minimum_critical_order():
    entries = census(100, verify_up_to=100)
    crit = [e for e in entries if e.flags.critical]
    assert len(crit) == 1
    assert crit[0].params == MetacyclicParams(5, 2, 2, 2, 7)
    assert crit[0].graph_is_critical is True and crit[0].graph_agrees is True
    assert not [e for e in census(99) if e.flags.critical]


def test_census_sorted_and_verified_to_500():
    entries = census(500, verify_up_to=500, all_r=True)
    orders = [e.params.order for e in entries]
    assert orders == sorted(orders)
    assert all(e.graph_agrees is True for e in entries)
    assert sorted({e.params.order for e in entries if e.flags.critical}) == [100, 500]


def test_census_critical_round_trip():
    for e in census(500, all_r=True):
        if not e.flags.critical:
            continue
        m = e.params
        fs = recognize_critical_structure(make_metacyclic(m.p, m.a, m.q, m.b, m.r))
        assert fs is not None and (fs.p, fs.a, fs.q, fs.b) == (m.p, m.a, m.q, m.b)


# -- equivalence check ---------------------------------------------------------------------


def test_eppo_equivalence_check():
    params = MetacyclicParams(5, 2, 2, 2, 7)
    v = eppo_metacyclic_equivalence_check(params)
    assert v.applicable and v.passed is True
    # not applicable below exponent 2
    v = eppo_metacyclic_equivalence_check(MetacyclicParams(5, 1, 2, 2, 2))
    assert not v.applicable


def test_eppo_equivalence_check_negative_control():
    params = MetacyclicParams(5, 2, 2, 2, 7)
    wrong = dataclasses.replace(validate(params), frobenius=False)
    v = eppo_metacyclic_equivalence_check(params, flags=wrong)
    assert v.applicable and v.passed is False


def test_graph_criticality_both_directions():
    # critical flag true -> graph critical; false -> graph not critical
    g1 = make_metacyclic(5, 2, 2, 2, 7)
    assert classify_group(PowerGraph(g1)).is_critical_group
    g2 = make_metacyclic(5, 2, 2, 2, 24)
    assert not classify_group(PowerGraph(g2)).is_critical_group
    g3 = make_metacyclic(5, 1, 2, 2, 2)  # Frobenius but a = 1
    assert not classify_group(PowerGraph(g3)).is_critical_group
