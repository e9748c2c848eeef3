from itertools import permutations

import pytest

from kroncoeff import kron
from kroncoeff.errors import InputError
from kroncoeff.kron import (ProvablyZero, ReductionMap, compute, compute_with_route, dvir_vanishing,
                            gapp_decomposition, kron_via_characters, kron_via_tables, reduce,
                            reduced_kron, stable_n, table_terms)
from kroncoeff.contingency import count_tables
from kroncoeff.partitions import Partition, conjugate, partitions_of

P = Partition


def _all_triples(max_n):
    for n in range(1, max_n + 1):
        ps = list(partitions_of(n))
        for lam in ps:
            for mu in ps:
                for nu in ps:
                    yield lam, mu, nu


@pytest.mark.parametrize("lam, mu, nu, g", [
    ((2, 1), (2, 1), (3,), 1),
    ((1,) * 5, (1,) * 5, (5,), 1),
    ((2, 1), (2, 1), (2, 1), 1),
    ((2, 2), (2, 2), (3, 1), 0),
    # (n-1,1) x (n-1,1) = (n) + (n-1,1) + (n-2,2) + (n-2,1,1)
    ((4, 1), (4, 1), (4, 1), 1),
    # (3,3) x (3,3) = (6) + (4,2) + (2,2,2) + (3,1,1,1)
    ((3, 3), (3, 3), (5, 1), 0),
    ((3, 3), (3, 3), (4, 2), 1),
    ((2,), (2,), (2,), 1),
    ((1, 1), (1, 1), (2,), 1),
    ((1, 1), (1, 1), (1, 1), 0),
])
def test_known_values_all_methods(lam, mu, nu, g):
    for method in kron.METHODS:
        assert compute(P(lam), P(mu), P(nu), method) == g


def test_size_mismatch_is_an_error():
    for fn in (kron_via_characters, kron_via_tables, compute, reduce):
        with pytest.raises(InputError):
            fn(P((2,)), P((2,)), P((1,)))
    with pytest.raises(InputError):
        compute(P((1,)), P((1,)), P((1,)), "magic")


def test_shift_convention_is_frozen():
    # the mirrored reading of the staircase shift already fails on S_3
    assert kron.SHIFT_CONVENTION == "vandermonde"
    t = (P((2, 1)),) * 3
    assert kron_via_tables(*t, convention="vandermonde") == 1
    assert kron_via_tables(*t, convention="mirrored") != 1


def test_frozen_convention_on_the_selection_set():
    mirrored_wrong = 0
    for lam, mu, nu in _all_triples(5):
        if max(len(lam), len(mu), len(nu)) > 3:
            continue
        g = kron_via_characters(lam, mu, nu)
        assert kron_via_tables(lam, mu, nu, convention="vandermonde") == g
        mirrored_wrong += kron_via_tables(lam, mu, nu, convention="mirrored") != g
    assert mirrored_wrong > 0


def test_grouped_sum_equals_literal_term_sum():
    for lam, mu, nu in _all_triples(5):
        if max(len(lam), len(mu), len(nu)) > 3:
            continue
        literal = sum(sign * count_tables(a, b, c) for sign, a, b, c in table_terms(lam, mu, nu))
        assert literal == kron_via_tables(lam, mu, nu)


def test_literal_term_count():
    terms = list(table_terms(P((2, 1)), P((2, 1)), P((1, 1, 1))))
    assert len(terms) == 6 ** 3
    assert sum(1 for t in terms if t[0] > 0) == sum(1 for t in terms if t[0] < 0)


def test_gapp_examples():
    one = gapp_decomposition(P((3,)), P((3,)), P((3,)))
    assert one.neg == 0 and one.value == 1
    assert gapp_decomposition(P((2, 1)), P((2, 1)), P((2, 1))).value == 1
    assert gapp_decomposition(P((1, 1)), P((1, 1)), P((1, 1))).value == 0


def test_threads_do_not_change_values():
    t = (P((3, 2, 1)), P((3, 2, 1)), P((2, 2, 1, 1)))
    assert gapp_decomposition(*t, threads=1) == gapp_decomposition(*t, threads=4)


def test_conjugation_symmetries():
    for lam, mu, nu in _all_triples(5):
        g = kron_via_characters(lam, mu, nu)
        lc, mc, nc = conjugate(lam), conjugate(mu), conjugate(nu)
        assert kron_via_characters(lc, mc, nu) == g
        assert kron_via_characters(lc, mu, nc) == g
        assert kron_via_characters(lam, mc, nc) == g


@pytest.mark.parametrize("lam, mu, nu, vanishes", [
    ((2, 2), (2, 2), (1, 1, 1, 1), False),
    ((3, 1), (3, 1), (1, 1, 1, 1), False),
    ((4,), (2, 2), (1, 1, 1, 1), True),
    ((4,), (4,), (2, 2), True),
])
def test_dvir_vanishing(lam, mu, nu, vanishes):
    assert dvir_vanishing(P(lam), P(mu), P(nu)) == vanishes
    if vanishes:
        assert kron_via_characters(P(lam), P(mu), P(nu)) == 0


def test_dvir_agrees_with_oracle():
    for lam, mu, nu in _all_triples(6):
        if dvir_vanishing(lam, mu, nu):
            assert kron_via_characters(lam, mu, nu) == 0


def test_reduction_map_on_example_pair():
    lam, mu = P((19, 15, 12, 5, 1)), P((16, 16, 14, 3, 3))
    phi = ReductionMap.from_pair(lam, mu, 3)
    assert phi.cuts == (3, 6)
    assert phi(phi.omega) == (16, 13, 11, 5, 3)
    assert phi(phi.rho) == (13, 12, 9, 3, 1)
    assert phi(P((14, 14, 10, 2))) == (11, 11, 7, 2)
    assert phi.offsets() == (-3, -3, -3, 0, 0)


def test_reduction_map_rejects_out_of_domain():
    phi = ReductionMap.from_pair(P((19, 15, 12, 5, 1)), P((16, 16, 14, 3, 3)), 3)
    with pytest.raises(InputError):
        phi(P((1,) * 6))
    with pytest.raises(InputError):
        phi(P((5, 5, 5)))


def test_reduce_identity_case():
    t = P((1, 1, 1))
    out = reduce(t, t, t)
    assert out.kind == "reduced" and out.t == 2 and out.cuts == (4,)
    assert (out.lam, out.mu, out.nu) == (t, t, t)


def test_reduce_provably_zero():
    out = reduce(P((5, 1)), P((3, 3)), P((5, 1)))
    assert isinstance(out, ProvablyZero) and out.t == 1 and out.index == 1
    assert kron_via_characters(P((5, 1)), P((3, 3)), P((5, 1))) == 0


def test_reduce_full_example():
    lam, mu, nu = P((19, 15, 12, 5, 1)), P((16, 16, 14, 3, 3)), P((49, 3))
    out = reduce(lam, mu, nu)
    assert out.cuts == (3, 6) and out.t == 3
    assert out.lam == (16, 12, 9, 5, 1) and out.mu == (13, 13, 11, 3, 3)
    assert out.nu == (40, 3)
    assert out.size <= 2 * 3 * 5 ** 2


def test_auto_routes():
    value, route = compute_with_route(P((4,)), P((2, 2)), P((1,) * 4))
    assert value == 0 and route.steps == ["dvir"]
    value, route = compute_with_route(P((5, 1)), P((3, 3)), P((5, 1)))
    assert value == 0 and "reduce-zero" in route.steps
    value, route = compute_with_route(P((2, 1, 1, 1, 1)), P((2, 1, 1, 1, 1)), P((3, 1, 1, 1)))
    assert route.steps[-1] == "oracle"
    assert value == kron_via_characters(P((2, 1, 1, 1, 1)), P((2, 1, 1, 1, 1)), P((3, 1, 1, 1)))
    assert str(route).startswith("auto:")


def test_role_assignment_puts_smallest_second_part_last():
    lam, mu, nu = kron.assign_roles(P((2, 2)), P((3, 1)), P((2, 2)))
    assert nu == (3, 1) and (lam, mu) == ((2, 2), (2, 2))
    lam, mu, nu = kron.assign_roles(P((3, 1)), P((3, 1)), P((2, 2)))
    assert (lam, mu, nu) == ((3, 1), (2, 2), (3, 1))


def test_oracle_thresholds_are_configurable():
    t = (P((2, 1, 1, 1, 1)), P((2, 1, 1, 1, 1)), P((3, 1, 1, 1)))
    v1, r1 = compute_with_route(*t, oracle_max_n=0)
    v2, r2 = compute_with_route(*t)
    assert v1 == v2 and r1.steps[-1] == "tables" and r2.steps[-1] == "oracle"


def test_conjugate_pair_option():
    for lam, mu, nu in _all_triples(5):
        assert compute(lam, mu, nu, conjugate_pair=True) == kron_via_characters(lam, mu, nu)


def test_larger_value_by_two_routes():
    lam, mu, nu = P((4, 3, 2, 1)), P((4, 3, 2, 1)), P((7, 2, 1))
    assert compute(lam, mu, nu) == kron_via_characters(lam, mu, nu)


@pytest.mark.parametrize("lam, mu, nu, g", [
    ((1,), (1,), (1,), 1),
    ((1,), (1,), (), 1),
    ((2,), (1, 1), (), 0),
    ((1,), (), (1,), 1),
])
def test_reduced_kron_examples(lam, mu, nu, g):
    assert reduced_kron(P(lam), P(mu), P(nu)) == g


def test_stable_n_sorts_by_size():
    assert stable_n(P((2, 1)), P((1,)), P((1, 1))) == stable_n(P((1,)), P((1, 1)), P((2, 1))) == 2 + 1 + 3
    with pytest.raises(InputError):
        kron.pad_first_row(P((3, 1)), 6)
    assert kron.pad_first_row(P((3, 1)), 7) == (3, 3, 1)
