import itertools

import pytest

from conftest import random_fronts
from legfronts import corpus
from legfronts.fronts import (
    classical_invariants,
    components,
    connected_sum,
    crossing_indices,
    front,
)
from legfronts.laurent import ZPoly
from legfronts.rulings import (
    GradingClass,
    PairingState,
    census,
    enumerate_rulings,
    is_normal_switch,
    ruling_polynomial,
)

UNKNOT = front("L1 R1", name="unknot")
STAB = front("L1 L2 R1 R1", name="stab")
UNLINK2 = front("L1 L2 R2 R1", name="unlink2")
TREFOIL = front("L1 L3 X2 X2 X2 R1 R1", name="trefoil")
HOPF = front("L1 L2 X1 X3 R2 R1", name="hopf")


# -- independent oracle -------------------------------------------------------
#
# Replays the eye-pairing sweep for a single switch subset, with its own
# height bookkeeping; the library's pruned search must agree with trying
# all 2^c subsets through this.


def _oracle_accepts(events, switches) -> bool:
    partner: dict[int, int] = {}
    xnum = 0
    for ev in events:
        k = ev.height
        if ev.kind == "L":
            partner = {
                (h + 2 if h >= k else h): (p + 2 if p >= k else p)
                for h, p in partner.items()
            }
            partner[k] = k + 1
            partner[k + 1] = k
        elif ev.kind == "R":
            if partner.get(k) != k + 1:
                return False
            del partner[k], partner[k + 1]
            partner = {
                (h - 2 if h > k else h): (p - 2 if p > k else p)
                for h, p in partner.items()
            }
        else:
            xnum += 1
            a, b = partner[k], partner[k + 1]
            if a == k + 1:
                return False  # the two arcs of one eye may not meet
            if xnum in switches:
                lo1, hi1 = min(k, a), max(k, a)
                lo2, hi2 = min(k + 1, b), max(k + 1, b)
                disjoint = hi1 < lo2 or hi2 < lo1
                nested = (lo1 < lo2 and hi2 < hi1) or (lo2 < lo1 and hi1 < hi2)
                if not (disjoint or nested):
                    return False
            else:
                swap = {k: k + 1, k + 1: k}
                partner = {
                    swap.get(h, h): swap.get(p, p) for h, p in partner.items()
                }
    return True


def oracle_switch_sets(diagram, class_filter="ungraded", reverse=()):
    ids = sorted(crossing_indices(diagram, reverse))
    indices = crossing_indices(diagram, reverse)
    out = set()
    for size in range(len(ids) + 1):
        for subset in itertools.combinations(ids, size):
            if class_filter == "two_graded" and any(indices[c] % 2 for c in subset):
                continue
            if class_filter == "z_graded" and any(indices[c] != 0 for c in subset):
                continue
            if _oracle_accepts(diagram.events, set(subset)):
                out.add(subset)
    return out


# -- normality predicate ------------------------------------------------------


def test_normal_switch_disjoint():
    state = PairingState.from_pairs([(1, 2), (3, 4)])
    assert is_normal_switch(state, 2)


def test_normal_switch_interleaved():
    state = PairingState.from_pairs([(1, 3), (2, 4)])
    assert not is_normal_switch(state, 2)


def test_normal_switch_disjoint_after_repair():
    state = PairingState.from_pairs([(1, 6), (2, 3), (4, 5)])
    assert is_normal_switch(state, 3)


def test_normal_switch_nested():
    state = PairingState.from_pairs([(1, 4), (2, 3)])
    assert is_normal_switch(state, 1)


def test_normal_switch_rejects_partners():
    state = PairingState.from_pairs([(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        is_normal_switch(state, 1)


def test_pairing_state_involution_guard():
    with pytest.raises(ValueError):
        PairingState({1: 1})


# -- census examples ----------------------------------------------------------


def test_unknot_single_empty_ruling():
    rulings = enumerate_rulings(UNKNOT)
    assert len(rulings) == 1
    assert rulings[0].switches == ()
    assert rulings[0].theta == 1
    assert rulings[0].genus == 0


def test_stabilized_unknot_has_no_rulings():
    for cls in ("ungraded", "two_graded", "z_graded"):
        assert enumerate_rulings(STAB, cls) == []


def test_trefoil_census():
    rulings = enumerate_rulings(TREFOIL)
    assert [r.switches for r in rulings] == [(1,), (1, 2, 3), (3,)]
    by_set = {r.switches: r for r in rulings}
    assert by_set[(1,)].genus == 0
    assert by_set[(3,)].genus == 0
    assert by_set[(1, 2, 3)].genus == 1
    assert by_set[(1, 2, 3)].theta == -1
    assert all(r.grading is GradingClass.Z_GRADED for r in rulings)
    assert all(r.orientable for r in rulings)


def test_unlink2_ruling():
    rulings = enumerate_rulings(UNLINK2)
    assert len(rulings) == 1
    assert rulings[0].theta == 2
    assert rulings[0].genus is None  # genus is a knot-front notion


def test_trefoil_polynomial():
    assert ruling_polynomial(TREFOIL, "two_graded") == ZPoly({2: 1, 0: 2})
    assert ruling_polynomial(STAB, "ungraded") == ZPoly(0)
    assert ruling_polynomial(UNLINK2, "two_graded") == ZPoly({-1: 1})


def test_hopf_orientation_splits_census():
    plain = census(HOPF)
    assert plain.count("ungraded") == plain.count("two_graded") == 2
    # reversing one component makes the clasp switches odd
    reversed_rulings = enumerate_rulings(HOPF, "ungraded", reverse=(1,))
    gradings = {r.switches: r.grading for r in reversed_rulings}
    assert gradings[()] is GradingClass.Z_GRADED
    assert gradings[(1, 2)] is GradingClass.UNGRADED_ONLY
    assert len(enumerate_rulings(HOPF, "two_graded", reverse=(1,))) == 1


# -- oracle equivalence and structural properties -----------------------------


def _library_switch_sets(diagram, class_filter, reverse=()):
    return {r.switches for r in enumerate_rulings(diagram, class_filter, reverse)}


def test_oracle_equivalence_on_corpus():
    for name in corpus.corpus_names():
        f = corpus.load(name)
        assert f.num_crossings <= 12
        for cls in ("ungraded", "two_graded", "z_graded"):
            assert _library_switch_sets(f, cls) == oracle_switch_sets(f, cls), (name, cls)


def test_oracle_equivalence_on_random_fronts():
    for f in random_fronts(seed=21, count=25, max_crossings=8):
        assert _library_switch_sets(f, "ungraded") == oracle_switch_sets(f, "ungraded")


def test_oracle_equivalence_reversed_hopf():
    for cls in ("ungraded", "two_graded", "z_graded"):
        assert _library_switch_sets(HOPF, cls, (1,)) == oracle_switch_sets(HOPF, cls, (1,))


def test_theta_equals_left_cusps_minus_switches():
    for f in random_fronts(seed=22, count=20, max_crossings=8):
        for r in enumerate_rulings(f):
            assert r.theta == f.num_left_cusps - len(r.switches)
            assert r.eyes == f.num_left_cusps


def test_graded_counts_nest_per_theta():
    for f in random_fronts(seed=23, count=20, max_crossings=8):
        cens = census(f)
        thetas = set()
        for cls in ("ungraded", "two_graded", "z_graded"):
            thetas |= set(cens.counts_by_theta(cls))
        for theta in thetas:
            c_u = cens.counts_by_theta("ungraded").get(theta, 0)
            c_2 = cens.counts_by_theta("two_graded").get(theta, 0)
            c_z = cens.counts_by_theta("z_graded").get(theta, 0)
            assert c_z <= c_2 <= c_u


def test_two_graded_knot_rulings_have_even_spread_and_positive_switches():
    for f in random_fronts(seed=24, count=20, max_crossings=8, knots_only=True):
        signs = classical_invariants(f).crossing_signs
        for r in enumerate_rulings(f, "two_graded"):
            assert (len(r.switches) - r.eyes + 1) % 2 == 0
            assert r.genus is not None and r.genus >= 0
            assert all(signs[c - 1] == 1 for c in r.switches)


def test_disk_rulings_are_z_graded_with_r_zero():
    seen_disk = False
    for f in random_fronts(seed=25, count=30, max_crossings=8, knots_only=True):
        inv = classical_invariants(f)
        for r in enumerate_rulings(f):
            if r.theta == 1:
                seen_disk = True
                assert r.grading is GradingClass.Z_GRADED
                assert inv.r == 0
    assert seen_disk


def test_census_multiplicativity_under_connected_sum():
    pairs = [("trefoil", "trefoil"), ("trefoil", "unknot"), ("51", "trefoil"), ("unknot", "unknot")]
    for n1, n2 in pairs:
        f1, f2 = corpus.load(n1), corpus.load(n2)
        c1, c2 = census(f1), census(f2)
        c12 = census(connected_sum(f1, f2))
        for cls in ("ungraded", "two_graded", "z_graded"):
            assert c12.polynomials[cls] == c1.polynomials[cls] * c2.polynomials[cls], (n1, n2, cls)
            assert c12.count(cls) == c1.count(cls) * c2.count(cls)


def test_trefoil_unknot_census_matches_trefoil():
    composite = connected_sum(corpus.load("trefoil"), corpus.load("unknot"))
    assert {r.switches for r in enumerate_rulings(composite)} == {
        r.switches for r in enumerate_rulings(TREFOIL)
    }


def test_links_report_theta_but_no_genus():
    for f in random_fronts(seed=26, count=20, max_crossings=6):
        is_knot = components(f).num_components == 1
        for r in enumerate_rulings(f):
            if not is_knot:
                assert r.genus is None
            if r.grading is GradingClass.UNGRADED_ONLY and is_knot:
                assert r.orientable is False


def test_class_filter_agrees_with_filtered_ungraded():
    for f in random_fronts(seed=27, count=15, max_crossings=8):
        all_rulings = enumerate_rulings(f, "ungraded")
        two = {r.switches for r in all_rulings if r.grading is not GradingClass.UNGRADED_ONLY}
        zg = {r.switches for r in all_rulings if r.grading is GradingClass.Z_GRADED}
        assert _library_switch_sets(f, "two_graded") == two
        assert _library_switch_sets(f, "z_graded") == zg


def test_bad_class_filter():
    with pytest.raises(ValueError):
        enumerate_rulings(UNKNOT, "graded")
