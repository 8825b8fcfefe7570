"""Equivariant ideals: derivation action, graded slices, initial sets.

Initial-matching fixtures here follow the package's total order on
matchings (largest edge first, then recursively), under which the
crossing picture on four labels beats the nested one.
"""

import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

from tca_lab.algebra import (
    EquivariantIdeal,
    Span,
    VariableSystem,
    admissible_component,
    all_ops,
    degree_one_initial_set,
    degree_one_verify_move_closure,
    highest_weight_vector,
    hw_weight,
    ideal_admissible_component,
    ideal_contains_isotypic,
    indicator_weight,
    initial_matching,
    initial_set,
    lie_act,
    lowerings_from,
    monomials_of_degree,
    monomials_of_weight,
    poly_add,
    raising_kernel,
    rep_closure,
    term,
    vector_to_matching_coords,
    verify_move_closure,
    weight_split,
)
from tca_lab.errors import DegreeOverflowError, ZeroVectorError
from tca_lab.matchings import fmt_matching, leq_full, matching
from tca_lab.partitions import contains, decompose_algebra, partitions_upto

SYM2 = VariableSystem("symmetric", 2)
SYM4 = VariableSystem("symmetric", 4)


def sym_poly(system, *terms):
    out = {}
    for coeff, pairs in terms:
        poly_add(out, term(system, coeff, pairs))
    return out


def det_corner(system):
    return sym_poly(system, (1, [(1, 1), (2, 2)]), (-1, [(1, 2), (1, 2)]))


def test_variable_systems():
    assert len(VariableSystem("symmetric", 3).variables()) == 6
    assert len(VariableSystem("antisymmetric", 3).variables()) == 3
    assert len(VariableSystem("generic", 3).variables()) == 9
    assert len(VariableSystem("degree_one", 3).variables()) == 6
    with pytest.raises(ValueError):
        VariableSystem("hermitian", 2)
    anti = VariableSystem("antisymmetric", 3)
    assert anti.canonical(2, 1) == ((1, 2), -1)
    assert anti.canonical(1, 1) == (None, 0)
    assert SYM4.weight(((1, 2), (1, 3))) == (2, 1, 1, 0)


def test_term_canonicalizes_signs():
    anti = VariableSystem("antisymmetric", 3)
    assert term(anti, 2, [(3, 1)]) == {((1, 3),): Fraction(-2)}
    assert term(anti, 1, [(2, 2)]) == {}
    assert term(SYM2, 0, [(1, 2)]) == {}


def test_derivation_action_fixtures():
    x22 = {((2, 2),): Fraction(1)}
    assert lie_act(SYM2, 1, 2, x22) == {((1, 2),): Fraction(2)}
    x11 = {((1, 1),): Fraction(1)}
    assert lie_act(SYM2, 1, 2, x11) == {}
    # the commutator [e12, e21] acts on x22 by its weight difference, -2
    inner = lie_act(SYM2, 1, 2, lie_act(SYM2, 2, 1, x22))
    outer = lie_act(SYM2, 2, 1, lie_act(SYM2, 1, 2, x22))
    diff = dict(inner)
    poly_add(diff, outer, scale=-1)
    assert diff == {((2, 2),): Fraction(-2)}


def test_derivation_action_sides():
    gen = VariableSystem("generic", 2)
    x22 = {((2, 2),): Fraction(1)}
    assert lie_act(gen, 1, 2, x22, side="row") == {((1, 2),): Fraction(1)}
    assert lie_act(gen, 1, 2, x22, side="col") == {((2, 1),): Fraction(1)}
    with pytest.raises(ValueError):
        lie_act(gen, 1, 2, x22)
    with pytest.raises(ValueError):
        lie_act(SYM2, 1, 2, x22, side="row")


def test_rep_closure_dimensions():
    x11 = {((1, 1),): Fraction(1)}
    assert len(rep_closure(SYM2, [x11])) == 3
    assert len(rep_closure(SYM2, [det_corner(SYM2)])) == 1
    gen = VariableSystem("generic", 2)
    x12 = {((1, 2),): Fraction(1)}
    assert len(rep_closure(gen, [x12])) == 4


def test_monomial_enumeration():
    assert len(monomials_of_degree(SYM2, 2)) == 6
    pms = monomials_of_weight(SYM4, 2, (1, 1, 1, 1))
    assert sorted(pms) == sorted([
        ((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))])
    assert monomials_of_weight(SYM2, 1, (1, 0)) == []   # odd total weight


def test_highest_weight_vectors():
    assert highest_weight_vector(SYM4, (1,)) == {((1, 1),): Fraction(1)}
    assert highest_weight_vector(SYM4, (1, 1)) == det_corner(SYM4)
    assert hw_weight(SYM4, (1, 1)) == (2, 2, 0, 0)
    for lam in ((1,), (2,), (1, 1), (2, 1)):
        hwv = highest_weight_vector(SYM4, lam)
        for a in range(1, 5):
            for b in range(a + 1, 5):
                assert lie_act(SYM4, a, b, hwv) == {}


def test_hwv_agrees_with_raising_kernel():
    """The corner-product construction spans the same line the exact
    kernel solver finds."""
    for lam in ((2,), (1, 1), (2, 1)):
        hwv = highest_weight_vector(SYM4, lam)
        mono = next(iter(hwv))
        kern = raising_kernel(SYM4, len(mono), SYM4.weight(mono))
        assert len(kern) == 1
        span = Span()
        span.add(kern[0])
        assert span.contains(hwv)


def test_lowerings_span_the_weight_space():
    hwv = highest_weight_vector(SYM2, (1,))
    vecs = lowerings_from(SYM2, hwv, (2, 0), (0, 2))
    span = Span()
    for v in vecs:
        span.add(v)
    assert span.contains({((2, 2),): Fraction(1)})


def test_ideal_components():
    i1 = EquivariantIdeal.isotypic(VariableSystem("symmetric", 3), (1,))
    assert len(i1.component(1)) == 6       # every degree-one element
    assert len(i1.component(2)) == 21      # the whole quadratic slice too
    principal = EquivariantIdeal.from_generators(SYM2, [det_corner(SYM2)])
    assert len(principal.component(2)) == 1
    assert principal.component(1) == []
    assert principal.contains(det_corner(SYM2))
    doubled = {m: 2 * c for m, c in det_corner(SYM2).items()}
    assert principal.contains(doubled)
    assert not principal.contains({((1, 1),): Fraction(1)})


def test_component_spans_are_derivation_stable():
    suite = [
        EquivariantIdeal.isotypic(SYM4, (2,)),
        EquivariantIdeal.from_generators(SYM4, [det_corner(SYM4)]),
    ]
    for ideal in suite:
        system = ideal.system
        for d in (2, 3):
            for vec in ideal.component(d):
                for a, b, side in all_ops(system):
                    img = lie_act(system, a, b, vec, side)
                    if not img:
                        continue
                    for w, piece in weight_split(system, img).items():
                        assert ideal.component_span(d, w).contains(piece)


def test_component_dims_match_decomposition():
    """Degree slice of I_(1) is everything, so its dimension must equal the
    character count of the full algebra."""
    for flavor in ("symmetric", "antisymmetric", "generic"):
        system = VariableSystem(flavor, 3)
        ideal = EquivariantIdeal.isotypic(system, (1,))
        for d in (1, 2, 3):
            assert len(ideal.component(d)) == \
                decompose_algebra(flavor, d, 3).total_dim()


def test_containment_lattice_small():
    lams = partitions_upto(2)
    for flavor in ("symmetric", "antisymmetric", "generic"):
        system = VariableSystem(flavor, 4)
        ideals = {lam: EquivariantIdeal.isotypic(system, lam) for lam in lams}
        for lam in lams:
            for mu in lams:
                assert ideal_contains_isotypic(ideals[lam], mu) == \
                    contains(lam, mu), (flavor, lam, mu)


def test_containment_fixtures():
    i1 = EquivariantIdeal.isotypic(SYM4, (1,))
    i2 = EquivariantIdeal.isotypic(SYM4, (2,))
    assert ideal_contains_isotypic(i1, (2,))
    assert not ideal_contains_isotypic(i2, (1, 1))
    assert ideal_contains_isotypic(i2, (2,))
    # blocks that vanish at this rank count as contained
    assert ideal_contains_isotypic(
        EquivariantIdeal.isotypic(SYM2, (1,)), (1, 1, 1))
    with pytest.raises(DegreeOverflowError):
        ideal_contains_isotypic(i1, (3,), d_bound=2)


def test_admissible_component_fixtures():
    i1 = EquivariantIdeal.isotypic(SYM4, (1,))
    got = ideal_admissible_component(i1, (1, 2))
    assert got == [{matching([(1, 2)]): Fraction(1)}]
    # odd supports carry nothing
    assert ideal_admissible_component(i1, (1, 2, 3)) == []
    # the full quadratic slice on four labels is all three matchings
    full = ideal_admissible_component(i1, (1, 2, 3, 4))
    assert len(full) == 3
    with pytest.raises(ValueError):
        ideal_admissible_component(
            EquivariantIdeal.isotypic(VariableSystem("generic", 4), (1,)),
            (1, 2))


def test_diagonal_variables_are_never_admissible():
    x11 = {((1, 1),): Fraction(1)}
    assert admissible_component(SYM4, [x11], (1, 2)) == []
    assert admissible_component(SYM4, [x11], (1,)) == []


def test_initial_matching_fixtures():
    assert initial_matching({matching([(1, 2)]): Fraction(1)}) == \
        matching([(1, 2)])
    # nested minus crossing: the crossing picture leads
    vec = sym_poly(SYM4, (1, [(1, 4), (2, 3)]), (-1, [(1, 3), (2, 4)]))
    assert initial_matching(vector_to_matching_coords(vec)) == \
        matching([(1, 3), (2, 4)])
    gamma = matching([(1, 4), (2, 5), (3, 6)])
    assert initial_matching({gamma: Fraction(3, 7)}) == gamma
    with pytest.raises(ZeroVectorError):
        initial_matching({})


def test_initial_set_fixtures():
    i1 = EquivariantIdeal.isotypic(SYM4, (1,))
    assert initial_set(i1, 1, 4) == tuple(
        sorted((matching([(i, j)]) for i, j in combinations(range(1, 5), 2)),
               key=lambda g: (g[0][1], g[0][0])))
    orbit = EquivariantIdeal.from_generators(SYM4, [det_corner(SYM4)])
    got = initial_set(orbit, 2, 4)
    assert [fmt_matching(g) for g in got] == ["{(2,4),(1,3)}", "{(3,4),(1,2)}"]
    zero = EquivariantIdeal.from_generators(SYM4, [])
    assert initial_set(zero, 2, 4) == ()


def test_initial_set_is_presentation_independent():
    a = EquivariantIdeal.isotypic(SYM4, (1, 1))
    b = EquivariantIdeal.from_generators(SYM4, [det_corner(SYM4)])
    redundant = rep_closure(SYM4, [det_corner(SYM4)])[:2]
    c = EquivariantIdeal.from_generators(
        SYM4, [det_corner(SYM4)] + [dict(v) for v in redundant])
    sets = {initial_set(i, 3, 4) for i in (a, b, c)}
    assert len(sets) == 1


def test_move_closure_zero_violation_examples():
    i1 = EquivariantIdeal.isotypic(SYM4, (1,))
    res = verify_move_closure(i1, 2, 4)
    assert res.initial_size == 9 and res.violations == []
    orbit = EquivariantIdeal.from_generators(SYM4, [det_corner(SYM4)],
                                             label="corner-orbit")
    res = verify_move_closure(orbit, 3, 4)
    assert (res.initial_size, res.moves_checked, res.violations) == (2, 1, [])
    assert res.closed and res.label == "corner-orbit"
    zero = EquivariantIdeal.from_generators(SYM4, [])
    assert verify_move_closure(zero, 2, 4).closed


def test_initial_set_is_an_up_set_in_the_small_poset():
    """Reachability-closedness (not just one-step closedness) on a universe
    small enough to enumerate."""
    from tca_lab.matchings import all_matchings

    universe = [matching(())] + all_matchings(1, 4) + all_matchings(2, 4)
    orbit = EquivariantIdeal.from_generators(SYM4, [det_corner(SYM4)])
    inset = set(initial_set(orbit, 2, 4))
    for g in inset:
        for h in universe:
            if leq_full(g, h):
                assert h in inset


def test_equal_initial_sets_come_from_equal_ideals_small():
    """Scan small generated-in-degree-two ideals: whenever truncated initial
    sets agree, the truncated ideals agree (no counterexample candidates)."""
    candidates = {
        "corner-orbit": EquivariantIdeal.from_generators(
            SYM4, [det_corner(SYM4)]),
        "block-(1,1)": EquivariantIdeal.isotypic(SYM4, (1, 1)),
        "block-(2)": EquivariantIdeal.isotypic(SYM4, (2,)),
        "sum": EquivariantIdeal.from_generators(
            SYM4, [det_corner(SYM4), highest_weight_vector(SYM4, (2,))]),
    }
    sets = {name: initial_set(ideal, 2, 4) for name, ideal in candidates.items()}
    surprises = []
    for a, b in combinations(candidates, 2):
        if sets[a] != sets[b]:
            continue
        for d in (1, 2):
            for mono in monomials_of_degree(SYM4, d):
                w = SYM4.weight(mono)
                ra = candidates[a].component_span(d, w).rank
                rb = candidates[b].component_span(d, w).rank
                if ra != rb:
                    surprises.append((a, b, d, w))
    assert surprises == []
    assert sets["corner-orbit"] == sets["block-(1,1)"]
    assert sets["block-(2)"] != sets["block-(1,1)"]


def test_degree_overflow_guard():
    ideal = EquivariantIdeal.isotypic(SYM4, (1,))
    ideal.max_degree = 2
    with pytest.raises(DegreeOverflowError):
        ideal.component_span(3, (2, 2, 1, 1))


def test_spectral_and_lowering_paths_agree():
    """Squarefree slices of lazy block ideals have a cached fast path; it
    must match the direct lowering computation."""
    for flavor in ("symmetric", "antisymmetric"):
        rank = 6 if flavor == "antisymmetric" else 5
        system = VariableSystem(flavor, rank)
        for lam in ((2,), (1, 1)):
            ideal = EquivariantIdeal.isotypic(system, lam)
            hwv, hd, hwt = ideal._hw
            for support in ((1, 2, 3, 4), (2, 3, 4, 5)):
                w = indicator_weight(rank, support)
                fast = ideal._squarefree_gen_slice(hd, w)
                slow = Span()
                for vec in lowerings_from(system, hwv, hwt, w):
                    slow.add(vec)
                assert fast is not None
                got = Span()
                for vec in fast:
                    got.add(vec)
                assert got.rank == slow.rank
                for vec in slow.vectors():
                    assert got.contains(vec)


def test_antisymmetric_initial_sets():
    anti = VariableSystem("antisymmetric", 4)
    ideal = EquivariantIdeal.isotypic(anti, (1,))
    inset = initial_set(ideal, 2, 4)
    assert matching([(1, 2)]) in inset
    assert verify_move_closure(ideal, 2, 4).closed


# ---------------------------------------------------------------------------
# Degree-one sandbox.


D1 = VariableSystem("degree_one", 6)


def red(i):
    return {((0, i),): Fraction(1)}


def blue(i):
    return {((1, i),): Fraction(1)}


def test_sandbox_first_orbit():
    orbit = EquivariantIdeal.from_generators(D1, [red(1)])
    inset = degree_one_initial_set(orbit, 2, 6)
    assert len(inset) == 51
    assert all(any(c == "R" for _, c in s) for s in inset)
    singles = [s for s in inset if len(s) == 1]
    assert [dict(s) for s in singles] == [{i: "R"} for i in range(1, 7)]
    assert degree_one_verify_move_closure(orbit, 2, 6).closed


def test_sandbox_mixed_generator_pivots_blue():
    gen = dict(red(1))
    poly_add(gen, blue(1))
    ideal = EquivariantIdeal.from_generators(D1, [gen])
    inset = degree_one_initial_set(ideal, 1, 6)
    assert [fmt_colored(s) for s in inset] == [
        "{1B}", "{2B}", "{3B}", "{4B}", "{5B}", "{6B}"]
    assert degree_one_verify_move_closure(ideal, 2, 6).closed


def fmt_colored(s):
    from tca_lab.matchings import fmt_colored_set
    return fmt_colored_set(s)


def test_sandbox_zero_ideal():
    zero = EquivariantIdeal.from_generators(D1, [])
    assert degree_one_initial_set(zero, 2, 6) == ()
    assert degree_one_verify_move_closure(zero, 2, 6).closed


def test_sandbox_random_suite_is_closed():
    from tca_lab.cli import sandbox_ideals

    for ideal in sandbox_ideals(31337, 6, 2):
        res = degree_one_verify_move_closure(ideal, 2, 6)
        assert res.closed, ideal.label
