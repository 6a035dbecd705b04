import itertools
import random

import pytest

from mcmrep.families import example_algebra_x2, three_orbit_representatives
from mcmrep.fields import GF, QQ
from mcmrep.graded import GradedAlgebra, ShiftType
from mcmrep.matops import mat_identity, mat_is_zero, mat_mul, mat_sub
from mcmrep.orbits import (
    BudgetExceededError,
    GroupElement,
    are_isomorphic,
    conjugate,
    enumerate_group,
    enumerate_points,
    group_order,
    hom_component,
    identity_coefficients,
    is_indecomposable,
    orbit_partition,
)
from mcmrep.poly import PolynomialRing
from mcmrep.repvariety import build_defining_ideal, evaluate, parameterize, validate_point

from oracles import brute_force_x2_points

V01 = ShiftType((0, 1))


@pytest.fixture
def R():
    return example_algebra_x2()


@pytest.fixture
def reps():
    return three_orbit_representatives()


def test_end0_of_R_point_is_scalars(reps):
    # hand solution of the 3-unknown system for alpha = [[s, t*y], [0, u]]
    # against mu = [[0,0],[1,0]]: alpha.mu - mu.alpha = [[t*y, 0], [u - s, -t*y]]
    # forces t = 0, u = s; the kernel is 1-dimensional (scalars).
    pt = reps[0].point
    E = hom_component(pt, pt, 0)
    assert E.dimension == 1
    s_ring = pt.s_ring
    alpha = E.basis[0]
    c = alpha[0][0].constant_coefficient()
    assert not s_ring.field.is_zero(c)
    assert alpha == tuple(tuple(e.scale(c) for e in row) for row in mat_identity(s_ring, 2))


def test_identity_always_in_end0(reps):
    for nm in reps:
        E = hom_component(nm.point, nm.point, 0)
        coords = identity_coefficients(E)
        assert coords is not None
        assert E.element(coords) == mat_identity(nm.point.s_ring, 2)


def test_no_invertible_hom_between_distinct_modules(reps):
    # I_2(1) -> R at degree 0: kernel is spanned by [[0,0],[0,u]], never invertible
    E = hom_component(reps[1].point, reps[0].point, 0)
    assert E.dimension == 1
    alpha = E.basis[0]
    assert alpha[0][0].is_zero() and alpha[0][1].is_zero() and alpha[1][0].is_zero()


def test_basis_elements_intertwine_exactly(reps):
    for src, tgt in itertools.product(reps, repeat=2):
        for e in (0, 1, 2):
            E = hom_component(src.point, tgt.point, e)
            for alpha in E.basis:
                for M, N in zip(src.point.matrices, tgt.point.matrices):
                    assert mat_is_zero(mat_sub(mat_mul(alpha, M), mat_mul(N, alpha)))


def test_hom_composition_lands_in_right_degree(reps):
    mu, nu, rho = (nm.point for nm in reps)
    for e, f in [(0, 0), (1, 0), (0, 1), (1, 1)]:
        Ef = hom_component(mu, nu, e)
        Eg = hom_component(nu, rho, f)
        for alpha in Ef.basis:
            for beta in Eg.basis:
                comp = mat_mul(beta, alpha)
                for M, P in zip(mu.matrices, rho.matrices):
                    assert mat_is_zero(mat_sub(mat_mul(comp, M), mat_mul(P, comp)))


def test_pairwise_non_isomorphic(reps):
    for a, b in itertools.combinations(reps, 2):
        assert not are_isomorphic(a.point, b.point)
        assert not are_isomorphic(b.point, a.point)


def test_isomorphic_to_conjugates(R, reps):
    s_ring = R.s_ring()
    y = s_ring.variable("y")
    gs = [
        GroupElement.from_matrix(V01, ((s_ring.constant(1), 3 * y), (s_ring.zero(), s_ring.constant(1)))),
        GroupElement.from_matrix(V01, ((s_ring.constant(2), s_ring.zero()), (s_ring.zero(), s_ring.constant(5)))),
    ]
    for nm in reps:
        for g in gs:
            moved = conjugate(nm.point, g)
            assert validate_point(moved)
            assert are_isomorphic(nm.point, moved)
            assert are_isomorphic(moved, nm.point)


def test_are_isomorphic_reflexive(reps):
    for nm in reps:
        assert are_isomorphic(nm.point, nm.point)


def test_conjugate_by_identity(R, reps):
    g = GroupElement.identity(V01, R.s_ring())
    for nm in reps:
        assert conjugate(nm.point, g).matrices == nm.point.matrices


def test_conjugate_diagonal(R, reps):
    s_ring = R.s_ring()
    lam = 7
    g = GroupElement.from_matrix(
        V01, ((s_ring.constant(1), s_ring.zero()), (s_ring.zero(), s_ring.constant(lam)))
    )
    moved = conjugate(reps[0].point, g)  # [[0,0],[1,0]] -> [[0,0],[lam,0]]
    assert moved.matrices[0][1][0] == s_ring.constant(lam)
    assert moved.matrices[0][0][0].is_zero()


def test_conjugate_unipotent(R, reps):
    # g = [[1, t*y],[0,1]] sends [[0,0],[1,0]] to [[t*y, -t^2*y^2],[1, -t*y]]
    s_ring = R.s_ring()
    y = s_ring.variable("y")
    t = 3
    g = GroupElement.from_matrix(
        V01, ((s_ring.constant(1), t * y), (s_ring.zero(), s_ring.constant(1)))
    )
    moved = conjugate(reps[0].point, g)
    M = moved.matrices[0]
    assert M[0][0] == t * y
    assert M[0][1] == -(t * t) * y * y
    assert M[1][0] == s_ring.constant(1)
    assert M[1][1] == -t * y
    assert validate_point(moved)


def test_group_element_inverse_exact(R):
    s_ring = R.s_ring()
    y = s_ring.variable("y")
    g = GroupElement.from_matrix(V01, ((s_ring.constant(2), 5 * y), (s_ring.zero(), s_ring.constant(3))))
    assert mat_mul(g.matrix, g.inverse) == mat_identity(s_ring, 2)


def test_group_element_rejects_singular_and_misshaped(R):
    s_ring = R.s_ring()
    y = s_ring.variable("y")
    with pytest.raises(ValueError, match="invertible"):
        GroupElement.from_matrix(V01, ((s_ring.zero(), y), (s_ring.zero(), s_ring.constant(1))))
    with pytest.raises(ValueError, match="degree-0 shape"):
        GroupElement.from_matrix(V01, ((y, s_ring.zero()), (s_ring.zero(), s_ring.constant(1))))


def test_indecomposability(R, reps):
    assert is_indecomposable(reps[0].point)  # R
    assert is_indecomposable(reps[1].point)  # I_2(1)
    assert not is_indecomposable(reps[2].point)  # zero point: diag idempotents


def test_enumerate_points_matches_brute_force(R):
    rep = build_defining_ideal(R, V01)
    for q in (3, 5):
        assert enumerate_points(rep, q) == brute_force_x2_points(q)


def test_enumerate_points_trivial_cases(R):
    ky = GradedAlgebra(PolynomialRing(QQ, ("y",)), (), ("y",))
    rep = build_defining_ideal(ky, ShiftType((0,)))
    assert enumerate_points(rep, 5) == [()]
    rep1 = build_defining_ideal(R, ShiftType((0,)))
    assert enumerate_points(rep1, 5) == [(0,)]


def test_enumerate_points_budget_refusal(R):
    rep = build_defining_ideal(R, V01)
    with pytest.raises(BudgetExceededError) as exc:
        enumerate_points(rep, 5, budget=100)
    assert exc.value.required == 5**4


def test_group_order_formulas():
    for q in (3, 5, 7):
        assert group_order(V01, q) == (q - 1) ** 2 * q
        assert group_order(ShiftType((0,)), q) == q - 1
        assert group_order(ShiftType((0, 0)), q) == (q * q - 1) * (q * q - q)


def test_group_enumeration_budget(R):
    with pytest.raises(BudgetExceededError):
        enumerate_group(ShiftType((0, 0, 0)), 101, budget=10)


def test_orbit_partition_three_orbits(R, reps):
    rep = build_defining_ideal(R, V01)
    for q in (3, 5):
        points = enumerate_points(rep, q)
        census = orbit_partition(points, R, V01, q, named_reps=reps)
        assert census.orbit_count == 3
        assert sum(o.size for o in census.orbits) == census.point_count == len(points)
        for o in census.orbits:
            assert o.size * o.stabilizer_order == census.group_order
        assert sorted(o.label for o in census.orbits) == sorted(nm.label for nm in reps)
        assert census.isomorphism_class_count == 3
        assert not census.counts_diverge


def test_orbit_partition_single_point(R):
    rep = build_defining_ideal(R, ShiftType((0,)))
    points = enumerate_points(rep, 5)
    census = orbit_partition(points, R, ShiftType((0,)), 5)
    assert census.orbit_count == 1
    assert census.orbits[0].size == 1


def test_orbit_members_pairwise_isomorphic(R):
    q = 3
    rep = build_defining_ideal(R, V01)
    points = enumerate_points(rep, q)
    census = orbit_partition(points, R, V01, q)
    field = GF(q)
    ps = parameterize(R, V01, field)
    group = enumerate_group(V01, q, (1,), s_names=("y",))
    # reconstruct each orbit and check all members are isomorphic to the rep
    for o in census.orbits:
        base = evaluate(ps, o.representative, field)
        seen = set()
        for g in group:
            from mcmrep.repvariety import assignment_of

            seen.add(assignment_of(ps, conjugate(base, g)))
        assert len(seen) == o.size
        for member in sorted(seen):
            assert are_isomorphic(base, evaluate(ps, member, field))


def test_are_isomorphic_properties_sampled(R):
    # reflexive/symmetric on all census points for q = 3, transitive on triples
    q = 3
    rep = build_defining_ideal(R, V01)
    field = GF(q)
    ps = parameterize(R, V01, field)
    pts = [evaluate(ps, v, field) for v in enumerate_points(rep, q)]
    for p in pts:
        assert are_isomorphic(p, p)
    for a, b in itertools.combinations(pts, 2):
        assert are_isomorphic(a, b) == are_isomorphic(b, a)
    rng = random.Random(99)
    for _ in range(50):
        a, b, c = (rng.choice(pts) for _ in range(3))
        if are_isomorphic(a, b) and are_isomorphic(b, c):
            assert are_isomorphic(a, c)


def test_conjugation_invariance_random_over_f5(R):
    rng = random.Random(20240818)
    q = 5
    field = GF(q)
    ps = parameterize(R, V01, field)
    rep = build_defining_ideal(R, V01)
    valid = enumerate_points(rep, q)
    group = enumerate_group(V01, q, (1,), s_names=("y",))
    for _ in range(100):
        pt = evaluate(ps, rng.choice(valid), field)
        g = rng.choice(group)
        assert validate_point(conjugate(pt, g))
