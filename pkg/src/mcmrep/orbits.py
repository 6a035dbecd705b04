"""Graded Hom components, isomorphism tests, conjugation orbits, censuses.

A degree-e homomorphism between matrix points mu and nu is a matrix alpha
with entry degrees from hom_entry_degrees intertwining the generator
matrices: alpha . mu(z_i) = nu(z_i) . alpha.  Checking the algebra
generators suffices because they generate R over S and S acts by scalars.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .fields import GF, QQ, PrimeField
from .graded import ShiftType, hom_entry_degrees
from .groebner import IdealHandle, buchberger
from .linalg import kernel_basis, solve
from .matops import mat_adjugate, mat_det, mat_identity, mat_is_zero, mat_mul, mat_scale, mat_sub
from .poly import Polynomial, PolynomialRing
from .repvariety import (
    MatrixPoint,
    ParameterSpace,
    RepIdeal,
    assignment_of,
    evaluate,
    parameterize,
)

DEFAULT_BUDGET = 10**7
GROUP_SWEEP_CAP = 10**5
EXHAUSTIVE_ISOM_CAP = 10**5
SYMBOLIC_DET_CAP = 6
SAMPLING_TRIALS = 64


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, message, required):
        super().__init__(message)
        self.required = required


class InvariantViolationError(RuntimeError):
    """An internal consistency check failed."""


def _entry_slots(s_ring, V: ShiftType, W: ShiftType, e: int):
    """Ordered coefficient slots (p, q, monomial) for a degree-e map
    S (x) V -> S (x) W."""
    table = hom_entry_degrees(V, W, e)
    s_indices = list(range(s_ring.nvars))
    slots = []
    for p in range(len(W.shifts)):
        for q in range(len(V.shifts)):
            deg = table[p][q]
            if deg < 0:
                continue
            for mono in s_ring.monomials_of_weight(deg, s_indices):
                slots.append((p, q, mono))
    return slots


def _slot_matrix(s_ring, d, slot, coeff=1):
    p, q, mono = slot
    rows = [[s_ring.zero() for _ in range(d)] for _ in range(d)]
    rows[p][q] = s_ring.monomial(mono, coeff)
    return tuple(tuple(r) for r in rows)


def _from_vector(s_ring, d, slots, vector):
    entries = [[{} for _ in range(d)] for _ in range(d)]
    field = s_ring.field
    for (p, q, mono), c in zip(slots, vector):
        if not field.is_zero(c):
            entries[p][q][mono] = field.add(entries[p][q].get(mono, field.zero), c)
    return tuple(tuple(s_ring.from_terms(entries[p][q]) for q in range(d)) for p in range(d))


@dataclass(frozen=True)
class HomComponentBasis:
    """k-basis of the degree-e homomorphisms from mu to nu."""

    degree: int
    source: MatrixPoint
    target: MatrixPoint
    slots: tuple  # coefficient slots of the generic map
    vectors: tuple  # basis coefficient vectors over k
    basis: tuple  # basis matrices over S

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def element(self, coeffs):
        """The matrix sum_i coeffs[i] * basis[i]."""
        s_ring = self.source.s_ring
        field = s_ring.field
        vec = [field.zero] * len(self.slots)
        for c, v in zip(coeffs, self.vectors):
            c = field.coerce(c)
            vec = [field.add(x, field.mul(c, y)) for x, y in zip(vec, v)]
        return _from_vector(s_ring, len(self.source.shifts), self.slots, vec)


def _check_compatible(mu: MatrixPoint, nu: MatrixPoint):
    if mu.shifts != nu.shifts:
        raise ValueError("shift type mismatch between points")
    if mu.algebra != nu.algebra or mu.s_ring != nu.s_ring:
        raise ValueError("points belong to different (R, V, field) data")


def hom_component(mu: MatrixPoint, nu: MatrixPoint, e: int) -> HomComponentBasis:
    """Solve the intertwining conditions for a generic degree-e map and
    return a kernel basis."""
    _check_compatible(mu, nu)
    s_ring = mu.s_ring
    field = s_ring.field
    V = mu.shifts
    d = V.dimension
    slots = _entry_slots(s_ring, V, V, e)
    rows_by_key = {}
    for gi in range(len(mu.matrices)):
        for k, slot in enumerate(slots):
            B = _slot_matrix(s_ring, d, slot)
            C = mat_sub(mat_mul(B, mu.matrices[gi]), mat_mul(nu.matrices[gi], B))
            for a in range(d):
                for b in range(d):
                    for mono, c in C[a][b].terms.items():
                        key = (gi, a, b, mono)
                        row = rows_by_key.setdefault(key, [field.zero] * len(slots))
                        row[k] = field.add(row[k], c)
    rows = [rows_by_key[k] for k in sorted(rows_by_key)]
    vectors = kernel_basis(rows, len(slots), field)
    basis = tuple(_from_vector(s_ring, d, slots, v) for v in vectors)
    return HomComponentBasis(e, mu, nu, tuple(slots), tuple(tuple(v) for v in vectors), basis)


def identity_coefficients(E: HomComponentBasis):
    """Coordinates of the identity matrix in the basis of End_0, or None."""
    field = E.source.s_ring.field
    zero_mono = (0,) * E.source.s_ring.nvars
    id_vec = [
        field.one if (p == q and mono == zero_mono) else field.zero
        for (p, q, mono) in E.slots
    ]
    if not E.vectors:
        return None
    # columns are the basis vectors
    rows = [[v[i] for v in E.vectors] for i in range(len(E.slots))]
    return solve(rows, id_vec, len(E.vectors), field)


def _det_of_generic_element(E: HomComponentBasis):
    """Determinant of sum c_i alpha_i as a polynomial in k[c_1..c_r].

    The determinant of a degree-0 endomorphism is a scalar, so the result
    carries no S-variables."""
    s_ring = E.source.s_ring
    r = E.dimension
    c_names = [f"c{i + 1}" for i in range(r)]
    big = PolynomialRing(s_ring.field, tuple(c_names) + s_ring.names,
                         (1,) * r + s_ring.degrees)
    d = len(E.source.shifts)
    generic = [[big.zero() for _ in range(d)] for _ in range(d)]
    for i, alpha in enumerate(E.basis):
        c_exp = [0] * big.nvars
        c_exp[i] = 1
        c_var = big.monomial(tuple(c_exp))
        for p in range(d):
            for q in range(d):
                emb = big.from_terms(
                    {(0,) * r + m: co for m, co in alpha[p][q].terms.items()}
                )
                generic[p][q] = generic[p][q] + c_var * emb
    det = mat_det(tuple(tuple(row) for row in generic), big)
    if any(any(m[r:]) for m in det.terms):
        raise InvariantViolationError("degree-0 determinant is not scalar in S")
    c_ring = PolynomialRing(s_ring.field, c_names)
    return c_ring.from_terms({m[:r]: co for m, co in det.terms.items()})


def are_isomorphic(mu: MatrixPoint, nu: MatrixPoint, seed: int = 0) -> bool:
    """True iff the degree-0 hom space from mu to nu contains an invertible
    matrix.

    Exhaustive over small finite coefficient spaces; symbolic determinant
    up to basis dimension 6; otherwise randomized with a recorded witness
    (a witness proves isomorphism, 64 failed trials report False)."""
    _check_compatible(mu, nu)
    d = mu.shifts.dimension
    if d == 0:
        return True
    E = hom_component(mu, nu, 0)
    r = E.dimension
    if r == 0:
        return False
    field = mu.s_ring.field
    s_ring = mu.s_ring
    if isinstance(field, PrimeField) and field.p**r <= EXHAUSTIVE_ISOM_CAP:
        for coeffs in itertools.product(field.elements(), repeat=r):
            alpha = E.element(coeffs)
            det = mat_det(alpha, s_ring)
            if not det.is_zero():
                return True
        return False
    if r <= SYMBOLIC_DET_CAP:
        return not _det_of_generic_element(E).is_zero()
    det_poly_degree = d  # det is multilinear of degree <= d in the c's
    sample_bound = max(2 * det_poly_degree, 97)
    rng = random.Random(seed)
    for _ in range(SAMPLING_TRIALS):
        coeffs = [rng.randrange(sample_bound) for _ in range(r)]
        alpha = E.element(coeffs)
        if not mat_det(alpha, s_ring).is_zero():
            return True
    return False


@dataclass(frozen=True)
class GroupElement:
    """Invertible degree-0 graded S-endomorphism of S (x) V."""

    shifts: ShiftType
    matrix: tuple
    inverse: tuple

    @staticmethod
    def from_matrix(shifts: ShiftType, matrix) -> "GroupElement":
        matrix = tuple(tuple(row) for row in matrix)
        d = len(shifts)
        if len(matrix) != d or any(len(row) != d for row in matrix):
            raise ValueError("matrix does not match the shift type")
        if d == 0:
            return GroupElement(shifts, matrix, matrix)
        ring = matrix[0][0].ring
        table = hom_entry_degrees(shifts, shifts, 0)
        for p in range(d):
            for q in range(d):
                e = matrix[p][q]
                if e.is_zero():
                    continue
                if table[p][q] < 0 or not e.is_homogeneous() or e.weighted_degree() != table[p][q]:
                    raise ValueError(f"entry ({p + 1},{q + 1}) violates the degree-0 shape")
        det = mat_det(matrix, ring)
        if not det.is_constant() or det.is_zero():
            raise ValueError("matrix is not invertible (determinant is not a nonzero scalar)")
        inv_det = ring.field.inv(det.constant_coefficient())
        inverse = mat_scale(mat_adjugate(matrix, ring), ring.constant(inv_det))
        return GroupElement(shifts, matrix, inverse)

    @staticmethod
    def identity(shifts: ShiftType, s_ring) -> "GroupElement":
        I = mat_identity(s_ring, len(shifts))
        return GroupElement(shifts, I, I)


def conjugate(pt: MatrixPoint, g: GroupElement) -> MatrixPoint:
    """Generator-wise g . mu(z_i) . g^{-1}."""
    if g.shifts != pt.shifts:
        raise ValueError("group element has a different shift type")
    mats = tuple(mat_mul(mat_mul(g.matrix, M), g.inverse) for M in pt.matrices)
    return MatrixPoint(pt.algebra, pt.shifts, mats)


def enumerate_group(V: ShiftType, q: int, s_degrees=(1,), budget=DEFAULT_BUDGET, s_names=None):
    """All elements of G_V(F_q), by scanning coefficient tuples of the
    degree-0 shape and keeping the invertible ones."""
    field = GF(q)
    if s_names is None:
        s_names = tuple(f"y{j + 1}" for j in range(len(s_degrees)))
    s_ring = PolynomialRing(field, tuple(s_names), s_degrees)
    slots = _entry_slots(s_ring, V, V, 0)
    total = q ** len(slots)
    if total > budget:
        raise BudgetExceededError(
            f"group enumeration needs {total} tuples (budget {budget})", total
        )
    d = len(V.shifts)
    out = []
    for values in itertools.product(field.elements(), repeat=len(slots)):
        matrix = _from_vector(s_ring, d, slots, list(values))
        det = mat_det(matrix, s_ring)
        if det.is_zero():
            continue
        out.append(GroupElement.from_matrix(V, matrix))
    return out


def group_order(V: ShiftType, q: int, s_degrees=(1,), budget=DEFAULT_BUDGET) -> int:
    return len(enumerate_group(V, q, s_degrees, budget))


def enumerate_points(rep: RepIdeal, q: int, budget=DEFAULT_BUDGET):
    """All F_q-points of the variety, in lexicographic assignment order.

    Depth-first with early rejection: a generator is tested as soon as all
    unknowns in its support are assigned."""
    ps = rep.parameter_space
    n = len(ps.unknowns)
    total = q**n
    if total > budget:
        raise BudgetExceededError(
            f"point enumeration needs {total} tuples (budget {budget})", total
        )
    field = GF(q)
    gens = [g.change_field(field) for g in rep.ideal.generators]
    # bucket generators by the last unknown in their support
    buckets = [[] for _ in range(n + 1)]
    for g in gens:
        last = 0
        for m in g.terms:
            for i in range(n - 1, -1, -1):
                if m[i]:
                    last = max(last, i + 1)
                    break
        buckets[last].append(g)
    if any(not g.is_zero() and g.is_constant() for g in buckets[0]):
        return []
    out = []
    values = [0] * n

    def admissible(depth):
        point = values[:depth] + [0] * (n - depth)
        return all(field.is_zero(g.evaluate(point)) for g in buckets[depth])

    def rec(depth):
        if depth == n:
            out.append(tuple(values))
            return
        for v in range(q):
            values[depth] = v
            if admissible(depth + 1):
                rec(depth + 1)
        values[depth] = 0

    if n == 0:
        return [()] if all(g.is_zero() for g in gens) else []
    rec(0)
    return out


@dataclass(frozen=True)
class OrbitRecord:
    representative: tuple
    size: int
    stabilizer_order: int
    label: str


@dataclass(frozen=True)
class OrbitCensus:
    q: int
    group_order: int
    point_count: int
    orbits: tuple
    isomorphism_class_count: int
    counts_diverge: bool

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)


def orbit_partition(points, R, V: ShiftType, q: int, budget=DEFAULT_BUDGET, named_reps=None) -> OrbitCensus:
    """Partition the F_q-points into conjugation orbits.

    Sweeps the full group when it fits the cap, otherwise clusters by
    are_isomorphic.  Verifies the orbit-stabilizer identity and the
    partition property; labels orbits against named representatives."""
    field = GF(q)
    ps = parameterize(R, V, field)
    s_degrees = R.normalization_degrees
    points = sorted(points)
    point_set = set(points)
    if len(point_set) != len(points):
        raise ValueError("duplicate points")
    group = enumerate_group(V, q, s_degrees, budget, s_names=R.normalization)
    n_group = len(group)

    records = []
    if n_group <= GROUP_SWEEP_CAP:
        remaining = set(points)
        for pt_vec in points:
            if pt_vec not in remaining:
                continue
            pt = evaluate(ps, pt_vec, field)
            orbit = set()
            stab = 0
            for g in group:
                image = assignment_of(ps, conjugate(pt, g))
                orbit.add(image)
                if image == pt_vec:
                    stab += 1
            if not orbit <= point_set:
                raise InvariantViolationError("orbit leaves the enumerated point set")
            if len(orbit) * stab != n_group:
                raise InvariantViolationError("orbit-stabilizer identity failed")
            remaining -= orbit
            records.append((min(orbit), len(orbit), stab))
    else:
        # pairwise-isomorphism clustering fallback
        reps = []
        sizes = []
        members = []
        for pt_vec in points:
            pt = evaluate(ps, pt_vec, field)
            for i, rep_pt in enumerate(reps):
                if are_isomorphic(rep_pt, pt):
                    sizes[i] += 1
                    members[i].append(pt_vec)
                    break
            else:
                reps.append(pt)
                sizes.append(1)
                members.append([pt_vec])
        for i in range(len(reps)):
            size = sizes[i]
            if n_group % size != 0:
                raise InvariantViolationError("orbit size does not divide the group order")
            records.append((min(members[i]), size, n_group // size))

    if sum(r[1] for r in records) != len(points):
        raise InvariantViolationError("orbit sizes do not sum to the point count")

    # isomorphism classes among the orbit representatives
    rep_points = [evaluate(ps, r[0], field) for r in records]
    class_of = [-1] * len(rep_points)
    n_classes = 0
    for i in range(len(rep_points)):
        if class_of[i] >= 0:
            continue
        class_of[i] = n_classes
        for j in range(i + 1, len(rep_points)):
            if class_of[j] < 0 and are_isomorphic(rep_points[i], rep_points[j]):
                class_of[j] = n_classes
        n_classes += 1

    labels = [""] * len(records)
    if named_reps:
        for i, rp in enumerate(rep_points):
            for named in named_reps:
                if named.point.shifts != V:
                    continue
                reduced = _reduce_point(named.point, field)
                if are_isomorphic(rp, reduced):
                    labels[i] = named.label
                    break

    orbits = tuple(
        OrbitRecord(rep, size, stab, label)
        for (rep, size, stab), label in zip(records, labels)
    )
    return OrbitCensus(
        q=q,
        group_order=n_group,
        point_count=len(points),
        orbits=orbits,
        isomorphism_class_count=n_classes,
        counts_diverge=(n_classes != len(records)),
    )


def _reduce_point(pt: MatrixPoint, field) -> MatrixPoint:
    """Reduce a characteristic-0 point's coefficients into a prime field."""
    mats = tuple(
        tuple(tuple(e.change_field(field) for e in row) for row in M) for M in pt.matrices
    )
    return MatrixPoint(pt.algebra, pt.shifts, mats)


def is_indecomposable(mu: MatrixPoint) -> bool:
    """True iff the only idempotent degree-0 endomorphisms of mu are 0 and
    the identity.

    Forms the idempotency system for a generic element of End_0 and decides
    whether its zero set is exactly {0, identity} by radical membership
    (Rabinowitsch trick) of the two-point vanishing ideal."""
    d = mu.shifts.dimension
    if d == 0:
        return False
    E = hom_component(mu, mu, 0)
    r = E.dimension
    field = mu.s_ring.field
    id_coords = identity_coefficients(E)
    if id_coords is None:
        raise InvariantViolationError("identity not found in End_0 of a valid point")
    if r == 1:
        return True  # End_0 = k, local endomorphism ring

    s_ring = mu.s_ring
    c_names = tuple(f"c{i + 1}" for i in range(r))
    big = PolynomialRing(field, c_names + s_ring.names, (1,) * r + s_ring.degrees)
    generic = [[big.zero() for _ in range(d)] for _ in range(d)]
    for i, alpha in enumerate(E.basis):
        c_exp = [0] * big.nvars
        c_exp[i] = 1
        c_var = big.monomial(tuple(c_exp))
        for p in range(d):
            for q in range(d):
                emb = big.from_terms({(0,) * r + m: co for m, co in alpha[p][q].terms.items()})
                generic[p][q] = generic[p][q] + c_var * emb
    G = tuple(tuple(row) for row in generic)
    defect = mat_sub(mat_mul(G, G), G)

    c_ring = PolynomialRing(field, c_names)
    idem_gens = []
    seen = set()
    for row in defect:
        for entry in row:
            groups = {}
            for m, co in entry.terms.items():
                groups.setdefault(m[r:], {})[m[:r]] = co
            for terms in groups.values():
                g = c_ring.from_terms(terms)
                if not g.is_zero():
                    g = g.monic()
                    if g not in seen:
                        seen.add(g)
                        idem_gens.append(g)

    # sanity: 0 and identity are idempotent
    zero_pt = [field.zero] * r
    for g in idem_gens:
        if not field.is_zero(g.evaluate(zero_pt)) or not field.is_zero(g.evaluate(id_coords)):
            raise InvariantViolationError("0 or identity fails the idempotency system")

    # V(idem) == {0, identity}  iff  every generator of the two-point
    # vanishing ideal lies in the radical of the idempotency ideal
    rab = PolynomialRing(field, c_names + ("w_rab",))
    lift = {n: rab.variable(n) for n in c_names}
    lifted = [g.substitute(lift) for g in idem_gens]
    w = rab.variable("w_rab")
    cs = [rab.variable(n) for n in c_names]
    for i in range(r):
        for j in range(r):
            target = cs[i] * (cs[j] - rab.constant(id_coords[j]))
            if target.is_zero():
                continue
            gb = buchberger(lifted + [rab.one() - w * target])
            if gb != [rab.one()]:
                return False
    return True
