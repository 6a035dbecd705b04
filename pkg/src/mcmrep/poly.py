"""Sparse multivariate polynomials over an exact field with a weighted grading.

Monomials are exponent tuples, one entry per ring variable.  The term order
used throughout is weighted graded reverse lexicographic in the declared
variable order, with the weighted degree taken from the variable degrees.
"""

from __future__ import annotations

from fractions import Fraction


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


def monomial_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: tuple, b: tuple) -> bool:
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: tuple, b: tuple) -> tuple:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: tuple, b: tuple) -> tuple:
    return tuple(min(x, y) for x, y in zip(a, b))


class PolynomialRing:
    """k[x_1..x_m] with positive integer variable degrees.

    Immutable; two rings compare equal iff field, names and degrees agree.
    """

    __slots__ = ("field", "names", "degrees", "_index")

    def __init__(self, field, names, degrees=None):
        names = tuple(names)
        if degrees is None:
            degrees = (1,) * len(names)
        degrees = tuple(int(d) for d in degrees)
        if len(degrees) != len(names):
            raise ValueError("one degree per variable required")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if any(d < 1 for d in degrees):
            raise ValueError("variable degrees must be >= 1")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, *args):
        raise AttributeError("PolynomialRing is immutable")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def var_index(self, name: str) -> int:
        return self._index[name]

    def monomial_weight(self, m: tuple) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def sort_key(self, m: tuple):
        """Weighted grevlex key: larger key = larger monomial."""
        return (self.monomial_weight(m), tuple(-e for e in reversed(m)))

    # -- constructors -------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.var_index(name)] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def gens(self):
        return [self.variable(n) for n in self.names]

    def monomial(self, exps: tuple, coeff=1) -> "Polynomial":
        c = self.field.coerce(coeff)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {tuple(exps): c})

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {}
        for m, c in terms.items():
            c = self.field.coerce(c)
            if not self.field.is_zero(c):
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    def monomials_of_weight(self, d: int, var_indices=None):
        """All exponent tuples of weighted degree d, sorted descending.

        var_indices restricts the support to a subset of the variables.
        """
        if d < 0:
            return []
        if var_indices is None:
            var_indices = range(self.nvars)
        var_indices = list(var_indices)
        out = []
        exps = [0] * self.nvars

        def rec(pos: int, remaining: int):
            if pos == len(var_indices):
                if remaining == 0:
                    out.append(tuple(exps))
                return
            i = var_indices[pos]
            w = self.degrees[i]
            for e in range(remaining // w + 1):
                exps[i] = e
                rec(pos + 1, remaining - e * w)
            exps[i] = 0

        rec(0, d)
        out.sort(key=self.sort_key, reverse=True)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.field == other.field
            and self.names == other.names
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash((self.field, self.names, self.degrees))

    def __repr__(self):
        vs = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"{self.field}[{vs}]"


class Polynomial:
    """Sparse polynomial: finite map monomial -> nonzero coefficient."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolynomialRing, terms: dict):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", dict(terms))
        object.__setattr__(self, "_lm", None)

    def __setattr__(self, *args):
        raise AttributeError("Polynomial is immutable")

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def is_homogeneous(self) -> bool:
        weights = {self.ring.monomial_weight(m) for m in self.terms}
        return len(weights) <= 1

    def weighted_degree(self) -> int:
        """Max weighted degree of the terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.monomial_weight(m) for m in self.terms)

    # -- leading data --------------------------------------------------

    def leading_monomial(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        lm = self._lm
        if lm is None:
            lm = max(self.terms, key=self.ring.sort_key)
            object.__setattr__(self, "_lm", lm)
        return lm

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.ring.field.inv(self.leading_coefficient())
        return self.scale(inv)

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._check(other)
        F = self.ring.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(terms.get(m, F.zero), c)
            if F.is_zero(s):
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial(self.ring, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return self.ring.constant(other).__sub__(self)

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F.coerce(c)
        if F.is_zero(c):
            return self.ring.zero()
        return Polynomial(self.ring, {m: F.mul(v, c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        F = self.ring.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = F.add(terms.get(m, F.zero), F.mul(c1, c2))
                if F.is_zero(s):
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Polynomial(self.ring, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, m: tuple, c) -> "Polynomial":
        F = self.ring.field
        c = F.coerce(c)
        if F.is_zero(c):
            return self.ring.zero()
        return Polynomial(
            self.ring, {monomial_mul(m0, m): F.mul(c0, c) for m0, c0 in self.terms.items()}
        )

    # -- evaluation / mapping -------------------------------------------

    def evaluate(self, values) -> object:
        """Evaluate at a point; values is a list aligned with ring.names."""
        F = self.ring.field
        acc = F.zero
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    v = F.mul(v, values[i] ** e if not isinstance(values[i], int) else pow(values[i], e))
            acc = F.add(acc, v)
        return F.coerce(acc)

    def substitute(self, images: dict) -> "Polynomial":
        """Substitute polynomials for variables (by name); others map across.

        All image polynomials must live in one target ring that contains
        images for every variable in this polynomial's support.
        """
        target = None
        for img in images.values():
            target = img.ring
            break
        if target is None:
            raise ValueError("no substitution images given")
        full = {}
        for n in self.ring.names:
            if n in images:
                full[n] = images[n]
            elif n in target._index:
                full[n] = target.variable(n)
            else:
                raise ValueError(f"no image for variable {n}")
        acc = target.zero()
        for m, c in self.terms.items():
            t = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    t = t * full[self.ring.names[i]] ** e
            acc = acc + t
        return acc

    def change_field(self, field) -> "Polynomial":
        """Map coefficients into another field (e.g. QQ -> F_p)."""
        ring = PolynomialRing(field, self.ring.names, self.ring.degrees)
        return ring.from_terms(self.terms)

    # -- identity -------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.sort_key(t[0]), reverse=True)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if self.is_constant():
                return self.constant_coefficient() == self.ring.field.coerce(other)
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(self.sorted_terms())))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            coeff = c
            neg = False
            if isinstance(coeff, (int, Fraction)) and coeff < 0:
                neg = True
                coeff = -coeff
            if body and coeff == 1:
                text = body
            elif body:
                text = f"{coeff}*{body}"
            else:
                text = str(coeff)
            if not parts:
                parts.append(f"-{text}" if neg else text)
            else:
                parts.append(f"- {text}" if neg else f"+ {text}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"
