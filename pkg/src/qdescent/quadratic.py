"""Quadratic polynomials over a normed domain in d variables.

A polynomial is stored by degree: a table of monomial coefficients c_ij
(i <= j, zero-based) for the homogeneous quadratic part, a vector for the
linear part, and a constant.  The table representation works in every
characteristic; in characteristic 2 the symmetric-matrix encoding with
halved off-diagonal entries does not exist, so no matrix is ever formed.

Evaluation at a fraction point a/b clears denominators first and performs
all intermediate arithmetic in the ring: f(a/b) = (f2(a) + b*f1(a) +
b^2*f0) / b^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from .domains import Domain, DomainElement, FractionElement, FractionPoint
from .errors import (
    DimensionMismatchError,
    DomainMismatchError,
    InternalInvariantError,
)


@dataclass(frozen=True)
class LineExpansion:
    """Coefficients of f(y + T*v) = C + B*T + A*T^2; A always equals f2(v)."""

    A: DomainElement
    B: DomainElement
    C: DomainElement


class QuadraticPolynomial:
    """f = f2 + f1 + f0 with coefficients in one domain.

    quad maps (i, j) with i <= j to the coefficient of X_i X_j; entries
    with zero coefficient are dropped.  lin is the length-d coefficient
    vector of f1 and const is f0.
    """

    __slots__ = ("domain", "d", "quad", "lin", "const")

    def __init__(self, domain: Domain, d: int, quad: Dict[Tuple[int, int], object],
                 lin: Iterable = (), const=0):
        if d < 1:
            raise DimensionMismatchError(f"dimension must be >= 1, got {d}")
        table = {}
        for (i, j), c in quad.items():
            if not (0 <= i <= j < d):
                raise DimensionMismatchError(f"bad monomial index ({i},{j}) for d={d}")
            raw = domain.coerce_raw(c)
            if not domain._is_zero(raw):
                table[(i, j)] = raw
        linv = [domain.coerce_raw(0)] * d
        for i, c in enumerate(lin):
            if i >= d:
                raise DimensionMismatchError("linear part longer than dimension")
            linv[i] = domain.coerce_raw(c)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "quad", {k: table[k] for k in sorted(table)})
        object.__setattr__(self, "lin", tuple(linv))
        object.__setattr__(self, "const", domain.coerce_raw(const))

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticPolynomial is immutable")

    # -- raw-vector evaluation helpers ------------------------------------

    def _f2_raw(self, vec):
        dom = self.domain
        acc = dom.coerce_raw(0)
        for (i, j), c in self.quad.items():
            acc = dom._add(acc, dom._mul(c, dom._mul(vec[i], vec[j])))
        return acc

    def _f1_raw(self, vec):
        dom = self.domain
        acc = dom.coerce_raw(0)
        for i, c in enumerate(self.lin):
            if not dom._is_zero(c):
                acc = dom._add(acc, dom._mul(c, vec[i]))
        return acc

    def _eval_raw(self, vec):
        dom = self.domain
        return dom._add(self._f2_raw(vec), dom._add(self._f1_raw(vec), self.const))

    def _coerce_vector(self, pt):
        if isinstance(pt, FractionPoint):
            raise TypeError("expected an integral vector, got a FractionPoint")
        vec = [self.domain.coerce_raw(c) for c in pt]
        if len(vec) != self.d:
            raise DimensionMismatchError(
                f"point has {len(vec)} coordinates, polynomial has {self.d}"
            )
        return vec

    def _check_point(self, x: FractionPoint):
        if x.domain != self.domain:
            raise DomainMismatchError(
                f"point over {x.domain.name}, polynomial over {self.domain.name}"
            )
        if x.dim != self.d:
            raise DimensionMismatchError(
                f"point has {x.dim} coordinates, polynomial has {self.d}"
            )

    # -- public evaluation -------------------------------------------------

    def eval(self, x: FractionPoint) -> FractionElement:
        """Exact value f(x) in the fraction field."""
        self._check_point(x)
        dom = self.domain
        a = [n.raw for n in x.nums]
        b = x.den.raw
        num = self._f2_raw(a)
        num = dom._add(num, dom._mul(b, self._f1_raw(a)))
        b2 = dom._mul(b, b)
        num = dom._add(num, dom._mul(b2, self.const))
        return FractionElement(dom, num, b2)

    def eval_f2(self, x: FractionPoint) -> FractionElement:
        """Value of the homogeneous quadratic part alone."""
        self._check_point(x)
        a = [n.raw for n in x.nums]
        b = x.den.raw
        return FractionElement(self.domain, self._f2_raw(a), self.domain._mul(b, b))

    def eval_at_integral(self, pt) -> DomainElement:
        return DomainElement(self.domain, self._eval_raw(self._coerce_vector(pt)))

    def f2_at(self, pt) -> DomainElement:
        return DomainElement(self.domain, self._f2_raw(self._coerce_vector(pt)))

    def bilinear(self, x: FractionPoint, y: FractionPoint) -> FractionElement:
        """The associated bilinear form f2(x+y) - f2(x) - f2(y), exactly."""
        self._check_point(x)
        self._check_point(y)
        dom = self.domain
        # common denominator b*e; numerator vectors a*e and c*b
        b, e = x.den.raw, y.den.raw
        u = [dom._mul(n.raw, e) for n in x.nums]
        w = [dom._mul(n.raw, b) for n in y.nums]
        s = [dom._add(ui, wi) for ui, wi in zip(u, w)]
        num = self._f2_raw(s)
        num = dom._add(num, dom._neg(self._f2_raw(u)))
        num = dom._add(num, dom._neg(self._f2_raw(w)))
        be = dom._mul(b, e)
        return FractionElement(dom, num, dom._mul(be, be))

    def expand_along_line(self, y, v) -> LineExpansion:
        """Coefficients of F(T) = f(y + T*v) for integral y and v.

        A = f2(v), C = f(y), B = f(y+v) - A - C.  The identity
        F(-1) = A - B + C is re-checked; a mismatch would mean the
        expansion itself is broken, so it raises InternalInvariantError.
        """
        dom = self.domain
        yv = self._coerce_vector(y)
        vv = self._coerce_vector(v)
        A = self._f2_raw(vv)
        C = self._eval_raw(yv)
        plus = [dom._add(a, b) for a, b in zip(yv, vv)]
        B = dom._add(self._eval_raw(plus), dom._neg(dom._add(A, C)))
        minus = [dom._add(a, dom._neg(b)) for a, b in zip(yv, vv)]
        lhs = self._eval_raw(minus)
        rhs = dom._add(A, dom._add(dom._neg(B), C))
        if lhs != rhs:
            raise InternalInvariantError(
                "line expansion failed the t = -1 identity check"
            )
        return LineExpansion(
            DomainElement(dom, A), DomainElement(dom, B), DomainElement(dom, C)
        )

    # -- structure ----------------------------------------------------------

    def is_form(self) -> bool:
        """True when the linear part and constant vanish (f = f2)."""
        dom = self.domain
        return dom._is_zero(self.const) and all(dom._is_zero(c) for c in self.lin)

    def sub_scalar(self, r) -> "QuadraticPolynomial":
        """The polynomial f - r for a ring scalar r."""
        dom = self.domain
        new_const = dom._add(self.const, dom._neg(dom.coerce_raw(r)))
        return QuadraticPolynomial(dom, self.d, dict(self.quad), self.lin, new_const)

    def quad_coeff(self, i: int, j: int) -> DomainElement:
        if i > j:
            i, j = j, i
        return DomainElement(self.domain, self.quad.get((i, j), self.domain.coerce_raw(0)))

    def lin_coeff(self, i: int) -> DomainElement:
        return DomainElement(self.domain, self.lin[i])

    @property
    def const_coeff(self) -> DomainElement:
        return DomainElement(self.domain, self.const)

    def __eq__(self, other):
        if not isinstance(other, QuadraticPolynomial):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.d == other.d
            and self.quad == other.quad
            and self.lin == other.lin
            and self.const == other.const
        )

    __hash__ = None

    def __repr__(self):
        return (
            f"QuadraticPolynomial({self.domain.name}, d={self.d}, "
            f"quad={self.quad!r}, lin={self.lin!r}, const={self.const!r})"
        )
