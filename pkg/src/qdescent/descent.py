"""Descent from rational zeros to integral zeros of quadratic polynomials.

Given a zero x = a/b of f whose quadratic part admits a rounding witness,
one step produces a new zero x' = a'/b' with strictly smaller denominator
norm:

    y from the oracle,  v = a - b*y,
    f(y + T*v) = A*T^2 + B*T + C  with  A = f2(v), C = f(y),
    b' = A/b = -B - C*b,          a' = b'*y + C*v.

Every identity in that construction is re-checked at runtime on ring
elements; a violation raises InternalInvariantError because it can only
mean a bug, never bad input.  Iterating must therefore terminate within
norm(b) steps, which descend enforces as a hard cap.

adc_represent wraps the iteration for value representation: for a
homogeneous q and a point x with q(x) = r in the ring, descending q - r
from x lands on an integral point with the same value.  check_n2 uses the
oracle to confirm, element by element, that the existence of such
witnesses forces non-units to have norm > 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .domains import Domain, DomainElement, FractionPoint
from .errors import (
    DescentAborted,
    DomainMismatchError,
    ExactDivisionError,
    IntegralPointError,
    InternalInvariantError,
    NotAFormError,
    NotAZeroError,
    OracleNotFound,
    ValueNotIntegralError,
)
from .oracle import euclidean_step
from .quadratic import QuadraticPolynomial


@dataclass(frozen=True)
class DescentStep:
    x: FractionPoint
    y: Tuple[DomainElement, ...]
    v: Tuple[DomainElement, ...]
    A: DomainElement
    B: DomainElement
    C: DomainElement
    b: DomainElement
    b_next: DomainElement
    x_next: FractionPoint


@dataclass(frozen=True)
class DescentTrace:
    steps: Tuple[DescentStep, ...]
    result: Tuple[DomainElement, ...]


def descent_step(
    f: QuadraticPolynomial,
    x: FractionPoint,
    window: int = 2,
    tie_seed: Optional[int] = None,
) -> DescentStep:
    """One descent step from a non-integral zero x of f.

    Raises NotAZeroError / IntegralPointError on precondition violations
    and propagates OracleNotFound when no rounding witness exists in the
    window.  All postconditions are asserted exactly before returning.
    """
    f._check_point(x)
    value = f.eval(x)
    if not value.is_zero():
        raise NotAZeroError(f"point is not a zero: f({x}) = {value}")
    if x.is_integral():
        raise IntegralPointError(f"{x} is already integral")
    dom = f.domain

    found = euclidean_step(f, x, window, tie_seed)
    b_raw = x.den.raw
    y_raws = [e.raw for e in found.y]
    v_raws = [
        dom._add(n.raw, dom._neg(dom._mul(b_raw, yr)))
        for n, yr in zip(x.nums, y_raws)
    ]
    v = tuple(DomainElement(dom, r) for r in v_raws)
    exp = f.expand_along_line(found.y, v)
    A, B, C = exp.A.raw, exp.B.raw, exp.C.raw

    if dom._is_zero(A):
        raise InternalInvariantError("A = f2(v) vanished despite the oracle guarantee")
    # x is a root of F(T) = A T^2 + B T + C at T = 1/b; cleared form:
    acc = dom._add(A, dom._mul(B, b_raw))
    acc = dom._add(acc, dom._mul(C, dom._mul(b_raw, b_raw)))
    if not dom._is_zero(acc):
        raise InternalInvariantError("A + B*b + C*b^2 != 0")
    try:
        bn_raw = dom._divexact(A, b_raw)
    except ExactDivisionError as err:
        raise InternalInvariantError(f"b does not divide A = f2(v): {err}") from err
    cross = dom._add(dom._neg(B), dom._neg(dom._mul(C, b_raw)))
    if bn_raw != cross:
        raise InternalInvariantError("A/b != -B - C*b")
    if dom._is_zero(bn_raw):
        raise InternalInvariantError("b' vanished")
    nb = dom._norm(b_raw)
    nbn = dom._norm(bn_raw)
    if not nbn < nb:
        raise InternalInvariantError(f"no descent: norm(b') = {nbn} >= norm(b) = {nb}")
    if Fraction(nbn) != found.vnorm * nb:
        raise InternalInvariantError("norm(b') != norm(f2(x - y)) * norm(b)")

    a_next = [
        dom._add(dom._mul(bn_raw, yr), dom._mul(C, vr))
        for yr, vr in zip(y_raws, v_raws)
    ]
    x_next = FractionPoint(dom, a_next, bn_raw)
    if not f.eval(x_next).is_zero():
        raise InternalInvariantError("f(x') != 0 after the step")

    return DescentStep(
        x=x,
        y=found.y,
        v=v,
        A=exp.A,
        B=exp.B,
        C=exp.C,
        b=x.den,
        b_next=DomainElement(dom, bn_raw),
        x_next=x_next,
    )


def descend(
    f: QuadraticPolynomial,
    x: FractionPoint,
    window: int = 2,
    max_steps: Optional[int] = None,
    tie_seed: Optional[int] = None,
) -> DescentTrace:
    """Iterate descent_step until the zero is integral.

    The denominator norms strictly decrease, so a successful run takes at
    most norm(b0) steps; max_steps defaults to exactly that bound and
    crossing it is an internal error, not an input error.  An oracle
    failure surfaces as DescentAborted carrying the step index.
    """
    f._check_point(x)
    if not f.eval(x).is_zero():
        raise NotAZeroError(f"point is not a zero: f({x}) = {f.eval(x)}")
    cap = max_steps if max_steps is not None else x.den.norm()
    steps = []
    cur = x
    while not cur.is_integral():
        if len(steps) >= cap:
            raise InternalInvariantError(f"descent exceeded its step cap of {cap}")
        try:
            step = descent_step(f, cur, window, tie_seed)
        except OracleNotFound as err:
            raise DescentAborted(len(steps), err.x, err.window, err.min_norm) from err
        if steps and not step.b.norm() <= steps[-1].b_next.norm():
            raise InternalInvariantError("denominator grew across canonical reduction")
        steps.append(step)
        cur = step.x_next
    return DescentTrace(tuple(steps), cur.integral_point())


def adc_trace(
    q: QuadraticPolynomial, x: FractionPoint, window: int = 2
) -> Tuple[DescentTrace, DomainElement]:
    """Descent trace for the representation problem, plus the value r = q(x).

    q must be homogeneous and q(x) must lie in the ring; the trace descends
    q - r starting from x, so its result y satisfies q(y) = r.
    """
    if not q.is_form():
        raise NotAFormError("value representation needs a homogeneous form")
    value = q.eval(x)
    if not value.is_integral():
        raise ValueNotIntegralError(f"q({x}) = {value} is not in the base ring")
    r = value.to_element()
    trace = descend(q.sub_scalar(r), x, window)
    return trace, r


def adc_represent(
    q: QuadraticPolynomial, x: FractionPoint, window: int = 2
) -> Tuple[DomainElement, ...]:
    """An integral point y with q(y) = q(x), found by descending q - q(x)."""
    return adc_trace(q, x, window)[0].result


@dataclass(frozen=True)
class N2Failure:
    element: DomainElement
    reason: str


@dataclass(frozen=True)
class N2Report:
    checked: int
    failures: Tuple[N2Failure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_n2(
    domain: Domain,
    q: QuadraticPolynomial,
    elements: Iterable,
    window: int = 2,
) -> N2Report:
    """Check that nonzero non-units have norm > 1, twice over.

    Directly: norm(a) > 1 for each enumerated nonzero non-unit a.
    Constructively: run the oracle at x = e1/a; with witness y, the ring
    element q(e1 - a*y) = a^2 * q(x - y) must have norm strictly between
    0 and norm(a)^2, which is only possible when norm(a) > 1 since norms
    are integers.  q must be homogeneous (degree 2 throughout).
    """
    if not q.is_form():
        raise NotAFormError("the unit-norm check needs a homogeneous form")
    if q.domain != domain:
        raise DomainMismatchError(
            f"form over {q.domain.name}, elements over {domain.name}"
        )
    e1 = [domain.one] + [domain.zero] * (q.d - 1)
    checked = 0
    failures = []
    for el in elements:
        a = domain.element(el)
        if a.is_zero() or a.is_unit():
            continue
        checked += 1
        if not a.norm() > 1:
            failures.append(N2Failure(a, f"non-unit with norm {a.norm()}"))
        x = FractionPoint(domain, e1, a)
        try:
            found = euclidean_step(q, x, window)
        except OracleNotFound as err:
            failures.append(
                N2Failure(a, f"no witness in window {window} (best norm {err.min_norm})")
            )
            continue
        den = x.den.raw
        w = [
            DomainElement(domain, domain._add(n.raw, domain._neg(domain._mul(den, yi.raw))))
            for n, yi in zip(x.nums, found.y)
        ]
        nv = q.eval_at_integral(w).norm()
        bound = x.den.norm() ** 2
        if not 0 < nv < bound:
            failures.append(
                N2Failure(a, f"witness value norm {nv} outside (0, {bound})")
            )
    return N2Report(checked, tuple(failures))
