"""Generation and cross-checking of test inputs for the descent engine.

brute_integral_zero scans a box in graded-lexicographic order for an
integral zero.  chord_zero turns one integral zero into further rational
zeros: the line y0 + T*w meets the zero set in a second point at
T = -B/A, read off from the expansion of f along the line.  Those two
are the designated sources of descent inputs, because sampling exact
rational points of a quadric any other way is hard.

verify_adc is the referee: over a box of fraction points it compares the
descent route (adc_represent) with an independent brute-force search for
an integral point of equal value, and reports disagreements.  A descent
that merely fails for want of an oracle witness is classified
"inapplicable", not a failure: it does not refute value representability,
it only means the quadratic part is not covered by the rounding oracle
there (the four-squares form at all-half-integer points is the canonical
example).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import product
from typing import Optional, Tuple

from .domains import Domain, DomainElement, FractionPoint, RationalIntegers
from .errors import (
    IsotropicDirectionError,
    NotAFormError,
    NotAZeroError,
    OracleNotFound,
    SearchBudgetError,
)
from .descent import adc_trace
from .quadratic import QuadraticPolynomial


@dataclass(frozen=True)
class SearchBox:
    """Enumeration bounds: num_bound caps coordinates (magnitude for Z, both
    components for Z[i], degree for F_p[t]); height caps denominator norms
    (degree for F_p[t]).  height is ignored by integral-point searches."""

    num_bound: int
    height: int = 1

    def __post_init__(self):
        if self.num_bound < 0 or self.height < 0:
            raise ValueError("search bounds must be nonnegative")


def _graded_raw_points(dom: Domain, bounds) -> list:
    """Raw coordinate tuples of the box, sorted by (sum of coordinate norms,
    coordinatewise sort key): graded lexicographic, deterministic."""
    axes = [dom._box_raws(b) for b in bounds]
    pts = list(product(*axes))
    pts.sort(
        key=lambda pt: (
            sum(dom._norm(c) for c in pt),
            tuple(dom._sort_key(c) for c in pt),
        )
    )
    return pts


def brute_integral_zero(
    f: QuadraticPolynomial, box: SearchBox
) -> Optional[Tuple[DomainElement, ...]]:
    """First integral zero of f in graded-lex enumeration order, or None."""
    dom = f.domain
    for pt in _graded_raw_points(dom, [box.num_bound] * f.d):
        if dom._is_zero(f._eval_raw(list(pt))):
            return tuple(DomainElement(dom, c) for c in pt)
    return None


def chord_zero(f: QuadraticPolynomial, y0, w) -> FractionPoint:
    """Second intersection of the line y0 + T*w with the zero set of f.

    y0 must be an integral zero and w a direction with f2(w) != 0 (else
    the line leaves the zero set after y0 for good).  The root T = -B/A
    of the line expansion gives the point (A*y0 - B*w)/A; a tangent line
    (B = 0) returns y0 itself.
    """
    dom = f.domain
    y0v = f._coerce_vector(y0)
    wv = f._coerce_vector(w)
    if not dom._is_zero(f._eval_raw(y0v)):
        raise NotAZeroError("chord base point is not a zero of f")
    exp = f.expand_along_line(y0v, wv)
    if exp.A.is_zero():
        raise IsotropicDirectionError(
            "f2 vanishes on the chord direction; no second intersection"
        )
    if exp.B.is_zero():
        return FractionPoint(dom, y0v, 1)
    a_raw, b_raw = exp.A.raw, exp.B.raw
    nums = [
        dom._add(dom._mul(a_raw, yc), dom._neg(dom._mul(b_raw, wc)))
        for yc, wc in zip(y0v, wv)
    ]
    return FractionPoint(dom, nums, a_raw)


def random_rational_zero(
    f: QuadraticPolynomial,
    y0,
    seed: int,
    height_min: int = 2,
    direction_bound: int = 9,
    attempts: int = 500,
) -> FractionPoint:
    """Seeded non-integral rational zero of f through chord directions.

    Draws random directions until the chord point is non-integral with
    denominator norm at least height_min; deterministic for a fixed seed.
    Raises SearchBudgetError after the attempt budget.
    """
    dom = f.domain
    rng = random.Random(seed)
    for _ in range(attempts):
        w = [dom._random_raw(rng, direction_bound) for _ in range(f.d)]
        if all(dom._is_zero(c) for c in w):
            continue
        if dom._is_zero(f._f2_raw(w)):
            continue
        x = chord_zero(f, y0, w)
        if not x.is_integral() and x.den.norm() >= height_min:
            return x
    raise SearchBudgetError(
        f"no chord direction in {attempts} attempts reached denominator norm >= {height_min}"
    )


def random_quadratic(
    domain: Domain, d: int, rng: random.Random, coeff_bound: int = 5
) -> QuadraticPolynomial:
    """Random polynomial for property tests; any coefficient may be zero."""
    quad = {}
    for i in range(d):
        for j in range(i, d):
            if rng.random() < 0.5:
                quad[(i, j)] = domain._random_raw(rng, coeff_bound)
    lin = [
        domain._random_raw(rng, coeff_bound) if rng.random() < 0.5 else 0
        for _ in range(d)
    ]
    const = domain._random_raw(rng, coeff_bound) if rng.random() < 0.7 else 0
    return QuadraticPolynomial(domain, d, quad, lin, const)


@dataclass(frozen=True)
class AdcFinding:
    x: FractionPoint
    value: DomainElement
    detail: str


@dataclass(frozen=True)
class AdcReport:
    checked: int
    failures: Tuple[AdcFinding, ...]
    inapplicable: Tuple[AdcFinding, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _is_positive_diagonal_z(q: QuadraticPolynomial) -> bool:
    return isinstance(q.domain, RationalIntegers) and all(
        i == j and c > 0 for (i, j), c in q.quad.items()
    )


def verify_adc(q: QuadraticPolynomial, box: SearchBox, window: int = 2) -> AdcReport:
    """Compare descent against brute force on every box point with q(x) in R.

    For positive diagonal forms over Z the witness box is derived from the
    value (|y_i| <= isqrt(r / c_ii)), making the brute search exhaustive;
    elsewhere a bounded heuristic box is used, enlarged to contain the
    descent witness whenever descent succeeded, so a successful descent can
    never be contradicted by a too-small search.
    """
    if not q.is_form():
        raise NotAFormError("the representation check needs a homogeneous form")
    dom = q.domain
    d = q.d
    diagonal = _is_positive_diagonal_z(q)
    cache = {}

    def brute_witness(r_raw, fallback_bound):
        key = (r_raw, None) if diagonal else (r_raw, fallback_bound)
        if key in cache:
            return cache[key]
        if diagonal:
            if r_raw < 0:
                result = (None, True)
            else:
                bounds = [
                    math.isqrt(r_raw // q.quad[(i, i)]) if (i, i) in q.quad else 0
                    for i in range(d)
                ]
                result = (_first_value_witness(q, r_raw, bounds), True)
        else:
            result = (_first_value_witness(q, r_raw, [fallback_bound] * d), False)
        cache[key] = result
        return result

    checked = 0
    failures = []
    inapplicable = []
    num_raws = dom._box_raws(box.num_bound)
    dens = [dom.coerce_raw(1)] + dom._denominator_raws(box.height)
    for den in dens:
        for nums in product(num_raws, repeat=d):
            g = den
            for nr in nums:
                g = dom._gcd(g, nr)
                if dom._is_unit(g):
                    break
            if not dom._is_unit(g):
                continue
            x = FractionPoint(dom, nums, den)
            value = q.eval(x)
            if not value.is_integral():
                continue
            checked += 1
            r = value.to_element()
            try:
                trace, _ = adc_trace(q, x, window)
                y = trace.result
            except OracleNotFound as err:
                y = None
                note = f"no oracle witness in window {window} (best norm {err.min_norm})"
            if y is not None:
                if q.eval_at_integral(y) != r:
                    failures.append(AdcFinding(x, r, "descent result has the wrong value"))
                    continue
                radius = max(
                    [box.num_bound] + [dom._box_radius(c.raw) for c in y]
                )
                witness, _ = brute_witness(r.raw, radius)
                if witness is None:
                    failures.append(
                        AdcFinding(x, r, "brute search missed a value descent represents")
                    )
            else:
                witness, definitive = brute_witness(r.raw, box.num_bound)
                if witness is not None:
                    inapplicable.append(
                        AdcFinding(x, r, note + "; brute search still represents the value")
                    )
                elif definitive:
                    failures.append(
                        AdcFinding(x, r, "value attained on K^d but on no integral point")
                    )
                else:
                    failures.append(
                        AdcFinding(x, r, note + "; no witness in the heuristic box either")
                    )
    return AdcReport(checked, tuple(failures), tuple(inapplicable))


def _first_value_witness(q: QuadraticPolynomial, r_raw, bounds):
    dom = q.domain
    for pt in _graded_raw_points(dom, bounds):
        if q._eval_raw(list(pt)) == r_raw:
            return tuple(DomainElement(dom, c) for c in pt)
    return None
