"""Single linear homogeneous equations over the integers.

Parsing and canonicalization (denominators cleared, gcd divided out, signs
preserved), the subset-sums-to-zero regularity criterion, the two builtin
equation families, and bounded enumeration of positive solutions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Sequence

from .errors import EquationParseError

INT64_MAX = 2**63 - 1

# Coefficient caps for the builtin families.  The powers family tops out where
# its largest coefficient still fits the checked 64-bit enumeration range; the
# doubling-ratio family is capped where its cleared-denominator coefficients
# stay desk-sized.
MAX_POWERS_N = 62
MAX_AT_N = 30


@dataclass(frozen=True)
class LinearEquation:
    """Canonical integer form a1*x1 + ... + an*xn = 0.

    coeffs: nonzero integers with gcd 1, signs and order as given.
    scale:  positive rational q such that q * (original coefficients)
            equals coeffs.
    """

    coeffs: tuple[int, ...]
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("an equation needs at least 2 terms")
        if any(c == 0 for c in self.coeffs):
            raise ValueError("zero coefficient")
        if gcd(*(abs(c) for c in self.coeffs)) != 1:
            raise ValueError("coefficients are not canonical (gcd > 1)")
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def to_dict(self) -> dict:
        return {
            "coeffs": [str(c) for c in self.coeffs],
            "n": self.n,
            "scale": str(self.scale),
        }


@dataclass(frozen=True)
class SolutionTuple:
    """Positive integers x1..xn, optionally with the offsets that built them."""

    values: tuple[int, ...]
    lambdas: tuple[int, ...] | None = None

    def __post_init__(self):
        if any(v < 1 for v in self.values):
            raise ValueError("solution values must be positive")

    def to_dict(self) -> dict:
        return {
            "values": list(self.values),
            "lambdas": list(self.lambdas) if self.lambdas is not None else None,
        }


@dataclass(frozen=True)
class RegularityVerdict:
    """Outcome of the subset-sums-to-zero criterion."""

    regular: bool
    subset: tuple[int, ...] | None  # 1-based indices, lexicographically first

    def to_dict(self) -> dict:
        return {
            "regular": self.regular,
            "witness_subset": list(self.subset) if self.subset else None,
        }


def canonicalize(raw: Sequence[Fraction | int | str]) -> LinearEquation:
    """Clear denominators by their lcm, divide by the gcd, keep signs."""
    try:
        fracs = [Fraction(c) for c in raw]
    except (ValueError, ZeroDivisionError) as exc:
        raise EquationParseError(f"bad coefficient: {exc}") from exc
    if len(fracs) < 2:
        raise EquationParseError("an equation needs at least 2 terms")
    if any(f == 0 for f in fracs):
        raise EquationParseError("zero coefficient")
    denom_lcm = lcm(*(f.denominator for f in fracs))
    ints = [int(f * denom_lcm) for f in fracs]
    g = gcd(*(abs(v) for v in ints))
    return LinearEquation(tuple(v // g for v in ints), Fraction(denom_lcm, g))


_TERM_RE = re.compile(
    r"^([+-])?\s*(\d+(?:\s*/\s*\d+)?)?\s*\*?\s*x\s*(\d+)$"
)


def parse_equation(text: str) -> LinearEquation:
    """Parse either a comma list ("1,2,-4", rationals allowed) or an
    expression "c1*x1 + c2*x2 - c3*x3 = 0" into canonical form."""
    text = text.strip()
    if not text:
        raise EquationParseError("empty equation")
    if "x" in text or "X" in text or "=" in text:
        return _parse_expression(text)
    return canonicalize([tok.strip() for tok in text.split(",")])


def _parse_expression(text: str) -> LinearEquation:
    if "=" not in text:
        raise EquationParseError("expression form needs '= 0'")
    lhs, _, rhs = text.partition("=")
    if rhs.strip() != "0":
        raise EquationParseError("right-hand side must be 0")
    terms = re.findall(r"[+-]?[^+-]+", lhs)
    if not terms:
        raise EquationParseError("no terms on the left-hand side")
    by_index: dict[int, Fraction] = {}
    for term in terms:
        m = _TERM_RE.match(term.strip())
        if not m:
            raise EquationParseError(f"malformed term: {term.strip()!r}")
        sign, coeff, idx = m.groups()
        idx = int(idx)
        if idx < 1:
            raise EquationParseError(f"variable index must be >= 1: x{idx}")
        if idx in by_index:
            raise EquationParseError(f"variable x{idx} appears twice")
        value = Fraction(coeff.replace(" ", "")) if coeff else Fraction(1)
        if sign == "-":
            value = -value
        if value == 0:
            raise EquationParseError("zero coefficient")
        by_index[idx] = value
    n = max(by_index)
    missing = [i for i in range(1, n + 1) if i not in by_index]
    if missing:
        raise EquationParseError(
            f"missing variable x{missing[0]} (zero coefficient)"
        )
    return canonicalize([by_index[i] for i in range(1, n + 1)])


def render(eq: LinearEquation) -> str:
    """Comma form of the canonical coefficients; parse_equation(render(eq))
    reproduces eq.coeffs."""
    return ",".join(str(c) for c in eq.coeffs)


def is_regular(eq: LinearEquation) -> RegularityVerdict:
    """Decide regularity: some nonempty subset of the coefficients sums to 0.

    Returns the lexicographically first witnessing index subset (1-based).
    Exponential in n in the worst case; intended for desk-scale equations.
    """
    coeffs = eq.coeffs
    n = len(coeffs)
    # suffix bounds for pruning: tightest possible extension sums
    pos_suf = [0] * (n + 1)
    neg_suf = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        pos_suf[i] = pos_suf[i + 1] + max(coeffs[i], 0)
        neg_suf[i] = neg_suf[i + 1] + min(coeffs[i], 0)

    def dfs(start: int, total: int, prefix: tuple[int, ...]):
        for i in range(start, n):
            s = total + coeffs[i]
            sub = prefix + (i + 1,)
            if s == 0:
                return sub
            if s + neg_suf[i + 1] <= 0 <= s + pos_suf[i + 1]:
                hit = dfs(i + 1, s, sub)
                if hit is not None:
                    return hit
        return None

    subset = dfs(0, 0, ())
    return RegularityVerdict(subset is not None, subset)


def family_equation(n: int) -> LinearEquation:
    """The geometric-coefficient family (1, 2, 4, ..., 2^(n-2), -2^(n-1))."""
    if not 2 <= n <= MAX_POWERS_N:
        raise ValueError(f"n must be in [2, {MAX_POWERS_N}]")
    coeffs = tuple(1 << i for i in range(n - 1)) + (-(1 << (n - 1)),)
    return LinearEquation(coeffs)


def at_equation(n: int) -> LinearEquation:
    """The Alexeev-Tsimerman family in canonical integer form.

    Rational form: (1 - sum_{i<n} 2^i/(2^i-1)) x1 + sum_{i<n} 2^i/(2^i-1) x_{i+1} = 0.
    """
    if not 2 <= n <= MAX_AT_N:
        raise ValueError(f"n must be in [2, {MAX_AT_N}]")
    tail = [Fraction(1 << i, (1 << i) - 1) for i in range(1, n)]
    return canonicalize([1 - sum(tail), *tail])


def _check_enumeration_range(eq: LinearEquation, max_value: int) -> None:
    # Enumeration hot paths assume checked 64-bit arithmetic; refuse inputs
    # whose partial sums could leave that range.
    worst = sum(abs(c) for c in eq.coeffs) * max_value
    if worst > INT64_MAX:
        raise OverflowError(
            "enumeration bound exceeds the checked 64-bit range "
            f"(worst-case partial sum {worst})"
        )


def enumerate_solutions(
    eq: LinearEquation,
    max_value: int,
    max_element: int | None = None,
) -> Iterator[SolutionTuple]:
    """Yield every positive solution in [1, max_value]^n in lexicographic
    order.  With max_element=m, yield only tuples whose maximum coordinate
    equals m (incremental-verification mode).  Repeated values are allowed.
    """
    if max_value < 1:
        raise ValueError("max_value must be >= 1")
    _check_enumeration_range(eq, max_value)
    if max_element is not None:
        if not 1 <= max_element <= max_value:
            raise ValueError("max_element must lie in [1, max_value]")
        for values in solutions_with_max(eq, max_element):
            yield SolutionTuple(values)
        return
    for values in _iter_box(eq, max_value):
        yield SolutionTuple(values)


def _iter_box(eq: LinearEquation, max_value: int) -> Iterator[tuple[int, ...]]:
    coeffs = eq.coeffs
    n = len(coeffs)
    # min/max achievable sum of coordinates i.. with values in [1, max_value]
    min_suf = [0] * (n + 1)
    max_suf = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        c = coeffs[i]
        min_suf[i] = min_suf[i + 1] + (c if c > 0 else c * max_value)
        max_suf[i] = max_suf[i + 1] + (c * max_value if c > 0 else c)
    last = coeffs[-1]
    values = [0] * n

    def rec(idx: int, partial: int) -> Iterator[tuple[int, ...]]:
        if idx == n - 1:
            num = -partial
            if num % last == 0:
                x = num // last
                if 1 <= x <= max_value:
                    values[idx] = x
                    yield tuple(values)
            return
        c = coeffs[idx]
        for x in range(1, max_value + 1):
            s = partial + c * x
            if c > 0 and s + min_suf[idx + 1] > 0:
                break
            if c < 0 and s + max_suf[idx + 1] < 0:
                break
            if s + min_suf[idx + 1] <= 0 <= s + max_suf[idx + 1]:
                values[idx] = x
                yield from rec(idx + 1, s)

    yield from rec(0, 0)


def solutions_with_max(eq: LinearEquation, m: int) -> list[tuple[int, ...]]:
    """All solutions whose maximum coordinate is exactly m, sorted
    lexicographically.

    Decomposes by the position of the first coordinate equal to m and solves
    the last remaining coordinate from the equation, so an n=2 equation costs
    O(1) per m.
    """
    coeffs = eq.coeffs
    n = len(coeffs)
    out: list[tuple[int, ...]] = []
    for pin in range(n):
        # position < pin: values in [1, m-1]; pin: exactly m; > pin: [1, m]
        los = [1] * n
        his = [m - 1 if i < pin else m for i in range(n)]
        los[pin] = his[pin] = m
        if any(lo > hi for lo, hi in zip(los, his)):
            continue
        solve = n - 1 if pin != n - 1 else n - 2
        order = [i for i in range(n) if i != solve]
        k_count = len(order)
        # suffix bounds over remaining iterated positions plus the solved one
        min_suf = [0] * (k_count + 1)
        max_suf = [0] * (k_count + 1)
        c_s = coeffs[solve]
        min_suf[k_count] = min(c_s * los[solve], c_s * his[solve])
        max_suf[k_count] = max(c_s * los[solve], c_s * his[solve])
        for k in range(k_count - 1, -1, -1):
            c = coeffs[order[k]]
            lo_c, hi_c = c * los[order[k]], c * his[order[k]]
            min_suf[k] = min_suf[k + 1] + min(lo_c, hi_c)
            max_suf[k] = max_suf[k + 1] + max(lo_c, hi_c)
        values = [0] * n

        def rec(k: int, partial: int):
            if k == k_count:
                num = -partial
                if num % c_s == 0:
                    x = num // c_s
                    if los[solve] <= x <= his[solve]:
                        values[solve] = x
                        out.append(tuple(values))
                return
            pos = order[k]
            c = coeffs[pos]
            for x in range(los[pos], his[pos] + 1):
                s = partial + c * x
                if c > 0 and s + min_suf[k + 1] > 0:
                    break
                if c < 0 and s + max_suf[k + 1] < 0:
                    break
                if s + min_suf[k + 1] <= 0 <= s + max_suf[k + 1]:
                    values[pos] = x
                    rec(k + 1, s)

        rec(0, 0)
    out.sort()
    return out
