"""Exact lower bounds on the vertex count of graphs with large odd girth.

Every estimate is a function of the chromatic number ``chi`` and the
odd-girth parameter ``k`` (all odd cycles have length at least ``2k + 1``).
Values are kept as :class:`fractions.Fraction`; the usable integer bound is
the ceiling.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

__all__ = [
    "BoundId",
    "BoundParams",
    "BoundValue",
    "BnTable",
    "BoundDomainError",
    "CATALOG_ORDER",
    "TABLE1",
    "TABLE2",
    "binom",
    "bound_sys",
    "bound_bb1",
    "bound_bb2",
    "bound_bb3",
    "bound_mix1",
    "bound_mix2",
    "bound_mix3_printed",
    "bound_mix3_recursive",
    "bound_eq2",
    "d_lower",
    "f_recursive",
    "bn_table",
    "bn_closed_form",
    "ball_lower_a",
    "ball_lower_b",
    "bound_gromov",
    "evaluate",
    "best_bound",
]


class BoundId(str, enum.Enum):
    SYS = "SYS"
    BB1 = "BB1"
    BB2 = "BB2"
    BB3 = "BB3"
    MIX1 = "MIX1"
    MIX2 = "MIX2"
    MIX3_PRINTED = "MIX3_PRINTED"
    MIX3_RECURSIVE = "MIX3_RECURSIVE"
    GROMOV = "GROMOV"
    BALL_A = "BALL_A"
    BALL_B = "BALL_B"
    EQ2 = "EQ2"

    def __str__(self) -> str:
        return self.value

    @property
    def label(self) -> str:
        """Short name used in the comparison tables."""
        return _LABELS.get(self, self.value)


_LABELS = {
    BoundId.SYS: "sys",
    BoundId.BB1: "BB-1",
    BoundId.BB2: "BB-2",
    BoundId.BB3: "BB-3",
    BoundId.MIX1: "MIX-1",
    BoundId.MIX2: "MIX-2",
    BoundId.MIX3_PRINTED: "MIX-3",
    BoundId.MIX3_RECURSIVE: "MIX-3",
}

# Catalog order; later entries win ties in best_bound.
CATALOG_ORDER = (
    BoundId.SYS,
    BoundId.BB1,
    BoundId.BB2,
    BoundId.BB3,
    BoundId.MIX1,
    BoundId.MIX2,
    BoundId.MIX3_PRINTED,
    BoundId.MIX3_RECURSIVE,
)
TABLE1 = frozenset({BoundId.SYS, BoundId.BB1, BoundId.BB2, BoundId.BB3})
TABLE2 = TABLE1 | {BoundId.MIX1, BoundId.MIX2, BoundId.MIX3_PRINTED}


class BoundDomainError(ValueError):
    """Parameters outside the range where a formula is stated."""


@dataclass(frozen=True)
class BoundParams:
    chi: int
    k: int

    def __post_init__(self):
        if self.chi < 1 or self.k < 1:
            raise BoundDomainError(f"need chi >= 1 and k >= 1, got chi={self.chi}, k={self.k}")


@dataclass(frozen=True)
class BoundValue:
    id: BoundId
    raw: Fraction

    @property
    def floor_int(self) -> int:
        # named after the usable bound; it is the ceiling of the raw value
        return math.ceil(self.raw)

    @property
    def value(self) -> int:
        return self.floor_int

    def raw_str(self) -> str:
        return f"{self.raw.numerator}/{self.raw.denominator}" if self.raw.denominator != 1 else str(self.raw.numerator)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero for ``k < 0``, ``k > n`` or ``n < 0``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _half(chi: int) -> int:
    return (chi - 1) // 2


def _params(p: BoundParams | tuple[int, int]) -> BoundParams:
    return p if isinstance(p, BoundParams) else BoundParams(*p)


def _product_term(chi: int, k: int, shift: int) -> Fraction:
    # (chi + k + shift) ... (chi + 2k - 1 + shift) / (2^(k-1) k^k)
    num = math.prod(chi + k + shift + i for i in range(k))
    return Fraction(num, 2 ** (k - 1) * k**k)


def _ball_term(chi: int, k: int) -> int:
    j = _half(chi)
    return 2 * binom(k - 2 + j, j) + binom(k - 2 + j, j - 1)


def bound_sys(p) -> BoundValue:
    p = _params(p)
    j = _half(p.chi)
    v = 2 * binom(p.k - 1 + j, p.k - 1) + binom(p.k - 1 + j, p.k) - 1
    return BoundValue(BoundId.SYS, Fraction(v))


def bound_bb1(p) -> BoundValue:
    p = _params(p)
    if p.chi == 1:
        return BoundValue(BoundId.BB1, Fraction(1))
    return BoundValue(BoundId.BB1, _product_term(p.chi, p.k, -1) + 1)


def bound_bb2(p) -> BoundValue:
    p = _params(p)
    if p.chi == 1:
        return BoundValue(BoundId.BB2, Fraction(1))
    raw = _product_term(p.chi, p.k, -2) + (p.chi - 1) * (p.k - 1) + 2
    return BoundValue(BoundId.BB2, raw)


def bound_bb3(p) -> BoundValue:
    p = _params(p)
    if p.chi == 1:
        return BoundValue(BoundId.BB3, Fraction(1))
    chi, k = p.chi, p.k
    raw = (chi - 1) + Fraction((k - 1) * (chi - 2) * (chi + 1), 2) + 1
    return BoundValue(BoundId.BB3, raw)


def _require(p: BoundParams, min_chi: int, name: str) -> None:
    if p.chi < min_chi:
        raise BoundDomainError(f"{name} requires chi >= {min_chi}, got {p.chi}")


def bound_mix1(p) -> BoundValue:
    p = _params(p)
    _require(p, 2, "MIX-1")
    raw = _product_term(p.chi, p.k, -2) + _ball_term(p.chi, p.k) + 1
    return BoundValue(BoundId.MIX1, raw)


def bound_mix2(p) -> BoundValue:
    p = _params(p)
    _require(p, 2, "MIX-2")
    chi, k = p.chi, p.k
    raw = (chi - 2) + Fraction((k - 1) * (chi - 3) * chi, 2) + _ball_term(chi, k) + 1
    return BoundValue(BoundId.MIX2, raw)


def bound_mix3_printed(p) -> BoundValue:
    """MIX-3 exactly as stated in closed form, parity split on ``chi``.

    This transcription is not sound: it gives 9 at ``(chi, k) = (3, 2)``
    while the 5-cycle has five vertices.  Audit it in report-only mode.
    """
    p = _params(p)
    _require(p, 2, "MIX-3")
    chi, k = p.chi, p.k
    j = _half(chi)
    v = 4 * binom(k - 1 + j, j) + 2 * binom(k - 1 + j, j - 1) - 1
    if chi % 2 == 0:
        v -= 2 * binom(k - 2 + j, j) + binom(k - 2 + j, j - 1)
    return BoundValue(BoundId.MIX3_PRINTED, Fraction(v))


def d_lower(m: int, k: int) -> int:
    """Lower bound on the largest radius-(k-1) ball of a graph that is not
    ``m``-colourable and has no odd cycle shorter than ``2k + 1``."""
    if m < 1 or k < 1:
        raise BoundDomainError(f"d_lower needs m >= 1 and k >= 1, got m={m}, k={k}")
    h = m // 2
    return 2 * binom(k - 2 + h, h) + binom(k - 2 + h, h - 1)


def f_recursive(m: int, k: int) -> int:
    """``1 + sum(d_lower(c, k) for c in 2..m)``.

    Unrolls ``f(m, k) >= f(m - 1, k) + d(m, k - 1)`` from ``f(1, k) = 1``.
    """
    if m < 1 or k < 1:
        raise BoundDomainError(f"f_recursive needs m >= 1 and k >= 1, got m={m}, k={k}")
    return 1 + sum(d_lower(c, k) for c in range(2, m + 1))


def bound_mix3_recursive(p) -> BoundValue:
    p = _params(p)
    _require(p, 2, "MIX-3")
    return BoundValue(BoundId.MIX3_RECURSIVE, Fraction(f_recursive(p.chi - 1, p.k) + 1))


def bound_eq2(p) -> BoundValue:
    """``(k - 1)(chi - 1) + 1``: lower bound on the largest radius-(k-1) ball."""
    p = _params(p)
    return BoundValue(BoundId.EQ2, Fraction((p.k - 1) * (p.chi - 1) + 1))


@dataclass(frozen=True)
class BnTable:
    n: int
    r: int
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i]


def bn_table(n: int, r: int) -> BnTable:
    """``b_n(i)`` for ``i = 0..r+1`` from the partial-sum recursion."""
    if n < 1 or r < 0:
        raise BoundDomainError(f"bn_table needs n >= 1 and r >= 0, got n={n}, r={r}")
    row = [2 * i + 1 for i in range(r + 1)] + [2 * r + 2]
    for _ in range(n - 1):
        acc = 0
        nxt = []
        for v in row:
            acc += v
            nxt.append(acc)
        row = nxt
    return BnTable(n, r, tuple(row))


def bn_closed_form(n: int, i: int, r: int) -> int:
    """Closed form of ``b_n(i)``; the ``i = r + 1`` entry carries a -1."""
    if i <= r:
        return 2 * binom(i + n - 1, n) + binom(i + n - 1, n - 1)
    if i == r + 1:
        return 2 * binom(r + n, n) + binom(r + n, n - 1) - 1
    raise ValueError("i must be at most r + 1")


def ball_lower_a(p) -> BoundValue:
    """Some radius-(k-1) ball has at least this many vertices."""
    p = _params(p)
    _require(p, 3, "ball bound (a)")
    return BoundValue(BoundId.BALL_A, Fraction(_ball_term(p.chi, p.k)))


def ball_lower_b(p) -> BoundValue:
    """Some radius-k ball has at least this many vertices."""
    p = _params(p)
    _require(p, 3, "ball bound (b)")
    n = _half(p.chi)
    k = p.k
    return BoundValue(BoundId.BALL_B, Fraction(2 * binom(k - 1 + n, k - 1) + binom(k - 1 + n, k) - 1))


def bound_gromov(nprime: int, s: int | float) -> BoundValue:
    """Vertex bound for a graph that is not a union of ``nprime`` induced forests.

    ``s`` is the girth; infinite girth (a forest) is rejected.
    """
    if s == math.inf or s is None:
        raise BoundDomainError("girth bound is vacuous for forests")
    if nprime < 1 or s < 3:
        raise BoundDomainError(f"need nprime >= 1 and finite girth >= 3, got {nprime}, {s}")
    h = int(s) // 2
    v = binom(nprime + h - 1, nprime - 1) + 2 * binom(nprime + h - 1, nprime) - 1
    return BoundValue(BoundId.GROMOV, Fraction(v))


_EVALUATORS: dict[BoundId, Callable[[BoundParams], BoundValue]] = {
    BoundId.SYS: bound_sys,
    BoundId.BB1: bound_bb1,
    BoundId.BB2: bound_bb2,
    BoundId.BB3: bound_bb3,
    BoundId.MIX1: bound_mix1,
    BoundId.MIX2: bound_mix2,
    BoundId.MIX3_PRINTED: bound_mix3_printed,
    BoundId.MIX3_RECURSIVE: bound_mix3_recursive,
    BoundId.BALL_A: ball_lower_a,
    BoundId.BALL_B: ball_lower_b,
    BoundId.EQ2: bound_eq2,
}


def evaluate(bound: BoundId | str, p) -> BoundValue:
    """Evaluate a ``(chi, k)`` bound by id; ``chi = 1`` gives 1 everywhere."""
    bound = BoundId(bound)
    p = _params(p)
    if bound is BoundId.GROMOV:
        raise BoundDomainError("GROMOV depends on forest essentiality and girth; use bound_gromov")
    if p.chi == 1:
        return BoundValue(bound, Fraction(1))
    return _EVALUATORS[bound](p)


def best_bound(p, catalog: Iterable[BoundId | str]) -> tuple[BoundId, BoundValue]:
    """Largest raw value over ``catalog``; ties go to the later catalog entry."""
    p = _params(p)
    ids = {BoundId(b) for b in catalog}
    if not ids:
        raise ValueError("empty catalog")
    best: tuple[BoundId, BoundValue] | None = None
    for bid in CATALOG_ORDER:
        if bid not in ids:
            continue
        try:
            val = evaluate(bid, p)
        except BoundDomainError:
            continue
        if best is None or val.raw >= best[1].raw:
            best = (bid, val)
    if best is None:
        raise BoundDomainError(f"no catalog bound is defined at chi={p.chi}, k={p.k}")
    return best
