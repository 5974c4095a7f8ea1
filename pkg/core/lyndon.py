"""
omega-Lyndon predicates.

A finite word w is omega-Lyndon when w^w < v^w for every proper suffix v; an
infinite word x is omega-Lyndon when x < y for every proper suffix y. All
functions take an OmegaOrder (or a positional scheme) and never assume the order
is positional.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from loguru import logger

from .errors import CapExceeded, CapTooSmall, ConstructionFailed, InvalidInput, NotLyndon
from .orders import Comparison, OrderLike, as_order, first_mismatch
from .words import (
    EventuallyPeriodicWord,
    Word,
    distinct_suffixes,
    iter_factors,
    longest_border,
    normalize,
    rotations,
)

Witness = Union[Word, Tuple[Word, Word], EventuallyPeriodicWord]


@dataclass
class LyndonVerdict:
    """Outcome of an omega-Lyndon test; witness is set iff the test failed."""

    is_lyndon: bool
    witness: Optional[Witness] = None
    witness_offset: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_lyndon


def is_omega_lyndon_finite(w: Sequence[int], order: OrderLike) -> LyndonVerdict:
    w = tuple(w)
    if not w:
        raise InvalidInput("omega-Lyndon test needs a nonempty word")
    order = as_order(order)
    for j in range(1, len(w)):
        v = w[j:]
        c = order.omega_compare(w, v)
        if c != Comparison.LESS:
            return LyndonVerdict(
                False, v, j, f"w^w is {c.label}, not Less, against the suffix at offset {j}"
            )
    return LyndonVerdict(True)


def is_omega_lyndon_finite_splits(w: Sequence[int], order: OrderLike) -> LyndonVerdict:
    """Equivalent test: u^w < v^w for every split w = u.v with u, v nonempty."""
    w = tuple(w)
    if not w:
        raise InvalidInput("omega-Lyndon test needs a nonempty word")
    order = as_order(order)
    for i in range(1, len(w)):
        u, v = w[:i], w[i:]
        c = order.omega_compare(u, v)
        if c != Comparison.LESS:
            return LyndonVerdict(False, (u, v), i, f"split at {i}: u^w is {c.label}, not Less, than v^w")
    return LyndonVerdict(True)


def is_omega_lyndon_infinite(x: EventuallyPeriodicWord, order: OrderLike) -> LyndonVerdict:
    """Exact test against the finitely many distinct suffix classes of x."""
    order = as_order(order)
    if x.is_purely_periodic:
        return LyndonVerdict(
            False, x, len(x.period), "purely periodic: the suffix at offset |period| equals x"
        )
    for s in distinct_suffixes(x):
        c = order.compare(x, s.word)
        if c != Comparison.LESS:
            return LyndonVerdict(
                False, s.word, s.offset, f"x is {c.label}, not Less, against the suffix at offset {s.offset}"
            )
    return LyndonVerdict(True)


def longest_lyndon_suffix(w: Sequence[int], order: OrderLike) -> int:
    """Start offset of the longest omega-Lyndon suffix of a nonempty word."""
    w = tuple(w)
    if not w:
        raise InvalidInput("longest_lyndon_suffix needs a nonempty word")
    order = as_order(order)
    for start in range(len(w) - 1):
        if is_omega_lyndon_finite(w[start:], order):
            return start
    return len(w) - 1


def omega_lyndon_prefixes(x: EventuallyPeriodicWord, n: int, order: OrderLike) -> List[int]:
    """Lengths l <= n whose length-l prefix of x is finite omega-Lyndon."""
    if n < 1:
        raise InvalidInput(f"prefix length cap must be >= 1, got {n}")
    order = as_order(order)
    return [l for l in range(1, n + 1) if is_omega_lyndon_finite(x.prefix(l), order)]


def lyndon_rotation(q: Sequence[int], order: OrderLike) -> int:
    """Offset of the unique omega-Lyndon rotation of a primitive word."""
    order = as_order(order)
    for t, rho in enumerate(rotations(q)):
        if is_omega_lyndon_finite(rho, order):
            return t
    raise InvalidInput(f"period of length {len(q)} has no omega-Lyndon rotation (is it primitive?)")


# ---------------------------------------------------------------------------
# Prefix characterization of infinite omega-Lyndon words
# ---------------------------------------------------------------------------


class L1Kind(Enum):
    IS_LYNDON = "IsLyndon"
    PERIODIC_POWER_OF_LYNDON = "PeriodicPowerOfLyndon"
    FINITELY_MANY_LYNDON_PREFIXES = "FinitelyManyLyndonPrefixes"


@dataclass
class L1Classification:
    """
    Which branch of the prefix characterization x falls into.

    For FINITELY_MANY_LYNDON_PREFIXES, ``bound`` B is certified by ``certificate``:
    no prefix longer than B is omega-Lyndon. ``window`` is the range of lengths
    additionally checked, and ``lyndon_prefixes`` lists the omega-Lyndon prefix
    lengths up to B.
    """

    kind: L1Kind
    root: Optional[Word] = None
    bound: Optional[int] = None
    window: Optional[Tuple[int, int]] = None
    lyndon_prefixes: List[int] = field(default_factory=list)
    certificate: str = ""


def _prefix_bound(x: EventuallyPeriodicWord, order) -> Tuple[int, str]:
    best: Optional[Tuple[int, str]] = None

    def offer(bound: int, why: str):
        nonlocal best
        if best is None or bound < best[0]:
            best = (bound, why)

    if x.is_purely_periodic:
        u = x.period
        for i in range(1, len(u)):
            if order.omega_compare(u[i:] + u[:i], u) == Comparison.LESS:
                offer(i + len(u) - 1, f"rotation at offset {i} of the period is smaller than the period")
                break

    # A smaller suffix y at offset j first differing from x at position i yields
    # a length-i factor of x whose omega power beats the length-i prefix; every
    # prefix of length >= j+i holds both and so is not omega-Lyndon.
    for s in distinct_suffixes(x):
        if s.equal_to_x:
            continue
        if order.compare(s.word, x) == Comparison.LESS:
            i = first_mismatch(s.word, x)
            offer(s.offset + i - 1, f"suffix at offset {s.offset} is smaller, first mismatch at {i}")

    if best is None:
        raise ConstructionFailed("no smaller suffix found for a word that is not omega-Lyndon")
    return best


def classify_l1(
    x: EventuallyPeriodicWord, order: OrderLike, cap: int = 64, window_pad: int = 8
) -> L1Classification:
    order = as_order(order)
    if is_omega_lyndon_infinite(x, order):
        return L1Classification(L1Kind.IS_LYNDON)
    if x.is_purely_periodic and is_omega_lyndon_finite(x.period, order):
        return L1Classification(L1Kind.PERIODIC_POWER_OF_LYNDON, root=x.period)

    bound, why = _prefix_bound(x, order)
    if cap < bound:
        raise CapTooSmall(f"cap {cap} is below the certified prefix bound {bound}", bound)
    hi = min(cap, bound + 2 * len(x.period) + window_pad)
    for l in range(bound + 1, hi + 1):
        if is_omega_lyndon_finite(x.prefix(l), order):
            raise ConstructionFailed(f"prefix of length {l} is omega-Lyndon beyond the bound {bound} ({why})")
    return L1Classification(
        L1Kind.FINITELY_MANY_LYNDON_PREFIXES,
        bound=bound,
        window=(bound + 1, hi),
        lyndon_prefixes=omega_lyndon_prefixes(x, bound, order),
        certificate=why,
    )


# ---------------------------------------------------------------------------
# Extensions
# ---------------------------------------------------------------------------


def extend_to_infinite(w: Sequence[int], order: OrderLike) -> EventuallyPeriodicWord:
    """
    An infinite omega-Lyndon word with w as a prefix: w.(last letter)^w when w is
    unbordered, w.u^w for the longest border u otherwise. The result is verified
    before it is returned.
    """
    w = tuple(w)
    if len(w) < 2:
        raise InvalidInput("extension needs a word of length >= 2")
    order = as_order(order)
    verdict = is_omega_lyndon_finite(w, order)
    if not verdict:
        raise NotLyndon(f"word of length {len(w)} is not omega-Lyndon: {verdict.reason}")

    border = longest_border(w)
    x = normalize(w, border if border else w[-1:])
    if x.prefix(len(w)) != w:
        raise ConstructionFailed(f"extension does not start with the word of length {len(w)}")
    check = is_omega_lyndon_infinite(x, order)
    if not check:
        logger.warning("extension of {} with border {} is not omega-Lyndon: {}", w, border, check.reason)
        raise ConstructionFailed(f"extension is not omega-Lyndon: {check.reason}")
    return x


def extend_finite(w: Sequence[int], order: OrderLike, cap: int = 64) -> Word:
    """Shortest omega-Lyndon prefix of extend_to_infinite(w) that is longer than w."""
    w = tuple(w)
    x = extend_to_infinite(w, order)
    for l in range(len(w) + 1, max(cap, len(w)) + 1):
        candidate = x.prefix(l)
        if is_omega_lyndon_finite(candidate, order):
            return candidate
    raise CapExceeded(f"no longer omega-Lyndon prefix up to length {cap}", {"extension": x, "cap": cap})


# ---------------------------------------------------------------------------
# Minimal factors
# ---------------------------------------------------------------------------


def omega_minimal(factors: Iterable[Tuple[int, Word]], order: OrderLike) -> Tuple[int, Word]:
    """(first occurrence, factor) with the smallest omega power; ties keep the earlier one."""
    order = as_order(order)
    best: Optional[Tuple[int, Word]] = None
    for start, f in factors:
        if best is None or order.omega_compare(f, best[1]) == Comparison.LESS:
            best = (start, f)
    if best is None:
        raise InvalidInput("no factors to choose from")
    return best


def minimal_factor(x: EventuallyPeriodicWord, n: int, order: OrderLike) -> Word:
    return omega_minimal(iter_factors(x, n), order)[1]
