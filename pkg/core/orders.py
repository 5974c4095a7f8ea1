"""
Total orders on infinite words that satisfy the lexicographic-like condition:
for equal-length u, v, u^w < v^w forces u.x < v.y for all tails x, y.

PositionalOrderScheme is the concrete family (one alphabet order per position,
eventually periodic in the position). OmegaOrder is the comparator contract
the rest of the library is written against; validate_star checks a comparator
against the condition empirically.
"""
import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import IntEnum
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from .errors import InvalidInput, ParseError
from .words import Alphabet, EventuallyPeriodicWord, Word, concat, normalize, omega


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def label(self) -> str:
        return self.name.capitalize()


@dataclass(frozen=True)
class AlphabetOrder:
    """A total order on letters, listed from smallest to largest."""

    ranking: Tuple[int, ...]
    rank: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ranking = tuple(self.ranking)
        object.__setattr__(self, "ranking", ranking)
        if sorted(ranking) != list(range(len(ranking))) or not ranking:
            raise InvalidInput(f"alphabet order must be a permutation of 0..k-1, got {ranking}")
        rank = [0] * len(ranking)
        for r, a in enumerate(ranking):
            rank[a] = r
        object.__setattr__(self, "rank", tuple(rank))

    @classmethod
    def identity(cls, k: int) -> "AlphabetOrder":
        return cls(tuple(range(k)))

    @classmethod
    def reversed(cls, k: int) -> "AlphabetOrder":
        return cls(tuple(range(k - 1, -1, -1)))

    @property
    def size(self) -> int:
        return len(self.ranking)

    def precedes(self, a: int, b: int) -> bool:
        return self.rank[a] < self.rank[b]


@dataclass(frozen=True)
class PositionalOrderScheme:
    """Eventually periodic sequence of alphabet orders, indexed from position 1."""

    preperiod_orders: Tuple[AlphabetOrder, ...]
    cycle_orders: Tuple[AlphabetOrder, ...]

    def __post_init__(self):
        pre, cyc = tuple(self.preperiod_orders), tuple(self.cycle_orders)
        object.__setattr__(self, "preperiod_orders", pre)
        object.__setattr__(self, "cycle_orders", cyc)
        if not cyc:
            raise InvalidInput("order scheme needs a nonempty cycle")
        sizes = {o.size for o in pre + cyc}
        if len(sizes) != 1:
            raise InvalidInput(f"all orders of a scheme must share one alphabet, got sizes {sorted(sizes)}")

    @property
    def alphabet_size(self) -> int:
        return self.cycle_orders[0].size

    def order_at(self, i: int) -> AlphabetOrder:
        """Order used when the first mismatch is at 1-based position i."""
        if i < 1:
            raise InvalidInput(f"positions start at 1, got {i}")
        pre = self.preperiod_orders
        if i <= len(pre):
            return pre[i - 1]
        return self.cycle_orders[(i - 1 - len(pre)) % len(self.cycle_orders)]

    def decide(self, i: int, a: int, b: int) -> Comparison:
        """Outcome for a first mismatch at position i with letters a (left) and b (right)."""
        return Comparison.LESS if self.order_at(i).precedes(a, b) else Comparison.GREATER


def constant_scheme(k: int) -> PositionalOrderScheme:
    """The classical lexicographic order 0 < 1 < ... < k-1 at every position."""
    return PositionalOrderScheme((), (AlphabetOrder.identity(k),))


def alternating_scheme(k: int) -> PositionalOrderScheme:
    """Natural order at odd positions, reversed order at even positions."""
    return PositionalOrderScheme((), (AlphabetOrder.identity(k), AlphabetOrder.reversed(k)))


# ---------------------------------------------------------------------------
# Comparators
# ---------------------------------------------------------------------------


def _check_letters(w: Sequence[int], k: int) -> None:
    for a in w:
        if not 0 <= a < k:
            raise InvalidInput(f"letter index {a} outside the scheme's alphabet of size {k}")


def first_mismatch(x: EventuallyPeriodicWord, y: EventuallyPeriodicWord) -> Optional[int]:
    """1-based position of the first differing letter, None when x == y."""
    if x == y:
        return None
    bound = max(len(x.preperiod), len(y.preperiod)) + lcm(len(x.period), len(y.period))
    for i in range(bound):
        if x.letter_at(i) != y.letter_at(i):
            return i + 1
    raise AssertionError(f"distinct canonical words {x} and {y} agree on {bound} letters")


def compare_ev_periodic(
    x: EventuallyPeriodicWord, y: EventuallyPeriodicWord, scheme: PositionalOrderScheme
) -> Comparison:
    k = scheme.alphabet_size
    for w in (x.preperiod, x.period, y.preperiod, y.period):
        _check_letters(w, k)
    pos = first_mismatch(x, y)
    if pos is None:
        return Comparison.EQUAL
    return scheme.decide(pos, x.letter_at(pos - 1), y.letter_at(pos - 1))


def omega_compare_finite(u: Sequence[int], v: Sequence[int], scheme: PositionalOrderScheme) -> Comparison:
    """Compare u^w with v^w."""
    if not u or not v:
        raise InvalidInput("omega comparison needs nonempty words")
    k = scheme.alphabet_size
    _check_letters(u, k)
    _check_letters(v, k)
    nu, nv = len(u), len(v)
    # u^w and v^w are equal once they agree on |u|+|v| letters.
    for i in range(nu + nv):
        a, b = u[i % nu], v[i % nv]
        if a != b:
            return scheme.decide(i + 1, a, b)
    return Comparison.EQUAL


class OmegaOrder(ABC):
    """
    Comparator contract for total orders on eventually periodic words.

    Implementations must be total and antisymmetric, return EQUAL exactly for
    identical canonical values, and satisfy the lexicographic-like condition.
    None of this is checked statically; see validate_star. Implementations are
    expected to be safe for concurrent read-only use.
    """

    @abstractmethod
    def compare(self, x: EventuallyPeriodicWord, y: EventuallyPeriodicWord) -> Comparison:
        ...

    def omega_compare(self, u: Sequence[int], v: Sequence[int]) -> Comparison:
        """Compare u^w with v^w."""
        return self.compare(omega(u), omega(v))

    def less(self, x: EventuallyPeriodicWord, y: EventuallyPeriodicWord) -> bool:
        return self.compare(x, y) == Comparison.LESS


@dataclass(frozen=True)
class PositionalOrder(OmegaOrder):
    """OmegaOrder induced by a positional scheme."""

    scheme: PositionalOrderScheme

    def compare(self, x: EventuallyPeriodicWord, y: EventuallyPeriodicWord) -> Comparison:
        return compare_ev_periodic(x, y, self.scheme)

    def omega_compare(self, u: Sequence[int], v: Sequence[int]) -> Comparison:
        return omega_compare_finite(u, v, self.scheme)


OrderLike = Union[OmegaOrder, PositionalOrderScheme]


def as_order(order: OrderLike) -> OmegaOrder:
    if isinstance(order, PositionalOrderScheme):
        return PositionalOrder(order)
    if isinstance(order, OmegaOrder):
        return order
    raise InvalidInput(f"expected an OmegaOrder or PositionalOrderScheme, got {type(order).__name__}")


# ---------------------------------------------------------------------------
# Scheme literals: "ab", "ab,ba", "ab|ba,ab"
# ---------------------------------------------------------------------------


def _parse_orders(text: str, start: int, end: int, alphabet: Alphabet) -> List[AlphabetOrder]:
    orders: List[AlphabetOrder] = []
    pos = start
    for chunk in text[start:end].split(","):
        if len(chunk) != alphabet.size:
            raise ParseError(
                f"order {chunk!r} must list all {alphabet.size} alphabet symbols", text, pos
            )
        ranking = []
        for offset, ch in enumerate(chunk):
            if ch not in alphabet.symbols:
                raise ParseError(f"unknown letter {ch!r} in order", text, pos + offset)
            idx = alphabet.symbols.index(ch)
            if idx in ranking:
                raise ParseError(f"letter {ch!r} repeated in order", text, pos + offset)
            ranking.append(idx)
        orders.append(AlphabetOrder(tuple(ranking)))
        pos += len(chunk) + 1
    return orders


def parse_scheme(text: str, alphabet: Alphabet) -> PositionalOrderScheme:
    bar = text.find("|")
    if bar >= 0 and text.find("|", bar + 1) >= 0:
        raise ParseError("at most one '|' is allowed", text, text.find("|", bar + 1))
    if bar < 0:
        pre: List[AlphabetOrder] = []
        cycle_start = 0
    else:
        pre = _parse_orders(text, 0, bar, alphabet) if bar > 0 else []
        cycle_start = bar + 1
    if cycle_start >= len(text):
        raise ParseError("order scheme needs a nonempty cycle", text, len(text))
    cycle = _parse_orders(text, cycle_start, len(text), alphabet)
    return PositionalOrderScheme(tuple(pre), tuple(cycle))


def format_scheme(scheme: PositionalOrderScheme, alphabet: Alphabet) -> str:
    def fmt(orders: Sequence[AlphabetOrder]) -> str:
        return ",".join(alphabet.render(o.ranking) for o in orders)

    cycle = fmt(scheme.cycle_orders)
    if scheme.preperiod_orders:
        return f"{fmt(scheme.preperiod_orders)}|{cycle}"
    return cycle


# ---------------------------------------------------------------------------
# Empirical check of the lexicographic-like condition
# ---------------------------------------------------------------------------


@dataclass
class StarCounterexample:
    u: Word
    v: Word
    x: EventuallyPeriodicWord
    y: EventuallyPeriodicWord


@dataclass
class ValidationReport:
    passed: bool
    pairs_checked: int = 0
    tails_checked: int = 0
    triples_checked: int = 0
    counterexample: Optional[StarCounterexample] = None
    axiom_failures: List[str] = field(default_factory=list)


def random_ev_periodic(
    rng: np.random.Generator, k: int, max_preperiod: int = 4, max_period: int = 4
) -> EventuallyPeriodicWord:
    p_len = int(rng.integers(0, max_preperiod + 1))
    q_len = int(rng.integers(1, max_period + 1))
    p = tuple(int(a) for a in rng.integers(0, k, size=p_len))
    q = tuple(int(a) for a in rng.integers(0, k, size=q_len))
    return normalize(p, q)


def axiom_failures(order: OmegaOrder, words: Sequence[EventuallyPeriodicWord]) -> List[str]:
    failures: List[str] = []
    for a in words:
        if order.compare(a, a) != Comparison.EQUAL:
            failures.append(f"reflexivity: {a} vs itself")
    for a, b in itertools.permutations(words, 2):
        ab, ba = order.compare(a, b), order.compare(b, a)
        if int(ab) != -int(ba):
            failures.append(f"antisymmetry: {a} vs {b} gives {ab.label}/{ba.label}")
        if (ab == Comparison.EQUAL) != (a == b):
            failures.append(f"equality: {a} vs {b} gives {ab.label}")
    for a, b, c in itertools.permutations(words, 3):
        if order.less(a, b) and order.less(b, c) and not order.less(a, c):
            failures.append(f"transitivity: {a} < {b} < {c} but not {a} < {c}")
    return failures


def validate_star(
    order: OrderLike,
    alphabet_size: int,
    n_max: int,
    tail_samples: int = 16,
    rng_seed: int = 0,
    triples: int = 200,
    max_preperiod: int = 4,
    max_period: int = 4,
) -> ValidationReport:
    """
    Check the lexicographic-like condition for every n <= n_max and every pair
    u != v in A^n with u^w < v^w: u.x < v.y must hold for the tails
    (u^w, v^w), (v^w, u^w) and ``tail_samples`` random eventually periodic pairs.
    Then sample ``triples`` random triples for reflexivity, antisymmetry,
    equality and transitivity. Stops at the first counterexample.
    """
    if n_max < 1:
        raise InvalidInput(f"n_max must be >= 1, got {n_max}")
    if alphabet_size < 1:
        raise InvalidInput(f"alphabet size must be >= 1, got {alphabet_size}")
    order = as_order(order)
    rng = np.random.default_rng(rng_seed)
    report = ValidationReport(passed=True)

    def tail() -> EventuallyPeriodicWord:
        return random_ev_periodic(rng, alphabet_size, max_preperiod, max_period)

    for n in range(1, n_max + 1):
        words = list(itertools.product(range(alphabet_size), repeat=n))
        for u, v in itertools.permutations(words, 2):
            if order.omega_compare(u, v) != Comparison.LESS:
                continue
            report.pairs_checked += 1
            tails = [(omega(u), omega(v)), (omega(v), omega(u))]
            tails.extend((tail(), tail()) for _ in range(tail_samples))
            for x, y in tails:
                report.tails_checked += 1
                if order.compare(concat(u, x), concat(v, y)) != Comparison.LESS:
                    logger.debug("condition fails for u={} v={} x={} y={}", u, v, x, y)
                    report.passed = False
                    report.counterexample = StarCounterexample(u, v, x, y)
                    return report

    for _ in range(triples):
        trio = [tail(), tail(), tail()]
        report.triples_checked += 1
        failures = axiom_failures(order, trio)
        if failures:
            report.passed = False
            report.axiom_failures.extend(failures)
            logger.debug("order axioms fail: {}", failures[0])
            return report
    return report
