"""
Brute-force references and seeded instance generation for the acceptance suite.

Nothing here reuses the peeling, suffix-class or search code from ``core``: the
omega-Lyndon test is re-derived from the definition, the classical factorization
comes from Duval's scan, and comparisons can be cross-checked letter by letter
with naive_compare. These are only trusted at small scale.
"""
import itertools
from dataclasses import dataclass
from math import lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import InvalidInput, TooLarge
from core.orders import (
    AlphabetOrder,
    Comparison,
    OrderLike,
    PositionalOrderScheme,
    alternating_scheme,
    as_order,
    constant_scheme,
    format_scheme,
    random_ev_periodic,
)
from core.words import Alphabet, EventuallyPeriodicWord, Word, format_word

ENUMERATION_LIMIT = 16

Instance = Union[Word, EventuallyPeriodicWord, PositionalOrderScheme]


# ---------------------------------------------------------------------------
# Comparators and predicates from first principles
# ---------------------------------------------------------------------------


def _expand(x: EventuallyPeriodicWord, n: int) -> List[int]:
    letters = list(x.preperiod)
    while len(letters) < n:
        letters.extend(x.period)
    return letters[:n]


def naive_compare(
    x: EventuallyPeriodicWord, y: EventuallyPeriodicWord, scheme: PositionalOrderScheme
) -> Comparison:
    """Expand both words to max(preperiods) + lcm(periods) letters and scan."""
    n = max(len(x.preperiod), len(y.preperiod)) + lcm(len(x.period), len(y.period))
    for i, (a, b) in enumerate(zip(_expand(x, n), _expand(y, n))):
        if a != b:
            return Comparison.LESS if scheme.order_at(i + 1).precedes(a, b) else Comparison.GREATER
    return Comparison.EQUAL


def _is_lyndon(w: Word, order, cache: Dict[Word, bool]) -> bool:
    if w not in cache:
        cache[w] = all(order.omega_compare(w, w[j:]) == Comparison.LESS for j in range(1, len(w)))
    return cache[w]


def _non_increasing(parts: Sequence[Word], order) -> bool:
    return all(order.omega_compare(a, b) != Comparison.LESS for a, b in zip(parts, parts[1:]))


def _split(w: Word, mask: int) -> List[Word]:
    parts, start = [], 0
    for i in range(1, len(w)):
        if mask >> (i - 1) & 1:
            parts.append(w[start:i])
            start = i
    parts.append(w[start:])
    return parts


def enumerate_factorizations(
    w: Sequence[int], order: OrderLike, limit: int = ENUMERATION_LIMIT
) -> List[List[Word]]:
    """Every split of w into omega-Lyndon parts with non-increasing omega powers."""
    w = tuple(w)
    if not w:
        raise InvalidInput("enumerate_factorizations needs a nonempty word")
    if len(w) > limit:
        raise TooLarge(f"enumeration is exponential; |w|={len(w)} exceeds the guard {limit}")
    order = as_order(order)
    cache: Dict[Word, bool] = {}
    survivors = []
    for mask in range(2 ** (len(w) - 1)):
        parts = _split(w, mask)
        if all(_is_lyndon(p, order, cache) for p in parts) and _non_increasing(parts, order):
            survivors.append(parts)
    return survivors


def duval_factorize(w: Sequence[int], base_order: AlphabetOrder) -> List[Word]:
    """Chen-Fox-Lyndon factorization under a single alphabet order (Duval's scan)."""
    w = tuple(w)
    if not w:
        raise InvalidInput("duval_factorize needs a nonempty word")
    rank = [base_order.rank[a] for a in w]
    n = len(w)
    factors: List[Word] = []
    k = 0
    while k < n:
        i, j = k, k + 1
        while j < n and rank[i] <= rank[j]:
            i = k if rank[i] < rank[j] else i + 1
            j += 1
        while k <= i:
            factors.append(w[k : k + j - i])
            k += j - i
    return factors


def shortest_factorization(w: Sequence[int], order: OrderLike) -> List[Word]:
    """
    Fewest omega-Lyndon factors, no ordering constraint between them. Among
    equally short splits the last factor starts as early as possible.
    """
    w = tuple(w)
    if not w:
        raise InvalidInput("shortest_factorization needs a nonempty word")
    order = as_order(order)
    cache: Dict[Word, bool] = {}
    n = len(w)
    best: List[Optional[int]] = [0] + [None] * n
    back = [0] * (n + 1)
    for end in range(1, n + 1):
        for start in range(end):
            if best[start] is None or not _is_lyndon(w[start:end], order, cache):
                continue
            if best[end] is None or best[start] + 1 < best[end]:
                best[end] = best[start] + 1
                back[end] = start
    parts: List[Word] = []
    end = n
    while end > 0:
        parts.append(w[back[end] : end])
        end = back[end]
    parts.reverse()
    return parts


def prefix_factorization_search(
    x: EventuallyPeriodicWord, order: OrderLike, k_max: int, part_max: int
) -> Iterator[Tuple[Word, ...]]:
    """Decompositions u1..uk (k <= k_max, |ui| <= part_max) of prefixes of x with u1^w >= u2^w >= ..."""
    if k_max < 1 or part_max < 1:
        raise InvalidInput("k_max and part_max must be >= 1")
    order = as_order(order)
    letters = x.prefix(k_max * part_max)

    def walk(pos: int, parts: Tuple[Word, ...]) -> Iterator[Tuple[Word, ...]]:
        if parts:
            yield parts
        if len(parts) == k_max:
            return
        for length in range(1, part_max + 1):
            u = letters[pos : pos + length]
            if parts and order.omega_compare(parts[-1], u) == Comparison.LESS:
                continue
            yield from walk(pos + length, parts + (u,))

    return walk(0, ())


# ---------------------------------------------------------------------------
# Seeded instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InstanceGenerator:
    seed: int = 0
    alphabet_size: int = 2
    min_length: int = 1
    max_length: int = 6
    max_preperiod: int = 4
    max_period: int = 4
    max_scheme_preperiod: int = 1
    max_scheme_cycle: int = 3

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise InvalidInput(f"alphabet_size must be >= 1, got {self.alphabet_size}")
        if not 1 <= self.min_length <= self.max_length:
            raise InvalidInput(f"need 1 <= min_length <= max_length, got {self.min_length}..{self.max_length}")
        if self.max_preperiod < 0 or self.max_period < 1:
            raise InvalidInput("need max_preperiod >= 0 and max_period >= 1")
        if self.max_scheme_preperiod < 0 or self.max_scheme_cycle < 1:
            raise InvalidInput("need max_scheme_preperiod >= 0 and max_scheme_cycle >= 1")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def random_word(rng: np.random.Generator, k: int, min_length: int, max_length: int) -> Word:
    n = int(rng.integers(min_length, max_length + 1))
    return tuple(int(a) for a in rng.integers(0, k, size=n))


def random_scheme(
    rng: np.random.Generator, k: int, max_preperiod: int = 1, max_cycle: int = 3
) -> PositionalOrderScheme:
    def one() -> AlphabetOrder:
        return AlphabetOrder(tuple(int(a) for a in rng.permutation(k)))

    pre = tuple(one() for _ in range(int(rng.integers(0, max_preperiod + 1))))
    cycle = tuple(one() for _ in range(int(rng.integers(1, max_cycle + 1))))
    return PositionalOrderScheme(pre, cycle)


def generate(gen: InstanceGenerator, count: Optional[int] = None) -> Iterator[Instance]:
    """
    The constant scheme, the alternating scheme (k >= 2), then rounds of
    (finite word, eventually periodic word, random scheme). Same generator,
    same stream.
    """
    k = gen.alphabet_size
    rng = gen.rng()

    def stream() -> Iterator[Instance]:
        yield constant_scheme(k)
        if k >= 2:
            yield alternating_scheme(k)
        while True:
            yield random_word(rng, k, gen.min_length, gen.max_length)
            yield random_ev_periodic(rng, k, gen.max_preperiod, gen.max_period)
            yield random_scheme(rng, k, gen.max_scheme_preperiod, gen.max_scheme_cycle)

    if count is None:
        return stream()
    return itertools.islice(stream(), count)


def render_instance(instance: Instance, alphabet: Alphabet) -> str:
    """Golden-file line: kind tag, a space, then the literal."""
    if isinstance(instance, PositionalOrderScheme):
        return f"scheme {format_scheme(instance, alphabet)}"
    if isinstance(instance, EventuallyPeriodicWord):
        return f"infinite {format_word(instance, alphabet)}"
    return f"word {format_word(instance, alphabet)}"


def golden_lines(seed: int = 1, count: int = 30, alphabet_size: int = 2, max_length: int = 6) -> List[str]:
    gen = InstanceGenerator(seed=seed, alphabet_size=alphabet_size, max_length=max_length)
    alphabet = Alphabet.default(alphabet_size)
    return [render_instance(inst, alphabet) for inst in generate(gen, count)]
