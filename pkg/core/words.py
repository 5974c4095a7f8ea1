"""
Words: finite words, eventually periodic infinite words and classical word
combinatorics (borders, primitive roots, rotations, suffix classes).

Letters are alphabet indices. Characters only appear at the literal boundary
(parse_word / format_word), so orders are permutations of indices.

An eventually periodic word p.q^w is always stored in canonical form: the period
is primitive and the preperiod cannot be shortened (it is empty or its last
letter differs from the period's last letter). Two canonical values denote the
same infinite word iff they are field-wise identical.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Set, Tuple, Union

from .errors import InvalidInput, ParseError

Word = Tuple[int, ...]

RESERVED = frozenset("()|, ")
DEFAULT_SYMBOLS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct printable symbols; index i is letter i."""

    symbols: Tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise InvalidInput("alphabet must contain at least one symbol")
        if len(set(symbols)) != len(symbols):
            raise InvalidInput(f"alphabet symbols must be distinct: {''.join(symbols)!r}")
        for s in symbols:
            if len(s) != 1 or not s.isprintable() or s in RESERVED:
                raise InvalidInput(f"invalid alphabet symbol {s!r}")

    @classmethod
    def from_string(cls, text: str) -> "Alphabet":
        return cls(tuple(text))

    @classmethod
    def default(cls, size: int) -> "Alphabet":
        if not 1 <= size <= len(DEFAULT_SYMBOLS):
            raise InvalidInput(f"default alphabet size must be in 1..{len(DEFAULT_SYMBOLS)}, got {size}")
        return cls(tuple(DEFAULT_SYMBOLS[:size]))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise InvalidInput(f"symbol {symbol!r} is not in alphabet {''.join(self.symbols)!r}") from None

    def render(self, w: Sequence[int]) -> str:
        return "".join(self.symbols[a] for a in w)

    def check(self, w: Sequence[int]) -> None:
        for a in w:
            if not 0 <= a < self.size:
                raise InvalidInput(f"letter index {a} outside alphabet of size {self.size}")


# ---------------------------------------------------------------------------
# Finite word combinatorics
# ---------------------------------------------------------------------------


def failure_function(w: Sequence[int]) -> List[int]:
    """KMP table: entry i is the length of the longest proper border of w[:i+1]."""
    pi = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k > 0 and w[i] != w[k]:
            k = pi[k - 1]
        if w[i] == w[k]:
            k += 1
        pi[i] = k
    return pi


def longest_border(w: Sequence[int]) -> Word:
    """Longest proper word that is both a prefix and a suffix of w (maybe empty)."""
    if not w:
        raise InvalidInput("longest_border needs a nonempty word")
    w = tuple(w)
    return w[: failure_function(w)[-1]]


def primitive_root(w: Sequence[int]) -> Tuple[Word, int]:
    """Return (root, exponent) with w = root^exponent and root primitive."""
    if not w:
        raise InvalidInput("primitive_root needs a nonempty word")
    w = tuple(w)
    n = len(w)
    p = n - failure_function(w)[-1]
    if n % p == 0:
        return w[:p], n // p
    return w, 1


def is_primitive(w: Sequence[int]) -> bool:
    return primitive_root(w)[1] == 1


def rotations(w: Sequence[int]) -> List[Word]:
    """Cyclic rotations of w; entry t starts at offset t."""
    w = tuple(w)
    return [w[t:] + w[:t] for t in range(len(w))]


def _distinct_windows(letters: Sequence[int], n: int, last_start: int) -> Iterator[Tuple[int, Word]]:
    seen: Set[Word] = set()
    for start in range(0, last_start + 1):
        f = tuple(letters[start : start + n])
        if f not in seen:
            seen.add(f)
            yield start, f


def iter_word_factors(w: Sequence[int], n: int) -> Iterator[Tuple[int, Word]]:
    """Distinct length-n factors of a finite word, each at its first occurrence."""
    if n < 1:
        raise InvalidInput(f"factor length must be >= 1, got {n}")
    return _distinct_windows(tuple(w), n, len(w) - n)


# ---------------------------------------------------------------------------
# Eventually periodic words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EventuallyPeriodicWord:
    """The infinite word preperiod . period^w, in canonical form."""

    preperiod: Word
    period: Word

    def __post_init__(self):
        p, q = tuple(self.preperiod), tuple(self.period)
        object.__setattr__(self, "preperiod", p)
        object.__setattr__(self, "period", q)
        if not q:
            raise InvalidInput("period must be nonempty")
        if not is_primitive(q):
            raise InvalidInput("period must be primitive; build values with normalize()")
        if p and p[-1] == q[-1]:
            raise InvalidInput("preperiod is not minimal; build values with normalize()")

    @property
    def is_purely_periodic(self) -> bool:
        return not self.preperiod

    @property
    def spine_length(self) -> int:
        """|preperiod| + |period|: every distinct suffix starts before this offset."""
        return len(self.preperiod) + len(self.period)

    def letter_at(self, i: int) -> int:
        """Letter at 0-based index i."""
        p = self.preperiod
        if i < len(p):
            return p[i]
        return self.period[(i - len(p)) % len(self.period)]

    def prefix(self, n: int) -> Word:
        return tuple(self.letter_at(i) for i in range(n))

    def suffix(self, j: int) -> "EventuallyPeriodicWord":
        """The word obtained by dropping the first j letters."""
        p, q = self.preperiod, self.period
        if j <= len(p):
            return normalize(p[j:], q)
        r = (j - len(p)) % len(q)
        return EventuallyPeriodicWord((), q[r:] + q[:r])


def normalize(preperiod: Sequence[int], period: Sequence[int]) -> EventuallyPeriodicWord:
    """Canonical representative of preperiod . period^w."""
    if not period:
        raise InvalidInput("period must be nonempty")
    q, _ = primitive_root(period)
    p = tuple(preperiod)
    while p and p[-1] == q[-1]:
        p = p[:-1]
        q = (q[-1],) + q[:-1]
    return EventuallyPeriodicWord(p, q)


def omega(u: Sequence[int]) -> EventuallyPeriodicWord:
    """u^w as a canonical value."""
    if not u:
        raise InvalidInput("omega power of the empty word is undefined")
    return normalize((), u)


def concat(u: Sequence[int], x: EventuallyPeriodicWord) -> EventuallyPeriodicWord:
    """The infinite word u.x."""
    return normalize(tuple(u) + x.preperiod, x.period)


class Suffix(NamedTuple):
    offset: int
    word: EventuallyPeriodicWord
    equal_to_x: bool


def distinct_suffixes(x: EventuallyPeriodicWord) -> List[Suffix]:
    """
    Distinct proper suffixes of x, each reported at its smallest offset.

    Offsets j and j+|period| give the same suffix once j >= |preperiod|, so
    offsets 1..|preperiod|+|period| cover every suffix. A purely periodic x has
    itself among its proper suffixes; that entry carries equal_to_x=True.
    """
    seen: Set[EventuallyPeriodicWord] = set()
    out: List[Suffix] = []
    for j in range(1, x.spine_length + 1):
        s = x.suffix(j)
        if s in seen:
            continue
        seen.add(s)
        out.append(Suffix(j, s, s == x))
    return out


def iter_factors(x: EventuallyPeriodicWord, n: int) -> Iterator[Tuple[int, Word]]:
    """Distinct length-n factors of x, each at its first occurrence."""
    if n < 1:
        raise InvalidInput(f"factor length must be >= 1, got {n}")
    q = len(x.period)
    repeats = -(-(n + q) // q) + 1
    window = x.preperiod + x.period * repeats
    return _distinct_windows(window, n, x.spine_length - 1)


def factors_of_length(x: EventuallyPeriodicWord, n: int) -> Set[Word]:
    return {f for _, f in iter_factors(x, n)}


# ---------------------------------------------------------------------------
# Literals
# ---------------------------------------------------------------------------


def _parse_letters(text: str, start: int, end: int, alphabet: Alphabet, source: str) -> Word:
    out = []
    for pos in range(start, end):
        ch = text[pos]
        if ch not in alphabet.symbols:
            raise ParseError(f"unknown letter {ch!r} in {source}", text, pos)
        out.append(alphabet.symbols.index(ch))
    return tuple(out)


def parse_word(text: str, alphabet: Alphabet) -> Union[Word, EventuallyPeriodicWord]:
    """Parse ``abba`` (finite) or ``p(q)`` (eventually periodic, canonicalized)."""
    open_at = text.find("(")
    if open_at < 0:
        close_at = text.find(")")
        if close_at >= 0:
            raise ParseError("unexpected ')'", text, close_at)
        return _parse_letters(text, 0, len(text), alphabet, "word")

    close_at = text.find(")", open_at)
    if close_at < 0:
        raise ParseError("missing ')'", text, len(text))
    if close_at != len(text) - 1:
        raise ParseError("text after ')'", text, close_at + 1)
    if close_at == open_at + 1:
        raise ParseError("empty period", text, close_at)
    pre = _parse_letters(text, 0, open_at, alphabet, "preperiod")
    per = _parse_letters(text, open_at + 1, close_at, alphabet, "period")
    return normalize(pre, per)


def parse_finite(text: str, alphabet: Alphabet) -> Word:
    w = parse_word(text, alphabet)
    if isinstance(w, EventuallyPeriodicWord):
        raise ParseError("expected a finite word", text, text.find("("))
    return w


def parse_infinite(text: str, alphabet: Alphabet) -> EventuallyPeriodicWord:
    w = parse_word(text, alphabet)
    if not isinstance(w, EventuallyPeriodicWord):
        raise ParseError("expected an eventually periodic word p(q)", text, len(text))
    return w


def format_word(w: Union[Sequence[int], EventuallyPeriodicWord], alphabet: Alphabet) -> str:
    if isinstance(w, EventuallyPeriodicWord):
        return f"{alphabet.render(w.preperiod)}({alphabet.render(w.period)})"
    return alphabet.render(w)


def infer_alphabet(literals: Iterable[str]) -> Alphabet:
    """Sorted union of the letters used in the given literals."""
    letters = sorted({ch for text in literals for ch in text if ch not in RESERVED})
    if not letters:
        raise InvalidInput("cannot infer an alphabet from empty literals")
    return Alphabet(tuple(letters))
