"""
Non-increasing omega-Lyndon factorizations.

Finite words factor uniquely as l1 l2 ... lk with each li omega-Lyndon and
l1^w >= l2^w >= ... >= lk^w. An eventually periodic infinite word x factors
uniquely in one of two shapes:

  FiniteShape   head factors followed by an infinite omega-Lyndon tail that is
                strictly smaller than the last head factor's omega power;
  InfiniteShape head factors followed by one repeating finite factor forever.
"""
from dataclasses import dataclass, field
from typing import List, NamedTuple, Sequence, Set, Tuple, Union

from loguru import logger

from .errors import CapExceeded, InvalidInput, UniquenessViolation
from .lyndon import (
    is_omega_lyndon_finite,
    is_omega_lyndon_infinite,
    longest_lyndon_suffix,
    omega_minimal,
)
from .orders import Comparison, OrderLike, as_order
from .words import EventuallyPeriodicWord, Word, iter_word_factors, normalize, omega, rotations


@dataclass(frozen=True)
class FiniteShape:
    head: Tuple[Word, ...]
    tail: EventuallyPeriodicWord

    @property
    def shape(self) -> str:
        return "finite"


@dataclass(frozen=True)
class InfiniteShape:
    head: Tuple[Word, ...]
    repeating: Word

    @property
    def shape(self) -> str:
        return "infinite"


OmegaLyndonFactorization = Union[FiniteShape, InfiniteShape]


def factorization_boundaries(factors: Sequence[Word]) -> List[int]:
    """Cumulative lengths 0, |l1|, |l1 l2|, ..."""
    out = [0]
    for f in factors:
        out.append(out[-1] + len(f))
    return out


def reconstruct(f: OmegaLyndonFactorization) -> EventuallyPeriodicWord:
    head: Word = tuple(a for factor in f.head for a in factor)
    if isinstance(f, FiniteShape):
        return normalize(head + f.tail.preperiod, f.tail.period)
    return normalize(head, f.repeating)


# ---------------------------------------------------------------------------
# Finite words
# ---------------------------------------------------------------------------


def factorize_finite(w: Sequence[int], order: OrderLike) -> List[Word]:
    """
    Peel the longest omega-Lyndon suffix until nothing is left.

    The last factor of the factorization is the longest omega-Lyndon suffix: a
    longer suffix s.lk, with s a suffix of some earlier li, has s^w >= li^w >= lk^w
    and so (s.lk)^w >= lk^w, which rules it out.
    """
    w = tuple(w)
    if not w:
        raise InvalidInput("factorize_finite needs a nonempty word")
    order = as_order(order)
    factors: List[Word] = []
    end = len(w)
    while end > 0:
        start = longest_lyndon_suffix(w[:end], order)
        factors.append(w[start:end])
        end = start
    factors.reverse()
    return factors


# ---------------------------------------------------------------------------
# Eventually periodic words
# ---------------------------------------------------------------------------


def _finite_shape_candidates(x: EventuallyPeriodicWord, order) -> List[FiniteShape]:
    # Suffixes at offsets >= |preperiod| are purely periodic, never omega-Lyndon.
    out: List[FiniteShape] = []
    for j in range(len(x.preperiod)):
        y = x.suffix(j)
        if not is_omega_lyndon_infinite(y, order):
            continue
        head = factorize_finite(x.preperiod[:j], order) if j else []
        if head and order.compare(omega(head[-1]), y) != Comparison.GREATER:
            continue
        logger.debug("finite-shape candidate: tail at offset {}", j)
        out.append(FiniteShape(tuple(head), y))
    return out


def _infinite_shape_candidates(x: EventuallyPeriodicWord, order, cap: int) -> List[InfiniteShape]:
    out: List[InfiniteShape] = []
    p, q = x.preperiod, x.period
    for t, rho in enumerate(rotations(q)):
        if not is_omega_lyndon_finite(rho, order):
            continue
        # From offset |p|+t on, x reads rho^w; try boundaries J in that residue class.
        for m in range(cap + 1):
            J = len(p) + t + m * len(q)
            prefix = x.prefix(J)
            if J:
                start = longest_lyndon_suffix(prefix, order)
                if order.omega_compare(prefix[start:], rho) == Comparison.LESS:
                    continue
                head = factorize_finite(prefix, order)
            else:
                head = []
            while head and head[-1] == rho:
                head.pop()
            logger.debug("infinite-shape candidate: rotation {} at J={} (m={})", t, J, m)
            out.append(InfiniteShape(tuple(head), rho))
            break
    return out


def factorize_ev_periodic(
    x: EventuallyPeriodicWord, order: OrderLike, cap: int = 64, exhaustive: bool = False
) -> OmegaLyndonFactorization:
    """
    The unique omega-Lyndon factorization of x.

    Finite-shape candidates (tail at an offset inside the preperiod) are collected
    first. A word with an omega-Lyndon suffix has no infinite factorization, so the
    infinite-shape search (omega-Lyndon rotation of the period, boundary searched
    over ``cap`` + 1 whole periods) only runs when no finite-shape candidate exists,
    or always with ``exhaustive=True``. Exactly one candidate must survive.
    """
    if cap < 1:
        raise InvalidInput(f"cap must be >= 1, got {cap}")
    order = as_order(order)
    candidates: List[OmegaLyndonFactorization] = list(_finite_shape_candidates(x, order))
    if exhaustive or not candidates:
        candidates.extend(_infinite_shape_candidates(x, order, cap))
    else:
        logger.debug("omega-Lyndon suffix found; infinite-shape search skipped")

    unique: List[OmegaLyndonFactorization] = []
    seen: Set[OmegaLyndonFactorization] = set()
    for c in candidates:
        if c not in seen:
            seen.add(c)
            unique.append(c)

    if not unique:
        logger.debug("no factorization candidate for {} within cap {}", x, cap)
        raise CapExceeded(
            f"no factorization found within {cap} periods",
            {"cap": cap, "preperiod_offsets": len(x.preperiod), "period": x.period},
        )
    if len(unique) > 1:
        logger.warning("{} factorization candidates for {}", len(unique), x)
        raise UniquenessViolation(f"{len(unique)} factorizations validated", unique)
    return unique[0]


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


class CertificateCheck(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


@dataclass
class FactorizationCertificate:
    checks: List[CertificateCheck] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CertificateCheck]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CertificateCheck(name, bool(passed), detail))


def validate_factorization(
    x: EventuallyPeriodicWord, f: OmegaLyndonFactorization, order: OrderLike
) -> FactorizationCertificate:
    order = as_order(order)
    cert = FactorizationCertificate()
    head = list(f.head)

    bad = [i for i, h in enumerate(head) if not h or not is_omega_lyndon_finite(h, order)]
    cert.add("head_factors_lyndon", not bad, f"factors {bad} are not omega-Lyndon" if bad else "")

    rising = [
        i for i in range(len(head) - 1) if order.omega_compare(head[i], head[i + 1]) == Comparison.LESS
    ]
    cert.add("head_non_increasing", not rising, f"factor pairs at {rising} increase" if rising else "")

    if isinstance(f, FiniteShape):
        tail = is_omega_lyndon_infinite(f.tail, order)
        cert.add("tail_lyndon", tail.is_lyndon, tail.reason)
        if head:
            c = order.compare(omega(head[-1]), f.tail)
            cert.add("last_head_above_tail", c == Comparison.GREATER, f"last head factor is {c.label}")
    else:
        rho = f.repeating
        ok = bool(rho) and is_omega_lyndon_finite(rho, order).is_lyndon
        cert.add("repeating_lyndon", ok, "" if ok else "repeating factor is not omega-Lyndon")
        if head and rho:
            c = order.omega_compare(head[-1], rho)
            cert.add("last_head_not_below_repeating", c != Comparison.LESS, f"last head factor is {c.label}")
            cert.add(
                "canonical_no_trailing_repeat",
                head[-1] != rho,
                "last head factor equals the repeating factor" if head[-1] == rho else "",
            )

    if isinstance(f, InfiniteShape) and not f.repeating:
        cert.add("reconstruction", False, "empty repeating factor")
    else:
        c = order.compare(reconstruct(f), x)
        cert.add("reconstruction", c == Comparison.EQUAL, "" if c == Comparison.EQUAL else "concatenation differs from x")
    return cert


# ---------------------------------------------------------------------------
# Boundaries from minimal factors
# ---------------------------------------------------------------------------


class Boundary(NamedTuple):
    n: int
    factor: Word
    boundary: int


def detect_boundaries(prefix: Sequence[int], order: OrderLike, n_max: int) -> List[Boundary]:
    """
    For each n <= n_max: the omega-minimal length-n factor of ``prefix`` and the
    length of the prefix preceding its first occurrence.

    For an aperiodic word whose infinite factorization has unbounded factor
    lengths, each such length is a cumulative factor boundary. On a finite
    prefix the minimal factor is provisional: a longer prefix may reveal a
    smaller one.
    """
    prefix = tuple(prefix)
    if not prefix:
        raise InvalidInput("detect_boundaries needs a nonempty prefix")
    if n_max < 1 or n_max > len(prefix) // 2:
        raise InvalidInput(f"n_max must be in 1..{len(prefix) // 2}, got {n_max}")
    order = as_order(order)
    out: List[Boundary] = []
    for n in range(1, n_max + 1):
        start, u = omega_minimal(iter_word_factors(prefix, n), order)
        out.append(Boundary(n, u, start))
    return out
