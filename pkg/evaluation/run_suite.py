"""
Acceptance suite for omega_lyndon.

Runs the nine acceptance criteria (vectors, oracle cross-checks and property
sweeps) at a configurable scale and writes a JSON summary plus a markdown
report. Scale 1.0 is the full desk-scale run; the test suite uses a small
fraction of it.

Run:
  python -m evaluation.run_suite --scale 1.0 --seed 0 --out_dir outputs
"""

from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from loguru import logger
from tqdm import tqdm

from core.errors import ConstructionFailed, OmegaLyndonError
from core.factorize import (
    FiniteShape,
    detect_boundaries,
    factorization_boundaries,
    factorize_ev_periodic,
    factorize_finite,
    validate_factorization,
)
from core.log import configure_logging
from core.lyndon import (
    L1Kind,
    classify_l1,
    extend_to_infinite,
    is_omega_lyndon_finite,
    is_omega_lyndon_infinite,
    omega_lyndon_prefixes,
)
from core.orders import (
    Comparison,
    PositionalOrder,
    PositionalOrderScheme,
    alternating_scheme,
    axiom_failures,
    compare_ev_periodic,
    constant_scheme,
    omega_compare_finite,
    random_ev_periodic,
    validate_star,
)
from core.words import (
    Alphabet,
    EventuallyPeriodicWord,
    concat,
    distinct_suffixes,
    normalize,
    omega,
    parse_finite,
    parse_infinite,
)
from evaluation.oracle import (
    duval_factorize,
    enumerate_factorizations,
    naive_compare,
    random_scheme,
    random_word,
)
from services.runtime import get_settings
from storage.report_exporter import ReportExporter

MAX_EXAMPLES = 5
EXHAUSTIVE_CAP = 8


@dataclass
class CriterionResult:
    number: int
    title: str
    checked: int = 0
    failures: int = 0
    seconds: float = 0.0
    examples: List[str] = field(default_factory=list)
    notes: Dict[str, Any] = field(default_factory=dict)

    def fail(self, message: str) -> None:
        self.failures += 1
        if len(self.examples) < MAX_EXAMPLES:
            self.examples.append(message)
        logger.debug("criterion {}: {}", self.number, message)

    def check(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.fail(message)


def _count(full: int, scale: float) -> int:
    return max(1, int(round(full * scale)))


def _length(full: int, scale: float, floor: int = 3) -> int:
    return max(floor, min(full, int(round(full * scale))))


def _progress(it, desc: str, enabled: bool, total: Optional[int] = None):
    return tqdm(it, desc=desc, total=total, disable=not enabled, leave=False)


def _binary_schemes(rng: np.random.Generator) -> List[PositionalOrderScheme]:
    return [constant_scheme(2), alternating_scheme(2), random_scheme(rng, 2), random_scheme(rng, 2)]


def _mixed_schemes(rng: np.random.Generator) -> List[PositionalOrderScheme]:
    out: List[PositionalOrderScheme] = []
    for k in (2, 3):
        out.extend([constant_scheme(k), alternating_scheme(k), random_scheme(rng, k)])
    return out


def _sign(c: Comparison) -> int:
    return int(c)


# ---------------------------------------------------------------------------
# 1. Fixed vectors
# ---------------------------------------------------------------------------


def criterion_vectors(scale: float = 1.0, seed: int = 0, progress: bool = False) -> CriterionResult:
    res = CriterionResult(1, "Fixed vectors under the alternating order")
    ab = Alphabet.from_string("ab")
    alt = alternating_scheme(2)

    def w(s: str):
        return parse_finite(s, ab)

    def x(s: str):
        return parse_infinite(s, ab)

    def lyn(s: str) -> bool:
        return is_omega_lyndon_finite(w(s), alt).is_lyndon

    vectors: List[tuple] = [
        ("abba is omega-Lyndon", lambda: lyn("abba")),
        ("b is omega-Lyndon", lambda: lyn("b")),
        ("(abba)^w < b^w", lambda: omega_compare_finite(w("abba"), w("b"), alt) == Comparison.LESS),
        ("abbab is not omega-Lyndon", lambda: not lyn("abbab")),
        ("ababa is omega-Lyndon", lambda: lyn("ababa")),
        ("factorize(ababab) = ab.ab.ab", lambda: factorize_finite(w("ababab"), alt) == [w("ab")] * 3),
        ("ababab = ababa.b with both factors omega-Lyndon", lambda: lyn("ababa") and lyn("b")),
        ("factorize(abbab) = abb.ab", lambda: factorize_finite(w("abbab"), alt) == [w("abb"), w("ab")]),
        ("normalize(abb, ab) = ab(ba)", lambda: normalize(w("abb"), w("ab")) == x("ab(ba)")),
        ("ab(ba) > a(ba)", lambda: compare_ev_periodic(x("ab(ba)"), x("a(ba)"), alt) == Comparison.GREATER),
        ("ab(a) is omega-Lyndon", lambda: is_omega_lyndon_infinite(x("ab(a)"), alt).is_lyndon),
        (
            "factorize((ba)) = b then (ab) forever",
            lambda: _infinite_shape(factorize_ev_periodic(x("(ba)"), alt), [w("b")], w("ab")),
        ),
        ("extend(abba) = abba(a)", lambda: extend_to_infinite(w("abba"), alt) == x("abba(a)")),
        (
            "banana under a<b<n",
            lambda: factorize_finite(parse_finite("banana", Alphabet.from_string("abn")), constant_scheme(3))
            == [(1,), (0, 2), (0, 2), (0,)],
        ),
    ]
    for label, fn in vectors:
        try:
            ok = bool(fn())
        except OmegaLyndonError as exc:
            ok = False
            label = f"{label} ({type(exc).__name__}: {exc})"
        res.check(ok, label)
    return res


def _infinite_shape(f, head, repeating) -> bool:
    return not isinstance(f, FiniteShape) and list(f.head) == head and f.repeating == repeating


# ---------------------------------------------------------------------------
# 2. Uniqueness of the finite factorization
# ---------------------------------------------------------------------------


def criterion_uniqueness(scale: float = 1.0, seed: int = 0, progress: bool = False) -> CriterionResult:
    res = CriterionResult(2, "Finite factorization is unique (exhaustive enumeration)")
    rng = np.random.default_rng(seed)
    schemes = _binary_schemes(rng)
    max_len = _length(9, scale)
    limit = get_settings().enumeration_limit
    ab = Alphabet.default(2)
    res.notes["max_length"] = max_len
    for scheme in schemes:
        words = [w for n in range(1, max_len + 1) for w in itertools.product((0, 1), repeat=n)]
        for w in _progress(words, "uniqueness", progress):
            survivors = enumerate_factorizations(w, scheme, limit=limit)
            got = factorize_finite(w, scheme)
            res.check(
                survivors == [got],
                f"{ab.render(w)}: {len(survivors)} survivors, factorize gave {[ab.render(f) for f in got]}",
            )
    return res


# ---------------------------------------------------------------------------
# 3. Classical reduction
# ---------------------------------------------------------------------------


def criterion_classical(scale: float = 1.0, seed: int = 0, progress: bool = False) -> CriterionResult:
    res = CriterionResult(3, "Constant orders agree with Duval's factorization")
    rng = np.random.default_rng(seed + 3)
    for _ in _progress(range(_count(10_000, scale)), "classical", progress):
        k = int(rng.integers(2, 5))
        scheme = random_scheme(rng, k, max_preperiod=0, max_cycle=1)
        w = random_word(rng, k, 1, 64)
        res.check(
            factorize_finite(w, scheme) == duval_factorize(w, scheme.cycle_orders[0]),
            f"k={k} w={w}",
        )
    return res


# ---------------------------------------------------------------------------
# 4. Four-way equivalence of omega comparisons
# ---------------------------------------------------------------------------


def criterion_equivalence(scale: float = 1.0, seed: int = 0, progress: bool = False) -> CriterionResult:
    res = CriterionResult(4, "u^w vs v^w equals (uv)^w vs v^w, u^w vs (vu)^w, (uv)^w vs (vu)^w")
    rng = np.random.default_rng(seed + 4)
    schemes = _mixed_schemes(rng)
    for _ in _progress(range(_count(10_000, scale)), "equivalence", progress):
        scheme = schemes[int(rng.integers(0, len(schemes)))]
        k = scheme.alphabet_size
        u = random_word(rng, k, 1, 6)
        v = random_word(rng, k, 1, 6)
        signs = {
            _sign(omega_compare_finite(u, v, scheme)),
            _sign(omega_compare_finite(u + v, v, scheme)),
            _sign(omega_compare_finite(u, v + u, scheme)),
            _sign(omega_compare_finite(u + v, v + u, scheme)),
        }
        res.check(len(signs) == 1, f"u={u} v={v} signs={sorted(signs)}")

    mixed = _count(1_000, scale)
    res.notes["mixed_cases"] = mixed
    for _ in _progress(range(mixed), "mixed", progress):
        scheme = schemes[int(rng.integers(0, len(schemes)))]
        k = scheme.alphabet_size
        u = random_word(rng, k, 1, 6)
        y = random_ev_periodic(rng, k, 4, 4)
        a = compare_ev_periodic(omega(u), y, scheme)
        b = compare_ev_periodic(concat(u, y), y, scheme)
        res.check(a == b, f"u={u} y={y}: {a.label} vs {b.label}")
    return res


# ---------------------------------------------------------------------------
# 5. Factorization of eventually periodic words
# ---------------------------------------------------------------------------


def _has_lyndon_suffix(x: EventuallyPeriodicWord, scheme) -> bool:
    if is_omega_lyndon_infinite(x, scheme):
        return True
    return any(is_omega_lyndon_infinite(s.word, scheme) for s in distinct_suffixes(x))


def criterion_infinite_factorization(
    scale: float = 1.0, seed: int = 0, progress: bool = False
) -> CriterionResult:
    res = CriterionResult(5, "Eventually periodic words factor uniquely and certifiably")
    rng = np.random.default_rng(seed + 5)
    cap = get_settings().default_cap
    shapes = {"finite": 0, "infinite": 0}
    per_scheme = _count(1_000, scale)
    exhaustive = 0
    for scheme in _mixed_schemes(rng):
        k = scheme.alphabet_size
        for i in _progress(range(per_scheme), "infinite", progress):
            x = random_ev_periodic(rng, k, 8, 6)
            try:
                f = factorize_ev_periodic(x, scheme, cap=cap)
                cert = validate_factorization(x, f, scheme)
                again = factorize_ev_periodic(x, scheme, cap=2 * cap)
                recheck = i % 10 == 0 and isinstance(f, FiniteShape)
                both = factorize_ev_periodic(x, scheme, cap=EXHAUSTIVE_CAP, exhaustive=True) if recheck else f
            except OmegaLyndonError as exc:
                res.checked += 1
                res.fail(f"x={x}: {type(exc).__name__}: {exc}")
                continue
            shapes[f.shape] += 1
            exhaustive += int(recheck)
            res.check(cert.all_passed, f"x={x}: certificate failures {[c.name for c in cert.failures]}")
            res.check(again == f, f"x={x}: doubling the cap changed the result")
            res.check(both == f, f"x={x}: searching both shapes gave {both}")
            res.check(
                isinstance(f, FiniteShape) == _has_lyndon_suffix(x, scheme),
                f"x={x}: shape {f.shape} disagrees with the suffix test",
            )
    res.notes["shapes"] = shapes
    res.notes["searched_both_shapes"] = exhaustive
    return res


# ---------------------------------------------------------------------------
# 6. Prefix characterization
# ---------------------------------------------------------------------------


def criterion_prefix_classification(
    scale: float = 1.0, seed: int = 0, progress: bool = False
) -> CriterionResult:
    res = CriterionResult(6, "Prefix characterization matches the direct predicates")
    rng = np.random.default_rng(seed + 6)
    settings = get_settings()
    kinds = {kind.value: 0 for kind in L1Kind}
    per_scheme = _count(200, scale)
    for scheme in _mixed_schemes(rng):
        k = scheme.alphabet_size
        for _ in _progress(range(per_scheme), "classify", progress):
            x = random_ev_periodic(rng, k, 4, 4)
            try:
                c = classify_l1(x, scheme, cap=settings.default_cap, window_pad=settings.l1_window_pad)
            except OmegaLyndonError as exc:
                res.checked += 1
                res.fail(f"x={x}: {type(exc).__name__}: {exc}")
                continue
            kinds[c.kind.value] += 1
            is_lyndon = is_omega_lyndon_infinite(x, scheme).is_lyndon
            power = x.is_purely_periodic and is_omega_lyndon_finite(x.period, scheme).is_lyndon
            res.check((c.kind == L1Kind.IS_LYNDON) == is_lyndon, f"x={x}: IsLyndon mismatch")
            res.check(
                (c.kind == L1Kind.PERIODIC_POWER_OF_LYNDON) == (power and not is_lyndon),
                f"x={x}: PeriodicPowerOfLyndon mismatch",
            )
            if c.kind == L1Kind.FINITELY_MANY_LYNDON_PREFIXES:
                lo, hi = c.window
                beyond = [l for l in omega_lyndon_prefixes(x, hi, scheme) if l >= lo]
                res.check(not beyond, f"x={x}: omega-Lyndon prefixes {beyond} beyond bound {c.bound}")
    res.notes["kinds"] = kinds
    return res


# ---------------------------------------------------------------------------
# 7. Extension to infinite words
# ---------------------------------------------------------------------------


def criterion_extension(scale: float = 1.0, seed: int = 0, progress: bool = False) -> CriterionResult:
    res = CriterionResult(7, "Finite omega-Lyndon words extend to infinite ones")
    rng = np.random.default_rng(seed + 7)
    max_len = _length(8, scale)
    construction_failed = 0
    for scheme in _binary_schemes(rng):
        words = [w for n in range(2, max_len + 1) for w in itertools.product((0, 1), repeat=n)]
        for w in _progress(words, "extension", progress):
            if not is_omega_lyndon_finite(w, scheme):
                continue
            try:
                x = extend_to_infinite(w, scheme)
            except ConstructionFailed as exc:
                construction_failed += 1
                res.checked += 1
                res.fail(f"w={w}: {exc}")
                continue
            res.check(
                x.prefix(len(w)) == w and is_omega_lyndon_infinite(x, scheme).is_lyndon,
                f"w={w}: extension {x} not verified",
            )
    res.notes["max_length"] = max_len
    res.notes["construction_failed"] = construction_failed
    return res


# ---------------------------------------------------------------------------
# 8. Boundaries from minimal factors
# ---------------------------------------------------------------------------


def boundary_contradictions(
    prefix, scheme: PositionalOrderScheme, n_max: int, extension: Sequence[int] = ()
) -> List[str]:
    """
    Reported boundaries of ``prefix`` that are not cumulative boundaries of
    factorize_finite(prefix), or stop being one once ``extension`` is appended.
    """
    prefix = tuple(prefix)
    cuts = set(factorization_boundaries(factorize_finite(prefix, scheme)))
    longer = cuts
    if extension:
        longer = set(factorization_boundaries(factorize_finite(prefix + tuple(extension), scheme)))
    out: List[str] = []
    for b in detect_boundaries(prefix, scheme, n_max):
        if b.boundary not in cuts:
            out.append(f"n={b.n}: boundary {b.boundary} is not a factor boundary {sorted(cuts)}")
        elif b.boundary not in longer:
            out.append(f"n={b.n}: boundary {b.boundary} lost after extending the prefix")
    return out


def criterion_boundaries(scale: float = 1.0, seed: int = 0, progress: bool = False) -> CriterionResult:
    res = CriterionResult(8, "Minimal-factor boundaries agree with the finite factorization")
    rng = np.random.default_rng(seed + 8)
    schemes = _binary_schemes(rng)
    length = 32
    extended = length + length // 4
    for i in _progress(range(_count(100, scale)), "boundaries", progress):
        scheme = schemes[i % len(schemes)]
        x = random_ev_periodic(rng, 2, 8, 10)
        long_ = x.prefix(extended)
        res.checked += length // 2
        for msg in boundary_contradictions(long_[:length], scheme, length // 2, long_[length:]):
            res.fail(f"x={x}: {msg}")
    res.notes["prefix_length"] = length
    res.notes["extended_length"] = extended
    return res


# ---------------------------------------------------------------------------
# 9. Comparator soundness
# ---------------------------------------------------------------------------


def criterion_comparator(scale: float = 1.0, seed: int = 0, progress: bool = False) -> CriterionResult:
    res = CriterionResult(9, "Comparator soundness")
    rng = np.random.default_rng(seed + 9)
    schemes = _mixed_schemes(rng)
    for _ in _progress(range(_count(100_000, scale)), "naive", progress):
        scheme = schemes[int(rng.integers(0, len(schemes)))]
        k = scheme.alphabet_size
        x = random_ev_periodic(rng, k, 4, 4)
        y = random_ev_periodic(rng, k, 4, 4)
        a, b = compare_ev_periodic(x, y, scheme), naive_compare(x, y, scheme)
        res.check(a == b, f"x={x} y={y}: {a.label} vs naive {b.label}")

    for _ in _progress(range(_count(10_000, scale)), "triples", progress):
        scheme = schemes[int(rng.integers(0, len(schemes)))]
        k = scheme.alphabet_size
        trio = [random_ev_periodic(rng, k, 3, 3) for _ in range(3)]
        failures = axiom_failures(PositionalOrder(scheme), trio)
        res.check(not failures, failures[0] if failures else "")

    settings = get_settings()
    for scheme in (constant_scheme(2), alternating_scheme(2)):
        report = validate_star(
            scheme, 2, 3, tail_samples=settings.tail_samples, rng_seed=seed, triples=settings.order_triples
        )
        res.check(report.passed, f"validate_star failed: {report.counterexample or report.axiom_failures[:1]}")
    return res


CRITERIA: Dict[int, Callable[..., CriterionResult]] = {
    1: criterion_vectors,
    2: criterion_uniqueness,
    3: criterion_classical,
    4: criterion_equivalence,
    5: criterion_infinite_factorization,
    6: criterion_prefix_classification,
    7: criterion_extension,
    8: criterion_boundaries,
    9: criterion_comparator,
}


def run_all(
    scale: float = 1.0, seed: int = 0, progress: bool = True, only: Optional[Sequence[int]] = None
) -> List[CriterionResult]:
    results: List[CriterionResult] = []
    for number, fn in CRITERIA.items():
        if only and number not in only:
            continue
        started = time.perf_counter()
        res = fn(scale=scale, seed=seed, progress=progress)
        res.seconds = round(time.perf_counter() - started, 3)
        print(f"[INFO] {number}. {res.title}: {res.checked} checked, {res.failures} failures ({res.seconds:.1f}s)")
        results.append(res)
    return results


def main(argv: Optional[Sequence[str]] = None) -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--scale", type=float, default=1.0, help="Fraction of the full desk-scale sample sizes")
    p.add_argument("--seed", type=int, default=None, help="Base seed (default: OMEGA_LYNDON_SEED)")
    p.add_argument("--out_dir", default="outputs", help="Directory to write reports")
    p.add_argument("--only", default="", help="Comma-separated criterion numbers to run")
    p.add_argument("--no-progress", action="store_true")
    args = p.parse_args(argv)

    settings = get_settings()
    configure_logging(settings.log_level)
    seed = settings.seed if args.seed is None else args.seed
    only = [int(s) for s in args.only.split(",") if s.strip()]

    results = run_all(scale=args.scale, seed=seed, progress=not args.no_progress, only=only)
    summary = {
        "scale": args.scale,
        "seed": seed,
        "criteria": [asdict(r) for r in results],
        "total_failures": sum(r.failures for r in results),
    }
    exporter = ReportExporter(args.out_dir)
    exporter.export("acceptance_summary", summary, fmt="json")
    report = exporter.export("acceptance_report", summary, fmt="markdown")
    print(f"[INFO] Report written to {report['path']}")
    return 0 if summary["total_failures"] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
