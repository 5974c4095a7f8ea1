"""
omega-lyndon command line.

Every subcommand takes word literals (``abba``, ``ab(ba)``, ``(ab)``) and an order
scheme literal (``ab``, ``ab,ba``, ``ab|ba,ab``). The alphabet is the sorted set of
letters used in the literals unless ``--alphabet`` is given.

Exit codes: 0 success, 1 false verdict or failed self-check, 2 bad input,
3 search cap exceeded.
"""
import argparse
import itertools
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from loguru import logger

from core.errors import (
    CapExceeded,
    CapTooSmall,
    ConstructionFailed,
    InvalidInput,
    NotLyndon,
    OmegaLyndonError,
    TooLarge,
    UniquenessViolation,
)
from core.factorize import detect_boundaries, factorize_ev_periodic, factorize_finite, validate_factorization
from core.log import configure_logging
from core.lyndon import (
    classify_l1,
    extend_finite,
    extend_to_infinite,
    is_omega_lyndon_finite,
    is_omega_lyndon_finite_splits,
    is_omega_lyndon_infinite,
    omega_lyndon_prefixes,
    omega_minimal,
)
from core.orders import (
    PositionalOrderScheme,
    alternating_scheme,
    compare_ev_periodic,
    constant_scheme,
    first_mismatch,
    format_scheme,
    omega_compare_finite,
    parse_scheme,
    validate_star,
)
from core.words import (
    Alphabet,
    EventuallyPeriodicWord,
    infer_alphabet,
    iter_factors,
    omega,
    parse_finite,
    parse_infinite,
    parse_word,
)
from evaluation.oracle import duval_factorize, enumerate_factorizations, random_scheme
from services import render
from services.runtime import get_settings

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_CAP = 3

_EXIT_CODES = [
    (CapExceeded, EXIT_CAP),
    ((InvalidInput, NotLyndon, TooLarge, CapTooSmall), EXIT_INPUT),
    ((ConstructionFailed, UniquenessViolation), EXIT_FALSE),
]


@dataclass
class CliRequest:
    command: str
    literals: Dict[str, str]
    options: Dict[str, Any] = field(default_factory=dict)
    alphabet: Optional[str] = None
    json: bool = False


@dataclass
class CliResult:
    exit_code: int
    payload: Dict[str, Any]


def exit_code_for(exc: OmegaLyndonError) -> int:
    for types, code in _EXIT_CODES:
        if isinstance(exc, types):
            return code
    return EXIT_FALSE


# ---------------------------------------------------------------------------
# Subcommand handlers: (request, alphabet, scheme) -> (exit code, result, certificate)
# ---------------------------------------------------------------------------


def _cmd_compare(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    x = parse_infinite(req.literals["x"], alphabet)
    y = parse_infinite(req.literals["y"], alphabet)
    c = compare_ev_periodic(x, y, scheme)
    return EXIT_OK, {"comparison": c.label, "first_mismatch": first_mismatch(x, y)}, None


def _cmd_omega_compare(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    u = parse_finite(req.literals["u"], alphabet)
    v = parse_finite(req.literals["v"], alphabet)
    c = omega_compare_finite(u, v, scheme)
    return EXIT_OK, {"comparison": c.label, "first_mismatch": first_mismatch(omega(u), omega(v))}, None


def _cmd_is_lyndon(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    w = parse_word(req.literals["word"], alphabet)
    if isinstance(w, EventuallyPeriodicWord):
        verdict = is_omega_lyndon_infinite(w, scheme)
    elif req.options.get("splits"):
        verdict = is_omega_lyndon_finite_splits(w, scheme)
    else:
        verdict = is_omega_lyndon_finite(w, scheme)
    code = EXIT_OK if verdict.is_lyndon else EXIT_FALSE
    return code, render.verdict_payload(verdict, alphabet), None


def _cmd_factorize(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    w = parse_finite(req.literals["word"], alphabet)
    factors = factorize_finite(w, scheme)
    return EXIT_OK, {"factors": render.factor_list(factors, alphabet)}, None


def _cmd_factorize_inf(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    x = parse_infinite(req.literals["x"], alphabet)
    f = factorize_ev_periodic(x, scheme, cap=req.options["cap"])
    cert = validate_factorization(x, f, scheme)
    code = EXIT_OK if cert.all_passed else EXIT_FALSE
    return code, render.factorization_payload(f, alphabet), render.certificate_payload(cert)


def _cmd_extend(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    w = parse_finite(req.literals["word"], alphabet)
    return EXIT_OK, {"extension": render.literal(extend_to_infinite(w, scheme), alphabet)}, None


def _cmd_extend_finite(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    w = parse_finite(req.literals["word"], alphabet)
    ext = extend_finite(w, scheme, cap=req.options["cap"])
    return EXIT_OK, {"extension": render.literal(ext, alphabet)}, None


def _cmd_minimal_factor(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    x = parse_infinite(req.literals["x"], alphabet)
    start, u = omega_minimal(iter_factors(x, req.options["n"]), scheme)
    return EXIT_OK, {"factor": render.literal(u, alphabet), "first_occurrence": start}, None


def _cmd_boundaries(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    prefix = parse_finite(req.literals["prefix"], alphabet)
    rows = detect_boundaries(prefix, scheme, req.options["n_max"])
    return EXIT_OK, {"boundaries": render.boundaries_payload(rows, alphabet), "provisional": True}, None


def _cmd_classify(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    x = parse_infinite(req.literals["x"], alphabet)
    settings = get_settings()
    c = classify_l1(x, scheme, cap=req.options["cap"], window_pad=settings.l1_window_pad)
    return EXIT_OK, render.classification_payload(c, alphabet), None


def _cmd_prefixes(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    x = parse_infinite(req.literals["x"], alphabet)
    return EXIT_OK, {"lengths": omega_lyndon_prefixes(x, req.options["N"], scheme)}, None


def _cmd_validate_order(req: CliRequest, alphabet: Alphabet, scheme: PositionalOrderScheme):
    settings = get_settings()
    report = validate_star(
        scheme,
        alphabet.size,
        req.options["n_max"],
        tail_samples=req.options["samples"],
        rng_seed=req.options["seed"],
        triples=settings.order_triples,
    )
    code = EXIT_OK if report.passed else EXIT_FALSE
    return code, render.validation_payload(report, alphabet), None


def _is_constant(scheme: PositionalOrderScheme) -> bool:
    return len({o.ranking for o in scheme.preperiod_orders + scheme.cycle_orders}) == 1


def oracle_check(alphabet: Alphabet, schemes: Sequence[PositionalOrderScheme], max_len: int) -> Dict[str, Any]:
    """Exhaustive cross-check of factorize_finite against the brute-force oracles."""
    limit = get_settings().enumeration_limit
    words = 0
    mismatches: List[Dict[str, Any]] = []
    for scheme in schemes:
        label = format_scheme(scheme, alphabet)
        classical = _is_constant(scheme)
        for n in range(1, max_len + 1):
            for w in itertools.product(range(alphabet.size), repeat=n):
                words += 1
                got = factorize_finite(w, scheme)
                survivors = enumerate_factorizations(w, scheme, limit=limit)
                if survivors != [got]:
                    mismatches.append({"scheme": label, "word": alphabet.render(w), "oracle": "enumerate"})
                if classical and duval_factorize(w, scheme.cycle_orders[0]) != got:
                    mismatches.append({"scheme": label, "word": alphabet.render(w), "oracle": "duval"})
    if mismatches:
        logger.warning("{} oracle mismatches", len(mismatches))
    return {
        "schemes": [format_scheme(s, alphabet) for s in schemes],
        "words_checked": words,
        "mismatches": mismatches,
        "passed": not mismatches,
    }


def _cmd_oracle_check(req: CliRequest, alphabet: Alphabet, scheme: Optional[PositionalOrderScheme]):
    if scheme is not None:
        schemes = [scheme]
    else:
        rng = np.random.default_rng(req.options["seed"])
        k = alphabet.size
        schemes = [constant_scheme(k), alternating_scheme(k), random_scheme(rng, k)]
    result = oracle_check(alphabet, schemes, req.options["max_len"])
    return (EXIT_OK if result["passed"] else EXIT_FALSE), result, None


_HANDLERS: Dict[str, Callable] = {
    "compare": _cmd_compare,
    "omega-compare": _cmd_omega_compare,
    "is-lyndon": _cmd_is_lyndon,
    "factorize": _cmd_factorize,
    "factorize-inf": _cmd_factorize_inf,
    "extend": _cmd_extend,
    "extend-finite": _cmd_extend_finite,
    "minimal-factor": _cmd_minimal_factor,
    "boundaries": _cmd_boundaries,
    "classify": _cmd_classify,
    "prefixes": _cmd_prefixes,
    "validate-order": _cmd_validate_order,
    "oracle-check": _cmd_oracle_check,
}


def _resolve_alphabet(req: CliRequest) -> Alphabet:
    if req.alphabet:
        return Alphabet.from_string(req.alphabet)
    texts = list(req.literals.values())
    if req.options.get("order"):
        texts.append(req.options["order"])
    if not any(ch for t in texts for ch in t if ch not in "()|, "):
        return Alphabet.default(2)
    return infer_alphabet(texts)


def run(req: CliRequest) -> CliResult:
    inputs: Dict[str, Any] = dict(req.literals)
    inputs.update({k: v for k, v in req.options.items() if v is not None})
    payload: Dict[str, Any] = {"command": req.command, "inputs": inputs}
    alphabet: Optional[Alphabet] = None
    try:
        alphabet = _resolve_alphabet(req)
        order_text = req.options.get("order")
        scheme = parse_scheme(order_text, alphabet) if order_text else None
        code, result, certificate = _HANDLERS[req.command](req, alphabet, scheme)
    except OmegaLyndonError as exc:
        logger.debug("{} failed: {}", req.command, exc)
        payload["error"] = {"type": type(exc).__name__, "message": str(exc)}
        state = getattr(exc, "state", None)
        if state:
            payload["error"]["state"] = render.error_state(state, alphabet)
        return CliResult(exit_code_for(exc), payload)
    payload["result"] = result
    if certificate is not None:
        payload["certificate"] = certificate
    return CliResult(code, payload)


# ---------------------------------------------------------------------------
# argparse
# ---------------------------------------------------------------------------


_LITERALS = {
    "compare": ("x", "y"),
    "omega-compare": ("u", "v"),
    "is-lyndon": ("word",),
    "factorize": ("word",),
    "factorize-inf": ("x",),
    "extend": ("word",),
    "extend-finite": ("word",),
    "minimal-factor": ("x",),
    "boundaries": ("prefix",),
    "classify": ("x",),
    "prefixes": ("x",),
    "validate-order": (),
    "oracle-check": (),
}


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", default=None, help="Alphabet symbols in index order (default: inferred).")
    common.add_argument("--json", action="store_true", help="Emit one JSON object instead of text.")
    common.add_argument("--log-level", default=settings.log_level, help="loguru level for stderr diagnostics.")

    ordered = argparse.ArgumentParser(add_help=False, parents=[common])
    ordered.add_argument("--order", required=True, help='Scheme literal, e.g. "ab" or "ab,ba" or "ab|ba,ab".')

    parser = argparse.ArgumentParser(prog="omega-lyndon", description="omega-Lyndon words and factorizations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, parent=ordered) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, parents=[parent])
        for lit in _LITERALS[name]:
            p.add_argument(lit)
        return p

    add("compare", "Compare two eventually periodic words p(q).")
    add("omega-compare", "Compare U^w with V^w.")
    add("is-lyndon", "omega-Lyndon test for a finite or eventually periodic word.").add_argument(
        "--splits", action="store_true", help="Use the split form u^w < v^w for finite words."
    )
    add("factorize", "Non-increasing omega-Lyndon factorization of a finite word.")
    add("factorize-inf", "Factorization of an eventually periodic word.").add_argument(
        "--cap", type=int, default=settings.default_cap
    )
    add("extend", "Infinite omega-Lyndon word starting with W.")
    add("extend-finite", "Longer finite omega-Lyndon word starting with W.").add_argument(
        "--cap", type=int, default=settings.default_cap
    )
    add("minimal-factor", "omega-minimal length-n factor.").add_argument("--n", type=int, required=True)
    add("boundaries", "Factor boundaries from minimal factors of a prefix.").add_argument(
        "--n-max", dest="n_max", type=int, required=True
    )
    add("classify", "Which branch of the prefix characterization X falls in.").add_argument(
        "--cap", type=int, default=settings.default_cap
    )
    add("prefixes", "Lengths of omega-Lyndon prefixes up to N.").add_argument("--N", type=int, required=True)

    vo = add("validate-order", "Check the lexicographic-like condition for a scheme.")
    vo.add_argument("--n-max", dest="n_max", type=int, default=3)
    vo.add_argument("--samples", type=int, default=settings.tail_samples)
    vo.add_argument("--seed", type=int, default=settings.seed)

    oc = add("oracle-check", "Cross-check factorize against brute-force oracles.", parent=common)
    oc.add_argument("--order", default=None)
    oc.add_argument("--max-len", dest="max_len", type=int, default=6)
    oc.add_argument("--seed", type=int, default=settings.seed)
    return parser


def request_from_args(args: argparse.Namespace) -> CliRequest:
    literals = {name: getattr(args, name) for name in _LITERALS[args.command]}
    skip = set(literals) | {"command", "alphabet", "json", "log_level"}
    options = {k: v for k, v in vars(args).items() if k not in skip}
    return CliRequest(args.command, literals, options, alphabet=args.alphabet, json=args.json)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    req = request_from_args(args)
    result = run(req)
    if req.json:
        print(render.to_json(result.payload))
    elif "error" in result.payload:
        print(f"error: {result.payload['error']['message']}", file=sys.stderr)
    else:
        print(render.to_text(result.payload["result"]))
        if "certificate" in result.payload:
            print(render.to_text({"certificate": result.payload["certificate"]}))
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
