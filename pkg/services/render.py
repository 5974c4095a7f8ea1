"""Turn library results into JSON-ready dicts and aligned text."""
import json
from typing import Any, Dict, List, Optional, Sequence, Union

from core.factorize import Boundary, FactorizationCertificate, FiniteShape, OmegaLyndonFactorization
from core.lyndon import L1Classification, LyndonVerdict
from core.orders import ValidationReport
from core.words import Alphabet, EventuallyPeriodicWord, Word, format_word

FACTOR_SEPARATOR = "·"


def literal(w: Union[Sequence[int], EventuallyPeriodicWord, None], alphabet: Alphabet):
    if w is None:
        return None
    return format_word(w, alphabet)


def factor_list(factors: Sequence[Word], alphabet: Alphabet) -> List[str]:
    return [literal(f, alphabet) for f in factors]


def verdict_payload(verdict: LyndonVerdict, alphabet: Alphabet) -> Dict[str, Any]:
    witness = verdict.witness
    if isinstance(witness, tuple) and len(witness) == 2 and isinstance(witness[0], tuple):
        witness = f"{literal(witness[0], alphabet)}|{literal(witness[1], alphabet)}"
    else:
        witness = literal(witness, alphabet)
    return {
        "is_lyndon": verdict.is_lyndon,
        "witness": witness,
        "witness_offset": verdict.witness_offset,
        "reason": verdict.reason,
    }


def factorization_payload(f: OmegaLyndonFactorization, alphabet: Alphabet) -> Dict[str, Any]:
    out: Dict[str, Any] = {"shape": f.shape, "head": factor_list(f.head, alphabet)}
    if isinstance(f, FiniteShape):
        out["tail"] = literal(f.tail, alphabet)
    else:
        out["repeating"] = literal(f.repeating, alphabet)
    return out


def certificate_payload(cert: FactorizationCertificate) -> Dict[str, Any]:
    return {
        "all_passed": cert.all_passed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in cert.checks],
    }


def classification_payload(c: L1Classification, alphabet: Alphabet) -> Dict[str, Any]:
    return {
        "kind": c.kind.value,
        "root": literal(c.root, alphabet),
        "bound": c.bound,
        "window": list(c.window) if c.window else None,
        "lyndon_prefixes": c.lyndon_prefixes,
        "certificate": c.certificate,
    }


def boundaries_payload(rows: Sequence[Boundary], alphabet: Alphabet) -> List[Dict[str, Any]]:
    return [{"n": b.n, "factor": literal(b.factor, alphabet), "boundary": b.boundary} for b in rows]


def validation_payload(report: ValidationReport, alphabet: Alphabet) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "passed": report.passed,
        "pairs_checked": report.pairs_checked,
        "tails_checked": report.tails_checked,
        "triples_checked": report.triples_checked,
        "counterexample": None,
        "axiom_failures": list(report.axiom_failures),
    }
    ce = report.counterexample
    if ce is not None:
        out["counterexample"] = {k: literal(getattr(ce, k), alphabet) for k in ("u", "v", "x", "y")}
    return out


def error_state(state: Dict[str, Any], alphabet: Optional[Alphabet]) -> Dict[str, Any]:
    """Words go through the alphabet, numbers stay numbers."""
    out: Dict[str, Any] = {}
    for key, value in state.items():
        is_word = isinstance(value, EventuallyPeriodicWord) or (
            isinstance(value, tuple) and all(isinstance(a, int) for a in value)
        )
        if is_word and alphabet is not None:
            out[key] = literal(value, alphabet)
        elif isinstance(value, int):
            out[key] = value
        else:
            out[key] = str(value)
    return out


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True)


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list) and all(isinstance(v, str) for v in value):
        return FACTOR_SEPARATOR.join(value) if value else "(empty)"
    if isinstance(value, (list, dict)):
        return json.dumps(value, ensure_ascii=False, sort_keys=True)
    return str(value)


def to_text(result: Dict[str, Any], indent: int = 0) -> str:
    """``key : value`` lines with keys padded to a common width; nested dicts indent."""
    if not result:
        return ""
    width = max(len(k) for k in result)
    pad = " " * indent
    lines = []
    for key, value in result.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(to_text(value, indent + 2))
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key.ljust(width)} : {_scalar(value)}")
    return "\n".join(lines)
