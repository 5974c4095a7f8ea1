"""Tests for services.cli."""
import json

import pytest

from services.cli import EXIT_CAP, EXIT_FALSE, EXIT_INPUT, EXIT_OK, CliRequest, main, run


def _json(capsys, argv):
    code = main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_factorize_text_output(capsys):
    assert main(["factorize", "ababab", "--order", "ab,ba"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "factors" in out
    assert "ab·ab·ab" in out


def test_is_lyndon_false_verdict(capsys):
    code, payload = _json(capsys, ["is-lyndon", "abbab", "--order", "ab,ba"])
    assert code == EXIT_FALSE
    assert payload["result"]["is_lyndon"] is False
    assert payload["result"]["witness"] == "ab"
    assert payload["result"]["witness_offset"] == 3


def test_is_lyndon_splits_witness(capsys):
    code, payload = _json(capsys, ["is-lyndon", "ba", "--order", "ab,ba", "--splits"])
    assert code == EXIT_FALSE
    assert payload["result"]["witness"] == "b|a"


def test_is_lyndon_infinite(capsys):
    code, payload = _json(capsys, ["is-lyndon", "ab(a)", "--order", "ab,ba"])
    assert code == EXIT_OK
    assert payload["result"]["is_lyndon"] is True


def test_factorize_inf_json(capsys):
    code, payload = _json(capsys, ["factorize-inf", "(ba)", "--order", "ab,ba"])
    assert code == EXIT_OK
    assert payload["result"] == {"shape": "infinite", "head": ["b"], "repeating": "ab"}
    assert payload["certificate"]["all_passed"] is True
    assert payload["inputs"]["x"] == "(ba)"


def test_factorize_inf_rejects_zero_cap(capsys):
    code, payload = _json(capsys, ["factorize-inf", "(ba)", "--order", "ab,ba", "--cap", "0"])
    assert code == EXIT_INPUT
    assert payload["error"]["type"] == "InvalidInput"


def test_extend_finite_cap_exit_code(capsys):
    code, payload = _json(capsys, ["extend-finite", "ab", "--order", "ab,ba", "--cap", "2"])
    assert code == EXIT_CAP
    assert payload["error"]["type"] == "CapExceeded"
    assert payload["error"]["state"] == {"extension": "a(b)", "cap": 2}


def test_error_messages_carry_no_index_tuples(capsys):
    assert main(["extend", "aa", "--order", "ab,ba"]) == EXIT_INPUT
    err = capsys.readouterr().err
    assert err.startswith("error: word of length 2 is not omega-Lyndon")
    assert "(0," not in err


def test_parse_error_exit_code(capsys):
    assert main(["is-lyndon", "ab(", "--order", "ab"]) == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_bad_scheme_exit_code(capsys):
    code, payload = _json(capsys, ["factorize", "abab", "--order", "ab,a"])
    assert code == EXIT_INPUT
    assert payload["error"]["type"] == "ParseError"


def test_not_lyndon_extension_is_input_error(capsys):
    code, payload = _json(capsys, ["extend", "aa", "--order", "ab,ba"])
    assert code == EXIT_INPUT
    assert payload["error"]["type"] == "NotLyndon"


def test_json_output_is_stable(capsys):
    argv = ["compare", "ab(ba)", "a(ba)", "--order", "ab,ba", "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    payload = json.loads(first)
    assert payload["result"] == {"comparison": "Greater", "first_mismatch": 3}


def test_omega_compare_and_prefixes(capsys):
    _, payload = _json(capsys, ["omega-compare", "ab", "abab", "--order", "ab,ba"])
    assert payload["result"]["comparison"] == "Equal"
    _, payload = _json(capsys, ["prefixes", "abba(a)", "--order", "ab,ba", "--N", "5"])
    assert payload["result"]["lengths"] == [1, 2, 3, 4, 5]


def test_minimal_factor_and_classify(capsys):
    _, payload = _json(capsys, ["minimal-factor", "(ba)", "--order", "ab,ba", "--n", "2"])
    assert payload["result"] == {"factor": "ab", "first_occurrence": 1}
    _, payload = _json(capsys, ["classify", "(ba)", "--order", "ab,ba"])
    assert payload["result"]["kind"] == "FinitelyManyLyndonPrefixes"
    assert payload["result"]["bound"] == 1
    assert payload["result"]["lyndon_prefixes"] == [1]


def test_boundaries_are_provisional(capsys):
    code, payload = _json(capsys, ["boundaries", "bababab", "--order", "ab,ba", "--n-max", "2"])
    assert code == EXIT_OK
    assert payload["result"]["provisional"] is True
    assert [row["boundary"] for row in payload["result"]["boundaries"]] == [1, 1]


def test_validate_order(capsys):
    code, payload = _json(capsys, ["validate-order", "--order", "ab,ba", "--n-max", "2", "--samples", "2"])
    assert code == EXIT_OK
    assert payload["result"]["passed"] is True
    assert payload["result"]["counterexample"] is None


def test_oracle_check_defaults(capsys):
    code, payload = _json(capsys, ["oracle-check", "--alphabet", "ab", "--max-len", "4"])
    assert code == EXIT_OK
    assert len(payload["result"]["schemes"]) == 3
    assert payload["result"]["words_checked"] == 3 * (2 + 4 + 8 + 16)
    assert payload["result"]["mismatches"] == []


def test_run_without_argparse():
    result = run(CliRequest("factorize", {"word": "banana"}, {"order": "abn"}))
    assert result.exit_code == EXIT_OK
    assert result.payload["result"]["factors"] == ["b", "an", "an", "a"]


def test_run_explicit_alphabet_rejects_foreign_letters():
    result = run(CliRequest("factorize", {"word": "abc"}, {"order": "ab"}, alphabet="ab"))
    assert result.exit_code == EXIT_INPUT


def test_missing_order_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["factorize", "abab"])
    assert err.value.code == 2
