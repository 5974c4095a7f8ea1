"""Tests for core.factorize."""
import numpy as np
import pytest

from core.errors import InvalidInput
from core.factorize import (
    FiniteShape,
    InfiniteShape,
    detect_boundaries,
    factorization_boundaries,
    factorize_ev_periodic,
    factorize_finite,
    reconstruct,
    validate_factorization,
)
from core.lyndon import is_omega_lyndon_infinite
from core.orders import Comparison, alternating_scheme, constant_scheme, omega_compare_finite, random_ev_periodic
from core.words import Alphabet, distinct_suffixes, parse_finite, parse_infinite

SCHEMES = [constant_scheme(2), alternating_scheme(2)]


def _flatten(factors):
    return tuple(a for f in factors for a in f)


@pytest.mark.parametrize(
    "text,expected",
    [("ababab", ["ab", "ab", "ab"]), ("abbab", ["abb", "ab"]), ("a", ["a"]), ("aa", ["a", "a"])],
)
def test_factorize_finite_vectors(fw, sigma_alt, text, expected):
    assert factorize_finite(fw(text), sigma_alt) == [fw(e) for e in expected]


def test_factorize_finite_classical():
    abn = Alphabet.from_string("abn")
    got = factorize_finite(parse_finite("banana", abn), constant_scheme(3))
    assert [abn.render(f) for f in got] == ["b", "an", "an", "a"]


def test_factorize_finite_rejects_empty(sigma_alt):
    with pytest.raises(InvalidInput):
        factorize_finite((), sigma_alt)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_factorize_finite_reconstructs_and_is_non_increasing(scheme):
    rng = np.random.default_rng(4)
    for _ in range(200):
        w = tuple(int(a) for a in rng.integers(0, 2, size=int(rng.integers(1, 20))))
        factors = factorize_finite(w, scheme)
        assert _flatten(factors) == w
        for a, b in zip(factors, factors[1:]):
            assert omega_compare_finite(a, b, scheme) != Comparison.LESS


def test_factorize_ev_periodic_vectors(fw, iw, sigma_alt):
    assert factorize_ev_periodic(iw("(ab)"), sigma_alt) == InfiniteShape((), fw("ab"))
    assert factorize_ev_periodic(iw("ab(a)"), sigma_alt) == FiniteShape((), iw("ab(a)"))
    assert factorize_ev_periodic(iw("(ba)"), sigma_alt) == InfiniteShape((fw("b"),), fw("ab"))


def test_factorize_ev_periodic_rejects_bad_cap(iw, sigma_alt):
    with pytest.raises(InvalidInput):
        factorize_ev_periodic(iw("(ab)"), sigma_alt, cap=0)


def _has_lyndon_suffix(x, scheme):
    return bool(is_omega_lyndon_infinite(x, scheme)) or any(
        is_omega_lyndon_infinite(s.word, scheme) for s in distinct_suffixes(x)
    )


@pytest.mark.parametrize("scheme", SCHEMES)
def test_factorize_ev_periodic_properties(scheme):
    rng = np.random.default_rng(9)
    for _ in range(80):
        x = random_ev_periodic(rng, 2, 5, 4)
        f = factorize_ev_periodic(x, scheme, cap=16)
        assert validate_factorization(x, f, scheme).all_passed
        assert reconstruct(f) == x
        assert factorize_ev_periodic(x, scheme, cap=32) == f
        assert isinstance(f, FiniteShape) == _has_lyndon_suffix(x, scheme)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_infinite_shape_absorbs_repeats(scheme):
    rng = np.random.default_rng(10)
    for _ in range(60):
        x = random_ev_periodic(rng, 2, 5, 4)
        f = factorize_ev_periodic(x, scheme, cap=16)
        if not isinstance(f, InfiniteShape):
            continue
        head = list(f.head)
        for m in range(1, 4):
            assert factorize_finite(_flatten(head) + f.repeating * m, scheme) == head + [f.repeating] * m


def test_infinite_shape_means_no_lyndon_suffix(iw, sigma_alt):
    x = iw("(ba)")
    assert isinstance(factorize_ev_periodic(x, sigma_alt), InfiniteShape)
    assert not is_omega_lyndon_infinite(x, sigma_alt)
    assert not any(is_omega_lyndon_infinite(s.word, sigma_alt) for s in distinct_suffixes(x))


def test_validate_factorization_examples(fw, iw, sigma_alt):
    assert validate_factorization(iw("(ab)"), InfiniteShape((), fw("ab")), sigma_alt).all_passed

    cert = validate_factorization(iw("(ab)"), InfiniteShape((fw("ab"),), fw("ab")), sigma_alt)
    assert not cert.all_passed
    assert [c.name for c in cert.failures] == ["canonical_no_trailing_repeat"]

    cert = validate_factorization(iw("ab(a)"), FiniteShape((fw("ab"),), iw("(a)")), sigma_alt)
    assert not cert.all_passed
    assert "tail_lyndon" in [c.name for c in cert.failures]


def test_validate_factorization_catches_wrong_reconstruction(fw, iw, sigma_alt):
    cert = validate_factorization(iw("(ba)"), InfiniteShape((), fw("ab")), sigma_alt)
    assert [c.name for c in cert.failures] == ["reconstruction"]


def test_factorization_boundaries(fw):
    assert factorization_boundaries([fw("ab"), fw("ab"), fw("b")]) == [0, 2, 4, 5]
    assert factorization_boundaries([]) == [0]


def test_detect_boundaries_examples(fw, sigma_alt):
    rows = detect_boundaries(fw("bababab"), sigma_alt, 2)
    assert [(r.n, r.boundary) for r in rows] == [(1, 1), (2, 1)]
    assert rows[1].factor == fw("ab")
    assert detect_boundaries(fw("ababab"), sigma_alt, 1)[0].boundary == 0
    assert detect_boundaries(fw("abbaba"), sigma_alt, 1)[0].boundary == 0


def test_detect_boundaries_bounds(fw, sigma_alt):
    with pytest.raises(InvalidInput):
        detect_boundaries(fw("bababab"), sigma_alt, 4)
    with pytest.raises(InvalidInput):
        detect_boundaries(fw("bababab"), sigma_alt, 0)
    with pytest.raises(InvalidInput):
        detect_boundaries((), sigma_alt, 1)


def test_classical_boundaries_are_factor_boundaries(constant_ab):
    rng = np.random.default_rng(12)
    for _ in range(40):
        x = random_ev_periodic(rng, 2, 8, 10)
        prefix = x.prefix(30)
        cuts = factorization_boundaries(factorize_finite(prefix, constant_ab))
        for row in detect_boundaries(prefix, constant_ab, 15):
            assert row.boundary in cuts


@pytest.mark.parametrize("scheme", SCHEMES)
def test_searching_both_shapes_agrees(scheme):
    rng = np.random.default_rng(19)
    for _ in range(40):
        x = random_ev_periodic(rng, 2, 5, 4)
        assert factorize_ev_periodic(x, scheme, cap=16, exhaustive=True) == factorize_ev_periodic(x, scheme, cap=16)


@pytest.mark.parametrize("scheme", [constant_scheme(3), alternating_scheme(3)])
def test_finite_shape_with_long_period(scheme):
    abc = Alphabet.from_string("abc")
    x = parse_infinite("aacbbcab(bcbacc)", abc)
    f = factorize_ev_periodic(x, scheme)
    assert validate_factorization(x, f, scheme).all_passed
    assert factorize_ev_periodic(x, scheme, cap=16, exhaustive=True) == f
