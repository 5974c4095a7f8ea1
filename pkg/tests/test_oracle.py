"""Tests for evaluation.oracle: the brute-force references and the instance generator."""
import itertools
from pathlib import Path

import numpy as np
import pytest

from core.errors import InvalidInput, TooLarge
from core.factorize import factorize_finite
from core.lyndon import is_omega_lyndon_infinite
from core.orders import (
    AlphabetOrder,
    PositionalOrderScheme,
    alternating_scheme,
    compare_ev_periodic,
    constant_scheme,
    random_ev_periodic,
)
from core.words import Alphabet, EventuallyPeriodicWord, parse_finite
from evaluation.oracle import (
    InstanceGenerator,
    duval_factorize,
    enumerate_factorizations,
    generate,
    golden_lines,
    naive_compare,
    prefix_factorization_search,
    random_scheme,
    shortest_factorization,
)

GOLDEN = Path(__file__).parent / "data" / "generator_seed1.txt"


def _schemes():
    rng = np.random.default_rng(1)
    return [constant_scheme(2), alternating_scheme(2), random_scheme(rng, 2), random_scheme(rng, 2)]


@pytest.mark.parametrize(
    "text,expected",
    [("abbab", [["abb", "ab"]]), ("ab", [["ab"]]), ("aa", [["a", "a"]])],
)
def test_enumerate_factorizations_vectors(fw, sigma_alt, text, expected):
    got = enumerate_factorizations(fw(text), sigma_alt)
    assert got == [[fw(p) for p in parts] for parts in expected]


def test_enumerate_factorizations_guard(sigma_alt):
    with pytest.raises(TooLarge):
        enumerate_factorizations((0,) * 17, sigma_alt)
    with pytest.raises(TooLarge):
        enumerate_factorizations((0,) * 6, sigma_alt, limit=5)


def test_finite_factorization_unique_exhaustive():
    for scheme in _schemes():
        for n in range(1, 8):
            for w in itertools.product((0, 1), repeat=n):
                assert enumerate_factorizations(w, scheme) == [factorize_finite(w, scheme)]


@pytest.mark.parametrize("text,expected", [("banana", ["b", "an", "an", "a"]), ("aaa", ["a", "a", "a"]), ("ab", ["ab"])])
def test_duval_vectors(text, expected):
    abn = Alphabet.from_string("abn")
    got = duval_factorize(parse_finite(text, abn), AlphabetOrder.identity(3))
    assert [abn.render(f) for f in got] == expected


def test_duval_respects_alphabet_order():
    # b < a
    assert duval_factorize((0, 1), AlphabetOrder((1, 0))) == [(0,), (1,)]


def test_duval_rejects_empty():
    with pytest.raises(InvalidInput):
        duval_factorize((), AlphabetOrder.identity(2))


def test_duval_matches_factorize_under_constant_orders():
    rng = np.random.default_rng(6)
    for _ in range(300):
        k = int(rng.integers(2, 5))
        order = AlphabetOrder(tuple(int(a) for a in rng.permutation(k)))
        scheme = PositionalOrderScheme((), (order,))
        w = tuple(int(a) for a in rng.integers(0, k, size=int(rng.integers(1, 30))))
        assert factorize_finite(w, scheme) == duval_factorize(w, order)


def test_naive_compare_agrees():
    rng = np.random.default_rng(14)
    for scheme in _schemes():
        for _ in range(300):
            x, y = random_ev_periodic(rng, 2), random_ev_periodic(rng, 2)
            assert naive_compare(x, y, scheme) == compare_ev_periodic(x, y, scheme)


def test_shortest_factorization_can_beat_non_increasing(fw, sigma_alt):
    assert shortest_factorization(fw("ababab"), sigma_alt) == [fw("ababa"), fw("b")]
    assert len(factorize_finite(fw("ababab"), sigma_alt)) == 3


def test_shortest_factorization_never_longer():
    rng = np.random.default_rng(15)
    for scheme in _schemes():
        for _ in range(100):
            w = tuple(int(a) for a in rng.integers(0, 2, size=int(rng.integers(1, 12))))
            parts = shortest_factorization(w, scheme)
            assert tuple(a for p in parts for a in p) == w
            assert len(parts) <= len(factorize_finite(w, scheme))


def _lyndon_samples(scheme, count, seed):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        x = random_ev_periodic(rng, 2, 5, 4)
        if is_omega_lyndon_infinite(x, scheme):
            out.append(x)
    return out


@pytest.mark.parametrize("scheme", [constant_scheme(2), alternating_scheme(2)])
def test_non_increasing_decompositions_use_prefixes(scheme):
    for x in _lyndon_samples(scheme, 15, 16):
        for parts in prefix_factorization_search(x, scheme, k_max=3, part_max=4):
            for u in parts:
                assert x.prefix(len(u)) == u


@pytest.mark.parametrize("scheme", [constant_scheme(2), alternating_scheme(2)])
def test_three_part_decompositions_skip_middle(scheme):
    for x in _lyndon_samples(scheme, 15, 18):
        for parts in prefix_factorization_search(x, scheme, k_max=4, part_max=3):
            if len(parts) < 3:
                continue
            lead = tuple(a for p in parts[:-2] for a in p)
            last = parts[-1]
            assert len(lead) <= len(last) or x.prefix(len(lead) + len(last)) == lead + last


def test_prefix_search_validates_bounds(iw, sigma_alt):
    with pytest.raises(InvalidInput):
        list(prefix_factorization_search(iw("ab(a)"), sigma_alt, 0, 3))


def test_generator_validates_bounds():
    with pytest.raises(InvalidInput):
        InstanceGenerator(alphabet_size=0)
    with pytest.raises(InvalidInput):
        InstanceGenerator(min_length=5, max_length=2)
    with pytest.raises(InvalidInput):
        InstanceGenerator(max_period=0)


def test_generator_is_deterministic():
    gen = InstanceGenerator(seed=3)
    assert list(generate(gen, 40)) == list(generate(gen, 40))
    first = list(generate(gen, 2))
    assert first == [constant_scheme(2), alternating_scheme(2)]


def test_generator_unary_alphabet():
    for inst in generate(InstanceGenerator(seed=2, alphabet_size=1), 30):
        if isinstance(inst, PositionalOrderScheme):
            assert inst.alphabet_size == 1
        elif isinstance(inst, EventuallyPeriodicWord):
            assert inst == EventuallyPeriodicWord((), (0,))
        else:
            assert set(inst) == {0}


def test_generator_period_bound_one():
    for inst in generate(InstanceGenerator(seed=4, max_period=1), 60):
        if isinstance(inst, EventuallyPeriodicWord):
            assert len(inst.period) == 1


def test_generator_golden_file():
    if not GOLDEN.exists():
        pytest.skip(f"{GOLDEN.name} not recorded; run scripts/record_golden.py")
    lines = golden_lines(seed=1)
    assert GOLDEN.read_text(encoding="utf-8") == "\n".join(lines) + "\n"


def test_golden_stream_starts_with_fixed_schemes():
    lines = golden_lines(seed=1)
    assert len(lines) == 30
    assert lines[:2] == ["scheme ab", "scheme ab,ba"]
    assert [line.split(" ")[0] for line in lines[2:5]] == ["word", "infinite", "scheme"]
    assert golden_lines(seed=1) == lines
    assert golden_lines(seed=2) != lines
