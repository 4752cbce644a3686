import math
import random

import pytest

from gcdperm import LimitExceededError, Params, SequenceBuffer, generate_prefix

F3_24 = [1, 3, 2, 5, 4, 7, 6, 11, 8, 9, 10, 13, 12, 17, 14, 15, 16, 19, 18, 23, 20, 21, 22, 25]
F7_12 = [1, 7, 2, 3, 4, 5, 6, 11, 8, 9, 10, 13]
F36_18 = [1, 36, 5, 2, 3, 4, 7, 6, 11, 8, 9, 10, 13, 12, 17, 14, 15, 16]
F36_38 = F36_18 + [19, 18, 23, 20, 21, 22, 25, 24, 29, 26, 27, 28, 31, 30, 37, 32, 33, 34, 35, 38]


def test_golden_prefixes():
    assert list(generate_prefix(3, 24)) == F3_24
    assert list(generate_prefix(7, 12)) == F7_12
    assert list(generate_prefix(36, 18)) == F36_18
    assert list(generate_prefix(36, 38)) == F36_38


def test_extend_single_steps():
    buf = SequenceBuffer(3)
    assert buf.extend() == 2
    buf = SequenceBuffer(2)
    assert buf.extend() == 3
    buf = generate_prefix(3, 23)
    assert buf.extend() == 25
    assert len(buf) == 24


def test_extend_matches_bulk_generation():
    for a in (2, 3, 4, 7, 36, 41, 216):
        step = SequenceBuffer(a)
        for _ in range(300 - 2):
            step.extend()
        assert list(step) == list(generate_prefix(a, 300))


def test_indexing_and_iteration():
    buf = generate_prefix(3, 24)
    assert buf[1] == 1 and buf[2] == 3 and buf[24] == 25
    assert buf.last == 25
    assert len(buf) == 24
    with pytest.raises(IndexError):
        buf[0]
    with pytest.raises(IndexError):
        buf[25]


def test_inverse():
    buf = generate_prefix(3, 24)
    assert buf.inverse(25) == 24
    assert buf.inverse(1) == 1
    assert buf.inverse(24) is None  # value 24 first appears at f(25)
    buf = generate_prefix(3, 100)
    assert buf.inverse(77) == 74
    # the lazy index keeps up with later extensions
    buf.extend_to(201)
    assert buf.inverse(200) == 201  # even values sit at the next odd index


def test_discrete_derivative():
    buf = generate_prefix(3, 24)
    assert buf.discrete_derivative(7) == 5  # 11 - 6
    assert buf.discrete_derivative(3) == 3  # 5 - 2
    ident = generate_prefix(2, 50)
    assert all(ident.discrete_derivative(t) == 1 for t in range(1, 50))
    with pytest.raises(IndexError):
        buf.discrete_derivative(24)
    with pytest.raises(IndexError):
        buf.discrete_derivative(0)


def test_prefix_surjective_upto_against_set_oracle():
    rng = random.Random(7)
    for a in (2, 3, 7, 36):
        buf = generate_prefix(a, 400)
        values = set(buf)
        for n in [0, 1, 2] + [rng.randrange(1, 500) for _ in range(40)]:
            expected = all(v in values for v in range(1, n + 1))
            assert buf.prefix_surjective_upto(n) == expected


def test_prefix_surjective_examples():
    buf = generate_prefix(3, 24)
    assert buf.prefix_surjective_upto(0)
    assert buf.prefix_surjective_upto(23)
    # 24 shows up as a value only at f(25), so 24 and 25 are not covered yet
    assert not buf.prefix_surjective_upto(24)
    assert not buf.prefix_surjective_upto(25)
    buf.extend()
    assert buf.prefix_surjective_upto(25)


def test_injectivity():
    for a in (2, 3, 4, 7, 36, 216, 1001):
        buf = generate_prefix(a, 3000)
        assert len(set(buf)) == len(buf)


def test_coprimality_invariant():
    for a in (3, 7, 36, 216):
        buf = generate_prefix(a, 2000)
        terms = buf.terms
        assert all(math.gcd(terms[n], terms[n - 1]) == 1 for n in range(3, 2001))


def test_minimality_replay():
    # Re-check, from scratch, that each term really was the smallest unused
    # value coprime to its predecessor.
    rng = random.Random(42)
    for a in (3, 7, 36):
        buf = generate_prefix(a, 20_000)
        terms = buf.terms
        sample = set(rng.sample(range(3, 20_001), 40)) | set(range(3, 300))
        used = {1, a}
        for n in range(3, 20_001):
            prev = terms[n - 1]
            chosen = terms[n]
            if n in sample:
                assert chosen not in used and math.gcd(chosen, prev) == 1
                for v in range(1, chosen):
                    assert v in used or math.gcd(v, prev) != 1
            used.add(chosen)


def test_surjectivity_growth(f3_million):
    # Every value n <= 1e5 has appeared by index 2n.
    first_seen = [0] * (100_001)
    terms = f3_million.terms
    for i in range(1, len(terms)):
        v = terms[i]
        if v <= 100_000 and first_seen[v] == 0:
            first_seen[v] = i
    latest = 0
    for n in range(1, 100_001):
        assert first_seen[n] > 0
        latest = max(latest, first_seen[n])
        assert latest <= 2 * n


def test_odd_index_identity_to_1e5(f3_million):
    terms = f3_million.terms
    assert all(terms[2 * k + 1] == 2 * k for k in range(1, 100_001))


def test_multiples_of_three_identity_to_1e5(f3_million):
    terms = f3_million.terms
    assert all(terms[3 * k + 1] == 3 * k for k in range(2, 100_001))


def test_pool_stays_small_over_a_million_terms(f3_million):
    assert f3_million.pool_peak <= 64


def test_pool_and_frontier_partition_unassigned():
    # pool + [frontier, ...) must be exactly the values not yet assigned
    for a, n in ((3, 5000), (7, 997), (36, 500)):
        buf = generate_prefix(a, n)
        values = set(buf)
        assert buf.frontier == max(values) + 1
        below = {v for v in range(1, buf.frontier) if v not in values}
        assert set(buf.pool) == below
        assert list(buf.pool) == sorted(below)


def test_seed_validation():
    with pytest.raises(ValueError):
        Params(1)
    with pytest.raises(ValueError):
        SequenceBuffer(0)
    with pytest.raises(ValueError):
        generate_prefix(3, 1)
    assert Params(2).a == 2


def test_term_cap():
    with pytest.raises(LimitExceededError):
        generate_prefix(3, 100, max_terms=50)
    buf = generate_prefix(3, 50, max_terms=50)
    with pytest.raises(LimitExceededError):
        buf.extend()
    with pytest.raises(LimitExceededError):
        SequenceBuffer(100, max_terms=50)


def test_term_cap_env_override(monkeypatch):
    monkeypatch.setenv("GCDPERM_MAX_TERMS", "40")
    with pytest.raises(LimitExceededError):
        generate_prefix(3, 41)
    assert len(generate_prefix(3, 40)) == 40
