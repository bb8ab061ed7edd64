import random
from fractions import Fraction

import pytest

from conftest import random_instance
from countqm.coeff import INT_DOMAIN, RAT_DOMAIN
from countqm.lists import EncodedList, from_entries
from countqm.oracle import (
    OracleTooLargeError,
    ambient_dimension,
    empirical_sup,
    express_in_span,
    oracle_equivalent,
    oracle_minimal_depth,
    random_word,
    relation_vectors,
    words_up_to,
)
from countqm.words import Alphabet

MON2 = Alphabet(2, "monoid")
MON3 = Alphabet(3, "monoid")
GRP2 = Alphabet(2, "group")
GRP3 = Alphabet(3, "group")


def test_relation_vector_counts():
    assert len(relation_vectors(MON2, 1).vectors) == 1
    assert len(relation_vectors(MON2, 2).vectors) == 5
    assert len(relation_vectors(GRP2, 1).vectors) == 1
    # one relation at the root, two per deeper word
    basis = relation_vectors(MON3, 3)
    expected = 1 + 2 * (3 + 9)
    assert len(basis.vectors) == expected


def test_words_up_to_matches_dimension():
    for alphabet, depth in ((MON3, 4), (GRP2, 3), (GRP3, 2)):
        assert len(words_up_to(alphabet, depth)) == \
            ambient_dimension(alphabet, depth)


def test_relation_vectors_are_bounded_functions():
    rng = random.Random(7)
    for alphabet in (MON2, GRP2):
        basis = relation_vectors(alphabet, 2)
        for vec in basis.vectors:
            L = EncodedList(alphabet, INT_DOMAIN,
                            [(basis.words[i], INT_DOMAIN.from_value(c))
                             for i, c in vec.items()])
            assert empirical_sup(L, 120, 12, seed=rng.randint(0, 999)) <= 1


def test_oracle_depth_examples():
    ones = from_entries(MON3, INT_DOMAIN,
                        [(a + b, 1) for a in "abc" for b in "abc"])
    assert oracle_minimal_depth(ones) == 0
    unbal = from_entries(MON3, INT_DOMAIN,
                         [("1", 17), ("b", -6), ("c", -1),
                          ("aa", 4), ("ab", 2), ("ac", 1),
                          ("ca", 5), ("cb", 3), ("cc", 7)])
    assert oracle_minimal_depth(unbal) == 2
    assert oracle_minimal_depth(from_entries(MON3, INT_DOMAIN, [])) == -1
    assert oracle_minimal_depth(from_entries(MON3, INT_DOMAIN,
                                             [("1", 3)])) == 0


def test_oracle_equivalent_examples():
    assert oracle_equivalent(
        from_entries(MON3, INT_DOMAIN, [("1", 1)]),
        from_entries(MON3, INT_DOMAIN, [("a", 1), ("b", 1), ("c", 1)]))
    assert not oracle_equivalent(from_entries(MON3, INT_DOMAIN, [("a", 1)]),
                                 from_entries(MON3, INT_DOMAIN, [("b", 1)]))
    rng = random.Random(13)
    L = random_instance(GRP2, RAT_DOMAIN, rng)
    assert oracle_equivalent(L, L)


def test_oracle_size_guard():
    big = from_entries(Alphabet(7, "group"), INT_DOMAIN, [("abcdefg", 1)])
    with pytest.raises(OracleTooLargeError):
        oracle_minimal_depth(big)


def test_express_in_span_resubstitutes_exactly():
    rng = random.Random(17)
    for alphabet in (MON2, GRP2):
        basis = relation_vectors(alphabet, 3)
        for _ in range(20):
            coefs = {i: Fraction(rng.randint(-5, 5), rng.randint(1, 5))
                     for i in rng.sample(range(len(basis.vectors)), 4)}
            target: dict = {}
            for i, c in coefs.items():
                if not c:
                    continue
                for k, v in basis.vectors[i].items():
                    target[k] = target.get(k, 0) + c * v
            target = {k: v for k, v in target.items() if v}
            solution = express_in_span(basis.vectors, target)
            assert solution is not None
            rebuilt: dict = {}
            for i, c in solution.items():
                for k, v in basis.vectors[i].items():
                    rebuilt[k] = rebuilt.get(k, 0) + c * v
            rebuilt = {k: v for k, v in rebuilt.items() if v}
            assert rebuilt == target


def test_express_in_span_rejects_outsiders():
    basis = relation_vectors(MON2, 2)
    # rho_a alone is not a combination of extension relations
    target = {basis.index[b"\x00"]: Fraction(1)}
    assert express_in_span(basis.vectors, target) is None


def test_empirical_sup_examples():
    eps = from_entries(MON3, INT_DOMAIN, [("1", 1)])
    assert empirical_sup(eps, 200, 50, seed=0) == 50
    assert empirical_sup(from_entries(MON3, INT_DOMAIN, []), 50, 10, 0) == 0
    # deterministic in the seed
    rng_insensitive = from_entries(MON3, RAT_DOMAIN, [("ab", Fraction(1, 3))])
    a = empirical_sup(rng_insensitive, 100, 20, seed=5)
    b = empirical_sup(rng_insensitive, 100, 20, seed=5)
    assert a == b


def test_random_word_reduced_and_deterministic():
    rng1, rng2 = random.Random(3), random.Random(3)
    for _ in range(50):
        w1 = random_word(GRP2, 10, rng1)
        w2 = random_word(GRP2, 10, rng2)
        assert w1 == w2
