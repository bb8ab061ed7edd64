"""Shared builders for randomized tests."""

from __future__ import annotations

import random
from fractions import Fraction

from countqm import EncodedList, RatCode
from countqm.oracle import random_word


def random_code(domain, rng: random.Random, bound: int = 16):
    """Coefficient with numerator and denominator bounded by `bound`;
    rational codes are sometimes left unreduced."""
    if domain.name == "int":
        return domain.from_value(rng.randint(-bound, bound))
    code = RatCode.from_value(Fraction(rng.randint(-bound, bound),
                                       rng.randint(1, bound)))
    if code.sign != 0 and rng.random() < 0.4:
        k = rng.randint(2, 4)
        code = RatCode(code.sign, code.k, code.m * k, code.n * k)
    return code


def random_instance(alphabet, domain, rng: random.Random, max_len: int = 4,
                    max_pairs: int = 9, deep_share: float = 1.0) -> EncodedList:
    """Random (possibly unnormalized) list; `deep_share` dampens the rate
    of maximal-length words to keep heavyweight oracle configs rare."""
    pairs = []
    for _ in range(rng.randint(0, max_pairs)):
        if deep_share >= 1.0 or rng.random() < deep_share:
            length = rng.randint(0, max_len)
        else:
            length = rng.randint(0, max_len - 1)
        pairs.append((random_word(alphabet, length, rng),
                      random_code(domain, rng)))
    return EncodedList(alphabet, domain, pairs)
