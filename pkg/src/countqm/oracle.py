"""Brute-force cross-check for small instances.

The extension relations (a word against its one-letter extensions) are
exact up to a bounded boundary term, so membership of a coefficient vector
in their span plus the span of shallow basis words decides equivalence and
minimal depth.  Everything here runs on reduced big fractions and exact
Gaussian elimination, fully independent of the size-bounded pipeline
arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .lists import EncodedList, evaluate, normalize_list, build_difference
from .words import Alphabet, is_reduced

ORACLE_DIMENSION_LIMIT = 10_000


class OracleTooLargeError(ValueError):
    """The instance exceeds the oracle's elimination budget."""


def words_up_to(alphabet: Alphabet, depth: int):
    """All words of length <= depth, shortlex order (reduced in group mode)."""
    out = [b""]
    level = [b""]
    for _ in range(depth):
        nxt = []
        for w in level:
            for c in range(alphabet.letter_count):
                if alphabet.is_group and w and w[-1] ^ 1 == c:
                    continue
                nxt.append(w + bytes([c]))
        out.extend(nxt)
        level = nxt
    return out


def ambient_dimension(alphabet: Alphabet, depth: int) -> int:
    total, level = 1, 1
    for k in range(depth):
        if alphabet.is_group:
            level = level * (2 * alphabet.n - 1) if k else 2 * alphabet.n
        else:
            level *= alphabet.n
        total += level
    return total


@dataclass
class RelationBasis:
    """Left/right extension relations among words of length <= depth."""

    alphabet: Alphabet
    depth: int
    words: list
    index: dict
    vectors: list   # sparse {word index: +-1}


def relation_vectors(alphabet: Alphabet, depth: int) -> RelationBasis:
    """All left- and right-extension relations for words of length < depth."""
    if depth < 1:
        raise ValueError("relation vectors need depth >= 1")
    words = words_up_to(alphabet, depth)
    index = {w: i for i, w in enumerate(words)}
    vectors = []
    for w in words:
        if len(w) >= depth:
            continue
        letters = range(alphabet.letter_count)
        if alphabet.is_group and w:
            left = {index[w]: 1}
            for c in letters:
                if c != w[0] ^ 1:
                    left[index[bytes([c]) + w]] = -1
            right = {index[w]: 1}
            for c in letters:
                if c != w[-1] ^ 1:
                    right[index[w + bytes([c])]] = -1
            vectors.append(left)
            vectors.append(right)
        else:
            left = {index[w]: 1}
            for c in letters:
                left[index[bytes([c]) + w]] = -1
            vectors.append(left)
            if w:
                right = {index[w]: 1}
                for c in letters:
                    right[index[w + bytes([c])]] = -1
                vectors.append(right)
    return RelationBasis(alphabet, depth, words, index, vectors)


# ---------------------------------------------------------------------------
# sparse exact elimination
# ---------------------------------------------------------------------------

def _reduce(vec: dict, rows: list, upto: int) -> dict:
    """Reduce vec against the first upto echelon rows (pivot values are 1)."""
    for pivot, row in rows[:upto]:
        coef = vec.get(pivot)
        if not coef:
            continue
        vec.pop(pivot)
        for k, v in row.items():
            new = vec.get(k, 0) - coef * v
            if new:
                vec[k] = new
            else:
                vec.pop(k, None)
    return vec


def _insert(rows: list, vec: dict) -> bool:
    """Append vec to the echelon if independent; True when inserted."""
    vec = _reduce(vec, rows, len(rows))
    if not vec:
        return False
    pivot = min(vec)
    coef = vec[pivot]
    row = {k: Fraction(v, coef) for k, v in vec.items() if k != pivot}
    rows.append((pivot, row))
    return True


class _Elimination:
    """Echelon of the relation span, extended level by level with basis
    words; prefix at boundary d spans relations + words of length <= d."""

    def __init__(self, alphabet: Alphabet, depth: int):
        self.basis = relation_vectors(alphabet, depth)
        self.rows: list = []
        for vec in self.basis.vectors:
            _insert(self.rows, dict(vec))
        self.boundaries = [len(self.rows)]
        for w in self.basis.words:     # shortlex order groups by length
            while len(w) > len(self.boundaries) - 1:
                self.boundaries.append(len(self.rows))
            _insert(self.rows, {self.basis.index[w]: 1})
        while len(self.boundaries) < depth + 2:
            self.boundaries.append(len(self.rows))

    def minimal_depth(self, vec: dict) -> int:
        vec = dict(vec)
        start = 0
        for d, upto in enumerate(self.boundaries, start=-1):
            for pivot, row in self.rows[start:upto]:
                coef = vec.get(pivot)
                if not coef:
                    continue
                for k, v in row.items():
                    new = vec.get(k, 0) - coef * v
                    if new:
                        vec[k] = new
                    else:
                        vec.pop(k, None)
                vec.pop(pivot, None)
            if not vec:
                return d
            start = upto
        raise AssertionError("the full echelon spans the ambient space")


_CACHE: dict = {}


def _elimination_for(alphabet: Alphabet, depth: int) -> _Elimination:
    key = (alphabet.mode, alphabet.n, depth)
    if key not in _CACHE:
        if ambient_dimension(alphabet, depth) > ORACLE_DIMENSION_LIMIT:
            raise OracleTooLargeError(
                f"ambient dimension {ambient_dimension(alphabet, depth)} "
                f"exceeds the oracle limit {ORACLE_DIMENSION_LIMIT}")
        _CACHE[key] = _Elimination(alphabet, depth)
    return _CACHE[key]


def oracle_minimal_depth(L: EncodedList) -> int:
    """Least d >= -1 with the vector of L in span(relations) + shallow words."""
    N = normalize_list(L)
    depth = N.max_depth()
    if depth <= 0:
        return depth
    elim = _elimination_for(N.alphabet, depth)
    index = elim.basis.index
    vec = {index[w]: Fraction(N.domain.value(x)) for w, x in N.pairs}
    return elim.minimal_depth(vec)


def oracle_equivalent(L1: EncodedList, L2: EncodedList) -> bool:
    return oracle_minimal_depth(build_difference(L1, L2)) == -1


def express_in_span(vectors, target):
    """Exact coefficients writing target as a combination of vectors, or
    None; elimination with full bookkeeping, for small sanity checks."""
    rows = []        # (pivot, row, combination)
    for i, vec in enumerate(vectors):
        work = {k: Fraction(v) for k, v in vec.items()}
        comb = {i: Fraction(1)}
        for pivot, row, rcomb in rows:
            coef = work.get(pivot)
            if not coef:
                continue
            work.pop(pivot)
            for k, v in row.items():
                new = work.get(k, 0) - coef * v
                if new:
                    work[k] = new
                else:
                    work.pop(k, None)
            for k, v in rcomb.items():
                new = comb.get(k, 0) - coef * v
                if new:
                    comb[k] = new
                else:
                    comb.pop(k, None)
        if work:
            pivot = min(work)
            coef = work.pop(pivot)
            rows.append((pivot,
                         {k: v / coef for k, v in work.items()},
                         {k: v / coef for k, v in comb.items()}))
    work = {k: Fraction(v) for k, v in target.items()}
    solution: dict = {}
    for pivot, row, rcomb in rows:
        coef = work.get(pivot)
        if not coef:
            continue
        work.pop(pivot)
        for k, v in row.items():
            new = work.get(k, 0) - coef * v
            if new:
                work[k] = new
            else:
                work.pop(k, None)
        for k, v in rcomb.items():
            new = solution.get(k, 0) + coef * v
            if new:
                solution[k] = new
            else:
                solution.pop(k, None)
    if work:
        return None
    return solution


# ---------------------------------------------------------------------------
# randomized boundedness smoke test
# ---------------------------------------------------------------------------

def random_word(alphabet: Alphabet, length: int, rng: random.Random) -> bytes:
    letters = alphabet.letter_count
    word = bytearray()
    for _ in range(length):
        c = rng.randrange(letters)
        while alphabet.is_group and word and word[-1] ^ 1 == c:
            c = rng.randrange(letters)
        word.append(c)
    out = bytes(word)
    assert not alphabet.is_group or is_reduced(out)
    return out


def empirical_sup(L: EncodedList, sample_count: int, max_len: int,
                  seed: int):
    """Max |evaluate(L, w)| over deterministic samples of length <= max_len.

    Lengths cycle through 0..max_len so every length is hit once
    sample_count reaches max_len + 1.
    """
    rng = random.Random(seed)
    best = 0
    for i in range(sample_count):
        w = random_word(L.alphabet, i % (max_len + 1), rng)
        best = max(best, abs(evaluate(L, w)))
    return best
