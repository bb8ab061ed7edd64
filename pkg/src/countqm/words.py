"""Words over free monoids and reduced words over free groups.

Words are stored as ``bytes`` of internal letter codes.  In monoid mode the
codes are 0..n-1 for the generators a, b, c, ...; in group mode generator i
gets code 2i and its inverse code 2i+1, so that byte comparison realizes the
fixed letter order a < A < b < B < ...  The empty word prints as "1".
"""

from __future__ import annotations

from dataclasses import dataclass

EMPTY_WORD = b""

_LOWER = "abcdefghijklmnopqrstuvwxyz"
_UPPER = _LOWER.upper()


class WordError(ValueError):
    """Unknown letter, unreduced group word, or alphabet mismatch."""


@dataclass(frozen=True)
class Alphabet:
    """Rank-n alphabet; group mode doubles it with formal inverses."""

    n: int
    mode: str

    def __post_init__(self):
        if not 2 <= self.n <= 26:
            raise WordError(f"rank must be between 2 and 26, got {self.n}")
        if self.mode not in ("monoid", "group"):
            raise WordError(f"mode must be monoid or group, got {self.mode!r}")

    @property
    def is_group(self) -> bool:
        return self.mode == "group"

    @property
    def letter_count(self) -> int:
        return 2 * self.n if self.is_group else self.n

    def letter_name(self, code: int) -> str:
        if self.is_group:
            return (_UPPER if code & 1 else _LOWER)[code >> 1]
        return _LOWER[code]

    def letter_code(self, char: str) -> int:
        if self.is_group:
            if char in _LOWER[: self.n]:
                return 2 * _LOWER.index(char)
            if char in _UPPER[: self.n]:
                return 2 * _UPPER.index(char) + 1
        elif char in _LOWER[: self.n]:
            return _LOWER.index(char)
        raise WordError(f"letter {char!r} is not in the alphabet")

    def inverse_letter(self, code: int) -> int:
        if not self.is_group:
            raise WordError("monoid letters have no inverses")
        return code ^ 1


def parse_word(text: str, alphabet: Alphabet) -> bytes:
    """Parse "1" as the empty word, otherwise a string of letters."""
    if text == "1":
        return EMPTY_WORD
    word = bytes(alphabet.letter_code(c) for c in text)
    if alphabet.is_group and not is_reduced(word):
        raise WordError(f"group word {text!r} is not reduced")
    return word


def render_word(word: bytes, alphabet: Alphabet) -> str:
    if not word:
        return "1"
    return "".join(alphabet.letter_name(c) for c in word)


def is_reduced(word: bytes) -> bool:
    """True iff no adjacent letter cancels its neighbour."""
    return all(word[i] ^ 1 != word[i + 1] for i in range(len(word) - 1))


def invert_word(word: bytes) -> bytes:
    """Reverse the word and flip every exponent."""
    return bytes(c ^ 1 for c in reversed(word))


def count_occurrences(v: bytes, w: bytes) -> int:
    """Number of possibly overlapping occurrences of v in w; |w| for v = 1."""
    lv = len(v)
    if lv == 0:
        return len(w)
    if lv > len(w):
        return 0
    return sum(1 for j in range(len(w) - lv + 1) if w[j : j + lv] == v)


def quasimorphism_value(v: bytes, w: bytes) -> int:
    """Occurrences in w minus occurrences in the inverse of w."""
    return count_occurrences(v, w) - count_occurrences(v, invert_word(w))


def shortlex_key(word: bytes):
    return (len(word), word)


def shortlex_compare(w1: bytes, w2: bytes) -> int:
    """-1, 0 or 1: shorter words first, then lexicographic on letter codes."""
    k1, k2 = shortlex_key(w1), shortlex_key(w2)
    if k1 < k2:
        return -1
    return 1 if k1 > k2 else 0


def stem_of(word: bytes) -> bytes:
    """The word with first and last letters removed; needs length >= 2."""
    if len(word) < 2:
        raise WordError("stem needs a word of length at least 2")
    return word[1:-1]


def father_of(word: bytes) -> bytes:
    if not word:
        raise WordError("the root has no father")
    return word[:-1]
