"""Encoded lists of word-coefficient pairs and their file/graph formats.

An encoded list represents the counting function sum_i x_i * rho_{w_i}.
Normalized lists have strictly shortlex-increasing words and no zero
coefficients; every algorithm entry point normalizes first.
"""

from __future__ import annotations

from .coeff import CoefficientDomain, format_coeff, get_domain
from .words import (
    Alphabet,
    WordError,
    count_occurrences,
    father_of,
    parse_word,
    render_word,
    shortlex_key,
)


class ListFormatError(ValueError):
    """qmlist parse error, carrying the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EncodedList:
    """An ordered sequence of (word, coefficient-code) pairs."""

    __slots__ = ("alphabet", "domain", "pairs", "normalized")

    def __init__(self, alphabet: Alphabet, domain: CoefficientDomain,
                 pairs=(), normalized: bool = False):
        self.alphabet = alphabet
        self.domain = domain
        self.pairs = list(pairs)
        self.normalized = normalized

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __bool__(self):
        return bool(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, EncodedList):
            return NotImplemented
        return (self.alphabet == other.alphabet
                and self.domain.name == other.domain.name
                and len(self.pairs) == len(other.pairs)
                and all(w1 == w2 and self.domain.equal(x1, x2)
                        for (w1, x1), (w2, x2)
                        in zip(self.pairs, other.pairs)))

    def __repr__(self):
        entries = ", ".join(
            f"({render_word(w, self.alphabet)},{format_coeff(x)})"
            for w, x in self.pairs[:8])
        if len(self.pairs) > 8:
            entries += ", ..."
        return f"EncodedList[{self.alphabet.mode} n={self.alphabet.n} {entries}]"

    @property
    def word_size(self) -> int:
        return sum(len(w) for w, _ in self.pairs)

    @property
    def coeff_size(self) -> int:
        size = self.domain.size
        return sum(size(x) for _, x in self.pairs)

    @property
    def total_size(self) -> int:
        size = self.domain.size
        return sum(len(w) + size(x) for w, x in self.pairs)

    def max_depth(self) -> int:
        """Longest word with a nonzero coefficient, or -1 if none."""
        is_zero = self.domain.is_zero
        return max((len(w) for w, x in self.pairs if not is_zero(x)),
                   default=-1)

    def replaced(self, pairs, normalized: bool = False) -> "EncodedList":
        return EncodedList(self.alphabet, self.domain, pairs, normalized)


def from_entries(alphabet: Alphabet, domain: CoefficientDomain,
                 entries) -> EncodedList:
    """Build a list from (word-text, value) pairs; handy in tests."""
    pairs = [(parse_word(w, alphabet), domain.from_value(v))
             for w, v in entries]
    return EncodedList(alphabet, domain, pairs)


def max_depth(L: EncodedList) -> int:
    return L.max_depth()


def normalize_pairs(pairs, domain):
    """Shortlex-sort, merge equal words left to right, drop zeros."""
    add, is_zero = domain.add, domain.is_zero
    out = []
    last_word = None
    for word, code in sorted(pairs, key=lambda p: (len(p[0]), p[0])):
        if word == last_word:
            out[-1] = (word, add(out[-1][1], code))
        else:
            if out and is_zero(out[-1][1]):
                out.pop()
            out.append((word, code))
            last_word = word
    if out and is_zero(out[-1][1]):
        out.pop()
    return out


def normalize_list(L: EncodedList) -> EncodedList:
    return L.replaced(normalize_pairs(L.pairs, L.domain), normalized=True)


class WeightedBrotherhood:
    """The sublist of a normalized list under one father vertex."""

    __slots__ = ("father", "entries")

    def __init__(self, father: bytes, entries: EncodedList):
        self.father = father
        self.entries = entries

    def depth(self) -> int:
        return len(self.father) + 1

    def full_size(self) -> int:
        """Number of children of the father vertex in the Cayley tree."""
        alphabet = self.entries.alphabet
        if not alphabet.is_group:
            return alphabet.n
        return 2 * alphabet.n if not self.father else 2 * alphabet.n - 1

    def is_constant(self) -> bool:
        """Empty, or full with all coefficients interpreting equally."""
        pairs = self.entries.pairs
        if not pairs:
            return True
        if len(pairs) != self.full_size():
            return False
        equal = self.entries.domain.equal
        first = pairs[0][1]
        return all(equal(first, x) for _, x in pairs[1:])


def detach_brotherhood(N: EncodedList):
    """Split off the leading run of pairs sharing the first pair's father."""
    if not N.pairs:
        raise ValueError("cannot detach from an empty list")
    pairs = N.pairs
    first = pairs[0][0]
    if not first:
        end = 1
        father = b""
    else:
        father = father_of(first)
        end = 1
        while end < len(pairs) and pairs[end][0][:-1] == father \
                and len(pairs[end][0]) == len(first):
            end += 1
    brotherhood = WeightedBrotherhood(
        father, N.replaced(pairs[:end], normalized=True))
    return brotherhood, N.replaced(pairs[end:], normalized=True)


def evaluate(L: EncodedList, w: bytes):
    """Exact value of the counting function at w (int, or Fraction)."""
    value = L.domain.value
    total = value(L.domain.zero)
    for v, x in L.pairs:
        occ = count_occurrences(v, w)
        if occ:
            total += value(x) * occ
    return total


def build_difference(L1: EncodedList, L2: EncodedList) -> EncodedList:
    """Normalized list computing evaluate(L1, .) - evaluate(L2, .)."""
    if L1.alphabet != L2.alphabet or L1.domain.name != L2.domain.name:
        raise WordError("lists live over different alphabets or domains")
    neg = L1.domain.neg
    pairs = list(L1.pairs) + [(w, neg(x)) for w, x in L2.pairs]
    return EncodedList(L1.alphabet, L1.domain,
                       normalize_pairs(pairs, L1.domain), normalized=True)


# ---------------------------------------------------------------------------
# qmlist v1 file format
# ---------------------------------------------------------------------------

def parse_list(text: str) -> EncodedList:
    """Parse the qmlist v1 format; raises ListFormatError with line numbers."""
    lines = text.splitlines()
    header = []
    body_start = 0
    for idx, raw in enumerate(lines):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        header.append((idx + 1, stripped))
        if len(header) == 4:
            body_start = idx + 1
            break
    if len(header) < 4:
        raise ListFormatError(len(lines), "incomplete qmlist header")

    (l1, magic), (l2, mode_kv), (l3, n_kv), (l4, coeff_kv) = header
    if magic != "qmlist v1":
        raise ListFormatError(l1, f"expected 'qmlist v1', got {magic!r}")
    if not mode_kv.startswith("mode=") or mode_kv[5:] not in ("monoid", "group"):
        raise ListFormatError(l2, f"expected mode=monoid|group, got {mode_kv!r}")
    mode = mode_kv[5:]
    if not n_kv.startswith("n="):
        raise ListFormatError(l3, f"expected n=<rank>, got {n_kv!r}")
    try:
        n = int(n_kv[2:])
        alphabet = Alphabet(n, mode)
    except (ValueError, WordError) as exc:
        raise ListFormatError(l3, str(exc)) from None
    if not coeff_kv.startswith("coeff=") or coeff_kv[6:] not in ("int", "rat"):
        raise ListFormatError(l4, f"expected coeff=int|rat, got {coeff_kv!r}")
    domain = get_domain(coeff_kv[6:])

    pairs = []
    for idx in range(body_start, len(lines)):
        stripped = lines[idx].split("#", 1)[0].strip()
        if not stripped:
            continue
        fields = stripped.split()
        if len(fields) != 2:
            raise ListFormatError(idx + 1,
                                  f"expected '<word> <coeff>', got {stripped!r}")
        try:
            word = parse_word(fields[0], alphabet)
            code = domain.parse(fields[1])
        except ValueError as exc:
            raise ListFormatError(idx + 1, str(exc)) from None
        pairs.append((word, code))
    return EncodedList(alphabet, domain, pairs)


def serialize_list(L: EncodedList) -> str:
    lines = [
        "qmlist v1",
        f"mode={L.alphabet.mode}",
        f"n={L.alphabet.n}",
        f"coeff={L.domain.name}",
    ]
    for word, code in L.pairs:
        lines.append(f"{render_word(word, L.alphabet)} {format_coeff(code)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# DOT rendering of the weighted tree
# ---------------------------------------------------------------------------

def render_dot(L: EncodedList) -> str:
    """DOT digraph of the convex hull of the entry words in the Cayley tree."""
    domain = L.domain
    weights: dict[bytes, object] = {b"": None}
    for word, code in L.pairs:
        for k in range(1, len(word) + 1):
            weights.setdefault(word[:k], None)
        prior = weights.get(word)
        weights[word] = code if prior is None else domain.add(prior, code)

    def label(code) -> str:
        return format_coeff(code) if code is not None else "0"

    nodes = sorted(weights, key=shortlex_key)
    out = ["digraph countingtree {", "  node [shape=circle];"]
    for w in nodes:
        out.append(f'  "{render_word(w, L.alphabet)}" '
                   f'[label="{label(weights[w])}"];')
    for w in nodes:
        if w:
            parent = render_word(w[:-1], L.alphabet)
            letter = L.alphabet.letter_name(w[-1])
            out.append(f'  "{parent}" -> "{render_word(w, L.alphabet)}" '
                       f'[label="{letter}"];')
    out.append("}")
    return "\n".join(out) + "\n"
