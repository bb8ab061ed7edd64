"""Minimization of counting functions over free monoids and free groups.

The pipeline repeatedly prunes full constant brotherhoods and applies
transfer-and-prune moves to the deepest layer, either certifying the list
minimal (unbalanced, or a transfer matrix that is not a column-row-sum) or
producing an equivalent list one level shallower.  Monoid and group modes
share the engine; the group case differs in the doubled alphabet, the
reduced-word bookkeeping around stems, and a special move at depth 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lists import (
    EncodedList,
    WeightedBrotherhood,
    build_difference,
    normalize_list,
    normalize_pairs,
)
from .words import invert_word


class PreconditionError(ValueError):
    """Input violates an operation's stated precondition."""


@dataclass
class StepRecord:
    """One main-processing-step invocation, for contraction assertions."""

    mode: str
    n: int
    depth: int
    input_total: int
    input_coeff: int
    output_total: int
    minimal: bool
    special: bool
    special_delta_size: int = 0


def _constant_depth(pairs) -> int:
    depth = len(pairs[0][0])
    if any(len(w) != depth for w, _ in pairs):
        raise PreconditionError("list is not of constant depth")
    return depth


def _run_end(pairs, start: int) -> int:
    father = pairs[start][0][:-1]
    end = start + 1
    while end < len(pairs) and pairs[end][0][:-1] == father:
        end += 1
    return end


def _full_size(alphabet, depth: int) -> int:
    if not alphabet.is_group:
        return alphabet.n
    return 2 * alphabet.n if depth == 1 else 2 * alphabet.n - 1


def _prune_runs(pairs, h: int, domain):
    """Remove every full all-equal run, keeping one pair at its father."""
    equal, size = domain.equal, domain.size
    kept, created = [], []
    i = 0
    while i < len(pairs):
        j = _run_end(pairs, i)
        run = pairs[i:j]
        if j - i == h and all(equal(run[0][1], x) for _, x in run[1:]):
            best = min(run, key=lambda p: size(p[1]))
            created.append((run[0][0][:-1], best[1]))
        else:
            kept.extend(run)
        i = j
    return kept, created


def prune_list(N: EncodedList, depth: int | None = None):
    """Prune all constant brotherhoods of a normalized constant-depth list."""
    if not N.normalized:
        raise PreconditionError("prune_list needs a normalized list")
    if not N.pairs:
        raise PreconditionError("prune_list needs a nonempty list")
    ell = _constant_depth(N.pairs)
    if ell < 1 or (depth is not None and depth != ell):
        raise PreconditionError(f"bad depth {depth} for a list of depth {ell}")
    kept, created = _prune_runs(N.pairs, _full_size(N.alphabet, ell), N.domain)
    return (N.replaced(kept, normalized=True),
            N.replaced(created, normalized=True))


# ---------------------------------------------------------------------------
# transfer matrices
# ---------------------------------------------------------------------------

class TransferMatrix:
    """Coefficients of the words (row letter)(stem)(column letter)."""

    __slots__ = ("stem", "row_letters", "col_letters", "entries", "domain")

    def __init__(self, stem, row_letters, col_letters, entries, domain):
        self.stem = stem
        self.row_letters = row_letters
        self.col_letters = col_letters
        self.entries = entries
        self.domain = domain

    def nontrivial_count(self) -> int:
        is_zero = self.domain.is_zero
        return sum(1 for row in self.entries for x in row if not is_zero(x))

    def coeff_size(self) -> int:
        size = self.domain.size
        return sum(size(x) for row in self.entries for x in row)

    def values(self):
        """Interpreted entries, trivial slots as 0 (for tests and debugging)."""
        value = self.domain.value
        return [[value(x) for x in row] for row in self.entries]


@dataclass
class ColumnRowDecomposition:
    """Witness that a transfer matrix is the column-row-sum of y and z."""

    y: list
    z: list
    pivot_row: int
    pivot_col: int


def _matrix_letters(alphabet, stem):
    letters = range(alphabet.letter_count)
    if not alphabet.is_group:
        return list(letters), list(letters)
    if not stem:
        raise PreconditionError("group transfer matrices need a nonempty stem")
    rows = [c for c in letters if c != stem[0] ^ 1]
    cols = [c for c in letters if c != stem[-1] ^ 1]
    return rows, cols


def build_transfer_matrix(B: EncodedList, stem: bytes) -> TransferMatrix:
    """Arrange the coefficients of B by first and last letter around stem."""
    domain = B.domain
    row_letters, col_letters = _matrix_letters(B.alphabet, stem)
    row_index = {c: i for i, c in enumerate(row_letters)}
    col_index = {c: j for j, c in enumerate(col_letters)}
    entries = [[domain.zero] * len(col_letters) for _ in row_letters]
    for word, code in B.pairs:
        if word[1:-1] != stem:
            raise PreconditionError(
                f"word does not match the stem: {word!r} vs {stem!r}")
        entries[row_index[word[0]]][col_index[word[-1]]] = code
    return TransferMatrix(stem, row_letters, col_letters, entries, domain)


def _column_row_decomposition(T: TransferMatrix, i0: int):
    """y/z decomposition with pivot row i0, or None if not a column-row-sum."""
    domain = T.domain
    sub, equal = domain.sub, domain.equal
    m = len(T.row_letters)
    y = [domain.zero] * m
    for i in range(m):
        if i == i0:
            continue
        diff = None
        for j in range(len(T.col_letters)):
            d = sub(T.entries[i][j], T.entries[i0][j])
            if diff is not None and not equal(diff, d):
                return None
            diff = d
        y[i] = diff
    return ColumnRowDecomposition(y=y, z=list(T.entries[i0]),
                                  pivot_row=i0, pivot_col=0)


def _transfer_core(T: TransferMatrix):
    """Single transfer-and-prune move; (True, None) when not a column-row-sum.

    Pivot choices follow the smallest-index rule throughout.  The sparse
    branch transfers the row with the fewest entries and copies per-row
    smallest coefficients from its zero set; the non-sparse branch transfers
    the row of smallest total size.
    """
    domain = T.domain
    size, sub, is_zero = domain.size, domain.sub, domain.is_zero
    entries = T.entries
    m = len(T.row_letters)
    stem = T.stem

    sizes = [[size(x) for x in row] for row in entries]
    i0 = min(range(m), key=lambda i: sum(sizes[i]))

    if _column_row_decomposition(T, i0) is None:
        return True, None

    nontrivial = T.nontrivial_count()
    sparse = (m > 3 and nontrivial < 3 * m) or (m == 3 and nontrivial < 2 * m)

    out = []
    col_word = [stem + bytes([c]) for c in T.col_letters]
    row_word = [bytes([c]) + stem for c in T.row_letters]
    if not sparse:
        for j in range(m):
            if not is_zero(entries[i0][j]):
                out.append((col_word[j], entries[i0][j]))
        col_total = [sum(sizes[i][j] for i in range(m)) for j in range(m)]
        j0 = min(range(m),
                 key=lambda j: (m - 2) * sizes[i0][j] + col_total[j])
        for i in range(m):
            if i == i0:
                continue
            y = sub(entries[i][j0], entries[i0][j0])
            if not is_zero(y):
                out.append((row_word[i], y))
    else:
        per_row = [sum(1 for x in row if not is_zero(x)) for row in entries]
        i1 = min(range(m), key=lambda i: per_row[i])
        zero_set = [j for j in range(m) if is_zero(entries[i1][j])]
        support = [j for j in range(m) if not is_zero(entries[i1][j])]
        for i in range(m):
            if i == i1:
                continue
            j1 = min(zero_set, key=lambda j: sizes[i][j])
            if not is_zero(entries[i][j1]):
                out.append((row_word[i], entries[i][j1]))
        if i0 == i1:
            for j in support:
                out.append((col_word[j], entries[i1][j]))
        else:
            j0 = min(zero_set, key=lambda j: sizes[i0][j])
            for j in support:
                z = sub(entries[i0][j], entries[i0][j0])
                if not is_zero(z):
                    out.append((col_word[j], z))
    return False, normalize_pairs(out, domain)


def _family_matrix(alphabet, domain, stem, row_runs):
    """Transfer matrix from per-row-letter brotherhood runs (None = empty)."""
    row_letters, col_letters = _matrix_letters(alphabet, stem)
    col_index = {c: j for j, c in enumerate(col_letters)}
    entries = []
    for letter, run in zip(row_letters, row_runs):
        row = [domain.zero] * len(col_letters)
        if run:
            for word, code in run:
                row[col_index[word[-1]]] = code
        entries.append(row)
    return TransferMatrix(stem, row_letters, col_letters, entries, domain)


def transfer_and_prune(brotherhoods) -> tuple[bool, EncodedList]:
    """Transfer-and-prune a family of related non-constant brotherhoods.

    Accepts the detached nonempty members; related brotherhoods that are
    absent count as empty rows.  Returns (True, concatenation) when the
    family is certified minimal, else (False, depth ell-1 output).
    """
    members = [b.entries if isinstance(b, WeightedBrotherhood) else b
               for b in brotherhoods]
    members = [b for b in members if b.pairs]
    if not members:
        raise PreconditionError("transfer_and_prune needs a nonempty family")
    alphabet, domain = members[0].alphabet, members[0].domain
    ell = _constant_depth([p for b in members for p in b.pairs])
    if ell < 2:
        raise PreconditionError("transfer moves need depth at least 2")
    if alphabet.is_group and ell == 2:
        raise PreconditionError(
            "group depth-2 families go through special_transfer_and_prune")
    stem = members[0].pairs[0][0][1:-1]
    row_letters, _ = _matrix_letters(alphabet, stem)
    row_runs: list = [None] * len(row_letters)
    for b in members:
        first = b.pairs[0][0][0]
        if any(w[0] != first or w[1:-1] != stem for w, _ in b.pairs):
            raise PreconditionError("family members must share one stem")
        row_runs[row_letters.index(first)] = b.pairs
    T = _family_matrix(alphabet, domain, stem, row_runs)
    minimal, out = _transfer_core(T)
    if minimal:
        merged = [p for run in row_runs if run for p in run]
        return True, EncodedList(alphabet, domain, merged, normalized=True)
    return False, EncodedList(alphabet, domain, out, normalized=True)


# ---------------------------------------------------------------------------
# the special depth-2 move over the doubled alphabet
# ---------------------------------------------------------------------------

def _special_core(pairs, alphabet, domain):
    """Clear out the depth-2 layer around the fixed letter b = a1.

    The layer is equivalent to a depth-1 list exactly when the matrix is a
    column-row-sum over the cells (a, a') with a' != a^-1.  Because the cell
    (b, b^-1) is missing, anchoring the decomposition at row b and column
    b^-1 leaves one degree of freedom: the virtual diagonal value
    delta = t(x, b^-1) + t(b, a') - t(x, a'), which solvability requires to
    be the same for every valid cell but does not require to vanish.  With
    delta = 0 this is the textbook anchored condition; a nonzero constant
    delta is still reducible and shifts the output coefficients of the
    letters outside {b, b^-1}.

    Returns (minimal, output pairs or None, size of the delta code).
    """
    add, sub, equal, is_zero = (domain.add, domain.sub, domain.equal,
                                domain.is_zero)
    count = alphabet.letter_count
    t = [[domain.zero] * count for _ in range(count)]
    for word, code in pairs:
        t[word[0]][word[1]] = code
    b = 0
    b_inv = 1
    delta = None
    for a in range(count):
        if a == b:
            continue
        ta = t[a]
        for a2 in range(count):
            if a2 == b_inv or a2 == a ^ 1:
                continue
            d = sub(add(ta[b_inv], t[b][a2]), ta[a2])
            if delta is None:
                delta = d
            elif not equal(delta, d):
                return True, None, 0
    if delta is None:
        delta = domain.zero
    out = [(bytes([b]), t[b][b]), (bytes([b_inv]), t[b_inv][b_inv])]
    if is_zero(delta):
        for a in range(2, count):
            out.append((bytes([a]), add(t[b][a], t[a][b_inv])))
    else:
        for a in range(2, count):
            out.append((bytes([a]), sub(add(t[b][a], t[a][b_inv]), delta)))
    return (False, [(w, x) for w, x in out if not is_zero(x)],
            domain.size(delta))


def special_transfer_and_prune(layer: EncodedList) -> tuple[bool, EncodedList]:
    """Depth-2 group move; all depth-2 brotherhoods are mutually related."""
    if not layer.alphabet.is_group:
        raise PreconditionError("the special move only exists in group mode")
    if not layer.normalized or not layer.pairs:
        raise PreconditionError("the special move needs a normalized "
                                "nonempty list")
    if _constant_depth(layer.pairs) != 2:
        raise PreconditionError("the special move needs constant depth 2")
    minimal, out, _ = _special_core(layer.pairs, layer.alphabet, layer.domain)
    if minimal:
        return True, layer
    return False, layer.replaced(out, normalized=True)


# ---------------------------------------------------------------------------
# main processing step
# ---------------------------------------------------------------------------

def _buckets_by_first_letter(pairs, letter_count):
    buckets = [[] for _ in range(letter_count)]
    for pair in pairs:
        buckets[pair[0][0]].append(pair)
    return buckets


def _main_step_pairs(pairs, alphabet, domain):
    """Raw main processing step; (True, None) means the input was minimal."""
    ell = _constant_depth(pairs)
    if ell < 2:
        raise PreconditionError("main processing step needs depth >= 2")
    kept, collected = _prune_runs(pairs, _full_size(alphabet, ell), domain)

    if alphabet.is_group and ell == 2:
        delta_size = 0
        if kept:
            minimal, out, delta_size = _special_core(kept, alphabet, domain)
            if minimal:
                return True, None, 0
            collected.extend(out)
        return False, normalize_pairs(collected, domain), delta_size

    count = alphabet.letter_count
    buckets = _buckets_by_first_letter(kept, count)
    cursor = [0] * count

    if not alphabet.is_group:
        while True:
            live = [c for c in range(count) if cursor[c] < len(buckets[c])]
            if not live:
                break
            row_runs: list = [None] * count
            stem = None
            for c in live:
                end = _run_end(buckets[c], cursor[c])
                run = buckets[c][cursor[c]:end]
                cursor[c] = end
                row_runs[c] = run
                run_stem = run[0][0][1:-1]
                if stem is None:
                    stem = run_stem
                elif run_stem != stem:
                    return True, None, 0
            T = _family_matrix(alphabet, domain, stem, row_runs)
            minimal, out = _transfer_core(T)
            if minimal:
                return True, None, 0
            collected.extend(out)
    else:
        while True:
            live = [c for c in range(count) if cursor[c] < len(buckets[c])]
            if not live:
                break
            stem = min(buckets[c][cursor[c]][0][1:-1] for c in live)
            row_letters = [c for c in range(count) if c != stem[0] ^ 1]
            row_runs = []
            for c in row_letters:
                if cursor[c] >= len(buckets[c]) \
                        or buckets[c][cursor[c]][0][1:-1] != stem:
                    return True, None, 0
                end = _run_end(buckets[c], cursor[c])
                row_runs.append(buckets[c][cursor[c]:end])
                cursor[c] = end
            T = _family_matrix(alphabet, domain, stem, row_runs)
            minimal, out = _transfer_core(T)
            if minimal:
                return True, None, 0
            collected.extend(out)

    return False, normalize_pairs(collected, domain), 0


def main_processing_step(N: EncodedList) -> tuple[bool, EncodedList]:
    """Process one constant-depth layer; minimal verdict or an equivalent
    layer one level shallower.  On a minimal verdict the input is returned
    verbatim."""
    if not N.normalized:
        raise PreconditionError("main processing step needs a normalized list")
    if not N.pairs:
        raise PreconditionError("main processing step needs a nonempty list")
    minimal, out, _ = _main_step_pairs(N.pairs, N.alphabet, N.domain)
    if minimal:
        return True, N
    return False, N.replaced(out, normalized=True)


# ---------------------------------------------------------------------------
# the full minimization loop
# ---------------------------------------------------------------------------

def _assemble(alphabet, domain, level_slices, top_pairs):
    pairs = [p for level in level_slices for p in level]
    pairs.extend(top_pairs)
    return EncodedList(alphabet, domain, pairs, normalized=True)


def find_minimal_list(L: EncodedList, on_step=None,
                      on_frame=None) -> EncodedList:
    """Return a normalized minimal list equivalent to L."""
    alphabet, domain = L.alphabet, L.domain
    N = normalize_list(L)
    if on_frame is not None:
        on_frame(N)
    if not N.pairs:
        return N
    d = len(N.pairs[-1][0])
    levels: list[list] = [[] for _ in range(d + 1)]
    for pair in N.pairs:
        levels[len(pair[0])].append(pair)
    if d == 0:
        return N

    top = levels[d]
    for depth in range(d, 1, -1):
        if top:
            if on_step is not None:
                size = domain.size
                in_total = sum(len(w) + size(x) for w, x in top)
                in_coeff = sum(size(x) for _, x in top)
            minimal, out, delta_size = _main_step_pairs(top, alphabet, domain)
            if on_step is not None:
                out_total = (in_total if minimal else
                             sum(len(w) + domain.size(x) for w, x in out))
                record = StepRecord(
                    mode=alphabet.mode, n=alphabet.n, depth=depth,
                    input_total=in_total, input_coeff=in_coeff,
                    output_total=out_total, minimal=minimal,
                    special=alphabet.is_group and depth == 2,
                    special_delta_size=delta_size)
                on_step(record)
            if minimal:
                result = _assemble(alphabet, domain, levels[:depth], top)
                if on_frame is not None:
                    on_frame(result)
                return result
        else:
            out = []
        top = normalize_pairs(out + levels[depth - 1], domain)
        if on_frame is not None:
            on_frame(_assemble(alphabet, domain, levels[: depth - 1], top))

    # depth <= 1 endgame: prune the unique depth-1 brotherhood if constant
    if top:
        kept, created = _prune_runs(top, _full_size(alphabet, 1), domain)
        if not kept:
            result = EncodedList(alphabet, domain,
                                 normalize_pairs(created + levels[0], domain),
                                 normalized=True)
        else:
            result = _assemble(alphabet, domain, levels[:1], top)
    else:
        result = EncodedList(alphabet, domain, levels[0], normalized=True)
    if on_frame is not None:
        on_frame(result)
    return result


def decide_equivalent(L1: EncodedList, L2: EncodedList) -> bool:
    """True iff the two counting functions are at bounded distance."""
    return not find_minimal_list(build_difference(L1, L2)).pairs


# ---------------------------------------------------------------------------
# group-specific decisions
# ---------------------------------------------------------------------------

def is_antisymmetric(L: EncodedList) -> bool:
    """True iff the normalized coefficients satisfy c(w^-1) = -c(w)."""
    if not L.alphabet.is_group:
        raise PreconditionError("antisymmetry is a group-mode notion")
    N = normalize_list(L)
    values = {w: L.domain.value(x) for w, x in N.pairs}
    return all(values.get(invert_word(w), 0) == -v
               for w, v in values.items())


def decide_cohomologous(L1: EncodedList, L2: EncodedList) -> bool:
    """True iff the difference minimizes to depth <= 1 (same bounded class)."""
    if not L1.alphabet.is_group or not L2.alphabet.is_group:
        raise PreconditionError("cohomology decisions need group mode")
    if not is_antisymmetric(L1) or not is_antisymmetric(L2):
        raise PreconditionError("cohomology decisions need antisymmetric "
                                "inputs")
    diff = build_difference(L1, L2)
    return find_minimal_list(diff).max_depth() <= 1
