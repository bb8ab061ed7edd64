"""Deterministic input generators and a timing harness for scaling checks.

Two input shapes: "random" draws words uniformly at a fixed depth with
coefficients of geometrically distributed size (such lists are usually
certified minimal almost immediately), and "collapse" builds a full
constant level that the minimizer folds all the way down to the root,
which is the adversarial load for the growth-shape measurements.
"""

from __future__ import annotations

import csv
import gc
import random
import time
from dataclasses import dataclass

from .coeff import IntCode, RatCode, get_domain
from .lists import EncodedList
from .minimize import find_minimal_list
from .oracle import random_word
from .words import Alphabet

CSV_FIELDS = ("mode", "coeff", "n", "input_total", "seed",
              "runtime_ns", "output_total")


@dataclass
class BenchRecord:
    mode: str
    coeff: str
    n: int
    input_total: int
    seed: int
    runtime_ns: int
    output_total: int

    def row(self):
        return [self.mode, self.coeff, self.n, self.input_total,
                self.seed, self.runtime_ns, self.output_total]


def _int_of_size(size: int, rng=None) -> IntCode:
    # bit_length(mag) == size - 1 makes the code size exactly `size`
    mag = 1 << (size - 2)
    if rng is not None and size > 2:
        mag |= rng.getrandbits(size - 2)
    return IntCode(1, mag)


def _rat_of_size(size: int, rng=None) -> RatCode:
    # size = 2*bits(den) + 3 for k = 0, m = 1
    bits = max(1, (size - 3) // 2)
    den = 1 << bits - 1 if bits > 1 else 1
    if rng is not None and bits > 2:
        den |= rng.getrandbits(bits - 2)
    if den < 2:
        den = 2
    return RatCode(1, 0, 1, den)


def _coeff_of_size(domain, size, rng=None):
    return (_int_of_size(size, rng) if domain.name == "int"
            else _rat_of_size(size, rng))


def random_list(alphabet: Alphabet, domain, target_total: int, seed: int,
                depth: int = 6) -> EncodedList:
    """Uniform words at a fixed depth until the total size reaches target."""
    rng = random.Random(seed)
    pairs = []
    total = 0
    size = domain.size
    while total < target_total:
        word = random_word(alphabet, depth, rng)
        s = 2
        while rng.random() < 0.5:
            s += 1
        code = _coeff_of_size(domain, s + (3 if domain.name == "rat" else 0),
                              rng)
        if rng.random() < 0.5:
            code = domain.neg(code)
        pairs.append((word, code))
        total += len(word) + size(code)
    return EncodedList(alphabet, domain, pairs)


def collapse_list(alphabet: Alphabet, domain, target_total: int,
                  seed: int = 0) -> EncodedList:
    """Leaves of a fully branched subtree, all with one equal coefficient.

    Every internal vertex carries all of its children, so the deepest
    layer prunes into the next one all the way down to the root; the
    minimizer touches every entry at every level.  Leaves are expanded
    breadth-first, which keeps the pair count proportional to the target
    size regardless of branching granularity.
    """
    code = _coeff_of_size(domain, 5 if domain.name == "rat" else 2)
    coeff_size = domain.size(code)

    from collections import deque
    leaves = deque([b""])
    total = coeff_size
    while True:
        word = leaves[0]
        children = [word + bytes([c]) for c in range(alphabet.letter_count)
                    if not (alphabet.is_group and word and word[-1] ^ 1 == c)]
        grown = total - (len(word) + coeff_size) \
            + sum(len(w) + coeff_size for w in children)
        if leaves[0] != b"" and grown > target_total:
            break
        leaves.popleft()
        leaves.extend(children)
        total = grown
    return EncodedList(alphabet, domain, [(w, code) for w in leaves])


def generate(shape: str, alphabet: Alphabet, domain, target_total: int,
             seed: int) -> EncodedList:
    if shape == "random":
        return random_list(alphabet, domain, target_total, seed)
    if shape == "collapse":
        return collapse_list(alphabet, domain, target_total, seed)
    raise ValueError(f"unknown bench shape {shape!r}")


def run_bench(mode: str, coeff: str, n: int, sizes, trials: int, seed: int,
              shape: str = "collapse") -> list[BenchRecord]:
    """Time find_minimal_list on generated inputs; one record per trial."""
    alphabet = Alphabet(n, mode)
    domain = get_domain(coeff)
    records = []
    for target in sizes:
        for trial in range(trials):
            trial_seed = seed + 1009 * trial + 9176 * target
            L = generate(shape, alphabet, domain, target, trial_seed)
            input_total = L.total_size
            gc_was_enabled = gc.isenabled()
            gc.disable()
            t0 = time.perf_counter_ns()
            M = find_minimal_list(L)
            t1 = time.perf_counter_ns()
            if gc_was_enabled:
                gc.enable()
            records.append(BenchRecord(
                mode=mode, coeff=coeff, n=n, input_total=input_total,
                seed=trial_seed, runtime_ns=t1 - t0,
                output_total=M.total_size))
    return records


def write_csv(records, path) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_FIELDS)
        for record in records:
            writer.writerow(record.row())
