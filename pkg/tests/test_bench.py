import csv

from countqm.bench import (
    CSV_FIELDS,
    collapse_list,
    generate,
    random_list,
    run_bench,
    write_csv,
)
from countqm.coeff import INT_DOMAIN, RAT_DOMAIN
from countqm.minimize import find_minimal_list
from countqm.words import Alphabet

MON3 = Alphabet(3, "monoid")
GRP2 = Alphabet(2, "group")


def test_random_list_is_deterministic_and_sized():
    a = random_list(MON3, INT_DOMAIN, 4000, seed=7)
    b = random_list(MON3, INT_DOMAIN, 4000, seed=7)
    assert a == b
    assert a.total_size >= 4000
    assert a.total_size <= 4000 + 200
    c = random_list(MON3, INT_DOMAIN, 4000, seed=8)
    assert c != a


def test_collapse_list_minimizes_to_root():
    for alphabet, domain in ((MON3, INT_DOMAIN), (GRP2, INT_DOMAIN),
                             (MON3, RAT_DOMAIN)):
        L = collapse_list(alphabet, domain, 3000)
        assert abs(L.total_size - 3000) < 300
        M = find_minimal_list(L)
        assert len(M.pairs) == 1 and M.pairs[0][0] == b""


def test_generate_rejects_unknown_shape():
    try:
        generate("bogus", MON3, INT_DOMAIN, 100, 0)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_run_bench_rows_and_csv(tmp_path):
    records = run_bench("monoid", "int", 3, [1024, 2048], trials=2, seed=5)
    assert len(records) == 4
    assert [r.input_total for r in records[:2]] == \
        [records[0].input_total] * 2      # same generated input per size
    path = tmp_path / "bench.csv"
    write_csv(records, path)
    with open(path, newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == list(CSV_FIELDS)
    assert len(rows) == 5
    assert all(int(row[5]) > 0 for row in rows[1:])


def test_run_bench_zero_trials_header_only(tmp_path):
    records = run_bench("monoid", "int", 3, [1024], trials=0, seed=5)
    assert records == []
    path = tmp_path / "empty.csv"
    write_csv(records, path)
    with open(path, newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows == [list(CSV_FIELDS)]
