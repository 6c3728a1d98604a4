import pytest

from cayleyviz import HAVE_FAST, is_complete
from cayleyviz.bench import BenchRow, format_rows, random_out_regular, run


def test_random_out_regular_is_seeded():
    a = random_out_regular(40, seed=9)
    b = random_out_regular(40, seed=9)
    c = random_out_regular(40, seed=10)
    assert a == b
    assert a != c
    assert a.num_labels == 2 and a.num_vertices == 40
    assert is_complete(a)


def test_run_produces_one_row_per_size():
    rows = run([30, 60], seed=0, impl="pure")
    assert [(r.size, r.impl) for r in rows] == [(30, "pure"), (60, "pure")]
    for row in rows:
        assert row.edges == 2 * row.size
        assert row.wall_seconds > 0
        assert row.ns_per_element > 0


def test_run_both_compares_backends():
    rows = run([30], seed=0, impl="both")
    impls = [r.impl for r in rows]
    if HAVE_FAST:
        assert impls == ["pure", "fast"]
    else:
        assert impls == ["pure"]


def test_format_rows():
    text = format_rows([BenchRow(10, 20, "pure", 0.0015)])
    lines = text.splitlines()
    assert lines[0] == "# size edges impl wall_ms ns_per_element"
    assert lines[1] == "10 20 pure 1.500 50000.0"


def test_rejects_unknown_impl():
    with pytest.raises(ValueError):
        run([10], seed=0, impl="turbo")
