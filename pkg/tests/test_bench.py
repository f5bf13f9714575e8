"""Benchmark helpers: delay profiles, scaling timers, TSV and figure output."""

import io
import random

import pytest

from absub import bench
from absub.cli import main
from absub.string_index import build_index, build_word


def test_random_letters_covers_the_alphabet():
    rng = random.Random(7)
    letters = bench.random_letters(50, 5, rng)
    assert len(letters) == 50
    assert set(letters) == {1, 2, 3, 4, 5}
    with pytest.raises(ValueError):
        bench.random_letters(3, 5, rng)


def test_delay_profile_counts_every_output():
    idx = build_index(build_word("1121332211322", "bytes"))
    for engine in ("sas", "mas-direct", "mas-skeleton"):
        deltas = bench.delay_profile(idx, engine, 5)
        assert len(deltas) == 5
        assert all(d >= 1 for d in deltas)
    with pytest.raises(ValueError):
        bench.delay_profile(idx, "warp", 5)


def test_measure_delay_row_shape():
    rows = bench.measure_delay([50, 200], [2], 30, random.Random(3))
    assert len(rows) == 2 * 3 * 2  # sizes x engines x two metrics
    for row in rows:
        assert len(row) == len(bench.TSV_COLUMNS)
        assert row[0] == "delay"
        assert row[1] in ("sas", "mas-direct", "mas-skeleton")
    maxima = [r for r in rows if r[5] == "max_steps_per_output"]
    assert all(r[6] >= 1 for r in maxima)


def test_measure_delay_skips_undersized_words():
    rows = bench.measure_delay([3], [8], 10, random.Random(3))
    assert rows == []


def test_measure_scaling_rows():
    rows = bench.measure_scaling([300], [3], random.Random(5))
    stages = [r[1] for r in rows]
    assert stages == ["index+sas-skeleton", "longest-mas"]
    assert all(r[6] >= 0 for r in rows)


def test_write_tsv_golden():
    out = io.StringIO()
    bench.write_tsv([("delay", "sas", 10, 2, 5, "max_steps_per_output", 4)], out)
    assert out.getvalue() == ("section\tengine\tn\tsigma\toutputs\tmetric\tvalue\n"
                              "delay\tsas\t10\t2\t5\tmax_steps_per_output\t4\n")


def test_render_figures(tmp_path):
    rng = random.Random(11)
    rows = bench.measure_delay([60, 240], [2], 20, rng)
    rows += bench.measure_scaling([200, 400], [2], rng)
    written = bench.render_figures(rows, str(tmp_path / "figs"))
    assert [p.rsplit("/", 1)[1] for p in written] == ["delay.png", "scaling.png"]
    for path in written:
        with open(path, "rb") as fh:
            assert fh.read(8) == b"\x89PNG\r\n\x1a\n"


def test_bench_subcommand_tsv_and_figures(tmp_path):
    out = io.StringIO()
    code = main(["bench", "--sizes", "80,160", "--sigmas", "2", "--outputs", "25",
                 "--figures", str(tmp_path)], out)
    assert code == 0
    lines = out.getvalue().splitlines()
    assert lines[0] == "\t".join(bench.TSV_COLUMNS)
    body = [l for l in lines[1:] if not l.startswith("figure: ")]
    assert len(body) == 2 * 3 * 2 + 2 * 2
    figures = [l for l in lines if l.startswith("figure: ")]
    assert len(figures) == 2
    assert (tmp_path / "delay.png").exists()
    assert (tmp_path / "scaling.png").exists()


def test_bench_subcommand_tsv_file(tmp_path):
    out = io.StringIO()
    dest = tmp_path / "bench.tsv"
    code = main(["bench", "--sizes", "60", "--sigmas", "2", "--outputs", "10",
                 "--out", str(dest)], out)
    assert code == 0
    assert out.getvalue() == ""
    assert dest.read_text().splitlines()[0] == "\t".join(bench.TSV_COLUMNS)


def test_bench_rejects_bad_arguments():
    assert main(["bench", "--sizes", "abc"], io.StringIO()) == 2
    assert main(["bench", "--sizes", "-5"], io.StringIO()) == 2
    assert main(["bench", "--sigmas", ""], io.StringIO()) == 2
    assert main(["bench", "--outputs", "0"], io.StringIO()) == 2
