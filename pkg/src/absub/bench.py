"""Delay and scaling measurements for the enumeration engines.

Two sections: `delay` samples the number of enumerator steps spent between
consecutive outputs (the constant-delay claim), `scaling` wall-clocks index
plus skeleton construction and the longest-MAS dynamic program (the
near-linear preprocessing claim).  Results go out as TSV; with --figures a
PNG per section is rendered next to it.
"""

from __future__ import annotations

import random
import time

from . import mas_direct, mas_skeleton, sas
from .string_index import build_index, build_word
from .longest_mas import longest_mas
from .skeleton import StepCounter

TSV_COLUMNS = ("section", "engine", "n", "sigma", "outputs", "metric", "value")


def random_letters(n: int, sigma: int, rng: random.Random) -> list[int]:
    """Random word of length n whose alphabet is exactly 1..sigma."""
    if n < sigma:
        raise ValueError(f"need n >= sigma, got n={n} sigma={sigma}")
    return list(range(1, sigma + 1)) + [rng.randint(1, sigma) for _ in range(n - sigma)]


def _index_for(n: int, sigma: int, rng: random.Random):
    return build_index(build_word(random_letters(n, sigma, rng), "ints"))


def delay_profile(idx, engine: str, outputs: int) -> list[int]:
    """Steps spent producing each of the first `outputs` edit scripts."""
    stats = StepCounter()
    if engine == "sas":
        stream = sas.enumerate_sas_incremental(idx, stats=stats)
    elif engine == "mas-direct":
        stream = mas_direct.enumerate_mas_incremental(idx, stats=stats)
    elif engine == "mas-skeleton":
        stream = mas_skeleton.enumerate_mas_via_skeleton_incremental(idx, stats=stats)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    deltas = []
    before = 0
    for _ in stream:
        deltas.append(stats.steps - before)
        before = stats.steps
        if len(deltas) >= outputs:
            break
    return deltas


def measure_delay(sizes, sigmas, outputs: int, rng: random.Random):
    rows = []
    for sigma in sigmas:
        for n in sizes:
            if n < sigma:
                continue
            idx = _index_for(n, sigma, rng)
            for engine in ("sas", "mas-direct", "mas-skeleton"):
                deltas = delay_profile(idx, engine, outputs)
                if not deltas:
                    continue
                rows.append(("delay", engine, n, sigma, len(deltas),
                             "max_steps_per_output", max(deltas)))
                rows.append(("delay", engine, n, sigma, len(deltas),
                             "mean_steps_per_output",
                             round(sum(deltas) / len(deltas), 3)))
    return rows


def time_index_and_sas_skeleton(letters) -> float:
    """Seconds to build the index and the SAS skeleton from raw letters."""
    start = time.perf_counter()
    idx = build_index(build_word(letters, "ints"))
    sas.build_sas_skeleton(idx)
    return time.perf_counter() - start


def time_longest_mas(idx) -> float:
    """Seconds for the longest-MAS computation (with witness) on a prebuilt index."""
    start = time.perf_counter()
    longest_mas(idx)
    return time.perf_counter() - start


def measure_scaling(sizes, sigmas, rng: random.Random):
    rows = []
    for sigma in sigmas:
        for n in sizes:
            if n < sigma:
                continue
            letters = random_letters(n, sigma, rng)
            rows.append(("scaling", "index+sas-skeleton", n, sigma, "-",
                         "seconds", round(time_index_and_sas_skeleton(letters), 6)))
            idx = build_index(build_word(letters, "ints"))
            rows.append(("scaling", "longest-mas", n, sigma, "-",
                         "seconds", round(time_longest_mas(idx), 6)))
    return rows


def write_tsv(rows, out) -> None:
    print("\t".join(TSV_COLUMNS), file=out)
    for row in rows:
        print("\t".join(str(v) for v in row), file=out)


def render_figures(rows, directory: str) -> list[str]:
    """Render delay.png and scaling.png into `directory`; returns the paths."""
    import os

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(directory, exist_ok=True)
    written = []

    def series_of(section, metric):
        series = {}
        for sec, engine, n, sigma, _, met, value in rows:
            if sec == section and met == metric:
                series.setdefault((engine, sigma), []).append((n, value))
        return {k: sorted(v) for k, v in series.items()}

    delay = series_of("delay", "max_steps_per_output")
    if delay:
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for (engine, sigma), points in sorted(delay.items()):
            ax.plot([p[0] for p in points], [p[1] for p in points],
                    marker="o", label=f"{engine}, sigma={sigma}")
        ax.set_xscale("log")
        ax.set_xlabel("word length n")
        ax.set_ylabel("max steps between outputs")
        ax.set_title("Enumeration delay")
        ax.legend()
        fig.tight_layout()
        path = os.path.join(directory, "delay.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    scaling = series_of("scaling", "seconds")
    if scaling:
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for (stage, sigma), points in sorted(scaling.items()):
            ax.plot([p[0] for p in points], [p[1] for p in points],
                    marker="o", label=f"{stage}, sigma={sigma}")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("word length n")
        ax.set_ylabel("seconds")
        ax.set_title("Preprocessing scaling")
        ax.legend()
        fig.tight_layout()
        path = os.path.join(directory, "scaling.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    return written


def run(args, out) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    sigmas = [int(tok) for tok in args.sigmas.split(",") if tok.strip()]
    if not sizes or not sigmas or min(sizes) <= 0 or min(sigmas) <= 0:
        raise ValueError("sizes and sigmas must be positive integers")
    if args.outputs <= 0:
        raise ValueError("outputs must be positive")
    rng = random.Random(args.seed)
    rows = measure_delay(sizes, sigmas, args.outputs, rng)
    rows += measure_scaling(sizes, sigmas, rng)
    if args.out is None:
        write_tsv(rows, out)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_tsv(rows, fh)
    if args.figures is not None:
        for path in render_figures(rows, args.figures):
            print(f"figure: {path}", file=out)
    return 0
