"""CSV and figure rendering for square growth and avoidance-tree shape."""

from __future__ import annotations

import csv
from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .words import WORD_NAMES, named_prefix
from .repetition import max_square_root
from .search import AvoidancePredicate, incremental_violation_check

DEFAULT_GROWTH_LENGTHS = (64, 256, 1024, 4096)


def square_growth_rows(names=WORD_NAMES, lengths=DEFAULT_GROWTH_LENGTHS):
    """Rows (name, prefix_length, max_square_root) for the named words."""
    rows = []
    for name in names:
        word = named_prefix(name, max(lengths))
        for length in sorted(lengths):
            rows.append((name, length, max_square_root(word[:length])))
    return rows


def write_square_growth(out_dir, names=WORD_NAMES, lengths=DEFAULT_GROWTH_LENGTHS):
    """Write square-growth data as CSV plus a PNG figure; returns both paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = square_growth_rows(names, lengths)
    csv_path = out_dir / "square_growth.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["word", "prefix_length", "max_square_root"])
        writer.writerows(rows)

    fig, ax = plt.subplots(figsize=(6, 4))
    for name in names:
        points = [(length, root) for word, length, root in rows if word == name]
        ax.plot([p[0] for p in points], [p[1] for p in points], marker="o", label=name)
    ax.set_xscale("log", base=2)
    ax.set_xlabel("prefix length")
    ax.set_ylabel("largest square root")
    ax.set_title("Square growth along named words")
    ax.legend()
    fig.tight_layout()
    png_path = out_dir / "square_growth.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return csv_path, png_path


def leaf_depth_rows(predicate: AvoidancePredicate, fix_first_letter: int | None = 0,
                    depth_cap: int = 64):
    """Rows (depth, leaf_count) for the avoidance tree of ``predicate``."""
    counts: Counter[int] = Counter()
    k = predicate.alphabet_size
    root = b"" if fix_first_letter is None else bytes([fix_first_letter])
    stack = [root]
    while stack:
        label = stack.pop()
        if len(label) == len(root):
            ok = predicate.allows(label)
        else:
            ok = incremental_violation_check(label, predicate)
        if not ok:
            counts[len(label)] += 1
            continue
        if len(label) >= depth_cap:
            raise ValueError("tree exceeds the depth cap; no finite profile exists")
        stack.extend(label + bytes([letter]) for letter in range(k))
    return sorted(counts.items())


def write_leaf_depths(out_dir, predicate: AvoidancePredicate | None = None,
                      fix_first_letter: int | None = 0, depth_cap: int = 64):
    """Write the leaf-depth profile as CSV plus a PNG bar chart; returns both paths."""
    if predicate is None:
        # the binary tree forbidding cubes and squares with roots of length 3+
        predicate = AvoidancePredicate(alphabet_size=2, min_forbidden_square_root=3,
                                       forbid_cubes=True)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = leaf_depth_rows(predicate, fix_first_letter, depth_cap)
    csv_path = out_dir / "leaf_depths.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["depth", "leaf_count"])
        writer.writerows(rows)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar([depth for depth, _ in rows], [count for _, count in rows])
    ax.set_xlabel("leaf depth")
    ax.set_ylabel("leaves")
    ax.set_title("Avoidance-tree leaf depths")
    fig.tight_layout()
    png_path = out_dir / "leaf_depths.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return csv_path, png_path
