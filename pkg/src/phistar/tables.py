"""Regenerate the five classification tables and compare them with golden csv."""
from __future__ import annotations

import csv
import difflib
import io
from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple

from .application import classify
from .enumeration import enumerate_Mstar_2, enumerate_Mstar_ge3
from .ppdfactor import multiset_notation

TABLE_NAMES = ("1", "2", "3", "4", "5")

Table = Tuple[List[str], List[List[str]]]  # header, rows


def _mstar_tables(jobs: int) -> dict:
    rows = enumerate_Mstar_ge3(1, 4, jobs=jobs)
    t1, t3, t4 = [], [], []
    for r in rows:
        cell = multiset_notation(r.factorization)
        if r.n == 6:
            t3.append([str(r.q.value), cell])
        elif r.n >= 19:
            t4.append([str(r.n), str(r.q.value), cell])
        else:
            t1.append([str(r.n), str(r.q.value), cell])
    return {"1": (["n", "q", "I"], t1), "3": (["q", "I"], t3), "4": (["n", "q", "I"], t4)}


def generate(name: str, jobs: int = 1) -> Table:
    if name in ("1", "3", "4"):
        return _mstar_tables(jobs)[name]
    if name == "2":
        result = enumerate_Mstar_2(1, 4, 5000)
        return ["q"], [[str(row.q.value)] for row, _ in result.union()]
    if name == "5":
        rows = []
        for r in classify(jobs=jobs):
            rows.append([str(r.n), str(r.q.value), multiset_notation(r.I),
                         "" if r.c0 is None else str(r.c0),
                         "" if r.c1 is None else str(r.c1)])
        return ["n", "q", "I", "c0", "c1"], rows
    raise ValueError(f"unknown table {name!r}")


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table[0])
    w.writerows(table[1])
    return buf.getvalue()


def to_text(table: Table) -> str:
    header, rows = table
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]
    lines = []
    for cells in [header] + rows:
        lines.append("  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip())
    return "\n".join(lines) + "\n"


def golden_path(name: str, golden_dir: Optional[Path] = None) -> Path:
    if golden_dir is not None:
        return Path(golden_dir) / f"table{name}.csv"
    return Path(str(resources.files("phistar") / "data" / f"table{name}.csv"))


def load_golden(name: str, golden_dir: Optional[Path] = None) -> Table:
    """Read a golden table, skipping '#' comment lines."""
    path = golden_path(name, golden_dir)
    with open(path, newline="", encoding="utf-8") as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    data = list(csv.reader(lines))
    return data[0], data[1:]


def diff(expected: Table, actual: Table, name: str) -> List[str]:
    return list(difflib.unified_diff(
        to_csv(expected).splitlines(), to_csv(actual).splitlines(),
        fromfile=f"golden/table{name}.csv", tofile=f"computed/table{name}.csv", lineterm=""))


def check(name: str, jobs: int = 1, golden_dir: Optional[Path] = None) -> Tuple[Table, List[str]]:
    """Regenerate table ``name`` and diff it against the golden file."""
    expected = load_golden(name, golden_dir)
    actual = generate(name, jobs)
    return actual, diff(expected, actual, name)
