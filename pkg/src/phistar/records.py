"""Flat output records and their csv / jsonl / text encodings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional

from .cyclotomic import PhiStarResult
from .enumeration import PairRow, SetTag
from .ppdfactor import PpdFactorization

CSV_FIELDS = ["n", "q", "q_base", "q_exp", "phi_n", "phi_star", "I", "c0", "c1", "set_tag"]


@dataclass
class OutputRecord:
    n: int
    q: int
    q_base: int
    q_exp: int
    phi_n: str
    phi_star: str
    I: Optional[List[int]] = None
    c0: Optional[int] = None
    c1: Optional[int] = None
    set_tag: Optional[str] = None
    branch: Optional[str] = None  # text output only

    @classmethod
    def from_pair(cls, row: PairRow, tag: Optional[SetTag] = None) -> "OutputRecord":
        set_tag = tag.value if tag in (SetTag.R2, SetTag.S2, SetTag.T2) else None
        return cls(row.n, row.q.value, row.q.base, row.q.exponent, str(row.phi_n),
                   str(row.phi_star), _indices(row.factorization), set_tag=set_tag)

    @classmethod
    def from_result(cls, res: PhiStarResult, base: int, exp: int,
                    f: Optional[PpdFactorization]) -> "OutputRecord":
        return cls(res.n, res.q, base, exp, str(res.phi_n), str(res.phi_star),
                   _indices(f), branch=res.branch.value)

    def to_json(self) -> str:
        d = asdict(self)
        del d["branch"]
        return json.dumps(d, separators=(", ", ": "))

    def csv_cells(self) -> List[str]:
        def cell(x):
            return "" if x is None else str(x)
        i_cell = "" if self.I is None else ";".join(map(str, self.I))
        return [str(self.n), str(self.q), str(self.q_base), str(self.q_exp),
                self.phi_n, self.phi_star, i_cell, cell(self.c0), cell(self.c1),
                cell(self.set_tag)]

    def to_text(self) -> str:
        parts = [f"n={self.n}", f"q={self.q}", f"phi_n={self.phi_n}",
                 f"phi_star={self.phi_star}"]
        if self.branch is not None:
            parts.append(f"branch={self.branch}")
        if self.I is not None:
            parts.append("I=" + (",".join(map(str, self.I)) or "-"))
        if self.c0 is not None:
            parts.append(f"c0={self.c0} c1={self.c1}")
        if self.set_tag is not None:
            parts.append(f"set={self.set_tag}")
        return " ".join(parts)


def _indices(f: Optional[PpdFactorization]) -> Optional[List[int]]:
    return None if f is None else f.indices


def render(records: Iterable[OutputRecord], fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(r.to_json() + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in records:
            w.writerow(r.csv_cells())
        return buf.getvalue()
    if fmt == "text":
        return "".join(r.to_text() + "\n" for r in records)
    raise ValueError(f"unknown format {fmt!r}")


def parse_csv(text: str) -> List[dict]:
    """Inverse of the csv encoding, for consumers and round-trip checks."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        rec = {k: row[k] for k in CSV_FIELDS}
        for k in ("n", "q", "q_base", "q_exp", "c0", "c1"):
            rec[k] = int(rec[k]) if rec[k] else None
        rec["I"] = [int(x) for x in rec["I"].split(";")] if rec["I"] else []
        rec["set_tag"] = rec["set_tag"] or None
        out.append(rec)
    return out
