"""Comparison of computed F(n, 1) spectra with the published tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Optional

from .partitions import Partition, dimension, enumerate_partitions, parse_partition
from .spectra import eta_direct, spectrum


@dataclass(frozen=True)
class GoldenTable:
    n: int
    min_first_part: Optional[int]
    rows: tuple[tuple[Partition, int], ...]

    def expected_shapes(self) -> set[Partition]:
        return {
            lam for lam in enumerate_partitions(self.n)
            if self.min_first_part is None or lam[0] >= self.min_first_part
        }


@dataclass(frozen=True)
class Mismatch:
    shape: Partition
    printed: int
    computed: int
    # independent character-sum value, and tr(A) if the printed value replaced the computed one
    direct: int
    trace_if_printed: int


@dataclass
class TableComparison:
    n: int
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    missing: list[Partition] = field(default_factory=list)
    unexpected: list[Partition] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.mismatches or self.missing or self.unexpected)


@lru_cache(maxsize=1)
def _raw() -> dict:
    text = resources.files("pfg").joinpath("data/golden_f_n1.json").read_text()
    return json.loads(text)


def golden_tables() -> list[GoldenTable]:
    out = []
    for n, table in _raw()["tables"].items():
        rows = tuple((parse_partition(lam), int(eta)) for lam, eta in table["rows"])
        out.append(GoldenTable(int(n), table["min_first_part"], rows))
    return sorted(out, key=lambda t: t.n)


def label_corrections() -> list[dict]:
    return list(_raw()["label_corrections"])


def compare(table: GoldenTable) -> TableComparison:
    computed = spectrum(table.n, 1)
    values = {e.shape: e.eta for e in computed.entries}
    trace = computed.moment(1)
    result = TableComparison(table.n)
    printed_shapes = set()
    for lam, printed in table.rows:
        printed_shapes.add(lam)
        if lam not in values:
            continue
        result.checked += 1
        if values[lam] != printed:
            f = dimension(lam)
            result.mismatches.append(
                Mismatch(
                    lam, printed, values[lam],
                    direct=eta_direct(lam, 1),
                    trace_if_printed=trace + f * f * (printed - values[lam]),
                )
            )
    result.missing = sorted(table.expected_shapes() - printed_shapes, reverse=True)
    result.unexpected = sorted(printed_shapes - table.expected_shapes(), reverse=True)
    return result


def compare_all() -> list[TableComparison]:
    return [compare(t) for t in golden_tables()]
