"""On-disk eigenvalue cache.

Enabled by pointing ``PFG_CACHE_DIR`` at a writable directory. Each
(n, k) pair lives in ``eta_<n>_<k>.jsonl`` with one record per line::

    {"n":5,"k":1,"lambda":"3,2","eta":"-3"}

There is no checksum. Unreadable lines are skipped with a warning, and a
random sample of at least one record (1% of the file) is recomputed on
every load; a single disagreement discards the file.
"""

from __future__ import annotations

import json
import logging
import os
import random
from pathlib import Path
from typing import Iterable, Optional

from .partitions import Partition, dimension, enumerate_partitions, format_partition, parse_partition
from .spectra import SpectrumEntry, SpectrumTable, check_table, eta_k, spectrum

log = logging.getLogger(__name__)

ENV_VAR = "PFG_CACHE_DIR"
SAMPLE_FRACTION = 0.01


def cache_dir() -> Optional[Path]:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def cache_path(directory: Path, n: int, k: int) -> Path:
    return Path(directory) / f"eta_{n}_{k}.jsonl"


def encode_record(n: int, k: int, lam: Partition, eta: int) -> str:
    return json.dumps(
        {"n": n, "k": k, "lambda": format_partition(lam), "eta": str(eta)},
        separators=(",", ":"),
    )


def write_records(path: Path, n: int, k: int, etas: Iterable[tuple[Partition, int]]) -> None:
    if n < 2:
        raise ValueError("only n >= 2 is cached")
    lines = [encode_record(n, k, lam, eta) for lam, eta in etas]
    tmp = path.with_suffix(".tmp")
    tmp.write_text("".join(line + "\n" for line in lines))
    os.replace(tmp, path)


def read_records(path: Path, n: int, k: int) -> dict[Partition, int]:
    """Parse a cache file, skipping (and warning about) malformed lines."""
    out: dict[Partition, int] = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                if rec["n"] != n or rec["k"] != k:
                    raise ValueError("record for a different (n, k)")
                lam = parse_partition(rec["lambda"])
                if sum(lam) != n:
                    raise ValueError("shape has the wrong size")
                if not isinstance(rec["eta"], str):
                    raise ValueError("eta must be a decimal string")
                eta = int(rec["eta"])
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("%s:%d: skipping corrupt cache line (%s)", path, lineno, exc)
                continue
            if lam in out and out[lam] != eta:
                log.warning("%s:%d: conflicting duplicate for %s", path, lineno, lam)
                continue
            out[lam] = eta
    return out


def load(directory: Path, n: int, k: int, rng: Optional[random.Random] = None) -> Optional[dict[Partition, int]]:
    """Validated cache contents for (n, k), or None if absent or untrusted."""
    path = cache_path(directory, n, k)
    if not path.exists():
        return None
    records = read_records(path, n, k)
    if not records:
        return None
    rng = rng or random.Random()
    sample_size = max(1, round(len(records) * SAMPLE_FRACTION))
    for lam in rng.sample(sorted(records), sample_size):
        if eta_k(lam, k) != records[lam]:
            log.warning("%s: cached eigenvalue for %s is wrong; ignoring file", path, lam)
            return None
    return records


def cached_spectrum(n: int, k: int, directory: Optional[Path] = None) -> SpectrumTable:
    """:func:`pfg.spectra.spectrum` backed by the on-disk cache when enabled."""
    directory = directory if directory is not None else cache_dir()
    if directory is None or n < 2:
        return spectrum(n, k)
    records = load(directory, n, k)
    shapes = enumerate_partitions(n)
    if records is not None and all(lam in records for lam in shapes):
        table = SpectrumTable(
            n, k, tuple(SpectrumEntry(lam, records[lam], dimension(lam)) for lam in shapes)
        )
        check_table(table)
        return table
    table = spectrum(n, k)
    Path(directory).mkdir(parents=True, exist_ok=True)
    write_records(cache_path(directory, n, k), n, k, ((e.shape, e.eta) for e in table.entries))
    return table
