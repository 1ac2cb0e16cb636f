"""CSV cache of per-genus counts (header ``genus,count``)."""

from __future__ import annotations

import csv
import os
from typing import Dict, Iterable, List, Tuple

HEADER = ("genus", "count")


class CacheFormatError(ValueError):
    def __init__(self, path, line: int, reason: str) -> None:
        super().__init__(f"{path}:{line}: {reason}")
        self.line = line


def save_counts(rows: Iterable[Tuple[int, int]], path) -> None:
    """Write rows sorted by genus; the file is replaced atomically."""
    rows = sorted(dict(rows).items())
    tmp = f"{os.fspath(path)}.tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(HEADER)
        writer.writerows(rows)
    os.replace(tmp, path)


def load_counts(path) -> List[Tuple[int, int]]:
    rows: List[Tuple[int, int]] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != HEADER:
            raise CacheFormatError(path, 1, "expected header 'genus,count'")
        for row in reader:
            line = reader.line_num
            if not row:
                continue
            if len(row) != 2:
                raise CacheFormatError(path, line, f"expected 2 fields, got {len(row)}")
            try:
                genus, count = int(row[0]), int(row[1])
            except ValueError:
                raise CacheFormatError(path, line, f"non-integer field in {row!r}") from None
            if genus < 0 or count < 0:
                raise CacheFormatError(path, line, "negative value")
            rows.append((genus, count))
    return rows


def lookup(path, genus: int):
    if not path or not os.path.exists(path):
        return None
    return dict(load_counts(path)).get(genus)


def store(path, new: Dict[int, int]) -> None:
    table = dict(load_counts(path)) if os.path.exists(path) else {}
    table.update(new)
    save_counts(table.items(), path)
