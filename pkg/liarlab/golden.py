"""Golden files for the Presburger enumeration and naming ledger.

Both are CSV with ``\\n`` line endings so the bytes do not depend on the
platform; ``render_*`` returns the text, ``write_golden`` puts it on disk.
"""

from __future__ import annotations

import csv
import io
import logging
from pathlib import Path

from liarlab.services.presburger import syntax
from liarlab.services.presburger.system import PresburgerSystem

logger = logging.getLogger(__name__)

ENUMERATION_FILE = "enumeration.txt"
NAMING_FILE = "naming.txt"


def _csv(header: list, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_enumeration(count: int) -> str:
    # expected headers: index,size,formula
    rows = (
        (i, syntax.size(f), syntax.serialize(f))
        for i, f in enumerate(syntax.enumerate_formulas(count))
    )
    return _csv(["index", "size", "formula"], rows)


def render_naming(system: PresburgerSystem, count: int) -> str:
    # expected headers: index,name,parity,formula
    system.ledger.advance_to(count)
    rows = (
        (i, name, "even" if name % 2 == 0 else "odd", text)
        for i, text, name in system.ledger.entries[:count]
    )
    return _csv(["index", "name", "parity", "formula"], rows)


def write_golden(out_dir: str | Path, count: int, system: PresburgerSystem | None = None) -> list[Path]:
    if count < 1:
        raise ValueError("count must be >= 1")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    system = system or PresburgerSystem()
    written = []
    for filename, text in (
        (ENUMERATION_FILE, render_enumeration(count)),
        (NAMING_FILE, render_naming(system, count)),
    ):
        path = out / filename
        path.write_bytes(text.encode("utf-8"))
        written.append(path)
        logger.info("wrote %s (%d rows)", path, count)
    return written


def read_naming(path: str | Path) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        return [
            {
                "index": int(row["index"]),
                "name": int(row["name"]),
                "parity": row["parity"].strip(),
                "formula": row["formula"],
            }
            for row in reader
        ]
