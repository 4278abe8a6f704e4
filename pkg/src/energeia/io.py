"""JSON and CSV formats for geometries, energies, matrices and reports.

Every document carries ``"schema": "energeia/1"``. Exact values are written as
strings (rationals as ``p/q``) so a round trip is bit-exact.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .complex import Geometry, make_simplex, parse_geometry
from .errors import IoError, ShapeError
from .matrices import SquareMatrix
from .rings import EnergyAssignment, ring_from_header

SCHEMA = "energeia/1"


class FormatError(ValueError):
    """A document does not follow the expected schema; carries the source location."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None):
        self.source, self.line = source, line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_json(path: str | Path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text, str(path))


def loads(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, source, exc.lineno) from None


def write_text(path: str | Path, text: str) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror}") from exc
    return path


# geometry --------------------------------------------------------------------

def geometry_to_json(g: Geometry) -> dict:
    return {"schema": SCHEMA, "sets": g.to_lists()}


def geometry_from_json(obj, source: str = "<input>") -> Geometry:
    if not isinstance(obj, dict) or "sets" not in obj:
        raise FormatError('a geometry document needs a "sets" list', source)
    try:
        return parse_geometry(obj["sets"])
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc), source) from None


# energy ----------------------------------------------------------------------

def simplex_key(x) -> str:
    return json.dumps(list(x), separators=(",", ":"))


def energy_to_json(e: EnergyAssignment) -> dict:
    doc = {"schema": SCHEMA}
    doc.update(e.ring.describe())
    doc["h"] = {simplex_key(x): e.ring.format(v) for x, v in zip(e.geometry, e.values)}
    return doc


def energy_from_json(obj, g: Geometry, source: str = "<input>") -> EnergyAssignment:
    if not isinstance(obj, dict) or "ring" not in obj or "h" not in obj:
        raise FormatError('an energy document needs "ring" and "h"', source)
    try:
        ring = ring_from_header(obj)
        h = {make_simplex(json.loads(k)): ring.parse(v) for k, v in obj["h"].items()}
        return EnergyAssignment.from_mapping(g, ring, h)
    except (TypeError, ValueError, KeyError) as exc:
        raise FormatError(str(exc), source) from None


# matrices --------------------------------------------------------------------

def matrix_to_json(name: str, m: SquareMatrix) -> dict:
    doc = {"schema": SCHEMA, "name": name}
    doc.update(m.ring.describe())
    doc["index"] = [list(x) for x in m.index]
    doc["entries"] = m.format()
    return doc


_CSV_RINGS = ("rational", "gaussian", "complex64")


def _csv_cell(ring, a) -> str:
    if ring.tag == "rational":
        return ring.format(a)
    if ring.tag == "gaussian":
        return str(a).replace(" ", "")
    return repr(complex(a))


def matrix_to_csv(m: SquareMatrix) -> str:
    if m.ring.tag not in _CSV_RINGS:
        raise ShapeError(f"CSV output is only available for numeric rings, not {m.ring.tag}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [simplex_key(x) for x in m.index])
    for x, row in zip(m.index, m.rows):
        w.writerow([simplex_key(x)] + [_csv_cell(m.ring, a) for a in row])
    return buf.getvalue()


# reports ---------------------------------------------------------------------

def complex_to_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def zeta_to_csv(samples) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re(s)", "im(s)", "re(zeta)", "im(zeta)"])
    for s, z in samples:
        w.writerow([repr(s.real), repr(s.imag), repr(z.real), repr(z.imag)])
    return buf.getvalue()


def flow_to_csv(trajectory) -> str:
    """One row per step and simplex: step, simplex, re(u), im(u)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["step", "simplex", "re(u)", "im(u)"])
    for k, e in enumerate(trajectory):
        for x, v in zip(e.geometry, e.values):
            w.writerow([k, simplex_key(x), repr(v.real), repr(v.imag)])
    return buf.getvalue()
