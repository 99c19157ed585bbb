"""Sequence file formats: b-file, CSV, and JSON.

b-file
    One term per line, ``n a_n`` with 1-based n in generation order.
    Lines that are blank or start with ``#`` are ignored when reading.

CSV
    ``n,a_n`` rows without a header (a literal ``n,a_n`` header row is
    tolerated when reading).

JSON
    An object carrying the full run record (see SEQUENCE_SCHEMA below); a
    bare JSON array of terms is also accepted when reading.  Serialization
    is canonical (sorted keys, fixed indentation, trailing newline), so
    identical runs produce byte-identical files.  Wall-clock timings are
    emitted only on request and live in their own block, keeping the
    default output deterministic.
"""

from __future__ import annotations

import json
from typing import Optional

from .errors import InputFormatError
from .greedy import SequenceRecord

SEQUENCE_SCHEMA = "bhg-sequence/1"

FORMATS = ("json", "csv", "bfile")


def render_bfile(terms) -> str:
    return "".join(f"{n} {a}\n" for n, a in enumerate(terms, 1))


def render_csv(terms) -> str:
    return "".join(f"{n},{a}\n" for n, a in enumerate(terms, 1))


def render_json(rec: SequenceRecord, *, bound_ok: Optional[bool] = None,
                include_timings: bool = False) -> str:
    doc = {
        "schema": SEQUENCE_SCHEMA,
        "algorithm": rec.algorithm,
        "params": {
            "h": rec.params.h,
            "g": rec.params.g,
            "n_terms": rec.params.n_terms,
        },
        "terms": list(rec.terms),
        "sorted": rec.is_sorted,
        "bound_ok": bound_ok,
        "per_step": [
            {"n": st.n, "term": st.term, "scan_length": st.scan_length,
             "bound": st.bound_floor}
            for st in rec.per_step
        ],
    }
    if include_timings:
        doc["timings"] = {
            "per_step_seconds": [round(st.elapsed, 6) for st in rec.per_step],
            "total_seconds": round(sum(st.elapsed for st in rec.per_step), 6),
        }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_terms(rec: SequenceRecord, fmt: str, *,
                 bound_ok: Optional[bool] = None,
                 include_timings: bool = False) -> str:
    if fmt == "bfile":
        return render_bfile(rec.terms)
    if fmt == "csv":
        return render_csv(rec.terms)
    if fmt == "json":
        return render_json(rec, bound_ok=bound_ok, include_timings=include_timings)
    raise ValueError(f"unknown format {fmt!r}")


def detect_format(text: str) -> str:
    """Best-effort format sniffing for reading: JSON documents start with
    '{' or '[', CSV rows contain commas, anything else is read as b-file."""
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped[0] in "{[":
            return "json"
        if "," in stripped:
            return "csv"
        return "bfile"
    raise InputFormatError("empty input")


def parse_terms(text: str, fmt: str = "auto") -> list[int]:
    """Parse a term list from file contents; raises InputFormatError with a
    line number on malformed rows."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "json":
        return _parse_json(text)
    if fmt == "csv":
        return _parse_rows(text, sep=",", allow_header=True)
    if fmt == "bfile":
        return _parse_rows(text, sep=None, allow_header=False)
    raise ValueError(f"unknown format {fmt!r}")


def read_terms(path, fmt: str = "auto") -> list[int]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_terms(fh.read(), fmt)


def _parse_json(text: str) -> list[int]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"invalid JSON: {e.msg}", line=e.lineno) from e
    if isinstance(doc, list):
        terms = doc
    elif isinstance(doc, dict) and "terms" in doc:
        terms = doc["terms"]
    else:
        raise InputFormatError("JSON input must be an array or carry a 'terms' array")
    if not isinstance(terms, list) or not all(isinstance(t, int) for t in terms):
        raise InputFormatError("'terms' must be an array of integers")
    if not terms:
        raise InputFormatError("empty term list")
    return list(terms)


def _parse_rows(text: str, sep, allow_header: bool) -> list[int]:
    terms = []
    expected = 1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if allow_header and expected == 1 and line.lower().replace(" ", "") == "n,a_n":
            continue
        parts = line.split(sep)
        if len(parts) != 2:
            raise InputFormatError(
                f"expected 'n{sep or ' '}a_n', got {line!r}", line=lineno)
        try:
            n, a = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"non-integer field in {line!r}", line=lineno)
        if n != expected:
            raise InputFormatError(
                f"index {n} out of order (expected {expected})", line=lineno)
        terms.append(a)
        expected += 1
    if not terms:
        raise InputFormatError("empty input")
    return terms
