"""JSON files for algebras, matrices and certificates.

Rationals are always strings (``"3"``, ``"-4/5"``), never floats. Basis
indices in files are 1-based. Output is canonical (sorted keys, fixed
indentation, trailing newline) so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import linalg
from .algebra import LieAlgebra
from .hyperbolicity import AnosovCertificate, certify
from .linalg import Matrix

CERTIFICATE_FORMAT = "anosov-certificate/1"


class FormatError(ValueError):
    """Malformed input file; ``location`` points at the offending field."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def rational_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value, location: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise FormatError(location, f"rationals must be strings like '3' or '-4/5', got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise FormatError(location, f"expected a rational string, got {value!r}")
    try:
        return Fraction(value.strip())
    except ZeroDivisionError:
        raise FormatError(location, f"zero denominator in {value!r}") from None
    except ValueError:
        raise FormatError(location, f"not a rational: {value!r}") from None


def _int(value, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(location, f"expected an integer, got {value!r}")
    return value


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_json(path: str | os.PathLike) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    except OSError as exc:
        raise FormatError(str(path), exc.strerror or str(exc)) from None


# -- algebras ---------------------------------------------------------------

def algebra_to_dict(alg: LieAlgebra) -> dict[str, Any]:
    return {
        "name": alg.name,
        "dim": alg.dim,
        "degrees": list(alg.degrees) if alg.degrees is not None else None,
        "brackets": [{"i": i, "j": j, "k": k, "c": rational_str(c)} for i, j, k, c in alg.table()],
    }


def algebra_from_dict(data: Any, where: str = "") -> LieAlgebra:
    loc = (lambda s: f"{where}.{s}" if where else s)
    if not isinstance(data, dict):
        raise FormatError(where, "algebra must be a JSON object")
    if "dim" not in data:
        raise FormatError(loc("dim"), "missing")
    dim = _int(data["dim"], loc("dim"))
    if dim < 1:
        raise FormatError(loc("dim"), "must be positive")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError(loc("name"), "must be a string")
    degrees = data.get("degrees")
    if degrees is not None:
        if not isinstance(degrees, list) or len(degrees) != dim:
            raise FormatError(loc("degrees"), f"must be a list of {dim} integers")
        degrees = [_int(d, loc(f"degrees[{n}]")) for n, d in enumerate(degrees)]
    records = data.get("brackets", [])
    if not isinstance(records, list):
        raise FormatError(loc("brackets"), "must be a list")
    seen = set()
    table = []
    for n, rec in enumerate(records):
        rloc = loc(f"brackets[{n}]")
        if not isinstance(rec, dict) or not {"i", "j", "k", "c"} <= set(rec):
            raise FormatError(rloc, "each bracket needs keys i, j, k, c")
        i, j, k = (_int(rec[key], f"{rloc}.{key}") for key in ("i", "j", "k"))
        if not i < j:
            raise FormatError(rloc, f"need i < j, got i={i}, j={j}")
        for key, v in (("i", i), ("j", j), ("k", k)):
            if not 1 <= v <= dim:
                raise FormatError(f"{rloc}.{key}", f"index {v} out of range 1..{dim}")
        if (i, j, k) in seen:
            raise FormatError(rloc, f"duplicate record for [X_{i}, X_{j}] -> X_{k}")
        seen.add((i, j, k))
        table.append((i, j, k, parse_rational(rec["c"], f"{rloc}.c")))
    return LieAlgebra.from_table(dim, table, degrees, name)


# -- matrices ---------------------------------------------------------------

def matrix_to_rows(M: Matrix) -> list[list[str]]:
    return [[rational_str(x) for x in row] for row in M]


def matrix_from_data(data: Any, where: str = "matrix") -> Matrix:
    """Accepts ``{"matrix": rows}`` or a bare list of rows."""
    rows = data.get("matrix") if isinstance(data, dict) else data
    if not isinstance(rows, list) or not rows:
        raise FormatError(where, "expected a non-empty list of rows")
    n = len(rows)
    out = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"{where}[{r}]", f"expected a row of length {n} (matrix must be square)")
        out.append([parse_rational(x, f"{where}[{r}][{c}]") for c, x in enumerate(row)])
    return linalg.matrix(out)


def matrix_to_dict(M: Matrix) -> dict[str, Any]:
    return {"matrix": matrix_to_rows(M)}


# -- certificates -----------------------------------------------------------

def certificate_to_dict(cert: AnosovCertificate) -> dict[str, Any]:
    params = {"a": None, "construction": None, "catalog_name": None}
    params.update(cert.parameters)
    return {
        "format": CERTIFICATE_FORMAT,
        "algebra": algebra_to_dict(cert.algebra),
        "matrix": matrix_to_rows(cert.matrix),
        "char_poly": [rational_str(c) for c in cert.char_poly],
        "flags": {
            "automorphism": cert.automorphism,
            "integral": cert.integral,
            "unimodular": cert.unimodular,
            "hyperbolic": cert.hyperbolic,
            "anosov": cert.anosov,
        },
        "expanding_dim": cert.expanding_dim,
        "contracting_dim": cert.contracting_dim,
        "classification_mode": cert.classification_mode,
        "parameters": params,
        "failure_witnesses": list(cert.failure_witnesses),
    }


def recheck_certificate(data: Any) -> tuple[bool, list[str], dict[str, Any]]:
    """Re-run every check from the algebra and matrix stored in ``data``.

    Returns ``(consistent, differences, recomputed)``; a certificate is
    consistent when every recorded claim is reproduced exactly.
    """
    if not isinstance(data, dict):
        raise FormatError("", "certificate must be a JSON object")
    for key in ("algebra", "matrix", "flags", "char_poly"):
        if key not in data:
            raise FormatError(key, "missing")
    alg = algebra_from_dict(data["algebra"], "algebra")
    M = matrix_from_data(data["matrix"], "matrix")
    if linalg.shape(M) != (alg.dim, alg.dim):
        raise FormatError("matrix", f"shape {linalg.shape(M)} does not match algebra dimension {alg.dim}")
    params = data.get("parameters") or {}
    fresh = certificate_to_dict(certify(alg, M, params))
    diffs = []
    flags = data["flags"]
    if isinstance(flags, dict):
        fl = dict(flags)
        if fl.get("anosov") != all(fl.get(k) for k in ("automorphism", "integral", "unimodular", "hyperbolic")):
            diffs.append("flags.anosov is not the conjunction of the other four flags")
    for key in ("char_poly", "flags", "expanding_dim", "contracting_dim", "classification_mode"):
        if data.get(key) != fresh[key]:
            diffs.append(f"{key}: recorded {data.get(key)!r}, recomputed {fresh[key]!r}")
    return not diffs, diffs, fresh
