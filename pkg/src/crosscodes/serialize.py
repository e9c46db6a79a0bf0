"""JSON and CSV encodings for tables, codes, code sets and reports."""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .constructions import CodeSpec, LinearCode, ParityCheckMatrix
from .errors import ParameterError
from .oracle import AuditReport, CodeSet, SearchResult
from .spheres import BoundRow

TABLE_COLUMNS = ("m", "q", "lee_bound", "cross_bound", "lee_linear_bound", "cross_linear_bound")


def table_to_json(n: int, t: int, rows: list[BoundRow]) -> dict[str, Any]:
    return {"n": n, "t": t, "rows": [r.as_dict() for r in rows]}


def table_to_csv(n: int, t: int, rows: list[BoundRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("n", "t", *TABLE_COLUMNS))
    for r in rows:
        d = r.as_dict()
        writer.writerow((n, t, *(d[c] for c in TABLE_COLUMNS)))
    return buf.getvalue()


def table_to_text(n: int, t: int, rows: list[BoundRow]) -> str:
    head = f"n={n} t={t}\n{'2^m':>6} {'C^L':>8} {'C^+':>8} {'C^L_lin':>8} {'C^+_lin':>8}\n"
    body = "".join(f"{r.q:>6} " + " ".join(f"{c:>8}" for c in r.cells()) + "\n" for r in rows)
    return head + body


def code_to_json(code: LinearCode, certified: bool | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "n": code.n,
        "m": code.m,
        "t": code.t,
        "construction": code.spec.construction,
        "H": code.H.to_list(),
        "G": code.generator.to_list(),
        "G_orders": list(code.generator.orders),
        "cardinality": code.cardinality,
    }
    if certified is not None:
        doc["certified"] = certified
    return doc


def _require(doc: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in doc]
    if missing:
        raise ParameterError(f"document is missing field(s): {', '.join(missing)}")


def code_from_json(doc: dict[str, Any]) -> LinearCode:
    _require(doc, "m", "t", "H")
    try:
        m, t = int(doc["m"]), int(doc["t"])
        H = ParityCheckMatrix(tuple(tuple(int(x) for x in row) for row in doc["H"]), m)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"malformed code document: {exc}") from exc
    construction = doc.get("construction", "custom")
    if construction not in ("cor5", "thm9", "cor12", "custom"):
        raise ParameterError(f"unknown construction {construction!r}")
    if "n" in doc and int(doc["n"]) != H.n:
        raise ParameterError(f"n={doc['n']} disagrees with H of width {H.n}")
    return LinearCode(CodeSpec(H.n, m, t, construction), H)


def codeset_to_json(code: CodeSet) -> dict[str, Any]:
    doc: dict[str, Any] = {"n": code.n, "m": code.m, "words": [list(w.coords) for w in code.words]}
    if code.t is not None:
        doc["t"] = code.t
    return doc


def codeset_from_json(doc: dict[str, Any]) -> CodeSet:
    _require(doc, "m", "words")
    try:
        code = CodeSet.of(doc["words"], int(doc["m"]), doc.get("t"))
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"malformed code set: {exc}") from exc
    if "n" in doc and int(doc["n"]) != code.n:
        raise ParameterError(f"n={doc['n']} disagrees with word length {code.n}")
    return code


def search_to_json(n: int, m: int, t: int, result: SearchResult) -> dict[str, Any]:
    return {"n": n, "m": m, "t": t, "metric": result.metric, "size": result.size, "exact": result.exact, "witness": codeset_to_json(result.witness)}


def audit_to_json(code: LinearCode, report: AuditReport) -> dict[str, Any]:
    return {"code": {"construction": code.spec.construction, "n": code.n, "m": code.m, "t": code.t}, **report.as_dict()}


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)
