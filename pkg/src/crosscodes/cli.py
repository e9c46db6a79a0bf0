"""Command-line interface.

Exit status: 0 on success, 1 for a negative domain result (decoding failure,
uncertified code, failed audit), 2 for usage errors.

Examples::

    crosscodes bounds --n 2 --t 2 --m 3,4,5
    crosscodes bounds --paper-tables --format csv
    crosscodes construct cor5 --m 4 --t 3 --out code.json
    crosscodes decode --code code.json --received 12,6
    crosscodes certify --file example2_cross.json --t 2
    crosscodes search --n 2 --m 3 --t 2 --metric lee
    crosscodes audit cor12 --m 4 --t 3
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import serialize
from .constructions import CONSTRUCTIONS, LinearCode, construct, encode
from .decoders import decoder_for
from .errors import BudgetExceededError, CrossCodeError, ParameterError
from .oracle import certify_cross_code, certify_lee_code, certify_linear_code, enumerate_code, exhaustive_decoder_audit, max_code_search
from .residue import parse_word
from .spheres import METRICS, STANDARD_EXPONENTS, STANDARD_TABLES, bound_table
from .ringlinalg import ENUMERATION_BUDGET

FORMATS = ("text", "csv", "json")


def _int_list(ctx, param, value: str | None) -> list[int] | None:
    if value is None:
        return None
    try:
        out = [int(p) for p in value.split(",") if p.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from None
    if not out:
        raise click.BadParameter("need at least one value")
    return out


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text.rstrip("\n"))
    else:
        out.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def _load_json(path: Path) -> dict:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read {path}: {exc}") from exc


def _load_code(path: Path) -> LinearCode:
    try:
        return serialize.code_from_json(_load_json(path))
    except CrossCodeError as exc:
        raise click.UsageError(str(exc)) from exc


def _build(name: str, m: int, t: int) -> LinearCode:
    try:
        return construct(name, m, t)
    except CrossCodeError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
def cli() -> None:
    """Cross-error-correcting integer codes over Z_{2^m}^n."""


@cli.command()
@click.option("--n", "n", type=int, help="Code length.")
@click.option("--t", "t", type=int, help="Error magnitude.")
@click.option("--m", "m_list", callback=_int_list, help="Comma-separated modulus exponents, e.g. 3,4,5.")
@click.option("--paper-tables", is_flag=True, help="Emit the five standard (n, t) tables over m = 3, 4, 5.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Write to a file instead of stdout.")
def bounds(n, t, m_list, paper_tables, fmt, out) -> None:
    """Sphere-packing bounds for Lee and cross codes, nonlinear and linear."""
    if paper_tables:
        specs = [(tn, tt, list(STANDARD_EXPONENTS)) for tn, tt in STANDARD_TABLES]
    else:
        if n is None or t is None or m_list is None:
            raise click.UsageError("bounds needs --n, --t and --m (or --paper-tables)")
        specs = [(n, t, m_list)]
    try:
        tables = [(tn, tt, bound_table(tn, tt, ms)) for tn, tt, ms in specs]
    except CrossCodeError as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "json":
        docs = [serialize.table_to_json(*tab) for tab in tables]
        text = serialize.dumps(docs if paper_tables else docs[0])
    elif fmt == "csv":
        parts = [serialize.table_to_csv(*tab) for tab in tables]
        # one header row for the whole document
        text = parts[0] + "".join(p.split("\n", 1)[1] for p in parts[1:])
    else:
        text = "\n".join(serialize.table_to_text(*tab) for tab in tables)
    _emit(text, out)


@cli.command("construct")
@click.argument("construction", type=click.Choice(CONSTRUCTIONS))
@click.option("--m", "m", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
def construct_cmd(construction, m, t, out) -> None:
    """Build a parity check matrix, its generator and cardinality."""
    code = _build(construction, m, t)
    certified = None
    if code.n * code.m <= ENUMERATION_BUDGET:
        certified = certify_linear_code(code).ok
    _emit(serialize.dumps(serialize.code_to_json(code, certified)), out)
    if certified is False:
        sys.exit(1)


@cli.command("encode")
@click.option("--code", "code_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True)
@click.option("--message", required=True, help="Comma-separated coefficients, one per generator row.")
def encode_cmd(code_path, message) -> None:
    """Encode a message with the code's generator matrix."""
    code = _load_code(code_path)
    coeffs = _int_list(None, None, message)
    try:
        word = encode(code.generator, coeffs)
    except CrossCodeError as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(",".join(map(str, word.coords)))


@cli.command("decode")
@click.option("--code", "code_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True)
@click.option("--received", required=True, help="Received word as comma-separated residues, e.g. 12,6.")
@click.option("--format", "fmt", type=click.Choice(("text", "json")), default="text", show_default=True)
def decode_cmd(code_path, received, fmt) -> None:
    """Correct a single cross error in a received word."""
    code = _load_code(code_path)
    try:
        r = parse_word(received, code.m)
        outcome = decoder_for(code)(r)
    except CrossCodeError as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "json":
        doc = {
            "received": list(r.coords),
            "corrected": outcome.corrected,
            "codeword": list(outcome.codeword.coords) if outcome.codeword else None,
            "error": list(outcome.error.coords) if outcome.error else None,
        }
        click.echo(serialize.dumps(doc))
    else:
        click.echo(str(outcome))
    sys.exit(0 if outcome.corrected else 1)


@cli.command("certify")
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True,
              help="Code set JSON {n, m, words} or a code JSON from 'construct'.")
@click.option("--t", "t", type=int, help="Error magnitude (defaults to the file's t).")
@click.option("--metric", type=click.Choice(METRICS), default="cross", show_default=True)
def certify_cmd(path, t, metric) -> None:
    """Brute-force check that a code corrects errors of magnitude t."""
    doc = _load_json(path)
    try:
        code = enumerate_code(serialize.code_from_json(doc).H) if "H" in doc else serialize.codeset_from_json(doc)
        t = t if t is not None else doc.get("t")
        if t is None:
            raise ParameterError("no error magnitude: pass --t")
        cert = certify_cross_code(code, int(t)) if metric == "cross" else certify_lee_code(code, int(t))
    except CrossCodeError as exc:
        raise click.UsageError(str(exc)) from exc
    doc_out = {"metric": metric, "t": int(t), "size": len(code), "certified": cert.ok}
    if not cert.ok:
        doc_out["witness"] = {"pair": [list(w.coords) for w in cert.pair], "detail": cert.detail}
    click.echo(serialize.dumps(doc_out))
    sys.exit(0 if cert.ok else 1)


@cli.command("search")
@click.option("--n", "n", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--metric", type=click.Choice(METRICS), default="cross", show_default=True)
@click.option("--node-limit", type=int, default=2_000_000, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
def search_cmd(n, m, t, metric, node_limit, out) -> None:
    """Exact maximum code size by clique search (tiny parameters only)."""
    try:
        result = max_code_search(n, m, t, metric, node_limit=node_limit)
    except BudgetExceededError as exc:
        raise click.UsageError(f"refusing: {exc}") from exc
    except CrossCodeError as exc:
        raise click.UsageError(str(exc)) from exc
    if out is not None:
        _emit(serialize.dumps(serialize.search_to_json(n, m, t, result)), out)
    click.echo(str(result.size))


@cli.command("audit")
@click.argument("construction", type=click.Choice(CONSTRUCTIONS), required=False)
@click.option("--m", "m", type=int)
@click.option("--t", "t", type=int)
@click.option("--code", "code_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def audit_cmd(construction, m, t, code_path) -> None:
    """Decode every codeword under every cross error of magnitude <= t."""
    if code_path is not None:
        code = _load_code(code_path)
    elif construction and m is not None and t is not None:
        code = _build(construction, m, t)
    else:
        raise click.UsageError("audit needs CONSTRUCTION --m --t, or --code FILE")
    try:
        report = exhaustive_decoder_audit(enumerate_code(code.H, code.t), decoder_for(code), code.t)
    except CrossCodeError as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(serialize.dumps(serialize.audit_to_json(code, report)))
    sys.exit(0 if report.passed else 1)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
