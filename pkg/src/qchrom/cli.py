"""Command-line front end.

Thin client over the service operations: commands run in-process by default,
or against a running qchrom server when ``--server URL`` is given before the
subcommand. Exit codes: 0 success/accept, 1 usage or structural error,
2 verification/property failure.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click
import httpx
from pydantic import BaseModel, ValidationError

from qchrom import __version__
from qchrom.errors import QChromError
from qchrom.service import ops
from qchrom.service.models import (
    BoundsRequest,
    BoundsResponse,
    CertificateModel,
    ExactRequest,
    ExactResponse,
    GraphInput,
    LiftCheckRequest,
    LiftCheckResponse,
    Table1Response,
    VerifyRequest,
    VerifyResponse,
)

# Usage errors must exit 1; code 2 is reserved for property failures.
click.UsageError.exit_code = 1

FORMATS = ("table", "json", "csv")


# ---------------------------------------------------------------------------
# transport: in-process by default, HTTP when --server is given


def _make_client(server: str) -> httpx.Client:
    # No read timeout: exact solves legitimately run up to the budget.
    return httpx.Client(base_url=server, timeout=None)


def _http(method: str, server: str, path: str, *, json_body=None, params=None) -> dict:
    try:
        with _make_client(server) as client:
            r = client.request(method, path, json=json_body, params=params)
    except httpx.HTTPError as e:
        raise click.ClickException(f"cannot reach server {server}: {e}") from e
    if r.status_code == 400:
        data = r.json()
        raise click.ClickException(f"{data.get('kind', 'error')}: {data.get('detail', '')}")
    if r.status_code >= 400:
        raise click.ClickException(f"server returned {r.status_code}: {r.text[:500]}")
    return r.json()


def _call(server: str | None, path: str, req: BaseModel, local, resp_cls):
    if server is None:
        try:
            return local(req)
        except QChromError as e:
            raise click.ClickException(str(e)) from e
    data = _http("POST", server, path, json_body=req.model_dump(mode="json"))
    return resp_cls.model_validate(data)


# ---------------------------------------------------------------------------
# shared options and output helpers


def graph_options(f):
    f = click.option("--seed", type=int, default=0, show_default=True,
                     help="Seed for randomized generators.")(f)
    f = click.option("--file", "path", type=click.Path(exists=True, dir_okay=False,
                                                       path_type=Path), default=None,
                     help="Graph file: .g6 for graph6, anything else is an edge list.")(f)
    f = click.option("--g6", default=None, metavar="STRING", help="graph6 literal.")(f)
    f = click.option("--gen", "gen_spec", default=None, metavar="SPEC",
                     help="Generator, e.g. petersen or circulant:13,1,5.")(f)
    return f


def format_option(f):
    return click.option("--format", "fmt", type=click.Choice(FORMATS), default="table",
                        show_default=True, help="Output format.")(f)


def _graph_input(gen_spec: str | None, g6: str | None, path: Path | None, seed: int) -> GraphInput:
    given = sum(x is not None for x in (gen_spec, g6, path))
    if given != 1:
        raise click.UsageError("exactly one of --gen, --g6, --file is required")
    if gen_spec is not None:
        return GraphInput(generator=gen_spec, seed=seed)
    if g6 is not None:
        return GraphInput(g6=g6, seed=seed)
    text = path.read_text()
    if path.suffix == ".g6":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise click.ClickException(f"{path}: empty graph6 file")
        return GraphInput(g6=lines[0].strip(), seed=seed)
    return GraphInput(edge_list=text, seed=seed)


def _load_json_file(path: Path, what: str):
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise click.ClickException(f"{path}: invalid JSON in {what}: {e}") from e


def _load_cert(path: Path) -> CertificateModel:
    payload = _load_json_file(path, "certificate")
    if not isinstance(payload, dict):
        raise click.ClickException(f"{path}: certificate must be a JSON object")
    try:
        return CertificateModel(**payload)
    except ValidationError as e:
        raise click.ClickException(f"{path}: invalid certificate: {e}") from e


def _resolve_budget(budget: float | None) -> float | None:
    """Flag wins; else QCHROM_BUDGET; else None (service default of 60s)."""
    if budget is not None:
        return budget
    try:
        return ops.default_budget()
    except QChromError as e:
        raise click.ClickException(str(e)) from e


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _kv_table(pairs: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _columns(header: list[str], rows: list[list[str]], right: set[int]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for row in [header] + rows:
        cells = [
            cell.rjust(widths[i]) if i in right else cell.ljust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def _bracket(pair: tuple[int, int] | None) -> str:
    return "" if pair is None else f"[{pair[0]},{pair[1]}]"


# ---------------------------------------------------------------------------
# command group


@click.group()
@click.version_option(version=__version__, prog_name="qchrom")
@click.option("--server", default=None, metavar="URL",
              help="Run against a qchrom server instead of in-process.")
@click.pass_context
def main(ctx: click.Context, server: str | None):
    """Spectral lower bounds on (quantum) chromatic numbers."""
    ctx.obj = server.rstrip("/") if server else None


@main.command()
@graph_options
@click.option("--weights", "weights_path",
              type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help="JSON Hermitian weight matrix; entries are numbers or [re, im] pairs.")
@format_option
@click.pass_obj
def bounds(server, gen_spec, g6, path, seed, weights_path, fmt):
    """Five spectral lower bounds on the quantum chromatic number."""
    gi = _graph_input(gen_spec, g6, path, seed)
    weights = None
    if weights_path is not None:
        weights = _load_json_file(weights_path, "weight matrix")
        if not isinstance(weights, list):
            raise click.ClickException(f"{weights_path}: weight matrix must be a JSON list of rows")
    req = BoundsRequest(graph=gi, weights=weights)
    resp: BoundsResponse = _call(server, "/bounds", req, ops.run_bounds, BoundsResponse)

    if fmt == "json":
        click.echo(resp.model_dump_json(indent=2))
        return
    names = ("hoffman", "lima", "kolotilina", "inertia_bound", "ando_lin")
    if fmt == "csv":
        rows = [["graph", resp.graph, "", ""], ["n", resp.n, "", ""],
                ["m", resp.m, "", ""], ["weighted", resp.weighted, "", ""]]
        for name in names:
            bv = getattr(resp, name)
            rows.append([name, repr(bv.value), bv.applicable, bv.computed])
        rows.append(["best", repr(resp.best), "", ""])
        rows.append(["best_ceil", resp.best_ceil, "", ""])
        click.echo(_csv_text(["field", "value", "applicable", "computed"], rows))
        return
    pairs = [("graph", f"{resp.graph} (n={resp.n}, m={resp.m})"),
             ("weighted", "yes" if resp.weighted else "no")]
    for name in names:
        bv = getattr(resp, name)
        note = ""
        if not bv.computed:
            note = "  (not computed in weighted mode)"
        elif not bv.applicable:
            note = "  (not applicable)"
        pairs.append((name, _fmt(bv.value) + note))
    pairs.append(("best", _fmt(resp.best)))
    pairs.append(("best_ceil", str(resp.best_ceil)))
    click.echo(_kv_table(pairs))


@main.command()
@graph_options
@click.option("--budget", type=float, default=None,
              help="Time budget in seconds (default 60; QCHROM_BUDGET overrides).")
@format_option
@click.pass_obj
def exact(server, gen_spec, g6, path, seed, budget, fmt):
    """Exact chromatic and clique numbers by branch and bound."""
    gi = _graph_input(gen_spec, g6, path, seed)
    req = ExactRequest(graph=gi, budget=_resolve_budget(budget))
    resp: ExactResponse = _call(server, "/exact", req, ops.run_exact, ExactResponse)

    if fmt == "json":
        click.echo(resp.model_dump_json(indent=2))
        return
    if fmt == "csv":
        rows = [
            ["graph", resp.graph], ["n", resp.n], ["m", resp.m],
            ["chromatic", "" if resp.chromatic is None else resp.chromatic],
            ["clique", "" if resp.clique is None else resp.clique],
            ["status", resp.status],
            ["elapsed", repr(resp.elapsed)],
            ["chromatic_bracket", _bracket(resp.chromatic_bracket)],
            ["clique_bracket", _bracket(resp.clique_bracket)],
            ["coloring", "" if resp.coloring is None else " ".join(map(str, resp.coloring))],
            ["clique_witness",
             "" if resp.clique_witness is None else " ".join(map(str, resp.clique_witness))],
        ]
        click.echo(_csv_text(["field", "value"], rows))
        return
    pairs = [("graph", f"{resp.graph} (n={resp.n}, m={resp.m})")]
    if resp.chromatic is not None:
        pairs.append(("chromatic", str(resp.chromatic)))
    else:
        pairs.append(("chromatic", f"in {_bracket(resp.chromatic_bracket)} (timed out)"))
    if resp.clique is not None:
        pairs.append(("clique", str(resp.clique)))
    else:
        pairs.append(("clique", f"in {_bracket(resp.clique_bracket)} (timed out)"))
    pairs.append(("status", resp.status))
    pairs.append(("elapsed", f"{resp.elapsed:.2f}s"))
    if resp.coloring is not None:
        pairs.append(("coloring", " ".join(map(str, resp.coloring))))
    if resp.clique_witness is not None:
        pairs.append(("clique witness", " ".join(map(str, resp.clique_witness))))
    click.echo(_kv_table(pairs))


def _residual_line(item) -> str:
    loc = ",".join(map(str, item.location))
    return f"{item.residual:.3e} at ({loc})"


@main.command(name="cert-verify")
@graph_options
@click.option("--cert", "cert_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Certificate JSON file.")
@click.option("--tolerance", type=float, default=1e-8, show_default=True,
              help="Residual tolerance for all certificate conditions.")
@format_option
@click.pass_context
def cert_verify(ctx, gen_spec, g6, path, seed, cert_path, tolerance, fmt):
    """Verify a quantum-coloring certificate against a graph.

    Exit 0 on accept, 2 on reject, 1 on structural error.
    """
    server = ctx.obj
    gi = _graph_input(gen_spec, g6, path, seed)
    req = VerifyRequest(graph=gi, certificate=_load_cert(cert_path), tolerance=tolerance)
    resp: VerifyResponse = _call(server, "/certificates/verify", req, ops.run_verify,
                                 VerifyResponse)

    if fmt == "json":
        click.echo(resp.model_dump_json(indent=2))
    elif fmt == "csv":
        rows = [
            ["accept", resp.accept], ["n", resp.n], ["c", resp.c], ["d", resp.d],
            ["tolerance", repr(resp.tolerance)],
            ["worst_projector", repr(resp.worst_projector.residual),
             " ".join(map(str, resp.worst_projector.location))],
            ["worst_completeness", repr(resp.worst_completeness.residual),
             " ".join(map(str, resp.worst_completeness.location))],
        ]
        if resp.worst_orthogonality is not None:
            rows.append(["worst_orthogonality", repr(resp.worst_orthogonality.residual),
                         " ".join(map(str, resp.worst_orthogonality.location))])
        for item in resp.failures:
            rows.append([f"failure_{item.condition}", repr(item.residual),
                         " ".join(map(str, item.location))])
        click.echo(_csv_text(["field", "value", "location"], rows))
    else:
        pairs = [("verdict", "ACCEPT" if resp.accept else "REJECT"),
                 ("n / c / d", f"{resp.n} / {resp.c} / {resp.d}"),
                 ("tolerance", f"{resp.tolerance:.1e}"),
                 ("worst projector", _residual_line(resp.worst_projector) + "  (v,k)"),
                 ("worst completeness", _residual_line(resp.worst_completeness) + "  (v)")]
        if resp.worst_orthogonality is not None:
            pairs.append(("worst orthogonality",
                          _residual_line(resp.worst_orthogonality) + "  (v,w,color)"))
        if resp.failures:
            first = resp.failures[:10]
            for i, item in enumerate(first):
                label = "failures" if i == 0 else ""
                pairs.append((label, f"{item.condition} {_residual_line(item)}"))
            if len(resp.failures) > len(first):
                pairs.append(("", f"... {len(resp.failures) - len(first)} more"))
        else:
            pairs.append(("failures", "none"))
        click.echo(_kv_table(pairs))
    if not resp.accept:
        ctx.exit(2)


@main.command(name="cert-lift-check")
@graph_options
@click.option("--cert", "cert_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Certificate JSON file.")
@click.option("--tolerance", type=float, default=1e-8, show_default=True,
              help="Base residual tolerance for the lifted-family checks.")
@format_option
@click.pass_context
def cert_lift_check(ctx, gen_spec, g6, path, seed, cert_path, tolerance, fmt):
    """Lift an accepted certificate and check the pinching-family properties.

    Reports identity-resolution, annihilation, pinch-vs-twirl, fixed-point,
    and adjacency-identity residuals. Exit 0 iff all are within tolerance,
    2 when the certificate is rejected or any residual is out of tolerance.
    """
    server = ctx.obj
    gi = _graph_input(gen_spec, g6, path, seed)
    req = LiftCheckRequest(graph=gi, certificate=_load_cert(cert_path), tolerance=tolerance)
    resp: LiftCheckResponse = _call(server, "/certificates/lift-check", req,
                                    ops.run_lift_check, LiftCheckResponse)

    checks = ("resolution", "annihilation", "pinch_twirl", "fixed_point", "lima_identity")
    if fmt == "json":
        click.echo(resp.model_dump_json(indent=2))
    elif fmt == "csv":
        rows = [["certificate_accepted", resp.certificate_accepted, "", ""],
                ["passed", resp.passed, "", ""]]
        for name in checks:
            check = getattr(resp, name)
            if check is not None:
                rows.append([name, repr(check.residual), repr(check.tolerance), check.ok])
        click.echo(_csv_text(["check", "residual", "tolerance", "ok"], rows))
    else:
        pairs = [("certificate", "ACCEPT" if resp.certificate_accepted else "REJECT")]
        for name in checks:
            check = getattr(resp, name)
            if check is not None:
                verdict = "ok" if check.ok else "FAIL"
                pairs.append((name, f"{check.residual:.3e} (tol {check.tolerance:.3e})  {verdict}"))
        pairs.append(("passed", "yes" if resp.passed else "no"))
        click.echo(_kv_table(pairs))
    if not resp.passed:
        ctx.exit(2)


@main.command()
@click.option("--budget", type=float, default=None,
              help="Per-row time budget in seconds (default 60; QCHROM_BUDGET overrides).")
@format_option
@click.pass_obj
def table1(server, budget, fmt):
    """Survey table: chromatic/clique numbers vs inertia and Hoffman bounds."""
    resolved = _resolve_budget(budget)
    if server is None:
        try:
            resp = ops.run_table1(resolved)
        except QChromError as e:
            raise click.ClickException(str(e)) from e
    else:
        params = {} if resolved is None else {"budget": resolved}
        resp = Table1Response.model_validate(_http("GET", server, "/table1", params=params))

    if fmt == "json":
        click.echo(resp.model_dump_json(indent=2))
        return
    if fmt == "csv":
        rows = []
        for r in resp.rows:
            chi_lo, chi_hi = r.chromatic_bracket or ("", "")
            om_lo, om_hi = r.clique_bracket or ("", "")
            rows.append([
                r.graph, r.n,
                "" if r.chromatic is None else r.chromatic, chi_lo, chi_hi,
                repr(r.inertia_bound), repr(r.hoffman),
                "" if r.clique is None else r.clique, om_lo, om_hi,
                r.status,
            ])
        click.echo(_csv_text(
            ["graph", "n", "chi", "chi_lo", "chi_hi", "inertia", "hoffman",
             "omega", "omega_lo", "omega_hi", "status"], rows))
        return
    header = ["graph", "n", "chi", "inertia", "hoffman", "omega"]
    body = []
    for r in resp.rows:
        chi = str(r.chromatic) if r.chromatic is not None else _bracket(r.chromatic_bracket)
        omega = str(r.clique) if r.clique is not None else _bracket(r.clique_bracket)
        body.append([r.graph, str(r.n), chi, _fmt(r.inertia_bound), _fmt(r.hoffman), omega])
    click.echo(_columns(header, body, right={1, 2, 3, 4, 5}))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("qchrom.service.app:app", host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
