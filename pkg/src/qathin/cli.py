"""Command-line interface: invariants, homology tables, certificate search,
and batch verification over the shipped corpus."""

from __future__ import annotations

import json
import os
import random
import sys
from pathlib import Path

import click

from .corpus import load_corpus, load_grids
from .diagram import PDError, parse_pd, simplify, writhe
from .goeritz import (
    DisconnectedDiagram,
    check_signature_lemma,
    determinant,
    signature,
)
from .gridfloer import (
    GridDiagram,
    hfk_delta_ranks,
    is_floer_sigma_thin,
    parse_grid,
    tilde_complex,
)
from .khovanov import (
    delta_collapse,
    is_sigma_thin,
    jones_via_euler,
    khovanov_reduced_f2,
    khovanov_reduced_z,
    check_skein_grading,
)
from .quasialt import qa_search, verify_certificate

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def _read_pd(value: str, name=None):
    try:
        if os.path.exists(value):
            text = Path(value).read_text()
            name = name or Path(value).stem
        else:
            text = value
        return parse_pd(text, name=name)
    except (PDError, OSError) as ex:
        click.echo(f"error: cannot read PD input: {ex}", err=True)
        sys.exit(EXIT_INPUT)


def _read_grid(value: str, name=None):
    try:
        if os.path.exists(value):
            text = Path(value).read_text()
            name = name or Path(value).stem
        else:
            text = value
        return parse_grid(text, name=name)
    except (ValueError, OSError) as ex:
        click.echo(f"error: cannot read grid input: {ex}", err=True)
        sys.exit(EXIT_INPUT)


def _emit(payload, as_json: bool, table_rows=None, columns=None):
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True, indent=2))
        return
    rows = table_rows if table_rows is not None else [payload]
    cols = columns or sorted({k for row in rows for k in row})
    widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) for c in cols}
    click.echo("  ".join(c.ljust(widths[c]) for c in cols))
    for row in rows:
        click.echo("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in cols))


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("QATHIN_THREADS", "1")))
    except ValueError:
        return 1


@click.group()
def main():
    """Link invariants, homological thinness checks, and quasi-alternating
    certificate search on planar diagrams and grids."""


@main.command()
@click.option("--pd", "pd_input", required=False, help="PD code string or file")
@click.option("--corpus", "corpus_path", required=False, type=click.Path(exists=True))
@click.option("--json/--table", "as_json", default=False)
def invariants(pd_input, corpus_path, as_json):
    """Classical invariants: determinant, signature, writhe, components."""
    diagrams = []
    if pd_input:
        diagrams.append(_read_pd(pd_input))
    if corpus_path:
        try:
            diagrams.extend(e.diagram for e in load_corpus(corpus_path))
        except (ValueError, OSError) as ex:
            click.echo(f"error: corpus: {ex}", err=True)
            sys.exit(EXIT_INPUT)
    if not diagrams:
        click.echo("error: need --pd or --corpus", err=True)
        sys.exit(EXIT_INPUT)
    rows = []
    for d in diagrams:
        row = {
            "schema": 1,
            "name": d.name or "-",
            "crossings": len(d.crossings),
            "components": d.component_count(),
            "writhe": writhe(d),
        }
        try:
            row["det"] = determinant(d)
            row["sigma"] = signature(d)
        except DisconnectedDiagram:
            row["det"] = 0
            row["sigma"] = ""
        rows.append(row)
    cols = ["name", "crossings", "components", "writhe", "det", "sigma"]
    _emit(rows if as_json else None, as_json, rows, cols)


@main.command()
@click.option("--pd", "pd_input", required=True)
@click.option("--ring", type=click.Choice(["f2", "z"]), default="f2")
@click.option("--limit-crossings", type=int, default=14)
@click.option("--json/--table", "as_json", default=False)
@click.option("--plot", "plot_path", required=False, type=click.Path())
def kh(pd_input, ring, limit_crossings, as_json, plot_path):
    """Reduced Khovanov homology rank table with thinness verdict."""
    d = _read_pd(pd_input)
    compute = khovanov_reduced_f2 if ring == "f2" else khovanov_reduced_z
    ranks = compute(d, limit_crossings)
    sigma = signature(d)
    payload = ranks.to_json_dict()
    payload["sigma"] = sigma
    payload["thin"] = is_sigma_thin(ranks, sigma)
    payload["delta"] = [
        {"two_delta": k, "rank": v}
        for k, v in sorted(delta_collapse(ranks).entries.items())
    ]
    payload["jones"] = {str(k): v for k, v in sorted(jones_via_euler(ranks).items())}
    if plot_path:
        from .report import plot_rank_table

        plot_rank_table(ranks, plot_path, title=d.name or "rank table")
        payload["plot"] = str(plot_path)
    if as_json:
        _emit(payload, True)
    else:
        rows = [
            {"i": i, "j (=two_j/2)": j2 / 2, "two_delta": j2 - 2 * i, "rank": r}
            for (i, j2), r in sorted(ranks.entries.items())
        ]
        _emit(None, False, rows, ["i", "j (=two_j/2)", "two_delta", "rank"])
        click.echo(
            f"ring={payload['ring']} total={ranks.total_rank()} sigma={sigma} "
            f"thin={payload['thin']} torsion={'yes' if ranks.torsion else 'no'}"
        )


@main.command()
@click.option("--grid", "grid_input", required=True, help="grid string 'o|x' or file")
@click.option("--pd", "pd_input", required=False, help="PD of the same knot for sigma")
@click.option("--limit", type=int, default=8)
@click.option("--json/--table", "as_json", default=False)
def hfk(grid_input, pd_input, limit, as_json):
    """Grid knot Floer delta-graded ranks (tilde flavor, hat collapse)."""
    g = _read_grid(grid_input)
    try:
        dr = hfk_delta_ranks(g, limit)
    except ValueError as ex:
        click.echo(f"error: {ex}", err=True)
        sys.exit(EXIT_INPUT)
    payload = {
        "schema": 1,
        "name": g.name or "-",
        "n": g.n,
        "delta": [{"two_delta": k, "rank": v} for k, v in sorted(dr.entries.items())],
        "total": dr.total_rank(),
    }
    if pd_input is not None:
        d = _read_pd(pd_input)
        sigma = signature(d)
        payload["sigma"] = sigma
        payload["thin"] = is_floer_sigma_thin(dr, sigma)
    _emit(payload, as_json, [payload], None if as_json else ["name", "n", "total", "delta", "sigma", "thin"])


@main.command()
@click.option("--pd", "pd_input", required=True)
@click.option("--budget", type=int, default=100_000)
@click.option("--out", "out_path", required=False, type=click.Path())
@click.option("--json/--table", "as_json", default=True)
def qa(pd_input, budget, out_path, as_json):
    """Search for a quasi-alternating certificate; Unknown exits 1."""
    d = _read_pd(pd_input)
    result = qa_search(d, budget)
    if not result.found:
        payload = {"schema": 1, "status": "unknown", "expansions": result.expansions}
        _emit(payload, as_json, [payload], ["status", "expansions"])
        sys.exit(EXIT_NEGATIVE)
    ok = verify_certificate(result.certificate)
    payload = {
        "schema": 1,
        "status": "found",
        "verified": ok,
        "expansions": result.expansions,
        "certificate": json.loads(result.certificate.to_json())["certificate"],
    }
    if out_path:
        Path(out_path).write_text(result.certificate.to_json())
        payload["out"] = str(out_path)
    _emit(payload, as_json, [payload], ["status", "verified", "expansions", "out"])
    if not ok:
        sys.exit(EXIT_NEGATIVE)


def _verify_one(args):
    """Worker for verify-thin; takes primitives so it pickles cleanly."""
    name, pd_code, alternating, grid_perms, budget, limit = args
    d = parse_pd(pd_code, name=name)
    det = determinant(d)
    sigma = signature(d)
    row = {
        "name": name,
        "crossings": len(d.crossings),
        "alternating": alternating,
        "det": det,
        "sigma": sigma,
        "kh_thin": "",
        "kh_total": "",
        "hfk_thin": "",
        "qa_status": "",
        "delta_support": "",
    }
    if len(d.crossings) <= limit:
        ranks = khovanov_reduced_f2(d, limit)
        row["kh_thin"] = is_sigma_thin(ranks, sigma)
        row["kh_total"] = ranks.total_rank()
        row["delta_support"] = " ".join(
            str(k) for k in sorted(delta_collapse(ranks).entries)
        )
    if grid_perms is not None:
        o, x = grid_perms
        dr = hfk_delta_ranks(GridDiagram(o, x, name=name))
        row["hfk_thin"] = is_floer_sigma_thin(dr, sigma)
        row["hfk_delta_support"] = " ".join(str(k) for k in dr.support())
    res = qa_search(d, budget)
    row["qa_status"] = res.status
    if res.found and not verify_certificate(res.certificate):
        row["qa_status"] = "found-invalid"
    return row


@main.command(name="verify-thin")
@click.option("--corpus", "corpus_path", required=False, type=click.Path(exists=True))
@click.option("--grids", "grids_path", required=False, type=click.Path(exists=True))
@click.option("--budget", type=int, default=100_000)
@click.option("--limit-crossings", type=int, default=14)
@click.option("--out-dir", "out_dir", required=False, type=click.Path())
@click.option("--json/--table", "as_json", default=False)
def verify_thin(corpus_path, grids_path, budget, limit_crossings, out_dir, as_json):
    """Batch thinness verification: Khovanov, grid Floer, QA status."""
    try:
        entries = load_corpus(corpus_path) if corpus_path else load_corpus()
        grids = load_grids(grids_path) if grids_path else load_grids()
    except (ValueError, OSError) as ex:
        click.echo(f"error: corpus: {ex}", err=True)
        sys.exit(EXIT_INPUT)
    grid_by_pd = {}
    for ge in grids:
        if ge.pd_name:
            grid_by_pd[ge.pd_name] = (list(ge.grid.o), list(ge.grid.x))
    jobs = [
        (
            e.name,
            e.pd_code,
            e.alternating,
            grid_by_pd.get(e.name),
            budget,
            limit_crossings,
        )
        for e in entries
    ]
    workers = _worker_count()
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_verify_one, jobs))
    else:
        rows = [_verify_one(j) for j in jobs]

    failures = [
        r
        for r in rows
        if r["alternating"] and r["kh_thin"] is not True and r["kh_total"] != ""
    ]
    not_thin = [r["name"] for r in rows if r["kh_thin"] is False]
    summary = {
        "schema": 1,
        "entries": len(rows),
        "kh_thin": sum(1 for r in rows if r["kh_thin"] is True),
        "kh_not_thin": not_thin,
        "hfk_checked": sum(1 for r in rows if r["hfk_thin"] != ""),
        "hfk_not_thin": [r["name"] for r in rows if r["hfk_thin"] is False],
        "qa_found": sum(1 for r in rows if r["qa_status"] == "found"),
        "qa_unknown": [r["name"] for r in rows if r["qa_status"] == "unknown"],
        "alternating_failures": [r["name"] for r in failures],
    }
    cols = [
        "name",
        "crossings",
        "alternating",
        "det",
        "sigma",
        "kh_thin",
        "kh_total",
        "hfk_thin",
        "qa_status",
    ]
    if as_json:
        _emit({"rows": rows, "summary": summary}, True)
    else:
        _emit(None, False, rows, cols)
        click.echo(json.dumps(summary, sort_keys=True))
    if out_dir:
        from .report import (
            plot_delta_spectrum,
            plot_thinness_overview,
            write_summary_csv,
        )

        out = Path(out_dir)
        write_summary_csv(rows, cols, out / "summary.csv")
        spectra = {
            r["name"]: {
                int(v): 1 for v in r.get("delta_support", "").split() if v != ""
            }
            for r in rows
            if r.get("delta_support", "")
        }
        plot_delta_spectrum(spectra, out / "delta_spectrum.png",
                            title="reduced Khovanov delta support")
        plot_thinness_overview(rows, out / "thinness.png")
        click.echo(f"wrote {out}/summary.csv and figures")
    if failures:
        sys.exit(EXIT_NEGATIVE)


@main.command(name="check-lemmas")
@click.option("--corpus", "corpus_path", required=False, type=click.Path(exists=True))
@click.option("--samples", type=int, default=100, help="random skein-triangle samples")
@click.option("--seed", type=int, default=2206)
@click.option("--json/--table", "as_json", default=False)
def check_lemmas(corpus_path, samples, seed, as_json):
    """Resolution-signature lemma over all positive crossings of alternating
    entries, plus sampled skein-triangle rank checks."""
    try:
        entries = load_corpus(corpus_path) if corpus_path else load_corpus()
    except (ValueError, OSError) as ex:
        click.echo(f"error: corpus: {ex}", err=True)
        sys.exit(EXIT_INPUT)
    lemma_checked = 0
    lemma_hyp_failed = 0
    violations = []
    for e in entries:
        if not e.alternating:
            continue
        d = simplify(e.diagram)
        for ci in range(len(d.crossings)):
            rep = check_signature_lemma(d, ci)
            lemma_checked += 1
            if not rep["hypothesis_holds"]:
                lemma_hyp_failed += 1
                continue
            if not (rep["lemma_v_ok"] and rep["lemma_h_ok"]):
                violations.append((e.name, ci, rep))

    rng = random.Random(seed)
    pool = [
        (e, ci)
        for e in entries
        for ci in range(len(e.diagram.crossings))
        if len(e.diagram.crossings) <= 10
    ]
    rng.shuffle(pool)
    skein_checked = 0
    skein_hyp_failed = 0
    skein_violations = []
    for e, ci in pool[:samples]:
        rep = check_skein_grading(e.diagram, ci)
        skein_checked += 1
        if not rep["hypothesis_holds"]:
            skein_hyp_failed += 1
        if rep["graded_ok"] is False or not rep["parity_ok"] or not rep["total_bound_ok"]:
            skein_violations.append((e.name, ci))
    payload = {
        "schema": 1,
        "lemma_pairs_checked": lemma_checked,
        "lemma_hypothesis_failed": lemma_hyp_failed,
        "lemma_violations": [(n, c) for n, c, _ in violations],
        "skein_pairs_checked": skein_checked,
        "skein_hypothesis_failed": skein_hyp_failed,
        "skein_violations": skein_violations,
    }
    _emit(payload, as_json, [payload], list(payload))
    if violations or skein_violations:
        sys.exit(EXIT_NEGATIVE)


if __name__ == "__main__":
    main()
