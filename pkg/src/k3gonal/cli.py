"""Command-line surface for every calculator in the package.

Usage sketch (global flags go before the subcommand):

    k3gonal bn rho -g 9 -r 1 -d 6
    k3gonal bn check -p 9 -k 4 --delta 2
    k3gonal gonality delta0 -p 9 -k 4 --verify
    k3gonal gonality dims -p 8 -k 2 --delta 4
    k3gonal chains witness -p 8 -k 2 --delta 5
    k3gonal chains enumerate -p 4 -k 2
    k3gonal chains stable -p 8 -k 2 --alpha 1:2,2:1,4:1
    k3gonal pencil verify -k 3 --samples 50 --seed 7
    k3gonal --format json hilb class -p 8 -k 2 --delta 4
    k3gonal hilb qvalues -k 3 --pmax 300 --format csv
    k3gonal hilb scan --pmax 20 --kmax 4

Output formats: table (default, unicode fractions), json (stable schema,
rationals as "num/den" strings), csv.  `--out FILE` redirects to a UTF-8
file.  Exit codes: 0 success, 1 domain/usage error, 2 internal invariant
violation (a failed cross-check aborts loudly, never downgrades to a
warning).
"""

import csv
import io
import json
import sys
from fractions import Fraction

import click

from . import brillnoether, chains, gonality, hilbert, pencil
from .errors import InvariantViolation
from .hilbert import rat_str

__all__ = ["cli", "main"]


def _rat_table(q) -> str:
    """Table-mode rendering: unicode fraction slash, integers bare."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}⁄{q.denominator}"


def _output_options(command):
    """Attach trailing --format/--out flags that override the group-level ones."""
    command = click.option(
        "--format",
        "fmt",
        type=click.Choice(["table", "json", "csv"]),
        default=None,
        help="Output format (overrides the global flag).",
    )(command)
    command = click.option(
        "--out",
        "out",
        type=click.Path(),
        default=None,
        help="Write output to FILE (overrides the global flag).",
    )(command)
    return command


def _emit(ctx: click.Context, payload: dict, table: str, csv_rows=None) -> None:
    """Render one result in the selected format and write it out."""
    fmt = ctx.params.get("fmt") or ctx.obj["format"]
    if fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv":
        rows = csv_rows
        if rows is None:
            rows = [list(payload.keys()), [_csv_cell(v) for v in payload.values()]]
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        text = buf.getvalue()
    else:
        text = table if table.endswith("\n") else table + "\n"
    out_path = ctx.params.get("out") or ctx.obj["out"]
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _csv_cell(v):
    if isinstance(v, Fraction):
        return rat_str(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return v


@click.group()
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json", "csv"]),
    default="table",
    show_default=True,
    help="Output format.",
)
@click.option("--out", type=click.Path(), default=None, help="Write output to FILE.")
@click.pass_context
def cli(ctx, fmt, out):
    """Exact calculators for gonality loci on K3 surfaces and the Mori cone
    of punctual Hilbert schemes."""
    ctx.ensure_object(dict)
    ctx.obj["format"] = fmt
    ctx.obj["out"] = out


# -- bn -----------------------------------------------------------------


@cli.group()
def bn():
    """Brill-Noether numbers and the existence bound."""


@bn.command("rho")
@click.option("-g", "g", type=int, required=True, help="Genus.")
@click.option("-r", "r", type=int, required=True, help="Series dimension.")
@click.option("-d", "d", type=int, required=True, help="Series degree.")
@_output_options
@click.pass_context
def bn_rho(ctx, g, r, d, fmt, out):
    """The Brill-Noether number g - (r+1)(r+g-d)."""
    value = brillnoether.rho(g, r, d)
    _emit(ctx, {"g": g, "r": r, "d": d, "rho": value}, table=str(value))


@bn.command("check")
@click.option("-p", "p", type=int, required=True, help="Arithmetic genus.")
@click.option("-k", "k", type=int, default=None, help="Gonality (sets d=k, r=1).")
@click.option("--delta", type=int, required=True, help="Marked node count.")
@click.option("-r", "r", type=int, default=None, help="Series dimension (default 1).")
@click.option("-d", "d", type=int, default=None, help="Series degree (default k).")
@_output_options
@click.pass_context
def bn_check(ctx, p, k, delta, r, d, fmt, out):
    """Existence bound for a g^r_d on the normalization."""
    if d is None:
        if k is None:
            raise click.UsageError("provide -k, or an explicit degree via -d")
        d = k
    r = 1 if r is None else r
    report = brillnoether.necessary_condition(p, delta, r, d)
    payload = {
        "p": p,
        "delta": delta,
        "r": r,
        "d": d,
        "alpha": report.alpha,
        "rho_at_alpha": report.rho_at_alpha,
        "threshold_delta": report.threshold_delta,
        "satisfied": report.satisfied,
    }
    verdict = "satisfied" if report.satisfied else "violated"
    table = (
        f"{verdict} (alpha={report.alpha}, rho={report.rho_at_alpha}, "
        f"threshold={report.threshold_delta})"
    )
    _emit(ctx, payload, table=table)


# -- gonality -----------------------------------------------------------


@cli.group("gonality")
def gonality_group():
    """Admissibility, minimal node numbers, expected dimensions."""


@gonality_group.command("delta0")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@click.option("--verify", is_flag=True, help="Cross-check against the brute-force scan.")
@_output_options
@click.pass_context
def gonality_delta0(ctx, p, k, verify, fmt, out):
    """Minimal admissible node number, in closed form."""
    value = gonality.delta0(p, k)
    verified = False
    if verify:
        oracle = gonality.delta0_bruteforce(p, k)
        if oracle != value:
            raise InvariantViolation(
                f"delta0 closed form {value} != brute-force oracle {oracle} "
                f"at (p={p}, k={k})"
            )
        verified = True
    payload = {"p": p, "k": k, "delta0": value, "verified": verified}
    table = f"{value} (verified)" if verified else str(value)
    _emit(ctx, payload, table=table)


@gonality_group.command("dims")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@click.option("--delta", type=int, required=True)
@_output_options
@click.pass_context
def gonality_dims(ctx, p, k, delta, fmt, out):
    """Expected dimension of the k-gonal locus and of W^1_k."""
    dim_vk, dim_w1k = gonality.expected_dims(p, k, delta)
    payload = {"p": p, "k": k, "delta": delta, "dim_Vk": dim_vk, "dim_W1k": dim_w1k}
    _emit(ctx, payload, table=f"dim V^k = {dim_vk}, dim W^1_k = {dim_w1k}")


# -- chains -------------------------------------------------------------


@cli.group("chains")
def chains_group():
    """Chain partitions: witnesses, enumeration, stable models."""


def _partition_table(part: chains.ChainPartition) -> str:
    body = ", ".join(f"{j}:{a}" for j, a in part.parts)
    return f"p={part.p} k={part.k} delta={part.delta} g={part.g} parts[{body}]"


@chains_group.command("witness")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@click.option("--delta", type=int, required=True)
@_output_options
@click.pass_context
def chains_witness(ctx, p, k, delta, fmt, out):
    """A valid partition realizing the requested node number."""
    part = chains.witness(p, k, delta)
    _emit(ctx, part.to_payload(), table=_partition_table(part))


@chains_group.command("enumerate")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@_output_options
@click.pass_context
def chains_enumerate(ctx, p, k, fmt, out):
    """All valid partitions for (p, k), in stable order."""
    parts = chains.enumerate_partitions(p, k)
    payload = {"p": p, "k": k, "count": len(parts), "partitions": [
        part.to_payload() for part in parts
    ]}
    table = "\n".join(_partition_table(part) for part in parts)
    csv_rows = [["delta", "g", "parts"]] + [
        [part.delta, part.g, json.dumps(part.to_payload()["parts"])]
        for part in parts
    ]
    _emit(ctx, payload, table=table, csv_rows=csv_rows)


def _parse_alpha(text: str) -> dict[int, int]:
    mult: dict[int, int] = {}
    try:
        for piece in text.split(","):
            j, a = piece.split(":")
            mult[int(j)] = int(a)
    except (ValueError, TypeError) as exc:
        raise click.UsageError(
            f"--alpha expects comma-separated j:multiplicity pairs, got {text!r}"
        ) from exc
    return mult


@chains_group.command("stable")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@click.option("--alpha", required=True, help="Sparse multiplicities, e.g. 1:2,2:1,4:1.")
@_output_options
@click.pass_context
def chains_stable(ctx, p, k, alpha, fmt, out):
    """Stable-model node count and bookkeeping for a given partition."""
    part = chains.ChainPartition(p, k, _parse_alpha(alpha))
    if not chains.validate(part):
        raise ValueError(
            f"partition invalid: weight {part.weight()} vs p={p}, cap {2 * (k - 1)}"
        )
    curve = chains.SymbolicChainCurve(part)
    nodes, genus = chains.stable_model(curve)
    payload = curve.to_payload() | {"stable_nodes": nodes, "arithmetic_genus": genus}
    table = (
        f"stable model: {nodes} nodes, arithmetic genus {genus}\n"
        f"lines={curve.line_count} ruling2={curve.ruling2_lines} "
        f"marked={curve.marked_nodes} e_points={curve.e_points}"
    )
    _emit(ctx, payload, table=table)


# -- pencil -------------------------------------------------------------


@cli.group("pencil")
def pencil_group():
    """Randomized exact verification of the Sym^2(P^1) pencil algebra."""


@pencil_group.command("verify")
@click.option("-k", "k", type=int, required=True)
@click.option("--samples", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_output_options
@click.pass_context
def pencil_verify(ctx, k, samples, seed, fmt, out):
    """Degree law, diagonal identity, membership oracle, conic counts."""
    result = pencil.verification_suite(k, samples=samples, seed=seed)
    rate = result["transversal_rate"]
    payload = {
        "k": k,
        "samples": samples,
        "seed": seed,
        "membership_points": result["membership_points"],
        "failures": result["failures"],
        "transversal": result["transversal"],
        "transversal_rate": rat_str(rate),
    }
    table = (
        f"k={k} samples={samples} seed={seed} "
        f"transversal={result['transversal']}/{samples} "
        f"failures={len(result['failures'])}"
    )
    if result["failures"]:
        raise InvariantViolation(
            "; ".join(result["failures"][:5])
            + (f" (+{len(result['failures']) - 5} more)" if len(result["failures"]) > 5 else "")
        )
    if rate < Fraction(95, 100):
        raise InvariantViolation(
            f"transversality rate {rate} below 95% at k={k}, seed={seed}"
        )
    _emit(ctx, payload, table=table)


# -- hilb ---------------------------------------------------------------


@cli.group("hilb")
def hilb():
    """Curve classes, q-values and cone bounds on the Hilbert scheme."""


@hilb.command("class")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@click.option("--delta", type=int, required=True)
@_output_options
@click.pass_context
def hilb_class(ctx, p, k, delta, fmt, out):
    """The curve class H - (g+k-1) r_k of an admissible case."""
    cls = hilbert.gonality_class(p, k, delta)
    payload = {
        "p": p,
        "k": k,
        "delta": delta,
        "class": cls.to_payload(),
        "q": rat_str(cls.q),
        "display": cls.display(),
    }
    _emit(ctx, payload, table=cls.display())


@hilb.command("q")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@click.option("--delta", type=int, required=True)
@_output_options
@click.pass_context
def hilb_q(ctx, p, k, delta, fmt, out):
    """Self-intersection of the gonality class, both closed forms."""
    q = hilbert.q_case(p, k, delta)
    payload = {"p": p, "k": k, "delta": delta, "q": rat_str(q)}
    _emit(ctx, payload, table=_rat_table(q))


@hilb.command("cone")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@_output_options
@click.pass_context
def hilb_cone(ctx, p, k, fmt, out):
    """Cone bound tau(p, k) and the optimal class behind it."""
    t = hilbert.tau(p, k)
    opt = hilbert.optimal_class(p, k)
    payload = {
        "p": p,
        "k": k,
        "tau": rat_str(t),
        "optimal_class": opt.to_payload(),
        "delta0": gonality.delta0(p, k),
        "q_optimal": rat_str(opt.q),
        "ample_necessary": "0 < t < tau",
        "nef_necessary": "0 <= t <= tau",
    }
    table = (
        f"tau = {_rat_table(t)}; optimal class {opt.display()} "
        f"(q = {_rat_table(opt.q)})\n"
        f"H - t*e_k ample only if 0 < t < tau, nef only if 0 <= t <= tau"
    )
    _emit(ctx, payload, table=table)


@hilb.command("qvalues")
@click.option("-k", "k", type=int, required=True)
@click.option("--pmax", type=int, required=True)
@_output_options
@click.pass_context
def hilb_qvalues(ctx, k, pmax, fmt, out):
    """Negative optimal self-intersections attained up to pmax."""
    values = hilbert.attained_q_values(k, pmax)
    payload = {"k": k, "pmax": pmax, "qvalues": [rat_str(v) for v in values]}
    table = "\n".join(_rat_table(v) for v in values)
    csv_rows = [["q"]] + [[rat_str(v)] for v in values]
    _emit(ctx, payload, table=table, csv_rows=csv_rows)


@hilb.command("lagrangian")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@_output_options
@click.pass_context
def hilb_lagrangian(ctx, p, k, fmt, out):
    """Isotropy detection and the Lagrangian-fibration necessary condition."""
    report = hilbert.lagrangian_report(p, k)
    if not report.has_isotropic:
        table = "no isotropic class: (k-1)(p-1) is not a perfect square"
    else:
        verdict = (
            "isotropic divisor not nef"
            if report.not_nef
            else "necessary condition holds"
        )
        prim = f", primitive (n={report.n})" if report.primitive else ""
        table = f"s={report.s} alpha={report.alpha} value={report.value}: {verdict}{prim}"
    _emit(ctx, report.to_payload(), table=table)


@hilb.command("rays")
@click.option("-p", "p", type=int, required=True)
@click.option("-k", "k", type=int, required=True)
@_output_options
@click.pass_context
def hilb_rays(ctx, p, k, fmt, out):
    """Extremal-ray status of the Mori cone for (p, k)."""
    report = hilbert.extremal_ray_status(p, k)
    rays = ", ".join(r.display() for r in report.rays)
    table = f"{report.status}: rays {{{rays}}} (q = {_rat_table(report.q)})"
    if report.notes:
        table += "\n" + "\n".join(f"note: {n}" for n in report.notes)
    _emit(ctx, report.to_payload(), table=table)


@hilb.command("scan")
@click.option("--pmax", type=int, required=True)
@click.option("--kmax", type=int, required=True)
@click.option("--pmin", type=int, default=2, show_default=True)
@click.option("--kmin", type=int, default=2, show_default=True)
@_output_options
@click.pass_context
def hilb_scan(ctx, pmax, kmax, pmin, kmin, fmt, out):
    """One row per (p, k): delta0, g, optimal class, q, cone and flags."""
    if pmin < 2 or kmin < 2:
        raise ValueError("need pmin >= 2 and kmin >= 2")
    rows = []
    for k in range(kmin, kmax + 1):
        for p in range(pmin, pmax + 1):
            d0 = gonality.delta0(p, k)
            opt = hilbert.optimal_class(p, k)
            ray = hilbert.extremal_ray_status(p, k)
            lag = hilbert.lagrangian_report(p, k)
            rows.append(
                {
                    "p": p,
                    "k": k,
                    "delta0": d0,
                    "g": p - d0,
                    "class": opt.display(),
                    "q": rat_str(opt.q),
                    "tau": rat_str(hilbert.tau(p, k)),
                    "cone_status": ray.status,
                    "isotropic": lag.has_isotropic,
                    "lagrangian_ok": lag.necessary_condition_holds,
                    "primitive": lag.primitive,
                }
            )
    payload = {"pmin": pmin, "pmax": pmax, "kmin": kmin, "kmax": kmax, "rows": rows}
    header = list(rows[0].keys()) if rows else []
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(str(row[h]) for h in header))
    csv_rows = [header] + [[_csv_cell(row[h]) for h in header] for row in rows]
    _emit(ctx, payload, table="\n".join(lines), csv_rows=csv_rows)


def main(argv=None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.exceptions.Abort:
        return 1
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except InvariantViolation as exc:
        click.echo(f"invariant violation: {exc}", err=True)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
