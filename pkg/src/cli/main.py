"""
Command line entry point.

Exit codes: 0 when every check passes, 1 when a verification fails and 2 for
invalid input (click usage errors and CliffordLabError alike).
"""
from __future__ import annotations

import json
import logging
import logging.config
from typing import Any, Dict, List, Optional

import click
import pandas as pd

from config import settings
from src.analytics.appell import TaylorSeries, appell_polynomial, require_odd_dimension
from src.analytics.elementary import ElementaryKind, eval_elementary
from src.analytics.fueter import (
    WeightKind,
    builtin_weights,
    classify_domain,
    diagram_check,
    fueter_sce_brute,
    fueter_sce_monomial,
    gamma,
    transport_weights,
)
from src.analytics.polyanalytic import appell_poly, c_map_monomial, tau_map_monomial
from src.analytics.rkhs import SpaceConfig, SpaceKind, kernel_eval, kernel_eval_certified
from src.analytics.sampling import CliffordSampler
from src.cli.serializers import (
    document,
    dumps,
    encode,
    parse_document,
    parse_point,
    render_document,
    render_frame,
    render_items_text,
)
from src.core.exceptions import CliffordLabError, ConfigError, DomainError
from src.core.multivector import multivector_to_json
from src.verification.report import CaseRecorder, VerificationReport, reports_frame
from src.verification.run_config import OUTPUT_FORMATS, PROFILES, SUITE_NAMES, RunConfig
from src.verification.suites import run_suites, verify_relation, verify_rkhs, verify_rkhs_operators

logger = logging.getLogger(__name__)

_FORMATS = click.Choice(["json", "text"])
_TABLE_FORMATS = click.Choice(list(OUTPUT_FORMATS))
_WEIGHT_SPACES = click.Choice([k.value for k in WeightKind if k is not WeightKind.CUSTOM])


class CliffordGroup(click.Group):
    """Group that reports library errors as usage errors (exit code 2)."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except CliffordLabError as exc:
            raise click.UsageError(str(exc), ctx) from exc


def _check_dimension(n: int) -> int:
    require_odd_dimension(n)
    if n > settings.MAX_DIMENSION:
        raise ConfigError(f"n={n} exceeds the maximum dimension {settings.MAX_DIMENSION}")
    return n


def _emit(payload: Dict[str, Any]) -> None:
    click.echo(dumps(payload))


def _finish(ctx: click.Context, reports: List[VerificationReport], output_format: str) -> None:
    """Print the reports and exit 1 if any failed."""
    timings = ctx.find_root().obj.get("timings", False)
    if output_format == "json":
        _emit(
            document(
                "report",
                passed=all(r.passed for r in reports),
                reports=[r.to_dict(include_timing=timings) for r in reports],
            )
        )
    else:
        click.echo(render_frame(reports_frame(reports), output_format))
        for report in reports:
            for failure in report.failures:
                click.echo(f"FAIL {report.suite}/{failure.case}: {failure.detail} {failure.inputs}", err=True)
    if not all(r.passed for r in reports):
        ctx.exit(1)


@click.group(cls=CliffordGroup)
@click.option("--verbose", is_flag=True, help="Log at DEBUG level to stderr.")
@click.option("--timings", is_flag=True, help="Include wall time in JSON reports.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, timings: bool) -> None:
    """Exact Clifford-Appell polynomials, Fueter-Sce maps and identity checks."""
    logging.config.dictConfig(settings.LOGGING)
    if verbose:
        logging.getLogger("src").setLevel(logging.DEBUG)
    ctx.ensure_object(dict)
    ctx.obj["timings"] = timings


# Appell polynomials

@cli.group()
def appell() -> None:
    """Clifford-Appell polynomials P_k^n."""


@appell.command("gen")
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--k", "k", type=click.IntRange(min=0), required=True)
@click.option("--format", "output_format", type=_FORMATS, default="json", show_default=True)
def appell_gen(n: int, k: int, output_format: str) -> None:
    """Print P_k^n as an explicit polynomial."""
    polynomial = appell_polynomial(_check_dimension(n), k)
    if output_format == "text":
        click.echo(str(polynomial))
        return
    _emit(document("value", n=n, k=k, value=encode(polynomial)))


# Fueter-Sce map

@cli.group()
def fueter() -> None:
    """The Fueter-Sce map and its weight transport."""


@fueter.command("apply")
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--power", type=click.IntRange(min=0), required=True, help="j in x^j.")
@click.option("--check", is_flag=True, help="Compare with repeated symbolic Laplacians.")
@click.option("--format", "output_format", type=_FORMATS, default="json", show_default=True)
@click.pass_context
def fueter_apply(ctx: click.Context, n: int, power: int, check: bool, output_format: str) -> None:
    """Apply Delta^{(n-1)/2} to x^j."""
    image = fueter_sce_monomial(_check_dimension(n), power)
    matches: Optional[bool] = None
    if check:
        matches = image == fueter_sce_brute(n, power)
    if output_format == "text":
        click.echo(str(image))
        if check:
            click.echo(f"check: {'ok' if matches else 'MISMATCH'}")
    else:
        fields: Dict[str, Any] = {"n": n, "power": power, "gamma": str(gamma(n)), "value": encode(image)}
        if check:
            fields["check"] = matches
        _emit(document("value", **fields))
    if matches is False:
        ctx.exit(1)


@fueter.command("diagram")
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--degree", type=click.IntRange(min=0), default=7, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--seed", type=int, default=None, help="Defaults to CLIFFORDLAB_SEED.")
@click.option("--format", "output_format", type=_TABLE_FORMATS, default="json", show_default=True)
@click.pass_context
def fueter_diagram(
    ctx: click.Context, n: int, degree: int, trials: int, seed: Optional[int], output_format: str
) -> None:
    """Check that the Fueter-Sce map and the GCK extension commute on random series."""
    _check_dimension(n)
    sampler = CliffordSampler(seed)
    with CaseRecorder("fueter-diagram") as rec:
        rec.check("monomial", diagram_check(n, TaylorSeries.monomial(n, degree)), {"j": degree})
        for _ in range(trials):
            f = sampler.taylor_series(n, degree)
            rec.check("diagram", diagram_check(n, f), {"f": f})
    _finish(ctx, [rec.report], output_format)


@fueter.command("weights")
@click.option("--space", type=_WEIGHT_SPACES, required=True)
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--upto", type=click.IntRange(min=0), default=20, show_default=True)
@click.option("--format", "output_format", type=_TABLE_FORMATS, default="csv", show_default=True)
def fueter_weights(space: str, n: int, upto: int, output_format: str) -> None:
    """Tabulate slice weights c_k and transported weights b_k."""
    c = builtin_weights(WeightKind(space))
    b = transport_weights(_check_dimension(n), c)
    frame = pd.DataFrame(
        {
            "k": list(range(upto + 1)),
            "c_k": [str(v) for v in c.values(upto)],
            "b_k": [str(v) for v in b.values(upto)],
            "b_k_float": [float(v) for v in b.values(upto)],
        }
    )
    if output_format != "json":
        click.echo(render_frame(frame, output_format))
        return
    try:
        domain: Optional[str] = classify_domain(b)
    except DomainError:
        domain = None
    _emit(document("weights", space=space, n=n, domain=domain, rows=frame.to_dict(orient="records")))


# Evaluation

@cli.command("eval")
@click.option("--fn", "fn", type=click.Choice([k.value for k in ElementaryKind]), required=True)
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--point", required=True, help="Comma separated x0,x1,...,xn.")
@click.option("--tol", type=float, default=None, help="Defaults to CLIFFORDLAB_TOLERANCE.")
@click.option("--format", "output_format", type=_FORMATS, default="json", show_default=True)
def eval_command(fn: str, n: int, point: str, tol: Optional[float], output_format: str) -> None:
    """Evaluate an elementary monogenic function with a certified truncation."""
    coordinates = parse_point(point, _check_dimension(n))
    tolerance = settings.DEFAULT_TOLERANCE if tol is None else tol
    result = eval_elementary(ElementaryKind(fn), n, coordinates, tolerance)
    if output_format == "text":
        click.echo(f"{fn}({point}) = {result.value}")
        click.echo(f"order: {result.order}, tail bound: {result.tail_bound:.3e}")
        return
    _emit(
        document(
            "evaluation",
            function=fn,
            n=n,
            point=coordinates,
            value=multivector_to_json(result.value),
            order=result.order,
            tail_bound=result.tail_bound,
        )
    )


# Reproducing kernels

@cli.group()
def kernel() -> None:
    """Reproducing kernels of the Fock, Hardy and Fueter-range modules."""


@kernel.command("eval")
@click.option("--space", type=click.Choice([k.value for k in SpaceKind]), required=True)
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--x", "x", required=True, help="Comma separated x0,x1,...,xn.")
@click.option("--y", "y", required=True, help="Comma separated y0,y1,...,yn.")
@click.option(
    "--trunc", type=click.IntRange(min=0), default=None, help="Defaults to CLIFFORDLAB_KERNEL_TRUNCATION."
)
@click.option("--tol", type=float, default=None, help="Grow the truncation until the tail bound is below tol.")
@click.option("--format", "output_format", type=_FORMATS, default="json", show_default=True)
def kernel_eval_command(
    space: str, n: int, x: str, y: str, trunc: Optional[int], tol: Optional[float], output_format: str
) -> None:
    """Truncated kernel sum K(x, y) with its tail bound when one is known."""
    if trunc is not None and tol is not None:
        raise click.UsageError("--trunc and --tol are mutually exclusive")
    if tol is not None and tol <= 0:
        raise click.BadParameter(f"must be positive, got {tol}", param_hint="--tol")
    config = SpaceConfig(SpaceKind(space), _check_dimension(n))
    x_point, y_point = parse_point(x, n), parse_point(y, n)
    if tol is not None:
        result = kernel_eval_certified(config, x_point, y_point, tol)
    else:
        order = settings.KERNEL_TRUNCATION if trunc is None else trunc
        result = kernel_eval(config, x_point, y_point, order)
    if output_format == "text":
        click.echo(str(result.value))
        click.echo(f"order: {result.order}, tail bound: {result.tail_bound}")
        return
    _emit(
        document(
            "kernel",
            space=space,
            n=n,
            x=x_point,
            y=y_point,
            value=multivector_to_json(result.value),
            order=result.order,
            tail_bound=result.tail_bound,
        )
    )


@cli.group()
def rkhs() -> None:
    """Operator identities on the Hilbert modules."""


@rkhs.command("verify")
@click.option(
    "--suite", "which", type=click.Choice(["operators", "full"]), default="operators", show_default=True
)
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=200, show_default=True)
@click.option("--max-k", type=click.IntRange(min=0), default=8, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--format", "output_format", type=_TABLE_FORMATS, default="json", show_default=True)
@click.pass_context
def rkhs_verify(
    ctx: click.Context, which: str, n: int, trials: int, max_k: int, seed: Optional[int], output_format: str
) -> None:
    """Run the operator checks, or the whole module suite with --suite full."""
    config = _run_config(n=n, trials=trials, max_k=max_k, seed=seed, suite="rkhs")
    report = verify_rkhs_operators(config) if which == "operators" else verify_rkhs(config)
    _finish(ctx, [report], output_format)


# Polyanalytic maps

@cli.group()
def poly() -> None:
    """Polyanalytic Fueter-Sce maps C_{m+1} and tau_{m+1}."""


@poly.command("cmap")
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--m", "m", type=click.IntRange(min=0), required=True)
@click.option("--k", "k", type=click.IntRange(min=0), required=True, help="Power of conj(x).")
@click.option("--j", "j", type=click.IntRange(min=0), required=True, help="Power of x.")
@click.option("--tau", is_flag=True, help="Apply tau_{m+1} instead of C_{m+1}.")
@click.option("--format", "output_format", type=_FORMATS, default="json", show_default=True)
def poly_cmap(n: int, m: int, k: int, j: int, tau: bool, output_format: str) -> None:
    """Image of conj(x)^k x^j."""
    _check_dimension(n)
    image = tau_map_monomial(n, m, k, j) if tau else c_map_monomial(n, m, k, j)
    if output_format == "text":
        click.echo(str(image))
        return
    _emit(document("value", map="tau" if tau else "C", n=n, m=m, k=k, j=j, value=encode(image)))


@poly.command("verify")
@click.option("--relation", is_flag=True, help="Only the relation D^m C_{m+1} = 2^{-m} tau_{m+1}.")
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--m", "m", type=click.IntRange(min=0), default=2, show_default=True)
@click.option("--degree", type=click.IntRange(min=0), default=7, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--format", "output_format", type=_TABLE_FORMATS, default="json", show_default=True)
@click.pass_context
def poly_verify(
    ctx: click.Context,
    relation: bool,
    n: int,
    m: int,
    degree: int,
    trials: int,
    seed: Optional[int],
    output_format: str,
) -> None:
    """Check the polyanalytic identities on seeded random functions."""
    config = _run_config(n=n, m=m, max_degree=degree, trials=trials, seed=seed, suite="polyanalytic")
    reports = [verify_relation(config)] if relation else run_suites(config)
    _finish(ctx, reports, output_format)


# Suites and documents

def _run_config(**kwargs: Any) -> RunConfig:
    if kwargs.get("seed") is None:
        kwargs.pop("seed", None)
    if kwargs.get("tolerance") is None:
        kwargs.pop("tolerance", None)
    _check_dimension(kwargs.get("n", 3))
    return RunConfig(**kwargs)


@cli.command("verify")
@click.option("--suite", type=click.Choice(list(SUITE_NAMES) + ["all"]), default="all", show_default=True)
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--max-k", type=click.IntRange(min=0), default=12, show_default=True)
@click.option("--max-degree", type=click.IntRange(min=0), default=7, show_default=True)
@click.option("--m", "m", type=click.IntRange(min=0), default=2, show_default=True)
@click.option("--truncation", type=click.IntRange(min=0), default=12, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--tol", type=float, default=None)
@click.option(
    "--profile",
    type=click.Choice(list(PROFILES)),
    default="acceptance",
    show_default=True,
    help="acceptance raises each randomized check to its minimum sample size.",
)
@click.option("--seed", type=int, default=None)
@click.option("--format", "output_format", type=_TABLE_FORMATS, default="json", show_default=True)
@click.pass_context
def verify(
    ctx: click.Context,
    suite: str,
    n: int,
    max_k: int,
    max_degree: int,
    m: int,
    truncation: int,
    trials: int,
    tol: Optional[float],
    profile: str,
    seed: Optional[int],
    output_format: str,
) -> None:
    """Run one verification suite, or all of them."""
    config = _run_config(
        n=n,
        suite=suite,
        max_k=max_k,
        max_degree=max_degree,
        m=m,
        truncation=truncation,
        trials=trials,
        tolerance=tol,
        profile=profile,
        seed=seed,
        output_format=output_format,
        timings=ctx.find_root().obj.get("timings", False),
    )
    logger.info("Verifying %s with %s", suite, config)
    _finish(ctx, run_suites(config), output_format)


@cli.command("generate")
@click.option("--kind", type=click.Choice(["appell", "polyappell", "monomial-map"]), required=True)
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--max-k", type=click.IntRange(min=0), default=5, show_default=True)
@click.option("--m", "m", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--format", "output_format", type=_FORMATS, default="json", show_default=True)
def generate(kind: str, n: int, max_k: int, m: int, output_format: str) -> None:
    """
    Tabulate polynomial families.

    appell: P_k for k <= max-k. polyappell: x0^k P_s for k + s <= max-k.
    monomial-map: C_{m+1}(conj(x)^k x^j) for k <= m and j <= max-k.
    """
    _check_dimension(n)
    if kind == "appell":
        keys = ["k"]
        items = [{"k": k, "value": appell_polynomial(n, k)} for k in range(max_k + 1)]
    elif kind == "polyappell":
        keys = ["k", "s"]
        items = [
            {"k": k, "s": s, "value": appell_poly(k, s, n)} for k in range(max_k + 1) for s in range(max_k + 1 - k)
        ]
    else:
        keys = ["k", "j"]
        items = [
            {"k": k, "j": j, "value": c_map_monomial(n, m, k, j)} for k in range(m + 1) for j in range(max_k + 1)
        ]
    if output_format == "text":
        click.echo(render_items_text(items, keys))
        return
    fields: Dict[str, Any] = {"n": n, "max_k": max_k}
    if kind == "monomial-map":
        fields["m"] = m
    _emit(render_document({"kind": kind, "items": items, **fields}))


@cli.command("parse")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
def parse(path: str) -> None:
    """Read a document written by this tool and print its canonical form."""
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DomainError(f"{path} is not valid JSON: {exc}") from exc
    _emit(render_document(parse_document(data)))


def main() -> None:
    cli(obj={})


if __name__ == "__main__":
    main()
