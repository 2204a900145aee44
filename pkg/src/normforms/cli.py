"""Command-line front end.

Every command emits a :class:`~normforms.report.VerifyReport` (or a form
file) and exits 0 on pass, 1 on a mathematical failure and 2 on a usage
error such as a malformed input file.
"""

from __future__ import annotations

import functools
import json
import random
import re
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import click

from .csa import (NotDivisionAlgebra, QuaternionAlgebra, probe_quaternion_constant,
                  verify_reduced_norm_transfer, verify_split3_constant)
from .csa.probe import random_matrix
from .exactalg import SimpleExt
from .exactalg.fields import QQ, FieldMismatch, field_from_descriptor
from .exactalg.identity import DEFAULT_PRIME, DEFAULT_TRIALS
from .extfields import (NotLinearlyDisjoint, a_list_latex, norm_form, tower_plan, transfer_form,
                        verify_kummer_norm_identity, verify_transitivity_instance,
                        verify_trinomial_norm_identity)
from .extfields.towers import FORM_KINDS
from .extfields.transitivity import random_instance
from .forms import (BudgetExceeded, FormFileError, dump_form, form_from_dict, is_nondegenerate,
                    load_form, permits_composition_check, polarize)
from .report import VerifyReport, combine
from .verify import NotCompositionType, example_quartic, example_sextic, snp_bruteforce

IDENTITIES = ("transitivity", "kummer-norm", "trinomial-norm", "reduced-norm", "constant-probe",
              "pfister-quartic", "pfister-sextic", "composition")
SEED_ENV = "NORMFORMS_SEED"


class UsageFailure(Exception):
    """Bad input; mapped to exit code 2."""


USAGE_ERRORS = (UsageFailure, FormFileError, NotLinearlyDisjoint, NotDivisionAlgebra,
                NotCompositionType, BudgetExceeded, FieldMismatch, ValueError, KeyError)


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    mode: str = "auto"
    prime: int | None = None
    trials: int | None = None
    seed: int = 0
    budget: int = 2**24
    output_format: str = "json"

    def __post_init__(self):
        # probabilistic settings are carried only when they are used
        if self.mode != "probabilistic":
            self.prime = self.trials = None

    def to_dict(self) -> dict:
        return asdict(self)


# -- option plumbing --------------------------------------------------------------------

def run_options(fn):
    opts = [
        click.option("--mode", type=click.Choice(["auto", "exact", "probabilistic"]),
                     default="auto", show_default=True, help="Identity-testing mode."),
        click.option("--prime", type=int, default=DEFAULT_PRIME, show_default=True,
                     help="Prime for probabilistic identity testing."),
        click.option("--trials", type=int, default=DEFAULT_TRIALS, show_default=True,
                     help="Independent random evaluations."),
        click.option("--seed", type=int, default=0, envvar=SEED_ENV, show_default=True,
                     help=f"Random seed (default from ${SEED_ENV})."),
        click.option("--budget", type=int, default=2**24, show_default=True,
                     help="Enumeration budget for exhaustive searches."),
        click.option("--format", "fmt", type=click.Choice(["json", "text", "latex"]),
                     default="json", show_default=True, help="Output format."),
        click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
                     help="Write output to this file instead of stdout."),
        click.option("--timing", is_flag=True, help="Record wall time in reports."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except USAGE_ERRORS as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
    return wrapper


def _emit(text: str, out: Path | None):
    if out is None:
        click.echo(text)
    else:
        out.write_text(text + "\n")


def _render(rep: VerifyReport, fmt: str, latex: str | None = None) -> str:
    if fmt == "json":
        return rep.to_json()
    if fmt == "latex":
        if latex is not None:
            return latex
        status = "pass" if rep.passed else "fail"
        rows = [f"\\texttt{{{k}}} & \\texttt{{{json.dumps(v)}}} \\\\"
                for k, v in sorted(rep.parameters.items())]
        return "\n".join([f"% {rep.identity}: {status}", "\\begin{tabular}{ll}", *rows,
                          "\\end{tabular}"])
    lines = [rep.summary()]
    for title, block in (("parameters", rep.parameters), ("witness", rep.witness)):
        if block:
            lines.append(f"{title}:")
            for k, v in block.items():
                lines.append(f"  {k}: {json.dumps(v, sort_keys=True)}")
    lines.append(f"seed: {rep.seed}")
    if rep.wall_time is not None:
        lines.append(f"wall time: {rep.wall_time}s")
    return "\n".join(lines)


def _finish(rep: VerifyReport, cfg: RunConfig, fmt: str, out, timing: bool, start: float,
            latex: str | None = None):
    rep.seed = cfg.seed
    rep.parameters = {**rep.parameters, "run": cfg.to_dict()}
    rep.wall_time = round(time.perf_counter() - start, 6) if timing else None
    _emit(_render(rep, fmt, latex), out)
    sys.exit(0 if rep.passed else 1)


def _coeffs(text: str) -> list:
    """``"-2,0,0,1"`` (constant term first) as exact rationals."""
    try:
        return [QQ.parse(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageFailure(f"bad coefficient list {text!r}: {exc}") from exc


def _extension(coeffs: list, name: str = "alpha") -> SimpleExt:
    if len(coeffs) < 2 or coeffs[-1] != 1:
        raise UsageFailure("minimal polynomial must be monic of degree >= 1")
    return SimpleExt(QQ, coeffs, name)


def _load_extension(path: Path) -> SimpleExt:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormFileError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise FormFileError(f"{path}: expected a JSON object")
    try:
        desc = data if "minpoly" in data else data["extension"]
        E = field_from_descriptor({"kind": "extension", **desc})
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormFileError(f"{path}: malformed extension file ({exc})") from exc
    if not isinstance(E, SimpleExt):
        raise FormFileError(f"{path}: not a simple extension")
    return E


def _pair(text: str) -> tuple:
    vals = _coeffs(text)
    if len(vals) != 2:
        raise UsageFailure(f"expected two parameters, got {text!r}")
    return tuple(vals)


def _number_or_symbol(text: str):
    if re.fullmatch(r"[A-Za-z_]\w*", text):
        return text
    return QQ.parse(text)


def _constant_sweep(algebra: str, c_text: str, instances: int, split: bool, rng
                    ) -> VerifyReport:
    c = QQ.parse(c_text)
    if split:
        pairs = [(random_matrix(rng), random_matrix(rng, invertible=True))
                 for _ in range(instances)]
        return verify_split3_constant(c, pairs)
    A = QuaternionAlgebra(*_pair(algebra))
    pairs = []
    while len(pairs) < instances:
        x, y = A.random(rng), A.random(rng)
        if y.nrd():
            pairs.append((x, y))
    return probe_quaternion_constant(A, c, pairs)


# -- commands ---------------------------------------------------------------------------

@click.group()
@click.version_option(package_name="normforms")
def cli():
    """Exact verification of norm principles for forms of higher degree."""


@cli.command("polarize")
@click.argument("form_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@run_options
@guarded
def polarize_cmd(form_file, mode, prime, trials, seed, budget, fmt, out, timing):
    """Print the symmetric multilinear map of FORM_FILE."""
    phi = load_form(form_file)
    theta = polarize(phi)
    data = {"form": str(phi.poly), "degree": phi.degree, "dim": phi.dim,
            "blocks": theta.blocks, "theta": str(theta.poly),
            "symmetric": theta.is_symmetric(), "multilinear": theta.is_multilinear(),
            "nondegenerate": is_nondegenerate(phi)}
    if fmt == "json":
        text = json.dumps(data, indent=2)
    elif fmt == "latex":
        text = f"\\theta = {theta.poly.to_latex()}"
    else:
        text = "\n".join(f"{k}: {v}" for k, v in data.items())
    _emit(text, out)


@cli.command()
@click.argument("extension_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--prefix", default="z", show_default=True, help="Variable name prefix.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the form file here instead of stdout.")
@guarded
def normform(extension_file, prefix, out):
    """Write the norm form of the extension in EXTENSION_FILE as a form file."""
    E = _load_extension(extension_file)
    _emit(dump_form(norm_form(E, prefix=prefix)), out)


@cli.command()
@click.argument("extension_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("form_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--blocks", default=None, help="Comma-separated block prefixes, e.g. u,w.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the form file here instead of stdout.")
@guarded
def transfer(extension_file, form_file, blocks, out):
    """Write the transfer of FORM_FILE through the extension in EXTENSION_FILE."""
    E = _load_extension(extension_file)
    phi0 = load_form(form_file)
    if phi0.field is not E.base:
        raise UsageFailure("form and extension have different base fields")
    names = tuple(b.strip() for b in blocks.split(",")) if blocks else None
    _emit(dump_form(transfer_form(E, phi0, names)), out)


@cli.command()
@click.argument("identity", type=click.Choice(IDENTITIES))
@click.option("--degree", "-d", type=int, default=3, show_default=True,
              help="Extension degree d (kummer-norm, trinomial-norm).")
@click.option("--b", "b_value", default="symbolic", show_default=True,
              help="Linear coefficient b for trinomial-norm: 'symbolic' or a rational.")
@click.option("--r", "r", type=int, default=1, show_default=True,
              help="Pfister fold count (pfister-*).")
@click.option("--c", "c_value", default=None,
              help="Radicand c: a symbol or rational (default symbolic, 2 for constant-probe).")
@click.option("--minpoly", default="-2,0,0,1", show_default=True,
              help="Minimal polynomial of alpha, constant term first (transitivity, composition).")
@click.option("--base-minpoly", default=None,
              help="Minimal polynomial of K, constant term first "
                   "(default x^2+1 for transitivity, x^2-2 for reduced-norm).")
@click.option("--algebra", default="-1,-1", show_default=True,
              help="Quaternion parameters a,b (reduced-norm, constant-probe).")
@click.option("--instances", type=int, default=100, show_default=True,
              help="Random instances for transitivity, reduced-norm and constant-probe.")
@click.option("--pivot", type=click.Choice(["first", "last"]), default="first",
              show_default=True, help="Pivot rule for the reduced norm determinant (reduced-norm).")
@click.option("--split", is_flag=True, help="constant-probe: run the split degree-3 sweep.")
@click.option("--form", "form_file", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help="Form file carrying an algebra (composition).")
@run_options
@guarded
def verify(identity, degree, b_value, r, c_value, minpoly, base_minpoly, algebra, instances,
           pivot, split, form_file, mode, prime, trials, seed, budget, fmt, out, timing):
    """Run the named verification and emit its report."""
    start = time.perf_counter()
    cfg = RunConfig(f"verify {identity}", [str(form_file)] if form_file else [], mode, prime,
                    trials, seed, budget, fmt)
    rng = random.Random(seed)
    latex = None
    if identity in ("kummer-norm", "trinomial-norm"):
        if degree < 2:
            raise UsageFailure("degree must be at least 2")
        kw = {"prime": prime, "trials": trials, "seed": seed}
        if identity == "kummer-norm":
            rep = verify_kummer_norm_identity(degree, mode, **kw)
        else:
            b = b_value if b_value == "symbolic" else QQ.parse(b_value)
            rep = verify_trinomial_norm_identity(degree, mode, b=b, **kw)
        latex = a_list_latex(degree)
    elif identity == "transitivity":
        K = _extension(_coeffs(base_minpoly or "1,0,1"), "beta")
        f = _coeffs(minpoly)
        reps = [verify_transitivity_instance(f, K, random_instance(f, K, rng))
                for _ in range(instances)]
        rep = combine("norm-transitivity", reps,
                      parameters={"minpoly": f, "K": K.descriptor(), "instances": instances})
        rep.witness["first_instance"] = reps[0].witness if reps else None
    elif identity == "reduced-norm":
        A = QuaternionAlgebra(*_pair(algebra))
        K = _extension(_coeffs(base_minpoly or "-2,0,1"), "beta")
        reps = []
        for _ in range(instances):
            alphas = [A.random(rng, 3) for _ in range(K.degree)]
            reps.append(verify_reduced_norm_transfer(A, K, alphas, pivot))
        rep = combine("reduced-norm-transfer", reps,
                      parameters={"algebra": [A.a, A.b], "K": K.descriptor(),
                                  "pivot": pivot, "instances": instances})
    elif identity == "constant-probe":
        rep = _constant_sweep(algebra, c_value or "2", instances, split, rng)
    elif identity == "pfister-quartic":
        c = _number_or_symbol(c_value) if c_value else "c"
        rep = example_quartic(r, c=c)["report"]
    elif identity == "pfister-sextic":
        c = _number_or_symbol(c_value) if c_value else "c"
        rep = example_sextic(r, c=c)["report"]
    else:
        if form_file is not None:
            phi = load_form(form_file)
        else:
            phi = norm_form(_extension(_coeffs(minpoly)))
        if phi.algebra is None:
            raise UsageFailure("form file carries no algebra")
        rep = permits_composition_check(
            phi, phi.algebra, "exact" if mode == "auto" else mode, seed)
    _finish(rep, cfg, fmt, out, timing, start, latex if fmt == "latex" else None)


@cli.command()
@click.argument("form_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--m", "m", type=int, default=2, show_default=True,
              help="Degree of the extension GF(q^m) / GF(q).")
@click.option("--q", "q", type=int, default=None,
              help="Read the form modulo this prime (default: the form's own field).")
@run_options
@guarded
def snp(form_file, m, q, mode, prime, trials, seed, budget, fmt, out, timing):
    """Exhaustive finite-field norm-principle check for FORM_FILE."""
    start = time.perf_counter()
    data = json.loads(Path(form_file).read_text())
    if q is not None:
        data = {**data, "field": {"kind": "prime", "p": q}}
        if data.get("algebra") is None:
            raise UsageFailure("form file carries no algebra")
    phi = form_from_dict(data)
    cfg = RunConfig("snp", [str(form_file)], "exhaustive", None, None, seed, budget, fmt)
    rep = snp_bruteforce(phi, m, budget)
    _finish(rep, cfg, fmt, out, timing, start)


@cli.command()
@click.argument("steps", nargs=-1, type=int, required=True)
@click.option("--p", "p", type=int, required=True, help="Prime degree of the form.")
@click.option("--galois", "galois", default=None,
              help="Comma-separated 0/1 Galois flags, one per step (or a single flag).")
@click.option("--total-galois/--no-total-galois", default=None,
              help="Whether the whole tower is Galois.")
@click.option("--form", "form_kind", type=click.Choice(FORM_KINDS),
              default="prime-field-norm", show_default=True, help="Kind of form.")
@click.option("--subfield-degree", type=int, default=None,
              help="Degree of the Galois subfield (galois-subfield-norm).")
@click.option("--format", "fmt", type=click.Choice(["json", "text", "latex"]),
              default="text", show_default=True, help="Output format.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write output to this file instead of stdout.")
@guarded
def tower(steps, p, galois, total_galois, form_kind, subfield_degree, fmt, out):
    """Decide whether the norm principle is covered for the tower STEPS."""
    flags = None
    if galois is not None:
        flags = [bool(int(g)) for g in galois.split(",")]
        if len(flags) == 1:
            flags = flags[0]
        elif len(flags) != len(steps):
            raise UsageFailure("need one Galois flag per step")
    plan = tower_plan(list(steps), p, flags, form=form_kind, total_galois=total_galois,
                      subfield_degree=subfield_degree)
    if fmt == "json":
        text = json.dumps(plan.to_dict(), indent=2)
    elif fmt == "latex":
        text = (f"% tower {list(steps)} over a degree-{p} form\n"
                f"\\text{{{plan.verdict}}}")
    else:
        text = plan.render()
    _emit(text, out)


@cli.command()
@click.option("--algebra", default="-1,-1", show_default=True,
              help="Quaternion parameters a,b.")
@click.option("--c", "c_value", default="2", show_default=True, help="Radicand c.")
@click.option("--instances", type=int, default=100, show_default=True,
              help="Random (x, y) pairs.")
@click.option("--split", is_flag=True, help="Sweep the split degree-3 case instead.")
@run_options
@guarded
def probe(algebra, c_value, instances, split, mode, prime, trials, seed, budget, fmt, out,
          timing):
    """Sweep candidate constants in the quaternion (or split cubic) closed form."""
    start = time.perf_counter()
    cfg = RunConfig("probe", [], "exact", None, None, seed, budget, fmt)
    rng = random.Random(seed)
    rep = _constant_sweep(algebra, c_value, instances, split, rng)
    _finish(rep, cfg, fmt, out, timing, start)


def main(argv=None):
    cli.main(args=argv, prog_name="normforms")


if __name__ == "__main__":
    main()
