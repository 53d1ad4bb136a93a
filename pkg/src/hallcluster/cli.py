"""Command-line front end.

Exit codes: 0 success, 1 identity violated, 2 input error, 3 guard exceeded.
"""

from __future__ import annotations

import ast
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import click
import numpy as np

from . import reps as R
from .cc import cc, ck_check, cluster_mult_check, higher_assoc_sweep
from .chi import NotPolynomialCount
from .cluster import CeilingExceeded, Seed, enumerate_clusters, finite_type_test, mutate_sequence
from .descriptors import Decorated, DescriptorError, Universe, module, tits_positive_definite
from .ffield import GuardExceeded, is_prime
from .green import Report, universe
from .laurent import laurent_check
from .quiver import Quiver, Relation, euler_matrix, kronecker, linear_a
from .sweeps import (
    GREEN_VARIANTS,
    Sweep,
    associativity_sweep,
    coproduct_sweep,
    green_sweep,
    pairing_sweep,
    riedtmann_peng_sweep,
    serre_sweep,
    split_extension_sweep,
)
from .twocy import MESH_SIGN, class_table, preprojective, thm82_check, thm82_sweep

OK, VIOLATED, INPUT_ERROR, GUARD = 0, 1, 2, 3

BUILTIN = {
    "a1": lambda: Quiver(1, ()),
    "a2": lambda: linear_a(2),
    "a2-left": lambda: linear_a(2, "left"),
    "a3": lambda: Quiver(3, ((0, 1), (2, 1))),
    "a3-linear": lambda: linear_a(3),
    "a3-rel": lambda: Quiver(3, ((2, 1), (1, 0)), (Relation.of((1, (1, 0))),)),
    "kronecker": kronecker,
}


class InputError(ValueError):
    pass


# ---------------------------------------------------------------- parsers


def _literal(text: str, what: str):
    quoted = re.sub(r"([A-Za-z_]\w*)\s*:", r'"\1":', text)
    try:
        return ast.literal_eval(quoted)
    except (ValueError, SyntaxError) as exc:
        raise InputError(f"cannot parse {what}: {text!r}") from exc


def _split_fields(text: str) -> list[tuple[str, str]]:
    """key=value fields separated by newlines or top-level semicolons."""
    out, depth, cur = [], 0, []
    for ch in text:
        depth += ch in "[({"
        depth -= ch in "])}"
        if depth == 0 and ch in ";\n":
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    fields = []
    for raw in out:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("rel:"):
            fields.append(("rel", line[4:].strip()))
            continue
        key, eq, val = line.partition("=")
        if not eq:
            raise InputError(f"expected key=value, got {line!r}")
        fields.append((key.strip(), val.strip()))
    return fields


def _relation(obj) -> Relation:
    terms = obj if isinstance(obj, list) else [obj]
    out = []
    for t in terms:
        if not isinstance(t, dict) or "path" not in t:
            raise InputError(f"relation term {t!r} needs a path")
        out.append((int(t.get("coeff", 1)), tuple(int(a) - 1 for a in t["path"])))
    return Relation.of(*out)


_REL_TERM = re.compile(r"\s*([+-])?\s*(\d*)\s*\*?\s*\[([^\]]*)\]")


def _rel_line(text: str) -> Relation:
    """``1*[a2,a1] - 1*[a4,a3]``: coefficient times a path listed target to source."""
    terms, pos = [], 0
    while pos < len(text.rstrip()):
        m = _REL_TERM.match(text, pos)
        if not m:
            raise InputError(f"cannot parse relation {text!r}")
        sign, coef, body = m.groups()
        c = int(coef) if coef else 1
        try:
            path = tuple(int(a.strip().lstrip("a")) - 1 for a in body.split(",") if a.strip())
        except ValueError as exc:
            raise InputError(f"bad path [{body}]") from exc
        terms.append((-c if sign == "-" else c, path))
        pos = m.end()
    if not terms:
        raise InputError("empty relation")
    return Relation.of(*terms)


def parse_quiver(text: str) -> Quiver:
    """``vertices=N; arrows=[(s,t),...]; relations=[{coeff: c, path: [..]}, ...]`` (1-based).

    A relation with several terms is a list of such dicts.  Paths list arrow
    indices from target to source.  A line ``rel: 1*[a2,a1]`` also adds a relation.
    """
    n, arrows, rels = None, [], []
    for key, val in _split_fields(text):
        if key == "vertices":
            try:
                n = int(val)
            except ValueError as exc:
                raise InputError(f"vertices must be an integer, got {val!r}") from exc
        elif key == "arrows":
            arrows = _literal(val, "arrows")
        elif key == "relations":
            rels += [_relation(r) for r in _literal(val, "relations")]
        elif key == "rel":
            rels.append(_rel_line(val))
        else:
            raise InputError(f"unknown quiver field {key!r}")
    if n is None:
        raise InputError("quiver file lacks vertices=")
    try:
        return Quiver(n, tuple((int(s) - 1, int(t) - 1) for s, t in arrows), tuple(rels))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def parse_module(text: str, q: Quiver, p: int) -> R.Rep:
    """``dims=[...]`` plus ``mat k = [[...]]`` per arrow (1-based); missing arrows act by zero."""
    dims, mats = None, {}
    for key, val in _split_fields(text):
        if key == "dims":
            dims = tuple(int(x) for x in _literal(val, "dims"))
        elif key.startswith("mat"):
            k = int(key[3:].strip()) - 1
            if not 0 <= k < len(q.arrows):
                raise InputError(f"arrow {k + 1} outside 1..{len(q.arrows)}")
            mats[k] = _literal(val, f"matrix {k + 1}")
        else:
            raise InputError(f"unknown module field {key!r}")
    if dims is None or len(dims) != q.n:
        raise InputError(f"module needs dims=[...] with {q.n} entries")
    blocks = []
    for k, (s, t) in enumerate(q.arrows):
        a = np.asarray(mats.get(k, np.zeros((dims[t], dims[s]))), dtype=np.int64).reshape(-1)
        if a.size != dims[t] * dims[s]:
            raise InputError(f"matrix {k + 1} must be {dims[t]}x{dims[s]}")
        blocks.append(a.reshape(dims[t], dims[s]) % p)
    m = R.Rep(q, p, dims, tuple(blocks))
    if not m.satisfies_relations():
        raise InputError("module violates a relation")
    return m


def load_quiver(spec: str) -> Quiver:
    path = Path(spec)
    if path.is_file():
        return parse_quiver(path.read_text())
    key = spec.lower().removesuffix(".q")
    if key in BUILTIN:
        return BUILTIN[key]()
    raise InputError(f"no quiver file or built-in named {spec!r} (built-ins: {', '.join(sorted(BUILTIN))})")


def parse_primes(text: str) -> list[int]:
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad prime list {text!r}") from exc
    if not ps or any(not is_prime(p) for p in ps) or len(set(ps)) != len(ps):
        raise InputError(f"primes must be distinct primes, got {text!r}")
    return ps


def parse_dims(text: str, q: Quiver | None = None) -> tuple[int, ...]:
    try:
        d = tuple(int(x) for x in text.strip("()[] ").split(",") if x.strip())
    except ValueError as exc:
        raise InputError(f"bad dimension vector {text!r}") from exc
    if any(x < 0 for x in d) or (q is not None and len(d) != q.n):
        raise InputError(f"bad dimension vector {text!r}")
    return d


def parse_matrix(text: str) -> np.ndarray:
    return np.asarray(_literal(text, "matrix"), dtype=np.int64)


# ---------------------------------------------------------------- output


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return x.tolist()
    return str(x)


def report_dict(r: Report) -> dict:
    return {"name": r.name, "args": jsonable(r.args), "lhs": jsonable(r.lhs), "rhs": jsonable(r.rhs),
            "ok": r.ok, "terms": jsonable(r.terms), "extra": jsonable(r.extra)}


class Out:
    def __init__(self, command: str, config: dict, as_json: bool, verbose: bool):
        self.doc = {"command": command, "config": jsonable(config), "results": [], "notes": {}}
        self.as_json, self.verbose = as_json, verbose
        self.ok = True

    def say(self, text: str) -> None:
        if not self.as_json:
            click.echo(text)

    def report(self, r: Report, show: bool = False) -> None:
        self.doc["results"].append(report_dict(r))
        self.ok &= r.ok
        if show or self.verbose or not r.ok:
            self.say(r.line())

    def sweep(self, s: Sweep) -> None:
        for r in s.reports:
            self.report(r)
        self.doc["notes"][s.name] = jsonable(s.notes)
        self.say(s.summary() + "".join(f"; {k}={_short(v)}" for k, v in s.notes.items()))

    def note(self, key: str, value) -> None:
        self.doc["notes"][key] = jsonable(value)

    def finish(self, code: int | None = None) -> int:
        code = (OK if self.ok else VIOLATED) if code is None else code
        self.doc["exit_code"] = code
        self.doc["ok"] = code == OK
        if self.as_json:
            click.echo(json.dumps(self.doc, sort_keys=True, indent=2))
        return code


def _short(v) -> str:
    return str(len(v)) if isinstance(v, list) else str(v)


def _out(ctx: click.Context, command: str, **config) -> Out:
    return Out(command, config, ctx.obj["json"], ctx.obj["verbose"])


# ---------------------------------------------------------------- commands


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Emit a structured JSON report.")
@click.option("-v", "--verbose", is_flag=True, help="Print every check, not only failures.")
@click.pass_context
def cli(ctx: click.Context, as_json: bool, verbose: bool) -> None:
    """Hall algebras, Green's formula and cluster characters over small quivers."""
    ctx.ensure_object(dict)
    ctx.obj.update(json=as_json, verbose=verbose)


quiver_opt = click.option("--quiver", "quiver_spec", required=True, help="Quiver file or built-in name.")
primes_opt = click.option("--primes", default="2,3", show_default=True, help="Comma-separated primes.")


@cli.command("quiver-check")
@quiver_opt
@click.pass_context
def quiver_check(ctx, quiver_spec):
    """Validate a quiver and print its basic invariants."""
    q = load_quiver(quiver_spec)
    out = _out(ctx, "quiver-check", quiver=quiver_spec)
    info = {
        "vertices": q.n,
        "arrows": [[s + 1, t + 1] for s, t in q.arrows],
        "relations": len(q.relations),
        "acyclic": q.is_acyclic(),
        "hereditary": q.is_hereditary(),
        "exchange_matrix": q.b_matrix().tolist(),
    }
    if q.is_hereditary():
        info["euler_matrix"] = euler_matrix(q).tolist()
        info["tits_form_positive_definite"] = tits_positive_definite(q)
    for k, v in info.items():
        out.say(f"{k}: {v}")
        out.note(k, v)
    return out.finish()


@cli.command("iso-classes")
@quiver_opt
@click.option("--prime", type=int, default=2, show_default=True)
@click.option("--dims", "dims_text", required=True, help="Dimension vector, e.g. 1,1.")
@click.option("--nilpotent", is_flag=True, help="Keep only nilpotent points.")
@click.pass_context
def iso_classes(ctx, quiver_spec, prime, dims_text, nilpotent):
    """Brute-force isomorphism classes of one grade, matched against catalogue labels."""
    q = load_quiver(quiver_spec)
    parse_primes(str(prime))
    d = parse_dims(dims_text, q)
    out = _out(ctx, "iso-classes", quiver=quiver_spec, prime=prime, dims=d, nilpotent=nilpotent)
    table = R.iso_classes(q, prime, d, nilpotent_only=nilpotent)
    u = Universe.for_quiver(q, prime, d, complete=False)
    rows = []
    for rep, aut in zip(table.reps, table.aut_orders):
        try:
            label = u.label_of(rep)
        except KeyError:
            label = "?"
        rows.append({"label": label, "aut": aut})
    rows.sort(key=lambda r: r["label"])
    for r in rows:
        out.say(f"{r['label']}  |Aut| = {r['aut']}")
    out.say(f"{len(rows)} classes")
    out.note("classes", rows)
    return out.finish()


@cli.command("hall")
@quiver_opt
@click.option("--prime", type=int, default=2, show_default=True)
@click.option("--twisted", is_flag=True)
@click.option("--coproduct", is_flag=True, help="Coproduct of the single given class.")
@click.argument("labels", nargs=-1, required=True)
@click.pass_context
def hall(ctx, quiver_spec, prime, twisted, coproduct, labels):
    """Hall product of LABELS in order (or the coproduct of one label)."""
    q = load_quiver(quiver_spec)
    parse_primes(str(prime))
    total = sum(module(x, q, prime).total for x in labels)
    alg = universe(q, prime, (max(total, 1),) * q.n)
    out = _out(ctx, "hall", quiver=quiver_spec, prime=prime, twisted=twisted, coproduct=coproduct, labels=list(labels))
    if coproduct:
        if len(labels) != 1:
            raise InputError("--coproduct takes exactly one label")
        value = alg.coproduct(labels[0], twisted)
        if twisted:
            out.note("twist_exponent", alg.TWIST_EXPONENT)
    else:
        value = alg.mul(*labels, twisted=twisted)
    out.say(str(value))
    out.note("value", {("|".join(k) if isinstance(k, tuple) else k): str(c) for k, c in sorted(value.coeffs.items(), key=repr)})
    return out.finish()


@cli.command("green")
@quiver_opt
@primes_opt
@click.option("--max-total-dim", type=int, default=3, show_default=True)
@click.option("--variant", type=click.Choice(GREEN_VARIANTS), default="original", show_default=True)
@click.pass_context
def green(ctx, quiver_spec, primes, max_total_dim, variant):
    """Sweep Green's formula over every quadruple up to a total dimension."""
    q = load_quiver(quiver_spec)
    ps = parse_primes(primes)
    if max_total_dim < 0:
        raise InputError("--max-total-dim must be non-negative")
    out = _out(ctx, "green", quiver=quiver_spec, primes=ps, max_total_dim=max_total_dim, variant=variant)
    if variant == "degenerated":
        out.sweep(green_sweep(q, 2, max_total_dim, variant))
        out.sweep(split_extension_sweep(q, max_total_dim))
        return out.finish()
    if variant != "nonhereditary" and not q.is_hereditary():
        raise InputError(f"variant {variant} needs a quiver without relations")
    for p in ps:
        out.sweep(green_sweep(q, p, max_total_dim, variant))
        if variant == "rewritten":
            out.sweep(riedtmann_peng_sweep(q, p, max_total_dim))
    return out.finish()


@cli.command("coproduct-check")
@quiver_opt
@primes_opt
@click.option("--grade", default="2,2", show_default=True, help="Upper bound on dim x + dim y.")
@click.pass_context
def coproduct_check(ctx, quiver_spec, primes, grade):
    """Coproduct compatibility on all pairs below a grade."""
    q = load_quiver(quiver_spec)
    ps, g = parse_primes(primes), parse_dims(grade, q)
    out = _out(ctx, "coproduct-check", quiver=quiver_spec, primes=ps, grade=g)
    for p in ps:
        out.sweep(coproduct_sweep(q, p, g))
    return out.finish()


@cli.command("pairing-check")
@quiver_opt
@primes_opt
@click.option("--grade", default="2,2", show_default=True)
@click.option("--twisted", is_flag=True)
@click.pass_context
def pairing_check(ctx, quiver_spec, primes, grade, twisted):
    """Hopf pairing identity (a, bc) = (delta a, b (x) c) below a grade."""
    q = load_quiver(quiver_spec)
    ps, g = parse_primes(primes), parse_dims(grade, q)
    out = _out(ctx, "pairing-check", quiver=quiver_spec, primes=ps, grade=g, twisted=twisted)
    for p in ps:
        out.sweep(pairing_sweep(q, p, g, twisted))
    return out.finish()


@cli.command("serre-check")
@quiver_opt
@primes_opt
@click.pass_context
def serre_check_cmd(ctx, quiver_spec, primes):
    """Quantum Serre relation in the twisted Hall algebra."""
    q = load_quiver(quiver_spec)
    ps = parse_primes(primes)
    out = _out(ctx, "serre-check", quiver=quiver_spec, primes=ps)
    for p in ps:
        out.sweep(serre_sweep(q, p))
    return out.finish()


@cli.command("cc")
@quiver_opt
@click.option("--object", "obj", default=None, help="Descriptor such as S2, P1+S3, P2[1].")
@click.option("--module-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Module file with integer entries, reduced at each sample prime.")
@click.pass_context
def cc_cmd(ctx, quiver_spec, obj, module_file):
    """Print the cluster character of an object."""
    q = load_quiver(quiver_spec)
    if (obj is None) == (module_file is None):
        raise InputError("give exactly one of --object and --module-file")
    out = _out(ctx, "cc", quiver=quiver_spec, object=obj, module_file=module_file)
    if module_file:
        text = Path(module_file).read_text()
        parse_module(text, q, 2)
        value = cc(q, lambda p: Decorated(parse_module(text, q, p)))
    else:
        value = cc(q, obj)
    out.say(str(value))
    out.note("value", str(value))
    return out.finish()


@cli.command("ck")
@quiver_opt
@click.option("--m", "m", required=True)
@click.option("--n", "n", required=True)
@click.pass_context
def ck_cmd(ctx, quiver_spec, m, n):
    """Multiplication formula X_M X_N with its two strata sums (Ext^1(N,M) = 0 required)."""
    q = load_quiver(quiver_spec)
    out = _out(ctx, "ck", quiver=quiver_spec, m=m, n=n)
    r = ck_check(q, m, n)
    out.report(r, show=True)
    for key in ("module_strata", "hom_strata"):
        if key in r.extra:
            out.say(f"{key}: {r.extra[key]}")
    return out.finish()


@cli.command("cluster-mult")
@quiver_opt
@click.option("--xi", required=True)
@click.option("--eta", required=True)
@click.pass_context
def cluster_mult_cmd(ctx, quiver_spec, xi, eta):
    """chi(PExt) X_xi X_eta against the extension and Hom strata sums."""
    q = load_quiver(quiver_spec)
    out = _out(ctx, "cluster-mult", quiver=quiver_spec, xi=xi, eta=eta)
    r = cluster_mult_check(q, xi, eta)
    out.report(r, show=True)
    for term in r.terms:
        out.say(f"  term: {term}")
    return out.finish()


@cli.command("assoc-check")
@quiver_opt
@primes_opt
@click.option("--max-total-dim", type=int, default=3, show_default=True)
@click.option("--higher", is_flag=True, help="Check the chi-level higher associativity identities instead.")
@click.option("--projective", is_flag=True, help="With --higher: projectivised Hom strata.")
@click.pass_context
def assoc_check(ctx, quiver_spec, primes, max_total_dim, higher, projective):
    """Hall associativity, or the higher associativity identities with --higher."""
    q = load_quiver(quiver_spec)
    ps = parse_primes(primes)
    out = _out(ctx, "assoc-check", quiver=quiver_spec, primes=ps, max_total_dim=max_total_dim,
               higher=higher, projective=projective)
    if higher:
        reports = higher_assoc_sweep(q, max_total_dim, projective)
        out.sweep(Sweep("higher-assoc" + ("-proj" if projective else ""), reports))
    else:
        for p in ps:
            out.sweep(associativity_sweep(q, p, max_total_dim))
    return out.finish()


@cli.group("cluster")
def cluster_grp():
    """Seeds and mutation for a skew-symmetric exchange matrix."""


b_opt = click.option("--b", "b_text", required=True, help='Exchange matrix, e.g. "[[0,1],[-1,0]]".')


@cluster_grp.command("mutate")
@b_opt
@click.option("--seq", required=True, help="Comma-separated 1-based directions.")
@click.pass_context
def cluster_mutate(ctx, b_text, seq):
    """Mutate the initial seed along a sequence and report whether it recurs."""
    b = parse_matrix(b_text)
    try:
        dirs = [int(x) for x in seq.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad sequence {seq!r}") from exc
    out = _out(ctx, "cluster mutate", b=b.tolist(), seq=dirs)
    seeds = mutate_sequence(Seed.initial(b), dirs)
    for k, s in enumerate(seeds):
        out.say(f"{k}: " + ", ".join(str(v) for v in s.vars))
    recovered = seeds[-1].same_as(seeds[0], up_to_relabel=False)
    out.say(f"initial seed recovered: {'yes' if recovered else 'no'}")
    out.note("clusters", [[str(v) for v in s.vars] for s in seeds])
    out.note("recovered", recovered)
    return out.finish()


@cluster_grp.command("enumerate")
@b_opt
@click.option("--ceiling", type=int, default=10_000, show_default=True)
@click.pass_context
def cluster_enumerate(ctx, b_text, ceiling):
    """Closed breadth-first enumeration of clusters; each variable is Laurent-checked."""
    b = parse_matrix(b_text)
    if ceiling < 1:
        raise InputError("--ceiling must be positive")
    out = _out(ctx, "cluster enumerate", b=b.tolist(), ceiling=ceiling)
    res = enumerate_clusters(Seed.initial(b), ceiling)
    bad = [str(v) for v in res.variables if not laurent_check(v)[0]]
    for v in res.variables:
        out.say(str(v))
    out.say(f"{len(res.variables)} cluster variables, {res.seeds} seeds, closed={res.closed}")
    out.note("variables", [str(v) for v in res.variables])
    out.note("seeds", res.seeds)
    out.note("not_laurent", bad)
    return out.finish(VIOLATED if bad else OK)


@cluster_grp.command("finite-type")
@b_opt
@click.option("--search-bound", type=int, default=200, show_default=True)
@click.pass_context
def cluster_finite_type(ctx, b_text, search_bound):
    """Search the mutation class for a positive definite Cartan counterpart."""
    b = parse_matrix(b_text)
    out = _out(ctx, "cluster finite-type", b=b.tolist(), search_bound=search_bound)
    v = finite_type_test(b, search_bound)
    out.say(f"verdict: {v.verdict} after {v.explored} matrices")
    if v.witness is not None:
        out.say(f"witness: {v.witness.tolist()}")
    if v.semidefinite_witness is not None:
        out.say(f"null vector of the Cartan counterpart: {[str(x) for x in v.semidefinite_witness]}")
    out.note("verdict", v.verdict)
    out.note("explored", v.explored)
    out.note("witness", None if v.witness is None else v.witness.tolist())
    out.note("null_vector", v.semidefinite_witness)
    out.note("leading_minors", v.minors)
    return out.finish()


@cli.group("twocy")
def twocy_grp():
    """Preprojective algebras: evaluation-form classes and the extension identity."""


@twocy_grp.command("classes")
@quiver_opt
@click.option("--dims", "dims_text", required=True)
@click.pass_context
def twocy_classes(ctx, quiver_spec, dims_text):
    """Bucket the nilpotent classes of the preprojective algebra of QUIVER by evaluation vector."""
    q = preprojective(load_quiver(quiver_spec))
    e = parse_dims(dims_text, q)
    out = _out(ctx, "twocy classes", quiver=quiver_spec, dims=e, mesh=MESH_SIGN)
    t = class_table(q, e)
    out.say(f"types: {list(t.types)}")
    for vec, labels in t.buckets.items():
        out.say(f"{list(vec)}: {', '.join(labels)}")
    out.say(f"{len(t.buckets)} classes over {t.iso_classes} iso classes")
    out.note("types", t.types)
    out.note("classes", [{"delta": list(v), "members": ls} for v, ls in t.buckets.items()])
    return out.finish()


@twocy_grp.command("thm82")
@quiver_opt
@click.option("--m", "m", default=None)
@click.option("--n", "n", default=None)
@click.option("--max-total-dim", type=int, default=None, help="Sweep all pairs instead of one.")
@click.pass_context
def twocy_thm82(ctx, quiver_spec, m, n, max_total_dim):
    """chi(PExt(M,N)) delta_{M+N} against the sum over classes of both Ext directions."""
    q = preprojective(load_quiver(quiver_spec))
    out = _out(ctx, "twocy thm82", quiver=quiver_spec, m=m, n=n, max_total_dim=max_total_dim, mesh=MESH_SIGN)
    if max_total_dim is not None:
        out.sweep(Sweep("thm82", thm82_sweep(q, max_total_dim)))
    elif m and n:
        out.report(thm82_check(q, m, n), show=True)
    else:
        raise InputError("give --m and --n, or --max-total-dim")
    return out.finish()


# ---------------------------------------------------------------- entry point


def main(argv: Sequence[str] | None = None) -> int:
    try:
        code = cli.main(args=list(argv) if argv is not None else None, prog_name="hallcluster", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return INPUT_ERROR
    except click.Abort:
        return INPUT_ERROR
    except (GuardExceeded, CeilingExceeded) as exc:
        click.echo(f"guard exceeded: {exc}", err=True)
        return GUARD
    except NotPolynomialCount as exc:
        click.echo(f"interpolation check failed: {exc}", err=True)
        return VIOLATED
    except (InputError, DescriptorError, KeyError, ValueError, FileNotFoundError) as exc:
        click.echo(f"input error: {exc}", err=True)
        return INPUT_ERROR
    return code if isinstance(code, int) else OK


def run(argv: Sequence[str]) -> int:
    return main(argv)


def entry() -> None:
    sys.exit(main())


__all__ = ["BUILTIN", "cli", "entry", "jsonable", "load_quiver", "main", "parse_dims", "parse_matrix",
           "parse_module", "parse_primes", "parse_quiver", "report_dict", "run"]
