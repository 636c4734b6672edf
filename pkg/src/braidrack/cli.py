"""Command-line driver: ``braidrack <area> <action> [options]``.

Every run writes one artifact (JSON, JSON lines or CSV) that starts with a
reproducibility header: tool version, the resolved configuration and the
seed. ``--threads`` and ``--output`` are execution settings and are left out
of the header, so artifacts do not depend on them.

Exit codes: 0 success, 2 bad input or violated precondition, 3 resource
budget exceeded, 1 internal invariant failure. Errors are written to
standard error as one line of JSON.

Racks are read from JSON files or named built-ins (``s3-transpositions``,
``s4-transpositions``, ``s3-mixed``, ``n-rack``, ``t2``, ``trivial:K``,
``cyclic:K``, ``dihedral:K``). Groups are given by name (``S3``, ``A5``,
``C6``, ``D8``, ``V4``) or as a JSON file. Permutations are written in
1-based cycle notation, e.g. ``"(1 2 3)(4 5)"``; several are separated by
semicolons.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from pathlib import Path
from typing import Callable

from . import __version__
from . import braid as B
from . import ffstats as F
from . import groups as G
from . import io as IO
from . import nielsen as N
from . import perm as P
from . import rack as R
from . import semigroup as S
from .errors import InvariantError, PreconditionError, ResourceError

_EXECUTION_KEYS = {"output", "threads", "config", "handler", "area", "action"}


# ---------------------------------------------------------------------------
# input helpers


def _builtin_rack(name: str) -> R.Rack | None:
    key = name.lower()
    if key.endswith(".json"):
        key = key[:-5]
    if key.startswith("s") and key.endswith("-transpositions") and key[1:-15].isdigit():
        x, _ = R.transposition_rack(int(key[1:-15]))
        return x
    if key == "s3-mixed":
        g = G.symmetric(3)
        x, _ = R.conjugation_rack(g, [G.element_index(g, "(1 2)"), G.element_index(g, "(1 2 3)")])
        return x
    if key in ("n-rack", "n"):
        return R.n_rack()
    if key == "t2":
        return R.trivial_rack(2)
    for prefix, make in (("trivial:", R.trivial_rack), ("cyclic:", R.cyclic_rack),
                         ("dihedral:", R.dihedral_quandle)):
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            return make(int(key[len(prefix):]))
    return None


def load_rack(source: str) -> R.Rack:
    path = Path(source)
    if path.is_file():
        return IO.load_rack(path)
    x = _builtin_rack(path.name)
    if x is None:
        raise PreconditionError(f"no rack file or built-in named {source!r}")
    return x


def load_group(source: str) -> G.FiniteGroupTable:
    path = Path(source)
    if path.is_file():
        return IO.load_group(path)
    return G.by_name(source)


def _element(g: G.FiniteGroupTable, text: str) -> int:
    text = text.strip()
    if text.lstrip("-").isdigit():
        v = int(text)
        if not 0 <= v < g.order:
            raise PreconditionError(f"element index {v} out of range")
        return v
    return G.element_index(g, text)


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(","))
    except ValueError:
        raise PreconditionError(f"expected comma-separated integers, got {text!r}") from None


def _range(text: str) -> list[int]:
    """'2-8' or '1,3,5' or '4'."""
    text = text.strip()
    if "-" in text:
        lo, hi = text.split("-", 1)
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise PreconditionError(f"bad range {text!r}") from None
    return list(_ints(text))


def _perms(text: str, degree: int | None) -> list[P.Perm]:
    return P.parse_perm_list(text, degree) if text.strip() else []


# ---------------------------------------------------------------------------
# output


class Artifact:
    """Collects the header and a payload, then renders it deterministically."""

    def __init__(self, args: argparse.Namespace):
        config = {k: v for k, v in sorted(vars(args).items())
                  if k not in _EXECUTION_KEYS and not callable(v)}
        self.header = {"tool": "braidrack", "version": __version__,
                       "command": f"{args.area} {args.action}",
                       "config": config, "seed": args.seed}
        self.fmt = args.format
        self.output = args.output

    def render(self, result=None, rows: list[list] | None = None, columns: list[str] | None = None,
               lines: list[dict] | None = None) -> str:
        if self.fmt == "csv":
            if rows is None:
                raise PreconditionError("this command has no CSV form; use --format json")
            buf = _io.StringIO()
            buf.write("# " + IO.dumps(self.header) + "\n")
            wr = csv.writer(buf, lineterminator="\n")
            wr.writerow(columns)
            wr.writerows(rows)
            return buf.getvalue()
        if self.fmt == "jsonl":
            if lines is None:
                raise PreconditionError("this command has no JSON-lines form")
            return "".join(IO.dumps(obj) + "\n" for obj in [{"header": self.header}] + lines)
        return json.dumps({"header": self.header, "result": result}, sort_keys=True, indent=2) + "\n"

    def write(self, text: str) -> None:
        if self.output == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            Path(self.output).write_text(text)


# ---------------------------------------------------------------------------
# rack


def cmd_rack_validate(args, out: Artifact) -> str:
    data = json.loads(Path(args.file).read_text()) if Path(args.file).is_file() else None
    if data is not None and "r" in data:
        b = IO.load_braided_set(data)
        kind = "braided_set"
    else:
        x = IO.load_rack(data) if data is not None else load_rack(args.file)
        b = x.to_braided_set()
        kind = "rack"
    rep = R.validate_braided_set(b)
    result = {"kind": kind, "size": b.size, **rep.as_dict()}
    return out.render(result, [[kind, b.size] + list(rep.as_dict().values())],
                      ["kind", "size"] + list(rep.as_dict()))


def cmd_rack_components(args, out: Artifact) -> str:
    x = load_rack(args.rack)
    comp = R.components(x)
    result = {"size": x.size, "count": comp.k, "labels": list(comp.labels),
              "component_sizes": list(comp.component_sizes)}
    rows = [[e, comp.labels[e]] for e in range(x.size)]
    return out.render(result, rows, ["element", "component"])


def cmd_rack_inn(args, out: Artifact) -> str:
    x = load_rack(args.rack)
    inn = R.inner_group(x)
    orders = [R.element_inn_order(x, e) for e in range(x.size)]
    result = {"inn_order": str(inn.order), "element_orders": orders,
              "z": list(R.central_word_z(x)), "quandle": x.quandle}
    rows = [[e, m] for e, m in enumerate(orders)]
    return out.render(result, rows, ["element", "inn_order_of_element"])


# ---------------------------------------------------------------------------
# braid


def cmd_braid_orbit(args, out: Artifact) -> str:
    x = load_rack(args.rack)
    o = B.orbit(x, _ints(args.tuple), colored=args.colored, cap=args.cap)
    lines = [{"index": m, "tuple": list(o.tuple_at(m)), "access_perm": list(o.access_perm(m))}
             for m in range(len(o))]
    rows = [[m, " ".join(map(str, o.tuple_at(m))), " ".join(map(str, o.access_perm(m)))]
            for m in range(len(o))]
    result = {"orbit_size": len(o), "members": lines}
    return out.render(result, rows, ["index", "tuple", "access_perm"], lines)


def cmd_braid_monodromy(args, out: Artifact) -> str:
    x = load_rack(args.rack)
    rep = B.classify_monodromy(x, _ints(args.tuple), cap=args.cap)
    summary = IO.orbit_summary(rep)
    result = {**rep.as_dict(), **summary}
    return out.render(result, [list(summary.values())], list(summary))


def cmd_braid_relations_test(args, out: Artifact) -> str:
    x = load_rack(args.rack)
    rows = []
    for n in range(1, args.n + 1):
        rows.append([n, x.size ** n, B.braid_relation_violations(x, n)])
    result = {"size": x.size, "by_n": [{"n": n, "tuples": t, "violations": v} for n, t, v in rows],
              "all_hold": all(r[2] == 0 for r in rows)}
    return out.render(result, rows, ["n", "tuples", "violations"])


# ---------------------------------------------------------------------------
# semigroup


def cmd_semigroup_table(args, out: Artifact) -> str:
    x = load_rack(args.rack)
    ranges = [_range(r) for r in args.range] if args.range else [_range("1-4")] * R.components(x).k
    table = S.stabilization_table(x, ranges)
    if out.fmt == "csv":
        buf = _io.StringIO()
        buf.write("# " + IO.dumps(out.header) + "\n")
        buf.write(table.to_csv())
        return buf.getvalue()
    return out.render(table.as_dict())


def cmd_semigroup_multcheck(args, out: Artifact) -> str:
    x = load_rack(args.rack)
    rep = S.mult_map_check(x, _ints(args.w), _ints(args.n_vec))
    d = rep.as_dict()
    return out.render(d, [[" ".join(map(str, rep.w)), " ".join(map(str, rep.n_vec)),
                           rep.domain_size, rep.codomain_size, rep.injective, rep.surjective]],
                      ["w", "n_vec", "domain_size", "codomain_size", "injective", "surjective"])


# ---------------------------------------------------------------------------
# nielsen


def _label(g, v):
    return g.label(v)


def cmd_nielsen_enumerate(args, out: Artifact) -> str:
    g = load_group(args.group)
    seeds = [_element(g, c) for c in args.cls]
    n_vec = _ints(args.n_vec)
    found = list(N.enumerate_nielsen(g, seeds, n_vec, product_one=not args.any_product,
                                     up_to_conj=args.up_to_conj, budget=args.budget))
    lines = [{"tuple": list(t), "cycles": [_label(g, v) for v in t]} for t in found]
    rows = [[" ".join(map(str, t))] for t in found]
    return out.render({"count": len(found), "tuples": lines}, rows, ["tuple"], lines)


def cmd_nielsen_abundance(args, out: Artifact) -> str:
    g = load_group(args.group)
    x = _element(g, args.x)
    y = _element(g, args.y) if args.y else N.find_abundant(g, x)
    ok = y is not None and g.generates(N.cyclic_conjugates(g, x, y))
    result = {"x": _label(g, x), "y": None if y is None else _label(g, y), "abundant_witness": ok}
    return out.render(result, [[result["x"], result["y"], ok]], ["x", "y", "abundant_witness"])


def cmd_nielsen_certificate(args, out: Artifact) -> str:
    g = load_group(args.group)
    cert = N.abundant_ncycle_certificate(g, _element(g, args.x), _element(g, args.y), args.n,
                                         strict=not args.non_strict)
    d = cert.as_dict()
    d["x_cycles"], d["y_cycles"] = _label(g, cert.x), _label(g, cert.y)
    return out.render(d, [[d["group"], cert.x, cert.y, cert.n, cert.verified]],
                      ["group", "x", "y", "n", "verified"])


def cmd_nielsen_dnormal(args, out: Artifact) -> str:
    g = load_group(args.group)
    d = N.d_normal(g)
    ab = G.abelianization_order(g)
    return out.render({"group": g.name, "order": g.order, "abelianization_order": ab, "d_normal": d},
                      [[g.name, g.order, ab, d]], ["group", "order", "abelianization_order", "d_normal"])


# ---------------------------------------------------------------------------
# ffstats


def cmd_ffstats_squarefree(args, out: Artifact) -> str:
    rows = []
    for f in F.squarefree_polys(args.q, args.n, budget=args.budget):
        t = F.factorization_type(f, args.q)
        mu, lam = F.moebius_and_lambda(f, args.q)
        rows.append([" ".join(map(str, f)), "+".join(map(str, t)), mu, lam])
    result = {"q": args.q, "n": args.n, "count": len(rows),
              "polynomials": [{"coefficients": r[0], "type": r[1], "mu": r[2], "lambda": r[3]}
                              for r in rows]}
    return out.render(result, rows, ["coefficients_ascending", "type", "mu", "lambda"])


def _group_from_args(args) -> tuple[P.PermGroup, P.BlockStructure]:
    if args.symmetric:
        sizes = _ints(args.symmetric)
        return F.product_of_symmetric(sizes), P.BlockStructure.consecutive(sizes)
    if args.alternating:
        return P.alternating_group(args.alternating), P.BlockStructure.consecutive([args.alternating])
    if not args.degree:
        raise PreconditionError("give --symmetric, --alternating, or --gens with --degree")
    h = P.PermGroup(_perms(args.gens or "", args.degree), args.degree)
    sizes = _ints(args.blocks) if args.blocks else (args.degree,)
    return h, P.BlockStructure.consecutive(sizes)


def cmd_ffstats_predict(args, out: Artifact) -> str:
    h, blocks = _group_from_args(args)
    pred = F.chebotarev_predict(h, blocks, budget=args.budget, sample=args.sample,
                                samples=args.samples, seed=args.seed)
    d = pred.as_json()
    d["total"] = str(pred.total())
    rows = [[k, v] for k, v in d["frequencies"].items()]
    return out.render(d, rows, ["type", "frequency"])


def cmd_ffstats_z2(args, out: Artifact) -> str:
    rows = []
    for q in _ints(args.q):
        for n in _ints(args.n):
            rows.append(F.z2_extension_stats(q, n, budget=args.budget, threads=args.threads).as_row())
    cols = ["q", "n", "count", "sum_moebius", "count_irreducible"]
    return out.render([dict(zip(cols, r)) for r in rows], rows, cols)


# ---------------------------------------------------------------------------
# perm


def cmd_perm_classify(args, out: Artifact) -> str:
    h = P.PermGroup(_perms(args.gens, args.degree), args.degree)
    sizes = _ints(args.blocks) if args.blocks else (args.degree,)
    c = P.classify_in_product(h, P.BlockStructure.consecutive(sizes))
    d = c.as_dict()
    return out.render(d, [[str(v) for v in d.values()]], list(d))


def cmd_perm_homogeneous(args, out: Artifact) -> str:
    h = P.PermGroup(_perms(args.gens, args.degree), args.degree)
    if args.k is not None:
        if not 0 <= args.k <= args.degree:
            raise PreconditionError(f"k={args.k} out of range 0..{args.degree}")
        hom = P.k_homogeneous(h, args.k)
        result = {"degree": args.degree, "k": args.k, "homogeneous": hom}
        return out.render(result, [[args.degree, args.k, hom]], ["degree", "k", "homogeneous"])
    v = P.check_homogeneity_dichotomy(h)
    result = {"degree": v.degree, "k": v.k, "homogeneous": v.homogeneous,
              "is_alternating": v.is_alternating, "is_symmetric": v.is_symmetric,
              "consistent": v.consistent}
    return out.render(result, [list(result.values())], list(result))


def cmd_perm_invariable(args, out: Artifact) -> str:
    subs = [_perms(s, args.degree) for s in args.subgroup]
    ok = P.invariably_generates(subs, mode=args.mode, samples=args.samples, seed=args.seed,
                                max_degree=args.max_degree)
    result = {"degree": args.degree, "mode": args.mode, "invariably_generates": ok}
    return out.render(result, [[args.degree, args.mode, ok]], ["degree", "mode", "invariably_generates"])


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("UsageError", message, 2)
        sys.exit(2)


def _common(p: argparse.ArgumentParser, fmt: str = "json", formats=("json", "csv")) -> None:
    p.add_argument("--output", default="-", help="file to write, '-' for standard output")
    p.add_argument("--format", choices=formats, default=None,
                   help=f"artifact format (default {fmt})")
    p.add_argument("--seed", type=int, default=None, help="seed for sampled modes (default 0)")
    p.add_argument("--threads", type=int, default=1, help="worker threads; results do not depend on it")
    p.add_argument("--config", default=None, help="JSON file of option defaults")
    p.set_defaults(_default_format=fmt)


class _Command(_Parser):
    """Subcommand parser whose required options may also come from --config."""

    def add_argument(self, *flags, **kw):
        if kw.pop("required", False):
            kw["default"] = None
            kw["help"] = (kw.get("help", "") + " (required)").strip()
            action = super().add_argument(*flags, **kw)
            self._required_opts.append((action.dest, flags[0]))
            return action
        return super().add_argument(*flags, **kw)


def _cmd(sub, name: str, handler: Callable, help: str, **kw) -> argparse.ArgumentParser:
    p = sub.add_parser(name, help=help, description=help)
    p._required_opts = []
    _common(p, **kw)
    p.set_defaults(handler=handler, _required=p._required_opts)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidrack", description="Braid actions on racks, monodromy images "
                     "and factorization statistics.")
    parser.add_argument("--version", action="version", version=f"braidrack {__version__}")
    areas = parser.add_subparsers(dest="area", required=True, parser_class=_Parser)

    rack = areas.add_parser("rack", help="validate and inspect racks").add_subparsers(
        dest="action", required=True, parser_class=_Command)
    p = _cmd(rack, "validate", cmd_rack_validate, "check braided-set and rack axioms")
    p.add_argument("--file", required=True, help="rack or braided-set JSON (or a built-in name)")
    p = _cmd(rack, "components", cmd_rack_components, "connected components (Inn-orbits)")
    p.add_argument("--rack", required=True)
    p = _cmd(rack, "inn", cmd_rack_inn, "inner group order, element orders and the word z")
    p.add_argument("--rack", required=True)

    braid = areas.add_parser("braid", help="braid-group orbits and monodromy").add_subparsers(
        dest="action", required=True, parser_class=_Command)
    p = _cmd(braid, "orbit", cmd_braid_orbit, "orbit of a tuple with access permutations",
             fmt="jsonl", formats=("jsonl", "json", "csv"))
    p.add_argument("--rack", required=True)
    p.add_argument("--tuple", required=True, help="comma-separated rack elements")
    p.add_argument("--colored", action="store_true", help="restrict to the colored braid group")
    p.add_argument("--cap", type=int, default=B.DEFAULT_CAP)
    p = _cmd(braid, "monodromy", cmd_braid_monodromy, "stabilizer image of a tuple and its classification")
    p.add_argument("--rack", required=True)
    p.add_argument("--tuple", required=True)
    p.add_argument("--cap", type=int, default=B.DEFAULT_CAP)
    p = _cmd(braid, "relations-test", cmd_braid_relations_test, "check both braid relations on all tuples")
    p.add_argument("--rack", required=True)
    p.add_argument("--n", type=int, default=4)

    semi = areas.add_parser("semigroup", help="structure-semigroup experiments").add_subparsers(
        dest="action", required=True, parser_class=_Command)
    p = _cmd(semi, "table", cmd_semigroup_table, "class counts over a box of component vectors", fmt="csv")
    p.add_argument("--rack", required=True)
    p.add_argument("--range", action="append", default=None,
                   help="values for one component, e.g. 2-8; repeat once per component")
    p = _cmd(semi, "multcheck", cmd_semigroup_multcheck, "injectivity and surjectivity of left multiplication")
    p.add_argument("--rack", required=True)
    p.add_argument("--w", required=True, help="comma-separated word")
    p.add_argument("--n-vec", required=True, help="comma-separated component counts")

    niel = areas.add_parser("nielsen", help="Nielsen tuples and abundance").add_subparsers(
        dest="action", required=True, parser_class=_Command)
    p = _cmd(niel, "enumerate", cmd_nielsen_enumerate, "generating tuples from given classes",
             formats=("json", "jsonl", "csv"))
    p.add_argument("--group", required=True)
    p.add_argument("--class", dest="cls", action="append", required=True,
                   help="class representative, repeat per class")
    p.add_argument("--n-vec", required=True)
    p.add_argument("--any-product", action="store_true", help="drop the product-one condition")
    p.add_argument("--up-to-conj", action="store_true")
    p.add_argument("--budget", type=int, default=N.DEFAULT_BUDGET)
    p = _cmd(niel, "abundance", cmd_nielsen_abundance, "find or check an abundance witness y for x")
    p.add_argument("--group", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", default=None)
    p = _cmd(niel, "certificate", cmd_nielsen_certificate, "n-cycle certificate from an abundant class")
    p.add_argument("--group", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--non-strict", action="store_true", help="only require |G| to divide n")
    p = _cmd(niel, "dnormal", cmd_nielsen_dnormal, "minimal size of a normally generating set")
    p.add_argument("--group", required=True)

    ff = areas.add_parser("ffstats", help="polynomial factorization statistics").add_subparsers(
        dest="action", required=True, parser_class=_Command)
    p = _cmd(ff, "squarefree", cmd_ffstats_squarefree, "monic squarefree polynomials with types")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=F.DEFAULT_BUDGET)
    p = _cmd(ff, "predict", cmd_ffstats_predict, "cycle-type frequencies of a permutation group")
    p.add_argument("--symmetric", default=None, help="block sizes for a product of symmetric groups")
    p.add_argument("--alternating", type=int, default=None)
    p.add_argument("--gens", default=None, help="generators in cycle notation, ';'-separated")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--blocks", default=None, help="consecutive block sizes")
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--sample", action="store_true", help="allow sampling above the budget")
    p.add_argument("--samples", type=int, default=10_000)
    p = _cmd(ff, "z2", cmd_ffstats_z2, "statistics of quadratic extensions", fmt="csv")
    p.add_argument("--q", required=True, help="odd prime(s), comma-separated")
    p.add_argument("--n", required=True, help="even degree(s), comma-separated")
    p.add_argument("--budget", type=int, default=F.DEFAULT_BUDGET)

    perm = areas.add_parser("perm", help="permutation-group predicates").add_subparsers(
        dest="action", required=True, parser_class=_Command)
    p = _cmd(perm, "classify", cmd_perm_classify, "position of a group inside a block product")
    p.add_argument("--gens", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--blocks", default=None)
    p = _cmd(perm, "homogeneous", cmd_perm_homogeneous, "k-homogeneity and the A_n/S_n dichotomy")
    p.add_argument("--gens", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p = _cmd(perm, "invariable", cmd_perm_invariable, "invariable generation of S_n")
    p.add_argument("--subgroup", action="append", required=True,
                   help="generators of one subgroup, repeat per subgroup")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-degree", type=int, default=8)
    return parser


def _apply_config(args: argparse.Namespace, argv: list[str]) -> None:
    """Fill options not given on the command line from --config."""
    if args.config:
        try:
            cfg = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise PreconditionError(f"cannot read config {args.config}: {exc}") from None
        given = {a.split("=", 1)[0].lstrip("-").replace("-", "_") for a in argv if a.startswith("--")}
        for key, value in cfg.items():
            key = key.replace("-", "_")
            if key in _EXECUTION_KEYS - {"threads", "output"} or not hasattr(args, key):
                continue
            if key not in given:
                setattr(args, key, value)
    missing = [flag for dest, flag in args._required if getattr(args, dest) is None]
    if missing:
        raise PreconditionError("missing required option(s): " + ", ".join(missing))
    del args._required
    if args.format is None:
        args.format = args._default_format
    if args.seed is None:
        args.seed = 0
    del args._default_format
    for key in ("cap", "budget", "samples", "threads"):
        if getattr(args, key, 1) is not None and getattr(args, key, 1) <= 0:
            raise PreconditionError(f"--{key} must be positive")


def _emit_error(kind: str, message: str, code: int) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message, "exit_code": code}) + "\n")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        out = Artifact(args)
        text = args.handler(args, out)
        out.write(text)
        return 0
    except InvariantError as exc:
        _emit_error("InvariantError", str(exc), 1)
        return 1
    except PreconditionError as exc:
        _emit_error(type(exc).__name__, str(exc), 2)
        return 2
    except ResourceError as exc:
        _emit_error("ResourceError", str(exc), 3)
        return 3
    except (OSError, ValueError) as exc:
        _emit_error(type(exc).__name__, str(exc), 2)
        return 2
    except Exception as exc:  # anything else is a bug
        _emit_error(type(exc).__name__, str(exc), 1)
        return 1


if __name__ == "__main__":
    sys.exit(main())
