"""Command-line front end and JSON workspace loader."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .axioms import SampleConfig, check_lemma_suite, check_rank_axioms, check_sylvester_axioms
from .coeff import INF, CoeffPoly, PeriodError, parse_period
from .fdalg import (AlgebraError, MatAlgebraHom, from_quiver_json,
                    from_structure_constants, local_matrix_rank, monoid_algebra,
                    radical_and_residue)
from .homalg import RIGHT, FDModule, ModuleError, homological_epi_check, module_from_hom, tor_dims
from .linal import FieldError, FieldSpec, fmt
from .perf import (ChainMap, ComplexError, FreeComplex, IdempotentObject, MatrixOverA,
                   chain_map_violations, left_multiplication_idempotent, matrix_map,
                   validate)
from .rank import (RankError, RankFunction, SylvesterRank, derived_object_rank,
                   full_square_submatrix, fullness_and_kernel, idempotent_rank,
                   localizing_diagnostic, sylvester_module_rank, sylvester_morphism_rank)

log = logging.getLogger(__name__)

BUNDLED = {"smallexample": "smallexample.json", "fiedorowicz": "fiedorowicz.json",
           "dualnumbers": "dualnumbers.json"}

SINGULAR = {"algebras": "algebra", "homs": "hom", "modules": "module", "complexes": "complex",
            "idempotents": "idempotent object", "maps": "map", "matrices": "matrix"}

# keys that only appear in --json output; the human form prints "text" instead
JSON_ONLY = {"text", "reports"}

INPUT_ERRORS = (AlgebraError, ComplexError, ModuleError, RankError, PeriodError, FieldError,
                KeyError, ValueError)


class WorkspaceError(ValueError):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass
class Workspace:
    algebras: dict = field(default_factory=dict)
    homs: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    complexes: dict = field(default_factory=dict)
    idempotents: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    matrices: dict = field(default_factory=dict)
    period: object = INF
    depth: int = 6
    source: str = ""

    def get(self, kind: str, name: str):
        table = getattr(self, kind)
        if name not in table:
            known = ", ".join(sorted(table)) or "none"
            raise WorkspaceError([f"unknown {SINGULAR[kind]} {name!r} (known: {known})"])
        return table[name]


# ---------------------------------------------------------------- loading

def _bundled_text(name: str) -> str:
    return resources.files("perfrank").joinpath("data").joinpath(BUNDLED[name]).read_text("utf-8")


def read_workspace_text(path: str | None) -> tuple[str, str]:
    if path is None:
        return _bundled_text("smallexample"), "smallexample"
    p = Path(path)
    if not p.exists() and path in BUNDLED:
        return _bundled_text(path), path
    try:
        return p.read_text("utf-8"), str(p)
    except OSError as exc:
        raise WorkspaceError([f"cannot read workspace {path}: {exc.strerror or exc}"]) from None


def load(path: str | None = None) -> Workspace:
    text, src = read_workspace_text(path)
    return loads(text, src)


def _matrix_rows(data):
    return data["entries"] if isinstance(data, dict) else data


def loads(text: str, source: str = "") -> Workspace:
    """Parse and validate a workspace; every failing invariant is reported."""
    if not text.strip():
        raise WorkspaceError(["schema: workspace file is empty"])
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkspaceError([f"schema: malformed JSON ({exc})"]) from None
    if not isinstance(data, dict):
        raise WorkspaceError(["schema: workspace must be a JSON object"])
    known = {"algebras", "homs", "modules", "complexes", "maps", "matrices", "period", "depth",
             "description"}
    errors = [f"schema: unknown top-level key {k!r}" for k in sorted(set(data) - known)]
    if "algebras" not in data:
        errors.append("schema: workspace needs an 'algebras' section")
    ws = Workspace(source=source)
    try:
        ws.period = parse_period(data.get("period", INF))
        ws.depth = int(data.get("depth", 6))
    except (PeriodError, ValueError, TypeError) as exc:
        errors.append(f"schema: {exc}")

    def section(key):
        val = data.get(key, {})
        if not isinstance(val, dict):
            errors.append(f"schema: '{key}' must be an object")
            return {}
        return val

    def alg_of(kind, name, entry):
        ref = entry.get("algebra")
        if ref not in ws.algebras:
            raise WorkspaceError([f"{kind} {name}: unresolved algebra reference {ref!r}"])
        return ws.algebras[ref]

    for name, entry in section("algebras").items():
        try:
            if "quiver" in entry:
                A = from_quiver_json(entry["quiver"], name=name)
            elif "monoid" in entry:
                mon = entry["monoid"]
                A = monoid_algebra(mon["table"], mon.get("labels"),
                                   FieldSpec.from_json(mon.get("field")), name=name)
            else:
                A = from_structure_constants(entry.get("structure", entry), name=name)
            ws.algebras[name] = A
        except (*INPUT_ERRORS, TypeError) as exc:
            errors.append(f"algebra {name}: {exc}")

    for name, entry in section("homs").items():
        try:
            A = alg_of("hom", name, entry)
            n = int(entry["n"])
            images = {lab: _matrix_rows(M) for lab, M in entry.get("images", {}).items()}
            unknown = set(images) - set(A.labels)
            if unknown:
                raise AlgebraError(f"images for unknown basis elements {sorted(unknown)}")
            ws.homs[name] = MatAlgebraHom.from_labels(A, n, images, name=name)
        except WorkspaceError as exc:
            errors.extend(exc.errors)
        except (*INPUT_ERRORS, TypeError) as exc:
            errors.append(f"hom {name}: {exc}")

    for name, entry in section("modules").items():
        try:
            if "hom" in entry:
                if entry["hom"] not in ws.homs:
                    raise WorkspaceError([f"module {name}: unresolved hom reference {entry['hom']!r}"])
                M = module_from_hom(ws.homs[entry["hom"]], entry.get("side", RIGHT))
                M.name = name
            else:
                M = FDModule.from_json(alg_of("module", name, entry), entry, name=name)
            ws.modules[name] = M
        except WorkspaceError as exc:
            errors.extend(exc.errors)
        except (*INPUT_ERRORS, TypeError) as exc:
            errors.append(f"module {name}: {exc}")

    for name, entry in section("complexes").items():
        try:
            A = alg_of("complex", name, entry)
            X = FreeComplex.from_json(A, entry, name=name)
            problems = validate(X)
            if problems:
                raise ComplexError("; ".join(problems))
            ws.complexes[name] = X
            if "idempotent" in entry:
                e = left_multiplication_idempotent(X, entry["idempotent"])
                ws.idempotents[name] = IdempotentObject(X, e, name=name)
        except WorkspaceError as exc:
            errors.extend(exc.errors)
        except (*INPUT_ERRORS, TypeError) as exc:
            errors.append(f"complex {name}: {exc}")

    for name, entry in section("matrices").items():
        try:
            A = alg_of("matrix", name, entry)
            rows = entry["entries"]
            ws.matrices[name] = MatrixOverA.from_entries(A, rows, cols=entry.get("cols"))
        except WorkspaceError as exc:
            errors.extend(exc.errors)
        except (*INPUT_ERRORS, TypeError) as exc:
            errors.append(f"matrix {name}: {exc}")

    for name, entry in section("maps").items():
        try:
            src, tgt = entry.get("source"), entry.get("target")
            missing = [r for r in (src, tgt) if r not in ws.complexes]
            if missing:
                raise WorkspaceError([f"map {name}: unresolved complex reference {r!r}" for r in missing])
            X, Y = ws.complexes[src], ws.complexes[tgt]
            comps = {int(n): MatrixOverA.from_json(X.algebra, m)
                     for n, m in entry.get("components", {}).items()}
            f = ChainMap(X, Y, comps, name=name)
            problems = chain_map_violations(f)
            if problems:
                raise ComplexError("; ".join(problems))
            ws.maps[name] = f
        except WorkspaceError as exc:
            errors.extend(exc.errors)
        except (*INPUT_ERRORS, TypeError) as exc:
            errors.append(f"map {name}: {exc}")

    if errors:
        raise WorkspaceError(errors)
    return ws


# ---------------------------------------------------------------- output

def to_plain(obj):
    if isinstance(obj, CoeffPoly):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj


def _human(obj) -> str:
    if isinstance(obj, (CoeffPoly, Fraction)):
        return str(obj)
    if isinstance(obj, bool):
        return "yes" if obj else "no"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_human(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return ", ".join(f"{k}={_human(v)}" for k, v in obj.items())
    return str(obj)


def emit(report: dict, as_json: bool, out=None):
    out = out or sys.stdout
    if as_json:
        body = {k: v for k, v in report.items() if k != "text"}
        out.write(json.dumps(to_plain(body), sort_keys=True, indent=2) + "\n")
        return
    for k, v in report.items():
        if k in JSON_ONLY:
            continue
        if isinstance(v, dict):
            out.write(f"{k}:\n")
            for k2, v2 in v.items():
                out.write(f"  {k2}: {_human(v2)}\n")
        else:
            out.write(f"{k}: {_human(v)}\n")
    if "text" in report:
        out.write(report["text"] + "\n")


# ---------------------------------------------------------------- commands

def _sigma(ws: Workspace, name: str) -> SylvesterRank:
    return SylvesterRank(ws.get("homs", name), name=name)


def cmd_rank(ws, args):
    sigma = _sigma(ws, args.hom)
    d = args.period
    what = args.what
    if what == "object":
        if args.complex in ws.idempotents:
            P = ws.idempotents[args.complex]
            r = idempotent_rank(sigma, P, d)
            evidence = ["object carries an idempotent; rank is the rank of that idempotent"]
        else:
            r = derived_object_rank(sigma, ws.get("complexes", args.complex)).reduce_period(d)
            evidence = ["sum over degrees of r_n - rho(d_n) - rho(d_{n+1})"]
        return {"rank": r, "classification": {"in_kernel": r.is_zero()}, "evidence": evidence}, 0
    if what == "idempotent":
        P = ws.get("idempotents", args.complex)
        r = idempotent_rank(sigma, P, d)
        return {"rank": r, "classification": {"in_kernel": r.is_zero()},
                "evidence": ["rank of the idempotent endomorphism"]}, 0
    if what == "morphism":
        if args.matrix:
            F = ws.get("matrices", args.matrix)
            f = matrix_map(F, 0)
            syl = sylvester_morphism_rank(sigma, F)
            r = RankFunction(sigma, d).mor(f)
            return {"rank": r, "sylvester_rank": syl, "evidence": ["degree-0 chain map of the matrix"]}, 0
        if not args.map:
            raise WorkspaceError(["rank morphism needs --map or --matrix"])
        r = RankFunction(sigma, d).mor(ws.get("maps", args.map))
        return {"rank": r, "evidence": ["(rho(Y) - rho(cone f) + q rho(X)) / (1 + q)"]}, 0
    if what == "module":
        M = ws.get("modules", args.module)
        return {"rank": sylvester_module_rank(sigma, M),
                "evidence": ["generators minus rank of the presentation matrix"]}, 0
    raise WorkspaceError([f"unknown rank target {what}"])


def cmd_classify(ws, args):
    sigma = _sigma(ws, args.hom)
    if args.map:
        target = ws.get("maps", args.map)
    elif args.complex in ws.idempotents:
        target = ws.idempotents[args.complex]
    else:
        target = ws.get("complexes", args.complex)
    res = fullness_and_kernel(sigma, target, args.period)
    return {"rank": res.pop("rank"), "classification": res, "evidence": []}, 0


def cmd_axioms(ws, args):
    sigma = _sigma(ws, args.hom)
    cfg = SampleConfig(seed=args.seed, samples=args.samples)
    reports = []
    suites = ["rank", "sylvester", "lemmas"] if args.suite == "all" else [args.suite]
    for s in suites:
        if s == "sylvester":
            reports.append(check_sylvester_axioms(sigma, cfg))
        elif s == "rank":
            reports.append(check_rank_axioms(RankFunction(sigma, args.period), cfg))
        else:
            reports.append(check_lemma_suite(RankFunction(sigma, args.period), cfg))
    ok = all(r.passed for r in reports)
    return {"passed": ok, "reports": [r.to_json() for r in reports],
            "text": "\n".join(r.summary() for r in reports)}, (0 if ok else 1)


def cmd_tor(ws, args):
    M = ws.get("modules", args.module)
    N = ws.get("modules", args.left)
    dims = tor_dims(M, N, args.depth)
    out = {"tor_dims": dims}
    if args.expect:
        want = [int(x) for x in args.expect.split(",")]
        out["expected"] = want
        out["matches"] = dims == want
        return out, (0 if dims == want else 1)
    return out, 0


def cmd_epicheck(ws, args):
    rep = homological_epi_check(ws.get("homs", args.hom), args.depth)
    return rep.to_json(), (0 if rep.passes else 1)


def cmd_localizing(ws, args):
    rep = localizing_diagnostic(_sigma(ws, args.hom), args.depth)
    return rep.to_json(), (0 if rep.consistent else 1)


def cmd_submatrix(ws, args):
    sigma = _sigma(ws, args.hom)
    F = ws.get("matrices", args.matrix)
    w = full_square_submatrix(sigma, F)
    N = w.matrix.to_json() if isinstance(w.matrix, MatrixOverA) else [[fmt(x) for x in r] for r in w.matrix]
    return {"rank": w.rank, "over": w.over, "rows": list(w.rows), "cols": list(w.cols),
            "size": w.size, "submatrix": N}, 0


# ---------------------------------------------------------------- bundled examples

def _example_two_cycle_matrix(depth, period):
    ws = loads(_bundled_text("smallexample"), "smallexample")
    sigma = _sigma(ws, "loc-m2")
    epi = homological_epi_check(ws.homs["loc-m2"], depth)
    loc = localizing_diagnostic(sigma, depth)
    tau = idempotent_rank(sigma, ws.idempotents["twoterm-alpha2"], period)
    e1 = idempotent_rank(sigma, ws.idempotents["e1A"], period)
    ok = epi.passes and loc.consistent and tau.is_zero() and e1 == Fraction(1, 2)
    return {"epicheck": epi.to_json(), "tau_generator_rank": tau, "e1A_rank": e1,
            "verdict": loc.conclusion, "reproduced": ok}, ok


def _example_two_cycle_augmentation(depth, period):
    ws = loads(_bundled_text("smallexample"), "smallexample")
    sigma = _sigma(ws, "aug")
    tor = tor_dims(ws.modules["S1"], ws.modules["S1-left"], depth)
    loc = localizing_diagnostic(sigma, depth)
    want = [1 - i % 2 for i in range(depth + 1)]
    ok = tor == want and not loc.consistent and loc.epi.first_obstruction == 2
    return {"tor_S1_S1": tor, "expected": want, "verdict": loc.conclusion, "reproduced": ok}, ok


def _example_five_element_monoid(depth, period):
    ws = loads(_bundled_text("fiedorowicz"), "fiedorowicz")
    tor = tor_dims(ws.modules["k"], ws.modules["k-left"], depth)
    # the homology of a 2-sphere
    want = ([1, 0, 1] + [0] * depth)[:depth + 1]
    ok = tor == want
    loc = localizing_diagnostic(_sigma(ws, "aug"), depth)
    return {"tor_k_k": tor, "expected": want, "augmentation": loc.conclusion,
            "reproduced": ok}, ok


def _example_dualnumbers(depth, period):
    ws = loads(_bundled_text("dualnumbers"), "dualnumbers")
    D = ws.algebras["D"]
    info = radical_and_residue(D)
    sigma = _sigma(ws, "residue")
    rows = {}
    ok = info.is_local
    for name, F in sorted(ws.matrices.items()):
        a, b = local_matrix_rank(D, F), sylvester_morphism_rank(sigma, F)
        rows[name] = {"local_rank": a, "sylvester_rank": b}
        ok = ok and a == b
    tor = tor_dims(ws.modules["k"], ws.modules["k-left"], depth)
    ok = ok and tor == [1] * (depth + 1)
    return {"radical_dim": len(info.radical), "local": info.is_local, "matrices": rows,
            "tor_k_k": tor, "reproduced": ok}, ok


EXAMPLES = {"smallexample-m2": _example_two_cycle_matrix, "smallexample-aug": _example_two_cycle_augmentation,
            "fiedorowicz": _example_five_element_monoid, "dualnumbers": _example_dualnumbers}


def cmd_example(ws, args):
    report, ok = EXAMPLES[args.name](args.depth, args.period)
    return report, (0 if ok else 1)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--workspace", help="workspace JSON file or bundled name")
    common.add_argument("--period", help="period d: a positive integer or 'inf'")
    common.add_argument("--depth", type=int, help="Tor / resolution depth")
    common.add_argument("--samples", type=int, help="number of random samples")
    common.add_argument("--seed", type=int, help="random seed")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    p = argparse.ArgumentParser(prog="perfrank", parents=[common],
                                description="Rank functions on perfect complexes over finite-dimensional algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rank", parents=[common], help="rank of an object, morphism, module or idempotent")
    r.add_argument("what", choices=["object", "morphism", "module", "idempotent"])
    r.add_argument("--hom", required=True)
    r.add_argument("--complex")
    r.add_argument("--map")
    r.add_argument("--matrix")
    r.add_argument("--module")
    r.set_defaults(func=cmd_rank)

    c = sub.add_parser("classify", parents=[common], help="fullness of a map or kernel membership")
    c.add_argument("--hom", required=True)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--complex")
    g.add_argument("--map")
    c.set_defaults(func=cmd_classify)

    a = sub.add_parser("axioms", parents=[common], help="randomized axiom suites")
    a.add_argument("--hom", required=True)
    a.add_argument("--suite", choices=["rank", "sylvester", "lemmas", "all"], default="all")
    a.set_defaults(func=cmd_axioms)

    t = sub.add_parser("tor", parents=[common], help="dimensions of Tor(M, N)")
    t.add_argument("--module", required=True, help="right module M")
    t.add_argument("--left", required=True, help="left module N")
    t.add_argument("--expect", help="comma-separated expected dimensions")
    t.set_defaults(func=cmd_tor)

    e = sub.add_parser("epicheck", parents=[common], help="homological epimorphism evidence")
    e.add_argument("--hom", required=True)
    e.set_defaults(func=cmd_epicheck)

    lz = sub.add_parser("localizing", parents=[common], help="localizing diagnostic")
    lz.add_argument("--hom", required=True)
    lz.set_defaults(func=cmd_localizing)

    s = sub.add_parser("submatrix", parents=[common], help="full square submatrix witness")
    s.add_argument("--hom", required=True)
    s.add_argument("--matrix", required=True)
    s.set_defaults(func=cmd_submatrix)

    x = sub.add_parser("example", parents=[common], help="bundled worked examples")
    x.add_argument("name", choices=sorted(EXAMPLES))
    x.set_defaults(func=cmd_example)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING)
    as_json = getattr(args, "json", False)
    try:
        if args.command == "example":
            ws = None
            args.period = parse_period(getattr(args, "period", INF))
            args.depth = getattr(args, "depth", 6)
        else:
            ws = load(getattr(args, "workspace", None))
            args.period = parse_period(getattr(args, "period", ws.period))
            args.depth = getattr(args, "depth", ws.depth)
        args.samples = getattr(args, "samples", 200)
        args.seed = getattr(args, "seed", 0)
        if args.depth < 1 or args.samples < 0:
            raise WorkspaceError(["depth must be >= 1 and samples >= 0"])
        report, code = args.func(ws, args)
    except WorkspaceError as exc:
        for e in exc.errors:
            err.write(f"error: {e}\n")
        return 2
    except INPUT_ERRORS as exc:
        err.write(f"error in {args.command}: {exc}\n")
        return 2
    report = dict(report)
    report["command"] = args.command
    emit(report, as_json, out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
