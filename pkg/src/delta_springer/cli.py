"""Command-line front end.

Every command prints JSON (``"schema": "1"``) unless ``--latex`` is given.
Exit codes: 0 success, 1 a verification failed, 2 usage or guard error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import frobenius as frob
from . import paving as pav
from . import presentations as pres
from .errors import GuardError, VerificationError
from .partitions import format_partition, parse_partition, partitions_of
from .qpoly import QPolynomial
from .symmetric import modified_hall_littlewood

SCHEMA = "1"
CLI_GROEBNER_GUARD = 6
CLI_ENUMERATION_GUARD = 7
METHODS = ("groebner", "recursive", "paving", "prd")
COMMANDS = ("hilb", "frob", "cells", "components", "basis", "verify", "stable", "hall-littlewood")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="delta-springer", description="Rings, cells and Frobenius characteristics for R_{n,lambda,s}.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--lambda", dest="lam", default="", help='partition as CSV, "" or 0 for the empty partition')
    p.add_argument("--s", type=int, help="number of rows, at least the length of lambda")
    p.add_argument("--method", choices=METHODS + ("all",), default="recursive")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--latex", action="store_true", help="print display math instead of JSON")
    out.add_argument("--json", action="store_true", help="print JSON (the default)")
    p.add_argument("--threads", type=int, default=None, help="worker processes for cell enumeration")
    p.add_argument("--unsafe-size", action="store_true", help="lift the size guards")
    p.add_argument("--algebraic-grading", action="store_true", help="report degrees with deg x_i = 1")
    p.add_argument("--all", action="store_true", help="verify: sweep every spec up to --max-n")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-s", type=int, default=4)
    p.add_argument("--max-K", type=int, default=10, help="verify: containment sweep bound on K")
    p.add_argument("--max-degree", type=int, default=None, help="stable: cohomological degree cutoff")
    return p


# ---------------------------------------------------------------------------
# helpers


def _spec(args) -> pres.RingSpec:
    if args.n is None:
        raise UsageError("--n is required")
    try:
        lam = parse_partition(args.lam)
    except ValueError as exc:
        raise UsageError(f"--lambda: {exc}") from None
    s = args.s if args.s is not None else max(lam.length, 1)
    try:
        return pres.RingSpec(args.n, lam, s)
    except ValueError as exc:
        flag = "--s" if "s =" in str(exc) else ("--lambda" if "lambda" in str(exc) else "--n")
        raise UsageError(f"{flag}: {exc}") from None


def _guard(args, value):
    return None if args.unsafe_size else value


def _workers(args):
    return args.threads if args.threads is not None else (os.cpu_count() or 1)


def _series(q: QPolynomial, args):
    return {"series": q.to_json(args.algebraic_grading), "text": q.to_string(args.algebraic_grading)}


def _cache_path(request: dict) -> Path | None:
    root = os.environ.get("DELTA_SPRINGER_CACHE_DIR")
    if not root:
        return None
    key = hashlib.sha256(json.dumps(request, sort_keys=True).encode()).hexdigest()
    return Path(root) / f"{key}.json"


def _cached(request: dict, compute):
    path = _cache_path(request)
    if path is not None and path.exists():
        return json.loads(path.read_text())
    result = compute()
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        tmp.write_text(json.dumps(result))
        tmp.replace(path)
    return result


def _request(args, spec=None) -> dict:
    return {
        "schema": SCHEMA,
        "command": args.command,
        "spec": spec.to_json() if spec is not None else None,
        "method": args.method,
        "algebraic": args.algebraic_grading,
        "unsafe": args.unsafe_size,
        "max_n": args.max_n,
        "max_s": args.max_s,
        "max_K": args.max_K,
        "max_degree": args.max_degree,
        "all": args.all,
    }


# ---------------------------------------------------------------------------
# commands


def hilbert_by(method: str, spec, args) -> QPolynomial:
    if method == "groebner":
        return pres.hilbert_groebner(spec, _guard(args, CLI_GROEBNER_GUARD))
    if method == "recursive":
        return pres.hilbert_recursive(spec)
    if method == "paving":
        return pav.paving_hilbert(spec, _guard(args, CLI_ENUMERATION_GUARD), _workers(args))
    if method == "prd":
        return frob.graded_frobenius(spec, _guard(args, CLI_ENUMERATION_GUARD)).hilbert()
    raise UsageError(f"--method: unknown method {method}")


def cmd_hilb(args):
    spec = _spec(args)
    methods = METHODS if args.method == "all" else (args.method,)

    def compute():
        series = {m: hilbert_by(m, spec, args) for m in methods}
        values = list(series.values())
        return {
            "schema": SCHEMA,
            "command": "hilb",
            "spec": spec.to_json(),
            "grading": "algebraic" if args.algebraic_grading else "cohomological",
            "methods": {m: _series(q, args) for m, q in series.items()},
            "agree": all(v == values[0] for v in values),
            "total": values[0].total(),
        }

    result = _cached(_request(args, spec), compute)
    if args.latex:
        texts = {m: QPolynomial({int(d) * (2 if args.algebraic_grading else 1): c for d, c in v["series"].items()}) for m, v in result["methods"].items()}
        lines = [f"{m}: {q.to_latex(args.algebraic_grading)}" for m, q in texts.items()]
        return result, "\n".join(lines), 0 if result["agree"] else 1
    return result, None, 0 if result["agree"] else 1


def cmd_frob(args):
    spec = _spec(args)
    F = frob.graded_frobenius(spec, _guard(args, CLI_ENUMERATION_GUARD))
    result = {
        "schema": SCHEMA,
        "command": "frob",
        "spec": spec.to_json(),
        "grading": "algebraic" if args.algebraic_grading else "cohomological",
        "frobenius": F.to_json(args.algebraic_grading),
        "schur_positive": F.is_schur_positive(),
    }
    return result, F.to_latex(args.algebraic_grading) if args.latex else None, 0


def cmd_cells(args):
    spec = _spec(args)
    T = pav.reading_order_filling(spec.n, spec.lam, spec.s)
    cells = pav.enumerate_cells(spec, _guard(args, CLI_ENUMERATION_GUARD), _workers(args))
    result = {
        "schema": SCHEMA,
        "command": "cells",
        "spec": spec.to_json(),
        "filling": T.to_json(),
        "count": len(cells),
        "cells": [c.to_json(T) for c in cells],
    }
    if args.latex:
        lines = [f"w={''.join(map(str, c.w)) if max(c.w, default=0) < 10 else c.w}, dim {c.dim}: {pav.ytableau(c.iprd)}" for c in cells]
        return result, "\n".join([T.to_latex()] + lines), 0
    return result, None, 0


def components_report(spec, args) -> dict:
    comps = pav.enumerate_components(spec, _guard(args, CLI_ENUMERATION_GUARD), _workers(args))
    d = pav.top_dimension(spec)
    out = {
        "schema": SCHEMA,
        "command": "components",
        "spec": spec.to_json(),
        "top_dimension": d,
        "count": len(comps),
        "classes": [
            {
                "S": [list(r) for r in c.S.rows],
                "label": str(c.S),
                "cells": [list(x.w) for x in c.cells],
                "cell_count": len(c.cells),
                "top_dimension": c.top_dimension,
            }
            for c in comps
        ],
        "equidimensional": all(c.top_dimension == d for c in comps),
    }
    if spec.s > spec.lam.length:
        out["expected_count"] = pav.expected_component_count(spec)
    else:
        out["expected_count"] = sum(1 for S in pav.decreasing_fillings(spec.n, spec.lam) if pav.row_fill_criterion(S))
    out["status"] = "pass" if out["equidimensional"] and out["count"] == out["expected_count"] else "fail"
    return out


def cmd_components(args):
    spec = _spec(args)
    result = components_report(spec, args)
    latex = None
    if args.latex:
        latex = "\n".join(f"{pav.ytableau(c['S'])}: {c['cell_count']} cells" for c in result["classes"])
    return result, latex, 0 if result["status"] == "pass" else 1


def cmd_basis(args):
    spec = _spec(args)
    basis = pres.artin_basis(spec)
    report = pres.verify_artin_basis(spec, _guard(args, CLI_GROEBNER_GUARD))
    result = {
        "schema": SCHEMA,
        "command": "basis",
        "spec": spec.to_json(),
        "basis": [list(m) for m in basis],
        "verification": report,
    }
    latex = None
    if args.latex:
        from .polynomials import Polynomial, format_polynomial

        latex = ", ".join(format_polynomial(Polynomial.monomial(m, spec.n)) if any(m) else "1" for m in basis)
    return result, latex, 0 if report["status"] == "pass" else 1


def cmd_stable(args):
    if args.n is None:
        raise UsageError("--n is required")
    lam = parse_partition(args.lam)
    if lam.size > args.n:
        raise UsageError(f"--lambda: |lambda| = {lam.size} exceeds n = {args.n}")
    cutoff = args.max_degree if args.max_degree is not None else 2 * args.n
    if args.algebraic_grading and args.max_degree is not None:
        cutoff = 2 * args.max_degree
    res = frob.stable_frobenius(args.n, lam, cutoff, _guard(args, CLI_ENUMERATION_GUARD))
    result = {
        "schema": SCHEMA,
        "command": "stable",
        "n": args.n,
        "lambda": list(lam),
        "max_degree": cutoff // 2 if args.algebraic_grading else cutoff,
        "grading": "algebraic" if args.algebraic_grading else "cohomological",
        "s_agree": res.s_agree,
        "s_bound": res.s_bound,
        "frobenius": res.frobenius.to_json(args.algebraic_grading),
    }
    return result, res.frobenius.to_latex(args.algebraic_grading) if args.latex else None, 0


def cmd_hall_littlewood(args):
    lam = parse_partition(args.lam)
    H = modified_hall_littlewood(lam, _guard(args, 8))
    result = {
        "schema": SCHEMA,
        "command": "hall-littlewood",
        "lambda": list(lam),
        "grading": "algebraic" if args.algebraic_grading else "cohomological",
        "frobenius": H.to_json(args.algebraic_grading),
    }
    return result, H.to_latex(args.algebraic_grading) if args.latex else None, 0


# ---------------------------------------------------------------------------
# verification matrix


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def verify_spec(spec, args, include_basis: bool = True) -> dict:
    """Run every per-spec check and return check name -> status."""
    checks = {}
    h_rec = pres.hilbert_recursive(spec)
    h_gb = pres.hilbert_groebner(spec, _guard(args, CLI_GROEBNER_GUARD))
    h_pav = pav.paving_hilbert(spec, _guard(args, CLI_ENUMERATION_GUARD))
    F = frob.graded_frobenius(spec, _guard(args, CLI_ENUMERATION_GUARD))
    checks["hilbert"] = _status(h_rec == h_gb == h_pav == F.hilbert())
    checks["top_degree"] = _status(h_rec.top_degree() == 2 * spec.top_degree)
    checks["schur_positive"] = _status(F.is_schur_positive())
    checks["springer_top"] = frob.top_degree_check(spec, F)["status"]
    comp = components_report(spec, args)
    checks["components"] = comp["status"]
    if spec.s > spec.lam.length:
        checks["top_vs_components"] = _status(F.piece(2 * spec.top_degree).dimension() == comp["count"])
    T = pav.reading_order_filling(spec.n, spec.lam, spec.s)
    cells = pav.enumerate_cells(spec, _guard(args, CLI_ENUMERATION_GUARD))
    checks["iprd_bijection"] = _status(sorted(pav.iprd_of(c.w, T) for c in cells) == sorted(pav.enumerate_iprd(spec)))
    if tuple(spec.lam) == (1,) * spec.k and spec.s == spec.k and spec.k > 0:
        osps = {pav.osp_of_cell(c.w, T) for c in cells}
        checks["ordered_set_partitions"] = _status(osps == set(pav.ordered_set_partitions(spec.n, spec.k)))
    if spec.n == spec.k and spec.s == max(spec.lam.length, 1):
        checks["hall_littlewood"] = frob.springer_check(spec.lam)["status"]
    if include_basis:
        checks["artin_basis"] = pres.verify_artin_basis(spec, _guard(args, CLI_GROEBNER_GUARD))["status"]
    if spec.K <= args.max_K:
        checks["containment"] = pres.verify_containment(spec, _guard(args, pres.DEFAULT_CONTAINMENT_GUARD))["status"]
    return checks


def cmd_verify(args):
    started = time.time()
    if args.all:
        specs = list(pres.iter_specs(args.max_n, args.max_s))
    else:
        specs = [_spec(args)]
    rows = []
    totals: dict[str, dict[str, int]] = {}
    for spec in specs:
        checks = verify_spec(spec, args, include_basis=spec.n <= 5 or not args.all)
        rows.append({"spec": spec.to_json(), "checks": checks})
        for name, st in checks.items():
            totals.setdefault(name, {"pass": 0, "fail": 0})[st] += 1
    extra = {}
    if args.all:
        witness = None
        for n in range(1, args.max_n + 1):
            for k in range(1, n + 1):
                h = pres.hilbert_recursive(pres.RingSpec(n, (1,) * k, k))
                if not h.is_palindromic():
                    witness = {"n": n, "k": k, "hilbert": h.to_string()}
                    break
            if witness:
                break
        extra["non_palindromic_witness"] = witness
        totals["non_palindromic"] = {"pass": int(witness is not None), "fail": int(witness is None)}
    failed = any(v["fail"] for v in totals.values())
    result = {
        "schema": SCHEMA,
        "command": "verify",
        "status": "fail" if failed else "pass",
        "summary": totals,
        "matrix": rows,
        "seconds": round(time.time() - started, 1),
        **extra,
    }
    names = sorted(totals)
    lines = ["check".ljust(24) + "pass".rjust(6) + "fail".rjust(6)]
    lines += [n.ljust(24) + str(totals[n]["pass"]).rjust(6) + str(totals[n]["fail"]).rjust(6) for n in names]
    print("\n".join(lines), file=sys.stderr)
    return result, None, 1 if failed else 0


HANDLERS = {
    "hilb": cmd_hilb,
    "frob": cmd_frob,
    "cells": cmd_cells,
    "components": cmd_components,
    "basis": cmd_basis,
    "verify": cmd_verify,
    "stable": cmd_stable,
    "hall-littlewood": cmd_hall_littlewood,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, latex, code = HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"delta-springer: error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        msg = str(exc) if exc.override in str(exc) else f"{exc}; pass {exc.override} to override"
        print(f"delta-springer: error: guard '{exc.guard}' exceeded: {msg}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(json.dumps({"schema": SCHEMA, "status": "fail", "error": str(exc), "witness": exc.witness}, default=str))
        return 1
    if latex is not None:
        print(latex)
    else:
        print(json.dumps(result, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
