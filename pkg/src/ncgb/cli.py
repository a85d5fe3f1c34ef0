"""ncgb command line.

Exit codes: 0 pass, 1 verification failure, 2 degree bound exceeded,
3 bad input (unreadable source, parse error, or an infinite envelope where
a finite one is required).
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from dataclasses import dataclass

from .ajts import TripleSystem, check_axioms, envelope_relations, matrix_ajts
from .arith import render_scalar
from .center import center_basis
from .decomp import (
    block_idempotents,
    check_inequivalence,
    check_representation,
    matrix_units,
    representation,
    resolution_of_identity,
    unit_rank,
    verify_unit_relations,
)
from .envelope import EnvelopeAlgebra
from .freealg import render_poly, render_word
from .groebner import DegreeBoundExceeded, complete, normal_words
from .structure_constants import Uncovered, oracle_poly

EXIT_OK, EXIT_FAIL, EXIT_BOUND, EXIT_INPUT = 0, 1, 2, 3
DEFAULT_GROWTH_DEPTH = 10


class InputError(Exception):
    pass


class Failure(Exception):
    """A verification failed; carries the report to print before exiting."""

    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


@dataclass
class RunConfig:
    command: str
    n: int | None
    input: str | None
    mode: str
    max_degree: int | None
    fmt: str
    output: str | None
    jobs: int
    quiet: bool


def _progress(cfg: RunConfig):
    if cfg.quiet:
        return None
    return lambda msg: print(msg, file=sys.stderr, flush=True)


def load_system(cfg: RunConfig) -> TripleSystem:
    if cfg.n is not None:
        if cfg.n < 1:
            raise InputError("--matrix-n must be positive")
        return matrix_ajts(cfg.n)
    try:
        return TripleSystem.load(cfg.input)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read {cfg.input}: {exc}") from exc


def _complete(cfg: RunConfig, T: TripleSystem):
    try:
        rel = envelope_relations(T, cfg.mode)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return complete(rel.generators, cfg.max_degree, progress=_progress(cfg)), rel.alphabet


def _envelope(cfg: RunConfig, T: TripleSystem) -> EnvelopeAlgebra:
    gb, alpha = _complete(cfg, T)
    rep = normal_words(gb, T.dim)
    if not rep.finite:
        raise InputError("the envelope is infinite-dimensional")
    A = EnvelopeAlgebra(gb, alpha, rep.basis, cfg.mode)
    if cfg.jobs > 1:
        A.fill_table(cfg.jobs)
    return A


def _matrix_envelope(cfg: RunConfig) -> EnvelopeAlgebra:
    T = load_system(cfg)
    if not T.is_matrix():
        raise InputError("this command needs the matrix triple system")
    return _envelope(cfg, T)


# -- commands ------------------------------------------------------------------------------
# Each returns (json-able dict, text); a Failure carries the same pair.


def cmd_check(cfg: RunConfig):
    T = load_system(cfg)
    rep = check_axioms(T)
    data = {"command": "check", "pass": rep.ok, "exhaustive": rep.exhaustive, "checked": rep.checked}
    if rep.ok:
        how = "all" if rep.exhaustive else "sampled"
        return data, f"PASS: axioms hold ({how} {rep.checked} quintuples)\n"
    v = rep.violation
    data["violation"] = {"axiom": v.axiom, "indices": [i + 1 for i in v.indices]}
    raise Failure((data, f"FAIL: {v.describe(T)}\n"))


def cmd_gb(cfg: RunConfig):
    T = load_system(cfg)
    gb, alpha = _complete(cfg, T)
    data = {"command": "gb", **gb.to_json(alpha)}
    return data, gb.to_text(alpha)


def _growth_depth(cfg: RunConfig) -> int:
    return cfg.max_degree if cfg.max_degree is not None else DEFAULT_GROWTH_DEPTH


def cmd_dim(cfg: RunConfig):
    T = load_system(cfg)
    gb, _ = _complete(cfg, T)
    rep = normal_words(gb, T.dim, _growth_depth(cfg))
    data = {"command": "dim", "finite": rep.finite, "dim": rep.total, "counts": rep.counts}
    if rep.finite:
        return data, f"{rep.total}\n"
    return data, "INFINITE\ncounts: " + " ".join(map(str, rep.counts)) + "\n"


def cmd_growth(cfg: RunConfig):
    T = load_system(cfg)
    gb, alpha = _complete(cfg, T)
    rep = normal_words(gb, T.dim, _growth_depth(cfg))
    data = {"command": "growth", "finite": rep.finite, "counts": rep.counts}
    lines = ["verdict: " + ("FINITE" if rep.finite else "INFINITE")]
    if rep.cycle:
        data["cycle"] = [render_word(w, alpha) for w in rep.cycle]
        lines.append("cycle: " + " -> ".join(data["cycle"]))
    lines += [f"degree {d}: {c}" for d, c in enumerate(rep.counts)]
    return data, "\n".join(lines) + "\n"


def cmd_basis(cfg: RunConfig):
    A = _envelope(cfg, load_system(cfg))
    words = [render_word(w, A.alphabet) for w in A.basis]
    return {"command": "basis", "dim": A.dim, "basis": words}, "\n".join(words) + "\n"


def cmd_mul(cfg: RunConfig, left: str, right: str):
    A = _envelope(cfg, load_system(cfg))
    try:
        x, y = A.parse(left), A.parse(right)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = str(x * y)
    return {"command": "mul", "left": left, "right": right, "product": out}, out + "\n"


def cmd_table(cfg: RunConfig):
    A = _envelope(cfg, load_system(cfg))
    return {"command": "table", **A.to_json()}, A.to_text()


def cmd_oracle_diff(cfg: RunConfig, errata: bool = False):
    A = _matrix_envelope(cfg)
    n = A.n
    mismatches = []
    uncovered = []
    for i, j in itertools.product(range(A.dim), repeat=2):
        u, v = A.basis[i], A.basis[j]
        try:
            want = oracle_poly(n, u, v, errata)
        except Uncovered:
            uncovered.append([render_word(u, A.alphabet), render_word(v, A.alphabet)])
            continue
        got = A.coords_to_poly(A.product(i, j))
        if got != want:
            mismatches.append(
                {
                    "left": render_word(u, A.alphabet),
                    "right": render_word(v, A.alphabet),
                    "engine": render_poly(got, A.alphabet),
                    "oracle": render_poly(want, A.alphabet),
                }
            )
    data = {
        "command": "oracle-diff",
        "n": n,
        "errata": errata,
        "pairs": A.dim * A.dim,
        "mismatches": len(mismatches),
        "uncovered": len(uncovered),
        "details": mismatches,
    }
    lines = [f"{len(mismatches)} mismatches over {A.dim * A.dim} pairs"]
    for m in mismatches:
        lines.append(f"{m['left']} . {m['right']}: engine {m['engine']} | oracle {m['oracle']}")
    for u, v in uncovered:
        lines.append(f"uncovered: {u} . {v}")
    text = "\n".join(lines) + "\n"
    if mismatches or uncovered:
        raise Failure((data, text))
    return data, text


def cmd_center(cfg: RunConfig):
    A = _envelope(cfg, load_system(cfg))
    Z = center_basis(A)
    polys = [str(z) for z in Z]
    data = {"command": "center", "dim": len(Z), "basis": polys}
    text = f"dimension {len(Z)}\n" + "".join(f"z{k + 1} = {p}\n" for k, p in enumerate(polys))
    return data, text


def cmd_decompose(cfg: RunConfig):
    A = _matrix_envelope(cfg)
    fams = matrix_units(A)
    rel = verify_unit_relations(fams)
    res = resolution_of_identity(fams)
    r = unit_rank(fams)
    ids = block_idempotents(fams)
    idem = all(e * e == e for e in ids)
    orth = all((x * y).is_zero() for x, y in itertools.permutations(ids, 2))
    blocks = [1] + [A.n] * 4
    checks = {
        "unit_relations": rel.ok,
        "resolution_of_identity": res.ok,
        "full_rank": r == A.dim,
        "idempotents": idem,
        "orthogonal": orth,
        "dimension": sum(b * b for b in blocks) == A.dim,
    }
    data = {
        "command": "decompose",
        "n": A.n,
        "dim": A.dim,
        "blocks": blocks,
        "families": [F.kind for F in fams],
        "rank": r,
        "checks": checks,
        "idempotents": [str(e) for e in ids],
    }
    lines = [f"blocks: {blocks}", f"rank: {r} of {A.dim}"]
    lines += [f"{k}: {'PASS' if v else 'FAIL'}" for k, v in checks.items()]
    if not rel.ok:
        lines.append(f"unit relation fails at {rel.where}")
    if not res.ok:
        lines.append(f"resolution of identity fails at {res.where}")
    text = "\n".join(lines) + "\n"
    if not all(checks.values()):
        raise Failure((data, text))
    return data, text


def cmd_reps(cfg: RunConfig):
    T = load_system(cfg)
    if not T.is_matrix():
        raise InputError("reps needs the matrix triple system")
    n = T.n
    reps = [representation(n, k) for k in (1, 2, 3, 4)]
    results = []
    lines = []
    for r in reps:
        ok, info = check_representation(T, r)
        results.append({"rho": r.index, "pass": ok, **({"triples": info} if ok else {"counterexample": [x + 1 for x in info]})})
        lines.append(f"rho{r.index}: {'PASS' if ok else 'FAIL'}")
    pairs = []
    for r1, r2 in itertools.combinations(reps, 2):
        w = check_inequivalence(r1, r2)
        entry = {"pair": [r1.index, r2.index], "inequivalent": w is not None}
        if w is not None:
            s, t1, t2 = w
            name = T.alphabet.name(s)
            entry.update(witness=name, traces=[render_scalar(t1), render_scalar(t2)])
            lines.append(f"rho{r1.index} vs rho{r2.index}: trace at {name} is {render_scalar(t1)} vs {render_scalar(t2)}")
        else:
            lines.append(f"rho{r1.index} vs rho{r2.index}: no trace witness")
        pairs.append(entry)
    data = {"command": "reps", "n": n, "representations": results, "pairs": pairs}
    if not all(x["pass"] for x in results) or not all(p["inequivalent"] for p in pairs):
        raise Failure((data, "\n".join(lines) + "\n"))
    return data, "\n".join(lines) + "\n"


# -- plumbing ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix-n", type=int, dest="n", help="use the n x n matrix triple system")
    src.add_argument("--input", help="triple system JSON file")
    common.add_argument("--mode", choices=("full", "paper"), default="full", help="relation set (default full)")
    common.add_argument("--max-degree", type=int, help="completion degree bound (env NCGB_MAX_DEGREE)")
    common.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for table filling")
    common.add_argument("--quiet", action="store_true", help="no progress on stderr")

    p = argparse.ArgumentParser(prog="ncgb", description="Noncommutative Groebner bases and triple-system envelopes.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="check the triple-system axioms")
    sub.add_parser("gb", parents=[common], help="complete the envelope relations")
    sub.add_parser("dim", parents=[common], help="dimension of the envelope, or INFINITE")
    sub.add_parser("basis", parents=[common], help="list the normal words")
    m = sub.add_parser("mul", parents=[common], help="multiply two polynomials in the envelope")
    m.add_argument("left")
    m.add_argument("right")
    sub.add_parser("table", parents=[common], help="full multiplication table")
    o = sub.add_parser("oracle-diff", parents=[common], help="compare the table with the closed-form products")
    o.add_argument("--errata", action="store_true", help="use the corrected forms of two closed-form products")
    sub.add_parser("center", parents=[common], help="basis of the center")
    sub.add_parser("decompose", parents=[common], help="verify the matrix-unit decomposition")
    sub.add_parser("reps", parents=[common], help="verify the four degree-n representations")
    sub.add_parser("growth", parents=[common], help="normal-word counts per degree")
    return p


COMMANDS = {
    "check": cmd_check,
    "gb": cmd_gb,
    "dim": cmd_dim,
    "basis": cmd_basis,
    "mul": cmd_mul,
    "table": cmd_table,
    "oracle-diff": cmd_oracle_diff,
    "center": cmd_center,
    "decompose": cmd_decompose,
    "reps": cmd_reps,
    "growth": cmd_growth,
}


def _emit(cfg: RunConfig, payload) -> None:
    data, text = payload
    out = json.dumps(data, indent=2, sort_keys=True) + "\n" if cfg.fmt == "json" else text
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    max_degree = args.max_degree
    if max_degree is None and os.environ.get("NCGB_MAX_DEGREE"):
        try:
            max_degree = int(os.environ["NCGB_MAX_DEGREE"])
        except ValueError:
            print("error: NCGB_MAX_DEGREE must be an integer", file=sys.stderr)
            return EXIT_INPUT
    if max_degree is not None and max_degree < 3:
        print("error: max degree must be at least 3", file=sys.stderr)
        return EXIT_INPUT
    cfg = RunConfig(args.command, args.n, args.input, args.mode, max_degree, args.fmt, args.output, args.jobs, args.quiet)
    extra = []
    if cfg.command == "mul":
        extra = [args.left, args.right]
    elif cfg.command == "oracle-diff":
        extra = [args.errata]
    try:
        _emit(cfg, COMMANDS[cfg.command](cfg, *extra))
    except Failure as f:
        _emit(cfg, f.report)
        return EXIT_FAIL
    except DegreeBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        alpha = load_system(cfg).alphabet
        partial = {"command": cfg.command, "bound_exceeded": True, "degree": exc.degree, "bound": exc.bound}
        partial.update(exc.partial.to_json(alpha))
        _emit(cfg, (partial, exc.partial.to_text(alpha)))
        return EXIT_BOUND
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
