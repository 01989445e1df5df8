"""Command-line verification harness.

Each subcommand runs ``--trials`` seeded instances (or the ``--matrix``
given by the user together with seeded auxiliary elements) and prints one
report per instance.  Exit status: 0 when every check holds, 1 on a
violation, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .errors import GrassmannError
from .exterior import MultiVector, mv_sum, wedge
from .hasse_schmidt import Endomorphism, hs_coefficient, hs_series, leibniz_mismatch
from .quasi_inverse import (
    ch_corollary_residual,
    check_cayley_hamilton,
    eigen_data,
    precheh_sum,
    prech_verdict,
    quasi_inverse_verdict,
    witness,
)
from .random_instances import random_endomorphism, random_multivector, split_support, trial_rng
from .scalars import DOMAINS, Kind, PairScalar, get_domain
from .serialization import endomorphism_to_json, multivector_to_json, pair_to_json, parse_matrix

SUBCOMMANDS = ("eigenpairs", "check-ch", "check-quasi-inverse", "check-prech", "check-leibniz", "demo")
MAX_N = 8
WARN_N = 5

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class ConfigError(Exception):
    """Invalid combination of options (reported with exit status 2)."""


class Config:
    def __init__(self, subcommand, domain, matrix, n, trunc, seed, trials, as_json):
        self.subcommand = subcommand
        self.domain = domain
        self.matrix = matrix
        self.n = n
        self.trunc = trunc
        self.seed = seed
        self.trials = trials
        self.as_json = as_json


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semiring", default="int", choices=sorted(DOMAINS), help="scalar domain (default int)")
    common.add_argument("--matrix", help="endomorphism as a file path or inline JSON/CSV")
    common.add_argument("--n", type=int, help=f"rank, 2..{MAX_N} (default: from --matrix, else 3)")
    common.add_argument("--trunc", type=int, help="truncation order in z (default 2n)")
    common.add_argument("--seed", type=int, help="base seed (default: $GRASSMANN_SEED, else 0)")
    common.add_argument("--trials", type=int, default=100, help="number of instances (default 100)")
    common.add_argument("--json", action="store_true", help="one JSON report per line")

    parser = argparse.ArgumentParser(
        prog="grassmann-semi",
        description="Exact checks for Hasse-Schmidt derivations over semirings with a negation map.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    helps = {
        "eigenpairs": "eigenvalue pairs (e_i, e_i') and (h_i, h_i') on the top exterior power",
        "check-ch": "eigenvalue-pair identity, Cayley-Hamilton over all basis splits, and its corollary",
        "check-quasi-inverse": "Dbar D x and D Dbar x both surpass x",
        "check-prech": "Dbar(D(u) ^ v) surpasses u ^ Dbar(v)",
        "check-leibniz": "Leibniz rule and multiplicativity of D(z) on disjoint-support products",
        "demo": "worked example for the shift endomorphism on n = 5",
    }
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def resolve_config(args: argparse.Namespace, environ=os.environ) -> Config:
    domain = get_domain(args.semiring)
    seed = args.seed
    if seed is None:
        raw = environ.get("GRASSMANN_SEED")
        if raw is None or raw.strip() == "":
            seed = 0
        else:
            try:
                seed = int(raw)
            except ValueError:
                raise ConfigError(f"GRASSMANN_SEED: {raw!r} is not an integer") from None
    if args.subcommand == "demo":
        n = 5
        matrix = Endomorphism.from_images(n, domain, {j: {j + 1: domain.one} for j in range(n - 1)})
    else:
        matrix = parse_matrix(args.matrix, domain, args.n) if args.matrix is not None else None
        n = matrix.n if matrix is not None else (args.n if args.n is not None else 3)
    if not 2 <= n <= MAX_N:
        raise ConfigError(f"--n: {n} outside 2..{MAX_N}")
    trunc = 2 * n if args.trunc is None else args.trunc
    if trunc < n:
        raise ConfigError(f"--trunc: {trunc} is below n = {n}")
    if args.trials < 1:
        raise ConfigError("--trials: must be at least 1")
    if args.subcommand == "check-prech" and n < 3:
        raise ConfigError("check-prech needs n >= 3 (deg u >= 1, deg v >= 2)")
    if args.subcommand == "check-quasi-inverse" and trunc < n + 2:
        raise ConfigError(f"--trunc: check-quasi-inverse needs trunc >= n + 2 = {n + 2}")
    trials = args.trials
    if args.subcommand == "demo" or (matrix is not None and args.subcommand in ("eigenpairs", "check-ch")):
        # nothing random left to vary
        trials = 1
    return Config(args.subcommand, domain, matrix, n, trunc, seed, trials, args.json)


# -- per-instance checks -------------------------------------------------------
# Each returns a list of (theorem, holds, residual, extra-instance-fields).


def _top_scaled(f: Endomorphism, pair: PairScalar) -> MultiVector:
    return MultiVector.top(f.n, f.domain).scale(pair)


def _eigen_extra(f: Endomorphism) -> dict:
    data = eigen_data(f)
    extra = {"e": [pair_to_json(p) for p in data.e], "h": [pair_to_json(p) for p in data.h]}
    if f.domain.kind in (Kind.INTEGERS, Kind.RATIONALS):
        extra["net_e"] = [f.domain.to_json(c) for c in data.net_e()]
    return extra


def run_eigenpairs(f, rng, cfg):
    p = precheh_sum(f)
    return [("eigenpairs", p.is_balanced(), _top_scaled(f, p), _eigen_extra(f))]


def run_check_ch(f, rng, cfg):
    n, d = f.n, f.domain
    p = precheh_sum(f)
    reports = [("precheh", p.is_balanced(), _top_scaled(f, p), {})]

    found = None
    residuals = []
    for k in range(1, n + 1):
        for u in combinations(range(n), k):
            v = tuple(i for i in range(n) if i not in u)
            holds, res = check_cayley_hamilton(f, u, v)
            residuals.append(res)
            if not holds and found is None:
                found = (res, {"u": list(u), "v": list(v)})
    if found is None:
        reports.append(("cayley-hamilton", True, mv_sum(residuals, n, d), {}))
    else:
        reports.append(("cayley-hamilton", False, found[0], found[1]))

    found = None
    residuals = []
    for k in range(2, n + 1):
        for u in combinations(range(n), k):
            holds, res = ch_corollary_residual(f, u)
            residuals.append(res)
            if not holds and found is None:
                found = (res, {"u": list(u)})
    if found is None:
        reports.append(("ch-corollary", True, mv_sum(residuals, n, d), {}))
    else:
        reports.append(("ch-corollary", False, found[0], found[1]))
    return reports


def run_check_quasi_inverse(f, rng, cfg):
    degree = rng.randint(2, min(f.n, cfg.trunc - f.n))
    x = random_multivector(f.n, f.domain, rng, degree)
    holds, residual = quasi_inverse_verdict(f, x, cfg.trunc)
    return [("quasi-inverse", holds, residual, {"x": multivector_to_json(x)})]


def run_check_prech(f, rng, cfg):
    n = f.n
    du = rng.randint(1, max(1, min(n - 2, cfg.trunc - n)))
    dv = rng.randint(2, n - du)
    u = random_multivector(n, f.domain, rng, du)
    v = random_multivector(n, f.domain, rng, dv)
    holds, residual = prech_verdict(f, u, v, cfg.trunc)
    return [("prech", holds, residual, {"u": multivector_to_json(u), "v": multivector_to_json(v)})]


def run_check_leibniz(f, rng, cfg):
    left, right = split_support(f.n, rng, 1, 1)
    u = random_multivector(f.n, f.domain, rng, rng.randint(1, len(left)), support=left)
    v = random_multivector(f.n, f.domain, rng, rng.randint(1, len(right)), support=right)
    extra = {"u": multivector_to_json(u), "v": multivector_to_json(v)}
    miss = leibniz_mismatch(f, u, v, cfg.trunc)
    if miss is None:
        return [("leibniz", True, MultiVector.zero(f.n, f.domain), extra)]
    rule, k = miss
    extra.update({"rule": rule, "power": k})
    return [("leibniz", False, hs_coefficient(f, k, wedge(u, v)), extra)]


def run_demo(f, rng, cfg):
    x = MultiVector.basis(f.n, f.domain, (1, 2))
    d2 = hs_coefficient(f, 2, x)
    target = MultiVector.basis(f.n, f.domain, (1, 4))
    d = witness(target, d2)
    residual = d if d is not None else d2
    extra = {"x": multivector_to_json(x), "D_2(x)": multivector_to_json(d2), "surpasses": multivector_to_json(target)}
    return [("worked-example", d is not None, residual, extra)]


RUNNERS: Dict[str, Callable] = {
    "eigenpairs": run_eigenpairs,
    "check-ch": run_check_ch,
    "check-quasi-inverse": run_check_quasi_inverse,
    "check-prech": run_check_prech,
    "check-leibniz": run_check_leibniz,
    "demo": run_demo,
}


def iter_reports(cfg: Config) -> Iterator[Tuple[dict, MultiVector]]:
    """``(report, residual)`` in trial order; each trial depends only on ``(seed, trial)``."""
    runner = RUNNERS[cfg.subcommand]
    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial)
        f = cfg.matrix if cfg.matrix is not None else random_endomorphism(cfg.n, cfg.domain, rng)
        for theorem, holds, residual, extra in runner(f, rng, cfg):
            instance = {"trial": trial, "endomorphism": endomorphism_to_json(f)}
            instance.update(extra)
            report = {
                "theorem": theorem,
                "instance": instance,
                "holds": bool(holds),
                "residual": multivector_to_json(residual),
                "trunc": cfg.trunc,
                "seed": cfg.seed,
            }
            yield report, residual


def _text_line(report: dict, residual: MultiVector) -> str:
    status = "holds" if report["holds"] else "FAILS"
    line = f"trial {report['instance']['trial']}: {report['theorem']} {status}; residual = {residual!r}"
    inst = report["instance"]
    if "e" in inst:
        fmt = lambda pairs: "[" + ", ".join(f"({p}, {q})" for p, q in pairs) + "]"
        line += f"; e = {fmt(inst['e'])}; h = {fmt(inst['h'])}"
        if "net_e" in inst:
            line += f"; e - e' = {inst['net_e']}"
    return line


def _demo_text(f: Endomorphism, out) -> None:
    x = MultiVector.basis(f.n, f.domain, (1, 2))
    d2 = hs_coefficient(f, 2, x)
    print("shift endomorphism f(b_i) = b_(i+1) on n = 5 (f(b_4) = 0), semiring " + f.domain.name, file=out)
    print("D_2(b1^b2) = f^2(b1)^b2 + f(b1)^f(b2) + b1^f^2(b2)", file=out)
    print("           = b3^b2 + b2^b3 + b1^b4", file=out)
    print(f"normal form: {d2!r}", file=out)
    print(f"D(z)(b1^b2) through z^4: {hs_series(f, x, 4)!r}", file=out)


def run(cfg: Config, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    if cfg.n > WARN_N:
        print(f"warning: n = {cfg.n} > {WARN_N}; composition enumeration grows quickly", file=err)
    if cfg.subcommand == "demo" and not cfg.as_json:
        _demo_text(cfg.matrix, out)
    total = failures = 0
    for report, residual in iter_reports(cfg):
        total += 1
        if cfg.as_json:
            print(json.dumps(report), file=out)
        else:
            print(_text_line(report, residual), file=out)
        if not report["holds"]:
            failures += 1
            if not cfg.as_json:
                print("falsifying instance: " + json.dumps(report["instance"]), file=out)
    if not cfg.as_json:
        print(f"{total - failures}/{total} checks hold (seed {cfg.seed}, trunc {cfg.trunc})", file=out)
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
    except (ConfigError, GrassmannError) as exc:
        print(f"grassmann-semi: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
