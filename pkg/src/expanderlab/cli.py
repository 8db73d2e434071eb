"""Command-line experiment harness.

Subcommands: graph, spectral, bounds {t1|t2|t3|nnn1|corollaries|growth|shifted},
real {energy|pp71|pp73|curves}, sweep, families.  Every run writes CSV and/or
JSON reports (and figures) into the output directory; the exit status is 0
exactly when every hard assertion held, 1 when one failed (the failing record
is printed), and 2 on usage errors.

Prime lists accept range syntax "7..31" (all primes in the interval) and
comma lists "7,11,13"; the two can be mixed.  A config file of "key = value"
lines may supply any long option; command-line flags win.  Identical config
plus seed reproduces byte-identical report files.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import log, sqrt

import numpy as np

from . import bounds as bnd
from . import real_expand as rex
from .fp_core import (
    DomainError,
    identity_table,
    is_prime,
    power_table,
    primes_in,
    random_table,
    SubgroupSpec,
)
from .fp_sets import FamilySpec, FpSet, GeneralForm, PowerForm, generate, kth_power_set, productset, sumset
from .reporting import BoundReport, sort_records, write_csv, write_json
from .spectral import discrepancy_check, eigs_top2, verify_perron
from .spgraph import EdgeRule, build, count_solutions, decompose_gram, gram, gram_dump

__all__ = ["main", "RunConfig"]


@dataclass
class RunConfig:
    command: str
    variant: str | None = None
    p_list: list[int] = field(default_factory=list)
    trials: int = 0
    seed: int = 0
    out: str = "reports"
    formats: tuple[str, ...] = ("csv", "json")
    jobs: int = 1
    figures: bool = True
    eig_tol: float = 1e-10
    eig_iters: int = 100_000
    cap: int = 64
    dump_gram: str | None = None


# ---------------------------------------------------------------------------
# option plumbing


def parse_p_list(text: str) -> list[int]:
    out: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.update(primes_in(int(lo), int(hi)))
        else:
            v = int(part)
            if not is_prime(v):
                raise argparse.ArgumentTypeError(f"{v} is not prime")
            out.add(v)
    return sorted(out)


def parse_config_file(path: str) -> dict:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"config line without '=': {line!r}")
            key, val = line.split("=", 1)
            values[key.strip().replace("-", "_")] = val.strip()
    return values


def _coerce(key: str, val: str):
    if key == "p":
        return parse_p_list(val)
    if key in ("trials", "seed", "jobs", "eig_iters", "cap"):
        return int(val)
    if key in ("eig_tol",):
        return float(val)
    if key in ("figures",):
        return val.lower() in ("1", "true", "yes", "on")
    if key == "format":
        return val
    return val


def _run_cells(cells, jobs: int):
    """Evaluate independent report cells, possibly concurrently; the caller
    sorts, so evaluation order never shows in the output."""
    if jobs <= 1 or len(cells) <= 1:
        results = [cell() for cell in cells]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: c(), cells))
    records = []
    for chunk in results:
        records.extend(chunk)
    return records


# ---------------------------------------------------------------------------
# suites


def _rule_for(p: int, s: int) -> EdgeRule:
    if s == 0:
        return EdgeRule.standard(p)
    g2 = random_table(p, seed=2 * s + 1) if s % 2 == 0 else None
    return EdgeRule.general(p, random_table(p, seed=2 * s), g2)


def suite_graph(cfg: RunConfig) -> list[BoundReport]:
    trials = cfg.trials or 5

    def cell(p: int, s: int):
        rule = _rule_for(p, s)
        graph = build(rule)
        gm = gram(graph)
        rep = decompose_gram(gm)
        fam = f"{rule.label()}#{s}"
        recs = [
            BoundReport(
                "graph", "regularity", p, fam, lhs=graph.degree, rhs=p - 2,
                holds=graph.degree == p - 2, seed=s,
            ),
            BoundReport(
                "graph", "decomposition", p, fam,
                lhs=int(rep.e_matrix.sum(axis=1)[0]), rhs=rep.expected_degree,
                holds=rep.zero_one_ok and rep.symmetric_ok and rep.regular_ok, seed=s,
            ),
            BoundReport(
                "graph", "census", p, fam, lhs=p - 2, rhs=p - 2,
                holds=rep.census_ok, seed=s,
            ),
        ]
        if p > 5:
            from .spgraph import connectivity

            recs.append(
                BoundReport(
                    "graph", "connectivity", p, fam, lhs=1, rhs=1,
                    holds=connectivity(gm), seed=s,
                )
            )
        if s == 0:
            # spot-check the gram entries against the solution-count oracle
            rng = random.Random(f"oracle:{p}:{cfg.seed}")
            n = gm.n
            ok = True
            for _ in range(min(200, n * n)):
                vi, wi = rng.randrange(n), rng.randrange(n)
                a, b = graph.vertex_pair(vi)
                c, d = graph.vertex_pair(wi)
                if gm.matrix[vi, wi] != count_solutions(a, b, c, d, rule.g, rule.g2):
                    ok = False
                    break
            recs.append(
                BoundReport(
                    "graph", "oracle_equiv", p, fam, lhs=200, rhs=200,
                    holds=ok, seed=cfg.seed,
                )
            )
        return recs

    cells = [
        (lambda p=p, s=s: cell(p, s)) for p in cfg.p_list for s in range(trials)
    ]
    records = _run_cells(cells, cfg.jobs)
    if cfg.dump_gram and cfg.p_list:
        gm = gram(build(EdgeRule.standard(cfg.p_list[0])))
        gram_dump(gm, cfg.dump_gram)
    return records


def suite_spectral(cfg: RunConfig) -> list[BoundReport]:
    trials = cfg.trials or 200

    def cell(p: int):
        gm = gram(build(EdgeRule.standard(p)))
        dense = eigs_top2(gm, method="dense")
        power = eigs_top2(
            gm, method="power", tol=cfg.eig_tol, max_iter=cfg.eig_iters, seed=cfg.seed
        )
        n = gm.n
        orth = abs(float(dense.v2.sum())) / (float(np.linalg.norm(dense.v2)) * sqrt(n))
        agree = abs(dense.theta2 - power.theta2) / max(dense.theta2, 1e-30)
        recs = [
            BoundReport(
                "spectral", "theta1", p, "standard", lhs=dense.theta1,
                rhs=(p - 2) ** 2,
                holds=abs(dense.theta1 - (p - 2) ** 2) <= 1e-6 * (p - 2) ** 2,
            ),
            BoundReport(
                "spectral", "theta2_bound", p, "standard", lhs=dense.theta2,
                rhs=4 * p - 9, holds=dense.theta2 <= 4 * p - 9 + 1e-6,
            ),
            BoundReport(
                "spectral", "orthogonality", p, "standard", lhs=orth, rhs=1e-6,
                holds=orth <= 1e-6,
            ),
            BoundReport(
                "spectral", "method_agreement", p, "standard", lhs=agree, rhs=1e-5,
                holds=agree <= 1e-5,
            ),
            BoundReport(
                "spectral", "perron", p, "standard", lhs=1, rhs=1,
                holds=verify_perron(gm),
            ),
        ]
        if p <= 31:
            graph = build(EdgeRule.standard(p))
            rng = random.Random(f"discrepancy:{p}:{cfg.seed}")
            worst = None
            all_hold = True
            for _ in range(trials):
                s_size = rng.randint(1, n)
                t_size = rng.randint(1, n)
                s_v = rng.sample(range(n), s_size)
                t_v = rng.sample(range(n), t_size)
                rec = discrepancy_check(graph, s_v, t_v, dense)
                all_hold &= rec.holds
                margin = rec.lhs / rec.rhs if rec.rhs else 0.0
                if worst is None or margin > worst[0]:
                    worst = (margin, rec)
            recs.append(
                BoundReport(
                    "spectral", "discrepancy", p, f"pairs={trials}",
                    size_a=worst[1].s_size, size_b=worst[1].t_size,
                    lhs=worst[1].lhs, rhs=worst[1].rhs, ratio=worst[0],
                    holds=all_hold, seed=cfg.seed,
                )
            )
        return recs

    return _run_cells([(lambda p=p: cell(p)) for p in cfg.p_list], cfg.jobs)


def _structured_families(p: int) -> list[FamilySpec]:
    fams = [
        FamilySpec.interval(1, max(2, (p - 1) // 2)),
        FamilySpec.interval(1, p - 1),
        FamilySpec.geometric(2, max(2, (p - 1) // 3)),
        FamilySpec.geometric(3, max(2, (p - 1) // 4)),
        FamilySpec.from_subgroup(SubgroupSpec.kth(2)),
        FamilySpec.from_subgroup(SubgroupSpec.kth(3)),
    ]
    return fams


def _random_triple(p: int, rng: random.Random) -> tuple[FpSet, FpSet, FpSet]:
    def one():
        size = rng.randint(1, p - 1)
        return FpSet.from_elements(p, rng.sample(range(1, p), size), nonzero_only=True)

    return one(), one(), one()


def suite_bounds(cfg: RunConfig) -> list[BoundReport]:
    variant = cfg.variant or "t1"
    trials = cfg.trials or 100
    records: list[BoundReport] = []

    def t1_cells(p: int):
        recs = []
        ident = identity_table(p)
        for fam in _structured_families(p):
            a = generate(fam, p)
            recs.append(bnd.t1_check(a, a, a, ident, ident, family=fam.label()))
        for s in range(trials):
            rng = random.Random(f"t1:{p}:{cfg.seed}:{s}")
            a, b, c = _random_triple(p, rng)
            g = random_table(p, seed=(cfg.seed, s, "g"))
            h = random_table(p, seed=(cfg.seed, s, "h"))
            recs.append(bnd.t1_check(a, b, c, g, h, family="random", seed=s))
        return recs

    def t2_cells(p: int):
        recs = []
        ident = identity_table(p)
        for fam in _structured_families(p):
            a = generate(fam, p)
            recs.append(bnd.t2_check(a, a, a, ident, ident, family=fam.label()))
            recs.append(bnd.t2_corollary(a, ident, family=fam.label()))
        for s in range(trials):
            rng = random.Random(f"t2:{p}:{cfg.seed}:{s}")
            a, b, c = _random_triple(p, rng)
            g = random_table(p, seed=(cfg.seed, s, "g2t"))
            h = random_table(p, seed=(cfg.seed, s, "h2t"))
            recs.append(bnd.t2_check(a, b, c, g, h, family="random", seed=s))
        return recs

    def t3_cells(p: int):
        recs = []
        for k, (eu, ev) in ((1, (1, 1)), (2, (2, 1)), (3, (1, 2))):
            dom = kth_power_set(p, k)
            g = power_table(p, eu, dom.elements())
            h = power_table(p, ev, dom.elements())
            rng = random.Random(f"t3:{p}:{k}:{cfg.seed}")
            elems = dom.elements()
            for s in range(max(1, trials // 10)):
                pick = lambda: FpSet.from_elements(
                    p, rng.sample(elems, rng.randint(1, len(elems))), nonzero_only=True
                )
                rep, _stats = bnd.t3_check(
                    pick(), pick(), pick(), g, h, k=k, cap=cfg.cap,
                    family=f"powers^{k}", seed=s,
                )
                recs.append(rep)
        return recs

    def nnn1_cells(p: int):
        recs = []
        rng = random.Random(f"nnn1:{p}:{cfg.seed}")
        for (u, v) in ((1, 1), (2, 1), (1, 2)):
            for s in range(max(1, trials // 10)):
                a, b, c = _random_triple(p, rng)
                recs.append(
                    bnd.nnn1_check(a, b, c, u, v, family=f"u={u},v={v}", seed=s)
                )
        return recs

    def corollary_cells(p: int):
        recs = []
        for fam in _structured_families(p):
            recs.extend(bnd.corollary_checks(generate(fam, p), family=fam.label()))
        return recs

    def growth_cells(p: int):
        recs = []
        rng = random.Random(f"growth:{p}:{cfg.seed}")
        for s in range(max(3, trials // 10)):
            size = rng.randint(1, p - 1)
            a = FpSet.from_elements(
                p, rng.sample(range(1, p), size), nonzero_only=True
            )
            rep = bnd.growth_chain(a)
            recs.append(
                BoundReport(
                    "bounds", "growth", p, f"random#{s}", size_a=rep.size_a,
                    lhs=rep.aaa_size, rhs=rep.k_ratio**3 * rep.size_a,
                    ratio=float(
                        Fraction(rep.aaa_size) / (rep.k_ratio**3 * rep.size_a)
                    ),
                    holds=rep.hard_ok, seed=s,
                )
            )
        return recs

    def shifted_cells(p: int):
        recs = []
        ident = identity_table(p)
        w_tabs = [("id", ident), ("random", random_table(p, seed=(cfg.seed, "w")))]
        rng = random.Random(f"shift:{p}:{cfg.seed}")
        for s in range(max(2, trials // 20)):
            size = rng.randint(2, p - 1)
            a = FpSet.from_elements(
                p, rng.sample(range(1, p), size), nonzero_only=True
            )
            for wname, w in w_tabs:
                recs.append(
                    bnd.shifted_eval(
                        a, PowerForm(1, 1, 1), w, "product",
                        family=f"w={wname}", seed=s,
                    )
                )
                recs.append(
                    bnd.shifted_eval(
                        a, GeneralForm(ident, ident), w, "sum",
                        family=f"w={wname}", seed=s,
                    )
                )
        return recs

    cells_by_variant = {
        "t1": t1_cells,
        "t2": t2_cells,
        "t3": t3_cells,
        "nnn1": nnn1_cells,
        "corollaries": corollary_cells,
        "growth": growth_cells,
        "shifted": shifted_cells,
    }
    fn = cells_by_variant[variant]
    records.extend(
        _run_cells([(lambda p=p: fn(p)) for p in cfg.p_list], cfg.jobs)
    )
    return records


def suite_real(cfg: RunConfig) -> list[BoundReport]:
    variant = cfg.variant or "energy"
    trials = cfg.trials or 200
    records: list[BoundReport] = []

    if variant == "energy":
        for s in range(trials):
            rng = random.Random(f"renergy:{cfg.seed}:{s}")
            a = rex.random_rational_set(rng.randint(2, 32), (cfg.seed, s))
            e = rex.mult_energy_real(a)
            aa = len(rex.product_set_real(a))
            n = len(a)
            records.append(
                BoundReport(
                    "real", "energy", None, f"random#{s}", size_a=n,
                    lhs=e, rhs=Fraction(n**4, aa),
                    ratio=float(Fraction(e) / Fraction(n**4, aa)),
                    holds=e * aa >= n**4, seed=s,
                )
            )
            lv = rex.dyadic_levels(a)
            records.append(
                BoundReport(
                    "real", "dyadic", None, f"random#{s}", size_a=n,
                    lhs=4 ** (lv.selected + 1) * lv.d, rhs=lv.energy / log(n),
                    holds=lv.bound_ok, seed=s,
                )
            )
    elif variant == "pp71":
        sets = [
            ("interval(8)", rex.RealSet.interval(8)),
            ("interval(16)", rex.RealSet.interval(16)),
            ("geometric(2,8)", rex.RealSet.geometric(2, 8)),
            ("geometric(3/2,12)", rex.RealSet.geometric(Fraction(3, 2), 12)),
        ]
        for s in range(max(1, trials // 10)):
            sets.append(
                (f"random#{s}", rex.random_rational_set(3 + s % 14, (cfg.seed, s)))
            )
        for k in (1, 2, -1, Fraction(1, 2)):
            for name, a in sets:
                records.append(
                    rex.pp71_check(a, k, family=f"{name},k={k}", seed=cfg.seed)
                )
    elif variant == "pp73":
        pairs = [
            ("sq", rex.RealSet.interval(6), rex.RealSet.interval(6)),
            ("rect", rex.RealSet.interval(4), rex.RealSet.interval(9)),
            ("geo", rex.RealSet.geometric(2, 6), rex.RealSet.interval(8)),
            ("unbalanced", rex.RealSet.interval(16), rex.RealSet([1, 2])),
        ]
        for s in range(max(1, trials // 20)):
            pairs.append(
                (
                    f"random#{s}",
                    rex.random_rational_set(3 + s % 8, (cfg.seed, s, "a")),
                    rex.random_rational_set(3 + (s * 3) % 8, (cfg.seed, s, "b")),
                )
            )
        for name, a, b in pairs:
            rep = rex.pp73_check(a, b)
            hard = rep.easy_holds if rep.path == "easy" else (
                rep.cs_holds and rep.diag_bound_ok
            )
            records.append(
                BoundReport(
                    "real", "pp73", None, f"{name}:{rep.path}",
                    size_a=len(a), size_b=len(b),
                    lhs=rep.f_size, rhs=(len(a) * len(b)) ** (2 / 3),
                    ratio=rep.ratio_two_thirds, holds=hard, seed=cfg.seed,
                )
            )
    elif variant == "curves":
        import itertools

        worst = 0
        all_ok = True
        checked = 0
        for a, b in itertools.permutations(range(1, 7), 2):
            for c, d in itertools.permutations(range(1, 7), 2):
                if (a, b) == (c, d):
                    continue
                pts = rex.curve_intersect(
                    rex.CurveParams(a, b), rex.CurveParams(c, d)
                )
                checked += 1
                worst = max(worst, len(pts))
                all_ok &= len(pts) <= 3 and all(q.verified for q in pts)
        records.append(
            BoundReport(
                "real", "curves_max3", None, f"pairs={checked}", lhs=worst, rhs=3,
                holds=all_ok,
            )
        )
        pts = rex.curve_intersect(rex.CurveParams(1, 2), rex.CurveParams(2, 1))
        has_known = any(
            q.kind == "rational" and q.y == Fraction(-3) and q.yp == Fraction(-3)
            for q in pts
        )
        records.append(
            BoundReport(
                "real", "curves_example", None, "(1,2)x(2,1)", lhs=len(pts), rhs=3,
                holds=len(pts) == 3 and has_known,
            )
        )
        rng = random.Random(f"dual:{cfg.seed}")
        dual_ok = True
        for _ in range(trials):
            vals = [
                Fraction(rng.randint(1, 40), rng.randint(1, 10)) for _ in range(4)
            ]
            y, yp, a, b = vals
            dual_ok &= rex.curve_contains(
                rex.CurveParams(a, b), y, yp
            ) == rex.curve_contains(rex.CurveParams(y, yp), a, b)
        records.append(
            BoundReport(
                "real", "curves_duality", None, f"quadruples={trials}", lhs=1, rhs=1,
                holds=dual_ok, seed=cfg.seed,
            )
        )
    else:
        raise DomainError(f"unknown real variant {variant!r}")
    return records


def suite_families(cfg: RunConfig) -> list[BoundReport]:
    records = []
    for p in cfg.p_list:
        for fam in _structured_families(p):
            a = generate(fam, p)
            records.append(
                BoundReport(
                    "families", "family_stats", p, fam.label(), size_a=len(a),
                    lhs=len(sumset(a, a)), rhs=len(productset(a, a)),
                    ratio=len(productset(a, a)) / len(a),
                )
            )
    return records


def suite_sweep(cfg: RunConfig) -> list[BoundReport]:
    records = []
    records += suite_graph(_with(cfg, trials=min(cfg.trials or 3, 3)))
    records += suite_spectral(_with(cfg, trials=min(cfg.trials or 50, 50)))
    for variant in ("t1", "t2", "t3", "nnn1", "corollaries", "growth", "shifted"):
        records += suite_bounds(
            _with(cfg, variant=variant, trials=min(cfg.trials or 20, 20))
        )
    for variant in ("energy", "pp71", "pp73", "curves"):
        records += suite_real(
            _with(cfg, variant=variant, trials=min(cfg.trials or 40, 40))
        )
    records += suite_families(cfg)
    return records


def _with(cfg: RunConfig, **kw) -> RunConfig:
    out = RunConfig(**{**cfg.__dict__})
    for k, v in kw.items():
        setattr(out, k, v)
    return out


_SUITES = {
    "graph": suite_graph,
    "spectral": suite_spectral,
    "bounds": suite_bounds,
    "real": suite_real,
    "families": suite_families,
    "sweep": suite_sweep,
}


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expanderlab",
        description="verification suites for prime-field expansion bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--p", type=str, default=None,
                        help='primes: "7..31", "7,11,13", or a mix')
        sp.add_argument("--trials", type=int, default=None)
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("-o", "--out", type=str, default=None,
                        help="output directory (default: reports)")
        sp.add_argument("--format", choices=("csv", "json", "both"), default=None)
        sp.add_argument("--jobs", type=int, default=None,
                        help="parallel cells (default: EXPANDERLAB_JOBS or 1)")
        sp.add_argument("--config", type=str, default=None,
                        help="key = value config file; flags override it")
        sp.add_argument("--figures", dest="figures", action="store_true",
                        default=None)
        sp.add_argument("--no-figures", dest="figures", action="store_false")
        sp.add_argument("--eig-tol", type=float, default=None)
        sp.add_argument("--eig-iters", type=int, default=None)
        sp.add_argument("--cap", type=int, default=None,
                        help="admissibility cutoff for table statistics")

    g = sub.add_parser("graph", help="regularity / decomposition / census suite")
    g.add_argument("action", nargs="?", choices=("verify",), default="verify")
    g.add_argument("--dump-gram", type=str, default=None,
                   help="write the first gram matrix as 'row col value' lines")
    common(g)

    s = sub.add_parser("spectral", help="eigenvalue and discrepancy suite")
    common(s)

    b = sub.add_parser("bounds", help="theorem bound sweeps")
    b.add_argument(
        "variant",
        choices=("t1", "t2", "t3", "nnn1", "corollaries", "growth", "shifted"),
    )
    common(b)

    r = sub.add_parser("real", help="real-number expansion suites")
    r.add_argument("variant", choices=("energy", "pp71", "pp73", "curves"))
    common(r)

    sw = sub.add_parser("sweep", help="run every suite with moderate sizes")
    common(sw)

    f = sub.add_parser("families", help="emit set-family statistics")
    common(f)
    return parser


_DEFAULT_P = {
    "graph": "7..31",
    "spectral": "7..31",
    "bounds": "7,11,13",
    "real": "7",  # unused by real suites, kept for uniformity
    "sweep": "7..13",
    "families": "7..31",
}


def build_config(args: argparse.Namespace) -> RunConfig:
    file_vals: dict = {}
    if args.config:
        file_vals = {
            k: _coerce(k, v) for k, v in parse_config_file(args.config).items()
        }

    def pick(name, default):
        cli = getattr(args, name, None)
        if cli is not None:
            return cli
        if name in file_vals:
            return file_vals[name]
        return default

    p_raw = pick("p", _DEFAULT_P[args.command])
    p_list = p_raw if isinstance(p_raw, list) else parse_p_list(p_raw)
    fmt = pick("format", "both")
    formats = ("csv", "json") if fmt == "both" else (fmt,)
    jobs_default = int(os.environ.get("EXPANDERLAB_JOBS", "1"))
    return RunConfig(
        command=args.command,
        variant=getattr(args, "variant", None),
        p_list=p_list,
        trials=pick("trials", 0),
        seed=pick("seed", 0),
        out=pick("out", "reports"),
        formats=formats,
        jobs=pick("jobs", jobs_default),
        figures=pick("figures", True),
        eig_tol=pick("eig_tol", 1e-10),
        eig_iters=pick("eig_iters", 100_000),
        cap=pick("cap", 64),
        dump_gram=getattr(args, "dump_gram", None),
    )


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
    except (ValueError, OSError, argparse.ArgumentTypeError) as exc:
        parser.exit(2, f"expanderlab: bad configuration: {exc}\n")

    try:
        records = _SUITES[cfg.command](cfg)
    except DomainError as exc:
        parser.exit(2, f"expanderlab: invalid parameters: {exc}\n")

    records = sort_records(records)
    os.makedirs(cfg.out, exist_ok=True)
    name = cfg.command if not cfg.variant else f"{cfg.command}_{cfg.variant}"
    written = []
    if "csv" in cfg.formats:
        path = os.path.join(cfg.out, f"{name}.csv")
        write_csv(records, path)
        written.append(path)
    if "json" in cfg.formats:
        path = os.path.join(cfg.out, f"{name}.json")
        write_json(records, path)
        written.append(path)
    if cfg.figures:
        from .figures import render_figures

        written += render_figures(records, cfg.out, name)

    failures = [r for r in records if r.holds is False]
    ratio_floor: dict[str, float] = {}
    for r in records:
        if r.ratio is not None:
            key = f"{r.suite}/{r.theorem_id}"
            ratio_floor[key] = min(ratio_floor.get(key, float("inf")), r.ratio)
    print(f"{name}: {len(records)} records, {len(failures)} hard failures")
    for key in sorted(ratio_floor):
        print(f"  min ratio {key}: {ratio_floor[key]:.6g}")
    for path in written:
        print(f"  wrote {path}")
    if failures:
        worst = failures[0]
        print(
            "FAILED: "
            f"suite={worst.suite} theorem={worst.theorem_id} p={worst.p} "
            f"family={worst.family} lhs={worst.lhs} rhs={worst.rhs}"
        )
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
