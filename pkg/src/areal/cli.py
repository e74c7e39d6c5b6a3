"""Command-line front end: declarative experiments (`areal run`),
threshold sweeps (`areal sweep`), and the canonical verification matrix
(`areal verify-all`).

Reports carry every exact count as a decimal string and are byte
identical across runs and thread counts.  Exit codes: 0 all checks pass,
1 a check failed, 2 invalid configuration, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import census as cn
from . import constructions as cons
from .configs import BothBad, NotEquivalent, apply_config, recover_g
from .linalg import apply_mat, enumerate_sl2, identity, sl2_order
from .rings import ModPrimePower, RingSpec, ring_from_json

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

CHECK_NAMES = (
    "census",
    "nu",
    "f-moments",
    "lemma-2.2",
    "lemma-2.3",
    "lemma-2.4",
    "lemma-3.1",
    "lemma-4.1",
    "lemma-4.2",
    "theorem-6.1",
    "sharpness",
)

DEFAULT_THREADS_ENV = "AREAL_THREADS"


class InvalidConfig(Exception):
    pass


def _frac_str(x) -> str:
    return str(Fraction(x))


@dataclass
class ExperimentConfig:
    spec: RingSpec
    construction: dict
    k: int
    checks: list[str]
    budget: int
    output: str | None = None
    fmt: str = "json"

    @classmethod
    def from_json(cls, obj: dict) -> "ExperimentConfig":
        if not isinstance(obj, dict):
            raise InvalidConfig("experiment config must be a JSON object")
        try:
            spec = ring_from_json(obj["ring"])
        except (KeyError, ValueError, TypeError) as exc:
            raise InvalidConfig(f"bad ring spec: {exc}") from exc
        construction = obj.get("construction", {"kind": "full-plane"})
        k = int(obj.get("k", 1))
        checks = obj.get("checks", [])
        budget = int(obj.get("budget", cn.DEFAULT_BUDGET))
        out = obj.get("output", {})
        cfg = cls(
            spec=spec,
            construction=construction,
            k=k,
            checks=list(checks),
            budget=budget,
            output=out.get("path"),
            fmt=out.get("format", "json"),
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.k < 1:
            raise InvalidConfig("k must be >= 1")
        if not self.checks:
            raise InvalidConfig("checks must be nonempty")
        for c in self.checks:
            if c not in CHECK_NAMES:
                raise InvalidConfig(f"unknown check {c!r}")
        if self.budget <= 0:
            raise InvalidConfig("budget must be > 0")
        if self.fmt not in ("json", "csv"):
            raise InvalidConfig(f"unknown output format {self.fmt!r}")
        if "theorem-6.1" in self.checks and not isinstance(self.spec, ModPrimePower):
            raise InvalidConfig("theorem-6.1 requires a mod-prime-power ring")
        if "sharpness" in self.checks and self.construction.get("kind") not in (
            "circle",
            "union-circles",
            "mod-sharpness",
        ):
            raise InvalidConfig("sharpness requires a circle or mod-sharpness construction")

    def point_set(self) -> cn.PointSet:
        try:
            return cons.construction_from_json(self.spec, self.construction)
        except (KeyError, ValueError, TypeError) as exc:
            raise InvalidConfig(f"bad construction: {exc}") from exc


# ---------------------------------------------------------------------------
# Individual checks.  Each returns a JSON-ready dict with an "ok" flag and
# every exact quantity it computed (counts as decimal strings).

def _check_lemma_4_2(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    order = sl2_order(cfg.spec)
    cn._check_budget(order, cfg.budget)
    enumerated = sum(1 for _ in enumerate_sl2(cfg.spec))
    return {
        "check": "lemma-4.2",
        "formula": str(order),
        "enumerated": str(enumerated),
        "ok": order == enumerated,
    }


def _check_lemma_4_1(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    spec = cfg.spec
    orbit = cn.designated_orbit(spec)
    try:
        phi = cn.transitivity_constant(spec, cfg.budget)
    except cn.NotTransitive as exc:
        return {
            "check": "lemma-4.1",
            "ok": False,
            "counterexample": repr(exc.pair),
        }
    return {
        "check": "lemma-4.1",
        "phi": str(phi),
        "group_order": str(sl2_order(spec)),
        "orbit_size": str(len(orbit)),
        "ok": phi * len(orbit) == sl2_order(spec),
    }


def _check_census(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    report = cn.count_classes(E, cfg.k, cfg.budget)
    consistent = (
        sum(report.tuples_by_level.values()) == report.total_tuples
        and sum(report.classes_by_level.values()) == report.total_classes
        and all(c >= 1 for c in report.classes_by_level.values())
    )
    out = report.to_json()
    out["check"] = "census"
    out["ok"] = consistent
    return out


def _check_nu(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    hist = cn.nu_histogram(E, cfg.budget)
    spec = cfg.spec
    counts = {
        json.dumps(spec.element_to_json(t)): str(c)
        for t, c in sorted(hist.counts.items(), key=lambda kv: spec.index(kv[0]))
    }
    return {
        "check": "nu",
        "histogram": counts,
        "total": str(hist.total()),
        "expected_total": str(len(E) ** 2),
        "ok": hist.total() == len(E) ** 2,
    }


def _check_f_moments(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    spec = cfg.spec
    prof = cn.f_profile(E, cfg.budget)
    ident = identity(spec)
    f_identity = next(
        v for g, v in zip(enumerate_sl2(spec), prof.values) if g == ident
    )
    ok = (
        f_identity == len(E)
        and prof.maximum <= len(E)
        and prof.second_moment_excess >= 0
    )
    out = {
        "check": "f-moments",
        "f_identity": str(f_identity),
        "set_size": str(len(E)),
        "sum_f": str(prof.sum_f),
        "mean": _frac_str(prof.mean),
        "max": str(prof.maximum),
        "excess": _frac_str(prof.second_moment_excess),
    }
    orbit = set(cn.designated_orbit(spec))
    if E.members <= orbit:
        expected = sl2_order(spec) * len(E) ** 2
        ok = ok and prof.sum_f * len(orbit) == expected
        out["sum_f_times_orbit"] = str(prof.sum_f * len(orbit))
        out["order_times_size_sq"] = str(expected)
    n = len(E)
    if n ** 4 <= cfg.budget and sl2_order(spec) * n * n <= cfg.budget:
        ident_report = cn.moment_identity_check(E, cfg.budget)
        ok = ok and ident_report.ok
        out["moment_identity"] = {
            "f_square_sum": str(ident_report.f_square_sum),
            "stabilizer_sum": str(ident_report.stabilizer_sum),
            "matched_part": str(ident_report.matched_part),
            "collinear_part": str(ident_report.collinear_part),
            "unique_on_good": ident_report.unique_on_good,
        }
    out["ok"] = ok
    return out


def _check_lemma_2_2(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    """Every pair of equivalent good tuples is related by exactly one
    group element, found both by full scan and by recover_g."""
    spec = cfg.spec
    classes = cn.good_class_members(E, cfg.k, cfg.budget)
    order = sl2_order(spec)
    scan_cost = sum(len(v) ** 2 for v in classes.values()) * order
    cn._check_budget(scan_cost, cfg.budget)
    group = list(enumerate_sl2(spec))
    pairs_checked = 0
    ok = True
    for members in classes.values():
        for xs in members:
            for ys in members:
                matches = [
                    g for g in group if apply_config(spec, g, xs) == ys
                ]
                try:
                    g = recover_g(spec, xs, ys)
                except (NotEquivalent, BothBad):
                    ok = False
                    break
                if len(matches) != 1 or matches[0] != g:
                    ok = False
                    break
                pairs_checked += 1
            if not ok:
                break
        if not ok:
            break
    return {
        "check": "lemma-2.2",
        "good_classes": str(len(classes)),
        "pairs_checked": str(pairs_checked),
        "ok": ok,
    }


def _check_lemma_2_3(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    spec = cfg.spec
    k = cfg.k
    fast = cn.count_bad_tuples(E, k, cfg.budget)
    oracle = cn.count_bad_tuples_naive(E, k, cfg.budget)
    bad_total = sum(c for m, c in fast.items() if m >= 1)
    if isinstance(spec, ModPrimePower):
        p, ell = spec.p, spec.ell
        shape = p ** ((2 * ell - 1) * (k + 1) + 1)
        level_shapes = {
            m: p ** ((2 * ell - m) * (k + 1) + m) for m in range(1, ell + 1)
        }
    else:
        q = spec.size()
        shape = q ** k * len(E)
        level_shapes = {1: shape}
    constant = Fraction(bad_total, shape) if shape else Fraction(0)
    level_constants = {
        m: Fraction(fast.get(m, 0), level_shapes[m]) for m in level_shapes
    }
    ok = (
        fast == oracle
        and constant <= 4
        and all(c <= 4 for c in level_constants.values())
    )
    return {
        "check": "lemma-2.3",
        "counts_by_level": {str(m): str(c) for m, c in sorted(fast.items())},
        "oracle_by_level": {str(m): str(c) for m, c in sorted(oracle.items())},
        "bad_total": str(bad_total),
        "bound_shape": str(shape),
        "constant": _frac_str(constant),
        "level_constants": {str(m): _frac_str(c) for m, c in sorted(level_constants.items())},
        "ok": ok,
    }


def _check_lemma_2_4(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    report = cn.flemma_check(E, cfg.k, cfg.budget)
    return {
        "check": "lemma-2.4",
        "good_tuples": str(report.good_tuples),
        "good_classes": str(report.good_classes),
        "equivalent_good_pairs": str(report.equivalent_good_pairs),
        "f_power_sum": str(report.f_power_sum),
        "cauchy_schwarz_ok": report.cauchy_schwarz_ok,
        "f_bound_ok": report.f_bound_ok,
        "ok": report.ok,
    }


def _check_lemma_3_1(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    prof = cn.f_profile(E, cfg.budget)
    result = cn.moment_lift_check(prof.values, cfg.k)
    return {
        "check": "lemma-3.1",
        "c_k": str(result.c_k),
        "lhs": _frac_str(result.lhs),
        "rhs": _frac_str(result.rhs),
        "mean": _frac_str(result.mean),
        "max": _frac_str(result.maximum),
        "excess": _frac_str(result.excess),
        "ok": result.ok and result.excess >= 0,
    }


def _check_theorem_6_1(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    report = cn.mbad_class_size_check(cfg.spec, cfg.k, cfg.budget)
    return {
        "check": "theorem-6.1",
        "good_classes": str(report.good_classes),
        "good_tuples": str(report.good_tuples),
        "group_order": str(report.group_order),
        "good_free_action_ok": report.good_free_action_ok,
        "levels": [
            {
                "m": str(lvl.m),
                "class_count": str(lvl.class_count),
                "tuple_count": str(lvl.tuple_count),
                "min_class_size": str(lvl.min_class_size),
                "size_bound": str(lvl.size_bound),
                "count_shape": _frac_str(lvl.count_shape),
                "count_constant": _frac_str(lvl.count_constant),
                "size_ok": lvl.size_ok,
            }
            for lvl in report.levels
        ],
        "ok": report.ok,
    }


def min_rotation_orbit(E: cn.PointSet, k: int, rotations, budget: int) -> int:
    """Smallest orbit of a tuple of E^{k+1} under the rotation group."""
    n = len(E)
    cn._check_budget(n ** (k + 1) * len(rotations), budget)
    spec = E.spec
    best = None
    for t in itertools.product(E.points, repeat=k + 1):
        size = len({apply_config(spec, g, t) for g in rotations})
        if best is None or size < best:
            best = size
    return best or 0


def _check_sharpness(cfg: ExperimentConfig, E: cn.PointSet) -> dict:
    spec = cfg.spec
    kind = cfg.construction.get("kind")
    out: dict = {"check": "sharpness", "kind": kind, "set_size": str(len(E))}
    report = cn.count_classes(E, cfg.k, cfg.budget)
    bad_tuples = sum(c for m, c in report.tuples_by_level.items() if m >= 1)
    out["total_tuples"] = str(report.total_tuples)
    out["bad_tuples"] = str(bad_tuples)
    out["total_classes"] = str(report.total_classes)
    if kind == "mod-sharpness":
        expected_size = spec.p ** (2 * spec.ell - 1)
        out["expected_size"] = str(expected_size)
        out["ok"] = len(E) == expected_size and bad_tuples == report.total_tuples
        return out
    rotations = cons.rotation_group(spec)
    closed = all(
        apply_mat(spec, g, x) in E.members for g in rotations for x in E.points
    )
    min_orbit = min_rotation_orbit(E, cfg.k, rotations, cfg.budget)
    out["rotation_group_size"] = str(len(rotations))
    out["min_orbit"] = str(min_orbit)
    out["rotation_closed"] = closed
    out["ok"] = (
        closed
        and 2 * min_orbit >= len(rotations)
        and report.total_classes * min_orbit <= report.total_tuples
    )
    return out


_CHECKS = {
    "census": _check_census,
    "nu": _check_nu,
    "f-moments": _check_f_moments,
    "lemma-2.2": _check_lemma_2_2,
    "lemma-2.3": _check_lemma_2_3,
    "lemma-2.4": _check_lemma_2_4,
    "lemma-3.1": _check_lemma_3_1,
    "lemma-4.1": _check_lemma_4_1,
    "lemma-4.2": _check_lemma_4_2,
    "theorem-6.1": _check_theorem_6_1,
    "sharpness": _check_sharpness,
}


def run_experiment(cfg: ExperimentConfig) -> dict:
    E = cfg.point_set()
    results = [_CHECKS[name](cfg, E) for name in cfg.checks]
    return {
        "ring": cfg.spec.to_json(),
        "construction": cfg.construction,
        "k": cfg.k,
        "set_size": str(len(E)),
        "checks": results,
        "ok": all(r["ok"] for r in results),
    }


def _report_text(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    # flat CSV: one row per scalar detail, nested values as compact JSON
    lines = ["check,key,value"]
    for chk in report["checks"]:
        name = chk["check"]
        for key in sorted(chk):
            if key == "check":
                continue
            val = chk[key]
            if isinstance(val, (dict, list)):
                val = json.dumps(val, sort_keys=True)
            val = str(val).replace('"', '""')
            lines.append(f'{name},{key},"{val}"')
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_check_lines(report: dict, label: str = "") -> None:
    for chk in report["checks"]:
        status = "PASS" if chk["ok"] else "FAIL"
        print(f"{label}{chk['check']}: {status}", file=sys.stderr)


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_run(args) -> int:
    try:
        with open(args.config) as fh:
            cfg = ExperimentConfig.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, InvalidConfig, ValueError) as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        report = run_experiment(cfg)
    except InvalidConfig as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except cn.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(_report_text(report, cfg.fmt), args.output or cfg.output)
    _print_check_lines(report)
    return EXIT_OK if report["ok"] else EXIT_CHECK_FAILED


def cmd_sweep(args) -> int:
    try:
        with open(args.config) as fh:
            obj = json.load(fh)
        base = dict(obj["experiment"])
        base.setdefault("checks", ["census"])
        variable = obj["variable"]
        values = list(obj["values"])
        seeds = list(obj.get("seeds", [0]))
        if variable not in ("size", "k", "ell"):
            raise InvalidConfig(f"unknown sweep variable {variable!r}")
        if not values or not seeds:
            raise InvalidConfig("values and seeds must be nonempty")
    except (OSError, json.JSONDecodeError, InvalidConfig, KeyError, ValueError) as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return EXIT_INVALID

    rows = ["variable,value,seed,set_size,classes,plane_classes,proportion"]
    plane_cache: dict = {}
    try:
        for value in values:
            for seed in seeds:
                exp = json.loads(json.dumps(base))
                if variable == "size":
                    exp.setdefault("construction", {"kind": "random-subset"})
                    exp["construction"]["size"] = value
                    exp["construction"]["seed"] = seed
                elif variable == "k":
                    exp["k"] = value
                    if exp.get("construction", {}).get("kind") == "random-subset":
                        exp["construction"]["seed"] = seed
                else:
                    exp["ring"] = dict(exp["ring"], ell=value)
                    if exp.get("construction", {}).get("kind") == "random-subset":
                        exp["construction"]["seed"] = seed
                cfg = ExperimentConfig.from_json(exp)
                E = cfg.point_set()
                classes = cn.count_classes(E, cfg.k, cfg.budget).total_classes
                cache_key = (cfg.spec, cfg.k)
                if cache_key not in plane_cache:
                    plane = cons.full_plane(cfg.spec)
                    plane_cache[cache_key] = cn.count_classes(
                        plane, cfg.k, cfg.budget
                    ).total_classes
                plane_classes = plane_cache[cache_key]
                proportion = Fraction(classes, plane_classes)
                rows.append(
                    f"{variable},{value},{seed},{len(E)},{classes},"
                    f"{plane_classes},{float(proportion)!r}"
                )
    except InvalidConfig as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except cn.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit("\n".join(rows) + "\n", args.output)
    return EXIT_OK


def _ring_jsons() -> dict[str, dict]:
    return {
        "F3": {"family": "prime-field", "p": 3},
        "F5": {"family": "prime-field", "p": 5},
        "F7": {"family": "prime-field", "p": 7},
        "F9": {"family": "galois-field", "p": 3, "e": 2},
        "Z9": {"family": "mod-prime-power", "p": 3, "ell": 2},
        "Z27": {"family": "mod-prime-power", "p": 3, "ell": 3},
        "Z25": {"family": "mod-prime-power", "p": 5, "ell": 2},
    }


FULL = {"kind": "full-plane"}
SAMPLE20 = {"kind": "random-subset", "size": 20, "seed": 1}


def canonical_matrix(budget: int) -> list[ExperimentConfig]:
    """The documented verify-all matrix: every (ring, k) cell of
    {F3,F5,F7,F9,Z9,Z27,Z25} x {1,2,3} runs at least one check, with the
    heavyweight full-plane censuses confined to cells where the tuple
    stream stays at desk scale; large rings get seeded random subsets."""
    R = _ring_jsons()
    cells: list[tuple[dict, int, dict, list[str]]] = []
    for name in R:
        cells.append((R[name], 1, FULL, ["lemma-4.2", "nu", "census"]))
    cells += [
        (R["F3"], 1, FULL, ["lemma-4.1", "f-moments", "lemma-3.1", "lemma-2.2",
                            "lemma-2.3", "lemma-2.4"]),
        (R["F5"], 1, FULL, ["lemma-4.1", "lemma-3.1", "lemma-2.3", "lemma-2.4"]),
        (R["F7"], 1, FULL, ["lemma-3.1"]),
        (R["F9"], 1, FULL, ["lemma-3.1"]),
        (R["Z9"], 1, FULL, ["lemma-3.1", "lemma-2.3", "theorem-6.1"]),
        (R["Z27"], 1, FULL, ["theorem-6.1"]),
        (R["Z25"], 1, FULL, ["theorem-6.1"]),
        # k = 2
        (R["F3"], 2, FULL, ["census", "lemma-2.2", "lemma-2.3", "lemma-2.4"]),
        (R["F5"], 2, FULL, ["census", "lemma-2.3", "lemma-2.4"]),
        (R["F7"], 2, FULL, ["census"]),
        (R["F9"], 2, FULL, ["census"]),
        (R["Z9"], 2, FULL, ["census", "lemma-2.3", "theorem-6.1"]),
        (R["Z27"], 2, SAMPLE20, ["census", "lemma-2.4"]),
        (R["Z25"], 2, SAMPLE20, ["census", "lemma-2.4"]),
        # k = 3
        (R["F3"], 3, FULL, ["census", "lemma-2.3"]),
        (R["F5"], 3, FULL, ["census", "lemma-2.3"]),
        (R["F7"], 3, SAMPLE20, ["census", "lemma-2.4"]),
        (R["F9"], 3, SAMPLE20, ["census", "lemma-2.4"]),
        (R["Z9"], 3, SAMPLE20, ["census", "lemma-2.4"]),
        (R["Z27"], 3, SAMPLE20, ["census"]),
        (R["Z25"], 3, SAMPLE20, ["census"]),
        # sharpness constructions
        (R["F3"], 1, {"kind": "union-circles", "radii": [1]}, ["sharpness"]),
        (R["F5"], 1, {"kind": "union-circles", "radii": [1, 4]}, ["sharpness"]),
        (R["F5"], 2, {"kind": "union-circles", "radii": [1, 4]}, ["sharpness"]),
        (R["Z9"], 1, {"kind": "mod-sharpness"}, ["sharpness"]),
        (R["Z9"], 2, {"kind": "mod-sharpness"}, ["sharpness"]),
    ]
    return [
        ExperimentConfig.from_json(
            {"ring": ring, "k": k, "construction": con, "checks": checks,
             "budget": budget}
        )
        for ring, k, con, checks in cells
    ]


def cmd_verify_all(args) -> int:
    threads = args.threads or int(os.environ.get(DEFAULT_THREADS_ENV, "1"))
    if args.budget <= 0:
        print(f"budget exceeded: no check fits in a budget of {args.budget}", file=sys.stderr)
        return EXIT_BUDGET
    try:
        cfgs = canonical_matrix(args.budget)
    except InvalidConfig as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(run_experiment, cfgs))
        else:
            results = [run_experiment(cfg) for cfg in cfgs]
    except cn.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    report = {"experiments": results, "ok": all(r["ok"] for r in results)}
    _emit(_report_text_verify(report), args.output)
    for cfg, res in zip(cfgs, results):
        label = f"{cfg.spec.label()} k={cfg.k} {cfg.construction['kind']} "
        _print_check_lines(res, label)
    return EXIT_OK if report["ok"] else EXIT_CHECK_FAILED


def _report_text_verify(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="areal",
        description="Area-signature equivalence experiments over finite rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a declarative experiment config")
    p_run.add_argument("config")
    p_run.add_argument("--output", default=None)
    p_run.set_defaults(func=cmd_run)

    p_sweep = sub.add_parser("sweep", help="sweep a variable, emit plot-ready CSV")
    p_sweep.add_argument("config")
    p_sweep.add_argument("--output", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    p_all = sub.add_parser("verify-all", help="run the canonical verification matrix")
    p_all.add_argument("--budget", type=int, default=cn.DEFAULT_BUDGET)
    p_all.add_argument("--threads", type=int, default=None)
    p_all.add_argument("--output", default=None)
    p_all.set_defaults(func=cmd_verify_all)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
