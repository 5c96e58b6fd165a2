"""Exhaustive small-orientation sweeps and the end-to-end inequality pipeline.

Orientations on labeled vertices are indexed 0..3^C(n,2)-1: each vertex
pair contributes one base-3 digit (0 absent, 1 forward, 2 backward), so
sweeps partition cleanly across worker processes and every witness is
reproducible from its index.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .certify import check_point_exact
from .graphs import (
    OrientedGraph,
    build_bf,
    build_cf,
    build_f,
    has_independent_4set,
    has_induced_directed_c4,
    underlying,
)
from .lagrangian import WeightVector, lagrangian_bf, lagrangian_cf, uniform_weights
from .reduction import WeightedGraph, reduce_to_complete, trace_to_jsonable
from .simplex import closed_form, majorization_bound_check, trivariate_g

BOUND = Fraction(3, 32)


def pair_slots(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def orientation_from_index(n: int, index: int) -> OrientedGraph:
    """Decode one labeled orientation from its base-3 index."""
    arcs = []
    x = index
    for (u, v) in pair_slots(n):
        r = x % 3
        x //= 3
        if r == 1:
            arcs.append((u, v))
        elif r == 2:
            arcs.append((v, u))
    return OrientedGraph(n, arcs)


@dataclass
class EnumerationReport:
    n: int
    count: int
    max_cf_density: Fraction
    max_cf_density_witness: int
    max_uniform_lcf: Fraction
    max_uniform_lcf_witness: int
    violations: list = field(default_factory=list)
    wall_time_s: float = 0.0

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "count": self.count,
            "max_cf_density": str(self.max_cf_density),
            "max_cf_density_witness": {
                "index": self.max_cf_density_witness,
                "arcs": orientation_from_index(self.n, self.max_cf_density_witness).sorted_arcs(),
            },
            "max_uniform_lcf": str(self.max_uniform_lcf),
            "max_uniform_lcf_witness": {
                "index": self.max_uniform_lcf_witness,
                "arcs": orientation_from_index(self.n, self.max_uniform_lcf_witness).sorted_arcs(),
            },
            "violations": self.violations,
            "wall_time_s": self.wall_time_s,
        }


def _enumerate_range(n: int, start: int, stop: int):
    """Check one index range; returns partial aggregates."""
    from math import comb

    n_triples = comb(n, 3)
    w = uniform_weights(n)
    best_density = (Fraction(-1), -1)
    best_lcf = (Fraction(-1), -1)
    violations = []
    for idx in range(start, stop):
        g = orientation_from_index(n, idx)
        f = build_f(g)
        cf = build_cf(g)
        und = underlying(g)
        bf = build_bf(und)
        if f.triples & cf.triples or len(f) + len(cf) != n_triples:
            violations.append({"index": idx, "check": "partition"})
        if not cf.triples <= bf.triples:
            violations.append({"index": idx, "check": "containment"})
        lcf = lagrangian_cf(g, w).value
        lbf = lagrangian_bf(und, w).value
        if lcf > BOUND:
            violations.append({"index": idx, "check": "lcf_bound", "lcf": str(lcf)})
        if lcf > lbf:
            violations.append({"index": idx, "check": "step_inequality"})
        density = Fraction(len(cf), n_triples)
        if (density, -idx) > (best_density[0], -best_density[1]):
            best_density = (density, idx)
        if (lcf, -idx) > (best_lcf[0], -best_lcf[1]):
            best_lcf = (lcf, idx)
    return best_density, best_lcf, violations


def enumerate_orientations(n: int, threads: int = 1) -> EnumerationReport:
    """Sweep all 3^C(n,2) labeled orientations, 3 <= n <= 6.

    Per orientation: F/CF partition, CF within BF, uniform-weight
    L_CF <= 3/32 and L_CF <= L_BF, all exact.  Maxima are reported with
    the smallest achieving index as witness.
    """
    if not 3 <= n <= 6:
        raise ValueError("enumeration supports 3 <= n <= 6")
    total = 3 ** len(pair_slots(n))
    t0 = time.perf_counter()
    if threads <= 1:
        parts = [_enumerate_range(n, 0, total)]
    else:
        chunk = -(-total // threads)
        spans = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_enumerate_range, *zip(*((n, a, b) for a, b in spans))))
    best_density = (Fraction(-1), -1)
    best_lcf = (Fraction(-1), -1)
    violations = []
    for bd, bl, viol in parts:
        if (bd[0], -bd[1]) > (best_density[0], -best_density[1]):
            best_density = bd
        if (bl[0], -bl[1]) > (best_lcf[0], -best_lcf[1]):
            best_lcf = bl
        violations.extend(viol)
    return EnumerationReport(
        n=n,
        count=total,
        max_cf_density=best_density[0],
        max_cf_density_witness=best_density[1],
        max_uniform_lcf=best_lcf[0],
        max_uniform_lcf_witness=best_lcf[1],
        violations=violations,
        wall_time_s=time.perf_counter() - t0,
    )


def _fdf_range(n: int, start: int, stop: int):
    c4_free = 0
    counterexamples = []
    for idx in range(start, stop):
        g = orientation_from_index(n, idx)
        found, _ = has_induced_directed_c4(g)
        if found:
            continue
        c4_free += 1
        indep, quad = has_independent_4set(build_f(g))
        if indep:
            counterexamples.append(
                {"index": idx, "arcs": g.sorted_arcs(), "independent_4set": list(quad)}
            )
    return c4_free, counterexamples


def validate_fdf_family(n: int, threads: int = 1) -> dict:
    """Check that C4-free orientations give 3-graphs with no independent 4-set.

    Sweeps every labeled orientation on 4 <= n <= 5 vertices without an
    induced directed 4-cycle and asserts the triple construction leaves
    no empty 4-set; counterexamples (none expected) are reported verbatim.
    """
    if not 4 <= n <= 5:
        raise ValueError("family validation supports 4 <= n <= 5")
    total = 3 ** len(pair_slots(n))
    t0 = time.perf_counter()
    if threads <= 1:
        parts = [_fdf_range(n, 0, total)]
    else:
        chunk = -(-total // threads)
        spans = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_fdf_range, *zip(*((n, a, b) for a, b in spans))))
    c4_free = sum(p[0] for p in parts)
    counterexamples = [c for p in parts for c in p[1]]
    return {
        "n": n,
        "count": total,
        "c4_free_count": c4_free,
        "counterexamples": counterexamples,
        "wall_time_s": time.perf_counter() - t0,
    }


def pipeline_report(g: OrientedGraph, w: WeightVector) -> dict:
    """Run the whole inequality chain on one instance, re-checking each link exactly.

    Chain: L_CF <= L_BF <= L_BF(final complete) = closed form
           <= trivariate bound at the sorted final weights <= 3/32.
    """
    lcf = lagrangian_cf(g, w).value
    und = underlying(g)
    lbf = lagrangian_bf(und, w).value
    final, trace = reduce_to_complete(WeightedGraph(und, w))
    lfinal = lagrangian_bf(final.graph, final.weights).value
    closed = closed_form(list(final.weights))
    wsorted = sorted(final.weights, reverse=True)
    while len(wsorted) < 3:
        wsorted.append(Fraction(0))
    x1, x2, x3 = wsorted[0], wsorted[1], wsorted[2]
    major_ok = majorization_bound_check(wsorted)
    gval = trivariate_g(x1, x2, x3)
    hval = check_point_exact(x1, x2, x3)

    links = [
        ("lcf_le_lbf", lcf <= lbf),
        ("lbf_le_final", lbf <= lfinal),
        ("final_eq_closed_form", lfinal == closed),
        ("closed_form_le_trivariate", major_ok and closed <= gval),
        ("trivariate_le_3_32", hval >= 0),
    ]
    return {
        "lagrangian_cf": str(lcf),
        "lagrangian_bf": str(lbf),
        "reduction_trace": trace_to_jsonable(trace),
        "final_order": final.graph.n,
        "final_weights": [str(v) for v in final.weights],
        "closed_form_value": str(closed),
        "trivariate_point": [str(x1), str(x2), str(x3)],
        "trivariate_value": str(gval),
        "h_at_point": str(hval),
        "bound": str(BOUND),
        "links": [{"name": name, "pass": ok} for name, ok in links],
        "all_pass": all(ok for _, ok in links),
    }


def run_pipeline(graph_path: str, weights_path: str) -> dict:
    """File-based front end for pipeline_report (digraph input)."""
    from .fileio import parse_graph, parse_weights

    g = parse_graph(graph_path)
    if not isinstance(g, OrientedGraph):
        raise ValueError("pipeline expects a digraph input")
    w = parse_weights(weights_path, expected_n=g.n)
    return pipeline_report(g, w)
