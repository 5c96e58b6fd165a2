from fractions import Fraction

import pytest

from trilag.graphs import OrientedGraph, has_induced_directed_c4
from trilag.harness import (
    enumerate_orientations,
    orientation_from_index,
    pipeline_report,
    validate_fdf_family,
)
from trilag.lagrangian import WeightVector, uniform_weights


def test_orientation_index_roundtrip():
    seen = set()
    for idx in range(27):
        g = orientation_from_index(3, idx)
        seen.add(g.sorted_arcs() and tuple(g.sorted_arcs()) or ())
    assert len(seen) == 27


def test_enumerate_n3():
    report = enumerate_orientations(3)
    assert report.count == 27
    assert report.violations == []
    # a single cherry fills the only triple: density 1 is attained
    assert report.max_cf_density == 1
    assert report.max_uniform_lcf <= Fraction(3, 32)


def test_enumerate_n4():
    report = enumerate_orientations(4)
    assert report.count == 729
    assert report.violations == []
    witness = orientation_from_index(4, report.max_uniform_lcf_witness)
    assert witness.n == 4


def test_enumerate_threads_agree():
    a = enumerate_orientations(3, threads=1)
    b = enumerate_orientations(3, threads=2)
    ja, jb = a.to_jsonable(), b.to_jsonable()
    ja.pop("wall_time_s"), jb.pop("wall_time_s")
    assert ja == jb


def test_enumerate_range_errors():
    with pytest.raises(ValueError):
        enumerate_orientations(2)
    with pytest.raises(ValueError):
        enumerate_orientations(7)


def test_validate_fdf_n4():
    report = validate_fdf_family(4)
    assert report["count"] == 729
    assert report["counterexamples"] == []
    assert 0 < report["c4_free_count"] < 729


def test_validate_fdf_skips_c4_orientations():
    # the pure directed 4-cycle must be filtered out, not counted
    c4 = OrientedGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert has_induced_directed_c4(c4)[0]
    report = validate_fdf_family(4)
    total_with_c4 = report["count"] - report["c4_free_count"]
    assert total_with_c4 > 0


def test_validate_fdf_range_errors():
    with pytest.raises(ValueError):
        validate_fdf_family(3)
    with pytest.raises(ValueError):
        validate_fdf_family(6)


def test_pipeline_cherry_chain():
    g = OrientedGraph(3, [(0, 1), (2, 1)])
    report = pipeline_report(g, uniform_weights(3))
    assert report["lagrangian_cf"] == "2/27"
    assert report["lagrangian_bf"] == "7/81"
    assert report["all_pass"]
    assert [l["pass"] for l in report["links"]] == [True] * 5


def test_pipeline_empty_digraph():
    report = pipeline_report(OrientedGraph(4, []), uniform_weights(4))
    assert report["lagrangian_cf"] == "0"
    assert report["lagrangian_bf"] == "0"
    assert report["closed_form_value"] == "0"
    assert report["all_pass"]


def test_pipeline_single_arc_k2():
    g = OrientedGraph(2, [(0, 1)])
    report = pipeline_report(g, WeightVector([Fraction(1, 2), Fraction(1, 2)]))
    assert report["lagrangian_cf"] == "1/16"
    assert report["lagrangian_bf"] == "3/32"
    assert report["reduction_trace"] == []
    assert report["all_pass"]
