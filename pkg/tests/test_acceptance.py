"""Acceptance suite: every criterion at its stated size, exact tolerances.

Each test prints one PASS/FAIL line per criterion (run with -s or look at
captured output).  All assertions are exact: set equality of polyhedral
regions, exact rational arithmetic, zero-failure property batches.
"""

import time

import pytest

from tropreal.checks import (
    check_basis,
    check_circle_exact,
    check_complement,
    check_connectivity,
    check_cubic_facts,
    check_fp_lemma,
    check_halfplane_density,
    check_hyperfield_axioms,
    check_intersection_recession,
    check_lift,
    check_morphism,
    check_orthant_remark,
)

SEED = 20260810


def _report(number: int, label: str, outcome) -> None:
    status = "PASS" if outcome.passed else "FAIL"
    print(f"criterion {number:2d} [{status}] {label}")
    for line in outcome.details:
        print(f"    {line}")
    assert outcome.passed, f"criterion {number} failed: {outcome.details}"


def test_criterion_01_circle_single_point_and_segments():
    out = check_circle_exact(SEED, attempts=10000)
    _report(1, "disk: single tropical point, exact two-segment region", out)


def test_criterion_02_halfplane_region_and_witnesses():
    out = check_halfplane_density(
        SEED, n_members=1000, n_region_points=100, budget=1000
    )
    _report(2, "halfplane: exact region, members inside, witnesses found", out)


def test_criterion_03_cubic_isolated_point_and_segment():
    out = check_cubic_facts(SEED, attempts=10000)
    _report(3, "cubic: isolated point witnessed, spurious segment barren", out)


def test_criterion_04_hyperfield_axioms():
    out = check_hyperfield_axioms(SEED, size=10000, small=1000)
    _report(4, "hyperfield axiom batches, zero failures", out)


def test_criterion_05_morphism():
    out = check_morphism(SEED, size=10000)
    _report(5, "signed-value morphism on random series pairs", out)


def test_criterion_06_complement():
    out = check_complement(SEED, instances=50, points=1000)
    _report(6, "complement of closed unions, membership XOR", out)


def test_criterion_07_fp_lemma():
    out = check_fp_lemma(SEED, instances=50, points=1000)
    _report(7, "open polyhedron == positive region, pointwise", out)


def test_criterion_08_lift():
    out = check_lift(SEED, pairs=20, n_verify=500)
    _report(8, "lifted inequalities: exact tropicalization, fresh samples", out)


def test_criterion_09_finite_basis():
    out = check_basis(SEED)
    _report(9, "finite basis cuts the target set exactly", out)


def test_criterion_10_orthant_remark():
    out = check_orthant_remark(SEED, count=100)
    _report(10, "negative regions confined to the open positive orthant", out)


def test_criterion_11_intersection_recession():
    t0 = time.time()
    out = check_intersection_recession(SEED)
    took = time.time() - t0
    out.add(took < 10.0, f"both runs together took {took:.2f}s")
    _report(11, "intersection family: bounded vs infinite rays", out)


def test_criterion_12_connectivity():
    out = check_connectivity(SEED)
    _report(12, "adjacency graphs of outer regions connected", out)
