"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance and time budget is pinned here.
"""

import time

import numpy as np
import pytest

from a2zeta.building import verify_geodesic_criterion, verify_tamagawa
from a2zeta.complexes import validate
from a2zeta.enumeration import (
    count_galleries,
    count_type1_geodesics,
    enumerate_galleries,
    gallery_boundary,
)
from a2zeta.graphs import (
    complete_graph,
    count_closed_walks,
    edge_adjacency,
    ihara_zeta,
    petersen_graph,
    random_irregular_graph,
    random_regular_graph,
)
from a2zeta.operators import chamber_operator, edge_operator
from a2zeta.polyint import newton_power_sums, series_log_derivative
from a2zeta.satake import (
    sigma,
    transform_a1,
    transform_a2,
    verify_recursion_42,
    verify_sigma3_identity,
)
from a2zeta.zeta import (
    check_main_identity,
    check_series_identity,
    one_minus_cube,
    ramanujan_check,
    zeta_bundle,
    zeta_functions,
)


def report(number, name, passed=True):
    print(f"ACCEPTANCE {number:2d} {name}: {'PASS' if passed else 'FAIL'}")
    assert passed


def test_criterion_01_main_identity(bundled_cx, q3_cx):
    for cx in (bundled_cx, q3_cx):
        start = time.monotonic()
        ok, residual = check_main_identity(cx)
        elapsed = time.monotonic() - start
        assert ok and residual.is_zero()
        assert elapsed < 60.0
    report(1, "main determinant identity (q=2 bundled, q=3 searched)")


def test_criterion_02_graph_baseline():
    start = time.monotonic()
    graphs = [complete_graph(4), petersen_graph()]
    graphs += [random_regular_graph(8, 3, seed=s) for s in range(10)]
    for g in graphs:
        ihara_zeta(g)  # asserts exact equality of the two forms
    for g in (complete_graph(4), petersen_graph()):
        ae = edge_adjacency(g)
        for n in range(1, 9):
            assert count_closed_walks(g, n) == ae.trace_power(n)
    for s in range(10):
        ihara_zeta(random_irregular_graph(9, seed=s))
    assert time.monotonic() - start < 30.0
    report(2, "graph zeta baseline, exact on 22 graphs")


def test_criterion_03_tamagawa_recursion():
    start = time.monotonic()
    for q in (2, 3):
        assert verify_tamagawa(q, 4, 5)
    assert time.monotonic() - start < 120.0
    report(3, "Hecke inversion recursion, q in {2,3}, degree 4, radius 5")


def test_criterion_04_spherical_recursion():
    start = time.monotonic()
    for q in (2, 3, 5):
        ok, _ = verify_recursion_42(q, 6)
        assert ok
    ok, _ = verify_sigma3_identity(8)
    assert ok
    for q in (2, 3, 5):
        assert transform_a1(q) == q * sigma(1, 1)
        assert transform_a2(q) == q * sigma(2, 2)
    assert time.monotonic() - start < 10.0
    report(4, "spherical-transform recursion, q in {2,3,5}")


def test_criterion_05_gallery_trace_theorem(bundled_cx):
    lb = chamber_operator(bundled_cx)
    for length in (3, 6, 9):
        assert count_galleries(bundled_cx, length) == lb.trace_power(length)
    for m in (1, 2, 4, 5, 7, 8):
        assert lb.trace_power(m) == 0
    pb = zeta_bundle(bundled_cx).pb
    assert all(c == 0 for i, c in enumerate(pb.coeffs) if i % 3)
    report(5, "gallery counts equal chamber-operator traces")


def test_criterion_06_edge_zeta(bundled_cx):
    le = edge_operator(bundled_cx)
    traces = [le.trace_power(n) for n in range(1, 11)]
    for n in range(1, 9):
        assert count_type1_geodesics(bundled_cx, n) == traces[n - 1]
    b = zeta_bundle(bundled_cx)
    assert newton_power_sums(b.pe, 10) == traces
    z1 = zeta_functions(bundled_cx, b)["Z1"]
    series = series_log_derivative(z1, 10)
    assert [series.coeffs[n] for n in range(1, 11)] == traces
    report(6, "edge zeta traces: DFS, Newton identities, log derivative")


def test_criterion_07_boundary_structure(bundled_cx):
    for length, cycle_count in ((6, 2), (9, 1)):
        galleries = enumerate_galleries(bundled_cx, length)
        assert galleries
        for g in galleries:
            cycles = gallery_boundary(bundled_cx, g)
            assert len(cycles) == cycle_count
            want = length // 2 if length % 2 == 0 else length
            assert all(len(c) == want for c in cycles)
    report(7, "gallery boundaries: exhaustive at lengths 6 and 9")


def test_criterion_08_trivial_factor_divisibility(corpus):
    for cx in corpus:
        assert validate(cx).passed
        q = cx.q
        b = zeta_bundle(cx)
        product = one_minus_cube(1) * one_minus_cube(q**3) * one_minus_cube(q**6)
        assert product.divides(b.dvertex)
    report(8, "vertex determinant divisible by its trivial factors")


def test_criterion_09_series_identity(bundled_cx):
    rep = check_series_identity(bundled_cx, 12)
    assert rep.passed
    assert all(isinstance(c, int) and c >= 0 for c in rep.type1_traces)
    report(9, "log-derivative series identity to order 12")


def test_criterion_10_group_zeta_identities(bundled_cx):
    b = zeta_bundle(bundled_cx)
    zf = zeta_functions(bundled_cx, b)
    assert zf["Zminus"] * zf["Z2"].substitute_neg() == zf["Z1"].substitute_power(2)
    from a2zeta.polyint import RationalFunction

    lhs = RationalFunction(one_minus_cube() ** b.chi, b.dvertex)
    assert lhs == zf["Z1"] * zf["Zminus"]
    coeffs = series_log_derivative(zf["Zminus"], 18).integer_coeffs()
    assert all(c >= 0 for c in coeffs)
    report(10, "negative-type zeta identities and nonnegative counts")


def test_criterion_11_geodesic_criterion():
    start = time.monotonic()
    for n in (1, 2, 3):
        assert verify_geodesic_criterion(2, n, 4)
    assert time.monotonic() - start < 60.0
    report(11, "building geodesic criterion, q=2, n <= 3")


def test_criterion_12_spectral_classification(bundled_cx):
    rep = ramanujan_check(bundled_cx, tol=1e-6)
    assert rep.verdict == "RAMANUJAN"
    trivial = [r for r in rep.vertex_roots if r.label == "trivial"]
    assert len(trivial) == 9
    targets = [
        m * np.exp(2j * np.pi * k / 3)
        for m in (1.0, 0.5, 0.25)
        for k in range(3)
    ]
    for rec in trivial:
        assert min(abs(rec.value - t) for t in targets) < 1e-9
    assert all(r.label != "unclassified" for r in rep.pe_roots)
    for rec in rep.pe_roots:
        refs = [0.5, 2**-0.5] + rep.pe_reference_moduli
        assert min(abs(rec.modulus - m) for m in refs) < 1e-6
    report(12, "spectral classification: trivial zeros and RH criterion")
