import pytest

from a2zeta.complexes import validate
from a2zeta.errors import IndexOutOfRange, ParseError, PresentationInvalid, UnsupportedOrder
from a2zeta.fileio import (
    parse_complex,
    parse_presentation,
    serialize_complex,
    serialize_presentation,
)
from a2zeta.gf import GF
from a2zeta.operators import vertex_hecke
from a2zeta.planes import build_plane
from a2zeta.presentations import (
    TrianglePresentation,
    complex_from_presentation,
    search_triangle_presentations,
)


def test_plane_counts_q2():
    plane = build_plane(2)
    assert len(plane.points) == 7 and len(plane.lines) == 7
    assert all(len(L) == 3 for L in plane.lines)


def test_plane_counts_q3():
    plane = build_plane(3)
    assert len(plane.points) == 13
    assert all(len(L) == 4 for L in plane.lines)


def test_unsupported_order():
    with pytest.raises(UnsupportedOrder):
        build_plane(6)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
def test_supported_order_planes(q):
    plane = build_plane(q)  # axioms checked exhaustively inside
    assert len(plane.points) == q * q + q + 1
    assert all(sum(row) == q + 1 for row in plane.incidence)


@pytest.mark.parametrize("q", [4, 8, 9])
def test_field_tables(q):
    F = GF(q)
    for a in F.elements():
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # spot-check associativity and distributivity
    for a in (1, 2, 3):
        for b in (1, 3, q - 1):
            for c in (2, q - 2):
                assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_search_finds_presentation_q2():
    plane = build_plane(2)
    found = search_triangle_presentations(plane, limit=1, seed=0)
    assert len(found) == 1
    assert len(found[0].triples) == 21


def test_search_limit_zero():
    plane = build_plane(2)
    assert search_triangle_presentations(plane, limit=0, seed=0) == []


def test_search_deterministic():
    plane = build_plane(2)
    a = search_triangle_presentations(plane, limit=2, seed=0)
    b = search_triangle_presentations(plane, limit=2, seed=0)
    assert [(p.lam, p.triples) for p in a] == [(p.lam, p.triples) for p in b]
    c = search_triangle_presentations(plane, limit=2, seed=5)
    d = search_triangle_presentations(plane, limit=2, seed=5)
    assert [(p.lam, p.triples) for p in c] == [(p.lam, p.triples) for p in d]


def test_presentation_invariants_reverified():
    plane = build_plane(2)
    tp = search_triangle_presentations(plane, limit=1, seed=0)[0]
    for x, y, z in tp.triples:
        assert (y, z, x) in tp.triples
    # breaking a triple must be rejected by the constructor
    triples = set(tp.triples)
    bad = triples.pop()
    with pytest.raises(PresentationInvalid):
        TrianglePresentation(plane, tp.lam, frozenset(triples))


def test_complex_from_presentation_structure(bundled_cx):
    assert bundled_cx.n_vertices == 3
    assert bundled_cx.n_edges == 21
    assert bundled_cx.n_chambers == 21
    a1, _ = vertex_hecke(bundled_cx)
    dense = a1.to_dense()
    # every type-1 edge goes i -> i+1 with the full multiplicity 7
    assert dense == [[0, 7, 0], [0, 0, 7], [7, 0, 0]]


def test_search_results_all_validate():
    for q in (2, 3):
        plane = build_plane(q)
        for tp in search_triangle_presentations(plane, limit=2, seed=0):
            cx = complex_from_presentation(tp)
            assert validate(cx).passed


def test_complex_round_trip(bundled_cx):
    text = serialize_complex(bundled_cx)
    assert parse_complex(text) == bundled_cx


def test_presentation_round_trip():
    plane = build_plane(2)
    tp = search_triangle_presentations(plane, limit=1, seed=0)[0]
    text = serialize_presentation(tp)
    tp2 = parse_presentation(text)
    assert tp2.lam == tp.lam and tp2.triples == tp.triples


def test_parse_error_bad_q():
    with pytest.raises(ParseError) as err:
        parse_complex("a2complex v1\nq 0\nvertices 1\n")
    assert err.value.line == 2


def test_parse_error_dangling_edge_id(bundled_cx):
    text = serialize_complex(bundled_cx)
    first_chamber = next(
        ln for ln in text.splitlines() if ln.startswith("chamber ")
    )
    broken = text.replace(first_chamber, "chamber 0 7 999", 1)
    with pytest.raises(IndexOutOfRange):
        parse_complex(broken)


def test_bundled_files_regenerate(bundled_cx):
    """Golden data is reproduced byte-for-byte by the search."""
    from conftest import bundled_text

    plane = build_plane(2)
    tp = search_triangle_presentations(plane, limit=1, seed=0)[0]
    assert serialize_presentation(tp) == bundled_text("bundled_q2.tp")
    assert serialize_complex(complex_from_presentation(tp)) == bundled_text(
        "bundled_q2.cx3"
    )
