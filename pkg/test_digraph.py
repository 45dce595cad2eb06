import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ginv.digraph import (
    analyze_matrix,
    build_digraph,
    pendant_neighbors,
    require_class_d,
    structure_class,
)
from ginv.errors import ClassViolation, DimensionMismatch, VertexOutOfRange
from ginv.linalg import RMatrix
from ginv.models import InputClass
from ginv.tasks.generators import GeneratorParams, generate


def test_ten_vertex_structure(ten_vertex):
    d = build_digraph(ten_vertex)
    assert d.simple_symmetric
    assert d.pendants == frozenset({5, 6, 7, 8, 9, 10})
    assert pendant_neighbors(d, 1) == [5, 6]
    assert pendant_neighbors(d, 3) == [8, 9]
    report = analyze_matrix(ten_vertex)
    assert report.in_class_d and report.strongly_connected
    assert report.nonpendant_set == [1, 2, 3, 4]
    assert report.k == 4
    assert not report.is_star and not report.is_corona
    assert structure_class(report) == InputClass.OTHER_IN_D


def test_deleting_pendant_ten_leaves_class_d(ten_vertex):
    # D2: vertex 4 keeps only non-pendant neighbours
    rows = [r[:9] for r in ten_vertex.rows()[:9]]
    report = analyze_matrix(RMatrix(rows))
    assert report.simple_symmetric
    assert not report.in_class_d
    assert report.pendant_neighbors[4] == []


def test_star_and_its_centre(two_example_b):
    report = analyze_matrix(two_example_b)
    assert report.is_star and report.center == 1
    assert not report.is_corona
    assert structure_class(report) == InputClass.STAR


def test_corona(corona4):
    report = analyze_matrix(corona4)
    assert report.is_corona and not report.is_star
    assert report.pendant_set == [3, 4]


def test_two_vertex_tie_break():
    report = analyze_matrix(RMatrix([[0, 2], [3, 0]]))
    assert report.is_star and report.center == 1
    assert not report.is_corona
    assert report.k == 0 and report.in_class_d


def test_ssd_is_simple_symmetric_but_not_class_d(ssd):
    report = analyze_matrix(ssd)
    assert report.simple_symmetric
    assert report.pendant_set == [4, 5]
    assert not report.in_class_d
    with pytest.raises(ClassViolation) as exc:
        require_class_d(ssd)
    assert exc.value.reason == "not_in_class_d"


def test_loops_and_one_way_edges():
    loop = analyze_matrix(RMatrix([[1, 1], [1, 0]]))
    assert loop.has_loops and not loop.simple_symmetric
    one_way = build_digraph(RMatrix([[0, 1, 0], [1, 0, 1], [0, 0, 0]]))
    assert not one_way.simple_symmetric
    assert one_way.neighbors(2) == frozenset({1})
    with pytest.raises(ClassViolation) as exc:
        require_class_d(RMatrix([[0, 1, 0], [1, 0, 1], [0, 0, 0]]))
    assert exc.value.reason == "not_simple_symmetric"


def test_disconnected_class_d_is_refused():
    # two separate 2-cycles
    a = RMatrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    report = analyze_matrix(a)
    assert report.in_class_d and not report.strongly_connected
    with pytest.raises(ClassViolation) as exc:
        require_class_d(a)
    assert exc.value.reason == "not_strongly_connected"


def test_errors():
    with pytest.raises(DimensionMismatch):
        build_digraph(RMatrix([[0, 1, 2]]))
    with pytest.raises(VertexOutOfRange):
        build_digraph(RMatrix([[0, 1], [1, 0]])).neighbors(3)


@settings(max_examples=30, deadline=None)
@given(
    family=st.sampled_from(["star", "corona", "classD"]),
    seed=st.integers(min_value=0, max_value=10**6),
    data=st.data(),
)
def test_structure_survives_relabelling(family, seed, data):
    a = generate(GeneratorParams(family=family), seed).matrix
    n = a.n_rows
    order = data.draw(st.permutations(list(range(1, n + 1))))
    new_label = {old: new for new, old in enumerate(order, start=1)}
    before = analyze_matrix(a)
    after = analyze_matrix(a.permute(order))

    assert after.pendant_set == sorted(new_label[p] for p in before.pendant_set)
    assert after.nonpendant_set == sorted(new_label[q] for q in before.nonpendant_set)
    assert after.pendant_neighbors == {
        new_label[q]: sorted(new_label[p] for p in ps) for q, ps in before.pendant_neighbors.items()
    }
    for flag in ("in_class_d", "is_star", "is_corona", "strongly_connected", "simple_symmetric", "k"):
        assert getattr(after, flag) == getattr(before, flag)
    if before.is_star and n > 2:
        assert after.center == new_label[before.center]
