import pytest

from ginv.digraph import analyze_matrix, structure_class
from ginv.errors import GenerationError
from ginv.models import InputClass
from ginv.tasks.generators import GeneratorParams, generate, generate_family
from ginv.tasks.sweep import sweep


def test_generation_is_deterministic():
    params = GeneratorParams(family="classD")
    first = [i.matrix for i in generate_family(params, seed=11, count=5)]
    second = [i.matrix for i in generate_family(params, seed=11, count=5)]
    assert first == second
    assert generate(params, 11, 3).matrix == first[3]
    assert generate(params, 12, 0).matrix != first[0]


@pytest.mark.parametrize("family,expected", [
    ("star", InputClass.STAR),
    ("corona", InputClass.CORONA),
    ("classD", InputClass.OTHER_IN_D),
    ("singular", InputClass.OTHER_IN_D),
])
def test_families_have_the_right_shape(family, expected):
    for instance in generate_family(GeneratorParams(family=family), seed=3, count=15):
        report = analyze_matrix(instance.matrix)
        assert report.strongly_connected
        assert structure_class(report) == expected
        assert instance.matrix.n_rows <= 14
        assert "seed=3" in instance.provenance


def test_fixed_size():
    instance = generate(GeneratorParams(family="corona", size=5), seed=1)
    assert instance.matrix.n_rows == 10


def test_generation_errors():
    with pytest.raises(GenerationError):
        generate(GeneratorParams(family="classD", max_pendants=1), seed=0)
    with pytest.raises(GenerationError):
        generate(GeneratorParams(family="corona", size=4, density=0.0), seed=0)
    with pytest.raises(GenerationError):
        generate(GeneratorParams(family="wheel"), seed=0)


def test_triple_agreement_sweep():
    report = sweep(GeneratorParams(family="classD"), seed=7, count=500, debug_chains=True)
    assert report.failed == 0, report.failures[:3]
    assert report.passed == 500
    assert report.check_counts["triple_agreement"] == 500
    assert report.check_counts["chain_audit"] == 500
    assert report.output_classes == {InputClass.NOT_IN_D.value: 500}


def test_singular_sweep():
    report = sweep(GeneratorParams(family="singular"), seed=7, count=50)
    assert report.failed == 0, report.failures[:3]
    assert report.check_counts["rank_drop"] == 50
    assert report.check_counts["oracle_refuses"] == 50


@pytest.mark.parametrize("family,output", [("star", "star"), ("corona", "corona")])
def test_closed_families_sweep(family, output):
    report = sweep(GeneratorParams(family=family), seed=7, count=100)
    assert report.failed == 0, report.failures[:3]
    assert report.output_classes == {output: 100}


def test_other_in_d_sweep():
    report = sweep(GeneratorParams(family="classD"), seed=8, count=100)
    assert report.failed == 0, report.failures[:3]
    assert report.check_counts["closure"] == 100


def test_report_is_reproducible_and_untimed():
    params = GeneratorParams(family="corona")
    first = sweep(params, seed=5, count=10)
    second = sweep(params, seed=5, count=10, workers=2)
    assert first.model_dump_json() == second.model_dump_json()
    assert first.wall_time_seconds is None
    assert sweep(params, seed=5, count=2, timing=True).wall_time_seconds is not None
