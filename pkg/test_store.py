import io
import sys
from fractions import Fraction

import pytest

from ginv.errors import MatrixFormatError
from ginv.linalg import RMatrix
from ginv.store import format_matrix, load_matrix, parse_matrix, save_matrix


def test_parse_with_comments_and_blank_lines():
    text = "# provenance line\n\n2\n1 -1/2\n# inline note\n0.5 3\n"
    m = parse_matrix(text)
    assert m == RMatrix([[1, "-1/2"], ["1/2", 3]])


def test_rectangular_header():
    m = parse_matrix("2 3\n1 2 3\n4 5 6\n")
    assert m.shape == (2, 3)


@pytest.mark.parametrize("text,fragment", [
    ("", "no matrix header"),
    ("x\n1\n", "header"),
    ("2\n1 2\n", "expected 2 rows"),
    ("2\n1 2\n3\n", "line 3"),
    ("1\nfoo\n", "line 2"),
    ("0\n", "positive"),
])
def test_parse_errors_name_the_problem(text, fragment):
    with pytest.raises(MatrixFormatError) as exc:
        parse_matrix(text)
    assert fragment in str(exc.value)


def test_format_is_canonical():
    m = RMatrix([[Fraction(2, 4), 0], [-3, Fraction(10, 5)]])
    assert format_matrix(m, ["seed=7"]) == "# seed=7\n2\n1/2 0\n-3 2\n"
    assert format_matrix(RMatrix([[1, 2, 3]])) == "1 3\n1 2 3\n"


def test_save_then_load(tmp_path, ten_vertex):
    path = tmp_path / "a.txt"
    save_matrix(str(path), ten_vertex, ["copy"])
    assert load_matrix(str(path)) == ten_vertex
    assert path.read_text().startswith("# copy\n10\n")


def test_load_from_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1\n-7/3\n"))
    assert load_matrix("-") == RMatrix([["-7/3"]])


def test_load_rejects_non_utf8(tmp_path):
    path = tmp_path / "latin1.txt"
    path.write_bytes("1\né\n".encode("latin-1"))
    with pytest.raises(MatrixFormatError, match="UTF-8"):
        load_matrix(str(path))


def test_huge_exponent_is_reported_with_its_line():
    with pytest.raises(MatrixFormatError, match="line 3"):
        parse_matrix("2\n0 1\n1e99999999 0\n")
