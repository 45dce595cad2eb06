import io
import json

import pytest

from app import main
from conftest import data_path
from ginv.store import parse_matrix


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_ginv_ten_vertex_json():
    code, text = run_cli("ginv", data_path("ten_vertex.txt"), "--method", "all", "--format", "json")
    assert code == 0
    report = json.loads(text)
    assert report["ok"] is True
    assert report["delta"] == "-96"
    assert report["methods_run"] == ["graph", "block", "oracle"]
    assert report["methods_agree"] is True
    assert report["inverse"][4][6] == "1"
    assert report["schema_version"] == "1"


def test_ginv_text_with_mu():
    code, text = run_cli("ginv", data_path("ten_vertex.txt"), "--show-mu", "--debug-chains")
    assert code == 0
    assert "# Delta=-96" in text
    assert "# mu(5,7)=-96 beta=-6 chain=5-1-2-7 matchings=2" in text
    assert parse_matrix(text).entry(5, 7) == 1


def test_ginv_matches_printed_inverse():
    code, text = run_cli("ginv", data_path("two_example_a.txt"), "--method", "block")
    assert code == 0
    with open(data_path("two_example_a_ginv.txt")) as f:
        assert parse_matrix(text) == parse_matrix(f.read())


def test_ginv_outside_class_d():
    code, text = run_cli("ginv", data_path("ssd.txt"), "--method", "graph", "--format", "json")
    assert code == 2
    body = json.loads(text)
    assert body == {"ok": False, "error": "not_in_class_d", "detail": body["detail"]}
    # all falls back to the oracle alone
    code, text = run_cli("ginv", data_path("ssd.txt"), "--format", "json")
    assert code == 0
    assert json.loads(text)["methods_run"] == ["oracle"]


def test_no_group_inverse_exit_code(tmp_path):
    path = tmp_path / "singular.txt"
    path.write_text("5\n0 1 1 1 0\n1 0 0 0 1\n2 0 0 0 0\n-2 0 0 0 0\n0 1 0 0 0\n")
    code, text = run_cli("ginv", str(path), "--method", "graph")
    assert code == 2
    body = json.loads(text)
    assert body["error"] == "no_group_inverse"
    assert body["vanished"] == [1]


def test_analyze_ssd():
    code, text = run_cli("analyze", data_path("ssd.txt"), "--format", "json")
    assert code == 0
    report = json.loads(text)
    assert report["in_class_d"] is False
    assert report["simple_symmetric"] is True


def test_analyze_text():
    code, text = run_cli("analyze", data_path("two_example_b.txt"))
    assert code == 0
    assert "is_star=True" in text
    assert "center=1" in text


def test_matchings_text():
    code, text = run_cli("matchings", data_path("ten_vertex.txt"))
    assert code == 0
    lines = text.splitlines()
    assert "{(1,5),(2,7),(3,8),(4,10)} product=288" in lines
    assert lines[-1] == "Delta=-96"


def test_matchings_limit():
    code, text = run_cli("matchings", data_path("ten_vertex.txt"), "--engine", "brute", "--limit", "5")
    assert code == 1
    assert json.loads(text)["error"] == "brute_force_limit"


def test_classify():
    code, text = run_cli("classify", data_path("two_example_a.txt"))
    assert code == 0
    verdict = json.loads(text)
    assert verdict["input_class"] == "other-in-D"
    assert verdict["predicted_closure"] is False
    assert verdict["actual_closure"] is False
    assert verdict["consistent"] is True


def test_verify_pair():
    code, text = run_cli("verify", data_path("two_example_a.txt"), data_path("two_example_a_ginv.txt"), "--format", "json")
    assert code == 0
    verdict = json.loads(text)
    assert verdict["axa_equals_a"] and verdict["xax_equals_x"] and verdict["ax_equals_xa"]
    assert verdict["all_hold"] is True


def test_verify_failure_still_exits_zero():
    code, text = run_cli("verify", data_path("two_example_a.txt"), data_path("two_example_b.txt"))
    assert code == 0
    assert "all_hold=false" in text


def test_gen_is_byte_identical(tmp_path):
    args = ("gen", "--family", "corona", "--seed", "42")
    assert run_cli(*args) == run_cli(*args)
    out = tmp_path / "g.txt"
    code, _ = run_cli(*args, "--output", str(out))
    assert code == 0
    text = out.read_text()
    assert text.startswith("# gen family=corona")
    assert "seed=42" in text.splitlines()[0]
    assert parse_matrix(text).n_rows % 2 == 0


def test_sweep_report():
    code, text = run_cli("sweep", "--family", "star", "--count", "20", "--seed", "3")
    assert code == 0
    report = json.loads(text)
    assert report["failed"] == 0
    assert report["output_classes"] == {"star": 20}
    assert report["wall_time_seconds"] is None
    assert run_cli("sweep", "--family", "star", "--count", "20", "--seed", "3")[1] == text


def test_parse_and_io_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n1 2\n")
    code, text = run_cli("analyze", str(bad))
    assert code == 1
    assert json.loads(text)["error"] == "parse_error"
    code, text = run_cli("analyze", str(tmp_path / "missing.txt"))
    assert code == 1
    assert json.loads(text)["error"] == "io_error"


def test_non_utf8_file_is_a_parse_error(tmp_path):
    binary = tmp_path / "binary.txt"
    binary.write_bytes(b"2\n0 1\n\xff\xfe 0\n")
    code, text = run_cli("analyze", str(binary))
    assert code == 1
    assert json.loads(text)["error"] == "parse_error"


def test_invalid_arguments():
    code, text = run_cli("sweep", "--count", "0")
    assert code == 1
    assert json.loads(text)["error"] == "invalid_arguments"
    with pytest.raises(SystemExit):
        run_cli("ginv")
