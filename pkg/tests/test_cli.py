import json

import pytest

from horomod.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_tensor_example(capsys):
    code, blob = run_json(capsys, "tensor", "A1", "1", "1")
    assert code == 0
    assert blob["status"] == "ok"
    assert blob["payload"] == {"(2)": 1, "(0)": 1}


def test_dominance_example(capsys):
    code, blob = run_json(capsys, "dominance", "A2", "0,1", "1,0")
    assert code == 0
    assert blob["payload"]["leq"] is False


def test_dominance_true_reports_difference(capsys):
    code, blob = run_json(capsys, "dominance", "A1", "0", "4")
    assert code == 0
    assert blob["payload"] == {"leq": True, "difference_root_coords": ["2"]}


def test_reproduce_example1(capsys):
    code, blob = run_json(capsys, "reproduce-example1")
    assert code == 0
    assert blob["payload"]["dims"] == [0, 1, 0, 1, 0, 0]
    assert blob["payload"]["weights"] == {"2": [[2]], "4": [[2]]}


def test_reproduce_example2(capsys):
    code, blob = run_json(capsys, "reproduce-example2")
    assert code == 0
    assert blob["payload"] == {"dim": 2, "weights": [[0, 1, 1], [1, 1, 0]]}
    assert blob["provenance"]["hypotheses"]["normal"] is True


def test_byte_determinism(capsys):
    _, first = run(capsys, "law-tangent", "A1", "2", "--truncation", "8")
    _, second = run(capsys, "law-tangent", "A1", "2", "--truncation", "8")
    assert first == second


def test_usage_exit_code(capsys):
    assert main(["tensor", "A1", "1"]) == 2
    capsys.readouterr()


def test_unknown_subcommand_exit_code(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_validation_exit_code(capsys):
    code, blob = run_json(capsys, "dim", "A1", "1,2")
    assert code == 3
    assert blob["status"] == "error"
    assert blob["error"]["type"] == "validation"


def test_resource_exit_code(capsys):
    code, blob = run_json(capsys, "tensor", "A2", "9,9", "9,9", "--cap", "10")
    assert code == 4
    assert blob["error"]["type"] == "resource"


def test_law_pipeline(tmp_path, capsys):
    law_file = str(tmp_path / "law.json")
    code, blob = run_json(
        capsys,
        "orbit-law", "A1", "2",
        "--form", "1,0,1",
        "--truncation", "8",
        "--output", law_file,
    )
    assert code == 0
    assert blob["payload"]["truncation"] == 8
    on_disk = json.loads(open(law_file).read())
    assert on_disk == blob["payload"]

    code, blob = run_json(capsys, "root-monoid", law_file)
    assert code == 0
    assert blob["payload"]["generators"] == [[2], [4]]
    assert blob["payload"]["bound_limited"] is True
    assert blob["provenance"]["bounds"] == {"truncation": 8}

    code, blob = run_json(capsys, "contract", law_file, "0")
    assert code == 0
    values = {
        (e["channel"], tuple(e["lam"])): e["value"]
        for e in blob["payload"]["coeffs"]
    }
    assert all(e["channel"] == 0 for e in blob["payload"]["coeffs"])
    assert all(e["value"] == "1" for e in blob["payload"]["coeffs"])
    assert values  # non-empty

    code, blob = run_json(capsys, "contract", law_file, "1")
    assert code == 0
    assert blob["payload"]["coeffs"] == on_disk["coeffs"]


def test_export_system_format(tmp_path, capsys):
    out_file = str(tmp_path / "sys.txt")
    code, blob = run_json(
        capsys,
        "law-equations", "A1", "2",
        "--truncation", "6",
        "--export-system", out_file,
    )
    assert code == 0
    text = open(out_file).read()
    lines = text.splitlines()
    headers = [l for l in lines if l.startswith("# unknown ")]
    assert len(headers) == blob["payload"]["unknown_count"]
    assert headers[0] == "# unknown m[2,2,1] grade=1*alpha"
    body = [l for l in lines if not l.startswith("#")]
    assert body == blob["payload"]["equations"]


def test_saturate_and_presentation(capsys):
    code, blob = run_json(capsys, "saturate", "A1", "2;3")
    assert code == 0
    assert blob["payload"]["generators"] == [[1]]

    code, blob = run_json(capsys, "presentation", "A1", "2;3", "--bound", "6")
    assert code == 0
    assert blob["payload"]["relations"] == [[[0, 2], [3, 0]]]
    assert blob["provenance"]["bounds"] == {"bound": 6}


def test_t1_subcommand(capsys):
    code, blob = run_json(
        capsys,
        "t1", "A1", "sym(4,natural(2))", "1,0,0,0,0",
        "--lie-u", "--diag", "1:4",
    )
    assert code == 0
    assert blob["payload"]["dims"]["t1_invariant"] == 1
    assert blob["payload"]["weights"] == [[2]]


def test_tangent_weight_negative_entries(capsys):
    code, blob = run_json(
        capsys, "tangent-weight", "A3", "--", "0,1,0", "-1,0,1"
    )
    assert code == 0
    assert blob["payload"]["weight_root_coords"] == [1, 1, 0]


def test_pretty_is_indented(capsys):
    code, out = run(capsys, "dim", "A1", "4", "--pretty")
    assert code == 0
    assert out.startswith("{\n")


def test_stabilizer_labels(capsys):
    code, blob = run_json(
        capsys, "stabilizer", "A1", "sym(2,natural(2))", "0,1,0"
    )
    assert code == 0
    assert blob["payload"]["labels"] == ["e[1,2]", "f[1,2]", "h[1]"]
    assert blob["payload"]["dim"] == 1
