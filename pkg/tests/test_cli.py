import io
import json
import subprocess
import sys

import pytest

from dihedral_strata import cli


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    data = json.loads(out)
    assert cli.dumps(data) + "\n" == out  # canonical: re-serialization is byte-identical
    return data


def test_classify_classes():
    data = call_json("classify", "--n", "5")
    assert [c["label"] for c in data["classes"]] == ["type1", "type2"]
    assert data["classes"][0]["reference"] == "a^5,a^5,a^1*s,a^3*s,a^2"
    assert data["classes"][1]["reference"] == "s,s,a^1*s,a^3*s,a^2"
    assert data["total_vectors"] == sum(c["size"] for c in data["classes"])


def test_classify_vector():
    data = call_json("classify", "--n", "5", "--vector", "a^5,a^5,s,a^2*s,a^2")
    assert data["label"] == "type1"
    code, out, _ = call("classify", "--n", "4", "--vector", "s,s,as,a^3*s,a^2")
    assert code == 0 and "unique" in out


def test_decompose_n3_type2_completely_decomposable():
    data = call_json("decompose", "--n", "3", "--action", "type2")
    nonzero = [f for f in data["factors"] if f["dim"]]
    assert nonzero and all(f["dim"] == 1 for f in nonzero)
    assert data["genus"] == 5
    assert {"vector", "label", "genus", "factors", "identifications", "checks"} <= set(data)


def test_decompose_vector_overrides_action():
    data = call_json("decompose", "--n", "5", "--action", "type2", "--vector", "a^5,a^5,s,a^2*s,a^2")
    assert data["label"] == "type1"


def test_shimura_n4():
    data = call_json("shimura", "--n", "4", "--action", "unique")
    assert data["N"] == 4 and data["match"] is True


def test_quotient():
    data = call_json("quotient", "--n", "5", "--action", "type2", "--subgroup", "<a^2>")
    assert data["genus_isotypical"] == data["genus_coset"] == 1
    data = call_json("quotient", "--n", "5", "--action", "type1", "--subgroup", "<a^5>")
    assert data["genus_coset"] == 0 and data["branch_points_of_X_over_quotient"] == 20


def test_model():
    data = call_json("model", "--n", "3", "--action", "type1", "--params", "2", "3")
    assert data["genus"] == 5 and data["equation"].startswith("y^2 = (x^3 - 8)")


def test_report_prime_dimension_rows():
    code, out, _ = call("report", "--n", "5")
    assert code == 0
    assert "| type1 | 0 | 0 | 1 | 0 | 4 | 0 | 9 |" in out
    assert "| type2 | 0 | 1 | 0 | 0 | 2 | 2 | 9 |" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "--n", "1"),
        ("classify", "--n", "5", "--vector", "a,a,a,a,a"),
        ("decompose", "--n", "4", "--action", "type1"),
        ("decompose", "--n", "5"),
        ("model", "--n", "3", "--action", "type2", "--params", "0", "0"),
        ("quotient", "--n", "5", "--action", "type1", "--subgroup", "a^2"),
        ("frobnicate",),
        ("classify",),
    ],
)
def test_validation_errors_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_usage_error_names_flag():
    code, _, err = call("classify")
    assert code == 1 and "--n" in err


def test_consistency_failure_exit_2(monkeypatch):
    monkeypatch.setattr(cli, "quotient_decomposition", lambda report, H: (99, {}))
    code, _, err = call("quotient", "--n", "5", "--action", "type1", "--subgroup", "<a^2>")
    assert code == 2 and "consistency failure" in err and "99" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dihedral_strata", "shimura", "--n", "3", "--action", "type1", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["N"] == 4
