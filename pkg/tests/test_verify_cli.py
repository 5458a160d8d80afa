"""Verification suites at reduced bounds, plus the command-line surface."""

import io
import json
import subprocess
import sys

import pytest

from copa import SUITES, run_suite
from copa.cli import main

# Reduced bounds keep the whole registry affordable inside the unit run;
# the acceptance tests exercise the defaults.
REDUCED_BOUNDS = {
    "gf-triple": dict(max_n=12, refined_max=10, classes=3),
    "phi": dict(max_total=10, cardinality_max=12),
    "eo-star": dict(max_half=6, roundtrip_max=10),
    "cp111": dict(
        formula_max=30, enum_max=12, corollary_max=12, bound_max=10, bijection_max=8
    ),
    "cp011": dict(max_n=12),
    "cp001": dict(max_n=12, bijection_max=8),
    "cp0bm": dict(max_n=12, pairs=((1, 2), (2, 3))),
    "rr": dict(order=40, connection_order=30, enum_max=12),
    "theta-eta": dict(order=30),
    "mock-theta": dict(order=12),
    "scaling": dict(max_n=10, classes=2, scales=(2,), object_max=5),
    "conjugation": dict(max_n=12, refined_max=10, classes=3),
    "congruence": dict(max_k=2, eo_max_k=1),
    "crank": dict(points=(4,), transport_max=8),
}

PAIR_DOC = json.dumps(
    {
        "a": 1,
        "b": 2,
        "m": 4,
        "ground_source": [9, 5, 5, 5, 5, 1, 1, 1],
        "sky_source": [26, 26, 26, 22, 6, 6, 2],
    }
)

COPARTITION_DOC = '{"a":1,"b":2,"m":4,"ground":[9,5,5,5,1],"sky":[6,6,6,2]}'


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_at_reduced_bounds(name):
    report = run_suite(name, **REDUCED_BOUNDS[name])
    assert report.ok, report.line()
    assert report.attempted > 0
    assert report.passed == report.attempted
    assert report.suite == name
    assert report.wall_time >= 0.0


def test_registry_is_complete_and_ordered():
    assert list(SUITES) == [
        "gf-triple",
        "phi",
        "eo-star",
        "cp111",
        "cp011",
        "cp001",
        "cp0bm",
        "rr",
        "theta-eta",
        "mock-theta",
        "scaling",
        "conjugation",
        "congruence",
        "crank",
    ]


def test_unknown_suite_raises_key_error():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_report_line_mentions_status():
    line = run_suite("mock-theta", order=8).line()
    assert "suite=mock-theta" in line
    assert "status=ok" in line


# -- CLI: counting ---------------------------------------------------------


def test_count_basic(capsys):
    assert main(["count", "--a", "1", "--b", "3", "--m", "4", "--n", "12"]) == 0
    assert capsys.readouterr().out.strip() == "7"


def test_count_crosscheck(capsys):
    rc = main(
        ["count", "--a", "1", "--b", "1", "--m", "2", "--n", "9", "--crosscheck"]
    )
    assert rc == 0
    assert capsys.readouterr().out.strip() == "20"


def test_count_refined(capsys):
    rc = main(
        ["count", "--a", "1", "--b", "1", "--m", "2", "--n", "4",
         "--w", "1", "--s", "1"]
    )
    assert rc == 0
    assert capsys.readouterr().out.strip() == "1"


def test_count_refined_needs_both_flags(capsys):
    rc = main(["count", "--a", "1", "--b", "1", "--m", "2", "--n", "4", "--w", "1"])
    assert rc == 2
    assert "together" in capsys.readouterr().err


def test_count_invalid_params_exit_2(capsys):
    rc = main(["count", "--a", "1", "--b", "1", "--m", "0", "--n", "4"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_count_method_formula(capsys):
    rc = main(
        ["count", "--a", "1", "--b", "1", "--m", "1", "--n", "40",
         "--method", "formula"]
    )
    assert rc == 0
    assert capsys.readouterr().out.strip() == "215308"


# -- CLI: enumerate / table / render ---------------------------------------


def test_enumerate_lists_seven_objects(capsys):
    rc = main(["enumerate", "--a", "1", "--b", "3", "--m", "4", "--n", "12"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 7
    for line in lines:
        doc = json.loads(line)
        assert (doc["a"], doc["b"], doc["m"]) == (1, 3, 4)


def test_table_csv(capsys):
    rc = main(["table", "--a", "1", "--b", "1", "--m", "2", "--max-n", "6"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "a,b,m,n,count"
    assert len(lines) == 8
    assert lines[1] == "1,1,2,0,1"
    assert lines[-1] == "1,1,2,6,10"


def test_table_json_refined(capsys):
    rc = main(
        ["table", "--a", "1", "--b", "1", "--m", "2", "--max-n", "4",
         "--format", "json", "--refined"]
    )
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert (payload["a"], payload["b"], payload["m"]) == (1, 1, 2)
    row = payload["rows"][-1]
    assert row["n"] == 4
    assert row["count"] == 5
    assert sum(cell["count"] for cell in row["refined"]) == 5


def test_table_csv_refined_rejected(capsys):
    rc = main(["table", "--a", "1", "--b", "1", "--m", "2", "--max-n", "4",
               "--refined"])
    assert rc == 2
    assert "json" in capsys.readouterr().err


def test_render_ascii(capsys):
    rc = main(["render", "--input", COPARTITION_DOC])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.endswith("\n")
    assert "|" in out and "+" in out


def test_render_to_file(tmp_path, capsys):
    target = tmp_path / "diagram.svg"
    rc = main(["render", "--input", COPARTITION_DOC, "--format", "svg",
               "--out", str(target)])
    assert rc == 0
    assert capsys.readouterr().out == ""
    assert target.read_text(encoding="utf-8").startswith("<svg")


def test_render_bad_json_exit_2(capsys):
    rc = main(["render", "--input", "{not json"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_render_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(COPARTITION_DOC))
    rc = main(["render", "--input", "-"])
    assert rc == 0
    assert "|" in capsys.readouterr().out


# -- CLI: verify ------------------------------------------------------------


def test_verify_text_output(capsys):
    rc = main(["verify", "mock-theta", "--order", "10"])
    assert rc == 0
    captured = capsys.readouterr()
    assert "suite=mock-theta" in captured.out
    assert "status=ok" in captured.out
    assert "mock-theta:" in captured.err


def test_verify_json_output(capsys):
    rc = main(["verify", "mock-theta", "--order", "10", "--format", "json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["suite"] == "mock-theta"
    assert payload[0]["ok"] is True
    assert "wall_time" in payload[0]


def test_verify_unknown_suite_exit_2(capsys):
    rc = main(["verify", "nonsense"])
    assert rc == 2
    err = capsys.readouterr().err
    assert "nonsense" in err and "gf-triple" in err


def test_verify_bound_flag_mismatch_exit_2(capsys):
    rc = main(["verify", "crank", "--order", "50"])
    assert rc == 2
    assert "--order" in capsys.readouterr().err


def test_verify_order_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("COPA_MAX_ORDER", "10")
    rc = main(["verify", "mock-theta", "--order", "50"])
    assert rc == 0
    captured = capsys.readouterr()
    assert "capped" in captured.err
    assert "status=ok" in captured.out


# -- CLI: series / bijection / crank ----------------------------------------


def test_series_product(capsys):
    rc = main(
        ["series", "--kind", "product", "--a", "1", "--b", "1", "--m", "1",
         "--order", "6"]
    )
    assert rc == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[0] == {"n": 0, "coeff": 1}
    assert rows[6] == {"n": 6, "coeff": 30}


def test_series_kinds_agree(capsys):
    main(["series", "--kind", "product", "--a", "1", "--b", "2", "--m", "3",
          "--order", "8"])
    first = json.loads(capsys.readouterr().out)
    main(["series", "--kind", "double-sum", "--a", "1", "--b", "2", "--m", "3",
          "--order", "8"])
    second = json.loads(capsys.readouterr().out)
    assert first == second


def test_series_refined_restricted(capsys):
    rc = main(["series", "--kind", "nu", "--order", "6", "--refined"])
    assert rc == 2
    assert "refined" in capsys.readouterr().err


def test_series_theta_needs_exponents(capsys):
    rc = main(["series", "--kind", "theta", "--order", "6"])
    assert rc == 2
    assert "--x" in capsys.readouterr().err


def test_bijection_pair_to_copartition(capsys):
    rc = main(["bijection", "pair-to-copartition", "--input", PAIR_DOC])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["merged"] == [11, 7, 3]
    assert payload["copartition"]["ground"] == [9, 5, 5, 5, 1]
    assert payload["copartition"]["sky"] == [6, 6, 6, 2]
    assert payload["size_ok"] is True


def test_bijection_copartition_to_pair_stdin(monkeypatch, capsys):
    doc = json.dumps(
        {"merged": [11, 7, 3], "copartition": json.loads(COPARTITION_DOC)}
    )
    monkeypatch.setattr(sys, "stdin", io.StringIO(doc))
    rc = main(["bijection", "copartition-to-pair", "--input", "-"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ground_source"] == [9, 5, 5, 5, 5, 1, 1, 1]
    assert payload["sky_source"] == [26, 26, 26, 22, 6, 6, 2]
    assert payload["match_table"] == [[3, 0], [7, 1], [11, 1]]
    assert payload["size_ok"] is True


def test_bijection_illustrate(capsys):
    rc = main(["bijection", "pair-to-copartition", "--input", PAIR_DOC,
               "--illustrate"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "|" in out and "A" in out


def test_bijection_illustrate_wrong_map(capsys):
    rc = main(["bijection", "eo-to-copartition", "--input", '{"partition":[4]}',
               "--illustrate"])
    assert rc == 2


def test_bijection_unknown_name_rejected_by_parser(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bijection", "no-such-map", "--input", "{}"])
    assert exc.value.code == 2


def test_bijection_missing_field_exit_2(capsys):
    rc = main(["bijection", "eo-to-copartition", "--input", '{"wrong":[]}'])
    assert rc == 2
    assert "bad input" in capsys.readouterr().err


def test_crank_distribution(capsys):
    rc = main(["crank", "--a", "1", "--b", "1", "--m", "2", "--n", "4",
               "--mod", "5"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["modulus"] == 5
    assert payload["total"] == 5
    assert set(payload["counts"].values()) == {1}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "copa.cli", "count", "--a", "1", "--b", "3",
         "--m", "4", "--n", "12"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "7"
