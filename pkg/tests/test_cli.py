import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from sysbounds.cli import main
from sysbounds.families import gen_groetzsch
from sysbounds.graph import canonical_form, parse_graph6

TABLES = json.loads((Path(__file__).parent / "fixtures" / "published_tables.json").read_text())


def schema(name):
    text = resources.files("sysbounds").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestInfo:
    def test_c5(self, capsys):
        code, out, _ = run(capsys, "info", "cycle:5")
        data = json.loads(out)
        jsonschema.validate(data, schema("info"))
        assert code == 0
        assert {k: data[k] for k in ("n", "girth", "oddGirth", "k", "chi", "ess", "forestEss", "trivRadius")} == {
            "n": 5, "girth": 5, "oddGirth": 5, "k": 2, "chi": 3, "ess": 1, "forestEss": 1, "trivRadius": 1,
        }

    def test_k2_infinite_odd_girth(self, capsys):
        code, out, _ = run(capsys, "info", "A_")
        data = json.loads(out)
        jsonschema.validate(data, schema("info"))
        assert data["chi"] == 2 and data["oddGirth"] is None

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "info", "complete:2", "--format", "text")
        assert "oddGirth: inf" in out

    def test_petersen(self, capsys):
        data = json.loads(run(capsys, "info", "petersen")[1])
        assert (data["chi"], data["girth"], data["oddGirth"]) == (3, 5, 5)

    def test_edge_list_file(self, capsys, tmp_path):
        p = tmp_path / "tri.txt"
        p.write_text("0 1\n1 2\n2 0\n")
        data = json.loads(run(capsys, "info", str(p))[1])
        assert data["n"] == 3 and data["chi"] == 3

    def test_edge_list_error_has_line(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("3\n0 1\n2 2\n")
        code, _, err = run(capsys, "info", str(p))
        assert code == 2 and "line 3" in err

    def test_graph6_file(self, capsys, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text("\nDhc\n")
        assert json.loads(run(capsys, "info", str(p))[1])["n"] == 5

    def test_garbage(self, capsys):
        code, _, err = run(capsys, "info", "!!")
        assert code == 2 and "error" in err


class TestBounds:
    def test_chi3_k2(self, capsys):
        code, out, _ = run(capsys, "bounds", "--chi", "3", "--k", "2", "--format", "json")
        data = json.loads(out)
        jsonschema.validate(data, schema("bounds"))
        rows = {r["id"]: r for r in data["bounds"]}
        assert rows["SYS"]["value"] == 4
        assert (rows["BB1"]["raw"], rows["BB1"]["value"]) == ("7/2", 4)
        assert (rows["BB2"]["raw"], rows["BB2"]["value"]) == ("11/2", 6)
        assert rows["BB3"]["value"] == 5
        assert rows["MIX3_PRINTED"]["value"] == 9
        assert rows["MIX3_RECURSIVE"]["value"] == 5

    def test_table1_winner(self, capsys):
        data = json.loads(run(capsys, "bounds", "--chi", "5", "--k", "7", "--catalog", "table1", "--format", "json")[1])
        assert data["winner"]["id"] == "SYS" and data["winner"]["value"] == 63

    def test_chi_one(self, capsys):
        data = json.loads(run(capsys, "bounds", "--chi", "1", "--k", "5", "--format", "json")[1])
        assert all(r["value"] == 1 for r in data["bounds"])

    def test_domain_errors_are_per_bound(self, capsys):
        code, out, _ = run(capsys, "bounds", "--chi", "2", "--k", "3", "--format", "json")
        data = json.loads(out)
        assert code == 0
        rows = {r["id"]: r for r in data["bounds"]}
        assert rows["BALL_A"]["value"] is None and "error" in rows["BALL_A"]
        assert rows["MIX2"]["value"] is not None

    def test_text(self, capsys):
        out = run(capsys, "bounds", "--chi", "3", "--k", "2")[1]
        assert "BB1" in out and "7/2 -> 4" in out and "winner:" in out

    def test_bad_catalog(self, capsys):
        assert run(capsys, "bounds", "--chi", "3", "--k", "2", "--catalog", "XYZ")[0] == 2


class TestTable:
    @pytest.mark.parametrize("preset", ["table1", "table2"])
    def test_presets_match_fixture(self, capsys, preset):
        code, out, _ = run(capsys, "table", "--preset", preset, "--format", "json")
        data = json.loads(out)
        jsonschema.validate(data, schema("table"))
        assert data["chi"] == TABLES["chi"] and data["k"] == TABLES["k"]
        assert data["winners"] == TABLES[preset]

    def test_rows(self, capsys):
        data = json.loads(run(capsys, "table", "--preset", "table1", "--chi", "4", "--format", "json")[1])
        assert data["winners"] == [["BB-3"] * 9]
        data = json.loads(run(capsys, "table", "--preset", "table2", "--chi", "3", "--format", "json")[1])
        assert data["winners"] == [["MIX-3"] * 9]
        data = json.loads(run(capsys, "table", "--preset", "table2", "--chi", "6", "--k", "4", "--format", "json")[1])
        assert data["winners"] == [["MIX-2"]]

    def test_markdown_and_csv(self, capsys):
        md = run(capsys, "table", "--chi", "3-4", "--k", "2-3")[1]
        assert md.splitlines()[2] == "| chi = 3 | BB-2 | BB-2 |"
        csv_out = run(capsys, "table", "--chi", "3-4", "--k", "2-3", "--format", "csv")[1]
        assert csv_out.splitlines() == ["chi,k=2,k=3", "3,BB-2,BB-2", "4,BB-3,BB-3"]

    def test_bad_range(self, capsys):
        assert run(capsys, "table", "--chi", "5-3")[0] == 2


class TestAudit:
    def test_enumerate_three(self, capsys):
        code, out, err = run(capsys, "audit", "--enumerate", "3")
        data = json.loads(out)
        jsonschema.validate(data, schema("audit_report"))
        assert code == 0 and data["totalGraphs"] == 8
        assert "audited 8 graphs" in err

    def test_enumerate_six_reports_c5(self, capsys, tmp_path):
        out = tmp_path / "r.json"
        code, _, _ = run(capsys, "audit", "--enumerate", "6", "--out", str(out))
        data = json.loads(out.read_text())
        jsonschema.validate(data, schema("audit_report"))
        assert code == 0 and data["violationCount"] == 0
        assert data["reportOnlyCount"] > 0

    def test_enumerate_five_lists_c5_finding(self, capsys):
        data = json.loads(run(capsys, "audit", "--enumerate", "5", "--mandatory", "SYS,BB3")[1])
        assert "Dhc" in {r["graph6"] for r in data["reportOnlyFindings"]}

    def test_violation_exit_and_report_written(self, capsys, tmp_path):
        out = tmp_path / "r.json"
        code, _, _ = run(capsys, "audit", "--enumerate", "5", "--out", str(out))
        assert code == 1
        data = json.loads(out.read_text())
        assert data["violationCount"] == 12

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "audit", "--graph6-file", "missing.g6")
        assert code == 2 and "missing.g6" in err

    def test_graph6_file_and_csv(self, capsys, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text("Dhc\nIhCGGC@?G\n")
        code, out, _ = run(capsys, "audit", "--graph6-file", str(p), "--format", "csv")
        assert code == 1
        assert out.splitlines()[0].startswith("list,graph6")

    def test_malformed_graph6_file(self, capsys, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text("Dhc\n!!\n")
        code, _, err = run(capsys, "audit", "--graph6-file", str(p))
        assert code == 2 and ":2:" in err

    def test_unknown_id(self, capsys):
        assert run(capsys, "audit", "--enumerate", "3", "--mandatory", "FOO")[0] == 2

    def test_no_source(self, capsys):
        assert run(capsys, "audit")[0] == 2

    def test_too_large(self, capsys):
        assert run(capsys, "audit", "--enumerate", "9")[0] == 2

    def test_byte_identical(self, tmp_path):
        outs = []
        for i in range(2):
            path = tmp_path / f"r{i}.json"
            subprocess.run(
                [sys.executable, "-m", "sysbounds", "audit", "--enumerate", "5", "--out", str(path)],
                check=False, capture_output=True,
            )
            outs.append(path.read_bytes())
        assert outs[0] == outs[1] and outs[0]


class TestColor:
    def test_petersen(self, capsys):
        code, out, _ = run(capsys, "color", "petersen", "--k", "2")
        assert code == 0
        lines = out.splitlines()
        colors = [int(line.split()[1]) for line in lines if not line.startswith("#")]
        assert len(colors) == 10 and len(set(colors)) == 3
        assert "# colors: 3" in lines

    def test_json(self, capsys):
        data = json.loads(run(capsys, "color", "groetzsch", "--format", "json")[1])
        jsonschema.validate(data, schema("color"))
        assert data["k"] == 2 and data["count"] == len(set(data["colors"]))

    def test_odd_girth_too_small(self, capsys):
        code, _, err = run(capsys, "color", "cycle:5", "--k", "3")
        assert code == 2 and "5 < 7" in err


class TestGen:
    def test_mycielski_of_c5_is_groetzsch(self, capsys):
        code, out, _ = run(capsys, "gen", "mycielski", "--base", "cycle:5")
        g = parse_graph6(out.strip())
        assert g.n == 11
        assert canonical_form(g) == canonical_form(gen_groetzsch())

    @pytest.mark.parametrize(
        "argv, n",
        [
            (["cycle", "--n", "7"], 7),
            (["kneser", "--a", "5", "--b", "2"], 10),
            (["genmycielski", "--base", "cycle:7", "--levels", "3"], 22),
            (["kneser:6:2"], 15),
            (["petersen"], 10),
        ],
    )
    def test_families(self, capsys, argv, n):
        out = run(capsys, "gen", *argv)[1]
        assert parse_graph6(out.strip()).n == n

    @pytest.mark.parametrize("argv", [["cycle"], ["kneser", "--a", "5"], ["bogus"], ["cycle", "--n", "2"]])
    def test_errors(self, capsys, argv):
        assert run(capsys, "gen", *argv)[0] == 2


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "sysbounds", "gen", "cycle:5"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "Dhc"
