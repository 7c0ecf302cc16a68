"""Command-line interface: outputs, exit statuses, format equivalence."""

import json

from flagcert.cli import run


class TestVerify:
    def test_builtin_json(self, capsys):
        status = run(["verify", "--builtin", "c6a", "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["passed"] is True
        assert len(out["coefficients"]) == 26
        assert all(v == "1/64" for v in out["coefficients"].values())

    def test_text_and_json_agree(self, capsys):
        status_text = run(["verify", "--format", "text"])
        text = capsys.readouterr().out
        status_json = run(["verify", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert status_text == status_json == 0
        assert "verdict: pass" in text
        for check in payload["checks"]:
            expected = "pass" if check["passed"] else "FAIL"
            assert f"[{expected}] {check['name']}" in text

    def test_cert_file_round(self, tmp_path, capsys):
        path = tmp_path / "cert.json"
        assert run(["export-cert", "--out", str(path)]) == 0
        capsys.readouterr()
        status = run(["verify", "--cert", str(path), "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["passed"] is True

    def test_schema_error_exit_2(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text('{"name": "x"}')
        status = run(["verify", "--cert", str(path)])
        err = capsys.readouterr().err
        assert status == 2
        assert "schema error" in err

    def test_failing_certificate_exit_1(self, tmp_path, capsys):
        exported = tmp_path / "cert.json"
        assert run(["export-cert", "--out", str(exported)]) == 0
        capsys.readouterr()
        obj = json.loads(exported.read_text())
        obj["families"][0]["matrix"][0][0] = "3/128"
        obj["families"][1]["matrix"][0][0] = "3/128"
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(obj))
        status = run(["verify", "--cert", str(bad), "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert status == 1
        assert out["passed"] is False
        failing = {c["name"] for c in out["checks"] if not c["passed"]}
        assert "coefficients" in failing


class TestClassify:
    def test_text_headline(self, capsys):
        status = run(["classify", "--template", "k33"])
        out = capsys.readouterr().out
        assert status == 0
        assert out.splitlines()[0] == "512 colourings, 26 classes"

    def test_json_table(self, capsys):
        status = run(["classify", "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["colourings"] == 512
        assert out["classes"] == 26
        assert sum(row["multiplicity"] for row in out["table"]) == 512


class TestExpand:
    def test_published_first_product(self, capsys):
        status = run(["expand", "--family", "R", "--i", "1", "--j", "1"])
        out = capsys.readouterr().out.strip()
        assert status == 0
        assert out == "J1: 72/72, J2: 16/72, J3: 4/72"

    def test_published_mixed_product(self, capsys):
        status = run(["expand", "--family", "R", "--i", "2", "--j", "7"])
        out = capsys.readouterr().out.strip()
        assert status == 0
        assert out == "J4: 12/72, J9: 4/72, J11: 2/72"

    def test_json_canonical(self, capsys):
        status = run(["expand", "--family", "B", "--i", "8", "--j", "8", "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["expansion"] == {"2": "1/9", "3": "1/9", "4": "1/6"}

    def test_bad_index_exit_2(self, capsys):
        assert run(["expand", "--family", "R", "--i", "0", "--j", "1"]) == 2


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        assert run(["verify", "--no-such-flag"]) == 2

    def test_unknown_command(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_missing_command(self, capsys):
        assert run([]) == 2


class TestOracleCommands:
    def test_identities(self, capsys):
        status = run(["oracle", "identities", "--n", "7", "--seed", "1", "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["passed"] is True
        assert out["summary"]["failed"] == 0

    def test_inequality(self, capsys):
        status = run(
            ["oracle", "inequality", "--n", "7", "--seed", "0", "--count", "2", "--format", "json"]
        )
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["passed"] is True
        assert len(out["runs"]) == 2

    def test_inequality_text_marks_approximations(self, capsys):
        status = run(["oracle", "inequality", "--n", "6", "--seed", "3"])
        out = capsys.readouterr().out
        assert status == 0
        assert "approx." in out

    def test_montecarlo(self, capsys):
        status = run(
            ["oracle", "montecarlo", "--n", "8", "--trials", "2", "--seed", "11", "--format", "json"]
        )
        out = json.loads(capsys.readouterr().out)
        assert status == 0
        assert out["n"] == 8 and out["trials"] == 2
        assert "/" in out["mean"] or out["mean"].isdigit()

    def test_oracle_guard_exit_2(self, capsys):
        status = run(["oracle", "inequality", "--n", "20", "--seed", "0"])
        assert status == 2
        assert "rejected" in capsys.readouterr().err
