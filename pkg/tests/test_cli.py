"""CLI behavior: formats, exit codes, budget resolution, and remote mode."""

import csv
import io
import json

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

import qchrom.cli as cli_mod
from qchrom.certificates import cert_to_payload, write_certificate
from qchrom.cli import main
from qchrom.exact import chromatic_number, proper_coloring_to_certificate
from qchrom.graphs import encode_graph6, generate
from qchrom.service.app import app


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def cert_file(tmp_path):
    def build(spec: str, d: int = 1, corrupt: bool = False) -> str:
        g = generate(spec)
        cert = proper_coloring_to_certificate(g, chromatic_number(g).coloring, d=d)
        payload = cert_to_payload(cert)
        if corrupt:
            u, v = sorted(g.edges)[0]
            payload["projectors"][v] = payload["projectors"][u]
        path = tmp_path / f"{spec.replace(':', '_')}_{d}_{corrupt}.json"
        path.write_text(json.dumps(payload))
        return str(path)
    return build


def parse_csv(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text)))


class TestGraphInputs:
    def test_gen(self, runner):
        res = runner.invoke(main, ["bounds", "--gen", "petersen"])
        assert res.exit_code == 0
        assert "hoffman        2.50" in res.output

    def test_g6(self, runner):
        s = encode_graph6(generate("petersen"))
        res = runner.invoke(main, ["bounds", "--g6", s])
        assert res.exit_code == 0
        assert "ando_lin       2.14" in res.output

    def test_g6_file(self, runner, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text(encode_graph6(generate("cycle:5")) + "\n")
        res = runner.invoke(main, ["bounds", "--file", str(p)])
        assert res.exit_code == 0

    def test_edge_list_file(self, runner, tmp_path):
        p = tmp_path / "tri.edges"
        p.write_text("0 1\n1 2\n2 0\n")
        res = runner.invoke(main, ["exact", "--file", str(p)])
        assert res.exit_code == 0
        assert ["chromatic", "3"] in [line.split() for line in res.output.splitlines()]

    def test_no_source_is_usage_error(self, runner):
        res = runner.invoke(main, ["bounds"])
        assert res.exit_code == 1

    def test_two_sources_is_usage_error(self, runner):
        res = runner.invoke(main, ["bounds", "--gen", "petersen", "--g6", "A_"])
        assert res.exit_code == 1

    def test_unknown_flag_is_usage_error(self, runner):
        res = runner.invoke(main, ["bounds", "--gen", "petersen", "--bogus"])
        assert res.exit_code == 1

    def test_parse_failure_exit_1(self, runner):
        res = runner.invoke(main, ["bounds", "--g6", "!!!bad"])
        assert res.exit_code == 1
        assert "Error" in res.output

    def test_unknown_generator_exit_1(self, runner):
        res = runner.invoke(main, ["bounds", "--gen", "nope"])
        assert res.exit_code == 1


class TestFormats:
    def test_table_two_decimals(self, runner):
        res = runner.invoke(main, ["bounds", "--gen", "clebsch"])
        assert res.exit_code == 0
        assert "inertia_bound  3.20" in res.output
        assert "best_ceil      4" in res.output

    def test_json_full_precision_round_trip(self, runner):
        res = runner.invoke(main, ["bounds", "--gen", "clebsch", "--format", "json"])
        assert res.exit_code == 0
        body = json.loads(res.output)
        assert body["inertia_bound"]["value"] == 3.2
        assert body["hoffman"]["value"] == pytest.approx(8 / 3, abs=1e-12)

    def test_csv_matches_json_numbers(self, runner):
        res_j = runner.invoke(main, ["bounds", "--gen", "petersen", "--format", "json"])
        res_c = runner.invoke(main, ["bounds", "--gen", "petersen", "--format", "csv"])
        body = json.loads(res_j.output)
        rows = {r[0]: r for r in parse_csv(res_c.output)}
        for name in ("hoffman", "lima", "kolotilina", "inertia_bound", "ando_lin"):
            assert float(rows[name][1]) == body[name]["value"]
        assert float(rows["best"][1]) == body["best"]
        assert int(rows["best_ceil"][1]) == body["best_ceil"]

    def test_exact_formats_agree(self, runner):
        res_j = runner.invoke(main, ["exact", "--gen", "petersen", "--format", "json"])
        res_c = runner.invoke(main, ["exact", "--gen", "petersen", "--format", "csv"])
        body = json.loads(res_j.output)
        rows = {r[0]: r for r in parse_csv(res_c.output)}
        assert int(rows["chromatic"][1]) == body["chromatic"] == 3
        assert int(rows["clique"][1]) == body["clique"] == 2

    def test_weighted_flags_not_computed(self, runner, tmp_path):
        w = [[0.0, 1.0, 0.0, 0.0, 1.0],
             [1.0, 0.0, 1.0, 0.0, 0.0],
             [0.0, 1.0, 0.0, 1.0, 0.0],
             [0.0, 0.0, 1.0, 0.0, 1.0],
             [1.0, 0.0, 0.0, 1.0, 0.0]]
        p = tmp_path / "w.json"
        p.write_text(json.dumps(w))
        res = runner.invoke(main, ["bounds", "--gen", "cycle:5", "--weights", str(p)])
        assert res.exit_code == 0
        assert "not computed in weighted mode" in res.output
        res_j = runner.invoke(main, ["bounds", "--gen", "cycle:5", "--weights", str(p),
                                     "--format", "json"])
        body = json.loads(res_j.output)
        assert body["weighted"] is True
        assert body["lima"]["computed"] is False


class TestCertCommands:
    def test_verify_accept_exit_0(self, runner, cert_file):
        res = runner.invoke(main, ["cert-verify", "--gen", "cycle:5",
                                   "--cert", cert_file("cycle:5")])
        assert res.exit_code == 0
        assert "ACCEPT" in res.output

    def test_verify_reject_exit_2_names_edge(self, runner, cert_file):
        res = runner.invoke(main, ["cert-verify", "--gen", "cycle:5",
                                   "--cert", cert_file("cycle:5", corrupt=True)])
        assert res.exit_code == 2
        assert "REJECT" in res.output
        assert "orthogonality" in res.output

    def test_verify_structural_mismatch_exit_1(self, runner, cert_file):
        res = runner.invoke(main, ["cert-verify", "--gen", "cycle:4",
                                   "--cert", cert_file("cycle:5")])
        assert res.exit_code == 1

    def test_verify_malformed_cert_exit_1(self, runner, tmp_path):
        p = tmp_path / "broken.json"
        p.write_text("{\"n\": 5}")
        res = runner.invoke(main, ["cert-verify", "--gen", "cycle:5", "--cert", str(p)])
        assert res.exit_code == 1

    def test_verify_invalid_json_exit_1(self, runner, tmp_path):
        p = tmp_path / "notjson.json"
        p.write_text("{oops")
        res = runner.invoke(main, ["cert-verify", "--gen", "cycle:5", "--cert", str(p)])
        assert res.exit_code == 1

    @pytest.mark.parametrize("d", [1, 2])
    def test_lift_check_pass_exit_0(self, runner, cert_file, d):
        res = runner.invoke(main, ["cert-lift-check", "--gen", "cycle:5",
                                   "--cert", cert_file("cycle:5", d=d)])
        assert res.exit_code == 0
        for name in ("annihilation", "pinch_twirl", "fixed_point", "lima_identity"):
            assert name in res.output

    def test_lift_check_rejected_exit_2(self, runner, cert_file):
        res = runner.invoke(main, ["cert-lift-check", "--gen", "cycle:5",
                                   "--cert", cert_file("cycle:5", corrupt=True)])
        assert res.exit_code == 2

    def test_lift_check_perturbed_entry_exit_2(self, runner, tmp_path):
        g = generate("cycle:5")
        cert = proper_coloring_to_certificate(g, chromatic_number(g).coloring)
        payload = cert_to_payload(cert)
        payload["projectors"][0][0][0][0][0] += 0.01
        p = tmp_path / "perturbed.json"
        p.write_text(json.dumps(payload))
        # +0.01 on one entry breaks idempotency beyond 1e-8: rejected, exit 2
        res = runner.invoke(main, ["cert-lift-check", "--gen", "cycle:5",
                                   "--cert", str(p)])
        assert res.exit_code == 2


class TestTable1Command:
    def test_table_output(self, runner):
        res = runner.invoke(main, ["table1"])
        assert res.exit_code == 0
        lines = res.output.strip().splitlines()
        assert lines[0].split() == ["graph", "n", "chi", "inertia", "hoffman", "omega"]
        rows = {line.split()[0]: line.split() for line in lines[1:]}
        assert rows["cyclotomic13"][1:] == ["13", "4", "3.25", "2.51", "2"]
        assert rows["clebsch"][1:] == ["16", "4", "3.20", "2.67", "2"]
        assert rows["gq24"][1:] == ["27", "6", "4.50", "3.00", "3"]

    def test_csv_matches_json(self, runner):
        res_j = runner.invoke(main, ["table1", "--format", "json"])
        res_c = runner.invoke(main, ["table1", "--format", "csv"])
        body = {r["graph"]: r for r in json.loads(res_j.output)["rows"]}
        rows = parse_csv(res_c.output)
        header = rows[0]
        for row in rows[1:]:
            rec = dict(zip(header, row))
            ref = body[rec["graph"]]
            assert int(rec["chi"]) == ref["chromatic"]
            assert float(rec["inertia"]) == ref["inertia_bound"]
            assert float(rec["hoffman"]) == ref["hoffman"]


class TestBudgetResolution:
    def test_env_var_used_when_flag_absent(self, runner, monkeypatch):
        monkeypatch.setenv("QCHROM_BUDGET", "0.05")
        res = runner.invoke(main, ["exact", "--gen", "erdos_renyi:60,0.5", "--seed", "1",
                                   "--format", "json"])
        assert res.exit_code == 0
        body = json.loads(res.output)
        assert body["status"] == "timed_out"

    def test_flag_wins_over_env(self, runner, monkeypatch):
        monkeypatch.setenv("QCHROM_BUDGET", "0.0001")
        res = runner.invoke(main, ["exact", "--gen", "petersen", "--budget", "30",
                                   "--format", "json"])
        assert res.exit_code == 0
        assert json.loads(res.output)["status"] == "complete"

    def test_bad_env_value_exit_1(self, runner, monkeypatch):
        monkeypatch.setenv("QCHROM_BUDGET", "soon")
        res = runner.invoke(main, ["exact", "--gen", "petersen"])
        assert res.exit_code == 1


class TestRemoteMode:
    @pytest.fixture(autouse=True)
    def asgi_transport(self, monkeypatch):
        monkeypatch.setattr(cli_mod, "_make_client",
                            lambda server: TestClient(app, base_url=server))

    def test_bounds_remote_matches_local(self, runner):
        local = runner.invoke(main, ["bounds", "--gen", "clebsch", "--format", "json"])
        remote = runner.invoke(main, ["--server", "http://testserver", "bounds",
                                      "--gen", "clebsch", "--format", "json"])
        assert remote.exit_code == 0
        assert json.loads(remote.output) == json.loads(local.output)

    def test_remote_error_exit_1(self, runner):
        res = runner.invoke(main, ["--server", "http://testserver", "bounds",
                                   "--g6", "!!!bad"])
        assert res.exit_code == 1
        assert "GraphParseError" in res.output

    def test_remote_cert_verify_exit_codes(self, runner, cert_file):
        good = cert_file("cycle:5")
        bad = cert_file("cycle:5", corrupt=True)
        res = runner.invoke(main, ["--server", "http://testserver", "cert-verify",
                                   "--gen", "cycle:5", "--cert", good])
        assert res.exit_code == 0
        res = runner.invoke(main, ["--server", "http://testserver", "cert-verify",
                                   "--gen", "cycle:5", "--cert", bad])
        assert res.exit_code == 2

    def test_remote_table1(self, runner):
        res = runner.invoke(main, ["--server", "http://testserver", "table1",
                                   "--budget", "60"])
        assert res.exit_code == 0
        assert "cyclotomic13" in res.output

    def test_unreachable_server_exit_1(self, runner, monkeypatch):
        monkeypatch.setattr(cli_mod, "_make_client", cli_orig_make_client)
        res = runner.invoke(main, ["--server", "http://127.0.0.1:1", "bounds",
                                   "--gen", "petersen"])
        assert res.exit_code == 1
        assert "cannot reach server" in res.output


cli_orig_make_client = cli_mod._make_client
