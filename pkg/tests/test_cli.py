import csv
import io
import json

from zsdl.cli import cli_main
from zsdl.families import comb_plus_e_graph
from zsdl.graph_core import encode_graph6, parse_graph6
from zsdl.zero_forcing import is_zero_forcing_set


def run_cli(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInvariants:
    def test_k3_row(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--graph", "Bw")
        assert code == 0
        assert "n=3" in out and "z=2" in out and "sdim=2" in out and "dim=2" in out
        assert "sigma=0" in out and "rank=1" in out and "class=unicyclic" in out

    def test_csv_output(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--graph", "Bw", "--out", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0]["graph6"] == "Bw" and rows[0]["z"] == "2"

    def test_json_output_from_file(self, capsys, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("Bw\nBg\n")
        code, out, _ = run_cli(
            capsys, "invariants", "--in", str(path), "--out", "json"
        )
        assert code == 0
        rows = json.loads(out)
        assert [r["graph6"] for r in rows] == ["Bw", "Bg"]
        assert rows[1]["class"] == "tree"

    def test_disconnected_row(self, capsys):
        # P_2 + P_1: Z and sdim are additive, dim/rank/class are blank-ish
        g6 = "B_"
        code, out, _ = run_cli(capsys, "invariants", "--graph", g6)
        assert code == 0
        assert "class=disconnected" in out

    def test_bad_graph6_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "invariants", "--graph", "A_?")
        assert code == 2 and "error" in err


class TestWitness:
    def test_z_witness(self, capsys):
        code, out, _ = run_cli(capsys, "witness", "--graph", "F~~~w", "--invariant", "z")
        assert code == 0
        value = int(out.split()[0].split("=")[1])
        witness = [int(x) for x in out.split("witness=")[1].split(",")]
        g = parse_graph6("F~~~w")
        assert len(witness) == value
        assert is_zero_forcing_set(g, witness)

    def test_sdim_witness(self, capsys):
        code, out, _ = run_cli(capsys, "witness", "--graph", "Bw", "--invariant", "sdim")
        assert code == 0 and out.startswith("sdim=2")


class TestTrim:
    def test_protected_trace(self, capsys):
        # triangle with a pendant 3-vertex tail
        from zsdl.graph_core import Graph

        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)])
        code, out, _ = run_cli(
            capsys, "trim", "--graph", encode_graph6(g), "--protect-cycle"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("peripheral-leaf target=5 dZ=+0 dsdim=+0")
        assert lines[-1].startswith("result ")
        assert parse_graph6(lines[-1].split()[1]).n == 4

    def test_unprotected_to_empty(self, capsys):
        from zsdl.graph_core import Graph

        tad = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        code, out, _ = run_cli(capsys, "trim", "--graph", encode_graph6(tad))
        assert code == 0
        assert out.strip().splitlines()[-1] == "result (empty)"


class TestGen:
    def test_comb_plus_e(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--family", "comb:k=4", "--plus-e")
        assert code == 0
        g = parse_graph6(out.strip())
        assert g == comb_plus_e_graph(4)

    def test_plus_e_rejected_elsewhere(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--family", "grid:s=3", "--plus-e")
        assert code == 2 and "comb" in err

    def test_sun_spec(self, capsys):
        code, out, _ = run_cli(
            capsys, "gen", "--family", "sun:n=6,u=1,1,0,1,0,0"
        )
        assert code == 0
        assert parse_graph6(out.strip()).n == 9


class TestScan:
    def test_clean_scan_exit_zero(self, capsys):
        code, out, err = run_cli(
            capsys, "scan", "--claim", "CLM-U-LEQ", "--family", "tree-plus-e:n=6"
        )
        assert code == 0
        report = json.loads(out)
        assert report["graphsChecked"] == 1296 * 10
        assert report["counterexamples"] == []
        assert "ok" in err

    def test_scan_writes_reports(self, capsys, tmp_path):
        base = str(tmp_path / "report")
        code, _, err = run_cli(
            capsys,
            "scan", "--claim", "CLM-SUN", "--family", "partial-suns:n=3..5",
            "--jobs", "2", "--out", base,
        )
        assert code == 0
        data = json.loads(open(base + ".json").read())
        assert data["claimId"] == "CLM-SUN" and data["graphsChecked"] == 56
        assert open(base + ".csv").read().startswith("graph6,")

    def test_usage_error_exit_two(self, capsys):
        code, _, _ = run_cli(capsys, "scan", "--claim", "CLM-NOPE", "--family", "cycle:n=3")
        assert code == 2

    def test_missing_subcommand_exit_two(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2


class TestRatio:
    def test_grid_ratio_output(self, capsys):
        code, out, _ = run_cli(capsys, "ratio", "--family", "grid:s=3", "--top", "1")
        assert code == 0
        data = json.loads(out)
        assert data["top"][0]["ratio"] == {"numerator": 1, "denominator": 4}
