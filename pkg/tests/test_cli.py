import json

from dompoly import cli
from dompoly.formulas import poly_join, poly_H, order_of_H
from dompoly.graphs import Graph, to_edge_list
from dompoly.polynomials import Poly
from dompoly.realroots import certify_cg


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    def test_friendship_2(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "friendship:2")
        assert code == 0
        assert json.loads(out)["coeffs"] == ["0", "1", "8", "10", "5", "1"]

    def test_cocktail_with_oracle(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "cocktail_party:2", "--oracle")
        assert code == 0
        assert json.loads(out)["coeffs"] == ["0", "0", "6", "4", "1"]

    def test_edge_list_k3(self, capsys, tmp_path):
        path = tmp_path / "k3.txt"
        path.write_text("3 3\n0 1\n1 2\n0 2\n")
        code, out, _ = run(capsys, "compute", "--edge-list", str(path))
        assert code == 0
        assert json.loads(out)["coeffs"] == ["0", "3", "3", "1"]

    def test_range_emits_array(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "complete:1..3")
        assert code == 0
        records = json.loads(out)
        assert [r["params"] for r in records] == [[1], [2], [3]]

    def test_oracle_mismatch_is_integrity_error(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "closed_form", lambda spec: Poly([0, 9, 9]))
        code, _, err = run(capsys, "compute", "--family", "cocktail_party:2", "--oracle")
        assert code == 4
        assert "integrity" in err

    def test_capacity_exit_code(self, capsys, tmp_path):
        path = tmp_path / "big.txt"
        path.write_text(to_edge_list(Graph(29)))
        code, _, err = run(capsys, "compute", "--edge-list", str(path))
        assert code == 2
        assert "capacity" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code, out, _ = run(capsys, "compute", "--family", "friendship:1", "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["coeffs"] == ["0", "3", "3", "1"]


class TestCertify:
    def test_sweep_summary(self, capsys):
        code, out, _ = run(capsys, "certify", "--family", "cocktail_party:1..10")
        assert code == 0
        lines = out.strip().split("\n")
        rows = [json.loads(line) for line in lines]
        assert rows[-1] == {"all_in_cg": True}
        assert [r["n"] for r in rows[:-1]] == list(range(1, 11))
        assert all(r["in_cg"] for r in rows[:-1])
        assert all(r["gamma"] == 2 for r in rows[:-1])

    def test_parity_filter(self, capsys):
        code, out, _ = run(capsys, "certify", "--family", "friendship:1..9", "--odd-only")
        rows = [json.loads(line) for line in out.strip().split("\n")]
        assert [r["n"] for r in rows[:-1]] == [1, 3, 5, 7, 9]
        assert rows[-1] == {"all_in_cg": True}

    def test_join_mode_matches_library(self, capsys):
        code, out, _ = run(capsys, "certify", "--join", "H:n,H:n", "--range", "3..6")
        assert code == 0
        rows = [json.loads(line) for line in out.strip().split("\n")]
        assert rows[-1] == {"all_in_cg": True}
        for row in rows[:-1]:
            n = row["n"]
            p = poly_join(poly_H(n), order_of_H(n), poly_H(n), order_of_H(n))
            assert row["in_cg"] == certify_cg(p).in_cg

    def test_join_offset_operand(self, capsys):
        code, out, _ = run(capsys, "certify", "--join", "B:n+1,B:n", "--range", "2..4", "--even-only")
        rows = [json.loads(line) for line in out.strip().split("\n")]
        assert [r["n"] for r in rows[:-1]] == [2, 4]
        assert rows[-1] == {"all_in_cg": True}

    def test_join_requires_range(self, capsys):
        code, _, err = run(capsys, "certify", "--join", "H:n,H:n")
        assert code == 1 and "range" in err

    def test_edge_list_instance(self, capsys, tmp_path):
        path = tmp_path / "p3.txt"
        path.write_text("3 2\n0 1\n1 2\n")
        code, out, _ = run(capsys, "certify", "--edge-list", str(path))
        rows = [json.loads(line) for line in out.strip().split("\n")]
        assert rows[0]["in_cg"] is False
        assert rows[-1] == {"all_in_cg": False}


class TestSweep:
    def test_csv_table(self, capsys):
        code, out, err = run(capsys, "sweep", "--family", "cocktail_party:1..5")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "family,n,gamma,nonzero_real_root_count,in_cg"
        assert len(lines) == 6
        assert all(line.endswith(",true") for line in lines[1:])
        assert "all_in_cg: true" in err


class TestRoots:
    def test_csv_values(self, capsys):
        code, out, _ = run(capsys, "roots", "--family", "complement_friendship:2")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "family,n,re,im,residual"
        assert len(lines) == 3
        for line in lines[1:]:
            _, n, re, im, residual = line.split(",")
            assert n == "2"
            assert abs(float(re) + 2.0) < 1e-10
            assert abs(abs(float(im)) - 2**0.5) < 1e-10
            assert float(residual) < 1e-10

    def test_row_counts_are_2n_minus_2(self, capsys):
        code, out, _ = run(capsys, "roots", "--family", "complement_friendship:1..6")
        lines = out.strip().split("\n")[1:]
        by_n = {}
        for line in lines:
            n = int(line.split(",")[1])
            by_n[n] = by_n.get(n, 0) + 1
        assert by_n == {n: 2 * n - 2 for n in range(2, 7)}

    def test_tolerance_window(self, capsys):
        code, _, err = run(capsys, "roots", "--family", "complete:3", "--tol", "1e-20")
        assert code == 1 and "tol" in err
        code, _, err = run(capsys, "roots", "--family", "complete:3", "--tol", "1e-3")
        assert code == 1 and "tol" in err

    def test_non_convergence_exit(self, capsys):
        code, _, err = run(
            capsys, "roots", "--family", "complement_friendship:12", "--max-iter", "2"
        )
        assert code == 3 and "solver" in err


class TestPlot:
    def test_svg_output_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        code1, _, _ = run(
            capsys, "plot", "--family", "complement_friendship:1..6", "--circle", "--out", str(a)
        )
        code2, _, _ = run(
            capsys, "plot", "--family", "complement_friendship:1..6", "--circle", "--out", str(b)
        )
        assert code1 == code2 == 0
        data = a.read_bytes()
        assert data == b.read_bytes()
        assert data.startswith(b"<svg")
        assert b"<ellipse" in data  # the --circle overlay
        assert data.count(b"<circle") == sum(2 * n - 2 for n in range(2, 7))

    def test_without_circle_overlay(self, capsys, tmp_path):
        out = tmp_path / "plain.svg"
        run(capsys, "plot", "--family", "complement_friendship:2..4", "--out", str(out))
        assert b"<ellipse" not in out.read_bytes()


class TestUsageErrors:
    def test_requires_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "compute")
        assert code == 1
        code, _, err = run(
            capsys, "certify", "--family", "complete:3", "--join", "H:n,H:n", "--range", "1..2"
        )
        assert code == 1

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "compute", "--family", "nonsense:3")
        assert code == 1

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "certify", "--family", "complete:5..2")
        assert code == 1

    def test_conflicting_parity_flags(self, capsys):
        code, _, err = run(
            capsys, "certify", "--family", "complete:1..4", "--odd-only", "--even-only"
        )
        assert code == 1

    def test_bad_join_operand(self, capsys):
        code, _, err = run(capsys, "certify", "--join", "Z:n,H:n", "--range", "1..2")
        assert code == 1
