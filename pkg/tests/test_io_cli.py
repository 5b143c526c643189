import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from orthocover import builders, io
from orthocover.cli import main
from orthocover.errors import OrthoCoverError
from orthocover.graph import Covering, OrthogonalColouring, Partition
from orthocover.verify import verify_paper


class TestJsonRoundTrip:
    @given(graphs(max_n=10))
    def test_graph(self, g):
        assert io.graph_from_json(json.loads(io.dumps(io.graph_to_json(g)))) == g

    def test_labels_survive(self):
        g, _ = builders.figure1_graph()
        back = io.graph_from_json(io.graph_to_json(g))
        assert back.labels == g.labels

    @given(st.permutations(range(12)), st.sampled_from([1, 2, 3, 4, 6, 12]))
    def test_partition_and_covering(self, perm, k):
        groups = tuple(tuple(perm[i:i + k]) for i in range(0, 12, k))
        p, c = Partition(groups), Covering(groups)
        assert io.partition_from_json(io.partition_to_json(p)) == p
        assert io.covering_from_json(io.covering_to_json(c)) == c

    @given(st.integers(1, 5).flatmap(lambda N: st.tuples(
        st.just(N), st.lists(st.tuples(st.integers(0, N - 1), st.integers(0, N - 1)), max_size=10))))
    def test_colouring(self, data):
        N, pairs = data
        c = OrthogonalColouring(N, tuple(pairs))
        assert io.colouring_from_json(json.loads(io.dumps(io.colouring_to_json(c)))) == c

    @pytest.mark.parametrize("payload", [{}, {"n": 2, "edges": [[0]]}, {"n": 2, "edges": [[0, 5]]}])
    def test_malformed_graph(self, payload):
        with pytest.raises(OrthoCoverError):
            io.graph_from_json(payload)

    def test_malformed_colouring(self):
        with pytest.raises(OrthoCoverError):
            io.colouring_from_json({"num_colours": 2, "pairs": [[0, 1, 1]]})


class TestDot:
    def test_figure1(self):
        g, _ = builders.figure1_graph()
        text = io.export_dot(g)
        assert text.count("[label=") == 9 and text.count(" -- ") == 9
        assert text == io.export_dot(g)

    def test_single_vertex(self):
        text = io.export_dot(builders.empty_graph(1))
        assert text.count("[label=") == 1 and " -- " not in text

    def test_d14_one_based_labels(self):
        g = builders.double_star(14)
        text = io.export_dot(g, builders.named_colouring("D14"), base=1)
        assert '"x0" [label="(1,1)"]' in text and '"y0" [label="(2,2)"]' in text
        assert '"x6" [label="(4,4)"]' in text and '"y6" [label="(3,4)"]' in text

    def test_mismatch(self):
        with pytest.raises(OrthoCoverError):
            io.export_dot(builders.empty_graph(2), OrthogonalColouring(1, ((0, 0),)))


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write


class TestCli:
    def test_gen_and_solve_cover_none(self, tmp_path, capsys):
        g, p = tmp_path / "g.json", tmp_path / "p.json"
        assert main(["gen", "figure1", "--out", str(g), "--partition-out", str(p)]) == 0
        assert main(["solve", "cover", "--graph", str(g), "--partition", str(p)]) == 1
        assert "proved" in capsys.readouterr().err.lower()

    def test_solve_cover_found(self, tmp_path, capsys):
        g, p, out = tmp_path / "g.json", tmp_path / "p.json", tmp_path / "c.json"
        main(["gen", "G1", "--out", str(g), "--partition-out", str(p)])
        assert main(["solve", "cover", "--graph", str(g), "--partition", str(p), "--out", str(out)]) == 0
        assert main(["check", "--graph", str(g), "--covering", str(out), "--partition", str(p)]) == 0

    def test_solve_ochi_writes_witness(self, tmp_path, capsys):
        g = tmp_path / "g.json"
        main(["gen", "subdivided-double-star", "--n", "3", "--out", str(g)])
        capsys.readouterr()
        assert main(["solve", "ochi", "--graph", str(g)]) == 0
        captured = capsys.readouterr()
        assert json.loads(captured.out)["num_colours"] == 4
        assert "ochi = 4" in captured.err

    def test_inconclusive(self, tmp_path, monkeypatch):
        g = tmp_path / "g.json"
        main(["gen", "rook", "--n", "3", "--out", str(g)])
        assert main(["solve", "colour", "--colours", "3", "--graph", str(g), "--budget", "2"]) == 2
        monkeypatch.setenv("ORTHOCOVER_BUDGET", "2")
        assert main(["solve", "ochi", "--graph", str(g)]) == 2

    def test_bad_budget_env(self, tmp_path, monkeypatch):
        g = tmp_path / "g.json"
        main(["gen", "rook", "--n", "2", "--out", str(g)])
        monkeypatch.setenv("ORTHOCOVER_BUDGET", "lots")
        assert main(["solve", "ochi", "--graph", str(g)]) == 64

    def test_check_g1_fixture(self, tmp_path, capsys):
        g, c = tmp_path / "g.json", tmp_path / "c.json"
        main(["gen", "G1", "--out", str(g)])
        main(["gen", "fixture", "--name", "G1", "--out", str(c)])
        assert main(["check", "--graph", str(g), "--colouring", str(c)]) == 0
        assert capsys.readouterr().out.startswith("pass")

    def test_check_figure1_covering_fails(self, tmp_path, files, capsys):
        g, p = tmp_path / "g.json", tmp_path / "p.json"
        main(["gen", "figure1", "--out", str(g), "--partition-out", str(p)])
        cov = files("cov.json", {"transversals": [[0, 3, 6], [1, 4, 7], [2, 5, 8]]})
        assert main(["check", "--graph", str(g), "--covering", cov, "--partition", str(p)]) == 1
        assert capsys.readouterr().out.startswith("fail:")

    def test_check_duplicate_pair_names_vertices(self, files, capsys):
        g = files("g.json", {"n": 3, "edges": []})
        c = files("c.json", {"num_colours": 2, "pairs": [[0, 0], [1, 1], [0, 0]]})
        assert main(["check", "--graph", g, "--colouring", c]) == 1
        out = capsys.readouterr().out
        assert "v0" in out and "v2" in out

    def test_construct_double_star(self, capsys):
        assert main(["construct", "double-star", "--m", "14"]) == 0
        assert json.loads(capsys.readouterr().out)["num_colours"] == 4
        assert main(["construct", "double-star", "--m", "8"]) == 1
        assert "N+1" in capsys.readouterr().err

    def test_construct_hall_and_degenerate(self, tmp_path, capsys):
        g, p, cov = tmp_path / "g.json", tmp_path / "p.json", tmp_path / "cov.json"
        main(["gen", "nkr", "--parts", "3", "--size", "6", "--matching", "6", "--seed", "4",
              "--out", str(g), "--partition-out", str(p)])
        assert "seed: 4" in capsys.readouterr().err
        assert main(["construct", "hall", "--graph", str(g), "--partition", str(p),
                     "--covering-out", str(cov)]) == 0
        assert main(["check", "--graph", str(g), "--covering", str(cov), "--partition", str(p)]) == 0
        t = tmp_path / "t.json"
        main(["gen", "tree", "--n", "100", "--cap", "3", "--out", str(t)])
        capsys.readouterr()
        assert main(["construct", "degenerate", "--graph", str(t)]) == 0
        assert json.loads(capsys.readouterr().out)["num_colours"] == 10
        main(["gen", "subdivided-double-star", "--n", "3", "--out", str(t)])
        assert main(["construct", "degenerate", "--graph", str(t)]) == 1

    def test_export_dot(self, tmp_path, capsys):
        g, c = tmp_path / "g.json", tmp_path / "c.json"
        main(["gen", "double-star", "--m", "14", "--out", str(g)])
        main(["gen", "fixture", "--name", "D14", "--out", str(c)])
        capsys.readouterr()
        assert main(["export-dot", "--graph", str(g), "--colouring", str(c), "--one-based"]) == 0
        assert '"x0" [label="(1,1)"]' in capsys.readouterr().out

    @pytest.mark.parametrize("argv", [[], ["solve"], ["gen", "bogus"], ["solve", "ochi"],
                                      ["gen", "tree", "--n", "5"]])
    def test_usage_errors(self, argv, capsys):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code
        assert code == 64

    def test_missing_file(self):
        assert main(["solve", "ochi", "--graph", "/nonexistent/g.json"]) == 64

    def test_invalid_json(self, tmp_path):
        bad = tmp_path / "g.json"
        bad.write_text("{")
        assert main(["solve", "ochi", "--graph", str(bad)]) == 64

    def test_verify_paper_subset(self, tmp_path, capsys):
        report = tmp_path / "r.json"
        assert main(["verify-paper", "--only", "no-covering-333", "ochi-333",
                     "--report", str(report), "--witness-dir", str(tmp_path / "w")]) == 0
        data = json.loads(report.read_text())
        assert [c["id"] for c in data["claims"]] == ["no-covering-333", "ochi-333"]
        assert (tmp_path / "w" / "ochi-333.json").exists()


class TestVerifyPaper:
    def test_tiny_budget_is_inconclusive(self):
        report = verify_paper(budget=5, only=["no-covering-333"])
        assert [c.status for c in report.claims] == ["inconclusive"]
        assert report.exit_code == 2

    def test_deterministic_modulo_timing(self):
        only = ["no-covering-333", "correspondence", "tree-dichotomy"]
        a = verify_paper(seed=3, only=only).to_json(timing=False)
        b = verify_paper(seed=3, only=only).to_json(timing=False)
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
