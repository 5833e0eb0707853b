import pytest

from eqcolor.check import check_coloring
from eqcolor.cli import main
from eqcolor.generators import complete_bipartite, cycle, path, random_graph_bounded_degree, star
from eqcolor.graph import Graph, coloring_from_text, graph_from_dimacs, graph_to_dimacs


@pytest.fixture
def write(tmp_path):
    def _write(name, g):
        p = tmp_path / name
        p.write_bytes(graph_to_dimacs(g) if isinstance(g, Graph) else g.encode())
        return str(p)
    return _write


def test_color_hs_writes_valid_coloring(write, tmp_path, capsys):
    src = write("c5.col", cycle(5))
    out, trace = tmp_path / "c5.txt", tmp_path / "c5.trace"
    assert main(["color", "--k", "3", "--algo", "hs", src, "-o", str(out), "--trace", str(trace)]) == 0
    f = coloring_from_text(out.read_text(), 5, 3)
    assert check_coloring(cycle(5), f, "equitable").ok
    assert trace.exists()
    report = capsys.readouterr().err.strip().split("\t")
    assert report[1:4] == ["hs", "3", "ok"] and report[-1] == "pass"


def test_auto_falls_back_to_oracle_and_proves_no(write, capsys):
    assert main(["color", "--k", "3", write("k33.col", complete_bipartite(3, 3))]) == 2
    assert "no equitable 3-coloring" in capsys.readouterr().err


def test_forest_names_the_witness(write, capsys):
    assert main(["color", "--k", "3", "--algo", "forest", write("s.col", star(6))]) == 2
    assert "vertex 1" in capsys.readouterr().err


def test_no_applicable_algorithm(write):
    assert main(["color", "--k", "3", "--algo", "hs", write("s.col", star(6))]) == 3
    assert main(["color", "--k", "3", "--algo", "ore", write("s.col", star(6))]) == 3
    assert main(["color", "--k", "3", "--algo", "forest", write("c.col", cycle(5))]) == 3


def test_auto_prefers_forest_for_trees(write, capsys):
    assert main(["color", "--k", "3", write("s.col", star(4))]) == 0
    assert "\tforest\t" in capsys.readouterr().err


def test_ore_path(write, capsys):
    g = Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
    assert main(["color", "--k", "4", "--algo", "ore", write("g.col", g)]) == 0
    f = coloring_from_text(capsys.readouterr().out, 6, 4)
    assert check_coloring(g, f, "equitable").ok


def test_seeded_runs_are_identical(write, tmp_path):
    src = write("r.col", random_graph_bounded_degree(80, 5, 3))
    outs = []
    for i in range(2):
        o = tmp_path / f"o{i}.txt"
        assert main(["color", "--k", "6", "--algo", "hs", "--seed", "11", src, "-o", str(o)]) == 0
        outs.append(o.read_bytes())
    assert outs[0] == outs[1]


def test_io_errors(tmp_path, write, capsys):
    assert main(["color", "--k", "3", str(tmp_path / "missing.col")]) == 1
    assert main(["color", "--k", "3", write("bad.col", "p edge 2 1\ne 1 5\n")]) == 1
    assert "line 2" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["color", write("c.col", cycle(5))])
    assert exc.value.code == 1


def test_check(write, capsys):
    src = write("p.col", path(3))
    assert main(["check", "--k", "2", src, write("ok.txt", "1 0\n2 1\n3 0\n")]) == 0
    assert main(["check", "--k", "2", src, write("bad.txt", "1 0\n2 0\n3 1\n")]) == 2
    assert "monochromatic_edge\t1 2" in capsys.readouterr().out


def test_check_se_profile(write):
    src = write("e.col", Graph(7))
    lists = write("l.txt", "".join(f"{v}: 0 1 2\n" for v in range(1, 8)))
    col = write("c.txt", "1 0\n2 0\n3 0\n4 1\n5 1\n6 1\n7 2\n")
    assert main(["check", "--mode", "se", "--lists", lists, src, col]) == 2
    assert main(["check", "--mode", "equitable_list", "--lists", lists, src, col]) == 0


def test_check_format_error(write):
    assert main(["check", "--k", "2", write("p.col", path(3)), write("x.txt", "1 0\n")]) == 1


def test_gen(tmp_path, capsys):
    assert main(["gen", "gk", "3"]) == 0
    g = graph_from_dimacs(capsys.readouterr().out)
    assert (g.n, g.m) == (48, 93)
    assert main(["gen", "nope", "3"]) == 1
    out = tmp_path / "t.col"
    assert main(["gen", "tree", "10", "--seed", "4", "-o", str(out)]) == 0
    assert graph_from_dimacs(out.read_text()).is_forest()


def test_gen_union(write, capsys):
    a = write("a.col", star(2))
    assert main(["gen", "disjoint_union", "--part", a, "--part", a]) == 0
    assert graph_from_dimacs(capsys.readouterr().out).n == 6


def test_oracle_commands(write, tmp_path, capsys):
    k33 = write("k33.col", complete_bipartite(3, 3))
    assert main(["oracle", "equitable", "--k", "3", k33]) == 2
    assert main(["oracle", "equitable", "--k", "2", k33, "--cert", str(tmp_path / "c.txt")]) == 0
    assert capsys.readouterr().out.split() == ["no", "yes"]
    cherries = write("ch.col", "p edge 6 4\ne 1 2\ne 1 3\ne 4 5\ne 4 6\n")
    cert = tmp_path / "w.txt"
    assert main(["oracle", "choosable", "--k", "2", "--mode", "proportional", cherries,
                 "--cert", str(cert)]) == 2
    assert cert.read_text().startswith("1: 0 1\n")
    lists = write("l.txt", "".join(f"{v}: 0 1 2\n" for v in range(1, 7)))
    assert main(["oracle", "list", "--lists", lists, k33]) == 2
    lists = write("l4.txt", "".join(f"{v}: 0 1 2 3\n" for v in range(1, 7)))
    assert main(["oracle", "list", "--lists", lists, k33]) == 0
    assert main(["oracle", "equitable", k33]) == 1
    assert main(["oracle", "equitable", "--k", "4", write("r.col", random_graph_bounded_degree(40, 6, 1)),
                 "--node-limit", "3"]) == 3


def test_m0(capsys):
    assert main(["m0", "--n", "6", "--k", "3", "--verify-exhaustive"]) == 0
    assert capsys.readouterr().out.strip() == "formula=5 exhaustive=5 PASS"
    assert main(["m0", "--n", "3", "--k", "3"]) == 0
    assert capsys.readouterr().out.strip() == "formula=inf"
    assert main(["m0", "--n", "3", "--k", "1"]) == 1


def test_bench_small(capsys):
    assert main(["bench", "--sizes", "60,120", "--delta", "4", "--repeats", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("n\tk") and len(lines) == 3
    n, k, _, shifts, bound, _ = lines[1].split("\t")
    assert int(shifts) <= int(bound) and k == "5"
    assert main(["bench", "--sizes", "a,b"]) == 1
