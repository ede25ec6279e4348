import json

import pytest

from incpath.cli import main
from incpath.io import load_graph


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err
    return _run


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


K3 = json.dumps({"k": 2, "vertices": [1, 2, 3], "edges": [[1, 2], [2, 3], [1, 3]]})


class TestConvert:
    def test_edge_list_to_json(self, run, tmp_path):
        src = write(tmp_path, "g.txt", "1 2\n2 3\n")
        code, out, _ = run("convert", "--in", src, "--from", "edge-list-text", "--to", "canonical-json")
        assert code == 0
        obj = json.loads(out)
        assert obj["k"] == 2 and obj["edges"] == [[1, 2], [2, 3]]

    def test_json_to_dot(self, run, tmp_path):
        src = write(tmp_path, "k3.json", K3)
        code, out, _ = run("convert", "--in", src, "--from", "canonical-json", "--to", "dot")
        assert code == 0
        assert out.count(" -- ") == 3 and out.count(";") == 6

    def test_malformed_json(self, run, tmp_path):
        src = write(tmp_path, "bad.json", '{"k": 2,\n "vertices": [1, 2],\n "edges": [[1, 2]\n')
        code, _, err = run("convert", "--in", src, "--from", "canonical-json", "--to", "dot")
        assert code == 2 and "line" in err and "column" in err

    def test_round_trip(self, run, tmp_path):
        obj = {"k": 2, "vertices": [5, "a", 3, 9], "edges": [[3, "a"], [5, 3]]}
        src = write(tmp_path, "g.json", json.dumps(obj))
        code, text, _ = run("convert", "--in", src, "--from", "canonical-json", "--to", "edge-list-text")
        mid = write(tmp_path, "g.txt", text)
        code, back, _ = run("convert", "--in", mid, "--from", "edge-list-text", "--to", "canonical-json")
        assert code == 0 and load_graph(back) == load_graph(json.dumps(obj))

    def test_json_out(self, run, tmp_path):
        src = write(tmp_path, "k3.json", K3)
        dest = tmp_path / "out.txt"
        code, out, _ = run("convert", "--in", src, "--from", "canonical-json", "--to",
                           "edge-list-text", "--json-out", dest)
        assert code == 0 and not out and dest.read_text() == "1 2\n2 3\n1 3\n"

    def test_missing_file(self, run, tmp_path):
        code, _, err = run("convert", "--in", tmp_path / "nope", "--from", "canonical-json", "--to", "dot")
        assert code == 2 and "cannot read" in err


class TestCommands:
    def test_gen(self, run):
        code, out, _ = run("gen", "HalfGraph", "--params", "n=3")
        assert code == 0 and len(json.loads(out)["edges"]) == 6

    def test_gen_bad_params(self, run):
        assert run("gen", "HalfGraph", "--params", "m=3")[0] == 2
        assert run("gen", "HalfGraph", "--params", "n")[0] == 2

    def test_core(self, run, tmp_path):
        src = write(tmp_path, "k3.json", K3)
        code, out, _ = run("core", "--graph", src, "--kind", "d", "--thr", 2)
        assert code == 0 and json.loads(out)["core"] == [1, 2, 3]
        code, out, _ = run("core", "--graph", src, "--kind", "paired", "--thr", 0, "--v1", "1")
        assert json.loads(out)["found"] is True
        assert run("core", "--graph", src, "--kind", "out", "--thr", 1)[0] == 2

    def test_synth_and_search(self, run, tmp_path):
        src = write(tmp_path, "k3.json", K3)
        lab = tmp_path / "lab.json"
        cert = tmp_path / "cert.json"
        code, _, _ = run("synth", "chi-star", "--graph", src, "--out", lab, "--certificate", cert)
        assert code == 0 and json.loads(cert.read_text())["bound"] == 3
        code, out, _ = run("search", "vertex-path", "--graph", src, "--labeling", lab)
        assert code == 0 and json.loads(out)["length"] == 3
        code, out, _ = run("search", "vertex-path", "--graph", src, "--labeling", lab, "--target", 4)
        assert json.loads(out) == {"result": "none", "exhaustive": True}

    def test_refusal_exit(self, run, tmp_path):
        edges = [[a, b] for a in range(4) for b in range(a + 1, 4)]
        edges += [[a + 4, b + 4] for a, b in edges] + [[3, 4]]
        src = write(tmp_path, "g.json", json.dumps({"k": 2, "vertices": list(range(8)), "edges": edges}))
        code, _, err = run("synth", "z-two-sided", "--graph", src, "--v1", "0,1,2,3", "--d", 3)
        assert code == 1 and "refused" in err

    def test_budget_exit(self, run, tmp_path):
        n = 8
        edges = [[a, b] for a in range(n) for b in range(a + 1, n)]
        src = write(tmp_path, "k8.json", json.dumps({"k": 2, "vertices": list(range(n)), "edges": edges}))
        lab = {"target": "edges", "kind": "nat", "map": {str(i): i + 1 for i in range(len(edges))}}
        lp = write(tmp_path, "lab.json", json.dumps(lab))
        code, _, err = run("search", "edge-path", "--graph", src, "--labeling", lp, "--budget-nodes", 5)
        assert code == 3 and "budget" in err

    def test_adversarial(self, run, tmp_path):
        src = write(tmp_path, "k3.json", K3)
        code, out, _ = run("adversarial", "--graph", src)
        assert code == 0 and json.loads(out)["value"] == 3

    def test_experiment(self, run):
        code, out, err = run("experiment", "z-matching", "-p", "trials=5", "--seed", 3)
        report = json.loads(out)
        assert code == 0 and report["seed"] == 3 and "PASS" in err

    def test_experiment_failure_exit(self, run):
        code, _, err = run("experiment", "typesplit-audit", "-p", "trials=40")
        assert code == 1 and "FAIL literal-ell-descent" in err

    def test_experiment_errors(self, run):
        code, _, err = run("experiment", "nope")
        assert code == 2 and "ghrv-oracle" in err
        assert run("experiment", "z-matching", "-p", "bogus=1")[0] == 2

    def test_experiment_list(self, run):
        code, out, _ = run("experiment", "--list")
        assert code == 0 and "merge-audit" in out

    def test_usage_error(self, run):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2
