"""CLI surface: formats, exit codes under the claim contract, round trips."""

import json

from bht import cli
from bht import families as F
from bht.graphs import canonical_form, from_graph6, parse_edge_list
from conftest import brute_isomorphic


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_family_edgelist_round_trip(capsys):
    code, out, _ = run(capsys, "family", "--name", "complete_split",
                       "--params", "n=6,k=2")
    assert code == 0
    g = parse_edge_list(out)
    assert brute_isomorphic(g, F.complete_split(6, 2))


def test_family_graph6(capsys):
    code, out, _ = run(capsys, "family", "--name", "theta", "--params",
                       "p=1,q=2,r=3", "--format", "graph6")
    assert code == 0
    assert canonical_form(from_graph6(out.strip())) == canonical_form(F.theta(1, 2, 3))


def test_family_usage_errors(capsys):
    code, _, err = run(capsys, "family", "--name", "book", "--params", "m=10")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "family", "--name", "nope", "--params", "n=3")
    assert code == 2
    code, _, err = run(capsys, "family", "--name", "theta", "--params", "p=1")
    assert code == 2


def test_lambda_json(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "lambda", "--input", str(path), "--perron", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert abs(payload["lambda"] - 2.0) <= 1e-10
    assert len(payload["perron"]) == 3


def test_lambda_graph6_input(capsys, tmp_path):
    from bht.graphs import to_graph6

    path = tmp_path / "g.g6"
    path.write_text(to_graph6(F.book(9)) + "\n")
    code, out, _ = run(capsys, "lambda", "--input", str(path), "--json")
    assert code == 0
    assert abs(json.loads(out)["lambda"] - 3.3722813232690143) <= 1e-9


def test_lambda_missing_file(capsys):
    code, _, err = run(capsys, "lambda", "--input", "/nonexistent/file")
    assert code == 2


def test_free_command(capsys, tmp_path):
    path = tmp_path / "book.txt"
    path.write_text("\n".join(f"{u} {v}" for u, v in F.book(9).edges()))
    code, out, _ = run(capsys, "free", "--input", str(path),
                       "--patterns", "c5,c6,theta122", "--json")
    assert code == 0
    payload = json.loads(out)["free"]
    assert payload["c5"]["free"] and payload["c6"]["free"]
    assert not payload["theta122"]["free"]
    witness = payload["theta122"]["witness"]
    from bht import forbidden

    assert forbidden.check_embedding(F.book(9), "theta122", witness)
    code, _, _ = run(capsys, "free", "--input", str(path), "--patterns", "c9")
    assert code == 2


def test_quotient_command(capsys, tmp_path):
    path = tmp_path / "book.txt"
    path.write_text("\n".join(f"{u} {v}" for u, v in F.book(9).edges()))
    code, out, _ = run(capsys, "quotient", "--input", str(path),
                       "--blocks", "0,1;2-5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["matrix"] == [["1", "4"], ["2", "0"]]
    assert payload["equal"]
    # non-equitable partition is a usage error
    code, _, err = run(capsys, "quotient", "--input", str(path), "--blocks", "0,2;1,3,4,5")
    assert code == 2
    code, _, err = run(capsys, "quotient", "--input", str(path), "--blocks", "0;1")
    assert code == 2


def test_malformed_input_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\nnot a line with two ints here\n")
    code, _, err = run(capsys, "lambda", "--input", str(path))
    assert code == 2 or "error" in err  # ValueError surfaces as usage


def test_poly_command(capsys):
    code, out, _ = run(capsys, "poly", "--id", "split_pendant", "--m", "30",
                       "--t", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == ["27", "-27", "-30", "0", "1"]
    assert abs(payload["largest_root"] - 5.8175056127685) <= 1e-9
    code, _, _ = run(capsys, "poly", "--id", "cone_star_matching_even", "--m", "23")
    assert code == 2


def test_crossover_command(capsys):
    code, out, _ = run(capsys, "crossover", "--pair", "even", "--range", "22:120", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["flips"] == [[72, 74]]
    code, out, _ = run(capsys, "crossover", "--pair", "odd", "--range", "23:121", "--json")
    assert json.loads(out)["flips"] == [[71, 73]]


def test_search_command(capsys):
    code, out, _ = run(capsys, "search", "--m", "9", "--forbid", "theta123", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["counts"]["enumerated"] > 0
    g = from_graph6(payload["maximizers"][0]["graph6"])
    assert brute_isomorphic(g, F.book(9))
    code, _, _ = run(capsys, "search", "--m", "10", "--forbid", "c5", "--exclude-book")
    assert code == 2  # no book at even size
    code, _, _ = run(capsys, "search", "--m", "13", "--forbid", "c5")
    assert code == 2  # cap guard


def test_search_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("BHT_SEARCH_CAP", "5")
    code, _, _ = run(capsys, "search", "--m", "6", "--forbid", "c5")
    assert code == 2
    monkeypatch.delenv("BHT_SEARCH_CAP")
    code, _, _ = run(capsys, "search", "--m", "6", "--forbid", "c5")
    assert code == 0


def test_config_file_precedence(capsys, monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "bht.conf").write_text("cap = 5\n")
    code, _, _ = run(capsys, "search", "--m", "6", "--forbid", "c5")
    assert code == 2
    # an explicit flag overrides the file
    code, _, _ = run(capsys, "search", "--m", "6", "--forbid", "c5", "--cap", "8")
    assert code == 0


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--thm", "theta123", "--m", "9", "--json")
    assert code == 0
    assert json.loads(out.splitlines()[0])["status"] == "pass"
    code, out, _ = run(capsys, "verify", "--thm", "theta124", "--m", "10", "--json")
    assert code == 0  # not_claimed is not a failure
    assert json.loads(out.splitlines()[0])["status"] == "not_claimed"
    code, _, _ = run(capsys, "verify", "--thm", "wat", "--m", "9")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--thm", "theta123")
    assert code == 2


def test_verify_range_reports_crossovers(capsys):
    code, out, _ = run(capsys, "verify", "--thm", "c6_runner_up",
                       "--range", "70:75", "--json")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines()]
    flips = [l for l in lines if "crossover" in l]
    assert any(l["flips"] == [[72, 74]] for l in flips)
    assert any(l["flips"] == [[71, 73]] for l in flips)


def test_certify_command(capsys):
    code, out, _ = run(capsys, "certify", "--m", "22", "--json")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines()]
    assert all(l["holds"] for l in lines)
    assert any(l["name"] == "split1_below_gate7" for l in lines)
    # the known violated orderings must drive a nonzero exit
    code, out, _ = run(capsys, "certify", "--m", "27", "--json")
    assert code == 1
    lines = [json.loads(l) for l in out.splitlines()]
    assert any(not l["holds"] for l in lines)
    code, _, _ = run(capsys, "certify", "--m", "10")
    assert code == 2
