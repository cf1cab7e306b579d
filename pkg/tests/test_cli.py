import json
import subprocess
import sys

import pytest

from hyperembed import embeddings as emb
from hyperembed.cli import resolve_group, run
from hyperembed.config import CONFIG_ENV
from hyperembed.sigma import SigmaPartition, complete_hall_sets


def props(capsys, *argv):
    code = run(["props", *argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_props_a4(capsys):
    code, out = props(capsys, "A4", "--sigma", "2,3|*", "--subgroup", "(0 1)(2 3)")
    assert code == 0 and out["schema"] == 1
    p = out["properties"]
    assert p["modular"] is False
    assert p["H-permutable"] is True
    assert p["weakly-m-H-permutable"] is True


def test_props_text_table(capsys):
    assert run(["props", "A4", "--sigma", "2,3|*", "--subgroup", "(0 1)(2 3)"]) == 0
    lines = capsys.readouterr().out.splitlines()
    row = next(line for line in lines if line.startswith("modular "))
    assert row.split() == ["modular", "false"]
    # fixed width: every value starts in the same column
    table = [line for line in lines[1:] if line]
    assert len({line.index(line.split()[1], len(line.split()[0])) for line in table}) == 1


def test_props_match_library(capsys):
    code, out = props(capsys, "S4", "--sigma", "2|3|*", "--hall", "2", "--subgroup", "(0 1 2 3)")
    G = resolve_group("S4")
    sigma = SigmaPartition.parse("2|3|*")
    hs = complete_hall_sets(G, sigma)[2]
    H = G.subgroup(["(0 1 2 3)"])
    p = out["properties"]
    assert p["H-permutable"] == emb.is_H_permutable(G, H, hs)
    assert p["weakly-m-H-permutable"] == emb.is_weakly_m_H_permutable(G, H, hs, sigma)
    assert p["sigma-subnormal"] == emb.is_sigma_subnormal(G, H, sigma)
    assert p["c-normal"] == emb.is_c_normal(G, H)


def test_examples_three_pass_lines(capsys):
    assert run(["examples"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3 and all(line.startswith("PASS") for line in lines)


@pytest.mark.parametrize("argv", [
    ["props", "A4", "--sigma", "2,4|*", "--subgroup", "(0 1)(2 3)"],
    ["props", "A4", "--sigma", "2|*", "--subgroup", "(0 1"],
    ["props", "A4", "--sigma", "2|*", "--subgroup", "(0 1)"],
    ["props", "Nope", "--sigma", "2|*", "--subgroup", "(0 1)"],
    ["sweep", "--target", "theorem99"],
    ["frobnicate"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_budget_exit(capsys):
    assert run(["lattice", "A5", "--lattice-cap", "20"]) == 3
    assert run(["lattice", "A5", "--modularity-cap", "20"]) == 3


def test_verify_and_sweep(capsys):
    assert run(["verify", "theorem15", "S3", "--sigma", "2|3|*"]) == 0
    assert "holds" in capsys.readouterr().out
    assert run(["verify", "prop31", "A4", "--sigma", "2|3|*", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdicts"][0]["status"] == "hypothesis_fails"
    assert run(["sweep", "--max-order", "12", "--target", "prop32", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["counts"]["counterexample"] == 0 and out["cases"] > 0


def test_json_is_byte_identical(capsys):
    argv = ["sweep", "--max-order", "10", "--target", "theorem15", "--format", "json"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first


def test_lemmas_and_lattice(capsys):
    assert run(["lemmas", "S3", "--sigma", "2|3|*"]) == 0
    assert run(["lattice", "A4", "--format", "json"]) == 0
    out = capsys.readouterr().out
    data = json.loads(out[out.index("{\n  \"schema\""):])
    assert data["size"] == 10
    assert data["subgroups"][0]["maximal_in"] == [1, 2, 3, 4, 5, 6, 7]


def test_catalog_group_spec(tmp_path, capsys):
    cat = tmp_path / "g.cat"
    cat.write_text("V4; 4; (0 1)(2 3), (0 2)(1 3); 4\nS3; 3; (0 1 2), (0 1); 6\n")
    assert run(["lattice", f"{cat}::V4"]) == 0
    assert "5 subgroups" in capsys.readouterr().out
    assert run(["lattice", str(cat)]) == 2
    assert run(["lattice", "S3", "--catalog", str(cat)]) == 0


def test_config_from_environment(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"lattice_cap": 20}))
    monkeypatch.setenv(CONFIG_ENV, str(cfg))
    assert run(["lattice", "A5"]) == 3
    cfg.write_text(json.dumps({"lattice_kap": 20}))
    assert run(["lattice", "A4"]) == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "hyperembed", "examples"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.count("PASS") == 3
