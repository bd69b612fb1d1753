import json

import pytest

from cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_rootsys(capsys):
    code, document = run_json(capsys, "rootsys", "--type", "G2")
    assert code == 0
    assert document["schema"] == 1
    assert document["chevalley"]["constants"]
    assert len(document["positive_roots"]) == 6


def test_jh_sl2(capsys):
    code, document = run_json(
        capsys, "jh", "--type", "A1", "--parabolic", "", "--verma-weight", "0", "--smooth", "trivial"
    )
    assert code == 0
    assert document["total_length"] == 3
    assert [v["verdict"] for v in document["irreducibility"]] == ["reducible", "irreducible"]


def test_drinfeld_trivial_bundle(capsys):
    code, document = run_json(capsys, "drinfeld", "--d", "1", "--r", "0", "--s", "0")
    assert code == 0
    assert document["i0"] == 0
    assert document["h_dim"] == 1
    assert all(check["passed"] for check in document["local_cohomology"])


def test_audit_abcd_g2(capsys):
    code, document = run_json(capsys, "audit", "abcd", "--type", "G2", "--n", "3")
    assert code == 0
    assert not document["holds"]
    assert [2, 1] in [c["gamma"] for c in document["counterexamples"]]


def test_audit_finiteness(capsys):
    code, document = run_json(capsys, "audit", "finiteness", "--type", "A1", "--weight=-2", "--n", "3")
    assert code == 0
    assert document["agrees"]


def test_audit_finiteness_dominant_a2_at_default_n(capsys):
    code, document = run_json(capsys, "audit", "finiteness", "--type", "A2", "--weight", "3,0", "--gamma", "1,0")
    assert code == 0
    assert document["agrees"]
    lowering = [p for p in document["probes"] if p["root"] == [-1, 0]][0]
    assert lowering["span_dims"] == [1, 2, 3, 4, 4]
    assert lowering["verdict"] == "locally finite"


def test_bgg_euler(capsys):
    code, document = run_json(capsys, "bgg", "--type", "A2", "--weight", "0", "--parabolic", "1", "--depth", "4")
    assert code == 0
    assert document["euler"]["passed"]


def test_domain_error_is_structured(capsys):
    code, document = run_json(capsys, "rootsys", "--type", "X3")
    assert code == 1
    assert document["error"]["code"] == "invalid_cartan_type"


def test_non_dominant_bgg_weight(capsys):
    code, document = run_json(capsys, "bgg", "--type", "A2", "--weight=-1,0")
    assert code == 1
    assert document["error"]["code"] == "invalid_weight"


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "weyl", "--type", "A2", "--weight", "0")
    second = run(capsys, "weyl", "--type", "A2", "--weight", "0")
    assert first == second
    assert len(json.loads(first[1])["linkage"]) == 6


def test_table_format(capsys):
    code, out = run(capsys, "weyl", "--type", "A2", "--parabolic", "1", "--format", "table")
    assert code == 0
    assert out.startswith("coset representatives")
    assert "s2.s1" in out


def test_verma_cache_reuse(capsys, tmp_path):
    argv = ["verma", "--type", "A2", "--weight", "1,0", "--depth", "3", "--cache-dir", str(tmp_path)]
    first = run(capsys, *argv)
    assert list(tmp_path.iterdir())
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == 0


def test_parser_defaults():
    args = build_parser().parse_args(["audit", "commutator"])
    assert args.cartan_type == "A2"
    assert args.n == 2
    assert args.k == 2
    assert args.format == "json"


@pytest.mark.parametrize("mode", ["commutator", "injectivity"])
def test_audit_modes_run(capsys, mode):
    code, document = run_json(capsys, "audit", mode, "--type", "A1", "--weight=-2", "--depth", "3")
    assert code == 0
    assert document["mode"] == mode
