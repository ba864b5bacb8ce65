"""Command line behavior: exit codes, output documents, determinism."""

import json

import pytest

from twodual import SetFamily, family_bea, oracle_to_table
from twodual.cli import main
from twodual.core import FiniteStructure
from twodual.instances import make_transit_fixture, template
from twodual.jsonio import (
    bea_to_json,
    dumps,
    family_to_json,
    load_path,
    read_corpus,
    structure_to_json,
    to_json,
)


@pytest.fixture
def chain2_bea(tmp_path):
    fam = SetFamily(base=2, sets=(0b01, 0b11))
    path = tmp_path / "chain2.bea.json"
    path.write_text(dumps(bea_to_json(oracle_to_table(family_bea(fam)))) + "\n")
    return str(path)


@pytest.fixture
def chain3_lattice(tmp_path):
    sig = template("bounded_lattice").signature
    meet = [(a, b, min(a, b)) for a in range(3) for b in range(3)]
    join = [(a, b, max(a, b)) for a in range(3) for b in range(3)]
    x = FiniteStructure(sig, 3, {"meet": meet, "join": join},
                        {"zero": 0, "one": 2})
    path = tmp_path / "chain3.lat.json"
    path.write_text(dumps(structure_to_json(x)) + "\n")
    return str(path)


def test_separate_prints_the_halfspace(chain2_bea, capsys):
    assert main(["separate", "--in", chain2_bea, "--a", "1", "--b", "0"]) == 0
    assert capsys.readouterr().out == "U = [1]\n"


def test_separate_json_document(chain2_bea, capsys):
    code = main(
        ["separate", "--in", chain2_bea, "--a", "1", "--b", "0",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["separated"] is True
    assert doc["halfspace"] == [1]


def test_separate_refuses_linked_pairs(chain2_bea, capsys):
    assert main(["separate", "--in", chain2_bea, "--a", "0", "--b", "1"]) == 1
    out = capsys.readouterr().out
    assert "linked" in out or "reason" in out


def test_separate_reports_transit_failures(tmp_path, capsys):
    fam = SetFamily(base=6, sets=(0b000111, 0b011100, 0b110001, 0b111111))
    broken, a, b = make_transit_fixture(family_bea(fam))
    path = tmp_path / "broken.bea.json"
    path.write_text(dumps(bea_to_json(broken)) + "\n")
    code = main(
        ["separate", "--in", str(path),
         "--a", ",".join(str(i) for i in range(4) if a >> i & 1),
         "--b", ",".join(str(i) for i in range(4) if b >> i & 1),
         "--format", "json"]
    )
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["separated"] is False
    assert "pasch_failure" in doc


def test_missing_file_is_a_usage_error(capsys):
    assert main(["separate", "--in", "/nonexistent.json",
                 "--a", "0", "--b", "1"]) == 2


def test_wrong_document_kind_is_a_usage_error(chain3_lattice):
    assert main(["separate", "--in", chain3_lattice, "--a", "0", "--b", "1"]) == 2


def test_unknown_subcommand_exits_two(capsys):
    assert main(["frobnicate"]) == 2


def test_check_axioms_passes_on_family_documents(tmp_path, capsys):
    fam = SetFamily(base=3, sets=(0b001, 0b011, 0b111))
    path = tmp_path / "fam.json"
    path.write_text(dumps(family_to_json(fam)) + "\n")
    code = main(["check-axioms", "--in", str(path), "--format", "json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is True
    assert set(doc["axioms"]) == {"i0", "i1", "i2", "i3"}
    assert all(rep["pass"] for rep in doc["axioms"].values())


def test_check_axioms_flags_broken_tables(tmp_path, capsys):
    fam = SetFamily(base=6, sets=(0b000111, 0b011100, 0b110001, 0b111111))
    broken, _, _ = make_transit_fixture(family_bea(fam))
    path = tmp_path / "broken.json"
    path.write_text(dumps(bea_to_json(broken)) + "\n")
    code = main(["check-axioms", "--in", str(path), "--format", "json"])
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is False
    assert doc["axioms"]["i3"]["pass"] is False
    assert doc["axioms"]["i3"]["witness"]


def test_check_axioms_subset_selection(tmp_path, capsys):
    fam = SetFamily(base=2, sets=(0b01, 0b11))
    path = tmp_path / "fam.json"
    path.write_text(dumps(family_to_json(fam)) + "\n")
    code = main(["check-axioms", "--in", str(path), "--axioms", "i0,i5",
                 "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert set(doc["axioms"]) == {"i0", "i5"}
    # The two-chain family is asymmetric, so i5 fails.
    assert code == 1
    assert doc["axioms"]["i0"]["pass"] is True
    assert doc["axioms"]["i5"]["pass"] is False


def test_dual_of_a_structure(chain3_lattice, tmp_path, capsys):
    out = tmp_path / "dual.json"
    code = main(
        ["dual", "--in", chain3_lattice, "--template", "bounded_lattice",
         "--e-template", "pure_set", "--format", "json", "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["sizes"]["X"] == 3
    assert doc["sizes"]["Xstar"] == 2
    assert doc["carrier"] == [[2], [1, 2]]
    written = load_path(str(out))
    assert isinstance(written, FiniteStructure)
    assert written.size == 2


def test_dual_of_a_linkage(chain2_bea, tmp_path, capsys):
    out = tmp_path / "dual.bea.json"
    code = main(["dual", "--in", chain2_bea, "--format", "json",
                 "--out", str(out)])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["carrier"]["sets"] == [[1], [0, 1]]
    dual_oracle = load_path(str(out))
    assert dual_oracle.universe == 2


def test_dual_of_structure_requires_a_template(chain3_lattice):
    assert main(["dual", "--in", chain3_lattice]) == 2


def test_reflexivity_round_trip_and_negative_control(chain3_lattice, capsys):
    code = main(
        ["reflexivity", "--in", chain3_lattice,
         "--template", "bounded_lattice", "--e-template", "order",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is True
    assert doc["sizes"] == {"X": 3, "Xstar": 2, "Xbidual": 3}

    code = main(
        ["reflexivity", "--in", chain3_lattice,
         "--template", "bounded_lattice", "--e-template", "pure_set",
         "--format", "json"]
    )
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is False
    assert doc["sizes"]["Xbidual"] == 4
    kinds = {c["kind"] for c in doc["counterexamples"]}
    assert "unrepresented" in kinds


def test_reflexivity_of_a_linkage(chain2_bea, capsys):
    assert main(["reflexivity", "--in", chain2_bea, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is True


def test_verify_stone_suite(capsys):
    code = main(["verify", "--suite", "stone", "--format", "json",
                 "--threads", "1"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["suite"] == "stone"
    assert doc["pass"] is True


def test_gen_is_deterministic(capsys):
    argv = ["gen", "--class", "family", "--size", "4", "--seed", "9",
            "--count", "3"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    lines = first.splitlines()
    assert json.loads(lines[0])["kind"] == "corpus-meta"
    assert len(lines) == 4

    assert main(["gen", "--class", "family", "--size", "4", "--seed", "10",
                 "--count", "3"]) == 0
    assert capsys.readouterr().out != first


def test_gen_writes_corpus_files(tmp_path):
    out = tmp_path / "posets.jsonl"
    code = main(["gen", "--class", "poset", "--size", "4", "--seed", "3",
                 "--count", "5", "--out", str(out)])
    assert code == 0
    meta, objs = read_corpus(str(out))
    assert meta["seed"] == 3
    assert len(objs) == 5
    assert all(isinstance(x, FiniteStructure) for x in objs)


def test_gen_rejects_unknown_classes():
    assert main(["gen", "--class", "widget", "--size", "3"]) == 2


def test_caps_exit_code(tmp_path, capsys):
    # A family over a base beyond the hard cap must exit 3, not crash.
    doc = {"kind": "family", "base": 200,
           "sets": [[i] for i in range(3)], "zero": False, "one": False}
    path = tmp_path / "big.json"
    path.write_text(dumps(doc) + "\n")
    assert main(["check-axioms", "--in", str(path)]) == 3
