import json
import subprocess
import sys

import pytest

from cellseed.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_proc(*argv, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "cellseed.cli", *argv],
        input=stdin,
        capture_output=True,
        text=True,
    )


B3_ARGS = ("B3", "--J", "3", "--word", "3,2,1,3,2,3")
A5_ARGS = ("A5", "--J", "1,3", "--word", "1,2,3,4,5,2,3,4,1,2,3")


class TestCartan:
    def test_b3_entry(self, capsys):
        code, out, _ = run(capsys, "cartan", "B3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["entries"][2][1] == -2

    def test_a2(self, capsys):
        code, out, _ = run(capsys, "cartan", "A2", "--json")
        assert json.loads(out)["entries"] == [[2, -1], [-1, 2]]

    def test_usage_error(self, capsys):
        code, _, err = run(capsys, "cartan", "Z9")
        assert code == 2
        assert "error" in err


class TestWords:
    def test_w0_parabolic(self, capsys):
        code, out, _ = run(capsys, "w0", "B3", "--subset", "{1,2}", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["length"] == 3 and data["word"] == [1, 2, 1]

    def test_w0_full(self, capsys):
        code, out, _ = run(capsys, "w0", "A5", "--json")
        assert json.loads(out)["length"] == 15

    def test_cellword(self, capsys):
        code, out, _ = run(capsys, "cellword", "A5", "--J", "{1,3}", "--json")
        data = json.loads(out)
        assert data["length"] == 11 and data["K"] == [2, 4, 5]


class TestSeed:
    def test_b3_matrix(self, capsys):
        code, out, _ = run(capsys, "seed", *B3_ARGS, "--json")
        assert code == 0
        data = json.loads(out)
        assert data["matrix"]["rows"] == [1, 2, 4, 3, 5, 6]
        assert data["matrix"]["entries"] == [
            [0, -2, 1], [1, 0, -1], [-1, 2, 0], [0, 1, 0], [0, -1, 1], [0, 0, -1],
        ]

    def test_a5_frozen_set(self, capsys):
        code, out, _ = run(capsys, "seed", *A5_ARGS, "--json")
        data = json.loads(out)
        frozen = [k + 1 for k, f in enumerate(data["frozen"]) if f]
        assert frozen == [5, 8, 9, 10, 11]

    def test_default_word(self, capsys):
        code, out, _ = run(capsys, "seed", "A2", "--J", "1,2")
        assert code == 0
        assert "(frozen)" in out

    def test_non_reduced_diagnostic(self, capsys):
        code, _, err = run(capsys, "seed", "A5", "--J", "1", "--word", "1,1")
        assert code == 2
        assert "prefix 1,1" in err

    def test_fixture_source(self, capsys):
        code, out, _ = run(capsys, "seed", "--fixture", "a5", "--json")
        data = json.loads(out)
        assert data["matrix"]["rows"] == [1, 2, 3, 4, 6, 7, 5, 8, 9, 10, 11]

    def test_two_sources_rejected(self, capsys):
        code, _, err = run(capsys, "seed", "B3", "--J", "3", "--fixture", "a5")
        assert code == 2


class TestLift:
    def test_b3_position_2(self, capsys):
        code, out, _ = run(capsys, "lift", *B3_ARGS, "--k", "2")
        assert code == 0
        assert "Δ{w2,(3,2)}·Δ{w3}^2 / Δ{w2}" in out

    def test_a5_position_10(self, capsys):
        code, out, _ = run(capsys, "lift", *A5_ARGS, "--k", "10")
        assert "Δ{w2,(3,4,5,2,3,4,1,2)}·Δ{w3} / Δ{w2}" in out

    def test_bare_delta_for_j(self, capsys):
        code, out, _ = run(capsys, "lift", *A5_ARGS, "--k", "3", "--json")
        data = json.loads(out)
        assert data["lift"]["unit"] == {} and data["lift"]["den"] == {}

    def test_position_out_of_range(self, capsys):
        code, _, err = run(capsys, "lift", *A5_ARGS, "--k", "12")
        assert code == 2


class TestFlagSeed:
    def test_b3(self, capsys):
        code, out, _ = run(capsys, "flagseed", *B3_ARGS, "--json")
        data = json.loads(out)
        assert data["extension_rows"] == {"3": [-1, 0, 0]}
        assert len(data["degrees"]) + len(data["unit_frozen"]) == 7

    def test_b3_text_lists_unit(self, capsys):
        code, out, _ = run(capsys, "flagseed", *B3_ARGS)
        assert "Δ{w3}" in out and out.count("frozen") == 4

    def test_a5_first_column(self, capsys):
        code, out, _ = run(capsys, "flagseed", "--fixture", "a5", "--json")
        data = json.loads(out)
        assert data["extension_rows"]["1"][0] == -1
        assert data["extension_rows"]["3"][0] == 0

    def test_bhat_literal(self, capsys):
        code, out, _ = run(capsys, "flagseed", *B3_ARGS, "--json", "--bhat-literal")
        assert json.loads(out)["extension_rows"] == {"3": [1, 0, 0]}


class TestLiftRel:
    def test_a5_fixture_k1(self, capsys):
        code, out, _ = run(capsys, "liftrel", "--fixture", "a5", "--k", "1", "--json")
        data = json.loads(out)
        assert data["bhat_column"] == [-1, 0]
        assert data["mu"] == {} and data["nu"] == {"1": 1}

    def test_b3_k1_projection(self, capsys):
        code, out, _ = run(capsys, "liftrel", *B3_ARGS, "--k", "1")
        assert "D{w2,(3,2)} + D{w3,(3,2,1,3)}" in out


class TestMutate:
    def test_involution(self, capsys):
        code, out1, _ = run(capsys, "seed", *B3_ARGS, "--json")
        code, out2, _ = run(capsys, "mutate", *B3_ARGS, "--seq", "1,1", "--json")
        assert json.loads(out1)["matrix"] == json.loads(out2)["matrix"]

    def test_single_step_entry(self, capsys):
        code, out, _ = run(capsys, "mutate", *B3_ARGS, "--seq", "1", "--json")
        data = json.loads(out)
        rows, cols = data["matrix"]["rows"], data["matrix"]["cols"]
        entry = data["matrix"]["entries"][rows.index(4)][cols.index(2)]
        assert entry == 0

    def test_missing_action(self, capsys):
        code, _, err = run(capsys, "mutate", *B3_ARGS)
        assert code == 2

    def test_interactive_quit(self):
        proc = run_proc("mutate", *B3_ARGS, "--interactive", stdin="q\n")
        assert proc.returncode == 0

    def test_interactive_mutate_then_quit(self):
        proc = run_proc("mutate", *B3_ARGS, "--interactive", stdin="1\nbogus\nq\n")
        assert proc.returncode == 0
        assert "cannot mutate" in proc.stdout


class TestVerify:
    def test_gls_fixture(self, capsys):
        code, out, _ = run(capsys, "verify", "--fixture", "minor-identities")
        assert code == 0
        assert out.strip().endswith("PASS")

    def test_lifted_relations_fixture(self, capsys):
        code, out, _ = run(capsys, "verify", "--fixture", "lifted-relations-A5")
        assert code == 0

    def test_corrupted_identity_fails(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("# deliberately wrong\nD{1|2} = D{1|2} + 1\n")
        code, out, _ = run(
            capsys, "verify", "--file", str(f), "--n", "6",
            "--cell-word", "1,2,3,4,5,2,3,4,1,2,3",
        )
        assert code == 1
        assert "FAIL" in out

    def test_file_requires_context(self, tmp_path, capsys):
        f = tmp_path / "ok.txt"
        f.write_text("D{1|2} = D{1|2}\n")
        code, _, err = run(capsys, "verify", "--file", str(f))
        assert code == 2

    def test_unknown_fixture(self, capsys):
        code, _, err = run(capsys, "verify", "--fixture", "nope")
        assert code == 2

    def test_deterministic_output(self):
        args = ("verify", "--fixture", "minor-identities", "--rng-seed", "5", "--json")
        a, b = run_proc(*args), run_proc(*args)
        assert a.stdout == b.stdout and a.returncode == b.returncode == 0

    def test_seed_changes_samples_not_result(self, capsys):
        c1, out1, _ = run(capsys, "verify", "--fixture", "minor-identities", "--rng-seed", "1", "--json")
        c2, out2, _ = run(capsys, "verify", "--fixture", "minor-identities", "--rng-seed", "2", "--json")
        assert c1 == c2 == 0
        assert json.loads(out1)["pass"] and json.loads(out2)["pass"]


def test_json_and_text_carry_same_matrix(capsys):
    code, text_out, _ = run(capsys, "seed", *B3_ARGS)
    code, json_out, _ = run(capsys, "seed", *B3_ARGS, "--json")
    data = json.loads(json_out)
    for row in data["matrix"]["entries"]:
        assert " ".join(f"{x:>2}" for x in row) in text_out.replace("( ", " ").replace(" )", " ")
