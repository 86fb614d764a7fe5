import json
from pathlib import Path

import pytest

from polynil.cli import (
    EXIT_DISAGREE,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    GroupSpecError,
    census_records,
    group_from_spec,
    main,
    parse_group_spec,
    run_census,
)
from polynil.abelian import FGAbelianGroup
from polynil.witt import ClassRow

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParse:
    def test_basic(self):
        assert parse_group_spec("Z4 + Z2") == (0, [4, 2])
        assert parse_group_spec("Z^3") == (3, [])
        assert parse_group_spec("Z2+Z4+Z^1") == (1, [2, 4])
        assert group_from_spec("Z2+Z4+Z^1") == FGAbelianGroup(1, (4, 2))

    def test_trivial_and_bare_z(self):
        assert parse_group_spec("1") == (0, [])
        assert parse_group_spec(" Z + Z ") == (2, [])

    def test_whitespace(self):
        assert parse_group_spec(" Z ^ 2+Z 12 + Z6 ") == (2, [12, 6])

    def test_structured(self):
        assert parse_group_spec({"rank": 1, "torsion": [6, 4]}) == (1, [6, 4])
        assert parse_group_spec('{"rank": 0, "torsion": [3]}') == (0, [3])

    @pytest.mark.parametrize("text, pos", [
        ("Z4 + Q", 5), ("Z0", 0), ("Z4 + Z^-1", 5), ("Z4 +", 4), ("", 0), ("1 + Z2", 0),
        ("Z-3", 0),
    ])
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(GroupSpecError) as info:
            parse_group_spec(text)
        assert info.value.position == pos

    @pytest.mark.parametrize("spec", ["Z4 + Z2", "Z^2 + Z12 + Z6 + Z2", "Z6 + Z4", "1", "Z^3"])
    def test_round_trip(self, spec, capsys):
        g = group_from_spec(spec)
        code, out, _ = run(capsys, "canonicalize", spec)
        assert code == 0
        assert group_from_spec(out.strip()) == g


class TestCommands:
    def test_example_case(self, capsys):
        code, out, _ = run(capsys, "capable", "Z5+Z5", "--variety", "1,1")
        assert code == 0
        assert out.strip() == "not capable (soluble-two-generator)"

    def test_rank_three(self, capsys):
        code, out, _ = run(capsys, "capable", "Z^3", "--variety", "1,1")
        assert out.strip() == "capable (soluble-infinite)"

    def test_multiplier(self, capsys):
        code, out, _ = run(capsys, "multiplier", "Z2+Z2", "--variety", "2")
        assert code == 0 and out.strip() == "Z_2^(2)"

    def test_oracle_flag(self, capsys):
        code, out, _ = run(capsys, "capable", "Z4+Z2", "--oracle", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["agree"] is True
        assert data["oracle"]["witness"] == {"free": [], "torsion": [2, 0]}

    def test_unsupported(self, capsys):
        code, _, err = run(capsys, "capable", "Z^2", "--oracle")
        assert code == EXIT_UNSUPPORTED
        assert "finite" in err

    def test_parse_error_exit(self, capsys):
        code, _, err = run(capsys, "capable", "Z4 + Q")
        assert code == EXIT_USAGE
        assert "position 5" in err

    def test_bad_variety(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["capable", "Z2", "--variety", "0,1"])
        assert info.value.code == EXIT_USAGE

    def test_disagreement_exit(self, capsys, monkeypatch):
        from polynil import capability, cli
        monkeypatch.setattr(cli, "is_capable_closed_form",
                            lambda g, row: capability.CapabilityVerdict(True, "forced"))
        code, out, _ = run(capsys, "capable", "Z4+Z2", "--oracle")
        assert code == EXIT_DISAGREE
        assert "DISAGREEMENT" in out


@pytest.mark.parametrize("name, argv", [
    ("canonicalize", ["canonicalize", "Z^2 + Z6 + Z4", "--json"]),
    ("multiplier", ["multiplier", "Z^1 + Z12 + Z6 + Z6", "--variety", "1,2", "--json"]),
    ("capable", ["capable", "Z8 + Z4 + Z2", "--variety", "1,1", "--oracle", "--json"]),
    ("epicenter", ["epicenter", "Z4 + Z2", "--variety", "1", "--json"]),
])
def test_golden_json(name, argv, capsys):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    expected = (GOLDEN / f"{name}.json").read_text(encoding="utf-8")
    assert out == expected


class TestCensus:
    def test_file_and_determinism(self, tmp_path, capsys):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        assert run(capsys, "census", "--order-bound", "16", str(a))[0] == 0
        assert run(capsys, "census", "--order-bound", "16", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()
        assert b"\r" not in a.read_bytes()
        lines = a.read_text(encoding="utf-8").splitlines()
        records = [json.loads(line) for line in lines]
        assert all(r["agree"] for r in records)
        assert len(records) == 7 * 25

    def test_golden_file(self, tmp_path, capsys):
        out = tmp_path / "c.jsonl"
        run(capsys, "census", "--order-bound", "8", "--variety", "1", "--variety", "1,1", str(out))
        assert out.read_text(encoding="utf-8") == (GOLDEN / "census_8.jsonl").read_text(encoding="utf-8")

    def test_parallel_matches_serial(self, tmp_path, capsys, monkeypatch):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        run(capsys, "census", "--order-bound", "32", str(a))
        monkeypatch.setenv("POLYNIL_THREADS", "3")
        run(capsys, "census", "--order-bound", "32", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_capable_sets(self):
        rows = [ClassRow((1,)), ClassRow((1, 1))]
        for rec in run_census(16, rows):
            n = rec["group"]["torsion"]
            if rec["variety"] == [1]:
                expected = not n or (len(n) >= 2 and n[0] == n[1])
            else:
                expected = not n or (len(n) >= 3 and n[0] == n[1] == n[2])
            assert rec["closed_form"]["capable"] == expected == rec["oracle"]["capable"]

    def test_bound_one(self):
        recs = run_census(1, ["1", "1,1"])
        assert len(recs) == 2
        assert all(r["closed_form"]["capable"] and r["oracle"]["capable"] for r in recs)

    def test_record_shape(self):
        (rec,) = census_records(FGAbelianGroup(0, (4, 2)), [ClassRow((1,))])
        assert rec["multiplier"] == {"free_rank": 0, "layers": [[2, 1]]}
        assert rec["multiplier_order"] == {"2": 1}
        assert rec["oracle"]["witness"] == {"free": [], "torsion": [2, 0]}

    def test_io_error(self, tmp_path, capsys):
        bad = tmp_path / "missing" / "x.jsonl"
        code, _, err = run(capsys, "census", "--order-bound", "2", str(bad))
        assert code == 1
        assert str(bad) in err

    def test_disagreement_reproduction(self, tmp_path, capsys, monkeypatch):
        from polynil import capability, cli
        monkeypatch.setattr(cli, "is_capable_closed_form",
                            lambda g, row: capability.CapabilityVerdict(True, "forced"))
        code, _, err = run(capsys, "census", "--order-bound", "8", str(tmp_path / "d.jsonl"))
        assert code == EXIT_DISAGREE
        assert 'polynil capable "Z2" --variety 1 --oracle' in err
