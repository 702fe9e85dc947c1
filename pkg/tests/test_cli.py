import json

import pytest

from repwords.cli import main

GH60 = "010011011010010110010011011001010011010110010011011001011010"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_sixty_letter_prefix(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "g-of-h", "60")
        assert code == 0 and out == GH60 + "\n"

    def test_thue_morse(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "thue-morse", "16")
        assert code == 0 and out == "0110100110010110\n"

    def test_zero_length(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "h-fixed-point", "0")
        assert code == 0 and out == ""

    def test_large_generation_streams(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "g-of-h", "200000")
        assert code == 0 and len(out) == 200001

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "thue-morse", "4", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"name": "thue-morse", "length": 4, "word": "0110"}

    def test_negative_length_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["generate", "thue-morse", "-5"])
        assert exc.value.code == 2


class TestCheck:
    def test_cube_violation(self, capsys):
        code, out, _ = run_cli(capsys, "check", "000", "--cubes")
        assert code == 1 and "FAIL" in out

    def test_generated_prefix_passes_root_bound(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--named", "g-of-h", "--length", "10000",
                               "--min-square-root", "4")
        assert code == 0 and "PASS" in out

    def test_bad_input(self, capsys, tmp_path):
        path = tmp_path / "word.txt"
        path.write_text("01x0\n")
        code, _, err = run_cli(capsys, "check", "--file", str(path))
        assert code == 2 and "error" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "check", "--file", "/no/such/file")
        assert code == 2 and "error" in err

    def test_conflicting_sources(self, capsys):
        code, _, err = run_cli(capsys, "check", "010", "--named", "thue-morse",
                               "--length", "4")
        assert code == 2 and "error" in err

    def test_factor_scan(self, capsys):
        code, out, _ = run_cli(capsys, "check", "010302", "--factors", "10302",
                               "--format", "json")
        payload = json.loads(out)
        assert code == 1
        assert payload["factors"] == [[1, "10302"]]

    def test_default_scan_reports_everything(self, capsys):
        code, out, _ = run_cli(capsys, "check", "0120120", "--format", "json")
        payload = json.loads(out)
        assert code == 1
        assert payload["overlaps"] == [[0, 3]]
        assert payload["squares"] == [[0, 3], [1, 3]]

    def test_word_from_stdin(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO("0110\n"))
        code, out, _ = run_cli(capsys, "check", "--cubes")
        assert code == 0 and "PASS" in out


class TestVerify:
    def test_full_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify")
        assert code == 0
        assert out.count("PASS") == 11 and "FAIL" not in out

    def test_single_check(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--only", "h-interior-images")
        assert code == 0 and "h-interior-images" in out and "(1/1)" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--format", "json")
        assert code == 0
        parsed = json.loads(out)
        assert len(parsed) == 11
        rendered = json.dumps(parsed, sort_keys=True, separators=(",", ":"))
        assert rendered == out.strip()


class TestSearch:
    def test_tree_instance(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--no-cubes", "--max-square-root", "2",
                               "--fix-first", "0", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert payload["finite"] is True
        assert payload["leaf_count"] == 289
        assert payload["height"] == 30
        assert payload["maximal_avoiding"] == ["00110010100110101100101001100"]

    def test_squarefree_binary(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--squarefree", "--alphabet", "2",
                               "--fix-first", "0", "--format", "json")
        payload = json.loads(out)
        assert code == 0 and payload["height"] == 4

    def test_cap_reached(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--no-cubes", "--max-square-root", "3",
                               "--depth-cap", "64")
        assert code == 3 and "lower bounds" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--squarefree", "--fix-first", "0",
                               "--format", "json")
        parsed = json.loads(out)
        assert json.dumps(parsed, sort_keys=True, separators=(",", ":")) == out.strip()

    def test_conflicting_flags(self, capsys):
        code, _, err = run_cli(capsys, "search", "--squarefree", "--max-square-root", "2")
        assert code == 2 and "conflict" in err

    def test_bfs_flag(self, capsys):
        code_dfs, out_dfs, _ = run_cli(capsys, "search", "--no-cubes",
                                       "--max-square-root", "2", "--fix-first", "0",
                                       "--format", "json", "--traversal", "dfs")
        code_bfs, out_bfs, _ = run_cli(capsys, "search", "--no-cubes",
                                       "--max-square-root", "2", "--fix-first", "0",
                                       "--format", "json", "--traversal", "bfs")
        assert code_dfs == code_bfs == 0 and out_dfs == out_bfs


class TestReportCommand:
    def test_writes_csv_and_png(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "report", "--out-dir", str(tmp_path),
                               "--lengths", "64,256", "--names", "thue-morse")
        assert code == 0
        listed = sorted(line.rsplit("/", 1)[-1] for line in out.strip().splitlines())
        assert listed == ["leaf_depths.csv", "leaf_depths.png",
                          "square_growth.csv", "square_growth.png"]
        growth = (tmp_path / "square_growth.csv").read_text().splitlines()
        assert growth[0] == "word,prefix_length,max_square_root"
        assert growth[1:] == ["thue-morse,64,16", "thue-morse,256,64"]
        depths = (tmp_path / "leaf_depths.csv").read_text().splitlines()
        total = sum(int(line.split(",")[1]) for line in depths[1:])
        assert total == 289
        assert (tmp_path / "square_growth.png").stat().st_size > 0

    def test_growth_only(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "report", "--out-dir", str(tmp_path),
                               "--kind", "growth", "--lengths", "32",
                               "--names", "thue-morse")
        assert code == 0
        assert not (tmp_path / "leaf_depths.csv").exists()
