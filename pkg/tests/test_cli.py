"""Tests for the brauer-blocks command line."""

import json

import pytest

from src.blocks import is_balanced
from src.main import EXIT_INVALID, EXIT_NEGATIVE, EXIT_OK, main, protect_negative_lists
from src.models.base import Context
from src.models.reflection import OrbitWitness
from src.weights import label_partitions
from src.weyl import verify_witness

WORKED_WORD = "s[3,+4] s[2,4] s[2,+5] s[1,3] s[1,+6] s[1,2] s[1,+7]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestArguments:
    """Tests for argument handling."""

    def test_negative_lists_are_protected(self):
        assert protect_negative_lists(["-4,2,5", "-v", "-3", "4,-1"]) == [" -4,2,5", "-v", " -3", "4,-1"]

    def test_single_negative_entry(self, capsys):
        code, out, _ = run(capsys, "orbit", "-3", "3", "--n", "1", "--delta", "2", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["query"]["args"] == ["-3", "3"]

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == EXIT_INVALID

    def test_bad_characteristic(self, capsys):
        code, _, err = run(capsys, "orbit", "1", "1", "--delta", "1", "--p", "4")
        assert code == EXIT_INVALID
        assert err.startswith("error:")

    def test_malformed_weight(self, capsys):
        code, _, err = run(capsys, "orbit", "1,x", "1", "--delta", "1")
        assert code == EXIT_INVALID
        assert "comma-separated" in err

    def test_missing_delta(self, capsys):
        code, _, err = run(capsys, "blocks", "--n", "2")
        assert code == EXIT_INVALID
        assert "--delta" in err


class TestQueries:
    """Tests for individual commands."""

    def test_orbit_json(self, capsys):
        code, out, _ = run(capsys, "orbit", "6,4,-2,3,5", "-4,2,5,-1,4", "--n", "5", "--delta", "2", "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert list(payload) == ["query", "context", "result", "witness"]
        assert payload["query"] == {"command": "orbit", "args": ["6,4,-2,3,5", "-4,2,5,-1,4"]}
        assert payload["context"] == {"n": 5, "delta": 2, "p": 0}
        assert payload["result"] == {"in_orbit": True}
        witness = OrbitWitness(tuple(payload["witness"]["pi"]), tuple(payload["witness"]["sigma"]))
        assert verify_witness((6, 4, -2, 3, 5), (-4, 2, 5, -1, 4), witness, Context(5, 2))
        assert json.dumps(payload, ensure_ascii=False) == out.strip()

    def test_orbit_text(self, capsys):
        code, out, _ = run(capsys, "orbit", "2", "", "--n", "2", "--delta", "2")
        assert code == EXIT_OK
        assert "not in orbit" in out

    def test_strict_negative(self, capsys):
        code, out, _ = run(capsys, "balanced", "2", "", "--delta", "2", "--strict")
        assert code == EXIT_NEGATIVE
        assert "not balanced" in out
        code, _, _ = run(capsys, "balanced", "2", "", "--delta", "2")
        assert code == EXIT_OK

    def test_strict_matches_result(self, capsys, rng):
        labels = label_partitions(5)
        for _ in range(100):
            lam = labels[int(rng.integers(len(labels)))]
            mu = labels[int(rng.integers(len(labels)))]
            delta = int(rng.choice([-2, -1, 1, 2, 3]))
            code, out, _ = run(capsys, "balanced", str(lam), str(mu), "--n", "5",
                               "--delta", str(delta), "--strict", "--json")
            expected = is_balanced(lam, mu, Context(5, delta))
            assert json.loads(out)["result"]["balanced"] == expected
            assert code == (EXIT_OK if expected else EXIT_NEGATIVE)

    def test_blocks(self, capsys):
        code, out, err = run(capsys, "blocks", "--n", "2", "--delta", "2", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["result"] == {"kind": "exact-blocks", "classes": [["2"], ["1,1"], [""]]}
        assert err == ""

    def test_verbose_logs_summary(self, capsys):
        code, _, err = run(capsys, "blocks", "--n", "2", "--delta", "2", "-v")
        assert code == EXIT_OK
        assert "3 labels in 3 blocks" in err

    def test_block_char_p(self, capsys):
        code, out, _ = run(capsys, "block", "5,3,3,2,1,1", "2,2,2,1,1,1",
                           "--n", "16", "--delta", "2", "--p", "5", "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["result"] == {"same_block": True, "kind": "orbit-upper-bound"}
        assert payload["witness"] is not None

    def test_abacus(self, capsys):
        code, out, _ = run(capsys, "abacus", "5,3,3,2,1,1", "--p", "5", "--b", "20", "--n", "16")
        assert code == EXIT_OK
        assert "runner 0: 5; runners 1/4: 8; runners 2/3: 7" in out

        code, out, _ = run(capsys, "abacus", "5,3,3,2,1,1", "--p", "5", "--b", "20", "--n", "16", "--json")
        payload = json.loads(out)
        assert payload["context"] == {"n": 16, "delta": 2, "p": 5}
        assert payload["result"]["pair_totals"] == [8, 7]
        assert payload["result"]["runner_counts"][0] == 5

    def test_abacus_bad_bead_count(self, capsys):
        code, _, _ = run(capsys, "abacus", "5,3,3,2,1,1", "--p", "5", "--b", "21", "--delta", "2")
        assert code == EXIT_INVALID

    def test_word(self, capsys):
        code, out, _ = run(capsys, "word", WORKED_WORD, "8,8,8,7,3,3,2", "--delta", "2")
        assert code == EXIT_OK
        assert out.strip() == "6,5,1,1"

    def test_chain(self, capsys):
        code, out, _ = run(capsys, "chain", "4,4,2", "4,3,1", "--n", "10", "--delta", "2", "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["result"]["length"] == len(payload["result"]["word"].split())

    def test_pairs_file(self, capsys, tmp_path):
        path = tmp_path / "pairs.txt"
        path.write_text("# pairs\n4,4,2;4,3,1\n\n2;\n")
        code, out, _ = run(capsys, "balanced", "--n", "10", "--delta", "2", "--pairs", str(path), "--json")
        assert code == EXIT_OK
        results = [json.loads(line)["result"]["balanced"] for line in out.splitlines()]
        assert results == [True, False]

    def test_pairs_file_missing(self, capsys, tmp_path):
        code, _, _ = run(capsys, "balanced", "--delta", "2", "--pairs", str(tmp_path / "absent.txt"))
        assert code == EXIT_INVALID

    def test_transposed_labels(self, capsys):
        code, out, _ = run(capsys, "pcore", "1,1,1,1,1", "--p", "5", "--labels", "transpose", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["result"] == {"core": "", "is_core": False}

    def test_pcore_context(self, capsys):
        code, out, _ = run(capsys, "pcore", "5,3,3,2,1,1", "--p", "5", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["context"] == {"n": 15, "p": 5}
        code, out, _ = run(capsys, "pcore", "5,3,3,2,1,1", "--p", "5", "--delta", "7", "--json")
        assert json.loads(out)["context"] == {"n": 15, "delta": 2, "p": 5}

    def test_obstruction_orders_pair(self, capsys):
        code, out, _ = run(capsys, "obstruction", "", "2", "--delta", "3", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["result"] == {"scalar": 1, "vanishes": False}

    def test_diagram_e_n(self, capsys):
        code, out, _ = run(capsys, "diagram", "e_n", "--n", "2", "--delta", "2", "--json")
        assert code == EXIT_OK
        result = json.loads(out)["result"]
        assert result["terms"] == [{"diagram": "(1,2),(-1,-2)", "coefficient": "1/2"}]
        assert result["idempotent"] is True

    def test_diagram_product(self, capsys):
        code, out, _ = run(capsys, "diagram", "product", "(1,2),(-1,-2)", "(1,2),(-1,-2)",
                           "--n", "2", "--delta", "3")
        assert code == EXIT_OK
        assert out.strip() == "3 * (1,2),(-1,-2)"

    def test_project_writes_svg(self, capsys, tmp_path):
        pytest.importorskip("matplotlib")
        path = tmp_path / "plane.svg"
        code, out, _ = run(capsys, "project", "4,4,2", "--n", "3", "--delta", "2",
                           "--i", "2", "--j", "3", "--out", str(path))
        assert code == EXIT_OK
        assert "wrote" in out
        assert "<svg" in path.read_text()


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
