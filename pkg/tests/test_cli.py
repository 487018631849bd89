import json

import pytest

from ringtasep import cli


def run(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
    cap = capsys.readouterr()
    return code, cap.out, cap.err


class TestCount:
    def test_default_text(self, capsys):
        code, out, _ = run(capsys, "count", "--max-n", "6")
        assert code == 0
        assert out.strip() == "1 2 6 20 68 232"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--json", "count", "--max-n", "8")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["counts"] == [1, 2, 6, 20, 68, 232, 792, 2704]


class TestPsi:
    def test_y_zero_point(self, capsys):
        code, out, _ = run(capsys, "psi", "--n", "3", "--y-zero",
                           "--eval", "x1=2,x2=1,x3=1")
        assert code == 0
        rows = dict(ln.split("\t") for ln in out.strip().splitlines())
        assert rows == {"1,2,3": "2", "1,3,2": "3", "2,1,3": "3",
                        "2,3,1": "2", "3,1,2": "2", "3,2,1": "3"}

    def test_params_file(self, capsys, tmp_path):
        f = tmp_path / "params.txt"
        f.write_text("7\n5\n4\n1\n2\n3\n")
        code, out, _ = run(capsys, "--json", "psi", "--n", "3",
                           "--params", str(f))
        assert code == 0
        psi = json.loads(out)["psi"]
        assert psi["1,2,3"] == "6"  # x1 - y1 at the point
        assert set(psi) == {"1,2,3", "1,3,2", "2,1,3",
                            "2,3,1", "3,1,2", "3,2,1"}

    def test_missing_params_is_usage_error(self, capsys):
        code, _, err = run(capsys, "psi", "--n", "3")
        assert code == 2
        assert "provide --params" in err

    def test_nonpositive_rate_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "psi", "--n", "3", "--y-zero",
                         "--eval", "x1=0,x2=1,x3=1")
        assert code == 2


class TestFormula:
    def test_1432_text(self, capsys):
        code, out, _ = run(capsys, "formula", "--state", "1,4,3,2")
        assert code == 0
        assert "state:      1,4,3,2" in out
        assert "partitions: (2,) (1, 1)" in out
        assert "factor 1,4,2,3" in out
        assert "prefactor:  1" in out

    def test_1432_json_matches_schubert(self, capsys):
        code, out, _ = run(capsys, "--json", "formula", "--state", "1,4,3,2")
        assert code == 0
        payload = json.loads(out)
        assert payload["partitions"] == [[2], [1, 1]]
        assert payload["factors"] == ["1,4,2,3", "1,3,4,2"]
        assert payload["prefactor"] == "1"

    def test_y_zero_identity_n5(self, capsys):
        code, out, _ = run(capsys, "--json", "formula",
                           "--state", "1,2,3,4,5", "--y-zero")
        assert code == 0
        payload = json.loads(out)
        assert payload["prefactor"] == "x1^6*x2^3*x3"
        assert payload["factors"] == []

    def test_non_special_state_is_usage_error(self, capsys):
        code, _, err = run(capsys, "formula", "--state", "2,1,3")
        assert code == 2
        assert err.strip()

    def test_malformed_state_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "formula", "--state", "1,1,2")
        assert code == 2


class TestMlq:
    def test_sum_n3(self, capsys):
        code, out, _ = run(capsys, "mlq", "--state", "1,3,2", "--sum")
        assert code == 0
        assert out.strip() == "x1 + x2"

    def test_list_counts_queues(self, capsys):
        code, out, _ = run(capsys, "mlq", "--state", "1,2,3", "--list")
        assert code == 0
        assert out.strip().endswith("queues")

    def test_n_mismatch_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "mlq", "--state", "1,3,2", "--n", "4")
        assert code == 2


class TestSchubert:
    def test_single(self, capsys):
        code, out, _ = run(capsys, "schubert", "--perm", "1,3,2", "--single")
        assert code == 0
        assert out.strip() == "x1 + x2"

    def test_double(self, capsys):
        code, out, _ = run(capsys, "schubert", "--perm", "2,1")
        assert code == 0
        assert out.strip() == "x1 - y1"


class TestVerify:
    def test_counts_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "6", "--suite", "counts")
        assert code == 0
        assert "all passed" in out
        assert all(ln.startswith(("PASS", "counts:"))
                   for ln in out.strip().splitlines())

    def test_main_suite_n3_json(self, capsys):
        code, out, _ = run(capsys, "--json", "verify", "--n", "3",
                           "--suite", "main")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["schema"] == 1
        assert len(payload["cases"]) == 2  # states with first entry 1

    def test_flags_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "4", "--suite", "flags")
        assert code == 0
        assert "all passed" in out


class TestDeterminism:
    def test_repeat_runs_byte_identical(self, capsys):
        a = run(capsys, "verify", "--n", "4", "--suite", "eta")
        b = run(capsys, "verify", "--n", "4", "--suite", "eta")
        assert a == b

    def test_timings_flag_only_changes_timed_lines(self, capsys):
        _, plain, _ = run(capsys, "verify", "--n", "5", "--suite", "counts")
        _, timed, _ = run(capsys, "--timings", "verify", "--n", "5",
                          "--suite", "counts")
        assert plain != timed
        stripped = "\n".join(ln.split("  (")[0]
                             for ln in timed.strip().splitlines())
        assert stripped == plain.strip()


class TestUsageErrors:
    def test_no_subcommand(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2

    def test_unknown_suite(self, capsys):
        code, _, _ = run(capsys, "verify", "--n", "3", "--suite", "nope")
        assert code == 2
