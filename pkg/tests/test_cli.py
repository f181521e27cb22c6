import io

import pytest

from facevec.cli import run

PENTAGON = "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n"


@pytest.fixture
def pentagon_file(tmp_path):
    path = tmp_path / "pentagon.edges"
    path.write_text(PENTAGON)
    return str(path)


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestGoldenOutputs:
    def test_kk_bound_worked_example(self):
        code, out, err = invoke(["kk-bound", "--m", "99", "--k", "3"])
        assert code == 0 and err == ""
        assert out == "99 = C(9,3) + C(6,2); bound = 146\n"

    def test_cliquevec_pentagon(self, pentagon_file):
        code, out, err = invoke(["cliquevec", pentagon_file])
        assert code == 0 and err == ""
        assert out == "1 5 5\n"

    def test_verify_exhaustive_three(self):
        code, out, err = invoke(["verify", "--exhaustive", "3"])
        assert code == 0 and err == ""
        assert out == "graphs 8 pass 8 fail 0\n"

    def test_ffk_bound_three_colors(self):
        code, out, _ = invoke(["ffk-bound", "--m", "1140", "--k", "3", "--r", "3"])
        assert code == 0
        assert out == "1140 = C(31,3)_3 + C(12,2)_2 + C(4,1)_1; bound = 0\n"

    def test_kk_bound_single_term(self):
        code, out, _ = invoke(["kk-bound", "--m", "1140", "--k", "3"])
        assert code == 0
        assert out == "1140 = C(20,3); bound = 4845\n"

    def test_canonical_plain_and_empty(self):
        assert invoke(["canonical", "--m", "99", "--k", "3"])[1] == "C(9,3) + C(6,2)\n"
        assert invoke(["canonical", "--m", "0", "--k", "3"])[1] == "(empty)\n"

    def test_canonical_colored(self):
        code, out, _ = invoke(["canonical", "--m", "5", "--k", "2", "--r", "2"])
        assert out == "C(4,2)_2 + C(1,1)_1\n"

    def test_construct_pentagon(self, pentagon_file):
        code, out, _ = invoke(["construct", pentagon_file])
        assert code == 0
        assert out == (
            "colors 2\n"
            "clique-vector 1 5 5\n"
            "face-vector 1 5 5\n"
            "coloring 1:1 2:2 3:1 4:2 5:1\n"
            "facet 1 2\n"
            "facet 2 3\n"
            "facet 1 4\n"
            "facet 3 4\n"
            "facet 2 5\n"
        )

    def test_revlex_colored_emit_faces(self):
        code, out, _ = invoke(["revlex", "--levels", "2:5", "--colors", "2", "--emit-faces"])
        assert code == 0
        assert out == (
            "face-vector 1 5 5\n"
            "coloring 1:1 2:2 3:1 4:2 5:1\n"
            "facet 1 2\n"
            "facet 2 3\n"
            "facet 1 4\n"
            "facet 3 4\n"
            "facet 2 5\n"
        )

    def test_revlex_plain(self):
        code, out, _ = invoke(["revlex", "--levels", "3:99,4:146"])
        assert code == 0
        assert out == "face-vector 1 10 42 99 146\n"

    def test_outputs_are_stable_across_runs(self, pentagon_file):
        for argv in (
            ["kk-bound", "--m", "99", "--k", "3"],
            ["cliquevec", pentagon_file],
            ["verify", "--exhaustive", "3"],
            ["construct", pentagon_file],
        ):
            assert invoke(argv) == invoke(argv)


class TestConstructPairCommand:
    def test_five_cycle(self, pentagon_file):
        code, out, _ = invoke(["construct-pair", pentagon_file, "--k", "1"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "colors 2"
        assert lines[1] == "k 1"
        assert lines[2] == "targets 5 5"
        assert lines[3] == "face-vector 1 5 5"

    def test_trace_lines(self, pentagon_file):
        code, out, _ = invoke(["construct-pair", pentagon_file, "--k", "1", "--trace"])
        assert code == 0
        assert "trace[0] kind=cone k=1 colors=2 levels=1:2,2:0 pivot=1 non-neighbors=3,4" in out
        assert "trace[0] step i=0 v=1 a=2 b=1 adds=5" in out
        assert "trace[1] kind=flat k=1 colors=1 levels=1:2" in out


class TestVerifyCommand:
    def test_single_graph(self, pentagon_file):
        code, out, _ = invoke(["verify", pentagon_file])
        assert code == 0
        assert out == "graphs 1 pass 1 fail 0\n"

    def test_records_output(self, pentagon_file):
        code, out, _ = invoke(["verify", pentagon_file, "--output", "records"])
        assert code == 0
        # "Dhc" confirmed as the 5-cycle by the independent decoder oracle
        assert out == (
            "graph=g6:Dhc r=2 cliquevec=1,5,5 facevec=1,5,5 margins=1"
            " equal=1 coloring=1 balanced=1 ok=1 error=-\n"
        )

    def test_random_deterministic(self):
        argv = ["verify", "--random", "8", "1/2", "12", "42", "--output", "records"]
        first, second = invoke(argv), invoke(argv)
        assert first == second
        assert first[0] == 0

    def test_exhaustive_records_stream(self):
        code, out, _ = invoke(["verify", "--exhaustive", "3", "--output", "records"])
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 8
        assert lines[0] == (
            "graph=mask:3:0 r=1 cliquevec=1,3 facevec=1,3 margins=-"
            " equal=1 coloring=1 balanced=1 ok=1 error=-"
        )
        assert lines[7] == (
            "graph=mask:3:7 r=3 cliquevec=1,3,3,1 facevec=1,3,3,1 margins=0,0"
            " equal=1 coloring=1 balanced=1 ok=1 error=-"
        )

    def test_graph6_stdin_roundtrip(self, monkeypatch):
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO("Dhc\n"))
        code, out, _ = invoke(["cliquevec", "-"])
        assert code == 0 and out == "1 5 5\n"


class TestExitCodes:
    def test_usage_error_unknown_flag(self):
        code, _, _ = invoke(["kk-bound", "--m", "99", "--k", "3", "--bogus"])
        assert code == 2

    def test_usage_error_missing_subcommand_argument(self):
        code, _, _ = invoke(["verify"])
        assert code == 3  # no graph and no mode is an input problem

    def test_input_error_missing_file(self):
        code, _, err = invoke(["cliquevec", "/nonexistent/file.edges"])
        assert code == 3 and "input error" in err

    def test_input_error_malformed(self, tmp_path):
        bad = tmp_path / "bad.edges"
        bad.write_text("3 1\n1 9\n")
        code, _, _ = invoke(["cliquevec", str(bad)])
        assert code == 3

    def test_guard_exit(self, tmp_path, monkeypatch):
        monkeypatch.setenv("FACEVEC_GUARD", "40")
        big = tmp_path / "k8.edges"
        edges = [(u, v) for u in range(1, 9) for v in range(u + 1, 9)]
        big.write_text(f"8 {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges))
        code, _, err = invoke(["cliquevec", str(big)])
        assert code == 4 and "guard" in err

    def test_usage_error_bad_precondition(self):
        code, _, err = invoke(["ffk-bound", "--m", "10", "--k", "3", "--r", "2"])
        assert code == 2 and "usage error" in err

    def test_verify_failure_exit_is_one(self, monkeypatch):
        # force a failure through the guard: the error is recorded, the
        # harness keeps going, and the exit status reports it
        monkeypatch.setenv("FACEVEC_GUARD", "40")
        code, out, _ = invoke(["verify", "--random", "8", "1", "2", "7"])
        assert code == 1
        assert "fail 2" in out

    def test_invariant_violation_exit_is_five(self, monkeypatch, pentagon_file):
        import facevec.construct as construct_mod

        monkeypatch.setattr(construct_mod, "ffk_bound", lambda *a: -1)
        code, _, err = invoke(["construct", pentagon_file])
        assert code == 5 and "invariant" in err
