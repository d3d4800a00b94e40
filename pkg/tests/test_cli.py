import pytest

from corecur.cli import main

G_AB = "start S\nS -> A B\nA -> 'a'\nB -> 'b'\n"


@pytest.fixture
def grammar_file(tmp_path):
    path = tmp_path / "g_ab.cnf"
    path.write_text(G_AB, encoding="utf-8")
    return str(path)


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text("a: b c\nb: c\nc:\n", encoding="utf-8")
    return str(path)


def run(capsys, argv, env=None, monkeypatch=None):
    if env:
        for k, v in env.items():
            monkeypatch.setenv(k, v)
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSort:
    def test_quick_golden(self, capsys):
        code, out, _ = run(capsys, ["sort", "--algo", "quick", "--input", "7,5,9,8,4"])
        assert code == 0
        assert out == "4,5,7,8,9 PASS\n"

    def test_merge(self, capsys):
        code, out, _ = run(capsys, ["sort", "--algo", "merge", "--input", "3,1,2"])
        assert code == 0
        assert out == "1,2,3 PASS\n"

    def test_empty_input(self, capsys):
        code, out, _ = run(capsys, ["sort", "--algo", "quick", "--input", ""])
        assert code == 0
        assert out == " PASS\n"

    def test_trace_appends_call_tree(self, capsys):
        code, out, _ = run(capsys, ["sort", "--algo", "quick", "--input", "2,1", "--trace"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "1,2 PASS"
        assert len(lines) == 1 + 5  # five expanded nodes for [2, 1]
        assert lines[1].startswith("0 ")

    def test_output_matches_library(self, capsys):
        from corecur.sorting import quicksort

        values = [9, -3, 0, 9, 2]
        code, out, _ = run(capsys, ["sort", "--algo", "quick", "--input", "9,-3,0,9,2"])
        assert out.split(" ")[0] == ",".join(str(x) for x in quicksort(values))

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["sort", "--algo", "bogus", "--input", "1"])
        assert err.value.code == 2


class TestGcd:
    def test_base_case_golden(self, capsys):
        code, out, _ = run(capsys, ["gcd", "7", "0"])
        assert code == 0
        assert out == "7 1 0 1 0 OK\n"

    def test_matches_library(self, capsys):
        from corecur.euclid import gcd

        cert = gcd(240, 46)
        code, out, _ = run(capsys, ["gcd", "240", "46"])
        assert code == 0
        assert out == f"{cert.g} {cert.k} {cert.l} {cert.s} {cert.t} OK\n"

    def test_trace(self, capsys):
        code, out, _ = run(capsys, ["gcd", "8", "12", "--trace"])
        assert code == 0
        # 4 expansions: (8,12) (12,8) (8,4) (4,0)
        assert len(out.splitlines()) == 1 + 4


class TestCyk:
    def test_accepting_word_exit_0(self, capsys, grammar_file):
        code, out, _ = run(capsys, ["cyk", "--grammar", grammar_file, "--word", "ab"])
        assert code == 0
        assert out == "S\n"

    def test_rejecting_word_exit_1(self, capsys, grammar_file):
        code, out, _ = run(capsys, ["cyk", "--grammar", grammar_file, "--word", "ba"])
        assert code == 1
        assert out == "\n"

    def test_unknown_terminal_error_line(self, capsys, grammar_file):
        code, out, err = run(capsys, ["cyk", "--grammar", grammar_file, "--word", "az"])
        assert code == 1
        assert err == "UnknownTerminal\n"

    def test_malformed_grammar_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.cnf"
        bad.write_text("start S\nS -> A B C\n", encoding="utf-8")
        code, out, err = run(capsys, ["cyk", "--grammar", str(bad), "--word", "ab"])
        assert code == 1
        assert err == "GrammarError\n"


class TestHydra:
    def test_maxsteps_golden(self, capsys):
        code, out, _ = run(capsys, ["hydra", "--tree", "((()))", "--strategy", "1,1,1,1", "--maxsteps"])
        assert code == 0
        assert out == "3\n"

    def test_play_trace_ranks(self, capsys):
        code, out, _ = run(capsys, ["hydra", "--tree", "((()))", "--strategy", "1,1,1,1"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "0 [0,0,1]"
        assert len(lines) >= 2

    def test_random_policy_is_seeded(self, capsys):
        argv = ["hydra", "--tree", "((())(()))", "--strategy", "2,2,2,2,2,2,2,2,2,2,2,2",
                "--policy", "random", "--seed", "5"]
        code, first, _ = run(capsys, argv)
        assert code == 0
        code, second, _ = run(capsys, argv)
        assert first == second

    def test_strategy_exhausted_error(self, capsys):
        code, out, err = run(capsys, ["hydra", "--tree", "(())", "--strategy", ""])
        assert code == 1
        assert err == "StrategyExhausted\n"

    def test_oversized_tree_error(self, capsys):
        code, out, err = run(
            capsys, ["hydra", "--tree", "(()()()()()()())", "--strategy", "1", "--maxsteps"]
        )
        assert code == 1
        assert err == "FuseExceeded\n"


class TestWfcheck:
    def test_acyclic_graph_with_derived_ranks(self, capsys, graph_file):
        code, out, _ = run(capsys, ["wfcheck", "--graph", graph_file])
        assert code == 0
        assert out == "well-founded: yes\na: 2\nb: 1\nc: 0\n"

    def test_cyclic_graph(self, capsys, tmp_path):
        path = tmp_path / "cyclic.txt"
        path.write_text("a: b\nb: a\n", encoding="utf-8")
        code, out, _ = run(capsys, ["wfcheck", "--graph", str(path)])
        assert code == 0
        assert out == "well-founded: no\n"

    def test_ranking_verification(self, capsys, graph_file, tmp_path):
        good = tmp_path / "good.rank"
        good.write_text("a: 5\nb: 3\nc: 0\n", encoding="utf-8")
        code, out, _ = run(capsys, ["wfcheck", "--graph", graph_file, "--rank", str(good)])
        assert code == 0
        assert out == "ranking: ok\n"

        bad = tmp_path / "bad.rank"
        bad.write_text("a: 0\nb: 0\nc: 0\n", encoding="utf-8")
        code, out, _ = run(capsys, ["wfcheck", "--graph", graph_file, "--rank", str(bad)])
        assert code == 0
        assert out == "ranking: violated\n"

    def test_missing_file_is_usage_error(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as err:
            main(["wfcheck", "--graph", str(tmp_path / "nope.txt")])
        assert err.value.code == 2


class TestFuseEnv:
    def test_invalid_fuse_is_usage_error(self, capsys, monkeypatch):
        monkeypatch.setenv("CORECUR_FUSE", "zero")
        with pytest.raises(SystemExit) as err:
            main(["gcd", "8", "12"])
        assert err.value.code == 2

    def test_valid_fuse_accepted(self, capsys, monkeypatch):
        monkeypatch.setenv("CORECUR_FUSE", "100000")
        assert main(["gcd", "8", "12"]) == 0
        capsys.readouterr()


class TestUsage:
    def test_no_subcommand(self, capsys):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2

    def test_malformed_int_csv(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["sort", "--algo", "quick", "--input", "1,,2"])
        assert err.value.code == 2

    def test_malformed_tree_text(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["hydra", "--tree", "((", "--strategy", "1"])
        assert err.value.code == 2
