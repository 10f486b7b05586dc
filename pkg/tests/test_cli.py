"""CLI surface: subcommands, formats, exit codes, figure output."""

from __future__ import annotations

import json
import os

from click.testing import CliRunner

from konigtype.cli import main
from konigtype.graphs import emit_graph6

from conftest import FIXTURES, cycle, net, path

NET_G6 = emit_graph6(net())


def run(*args, **kw):
    return CliRunner().invoke(main, list(args), **kw)


def parse_summary(output: str) -> dict:
    # the test runner interleaves stderr (elapsed line) with stdout
    obj, _ = json.JSONDecoder().raw_decode(output)
    return obj


class TestCheck:
    def test_net(self):
        result = run("check", NET_G6)
        assert result.exit_code == 0
        assert "König type:         False" in result.output
        assert "AT-free:            False" in result.output

    def test_bad_graph6_exits_2(self):
        result = run("check", "~~~nonsense")
        assert result.exit_code == 2


class TestAnalyze:
    def test_json_lines(self, tmp_path):
        src = tmp_path / "in.g6"
        src.write_text(NET_G6 + "\n" + emit_graph6(path(4)) + "\n")
        result = run("analyze", str(src))
        assert result.exit_code == 0
        rows = [json.loads(line) for line in result.output.splitlines()]
        assert [r["koenig"] for r in rows] == [False, True]

    def test_csv(self, tmp_path):
        src = tmp_path / "in.g6"
        src.write_text(NET_G6 + "\n")
        result = run("analyze", "--format", "csv", str(src))
        lines = result.output.splitlines()
        assert lines[0].startswith("graph6,n,edges,pi,sc,sc_star,lf,height,dim,koenig,unmixed")
        assert lines[1].startswith(f"{NET_G6},6,6,2,1,1,4,5,7,false,true")

    def test_filter_and_recognition(self, tmp_path):
        src = tmp_path / "in.g6"
        src.write_text(emit_graph6(cycle(6)) + "\nA?\n")
        result = run("analyze", "--filter", "connected", "--filter", "atfree",
                     "--recognition", str(src))
        assert result.exit_code == 0
        assert result.output.strip() == ""  # C6 not AT-free, A? disconnected

    def test_figures_written(self, tmp_path):
        src = tmp_path / "in.g6"
        src.write_text(NET_G6 + "\n")
        figdir = tmp_path / "figs"
        result = run("analyze", "--figures", str(figdir), str(src))
        assert result.exit_code == 0
        assert (figdir / "pi_vs_scstar.png").exists()

    def test_input_error_exit_code(self):
        assert run("analyze", "/does/not/exist").exit_code == 2


class TestVerifyConjecture:
    def test_trees(self, tmp_path):
        src = os.path.join(FIXTURES, "trees_n_le_9.g6")
        figdir = tmp_path / "figs"
        result = run("verify-conjecture", "--figures", str(figdir), src)
        assert result.exit_code == 0
        summary = parse_summary(result.output)
        assert summary["counterexamples"] == []
        assert summary["at_free_count"] == summary["koenig_count"]
        assert (figdir / "verification_counts.png").exists()

    def test_counterexample_file(self, tmp_path):
        src = os.path.join(FIXTURES, "trees_n_le_9.g6")
        out = tmp_path / "cex.jsonl"
        result = run("verify-conjecture", "--counterexamples", str(out), src)
        assert result.exit_code == 0
        assert out.read_text() == ""

    def test_input_error_exit_code(self):
        assert run("verify-conjecture", "/does/not/exist").exit_code == 2


class TestSingleGraphCommands:
    def test_primes(self):
        result = run("primes", NET_G6)
        assert result.exit_code == 0
        assert len(json.loads(result.output)) == 7

    def test_primes_rejects_k1(self):
        assert run("primes", "@").exit_code == 2

    def test_emit_script_stdout(self):
        result = run("emit-script", NET_G6)
        assert result.exit_code == 0
        assert "assert(codim J == 5);" in result.output

    def test_emit_script_to_dir(self, tmp_path):
        result = run("emit-script", "--out-dir", str(tmp_path), NET_G6)
        assert result.exit_code == 0
        written = result.output.strip()
        assert written.endswith(".m2")
        assert "assert(#mp == 7);" in open(written).read()

    def test_atfree(self):
        assert "AT-free: yes" in run("atfree", emit_graph6(path(5))).output
        out = run("atfree", NET_G6).output
        assert "AT-free: no" in out
        assert json.loads(out.splitlines()[1])["vertices"] == [4, 5, 6]

    def test_weakly_closed(self):
        assert "weakly closed: yes" in run("weakly-closed", emit_graph6(path(4))).output
        assert "weakly closed: no" in run("weakly-closed", emit_graph6(cycle(5))).output
