import json

import pytest

from specbound.cli import main, parse_construction
from specbound.graphs import (
    canonical_form,
    complete_bipartite,
    cycle,
    pattern,
    PatternId,
    sk,
    s_odd,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstructionLanguage:
    def test_tokens(self):
        cases = [
            (["C7"], cycle(7)),
            (["Kst", "2", "4"], complete_bipartite(2, 4)),
            (["SK", "2", "4"], sk(2, 4)),
            (["S3", "2", "3"], s_odd(2, 3, 2)),
            (["Sodd", "2", "2", "3"], cycle(9)),
            (["H2"], pattern(PatternId.H2)),
            (["T5"], pattern(PatternId.T5)),
        ]
        for tokens, want in cases:
            got = parse_construction(tokens)
            assert canonical_form(got) == canonical_form(want)

    def test_blowup_token(self):
        g = parse_construction(["Blowup", "P2", "3,4"])
        assert canonical_form(g) == canonical_form(complete_bipartite(3, 4))

    def test_bad_token(self):
        with pytest.raises(Exception):
            parse_construction(["Q9"])


class TestCommands:
    def test_tables_pass(self, capsys):
        code, out, _ = run(capsys, "tables")
        assert code == 0
        assert "MISMATCH" not in out
        assert "T6" in out

    def test_spectrum_construct(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--construct", "C7")
        assert code == 0
        assert out.splitlines()[0].startswith("2.000000 1.246980")

    def test_spectrum_k1_graph6(self, capsys):
        code, out, _ = run(capsys, "spectrum", "@")
        assert code == 0
        assert out.splitlines()[0] == "0.000000"

    def test_spectrum_sk_matches_beta(self, capsys):
        from specbound.bounds import beta
        code, out, _ = run(capsys, "spectrum", "--precision", "10",
                           "--construct", "SK", "2", "4")
        lam1 = float(out.split()[0])
        assert abs(lam1 - beta(9)) < 1e-8

    def test_bad_graph6_exit_1_with_position(self, capsys):
        code, _, err = run(capsys, "spectrum", "D?~")
        assert code == 1
        assert "byte" in err

    def test_charpoly(self, capsys):
        code, out, _ = run(capsys, "charpoly", "--construct", "Kst", "1", "1")
        assert code == 0
        assert "x^2 - 1" in out

    def test_bounds_m7(self, capsys):
        code, out, _ = run(capsys, "bounds", "7")
        assert code == 0
        assert "gamma(m)  = 2.0000000000" in out
        assert "FAIL" not in out

    def test_bounds_m6_gamma_omitted(self, capsys):
        code, out, _ = run(capsys, "bounds", "6")
        assert code == 0
        assert "omitted" in out

    def test_bounds_large_m_gap(self, capsys):
        code, out, _ = run(capsys, "bounds", "1000000")
        assert code == 0
        lines = {l.split("=")[0].strip(): float(l.split("=")[1].split()[0])
                 for l in out.splitlines() if "=" in l and "omitted" not in l}
        assert lines["beta(m)"] - lines["sqrt(m-2)"] < 1e-2

    def test_certify_exit_codes(self, capsys, tmp_path):
        out_json = tmp_path / "r.json"
        code, out, _ = run(capsys, "certify", "zhai-shu", "9",
                           "--json", str(out_json))
        assert code == 0
        assert "HOLDS_WITH_EQUALITY" in out
        data = json.loads(out_json.read_text())
        assert data["verdict"] == "HOLDS_WITH_EQUALITY"
        assert data["maximizers"] == ["F]qAG"]

    def test_certify_main_7(self, capsys):
        code, out, _ = run(capsys, "certify", "main", "7")
        assert code == 0
        assert "HOLDS_WITH_EQUALITY" in out

    def test_certify_budget_exit_1(self, capsys):
        code, _, err = run(capsys, "certify", "zhai-shu", "13")
        assert code == 1
        assert "budget" in err

    def test_usage_error_exit_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["certify", "not-a-theorem", "5"])
        assert exc.value.code == 1

    def test_enumerate_c5(self, capsys):
        code, out, _ = run(capsys, "enumerate", "5", "--triangle-free",
                           "--non-bipartite", "--connected")
        assert code == 0
        assert out.strip() == "DqK"

    def test_explore_booksize(self, capsys):
        code, out, _ = run(capsys, "explore", "booksize", "3")
        assert code == 0
        assert "min booksize" in out

    def test_explore_conj51(self, capsys):
        code, out, _ = run(capsys, "explore", "conj51", "9", "--k", "3")
        assert code == 0
        assert "CONJECTURE" in out

    def test_construct_roundtrip(self, capsys):
        from specbound.graphs import from_graph6
        code, out, _ = run(capsys, "construct", "SK", "2", "4")
        assert code == 0
        g = from_graph6(out.splitlines()[0])
        assert canonical_form(g) == canonical_form(sk(2, 4))


class TestDeterminism:
    def test_repeat_runs_identical(self, capsys):
        _, out1, _ = run(capsys, "certify", "nosal", "5")
        _, out2, _ = run(capsys, "certify", "nosal", "5")
        strip = lambda s: [l for l in s.splitlines() if "wall time" not in l]
        assert strip(out1) == strip(out2)

    def test_jobs_only_change_wall_time(self, capsys, tmp_path):
        j1, j2 = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "certify", "nosal", "6", "--json", str(j1))
        run(capsys, "certify", "nosal", "6", "--jobs", "2", "--json", str(j2))
        a = json.loads(j1.read_text())
        b = json.loads(j2.read_text())
        a.pop("wall_time")
        b.pop("wall_time")
        assert a == b
