"""CLI surface: polynomial parsing, report schema, subcommands, exit codes."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from irreducia.cli import (
    EXIT_ERROR,
    EXIT_NO_CONCLUSION,
    EXIT_OK,
    PolyParseError,
    main,
    parse_poly,
    render_coeff_list,
    render_factorization,
    render_poly,
    report_to_dict,
    report_to_json,
)
from irreducia.criteria import AnalyzeConfig, analyze
from irreducia.oracle import factor
from irreducia.poly import Polynomial


class TestParsePoly:
    def test_list_format(self):
        assert parse_poly("4,4,0,1") == Polynomial([4, 4, 0, 1])

    def test_sparse_format(self):
        assert parse_poly("z^3+4z+4") == Polynomial([4, 4, 0, 1])
        assert parse_poly("z^3 + 4*z + 4") == Polynomial([4, 4, 0, 1])

    def test_duplicate_powers_summed(self):
        assert parse_poly("2z^2 - z^2") == Polynomial([0, 0, 1])

    def test_unary_minus_and_bare_terms(self):
        assert parse_poly("-z^4 + z - 7") == Polynomial([-7, 1, 0, 0, -1])
        assert parse_poly("z") == Polynomial([0, 1])
        assert parse_poly("-3") == Polynomial([-3])

    def test_whitespace_insensitive(self):
        assert parse_poly("  z ^ 2 ".replace(" ", "")) == parse_poly("z^2")
        assert parse_poly(" 1 , 2 , 3 ") == Polynomial([1, 2, 3])

    def test_empty_rejected(self):
        with pytest.raises(PolyParseError, match="empty"):
            parse_poly("   ")

    def test_malformed_rejected(self):
        for bad in ("z^", "2x+1", "1,,2", "z**2", "++", "3^2"):
            with pytest.raises(PolyParseError):
                parse_poly(bad)

    @given(st.lists(st.integers(-99, 99), min_size=1, max_size=8))
    def test_render_parse_round_trip(self, coeffs):
        f = Polynomial(coeffs)
        assert parse_poly(render_poly(f)) == f
        if not f.is_zero():
            assert parse_poly(render_coeff_list(f)) == f


class TestReportJson:
    def test_stable_keys_and_strings(self):
        report = analyze(parse_poly("z^3+4z+4"))
        d = report_to_dict(report)
        assert list(d) == [
            "schema", "input", "normalization", "outcomes", "strongest",
            "oracle", "warnings",
        ]
        assert d["schema"] == "irreducia/1"
        assert d["input"]["coeffs"] == ["4", "4", "0", "1"]
        assert d["normalization"] == {"content": "1", "zPower": 0}
        assert d["strongest"]["criterion"] == "eisenstein_generalized"
        assert d["strongest"]["conclusion"] == {"kind": "Irreducible"}
        assert d["strongest"]["witnesses"] == {"p": "2", "k": "2", "j": "3"}
        assert all(isinstance(w["coeffs"], list) for w in d["oracle"]["factors"])

    def test_round_trip_byte_identical(self):
        for text in ("z^3+4z+4", "z^4-1", "50,5,1", "0,8,4"):
            report = analyze(parse_poly(text))
            blob = report_to_json(report)
            assert json.dumps(json.loads(blob), indent=2) == blob

    def test_no_oracle_key_when_disabled(self):
        report = analyze(parse_poly("z^2+z+1"), AnalyzeConfig(oracle="off"))
        assert "oracle" not in report_to_dict(report)


class TestRenderFactorization:
    def test_reference_output(self):
        assert render_factorization(factor(parse_poly("6z^2+5z+1"))) == "(2z+1)(3z+1)"

    def test_bare_z(self):
        assert render_factorization(factor(parse_poly("z"))) == "(z)"

    def test_content_and_multiplicity(self):
        f = Polynomial([0, 0, -4, -8, -4])
        assert render_factorization(factor(f)) == "-4(z)^2(z+1)^2"


class TestExitCodes:
    def test_analyze_conclusive(self, capsys):
        assert main(["analyze", "--poly", "z^3+4z+4", "--format", "json"]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out["strongest"]["conclusion"]["kind"] == "Irreducible"

    def test_analyze_inconclusive(self, capsys):
        assert main(["analyze", "--poly", "z^4-1"]) == EXIT_NO_CONCLUSION
        assert "3 irreducible factors" in capsys.readouterr().out

    def test_analyze_empty_input(self, capsys):
        assert main(["analyze", "--poly", ""]) == EXIT_ERROR
        assert "error" in capsys.readouterr().err

    def test_analyze_unknown_criterion(self, capsys):
        assert main(["analyze", "--poly", "z+1", "--criteria", "bogus"]) == EXIT_ERROR

    def test_analyze_criteria_subset(self, capsys):
        code = main([
            "analyze", "--poly", "z^3+4z+4",
            "--criteria", "perron_nonmonic", "--format", "json",
        ])
        assert code == EXIT_NO_CONCLUSION
        out = json.loads(capsys.readouterr().out)
        assert [o["criterion"] for o in out["outcomes"]] == ["perron_nonmonic"]

    def test_factor_output(self, capsys):
        assert main(["factor", "--poly", "6z^2+5z+1"]) == EXIT_OK
        assert "(2z+1)(3z+1)" in capsys.readouterr().out

    def test_factor_limit_is_error(self, capsys):
        assert main(["factor", "--poly", "z^9+2", "--max-degree", "8"]) == EXIT_ERROR

    def test_audit_small_clean(self, capsys):
        code = main(["audit", "--max-degree", "2", "--coeff-bound", "2"])
        assert code == EXIT_OK
        assert "total violations: 0" in capsys.readouterr().out

    def test_audit_invalid_bound(self, capsys):
        assert main(["audit", "--max-degree", "0"]) == EXIT_ERROR
        assert "invalid bound" in capsys.readouterr().err

    def test_audit_families(self, capsys):
        assert main(["audit", "--families", "P4"]) == EXIT_OK
        assert "family P4" in capsys.readouterr().out

    def test_gen_family(self, capsys):
        code = main(["gen", "--family", "P1", "--p", "2", "--m", "3", "--n", "2",
                     "--sign", "+"])
        assert code == EXIT_OK
        assert capsys.readouterr().out.strip() == "4,4,0,1"

    def test_gen_family_violation(self, capsys):
        code = main(["gen", "--family", "P2", "--p", "5", "--k", "1", "--d", "1",
                     "--m", "2", "--tail", "3,1"])
        assert code == EXIT_ERROR
        assert "dominance" in capsys.readouterr().err

    def test_gen_exhaustive(self, capsys):
        code = main(["gen", "--exhaustive", "--max-degree", "1", "--coeff-bound", "1"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert sorted(lines) == ["-1,1", "1,1"]

    def test_gen_random_seeded(self, capsys):
        main(["gen", "--random", "--count", "3", "--seed", "9"])
        first = capsys.readouterr().out
        main(["gen", "--random", "--count", "3", "--seed", "9"])
        assert capsys.readouterr().out == first
