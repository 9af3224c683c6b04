import os
import subprocess

import pytest

import oortlab


def test_build_and_membership():
    g = oortlab.build("S:4")
    assert g.order == 24
    assert g.degree == 4
    assert g.contains([1, 0, 2, 3])
    assert not oortlab.build("A:4").contains([1, 0, 2, 3])


def test_canonical_spec_round_trip():
    assert oortlab.canonical_spec("Q:2^4") == oortlab.canonical_spec("Q:16")


def test_construct_summary():
    s = oortlab.construct("PSL2:7")
    assert s["order"] == 168
    assert s["simple"] is True


@pytest.mark.parametrize(
    "spec,p,expected",
    [("D:18", 3, True), ("S:5", 5, False), ("Q:8", 2, False), ("DELPERM:5:S4:sign", 2, True)],
)
def test_check_routes_agree(spec, p, expected):
    v = oortlab.check(spec, p)
    assert v["routes_agree"] is True
    assert v["is_o_group"] is expected
    assert (len(v["definition"]["witnesses"]) == 0) is expected


def test_is_o_group_on_group_object():
    g = oortlab.build("A:6")
    assert oortlab.is_o_group(g, 5, "def") is True
    assert oortlab.is_o_group(g, 3, "crit") is False


def test_audit_report():
    a = oortlab.audit("DELPERM:5:S4:sign", 2)
    assert a["report"]["case"] == "G=R:S4"
    assert a["report"]["chief_factors"][0]["trace_order4"] == 1
    assert a["theorem_violations"] == []


def test_errors():
    with pytest.raises(oortlab.ParseError):
        oortlab.build("C:")
    with pytest.raises(ValueError):
        oortlab.check("C:", 3)


@pytest.mark.skipif("OORTLAB_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes():
    cli = os.environ["OORTLAB_CLI"]
    assert subprocess.run([cli, "check", "D:18", "--p", "3"], capture_output=True).returncode == 0
    assert subprocess.run([cli, "check", "S:5", "--p", "5"], capture_output=True).returncode == 1
