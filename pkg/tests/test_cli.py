import json

import pytest

from quasicyc import cli
from quasicyc.calculus import character_closed
from quasicyc.cyclic import CyclicCochain
from quasicyc.presets import builtin
from quasicyc.twist import transport


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_character_octonion(capsys):
    rc, out, _ = run(capsys, "character", "--preset", "octonion", "--args", "uvw,u,v,w")
    assert rc == 0
    assert out == "-8\n"


def test_character_octonion_closed_and_twisted_routes(capsys):
    for extra in ([], ["--closed-form"], ["--twisted"], ["--closed-form", "--twisted"]):
        rc, out, _ = run(
            capsys, "character", "--preset", "octonion", "--args", "uvw,u,v,w", *extra
        )
        assert rc == 0
        # transport prefactor is +1 at this tuple, all four routes agree
        assert out == "-8\n"


def test_character_torus_twisted(capsys):
    rc, out, _ = run(
        capsys, "character", "--preset", "torus", "--args", "u^-1*v^-1,u,v", "--twisted"
    )
    assert rc == 0
    assert out == "q^-1\n"
    rc, out, _ = run(
        capsys, "character", "--preset", "torus",
        "--args", "u^-1*v^-1,u,v", "--twisted", "--closed-form",
    )
    assert rc == 0
    assert out == "q^-1\n"


def test_character_off_support_is_zero(capsys):
    rc, out, _ = run(capsys, "character", "--preset", "octonion", "--args", "u,u,v,w")
    assert rc == 0
    assert out == "0\n"


def test_table_untwisted_vs_twisted(capsys):
    rc, plain, _ = run(capsys, "table", "--preset", "octonion")
    assert rc == 0
    rows = [line.split("\t") for line in plain.strip().splitlines()]
    assert rows[0][0] == "."
    assert len(rows) == 9 and all(len(r) == 9 for r in rows)
    assert "-" not in plain

    rc, twisted, _ = run(capsys, "table", "--preset", "octonion", "--twisted")
    assert rc == 0
    trows = [line.split("\t") for line in twisted.strip().splitlines()]
    labels = trows[0][1:]
    u, v = labels.index("u"), labels.index("v")
    # u.u = -e, u.v = -u*v, v.u = u*v
    assert trows[u + 1][u + 1] == "-e"
    assert trows[u + 1][v + 1] == "-u*v"
    assert trows[v + 1][u + 1] == "u*v"


def test_table_torus_window(capsys):
    rc, out, _ = run(capsys, "table", "--preset", "torus", "--twisted")
    assert rc == 0
    rows = out.strip().splitlines()
    assert len(rows) == 10
    assert "(q)*" in out


def test_verify_certificate_shape_and_determinism(capsys):
    args = ("verify", "--preset", "z2_trivial", "--suite", "all", "--degree-max", "2")
    rc, out, err = run(capsys, *args)
    assert rc == 0
    assert err == ""
    cert = json.loads(out)
    assert cert["preset"] == "z2_trivial"
    assert cert["suite"] == "all"
    assert cert["seed"] == 0
    assert cert["timestamp"] == "1970-01-01T00:00:00Z"
    assert all(r["status"] != "fail" for r in cert["identities"])
    names = {r["name"] for r in cert["identities"]}
    for prefix in ("cochain.", "algebra.", "calculus.", "cyclic."):
        assert any(n.startswith(prefix) for n in names)
    assert "transport_intertwines_b" in names

    rc2, out2, _ = run(capsys, *args)
    assert rc2 == 0 and out2 == out


def test_verify_single_suite_torus_skips_finite_only_checks(capsys):
    rc, out, _ = run(
        capsys, "verify", "--preset", "torus", "--suite", "cyclic",
        "--degree-max", "1", "--window", "2",
    )
    assert rc == 0
    cert = json.loads(out)
    by_name = {r["name"]: r["status"] for r in cert["identities"]}
    assert by_name["cyclic.mixed_complex"] == "skipped: needs a finite group"
    assert by_name["cyclic.periodicity"] == "skipped: needs a finite group"


def test_verify_failure_exits_1_with_counterexample(capsys, monkeypatch):
    def broken(pre, args):
        return [{
            "name": "cochain.unital",
            "status": "fail",
            "counterexample": "((0,), (1,))",
        }]

    monkeypatch.setitem(cli._SUITE_FNS, "cochain", broken)
    rc, out, err = run(
        capsys, "verify", "--preset", "z2_trivial", "--suite", "cochain",
    )
    assert rc == 1
    cert = json.loads(out)
    assert cert["identities"][0]["status"] == "fail"
    assert "FAILED cochain.unital at ((0,), (1,))" in err


def test_cohomology_report(capsys):
    rc, out, _ = run(
        capsys, "cohomology", "--preset", "z2_trivial", "--which", "hh",
        "--degree-max", "2", "--twisted",
    )
    assert rc == 0
    rep = json.loads(out)
    assert rep["which"] == "hh"
    assert rep["twisted"] is True
    assert [r["degree"] for r in rep["rows"]] == [0, 1, 2]
    assert all("dim" in r for r in rep["rows"])


def test_twist_subcommand_round_trip(tmp_path, capsys):
    pre = builtin("octonion")
    phi = CyclicCochain.from_fn(
        pre.group, pre.ribbon_weight(), 3,
        lambda t: character_closed(pre.calculus(), "general", t),
    )
    src = tmp_path / "phi.json"
    dst = tmp_path / "phi_F.json"
    src.write_text(json.dumps(phi.to_json()))

    rc, out, _ = run(capsys, "twist", "--preset", "octonion",
                     "--in", str(src), "--out", str(dst))
    assert rc == 0
    moved = CyclicCochain.from_json(json.loads(dst.read_text()))
    assert moved == transport(phi, pre.cochain())


def test_usage_errors_exit_2(capsys):
    assert cli.main(["character", "--preset", "no_such", "--args", "e"]) == 2
    assert cli.main(["character", "--preset", "octonion", "--args", "z9,u"]) == 2
    assert cli.main(["verify", "--preset", "octonion"]) == 2
    assert cli.main(["frobnicate"]) == 2
    assert cli.main([]) == 2
    capsys.readouterr()


def test_twist_group_mismatch_exits_2(tmp_path, capsys):
    z2 = builtin("z2_trivial")
    phi = CyclicCochain.basis(z2.group, z2.ribbon_weight(), 1, 0)
    src = tmp_path / "phi.json"
    src.write_text(json.dumps(phi.to_json()))
    rc = cli.main(["twist", "--preset", "octonion",
                   "--in", str(src), "--out", str(tmp_path / "out.json")])
    assert rc == 2
    assert "error:" in capsys.readouterr().err
