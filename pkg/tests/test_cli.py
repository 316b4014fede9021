import json

from edsx.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cartan_output_line(capsys):
    code, out, _ = run(capsys, ["cartan", "--structure", "su-even:3"])
    assert code == 0
    assert out == "c = [0,0,1,5,14,22], ordinary true\n"


def test_invariants_dim_line(capsys):
    code, out, _ = run(capsys, ["invariants", "--structure", "so3-9",
                                "--degree", "4"])
    assert code == 0
    assert out.splitlines()[0] == "dim 1"


def test_invariants_all_degrees(capsys):
    code, out, _ = run(capsys, ["invariants", "--structure", "su-even:2"])
    assert code == 0
    assert "degree 2: dim 3" in out


def test_dga_pass_and_fail_exit_codes(capsys):
    code, out, _ = run(capsys, ["dga", "--structure", "su-even:3",
                                "--operator", "nearly-kahler",
                                "--params", "lambda=3,mu=0"])
    assert code == 0
    assert "all ok true" in out
    code, out, _ = run(capsys, ["dga", "--structure", "so3-9",
                                "--operator", "gamma-dual",
                                "--params", "lambda=1"])
    assert code == 1
    assert "all ok false" in out


def test_usage_errors_exit_two(capsys):
    code, _, err = run(capsys, ["cartan", "--structure", "nope"])
    assert code == 2
    assert "unknown structure" in err
    code, _, err = run(capsys, ["dga", "--structure", "su-odd:2",
                                "--operator", "A", "--params", "lambda=x"])
    assert code == 2
    code, _, err = run(capsys, ["stability", "--structure", "so3-9"])
    assert code == 2
    assert "--generator" in err


def test_stability_json_payload(capsys):
    code, out, _ = run(capsys, ["stability", "--structure", "g2", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["orbit_dim"] == 35
    assert payload["stable"] is True
    assert payload["tool"] == "edsx"
    assert payload["provenance"] == "derived"


def test_zspaces_empty_report(capsys):
    code, out, _ = run(capsys, ["zspaces", "--structure", "so3-9",
                                "--operator", "gamma-dual",
                                "--params", "lambda=1"])
    assert code == 0
    assert "dim Z' = empty" in out


def test_restrict_report(capsys):
    code, out, _ = run(capsys, ["restrict", "--structure", "su-even:2",
                                "--operator", "zero"])
    assert code == 0
    assert "dims Z' 52, projection 27, Z'_W 24" in out
    assert "projection onto true" in out


def test_decompose_report(capsys):
    code, out, _ = run(capsys, ["decompose", "--structure", "so3-9",
                                "--space", "t-gperp"])
    assert code == 0
    assert "dim 297" in out
    assert "25 irreducible components" in out


def test_decompose_needs_small_algebra(capsys):
    code, _, err = run(capsys, ["decompose", "--structure", "g2"])
    assert code == 2
    assert "3-dimensional" in err


def test_cartan_json_matches_human(capsys):
    code, out, _ = run(capsys, ["cartan", "--structure", "su-even:3",
                                "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["c_values"][:6] == [0, 0, 1, 5, 14, 22]
    assert payload["ordinary"] is True
