import json

from edsx.catalog import get_structure
from edsx.exterior import Subspace
from edsx.scalar import Scalar
from edsx.stability import e_stable, sampled_hyperplanes, stability


def test_stable_forms():
    rho = get_structure("psu3").generators["rho"]
    rep = stability(rho)
    assert rep.stable
    assert rep.orbit_dim == 56
    assert rep.full_dim == 56
    phi = get_structure("g2").generators["phi"]
    rep = stability(phi)
    assert rep.stable and rep.orbit_dim == 35
    assert all(rep.per_hyperplane.values())


def test_unstable_forms():
    cay = get_structure("spin7").generators["cayley"]
    rep = stability(cay)
    assert not rep.stable
    assert rep.orbit_dim == 43
    assert all(rep.per_hyperplane.values())
    sig = get_structure("sp2sp1").generators["sigma"]
    rep = stability(sig)
    assert not rep.stable and rep.orbit_dim == 51


def test_dual_form_hyperplane_pattern():
    star = get_structure("so3-9").generators["star-gamma"]
    rep = stability(star)
    good = {i for i, v in rep.per_hyperplane.items() if v}
    assert good == {1, 2, 4, 5, 6, 8}


def test_e_stability_is_scale_invariant():
    cay = get_structure("spin7").generators["cayley"]
    w = Subspace.coordinate(8, [1, 2, 3, 4, 5, 6, 7])
    assert e_stable(cay, w) == e_stable(cay.scale(Scalar.of(3)), w)
    assert e_stable(cay, w) == e_stable(-cay, w)


def test_sampled_hyperplanes_are_fixed():
    a = sampled_hyperplanes(8)
    b = sampled_hyperplanes(8)
    assert len(a) == 20
    assert all(x.vectors == y.vectors for x, y in zip(a, b))


def test_sampled_stability_of_cayley_form():
    cay = get_structure("spin7").generators["cayley"]
    rep = stability(cay, sampled=True)
    assert rep.sampled_ok is True


def test_report_json():
    rep = stability(get_structure("g2").generators["phi"])
    j = rep.to_json()
    assert json.loads(json.dumps(j, sort_keys=True)) == j
    assert j["orbit_dim"] == 35
    assert j["stable"] is True
