import pytest

from edsx.cartan import (CartanError, PolarReport, flag_search, flag_test,
                         stable_flag_test)
from edsx.catalog import get_structure


def test_even_family_default_flag():
    rep = flag_test(get_structure("su-even:2"))
    assert rep.c_values == [0, 0, 3, 9, 13]
    assert rep.codim_z0 == 12
    assert rep.sum_c_partial == 12
    assert rep.ordinary
    assert rep.relatively_admissible_positions == (0, 1, 2, 3, 4)


def test_custom_flag_order():
    s = get_structure("su-even:2")
    rep = flag_test(s, (1, 2, 3, 4))
    assert rep.c_values[:4] == [0, 0, 3, 9]
    assert rep.ordinary


def test_polar_counts_never_decrease():
    # polar systems accumulate rows along the flag
    for name in ("su-even:2", "su-odd:2", "g2", "example-712"):
        rep = flag_test(get_structure(name))
        assert all(a <= b for a, b in zip(rep.c_values, rep.c_values[1:]))


def test_rotation_triple_flag_is_not_ordinary():
    rep = flag_test(get_structure("so3-9"))
    assert not rep.ordinary
    assert rep.sum_c_partial == 152
    assert rep.codim_z0 == 200
    assert rep.relatively_admissible_positions == ()


def test_stable_flag_for_the_plane_pair_form():
    w = get_structure("example-712").generators["w"]
    rep = stable_flag_test(w, 7)
    assert rep.codim_z0 == 34
    assert rep.ordinary


def test_flag_search_finds_an_ordinary_flag():
    rep = flag_search(get_structure("example-712"))
    assert rep.ordinary
    assert sorted(rep.flag) == list(range(1, 8))


def test_polar_report_rejects_impossible_counts():
    with pytest.raises(CartanError):
        PolarReport((1, 2), [5, 9], 10)


def test_report_json_shape():
    j = flag_test(get_structure("su-even:2")).to_json()
    assert j["ordinary"] is True
    assert j["c_values"] == [0, 0, 3, 9, 13]
    assert j["flag"] == [1, 3, 2, 4]
