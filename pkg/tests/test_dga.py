import random

import pytest

from edsx.catalog import get_structure
from edsx.dga import (DgaError, check_operator, derivation_value,
                      strong_admissibility, z_spaces)
from edsx.exterior import Form, wedge
from edsx.rep import act_on_hom
from edsx.scalar import Scalar


def rand_form(rng, n, p, terms=2):
    f = Form.zero(n)
    for _ in range(terms):
        idx = tuple(sorted(rng.sample(range(1, n + 1), p)))
        f = f + Form.monomial(n, idx, Scalar.of(rng.randrange(-3, 4)))
    return f


def test_derivation_value_is_a_derivation():
    rng = random.Random(41)
    for _ in range(40):
        n = rng.randrange(3, 6)
        images = [rand_form(rng, n, 2, 2) for _ in range(n)]
        p = rng.randrange(1, n)
        q = rng.randrange(1, n)
        a = rand_form(rng, n, p)
        b = rand_form(rng, n, q)
        left = derivation_value(images, wedge(a, b))
        sign = Scalar.of(-1 if p % 2 else 1)
        right = wedge(derivation_value(images, a), b) \
            + wedge(a, derivation_value(images, b)).scale(sign)
        assert left == right


def test_derivation_value_on_basis_covectors():
    images = [Form.monomial(4, (3, 4), 1)] + [Form.zero(4)] * 3
    assert derivation_value(images, Form.monomial(4, (1,), 1)) == images[0]
    # d(e1 ^ e2) = d(e1) ^ e2 = e3 ^ e4 ^ e2 = e2 ^ e3 ^ e4
    assert derivation_value(images, Form.monomial(4, (1, 2), 1)) \
        == Form.monomial(4, (2, 3, 4), 1)


def test_zero_operator_checks_out_everywhere():
    for name in ("su-even:2", "su-odd:2", "g2", "example-712"):
        chk = check_operator(get_structure(name), "zero")
        assert chk.all_ok(), name
        assert chk.extension_witness is not None


def test_unknown_operator_rejected():
    with pytest.raises((DgaError, KeyError, ValueError)):
        check_operator(get_structure("g2"), "missing-op")


def test_operator_family_samples():
    s = get_structure("su-odd:2")
    for lam, mu in ((0, 0), (1, 0), (3, 1)):
        chk = check_operator(s, "A", {"lambda": lam, "mu": mu})
        assert chk.all_ok(), (lam, mu)


def test_failing_operator_reports_false():
    s = get_structure("so3-9")
    chk = check_operator(s, "gamma-dual", {"lambda": 1})
    assert not chk.leibniz_ok
    assert not chk.extends_ok
    assert not chk.all_ok()
    assert chk.extension_witness is None


def test_extension_witness_reproduces_the_operator():
    s = get_structure("su-even:3")
    chk = check_operator(s, "nearly-kahler", {"lambda": 3, "mu": 0})
    fvals = s.operators["nearly-kahler"].instantiate(
        {"lambda": Scalar.of(3), "mu": Scalar.of(0)})
    for wit in (chk.extension_witness, chk.equivariant_witness):
        assert wit is not None
        for g, target in fvals.items():
            assert derivation_value(wit.images, s.generators[g]) == target
    assert all(act_on_hom(x, chk.equivariant_witness).is_zero()
               for x in s.lie.basis)


def test_z_space_dimensions():
    zr = z_spaces(get_structure("su-even:2"), "zero")
    n = 4
    assert zr.z_prime.dim == 12
    assert zr.z_dim == 12 + n * n * (n + 1) // 2
    assert zr.z_doubleprime_dim == 0
    assert zr.xi_f is not None and zr.xi_f.is_zero()


def test_z_space_with_nonzero_operator():
    zr = z_spaces(get_structure("su-odd:2"), "B",
                  {"lambda": 1, "mu": 1})
    assert zr.z_prime.dim == 15
    assert zr.z_dim == 90
    assert zr.xi_f is not None and not zr.xi_f.is_zero()


def test_z_space_empty_when_unsolvable():
    zr = z_spaces(get_structure("so3-9"), "gamma-dual", {"lambda": 1})
    assert zr.z_prime.is_empty
    assert zr.z_dim is None
    assert zr.z_doubleprime_dim is None
    assert zr.xi_f is None


def test_strong_admissibility_report():
    ok, rep = strong_admissibility(get_structure("su-even:2"))
    assert ok
    assert rep["codim_z0"] == 12
    assert rep["dim_t_gperp"] == 12
    assert rep["codim_matches"]
    assert rep["z_prime_dim"] == 12
    assert rep["g_tensor_expected"] == 12
    assert rep["g_tensor_inside"]
    assert rep["splitting_exact"]


def test_zero_z_double_prime_means_codim_attained():
    # codim Z_0 in the degree-2 jet space equals the polar count total
    from edsx.cartan import flag_test
    s = get_structure("su-odd:2")
    ok, rep = strong_admissibility(s)
    assert ok
    assert flag_test(s).codim_z0 == rep["codim_z0"]
