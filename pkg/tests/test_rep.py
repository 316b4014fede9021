import random

import pytest

from edsx.catalog import get_structure
from edsx.exterior import Form, parse_form, wedge
from edsx.rep import (HomMap, LieRep, act_on_form, act_on_hom,
                      cartan_three_form, casimir_decompose, equivariant_maps,
                      gl_basis, hom_dim, invariants, mat_bracket,
                      mat_is_skew, orbit_matrix, stabilizer)
from edsx.linalg import rank
from edsx.scalar import Scalar


def S(q):
    return Scalar.of(q)


def rot(n, i, j):
    """Elementary rotation generator E_ij - E_ji as a Scalar matrix."""
    m = [[S(0)] * n for _ in range(n)]
    m[i - 1][j - 1] = S(1)
    m[j - 1][i - 1] = S(-1)
    return m


def rand_form(rng, n, p, terms=3):
    f = Form.zero(n)
    for _ in range(terms):
        idx = tuple(sorted(rng.sample(range(1, n + 1), p)))
        f = f + Form.monomial(n, idx, S(rng.randrange(-4, 5)))
    return f


def test_gl_basis_counts():
    assert len(gl_basis(5)) == 25
    assert len(gl_basis(5, skew=True)) == 10
    assert all(mat_is_skew(m) for m in gl_basis(4, skew=True))


def test_mat_bracket_antisymmetry():
    a = rot(4, 1, 2)
    b = rot(4, 2, 3)
    ab = mat_bracket(a, b)
    ba = mat_bracket(b, a)
    assert all(ab[i][j] == -ba[i][j] for i in range(4) for j in range(4))
    assert mat_is_skew(ab)


def test_act_on_form_is_a_derivation():
    rng = random.Random(21)
    for _ in range(40):
        n = rng.randrange(2, 6)
        x = [[S(rng.randrange(-2, 3)) for _ in range(n)] for _ in range(n)]
        a = rand_form(rng, n, rng.randrange(1, n), 2)
        b = rand_form(rng, n, rng.randrange(1, n), 2)
        left = act_on_form(x, wedge(a, b))
        right = wedge(act_on_form(x, a), b) + wedge(a, act_on_form(x, b))
        assert left == right


def test_stabilizer_fixes_its_form():
    s = get_structure("g2")
    phi = s.generators["phi"]
    g = stabilizer(phi, skew=True)
    assert g.dim == 14
    assert all(act_on_form(m, phi).is_zero() for m in g.basis)


def test_orbit_matrix_rank_matches_stabilizer():
    rho = get_structure("psu3").generators["rho"]
    assert rank(orbit_matrix(rho)) == 64 - stabilizer(rho).dim


def test_invariants_are_invariant():
    s = get_structure("so3-9")
    for p in (4, 5):
        for b in invariants(s.lie, p):
            assert all(act_on_form(m, b).is_zero() for m in s.lie.basis)
    assert len(invariants(s.lie, 1)) == 0


def test_hom_map_roundtrip():
    rng = random.Random(22)
    n = 4
    assert hom_dim(n) == n * n * (n - 1) // 2
    vec = [S(rng.randrange(-3, 4)) for _ in range(hom_dim(n))]
    h = HomMap.unflatten(n, vec)
    assert h.flatten() == vec
    assert HomMap.zero(n).is_zero()


def test_act_on_hom_equivariance_of_invariant_maps():
    s = get_structure("su-odd:2")
    maps = equivariant_maps(s.lie)
    assert len(maps) == 7
    for h in maps:
        for x in s.lie.basis:
            assert act_on_hom(x, h).is_zero()


def test_structure_constants_of_rotations():
    mats = [rot(3, 3, 2), rot(3, 1, 3), rot(3, 2, 1)]
    g = LieRep.from_matrices("so3", 3, mats)
    c = g.structure_constants()
    # [L_a, L_b] = eps_abc L_c
    assert c[0][1] == [S(0), S(0), S(1)]
    assert c[1][0] == [S(0), S(0), S(-1)]
    assert c[0][2] == [S(0), S(-1), S(0)]


def test_structure_constants_reject_open_brackets():
    mats = [rot(3, 1, 2)]
    g = LieRep.from_matrices("t", 3, mats)
    assert g.structure_constants() == [[[S(0)]]]
    bad = LieRep.from_matrices("open", 3, [rot(3, 1, 2), rot(3, 2, 3)],
                               validate=False)
    with pytest.raises(ValueError):
        bad.structure_constants()


def test_cartan_three_form_of_rotations():
    eps = [[[S(0)] * 3 for _ in range(3)] for _ in range(3)]
    for a, b, c, v in ((0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
                       (1, 0, 2, -1), (2, 1, 0, -1), (0, 2, 1, -1)):
        eps[a][b][c] = S(v)
    assert cartan_three_form(eps) == parse_form("e[1,2,3]", 3)


def test_casimir_decomposition_of_rotation_triple():
    g = get_structure("so3-9").lie
    t = casimir_decompose(g, "quotient")
    assert (t.dim, t.components) == (297, 25)
    whole = casimir_decompose(g, "t-lambda2")
    sub = casimir_decompose(g, "t-g")
    assert whole.dim == 324 and sub.dim == 27
    assert whole.dim - sub.dim == t.dim
    # T (x) g = V9 (x) V3 = V7 + V9 + V11
    assert sub.parts == [(7, 1), (9, 1), (11, 1)]
    assert t.kappa == Scalar.of(-2)


def test_casimir_needs_three_dimensional_algebra():
    g = get_structure("g2").lie
    with pytest.raises(ValueError):
        casimir_decompose(g, "t-gperp")
