import random

from edsx.linalg import (AffineSpace, Matrix, echelon_span, in_span,
                         kernel_basis, rank, solve_affine, span_rank)
from edsx.scalar import Scalar


def S(q):
    return Scalar.parse(str(q)) if isinstance(q, str) else Scalar.of(q)


def rows_of(data):
    return [[S(x) for x in row] for row in data]


def test_rank_basics():
    m = Matrix.from_rows(rows_of([[1, 2, 3], [2, 4, 6], [0, 1, 1]]))
    assert rank(m) == 2
    assert rank(m.transpose()) == 2
    assert rank(Matrix.identity(4)) == 4
    assert rank(Matrix.zero(3, 5)) == 0


def test_rank_with_radicals():
    r2 = Scalar.sqrt(2)
    m = Matrix.from_rows([[Scalar.of(1), r2], [r2, Scalar.of(2)]])
    assert rank(m) == 1
    m2 = Matrix.from_rows([[Scalar.of(1), r2], [r2, Scalar.of(3)]])
    assert rank(m2) == 2


def test_kernel_basis():
    m = Matrix.from_rows(rows_of([[1, 2, 3], [2, 4, 6]]))
    ker = kernel_basis(m)
    assert len(ker) == 2
    for v in ker:
        assert all(x.is_zero() for x in m.mul_vector(v))


def test_solve_affine_unique():
    m = Matrix.from_rows(rows_of([[2, 0], [0, 3]]))
    sol = solve_affine(m, [S(4), S(9)])
    assert not sol.is_empty
    assert sol.dim == 0
    assert sol.particular == [S(2), S(3)]


def test_solve_affine_underdetermined():
    m = Matrix.from_rows(rows_of([[1, 1, 0]]))
    sol = solve_affine(m, [S(5)])
    assert sol.dim == 2
    for v in [sol.particular] + [
            [p + b for p, b in zip(sol.particular, bas)]
            for bas in sol.basis]:
        prod = m.mul_vector(v)
        assert prod == [S(5)]


def test_solve_affine_empty():
    m = Matrix.from_rows(rows_of([[1, 1], [1, 1]]))
    sol = solve_affine(m, [S(0), S(1)])
    assert sol.is_empty
    assert sol.dim is None


def test_span_utilities():
    v1 = [S(1), S(0), S(2)]
    v2 = [S(0), S(1), S(0)]
    assert span_rank([v1, v2, [a + b for a, b in zip(v1, v2)]]) == 2
    assert in_span([v1, v2], [S(2), S(3), S(4)])
    assert not in_span([v1, v2], [S(0), S(0), S(1)])
    assert in_span([v1], [S(0), S(0), S(0)])
    ech = echelon_span([v1, v2, v1])
    assert len(ech) == 2


def test_rref_is_canonical():
    # same row space in different presentations reduces identically
    rng = random.Random(5)
    base = rows_of([[1, 0, 2, 1], [0, 1, 1, 0]])
    for _ in range(25):
        mixed = [list(base[0]), list(base[1])]
        c = S(rng.randrange(-4, 5))
        mixed[1] = [x + c * y for x, y in zip(mixed[1], mixed[0])]
        if rng.random() < 0.5:
            mixed.reverse()
        mixed.append([S(0)] * 4)
        got = echelon_span(mixed)
        assert got == echelon_span(base)


def test_random_rank_transpose_agreement():
    rng = random.Random(31)
    for _ in range(60):
        nr = rng.randrange(1, 6)
        nc = rng.randrange(1, 6)
        data = [[S(rng.randrange(-3, 4)) for _ in range(nc)]
                for _ in range(nr)]
        m = Matrix.from_rows(data)
        r = rank(m)
        assert r == rank(m.transpose())
        assert r <= min(nr, nc)
        assert len(kernel_basis(m)) == nc - r


def test_affine_space_reports_dim():
    sp = AffineSpace(3, [S(0)] * 3, [[S(1), S(0), S(0)]])
    assert not sp.is_empty
    assert sp.dim == 1
    empty = AffineSpace(3, None, [])
    assert empty.is_empty
