"""Normal forms and exact solvers: frozen examples plus lattice invariants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projcat.exactla import (
    IntMatrix,
    fields,
    hermite,
    int_kernel,
    int_solve,
    lattice_rank,
    smith,
)
from projcat.rings import GF, QQ

M = IntMatrix.from_rows


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
).map(M)


def random_unimodular(rng, n):
    u = IntMatrix.identity(n)
    ops = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.randint(-3, 3)
        for row in ops:
            row[j] += q * row[i]
    return u @ M(ops)


class TestHermite:
    def test_one_by_one(self):
        form = hermite(M([[2]]))
        assert form.h == M([[2]])
        assert form.rank == 1

    def test_zero_matrix(self):
        form = hermite(IntMatrix.zero(2, 2))
        assert form.h.is_zero()
        assert form.rank == 0

    def test_gcd_collapse(self):
        # column lattice of [[4,6],[0,0]] is {(2k, 0)}
        form = hermite(M([[4, 6], [0, 0]]))
        assert form.rank == 1
        assert form.h.column(0) == (2, 0)
        assert form.h.column(1) == (0, 0)

    def test_identity_is_fixed(self):
        form = hermite(IntMatrix.identity(3))
        assert form.h == IntMatrix.identity(3)

    def test_pivot_layout(self):
        form = hermite(M([[2, 4, 1], [6, 8, 0], [3, 3, 3]]))
        h, pivots = form.h, form.pivots
        assert list(pivots) == sorted(pivots)
        for k, i in enumerate(pivots):
            assert h[i, k] > 0
            for c in range(k):
                assert h[i, c] == 0
            for c in range(k + 1, h.cols):
                assert 0 <= h[i, c] < h[i, k]

    @settings(max_examples=120, deadline=None)
    @given(small_matrices)
    def test_witness_and_idempotence(self, a):
        form = hermite(a)
        assert a @ form.u == form.h
        assert abs(form.u.det()) == 1
        again = hermite(form.h)
        assert again.h == form.h

    @settings(max_examples=60, deadline=None)
    @given(small_matrices, st.integers(0, 2**32 - 1))
    def test_canonical_for_the_lattice(self, a, seed):
        import random

        v = random_unimodular(random.Random(seed), a.cols)
        assert hermite(a @ v).h == hermite(a).h

    def test_small_combination_oracle(self):
        # enumerate small integer combinations of the columns of [[4,6],[0,0]]
        points = {
            (4 * x + 6 * y, 0) for x in range(-8, 9) for y in range(-8, 9)
        }
        hits = sorted(p[0] for p in points if 0 <= p[0] <= 12)
        assert hits == [0, 2, 4, 6, 8, 10, 12]


class TestSmith:
    def test_already_diagonal(self):
        assert smith(M([[2, 0], [0, 0]])).invariant_factors == (2,)

    def test_identity(self):
        assert smith(IntMatrix.identity(2)).invariant_factors == (1, 1)

    def test_two_by_two(self):
        # det = -8 and entry gcd 2 force the chain (2, 4)
        assert smith(M([[2, 4], [6, 8]])).invariant_factors == (2, 4)

    @settings(max_examples=120, deadline=None)
    @given(small_matrices)
    def test_witness_and_chain(self, a):
        form = smith(a)
        assert form.l @ a @ form.r == form.d
        assert abs(form.l.det()) == 1
        assert abs(form.r.det()) == 1
        factors = form.invariant_factors
        assert all(f > 0 for f in factors)
        for x, y in zip(factors, factors[1:]):
            assert y % x == 0

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3)
    )
    def test_product_of_factors_is_det(self, rows):
        a = M(rows)
        d = abs(a.det())
        factors = smith(a).invariant_factors
        if d == 0:
            assert len(factors) < 3
        else:
            prod = 1
            for f in factors:
                prod *= f
            assert prod == d


class TestIntSolve:
    def test_parity_obstruction(self):
        assert int_solve(M([[2]]), [3]) is None

    def test_divisible(self):
        assert int_solve(M([[2]]), [4]) == [2]

    def test_inconsistent_row(self):
        assert int_solve(M([[1], [0]]), [1, 1]) is None

    @settings(max_examples=80, deadline=None)
    @given(small_matrices, st.data())
    def test_recovers_known_solutions(self, a, data):
        x = [data.draw(st.integers(-4, 4)) for _ in range(a.cols)]
        b = [sum(a[i, j] * x[j] for j in range(a.cols)) for i in range(a.rows)]
        y = int_solve(a, b)
        assert y is not None
        assert [sum(a[i, j] * y[j] for j in range(a.cols)) for i in range(a.rows)] == b

    @settings(max_examples=80, deadline=None)
    @given(small_matrices)
    def test_kernel(self, a):
        k = int_kernel(a)
        assert (a @ k).is_zero()
        assert lattice_rank(k) == k.cols
        assert lattice_rank(a) + k.cols == a.cols


class TestFields:
    def test_rank_identity_gf2(self):
        k = GF(2)
        assert fields.rank(k, fields.identity(k, 3)) == 3

    def test_rank_nullity(self):
        k = QQ
        a = fields.make([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
        assert fields.rank(k, a) == 1
        ker = fields.kernel(k, a)
        assert fields.shape(ker) == (2, 1)
        assert fields.is_zero(k, fields.mul(k, a, ker))

    def test_zero_by_n_shapes(self):
        k = GF(2)
        a = fields.zero(k, 0, 3)
        assert fields.shape(fields.kernel(k, a)) == (3, 3)
        b = fields.zero(k, 3, 0)
        assert fields.shape(fields.mul(k, b, fields.zero(k, 0, 2))) == (3, 2)

    def test_solve_none_when_inconsistent(self):
        k = GF(3)
        a = fields.make([[1, 2], [2, 4]])
        b = fields.make([[1], [0]])
        assert fields.solve(k, a, b) is None

    def test_solve_and_inverse(self):
        k = GF(5)
        a = fields.make([[1, 2], [3, 4]])
        inv = fields.inverse(k, a)
        assert fields.mul(k, a, inv) == fields.identity(k, 2)

    @settings(max_examples=80, deadline=None)
    @given(
        st.sampled_from([2, 3, 5]),
        st.lists(st.lists(st.integers(0, 6), min_size=3, max_size=3), min_size=2, max_size=4),
    )
    def test_rank_plus_nullity(self, p, rows):
        k = GF(p)
        a = fields.make([[x % p for x in row] for row in rows])
        ker = fields.kernel(k, a)
        assert fields.rank(k, a) + fields.shape(ker)[1] == 3
        if fields.shape(ker)[1]:
            assert fields.is_zero(k, fields.mul(k, a, ker))

    def test_kernel_is_canonical(self):
        k = QQ
        a = fields.make([[Fraction(1), Fraction(1), Fraction(1)]])
        ker = fields.kernel(k, a)
        # echelon-reduced basis rows with leftmost pivots
        rows = fields.transpose(ker)
        red, pivots = fields.rref(k, rows)
        assert red == rows
        assert len(pivots) == 2


@pytest.mark.parametrize("rows", [0, 2])
def test_degenerate_shapes(rows):
    a = IntMatrix.zero(rows, 0)
    form = hermite(a)
    assert form.rank == 0
    assert int_kernel(a).cols == 0
