from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhopf.linalg import (FinSupp, Matrix, Tensor3, apply_leg, as_scalar, contract_leg, flip,
                          format_scalar, kernel_basis, rank, solve)

small = st.integers(-4, 4)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_scalars_are_exact():
    assert as_scalar("2/4") == Fraction(1, 2)
    assert format_scalar(Fraction(-3, 6)) == "-1/2"
    assert format_scalar(Fraction(4)) == "4"
    with pytest.raises(TypeError):
        as_scalar(0.5)


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(2)) == []
    (v,) = kernel_basis(Matrix.from_rows([[1, 1]]))
    assert v[0] == -v[1] != 0


def test_solve_examples():
    assert solve(Matrix.identity(2), [3, 5]) == [3, 5]
    assert solve(Matrix.from_rows([[1, 1], [2, 2]]), [1, 3]) is None
    # free variables are set to zero
    assert solve(Matrix.from_rows([[1, 1]]), [2]) == [2, 0]


def test_rank_examples():
    assert rank(Matrix.zeros(3, 3)) == 0
    assert rank(Matrix.identity(5)) == 5
    assert rank(Matrix.from_rows([[1, 2], [2, 4], [0, 1]])) == 2


def test_inverse_and_shapes():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert (m @ m.inverse()).is_identity()
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()
    with pytest.raises(ValueError):
        Matrix(2, 2, [1, 2, 3])
    t = Tensor3.from_function((2, 3, 4), lambda i, j, k: i * 12 + j * 4 + k)
    assert t[1, 2, 3] == 23
    assert Tensor3.from_nested(t.to_nested()) == t


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(rows):
    m = Matrix.from_rows(rows)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert all(x == 0 for x in m @ v)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_is_exact(rows, data):
    m = Matrix.from_rows(rows)
    b = data.draw(st.lists(small, min_size=m.rows, max_size=m.rows))
    x = solve(m, b)
    if x is not None:
        assert list(m @ x) == [Fraction(v) for v in b]
    else:
        aug = Matrix.from_rows([list(r) + [bv] for r, bv in zip(rows, b)])
        assert rank(aug) > rank(m)


def test_finsupp_algebra():
    a = FinSupp({"x": 1, "y": 2})
    b = FinSupp({"y": -2, "z": Fraction(1, 3)})
    s = a + b
    assert s.support() == ["x", "z"]
    assert (a - a) == FinSupp() and not (a - a)
    assert a.scale(0) == FinSupp()
    t = a.tensor(b)
    assert t[("x", "z")] == Fraction(1, 3)
    assert flip(t)[("z", "x")] == Fraction(1, 3)
    assert contract_leg(t, 0, lambda k: 1) == b.scale(3)
    assert apply_leg(t, 1, lambda k: FinSupp.basis(k.upper()))[("y", "Y")] == -4
    assert hash(FinSupp({"x": 1})) == hash(FinSupp.basis("x"))
