import random
from fractions import Fraction

from burnside.cyclotomic import Cyc, root_of_unity
from burnside.exactla import (
    CycMatrix,
    intersect,
    intersect_spans,
    solve_coordinates,
    span_contains,
    span_equal,
    span_le,
    span_rank,
    vec_is_zero,
)


def frac_matrix(entries):
    return CycMatrix([[Cyc.rational(Fraction(v)) for v in row] for row in entries])


def test_rref_and_rank():
    m = frac_matrix([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    reduced, pivots, rank = m.rref()
    assert pivots == [0, 1]
    assert rank == 2
    assert m.rank() == 2
    # third row of the reduced form is zero
    assert vec_is_zero(reduced.rows[2])


def test_inverse_roundtrip():
    m = frac_matrix([[2, 1, 0], [1, 1, 1], [0, 3, 1]])
    inv = m.inverse()
    prod = m.mul(inv)
    assert prod == CycMatrix.identity(3)


def test_inverse_with_roots_of_unity():
    z = root_of_unity(3)
    m = CycMatrix([[Cyc.one(), z], [z, Cyc.one()]])
    inv = m.inverse()
    assert m.mul(inv) == CycMatrix.identity(2)


def test_singular_inverse_raises():
    m = frac_matrix([[1, 2], [2, 4]])
    try:
        m.inverse()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for singular matrix")


def test_kernel_basis():
    m = frac_matrix([[1, 2, 3], [2, 4, 6]])
    basis = m.kernel_basis()
    assert len(basis) == 2
    for vec in basis:
        assert vec_is_zero(m.apply(vec))


def test_solve_consistent_and_inconsistent():
    m = frac_matrix([[1, 0], [0, 1], [1, 1]])
    x = m.solve([Cyc.rational(2), Cyc.rational(3), Cyc.rational(5)])
    assert x == [Cyc.rational(2), Cyc.rational(3)]
    assert m.solve([Cyc.rational(2), Cyc.rational(3), Cyc.rational(4)]) is None


def test_span_predicates():
    e1 = [Cyc.one(), Cyc.zero(), Cyc.zero()]
    e2 = [Cyc.zero(), Cyc.one(), Cyc.zero()]
    mix = [Cyc.rational(2), Cyc.rational(-1), Cyc.zero()]
    assert span_contains([e1, e2], mix)
    assert not span_contains([e1], e2)
    assert span_le([mix], [e1, e2])
    assert span_equal([e1, e2], [mix, e2])
    assert span_rank([e1, e2, mix]) == 2


def test_intersect_spans():
    e1 = [Cyc.one(), Cyc.zero(), Cyc.zero()]
    e2 = [Cyc.zero(), Cyc.one(), Cyc.zero()]
    e3 = [Cyc.zero(), Cyc.zero(), Cyc.one()]
    meet = intersect_spans([e1, e2], [e2, e3])
    assert len(meet) == 1
    assert span_equal(meet, [e2])
    assert intersect_spans([e1], [e3]) == []


def test_solve_coordinates():
    b1 = [Cyc.rational(1), Cyc.rational(1)]
    b2 = [Cyc.rational(0), Cyc.rational(1)]
    coeffs = solve_coordinates([b1, b2], [Cyc.rational(2), Cyc.rational(5)])
    assert coeffs == [Cyc.rational(2), Cyc.rational(3)]
    assert solve_coordinates([b1], [Cyc.rational(1), Cyc.rational(2)]) is None


def test_random_inverse_roundtrips():
    rng = random.Random(20240817)
    for _ in range(20):
        n = rng.randrange(1, 5)
        while True:
            m = frac_matrix(
                [[Fraction(rng.randrange(-4, 5)) for _ in range(n)] for _ in range(n)]
            )
            if m.rank() == n:
                break
        assert m.mul(m.inverse()) == CycMatrix.identity(n)


def test_random_kernel_vectors_annihilate():
    rng = random.Random(99)
    zeta = root_of_unity(4)
    for _ in range(10):
        rows = []
        for _ in range(3):
            rows.append(
                [Cyc.rational(rng.randrange(-2, 3)) + zeta * rng.randrange(-2, 3)
                 for _ in range(5)]
            )
        m = CycMatrix(rows)
        basis = m.kernel_basis()
        assert len(basis) == 5 - m.rank()
        for vec in basis:
            assert vec_is_zero(m.apply(vec))


def test_intersect_list_is_order_independent():
    e1 = [Cyc.one(), Cyc.zero(), Cyc.zero()]
    e2 = [Cyc.zero(), Cyc.one(), Cyc.zero()]
    e3 = [Cyc.zero(), Cyc.zero(), Cyc.one()]
    a = CycMatrix([e1, e2])
    b = CycMatrix([e2, e3])
    c = CycMatrix([e1, e2, e3])
    one_way = intersect([a, b, c])
    other_way = intersect([c, b, a])
    assert one_way.rows == other_way.rows
    assert span_equal(one_way.rows, [e2])
    assert intersect([a, a]).nrows == 2


def test_fixed_point_count_matrix_of_order_two():
    # the 3x3 matrix of marks-with-characters for the two-element group,
    # reduced by hand: rank 3 and a known inverse column
    m = frac_matrix([[2, 1, 1], [0, 1, 1], [0, 1, -1]])
    assert m.rank() == 3
    inv = m.inverse()
    half = Cyc.rational(Fraction(1, 2))
    # column for the third row of the original matrix
    col = [inv.rows[i][2] for i in range(3)]
    assert col == [Cyc.zero(), half, -half]
