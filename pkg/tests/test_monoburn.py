import random
from fractions import Fraction

from burnside.cyclotomic import Cyc
from burnside.groups import build_cyclic, parse_group_spec
from burnside.monoburn import (
    BElem,
    idempotent_basis,
    lin,
    lin_kernel_basis,
    mackey_product,
    npairs,
    ring_tables,
    species,
    standard_basis,
)


def test_basis_counts():
    assert len(standard_basis(parse_group_spec("C2"))) == 3
    assert len(npairs(parse_group_spec("C2"))) == 3
    assert len(standard_basis(parse_group_spec("C9xC3"))) == 76
    # orbit counts worked out by hand from the subgroup classes
    assert len(standard_basis(parse_group_spec("D8"))) == 20
    assert len(standard_basis(parse_group_spec("Q8"))) == 16
    # 1 + 3 + 12 + 20 + 9 over the subgroup classes
    assert len(standard_basis(parse_group_spec("Hei3"))) == 45


def test_species_matrix_of_order_two():
    G = parse_group_spec("C2")
    t = ring_tables(G)
    m = t.species_matrix()
    one, two = Cyc.one(), Cyc.rational(2)
    minus = Cyc.rational(-1)
    zero = Cyc.zero()
    assert m.rows == [
        [two, one, one],
        [zero, one, one],
        [zero, one, minus],
    ]


def test_idempotent_of_the_generator_pair():
    G = parse_group_spec("C2")
    t = ring_tables(G)
    idems = t.idempotents()
    target = t.npair_of(frozenset(range(2)), 1)
    e = idems[target]
    half = Cyc.rational(Fraction(1, 2))
    assert e.coeffs == (Cyc.zero(), half, -half)


def test_trivial_group_idempotent():
    G = build_cyclic(1)
    idems, _, _ = idempotent_basis(G)
    assert len(idems) == 1
    assert idems[0].coeffs == (Cyc.one(),)


def test_abelian_closed_form_matches_matrix_inversion():
    for spec in ("C4", "C2xC2", "C4xC2", "C9"):
        G = parse_group_spec(spec)
        t = ring_tables(G)
        idems = t.idempotents()
        inv = t.species_matrix().inverse()
        n = len(t.pairs)
        for j, e in enumerate(idems):
            column = tuple(inv.rows[i][j] for i in range(n))
            assert e.coeffs == column


def test_species_delta_property():
    for spec in ("C4xC2", "D8", "Q8"):
        G = parse_group_spec(spec)
        t = ring_tables(G)
        idems = t.idempotents()
        for i, np in enumerate(t.npairs):
            for j, e in enumerate(idems):
                expect = Cyc.one() if i == j else Cyc.zero()
                assert t.species_of(np, e) == expect


def test_identity_element_acts_trivially():
    G = parse_group_spec("D8")
    t = ring_tables(G)
    one = t.one()
    for i in range(len(t.pairs)):
        b = t.basis_element(i)
        assert mackey_product(one, b) == b
        assert mackey_product(b, one) == b


def test_point_squared_in_order_two():
    G = parse_group_spec("C2")
    t = ring_tables(G)
    point = t.basis_element(0)  # the pair with trivial subgroup
    assert t.pairs[0].subgroup == frozenset([0])
    sq = mackey_product(point, point)
    assert sq.coeffs == (Cyc.rational(2), Cyc.zero(), Cyc.zero())


def test_idempotent_laws_small():
    for spec in ("C4", "D8"):
        G = parse_group_spec(spec)
        t = ring_tables(G)
        idems = t.idempotents()
        for i, e in enumerate(idems):
            assert mackey_product(e, e) == e
            for j in range(i + 1, len(idems)):
                assert mackey_product(e, idems[j]).is_zero()


def test_partition_of_unity():
    for spec in ("C4xC2", "D8", "Q8"):
        G = parse_group_spec(spec)
        t = ring_tables(G)
        idems = t.idempotents()
        total = t.zero()
        for e in idems:
            total = total + e
        assert total == t.one()


def test_species_are_ring_homomorphisms_sampled():
    rng = random.Random(52389)
    for spec in ("C4xC2", "D8"):
        G = parse_group_spec(spec)
        t = ring_tables(G)
        n = len(t.pairs)
        for _ in range(8):
            a = t.basis_element(rng.randrange(n)).scale(rng.randrange(1, 4))
            b = t.basis_element(rng.randrange(n)) + t.basis_element(rng.randrange(n))
            ab = mackey_product(a, b)
            for np in t.npairs:
                lhs = t.species_of(np, ab)
                rhs = t.species_of(np, a) * t.species_of(np, b)
                assert lhs == rhs


def test_lin_on_whole_group_pairs():
    G = parse_group_spec("D8")
    t = ring_tables(G)
    whole = frozenset(range(G.order))
    for i, mp in enumerate(t.pairs):
        if mp.subgroup != whole:
            continue
        cf = lin(G, t.basis_element(i))
        assert cf == mp.char.as_class_function()


def test_lin_of_idempotents_is_class_indicator_or_zero():
    for spec in ("C4xC2", "D8"):
        G = parse_group_spec(spec)
        t = ring_tables(G)
        idems = t.idempotents()
        for np, e in zip(t.npairs, idems):
            cf = lin(G, e)
            if np.is_cyclic_pair:
                cls_idx = G.class_index_of(np.element)
                for c, v in enumerate(cf.values):
                    expect = Cyc.one() if c == cls_idx else Cyc.zero()
                    assert v == expect
            else:
                assert all(not v for v in cf.values)


def test_lin_kernel_dimensions():
    assert len(lin_kernel_basis(build_cyclic(1))) == 0
    assert len(lin_kernel_basis(parse_group_spec("C2"))) == 1
    assert len(lin_kernel_basis(parse_group_spec("C3"))) == 1
    assert len(lin_kernel_basis(parse_group_spec("C2xC2"))) == 7
    assert len(lin_kernel_basis(parse_group_spec("C3xC3"))) == 13


def test_lin_kernel_cross_check_with_matrix():
    for spec in ("C4xC2", "D8"):
        G = parse_group_spec(spec)
        t = ring_tables(G)
        L = t.lin_matrix()
        n_classes = len(G.conjugacy_classes())
        assert L.rank() == n_classes
        kernel_dim = len(t.pairs) - n_classes
        assert len(t.lin_kernel_pairs()) == kernel_dim


def test_basis_round_trip():
    rng = random.Random(777)
    for spec in ("C4xC2", "D8"):
        G = parse_group_spec(spec)
        t = ring_tables(G)
        n = len(t.pairs)
        for _ in range(5):
            coeffs = [Cyc.rational(rng.randrange(-3, 4)) for _ in range(n)]
            x = BElem(G, "standard", coeffs)
            back = t.from_idempotent(t.to_idempotent(x))
            assert back == x


def test_species_value_interface():
    G = parse_group_spec("C2")
    t = ring_tables(G)
    np_top = t.npairs[2]
    assert np_top.element == 1
    mp_sgn = t.pairs[2]
    assert species(G, np_top, mp_sgn) == Cyc.rational(-1)
    np_triv = t.npairs[0]
    assert species(G, np_triv, t.pairs[0]) == Cyc.rational(2)
