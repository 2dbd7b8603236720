import random
from fractions import Fraction

from burnside.chars import (
    ClassFunction,
    LinearCharacter,
    character_table_json,
    character_table_text,
    induce,
    inflate,
    inner,
    is_irreducible,
    linear_characters,
    restrict,
    trivial_character,
)
from burnside.cyclotomic import Cyc
from burnside.groups import (
    automorphisms,
    build_cyclic,
    group_from_maps,
    parse_group_spec,
)


def test_linear_character_counts():
    assert len(linear_characters(parse_group_spec("C2"))) == 2
    assert len(linear_characters(parse_group_spec("C9xC3"))) == 27
    # nonabelian groups only see their abelianization
    assert len(linear_characters(parse_group_spec("D8"))) == 4
    assert len(linear_characters(parse_group_spec("Q8"))) == 4
    assert len(linear_characters(parse_group_spec("Hei3"))) == 9


def test_trivial_character_comes_first_and_all_validate():
    for spec in ("C4", "C4xC2", "D8", "Hei3"):
        G = parse_group_spec(spec)
        chars = linear_characters(G)
        assert chars[0].is_trivial()
        for chi in chars:
            chi.validate()


def test_linear_characters_are_orthonormal():
    for spec in ("C4xC2", "D8"):
        G = parse_group_spec(spec)
        chars = linear_characters(G)
        for i, a in enumerate(chars):
            fa = a.as_class_function()
            for j, b in enumerate(chars):
                fb = b.as_class_function()
                expect = Cyc.one() if i == j else Cyc.zero()
                assert inner(fa, fb) == expect


def test_induce_trivial_from_whole_group():
    G = parse_group_spec("C4xC2")
    whole = frozenset(range(G.order))
    S, _ = G.subgroup_group(whole)
    cf = induce(G, whole, trivial_character(S))
    assert cf == trivial_character(G).as_class_function()


def test_induce_from_trivial_subgroup_is_regular():
    G = build_cyclic(2)
    S, _ = G.subgroup_group(frozenset([0]))
    reg = induce(G, frozenset([0]), trivial_character(S))
    assert reg.values == (Cyc.rational(2), Cyc.zero())


def test_regular_character_restricts_by_evaluation():
    G = build_cyclic(4)
    S, _ = G.subgroup_group(frozenset([0]))
    reg = induce(G, frozenset([0]), trivial_character(S))
    assert reg.values == (Cyc.rational(4), Cyc.zero(), Cyc.zero(), Cyc.zero())
    x2 = G.power(1, 2)
    res = restrict(reg, G, frozenset([0, x2]))
    assert res.values == (Cyc.rational(4), Cyc.zero())


def test_induced_degree_is_the_index():
    G = parse_group_spec("D8")
    for H in G.subgroups():
        S, _ = G.subgroup_group(H)
        cf = induce(G, H, trivial_character(S))
        assert cf.degree() == Cyc.rational(Fraction(G.order, len(H)))


def test_restrict_to_whole_group_is_identity():
    G = parse_group_spec("Q8")
    chi = linear_characters(G)[1].as_class_function()
    res = restrict(chi, G, frozenset(range(G.order)))
    S, embed = G.subgroup_group(frozenset(range(G.order)))
    # same values read off through the subgroup's own class list
    for cls in S.conjugacy_classes():
        assert res.value_at(cls[0]) == chi.value_at(embed[cls[0]])


def test_inflate_is_trivial_on_the_kernel():
    G = parse_group_spec("C4xC2")
    N = G.frattini_subgroup()
    Q, proj = G.quotient(N)
    for chi in linear_characters(Q):
        lifted = inflate(chi.as_class_function(), G, proj)
        for n in N:
            assert lifted.value_at(n) == lifted.value_at(0)


def test_frobenius_reciprocity_sampled():
    rng = random.Random(4271)
    for spec in ("C4xC2", "D8", "Q8"):
        G = parse_group_spec(spec)
        subs = G.subgroups()
        for _ in range(6):
            H = subs[rng.randrange(len(subs))]
            S, _ = G.subgroup_group(H)
            phis = linear_characters(S)
            phi = phis[rng.randrange(len(phis))]
            chis = linear_characters(G)
            chi = chis[rng.randrange(len(chis))].as_class_function()
            lhs = inner(induce(G, H, phi), chi)
            rhs = inner(phi.as_class_function(), restrict(chi, G, H))
            assert lhs == rhs


def test_induction_in_stages_matches_direct():
    for spec in ("C4xC2", "D8"):
        G = parse_group_spec(spec)
        for L in G.subgroups():
            SL, embed_L = G.subgroup_group(L)
            for K_in_L in SL.subgroups():
                K_in_G = frozenset(embed_L[k] for k in K_in_L)
                SKL, embed_KL = SL.subgroup_group(K_in_L)
                SKG, embed_KG = G.subgroup_group(K_in_G)
                for psi in linear_characters(SKL):
                    fingerprint = {
                        embed_L[embed_KL[s]]: psi.values[s]
                        for s in range(SKL.order)
                    }
                    direct_psi = None
                    for cand in linear_characters(SKG):
                        if all(
                            cand.values[s] == fingerprint[embed_KG[s]]
                            for s in range(SKG.order)
                        ):
                            direct_psi = cand
                            break
                    assert direct_psi is not None
                    staged = induce(G, L, induce(SL, K_in_L, psi))
                    direct = induce(G, K_in_G, direct_psi)
                    assert staged == direct


def test_borel_induction_gives_a_degree_four_irreducible():
    G = parse_group_spec("C3xC3")
    gx, gy = G.generator_ids
    maps = automorphisms(G)
    gamma_group, ordered = group_from_maps([m.images for m in maps], label="Aut(C3xC3)")
    assert gamma_group.order == 48
    x_line = G.closure([gx])
    borel = frozenset(
        i for i, m in enumerate(ordered) if m[gx] in x_line
    )
    assert len(borel) == 12
    S, embed = gamma_group.subgroup_group(borel)
    to_sub = {g: i for i, g in enumerate(embed)}
    beta_id = next(
        i for i, m in enumerate(ordered)
        if m[gx] == G.power(gx, 2) and m[gy] == gy
    )
    gamma_id = next(
        i for i, m in enumerate(ordered)
        if m[gx] == gx and m[gy] == G.power(gy, 2)
    )
    minus_one = Cyc.rational(-1)
    phi1 = None
    for chi in linear_characters(S):
        if chi.values[to_sub[beta_id]] == minus_one and chi.values[to_sub[gamma_id]] == Cyc.one():
            phi1 = chi
            break
    assert phi1 is not None
    induced = induce(gamma_group, borel, phi1)
    assert induced.degree() == Cyc.rational(4)
    assert is_irreducible(induced)


def test_character_table_output():
    G = parse_group_spec("C2")
    rows = [("chi%d" % i, c.as_class_function()) for i, c in enumerate(linear_characters(G))]
    text = character_table_text(G, rows)
    assert "chi0" in text and "chi1" in text
    data = character_table_json(G, rows)
    assert data["group"] == "C2"
    assert [c["size"] for c in data["classes"]] == [1, 1]
    assert len(data["rows"]) == 2
