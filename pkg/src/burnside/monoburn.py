"""The monomial Burnside ring of a finite group with C^x coefficients.

The standard basis is indexed by conjugacy-orbit representatives of
pairs (K, psi) with K a subgroup and psi a linear character of K.  The
same count of pairs (H, h), with h taken modulo H' and conjugacy,
indexes the species and hence the primitive idempotents.  Products use
the double-coset formula; idempotents come from the species matrix for
nonabelian groups and from an interval Moebius sum for abelian ones,
and the two routes are cross-checked in the test suite.
"""

from __future__ import annotations

from fractions import Fraction

from .chars import ClassFunction, LinearCharacter, induce, linear_characters
from .cyclotomic import Cyc, cyc_sum
from .exactla import CycMatrix
from .groups import FiniteGroup, GroupError


class MonomialPair:
    """Orbit representative [K, psi] of a subgroup with a linear character."""

    __slots__ = ("subgroup", "char", "key", "canonical")

    def __init__(self, subgroup: frozenset, char: LinearCharacter, key, canonical: bool):
        self.subgroup = subgroup
        self.char = char
        self.key = key
        self.canonical = canonical

    def describe(self, G: FiniteGroup) -> dict:
        elems = sorted(self.subgroup)
        return {
            "subgroup": [G.names[g] for g in elems],
            "char": [self.char.values[i].serialize() for i in range(len(elems))],
        }

    def __repr__(self):
        return "MonomialPair(order %d)" % len(self.subgroup)


class NPair:
    """Orbit representative (H, h) indexing a species and an idempotent."""

    __slots__ = ("subgroup", "element", "key", "canonical", "is_cyclic_pair")

    def __init__(self, subgroup: frozenset, element: int, key, canonical: bool,
                 is_cyclic_pair: bool):
        self.subgroup = subgroup
        self.element = element
        self.key = key
        self.canonical = canonical
        self.is_cyclic_pair = is_cyclic_pair

    def describe(self, G: FiniteGroup) -> dict:
        return {
            "subgroup": [G.names[g] for g in sorted(self.subgroup)],
            "element": G.names[self.element],
            "cyclic": self.is_cyclic_pair,
        }

    def __repr__(self):
        return "NPair(order %d, element %d)" % (len(self.subgroup), self.element)


class BElem:
    """A ring element: coefficients over one of the two bases."""

    __slots__ = ("group", "basis", "coeffs")

    def __init__(self, group: FiniteGroup, basis: str, coeffs):
        if basis not in ("standard", "idempotent"):
            raise GroupError("unknown basis tag %r" % basis)
        self.group = group
        self.basis = basis
        self.coeffs = tuple(c if isinstance(c, Cyc) else Cyc.rational(c) for c in coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def _match(self, other: "BElem") -> None:
        if self.group is not other.group or self.basis != other.basis:
            raise GroupError("elements live in different modules")

    def __add__(self, other: "BElem") -> "BElem":
        self._match(other)
        return BElem(self.group, self.basis,
                     [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BElem") -> "BElem":
        self._match(other)
        return BElem(self.group, self.basis,
                     [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "BElem":
        if not isinstance(c, Cyc):
            c = Cyc.rational(c)
        return BElem(self.group, self.basis, [c * v for v in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, BElem):
            return NotImplemented
        return (self.group is other.group and self.basis == other.basis
                and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self):
        return "BElem(%s, %s, support %d)" % (
            self.group.label, self.basis, len(self.support()))


def _char_key(values) -> tuple:
    return tuple(v.sort_key() for v in values)


class RingTables:
    """Per-group bases, species data, idempotents and product cache."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.pairs: list[MonomialPair] = []
        self.pair_index: dict = {}
        self.subgroup_slices: dict = {}
        self.npairs: list[NPair] = []
        self.npair_index: dict = {}
        self._species_matrix = None
        self._idempotents = None
        self._to_standard = None
        self._prod_cache: dict = {}
        self._lin_rows = None
        self._build_pairs()
        self._build_npairs()
        if len(self.pairs) != len(self.npairs):
            raise GroupError("pair and species counts disagree")

    # -- basis enumeration --------------------------------------------------

    def _build_pairs(self) -> None:
        G = self.G
        entries = []
        for K in G.subgroups():
            S, embed = G.subgroup_group(K)
            for pos, psi in enumerate(linear_characters(S)):
                key = self._pair_orbit_key(K, psi.values, embed)
                own = (len(K), tuple(embed), _char_key(psi.values))
                if key == own:
                    # sort by enumeration position so the trivial character
                    # leads each subgroup's block; identify orbits by value key
                    entries.append(((len(K), tuple(embed), pos), key,
                                    MonomialPair(K, psi, key, True)))
        entries.sort(key=lambda t: t[0])
        for i, (_, key, mp) in enumerate(entries):
            self.pairs.append(mp)
            self.pair_index[key] = i
        start = {}
        for i, mp in enumerate(self.pairs):
            start.setdefault(mp.subgroup, []).append(i)
        self.subgroup_slices = start

    def _pair_orbit_key(self, K: frozenset, values, embed) -> tuple:
        """Lexicographic minimum key over the conjugation orbit of (K, psi)."""
        G = self.G
        own = (len(K), tuple(embed), _char_key(values))
        if G.is_abelian():
            return own
        pos = {g: i for i, g in enumerate(embed)}
        best = own
        for g in range(G.order):
            gi = G.inv_of(g)
            K2 = G.conjugate_subgroup(g, K)
            elems2 = sorted(K2)
            vals2 = tuple(values[pos[G.conj(gi, u)]] for u in elems2)
            cand = (len(K2), tuple(elems2), _char_key(vals2))
            if cand < best:
                best = cand
        return best

    def _build_npairs(self) -> None:
        G = self.G
        entries = []
        for H in G.subgroups():
            S, embed = G.subgroup_group(H)
            derived = frozenset(embed[d] for d in S.derived_subgroup())
            seen = set()
            for h in sorted(H):
                coset = frozenset(G.mul(h, d) for d in derived)
                rep = min(coset)
                if rep in seen:
                    continue
                seen.add(rep)
                key = self._npair_orbit_key(H, rep)
                own = (len(H), tuple(sorted(H)), rep)
                if key == own:
                    cyclic = G.element_order(rep) == len(H)
                    entries.append((key, NPair(H, rep, key, True, cyclic)))
        entries.sort(key=lambda t: t[0])
        for i, (key, np) in enumerate(entries):
            self.npairs.append(np)
            self.npair_index[key] = i

    def _npair_orbit_key(self, H: frozenset, h: int) -> tuple:
        G = self.G
        own = (len(H), tuple(sorted(H)), h)
        if G.is_abelian():
            return own
        best = own
        for g in range(G.order):
            H2 = G.conjugate_subgroup(g, H)
            S2, embed2 = G.subgroup_group(H2)
            derived2 = frozenset(embed2[d] for d in S2.derived_subgroup())
            h2 = G.conj(g, h)
            rep2 = min(G.mul(h2, d) for d in derived2)
            cand = (len(H2), tuple(sorted(H2)), rep2)
            if cand < best:
                best = cand
        return best

    # -- lookups -------------------------------------------------------------

    def pair_of(self, K: frozenset, values) -> int:
        """Index of the orbit of (K, char-with-these-values)."""
        elems = sorted(K)
        key = self._pair_orbit_key(K, tuple(values), elems)
        idx = self.pair_index.get(key)
        if idx is None:
            raise GroupError("no such monomial pair")
        return idx

    def npair_of(self, H: frozenset, h: int) -> int:
        S, embed = self.G.subgroup_group(H)
        derived = frozenset(embed[d] for d in S.derived_subgroup())
        rep = min(self.G.mul(h, d) for d in derived)
        key = self._npair_orbit_key(H, rep)
        idx = self.npair_index.get(key)
        if idx is None:
            raise GroupError("no such species pair")
        return idx

    def basis_element(self, i: int) -> BElem:
        n = len(self.pairs)
        coeffs = [Cyc.zero()] * n
        coeffs[i] = Cyc.one()
        return BElem(self.G, "standard", coeffs)

    def zero(self, basis: str = "standard") -> BElem:
        return BElem(self.G, basis, [Cyc.zero()] * len(self.pairs))

    def one(self) -> BElem:
        whole = frozenset(range(self.G.order))
        idx = self.pair_of(whole, [Cyc.one()] * self.G.order)
        return self.basis_element(idx)

    # -- species -------------------------------------------------------------

    def species_value(self, np: NPair, mp: MonomialPair) -> Cyc:
        """Sum of (x psi)(h) over cosets xK whose conjugate covers H."""
        G = self.G
        H, h = np.subgroup, np.element
        K, psi = mp.subgroup, mp.char
        if G.is_abelian():
            if not H <= K:
                return Cyc.zero()
            pos = {g: i for i, g in enumerate(sorted(K))}
            return Cyc.rational(G.order // len(K)) * psi.values[pos[h]]
        pos = {g: i for i, g in enumerate(sorted(K))}
        visited = [False] * G.order
        terms = []
        for x in range(G.order):
            if visited[x]:
                continue
            for k in K:
                visited[G.mul(x, k)] = True
            xi = G.inv_of(x)
            if all(G.conj(xi, u) in K for u in H):
                terms.append(psi.values[pos[G.conj(xi, h)]])
        return cyc_sum(terms)

    def species_matrix(self) -> CycMatrix:
        if self._species_matrix is None:
            rows = []
            for np in self.npairs:
                rows.append([self.species_value(np, mp) for mp in self.pairs])
            self._species_matrix = CycMatrix(rows)
        return self._species_matrix

    def species_of(self, np: NPair, x: BElem) -> Cyc:
        if x.basis == "idempotent":
            i = self.npairs.index(np)
            return x.coeffs[i]
        return cyc_sum(
            c * self.species_value(np, self.pairs[j])
            for j, c in enumerate(x.coeffs) if c
        )

    # -- idempotents ----------------------------------------------------------

    def idempotents(self) -> list[BElem]:
        if self._idempotents is None:
            if self.G.is_abelian():
                self._idempotents = [self._abelian_idempotent(np) for np in self.npairs]
            else:
                M = self.species_matrix()
                inv = M.inverse()
                n = len(self.pairs)
                self._idempotents = [
                    BElem(self.G, "standard", [inv.rows[i][j] for i in range(n)])
                    for j in range(n)
                ]
        return self._idempotents

    def _abelian_idempotent(self, np: NPair) -> BElem:
        """Interval Moebius formula, abelian case.

        e_{H,h} = (1/|G|) * sum over <h> <= K <= H of mu(K,H) * sum over
        characters psi of K of psi(h^-1) [K, psi].  The species-delta
        property of the result is checked in the tests against the
        matrix route.
        """
        G = self.G
        H, h = np.subgroup, np.element
        gen = G.closure([h])
        n = len(self.pairs)
        coeffs = [Cyc.zero()] * n
        scale = Fraction(1, G.order)
        for K in G.subgroups():
            if not (gen <= K and K <= H):
                continue
            mu = G.mobius(K, H)
            if mu == 0:
                continue
            factor = Cyc.rational(scale * mu)
            S, embed = G.subgroup_group(K)
            pos = {g: i for i, g in enumerate(embed)}
            size = len(K)
            elems = tuple(embed)
            for psi in linear_characters(S):
                idx = self.pair_index[(size, elems, _char_key(psi.values))]
                coeffs[idx] = coeffs[idx] + factor * psi.values[pos[h]].conjugate()
        return BElem(self.G, "standard", coeffs)

    def to_standard_matrix(self) -> CycMatrix:
        """Columns are the idempotents' standard coordinates."""
        if self._to_standard is None:
            idems = self.idempotents()
            n = len(self.pairs)
            self._to_standard = CycMatrix(
                [[idems[j].coeffs[i] for j in range(n)] for i in range(n)]
            )
        return self._to_standard

    def to_idempotent(self, x: BElem) -> BElem:
        if x.basis == "idempotent":
            return x
        M = self.species_matrix()
        return BElem(self.G, "idempotent", M.apply(list(x.coeffs)))

    def from_idempotent(self, x: BElem) -> BElem:
        if x.basis == "standard":
            return x
        return BElem(self.G, "standard",
                     self.to_standard_matrix().apply(list(x.coeffs)))

    # -- multiplication --------------------------------------------------------

    def _basis_product(self, i: int, j: int) -> dict[int, int]:
        """[K_i, psi_i] * [K_j, psi_j] as index -> integer multiplicity."""
        cached = self._prod_cache.get((i, j))
        if cached is not None:
            return cached
        G = self.G
        mp_a, mp_b = self.pairs[i], self.pairs[j]
        H, phi = mp_a.subgroup, mp_a.char
        K, psi = mp_b.subgroup, mp_b.char
        posH = {g: t for t, g in enumerate(sorted(H))}
        posK = {g: t for t, g in enumerate(sorted(K))}
        out: dict[int, int] = {}
        visited = [False] * G.order
        for x in range(G.order):
            if visited[x]:
                continue
            for u in H:
                xu = G.mul(u, x)
                for k in K:
                    visited[G.mul(xu, k)] = True
            xi = G.inv_of(x)
            xK = G.conjugate_subgroup(x, K)
            L = H & xK
            elems = sorted(L)
            values = tuple(
                phi.values[posH[u]] * psi.values[posK[G.conj(xi, u)]]
                for u in elems
            )
            idx = self.pair_index[self._pair_orbit_key(L, values, elems)]
            out[idx] = out.get(idx, 0) + 1
        self._prod_cache[(i, j)] = out
        return out

    def mackey_product(self, a: BElem, b: BElem) -> BElem:
        if a.group is not self.G or b.group is not self.G:
            raise GroupError("elements belong to a different group")
        if a.basis != "standard" or b.basis != "standard":
            raise GroupError("products need standard-basis coordinates")
        n = len(self.pairs)
        acc: dict[int, Cyc] = {}
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            for j, cb in enumerate(b.coeffs):
                if not cb:
                    continue
                cab = ca * cb
                for idx, mult in self._basis_product(i, j).items():
                    add = cab if mult == 1 else cab * Cyc.rational(mult)
                    prev = acc.get(idx)
                    acc[idx] = add if prev is None else prev + add
        coeffs = [Cyc.zero()] * n
        for idx, val in acc.items():
            coeffs[idx] = val
        return BElem(self.G, "standard", coeffs)

    # -- linearization -----------------------------------------------------------

    def lin_rows(self) -> list[ClassFunction]:
        if self._lin_rows is None:
            self._lin_rows = [
                induce(self.G, mp.subgroup, mp.char) for mp in self.pairs
            ]
        return self._lin_rows

    def lin(self, x: BElem) -> ClassFunction:
        if x.basis == "idempotent":
            x = self.from_idempotent(x)
        rows = self.lin_rows()
        classes = self.G.conjugacy_classes()
        values = [Cyc.zero()] * len(classes)
        for j, c in enumerate(x.coeffs):
            if not c:
                continue
            row = rows[j]
            values = [v + c * rv for v, rv in zip(values, row.values)]
        return ClassFunction(self.G, values)

    def lin_matrix(self) -> CycMatrix:
        rows = self.lin_rows()
        classes = range(len(self.G.conjugacy_classes()))
        return CycMatrix([[rows[j].values[c] for j in range(len(self.pairs))]
                          for c in classes])

    def lin_kernel_pairs(self) -> list[NPair]:
        return [np for np in self.npairs if not np.is_cyclic_pair]


def ring_tables(G: FiniteGroup) -> RingTables:
    tables = G._cache.get("ring_tables")
    if tables is None:
        tables = RingTables(G)
        G._cache["ring_tables"] = tables
    return tables


def standard_basis(G: FiniteGroup) -> list[MonomialPair]:
    return ring_tables(G).pairs


def npairs(G: FiniteGroup) -> list[NPair]:
    return ring_tables(G).npairs


def species(G: FiniteGroup, np: NPair, mp: MonomialPair) -> Cyc:
    return ring_tables(G).species_value(np, mp)


def mackey_product(a: BElem, b: BElem) -> BElem:
    return ring_tables(a.group).mackey_product(a, b)


def idempotent_basis(G: FiniteGroup):
    """(idempotents as standard BElems, idempotent->standard, standard->idempotent)."""
    t = ring_tables(G)
    return t.idempotents(), t.to_standard_matrix(), t.species_matrix()


def lin(G: FiniteGroup, x: BElem) -> ClassFunction:
    return ring_tables(G).lin(x)


def lin_kernel_basis(G: FiniteGroup) -> list[NPair]:
    return ring_tables(G).lin_kernel_pairs()
