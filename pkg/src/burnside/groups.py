"""Finite p-groups as explicit Cayley tables.

Element ids are 0..n-1 with 0 the identity.  Subgroups are frozensets of
ids; the full subgroup lattice, Moebius function, conjugacy classes and
quotients are computed on demand and cached per instance.  Group specs
use the grammar C<n> atoms joined by 'x' (e.g. "C9xC3") plus the named
tokens D8, Q8, Hei3, Hei5.
"""

from __future__ import annotations

import os
import re

_GEN_LETTERS = "xyzuv"
_DEFAULT_LATTICE_BOUND = 64


class GroupError(ValueError):
    pass


def lattice_bound() -> int:
    """Max group order for lattice enumeration (BURNSIDE_BOUND overrides)."""
    raw = os.environ.get("BURNSIDE_BOUND")
    if raw is None:
        return _DEFAULT_LATTICE_BOUND
    try:
        return int(raw)
    except ValueError:
        raise GroupError(f"BURNSIDE_BOUND must be an integer, got {raw!r}")


def _prime_power(n: int):
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


class GroupHom:
    """A homomorphism stored as its full image table."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: "FiniteGroup", target: "FiniteGroup", images):
        self.source = source
        self.target = target
        self.images = tuple(images)

    def __call__(self, g: int) -> int:
        return self.images[g]

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        if other.target is not self.source:
            raise GroupError("homomorphism composition mismatch")
        return GroupHom(other.source, self.target, tuple(self.images[x] for x in other.images))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def inverse_hom(self) -> "GroupHom":
        if not self.is_bijective() or self.source.order != self.target.order:
            raise GroupError("homomorphism is not invertible")
        inv = [0] * len(self.images)
        for g, img in enumerate(self.images):
            inv[img] = g
        return GroupHom(self.target, self.source, tuple(inv))

    def __eq__(self, other):
        return (
            isinstance(other, GroupHom)
            and self.source is other.source
            and self.target is other.target
            and self.images == other.images
        )

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.images))

    def __repr__(self):
        return f"GroupHom({self.source.label}->{self.target.label}, {self.images})"


class FiniteGroup:
    def __init__(self, table, names=None, label="G", generator_ids=(), abelian_exponents=None,
                 relations_checked=False):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.label = label
        self.names = list(names) if names is not None else [f"g{i}" for i in range(self.order)]
        self.generator_ids = tuple(generator_ids)
        self.abelian_exponents = tuple(abelian_exponents) if abelian_exponents else None
        self.relations_checked = relations_checked
        for i in range(self.order):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise GroupError("element 0 is not an identity")
        self.inv = tuple(row.index(0) for row in self.table)
        self._cache: dict = {}

    # -- basics

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv_of(self, a: int) -> int:
        return self.inv[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        result = 0
        while k:
            if k & 1:
                result = self.table[result][a]
            a = self.table[a][a]
            k >>= 1
        return result

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inv[g]]

    def element_order(self, a: int) -> int:
        orders = self._cache.get("orders")
        if orders is None:
            orders = []
            for g in range(self.order):
                k, x = 1, g
                while x != 0:
                    x = self.table[x][g]
                    k += 1
                orders.append(k)
            self._cache["orders"] = orders
        return orders[a]

    def exponent(self) -> int:
        exp = 1
        for g in range(self.order):
            o = self.element_order(g)
            while exp % o:
                exp *= self.p
        return exp

    def is_abelian(self) -> bool:
        flag = self._cache.get("abelian")
        if flag is None:
            flag = all(
                self.table[a][b] == self.table[b][a]
                for a in range(self.order)
                for b in range(a + 1, self.order)
            )
            self._cache["abelian"] = flag
        return flag

    @property
    def p(self) -> int:
        if self.order == 1:
            raise GroupError("trivial group has no prime")
        pk = _prime_power(self.order)
        if pk is None:
            raise GroupError(f"group of order {self.order} is not a p-group")
        return pk[0]

    def is_cyclic(self) -> bool:
        return any(self.element_order(g) == self.order for g in range(self.order))

    def elements_of_order(self, k: int) -> list[int]:
        return [g for g in range(self.order) if self.element_order(g) == k]

    # -- subgroup machinery

    def closure(self, gens) -> frozenset:
        elems = {0}
        frontier = [0]
        gens = [g for g in gens]
        for g in gens:
            if g not in elems:
                elems.add(g)
                frontier.append(g)
        while frontier:
            x = frontier.pop()
            for y in list(elems):
                for z in (self.table[x][y], self.table[y][x]):
                    if z not in elems:
                        elems.add(z)
                        frontier.append(z)
        return frozenset(elems)

    def subgroups(self) -> list[frozenset]:
        subs = self._cache.get("subgroups")
        if subs is not None:
            return subs
        bound = lattice_bound()
        if self.order > bound:
            raise GroupError(
                f"subgroup enumeration bounded at order {bound} "
                f"(set BURNSIDE_BOUND to raise); group has order {self.order}"
            )
        cyclic = {}
        for g in range(self.order):
            H = self.closure([g])
            cyclic.setdefault(H, g)
        seen = set(cyclic)
        queue = list(cyclic)
        while queue:
            H = queue.pop()
            for g in cyclic.values():
                if g not in H:
                    J = self.closure(list(H) + [g])
                    if J not in seen:
                        seen.add(J)
                        queue.append(J)
        subs = sorted(seen, key=lambda s: (len(s), sorted(s)))
        self._cache["subgroups"] = subs
        self._cache["sub_index"] = {H: i for i, H in enumerate(subs)}
        return subs

    def subgroup_index(self, H: frozenset) -> int:
        self.subgroups()
        idx = self._cache["sub_index"].get(H)
        if idx is None:
            raise GroupError("not a subgroup of this group")
        return idx

    def _containment_masks(self) -> list[int]:
        """masks[j] has bit i set iff subs[i] <= subs[j]."""
        masks = self._cache.get("contain_masks")
        if masks is None:
            subs = self.subgroups()
            masks = []
            for j, Y in enumerate(subs):
                m = 0
                for i, X in enumerate(subs):
                    if len(X) <= len(Y) and X <= Y:
                        m |= 1 << i
                masks.append(m)
            self._cache["contain_masks"] = masks
        return masks

    def mobius(self, X, Y) -> int:
        """Moebius function of the subgroup lattice."""
        subs = self.subgroups()
        i = X if isinstance(X, int) else self.subgroup_index(X)
        j = Y if isinstance(Y, int) else self.subgroup_index(Y)
        masks = self._containment_masks()
        if not (masks[j] >> i) & 1:
            return 0
        memo = self._cache.setdefault("mobius", {})

        def mu(a: int, b: int) -> int:
            if a == b:
                return 1
            key = (a, b)
            val = memo.get(key)
            if val is not None:
                return val
            total = 0
            between = masks[b]
            k = 0
            while between:
                if between & 1:
                    if k != b and (masks[k] >> a) & 1:
                        total += mu(a, k)
                between >>= 1
                k += 1
            memo[key] = -total
            return -total

        return mu(i, j)

    def is_normal(self, H: frozenset) -> bool:
        if self.is_abelian():
            return True
        return all(self.conj(g, h) in H for g in range(self.order) for h in H)

    def normal_subgroups(self) -> list[frozenset]:
        subs = self._cache.get("normals")
        if subs is None:
            subs = [H for H in self.subgroups() if self.is_normal(H)]
            self._cache["normals"] = subs
        return subs

    def maximal_subgroups(self) -> list[frozenset]:
        subs = self._cache.get("maximal")
        if subs is None:
            allsubs = self.subgroups()
            proper = [H for H in allsubs if len(H) < self.order]
            subs = [
                H for H in proper
                if not any(H < K for K in proper if len(K) > len(H))
            ]
            self._cache["maximal"] = subs
        return subs

    def minimal_normal_subgroups(self) -> list[frozenset]:
        subs = self._cache.get("min_normal")
        if subs is None:
            norm = [N for N in self.normal_subgroups() if len(N) > 1]
            subs = [
                N for N in norm
                if not any(len(M) > 1 and M < N for M in norm)
            ]
            self._cache["min_normal"] = subs
        return subs

    def mobius_normal(self, M) -> int:
        """Moebius function of the poset of normal subgroups, from trivial."""
        M = self.subgroups()[M] if isinstance(M, int) else M
        normals = self.normal_subgroups()
        memo = self._cache.setdefault("mobius_normal", {})

        def mu(N: frozenset) -> int:
            if len(N) == 1:
                return 1
            val = memo.get(N)
            if val is not None:
                return val
            total = 0
            for K in normals:
                if K < N:
                    total += mu(K)
            memo[N] = -total
            return -total

        if M not in set(normals):
            raise GroupError("not a normal subgroup")
        return mu(M)

    def center(self) -> frozenset:
        Z = self._cache.get("center")
        if Z is None:
            Z = frozenset(
                g for g in range(self.order)
                if all(self.table[g][x] == self.table[x][g] for x in range(self.order))
            )
            self._cache["center"] = Z
        return Z

    def derived_subgroup(self) -> frozenset:
        D = self._cache.get("derived")
        if D is None:
            comms = set()
            for a in range(self.order):
                for b in range(self.order):
                    ab = self.table[a][b]
                    ba = self.table[b][a]
                    comms.add(self.table[ab][self.inv[ba]])
            D = self.closure(comms)
            self._cache["derived"] = D
        return D

    def frattini_subgroup(self) -> frozenset:
        F = self._cache.get("frattini")
        if F is None:
            maxes = self.maximal_subgroups()
            if not maxes:
                F = frozenset(range(self.order))
            else:
                acc = set(maxes[0])
                for H in maxes[1:]:
                    acc &= H
                F = frozenset(acc)
            self._cache["frattini"] = F
        return F

    def conjugate_subgroup(self, g: int, H: frozenset) -> frozenset:
        if self.is_abelian():
            return H
        return frozenset(self.conj(g, h) for h in H)

    # -- conjugacy classes

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        classes = self._cache.get("classes")
        if classes is None:
            seen = set()
            raw = []
            for g in range(self.order):
                if g in seen:
                    continue
                cls = {self.conj(x, g) for x in range(self.order)}
                seen |= cls
                raw.append(tuple(sorted(cls)))
            raw.sort(key=lambda c: (self.element_order(c[0]), c[0]))
            classes = raw
            self._cache["classes"] = classes
            index = {}
            for ci, cls in enumerate(classes):
                for g in cls:
                    index[g] = ci
            self._cache["class_index"] = index
        return classes

    def class_index_of(self, g: int) -> int:
        self.conjugacy_classes()
        return self._cache["class_index"][g]

    # -- derived groups

    def quotient(self, N: frozenset):
        """(G/N, projection id list).  Coset of the identity gets id 0."""
        cache = self._cache.setdefault("quotients", {})
        hit = cache.get(N)
        if hit is not None:
            return hit
        if not self.is_normal(N):
            raise GroupError("quotient by a non-normal subgroup")
        coset_of = {}
        cosets = []
        for g in range(self.order):
            if g in coset_of:
                continue
            coset = frozenset(self.table[g][n] for n in N)
            for x in coset:
                coset_of[x] = len(cosets)
            cosets.append(coset)
        order = sorted(range(len(cosets)), key=lambda i: min(cosets[i]))
        relabel = {old: new for new, old in enumerate(order)}
        cosets = [cosets[old] for old in order]
        proj = tuple(relabel[coset_of[g]] for g in range(self.order))
        reps = [min(c) for c in cosets]
        table = [
            [proj[self.table[reps[a]][reps[b]]] for b in range(len(cosets))]
            for a in range(len(cosets))
        ]
        label = f"{self.label}/{{{self.names[min(N - {0})] if len(N) > 1 else '1'}}}"
        Q = FiniteGroup(
            table,
            names=[self.names[r] + "N" if r else "1" for r in reps],
            label=label,
            relations_checked=self.relations_checked,
        )
        result = (Q, GroupHom(self, Q, proj))
        cache[N] = result
        return result

    def subgroup_group(self, H: frozenset):
        """(H as its own FiniteGroup, embedding id list into self)."""
        if len(H) == self.order:
            return self, tuple(range(self.order))
        cache = self._cache.setdefault("subgroup_groups", {})
        hit = cache.get(H)
        if hit is not None:
            return hit
        elems = sorted(H)
        if elems[0] != 0:
            raise GroupError("subgroup does not contain the identity")
        pos = {g: i for i, g in enumerate(elems)}
        table = [[pos[self.table[a][b]] for b in elems] for a in elems]
        S = FiniteGroup(
            table,
            names=[self.names[g] for g in elems],
            label=f"{self.label}|sub{len(elems)}",
            relations_checked=self.relations_checked,
        )
        result = (S, tuple(elems))
        cache[H] = result
        return result

    def describe(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "generators": [self.names[g] for g in self.generator_ids],
            "relations_checked": self.relations_checked,
            "subgroup_count": len(self.subgroups()),
        }

    def __repr__(self):
        return f"FiniteGroup({self.label}, order={self.order})"


# ---------------------------------------------------------------------------
# builders


def build_abelian(p: int, exponents) -> FiniteGroup:
    """Direct product of cyclic p-groups C_{p^e}, exponents sorted descending."""
    exps = sorted((int(e) for e in exponents), reverse=True)
    if not exps or any(e < 1 for e in exps):
        raise GroupError(f"bad abelian exponent list {exponents}")
    if len(exps) > len(_GEN_LETTERS):
        raise GroupError(f"at most {len(_GEN_LETTERS)} direct factors supported")
    orders = [p**e for e in exps]
    n = 1
    for m in orders:
        n *= m
    strides = []
    acc = n
    for m in orders:
        acc //= m
        strides.append(acc)

    def encode(vec):
        return sum(v * s for v, s in zip(vec, strides))

    def decode(g):
        vec = []
        for m, s in zip(orders, strides):
            vec.append((g // s) % m)
        return vec

    table = [[0] * n for _ in range(n)]
    for a in range(n):
        va = decode(a)
        for b in range(n):
            vb = decode(b)
            table[a][b] = encode([(x + y) % m for x, y, m in zip(va, vb, orders)])

    def name_of(g):
        vec = decode(g)
        parts = []
        for i, v in enumerate(vec):
            if v == 1:
                parts.append(_GEN_LETTERS[i])
            elif v > 1:
                parts.append(f"{_GEN_LETTERS[i]}{v}")
        return "".join(parts) if parts else "1"

    label = "x".join(f"C{m}" for m in orders)
    gens = [encode([1 if j == i else 0 for j in range(len(orders))]) for i in range(len(orders))]
    return FiniteGroup(
        [list(row) for row in table],
        names=[name_of(g) for g in range(n)],
        label=label,
        generator_ids=gens,
        abelian_exponents=exps,
        relations_checked=True,
    )


def build_cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup([[0]], names=["1"], label="C1", relations_checked=True)
    pk = _prime_power(n)
    if pk is None:
        raise GroupError(f"C{n} is not a p-group")
    return build_abelian(pk[0], [pk[1]])


def _check_relations(G: FiniteGroup, relations) -> None:
    for lhs, rhs in relations:
        a = 0
        for g, k in lhs:
            a = G.table[a][G.power(g, k)]
        b = 0
        for g, k in rhs:
            b = G.table[b][G.power(g, k)]
        if a != b:
            raise GroupError(f"presentation relation failed in {G.label}")


def build_dihedral8() -> FiniteGroup:
    table = [[0] * 8 for _ in range(8)]
    for i in range(4):
        for j in range(2):
            for i2 in range(4):
                for j2 in range(2):
                    ii = (i + (i2 if j == 0 else -i2)) % 4
                    table[i + 4 * j][i2 + 4 * j2] = ii + 4 * ((j + j2) % 2)
    names = ["1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]
    G = FiniteGroup(table, names=names, label="D8", generator_ids=(1, 4))
    r, s = 1, 4
    _check_relations(G, [
        ([(r, 4)], []),
        ([(s, 2)], []),
        ([(s, 1), (r, 1), (s, 1)], [(r, 3)]),
    ])
    G.relations_checked = True
    return G


def build_quaternion8() -> FiniteGroup:
    table = [[0] * 8 for _ in range(8)]
    for a in range(4):
        for b in range(2):
            for a2 in range(4):
                for b2 in range(2):
                    aa = (a + (a2 if b == 0 else -a2)) % 4
                    bb = b + b2
                    if bb == 2:
                        aa = (aa + 2) % 4
                        bb = 0
                    table[a + 4 * b][a2 + 4 * b2] = aa + 4 * bb
    names = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"]
    G = FiniteGroup(table, names=names, label="Q8", generator_ids=(1, 4))
    x, y = 1, 4
    _check_relations(G, [
        ([(x, 4)], []),
        ([(y, 2)], [(x, 2)]),
        ([(y, -1), (x, 1), (y, 1)], [(x, 3)]),
    ])
    G.relations_checked = True
    return G


def build_heisenberg(p: int) -> FiniteGroup:
    """Unitriangular 3x3 matrices over F_p; exponent p for odd p."""
    n = p**3

    def encode(a, b, c):
        return (a * p + b) * p + c

    table = [[0] * n for _ in range(n)]
    for a in range(p):
        for b in range(p):
            for c in range(p):
                g = encode(a, b, c)
                for a2 in range(p):
                    for b2 in range(p):
                        for c2 in range(p):
                            table[g][encode(a2, b2, c2)] = encode(
                                (a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p
                            )

    def name_of(g):
        c = g % p
        b = (g // p) % p
        a = g // (p * p)
        parts = []
        for letter, v in (("x", a), ("y", b), ("z", c)):
            if v == 1:
                parts.append(letter)
            elif v > 1:
                parts.append(f"{letter}{v}")
        return "".join(parts) if parts else "1"

    X, Y = encode(1, 0, 0), encode(0, 1, 0)
    G = FiniteGroup(
        [list(r) for r in table],
        names=[name_of(g) for g in range(n)],
        label=f"Hei{p}",
        generator_ids=(X, Y),
    )
    Z = encode(0, 0, 1)
    _check_relations(G, [
        ([(X, p)], []),
        ([(Y, p)], []),
        ([(Z, p)], []),
        ([(X, 1), (Y, 1)], [(Y, 1), (X, 1), (Z, 1)]),
        ([(X, 1), (Z, 1)], [(Z, 1), (X, 1)]),
        ([(Y, 1), (Z, 1)], [(Z, 1), (Y, 1)]),
    ])
    G.relations_checked = True
    return G


_GROUP_CACHE: dict[str, FiniteGroup] = {}
_ATOM_RE = re.compile(r"^C(\d+)$")


def canonical_spec(spec: str) -> str:
    spec = spec.strip()
    if spec in ("D8", "Q8", "Hei3", "Hei5"):
        return spec
    atoms = spec.split("x")
    orders = []
    for atom in atoms:
        m = _ATOM_RE.match(atom.strip())
        if not m:
            raise GroupError(f"bad group spec {spec!r}: atom {atom!r}")
        n = int(m.group(1))
        if n < 2:
            raise GroupError(f"bad group spec {spec!r}: cyclic order must be >= 2")
        orders.append(n)
    primes = {_prime_power(n) for n in orders}
    if None in primes:
        raise GroupError(f"bad group spec {spec!r}: orders must be prime powers")
    ps = {pk[0] for pk in primes}
    if len(ps) != 1:
        raise GroupError(f"bad group spec {spec!r}: mixed primes {sorted(ps)}")
    orders.sort(reverse=True)
    return "x".join(f"C{n}" for n in orders)


def parse_group_spec(spec: str) -> FiniteGroup:
    label = canonical_spec(spec)
    G = _GROUP_CACHE.get(label)
    if G is not None:
        return G
    if label == "D8":
        G = build_dihedral8()
    elif label == "Q8":
        G = build_quaternion8()
    elif label == "Hei3":
        G = build_heisenberg(3)
    elif label == "Hei5":
        G = build_heisenberg(5)
    else:
        orders = [int(a[1:]) for a in label.split("x")]
        p = _prime_power(orders[0])[0]
        exps = [_prime_power(n)[1] for n in orders]
        G = build_abelian(p, exps)
    _GROUP_CACHE[label] = G
    return G


# ---------------------------------------------------------------------------
# abelian structure


def abelian_basis(G: FiniteGroup) -> list[int]:
    """Generator ids b1..bk with G = <b1> x ... x <bk>, orders descending."""
    if not G.is_abelian():
        raise GroupError("abelian_basis needs an abelian group")
    if G.order == 1:
        return []
    best = max(range(G.order), key=lambda g: (G.element_order(g), -g))
    m1 = G.element_order(best)
    N = G.closure([best])
    Q, proj = G.quotient(N)
    powers = {}
    x = 0
    for k in range(m1):
        powers[x] = k
        x = G.table[x][best]
    lifted = [best]
    for qb in abelian_basis(Q):
        mi = Q.element_order(qb)
        g = min(h for h in range(G.order) if proj(h) == qb)
        c = powers[G.power(g, mi)]
        if c % mi:
            raise GroupError("abelian basis lift failed")
        e = (-(c // mi)) % (m1 // mi)
        lifted.append(G.table[g][G.power(best, e)])
    return lifted


def abelian_coordinates(G: FiniteGroup, basis: list[int]) -> dict[int, tuple[int, ...]]:
    """Element id -> exponent vector over the given basis."""
    orders = [G.element_order(b) for b in basis]
    coords = {0: tuple(0 for _ in basis)}
    for i, b in enumerate(basis):
        new = {}
        for g, vec in coords.items():
            x = g
            for k in range(1, orders[i]):
                x = G.table[x][b]
                v = list(vec)
                v[i] = k
                new[x] = tuple(v)
        coords.update(new)
    if len(coords) != G.order:
        raise GroupError("not a basis: products do not exhaust the group")
    return coords


# ---------------------------------------------------------------------------
# automorphisms


def _generating_sequence(G: FiniteGroup) -> list[int]:
    if G.generator_ids and len(G.closure(G.generator_ids)) == G.order:
        return list(G.generator_ids)
    gens: list[int] = []
    span = {0}
    while len(span) < G.order:
        candidates = [g for g in range(G.order) if g not in span]
        g = max(candidates, key=lambda x: (G.element_order(x), -x))
        gens.append(g)
        span = set(G.closure(gens))
    return gens


def automorphisms(G: FiniteGroup, max_order: int | None = None) -> list[GroupHom]:
    """All automorphisms, ordered by image table.

    The search maps a generating sequence to order-matched candidates with
    incremental pruning.  The bound is a permission gate, not a feasibility
    promise: highly symmetric groups near the bound may still be infeasible.
    """
    cached = G._cache.get("automorphisms")
    if cached is not None:
        return cached
    bound = max_order if max_order is not None else (81 if G.is_abelian() else 32)
    if G.order > bound:
        raise GroupError(
            f"automorphism search bounded at order {bound}; group has order {G.order}"
        )
    gens = _generating_sequence(G)
    by_order: dict[int, list[int]] = {}
    for o in {G.element_order(g) for g in gens}:
        by_order[o] = G.elements_of_order(o)

    # one BFS word table: every element as a product of generator indices
    words: list[list[int] | None] = [None] * G.order
    words[0] = []
    frontier = [0]
    while frontier:
        x = frontier.pop(0)
        for gi, g in enumerate(gens):
            y = G.table[x][g]
            if words[y] is None:
                words[y] = words[x] + [gi]
                frontier.append(y)

    autos: list[GroupHom] = []

    def image_map(images: list[int]) -> list[int]:
        out = [0] * G.order
        for g in range(G.order):
            acc = 0
            for gi in words[g]:
                acc = G.table[acc][images[gi]]
            out[g] = acc
        return out

    def extend(pos: int, images: list[int], span: frozenset):
        if pos == len(gens):
            full = image_map(images)
            if len(set(full)) != G.order:
                return
            for x in range(G.order):
                fx = full[x]
                for gi, g in enumerate(gens):
                    if full[G.table[x][g]] != G.table[fx][images[gi]]:
                        return
            autos.append(GroupHom(G, G, full))
            return
        for cand in by_order[G.element_order(gens[pos])]:
            new_span = G.closure(list(span) + [cand])
            target_size = len(G.closure(gens[: pos + 1]))
            if len(new_span) != target_size:
                continue
            extend(pos + 1, images + [cand], new_span)

    extend(0, [], frozenset([0]))
    autos.sort(key=lambda h: h.images)
    G._cache["automorphisms"] = autos
    return autos


def group_from_maps(maps, label: str):
    """Abstract group from a composition-closed list of bijection tables.

    Returns (FiniteGroup, element maps aligned with ids); identity map is id 0.
    """
    uniq = sorted({tuple(m) for m in maps})
    n = len(uniq[0])
    ident = tuple(range(n))
    if ident not in set(uniq):
        raise GroupError("map list lacks the identity")
    uniq.remove(ident)
    ordered = [ident] + uniq
    index = {m: i for i, m in enumerate(ordered)}
    table = []
    for f in ordered:
        row = []
        for g in ordered:
            fg = tuple(f[g[x]] for x in range(n))
            k = index.get(fg)
            if k is None:
                raise GroupError("map list not closed under composition")
            row.append(k)
        table.append(row)
    return FiniteGroup(table, label=label, relations_checked=True), ordered


# ---------------------------------------------------------------------------
# named automorphism generators for the structured families


def _abelian_family(G: FiniteGroup):
    """(p, exponents) for an abelian group built via build_abelian, else None."""
    if G.abelian_exponents is None:
        return None
    return (G.p, G.abelian_exponents)


def _hom_from_gen_images(G: FiniteGroup, images: dict[int, int]) -> GroupHom:
    basis = list(G.generator_ids)
    coords = abelian_coordinates(G, basis)
    out = [0] * G.order
    for g in range(G.order):
        acc = 0
        for b, e in zip(basis, coords[g]):
            acc = G.table[acc][G.power(images[b], e)]
        out[g] = acc
    hom = GroupHom(G, G, out)
    if not hom.is_bijective():
        raise GroupError("named automorphism is not bijective")
    return hom


def _smallest_primitive_root(q: int) -> int:
    """Smallest primitive root modulo q (q an odd prime power)."""
    from math import gcd

    units = [u for u in range(1, q) if gcd(u, q) == 1]
    target = len(units)
    for s in range(2, q):
        if gcd(s, q) != 1:
            continue
        k, x = 1, s % q
        while x != 1:
            x = (x * s) % q
            k += 1
        if k == target:
            return s
    raise GroupError(f"no primitive root mod {q}")


def named_aut_generators(G: FiniteGroup) -> dict[str, GroupHom]:
    """Presentation generators of Aut(G) for the structured families.

    Supported: C_p x C_p (Borel-friendly GL(2,p) generators), C4 x C2,
    C_{2^m} x C2 for m >= 3, and C_{p^m} x C_p for odd p, m >= 2.  All
    defining relations are verified before returning.
    """
    fam = _abelian_family(G)
    if fam is None:
        raise GroupError(f"no named automorphism generators for {G.label}")
    p, exps = fam
    x, y = (G.generator_ids + (None, None))[:2]

    if len(exps) == 2 and exps[0] == exps[1] == 1:
        s = 1 if p == 2 else _smallest_primitive_root(p)
        gens = {
            "alpha": _hom_from_gen_images(G, {x: x, y: G.table[x][y]}),
            "w": _hom_from_gen_images(G, {x: y, y: x}),
        }
        if p > 2:
            gens["beta"] = _hom_from_gen_images(G, {x: G.power(x, s), y: y})
            gens["gamma"] = _hom_from_gen_images(G, {x: x, y: G.power(y, s)})
        return gens

    if len(exps) != 2 or exps[1] != 1 or exps[0] < 2:
        raise GroupError(f"no named automorphism generators for {G.label}")
    m = exps[0]
    q = p**m

    if p == 2 and m == 2:
        # a: x -> xy, y -> x^2 y has order 4.  The companion involution must
        # lie outside <a> for <a,b> to be all of Aut (dihedral of order 8);
        # x -> x, y -> x^2 y works, whereas inverting x alone is just a^2.
        a = _hom_from_gen_images(G, {x: G.table[x][y], y: G.table[G.power(x, 2)][y]})
        b = _hom_from_gen_images(G, {x: x, y: G.table[G.power(x, 2)][y]})
        _verify_aut_relations(G, [
            ([(a, 4)], []),
            ([(b, 2)], []),
            ([(b, 1), (a, 1), (b, 1)], [(a, 3)]),
        ])
        return {"a": a, "b": b}

    if p == 2:
        if m < 3:
            raise GroupError(f"no named automorphism generators for {G.label}")
        z = G.power(x, 2 ** (m - 1))
        a1 = _hom_from_gen_images(G, {x: G.inv[x], y: y})
        a2 = _hom_from_gen_images(G, {x: G.power(x, 5), y: y})
        b = _hom_from_gen_images(G, {x: x, y: G.table[z][y]})
        c = _hom_from_gen_images(G, {x: G.table[x][y], y: y})
        _verify_aut_relations(G, [
            ([(a1, 2)], []),
            ([(a2, 2 ** (m - 2))], []),
            ([(b, 2)], []),
            ([(c, 2)], []),
            ([(a1, 1), (a2, 1)], [(a2, 1), (a1, 1)]),
            ([(a1, 1), (b, 1)], [(b, 1), (a1, 1)]),
            ([(a2, 1), (b, 1)], [(b, 1), (a2, 1)]),
            ([(a1, 1), (c, 1)], [(c, 1), (a1, 1)]),
            ([(a2, 1), (c, 1)], [(c, 1), (a2, 1)]),
            ([(c, -1), (b, 1), (c, 1)], [(a2, 2 ** (m - 3)), (b, 1)]),
        ])
        return {"a1": a1, "a2": a2, "b": b, "c": c}

    # odd p, m >= 2
    s, t, u, omega = cpm_cp_odd_parameters(p, m)
    a = _hom_from_gen_images(G, {x: G.power(x, s), y: y})
    b = _hom_from_gen_images(G, {x: x, y: G.table[G.power(x, u)][y]})
    c = _hom_from_gen_images(G, {x: G.table[x][y], y: y})
    d = _hom_from_gen_images(G, {x: x, y: G.power(y, s)})
    euler = (p - 1) * p ** (m - 1)
    _verify_aut_relations(G, [
        ([(a, euler)], []),
        ([(b, p)], []),
        ([(c, p)], []),
        ([(d, p - 1)], []),
        ([(a, -1), (b, 1), (a, 1)], [(b, t)]),
        ([(d, -1), (b, 1), (d, 1)], [(b, s)]),
        ([(a, -1), (c, 1), (a, 1)], [(c, s)]),
        ([(d, -1), (c, 1), (d, 1)], [(c, t)]),
        ([(d, -1), (a, 1), (d, 1)], [(a, 1)]),
        ([(c, 1), (b, 1)], [(a, -omega), (b, 1), (c, 1)]),
    ])
    return {"a": a, "b": b, "c": c, "d": d}


def cpm_cp_odd_parameters(p: int, m: int) -> tuple[int, int, int, int]:
    """(s, t, u, omega) for Aut(C_{p^m} x C_p), odd p.

    s is the smallest primitive root mod p^m, t its inverse, u = p^(m-1),
    and omega the smallest non-negative exponent with s^omega = 1 + u.
    """
    q = p**m
    s = _smallest_primitive_root(q)
    t = pow(s, -1, q)
    u = p ** (m - 1)
    val = 1
    for k in range(q):
        if val == (1 + u) % q:
            return s, t, u, k
        val = (val * s) % q
    raise GroupError("discrete log for omega failed")


def _aut_power(h: GroupHom, k: int) -> GroupHom:
    G = h.source
    ident = GroupHom(G, G, tuple(range(G.order)))
    if k < 0:
        h = h.inverse_hom()
        k = -k
    out = ident
    for _ in range(k):
        out = h.compose(out)
    return out


def _verify_aut_relations(G: FiniteGroup, relations) -> None:
    ident = tuple(range(G.order))
    for lhs, rhs in relations:
        left = GroupHom(G, G, ident)
        for h, k in lhs:
            left = left.compose(_aut_power(h, k))
        right = GroupHom(G, G, ident)
        for h, k in rhs:
            right = right.compose(_aut_power(h, k))
        if left.images != right.images:
            raise GroupError(f"automorphism relation failed for {G.label}")
