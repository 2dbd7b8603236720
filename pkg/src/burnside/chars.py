"""Exact class functions and linear characters of finite groups.

A LinearCharacter stores one root-of-unity value per element of its
domain group.  A ClassFunction stores one Cyc per conjugacy class.  The
operations here (induction, restriction, inflation, inner products) are
all exact, and irreducibility is decided purely by norm, so no ambient
character table is ever needed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cyclotomic import Cyc, cyc_sum, root_of_unity
from .groups import (
    FiniteGroup,
    GroupError,
    GroupHom,
    abelian_basis,
    abelian_coordinates,
)


class LinearCharacter:
    """A degree-one character of a finite group, stored element-wise."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        self.group = group
        self.values = tuple(values)
        if len(self.values) != group.order:
            raise GroupError("character value table has the wrong length")

    def __call__(self, g: int) -> Cyc:
        return self.values[g]

    def __eq__(self, other):
        if not isinstance(other, LinearCharacter):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    __hash__ = None

    def is_trivial(self) -> bool:
        one = Cyc.one()
        return all(v == one for v in self.values)

    def __mul__(self, other: "LinearCharacter") -> "LinearCharacter":
        if self.group is not other.group:
            raise GroupError("characters live on different groups")
        return LinearCharacter(self.group, [a * b for a, b in zip(self.values, other.values)])

    def conjugate(self) -> "LinearCharacter":
        return LinearCharacter(self.group, [v.conjugate() for v in self.values])

    def __pow__(self, k: int) -> "LinearCharacter":
        return LinearCharacter(self.group, [v ** k for v in self.values])

    def values_on(self, elems) -> tuple[Cyc, ...]:
        """Value tuple over a list of element ids of the domain group."""
        return tuple(self.values[g] for g in elems)

    def validate(self) -> None:
        """Exhaustive multiplicativity and root-of-unity check."""
        G = self.group
        exp = G.exponent()
        one = Cyc.one()
        for g in range(G.order):
            if self.values[g] ** exp != one:
                raise GroupError("character value is not a root of unity")
            for h in range(G.order):
                if self.values[G.mul(g, h)] != self.values[g] * self.values[h]:
                    raise GroupError("character is not multiplicative")

    def as_class_function(self) -> "ClassFunction":
        G = self.group
        return ClassFunction(G, [self.values[cls[0]] for cls in G.conjugacy_classes()])

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)

    def __repr__(self):
        return "LinearCharacter(%s, order %d)" % (self.group.label, self.group.order)


def trivial_character(G: FiniteGroup) -> LinearCharacter:
    return LinearCharacter(G, [Cyc.one()] * G.order)


def linear_characters(G: FiniteGroup) -> list[LinearCharacter]:
    """All |G/G'| linear characters, in a fixed enumeration order.

    Characters are built through the cyclic decomposition of the
    abelianization; the trivial character always comes first, and the
    order is deterministic because the decomposition is.
    """
    cached = G._cache.get("linear_characters")
    if cached is not None:
        return cached
    derived = G.derived_subgroup()
    if len(derived) == 1:
        quotient, proj = G, None
    else:
        quotient, proj = G.quotient(derived)
    basis = abelian_basis(quotient)
    orders = [quotient.element_order(b) for b in basis]
    coords = abelian_coordinates(quotient, basis)
    chars = []
    for exps in itertools.product(*(range(m) for m in orders)):
        roots = [root_of_unity(m, e) for m, e in zip(orders, exps)]
        q_values = []
        for q in range(quotient.order):
            val = Cyc.one()
            for r, c in zip(roots, coords[q]):
                if c:
                    val = val * r ** c
            q_values.append(val)
        if proj is None:
            values = q_values
        else:
            values = [q_values[proj(g)] for g in range(G.order)]
        chars.append(LinearCharacter(G, values))
    G._cache["linear_characters"] = chars
    return chars


class ClassFunction:
    """An exact class function: one Cyc per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        self.group = group
        self.values = tuple(values)
        if len(self.values) != len(group.conjugacy_classes()):
            raise GroupError("class function length must equal the class count")

    def value_at(self, g: int) -> Cyc:
        return self.values[self.group.class_index_of(g)]

    def degree(self) -> Cyc:
        return self.value_at(0)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    __hash__ = None

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def scale(self, c) -> "ClassFunction":
        if not isinstance(c, Cyc):
            c = Cyc.rational(c)
        return ClassFunction(self.group, [c * v for v in self.values])

    def _check(self, other: "ClassFunction") -> None:
        if self.group is not other.group:
            raise GroupError("class functions live on different groups")

    def __repr__(self):
        return "ClassFunction(%s, %s)" % (self.group.label, list(self.values))


def inner(f: ClassFunction, g: ClassFunction) -> Cyc:
    """(1/|G|) sum over classes of |class| * f * conj(g)."""
    if f.group is not g.group:
        raise GroupError("class functions live on different groups")
    G = f.group
    total = cyc_sum(
        Cyc.rational(len(cls)) * fv * gv.conjugate()
        for cls, fv, gv in zip(G.conjugacy_classes(), f.values, g.values)
    )
    return total * Cyc.rational(Fraction(1, G.order))


def is_irreducible(f: ClassFunction) -> bool:
    """Norm one and positive degree, which pins down irreducible characters."""
    norm = inner(f, f)
    if not norm.is_rational() or norm.as_fraction() != 1:
        return False
    deg = f.degree()
    return deg.is_rational() and deg.as_fraction() > 0


def induce(G: FiniteGroup, sub_elems: tuple[int, ...], f) -> ClassFunction:
    """Induce a character of a subgroup up to G.

    `sub_elems` lists the subgroup's elements as ids of G, and `f` is
    either a LinearCharacter or a ClassFunction on the subgroup's own
    group object (as produced by G.subgroup_group).  The value at g is
    (1/|H|) * sum of f(x^-1 g x) over x in G with x^-1 g x in H.
    """
    S, embed = G.subgroup_group(frozenset(sub_elems))
    if isinstance(f, LinearCharacter):
        if f.group is not S:
            raise GroupError("character does not live on the given subgroup")
        lookup = f.values
        sub_value = lambda s: lookup[s]
    elif isinstance(f, ClassFunction):
        if f.group is not S:
            raise GroupError("class function does not live on the given subgroup")
        sub_value = f.value_at
    else:
        raise TypeError("expected LinearCharacter or ClassFunction")
    to_sub = {g: i for i, g in enumerate(embed)}
    scale = Cyc.rational(Fraction(1, len(sub_elems)))
    values = []
    for cls in G.conjugacy_classes():
        rep = cls[0]
        terms = []
        for x in range(G.order):
            y = G.conj(G.inv_of(x), rep)
            s = to_sub.get(y)
            if s is not None:
                terms.append(sub_value(s))
        values.append(scale * cyc_sum(terms))
    return ClassFunction(G, values)


def restrict(f: ClassFunction, G: FiniteGroup, sub_elems: tuple[int, ...]) -> ClassFunction:
    """Restrict a class function on G to a subgroup (as its own group)."""
    if f.group is not G:
        raise GroupError("class function does not live on the given group")
    S, embed = G.subgroup_group(frozenset(sub_elems))
    return ClassFunction(S, [f.value_at(embed[cls[0]]) for cls in S.conjugacy_classes()])


def inflate(f: ClassFunction, G: FiniteGroup, proj: GroupHom) -> ClassFunction:
    """Inflate a class function on a quotient G/N back to G along proj."""
    if proj.source is not G or f.group is not proj.target:
        raise GroupError("projection does not match the class function")
    return ClassFunction(G, [f.value_at(proj(cls[0])) for cls in G.conjugacy_classes()])


def character_table_text(G: FiniteGroup, rows: list[tuple[str, ClassFunction]]) -> str:
    """Aligned text table: one column per class, one row per character."""
    classes = G.conjugacy_classes()
    headers = [""] + [G.names[cls[0]] for cls in classes]
    sizes = ["size"] + [str(len(cls)) for cls in classes]
    table = [headers, sizes]
    for name, f in rows:
        table.append([name] + [repr(v) for v in f.values])
    widths = [max(len(r[i]) for r in table) for i in range(len(headers))]
    lines = []
    for r in table:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
    return "\n".join(lines)


def character_table_json(G: FiniteGroup, rows: list[tuple[str, ClassFunction]]) -> dict:
    classes = G.conjugacy_classes()
    return {
        "group": G.label,
        "classes": [{"rep": G.names[cls[0]], "size": len(cls)} for cls in classes],
        "rows": [
            {"name": name, "values": [v.serialize() for v in f.values]}
            for name, f in rows
        ],
    }
