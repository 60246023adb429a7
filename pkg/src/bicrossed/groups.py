"""Finite groups as explicit multiplication tables.

Elements are the integers 0..n-1.  A group is its n x n table:
table[a][b] is the product a*b.  All higher structures in this package
(matched pairs, cocycles, the bicrossed Hopf algebra) are built on top
of this representation, so everything stays exact and enumerable.

Conventions:
  * permutations compose right to left: (p*q)(x) = p(q(x)), so the
    right factor acts first;
  * labels are display strings only, never used for identity of
    elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    IndexOutOfRange,
    MalformedInput,
    NotAGroup,
    NotAHom,
    SizeBound,
)
from .report import CheckReport


class FiniteGroup:
    def __init__(
        self,
        table: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        name: str | None = None,
        check: bool = True,
    ):
        n = len(table)
        if n == 0:
            raise MalformedInput("group table is empty")
        rows = []
        for row in table:
            if len(row) != n:
                raise MalformedInput(
                    f"table is not square: row of length {len(row)} in a "
                    f"table of size {n}"
                )
            for x in row:
                if not isinstance(x, int) or not (0 <= x < n):
                    raise MalformedInput(f"table entry {x!r} out of range 0..{n - 1}")
            rows.append(tuple(row))
        self.table: tuple[tuple[int, ...], ...] = tuple(rows)
        if labels is not None:
            if len(labels) != n:
                raise MalformedInput(f"{len(labels)} labels for {n} elements")
            self.labels = tuple(str(x) for x in labels)
        else:
            self.labels = tuple(f"g{i}" for i in range(n))
        self.name = name
        if check:
            rep = self.validate()
            if not rep.ok:
                bad = rep.failures()[0]
                raise NotAGroup(f"{bad.name}: {bad.witness}")
        self.identity = self._find_identity()
        self._inverse = self._find_inverses()

    # -- basic structure ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = self.identity
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def label(self, a: int) -> str:
        return self.labels[a]

    def _find_identity(self) -> int:
        for e in self.elements():
            if all(self.table[e][x] == x and self.table[x][e] == x
                   for x in self.elements()):
                return e
        raise NotAGroup("no identity element in table")

    def _find_inverses(self) -> tuple[int, ...]:
        e = self.identity
        inv = []
        for a in self.elements():
            for b in self.elements():
                if self.table[a][b] == e and self.table[b][a] == e:
                    inv.append(b)
                    break
            else:
                raise NotAGroup(f"element {a} has no inverse")
        return tuple(inv)

    # -- queries ------------------------------------------------------------

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in self.elements() for b in self.elements()
        )

    def element_order(self, a: int) -> int:
        e = self.identity
        x, k = a, 1
        while x != e:
            x = self.mul(x, a)
            k += 1
        return k

    def conjugate(self, a: int, g: int) -> int:
        """g^-1 * a * g."""
        return self.mul(self.mul(self.inv(g), a), g)

    def subgroup_closure(self, gens: Iterable[int]) -> list[int]:
        """Sorted list of elements of the subgroup generated by gens."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        for g in gens:
            if not isinstance(g, int) or not (0 <= g < self.order):
                raise IndexOutOfRange(f"generator {g!r} out of range 0..{self.order - 1}")
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return sorted(seen)

    def is_subgroup(self, elems: Sequence[int]) -> bool:
        s = set(elems)
        if self.identity not in s:
            return False
        return all(
            self.mul(a, b) in s for a in s for b in s
        ) and all(self.inv(a) in s for a in s)

    def restriction(self, elems: Sequence[int]) -> tuple["FiniteGroup", dict[int, int]]:
        """The subgroup on elems as its own FiniteGroup.

        Returns the new group together with the map from old element
        index to new index.  elems must be closed under the operation.
        """
        elems = sorted(set(elems))
        pos = {x: i for i, x in enumerate(elems)}
        table = []
        for a in elems:
            row = []
            for b in elems:
                p = self.mul(a, b)
                if p not in pos:
                    raise NotAGroup(
                        f"not closed: {self.label(a)}*{self.label(b)} escapes"
                    )
                row.append(pos[p])
            table.append(row)
        sub = FiniteGroup(
            table, labels=[self.label(x) for x in elems], check=False
        )
        return sub, pos

    # -- validation ---------------------------------------------------------

    def validate(self) -> CheckReport:
        rep = CheckReport()
        n = self.order
        ident = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x
                   for x in range(n)):
                ident = e
                break
        rep.add("identity exists", ident is not None,
                "no two-sided identity in table")
        if ident is not None:
            missing = None
            for a in range(n):
                if not any(self.table[a][b] == ident == self.table[b][a]
                           for b in range(n)):
                    missing = a
                    break
            rep.add("inverses exist", missing is None,
                    None if missing is None else f"element {missing} has no inverse")
        bad = None
        for a in range(n):
            ta = self.table[a]
            for b in range(n):
                tab = self.table[ta[b]]
                tb = self.table[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        bad = (a, b, c)
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("associative", bad is None,
                None if bad is None else f"({bad[0]}*{bad[1]})*{bad[2]} != {bad[0]}*({bad[1]}*{bad[2]})")
        return rep

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "table": [list(row) for row in self.table],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json(cls, data: dict, check: bool = True) -> "FiniteGroup":
        if not isinstance(data, dict) or "table" not in data:
            raise MalformedInput("group JSON needs a 'table' field")
        table = data["table"]
        if not isinstance(table, list):
            raise MalformedInput("'table' must be a list of rows")
        if "order" in data and data["order"] != len(table):
            raise MalformedInput(
                f"declared order {data['order']} != table size {len(table)}"
            )
        labels = data.get("labels")
        return cls(table, labels=labels, check=check)

    def __repr__(self):
        name = self.name or f"group of order {self.order}"
        return f"<{name}>"

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)


# ---------------------------------------------------------------------------
# standard constructions
# ---------------------------------------------------------------------------

def group_trivial() -> FiniteGroup:
    return FiniteGroup([[0]], labels=["e"], name="1", check=False)


def group_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise MalformedInput(f"cyclic group order must be >= 1, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, labels=[str(a) for a in range(n)],
                       name=f"Z{n}", check=False)


def _cycle_label(p: tuple[int, ...]) -> str:
    """Cycle notation with 1-based points; identity is 'e'."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(parts) if parts else "e"


def group_symmetric(n: int) -> FiniteGroup:
    """S_n on points 0..n-1, elements in lexicographic tuple order.

    Composition is right to left: (p*q)(x) = p(q(x)).  The table for
    S_n takes n!^2 entries, so this is capped at n = 6.
    """
    if n < 1:
        raise MalformedInput(f"need n >= 1, got {n}")
    if n > 6:
        raise SizeBound(f"S_{n} table would have {_fact(n) ** 2} entries; max n is 6")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = [index[tuple(p[q[x]] for x in range(n))] for q in perms]
        table.append(row)
    g = FiniteGroup(table, labels=[_cycle_label(p) for p in perms],
                    name=f"S{n}", check=False)
    g.perms = tuple(perms)
    return g


def _fact(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def group_direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """A x B with pair (x, y) encoded as x * |B| + y."""
    nb = b.order
    size = a.order * nb
    table = []
    for i in range(size):
        xa, ya = divmod(i, nb)
        row = []
        for j in range(size):
            xb, yb = divmod(j, nb)
            row.append(a.mul(xa, xb) * nb + b.mul(ya, yb))
        table.append(row)
    labels = [
        f"({a.label(i // nb)},{b.label(i % nb)})" for i in range(size)
    ]
    name = None
    if a.name and b.name:
        name = f"{a.name}x{b.name}"
    return FiniteGroup(table, labels=labels, name=name, check=False)


def generating_sequence(g: FiniteGroup) -> list[int]:
    """A short generating list, grown greedily in element order."""
    gens: list[int] = []
    closure = {g.identity}
    for x in g.elements():
        if x not in closure:
            gens.append(x)
            closure = set(g.subgroup_closure(gens))
            if len(closure) == g.order:
                break
    return gens


def all_homomorphisms(src: FiniteGroup, dst: FiniteGroup,
                      limit: int = 10 ** 7) -> list[list[int]]:
    """All group homomorphisms src -> dst as image lists, sorted.

    Brute force over images of a generating sequence of src; each
    assignment is extended to a full map along a spanning tree of the
    Cayley graph and then checked on all products.
    """
    gens = generating_sequence(src)
    if dst.order ** max(len(gens), 1) > limit:
        raise SizeBound(
            f"{dst.order}^{len(gens)} candidate generator images exceed {limit}"
        )
    # spanning tree: each element reached as parent * gens[k]
    reach: dict[int, tuple[int, int]] = {}
    frontier = [src.identity]
    while frontier:
        x = frontier.pop(0)
        for k, gen in enumerate(gens):
            y = src.mul(x, gen)
            if y != src.identity and y not in reach:
                reach[y] = (x, k)
                frontier.append(y)
    tree_order = _toposort_reach(src, reach)
    gen_orders = [src.element_order(x) for x in gens]

    found = []
    for images in itertools.product(dst.elements(), repeat=len(gens)):
        if any(o % dst.element_order(y) != 0 for o, y in zip(gen_orders, images)):
            continue
        image = [-1] * src.order
        image[src.identity] = dst.identity
        for x in tree_order:
            parent, k = reach[x]
            image[x] = dst.mul(image[parent], images[k])
        if all(
            dst.mul(image[a], image[b]) == image[src.mul(a, b)]
            for a in src.elements() for b in src.elements()
        ):
            found.append(image)
    found.sort()
    return found


def _toposort_reach(src: FiniteGroup, reach: dict[int, tuple[int, int]]) -> list[int]:
    order: list[int] = []
    placed = {src.identity}
    pending = dict(reach)
    while pending:
        progressed = False
        for x, (parent, _) in list(pending.items()):
            if parent in placed:
                order.append(x)
                placed.add(x)
                del pending[x]
                progressed = True
        if not progressed:
            raise AssertionError("spanning tree is not connected")
    return order


# ---------------------------------------------------------------------------
# named wrappers: homomorphisms and subgroups as values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    domain: FiniteGroup
    codomain: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]


def group_from_table(table: Sequence[Sequence[int]],
                     labels: Sequence[str] | None = None) -> FiniteGroup:
    return FiniteGroup(table, labels=labels, check=True)


def group_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    return group_direct_product(a, b)


def hom_validate(domain: FiniteGroup, codomain: FiniteGroup,
                 image: Sequence[int]) -> GroupHom:
    if len(image) != domain.order:
        raise MalformedInput(
            f"map has {len(image)} entries for a domain of order {domain.order}"
        )
    for y in image:
        if not isinstance(y, int) or not (0 <= y < codomain.order):
            raise IndexOutOfRange(f"image value {y!r} out of range")
    for a in domain.elements():
        for b in domain.elements():
            if codomain.mul(image[a], image[b]) != image[domain.mul(a, b)]:
                raise NotAHom(
                    f"f({a})f({b}) != f({a}*{b}): "
                    f"{codomain.mul(image[a], image[b])} != {image[domain.mul(a, b)]}"
                )
    return GroupHom(domain, codomain, tuple(image))


def enumerate_homs(domain: FiniteGroup, codomain: FiniteGroup) -> list[GroupHom]:
    return [
        GroupHom(domain, codomain, tuple(image))
        for image in all_homomorphisms(domain, codomain)
    ]


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]


def subgroup_generated(g: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    return Subgroup(g, tuple(g.subgroup_closure(gens)))


def cayley_color_matrix(g: FiniteGroup) -> list[list[float]]:
    """Table entries normalized to [0, 1] for heatmap rendering."""
    n = g.order
    if n == 1:
        return [[0.0]]
    return [[float(Fraction(x, n - 1)) for x in row] for row in g.table]
