"""Matched pairs of finite groups and the bicrossed product group.

A matched pair is two finite groups G and Gamma together with
  * a right action of G on the set Gamma, written s <| g, stored as
    lact[s][g] (an element of Gamma), and
  * a left action of Gamma on the set G, written s |> g, stored as
    ract[s][g] (an element of G),
subject to the unit laws

    s |> e = e            e <| g = e

and the two mixed compatibility laws

    s |> (g h) = (s |> g) ((s <| g) |> h)
    (s t) <| g = (s <| (t |> g)) (t <| g).

These are exactly the conditions under which the set G x Gamma becomes
a group, the bicrossed product, under

    (g, s) (h, t) = (g (s |> h), (s <| h) t),

and conversely every group H with an exact factorization H = A B
(A, B subgroups meeting only in the identity with |A| |B| = |H|) yields
a matched pair by rewriting s g back into the form g' s'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    FactorizationFailure,
    InternalCheckFailed,
    MalformedInput,
    MatchedPairViolation,
    NotAnAction,
    NotExactFactorization,
    NotStable,
)
from .groups import FiniteGroup, Subgroup
from .report import CheckReport

_ACTION_CHECKS = (
    "right action: unit",
    "right action: composition",
    "left action: unit",
    "left action: composition",
)


class MatchedPair:
    def __init__(
        self,
        G: FiniteGroup,
        Gamma: FiniteGroup,
        lact: Sequence[Sequence[int]],
        ract: Sequence[Sequence[int]],
        check: bool = True,
    ):
        self.G = G
        self.Gamma = Gamma
        self.lact = _check_table(lact, Gamma.order, G.order, Gamma.order, "lact")
        self.ract = _check_table(ract, Gamma.order, G.order, G.order, "ract")
        if check:
            rep = self.validate()
            if not rep.ok:
                bad = rep.failures()[0]
                err = NotAnAction if bad.name in _ACTION_CHECKS else MatchedPairViolation
                raise err(f"{bad.name}: {bad.witness}")

    # -- the two actions ----------------------------------------------------

    def gamma_act(self, s: int, g: int) -> int:
        """s <| g: the group moving the grading element."""
        return self.lact[s][g]

    def group_act(self, s: int, g: int) -> int:
        """s |> g: the grading element moving the group element."""
        return self.ract[s][g]

    # -- validation ---------------------------------------------------------

    def validate(self) -> CheckReport:
        G, Gm = self.G, self.Gamma
        eg, es = G.identity, Gm.identity
        rep = CheckReport()

        bad = next(
            ((s,) for s in Gm.elements() if self.lact[s][eg] != s), None
        )
        rep.add("right action: unit", bad is None,
                bad and f"s <| e != s at s={bad[0]}")

        bad = None
        for s in Gm.elements():
            for g in G.elements():
                for h in G.elements():
                    if self.lact[self.lact[s][g]][h] != self.lact[s][G.mul(g, h)]:
                        bad = (s, g, h)
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("right action: composition", bad is None,
                bad and f"(s <| g) <| h != s <| gh at (s,g,h)={bad}")

        bad = next(
            ((g,) for g in G.elements() if self.ract[es][g] != g), None
        )
        rep.add("left action: unit", bad is None,
                bad and f"e |> g != g at g={bad[0]}")

        bad = None
        for s in Gm.elements():
            for t in Gm.elements():
                st = Gm.mul(s, t)
                for g in G.elements():
                    if self.ract[st][g] != self.ract[s][self.ract[t][g]]:
                        bad = (s, t, g)
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("left action: composition", bad is None,
                bad and f"st |> g != s |> (t |> g) at (s,t,g)={bad}")

        bad = next(
            ((s,) for s in Gm.elements() if self.ract[s][eg] != eg), None
        )
        rep.add("mixed unit: s |> e = e", bad is None,
                bad and f"fails at s={bad[0]}")

        bad = next(
            ((g,) for g in G.elements() if self.lact[es][g] != es), None
        )
        rep.add("mixed unit: e <| g = e", bad is None,
                bad and f"fails at g={bad[0]}")

        bad = None
        for s in Gm.elements():
            for g in G.elements():
                sg = self.ract[s][g]
                s_g = self.lact[s][g]
                for h in G.elements():
                    if self.ract[s][G.mul(g, h)] != G.mul(sg, self.ract[s_g][h]):
                        bad = (s, g, h)
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("compatibility: product in the group", bad is None,
                bad and f"s |> gh != (s |> g)((s <| g) |> h) at (s,g,h)={bad}")

        bad = None
        for s in Gm.elements():
            for t in Gm.elements():
                st = Gm.mul(s, t)
                for g in G.elements():
                    lhs = self.lact[st][g]
                    rhs = Gm.mul(self.lact[s][self.ract[t][g]], self.lact[t][g])
                    if lhs != rhs:
                        bad = (s, t, g)
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("compatibility: product in the grading group", bad is None,
                bad and f"st <| g != (s <| (t |> g))(t <| g) at (s,t,g)={bad}")

        return rep

    # -- derived structure --------------------------------------------------

    def pair_index(self, g: int, s: int) -> int:
        return g * self.Gamma.order + s

    def pair_of_index(self, i: int) -> tuple[int, int]:
        return divmod(i, self.Gamma.order)

    def bicrossed_group(self) -> FiniteGroup:
        """The group structure on G x Gamma induced by the two actions."""
        G, Gm = self.G, self.Gamma
        size = G.order * Gm.order
        table = []
        for i in range(size):
            g, s = self.pair_of_index(i)
            row = []
            for j in range(size):
                h, t = self.pair_of_index(j)
                row.append(self.pair_index(
                    G.mul(g, self.ract[s][h]),
                    Gm.mul(self.lact[s][h], t),
                ))
            table.append(row)
        labels = [
            f"({G.label(i // Gm.order)},{Gm.label(i % Gm.order)})"
            for i in range(size)
        ]
        name = None
        if G.name and Gm.name:
            name = f"{G.name}><{Gm.name}"
        return FiniteGroup(table, labels=labels, name=name, check=False)

    def gamma_action_trivial(self) -> bool:
        """Does every group element fix every grading element?"""
        return all(
            self.lact[s][g] == s
            for s in self.Gamma.elements() for g in self.G.elements()
        )

    def group_action_trivial(self) -> bool:
        """Does every grading element fix every group element?"""
        return all(
            self.ract[s][g] == g
            for s in self.Gamma.elements() for g in self.G.elements()
        )

    def group_action_by_automorphisms(self) -> bool:
        """Is g -> s |> g an automorphism of G for every s?"""
        G = self.G
        return all(
            self.ract[s][G.mul(g, h)] == G.mul(self.ract[s][g], self.ract[s][h])
            for s in self.Gamma.elements()
            for g in G.elements() for h in G.elements()
        )

    def gamma_action_by_automorphisms(self) -> bool:
        """Is s -> s <| g an automorphism of Gamma for every g?"""
        Gm = self.Gamma
        return all(
            self.lact[Gm.mul(s, t)][g] == Gm.mul(self.lact[s][g], self.lact[t][g])
            for g in self.G.elements()
            for s in Gm.elements() for t in Gm.elements()
        )

    def inert_grading_elements(self) -> list[int]:
        """Grading elements acting trivially on the whole group."""
        return [
            s for s in self.Gamma.elements()
            if all(self.ract[s][g] == g for g in self.G.elements())
        ]

    def fixed_grading_elements(self) -> list[int]:
        """Grading elements fixed by the whole group."""
        return [
            s for s in self.Gamma.elements()
            if all(self.lact[s][g] == s for g in self.G.elements())
        ]

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "G": self.G.to_json(),
            "Gamma": self.Gamma.to_json(),
            "lact": [list(r) for r in self.lact],
            "ract": [list(r) for r in self.ract],
        }

    @classmethod
    def from_json(cls, data: dict, check: bool = True) -> "MatchedPair":
        for key in ("G", "Gamma", "lact", "ract"):
            if key not in data:
                raise MalformedInput(f"matched pair JSON needs {key!r}")
        G = FiniteGroup.from_json(data["G"], check=check)
        Gm = FiniteGroup.from_json(data["Gamma"], check=check)
        return cls(G, Gm, data["lact"], data["ract"], check=check)

    def __repr__(self):
        return f"<matched pair |G|={self.G.order} |Gamma|={self.Gamma.order}>"


def _check_table(
    table: Sequence[Sequence[int]], nrows: int, ncols: int, bound: int, name: str
) -> tuple[tuple[int, ...], ...]:
    if len(table) != nrows:
        raise MalformedInput(f"{name}: {len(table)} rows, expected {nrows}")
    rows = []
    for r, row in enumerate(table):
        if len(row) != ncols:
            raise MalformedInput(f"{name}: row {r} has {len(row)} entries, expected {ncols}")
        for x in row:
            if not isinstance(x, int) or not (0 <= x < bound):
                raise MalformedInput(f"{name}: entry {x!r} out of range 0..{bound - 1}")
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def matched_pair_trivial(G: FiniteGroup, Gamma: FiniteGroup) -> MatchedPair:
    """Both actions trivial; the bicrossed product is then G x Gamma."""
    lact = [[s for _ in G.elements()] for s in Gamma.elements()]
    ract = [[g for g in G.elements()] for _ in Gamma.elements()]
    return MatchedPair(G, Gamma, lact, ract, check=False)


def matched_pair_conjugation(G: FiniteGroup) -> MatchedPair:
    """Gamma = G grading itself, moved by conjugation: s <| g = g^-1 s g.

    The companion action is trivial.  This is the pair whose crossed
    category is the graded category with the adjoint crossing.
    """
    lact = [[G.conjugate(s, g) for g in G.elements()] for s in G.elements()]
    ract = [[g for g in G.elements()] for _ in G.elements()]
    return MatchedPair(G, G, lact, ract, check=False)


def semidirect_group_gamma_fixed(pair: MatchedPair) -> FiniteGroup:
    """(g,s)(h,t) = (g (s |> h), s t): the product law that holds when
    the action on the grading group is trivial."""
    G, Gm = pair.G, pair.Gamma
    size = G.order * Gm.order
    table = []
    for i in range(size):
        g, s = pair.pair_of_index(i)
        row = []
        for j in range(size):
            h, t = pair.pair_of_index(j)
            row.append(pair.pair_index(G.mul(g, pair.ract[s][h]), Gm.mul(s, t)))
        table.append(row)
    return FiniteGroup(table, check=False)


def semidirect_group_g_fixed(pair: MatchedPair) -> FiniteGroup:
    """(g,s)(h,t) = (g h, (s <| h) t): the product law that holds when
    the action on the group is trivial."""
    G, Gm = pair.G, pair.Gamma
    size = G.order * Gm.order
    table = []
    for i in range(size):
        g, s = pair.pair_of_index(i)
        row = []
        for j in range(size):
            h, t = pair.pair_of_index(j)
            row.append(pair.pair_index(G.mul(g, h), Gm.mul(pair.lact[s][h], t)))
        table.append(row)
    return FiniteGroup(table, check=False)


# ---------------------------------------------------------------------------
# exact factorizations
# ---------------------------------------------------------------------------

def matched_pair_validate(
    G: FiniteGroup,
    Gamma: FiniteGroup,
    lact: Sequence[Sequence[int]],
    ract: Sequence[Sequence[int]],
) -> MatchedPair:
    """Exhaustively verified constructor; raises on the first failure."""
    return MatchedPair(G, Gamma, lact, ract, check=True)


def bicrossed_group(pair: MatchedPair) -> FiniteGroup:
    return pair.bicrossed_group()


def matched_pair_from_factorization(
    H: FiniteGroup, g_elems: Sequence[int], gamma_elems: Sequence[int]
) -> tuple[MatchedPair, "Factorization"]:
    """Derive the matched pair from an exact factorization H = A B.

    g_elems spans the subgroup playing the role of G (the left factor),
    gamma_elems the one playing Gamma (the right factor).  Every h must
    factor uniquely as h = g s with g in A, s in B; then for s in B and
    g in A the product s g lands back in A B and its two components
    define s |> g and s <| g.
    """
    fac = Factorization(H, g_elems, gamma_elems)
    G, _ = H.restriction(fac.g_elems)
    Gamma, _ = H.restriction(fac.gamma_elems)
    ng, ns = G.order, Gamma.order
    lact = [[0] * ng for _ in range(ns)]
    ract = [[0] * ng for _ in range(ns)]
    for si, s in enumerate(fac.gamma_elems):
        for gi, g in enumerate(fac.g_elems):
            gp, sp = fac.factor(H.mul(s, g))
            ract[si][gi] = gp
            lact[si][gi] = sp
    pair = MatchedPair(G, Gamma, lact, ract, check=False)
    rep = pair.validate()
    if not rep.ok:
        bad = rep.failures()[0]
        raise FactorizationFailure(
            f"derived pair fails its own laws: {bad.name}: {bad.witness}"
        )
    return pair, fac


def from_factorization(
    H: FiniteGroup, g_elems: Sequence[int], gamma_elems: Sequence[int]
) -> MatchedPair:
    pair, _ = matched_pair_from_factorization(H, g_elems, gamma_elems)
    return pair


class Factorization:
    """An exact factorization H = A B with unique-decomposition lookup."""

    def __init__(self, H: FiniteGroup, g_elems: Sequence[int], gamma_elems: Sequence[int]):
        self.H = H
        self.g_elems = sorted(set(g_elems))
        self.gamma_elems = sorted(set(gamma_elems))
        if not H.is_subgroup(self.g_elems):
            raise NotExactFactorization("left factor is not a subgroup")
        if not H.is_subgroup(self.gamma_elems):
            raise NotExactFactorization("right factor is not a subgroup")
        overlap = set(self.g_elems) & set(self.gamma_elems)
        if overlap != {H.identity}:
            raise NotExactFactorization(
                f"factors intersect in {len(overlap)} elements, expected only the identity"
            )
        if len(self.g_elems) * len(self.gamma_elems) != H.order:
            raise NotExactFactorization(
                f"|A| * |B| = {len(self.g_elems) * len(self.gamma_elems)} != |H| = {H.order}"
            )
        self._decomp: dict[int, tuple[int, int]] = {}
        for gi, g in enumerate(self.g_elems):
            for si, s in enumerate(self.gamma_elems):
                h = H.mul(g, s)
                if h in self._decomp:
                    raise NotExactFactorization(
                        f"element {H.label(h)} factors in two ways"
                    )
                self._decomp[h] = (gi, si)

    def factor(self, h: int) -> tuple[int, int]:
        """Indices (into the two factors) with h = g s."""
        try:
            return self._decomp[h]
        except KeyError:
            raise FactorizationFailure(
                f"element {h} missed by the decomposition table"
            ) from None


# ---------------------------------------------------------------------------
# structural analysis and restriction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairAnalysis:
    lact_trivial: bool
    ract_trivial: bool
    ract_by_automorphisms: bool
    lact_by_automorphisms: bool
    gamma_bar: Subgroup
    gamma_under: Subgroup


def analyze(pair: MatchedPair) -> PairAnalysis:
    """Triviality flags, the two distinguished subgroups, and the
    equivalences tying them together.

    For a valid pair, triviality of one action forces the other to act
    by automorphisms, and the two distinguished subsets are stable
    subgroups; failures of these are internal errors, not input errors.
    """
    out = PairAnalysis(
        lact_trivial=pair.gamma_action_trivial(),
        ract_trivial=pair.group_action_trivial(),
        ract_by_automorphisms=pair.group_action_by_automorphisms(),
        lact_by_automorphisms=pair.gamma_action_by_automorphisms(),
        gamma_bar=Subgroup(pair.Gamma, tuple(pair.inert_grading_elements())),
        gamma_under=Subgroup(pair.Gamma, tuple(pair.fixed_grading_elements())),
    )
    if out.lact_trivial and not out.ract_by_automorphisms:
        raise InternalCheckFailed(
            "trivial action on the grading group must force automorphisms"
        )
    if out.ract_trivial and not out.lact_by_automorphisms:
        raise InternalCheckFailed(
            "trivial action on the group must force automorphisms"
        )
    for sub in (out.gamma_bar, out.gamma_under):
        if not pair.Gamma.is_subgroup(sub.elements):
            raise InternalCheckFailed("distinguished subset is not a subgroup")
        if any(
            pair.lact[s][g] not in set(sub.elements)
            for s in sub.elements for g in pair.G.elements()
        ):
            raise InternalCheckFailed("distinguished subgroup is not stable")
    return out


def restrict(pair: MatchedPair, gamma_elems: Sequence[int]) -> MatchedPair:
    """Restrict the pair to a stable subgroup of the grading group."""
    elems = sorted(set(gamma_elems))
    if not pair.Gamma.is_subgroup(elems):
        raise NotStable("restriction target is not a subgroup")
    sub = set(elems)
    for s in elems:
        for g in pair.G.elements():
            if pair.lact[s][g] not in sub:
                raise NotStable(f"not stable at (s,g)=({s},{g})")
    Gamma_sub, pos = pair.Gamma.restriction(elems)
    lact = [[pos[pair.lact[s][g]] for g in pair.G.elements()] for s in elems]
    ract = [[pair.ract[s][g] for g in pair.G.elements()] for s in elems]
    return MatchedPair(pair.G, Gamma_sub, lact, ract, check=True)


def bicrossed_matches_factorization(
    pair: MatchedPair, fac: Factorization
) -> CheckReport:
    """Check that (g,s) -> g s is an isomorphism from the bicrossed
    product of the derived pair onto the factored group."""
    H = fac.H
    rep = CheckReport()
    double = pair.bicrossed_group()
    images = [
        H.mul(fac.g_elems[g], fac.gamma_elems[s])
        for g, s in (pair.pair_of_index(i) for i in range(double.order))
    ]
    rep.add("pair map is a bijection", len(set(images)) == H.order == double.order,
            f"{len(set(images))} distinct images for order {H.order}")
    bad = None
    for i in range(double.order):
        for j in range(double.order):
            if H.mul(images[i], images[j]) != images[double.mul(i, j)]:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("pair map is a homomorphism", bad is None,
            bad and f"fails at pair indices {bad}")
    return rep
