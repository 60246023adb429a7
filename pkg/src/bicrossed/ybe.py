"""Braiding pairs of homomorphisms and set-theoretic Yang-Baxter solutions.

A braiding pair on a matched pair is a pair of group homomorphisms
phi, psi: Gamma -> G subject to five interlocking conditions written
in terms of the two actions.  Validated pairs produce:

  * a bijection b on Gamma x Gamma,
        b(s, t) = ((t^-1 <| phi(s^-1))^-1, s <| psi(t)),
    whose inverse, followed by the flip, solves the quantum
    Yang-Baxter equation on the set Gamma x Gamma;

  * given compatible scalars c_{s,t}, a braiding on the equivariantized
    category (handled in crossed_cat; this module owns the scalar
    equations, since they are pure cocycle arithmetic).

Each of the five conditions has an equivalent reformulation phrased
with four derived one-sided actions.  Both versions are evaluated
independently on every candidate, valid or not, and any disagreement
raises ReformulationMismatch: the equivalence is a theorem about
matched pairs, so a mismatch always means an implementation bug, never
bad input data.

Convention corner: the two crossing operations are

    s |x t = t^-1 |> phi(s^-1)   in G   (steers the first output leg)
    s x| t = t^-1 <| phi(s^-1)   in Gamma

and the identity (s x| t)^-1 = t <| (s |x t) holds in any matched pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConditionViolation,
    ConductorMismatch,
    MalformedInput,
    NotBijective,
    ReformulationMismatch,
    SearchBudgetExceeded,
    ZeroValue,
)
from .groups import GroupHom, all_homomorphisms, hom_validate
from .matched_pair import MatchedPair
from .report import CheckReport
from .scalars import Cyclotomic, embed, root_of_unity

Pair = tuple[int, int]


@dataclass(frozen=True)
class BraidingPair:
    pair: MatchedPair
    phi: GroupHom
    psi: GroupHom

    def __repr__(self):
        return f"<braiding pair phi={list(self.phi.map)} psi={list(self.psi.map)}>"


# ---------------------------------------------------------------------------
# the five conditions and their reformulations
# ---------------------------------------------------------------------------

def _condition_tables(mp: MatchedPair, phi, psi):
    """First failing witness (or None) for each of the five conditions,
    in both the defining form and the derived-action reformulation.

    Returns two dicts keyed (i)...(v) mapping to witness-or-None.
    """
    G, Gm = mp.G, mp.Gamma
    lact, ract = mp.lact, mp.ract

    def gl(g: int, t: int) -> int:
        # left action of G on Gamma derived from the pair
        return Gm.inv(lact[Gm.inv(t)][G.inv(g)])

    def gr(g: int, t: int) -> int:
        # right action of Gamma on G derived from the pair
        return G.inv(ract[Gm.inv(t)][G.inv(g)])

    direct: dict[str, tuple | None] = {}
    reform: dict[str, tuple | None] = {}

    wit = None
    for s in Gm.elements():
        for t in Gm.elements():
            lhs = Gm.mul(Gm.mul(lact[Gm.inv(t)][phi[Gm.inv(s)]], s), t)
            if lhs != lact[s][psi[t]]:
                wit = (s, t)
                break
        if wit:
            break
    direct["(i)"] = wit

    wit = None
    for s in Gm.elements():
        for t in Gm.elements():
            if Gm.mul(gl(psi[s], t), lact[s][phi[t]]) != Gm.mul(s, t):
                wit = (s, t)
                break
        if wit:
            break
    reform["(i)"] = wit

    wit = None
    for s in Gm.elements():
        for t in Gm.elements():
            lhs = G.inv(ract[t][psi[s]])
            if lhs != psi[lact[Gm.inv(s)][phi[Gm.inv(t)]]]:
                wit = (s, t)
                break
        if wit:
            break
    direct["(ii)"] = wit

    wit = None
    for s in Gm.elements():
        for t in Gm.elements():
            if gr(psi[s], t) != psi[lact[s][phi[t]]]:
                wit = (s, t)
                break
        if wit:
            break
    reform["(ii)"] = wit

    wit = None
    for s in Gm.elements():
        for t in Gm.elements():
            lhs = G.inv(ract[Gm.inv(t)][phi[Gm.inv(s)]])
            if lhs != phi[lact[s][psi[t]]]:
                wit = (s, t)
                break
        if wit:
            break
    direct["(iii)"] = wit

    wit = None
    for s in Gm.elements():
        for t in Gm.elements():
            if ract[s][phi[t]] != phi[gl(psi[s], t)]:
                wit = (s, t)
                break
        if wit:
            break
    reform["(iii)"] = wit

    wit = None
    for t in Gm.elements():
        for g in G.elements():
            if G.mul(psi[t], g) != G.mul(ract[t][g], psi[lact[t][g]]):
                wit = (t, g)
                break
        if wit:
            break
    direct["(iv)"] = wit

    wit = None
    for t in Gm.elements():
        for g in G.elements():
            if G.mul(psi[gl(g, t)], gr(g, t)) != G.mul(g, psi[t]):
                wit = (t, g)
                break
        if wit:
            break
    reform["(iv)"] = wit

    wit = None
    for s in Gm.elements():
        for g in G.elements():
            lhs = G.mul(g, G.inv(phi[lact[s][g]]))
            if lhs != G.mul(phi[Gm.inv(s)], ract[s][g]):
                wit = (s, g)
                break
        if wit:
            break
    direct["(v)"] = wit

    wit = None
    for s in Gm.elements():
        for g in G.elements():
            if G.mul(phi[gl(g, s)], gr(g, s)) != G.mul(g, phi[s]):
                wit = (s, g)
                break
        if wit:
            break
    reform["(v)"] = wit

    return direct, reform


def braiding_pair_check(mp: MatchedPair, phi, psi) -> tuple[bool, dict]:
    """Non-raising variant: evaluates all five conditions and runs the
    reformulation cross-check.  Returns (all hold, witness dict)."""
    phi_map = phi.map if isinstance(phi, GroupHom) else tuple(phi)
    psi_map = psi.map if isinstance(psi, GroupHom) else tuple(psi)
    direct, reform = _condition_tables(mp, phi_map, psi_map)
    for key in direct:
        if (direct[key] is None) != (reform[key] is None):
            raise ReformulationMismatch(
                f"condition {key} and its reformulation disagree: "
                f"direct witness {direct[key]}, reformulated witness {reform[key]}"
            )
    return all(w is None for w in direct.values()), direct


def braiding_pair_validate(mp: MatchedPair, phi, psi) -> BraidingPair:
    """Validate a candidate pair of maps.  Both are first checked to be
    homomorphisms Gamma -> G, then the five conditions are checked
    exhaustively; the first violated condition is reported with its
    witness."""
    if not isinstance(phi, GroupHom):
        phi = hom_validate(mp.Gamma, mp.G, list(phi))
    if not isinstance(psi, GroupHom):
        psi = hom_validate(mp.Gamma, mp.G, list(psi))
    ok, witnesses = braiding_pair_check(mp, phi, psi)
    if not ok:
        for key in ("(i)", "(ii)", "(iii)", "(iv)", "(v)"):
            if witnesses[key] is not None:
                raise ConditionViolation(
                    f"condition {key} fails at {witnesses[key]}"
                )
    return BraidingPair(mp, phi, psi)


def enumerate_braiding_pairs(mp: MatchedPair, limit: int = 10 ** 7) -> list[BraidingPair]:
    """All braiding pairs on the matched pair, in lexicographic order of
    (phi image, psi image).  The reformulation cross-check runs on every
    candidate, not only the valid ones."""
    homs = all_homomorphisms(mp.Gamma, mp.G, limit=limit)
    out = []
    for phi_img in homs:
        phi = GroupHom(mp.Gamma, mp.G, tuple(phi_img))
        for psi_img in homs:
            psi = GroupHom(mp.Gamma, mp.G, tuple(psi_img))
            ok, _ = braiding_pair_check(mp, phi, psi)
            if ok:
                out.append(BraidingPair(mp, phi, psi))
    return out


def g_crossed_braiding_pair(mp: MatchedPair) -> BraidingPair:
    """For the conjugation pair of a group on itself: phi trivial and
    psi the identity map form a braiding pair."""
    if mp.G.order != mp.Gamma.order:
        raise MalformedInput("conjugation form needs Gamma and G of equal order")
    triv = GroupHom(mp.Gamma, mp.G, tuple(mp.G.identity for _ in mp.Gamma.elements()))
    ident = GroupHom(mp.Gamma, mp.G, tuple(mp.Gamma.elements()))
    return braiding_pair_validate(mp, triv, ident)


# ---------------------------------------------------------------------------
# set-theoretic solutions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SetSolution:
    """A map Gamma^2 -> Gamma^2, stored as output pairs indexed s*n+t."""
    n: int
    table: tuple[Pair, ...]

    def apply(self, s: int, t: int) -> Pair:
        return self.table[s * self.n + t]

    def is_bijective(self) -> bool:
        return len(set(self.table)) == self.n * self.n

    def inverse(self) -> "SetSolution":
        if not self.is_bijective():
            raise NotBijective("cannot invert a non-bijective pair map")
        inv: list[Pair | None] = [None] * (self.n * self.n)
        for s in range(self.n):
            for t in range(self.n):
                a, b = self.table[s * self.n + t]
                inv[a * self.n + b] = (s, t)
        return SetSolution(self.n, tuple(inv))

    def to_json(self) -> dict:
        return {"n": self.n,
                "map": {f"{i // self.n},{i % self.n}": list(p)
                        for i, p in enumerate(self.table)}}


def cross_g(mp: MatchedPair, phi: GroupHom, s: int, t: int) -> int:
    """s |x t = t^-1 |> phi(s^-1), in G."""
    return mp.ract[mp.Gamma.inv(t)][phi.map[mp.Gamma.inv(s)]]


def b_map(bp: BraidingPair) -> SetSolution:
    """The pair map b(s, t) = ((s x| t)^-1, s <| psi(t)).  Bijectivity
    is asserted: it is automatic for a validated braiding pair, so a
    failure here means the input was never validated (or a bug)."""
    mp = bp.pair
    Gm = mp.Gamma
    n = Gm.order
    table = []
    for s in Gm.elements():
        for t in Gm.elements():
            first = Gm.inv(mp.lact[Gm.inv(t)][bp.phi.map[Gm.inv(s)]])
            second = mp.lact[s][bp.psi.map[t]]
            table.append((first, second))
    sol = SetSolution(n, tuple(table))
    if not sol.is_bijective():
        raise NotBijective("the pair map of a braiding pair must be bijective")
    return sol


def r_map(bp: BraidingPair) -> SetSolution:
    """The Yang-Baxter map: invert b, then flip the two outputs."""
    b = b_map(bp)
    binv = b.inverse()
    flipped = tuple((q, p) for (p, q) in binv.table)
    sol = SetSolution(b.n, flipped)
    if not sol.is_bijective():
        raise NotBijective("flip of a bijection stopped being bijective")
    return sol


def verify_qybe(sol: SetSolution) -> CheckReport:
    """The quantum Yang-Baxter equation on triples:
    r12 r13 r23 = r23 r13 r12, composing right to left."""
    rep = CheckReport()
    rep.add("pair map is a bijection", sol.is_bijective(),
            "output pairs collide")
    n = sol.n

    def r12(x):
        a, b = sol.apply(x[0], x[1])
        return (a, b, x[2])

    def r13(x):
        a, c = sol.apply(x[0], x[2])
        return (a, x[1], c)

    def r23(x):
        b, c = sol.apply(x[1], x[2])
        return (x[0], b, c)

    bad = None
    for a in range(n):
        for b in range(n):
            for c in range(n):
                x = (a, b, c)
                if r12(r13(r23(x))) != r23(r13(r12(x))):
                    bad = x
                    break
            if bad:
                break
        if bad:
            break
    rep.add("Yang-Baxter equation on triples", bad is None,
            bad and f"fails at {bad}")
    return rep


# ---------------------------------------------------------------------------
# braiding scalars
# ---------------------------------------------------------------------------

class BraidingData:
    """A braiding pair together with the scalar table c_{s,t} twisting
    the induced braiding, all values in Q(zeta_N)."""

    def __init__(self, bp: BraidingPair, N: int, c):
        n = bp.pair.Gamma.order
        if len(c) != n or any(len(row) != n for row in c):
            raise MalformedInput(f"scalar table must be {n}x{n}")
        self.bp = bp
        self.N = N
        table = []
        for row in c:
            out_row = []
            for v in row:
                if not isinstance(v, Cyclotomic):
                    raise MalformedInput(f"scalar table entry {v!r} is not a field element")
                out_row.append(embed(v, N) if v.N != N else v)
            table.append(out_row)
        self.c = table
        for s, row in enumerate(self.c):
            for t, v in enumerate(row):
                if v.is_zero():
                    raise ZeroValue(f"braiding scalar at ({s},{t}) is zero")

    @property
    def pair(self) -> MatchedPair:
        return self.bp.pair

    @property
    def phi(self) -> GroupHom:
        return self.bp.phi

    @property
    def psi(self) -> GroupHom:
        return self.bp.psi

    def value(self, s: int, t: int) -> Cyclotomic:
        return self.c[s][t]

    def at_conductor(self, M: int) -> "BraidingData":
        if M == self.N:
            return self
        if M % self.N:
            raise ConductorMismatch(f"{self.N} does not divide {M}")
        return BraidingData(self.bp, M, [[embed(v, M) for v in row] for row in self.c])

    def to_json(self) -> dict:
        return {
            "phi": list(self.bp.phi.map),
            "psi": list(self.bp.psi.map),
            "N": self.N,
            "c": [[v.to_json() for v in row] for row in self.c],
        }

    @classmethod
    def from_json(cls, mp: MatchedPair, data: dict) -> "BraidingData":
        for key in ("phi", "psi", "N", "c"):
            if key not in data:
                raise MalformedInput(f"braiding data JSON needs '{key}'")
        bp = braiding_pair_validate(mp, data["phi"], data["psi"])
        N = data["N"]
        if not isinstance(N, int) or N < 1:
            raise MalformedInput(f"bad conductor {N!r}")
        c = [[_parse_scalar(v, N) for v in row] for row in data["c"]]
        return cls(bp, N, c)

    def __repr__(self):
        return f"<braiding data N={self.N} over {self.bp!r}>"


def _parse_scalar(value, N: int) -> Cyclotomic:
    if isinstance(value, dict):
        c = Cyclotomic.from_json(value)
        if N % c.N:
            raise ConductorMismatch(f"entry conductor {c.N} does not divide {N}")
        return embed(c, N)
    if isinstance(value, int):
        return Cyclotomic.from_rational(value, N)
    raise MalformedInput(f"bad scalar entry {value!r}")


def scalar_braiding_check(ca, bp, c=None, N: int | None = None) -> CheckReport:
    """The three scalar hexagon families for a braiding candidate.

    Writing k(s,t) for the G-element s |x t and gamma, rho2 for the
    twisting scalars of the crossed action, the families assert that
    the blockwise braiding scalar c commutes with the action (family
    one, indexed by a group element and two degrees) and satisfies the
    two hexagon recursions (families two and three, indexed by three
    degrees).  All instances are checked; the first failure of each
    family is reported with its index tuple.

    bp may be a BraidingData bundle, or a BraidingPair with a separate
    table of scalars c (and N naming the intended conductor).
    """
    if isinstance(bp, BraidingData):
        bd = bp
    else:
        if c is None:
            raise MalformedInput("scalar table required alongside a bare braiding pair")
        if N is None:
            N = 1
            for row in c:
                for v in row:
                    if isinstance(v, Cyclotomic):
                        N = _lcm(N, v.N)
        bd = BraidingData(bp, N, c)
    mp = bd.pair
    if ca.pair is not mp and (ca.pair.lact != mp.lact or ca.pair.ract != mp.ract):
        raise MalformedInput("braiding data belongs to a different matched pair")
    M = _lcm(ca.N, bd.N)
    sigma = ca.cocycles.sigma
    tau = ca.cocycles.tau
    G, Gm = mp.G, mp.Gamma
    lact, ract = mp.lact, mp.ract
    phi, psi = bd.phi.map, bd.psi.map

    def c(s: int, t: int) -> Cyclotomic:
        return embed(bd.c[s][t], M) if bd.N != M else bd.c[s][t]

    def sg(s: int, g: int, h: int) -> Cyclotomic:
        v = sigma[s][g][h]
        return embed(v, M) if ca.N != M else v

    def tg(g: int, s: int, t: int) -> Cyclotomic:
        v = tau[g][s][t]
        return embed(v, M) if ca.N != M else v

    def k(s: int, t: int) -> int:
        return ract[Gm.inv(t)][phi[Gm.inv(s)]]

    rep = CheckReport()
    e = Gm.identity

    bad = None
    for s in Gm.elements():
        for t in Gm.elements():
            if Gm.mul(lact[t][k(s, t)], lact[s][psi[t]]) != Gm.mul(s, t):
                bad = (s, t)
                break
        if bad:
            break
    rep.add("braiding blocks preserve the total degree", bad is None,
            bad and f"fails at {bad}")

    bad = None
    if c(e, e) != 1:
        bad = (e, e)
    for t in Gm.elements():
        if bad:
            break
        if c(e, t) != 1 or c(t, e) != 1:
            bad = (e, t) if c(e, t) != 1 else (t, e)
    rep.add("unit row and column are one", bad is None,
            bad and f"fails at {bad}")

    bad = None
    for g in G.elements():
        for s in Gm.elements():
            for t in Gm.elements():
                tg_g = ract[t][g]
                s1 = lact[s][tg_g]
                t1 = lact[t][g]
                lhs = (
                    tg(g, s, t).inverse()
                    * c(s1, t1)
                    * sg(t, g, k(s1, t1)).inverse()
                    * sg(s, tg_g, psi[t1]).inverse()
                )
                t2 = lact[t][k(s, t)]
                s2 = lact[s][psi[t]]
                rhs = (
                    c(s, t)
                    * tg(g, t2, s2).inverse()
                    * sg(t, k(s, t), ract[s2][g]).inverse()
                    * sg(s, psi[t], g).inverse()
                )
                if lhs != rhs:
                    bad = (g, s, t)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("hexagon scalar family (1)", bad is None,
            bad and f"fails at (g,s,t)={bad}")

    bad = None
    for s in Gm.elements():
        for t in Gm.elements():
            for u in Gm.elements():
                tu_rot = Gm.inv(lact[Gm.inv(u)][phi[Gm.inv(t)]])  # (t x| u)^-1
                lhs = c(Gm.mul(s, t), u) * tg(psi[u], s, t).inverse()
                rhs = (
                    c(t, u)
                    * c(s, tu_rot)
                    * sg(u, k(t, u), k(s, tu_rot)).inverse()
                )
                if lhs != rhs:
                    bad = (s, t, u)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("hexagon scalar family (2)", bad is None,
            bad and f"fails at (s,t,u)={bad}")

    bad = None
    for s in Gm.elements():
        for t in Gm.elements():
            for u in Gm.elements():
                lhs = c(s, Gm.mul(t, u)) * tg(k(s, Gm.mul(t, u)), t, u).inverse()
                rhs = (
                    c(s, t)
                    * c(lact[s][psi[t]], u)
                    * sg(s, psi[t], psi[u]).inverse()
                )
                if lhs != rhs:
                    bad = (s, t, u)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("hexagon scalar family (3)", bad is None,
            bad and f"fails at (s,t,u)={bad}")
    return rep


def scalar_braiding_search(ca, bp: BraidingPair, N: int,
                           exponents=None, budget: int = 10 ** 6) -> list[BraidingData]:
    """All scalar tables with values in the chosen roots of unity that
    satisfy the three hexagon families, by depth-first assignment with
    early pruning.

    exponents selects the candidate values as powers of the primitive
    N-th root (default: all of them).  budget bounds the number of cell
    assignments tried.
    """
    mp = bp.pair
    Gm = mp.Gamma
    n = Gm.order
    e = Gm.identity
    M = _lcm(ca.N, N)
    if exponents is None:
        exponents = range(N)
    values = []
    for kk in exponents:
        v = embed(root_of_unity(N, kk % N), M)
        if v not in values:
            values.append(v)
    if not values:
        raise MalformedInput("empty candidate value set")

    cells = [(s, t) for s in Gm.elements() for t in Gm.elements()
             if s != e and t != e]
    order_of = {cell: i for i, cell in enumerate(cells)}
    one = Cyclotomic.one(M)

    c_table: list[list[Cyclotomic | None]] = [
        [one if (s == e or t == e) else None for t in range(n)]
        for s in range(n)
    ]

    instances = _scalar_instances(ca, bp, M)
    by_last: dict[int, list] = {}
    immediate = []
    for inst in instances:
        needed = [order_of[cell] for cell in inst.cells if cell in order_of]
        if needed:
            by_last.setdefault(max(needed), []).append(inst)
        else:
            immediate.append(inst)
    for inst in immediate:
        if not inst.holds(c_table):
            return []

    out: list[BraidingData] = []
    spent = 0

    def descend(idx: int):
        nonlocal spent
        if idx == len(cells):
            table = [[v for v in row] for row in c_table]
            out.append(BraidingData(bp, M, table))
            return
        s, t = cells[idx]
        for v in values:
            spent += 1
            if spent > budget:
                raise SearchBudgetExceeded(
                    f"braiding scalar search exceeded {budget} assignments"
                )
            c_table[s][t] = v
            if all(inst.holds(c_table) for inst in by_last.get(idx, ())):
                descend(idx + 1)
        c_table[s][t] = None

    descend(0)
    return out


class _Instance:
    """One scalar equation instance: product over lhs cells times a
    constant equals product over rhs cells times a constant."""

    __slots__ = ("lhs_cells", "rhs_cells", "lhs_const", "rhs_const", "cells")

    def __init__(self, lhs_cells, lhs_const, rhs_cells, rhs_const):
        self.lhs_cells = lhs_cells
        self.rhs_cells = rhs_cells
        self.lhs_const = lhs_const
        self.rhs_const = rhs_const
        self.cells = tuple(set(lhs_cells) | set(rhs_cells))

    def holds(self, c_table) -> bool:
        lhs = self.lhs_const
        for (s, t) in self.lhs_cells:
            lhs = lhs * c_table[s][t]
        rhs = self.rhs_const
        for (s, t) in self.rhs_cells:
            rhs = rhs * c_table[s][t]
        return lhs == rhs


def _scalar_instances(ca, bp: BraidingPair, M: int) -> list[_Instance]:
    mp = bp.pair
    G, Gm = mp.G, mp.Gamma
    lact, ract = mp.lact, mp.ract
    phi, psi = bp.phi.map, bp.psi.map
    sigma, tau = ca.cocycles.sigma, ca.cocycles.tau

    def sg(s, g, h):
        v = sigma[s][g][h]
        return embed(v, M) if v.N != M else v

    def tg(g, s, t):
        v = tau[g][s][t]
        return embed(v, M) if v.N != M else v

    def k(s, t):
        return ract[Gm.inv(t)][phi[Gm.inv(s)]]

    out = []
    for g in G.elements():
        for s in Gm.elements():
            for t in Gm.elements():
                tg_g = ract[t][g]
                s1, t1 = lact[s][tg_g], lact[t][g]
                t2, s2 = lact[t][k(s, t)], lact[s][psi[t]]
                lhs_const = (
                    tg(g, s, t).inverse()
                    * sg(t, g, k(s1, t1)).inverse()
                    * sg(s, tg_g, psi[t1]).inverse()
                )
                rhs_const = (
                    tg(g, t2, s2).inverse()
                    * sg(t, k(s, t), ract[s2][g]).inverse()
                    * sg(s, psi[t], g).inverse()
                )
                out.append(_Instance([(s1, t1)], lhs_const, [(s, t)], rhs_const))
    for s in Gm.elements():
        for t in Gm.elements():
            for u in Gm.elements():
                tu_rot = Gm.inv(lact[Gm.inv(u)][phi[Gm.inv(t)]])
                lhs_const = tg(psi[u], s, t).inverse()
                rhs_const = sg(u, k(t, u), k(s, tu_rot)).inverse()
                out.append(_Instance(
                    [(Gm.mul(s, t), u)], lhs_const,
                    [(t, u), (s, tu_rot)], rhs_const,
                ))
    for s in Gm.elements():
        for t in Gm.elements():
            for u in Gm.elements():
                tu = Gm.mul(t, u)
                lhs_const = tg(k(s, tu), t, u).inverse()
                rhs_const = sg(s, psi[t], psi[u]).inverse()
                out.append(_Instance(
                    [(s, tu)], lhs_const,
                    [(s, t), (lact[s][psi[t]], u)], rhs_const,
                ))
    return out


def _lcm(a: int, b: int) -> int:
    g = a
    x = b
    while x:
        g, x = x, g % x
    return a // g * b
