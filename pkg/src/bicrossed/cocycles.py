"""The twisting-scalar pair (sigma, tau) on a matched pair.

sigma assigns a nonzero scalar to (s, g, h): a family, indexed by the
grading group, of 2-cocycle-like tables on the group.  tau assigns a
scalar to (g, s, t): a family indexed by the group of tables on the
grading group.  Seven condition families tie them to each other and to
the two actions; they are exactly what the crossed product algebra and
crossed coproduct coalgebra on k^Gamma (x) kG need in order to form a
bialgebra (see the hopf module, where each family is matched to the
axiom it powers).

Indexing convention, pinned everywhere: sigma[s][g][h] and tau[g][s][t].

Conditions (e the relevant identity):
  C1  sigma_{s<|g}(h, l) sigma_s(g, hl) = sigma_s(g, h) sigma_s(gh, l)
  C2  sigma_s(e, g) = sigma_s(g, e) = 1
  C3  tau_g(st, u) tau_{u|>g}(s, t) = tau_g(t, u) tau_g(s, tu)
  C4  tau_g(e, s) = tau_g(s, e) = 1
  C5  sigma_{st}(g, h) tau_{gh}(s, t)
        = sigma_s(t|>g, (t<|g)|>h) sigma_t(g, h) tau_g(s, t) tau_h(s<|(t|>g), t<|g)
  C6  sigma_e(g, h) = 1
  C7  tau_e(s, t) = 1
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    CocycleViolation,
    ConductorMismatch,
    MalformedInput,
    SearchBudgetExceeded,
    ZeroValue,
)
from .matched_pair import MatchedPair
from .report import CheckReport
from .scalars import Cyclotomic, embed, root_of_unity


class CocyclePair:
    def __init__(
        self,
        pair: MatchedPair,
        N: int,
        sigma: Sequence[Sequence[Sequence[Cyclotomic]]],
        tau: Sequence[Sequence[Sequence[Cyclotomic]]],
        check: bool = True,
    ):
        self.pair = pair
        self.N = N
        ns, ng = pair.Gamma.order, pair.G.order
        self.sigma = _normalize_table(sigma, (ns, ng, ng), N, "sigma")
        self.tau = _normalize_table(tau, (ng, ns, ns), N, "tau")
        if check:
            rep = self.validate()
            if not rep.ok:
                bad = rep.failures()[0]
                err = ZeroValue if bad.name == "values nonzero" else CocycleViolation
                raise err(f"{bad.name}: {bad.witness}")

    def sigma_val(self, s: int, g: int, h: int) -> Cyclotomic:
        return self.sigma[s][g][h]

    def tau_val(self, g: int, s: int, t: int) -> Cyclotomic:
        return self.tau[g][s][t]

    def is_trivial(self) -> bool:
        one = Cyclotomic.one(self.N)
        return all(
            v == one for tbl in (self.sigma, self.tau)
            for plane in tbl for row in plane for v in row
        )

    # -- validation ---------------------------------------------------------

    def validate(self) -> CheckReport:
        mp = self.pair
        G, Gm = mp.G, mp.Gamma
        eg, es = G.identity, Gm.identity
        one = Cyclotomic.one(self.N)
        rep = CheckReport()

        zero_at = None
        for name, tbl in (("sigma", self.sigma), ("tau", self.tau)):
            for i, plane in enumerate(tbl):
                for j, row in enumerate(plane):
                    for k, v in enumerate(row):
                        if v.is_zero():
                            zero_at = f"{name}[{i}][{j}][{k}]"
                            break
                    if zero_at:
                        break
                if zero_at:
                    break
            if zero_at:
                break
        rep.add("values nonzero", zero_at is None, zero_at and f"zero at {zero_at}")
        if zero_at is not None:
            return rep  # everything else divides by these values' nonzeroness

        bad = None
        for s in Gm.elements():
            for g in G.elements():
                sg = mp.lact[s][g]
                for h in G.elements():
                    gh = G.mul(g, h)
                    for l in G.elements():
                        lhs = self.sigma[sg][h][l] * self.sigma[s][g][G.mul(h, l)]
                        rhs = self.sigma[s][g][h] * self.sigma[s][gh][l]
                        if lhs != rhs:
                            bad = (s, g, h, l)
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("sigma two-cocycle", bad is None, bad and f"fails at (s,g,h,l)={bad}")

        bad = None
        for s in Gm.elements():
            for g in G.elements():
                if self.sigma[s][eg][g] != one or self.sigma[s][g][eg] != one:
                    bad = (s, g)
                    break
            if bad:
                break
        rep.add("sigma normalized", bad is None, bad and f"fails at (s,g)={bad}")

        bad = None
        for g in G.elements():
            for s in Gm.elements():
                for t in Gm.elements():
                    st = Gm.mul(s, t)
                    for u in Gm.elements():
                        lhs = self.tau[g][st][u] * self.tau[mp.ract[u][g]][s][t]
                        rhs = self.tau[g][t][u] * self.tau[g][s][Gm.mul(t, u)]
                        if lhs != rhs:
                            bad = (g, s, t, u)
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("tau two-cocycle", bad is None, bad and f"fails at (g,s,t,u)={bad}")

        bad = None
        for g in G.elements():
            for s in Gm.elements():
                if self.tau[g][es][s] != one or self.tau[g][s][es] != one:
                    bad = (g, s)
                    break
            if bad:
                break
        rep.add("tau normalized", bad is None, bad and f"fails at (g,s)={bad}")

        bad = None
        for g in G.elements():
            for h in G.elements():
                gh = G.mul(g, h)
                for s in Gm.elements():
                    for t in Gm.elements():
                        st = Gm.mul(s, t)
                        tg = mp.ract[t][g]          # t |> g
                        t_g = mp.lact[t][g]         # t <| g
                        lhs = self.sigma[st][g][h] * self.tau[gh][s][t]
                        rhs = (
                            self.sigma[s][tg][mp.ract[t_g][h]]
                            * self.sigma[t][g][h]
                            * self.tau[g][s][t]
                            * self.tau[h][mp.lact[s][tg]][t_g]
                        )
                        if lhs != rhs:
                            bad = (g, h, s, t)
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("sigma-tau compatibility", bad is None, bad and f"fails at (g,h,s,t)={bad}")

        bad = None
        for g in G.elements():
            for h in G.elements():
                if self.sigma[es][g][h] != one:
                    bad = (g, h)
                    break
            if bad:
                break
        rep.add("neutral grading component", bad is None,
                bad and f"sigma at identity grading is not 1 at (g,h)={bad}")

        bad = None
        for s in Gm.elements():
            for t in Gm.elements():
                if self.tau[eg][s][t] != one:
                    bad = (s, t)
                    break
            if bad:
                break
        rep.add("neutral group component", bad is None,
                bad and f"tau at identity group element is not 1 at (s,t)={bad}")

        return rep

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        one = Cyclotomic.one(self.N)
        sigma = {}
        for s, plane in enumerate(self.sigma):
            for g, row in enumerate(plane):
                for h, v in enumerate(row):
                    if v != one:
                        sigma[f"{s},{g},{h}"] = v.to_json()
        tau = {}
        for g, plane in enumerate(self.tau):
            for s, row in enumerate(plane):
                for t, v in enumerate(row):
                    if v != one:
                        tau[f"{g},{s},{t}"] = v.to_json()
        return {"N": self.N, "sigma": sigma, "tau": tau}

    @classmethod
    def from_json(cls, pair: MatchedPair, data: dict, check: bool = True) -> "CocyclePair":
        if "N" not in data:
            raise MalformedInput("cocycle JSON needs 'N'")
        N = data["N"]
        if not isinstance(N, int) or N < 1:
            raise MalformedInput(f"bad conductor {N!r}")
        ns, ng = pair.Gamma.order, pair.G.order
        one = Cyclotomic.one(N)
        sigma = [[[one] * ng for _ in range(ng)] for _ in range(ns)]
        tau = [[[one] * ns for _ in range(ns)] for _ in range(ng)]
        for key, value in data.get("sigma", {}).items():
            s, g, h = _parse_key(key, (ns, ng, ng), "sigma")
            sigma[s][g][h] = _parse_value(value, N)
        for key, value in data.get("tau", {}).items():
            g, s, t = _parse_key(key, (ng, ns, ns), "tau")
            tau[g][s][t] = _parse_value(value, N)
        return cls(pair, N, sigma, tau, check=check)

    def __repr__(self):
        kind = "trivial" if self.is_trivial() else "nontrivial"
        return f"<{kind} cocycle pair over Q(zeta_{self.N})>"


def _parse_key(key: str, bounds: tuple[int, int, int], name: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in key.split(","))
    except ValueError:
        raise MalformedInput(f"{name} key {key!r} is not 'i,j,k'") from None
    if len(parts) != 3 or any(not (0 <= p < b) for p, b in zip(parts, bounds)):
        raise MalformedInput(f"{name} key {key!r} out of range for {bounds}")
    return parts


def _parse_value(value, N: int) -> Cyclotomic:
    if isinstance(value, int):
        return root_of_unity(N, value)
    if isinstance(value, dict):
        c = Cyclotomic.from_json(value)
        return embed(c, N)
    raise MalformedInput(f"bad scalar value {value!r}")


def _normalize_table(table, shape: tuple[int, int, int], N: int, name: str):
    n0, n1, n2 = shape
    if len(table) != n0:
        raise MalformedInput(f"{name}: {len(table)} planes, expected {n0}")
    out = []
    for plane in table:
        if len(plane) != n1:
            raise MalformedInput(f"{name}: plane with {len(plane)} rows, expected {n1}")
        out_plane = []
        for row in plane:
            if len(row) != n2:
                raise MalformedInput(f"{name}: row with {len(row)} entries, expected {n2}")
            out_row = []
            for v in row:
                if isinstance(v, int):
                    v = Cyclotomic.from_rational(v, N)
                elif not isinstance(v, Cyclotomic):
                    raise MalformedInput(f"{name}: entry {v!r} is not a scalar")
                out_row.append(embed(v, N) if v.N != N else v)
            out_plane.append(tuple(out_row))
        out.append(tuple(out_plane))
    return tuple(out)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def cocycle_pair_validate(mp: MatchedPair, sigma, tau, N: int) -> CocyclePair:
    """Exhaustively verified constructor; raises on the first failure."""
    return CocyclePair(mp, N, sigma, tau, check=True)


def trivial_cocycles(mp: MatchedPair, N: int = 1) -> CocyclePair:
    one = Cyclotomic.one(N)
    ns, ng = mp.Gamma.order, mp.G.order
    sigma = [[[one] * ng for _ in range(ng)] for _ in range(ns)]
    tau = [[[one] * ns for _ in range(ns)] for _ in range(ng)]
    return CocyclePair(mp, N, sigma, tau, check=False)


def embed_cocycles(cp: CocyclePair, M: int) -> CocyclePair:
    """The same pair with all values rewritten in Q(zeta_M).

    M must be a multiple of the current conductor; values are unchanged
    as field elements, so no re-validation is needed.
    """
    if M % cp.N:
        raise ConductorMismatch(f"{cp.N} does not divide {M}")
    if M == cp.N:
        return cp
    sigma = [[[embed(v, M) for v in row] for row in plane] for plane in cp.sigma]
    tau = [[[embed(v, M) for v in row] for row in plane] for plane in cp.tau]
    return CocyclePair(cp.pair, M, sigma, tau, check=False)


def pointwise_product(a: CocyclePair, b: CocyclePair) -> CocyclePair:
    """Cell-by-cell product of two pairs over the same matched pair.

    The result is re-validated in full rather than trusted: the cocycle
    families multiply, and re-checking costs nothing at these sizes.
    """
    if a.pair.lact != b.pair.lact or a.pair.ract != b.pair.ract:
        raise MalformedInput("pointwise product needs the same matched pair")
    N = _lcm(a.N, b.N)
    ns, ng = a.pair.Gamma.order, a.pair.G.order
    sigma = [
        [[embed(a.sigma[s][g][h], N) * embed(b.sigma[s][g][h], N)
          for h in range(ng)] for g in range(ng)]
        for s in range(ns)
    ]
    tau = [
        [[embed(a.tau[g][s][t], N) * embed(b.tau[g][s][t], N)
          for t in range(ns)] for s in range(ns)]
        for g in range(ng)
    ]
    return CocyclePair(a.pair, N, sigma, tau, check=True)


def _lcm(a: int, b: int) -> int:
    x, y = a, b
    while y:
        x, y = y, x % y
    return a // x * b


# ---------------------------------------------------------------------------
# bounded enumeration
# ---------------------------------------------------------------------------

def enumerate_cocycle_pairs(
    mp: MatchedPair,
    N: int,
    value_set_exponents: Iterable[int] | None = None,
    budget: int = 10 ** 6,
) -> list[CocyclePair]:
    """All pairs with values in {zeta_N^k : k in value_set_exponents}.

    Normalization-forced cells (any index at an identity) are pinned to
    1 and removed from the search.  Every condition instance then reads,
    on exponents, as a signed sum over the remaining free cells being
    0 mod N, so the whole search runs in integer arithmetic.  Depth
    first over cells, tau cells before sigma cells; a condition is
    checked as soon as its last free cell is assigned.  The budget
    counts assignments tried, and SearchBudgetExceeded fires when the
    count passes it.  Output order is lexicographic in the assignment
    vector, so it is deterministic.
    """
    if value_set_exponents is None:
        values = list(range(N))
    else:
        values = sorted({k % N for k in value_set_exponents})
        if not values:
            raise MalformedInput("empty value set")
    G, Gm = mp.G, mp.Gamma
    eg, es = G.identity, Gm.identity

    # free cells: tau (g,s,t) then sigma (s,g,h), identities excluded
    cells: dict[tuple, int] = {}
    for g in G.elements():
        if g == eg:
            continue
        for s in Gm.elements():
            if s == es:
                continue
            for t in Gm.elements():
                if t != es:
                    cells[("tau", g, s, t)] = len(cells)
    for s in Gm.elements():
        if s == es:
            continue
        for g in G.elements():
            if g == eg:
                continue
            for h in G.elements():
                if h != eg:
                    cells[("sigma", s, g, h)] = len(cells)
    n_cells = len(cells)

    def sigma_ref(s, g, h):
        return cells.get(("sigma", s, g, h))  # None when pinned to 1

    def tau_ref(g, s, t):
        return cells.get(("tau", g, s, t))

    # build condition instances as {cell: coefficient}
    seen_conditions: set[tuple] = set()
    buckets: list[list[tuple[tuple[int, ...], tuple[int, ...]]]] = [
        [] for _ in range(n_cells)
    ]

    def record(terms: list[tuple[int | None, int]]):
        acc: dict[int, int] = {}
        for ref, coeff in terms:
            if ref is not None:
                acc[ref] = acc.get(ref, 0) + coeff
        acc = {r: c % N for r, c in acc.items() if c % N != 0}
        if not acc:
            return
        key = tuple(sorted(acc.items()))
        if key in seen_conditions:
            return
        seen_conditions.add(key)
        refs = tuple(sorted(acc))
        coeffs = tuple(acc[r] for r in refs)
        buckets[refs[-1]].append((refs, coeffs))

    for s in Gm.elements():
        for g in G.elements():
            sg = mp.lact[s][g]
            for h in G.elements():
                gh = G.mul(g, h)
                for l in G.elements():
                    record([
                        (sigma_ref(sg, h, l), 1),
                        (sigma_ref(s, g, G.mul(h, l)), 1),
                        (sigma_ref(s, g, h), -1),
                        (sigma_ref(s, gh, l), -1),
                    ])
    for g in G.elements():
        for s in Gm.elements():
            for t in Gm.elements():
                st = Gm.mul(s, t)
                for u in Gm.elements():
                    record([
                        (tau_ref(g, st, u), 1),
                        (tau_ref(mp.ract[u][g], s, t), 1),
                        (tau_ref(g, t, u), -1),
                        (tau_ref(g, s, Gm.mul(t, u)), -1),
                    ])
    for g in G.elements():
        for h in G.elements():
            gh = G.mul(g, h)
            for s in Gm.elements():
                for t in Gm.elements():
                    st = Gm.mul(s, t)
                    tg = mp.ract[t][g]
                    t_g = mp.lact[t][g]
                    record([
                        (sigma_ref(st, g, h), 1),
                        (tau_ref(gh, s, t), 1),
                        (sigma_ref(s, tg, mp.ract[t_g][h]), -1),
                        (sigma_ref(t, g, h), -1),
                        (tau_ref(g, s, t), -1),
                        (tau_ref(h, mp.lact[s][tg], t_g), -1),
                    ])

    # depth-first search with per-cell condition buckets
    assignment = [0] * n_cells
    solutions: list[list[int]] = []
    visited = 0

    def descend(k: int):
        nonlocal visited
        if k == n_cells:
            solutions.append(list(assignment))
            return
        for v in values:
            visited += 1
            if visited > budget:
                raise SearchBudgetExceeded(
                    f"visited more than {budget} search nodes"
                )
            assignment[k] = v
            ok = True
            for refs, coeffs in buckets[k]:
                total = 0
                for r, c in zip(refs, coeffs):
                    total += c * assignment[r]
                if total % N != 0:
                    ok = False
                    break
            if ok:
                descend(k + 1)

    if n_cells == 0:
        # everything pinned; the trivial tables are the one candidate
        solutions.append([])
    else:
        descend(0)

    out = []
    rev = {i: cell for cell, i in cells.items()}
    ns, ng = Gm.order, G.order
    for sol in solutions:
        one = Cyclotomic.one(N)
        sigma = [[[one] * ng for _ in range(ng)] for _ in range(ns)]
        tau = [[[one] * ns for _ in range(ns)] for _ in range(ng)]
        for i, k in enumerate(sol):
            kind, a, b, c = rev[i]
            if kind == "sigma":
                sigma[a][b][c] = root_of_unity(N, k)
            else:
                tau[a][b][c] = root_of_unity(N, k)
        out.append(CocyclePair(mp, N, sigma, tau, check=False))
    return out
