"""Hopf algebras as exact structure constants, and the bicrossed product.

The central construction: given a matched pair and a twisting-scalar
pair on it, the space with basis {e_s # g : s in Gamma, g in G} carries

    (e_s # g)(e_t # h) = [s <| g == t] sigma_s(g, h) e_s # gh
    Delta(e_s # g)     = sum over tu = s of tau_g(t, u) e_t # (u |> g) (x) e_u # g
    unit               = sum over s of e_s # e
    counit(e_s # g)    = [s == e]

making it a Hopf algebra.  One note on the multiplication: the bracket
compares s <| g with t; both live in the grading group.  Any other
pairing of the indices is type-incoherent, and the associativity
checker accepts only this reading.

Everything is stored sparsely: mult maps a basis pair to its (at most
few) terms, comult maps a basis index to its tensor terms.  The axiom
checkers work on those dictionaries directly, so they apply to any
algebra given by structure constants, not only the bicrossed one.

Basis indexing for the bicrossed product: (s, g) -> s * |G| + g.
"""

from __future__ import annotations

from typing import Sequence

from . import linalg
from .cocycles import CocyclePair
from .errors import (
    MalformedInput,
    NoAntipode,
    NotAModule,
    NotInvertible,
    NotUnique,
    InternalCheckFailed,
)
from .linalg import Matrix, Vector, kron, mat_eq, mat_identity, mat_is_identity, mat_mul
from .matched_pair import MatchedPair
from .report import CheckReport
from .scalars import Cyclotomic

MultTable = dict[tuple[int, int], tuple[tuple[int, Cyclotomic], ...]]
ComultTable = dict[int, tuple[tuple[tuple[int, int], Cyclotomic], ...]]
TensorElt = dict[tuple[int, ...], Cyclotomic]


class HopfAlgebra:
    """A (candidate) Hopf algebra given by exact structure constants.

    The antipode slot starts empty; solve_antipode fills it.  Nothing
    here assumes the axioms hold: verify_bialgebra reports on them.
    """

    def __init__(
        self,
        dim: int,
        N: int,
        mult: MultTable,
        comult: ComultTable,
        unit: Vector,
        counit: Vector,
        labels: Sequence[str] | None = None,
    ):
        self.dim = dim
        self.N = N
        self.mult = {
            ij: tuple((k, c) for k, c in terms if not c.is_zero())
            for ij, terms in mult.items()
        }
        self.mult = {ij: terms for ij, terms in self.mult.items() if terms}
        self.comult = {
            i: tuple((jk, c) for jk, c in terms if not c.is_zero())
            for i, terms in comult.items()
        }
        self.unit = list(unit)
        self.counit = list(counit)
        self.labels = tuple(labels) if labels else tuple(f"x{i}" for i in range(dim))
        self.antipode: Matrix | None = None
        # populated by build_bicrossed so the module category can be
        # regraded without re-deriving the construction
        self.pair = None
        self.cocycles = None

    # -- arithmetic on elements (dense coefficient vectors) -------------------

    def zero(self) -> Cyclotomic:
        return Cyclotomic.zero(self.N)

    def one_elt(self) -> Vector:
        return list(self.unit)

    def mul_basis(self, i: int, j: int) -> tuple[tuple[int, Cyclotomic], ...]:
        return self.mult.get((i, j), ())

    def mul_vec(self, x: Vector, y: Vector) -> Vector:
        out = [self.zero()] * self.dim
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                for k, c in self.mul_basis(i, j):
                    out[k] = out[k] + xi * yj * c
        return out

    def comult_basis(self, i: int) -> tuple[tuple[tuple[int, int], Cyclotomic], ...]:
        return self.comult.get(i, ())

    def counit_vec(self, x: Vector) -> Cyclotomic:
        acc = self.zero()
        for xi, ci in zip(x, self.counit):
            if not xi.is_zero() and not ci.is_zero():
                acc = acc + xi * ci
        return acc

    def left_mult_matrix(self, i: int) -> Matrix:
        out = [[self.zero()] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, c in self.mul_basis(i, j):
                out[k][j] = out[k][j] + c
        return out

    # -- sparse tensor-power arithmetic ---------------------------------------

    def tensor_mul(self, a: TensorElt, b: TensorElt) -> TensorElt:
        """Product in H^(x)n of two sparse tensor elements."""
        out: TensorElt = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                partial = [((), ca * cb)]
                for pa, pb in zip(ka, kb):
                    nxt = []
                    for key, coeff in partial:
                        for k, c in self.mul_basis(pa, pb):
                            nxt.append((key + (k,), coeff * c))
                    partial = nxt
                    if not partial:
                        break
                for key, coeff in partial:
                    prev = out.get(key)
                    out[key] = coeff if prev is None else prev + coeff
        return {k: v for k, v in out.items() if not v.is_zero()}

    def tensor_unit(self, n: int) -> TensorElt:
        out: TensorElt = {(): Cyclotomic.one(self.N)}
        for _ in range(n):
            nxt: TensorElt = {}
            for key, coeff in out.items():
                for u, cu in enumerate(self.unit):
                    if not cu.is_zero():
                        nxt[key + (u,)] = coeff * cu
            out = nxt
        return out

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        mult = []
        for (i, j), terms in sorted(self.mult.items()):
            for k, c in terms:
                mult.append([i, j, k, c.to_json()])
        comult = []
        for i, terms in sorted(self.comult.items()):
            for (j, k), c in terms:
                comult.append([i, j, k, c.to_json()])
        out = {
            "dim": self.dim,
            "basis": list(self.labels),
            "mult": mult,
            "comult": comult,
            "unit": [c.to_json() for c in self.unit],
            "counit": [c.to_json() for c in self.counit],
        }
        if self.antipode is not None:
            out["antipode"] = [[c.to_json() for c in row] for row in self.antipode]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "HopfAlgebra":
        for key in ("dim", "mult", "comult", "unit", "counit"):
            if key not in data:
                raise MalformedInput(f"algebra JSON needs {key!r}")
        dim = data["dim"]
        if not isinstance(dim, int) or dim < 1:
            raise MalformedInput(f"bad dimension {dim!r}")
        unit = [Cyclotomic.from_json(c) for c in data["unit"]]
        counit = [Cyclotomic.from_json(c) for c in data["counit"]]
        if len(unit) != dim or len(counit) != dim:
            raise MalformedInput("unit/counit length differs from dim")
        N = 1
        for c in unit + counit:
            N = _lcm(N, c.N)
        mult: dict = {}
        for entry in data["mult"]:
            i, j, k, c = entry
            _check_index(i, dim), _check_index(j, dim), _check_index(k, dim)
            c = Cyclotomic.from_json(c)
            N = _lcm(N, c.N)
            mult.setdefault((i, j), []).append((k, c))
        comult: dict = {}
        for entry in data["comult"]:
            i, j, k, c = entry
            _check_index(i, dim), _check_index(j, dim), _check_index(k, dim)
            c = Cyclotomic.from_json(c)
            N = _lcm(N, c.N)
            comult.setdefault(i, []).append(((j, k), c))
        alg = cls(
            dim, N,
            {ij: tuple((k, _embed(c, N)) for k, c in terms)
             for ij, terms in mult.items()},
            {i: tuple((jk, _embed(c, N)) for jk, c in terms)
             for i, terms in comult.items()},
            [_embed(c, N) for c in unit],
            [_embed(c, N) for c in counit],
            labels=data.get("basis"),
        )
        if "antipode" in data:
            s = data["antipode"]
            if len(s) != dim or any(len(row) != dim for row in s):
                raise MalformedInput("antipode matrix shape mismatch")
            alg.antipode = [[_embed(Cyclotomic.from_json(c), N) for c in row]
                            for row in s]
        return alg

    def __repr__(self):
        return f"<algebra dim={self.dim} over Q(zeta_{self.N})>"


def _check_index(i, dim: int) -> None:
    if not isinstance(i, int) or not (0 <= i < dim):
        raise MalformedInput(f"basis index {i!r} out of range 0..{dim - 1}")


def _lcm(a: int, b: int) -> int:
    x, y = a, b
    while y:
        x, y = y, x % y
    return a // x * b


def _embed(c: Cyclotomic, N: int) -> Cyclotomic:
    from .scalars import embed
    return embed(c, N) if c.N != N else c


# ---------------------------------------------------------------------------
# the bicrossed product
# ---------------------------------------------------------------------------

def build_bicrossed(mp: MatchedPair, cp: CocyclePair) -> HopfAlgebra:
    """The twisted product-coproduct structure on k^Gamma (x) kG."""
    if cp.pair is not mp and (cp.pair.lact != mp.lact or cp.pair.ract != mp.ract):
        raise MalformedInput("cocycle pair was built over a different matched pair")
    G, Gm = mp.G, mp.Gamma
    ng, ns = G.order, Gm.order
    dim = ng * ns
    N = cp.N

    def idx(s: int, g: int) -> int:
        return s * ng + g

    mult: MultTable = {}
    for s in Gm.elements():
        for g in G.elements():
            sg = mp.lact[s][g]
            for t in Gm.elements():
                for h in G.elements():
                    if sg == t:
                        c = cp.sigma[s][g][h]
                        mult[(idx(s, g), idx(t, h))] = ((idx(s, G.mul(g, h)), c),)

    comult: ComultTable = {}
    for s in Gm.elements():
        for g in G.elements():
            terms = []
            for t in Gm.elements():
                for u in Gm.elements():
                    if Gm.mul(t, u) == s:
                        terms.append((
                            (idx(t, mp.ract[u][g]), idx(u, g)),
                            cp.tau[g][t][u],
                        ))
            comult[idx(s, g)] = tuple(terms)

    one = Cyclotomic.one(N)
    zero = Cyclotomic.zero(N)
    unit = [zero] * dim
    for s in Gm.elements():
        unit[idx(s, G.identity)] = one
    counit = [zero] * dim
    for g in G.elements():
        counit[idx(Gm.identity, g)] = one

    labels = [
        f"e_{Gm.label(i // ng)}#{G.label(i % ng)}" for i in range(dim)
    ]
    H = HopfAlgebra(dim, N, mult, comult, unit, counit, labels=labels)
    H.pair = mp
    H.cocycles = cp
    return H


def bicrossed_index(mp: MatchedPair, s: int, g: int) -> int:
    return s * mp.G.order + g


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------

def _vec_eq(a: Vector, b: Vector) -> bool:
    return all((x - y).is_zero() for x, y in zip(a, b))


def verify_bialgebra(H: HopfAlgebra) -> CheckReport:
    """All bialgebra axioms, each reported with its first witness."""
    rep = CheckReport()
    dim = H.dim
    zero = H.zero()

    bad = None
    for i in range(dim):
        for j in range(dim):
            ij = {k: c for k, c in H.mul_basis(i, j)}
            for k in range(dim):
                left: dict[int, Cyclotomic] = {}
                for p, c in ij.items():
                    for q, d in H.mul_basis(p, k):
                        left[q] = left.get(q, zero) + c * d
                right: dict[int, Cyclotomic] = {}
                for p, c in H.mul_basis(j, k):
                    for q, d in H.mul_basis(i, p):
                        right[q] = right.get(q, zero) + c * d
                if not _dict_eq(left, right):
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("associative", bad is None, bad and f"fails at basis triple {bad}")

    bad = None
    basis_vecs = [_basis_vec(H, i) for i in range(dim)]
    for i in range(dim):
        if not _vec_eq(H.mul_vec(H.unit, basis_vecs[i]), basis_vecs[i]) or \
           not _vec_eq(H.mul_vec(basis_vecs[i], H.unit), basis_vecs[i]):
            bad = i
            break
    rep.add("unital", bad is None, bad is not None and f"fails at basis {bad}")

    bad = None
    for i in range(dim):
        left: TensorElt = {}
        right: TensorElt = {}
        for (j, k), c in H.comult_basis(i):
            for (a, b), d in H.comult_basis(j):
                key = (a, b, k)
                left[key] = left.get(key, zero) + c * d
            for (a, b), d in H.comult_basis(k):
                key = (j, a, b)
                right[key] = right.get(key, zero) + c * d
        if not _dict_eq(left, right):
            bad = i
            break
    rep.add("coassociative", bad is None, bad is not None and f"fails at basis {bad}")

    bad = None
    for i in range(dim):
        left_v = [zero] * dim
        right_v = [zero] * dim
        for (j, k), c in H.comult_basis(i):
            left_v[k] = left_v[k] + c * H.counit[j]
            right_v[j] = right_v[j] + c * H.counit[k]
        if not _vec_eq(left_v, basis_vecs[i]) or not _vec_eq(right_v, basis_vecs[i]):
            bad = i
            break
    rep.add("counital", bad is None, bad is not None and f"fails at basis {bad}")

    bad = None
    for i in range(dim):
        for j in range(dim):
            lhs: TensorElt = {}
            for k, c in H.mul_basis(i, j):
                for (a, b), d in H.comult_basis(k):
                    key = (a, b)
                    lhs[key] = lhs.get(key, zero) + c * d
            di = {jk: c for jk, c in H.comult_basis(i)}
            dj = {jk: c for jk, c in H.comult_basis(j)}
            rhs = H.tensor_mul(di, dj)
            if not _dict_eq(lhs, rhs):
                bad = (i, j)
                break
        if bad:
            break
    rep.add("Δ multiplicative", bad is None, bad and f"fails at basis pair {bad}")

    delta_unit: TensorElt = {}
    for i, c in enumerate(H.unit):
        if c.is_zero():
            continue
        for (j, k), d in H.comult_basis(i):
            key = (j, k)
            delta_unit[key] = delta_unit.get(key, zero) + c * d
    unit_unit = H.tensor_unit(2)
    rep.add("Δ unital", _dict_eq(delta_unit, unit_unit),
            "Δ(1) differs from 1⊗1")

    bad = None
    for i in range(dim):
        for j in range(dim):
            lhs_c = zero
            for k, c in H.mul_basis(i, j):
                lhs_c = lhs_c + c * H.counit[k]
            if lhs_c != H.counit[i] * H.counit[j]:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("ε multiplicative", bad is None, bad and f"fails at basis pair {bad}")

    rep.add("ε unital", H.counit_vec(H.unit) == 1, "ε(1) != 1")
    return rep


def _basis_vec(H: HopfAlgebra, i: int) -> Vector:
    v = [H.zero()] * H.dim
    v[i] = Cyclotomic.one(H.N)
    return v


def _dict_eq(a: dict, b: dict) -> bool:
    for k, v in a.items():
        w = b.get(k)
        if w is None:
            if not v.is_zero():
                return False
        elif v != w:
            return False
    for k, w in b.items():
        if k not in a and not w.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# antipode
# ---------------------------------------------------------------------------

def solve_antipode(H: HopfAlgebra) -> Matrix:
    """Solve m (id (x) S) Delta = unit . counit for the matrix of S.

    The system is assembled over all basis elements and target
    coordinates, then solved by unit propagation (each equation whose
    unknowns all but one cancel determines that unknown); whatever
    remains goes through dense elimination.  Both antipode axioms are
    re-verified on the result, so a solution that only satisfies the
    side we solved for is rejected rather than returned.
    """
    dim, zero = H.dim, H.zero()
    # unknown S[p][k] has id p * dim + k
    eqs: list[tuple[dict[int, Cyclotomic], Cyclotomic]] = []
    for i in range(dim):
        rows: list[dict[int, Cyclotomic]] = [dict() for _ in range(dim)]
        for (j, k), c in H.comult_basis(i):
            for p in range(dim):
                for q, m in H.mul_basis(j, p):
                    key = p * dim + k
                    row = rows[q]
                    row[key] = row.get(key, zero) + c * m
        for q in range(dim):
            rhs = H.counit[i] * H.unit[q]
            if rows[q] or not rhs.is_zero():
                eqs.append((rows[q], rhs))

    values: dict[int, Cyclotomic] = {}
    pending = eqs
    while True:
        progressed = False
        still = []
        for row, rhs in pending:
            unknown = None
            acc = rhs
            degenerate = False
            for key, coeff in row.items():
                if key in values:
                    acc = acc - coeff * values[key]
                elif unknown is None:
                    unknown = (key, coeff)
                else:
                    degenerate = True
                    break
            if degenerate:
                still.append((row, rhs))
            elif unknown is None:
                if not acc.is_zero():
                    raise NoAntipode("inconsistent antipode system")
                progressed = True
            else:
                key, coeff = unknown
                values[key] = acc / coeff
                progressed = True
        pending = still
        if not pending or not progressed:
            break

    if pending:
        # dense fallback on the remaining coupled subsystem
        remaining = sorted({k for row, _ in pending for k in row if k not in values})
        col_of = {k: c for c, k in enumerate(remaining)}
        a_rows, b_vals = [], []
        for row, rhs in pending:
            arow = [zero] * len(remaining)
            acc = rhs
            for key, coeff in row.items():
                if key in values:
                    acc = acc - coeff * values[key]
                else:
                    arow[col_of[key]] = arow[col_of[key]] + coeff
            a_rows.append(arow)
            b_vals.append(acc)
        try:
            solved = linalg.solve_right(a_rows, b_vals)
        except linalg.NoSolution:
            raise NoAntipode("inconsistent antipode system") from None
        except linalg.Underdetermined:
            raise NotUnique("antipode system is underdetermined") from None
        for key, val in zip(remaining, solved):
            values[key] = val

    if len(values) < dim * dim:
        raise NotUnique(
            f"{dim * dim - len(values)} antipode entries are unconstrained"
        )
    S = [[values[p * dim + k] for k in range(dim)] for p in range(dim)]

    rep = verify_antipode(H, S)
    if not rep.ok:
        raise NoAntipode(
            "solved one side but an axiom still fails: "
            + "; ".join(c.name for c in rep.failures())
        )
    H.antipode = S
    return S


def closed_form_antipode(H: HopfAlgebra) -> Matrix:
    """Antipode of a crossed-product algebra, read off without solving.

    Available only on algebras that still carry their construction data
    (build_bicrossed attaches it).  On the standard basis the antipode
    is a scaled permutation: the basis index moves by inversion twisted
    through both actions, and the scale is the inverse of one value
    from each scalar family.  The result is verified before being
    stored, so a bad cocycle table cannot smuggle in a wrong matrix.
    """
    mp, cp = H.pair, H.cocycles
    if mp is None or cp is None:
        raise MalformedInput("algebra does not carry its construction data")
    G, Gm = mp.G, mp.Gamma
    ng = G.order
    S = [[H.zero()] * H.dim for _ in range(H.dim)]
    for u in Gm.elements():
        for g in G.elements():
            ui = Gm.inv(u)
            ug = mp.ract[u][g]
            tgt = mp.lact[ui][ug] * ng + G.inv(ug)
            coeff = (cp.tau[g][ui][u] * cp.sigma[ui][ug][G.inv(ug)]).inverse()
            S[tgt][u * ng + g] = coeff
    rep = verify_antipode(H, S)
    if not rep.ok:
        raise NoAntipode(
            "closed form fails an axiom: "
            + "; ".join(c.name for c in rep.failures())
        )
    H.antipode = S
    return S


def verify_antipode(H: HopfAlgebra, S: Matrix) -> CheckReport:
    """Both convolution-inverse axioms for a candidate antipode matrix."""
    rep = CheckReport()
    dim, zero = H.dim, H.zero()
    bad_right = None
    bad_left = None
    for i in range(dim):
        right = [zero] * dim
        left = [zero] * dim
        for (j, k), c in H.comult_basis(i):
            # right: x1 * S(x2); left: S(x1) * x2
            for p in range(dim):
                sc = S[p][k]
                if not sc.is_zero():
                    for q, m in H.mul_basis(j, p):
                        right[q] = right[q] + c * sc * m
                sl = S[p][j]
                if not sl.is_zero():
                    for q, m in H.mul_basis(p, k):
                        left[q] = left[q] + c * sl * m
        target = [H.counit[i] * u for u in H.unit]
        if bad_right is None and not _vec_eq(right, target):
            bad_right = i
        if bad_left is None and not _vec_eq(left, target):
            bad_left = i
        if bad_right is not None and bad_left is not None:
            break
    rep.add("antipode right axiom", bad_right is None,
            bad_right is not None and f"fails at basis {bad_right}")
    rep.add("antipode left axiom", bad_left is None,
            bad_left is not None and f"fails at basis {bad_left}")
    return rep


def antipode_antihom_report(H: HopfAlgebra, S: Matrix) -> CheckReport:
    """S(xy) = S(y)S(x) and S(1) = 1, checked on all basis pairs."""
    rep = CheckReport()
    dim = H.dim
    cols = [[S[p][i] for p in range(dim)] for i in range(dim)]
    bad = None
    for i in range(dim):
        for j in range(dim):
            lhs = [H.zero()] * dim
            for k, c in H.mul_basis(i, j):
                for p in range(dim):
                    lhs[p] = lhs[p] + c * S[p][k]
            rhs = H.mul_vec(cols[j], cols[i])
            if not _vec_eq(lhs, rhs):
                bad = (i, j)
                break
        if bad:
            break
    rep.add("antipode anti-multiplicative", bad is None,
            bad and f"fails at basis pair {bad}")
    s_unit = [H.zero()] * dim
    for i, c in enumerate(H.unit):
        if not c.is_zero():
            for p in range(dim):
                s_unit[p] = s_unit[p] + c * S[p][i]
    rep.add("antipode unital", _vec_eq(s_unit, H.unit), "S(1) != 1")
    return rep


# ---------------------------------------------------------------------------
# the two structural maps of the extension
# ---------------------------------------------------------------------------

def seq_maps(H: HopfAlgebra, mp: MatchedPair) -> tuple[Matrix, Matrix]:
    """The inclusion of the function algebra and the projection onto the
    group algebra, as matrices: i maps e_s to e_s # e, p maps e_s # g to
    [s == e] g.  Their structural properties are re-verified; failure
    here means the build is broken, not the input."""
    rep = seq_maps_report(H, mp)
    if not rep.ok:
        raise InternalCheckFailed(
            "; ".join(f"{c.name}: {c.witness}" for c in rep.failures())
        )
    return _seq_matrices(H, mp)


def _seq_matrices(H: HopfAlgebra, mp: MatchedPair) -> tuple[Matrix, Matrix]:
    G, Gm = mp.G, mp.Gamma
    ng, ns = G.order, Gm.order
    zero, one = H.zero(), Cyclotomic.one(H.N)
    inc = [[zero] * ns for _ in range(H.dim)]
    for s in Gm.elements():
        inc[s * ng + G.identity][s] = one
    proj = [[zero] * H.dim for _ in range(ng)]
    for g in G.elements():
        proj[g][Gm.identity * ng + g] = one
    return inc, proj


def seq_maps_report(H: HopfAlgebra, mp: MatchedPair) -> CheckReport:
    G, Gm = mp.G, mp.Gamma
    ng, ns = G.order, Gm.order
    zero = H.zero()
    one = Cyclotomic.one(H.N)
    inc, proj = _seq_matrices(H, mp)
    rep = CheckReport()

    # inclusion is an algebra map: i(e_s) i(e_t) = [s == t] i(e_s), i(1) = 1
    bad = None
    for s in Gm.elements():
        for t in Gm.elements():
            prod = H.mul_vec(_col(inc, s), _col(inc, t))
            expect = _col(inc, s) if s == t else [zero] * H.dim
            if not _vec_eq(prod, expect):
                bad = (s, t)
                break
        if bad:
            break
    rep.add("inclusion multiplicative", bad is None, bad and f"fails at {bad}")
    i_one = [zero] * H.dim
    for s in Gm.elements():
        i_one = [a + b for a, b in zip(i_one, _col(inc, s))]
    rep.add("inclusion unital", _vec_eq(i_one, H.unit), "i(sum of e_s) != 1")

    # inclusion is a coalgebra map
    bad = None
    for s in Gm.elements():
        lhs: TensorElt = {}
        for (j, k), c in H.comult_basis(s * ng + G.identity):
            lhs[(j, k)] = lhs.get((j, k), zero) + c
        rhs: TensorElt = {}
        for t in Gm.elements():
            for u in Gm.elements():
                if Gm.mul(t, u) == s:
                    key = (t * ng + G.identity, u * ng + G.identity)
                    rhs[key] = rhs.get(key, zero) + one
        if not _dict_eq(lhs, rhs):
            bad = s
            break
    rep.add("inclusion comultiplicative", bad is None,
            bad is not None and f"fails at degree {bad}")

    # projection is an algebra map onto the group algebra
    bad = None
    for i in range(H.dim):
        for j in range(H.dim):
            lhs_v = [zero] * ng
            for k, c in H.mul_basis(i, j):
                for g in G.elements():
                    lhs_v[g] = lhs_v[g] + c * proj[g][k]
            pi = _col_vals(proj, i, ng)
            pj = _col_vals(proj, j, ng)
            rhs_v = [zero] * ng
            for g in G.elements():
                if pi[g].is_zero():
                    continue
                for h in G.elements():
                    if not pj[h].is_zero():
                        gh = G.mul(g, h)
                        rhs_v[gh] = rhs_v[gh] + pi[g] * pj[h]
            if not _vec_eq(lhs_v, rhs_v):
                bad = (i, j)
                break
        if bad:
            break
    rep.add("projection multiplicative", bad is None, bad and f"fails at {bad}")
    p_one = [zero] * ng
    for i, c in enumerate(H.unit):
        if not c.is_zero():
            for g in G.elements():
                p_one[g] = p_one[g] + c * proj[g][i]
    unit_kg = [one if g == G.identity else zero for g in G.elements()]
    rep.add("projection unital", _vec_eq(p_one, unit_kg), "p(1) != e")

    # projection is a coalgebra map: (p x p) Delta = Delta_kG p
    bad = None
    for i in range(H.dim):
        lhs: TensorElt = {}
        for (j, k), c in H.comult_basis(i):
            for g in G.elements():
                if proj[g][j].is_zero():
                    continue
                for h in G.elements():
                    if not proj[h][k].is_zero():
                        key = (g, h)
                        lhs[key] = lhs.get(key, zero) + c * proj[g][j] * proj[h][k]
        rhs = {}
        for g in G.elements():
            if not proj[g][i].is_zero():
                rhs[(g, g)] = proj[g][i]
        if not _dict_eq(lhs, rhs):
            bad = i
            break
    rep.add("projection comultiplicative", bad is None,
            bad is not None and f"fails at basis {bad}")

    # composite p . i factors through the counit
    bad = None
    for s in Gm.elements():
        comp = [zero] * ng
        col = _col(inc, s)
        for i, c in enumerate(col):
            if not c.is_zero():
                for g in G.elements():
                    comp[g] = comp[g] + c * proj[g][i]
        expect = [one if (s == Gm.identity and g == G.identity) else zero
                  for g in G.elements()]
        if not _vec_eq(comp, expect):
            bad = s
            break
    rep.add("composite factors through counit", bad is None,
            bad is not None and f"fails at degree {bad}")
    return rep


def _col(m: Matrix, j: int) -> Vector:
    return [row[j] for row in m]


def _col_vals(m: Matrix, j: int, rows: int) -> Vector:
    return [m[r][j] for r in range(rows)]


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

class HModule:
    """A left module given by one action matrix per basis element."""

    def __init__(self, algebra: HopfAlgebra, action: Sequence[Matrix], check: bool = True):
        if len(action) != algebra.dim:
            raise MalformedInput(
                f"{len(action)} action matrices for algebra of dim {algebra.dim}"
            )
        self.algebra = algebra
        self.action = [
            [list(row) for row in m] for m in action
        ]
        sizes = {linalg.mat_shape(m) for m in self.action}
        if len(sizes) != 1 or len(next(iter(sizes))) != 2:
            raise MalformedInput("action matrices differ in shape")
        r, c = next(iter(sizes))
        if r != c:
            raise MalformedInput(f"action matrices are {r}x{c}, not square")
        self.dim = r
        if check:
            rep = self.validate()
            if not rep.ok:
                bad = rep.failures()[0]
                raise NotAModule(f"{bad.name}: {bad.witness}")

    def validate(self) -> CheckReport:
        H = self.algebra
        rep = CheckReport()
        bad = None
        for i in range(H.dim):
            for j in range(H.dim):
                lhs = mat_mul(self.action[i], self.action[j])
                rhs = linalg.mat_zero(self.dim, self.dim, H.N)
                for k, c in H.mul_basis(i, j):
                    rhs = linalg.mat_add(rhs, linalg.mat_scale(c, self.action[k]))
                if not mat_eq(lhs, rhs):
                    bad = (i, j)
                    break
            if bad:
                break
        rep.add("action respects product", bad is None,
                bad and f"fails at basis pair {bad}")
        unit_action = linalg.mat_zero(self.dim, self.dim, H.N)
        for i, c in enumerate(H.unit):
            if not c.is_zero():
                unit_action = linalg.mat_add(unit_action, linalg.mat_scale(c, self.action[i]))
        rep.add("action of unit is identity", mat_is_identity(unit_action),
                "unit does not act as the identity")
        return rep


def module_validate(H: HopfAlgebra, action: Sequence[Matrix]) -> HModule:
    return HModule(H, action, check=True)


def regular_module(H: HopfAlgebra) -> HModule:
    return HModule(H, [H.left_mult_matrix(i) for i in range(H.dim)], check=False)


def trivial_module(H: HopfAlgebra) -> HModule:
    return HModule(H, [[[H.counit[i]]] for i in range(H.dim)], check=False)


def module_tensor(H: HopfAlgebra, a: HModule, b: HModule) -> HModule:
    """Tensor product module: x acts through its coproduct, blockwise by
    Kronecker products in row-major index order."""
    n = a.dim * b.dim
    action = []
    for i in range(H.dim):
        m = linalg.mat_zero(n, n, H.N)
        for (j, k), c in H.comult_basis(i):
            m = linalg.mat_add(m, linalg.mat_scale(c, kron(a.action[j], b.action[k])))
        action.append(m)
    return HModule(H, action, check=False)


# ---------------------------------------------------------------------------
# quasitriangular structures
# ---------------------------------------------------------------------------

class RMatrix:
    """An element R of H (x) H given by its coefficient matrix."""

    def __init__(self, algebra: HopfAlgebra, coeffs: Matrix):
        r, c = linalg.mat_shape(coeffs)
        if r != algebra.dim or c != algebra.dim:
            raise MalformedInput(
                f"coefficient matrix {r}x{c} for algebra of dim {algebra.dim}"
            )
        self.algebra = algebra
        self.coeffs = [list(row) for row in coeffs]

    def as_dict(self) -> TensorElt:
        return {
            (i, j): c
            for i, row in enumerate(self.coeffs)
            for j, c in enumerate(row)
            if not c.is_zero()
        }

    def to_json(self) -> dict:
        return {"R": [[c.to_json() for c in row] for row in self.coeffs]}


def rmatrix_from_braiding(H: HopfAlgebra, braid_on_regular: Matrix) -> RMatrix:
    """Evaluate a braiding of the regular module on 1 (x) 1 and flip.

    braid_on_regular is a dim^2 x dim^2 matrix in the Kronecker basis
    (row-major pair index).  For a braiding of the form flip(R * -),
    evaluating at the algebra unit returns flip(R), so flipping the
    result recovers the coefficients of R.
    """
    dim = H.dim
    if linalg.mat_shape(braid_on_regular) != (dim * dim, dim * dim):
        raise MalformedInput("braiding matrix must act on the tensor square")
    vec = [H.zero()] * (dim * dim)
    for i, ci in enumerate(H.unit):
        if ci.is_zero():
            continue
        for j, cj in enumerate(H.unit):
            if not cj.is_zero():
                vec[i * dim + j] = ci * cj
    image = linalg.mat_vec(braid_on_regular, vec)
    coeffs = [[H.zero()] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            # image coefficient at (i, j) belongs to flip(R), so R[j][i]
            coeffs[j][i] = image[i * dim + j]
    return RMatrix(H, coeffs)


def verify_quasitriangular(H: HopfAlgebra, R: RMatrix) -> CheckReport:
    """The three quasitriangularity axioms plus invertibility.

    Note the coproduct-splitting forms: (Delta (x) id)R = R13 R23 and
    (id (x) Delta)R = R13 R12.  The second one is frequently misprinted
    with the factors in the other order; that variant fails on honest
    examples (see the tests) and is not what a braiding induces.
    """
    rep = CheckReport()
    dim, zero = H.dim, H.zero()
    r = R.as_dict()

    lift = [[zero] * (dim * dim) for _ in range(dim * dim)]
    for (p, q), c in r.items():
        for a in range(dim):
            for b in range(dim):
                for p2, c1 in H.mul_basis(p, a):
                    for q2, c2 in H.mul_basis(q, b):
                        lift[p2 * dim + q2][a * dim + b] = (
                            lift[p2 * dim + q2][a * dim + b] + c * c1 * c2
                        )
    try:
        linalg.mat_inverse(lift)
        rep.add("R invertible", True)
    except NotInvertible:
        rep.add("R invertible", False, "left multiplication by R is singular")

    bad = None
    for i in range(dim):
        delta = {jk: c for jk, c in H.comult_basis(i)}
        delta_op = {(k, j): c for (j, k), c in delta.items()}
        if not _dict_eq(H.tensor_mul(delta_op, r), H.tensor_mul(r, delta)):
            bad = i
            break
    rep.add("R intertwines the coproduct", bad is None,
            bad is not None and f"fails at basis {bad}")

    delta_r: TensorElt = {}
    for (p, q), c in r.items():
        for (a, b), d in H.comult_basis(p):
            key = (a, b, q)
            delta_r[key] = delta_r.get(key, zero) + c * d
    r13 = _tensor_embed(H, r, (0, 2))
    r23 = _tensor_embed(H, r, (1, 2))
    r12 = _tensor_embed(H, r, (0, 1))
    rep.add("coproduct splitting, first leg",
            _dict_eq(delta_r, H.tensor_mul(r13, r23)),
            "(Δ⊗id)R != R13 R23")

    delta_r2: TensorElt = {}
    for (p, q), c in r.items():
        for (a, b), d in H.comult_basis(q):
            key = (p, a, b)
            delta_r2[key] = delta_r2.get(key, zero) + c * d
    rep.add("coproduct splitting, second leg",
            _dict_eq(delta_r2, H.tensor_mul(r13, r12)),
            "(id⊗Δ)R != R13 R12")
    return rep


def _tensor_embed(H: HopfAlgebra, r: TensorElt, legs: tuple[int, int]) -> TensorElt:
    """Place a two-leg tensor element into three legs, filling the
    remaining position with the algebra unit."""
    other = next(i for i in range(3) if i not in legs)
    out: TensorElt = {}
    for (p, q), c in r.items():
        for u, cu in enumerate(H.unit):
            if cu.is_zero():
                continue
            key = [0, 0, 0]
            key[legs[0]] = p
            key[legs[1]] = q
            key[other] = u
            out[tuple(key)] = out.get(tuple(key), H.zero()) + c * cu
    return out
