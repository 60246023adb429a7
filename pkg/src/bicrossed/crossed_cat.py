"""Graded vector spaces with a twisted group action, and their equivariant objects.

The base category here is plain Gamma-graded finite dimensional vector
spaces.  A crossed action of the matched pair on it consists of the
regrading functors rho^g together with two families of twisting
scalars, all read off a cocycle pair:

    rho^g relocates the degree-s component to degree s <| g
    (as a map of graded spaces: rho^g(X)_t = X_{t <| g^-1}),

    rho2(g, h; s) = sigma_s(h, g)^-1
        scales the identification rho^g rho^h -> rho^(hg) on the
        block that started out in degree s,

    gamma(g; t, s) = tau_g(t, s)^-1
        scales the identification rho^g(U (x) V) -> rho^(s |> g)(U) (x) rho^g(V)
        on the block U_t (x) V_s.

The scalar conventions (which degree each subscript refers to, and the
inversion) are pinned by two requirements checked in the test suite:
the seven coherence diagrams below must hold exactly when the cocycle
validator accepts the pair, and the restriction functor from modules
must be strictly monoidal.  No other member of the candidate family
{source/target/original degree} x {g / g^-1} satisfies both.

Everything downstream is blockwise exact linear algebra.  Basis
bookkeeping uses labels: each degree component of a graded space
carries an ordered tuple of labels, a label being a tuple of atoms
(an atom is a tuple whose head is a string tag).  Tensor products
concatenate labels and sort them within each degree, which makes the
tensor product of spaces literally associative and unital, so all
coherence checks are matrix equalities with no associators anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import linalg
from .cocycles import CocyclePair
from .errors import (
    ConductorMismatch,
    InternalCheckFailed,
    MalformedInput,
    NotEquivariant,
    NotInvertible,
    ShapeMismatch,
)
from .groups import FiniteGroup
from .hopf import HModule, HopfAlgebra, build_bicrossed
from .linalg import Matrix, kron, mat_eq, mat_identity, mat_inverse, mat_mul, mat_zero
from .matched_pair import MatchedPair
from .report import CheckReport
from .scalars import Cyclotomic

Label = tuple
Atom = tuple


# ---------------------------------------------------------------------------
# graded spaces
# ---------------------------------------------------------------------------

class GradedSpace:
    """A finite dimensional space graded by the elements of Gamma.

    labels maps a degree to the ordered tuple of basis labels of that
    component; degrees with no labels are zero components and are not
    stored.
    """

    def __init__(self, gamma: FiniteGroup, labels: dict[int, Sequence[Label]]):
        self.gamma = gamma
        clean: dict[int, tuple[Label, ...]] = {}
        for s, labs in labels.items():
            if not (0 <= s < gamma.order):
                raise MalformedInput(f"degree {s} outside the grading group")
            labs = tuple(tuple(a) for a in labs)
            if labs:
                if len(set(labs)) != len(labs):
                    raise InternalCheckFailed(
                        f"duplicate basis labels in degree {s}"
                    )
                clean[s] = labs
        self.labels = clean
        self._pos = {
            s: {lab: i for i, lab in enumerate(labs)}
            for s, labs in clean.items()
        }

    def dims(self) -> dict[int, int]:
        return {s: len(labs) for s, labs in self.labels.items()}

    def dim_at(self, s: int) -> int:
        return len(self.labels.get(s, ()))

    def degrees(self) -> list[int]:
        return sorted(self.labels)

    def total_dim(self) -> int:
        return sum(len(labs) for labs in self.labels.values())

    def pos(self, s: int, label: Label) -> int:
        try:
            return self._pos[s][label]
        except KeyError:
            raise InternalCheckFailed(
                f"label {label!r} not present in degree {s}"
            ) from None

    def same_dims(self, other: "GradedSpace") -> bool:
        return self.dims() == other.dims()

    def __eq__(self, other):
        return isinstance(other, GradedSpace) and self.labels == other.labels

    def __hash__(self):
        return hash(tuple(sorted((s, labs) for s, labs in self.labels.items())))

    def __repr__(self):
        inner = ", ".join(f"{s}:{len(v)}" for s, v in sorted(self.labels.items()))
        return f"<graded space {{{inner}}}>"


def unit_space(gamma: FiniteGroup) -> GradedSpace:
    """One-dimensional space in the neutral degree; its single basis
    label is the empty tuple, the neutral element for concatenation."""
    return GradedSpace(gamma, {gamma.identity: ((),)})


def atomic_space(gamma: FiniteGroup, s: int, dim: int, tag: str = "X") -> GradedSpace:
    return GradedSpace(gamma, {s: tuple(((tag, s, i),) for i in range(dim))})


def space_tensor(a: GradedSpace, b: GradedSpace) -> GradedSpace:
    """Graded tensor product.  Component labels are concatenations,
    sorted; sorting a flat concatenation does not depend on the
    grouping, which is what makes this product strictly associative."""
    gm = a.gamma
    out: dict[int, list[Label]] = {}
    for s, la in a.labels.items():
        for t, lb in b.labels.items():
            u = gm.mul(s, t)
            dest = out.setdefault(u, [])
            for x in la:
                for y in lb:
                    dest.append(x + y)
    return GradedSpace(gm, {u: tuple(sorted(v)) for u, v in out.items()})


def rho_apply(ca: "CrossedAction", g: int, x: GradedSpace) -> GradedSpace:
    """The regraded space: the degree-s component lands in degree s <| g."""
    mp = ca.pair
    return GradedSpace(x.gamma, {mp.lact[s][g]: labs for s, labs in x.labels.items()})


# ---------------------------------------------------------------------------
# degree-preserving maps
# ---------------------------------------------------------------------------

class GradedMap:
    """A degree-preserving linear map, one matrix per degree.

    Blocks are stored only for degrees where both spaces are nonzero;
    everything else is forced zero.  src and dst fix the bases the
    matrices refer to.
    """

    def __init__(self, src: GradedSpace, dst: GradedSpace, blocks: dict[int, Matrix]):
        self.src = src
        self.dst = dst
        self.blocks = {}
        for s, m in blocks.items():
            rows, cols = linalg.mat_shape(m)
            if rows != dst.dim_at(s) or cols != src.dim_at(s):
                raise ShapeMismatch(
                    f"block at degree {s} is {rows}x{cols}, expected "
                    f"{dst.dim_at(s)}x{src.dim_at(s)}"
                )
            if rows and cols:
                self.blocks[s] = [list(row) for row in m]

    @classmethod
    def identity(cls, space: GradedSpace, N: int = 1) -> "GradedMap":
        return cls(space, space,
                   {s: mat_identity(space.dim_at(s), N) for s in space.degrees()})

    def block(self, s: int, N: int = 1) -> Matrix:
        if s in self.blocks:
            return self.blocks[s]
        return mat_zero(self.dst.dim_at(s), self.src.dim_at(s), N)

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self after other."""
        if other.dst.dims() != self.src.dims():
            raise ShapeMismatch("composition of maps with mismatched middle space")
        blocks = {}
        for s in other.blocks:
            if s in self.blocks:
                blocks[s] = mat_mul(self.blocks[s], other.blocks[s])
        return GradedMap(other.src, self.dst, blocks)

    def scale(self, c: Cyclotomic) -> "GradedMap":
        return GradedMap(self.src, self.dst,
                         {s: linalg.mat_scale(c, m) for s, m in self.blocks.items()})

    def eq(self, other: "GradedMap") -> bool:
        degrees = set(self.blocks) | set(other.blocks)
        for s in degrees:
            a, b = self.blocks.get(s), other.blocks.get(s)
            if a is None:
                a = mat_zero(*linalg.mat_shape(b))
            if b is None:
                b = mat_zero(*linalg.mat_shape(a))
            if not mat_eq(a, b):
                return False
        return True

    def is_identity(self) -> bool:
        if self.src.dims() != self.dst.dims():
            return False
        for s in self.src.degrees():
            if not linalg.mat_is_identity(self.block(s)):
                return False
        return True

    def __repr__(self):
        return f"<graded map on degrees {sorted(self.blocks)}>"


def tensor_map(f: GradedMap, g: GradedMap) -> GradedMap:
    """Tensor product of degree-preserving maps, in the label bases."""
    src = space_tensor(f.src, g.src)
    dst = space_tensor(f.dst, g.dst)
    entries: dict[int, Matrix] = {}
    gm = f.src.gamma
    for u, fm in f.blocks.items():
        for v, gmat in g.blocks.items():
            w = gm.mul(u, v)
            m = entries.setdefault(w, mat_zero(dst.dim_at(w), src.dim_at(w),
                                               _block_conductor(fm)))
            for i, lx in enumerate(f.src.labels[u]):
                for j, ly in enumerate(g.src.labels[v]):
                    col = src.pos(w, lx + ly)
                    for i2, lx2 in enumerate(f.dst.labels[u]):
                        c1 = fm[i2][i]
                        if c1.is_zero():
                            continue
                        for j2, ly2 in enumerate(g.dst.labels[v]):
                            c2 = gmat[j2][j]
                            if c2.is_zero():
                                continue
                            row = dst.pos(w, lx2 + ly2)
                            m[row][col] = m[row][col] + c1 * c2
    return GradedMap(src, dst, entries)


def _block_conductor(m: Matrix) -> int:
    for row in m:
        for c in row:
            return c.N
    return 1


# ---------------------------------------------------------------------------
# the crossed action
# ---------------------------------------------------------------------------

class CrossedAction:
    """Bundle of a matched pair and a cocycle pair, read as the data of
    a twisted action on graded spaces.  Immutable."""

    def __init__(self, pair: MatchedPair, cocycles: CocyclePair):
        if cocycles.pair is not pair and (
            cocycles.pair.lact != pair.lact or cocycles.pair.ract != pair.ract
        ):
            raise MalformedInput("cocycle pair belongs to a different matched pair")
        self.pair = pair
        self.cocycles = cocycles
        self.gamma = pair.Gamma
        self.G = pair.G
        self.N = cocycles.N
        self._algebra: HopfAlgebra | None = None

    def one(self) -> Cyclotomic:
        return Cyclotomic.one(self.N)

    def rho2_scalar(self, g: int, h: int, s: int) -> Cyclotomic:
        """Scalar of rho^g rho^h -> rho^(hg) on the block of original degree s."""
        return self.cocycles.sigma[s][h][g].inverse()

    def gamma_scalar(self, g: int, t: int, s: int) -> Cyclotomic:
        """Scalar of rho^g(U (x) V) -> rho^(s |> g)(U) (x) rho^g(V) on the
        block U_t (x) V_s."""
        return self.cocycles.tau[g][t][s].inverse()

    def algebra(self) -> HopfAlgebra:
        if self._algebra is None:
            self._algebra = build_bicrossed(self.pair, self.cocycles)
        return self._algebra

    def at_conductor(self, M: int) -> "CrossedAction":
        """The same action with scalars rewritten in Q(zeta_M); M must be
        a multiple of the current conductor."""
        if M == self.N:
            return self
        from .cocycles import embed_cocycles
        return CrossedAction(self.pair, embed_cocycles(self.cocycles, M))

    def __repr__(self):
        return f"<crossed action |G|={self.G.order} |Gamma|={self.gamma.order} N={self.N}>"


def rho2_scalar(ca: CrossedAction, g: int, h: int, s: int) -> Cyclotomic:
    return ca.rho2_scalar(g, h, s)


def gamma_scalar(ca: CrossedAction, g: int, t_deg_u: int, s: int) -> Cyclotomic:
    return ca.gamma_scalar(g, t_deg_u, s)


def verify_crossed_action(ca: CrossedAction, degree_sample: Sequence[int] | None = None) -> CheckReport:
    """The coherence diagrams of the twisted action, instantiated on
    one-dimensional homogeneous objects.

    Every arrow between one-dimensional spaces is a scalar, so each
    diagram instance is an equality of two scalar products (the two
    composites around the square).  The checks are, in order: the two
    coherence laws of the action itself (composition and unit), then
    the five diagrams governing the tensor structure:

      (a) the two ways of splitting rho^g(X (x) Y (x) Z),
      (b) splitting off a unit leg is the identity,
      (c) splitting commutes with composing the action,
      (d) the identifications rho^g(1) = 1 respect composition,
      (e) splitting under rho^e is the identity.
    """
    G, Gm = ca.pair.G, ca.pair.Gamma
    lact, ract = ca.pair.lact, ca.pair.ract
    sample = list(degree_sample) if degree_sample is not None else list(Gm.elements())
    for s in sample:
        if not (0 <= s < Gm.order):
            raise MalformedInput(f"degree {s} outside the grading group")
    rep = CheckReport()
    e = Gm.identity

    bad = None
    for g in G.elements():
        for h in G.elements():
            for l in G.elements():
                for s in sample:
                    lhs = ca.rho2_scalar(g, h, lact[s][l]) * ca.rho2_scalar(G.mul(h, g), l, s)
                    rhs = ca.rho2_scalar(h, l, s) * ca.rho2_scalar(g, G.mul(l, h), s)
                    if lhs != rhs:
                        bad = (g, h, l, s)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add("action composition coherence", bad is None,
            bad and f"two contractions of rho^g rho^h rho^l differ at {bad}")

    bad = None
    for g in G.elements():
        for s in sample:
            if ca.rho2_scalar(G.identity, g, s) != 1 or ca.rho2_scalar(g, G.identity, s) != 1:
                bad = (g, s)
                break
        if bad:
            break
    rep.add("action unit coherence", bad is None,
            bad and f"contraction against rho^e is not the identity at {bad}")

    bad = None
    for g in G.elements():
        for r in sample:
            for s in sample:
                for t in sample:
                    lhs = ca.gamma_scalar(g, Gm.mul(r, s), t) * ca.gamma_scalar(ract[t][g], r, s)
                    rhs = ca.gamma_scalar(g, r, Gm.mul(s, t)) * ca.gamma_scalar(g, s, t)
                    if lhs != rhs:
                        bad = (g, r, s, t)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add("diagram (a)", bad is None,
            bad and f"two splittings of a triple tensor differ at (g,r,s,t)={bad}")

    bad = None
    for g in G.elements():
        for t in sample:
            if ca.gamma_scalar(g, t, e) != 1 or ca.gamma_scalar(g, e, t) != 1:
                bad = (g, t)
                break
        if bad:
            break
    rep.add("diagram (b)", bad is None,
            bad and f"splitting off a unit leg is not the identity at (g,t)={bad}")

    bad = None
    for g in G.elements():
        for h in G.elements():
            for t in sample:
                for s in sample:
                    lhs = ca.rho2_scalar(g, h, Gm.mul(t, s)) * ca.gamma_scalar(G.mul(h, g), t, s)
                    rhs = (
                        ca.gamma_scalar(h, t, s)
                        * ca.gamma_scalar(g, lact[t][ract[s][h]], lact[s][h])
                        * ca.rho2_scalar(ract[lact[s][h]][g], ract[s][h], t)
                        * ca.rho2_scalar(g, h, s)
                    )
                    if lhs != rhs:
                        bad = (g, h, t, s)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add("diagram (c)", bad is None,
            bad and f"splitting does not commute with composition at (g,h,t,s)={bad}")

    bad = None
    for g in G.elements():
        for h in G.elements():
            if ca.rho2_scalar(g, h, e) != 1:
                bad = (g, h)
                break
        if bad:
            break
    rep.add("diagram (d)", bad is None,
            bad and f"unit-object identification breaks composition at (g,h)={bad}")

    bad = None
    for t in sample:
        for s in sample:
            if ca.gamma_scalar(G.identity, t, s) != 1:
                bad = (t, s)
                break
        if bad:
            break
    rep.add("diagram (e)", bad is None,
            bad and f"splitting under rho^e is not the identity at (t,s)={bad}")
    return rep


# ---------------------------------------------------------------------------
# equivariant objects
# ---------------------------------------------------------------------------

class EquivariantObject:
    """A graded space X with invertible blocks r^g_s: X_s -> X_{s <| g}
    satisfying r^g_{s<|h} r^h_s = sigma_s(h, g)^-1 r^(hg)_s and r^e = id.

    Equivalently: assembling the blocks into a single map T(X) -> X
    gives a module over the induced-action monad; the cocycle condition
    is literally that module law, which is how verify_braiding and the
    monad checks consume these objects.
    """

    def __init__(self, ca: CrossedAction, space: GradedSpace,
                 r: dict[int, dict[int, Matrix]]):
        self.ca = ca
        self.space = space
        self.r = {
            g: {s: [list(row) for row in m] for s, m in blocks.items()}
            for g, blocks in r.items()
        }

    def block(self, g: int, s: int) -> Matrix:
        m = self.r.get(g, {}).get(s)
        if m is None:
            mp = self.ca.pair
            return mat_zero(self.space.dim_at(mp.lact[s][g]), self.space.dim_at(s), self.ca.N)
        return m

    def eq_data(self, other: "EquivariantObject") -> bool:
        if self.space.dims() != other.space.dims():
            return False
        for g in self.ca.G.elements():
            for s in self.space.degrees():
                if not mat_eq(self.block(g, s), other.block(g, s)):
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "dims": {str(s): self.space.dim_at(s) for s in self.space.degrees()},
            "r": {
                str(g): {
                    str(s): [[c.to_json() for c in row] for row in blocks[s]]
                    for s in sorted(blocks)
                }
                for g, blocks in sorted(self.r.items())
            },
        }

    def __repr__(self):
        return f"<equivariant object dims={self.space.dims()}>"


def equivariant_from_json(ca: CrossedAction, data: dict) -> EquivariantObject:
    if "dims" not in data or "r" not in data:
        raise MalformedInput("equivariant object JSON needs 'dims' and 'r'")
    labels = {}
    for s_str, n in data["dims"].items():
        s = int(s_str)
        labels[s] = tuple((("X", s, i),) for i in range(n))
    space = GradedSpace(ca.gamma, labels)
    r: dict[int, dict[int, Matrix]] = {}
    for g_str, blocks in data["r"].items():
        g = int(g_str)
        r[g] = {}
        for s_str, m in blocks.items():
            r[g][int(s_str)] = [
                [_to_cyc(c, ca.N) for c in row] for row in m
            ]
    return equivariant_validate(ca, space, r)


def _to_cyc(value, N: int) -> Cyclotomic:
    from .scalars import embed
    if isinstance(value, dict):
        c = Cyclotomic.from_json(value)
    elif isinstance(value, int):
        return Cyclotomic.from_rational(value, N)
    else:
        raise MalformedInput(f"bad scalar entry {value!r}")
    return embed(c, N * c.N // _gcd(N, c.N)) if c.N != N else c


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _lcm(a: int, b: int) -> int:
    return a // _gcd(a, b) * b


def equivariant_validate(ca: CrossedAction, space: GradedSpace,
                         r: dict[int, dict[int, Matrix]]) -> EquivariantObject:
    """Exhaustive blockwise verification of the equivariance data."""
    G, Gm = ca.G, ca.gamma
    lact = ca.pair.lact
    degrees = space.degrees()

    blocks: dict[int, dict[int, Matrix]] = {}
    for g in G.elements():
        given = r.get(g, {})
        blocks[g] = {}
        for s in degrees:
            target = lact[s][g]
            m = given.get(s)
            if m is None:
                raise ShapeMismatch(f"missing block for g={g}, degree {s}")
            rows, cols = linalg.mat_shape(m)
            if rows != space.dim_at(target) or cols != space.dim_at(s):
                raise ShapeMismatch(
                    f"block (g={g}, s={s}) is {rows}x{cols}, expected "
                    f"{space.dim_at(target)}x{space.dim_at(s)}"
                )
            blocks[g][s] = m

    for g in G.elements():
        for s in degrees:
            try:
                mat_inverse(blocks[g][s])
            except NotInvertible:
                raise NotInvertible(f"block (g={g}, s={s}) is singular") from None

    for s in degrees:
        if not linalg.mat_is_identity(blocks[G.identity][s]):
            raise NotEquivariant((G.identity, G.identity, s))

    for g in G.elements():
        for h in G.elements():
            hg = G.mul(h, g)
            for s in degrees:
                left = mat_mul(blocks[g][lact[s][h]], blocks[h][s])
                right = linalg.mat_scale(ca.rho2_scalar(g, h, s), blocks[hg][s])
                if not mat_eq(left, right):
                    raise NotEquivariant((g, h, s))

    return EquivariantObject(ca, space, blocks)


def unit_object(ca: CrossedAction) -> EquivariantObject:
    space = unit_space(ca.gamma)
    one = [[ca.one()]]
    r = {g: {ca.gamma.identity: one} for g in ca.G.elements()}
    return equivariant_validate(ca, space, r)


def scalar_object(ca: CrossedAction, s: int) -> EquivariantObject | None:
    """The one-dimensional object in degree s with all structure maps 1,
    when that is consistent: s must be fixed by the action and the
    composition scalars at s must all be trivial.  Returns None if not."""
    Gm, G = ca.gamma, ca.G
    for g in G.elements():
        if ca.pair.lact[s][g] != s:
            return None
        for h in G.elements():
            if ca.rho2_scalar(g, h, s) != 1:
                return None
    space = atomic_space(Gm, s, 1, tag="P")
    one = [[ca.one()]]
    return equivariant_validate(ca, space, {g: {s: one} for g in G.elements()})


def free_object(ca: CrossedAction, base: GradedSpace, tag_index: int = 0) -> EquivariantObject:
    """The free equivariant object on a graded space: underlying space
    T(base), structure blocks given by composing the action indices,
    scaled by the composition scalars."""
    Gm, G = ca.gamma, ca.G
    lact = ca.pair.lact
    space = t_space(ca, base)
    r: dict[int, dict[int, Matrix]] = {g: {} for g in G.elements()}
    for g in G.elements():
        for d in space.degrees():
            tgt = lact[d][g]
            m = mat_zero(space.dim_at(tgt), space.dim_at(d), ca.N)
            for h in G.elements():
                for s in base.degrees():
                    if lact[s][h] != d:
                        continue
                    hg = G.mul(h, g)
                    scal = ca.rho2_scalar(g, h, s)
                    for lb in base.labels[s]:
                        col = space.pos(d, (("T", h),) + lb)
                        row = space.pos(tgt, (("T", hg),) + lb)
                        m[row][col] = m[row][col] + scal
            r[g][d] = m
    return equivariant_validate(ca, space, r)


def twist_object(obj: EquivariantObject, units: dict[int, Matrix]) -> EquivariantObject:
    """Conjugate the structure blocks by an invertible change of basis
    in each degree.  The result is an isomorphic equivariant object on
    the same labelled space."""
    ca = obj.ca
    lact = ca.pair.lact
    inv = {s: mat_inverse(u) for s, u in units.items()}
    r: dict[int, dict[int, Matrix]] = {}
    for g in ca.G.elements():
        r[g] = {}
        for s in obj.space.degrees():
            t = lact[s][g]
            m = obj.block(g, s)
            if s in inv:
                m = mat_mul(m, inv[s])
            if t in units:
                m = mat_mul(units[t], m)
            r[g][s] = m
    return equivariant_validate(ca, obj.space, r)


def equivariant_tensor(ca: CrossedAction, a: EquivariantObject,
                       b: EquivariantObject) -> EquivariantObject:
    """Tensor product object.  On the block X_s (x) Y_t the structure
    map is gamma(g; s, t) (r^(t |> g) (x) l^g), landing in the block
    X_{s <| (t |> g)} (x) Y_{t <| g}."""
    Gm, G = ca.gamma, ca.G
    lact, ract = ca.pair.lact, ca.pair.ract
    x, y = a.space, b.space
    z = space_tensor(x, y)
    r: dict[int, dict[int, Matrix]] = {g: {} for g in G.elements()}
    for g in G.elements():
        for u in z.degrees():
            tgt = lact[u][g]
            r[g][u] = mat_zero(z.dim_at(tgt), z.dim_at(u), ca.N)
        for s in x.degrees():
            for t in y.degrees():
                u = Gm.mul(s, t)
                tg = ract[t][g]
                s2, t2 = lact[s][tg], lact[t][g]
                scal = ca.gamma_scalar(g, s, t)
                ra = a.block(tg, s)
                rb = b.block(g, t)
                m = r[g][u]
                tgt = lact[u][g]
                for i, lx in enumerate(x.labels[s]):
                    for j, ly in enumerate(y.labels[t]):
                        col = z.pos(u, lx + ly)
                        for i2, lx2 in enumerate(x.labels.get(s2, ())):
                            c1 = ra[i2][i]
                            if c1.is_zero():
                                continue
                            for j2, ly2 in enumerate(y.labels.get(t2, ())):
                                c2 = rb[j2][j]
                                if c2.is_zero():
                                    continue
                                row = z.pos(tgt, lx2 + ly2)
                                m[row][col] = m[row][col] + scal * c1 * c2
    return equivariant_validate(ca, z, r)


def equivariant_morphism_ok(a: EquivariantObject, b: EquivariantObject,
                            f: GradedMap) -> tuple[bool, tuple | None]:
    """Whether a degree-preserving map intertwines the structure blocks:
    f_{s <| g} r^g_s == l^g_s f_s for all g, s."""
    ca = a.ca
    lact = ca.pair.lact
    for g in ca.G.elements():
        for s in a.space.degrees():
            t = lact[s][g]
            left = mat_mul(f.block(t, ca.N), a.block(g, s))
            right = mat_mul(b.block(g, s), f.block(s, ca.N))
            if not mat_eq(left, right):
                return False, (g, s)
    return True, None


# ---------------------------------------------------------------------------
# the induced monad on graded spaces
# ---------------------------------------------------------------------------

def t_space(ca: CrossedAction, x: GradedSpace) -> GradedSpace:
    """Direct sum over g of the regraded copies of x, with labels
    prefixed by a ("T", g) atom so the copies stay distinguishable."""
    lact = ca.pair.lact
    out: dict[int, list[Label]] = {}
    for g in ca.G.elements():
        for s, labs in x.labels.items():
            d = lact[s][g]
            dest = out.setdefault(d, [])
            for lb in labs:
                dest.append((("T", g),) + lb)
    return GradedSpace(ca.gamma, {d: tuple(sorted(v)) for d, v in out.items()})


def t_map(ca: CrossedAction, f: GradedMap) -> GradedMap:
    src = t_space(ca, f.src)
    dst = t_space(ca, f.dst)
    lact = ca.pair.lact
    blocks: dict[int, Matrix] = {}
    for g in ca.G.elements():
        for s, m in f.blocks.items():
            d = lact[s][g]
            blk = blocks.setdefault(d, mat_zero(dst.dim_at(d), src.dim_at(d), ca.N))
            for i, lx in enumerate(f.src.labels[s]):
                col = src.pos(d, (("T", g),) + lx)
                for i2, lx2 in enumerate(f.dst.labels[s]):
                    c = m[i2][i]
                    if not c.is_zero():
                        row = dst.pos(d, (("T", g),) + lx2)
                        blk[row][col] = blk[row][col] + c
    return GradedMap(src, dst, blocks)


def eta_map(ca: CrossedAction, x: GradedSpace) -> GradedMap:
    dst = t_space(ca, x)
    e = ca.G.identity
    blocks = {}
    for s, labs in x.labels.items():
        m = mat_zero(dst.dim_at(s), len(labs), ca.N)
        for i, lb in enumerate(labs):
            m[dst.pos(s, (("T", e),) + lb)][i] = ca.one()
        blocks[s] = m
    return GradedMap(x, dst, blocks)


def mu_map(ca: CrossedAction, x: GradedSpace) -> GradedMap:
    """Multiplication of the monad: the (g, h) copy maps to the hg copy,
    scaled by the composition scalar of the underlying degree."""
    tx = t_space(ca, x)
    ttx = t_space(ca, tx)
    lact = ca.pair.lact
    G = ca.G
    blocks = {d: mat_zero(tx.dim_at(d), ttx.dim_at(d), ca.N) for d in ttx.degrees()}
    for g in G.elements():
        for h in G.elements():
            hg = G.mul(h, g)
            for s, labs in x.labels.items():
                d = lact[lact[s][h]][g]
                scal = ca.rho2_scalar(g, h, s)
                for lb in labs:
                    col = ttx.pos(d, (("T", g), ("T", h)) + lb)
                    row = tx.pos(d, (("T", hg),) + lb)
                    blocks[d][row][col] = blocks[d][row][col] + scal
    return GradedMap(ttx, tx, blocks)


def t2_map(ca: CrossedAction, x: GradedSpace, y: GradedSpace) -> GradedMap:
    """Comonoidal structure T(X (x) Y) -> T(X) (x) T(Y): the g copy of
    the block X_t (x) Y_s goes to the (s |> g) copy of X_t tensored
    with the g copy of Y_s, scaled by gamma(g; t, s)."""
    src = t_space(ca, space_tensor(x, y))
    dst = space_tensor(t_space(ca, x), t_space(ca, y))
    Gm, G = ca.gamma, ca.G
    lact, ract = ca.pair.lact, ca.pair.ract
    blocks = {d: mat_zero(dst.dim_at(d), src.dim_at(d), ca.N) for d in src.degrees()}
    for g in G.elements():
        for t, lxs in x.labels.items():
            for s, lys in y.labels.items():
                d = lact[Gm.mul(t, s)][g]
                sg = ract[s][g]
                scal = ca.gamma_scalar(g, t, s)
                for lx in lxs:
                    for ly in lys:
                        col = src.pos(d, (("T", g),) + lx + ly)
                        row = dst.pos(d, ((("T", sg),) + lx) + ((("T", g),) + ly))
                        blocks[d][row][col] = blocks[d][row][col] + scal
    return GradedMap(src, dst, blocks)


def t0_map(ca: CrossedAction) -> GradedMap:
    one = unit_space(ca.gamma)
    src = t_space(ca, one)
    e = ca.gamma.identity
    m = mat_zero(1, src.dim_at(e), ca.N)
    for j in range(src.dim_at(e)):
        m[0][j] = ca.one()
    return GradedMap(src, one, {e: m})


def action_structure_map(ca: CrossedAction, obj: EquivariantObject) -> GradedMap:
    """The structure blocks assembled into a single map T(X) -> X."""
    x = obj.space
    tx = t_space(ca, x)
    lact = ca.pair.lact
    blocks = {d: mat_zero(x.dim_at(d), tx.dim_at(d), ca.N) for d in tx.degrees()}
    for g in ca.G.elements():
        for s, labs in x.labels.items():
            d = lact[s][g]
            m = obj.block(g, s)
            for i, lb in enumerate(labs):
                col = tx.pos(d, (("T", g),) + lb)
                for i2 in range(x.dim_at(d)):
                    c = m[i2][i]
                    if not c.is_zero():
                        blocks[d][i2][col] = blocks[d][i2][col] + c
    return GradedMap(tx, x, blocks)


def hopf_monad_check(ca: CrossedAction) -> CheckReport:
    """The two finite shadows of the monad being Hopf and normal.

    Fusion invertibility reduces to two families of index bijections on
    G x G, one per grading degree; normality reduces to T(unit) being
    concentrated in the neutral degree, with the unit identifications
    being genuine identities (scalar checks).
    """
    G, Gm = ca.G, ca.gamma
    lact, ract = ca.pair.lact, ca.pair.ract
    rep = CheckReport()
    n = G.order

    bad = None
    for s in Gm.elements():
        seen = set()
        for g in G.elements():
            for h in G.elements():
                seen.add((G.mul(h, ract[s][g]), g))
        if len(seen) != n * n:
            bad = s
            break
    rep.add("left fusion indices bijective", bad is None,
            bad is not None and f"(g,h) -> (h(s|>g), g) not bijective at s={bad}")

    bad = None
    for s in Gm.elements():
        seen = set()
        for g in G.elements():
            for h in G.elements():
                seen.add((ract[lact[s][h]][g], G.mul(h, g)))
        if len(seen) != n * n:
            bad = s
            break
    rep.add("right fusion indices bijective", bad is None,
            bad is not None and f"(g,h) -> ((s<|h)|>g, hg) not bijective at s={bad}")

    t_one = t_space(ca, unit_space(Gm))
    concentrated = t_one.degrees() == [Gm.identity]
    rep.add("T(unit) concentrated in the neutral degree", concentrated,
            None if concentrated else f"degrees {t_one.degrees()}")
    rep.add("T(unit) has dimension |G|", t_one.dim_at(Gm.identity) == n,
            f"dimension {t_one.dim_at(Gm.identity)} != {n}")

    e = Gm.identity
    bad = None
    for g in G.elements():
        for h in G.elements():
            if ca.rho2_scalar(g, h, e) != 1:
                bad = (g, h)
                break
        if bad:
            break
    rep.add("unit identifications are identities", bad is None,
            bad and f"composition scalar on the unit object is not 1 at {bad}")
    return rep


# ---------------------------------------------------------------------------
# the strict equivalence with modules
# ---------------------------------------------------------------------------

def K_functor(H: HopfAlgebra, w: HModule) -> EquivariantObject:
    """Regrade a module by the joint eigenspaces of the commuting
    idempotents, with structure blocks inverting the action of the
    group-like column.

    When the module's standard basis is homogeneous (each vector lies
    in a single eigenspace), the original index order is kept within
    each degree; this makes the functor strictly monoidal as literal
    matrices and the round trip with K_inverse the identity on data.
    Otherwise the basis is changed to an echelon basis of the
    eigenspaces first and the action matrices are conjugated.
    """
    mp = getattr(H, "pair", None)
    cp = getattr(H, "cocycles", None)
    if mp is None or cp is None:
        raise MalformedInput("algebra does not carry its construction data")
    ca = getattr(H, "_crossed_action", None)
    if ca is None:
        ca = CrossedAction(mp, cp)
        H._crossed_action = ca
    G, Gm = mp.G, mp.Gamma
    ng = G.order
    dim = w.dim
    proj = {s: w.action[s * ng + G.identity] for s in Gm.elements()}

    degrees = _homogeneous_degrees(proj, dim)
    action = w.action
    if degrees is None:
        basis = []
        for s in Gm.elements():
            basis.extend(linalg.echelon_columns(proj[s]))
        if len(basis) != dim:
            raise MalformedInput("projections do not decompose the module")
        u = mat_transpose_cols(basis)
        u_inv = mat_inverse(u)
        action = [mat_mul(u_inv, mat_mul(m, u)) for m in w.action]
        proj = {s: action[s * ng + G.identity] for s in Gm.elements()}
        degrees = _homogeneous_degrees(proj, dim)
        if degrees is None:
            raise MalformedInput("projections do not decompose the module")

    by_degree: dict[int, list[int]] = {}
    for i, s in enumerate(degrees):
        by_degree.setdefault(s, []).append(i)
    labels = {s: tuple((("M", i),) for i in idxs) for s, idxs in by_degree.items()}
    space = GradedSpace(Gm, labels)

    r: dict[int, dict[int, Matrix]] = {}
    for g in G.elements():
        a_g = _sum_matrices([action[t * ng + g] for t in Gm.elements()], dim, H.N)
        r[g] = {}
        for s in space.degrees():
            t = mp.lact[s][g]
            rows = by_degree.get(t, [])
            cols = by_degree.get(s, [])
            # the action block runs from degree s <| g back to s; its
            # inverse is the structure block from s to s <| g
            blk = [[a_g[i][j] for j in rows] for i in cols]
            r[g][s] = mat_inverse(blk) if blk else []
    return equivariant_validate(ca, space, r)


def _homogeneous_degrees(proj: dict[int, Matrix], dim: int) -> list[int] | None:
    degrees = []
    for i in range(dim):
        found = None
        for s, p in proj.items():
            col = [p[k][i] for k in range(dim)]
            if all(c.is_zero() for c in col):
                continue
            if found is not None:
                return None
            if any((c - (1 if k == i else 0)) != 0 for k, c in enumerate(col)):
                return None
            found = s
        if found is None:
            return None
        degrees.append(found)
    return degrees


def mat_transpose_cols(cols: list) -> Matrix:
    n = len(cols[0])
    return [[cols[j][i] for j in range(len(cols))] for i in range(n)]


def _sum_matrices(mats: list[Matrix], dim: int, N: int) -> Matrix:
    out = mat_zero(dim, dim, N)
    for m in mats:
        out = linalg.mat_add(out, m)
    return out


def K_inverse(ca: CrossedAction, obj: EquivariantObject) -> HModule:
    """Rebuild the module: the basis element indexed (s, g) acts as the
    degree-s projection composed with the inverse structure block."""
    H = ca.algebra()
    mp = ca.pair
    G, Gm = mp.G, mp.Gamma
    ng = G.order
    space = obj.space

    order = _module_basis_order(space)
    pos = {key: i for i, key in enumerate(order)}
    dim = len(order)
    zero = Cyclotomic.zero(H.N)

    inv_blocks = {
        g: {s: mat_inverse(obj.block(g, s)) if space.dim_at(s) else []
            for s in space.degrees()}
        for g in G.elements()
    }

    actions = []
    for s in Gm.elements():
        for g in G.elements():
            m = [[zero] * dim for _ in range(dim)]
            if space.dim_at(s):
                src_deg = mp.lact[s][g]
                # inverse of r^g_s runs from degree s <| g back to s;
                # the action of the (s, g) basis element is that block
                blk = inv_blocks[g][s]
                tgt = space.dim_at(s)
                for j in range(space.dim_at(src_deg)):
                    col = pos[(src_deg, j)]
                    for i in range(tgt):
                        if not blk[i][j].is_zero():
                            m[pos[(s, i)]][col] = blk[i][j]
            actions.append(m)
    return HModule(H, actions, check=True)


def _module_basis_order(space: GradedSpace) -> list[tuple[int, int]]:
    tagged = []
    for s in space.degrees():
        for i, lb in enumerate(space.labels[s]):
            if len(lb) == 1 and len(lb[0]) == 2 and lb[0][0] == "M":
                tagged.append((lb[0][1], (s, i)))
            else:
                tagged = None
                break
        if tagged is None:
            break
    if tagged is not None:
        ints = [t[0] for t in tagged]
        if len(set(ints)) == len(ints):
            return [key for _, key in sorted(tagged)]
    return [(s, i) for s in space.degrees() for i in range(space.dim_at(s))]


# ---------------------------------------------------------------------------
# braidings
# ---------------------------------------------------------------------------

def _braiding_value(ca: CrossedAction, bd, s: int, t: int) -> Cyclotomic:
    v = bd.value(s, t)
    if v.N == ca.N:
        return v
    if ca.N % v.N == 0:
        from .scalars import embed
        return embed(v, ca.N)
    raise ConductorMismatch(
        f"braiding scalars live in Q(zeta_{v.N}) but the action uses "
        f"Q(zeta_{ca.N}); lift the action with at_conductor first"
    )


def r_transform(ca: CrossedAction, bd, x: GradedSpace, y: GradedSpace) -> GradedMap:
    """The braiding-scalar transformation X (x) Y -> T(Y) (x) T(X):
    the block X_s (x) Y_t flips into the (s-cross-t) copy of Y_t
    tensored with the psi(t) copy of X_s, scaled by c_{s,t}."""
    Gm = ca.gamma
    lact = ca.pair.lact
    src = space_tensor(x, y)
    dst = space_tensor(t_space(ca, y), t_space(ca, x))
    blocks = {u: mat_zero(dst.dim_at(u), src.dim_at(u), ca.N) for u in src.degrees()}
    for s, lxs in x.labels.items():
        for t, lys in y.labels.items():
            u = Gm.mul(s, t)
            g_y = cross_left(ca.pair, bd, s, t)
            g_x = bd.psi.map[t]
            tgt = Gm.mul(lact[t][g_y], lact[s][g_x])
            if tgt != u:
                raise InternalCheckFailed(
                    f"braiding block at ({s},{t}) lands in degree {tgt} != {u}"
                )
            scal = _braiding_value(ca, bd, s, t)
            for i, lx in enumerate(lxs):
                for j, ly in enumerate(lys):
                    col = src.pos(u, lx + ly)
                    row = dst.pos(u, ((("T", g_y),) + ly) + ((("T", g_x),) + lx))
                    blocks[u][row][col] = blocks[u][row][col] + scal
    return GradedMap(src, dst, blocks)


def cross_left(mp: MatchedPair, bd, s: int, t: int) -> int:
    """The group element t^-1 |> phi(s^-1) steering the first braiding leg."""
    Gm = mp.Gamma
    return mp.ract[Gm.inv(t)][bd.phi.map[Gm.inv(s)]]


def braiding_morphism(ca: CrossedAction, bd, a: EquivariantObject,
                      b: EquivariantObject) -> GradedMap:
    """The braiding of two equivariant objects: apply the scalar flip
    into the monad legs, then collapse both legs with the objects'
    structure maps."""
    collapse = tensor_map(action_structure_map(ca, b), action_structure_map(ca, a))
    return collapse.compose(r_transform(ca, bd, a.space, b.space))


def _lift_object(ca: CrossedAction, obj: EquivariantObject, M: int) -> EquivariantObject:
    from .scalars import embed
    r = {
        g: {s: [[embed(c, M) if c.N != M else c for c in row] for row in m]
            for s, m in blocks.items()}
        for g, blocks in obj.r.items()
    }
    return EquivariantObject(ca, obj.space, r)


def regular_braiding_matrix(ca: CrossedAction, bd) -> Matrix:
    """The braiding on the regular module's image against itself, as a
    single dim^2 x dim^2 matrix in the Kronecker basis of the module."""
    from .hopf import regular_module
    H = ca.algebra()
    reg = K_functor(H, regular_module(H))
    sig = braiding_morphism(ca, bd, reg, reg)
    dim = H.dim
    out = mat_zero(dim * dim, dim * dim, ca.N)
    for u in sig.src.degrees():
        blk = sig.block(u, ca.N)
        for col_idx, lab in enumerate(sig.src.labels[u]):
            col = lab[0][1] * dim + lab[1][1]
            for row_idx, lab2 in enumerate(sig.dst.labels[u]):
                c = blk[row_idx][col_idx]
                if not c.is_zero():
                    out[lab2[0][1] * dim + lab2[1][1]][col] = c
    return out


def default_object_sample(ca: CrossedAction, seed: int = 0,
                          dim_cap: int = 6) -> list[EquivariantObject]:
    """Unit object, the scalar objects that exist, the regular module's
    image, and a randomized free object on a seeded random base.

    Total dimensions are capped so the exact arithmetic of the full
    braiding verification stays affordable; the regular image is
    skipped above the cap and the free base shrinks to one dimension
    (or drops out) as |G| grows.
    """
    import random
    rng = random.Random(seed)
    out = [unit_object(ca)]
    for s in ca.gamma.elements():
        if s == ca.gamma.identity:
            continue
        obj = scalar_object(ca, s)
        if obj is not None:
            out.append(obj)
    H = ca.algebra()
    if H.dim <= dim_cap:
        from .hopf import regular_module
        out.append(K_functor(H, regular_module(H)))
    ng = ca.G.order
    base_dim = 2 if 2 * ng <= 4 else (1 if ng <= 4 else 0)
    if base_dim:
        degrees = list(ca.gamma.elements())
        base = GradedSpace(ca.gamma, {
            rng.choice(degrees): tuple((("B", seed, i),) for i in range(base_dim))
        })
        free = free_object(ca, base)
        units = {}
        for s in free.space.degrees():
            n = free.space.dim_at(s)
            units[s] = _random_unimodular(rng, n, ca.N)
        out.append(twist_object(free, units))
    return out


def _random_unimodular(rng, n: int, N: int) -> Matrix:
    m = mat_identity(n, N)
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = Cyclotomic.from_rational(rng.choice([-2, -1, 1, 2]), N)
        for k in range(n):
            m[i][k] = m[i][k] + c * m[j][k]
    if n > 1 and rng.random() < 0.5:
        m[0], m[1] = m[1], m[0]
    return m


def default_morphism_sample(ca: CrossedAction, objects: Sequence[EquivariantObject]
                            ) -> list[tuple[EquivariantObject, EquivariantObject, GradedMap]]:
    """Identity maps, a scalar multiple, and (when the regular image is
    in the sample) right multiplications of the algebra, which give
    equivariant endomorphisms that genuinely mix basis vectors."""
    out = []
    for obj in objects[:2]:
        out.append((obj, obj, GradedMap.identity(obj.space, ca.N)))
    if objects:
        obj = objects[0]
        two = Cyclotomic.from_rational(2, ca.N)
        out.append((obj, obj, GradedMap.identity(obj.space, ca.N).scale(two)))
    H = ca.algebra()
    reg = None
    for obj in objects:
        labs = [lb for v in obj.space.labels.values() for lb in v]
        if obj.space.total_dim() == H.dim and \
                all(len(lb) == 1 and lb[0][0] == "M" for lb in labs):
            reg = obj
            break
    if reg is not None:
        for j in range(min(H.dim, 3)):
            m = _right_mult_matrix(H, j)
            if not _degree_diag(reg.space, m):
                continue
            blocks = {}
            for s in reg.space.degrees():
                n = reg.space.dim_at(s)
                blocks[s] = [[m[_orig(reg.space, s, i2)][_orig(reg.space, s, j2)]
                              for j2 in range(n)] for i2 in range(n)]
            gmap = GradedMap(reg.space, reg.space, blocks)
            ok, _ = equivariant_morphism_ok(reg, reg, gmap)
            if ok:
                out.append((reg, reg, gmap))
    return out


def _orig(space: GradedSpace, s: int, i: int) -> int:
    return space.labels[s][i][0][1]


def _degree_diag(space: GradedSpace, m: Matrix) -> bool:
    deg_of = {}
    for s in space.degrees():
        for i in range(space.dim_at(s)):
            deg_of[_orig(space, s, i)] = s
    for i, row in enumerate(m):
        for j, c in enumerate(row):
            if not c.is_zero() and deg_of[i] != deg_of[j]:
                return False
    return True


def _right_mult_matrix(H: HopfAlgebra, j: int) -> Matrix:
    out = [[H.zero()] * H.dim for _ in range(H.dim)]
    for i in range(H.dim):
        for k, c in H.mul_basis(i, j):
            out[k][i] = out[k][i] + c
    return out


def verify_braiding(ca: CrossedAction, bd, objects: Sequence[EquivariantObject] | None = None,
                    seed: int = 0) -> CheckReport:
    """Full matrix verification of a braiding candidate on a sample.

    Four families: the braiding maps are isomorphisms of equivariant
    objects; both hexagon identities (strict tensor, so no associators);
    naturality against sample morphisms; and the monad-level R-matrix
    identities for the scalar transformation, plus its collapse
    agreeing with the braiding.
    """
    M = _lcm(ca.N, bd.N)
    if M != ca.N:
        ca = ca.at_conductor(M)
        if objects is not None:
            objects = [_lift_object(ca, o, M) for o in objects]
    if objects is None:
        objects = default_object_sample(ca, seed=seed)
    objects = list(objects)
    rep = CheckReport()

    braid: dict[tuple[int, int], GradedMap] = {}

    def sigma(i: int, j: int) -> GradedMap:
        if (i, j) not in braid:
            braid[(i, j)] = braiding_morphism(ca, bd, objects[i], objects[j])
        return braid[(i, j)]

    tensors: dict[tuple[int, ...], EquivariantObject] = {}

    def tens(i: int, j: int) -> EquivariantObject:
        if (i, j) not in tensors:
            tensors[(i, j)] = equivariant_tensor(ca, objects[i], objects[j])
        return tensors[(i, j)]

    bad = None
    for i in range(len(objects)):
        for j in range(len(objects)):
            f = sigma(i, j)
            ok, wit = equivariant_morphism_ok(tens(i, j), tens(j, i), f)
            if not ok:
                bad = (i, j, wit)
                break
            for u in f.src.degrees():
                if f.src.dim_at(u) != f.dst.dim_at(u):
                    bad = (i, j, ("degree", u))
                    break
                try:
                    mat_inverse(f.block(u, ca.N))
                except NotInvertible:
                    bad = (i, j, ("singular", u))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("braidings are isomorphisms of equivariant objects", bad is None,
            bad and f"objects {bad[0]},{bad[1]} witness {bad[2]}")

    bad = None
    n = len(objects)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                id_j = GradedMap.identity(objects[j].space, ca.N)
                id_k = GradedMap.identity(objects[k].space, ca.N)
                # first hexagon: braiding X past Y (x) Z
                lhs = braiding_morphism(ca, bd, objects[i], tens(j, k))
                rhs = tensor_map(id_j, sigma(i, k)).compose(
                    tensor_map(sigma(i, j), id_k))
                if not lhs.eq(rhs):
                    bad = ("first", i, j, k)
                    break
                # second hexagon: braiding X (x) Y past Z
                id_i = GradedMap.identity(objects[i].space, ca.N)
                lhs2 = braiding_morphism(ca, bd, tens(i, j), objects[k])
                rhs2 = tensor_map(sigma(i, k), id_j).compose(
                    tensor_map(id_i, sigma(j, k)))
                if not lhs2.eq(rhs2):
                    bad = ("second", i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("hexagon identities", bad is None,
            bad and f"{bad[0]} hexagon fails on objects {bad[1:]}")

    morphisms = default_morphism_sample(ca, objects)
    bad = None
    for ai, (a_src, a_dst, f) in enumerate(morphisms):
        for bi, (b_src, b_dst, g) in enumerate(morphisms):
            lhs = braiding_morphism(ca, bd, a_dst, b_dst).compose(tensor_map(f, g))
            rhs = tensor_map(g, f).compose(braiding_morphism(ca, bd, a_src, b_src))
            if not lhs.eq(rhs):
                bad = (ai, bi)
                break
        if bad:
            break
    rep.add("naturality on sample morphisms", bad is None,
            bad and f"fails for morphism pair {bad}")

    small = [o.space for o in objects if o.space.total_dim() <= 4][:3]
    rep.extend(_monad_rmatrix_checks(ca, bd, small))

    bad = None
    unit = unit_object(ca)
    for i, obj in enumerate(objects):
        left = braiding_morphism(ca, bd, unit, obj)
        right = braiding_morphism(ca, bd, obj, unit)
        if not left.is_identity() or not right.is_identity():
            bad = i
            break
    rep.add("unit braidings are identities", bad is None,
            bad is not None and f"object {bad}")

    bad = None
    small_idx = [i for i, o in enumerate(objects) if o.space.total_dim() <= 4][:3]
    for i in small_idx:
        for j in small_idx:
            for k in small_idx:
                ids = {m: GradedMap.identity(objects[m].space, ca.N)
                       for m in (i, j, k)}
                left = tensor_map(sigma(i, j), ids[k])
                left = tensor_map(ids[j], sigma(i, k)).compose(left)
                left = tensor_map(sigma(j, k), ids[i]).compose(left)
                right = tensor_map(ids[i], sigma(j, k))
                right = tensor_map(sigma(i, k), ids[j]).compose(right)
                right = tensor_map(ids[k], sigma(i, j)).compose(right)
                if not left.eq(right):
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("braid relation on small triples", bad is None,
            bad and f"objects {bad}")
    return rep


def _monad_rmatrix_checks(ca: CrossedAction, bd, spaces: Sequence[GradedSpace]) -> CheckReport:
    """The three R-matrix identities of the induced monad, as literal
    matrix equalities on the given base spaces."""
    rep = CheckReport()
    spaces = list(spaces) or [unit_space(ca.gamma)]

    bad = None
    for x in spaces:
        for y in spaces:
            tx, ty = t_space(ca, x), t_space(ca, y)
            lhs = tensor_map(mu_map(ca, y), mu_map(ca, x)).compose(
                r_transform(ca, bd, tx, ty)).compose(t2_map(ca, x, y))
            rhs = tensor_map(mu_map(ca, y), mu_map(ca, x)).compose(
                t2_map(ca, ty, tx)).compose(t_map(ca, r_transform(ca, bd, x, y)))
            if not lhs.eq(rhs):
                bad = (x, y)
                break
        if bad:
            break
    rep.add("monad identity (r1)", bad is None,
            bad and f"fails on spaces {bad[0]!r}, {bad[1]!r}")

    bad = None
    for x in spaces:
        for y in spaces:
            for z in spaces:
                tz = t_space(ca, z)
                xy = space_tensor(x, y)
                idx = GradedMap.identity(x, ca.N)
                id_ty = GradedMap.identity(t_space(ca, y), ca.N)
                id_tz = GradedMap.identity(tz, ca.N)
                lhs = tensor_map(id_tz, t2_map(ca, x, y)).compose(
                    r_transform(ca, bd, xy, z))
                rhs = tensor_map(mu_map(ca, z),
                                 GradedMap.identity(
                                     space_tensor(t_space(ca, x), t_space(ca, y)),
                                     ca.N)).compose(
                    tensor_map(r_transform(ca, bd, x, tz), id_ty)).compose(
                    tensor_map(idx, r_transform(ca, bd, y, z)))
                if not lhs.eq(rhs):
                    bad = (x, y, z)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("monad identity (r2)", bad is None, bad and "fails on a space triple")

    bad = None
    for x in spaces:
        for y in spaces:
            for z in spaces:
                tx = t_space(ca, x)
                yz = space_tensor(y, z)
                id_tx = GradedMap.identity(tx, ca.N)
                id_ty = GradedMap.identity(t_space(ca, y), ca.N)
                idz = GradedMap.identity(z, ca.N)
                lhs = tensor_map(t2_map(ca, y, z), id_tx).compose(
                    r_transform(ca, bd, x, yz))
                rhs = tensor_map(GradedMap.identity(
                    space_tensor(t_space(ca, y), t_space(ca, z)), ca.N),
                    mu_map(ca, x)).compose(
                    tensor_map(id_ty, r_transform(ca, bd, tx, z))).compose(
                    tensor_map(r_transform(ca, bd, x, y), idz))
                if not lhs.eq(rhs):
                    bad = (x, y, z)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("monad identity (r3)", bad is None, bad and "fails on a space triple")
    return rep
