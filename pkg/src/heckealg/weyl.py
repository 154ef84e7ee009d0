"""Weyl groups, extended groups W. x| R, reduced words, cosets and cones.

Group elements are integer lattice automorphisms stored as tuples of
rows; equality is matrix equality.  Reduced words are cached lazily per
group.  All cone computations are exact over QQ (Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .root_data import RootDatum, pairing, subdatum

Matrix = Tuple[Tuple[int, ...], ...]
Vector = Tuple[int, ...]

ENUMERATION_CAP = 2_000_000


class WeylError(ValueError):
    pass


def identity_matrix(rank: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(rank))
                 for i in range(rank))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rank = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(rank))
                       for j in range(rank)) for i in range(rank))


def mat_apply(m: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in m)


def mat_det(m: Matrix) -> int:
    n = len(m)
    rows = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            f = rows[r][col] * inv
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return int(det)


def mat_inv(m: Matrix) -> Matrix:
    """Exact inverse of an integer matrix with det +-1."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0)
           for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = tuple(tuple(int(x) for x in row[n:]) for row in aug)
    return out


def mat_transpose(m: Matrix) -> Matrix:
    n = len(m)
    return tuple(tuple(m[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    """Lattice automorphism in the finite Weyl group of a datum."""
    matrix: Matrix

    def __repr__(self):
        return "W%s" % (list(map(list, self.matrix)),)


class WeylGroup:
    """The Weyl group of the reduced subsystem of a root datum."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.rank = rd.rank
        self.simple_matrices: Tuple[Matrix, ...] = rd.simple_reflections()
        self.identity = WeylElement(identity_matrix(rd.rank))
        self._elements: Optional[List[WeylElement]] = None
        self._word_cache: Dict[Matrix, Tuple[int, ...]] = {}
        self._len_cache: Dict[Matrix, int] = {}

    # -- enumeration ---------------------------------------------------

    def enumerate(self) -> List[WeylElement]:
        """All elements, by closure from the simple reflections."""
        if self._elements is None:
            seen = {self.identity.matrix}
            frontier = [self.identity.matrix]
            while frontier:
                nxt = []
                for m in frontier:
                    for s in self.simple_matrices:
                        p = mat_mul(s, m)
                        if p not in seen:
                            if len(seen) >= ENUMERATION_CAP:
                                raise WeylError("group enumeration cap exceeded")
                            seen.add(p)
                            nxt.append(p)
                frontier = nxt
            self._elements = [WeylElement(m) for m in sorted(seen)]
        return self._elements

    def order(self) -> int:
        return len(self.enumerate())

    # -- length and words ------------------------------------------------

    def length(self, w: WeylElement) -> int:
        """Number of reduced positive roots sent to negative roots."""
        cached = self._len_cache.get(w.matrix)
        if cached is not None:
            return cached
        n = 0
        for r in self.rd.reduced_positive:
            if not self.rd.is_positive(mat_apply(w.matrix, r.vector)):
                n += 1
        self._len_cache[w.matrix] = n
        return n

    def reduced_word(self, w: WeylElement) -> Tuple[int, ...]:
        """Reduced word in simple-reflection indices (0-based), by descents."""
        if w.matrix in self._word_cache:
            return self._word_cache[w.matrix]
        word_rev: List[int] = []
        m = w.matrix
        guard = len(self.rd.reduced_positive) + 1
        while m != self.identity.matrix:
            for i, s in enumerate(self.rd.simple_roots):
                if not self.rd.is_positive(mat_apply(m, s.vector)):
                    m = mat_mul(m, self.simple_matrices[i])
                    word_rev.append(i)
                    break
            else:
                raise WeylError("element has no descent but is not the identity")
            guard -= 1
            if guard < 0:
                raise WeylError("descent loop did not terminate")
        word = tuple(reversed(word_rev))
        self._word_cache[w.matrix] = word
        return word

    def from_word(self, word: Iterable[int]) -> WeylElement:
        m = self.identity.matrix
        for i in word:
            m = mat_mul(m, self.simple_matrices[i])
        return WeylElement(m)

    def mult(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return WeylElement(mat_mul(a.matrix, b.matrix))

    def inv(self, a: WeylElement) -> WeylElement:
        return WeylElement(mat_inv(a.matrix))


def enumerate_group(rd: RootDatum) -> List[WeylElement]:
    return WeylGroup(rd).enumerate()


def reduced_word(group: WeylGroup, w: WeylElement) -> Tuple[int, ...]:
    return group.reduced_word(w)


def min_coset_reps(group: WeylGroup, subgroup: Sequence[WeylElement]
                   ) -> List[WeylElement]:
    """Unique shortest representatives of the left cosets W / W_t."""
    sub = {s.matrix for s in subgroup}
    if group.identity.matrix not in sub:
        raise WeylError("subgroup must contain the identity")
    for a in sub:
        for b in sub:
            if mat_mul(a, b) not in sub:
                raise WeylError("given set is not closed under multiplication")
    reps: List[WeylElement] = []
    assigned = set()
    elements = group.enumerate()
    for w in sorted(elements, key=lambda w: (group.length(w), w.matrix)):
        if w.matrix in assigned:
            continue
        coset = {mat_mul(w.matrix, s) for s in sub}
        lw = group.length(w)
        ties = [m for m in coset if group.length(WeylElement(m)) == lw]
        if len(ties) != 1:
            raise WeylError("minimal length representative is not unique")
        assigned |= coset
        reps.append(w)
    if len(assigned) != len(elements):
        raise WeylError("cosets do not partition the group")
    return reps


# ---------------------------------------------------------------------------
# 2-cocycles and R-groups
# ---------------------------------------------------------------------------

class Cocycle:
    """Normalized {+1,-1}-valued 2-cocycle on a finite label group."""

    def __init__(self, labels: Sequence[str], table: Dict[Tuple[str, str], int]):
        self.labels = tuple(labels)
        self.table = dict(table)
        for a in self.labels:
            for b in self.labels:
                if (a, b) not in self.table:
                    raise WeylError("cocycle table incomplete at %r" % ((a, b),))
                if self.table[(a, b)] not in (1, -1):
                    raise WeylError("cocycle values must be +-1")

    @classmethod
    def trivial(cls, labels: Sequence[str]) -> "Cocycle":
        return cls(labels, {(a, b): 1 for a in labels for b in labels})

    def __call__(self, a: str, b: str) -> int:
        return self.table[(a, b)]

    def check(self, mult: Dict[Tuple[str, str], str], identity: str) -> None:
        """Exhaustive cocycle identity and normalization check."""
        for a in self.labels:
            if self(identity, a) != 1 or self(a, identity) != 1:
                raise WeylError("cocycle is not normalized")
        for a in self.labels:
            for b in self.labels:
                for c in self.labels:
                    lhs = self(a, b) * self(mult[(a, b)], c)
                    rhs = self(b, c) * self(a, mult[(b, c)])
                    if lhs != rhs:
                        raise WeylError("cocycle identity fails at %r" % ((a, b, c),))


class RGroup:
    """Finite diagram group acting on the lattice.

    Each label carries an integer action matrix (stabilizing the set of
    positive roots of the ambient datum) and an optional translation
    part: a tuple of Fractions mod 1 describing how the element moves
    finite-order torus points beyond its linear action.
    """

    def __init__(self, labels: Sequence[str], matrices: Dict[str, Matrix],
                 table: Dict[Tuple[str, str], str], identity: str = "e",
                 translations: Dict[str, Tuple[Fraction, ...]] | None = None):
        self.labels = tuple(labels)
        self.matrices = dict(matrices)
        self.table = dict(table)
        self.identity = identity
        rank = len(next(iter(matrices.values()))) if matrices else 0
        self.translations = {
            l: tuple(translations[l]) if translations and l in translations
            else tuple(Fraction(0) for _ in range(rank))
            for l in self.labels}
        self._inverse = {}
        for a in self.labels:
            for b in self.labels:
                if self.table[(a, b)] == identity:
                    self._inverse[a] = b
        for a in self.labels:
            if a not in self._inverse:
                raise WeylError("label %r has no inverse" % (a,))

    @classmethod
    def trivial(cls, rank: int) -> "RGroup":
        return cls(("e",), {"e": identity_matrix(rank)}, {("e", "e"): "e"})

    def mult(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def inv(self, a: str) -> str:
        return self._inverse[a]

    def matrix(self, a: str) -> Matrix:
        return self.matrices[a]

    def order(self) -> int:
        return len(self.labels)

    def validate_action(self, rd: RootDatum) -> None:
        for l in self.labels:
            m = self.matrices[l]
            for r in rd.roots:
                img = mat_apply(m, r.vector)
                if not rd.has_root(img):
                    raise WeylError("diagram label %r does not permute roots" % (l,))
            for r in rd.positive_roots:
                if not rd.is_positive(mat_apply(m, r.vector)):
                    raise WeylError(
                        "diagram label %r does not stabilize the positive system"
                        % (l,))


@dataclass(frozen=True)
class ExtendedWeylElement:
    """Element of W. x| R; acts on the lattice as weyl o diagram."""
    weyl: WeylElement
    diagram: str

    def __repr__(self):
        return "Ext(%r, %s)" % (self.weyl, self.diagram)


class ExtendedGroup:
    """W_ext = W(reduced system) x| R, with the R-action by matrices."""

    def __init__(self, rd: RootDatum, rgroup: RGroup | None = None):
        self.rd = rd
        self.weyl = WeylGroup(rd)
        self.rgroup = rgroup or RGroup.trivial(rd.rank)
        self.rgroup.validate_action(rd)
        self.identity = ExtendedWeylElement(self.weyl.identity,
                                            self.rgroup.identity)

    def elements(self) -> List[ExtendedWeylElement]:
        return [ExtendedWeylElement(w, l) for l in self.rgroup.labels
                for w in self.weyl.enumerate()]

    def order(self) -> int:
        return self.weyl.order() * self.rgroup.order()

    def action_matrix(self, g: ExtendedWeylElement) -> Matrix:
        return mat_mul(g.weyl.matrix, self.rgroup.matrix(g.diagram))

    def conj_weyl(self, label: str, w: WeylElement) -> WeylElement:
        a = self.rgroup.matrix(label)
        return WeylElement(mat_mul(mat_mul(a, w.matrix), mat_inv(a)))

    def mult(self, g: ExtendedWeylElement, h: ExtendedWeylElement
             ) -> ExtendedWeylElement:
        u = self.weyl.mult(g.weyl, self.conj_weyl(g.diagram, h.weyl))
        return ExtendedWeylElement(u, self.rgroup.mult(g.diagram, h.diagram))

    def inv(self, g: ExtendedWeylElement) -> ExtendedWeylElement:
        linv = self.rgroup.inv(g.diagram)
        u = self.conj_weyl(linv, self.weyl.inv(g.weyl))
        return ExtendedWeylElement(u, linv)

    # -- action on finite-order torus points ----------------------------

    def point_action_matrix(self, g: ExtendedWeylElement) -> Matrix:
        """Matrix acting on point exponent vectors: inverse transpose."""
        return mat_transpose(mat_inv(self.action_matrix(g)))

    def act_point(self, g: ExtendedWeylElement, exponents: Vector, order: int
                  ) -> Vector:
        m = self.point_action_matrix(g)
        moved = mat_apply(m, exponents)
        tr = self.rgroup.translations[g.diagram]
        out = []
        for x, t in zip(moved, tr):
            shift = t * order
            if shift.denominator != 1:
                raise WeylError(
                    "translation part with denominator %d does not preserve "
                    "points of order %d" % (t.denominator, order))
            out.append((x + int(shift)) % order)
        return tuple(out)


# ---------------------------------------------------------------------------
# Stabilizers of finite-order torus points
# ---------------------------------------------------------------------------

def root_value_is(rd_root: Vector, exponents: Vector, order: int, target: int
                  ) -> bool:
    """Whether alpha(t) equals the target (+1 or -1) at the given point."""
    k = sum(a * b for a, b in zip(rd_root, exponents)) % order
    if target == 1:
        return k == 0
    return 2 * k % order == 0 and k != 0


@dataclass
class PointStabilizer:
    """Stabilizer of a point split as reflection part x| relative diagram part."""
    elements: List[ExtendedWeylElement]
    subsystem: RootDatum
    reflection_part: List[WeylElement]
    diagram_part: List[ExtendedWeylElement]
    factorization: Dict[ExtendedWeylElement,
                        Tuple[WeylElement, ExtendedWeylElement]]


def stabilizer_of_point(group: ExtendedGroup, exponents: Vector, order: int
                        ) -> PointStabilizer:
    """All extended elements fixing the point, with the W-deg/R-deg split.

    The reflection part is generated by s_alpha with alpha(t) = 1, or
    alpha(t) = -1 when the coroot is halvable (this includes the case of
    a doubled root 2*alpha with 2*alpha(t) = 1).  The remainder maps to
    the relative diagram part, singled out by stabilization of the
    subsystem's positive roots.
    """
    rd = group.rd
    exponents = tuple(e % order for e in exponents)
    stab = [g for g in group.elements()
            if group.act_point(g, exponents, order) == exponents]

    sub_vectors = []
    for r in rd.roots:
        if root_value_is(r.vector, exponents, order, 1):
            sub_vectors.append(r.vector)
        elif all(c % 2 == 0 for c in r.coroot) and \
                root_value_is(r.vector, exponents, order, -1):
            sub_vectors.append(r.vector)
    subsystem = subdatum(rd, sub_vectors)
    sub_group = WeylGroup(subsystem)
    reflection_part = sub_group.enumerate()
    refl_set = {w.matrix for w in reflection_part}

    del refl_set
    sub_pos = [r.vector for r in subsystem.positive_roots]
    sub_simples = subsystem.simple_roots
    sub_refl = {s.vector: subsystem.reflection(s) for s in subsystem.roots}

    def split(mg: Matrix) -> Tuple[Matrix, Matrix]:
        """mg = u * rest with u in W(subsystem) and rest preserving the
        subsystem positives; found by peeling descents on the left."""
        rest = mg
        u = identity_matrix(rd.rank)
        for _ in range(len(subsystem.roots) + 1):
            bad = None
            for s in sub_simples:
                img = mat_apply(rest, s.vector)
                if not subsystem.is_positive(img):
                    bad = subsystem.root(tuple(-c for c in img))
                    break
            if bad is None:
                return u, rest
            sb = sub_refl[bad.vector]
            rest = mat_mul(sb, rest)
            u = mat_mul(u, sb)
        # descent loop failed to settle; fall back to an exhaustive scan
        for w in reflection_part:
            cand = mat_mul(mat_inv(w.matrix), mg)
            if all(subsystem.is_positive(mat_apply(cand, v)) for v in sub_pos):
                return w.matrix, cand
        raise WeylError("stabilizer element admits no W-deg/R-deg split")

    diagram_part: List[ExtendedWeylElement] = []
    factorization: Dict[ExtendedWeylElement,
                        Tuple[WeylElement, ExtendedWeylElement]] = {}
    for g in stab:
        mg = group.action_matrix(g)
        u_mat, rest = split(mg)
        gamma = ExtendedWeylElement(
            WeylElement(mat_mul(rest, mat_inv(group.rgroup.matrix(g.diagram)))),
            g.diagram)
        factorization[g] = (WeylElement(u_mat), gamma)
        if u_mat == identity_matrix(rd.rank):
            diagram_part.append(g)
    return PointStabilizer(stab, subsystem, reflection_part, diagram_part,
                           factorization)


# ---------------------------------------------------------------------------
# Cones (dominant / antidominant-obtuse) -- exact rational arithmetic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConeMembership:
    dominant: bool
    antidominant_obtuse: bool            # closed cone of nonpositive coroot combos
    antidominant_obtuse_interior: bool   # strict and full-rank in the ambient space
    essentially_interior: bool           # strict, modulo the central subspace

    def labels(self) -> frozenset:
        out = set()
        if self.dominant:
            out.add("dominant")
        if self.antidominant_obtuse:
            out.add("antidominant_obtuse")
        if self.antidominant_obtuse_interior:
            out.add("antidominant_obtuse_interior")
        return frozenset(out) if out else frozenset({"none"})


def _solve_coroot_combination(rd: RootDatum, x: Sequence[Fraction]):
    """Solve x = sum c_i alpha_i^vee + v with alpha_j(v) = 0 for simple alpha_j.

    Returns (coefficients c, residual v).  The Cartan-type matrix
    <alpha_i, alpha_j^vee> is invertible since the simple coroots are
    linearly independent.
    """
    simples = rd.simple_roots
    k = len(simples)
    if k == 0:
        return [], list(map(Fraction, x))
    a = [[Fraction(pairing(simples[i].vector, simples[j].coroot))
          for j in range(k)] for i in range(k)]
    b = [Fraction(sum(Fraction(si) * xi for si, xi in zip(simples[i].vector, x)))
         for i in range(k)]
    # Gaussian elimination
    for col in range(k):
        piv = next(r for r in range(col, k) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        b[col] *= inv
        for r in range(k):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                b[r] -= f * b[col]
    coeffs = b
    v = list(map(Fraction, x))
    for c, s in zip(coeffs, simples):
        for i in range(rd.rank):
            v[i] -= c * s.coroot[i]
    return coeffs, v


def cone_classify(rd: RootDatum, x: Sequence[Fraction]) -> ConeMembership:
    """Exact membership in the dominant and antidominant-obtuse cones."""
    if len(x) != rd.rank:
        raise WeylError("vector length does not match rank")
    x = [Fraction(v) for v in x]
    dominant = all(sum(Fraction(a) * b for a, b in zip(r.vector, x)) >= 0
                   for r in rd.positive_roots)
    coeffs, resid = _solve_coroot_combination(rd, x)
    in_span = all(v == 0 for v in resid)
    closed = in_span and all(c <= 0 for c in coeffs)
    strict = all(c < 0 for c in coeffs)
    full_rank = len(rd.simple_roots) == rd.rank
    interior = in_span and strict and full_rank
    essentially = strict
    return ConeMembership(dominant, closed, interior, essentially)
