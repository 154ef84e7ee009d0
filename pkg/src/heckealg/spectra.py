"""Counting and classification of irreducible representations.

The extended-quotient bookkeeping: points of finite order on the torus,
their stabilizers in W_ext, and the number of cocycle-projective
irreducibles of each stabilizer (= number of cocycle-regular conjugacy
classes).  An independent oracle computes the dimension of the centre of
the explicitly constructed twisted group algebra over QQ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .root_data import RootDatum
from .weyl import (Cocycle, ExtendedGroup, ExtendedWeylElement,
                   cone_classify)


class SpectraError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteTorusPoint:
    """exp(2*pi*i*exponents/order) in the unitary torus."""
    order: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise SpectraError("order must be positive")
        object.__setattr__(self, "exponents",
                           tuple(e % self.order for e in self.exponents))

    def rescaled(self, new_order: int) -> "FiniteTorusPoint":
        if new_order % self.order:
            raise SpectraError("new order must be a multiple of the old one")
        f = new_order // self.order
        return FiniteTorusPoint(new_order, tuple(e * f for e in self.exponents))


@dataclass(frozen=True)
class CentralCharacterPoint:
    finite_part: FiniteTorusPoint
    z_exponents: Tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# Finite groups with multiplication tables
# ---------------------------------------------------------------------------

class FiniteGroup:
    """Concrete finite group: elements are hashable, multiplication is a
    callable; a cocycle value is attached to each ordered pair."""

    def __init__(self, elements: Sequence, mult, inv, identity,
                 cocycle_fn=None):
        self.elements = list(elements)
        self.mult = mult
        self.inv = inv
        self.identity = identity
        self.cocycle_fn = cocycle_fn or (lambda a, b: 1)

    @classmethod
    def from_extended(cls, group: ExtendedGroup,
                      elements: Optional[Sequence[ExtendedWeylElement]] = None,
                      cocycle: Optional[Cocycle] = None) -> "FiniteGroup":
        els = list(elements) if elements is not None else group.elements()
        coc = cocycle
        fn = (lambda a, b: coc(a.diagram, b.diagram)) if coc else None
        return cls(els, group.mult, group.inv, group.identity, fn)

    def conjugacy_classes(self) -> List[List]:
        seen = set()
        classes = []
        for g in self.elements:
            if g in seen:
                continue
            cls_ = set()
            for h in self.elements:
                c = self.mult(self.mult(h, g), self.inv(h))
                cls_.add(c)
            classes.append(sorted(cls_, key=self.elements.index))
            seen |= cls_
        return classes

    def centralizer(self, g) -> List:
        return [h for h in self.elements
                if self.mult(h, g) == self.mult(g, h)]


def count_twisted_irreps(group: FiniteGroup) -> int:
    """Number of cocycle-regular conjugacy classes: g is regular iff
    cocycle(g, h) = cocycle(h, g) for all h centralizing g."""
    count = 0
    for cls_ in group.conjugacy_classes():
        regular_flags = []
        for g in cls_:
            reg = all(group.cocycle_fn(g, h) == group.cocycle_fn(h, g)
                      for h in group.centralizer(g))
            regular_flags.append(reg)
        if any(regular_flags) != all(regular_flags):
            raise SpectraError("cocycle-regularity is not a class function")
        if regular_flags[0]:
            count += 1
    return count


def _commutation_rows(group: FiniteGroup) -> List[List[Fraction]]:
    els = group.elements
    n = len(els)
    index = {g: i for i, g in enumerate(els)}
    rows: List[List[Fraction]] = []
    for h in els:
        # e_h x = x e_h: coefficient equation per basis element k:
        #   x_{h^{-1}k} c(h, h^{-1}k) - x_{k h^{-1}} c(k h^{-1}, h) = 0
        hinv = group.inv(h)
        for k in els:
            row = [Fraction(0)] * n
            g1 = group.mult(hinv, k)
            g2 = group.mult(k, hinv)
            row[index[g1]] += group.cocycle_fn(h, g1)
            row[index[g2]] -= group.cocycle_fn(g2, h)
            if any(row):
                rows.append(row)
    return rows


def twisted_algebra_center_dim(group: FiniteGroup) -> int:
    """Dimension over QQ of the centre of the twisted group algebra,
    solved from the exact linear commutation system.  Independent oracle
    for count_twisted_irreps."""
    rows = _commutation_rows(group)
    rank = _row_rank(rows, len(group.elements))
    return len(group.elements) - rank


def twisted_algebra_center_basis(group: FiniteGroup) -> List[List[Fraction]]:
    """Exact basis (coefficient vectors over the group basis) of the
    centre of the twisted group algebra."""
    n = len(group.elements)
    rows = _commutation_rows(group)
    mat = [row[:] for row in rows]
    pivots: List[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * n
        vec[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            vec[pcol] = -mat[i][fcol]
        basis.append(vec)
    return basis


def _row_rank(rows: List[List[Fraction]], width: int) -> int:
    mat = [row[:] for row in rows]
    rank = 0
    col = 0
    for col in range(width):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


# ---------------------------------------------------------------------------
# Extended quotients
# ---------------------------------------------------------------------------

@dataclass
class OrbitReport:
    representative: FiniteTorusPoint
    orbit_size: int
    stabilizer_order: int
    count: int


def _common_order(group: ExtendedGroup, points: Sequence[FiniteTorusPoint]
                  ) -> int:
    import math
    order = 1
    for p in points:
        order = order * p.order // math.gcd(order, p.order)
    for l in group.rgroup.labels:
        for t in group.rgroup.translations[l]:
            order = order * t.denominator // math.gcd(order, t.denominator)
    return order


def extended_quotient_count(group: ExtendedGroup, cocycle: Cocycle,
                            points: Sequence[FiniteTorusPoint],
                            canonicalize=None
                            ) -> Tuple[int, List[OrbitReport]]:
    """Total count and per-orbit breakdown of the twisted extended
    quotient over the W_ext-closure of the given points.

    ``canonicalize`` optionally maps an exponent vector to a canonical
    representative of its class on a quotient torus (the group action
    must descend to classes); counting then happens on classes.
    """
    if not points:
        return 0, []
    order = _common_order(group, points)
    canon = canonicalize or (lambda e, n: e)
    pts = {canon(p.rescaled(order).exponents, order) for p in points}
    # close under the action
    els = group.elements()
    frontier = list(pts)
    while frontier:
        nxt = []
        for e in frontier:
            for g in els:
                f = canon(group.act_point(g, e, order), order)
                if f not in pts:
                    pts.add(f)
                    nxt.append(f)
        frontier = nxt
    reports: List[OrbitReport] = []
    remaining = set(pts)
    total = 0
    while remaining:
        e = min(remaining)
        orbit = {e}
        stab = []
        for g in els:
            f = canon(group.act_point(g, e, order), order)
            orbit.add(f)
            if f == e:
                stab.append(g)
        remaining -= orbit
        sub = FiniteGroup.from_extended(group, stab, cocycle)
        cnt = count_twisted_irreps(sub)
        reports.append(OrbitReport(FiniteTorusPoint(order, e), len(orbit),
                                   len(stab), cnt))
        total += cnt
    return total, reports


# ---------------------------------------------------------------------------
# Central characters and analytic classification flags
# ---------------------------------------------------------------------------

def central_character(finite_part: FiniteTorusPoint,
                      gl_partitions: Sequence[Sequence[int]],
                      group: Optional[ExtendedGroup] = None
                      ) -> CentralCharacterPoint:
    """Attach the real-split exponents of the Jordan cocharacter: a block
    of size p places weights (p-1, p-3, .., 1-p) on its coordinates."""
    rank = len(finite_part.exponents)
    sizes = sum(sum(p) for p in gl_partitions)
    if sizes != rank:
        raise SpectraError("partitions cover %d coordinates, torus has %d"
                           % (sizes, rank))
    z_exps: List[Fraction] = []
    for partition in gl_partitions:
        for part in partition:
            z_exps.extend(Fraction(part - 1 - 2 * k) for k in range(part))
    point = CentralCharacterPoint(finite_part, tuple(z_exps))
    if group is None:
        return point
    return _canonicalize_orbit(group, point)


def _canonicalize_orbit(group: ExtendedGroup, point: CentralCharacterPoint
                        ) -> CentralCharacterPoint:
    order = point.finite_part.order
    best = None
    for g in group.elements():
        fin = group.act_point(g, point.finite_part.exponents, order)
        m = group.point_action_matrix(g)
        zs = tuple(sum(Fraction(row[k]) * point.z_exponents[k]
                       for k in range(len(point.z_exponents))) for row in m)
        key = (fin, zs)
        if best is None or key < best:
            best = key
    return CentralCharacterPoint(FiniteTorusPoint(order, best[0]), best[1])


@dataclass(frozen=True)
class ModuleClassification:
    tempered: bool
    discrete_series: bool
    essentially_discrete: bool


def classify(weights: Sequence[Sequence[Fraction]], rd: RootDatum
             ) -> ModuleClassification:
    """Weight-cone classification of a module from its real-split weight
    exponents: tempered iff all weights lie in the closed antidominant
    obtuse cone, discrete series iff all lie in its interior, essentially
    discrete iff interior modulo the central subspace."""
    flags = [cone_classify(rd, w) for w in weights]
    tempered = all(f.antidominant_obtuse for f in flags)
    discrete = bool(flags) and all(f.antidominant_obtuse_interior for f in flags)
    essential = bool(flags) and all(f.essentially_interior for f in flags)
    return ModuleClassification(tempered, discrete, essential)


def is_distinguished(side: str, partition: Sequence[int]) -> bool:
    """Distinguished unipotent classes by partition combinatorics:
    GL needs a single Jordan block, Sp all parts even and distinct,
    SO all parts odd and distinct."""
    parts = [p for p in partition if p]
    if any(p < 0 for p in partition):
        raise SpectraError("partition parts must be nonnegative")
    if side == "GL":
        return len(parts) == 1
    if side in ("Sp", "S"):
        return all(p % 2 == 0 for p in parts) and len(set(parts)) == len(parts)
    if side in ("SO", "O"):
        return all(p % 2 == 1 for p in parts) and len(set(parts)) == len(parts)
    raise SpectraError("unknown side %r" % (side,))
