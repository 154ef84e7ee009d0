"""Twisted affine and graded Hecke algebras with exact arithmetic.

The affine algebra attached to a root datum R, an extended group
W = W(R) x| RGroup, invariant parameters lambda / lambda^* and z-variables
z_1..z_d lives on O(T x (C^x)^d) (x) C[W] in Bernstein normal form: every
element is a finite sum  sum_w  c_w * N_w  with the theta-coefficient on
the left.  Multiplication is driven by three exact rules:

* quadratic:     (N_s + z_j^{-lambda}) (N_s - z_j^{lambda}) = 0,
* commutation:   N_s theta_x = theta_{s x} N_s + G_alpha(x),
* diagram:       N_g N_w theta_x N_g^{-1} = N_{g w g^{-1}} theta_{g x},
                 N_g N_{g'} = cocycle(g, g') N_{g g'},

where G_alpha(x) is the solved Bernstein-Lusztig correction, a pure
theta-term built from the telescoping quotient
(theta_x - theta_{s x}) / (theta_0 - theta_{-alpha})  (or the doubled
denominator theta_0 - theta_{-2 alpha} together with an extra
theta_{-alpha} (z^{lambda*} - z^{-lambda*}) summand when the coroot of
alpha is divisible by two).

The graded algebra has coefficients in S(t^*) (x) ZZ[r_1..r_d] and the
commutation rule  N_s xi = (s xi) N_s + k(alpha) r_j (xi - s xi)/alpha,
with the group algebra embedded (no quadratic correction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .coeffs import LaurentZ, TorusAlgebraElement, z_bracket
from .root_data import (Root, RootDatum, pairing, vadd, vneg, vscale,
                        vsub)
from .weyl import (Cocycle, ExtendedGroup, ExtendedWeylElement, Matrix,
                   RGroup, Vector, WeylElement, WeylGroup,
                   identity_matrix, mat_apply, mat_det, mat_inv, mat_mul,
                   stabilizer_of_point)


class HeckeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Bernstein division
# ---------------------------------------------------------------------------

def bernstein_divide(x: Vector, alpha: Root, doubled: bool, one
                     ) -> TorusAlgebraElement:
    """The telescoping quotient D with D*(theta_0 - theta_{-alpha}) =
    theta_x - theta_{s_alpha x}  (denominator theta_0 - theta_{-2 alpha}
    in the doubled case).

    Closed form for n = <x, alpha^vee>: sum_{k=0}^{n-1} theta_{x - k alpha}
    for n > 0, zero for n = 0, minus the mirrored sum for n < 0; the
    doubled case steps by 2 alpha over n/2 terms and requires n even.
    """
    x = tuple(x)
    n = pairing(x, alpha.coroot)
    rank = len(x)
    out = TorusAlgebraElement.zero(rank)
    if doubled:
        if n % 2:
            raise HeckeError("doubled division needs an even pairing, got %d" % n)
        step = vscale(alpha.vector, 2)
        m = n // 2
        if m > 0:
            terms = {}
            y = x
            for _ in range(m):
                terms[y] = terms.get(y, 0 * one) + one
                y = vsub(y, step)
            out = TorusAlgebraElement(rank, terms)
        elif m < 0:
            terms = {}
            y = x
            for _ in range(-m):
                y = vadd(y, step)
                terms[y] = terms.get(y, 0 * one) - one
            out = TorusAlgebraElement(rank, terms)
    else:
        if n > 0:
            terms = {}
            y = x
            for _ in range(n):
                terms[y] = terms.get(y, 0 * one) + one
                y = vsub(y, alpha.vector)
            out = TorusAlgebraElement(rank, terms)
        elif n < 0:
            terms = {}
            y = x
            for _ in range(-n):
                y = vadd(y, alpha.vector)
                terms[y] = terms.get(y, 0 * one) - one
            out = TorusAlgebraElement(rank, terms)
    return out


# ---------------------------------------------------------------------------
# Affine descriptor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimpleRootInfo:
    index: int
    root: Root
    matrix: Matrix
    zvar: int            # 1-based z-variable
    lam: int
    lam_star: Optional[int]
    halvable: bool


class AffineDescriptor:
    """All data of a twisted affine Hecke algebra, plus the scalar mode.

    ``z_values=None`` gives the symbolic algebra over ZZ[z^{+-1}]; a tuple
    of positive rationals gives the specialization at those values (the
    coefficients become Fractions).
    """

    def __init__(self, rd: RootDatum, wext: ExtendedGroup,
                 lam: Dict[Vector, int], lam_star: Dict[Vector, int],
                 cocycle: Cocycle,
                 z_values: Optional[Tuple[Fraction, ...]] = None):
        if wext.rd is not rd:
            raise HeckeError("extended group must be built on the same datum")
        self.rd = rd
        self.wext = wext
        self.d = rd.num_z_vars
        self.lam = {tuple(k): v for k, v in lam.items()}
        self.lam_star = {tuple(k): v for k, v in lam_star.items()}
        self.cocycle = cocycle
        self.z_values = tuple(Fraction(z) for z in z_values) if z_values else None
        if self.z_values is not None:
            if len(self.z_values) != self.d:
                raise HeckeError("expected %d z-values" % self.d)
            if any(z <= 0 for z in self.z_values):
                raise HeckeError("z-values must be positive rationals")
        self._validate_params()
        self._matrix_cache: set = set()
        self.simple_info = tuple(self._simple_info(i)
                                 for i in range(len(rd.simple_roots)))
        cocycle.check({(a, b): wext.rgroup.mult(a, b)
                       for a in cocycle.labels for b in cocycle.labels},
                      wext.rgroup.identity)

    # -- validation ----------------------------------------------------

    def _validate_params(self):
        rd = self.rd
        nondiv = {r.vector: r for r in rd.nondivisible_roots}
        halvable = {v for v, r in nondiv.items()
                    if all(c % 2 == 0 for c in r.coroot)}
        if set(self.lam) != set(nondiv):
            raise HeckeError("lambda must be defined exactly on the "
                             "nondivisible roots")
        if set(self.lam_star) != halvable:
            raise HeckeError("lambda* must be defined exactly on the roots "
                             "with halvable coroot")
        if any(v < 0 for v in self.lam.values()) or \
           any(v < 0 for v in self.lam_star.values()):
            raise HeckeError("parameters must be nonnegative integers")
        mats = list(rd.simple_reflections())
        mats += [self.wext.rgroup.matrix(l) for l in self.wext.rgroup.labels]
        for m in mats:
            for v in nondiv:
                w = mat_apply(m, v)
                if self.lam[v] != self.lam.get(w):
                    raise HeckeError("lambda is not W-invariant")
                if v in halvable and self.lam_star[v] != self.lam_star.get(w):
                    raise HeckeError("lambda* is not W-invariant")
        for l in self.wext.rgroup.labels:
            m = self.wext.rgroup.matrix(l)
            for r in rd.roots:
                img = rd.root(mat_apply(m, r.vector))
                if img.component_index != r.component_index:
                    raise HeckeError("z-variable assignment is not stable "
                                     "under the diagram group")

    def _simple_info(self, i: int) -> SimpleRootInfo:
        root = self.rd.simple_roots[i]
        halv = all(c % 2 == 0 for c in root.coroot)
        return SimpleRootInfo(
            index=i, root=root, matrix=self.rd.simple_reflections()[i],
            zvar=root.component_index, lam=self.lam[root.vector],
            lam_star=self.lam_star.get(root.vector), halvable=halv)

    # -- scalar ring ---------------------------------------------------

    def scalar_one(self):
        if self.z_values is None:
            return LaurentZ.one(self.d)
        return Fraction(1)

    def zbracket(self, j: int, m: int):
        """z_j^m - z_j^{-m} in the active scalar ring."""
        if self.z_values is None:
            return z_bracket(self.d, j, m)
        z = self.z_values[j - 1]
        return z ** m - z ** (-m)

    def zmonomial(self, exps: Sequence[int]):
        if self.z_values is None:
            return LaurentZ.monomial(self.d, tuple(exps))
        v = Fraction(1)
        for z, e in zip(self.z_values, exps):
            v *= z ** e
        return v

    # -- element constructors -------------------------------------------

    def zero(self) -> "HeckeElement":
        return HeckeElement({})

    def unit(self) -> "HeckeElement":
        return HeckeElement({self.wext.identity: TorusAlgebraElement.theta(
            (0,) * self.rd.rank, self.scalar_one())})

    def theta_elem(self, x: Sequence[int]) -> "HeckeElement":
        return HeckeElement({self.wext.identity: TorusAlgebraElement.theta(
            tuple(x), self.scalar_one())})

    def n_simple(self, i: int) -> "HeckeElement":
        w = ExtendedWeylElement(WeylElement(self.simple_info[i].matrix),
                                self.wext.rgroup.identity)
        return HeckeElement({w: TorusAlgebraElement.theta(
            (0,) * self.rd.rank, self.scalar_one())})

    def n_gamma(self, label: str) -> "HeckeElement":
        w = ExtendedWeylElement(self.wext.weyl.identity, label)
        return HeckeElement({w: TorusAlgebraElement.theta(
            (0,) * self.rd.rank, self.scalar_one())})

    def n_element(self, g: ExtendedWeylElement) -> "HeckeElement":
        return HeckeElement({g: TorusAlgebraElement.theta(
            (0,) * self.rd.rank, self.scalar_one())})

    def element(self, terms: Dict[ExtendedWeylElement, TorusAlgebraElement]
                ) -> "HeckeElement":
        return HeckeElement(terms)

    def specialized(self, z_values: Sequence[Fraction]) -> "AffineDescriptor":
        return AffineDescriptor(self.rd, self.wext, self.lam, self.lam_star,
                                self.cocycle, tuple(z_values))


def spread_invariant(rd: RootDatum, wext: ExtendedGroup,
                     seeds: Dict[Vector, int]) -> Dict[Vector, int]:
    """Complete a root->value map to a W_ext-invariant function on the
    W_ext-orbits of the seed roots."""
    mats = [w.matrix for w in wext.weyl.enumerate()]
    rmats = [wext.rgroup.matrix(l) for l in wext.rgroup.labels]
    out: Dict[Vector, int] = {}
    for v, val in seeds.items():
        for m in mats:
            for rm in rmats:
                w = mat_apply(m, mat_apply(rm, v))
                if out.get(w, val) != val:
                    raise HeckeError("seed values collide on an orbit")
                out[w] = val
    return out


# ---------------------------------------------------------------------------
# Elements and multiplication
# ---------------------------------------------------------------------------

class HeckeElement:
    """Normal form sum_w c_w N_w; keys are extended Weyl elements."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[ExtendedWeylElement, TorusAlgebraElement]):
        self.terms = {w: c for w, c in terms.items() if c}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            if w in out:
                s = out[w] + c
                if s:
                    out[w] = s
                else:
                    del out[w]
            else:
                out[w] = c
        return HeckeElement(out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(-1)

    def scale(self, scalar) -> "HeckeElement":
        if isinstance(scalar, int):
            return HeckeElement({w: TorusAlgebraElement(
                c.rank, {x: v * scalar for x, v in c.terms.items()})
                for w, c in self.terms.items()})
        return HeckeElement({w: c.scale(scalar) for w, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("(%r)*N[%r]" % (c, w) for w, c in self.terms.items())


def _add_term(out: Dict, key: ExtendedWeylElement, c: TorusAlgebraElement):
    if not c:
        return
    if key in out:
        s = out[key] + c
        if s:
            out[key] = s
        else:
            del out[key]
    else:
        out[key] = c


def _g_correction(desc: AffineDescriptor, info: SimpleRootInfo,
                  c: TorusAlgebraElement) -> TorusAlgebraElement:
    """sum_x c_x G_alpha(x): the theta-only part of N_s * c."""
    one = desc.scalar_one()
    out = TorusAlgebraElement.zero(desc.rd.rank)
    br = desc.zbracket(info.zvar, info.lam)
    br_star = desc.zbracket(info.zvar, info.lam_star) if info.halvable else None
    neg_alpha = vneg(info.root.vector)
    for x, coef in c.terms.items():
        d = bernstein_divide(x, info.root, info.halvable, one)
        if not d:
            continue
        piece = TorusAlgebraElement.zero(desc.rd.rank)
        if br:
            piece = piece + d.scale(br)
        if info.halvable and br_star:
            piece = piece + d.shift(neg_alpha).scale(br_star)
        if piece:
            out = out + piece.scale(coef)
    return out


def _ns_mul(desc: AffineDescriptor, i: int, elem: HeckeElement) -> HeckeElement:
    """Left multiplication by N_{s_i}."""
    info = desc.simple_info[i]
    wg = desc.wext.weyl
    out: Dict[ExtendedWeylElement, TorusAlgebraElement] = {}
    for key, c in elem.terms.items():
        cs = c.act_matrix(info.matrix)
        su = WeylElement(mat_mul(info.matrix, key.weyl.matrix))
        skey = ExtendedWeylElement(su, key.diagram)
        _add_term(out, skey, cs)
        if wg.length(su) < wg.length(key.weyl):
            br = desc.zbracket(info.zvar, info.lam)
            if br:
                _add_term(out, key, cs.scale(br))
        corr = _g_correction(desc, info, c)
        _add_term(out, key, corr)
    return HeckeElement(out)


def _ngamma_mul(desc: AffineDescriptor, label: str, elem: HeckeElement
                ) -> HeckeElement:
    """Left multiplication by N_gamma."""
    if label == desc.wext.rgroup.identity:
        return elem
    amat = desc.wext.rgroup.matrix(label)
    out: Dict[ExtendedWeylElement, TorusAlgebraElement] = {}
    for key, c in elem.terms.items():
        cg = c.act_matrix(amat)
        sign = desc.cocycle(label, key.diagram)
        u = desc.wext.conj_weyl(label, key.weyl)
        nkey = ExtendedWeylElement(u, desc.wext.rgroup.mult(label, key.diagram))
        _add_term(out, nkey, cg if sign == 1 else -cg)
    return HeckeElement(out)


def _check_element(desc: AffineDescriptor, elem: HeckeElement) -> None:
    labels = set(desc.wext.rgroup.labels)
    cache = desc._matrix_cache
    for key, c in elem.terms.items():
        if len(key.weyl.matrix) != desc.rd.rank or c.rank != desc.rd.rank \
                or key.diagram not in labels:
            raise HeckeError("element does not belong to this descriptor")
        m = key.weyl.matrix
        if m not in cache:
            # necessary membership condition, enough to keep reduced
            # words and lengths well-defined
            for r in desc.rd.roots:
                if not desc.rd.has_root(mat_apply(m, r.vector)):
                    raise HeckeError("basis element does not permute the "
                                     "roots of this descriptor")
            cache.add(m)
        for v in c.terms.values():
            symbolic = isinstance(v, LaurentZ)
            if symbolic != (desc.z_values is None):
                raise HeckeError("element scalar mode does not match the "
                                 "descriptor (symbolic vs specialized)")
            break


def multiply(desc: AffineDescriptor, a: HeckeElement, b: HeckeElement
             ) -> HeckeElement:
    """Exact product in Bernstein normal form."""
    _check_element(desc, a)
    _check_element(desc, b)
    wg = desc.wext.weyl
    out: Dict[ExtendedWeylElement, TorusAlgebraElement] = {}
    for key, c in a.terms.items():
        t = _ngamma_mul(desc, key.diagram, b)
        for i in reversed(wg.reduced_word(key.weyl)):
            t = _ns_mul(desc, i, t)
        for k2, c2 in t.terms.items():
            _add_term(out, k2, c * c2)
    return HeckeElement(out)


def act(desc: AffineDescriptor, g: ExtendedWeylElement,
        e: TorusAlgebraElement) -> TorusAlgebraElement:
    """theta_x -> theta_{g x} with z-coefficients fixed."""
    return e.act_matrix(desc.wext.action_matrix(g))


# ---------------------------------------------------------------------------
# Specialization, the z = 1 crossed product, centrality
# ---------------------------------------------------------------------------

def specialize_element(spec_desc: AffineDescriptor, elem: HeckeElement
                       ) -> HeckeElement:
    """Map a symbolic element into the specialized algebra."""
    if spec_desc.z_values is None:
        raise HeckeError("target descriptor is not specialized")
    out: Dict[ExtendedWeylElement, TorusAlgebraElement] = {}
    for w, c in elem.terms.items():
        terms = {}
        for x, v in c.terms.items():
            val = v.evaluate(spec_desc.z_values) if isinstance(v, LaurentZ) \
                else Fraction(v)
            if val:
                terms[x] = val
        _add_term(out, w, TorusAlgebraElement(c.rank, terms))
    return HeckeElement(out)


def quotient_z1(desc: AffineDescriptor) -> AffineDescriptor:
    """The crossed-product quotient at z_1 = .. = z_d = 1."""
    return desc.specialized(tuple(Fraction(1) for _ in range(desc.d)))


def multiply_crossed(desc: AffineDescriptor, a: HeckeElement, b: HeckeElement
                     ) -> HeckeElement:
    """Independent crossed-product multiplication on O(T) x| ZZ[W_ext, cocycle]:
    (c_w N_w)(d_v N_v) = cocycle * c_w (w . d_v) N_{w v}.  Used as the
    degeneration oracle for the z = 1 quotient."""
    out: Dict[ExtendedWeylElement, TorusAlgebraElement] = {}
    for w, cw in a.terms.items():
        for v, dv in b.terms.items():
            sign = desc.cocycle(w.diagram, v.diagram)
            moved = dv.act_matrix(desc.wext.action_matrix(w))
            prod = cw * moved
            if sign == -1:
                prod = -prod
            _add_term(out, desc.wext.mult(w, v), prod)
    return HeckeElement(out)


def symmetrize(desc: AffineDescriptor, x: Sequence[int]) -> HeckeElement:
    """Orbit sum sum_{y in W_ext x} theta_y (central by the Bernstein centre)."""
    orbit = {tuple(x)}
    frontier = [tuple(x)]
    mats = [m for m in desc.rd.simple_reflections()]
    mats += [desc.wext.rgroup.matrix(l) for l in desc.wext.rgroup.labels]
    while frontier:
        nxt = []
        for y in frontier:
            for m in mats:
                z = mat_apply(m, y)
                if z not in orbit:
                    orbit.add(z)
                    nxt.append(z)
        frontier = nxt
    one = desc.scalar_one()
    coeff = TorusAlgebraElement(desc.rd.rank, {y: one for y in orbit})
    return HeckeElement({desc.wext.identity: coeff})


def is_central(desc: AffineDescriptor, a: HeckeElement) -> bool:
    """Commutation against theta-generators, all N_s and all N_gamma."""
    gens = [desc.theta_elem(tuple(1 if k == i else 0 for k in range(desc.rd.rank)))
            for i in range(desc.rd.rank)]
    gens += [desc.n_simple(i) for i in range(len(desc.rd.simple_roots))]
    gens += [desc.n_gamma(l) for l in desc.wext.rgroup.labels
             if l != desc.wext.rgroup.identity]
    for g in gens:
        if multiply(desc, a, g) != multiply(desc, g, a):
            return False
    return True


# ---------------------------------------------------------------------------
# Serialization (canonical text form)
# ---------------------------------------------------------------------------

def _group_sort_key(desc: AffineDescriptor, w: ExtendedWeylElement):
    return (desc.wext.weyl.length(w.weyl), w.weyl.matrix, w.diagram)


def serialize_element(desc: AffineDescriptor, elem: HeckeElement) -> str:
    """Deterministic text form: one `theta[..]*z..*N[word|label]` per term,
    ordered lattice-lexicographically, then by z-exponents, then by the
    group element (length, matrix, diagram label)."""
    if not elem.terms:
        return "0"
    pieces: List[Tuple[tuple, tuple, tuple, str, object]] = []
    for w in elem.terms:
        gkey = _group_sort_key(desc, w)
        word = " ".join(str(i + 1) for i in desc.wext.weyl.reduced_word(w.weyl))
        nstr = "N[%s|%s]" % (word, w.diagram)
        coeff = elem.terms[w]
        for x, v in coeff.sorted_terms():
            if isinstance(v, LaurentZ):
                zterms = v.sorted_terms()
            else:
                zterms = [((0,) * desc.d, v)]
            for ze, cval in zterms:
                factors = []
                if any(x):
                    factors.append("theta[%s]" % ",".join(map(str, x)))
                for j, e in enumerate(ze):
                    if e:
                        factors.append("z%d^%d" % (j + 1, e))
                factors.append(nstr)
                pieces.append((x, ze, gkey, "*".join(factors), cval))
    pieces.sort(key=lambda p: (p[0], p[1], p[2]))
    chunks = []
    for _, _, _, body, cval in pieces:
        mag = abs(cval)
        coef = "" if mag == 1 else "%s*" % mag
        term = coef + body
        if not chunks:
            chunks.append(term if cval > 0 else "-" + term)
        else:
            chunks.append(("+ " if cval > 0 else "- ") + term)
    return " ".join(chunks)


# ---------------------------------------------------------------------------
# Graded side
# ---------------------------------------------------------------------------

def act_poly(matrix: Matrix, p: TorusAlgebraElement, one) -> TorusAlgebraElement:
    """Substitution action on S(t^*): degree-one generators map by the
    matrix, monomials expand multiplicatively."""
    rank = p.rank
    lin = []
    for i in range(rank):
        col = {tuple(1 if k == j else 0 for k in range(rank)):
               matrix[j][i] * one
               for j in range(rank) if matrix[j][i]}
        lin.append(TorusAlgebraElement(rank, col))
    out = TorusAlgebraElement.zero(rank)
    unit = TorusAlgebraElement.theta((0,) * rank, one)
    for mono, val in p.terms.items():
        prod = unit
        for i, a in enumerate(mono):
            for _ in range(a):
                prod = prod * lin[i]
        out = out + prod.scale(val)
    return out


def poly_divide_linear(p: TorusAlgebraElement, alpha: Vector
                       ) -> TorusAlgebraElement:
    """Exact division of a polynomial by the linear form alpha.

    A nonzero remainder or a fractional quotient indicates an internal
    inconsistency (divisibility of xi - s xi by alpha is a theorem) and
    raises ArithmeticError.
    """
    rank = p.rank
    if not p:
        return TorusAlgebraElement.zero(rank)
    pivots = [i for i, c in enumerate(alpha) if c]
    pivot = min(pivots, key=lambda i: (abs(alpha[i]) != 1, i))
    c_piv = alpha[pivot]
    rem = dict(p.terms)
    quot: Dict[Vector, object] = {}
    while rem:
        deg = max(k[pivot] for k in rem)
        if deg == 0:
            raise ArithmeticError("nonzero remainder in division by %r" % (alpha,))
        layer = [k for k in rem if k[pivot] == deg]
        for k in layer:
            v = rem.pop(k)
            if isinstance(v, LaurentZ):
                if any(c % c_piv for c in v.terms.values()):
                    raise ArithmeticError("inexact division by %r" % (alpha,))
                q = LaurentZ(v.nvars, {e: c // c_piv for e, c in v.terms.items()})
            else:
                q = Fraction(v, c_piv)
            qk = tuple(e - 1 if i == pivot else e for i, e in enumerate(k))
            quot[qk] = quot.get(qk, 0 * q) + q
            # subtract q * (alpha - c_piv x_pivot), i.e. the other variables
            for j, cj in enumerate(alpha):
                if j == pivot or not cj:
                    continue
                mk = tuple(e + 1 if i == j else e for i, e in enumerate(qk))
                nv = rem.get(mk, None)
                delta = q * cj
                if nv is None:
                    rem[mk] = -delta
                else:
                    s = nv - delta
                    if s:
                        rem[mk] = s
                    else:
                        del rem[mk]
        rem = {k: v for k, v in rem.items() if v}
    return TorusAlgebraElement(rank, quot)


@dataclass(frozen=True)
class GradedSimpleInfo:
    index: int
    root: Root
    matrix: Matrix
    rvar: int
    k: int


class GradedDescriptor:
    """Twisted graded Hecke algebra on a root (sub)system.

    Group elements are pairs (u, label): u in the Weyl group of the
    subsystem, label indexing the relative diagram group whose members
    carry full ambient action matrices.
    """

    def __init__(self, sub_rd: RootDatum, k: Dict[Vector, int],
                 diagram_matrices: Dict[str, Matrix],
                 diagram_table: Dict[Tuple[str, str], str],
                 cocycle: Cocycle, identity_label: str = "e"):
        self.rd = sub_rd
        self.weyl = WeylGroup(sub_rd)
        self.k = {tuple(v): val for v, val in k.items()}
        self.d = sub_rd.num_z_vars
        self.diagram_matrices = dict(diagram_matrices)
        self.diagram_table = dict(diagram_table)
        self.cocycle = cocycle
        self.identity_label = identity_label
        if set(self.k) != {r.vector for r in sub_rd.nondivisible_roots}:
            raise HeckeError("k must be defined exactly on the nondivisible roots")
        cocycle.check(diagram_table, identity_label)
        self.simple_info = tuple(
            GradedSimpleInfo(i, s, sub_rd.simple_reflections()[i],
                             s.component_index, self.k[s.vector])
            for i, s in enumerate(sub_rd.simple_roots))

    # -- scalars --------------------------------------------------------

    def scalar_one(self):
        return LaurentZ.one(self.d)

    def rvar(self, j: int):
        return LaurentZ.var_power(self.d, j, 1)

    # -- group ----------------------------------------------------------

    @property
    def identity_key(self) -> ExtendedWeylElement:
        return ExtendedWeylElement(self.weyl.identity, self.identity_label)

    def conj_by_label(self, label: str, u: WeylElement) -> WeylElement:
        a = self.diagram_matrices[label]
        return WeylElement(mat_mul(mat_mul(a, u.matrix), mat_inv(a)))

    def label_mult(self, a: str, b: str) -> str:
        return self.diagram_table[(a, b)]

    # -- elements ---------------------------------------------------------

    def zero(self) -> "GradedElement":
        return GradedElement({})

    def unit(self) -> "GradedElement":
        return GradedElement({self.identity_key: TorusAlgebraElement.theta(
            (0,) * self.rd.rank, self.scalar_one())})

    def xi(self, coeffs: Sequence[int]) -> "GradedElement":
        """Degree-one polynomial sum coeffs[i] x_i."""
        terms = {tuple(1 if k == i else 0 for k in range(self.rd.rank)):
                 LaurentZ.const(self.d, c) for i, c in enumerate(coeffs) if c}
        return GradedElement({self.identity_key:
                              TorusAlgebraElement(self.rd.rank, terms)})

    def n_simple(self, i: int) -> "GradedElement":
        key = ExtendedWeylElement(WeylElement(self.simple_info[i].matrix),
                                  self.identity_label)
        return GradedElement({key: TorusAlgebraElement.theta(
            (0,) * self.rd.rank, self.scalar_one())})

    def n_label(self, label: str) -> "GradedElement":
        key = ExtendedWeylElement(self.weyl.identity, label)
        return GradedElement({key: TorusAlgebraElement.theta(
            (0,) * self.rd.rank, self.scalar_one())})


class GradedElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Dict[ExtendedWeylElement, TorusAlgebraElement]):
        self.terms = {w: c for w, c in terms.items() if c}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, GradedElement) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            if w in out:
                s = out[w] + c
                if s:
                    out[w] = s
                else:
                    del out[w]
            else:
                out[w] = c
        return GradedElement(out)

    def __sub__(self, other):
        return self + GradedElement({w: -c for w, c in other.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        # scalar parts live in ZZ[r_1..r_d]; rename the display variable
        return " + ".join("(%s)*N[%r]" % (repr(c).replace("z", "r"), w)
                          for w, c in self.terms.items())


def _graded_ns_mul(desc: GradedDescriptor, i: int, elem: GradedElement
                   ) -> GradedElement:
    info = desc.simple_info[i]
    one = desc.scalar_one()
    rj = desc.rvar(info.rvar)
    out: Dict[ExtendedWeylElement, TorusAlgebraElement] = {}
    for key, c in elem.terms.items():
        sc = act_poly(info.matrix, c, one)
        su = WeylElement(mat_mul(info.matrix, key.weyl.matrix))
        _add_term(out, ExtendedWeylElement(su, key.diagram), sc)
        diff = c - sc
        if diff and info.k:
            quot = poly_divide_linear(diff, info.root.vector)
            _add_term(out, key, quot.scale(rj * info.k))
    return GradedElement(out)


def _graded_nlabel_mul(desc: GradedDescriptor, label: str, elem: GradedElement
                       ) -> GradedElement:
    if label == desc.identity_label:
        return elem
    amat = desc.diagram_matrices[label]
    one = desc.scalar_one()
    out: Dict[ExtendedWeylElement, TorusAlgebraElement] = {}
    for key, c in elem.terms.items():
        cg = act_poly(amat, c, one)
        sign = desc.cocycle(label, key.diagram)
        u = desc.conj_by_label(label, key.weyl)
        nkey = ExtendedWeylElement(u, desc.label_mult(label, key.diagram))
        _add_term(out, nkey, cg if sign == 1 else -cg)
    return GradedElement(out)


def graded_multiply(desc: GradedDescriptor, a: GradedElement, b: GradedElement
                    ) -> GradedElement:
    out: Dict[ExtendedWeylElement, TorusAlgebraElement] = {}
    for key, c in a.terms.items():
        t = _graded_nlabel_mul(desc, key.diagram, b)
        for i in reversed(desc.weyl.reduced_word(key.weyl)):
            t = _graded_ns_mul(desc, i, t)
        for k2, c2 in t.terms.items():
            _add_term(out, k2, c * c2)
    return GradedElement(out)


def im_involution(desc: GradedDescriptor, a: GradedElement) -> GradedElement:
    """N_w -> sign(w) N_w on the reflection part (trivial on the diagram
    part), r_j -> r_j, xi -> -xi in degree one."""
    out: Dict[ExtendedWeylElement, TorusAlgebraElement] = {}
    for key, c in a.terms.items():
        sign = mat_det(key.weyl.matrix)
        terms = {}
        for mono, v in c.terms.items():
            s = sign * ((-1) ** (sum(mono) % 2))
            terms[mono] = v * s
        _add_term(out, key, TorusAlgebraElement(c.rank, terms))
    return GradedElement(out)


# ---------------------------------------------------------------------------
# Affine -> graded reduction at a finite-order torus point
# ---------------------------------------------------------------------------

def affine_to_graded(desc: AffineDescriptor, exponents: Vector, order: int
                     ) -> GradedDescriptor:
    """Graded descriptor at a finite-order point t.

    Roots of the subsystem: alpha with alpha(t) = 1, together with the
    coroot-halvable alpha with alpha(t) = -1.  Parameters:
    k(alpha) = 2 lambda(alpha) for non-halvable alpha, and
    k(alpha) = lambda(alpha) + alpha(t) lambda^*(alpha) for halvable ones.
    """
    stab = stabilizer_of_point(desc.wext, tuple(exponents), order)
    sub = stab.subsystem
    k: Dict[Vector, int] = {}
    for r in sub.nondivisible_roots:
        v = r.vector
        amb = desc.rd.root(v)
        halv = all(c % 2 == 0 for c in amb.coroot)
        pair_mod = sum(a * b for a, b in zip(v, exponents)) % order
        if not halv:
            if pair_mod != 0:
                raise HeckeError("non-halvable subsystem root with alpha(t) != 1")
            k[v] = 2 * desc.lam[v]
        else:
            if pair_mod == 0:
                sign = 1
            elif 2 * pair_mod % order == 0:
                sign = -1
            else:
                raise HeckeError("alpha(t) must be +-1 for halvable roots")
            k[v] = desc.lam[v] + sign * desc.lam_star[v]
    labels = ["e"]
    matrices: Dict[str, Matrix] = {}
    underlying: Dict[str, ExtendedWeylElement] = {}
    by_matrix: Dict[Tuple[Matrix, str], str] = {}
    idx = 0
    ordered = sorted(stab.diagram_part,
                     key=lambda g: (g.weyl.matrix, g.diagram))
    for g in ordered:
        m = desc.wext.action_matrix(g)
        if m == identity_matrix(desc.rd.rank) and \
                g.diagram == desc.wext.rgroup.identity:
            label = "e"
        else:
            idx += 1
            label = "g%d" % idx
            labels.append(label)
        matrices[label] = m
        underlying[label] = g
        by_matrix[(m, g.diagram)] = label
    if "e" not in matrices:
        g = desc.wext.identity
        matrices["e"] = identity_matrix(desc.rd.rank)
        underlying["e"] = g
        by_matrix[(matrices["e"], g.diagram)] = "e"
    table: Dict[Tuple[str, str], str] = {}
    cocycle_table: Dict[Tuple[str, str], int] = {}
    for a in labels:
        for b in labels:
            ga, gb = underlying[a], underlying[b]
            prod = desc.wext.mult(ga, gb)
            keym = (desc.wext.action_matrix(prod), prod.diagram)
            if keym not in by_matrix:
                raise HeckeError("relative diagram part is not closed")
            table[(a, b)] = by_matrix[keym]
            cocycle_table[(a, b)] = desc.cocycle(ga.diagram, gb.diagram)
    cocycle = Cocycle(labels, cocycle_table)
    return GradedDescriptor(sub, k, matrices, table, cocycle, "e")


def graded_from_datum(rd: RootDatum, k: Dict[Vector, int]) -> GradedDescriptor:
    """Plain graded algebra of a root datum (trivial diagram part)."""
    return GradedDescriptor(
        rd, k, {"e": identity_matrix(rd.rank)}, {("e", "e"): "e"},
        Cocycle.trivial(("e",)), "e")
