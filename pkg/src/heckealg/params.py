"""Parameter arithmetic: c, c*, lambda, lambda*, k from Jordan/cuspidal data.

All functions are closed-form integer arithmetic.  The two cuspidal
shapes are:

* symplectic side (S): unipotent partition (2, 4, .., 2d) of ell = d(d+1),
  largest part a = 2d (a = 0 when ell = 0);
* orthogonal side (O): partition (1, 3, .., 2d-1) of ell = d^2, largest
  part a = 2d - 1 (a = -1 when ell = 0).

From a block's largest part a and its unramified-twist partner's largest
part a', the affine parameters of the short root are
lambda = (a + a')/2 + 1 and lambda* = |a - a'|/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ParamPair:
    lam: int
    lam_star: int
    basepoint_swapped: bool = False

    def __post_init__(self):
        if self.lam < 0 or self.lam_star < 0:
            raise ParameterError("parameters must be nonnegative")


def _admissible_tail(side: str, ell: int) -> Tuple[int, int]:
    """Nearest admissible values below/above an inadmissible ell."""
    lo, hi = 0, ell
    d = 0
    while True:
        v = d * (d + 1) if side == "S" else d * d
        if v <= ell:
            lo = v
        if v >= ell:
            hi = v
            break
        d += 1
    return lo, hi


def is_admissible_ell(side: str, ell: int) -> bool:
    if ell < 0:
        return False
    if side == "S":
        d = int((math.isqrt(1 + 4 * ell) - 1) // 2)
        return d * (d + 1) == ell
    if side == "O":
        d = math.isqrt(ell)
        return d * d == ell
    if side == "GL":
        return ell == 0
    raise ParameterError("unknown side %r" % (side,))


def cuspidal_d(side: str, ell: int) -> int:
    """The d with ell = d(d+1) (side S) or ell = d^2 (side O)."""
    if not is_admissible_ell(side, ell):
        lo, hi = _admissible_tail(side, ell)
        raise ParameterError(
            "ell = %d is not admissible for side %s: must be %s; nearest "
            "admissible values are %d and %d"
            % (ell, side, "d(d+1)" if side == "S" else "a square", lo, hi))
    if side == "S":
        return (math.isqrt(1 + 4 * ell) - 1) // 2
    return math.isqrt(ell)


def cuspidal_partition(side: str, d: int) -> Tuple[int, ...]:
    """(2, 4, .., 2d) on the S side, (1, 3, .., 2d-1) on the O side."""
    if d < 0:
        raise ParameterError("d must be nonnegative")
    if side == "S":
        return tuple(2 * i for i in range(1, d + 1))
    if side == "O":
        return tuple(2 * i - 1 for i in range(1, d + 1))
    raise ParameterError("unknown side %r" % (side,))


def a_from_ell(side: str, ell: int) -> int:
    """Largest part of the cuspidal partition; the trivial-partner
    conventions give a = 0 (S) and a = -1 (O) at ell = 0."""
    d = cuspidal_d(side, ell)
    if d == 0:
        return 0 if side == "S" else -1
    return 2 * d if side == "S" else 2 * d - 1


def lambda_from_jordan(a: int, a_prime: int) -> ParamPair:
    """lambda = (a + a')/2 + 1 and lambda* = |a - a'|/2.

    Both inputs must have the same parity (both even on the S side, both
    odd on the O side).  When a < a' the pair is still returned, with a
    flag recording that the natural basepoint has a and a' exchanged.
    """
    if (a - a_prime) % 2:
        raise ParameterError("a = %d and a' = %d must have equal parity"
                             % (a, a_prime))
    lam = (a + a_prime) // 2 + 1
    lam_star = abs(a - a_prime) // 2
    return ParamPair(lam, lam_star, basepoint_swapped=a < a_prime)


def lambda_c_roundtrip(lam: int, lam_star: Optional[int], halvable: bool
                       ) -> Tuple[int, Optional[int]]:
    """(lambda, lambda*) -> (c, c*)."""
    if not halvable:
        if lam_star is not None:
            raise ParameterError("lambda* is undefined for non-halvable roots")
        return 2 * lam, None
    if lam_star is None:
        raise ParameterError("lambda* required for halvable roots")
    return lam + lam_star, lam - lam_star


def c_lambda_roundtrip(c: int, c_star: Optional[int], halvable: bool
                       ) -> Tuple[int, Optional[int]]:
    """(c, c*) -> (lambda, lambda*), inverse of lambda_c_roundtrip."""
    if not halvable:
        if c_star is not None:
            raise ParameterError("c* is undefined for non-halvable roots")
        if c % 2:
            raise ParameterError("c must be even for non-halvable roots")
        if c < 0:
            raise ParameterError("c must be nonnegative")
        return c // 2, None
    if c_star is None:
        raise ParameterError("c* required for halvable roots")
    if (c - c_star) % 2:
        raise ParameterError("c and c* must have equal parity")
    lam = (c + c_star) // 2
    lam_star = (c - c_star) // 2
    if lam < 0 or lam_star < 0:
        raise ParameterError("negative parameter from (c, c*) = (%d, %d)"
                             % (c, c_star))
    return lam, lam_star


def gl_parameters(d_i: int, t_phi: int) -> Tuple[int, int]:
    """Type-A block: lambda = d_i on every root and specialization
    exponent f_i = d_i * t(phi_i)."""
    if d_i < 1 or t_phi < 1:
        raise ParameterError("d and t must be positive")
    return d_i, d_i * t_phi
