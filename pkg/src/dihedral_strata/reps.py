"""Complex and rational irreducible representations of D_{2n}.

Complex irreps: four linear characters ``chi0..chi3`` and the 2-dimensional
``psi_j`` (1 <= j <= n-1) with ``psi_j(a) = diag(w^j, w^-j)``, ``psi_j(s)`` the
swap matrix, ``w = exp(pi i / n)``.  Rational irreps: the four linear ones and
``W_d`` for d in Omega(2n) = {d | 2n, d < n}, the Galois orbit of ``psi_d``.

No floating point is used on any path in this module.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .arith import divisors, ramanujan_sum, totient
from .errors import InconsistentGaloisOrbit, ParseError
from .group import Dihedral, GroupElement, Subgroup


class Irrep(NamedTuple):
    """``kind`` is ``chi`` (linear, index 0..3), ``psi`` (complex, degree 2) or
    ``W`` (rational, index d in Omega(2n))."""

    kind: str
    index: int

    def __str__(self):
        if self.kind == "chi":
            return f"chi{self.index}"
        return f"{self.kind}_{self.index}"

    @property
    def is_linear(self):
        return self.kind == "chi"


CHI = tuple(Irrep("chi", i) for i in range(4))

_IRREP_RE = re.compile(r"^(?:chi(\d)|(psi|W)_?(\d+))$")


def parse_irrep(text: str) -> Irrep:
    m = _IRREP_RE.match(text.strip())
    if not m:
        raise ParseError(f"cannot parse irrep id {text!r}")
    if m.group(1) is not None:
        return Irrep("chi", int(m.group(1)))
    return Irrep(m.group(2), int(m.group(3)))


@dataclass(frozen=True)
class TwoCos:
    """The real cyclotomic number ``w^t + w^-t`` with ``w = exp(pi i / n)``."""

    t: int
    n: int

    def __float__(self):
        return 2 * math.cos(math.pi * self.t / self.n)

    def __str__(self):
        return f"w^{self.t}+w^-{self.t}"


def two_cos(t: int, n: int):
    """Normalized ``w^t + w^-t``: plain ints at t = 0 and t = n."""
    t %= 2 * n
    t = min(t, 2 * n - t)
    if t == 0:
        return 2
    if t == n:
        return -2
    return TwoCos(t, n)


def complex_irreps(G: Dihedral) -> list:
    return list(CHI) + [Irrep("psi", j) for j in range(1, G.n)]


def degree(irrep: Irrep, G: Dihedral | None = None) -> int:
    if irrep.kind == "chi":
        return 1
    if irrep.kind == "psi":
        return 2
    return totient(2 * G.n // irrep.index)


def omega(G: Dihedral) -> list:
    n = G.n
    return [d for d in divisors(2 * n) if d < n]


def omega_odd(G: Dihedral) -> list:
    return [d for d in omega(G) if d % 2]


def omega_even(G: Dihedral) -> list:
    return [d for d in omega(G) if d % 2 == 0]


def linear_char(i: int, G: Dihedral, x: GroupElement) -> int:
    """Table of the four linear characters; chi2/chi3 differ on the reflection parity."""
    if i == 0:
        return 1
    if i == 1:
        return -1 if x.refl else 1
    if not x.refl:
        return -1 if x.k % 2 else 1
    odd = x.k % 2
    if i == 2:
        return -1 if odd else 1
    return 1 if odd else -1


def char_value(G: Dihedral, irrep: Irrep, x: GroupElement):
    """Exact character value: an int, or a ``TwoCos`` for psi_j at rotations."""
    if irrep.kind == "chi":
        return linear_char(irrep.index, G, x)
    if irrep.kind == "psi":
        if x.refl:
            return 0
        return two_cos(irrep.index * x.k, G.n)
    return rational_char_value(G, irrep, x)


def char_complex(G: Dihedral, irrep: Irrep, x: GroupElement) -> complex:
    """Floating-point character value, for cross-check oracles only."""
    if irrep.kind == "psi" and not x.refl:
        w = cmath.exp(1j * math.pi / G.n)
        return w ** (irrep.index * x.k) + w ** (-irrep.index * x.k)
    return complex(char_value(G, irrep, x))


def dim_fix(G: Dihedral, irrep: Irrep, H: Subgroup) -> int:
    """dim of the subspace of the representation fixed pointwise by H.

    Linear characters: 1 iff trivial on H.  psi_j: eigenvalue counting.
    ``psi_j(a^d)`` is the identity iff 2n | jd; a reflection has eigenvalues
    {1, -1}, and two reflections in H fix a common line only when the rotation
    part of H acts trivially.
    """
    if irrep.kind == "chi":
        return int(all(linear_char(irrep.index, G, h) == 1 for h in H.elements))
    if irrep.kind == "W":
        irrep = Irrep("psi", irrep.index)
    rot_trivial = (irrep.index * H.d) % (2 * G.n) == 0
    if H.is_cyclic:
        return 2 if rot_trivial else 0
    return 1 if rot_trivial else 0


def galois_orbit(G: Dihedral, d: int) -> list:
    """Indices j in 1..n-1 with gcd(j, 2n) = d: the psi_j conjugate to psi_d."""
    return [j for j in range(1, G.n) if gcd(j, 2 * G.n) == d]


@dataclass(frozen=True)
class RationalIrrep:
    rep: Irrep
    degree: int
    field_degree: int
    multiplicity: int  # n_i = dim V / Schur index

    @property
    def complex_dim(self):
        return 1 if self.rep.is_linear else 2


def rational_irreps(G: Dihedral) -> list:
    out = [RationalIrrep(c, 1, 1, 1) for c in CHI]
    for d in omega(G):
        phi = totient(2 * G.n // d)
        out.append(RationalIrrep(Irrep("W", d), phi, phi // 2, 2))
    return out


def rational_char_value(G: Dihedral, rid: Irrep, x: GroupElement) -> int:
    """Integer character of a rational irrep.

    ``W_d`` at ``a^r`` is the sum of psi_j over the Galois orbit of psi_d; writing
    j = d k with k a unit mod m = 2n/d, this is the Ramanujan sum c_m(r).
    """
    if rid.kind == "chi":
        return linear_char(rid.index, G, x)
    if rid.kind != "W":
        raise ValueError(f"{rid} is not a rational irrep")
    if x.refl:
        return 0
    return ramanujan_sum(2 * G.n // rid.index, x.k)


def complex_member(rid: Irrep) -> Irrep:
    """A complex irrep in the Galois orbit of a rational one."""
    return Irrep("psi", rid.index) if rid.kind == "W" else rid


def induced_trivial_multiplicities(G: Dihedral, H: Subgroup) -> dict:
    """Multiplicity of each rational irrep in Ind_H^G 1 (Frobenius reciprocity).

    Raises InconsistentGaloisOrbit if dim Fix_H differs inside a Galois orbit.
    """
    out = {}
    for ri in rational_irreps(G):
        if ri.rep.is_linear:
            out[ri.rep] = dim_fix(G, ri.rep, H)
            continue
        d = ri.rep.index
        vals = {dim_fix(G, Irrep("psi", j), H) for j in galois_orbit(G, d)}
        if len(vals) != 1:
            raise InconsistentGaloisOrbit(f"dim Fix_{H} varies over the Galois orbit of psi_{d}: {vals}")
        out[ri.rep] = vals.pop()
    return out
