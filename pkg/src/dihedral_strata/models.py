"""Affine plane models for the two kinds of strata.

Type 1 (odd n): hyperelliptic curves

    y^2 = (x^n - l^n)(x^n - l^-n)(x^n - m^n)(x^n - m^-n)

Type 2 / unique: elliptic n-gonal curves

    x^{2n} + y^{2n} + a x^n y^n + b x^n + b y^n + 1 = 0.

Parameters are exact rationals where possible (ints, Fractions, or strings like
"3/2"); strings with a decimal point, exponent or ``j`` take the numeric path
as complex numbers.  Only degree, branching and genus are sanity-checked; the
D_{2n} action on the emitted curve is not verified.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .equivalence import TYPE1, TYPE2, UNIQUE
from .errors import DegenerateBranching, InvalidLabel, InvalidParams

NUMERIC_TOL = 1e-9


def parse_param(value):
    """Fraction for exact input, complex for decimal/complex strings."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, (float, complex)):
        return complex(value)
    text = str(value).strip()
    if any(ch in text for ch in ".eEjJ"):
        try:
            return complex(text)
        except ValueError:
            raise InvalidParams(f"cannot parse parameter {value!r}") from None
    try:
        return Fraction(text)
    except ValueError:
        raise InvalidParams(f"cannot parse parameter {value!r}") from None


def _is_exact(*xs):
    return all(isinstance(x, Fraction) for x in xs)


def _eq(x, y):
    if _is_exact(x, y):
        return x == y
    return abs(complex(x) - complex(y)) <= NUMERIC_TOL * max(1.0, abs(complex(x)), abs(complex(y)))


def _fmt(q) -> str:
    if isinstance(q, Fraction):
        return str(q)
    z = complex(q)
    if z.imag == 0:
        return repr(z.real)
    return f"({z.real!r}{z.imag:+}j)".replace("j)", "*I)")


@dataclass(frozen=True)
class PlaneModel:
    kind: str  # "hyperelliptic" | "elliptic_n_gonal"
    n: int
    params: tuple
    equation: str
    genus: int
    stratum: str

    def to_json(self):
        return {
            "kind": self.kind,
            "n": self.n,
            "params": [_fmt(p) for p in self.params],
            "equation": self.equation,
            "genus": self.genus,
            "stratum": self.stratum,
        }


def _check_hyperelliptic(n, lam, mu):
    for name, p in (("lambda", lam), ("mu", mu)):
        if _eq(p, 0):
            raise InvalidParams(f"{name} must be nonzero")
        if _eq(p ** (2 * n), 1):
            raise InvalidParams(f"{name}^(2n) = 1 is excluded")


def _term(coeff, mono: str, first: bool) -> str:
    """Signed term text such as ' - 3/2*x^2' (coefficient 1 omitted)."""
    neg = isinstance(coeff, Fraction) and coeff < 0
    c = -coeff if neg else coeff
    if mono:
        body = mono if c == 1 else f"{_fmt(c)}*{mono}"
    else:
        body = _fmt(c)
    if first:
        return ("-" if neg else "") + body
    return (" - " if neg else " + ") + body


def affine_model(label: str, n: int, params) -> PlaneModel:
    if label not in (TYPE1, TYPE2, UNIQUE):
        raise InvalidLabel(f"unknown action label {label!r}")
    if n < 2:
        raise InvalidParams("n must be >= 2")
    if len(params) != 2:
        raise InvalidParams("exactly two parameters are required")
    p, q = (parse_param(x) for x in params)
    if label == TYPE1:
        if n % 2 == 0:
            raise InvalidLabel("type1 (hyperelliptic) strata exist only for odd n")
        _check_hyperelliptic(n, p, q)
        hyperelliptic_branch_check(n, p, q)
        roots = [p ** n, 1 / p ** n, q ** n, 1 / q ** n]
        factors = "*".join(f"(x^{n} - {_fmt(r)})" if not (isinstance(r, Fraction) and r < 0)
                           else f"(x^{n} + {_fmt(-r)})" for r in roots)
        return PlaneModel("hyperelliptic", n, (p, q), f"y^2 = {factors}", 2 * n - 1, TYPE1)
    if _eq(p, 0) and _eq(q, 0):
        raise InvalidParams("a = b = 0 gives the Fermat curve, which has a larger automorphism group")
    if _eq(p, 0) or _eq(q, 0):
        raise InvalidParams("elliptic n-gonal parameters a, b must both be nonzero")
    eq = (
        f"x^{2 * n} + y^{2 * n}"
        + _term(p, f"x^{n}*y^{n}", False)
        + _term(q, f"x^{n}", False)
        + _term(q, f"y^{n}", False)
        + " + 1 = 0"
    )
    return PlaneModel("elliptic_n_gonal", n, (p, q), eq, 2 * n - 1, label)


@dataclass(frozen=True)
class BranchDiagnostic:
    n: int
    branch_points: int
    genus: int
    exact: bool


def hyperelliptic_branch_check(n: int, lam, mu) -> BranchDiagnostic:
    """Check the 4n roots {w^k l, w^k/l, w^k m, w^k/m} (w = e^{2 pi i/n}) are distinct.

    Each nonzero value v contributes the n distinct roots of x^n = v, so the
    roots are distinct iff l^n, l^-n, m^n, m^-n are pairwise distinct.
    """
    lam, mu = parse_param(lam), parse_param(mu)
    _check_hyperelliptic(n, lam, mu)
    vals = {"lambda^n": lam ** n, "lambda^-n": 1 / lam ** n, "mu^n": mu ** n, "mu^-n": 1 / mu ** n}
    for (na, va), (nb, vb) in combinations(vals.items(), 2):
        if _eq(va, vb):
            raise DegenerateBranching(f"branch orbits collide: {na} = {nb} = {_fmt(va)}")
    exact = _is_exact(lam, mu)
    if not exact:
        roots = branch_points_numeric(n, lam, mu)
        for i, j in combinations(range(len(roots)), 2):
            if abs(roots[i] - roots[j]) <= NUMERIC_TOL:
                raise DegenerateBranching(f"branch points {roots[i]} and {roots[j]} coincide")
    return BranchDiagnostic(n, 4 * n, (4 * n - 2) // 2, exact)


def branch_points_numeric(n: int, lam, mu) -> list:
    w = cmath.exp(2j * cmath.pi / n)
    lam, mu = complex(lam), complex(mu)
    return [w ** k * base for base in (lam, 1 / lam, mu, 1 / mu) for k in range(n)]
