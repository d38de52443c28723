"""Analytic characters and Shimura-domain dimensions.

The analytic representation rho on holomorphic 1-forms contains each linear
chi_i with multiplicity dim E_i and each psi in the Galois orbit of W_d with
multiplicity dim B_d / [K_d : Q].  Serre's formula

    N = 1/(2|G|) sum_g (chi_rho(g)^2 + chi_rho(g^2))

gives the dimension of the Shimura domain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import DecompositionReport
from .equivalence import TYPE1, TYPE2, UNIQUE
from .errors import DivisibilityFailure, InvalidLabel, NonIntegerMultiplicity
from .group import Dihedral
from .reps import rational_char_value, rational_irreps


@dataclass
class AnalyticCharacter:
    G: Dihedral
    coefficients: dict  # rational irrep -> integer coefficient
    values: dict  # ConjugacyClassId -> int
    report: DecompositionReport

    def __call__(self, x):
        return self.values[self.G.class_of(x)]

    def to_json(self):
        return {
            "coefficients": {str(r): c for r, c in self.coefficients.items() if c},
            "values": {str(cid): v for cid, v in self.values.items()},
        }


def analytic_character(report: DecompositionReport) -> AnalyticCharacter:
    G = report.G
    coeffs = {}
    for ri in rational_irreps(G):
        dim = report.factor(ri.rep).dim
        if dim % ri.field_degree:
            raise NonIntegerMultiplicity(
                f"dim B[{ri.rep}] = {dim} is not divisible by [K:Q] = {ri.field_degree}"
            )
        coeffs[ri.rep] = dim // ri.field_degree
    values = {}
    for cid, members in G.conjugacy_classes.items():
        x = members[0]
        values[cid] = sum(c * rational_char_value(G, r, x) for r, c in coeffs.items() if c)
    return AnalyticCharacter(G, coeffs, values, report)


@dataclass(frozen=True)
class ShimuraReport:
    n: int
    label: str
    N: int
    closed_form: int | None = None

    @property
    def match(self):
        return self.closed_form is not None and self.closed_form == self.N

    def to_json(self):
        return {"n": self.n, "label": self.label, "N": self.N, "closed_form": self.closed_form, "match": self.match}


def serre_sum(char: AnalyticCharacter) -> int:
    """sum over g of chi(g)^2 + chi(g^2), weighted by conjugacy class sizes."""
    G = char.G
    total = 0
    for cid, members in G.conjugacy_classes.items():
        x = members[0]
        total += len(members) * (char.values[cid] ** 2 + char(G.mul(x, x)))
    return total


def shimura_dimension(char: AnalyticCharacter) -> ShimuraReport:
    G = char.G
    total = serre_sum(char)
    q, r = divmod(total, 2 * G.order)
    if r:
        raise DivisibilityFailure(f"Serre sum {total} is not divisible by 2|G| = {2 * G.order}")
    label = char.report.label
    try:
        closed = closed_form_N(G.n, label)
    except InvalidLabel:
        closed = None
    return ShimuraReport(G.n, label, q, closed)


def closed_form_N(n: int, label: str) -> int:
    if label == TYPE1:
        if n % 2 == 0:
            raise InvalidLabel("type1 actions only exist for odd n")
        return (3 * n - 1) // 2
    if label in (TYPE2, UNIQUE):
        return n
    raise InvalidLabel(f"unknown action label {label!r}")
