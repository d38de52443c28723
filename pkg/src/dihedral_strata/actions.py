"""Signatures, generating vectors of type (0; 2,2,2,2,n) and Riemann-Hurwitz."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegerGenus, NotGenerating, ProductNotOne, WrongOrder
from .group import IDENTITY, ConjugacyClassId, Dihedral, GroupElement, Subgroup


@dataclass(frozen=True)
class Signature:
    gamma: int
    periods: tuple

    def __str__(self):
        return f"({self.gamma}; {', '.join(map(str, self.periods))})"


def dihedral_signature(n: int) -> Signature:
    return Signature(0, (2, 2, 2, 2, n))


def rh_genus(group_order: int, sig: Signature) -> int:
    """g = |G|(gamma - 1) + 1 + |G|/2 * sum(1 - 1/m_i)."""
    g = group_order * (sig.gamma - 1) + 1 + Fraction(group_order, 2) * sum(
        1 - Fraction(1, m) for m in sig.periods
    )
    if g.denominator != 1 or g < 0:
        raise NonIntegerGenus(f"Riemann-Hurwitz gives genus {g} for |G|={group_order}, {sig}")
    return int(g)


def strata_dimension(sig: Signature) -> int:
    """Teichmueller dimension 3(gamma - 1) + r of the family."""
    return 3 * (sig.gamma - 1) + len(sig.periods)


@dataclass(frozen=True)
class GeneratingVector:
    G: Dihedral
    entries: tuple

    def __str__(self):
        return ",".join(str(e) for e in self.entries)

    @property
    def n(self):
        return self.G.n

    @property
    def signature(self) -> Signature:
        return Signature(0, tuple(self.G.elem_order(c) for c in self.entries))

    @property
    def genus(self) -> int:
        return rh_genus(self.G.order, self.signature)

    def display_entries(self) -> tuple:
        """Entries rotated so the order-n entry sits last (display only)."""
        es = self.entries
        orders = [self.G.elem_order(c) for c in es]
        if self.n == 2 or orders[-1] == self.n:
            return es
        i = orders.index(self.n)
        return es[i + 1:] + es[:i + 1]

    def cyclic_stabilizers(self) -> list:
        return [self.G.subgroup_from_generators([c]) for c in self.entries]


def validate_vector(G: Dihedral, entries) -> GeneratingVector:
    """Check the three generating-vector conditions; raise naming the failed one."""
    entries = tuple(G.elem(e.k, e.refl) for e in entries)
    if len(entries) != 5:
        raise WrongOrder(len(entries), None, (2, 2, 2, 2, G.n))
    expected = Counter([2, 2, 2, 2, G.n])
    seen = Counter()
    for i, c in enumerate(entries):
        m = G.elem_order(c)
        seen[m] += 1
        if seen[m] > expected[m]:
            raise WrongOrder(i, m, (2, 2, 2, 2, G.n))
    p = G.prod(entries)
    if p != IDENTITY:
        raise ProductNotOne(p)
    H = G.subgroup_from_generators(entries)
    if H != G.whole:
        raise NotGenerating(H)
    return GeneratingVector(G, entries)


def vector(G: Dihedral, text: str) -> GeneratingVector:
    return validate_vector(G, G.parse_vector(text))


@dataclass(frozen=True)
class GeometricSignature:
    gamma: int
    marked: tuple  # ((period, subgroup class representative, element class id), ...)

    def __str__(self):
        parts = ", ".join(f"[{m}, {H}]" for m, H, _ in self.marked)
        return f"({self.gamma}; {parts})"


def subgroup_class_label(G: Dihedral, H: Subgroup) -> ConjugacyClassId:
    """Element-class label of the generator of a cyclic subgroup.

    For the cyclic subgroups met as stabilizers, the subgroup class is
    determined by the class of any generator up to powers.
    """
    gens = [h for h in H.elements if G.elem_order(h) == H.order]
    return min((G.class_of(h) for h in gens), key=lambda c: (c.kind, c.r))


def geometric_signature(v: GeneratingVector) -> GeometricSignature:
    G = v.G
    marked = []
    for c in v.entries:
        H = G.subgroup_from_generators([c])
        marked.append((G.elem_order(c), G.class_representative(H), subgroup_class_label(G, H)))
    return GeometricSignature(0, tuple(marked))


def reference_vectors(G: Dihedral) -> dict:
    """The two reference representatives (a^n,a^n,as,a^3s,a^2) and (s,s,as,a^3s,a^2).

    The first only exists (generates) for odd n.
    """
    n = G.n
    out = {}
    if n % 2:
        out["type1"] = validate_vector(G, (G.a(n), G.a(n), G.s(1), G.s(3), G.a(2)))
    out["type2" if n % 2 else "unique"] = validate_vector(G, (G.s(0), G.s(0), G.s(1), G.s(3), G.a(2)))
    return out
