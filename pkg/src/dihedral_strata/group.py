"""Exact arithmetic in the dihedral group D_{2n} = <a, s | a^{2n} = s^2 = (as)^2 = 1>.

Elements are pairs ``(k, refl)`` standing for ``a^k s^refl``; multiplication uses
``s a^k = a^{-k} s``.  Everything here is modular integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, NamedTuple

from .errors import ParseError


class GroupElement(NamedTuple):
    """``a^k s^refl`` with ``0 <= k < 2n``.  Tuple order is (k asc, refl asc)."""

    k: int
    refl: int = 0

    def __str__(self):
        if self.k == 0:
            return "s" if self.refl else "1"
        rot = f"a^{self.k}"
        return rot + "*s" if self.refl else rot


IDENTITY = GroupElement(0, 0)


class Automorphism(NamedTuple):
    """The automorphism ``a -> a^k``, ``s -> a^l s`` (``gcd(k, 2n) = 1``)."""

    k: int
    l: int

    def __str__(self):
        return f"(a->a^{self.k}, s->{GroupElement(self.l, 1)})"


class ConjugacyClassId(NamedTuple):
    """Label of an element conjugacy class.

    ``kind`` is one of ``identity``, ``central``, ``rotation`` (the pair
    ``{a^r, a^-r}`` with ``1 <= r <= n-1``, ``r != n``), ``even_reflection``,
    ``odd_reflection``.
    """

    kind: str
    r: int = 0

    def __str__(self):
        if self.kind == "identity":
            return "1"
        if self.kind == "central":
            return f"a^{self.r}"
        if self.kind == "rotation":
            return f"a^±{self.r}"
        return "s" if self.kind == "even_reflection" else "a*s"


@dataclass(frozen=True, order=False)
class Subgroup:
    """Canonical form of a subgroup of D_{2n}.

    ``j is None``: the cyclic group ``<a^d>`` (``d | 2n``; ``d = 2n`` is trivial).
    Otherwise ``<a^d, a^j s>`` with ``0 <= j < d``.
    """

    n: int
    d: int
    j: int | None = None

    @property
    def is_cyclic(self):
        return self.j is None

    @property
    def order(self):
        rot = 2 * self.n // self.d
        return rot if self.j is None else 2 * rot

    @cached_property
    def elements(self) -> frozenset:
        rots = [GroupElement(k, 0) for k in range(0, 2 * self.n, self.d)]
        if self.j is None:
            return frozenset(rots)
        refs = [GroupElement((k + self.j) % (2 * self.n), 1) for k in range(0, 2 * self.n, self.d)]
        return frozenset(rots + refs)

    def sort_key(self):
        return (0, self.d, 0) if self.j is None else (1, self.d, self.j)

    def __contains__(self, e):
        return e in self.elements

    def __str__(self):
        N = 2 * self.n
        if self.j is None:
            return "<1>" if self.d == N else f"<a^{self.d}>"
        ref = str(GroupElement(self.j, 1))
        if self.d == N:
            return f"<{ref}>"
        return f"<a^{self.d}, {ref}>"


_ELEM_RE = re.compile(r"^(?:(1)|a(?:\^(-?\d+))?(\*?s)?|(s))$")


class Dihedral:
    """The group D_{2n} of order 4n together with its exact arithmetic."""

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"n must be an integer >= 2, got {n!r}")
        self.n = n
        self.order = 4 * n

    def __repr__(self):
        return f"Dihedral({self.n})"

    def __eq__(self, other):
        return isinstance(other, Dihedral) and other.n == self.n

    def __hash__(self):
        return hash(("Dihedral", self.n))

    # -- elements -----------------------------------------------------------

    def elem(self, k, refl=0) -> GroupElement:
        return GroupElement(k % (2 * self.n), refl % 2)

    def a(self, k=1) -> GroupElement:
        return self.elem(k, 0)

    def s(self, j=0) -> GroupElement:
        """The reflection ``a^j s``."""
        return self.elem(j, 1)

    @cached_property
    def elements(self) -> list:
        return [GroupElement(k, r) for k in range(2 * self.n) for r in (0, 1)]

    def mul(self, x: GroupElement, y: GroupElement) -> GroupElement:
        N = 2 * self.n
        if x.refl:
            return GroupElement((x.k - y.k) % N, 1 - y.refl)
        return GroupElement((x.k + y.k) % N, y.refl)

    def inv(self, x: GroupElement) -> GroupElement:
        if x.refl:
            return x
        return GroupElement(-x.k % (2 * self.n), 0)

    def prod(self, xs: Iterable[GroupElement]) -> GroupElement:
        out = IDENTITY
        for x in xs:
            out = self.mul(out, x)
        return out

    def power(self, x: GroupElement, m: int) -> GroupElement:
        if x.refl:
            return x if m % 2 else IDENTITY
        return GroupElement(x.k * m % (2 * self.n), 0)

    def conj(self, g: GroupElement, x: GroupElement) -> GroupElement:
        """``g x g^-1``."""
        return self.mul(self.mul(g, x), self.inv(g))

    def elem_order(self, x: GroupElement) -> int:
        if x.refl:
            return 2
        N = 2 * self.n
        return N // gcd(x.k, N)

    def class_of(self, x: GroupElement) -> ConjugacyClassId:
        if x.refl:
            return ConjugacyClassId("odd_reflection" if x.k % 2 else "even_reflection")
        if x.k == 0:
            return ConjugacyClassId("identity")
        if x.k == self.n:
            return ConjugacyClassId("central", self.n)
        return ConjugacyClassId("rotation", min(x.k, 2 * self.n - x.k))

    @cached_property
    def conjugacy_classes(self) -> dict:
        """Map class id -> sorted list of its elements (built by brute-force conjugation)."""
        seen = {}
        for x in self.elements:
            cid = self.class_of(x)
            seen.setdefault(cid, set()).add(x)
        for cid, members in seen.items():
            rep = min(members)
            orbit = {self.conj(g, rep) for g in self.elements}
            if orbit != members:
                raise AssertionError(f"class {cid} is not a single conjugation orbit")
        return {cid: sorted(m) for cid, m in sorted(seen.items(), key=lambda kv: min(kv[1]))}

    # -- text syntax --------------------------------------------------------

    def parse(self, text: str) -> GroupElement:
        """Parse ``1``, ``a``, ``a^k``, ``s``, ``a^k*s`` (spaces ignored)."""
        t = text.replace(" ", "")
        m = _ELEM_RE.match(t)
        if not m:
            raise ParseError(f"cannot parse group element {text!r}")
        if m.group(1):
            return IDENTITY
        if m.group(4):
            return GroupElement(0, 1)
        k = int(m.group(2)) if m.group(2) is not None else 1
        return self.elem(k, 1 if m.group(3) else 0)

    def parse_vector(self, text: str) -> tuple:
        return tuple(self.parse(part) for part in text.split(","))

    def parse_subgroup(self, text: str) -> Subgroup:
        t = text.strip()
        if not (t.startswith("<") and t.endswith(">")):
            raise ParseError(f"subgroup must look like <g1, g2, ...>, got {text!r}")
        inner = t[1:-1].strip()
        gens = [self.parse(g) for g in inner.split(",")] if inner else [IDENTITY]
        return self.subgroup_from_generators(gens)

    # -- subgroups ----------------------------------------------------------

    def subgroup_from_generators(self, gens: Iterable[GroupElement]) -> Subgroup:
        """Canonical form of ``<gens>``.

        The rotation part is ``<a^g>`` with ``g`` the gcd of 2n, every rotation
        exponent and every difference of reflection exponents.
        """
        N = 2 * self.n
        g = N
        j0 = None
        for x in gens:
            if x.refl:
                if j0 is None:
                    j0 = x.k
                else:
                    g = gcd(g, x.k - j0)
            else:
                g = gcd(g, x.k)
        g = gcd(g, N)
        return Subgroup(self.n, g, None if j0 is None else j0 % g)

    def subgroup_from_elements(self, elems) -> Subgroup:
        H = self.subgroup_from_generators(elems)
        if H.elements != frozenset(elems):
            raise ValueError("element set is not a subgroup")
        return H

    @cached_property
    def subgroups(self) -> list:
        """Every subgroup of D_{2n}, in canonical-form order."""
        N = 2 * self.n
        divs = [d for d in range(1, N + 1) if N % d == 0]
        out = [Subgroup(self.n, d) for d in divs]
        out += [Subgroup(self.n, d, j) for d in divs for j in range(d)]
        return sorted(out, key=Subgroup.sort_key)

    def conjugate_subgroup(self, g: GroupElement, H: Subgroup) -> Subgroup:
        return self.subgroup_from_elements({self.conj(g, h) for h in H.elements})

    def subgroup_class(self, H: Subgroup) -> list:
        """All conjugates of ``H`` (found by brute force over the 4n conjugators)."""
        conj = {self.conjugate_subgroup(g, H) for g in self.elements}
        return sorted(conj, key=Subgroup.sort_key)

    @cached_property
    def subgroup_classes(self) -> list:
        """One ``(representative, class size)`` per conjugacy class of subgroups.

        Representatives are the minimal canonical form in their class; the list
        is sorted by (order, canonical form).
        """
        seen = set()
        out = []
        for H in self.subgroups:
            if H in seen:
                continue
            cls = self.subgroup_class(H)
            seen.update(cls)
            out.append((cls[0], len(cls)))
        out.sort(key=lambda hc: (hc[0].order, hc[0].sort_key()))
        return out

    def class_representative(self, H: Subgroup) -> Subgroup:
        return self.subgroup_class(H)[0]

    def is_subconjugate(self, H: Subgroup, K: Subgroup):
        """Return a conjugate of ``H`` contained in ``K``, or None."""
        for Hc in self.subgroup_class(H):
            if Hc.elements <= K.elements:
                return Hc
        return None

    # -- automorphisms ------------------------------------------------------

    @cached_property
    def automorphisms(self) -> list:
        N = 2 * self.n
        return [Automorphism(k, l) for k in range(1, N) if gcd(k, N) == 1 for l in range(N)]

    def apply_aut(self, aut: Automorphism, x: GroupElement) -> GroupElement:
        N = 2 * self.n
        if x.refl:
            return GroupElement((aut.k * x.k + aut.l) % N, 1)
        return GroupElement(aut.k * x.k % N, 0)

    def compose_aut(self, f: Automorphism, g: Automorphism) -> Automorphism:
        """``f o g``."""
        N = 2 * self.n
        return Automorphism(f.k * g.k % N, (f.k * g.l + f.l) % N)

    @cached_property
    def aut_generators(self) -> list:
        """A generating set of Aut(D_{2n}): ``s -> as`` plus ``a -> a^u`` for u
        running over a greedy generating set of the units mod 2n."""
        N = 2 * self.n
        gens = [Automorphism(1, 1)]
        reached = {1}
        for u in range(2, N):
            if gcd(u, N) != 1 or u in reached:
                continue
            gens.append(Automorphism(u, 0))
            frontier = list(reached)
            while frontier:
                x = frontier.pop()
                for g in gens[1:]:
                    y = x * g.k % N
                    if y not in reached:
                        reached.add(y)
                        frontier.append(y)
        return gens

    def image_subgroup(self, aut: Automorphism, H: Subgroup) -> Subgroup:
        return self.subgroup_from_generators(self.apply_aut(aut, h) for h in H.elements)

    def is_characteristic(self, H: Subgroup) -> bool:
        return all(self.image_subgroup(aut, H) == H for aut in self.automorphisms)

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self.n, 1, 0)

    @cached_property
    def trivial(self) -> Subgroup:
        return Subgroup(self.n, 2 * self.n)
