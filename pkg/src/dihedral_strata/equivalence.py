"""Braid-move and automorphism orbits of generating vectors.

Two generating vectors give topologically equivalent actions when they are
related by a sequence of moves

    Phi_i : (.., c_i, c_{i+1}, ..) -> (.., c_i c_{i+1} c_i^-1, c_i, ..)

(i = 1..4, and inverses) and by applying an automorphism of D_{2n} entrywise.
Orbits are found by breadth-first search over vectors; internally each element
``a^k s^r`` is the int ``2k + r`` so that products are table lookups.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .actions import GeneratingVector, reference_vectors, validate_vector
from .group import Dihedral, GroupElement

log = logging.getLogger(__name__)

TYPE1, TYPE2, UNIQUE = "type1", "type2", "unique"
LABELS = (TYPE1, TYPE2, UNIQUE)

DESK_SCALE_N = 30


@dataclass(frozen=True)
class BraidMove:
    index: int  # 1..4, acts on positions index, index + 1
    inverse: bool = False


def _enc(e: GroupElement) -> int:
    return 2 * e.k + e.refl


def _dec(x: int) -> GroupElement:
    return GroupElement(x >> 1, x & 1)


class _Tables:
    """Multiplication/inverse tables and Aut generators on encoded elements."""

    def __init__(self, G: Dihedral):
        self.G = G
        els = [_dec(x) for x in range(G.order)]
        self.mul = [[_enc(G.mul(x, y)) for y in els] for x in els]
        self.inv = [_enc(G.inv(x)) for x in els]
        self.order = [G.elem_order(x) for x in els]
        self.auts = [tuple(_enc(G.apply_aut(f, x)) for x in els) for f in G.aut_generators]

    def conj(self, g, x):
        return self.mul[self.mul[g][x]][self.inv[g]]

    def neighbours(self, v):
        mul, inv = self.mul, self.inv
        for i in range(4):
            x, y = v[i], v[i + 1]
            # forward: (x, y) -> (x y x^-1, x); inverse: (x, y) -> (y, y^-1 x y)
            yield v[:i] + (mul[mul[x][y]][inv[x]], x) + v[i + 2:]
            yield v[:i] + (y, mul[mul[inv[y]][x]][y]) + v[i + 2:]
        for f in self.auts:
            yield tuple(f[c] for c in v)


@lru_cache(maxsize=64)
def _tables(n: int) -> _Tables:
    return _Tables(Dihedral(n))


def apply_braid_move(v: GeneratingVector, move: BraidMove) -> GeneratingVector:
    G = v.G
    i = move.index - 1
    if not 0 <= i <= 3:
        raise ValueError("braid move index must be in 1..4")
    c = list(v.entries)
    x, y = c[i], c[i + 1]
    if move.inverse:
        c[i], c[i + 1] = y, G.conj(G.inv(y), x)
    else:
        c[i], c[i + 1] = G.conj(x, y), x
    return GeneratingVector(G, tuple(c))


def apply_automorphism(v: GeneratingVector, aut) -> GeneratingVector:
    return GeneratingVector(v.G, tuple(v.G.apply_aut(aut, c) for c in v.entries))


def _enumerate_encoded(n: int) -> list:
    T = _tables(n)
    G = T.G
    N4 = G.order
    two = [x for x in range(N4) if T.order[x] == 2]
    big = [x for x in range(N4) if T.order[x] == n]
    mul, inv = T.mul, T.inv
    out = set()
    # place the order-n entry at position p, three order-2 entries freely,
    # and solve the product condition for the last free slot q
    for p in range(5):
        slots = [i for i in range(5) if i != p]
        q = slots[-1]
        free = slots[:-1]
        for c_big in big:
            for x0 in two:
                for x1 in two:
                    for x2 in two:
                        v = [0] * 5
                        v[p] = c_big
                        v[free[0]], v[free[1]], v[free[2]] = x0, x1, x2
                        pre = 0
                        for i in range(q):
                            pre = mul[pre][v[i]]
                        post = 0
                        for i in range(q + 1, 5):
                            post = mul[post][v[i]]
                        v[q] = mul[inv[pre]][inv[post]]
                        if T.order[v[q]] != 2:
                            continue
                        out.add(tuple(v))
    return sorted(v for v in out if _generates(v, 2 * n))


def _generates(v, N):
    # D_{2n} = <v> iff some reflection occurs and gcd(2n, rotation exponents,
    # differences of reflection exponents) = 1
    g = N
    j0 = None
    for x in v:
        k = x >> 1
        if x & 1:
            if j0 is None:
                j0 = k
            else:
                g = gcd(g, k - j0)
        else:
            g = gcd(g, k)
    return j0 is not None and g == 1


def enumerate_vectors(G: Dihedral) -> list:
    """All generating vectors of type (0; 2,2,2,2,n), order-n entry anywhere."""
    if G.n > DESK_SCALE_N:
        log.warning("n=%d exceeds desk scale (%d); enumeration is brute force", G.n, DESK_SCALE_N)
    return [GeneratingVector(G, tuple(_dec(x) for x in v)) for v in _enumerate_encoded(G.n)]


def _bfs(T: _Tables, start: tuple, stop=None):
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if stop is not None and v == stop:
            return seen, True
        for w in T.neighbours(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen, False


def orbit(v: GeneratingVector) -> set:
    """The full equivalence orbit of ``v`` (as tuples of GroupElement)."""
    T = _tables(v.n)
    seen, _ = _bfs(T, tuple(_enc(c) for c in v.entries))
    return {tuple(_dec(x) for x in w) for w in seen}


@dataclass(frozen=True)
class OrbitClass:
    representative: GeneratingVector  # lexicographically minimal member
    size: int
    label: str


def _label_for_orbit(G: Dihedral, members: set) -> str:
    if G.n % 2 == 0:
        return UNIQUE
    refs = reference_vectors(G)
    t1 = tuple(_enc(c) for c in refs[TYPE1].entries)
    t2 = tuple(_enc(c) for c in refs[TYPE2].entries)
    if t1 in members:
        return TYPE1
    if t2 in members:
        return TYPE2
    raise AssertionError("orbit contains neither reference vector")


@lru_cache(maxsize=32)
def _orbit_classes(n: int) -> tuple:
    T = _tables(n)
    G = T.G
    remaining = set(_enumerate_encoded(n))
    classes = []
    while remaining:
        start = min(remaining)
        members, _ = _bfs(T, start)
        if not members <= remaining:
            raise AssertionError("equivalence moves left the set of generating vectors")
        remaining -= members
        rep = min(members)  # the encoding 2k + r preserves (k, refl) order
        classes.append(
            OrbitClass(
                GeneratingVector(G, tuple(_dec(x) for x in rep)),
                len(members),
                _label_for_orbit(G, members),
            )
        )
    classes.sort(key=lambda c: LABELS.index(c.label))
    return tuple(classes)


def orbit_classes(G: Dihedral) -> list:
    """Partition of all generating vectors into topological equivalence classes."""
    return list(_orbit_classes(G.n))


def classify_by_invariant(v: GeneratingVector) -> str:
    """Shortcut: for odd n, type 1 iff some entry lies in the characteristic <a^n>."""
    if v.n % 2 == 0:
        return UNIQUE
    central = GroupElement(v.n, 0)
    return TYPE1 if central in v.entries else TYPE2


def classify(v: GeneratingVector, method: str = "orbit") -> str:
    """Action label of a valid vector: ``type1``/``type2`` (odd n) or ``unique``."""
    validate_vector(v.G, v.entries)
    if method == "invariant":
        return classify_by_invariant(v)
    if v.n % 2 == 0:
        return UNIQUE
    T = _tables(v.n)
    t1 = tuple(_enc(c) for c in reference_vectors(v.G)[TYPE1].entries)
    _, hit = _bfs(T, tuple(_enc(c) for c in v.entries), stop=t1)
    return TYPE1 if hit else TYPE2


def representative(G: Dihedral, label: str) -> GeneratingVector:
    """The lexicographically minimal vector of the class with this label."""
    for c in orbit_classes(G):
        if c.label == label:
            return c.representative
    raise KeyError(label)
