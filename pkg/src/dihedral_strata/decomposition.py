"""Group algebra decomposition JX ~ J_G x prod B_i^{n_i} and its refinements.

Factor dimensions come from the generating vector through

    dim B_i = k_i (dim V_i (gamma - 1) + 1/2 sum_k (dim V_i - dim Fix_{<c_k>} V_i)),

k_i = m_i [K_i : Q].  For an intermediate quotient X/H,

    J(X/H) ~ J_G x prod B_i^{dim Fix_H V_i / m_i},

which is checked against an independent Riemann-Hurwitz count on the coset
space H\\G.  All Schur indices of D_{2n} are 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .actions import GeneratingVector
from .equivalence import classify
from .errors import ConsistencyFailure, NonIntegerGenus
from .group import Dihedral, Subgroup
from .reps import Irrep, complex_member, dim_fix, rational_irreps


@dataclass(frozen=True)
class IsotypicalFactor:
    rep: Irrep  # rational irrep
    dim: int
    multiplicity: int

    def to_json(self):
        return {"rep": str(self.rep), "dim": self.dim, "mult": self.multiplicity}


@dataclass
class DecompositionReport:
    vector: GeneratingVector
    label: str
    factors: list
    genus: int

    @property
    def G(self) -> Dihedral:
        return self.vector.G

    def dims(self) -> dict:
        return {f.rep: f.dim for f in self.factors}

    def nonzero(self) -> list:
        return [f for f in self.factors if f.dim > 0]

    def factor(self, rep: Irrep) -> IsotypicalFactor:
        for f in self.factors:
            if f.rep == rep:
                return f
        raise KeyError(rep)

    def to_json(self):
        return {
            "vector": str(self.vector),
            "label": self.label,
            "genus": self.genus,
            "factors": [f.to_json() for f in self.factors],
        }


def _exact_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyFailure(f"{what} = {x} is not an integer")
    return int(x)


def factor_dimensions(v: GeneratingVector, label: str | None = None) -> DecompositionReport:
    G = v.G
    stabs = v.cyclic_stabilizers()
    factors = []
    for ri in rational_irreps(G):
        if ri.rep == Irrep("chi", 0):
            dim = 0  # J_G = J(X/G), and X/G has genus 0
        else:
            V = complex_member(ri.rep)
            dV = ri.complex_dim
            k = ri.field_degree  # Schur index 1
            inner = -dV + Fraction(1, 2) * sum(dV - dim_fix(G, V, H) for H in stabs)
            dim = _exact_int(k * inner, f"dim B[{ri.rep}]")
            if dim < 0:
                raise ConsistencyFailure(f"dim B[{ri.rep}] = {dim} is negative")
        factors.append(IsotypicalFactor(ri.rep, dim, ri.multiplicity))
    if label is None:
        label = classify(v, method="invariant")
    return DecompositionReport(v, label, factors, v.genus)


def exponents(G: Dihedral, H: Subgroup) -> dict:
    """dim Fix_H V_i / m_i for each rational irrep (Schur indices are 1)."""
    return {ri.rep: dim_fix(G, complex_member(ri.rep), H) for ri in rational_irreps(G)}


def quotient_decomposition(report: DecompositionReport, H: Subgroup):
    """(genus of X/H, exponent map) from the isotypical decomposition."""
    ex = exponents(report.G, H)
    genus = sum(ex[f.rep] * f.dim for f in report.factors)
    return genus, ex


@dataclass(frozen=True)
class CosetRamification:
    degree: int  # [G:H], the degree of X/H -> X/G
    genus: int
    cycle_lengths: tuple  # per branch value: orbit sizes of <c_i> on H\G
    branch_points_over: int  # branch points of X -> X/H


def coset_ramification(v: GeneratingVector, H: Subgroup) -> CosetRamification:
    """Riemann-Hurwitz for X/H -> P^1 via the right action of <c_i> on cosets H g.

    Over the i-th branch value, each <c_i>-orbit O on H\\G is one point of X/H
    with ramification |O|; it is a branch point of X -> X/H when |O| < m_i.
    """
    G = v.G
    cosets = []
    index = {}
    for g in G.elements:
        if g in index:
            continue
        coset = frozenset(G.mul(h, g) for h in H.elements)
        for x in coset:
            index[x] = len(cosets)
        cosets.append(min(coset))
    deg = len(cosets)
    total = 0
    below = 0
    lengths = []
    for c in v.entries:
        m = G.elem_order(c)
        seen = [False] * deg
        sizes = []
        for start in range(deg):
            if seen[start]:
                continue
            size = 0
            i = start
            while not seen[i]:
                seen[i] = True
                size += 1
                i = index[G.mul(cosets[i], c)]
            sizes.append(size)
        lengths.append(tuple(sorted(sizes)))
        total += sum(s - 1 for s in sizes)
        below += sum(1 for s in sizes if s < m)
    two_g_minus_2 = -2 * deg + total
    if two_g_minus_2 % 2:
        raise NonIntegerGenus(f"coset count gives 2g-2 = {two_g_minus_2} for X/{H}")
    return CosetRamification(deg, two_g_minus_2 // 2 + 1, tuple(lengths), below)


def quotient_genus_coset(v: GeneratingVector, H: Subgroup) -> int:
    return coset_ramification(v, H).genus


# -- identification of factors ------------------------------------------------


@dataclass
class FactorIdentification:
    """A product of isotypical factors identified with J(X/H) or a Prym P(X_H/X_K).

    ``kind`` is ``jacobian``, ``prym`` or ``unresolved``.  ``witnesses`` holds every
    qualifying subgroup (jacobian) or nested pair (prym); the first is the headline.
    ``near_misses`` lists subgroups fixing the whole target once but also fixing
    another nonzero factor, with those extra factors.
    """

    kind: str
    target: tuple  # rational irreps, each with exponent 1
    witnesses: list = field(default_factory=list)
    near_misses: list = field(default_factory=list)

    @property
    def headline(self):
        return self.witnesses[0] if self.witnesses else None

    def describe(self):
        if self.kind == "unresolved":
            return " x ".join(f"B[{r}]" for r in self.target) + " (unresolved)"
        w = self.headline
        return f"J(X/{w})" if self.kind == "jacobian" else f"P(X_{w[0]}/X_{w[1]})"

    def to_json(self):
        def wj(w):
            return str(w) if isinstance(w, Subgroup) else [str(w[0]), str(w[1])]

        return {
            "kind": self.kind,
            "target": [str(r) for r in self.target],
            "witnesses": [wj(w) for w in self.witnesses],
            "near_misses": [{"subgroup": str(H), "also_fixes": [str(r) for r in extra]} for H, extra in self.near_misses],
        }


def _subgroup_key(H: Subgroup):
    return (H.order, H.sort_key())


def identify_factors(report: DecompositionReport) -> list:
    """Identify products of nonzero factors as Jacobians or Pryms of quotients.

    Jacobian: H with exponent 1 on every factor of the target and 0 on every
    other nonzero factor (for a single-factor target this is the usual
    fixed-space isolation criterion).  Prym: nested H < K whose exponent difference is 1 on the target
    and 0 on the other nonzero factors.  Subgroups range over conjugacy-class
    representatives; nested pairs over all conjugates of H inside K.
    """
    G = report.G
    live = [f.rep for f in report.nonzero()]
    classes = [H for H, _ in G.subgroup_classes]
    ex = {H: exponents(G, H) for H in classes}

    jac = {}
    near = {}
    for H in classes:
        on = tuple(r for r in live if ex[H][r] > 0)
        if on and all(ex[H][r] == 1 for r in on):
            jac.setdefault(on, []).append(H)

    prym = {}
    for H in classes:
        for K in classes:
            if K.order <= H.order or K.order % H.order:
                continue
            Hc = G.is_subconjugate(H, K)
            if Hc is None:
                continue
            diff = {r: ex[H][r] - ex[K][r] for r in live}
            on = tuple(r for r in live if diff[r] > 0)
            if on and all(diff[r] == 1 for r in on):
                prym.setdefault(on, []).append((Hc, K))

    for target in set(jac) | set(prym):
        for H in classes:
            if all(ex[H][r] == 1 for r in target):
                extra = tuple(r for r in live if r not in target and ex[H][r] > 0)
                if extra:
                    near.setdefault(target, []).append((H, extra))

    out = []
    order = {r: i for i, r in enumerate(live)}

    def tkey(t):
        return (len(t), [order[r] for r in t])

    for target in sorted(jac, key=tkey):
        ws = sorted(jac[target], key=_subgroup_key)
        out.append(FactorIdentification("jacobian", target, ws, near.get(target, [])))
    for target in sorted(prym, key=tkey):
        ws = sorted(prym[target], key=lambda hk: (_subgroup_key(hk[0]), _subgroup_key(hk[1])))
        out.append(FactorIdentification("prym", target, ws, near.get(target, [])))
    covered = {r for i in out for r in i.target}
    for r in live:
        if r not in covered:
            out.append(FactorIdentification("unresolved", (r,)))
    return out


def assemble(report: DecompositionReport, idents: list) -> list:
    """Pick identifications partitioning the nonzero factors.

    Returns ``[(identification, exponent)]``.  Preference: most parts, then
    fewest Pryms, then smallest headline witnesses.  Targets mixing factors of
    different multiplicity cannot appear with one exponent and are skipped.
    """
    live = [f.rep for f in report.nonzero()]
    mult = {f.rep: f.multiplicity for f in report.factors}
    bit = {r: 1 << i for i, r in enumerate(live)}
    usable = [i for i in idents if len({mult[r] for r in i.target}) == 1]
    full = (1 << len(live)) - 1
    best = {0: (0, 0, [])}  # mask -> (-parts, pryms, chosen)
    for mask in range(full + 1):
        if mask not in best:
            continue
        cur = best[mask]
        free = [r for r in live if not mask & bit[r]]
        if not free:
            continue
        first = bit[free[0]]
        for i in usable:
            m = sum(bit[r] for r in i.target)
            if m & mask or not m & first:
                continue
            cand = (cur[0] - 1, cur[1] + (i.kind == "prym"), cur[2] + [i])
            nm = mask | m
            if nm not in best or cand[:2] < best[nm][:2]:
                best[nm] = cand
    if full not in best:
        return []
    return [(i, mult[i.target[0]]) for i in best[full][2]]


def consistency_check(report: DecompositionReport) -> list:
    """Check dimension bookkeeping and both quotient-genus routes for every subgroup class."""
    G = report.G
    checks = []
    total = sum(f.dim * f.multiplicity for f in report.factors)
    if total != report.genus:
        raise ConsistencyFailure(f"sum dim*mult = {total} != genus {report.genus}")
    checks.append(f"sum dim*mult = {total} = genus")
    for H, _ in G.subgroup_classes:
        g1, _ = quotient_decomposition(report, H)
        g2 = quotient_genus_coset(report.vector, H)
        if g1 != g2:
            raise ConsistencyFailure(f"genus of X/{H}: isotypical {g1} != coset count {g2}")
        checks.append(f"g(X/{H}) = {g1}")
    return checks
