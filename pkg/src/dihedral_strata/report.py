"""Markdown tables for one value of n."""

from __future__ import annotations

from .actions import dihedral_signature, geometric_signature, reference_vectors, rh_genus, strata_dimension
from .decomposition import assemble, consistency_check, factor_dimensions, identify_factors
from .equivalence import orbit_classes
from .group import Dihedral
from .reps import CHI, Irrep, dim_fix, omega
from .shimura import analytic_character, shimura_dimension

FACTOR_NAMES = {0: "E0", 1: "E1", 2: "E2", 3: "E3"}


def factor_name(rep: Irrep) -> str:
    return FACTOR_NAMES[rep.index] if rep.is_linear else f"B{rep.index}"


def _table(header, rows) -> list:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return out


def fixed_space_rows(G: Dihedral, cyclic: bool):
    cols = list(CHI) + [Irrep("psi", d) for d in omega(G)]
    rows = []
    for H, size in G.subgroup_classes:
        if H.is_cyclic != cyclic or H == G.trivial:
            continue
        rows.append([str(H), size] + [dim_fix(G, V, H) for V in cols])
    return [str(c) for c in cols], rows


def markdown_report(n: int) -> str:
    G = Dihedral(n)
    sig = dihedral_signature(n)
    refs = reference_vectors(G)
    lines = [f"# D_{{2n}} actions with signature {sig}, n = {n}", ""]
    lines += [
        f"Group order {G.order}; genus {rh_genus(G.order, sig)}; stratum dimension {strata_dimension(sig)}.",
        "",
        "## Topological classes",
        "",
    ]
    rows = []
    for c in orbit_classes(G):
        gs = geometric_signature(refs[c.label])
        rows.append([c.label, str(refs[c.label]), str(c.representative), c.size, str(gs)])
    lines += _table(["action", "reference vector", "lex-min vector", "orbit size", "geometric signature"], rows)

    for cyclic, title in ((True, "Fixed-space dimensions, cyclic subgroups"),
                          (False, "Fixed-space dimensions, non-cyclic subgroups")):
        cols, rows = fixed_space_rows(G, cyclic)
        lines += ["", f"## {title}", ""]
        lines += _table(["subgroup", "class size"] + cols, rows)

    reports = {lab: factor_dimensions(v, lab) for lab, v in refs.items()}
    first = next(iter(reports.values()))
    names = [factor_name(f.rep) for f in first.factors]
    lines += ["", "## Factor dimensions", ""]
    rows = []
    for lab, r in reports.items():
        rows.append([lab] + [f.dim for f in r.factors] + [sum(f.dim * f.multiplicity for f in r.factors)])
    lines += _table(["action"] + names + ["sum dim*mult"], rows)

    lines += ["", "## Jacobian and Prym identifications", ""]
    for lab, r in reports.items():
        consistency_check(r)
        idents = identify_factors(r)
        parts = assemble(r, idents)
        deco = " x ".join(i.describe() + (f"^{e}" if e > 1 else "") for i, e in parts)
        lines += [f"### {lab}: {r.vector}", "", f"JX ~ {deco}", ""]
        rows = []
        for i in idents:
            if i.kind == "unresolved":
                rows.append([i.kind, " x ".join(factor_name(t) for t in i.target), "", ""])
                continue
            ws = ", ".join(str(w) if i.kind == "jacobian" else f"{w[0]} < {w[1]}" for w in i.witnesses)
            miss = "; ".join(
                f"{H} (also fixes {', '.join(factor_name(x) for x in extra)})" for H, extra in i.near_misses
            )
            rows.append([i.kind, " x ".join(factor_name(t) for t in i.target), ws, miss])
        lines += _table(["kind", "factors", "witnesses", "rejected (extra fixed factors)"], rows)
        lines.append("")

    lines += ["## Shimura domain dimensions", ""]
    rows = []
    for lab, r in reports.items():
        s = shimura_dimension(analytic_character(r))
        rows.append([lab, s.N, s.closed_form, "yes" if s.match else "NO"])
    lines += _table(["action", "N (Serre)", "closed form", "match"], rows)
    return "\n".join(lines) + "\n"
