"""Command line front end.

    dihedral-strata classify  --n N [--vector V]
    dihedral-strata decompose --n N (--vector V | --action A)
    dihedral-strata quotient  --n N (--vector V | --action A) --subgroup S
    dihedral-strata shimura   --n N (--vector V | --action A)
    dihedral-strata model     --n N --action A --params P Q
    dihedral-strata report    --n N

``--json`` switches to canonical JSON.  Exit status: 0 success, 1 validation
error, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .actions import geometric_signature, reference_vectors, validate_vector
from .decomposition import (
    assemble,
    consistency_check,
    coset_ramification,
    factor_dimensions,
    identify_factors,
    quotient_decomposition,
)
from .equivalence import DESK_SCALE_N, LABELS, TYPE2, UNIQUE, classify, classify_by_invariant, orbit_classes
from .errors import ConsistencyFailure, InvalidLabel, ValidationError
from .group import Dihedral
from .models import affine_model
from .report import markdown_report
from .shimura import analytic_character, shimura_dimension


class UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def resolve_vector(G: Dihedral, args):
    if getattr(args, "vector", None):
        return validate_vector(G, G.parse_vector(args.vector))
    action = getattr(args, "action", None)
    if action is None:
        raise UsageError("one of --vector or --action is required")
    if G.n % 2 == 0 and action == TYPE2:
        action = UNIQUE  # the single even-n action is the type-2 one
    refs = reference_vectors(G)
    if action not in refs:
        raise InvalidLabel(f"--action {action} is not available for n={G.n}; choose from {sorted(refs)}")
    return refs[action]


def cmd_classify(G, args):
    if args.vector:
        v = validate_vector(G, G.parse_vector(args.vector))
        label = classify(v)
        shortcut = classify_by_invariant(v)
        if shortcut != label:
            raise ConsistencyFailure(f"invariant shortcut says {shortcut}, orbit search says {label}")
        data = {"n": G.n, "vector": str(v), "label": label, "geometric_signature": str(geometric_signature(v))}
        text = f"{v}: {label}\ngeometric signature {data['geometric_signature']}"
        return data, text
    if G.n > DESK_SCALE_N:
        print(f"warning: n={G.n} is beyond desk scale; enumeration may be slow", file=sys.stderr)
    classes = orbit_classes(G)
    refs = reference_vectors(G)
    data = {
        "n": G.n,
        "classes": [
            {"label": c.label, "representative": str(c.representative), "reference": str(refs[c.label]), "size": c.size}
            for c in classes
        ],
        "total_vectors": sum(c.size for c in classes),
    }
    text = "\n".join(
        f"{c.label}: {c.representative} (orbit size {c.size}; reference {refs[c.label]})" for c in classes
    )
    return data, f"{len(classes)} classes for n={G.n}\n{text}"


def cmd_decompose(G, args):
    v = resolve_vector(G, args)
    r = factor_dimensions(v)
    checks = consistency_check(r)
    idents = identify_factors(r)
    parts = assemble(r, idents)
    data = r.to_json()
    data["identifications"] = [i.to_json() for i in idents]
    data["checks"] = checks
    data["assembled"] = [
        {"factor": i.describe(), "kind": i.kind, "exponent": e, "target": [str(t) for t in i.target]} for i, e in parts
    ]
    lines = [f"vector {v}  ({r.label}, genus {r.genus})"]
    lines += [f"  B[{f.rep}]: dim {f.dim}, mult {f.multiplicity}" for f in r.factors if f.dim]
    lines.append("JX ~ " + " x ".join(i.describe() + (f"^{e}" if e > 1 else "") for i, e in parts))
    for i in idents:
        tgt = " x ".join(f"B[{t}]" for t in i.target)
        lines.append(f"  {i.kind}: {tgt} <- {i.describe()}  ({len(i.witnesses)} witnesses)")
        for H, extra in i.near_misses:
            lines.append(f"      rejected {H}: also fixes {', '.join(map(str, extra))}")
    return data, "\n".join(lines)


def cmd_quotient(G, args):
    v = resolve_vector(G, args)
    H = G.parse_subgroup(args.subgroup)
    r = factor_dimensions(v)
    g_iso, ex = quotient_decomposition(r, H)
    cr = coset_ramification(v, H)
    if g_iso != cr.genus:
        raise ConsistencyFailure(f"genus of X/{H}: isotypical {g_iso} != coset count {cr.genus}")
    data = {
        "vector": str(v),
        "subgroup": str(H),
        "genus_isotypical": g_iso,
        "genus_coset": cr.genus,
        "exponents": {str(k): e for k, e in ex.items()},
        "degree": cr.degree,
        "branch_points_of_X_over_quotient": cr.branch_points_over,
        "cycle_lengths": [list(c) for c in cr.cycle_lengths],
    }
    nz = " x ".join(f"B[{k}]^{e}" if e > 1 else f"B[{k}]" for k, e in ex.items() if e and r.factor(k).dim)
    text = (
        f"X/{H}: genus {g_iso} (isotypical) = {cr.genus} (coset count); degree {cr.degree} over P^1\n"
        f"J(X/{H}) ~ {nz or '0'}\n"
        f"X -> X/{H} has {cr.branch_points_over} branch points"
    )
    return data, text


def cmd_shimura(G, args):
    v = resolve_vector(G, args)
    r = factor_dimensions(v)
    consistency_check(r)
    ch = analytic_character(r)
    s = shimura_dimension(ch)
    data = s.to_json()
    text = f"n={s.n} {s.label}: N = {s.N} (closed form {s.closed_form}, match {s.match})"
    return data, text


def cmd_model(G, args):
    label = args.action
    if G.n % 2 == 0 and label == TYPE2:
        label = UNIQUE
    m = affine_model(label, G.n, args.params)
    return m.to_json(), f"{m.equation}\n(genus {m.genus}, stratum {m.stratum})"


def cmd_report(G, args):
    md = markdown_report(G.n)
    return {"n": G.n, "markdown": md}, md.rstrip("\n")


COMMANDS = {
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "quotient": cmd_quotient,
    "shimura": cmd_shimura,
    "model": cmd_model,
    "report": cmd_report,
}


def build_parser():
    p = _Parser(prog="dihedral-strata", description="Dihedral actions with signature (0;2,2,2,2,n).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, vector=False, action=False):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--json", action="store_true")
        if vector:
            sp.add_argument("--vector", help="comma separated, e.g. a^3,a^3,s,a^2*s,a^2")
        if action:
            sp.add_argument("--action", choices=LABELS)

    common(sub.add_parser("classify"), vector=True)
    common(sub.add_parser("decompose"), vector=True, action=True)
    q = sub.add_parser("quotient")
    common(q, vector=True, action=True)
    q.add_argument("--subgroup", required=True, help="e.g. '<a^2>' or '<a^3, s>'")
    common(sub.add_parser("shimura"), vector=True, action=True)
    m = sub.add_parser("model")
    common(m)
    m.add_argument("--action", choices=LABELS, required=True)
    m.add_argument("--params", nargs=2, required=True, metavar=("P", "Q"))
    common(sub.add_parser("report"))
    return p


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.n < 2:
            raise UsageError(f"--n must be >= 2, got {args.n}")
        G = Dihedral(args.n)
        data, text = COMMANDS[args.command](G, args)
    except ValidationError as e:
        print(f"error: {e}", file=err)
        return 1
    except ConsistencyFailure as e:
        print(f"consistency failure: {e}", file=err)
        return 2
    print(dumps(data) if args.json else text, file=out)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
