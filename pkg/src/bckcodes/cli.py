"""Command-line front end: ``bckcodes <subcommand> [options]``.

Exit status is 0 for success or a true verdict, 1 for a false verdict
(the witness is printed) and 2 for unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import sys
from string import ascii_uppercase

from . import algebra, boolean_ring, codegen, codes, linear_group, poset, reconstruction
from .formats import (
    dump_algebra,
    dump_code,
    dump_poset,
    parse_algebra,
    parse_code,
    parse_poset,
)
from .reconstruction import display_label, parse_label


class UsageError(Exception):
    pass


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _elements(spec: str) -> list[int]:
    try:
        return [parse_label(tok) for tok in spec.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _witness(v) -> str:
    if v.witness is None:
        return ""
    return " (" + v.reason + ": " + ", ".join(map(str, v.witness)) + ")"


def _yes(flag: bool) -> str:
    return "true" if flag else "false"


def _labelled_table(t: algebra.CayleyTable, names: list[str]) -> list[str]:
    width = max(len(s) for s in names)
    head = ("*".ljust(width) + " | " + " ".join(s.ljust(width) for s in names)).rstrip()
    rows = [head, "-" * len(head)]
    for x in range(t.n):
        cells = " ".join(names[t.mul(x, y)].ljust(width) for y in range(t.n))
        rows.append((names[x].ljust(width) + " | " + cells).rstrip())
    return rows


def _letter_names(n: int) -> list[str]:
    return ["θ"] + [ascii_uppercase[i] if i < 26 else f"e{i + 1}" for i in range(n - 1)]


# -- subcommands -----------------------------------------------------------


def cmd_verify_algebra(args, out) -> int:
    t = parse_algebra(_read(args.file)).table
    report = algebra.verify_bck(t)
    for axiom, v in report.results.items():
        out.append(f"{axiom}: {'pass' if v else 'fail'}{_witness(v)}")
    comm, impl = algebra.is_commutative(t), algebra.is_implicative(t)
    out.append(f"commutative: {_yes(comm.ok)}{_witness(comm)}")
    out.append(f"implicative: {_yes(impl.ok)}{_witness(impl)}")
    out.append(f"BCI: {'certified' if report.is_bci else 'not certified'}")
    out.append(f"BCK: {'certified' if report.is_bck else 'not certified'}")
    return 0 if (report.is_bci if args.bci else report.is_bck) else 1


def cmd_algebra_order(args, out) -> int:
    t = parse_algebra(_read(args.file)).table
    try:
        p = algebra.derived_order(t)
    except poset.NotAPartialOrder as exc:
        out.append(f"# not a partial order: {exc.prop} fails at {exc.witness}")
        return 1
    out.append((poset.to_dot(p) if args.dot else dump_poset(p)).rstrip("\n"))
    return 0


def cmd_algebra_to_code(args, out) -> int:
    af = parse_algebra(_read(args.file))
    if args.identity:
        fn = codegen.BCKFunction.identity(af.table.n)
    elif af.function is not None:
        fn = af.function
    else:
        raise UsageError("no 'map' line in the algebra file; pass --identity")
    out.append(dump_code(codegen.generate_code(af.table, fn)).rstrip("\n"))
    return 0


def cmd_poset_to_code(args, out) -> int:
    p = parse_poset(_read(args.file))
    out.append(dump_code(poset.poset_to_code(p)).rstrip("\n"))
    return 0


def cmd_poset_to_bck(args, out) -> int:
    p = parse_poset(_read(args.file))
    t = poset.poset_to_bck(p)
    note = ["element labels: " + " ".join(f"{i}={lab}" for i, lab in enumerate(t.labels))]
    out.append(dump_algebra(t, comments=note).rstrip("\n"))
    return 0


def cmd_hasse_dot(args, out) -> int:
    p = parse_poset(_read(args.file))
    out.append(poset.to_dot(p).rstrip("\n"))
    return 0


def cmd_leq_c(args, out) -> int:
    try:
        u, v = codes.Codeword(args.u), codes.Codeword(args.v)
        verdict = codegen.leq_c(u, v)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.append(_yes(verdict))
    return 0 if verdict else 1


def cmd_min_distance(args, out) -> int:
    c = parse_code(_read(args.file))
    d, u, v = codes.min_distance_pair(c)
    out.append(str(d))
    out.append(f"# attained by {u} {v}")
    return 0


def cmd_is_linear(args, out) -> int:
    c = parse_code(_read(args.file))
    v = codes.is_linear(c)
    out.append(f"linear: {_yes(v.ok)}{_witness(v)}")
    return 0 if v else 1


def cmd_code_group(args, out) -> int:
    c = parse_code(_read(args.file))
    t = linear_group.xor_group(c)
    names = _letter_names(t.n)
    group = linear_group.certify_group(t)
    axioms = algebra.verify_bck(t)
    notes = ["elements: " + " ".join(f"{names[i]}={w}" for i, w in enumerate(t.labels))]
    notes += _labelled_table(t, names)
    notes.append("abelian group: " + ("certified" if group else "not certified"))
    for check, v in group.results.items():
        if not v:
            notes.append(f"  {check} fails{_witness(v)}")
    notes.append(f"BCI: {'certified' if axioms.is_bci else 'not certified'}")
    bck5 = axioms["BCK-5"]
    notes.append(f"BCK: {'certified' if axioms.is_bck else 'not certified'}" + _witness(bck5))
    out.append(dump_algebra(t, comments=notes).rstrip("\n"))
    return 0 if group else 1


def cmd_code_to_bck(args, out) -> int:
    c = parse_code(_read(args.file))
    t, A, B = reconstruction.code_to_bck(c)
    names = [display_label(i) for i in range(t.n)]
    notes = [f"m={len(B)} q={len(A)}"] + _labelled_table(t, names)
    out.append(dump_algebra(t, A=A, B=B, comments=notes).rstrip("\n"))
    return 0


def cmd_extended_matrix(args, out) -> int:
    c = parse_code(_read(args.file))
    out.extend(reconstruction.code_to_matrix(c).rows())
    return 0


def cmd_recover(args, out) -> int:
    af = parse_algebra(_read(args.file))
    A = _elements(args.A) if args.A else af.A
    B = _elements(args.B) if args.B else af.B
    if A is None or B is None:
        raise UsageError("element sets A and B are required (file lines or --A/--B)")
    out.append(dump_code(reconstruction.recover_code(af.table, A, B)).rstrip("\n"))
    return 0


def cmd_check_ideal(args, out) -> int:
    af = parse_algebra(_read(args.file))
    if args.subset:
        subset = _elements(args.subset)
    elif af.A is not None:
        subset = [0, *af.A]
    else:
        raise UsageError("give --subset or an algebra file with an 'A' line")
    shown = "{" + ",".join(display_label(x) for x in sorted(set(subset))) + "}"
    right = algebra.is_right_ideal(af.table, subset)
    closed = algebra.is_closed_ideal(af.table, subset)
    out.append(f"subset: {shown}")
    out.append(f"right ideal: {_yes(right.ok)}{_witness(right)}")
    out.append(f"closed ideal: {_yes(closed.ok)}{_witness(closed)}")
    return 0 if closed else 1


def cmd_boolean_ring(args, out) -> int:
    c = parse_code(_read(args.file))
    fam = boolean_ring.code_family(c)
    v = boolean_ring.is_boolean_subring(fam)
    out.append(f"Q={fam}")
    out.append(f"subring={_yes(v.ok)}")
    if not v:
        if len(v.witness) == 3:
            op, I, J = v.witness
            res = I ^ J if op == "Δ" else I & J
            fmt = boolean_ring.format_subset
            out.append(f"witness: {fmt(I)} {op} {fmt(J)} = {fmt(res)} not in Q")
        else:
            out.append("witness: ∅ not in Q")
    return 0 if v else 1


def cmd_morphism_check(args, out) -> int:
    tx = parse_algebra(_read(args.source)).table
    ty = parse_algebra(_read(args.target)).table
    try:
        f = [int(tok) for tok in args.map.replace(",", " ").split()]
        res = algebra.check_morphism(tx, ty, f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    w = "" if res.witness is None else f" (f(x*y) != f(x)*f(y) at {res.witness})"
    out.append(f"morphism: {_yes(res.ok)}{w}")
    out.append(f"isomorphism: {_yes(res.is_isomorphism)}")
    return 0 if res else 1


# -- wiring ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bckcodes", description=__doc__.splitlines()[0])
    parser.add_argument("-o", "--output", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file", nargs="?", help="input file ('-' or omitted: stdin)")
        sp.set_defaults(func=func)
        return sp

    sp = add("verify-algebra", cmd_verify_algebra, "check BCI/BCK axioms")
    sp.add_argument("--bci", action="store_true", help="succeed on BCI alone")
    sp = add("algebra-order", cmd_algebra_order, "derived order x<=y iff x*y=0")
    sp.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT")
    sp = add("algebra-to-code", cmd_algebra_to_code, "code from a BCK-function")
    sp.add_argument("--identity", action="store_true", help="use the identity BCK-function")
    add("poset-to-code", cmd_poset_to_code, "cut-vector code of a poset")
    add("poset-to-bck", cmd_poset_to_bck, "BCK-algebra of a poset with minimum")
    add("hasse-dot", cmd_hasse_dot, "Hasse diagram as Graphviz DOT")
    sp = add("leq-c", cmd_leq_c, "compare two codewords in the codeword order", file=False)
    sp.add_argument("u")
    sp.add_argument("v")
    add("min-distance", cmd_min_distance, "minimum Hamming distance")
    add("is-linear", cmd_is_linear, "zero word and XOR closure")
    add("code-group", cmd_code_group, "XOR group table of a linear code")
    add("code-to-bck", cmd_code_to_bck, "BCK-algebra containing a code, with A and B")
    add("extended-matrix", cmd_extended_matrix, "extended 0/1 matrix of a code")
    sp = add("recover", cmd_recover, "recover a code from an algebra and A, B")
    sp.add_argument("--A", help="column elements, e.g. 'w6,w7,w8,w9'")
    sp.add_argument("--B", help="row elements, e.g. 'w2,w3,w4,w5'")
    sp = add("check-ideal", cmd_check_ideal, "right / closed ideal test")
    sp.add_argument("--subset", help="elements, e.g. 'theta,w6,w7'")
    add("boolean-ring", cmd_boolean_ring, "power-set subring test")
    sp = add("morphism-check", cmd_morphism_check, "check a map between algebras", file=False)
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--map", required=True, help="images of 0..n-1, e.g. '0 2 1'")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out: list[str] = []
    try:
        status = args.func(args, out)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = "\n".join(out) + "\n" if out else ""
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
