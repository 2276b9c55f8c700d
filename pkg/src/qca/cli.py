"""Command-line front end: mutation tables, scattering diagrams, theta
functions, the p* compatibility check, Poisson verification, and the
self-check suites.  All numeric input is exact (integers and fraction
strings); outputs are byte-deterministic for identical invocations."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .checks import SUITES, run_suites
from .duality import PStarHom, p1_star
from .mutation import MODES, apply_mutation_sequence, mutate_a_word, mutate_word, x_torus
from .render import broken_line_svg, diagram_svg
from .scatter import complete_to_order, initial_diagram
from .seeds import Seed, load_seed_file
from .theta import enumerate_broken_lines, theta_function
from .words import FactoredWord, words_equal


def _parse_ints(text: str):
    return [int(x) for x in text.split(",") if x != ""]


def _parse_fracs(text: str):
    return [Fraction(x) for x in text.split(",") if x != ""]


def _emit(data, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _table_text(rows):
    out = []
    for row in rows:
        mut = f"mu_{row['mutation']}" if row["mutation"] else "initial"
        out.append(f"step {row['step']} ({mut})")
        out.append(f"  epsilon  {row['epsilon']}")
        out.append(f"  cvectors {row['cvectors']}")
        for i, v in enumerate(row["variables"]):
            out.append(f"  X{i + 1} = {v}")
    return out


def cmd_table(args) -> int:
    fd = load_seed_file(args.seed)
    seq = [k - 1 for k in _parse_ints(args.sequence)] if args.sequence else []
    if any(k < 0 or k >= fd.n for k in seq):
        print("error: mutation indices are 1-based directions", file=sys.stderr)
        return 2
    rows = apply_mutation_sequence(fd, seq, args.mode, order=args.order)
    _emit(rows, args.format, _table_text(rows))
    return 0


def cmd_mutate(args) -> int:
    fd = load_seed_file(args.seed)
    seq = [k - 1 for k in _parse_ints(args.sequence)]
    if any(k < 0 or k >= fd.n for k in seq):
        print("error: mutation indices are 1-based directions", file=sys.stderr)
        return 2
    rows = apply_mutation_sequence(fd, seq, args.mode, order=args.order)
    last = rows[-1]
    _emit(last, args.format, _table_text([last]))
    return 0


def cmd_scatter(args) -> int:
    fd = load_seed_file(args.seed)
    dg = initial_diagram(fd, side=args.side, quantum=args.quantum,
                         order=args.order)
    dg = complete_to_order(dg, args.order)
    data = dg.to_json()
    if args.emit_json:
        with open(args.emit_json, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.emit_svg:
        with open(args.emit_svg, "w", encoding="utf-8") as fh:
            fh.write(diagram_svg(dg))
    lines = [f"{len(data['walls'])} walls (order {args.order}, "
             f"{'quantum' if args.quantum else 'classical'} {args.side}-side)"]
    for w in data["walls"]:
        kind = w["kind"]
        extra = w.get("function_terms") or w.get("log_coeffs") or w.get("dilog")
        lines.append(f"  ray {tuple(w['ray'])} normal {tuple(w['normal'])} "
                     f"{'incoming' if w['incoming'] else 'outgoing'} {kind}: {extra}")
    _emit(data, args.format, lines)
    return 0


def cmd_theta(args) -> int:
    fd = load_seed_file(args.seed)
    dg = complete_to_order(
        initial_diagram(fd, side="A", quantum=not args.classical,
                        order=args.diagram_order), args.diagram_order)
    m0 = tuple(_parse_ints(args.gvector))
    Q = tuple(_parse_fracs(args.basepoint))
    filt = tuple(_parse_ints(args.filter_exponent)) if args.filter_exponent else None
    lines = enumerate_broken_lines(m0, Q, dg, args.order, final_exponent=filt)
    theta = theta_function(m0, Q, dg, args.order)
    data = {
        "gvector": list(m0),
        "basepoint": [str(x) for x in Q],
        "order": args.order,
        "broken_lines": [bl.to_json() for bl in lines],
        "theta": theta.render(),
    }
    if args.emit_json:
        with open(args.emit_json, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.emit_svg:
        with open(args.emit_svg, "w", encoding="utf-8") as fh:
            fh.write(broken_line_svg(dg, lines))
    text = [f"theta_{m0} = {theta.render()}",
            f"{len(lines)} broken line(s)" + (f" with final exponent {filt}"
                                              if filt else "")]
    for bl in lines:
        chain = " -> ".join(f"({s.coeff.render()})*A^{list(s.exponent)}"
                            for s in bl.segments)
        text.append(f"  {chain}")
    _emit(data, args.format, text)
    return 0


def cmd_pstar(args) -> int:
    fd = load_seed_file(args.seed)
    hom = PStarHom(fd)
    xalg = x_torus(fd)
    seed = Seed(fd)
    report = {"Lambda": [list(r) for r in hom.Lambda],
              "pstar_rows": [list(r) for r in hom.pmap.rows],
              "generators": []}
    ok_all = True
    lines = [f"Lambda = {report['Lambda']}", f"p* rows = {report['pstar_rows']}"]
    if args.check_intertwining:
        for k in fd.unfrozen:
            nxt = seed.mutate(k)
            for i in range(fd.n):
                w = FactoredWord.monomial(xalg, nxt.basis[i])
                lhs = hom.apply(mutate_word(w, k, seed))
                aw = FactoredWord.monomial(hom.atorus, hom.pmap.apply(nxt.basis[i]))
                rhs = mutate_a_word(aw, k, seed)
                ok = words_equal(lhs, rhs, args.order)
                ok_all = ok_all and ok
                report["generators"].append(
                    {"mutation": k + 1, "generator": i + 1, "ok": ok})
                lines.append(f"mu_{k + 1} generator {i + 1}: "
                             f"{'ok' if ok else 'FAIL'}")
    report["ok"] = ok_all
    lines.append("intertwining: " + ("ok" if ok_all else "FAIL"))
    _emit(report, args.format, lines)
    return 0 if ok_all else 1


def cmd_poisson(args) -> int:
    from .poisson import check_poisson_map

    fd = load_seed_file(args.seed)
    seed = Seed(fd)
    ks = [args.k - 1] if args.k else list(fd.unfrozen)
    ok_all = True
    reports = []
    lines = []
    for k in ks:
        rep = check_poisson_map(seed, k)
        reports.append({"mutation": k + 1, **rep})
        ok_all = ok_all and rep["ok"]
        lines.append(f"mu_{k + 1}: " + ("ok" if rep["ok"] else "FAIL"))
        for p in rep["pairs"]:
            lines.append(f"  {{{p['f']}, {p['g']}}}: "
                         f"{'ok' if p['ok'] else 'FAIL ' + str(p['difference'])}")
    _emit({"ok": ok_all, "mutations": reports}, args.format, lines)
    return 0 if ok_all else 1


def cmd_check(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names)
    failed = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        suffix = f"  [{detail}]" if detail and not ok else ""
        print(f"[{status}] {name}{suffix}")
        failed += 0 if ok else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qca",
        description="Exact engine for quantum cluster algebras with "
                    "principal coefficients")
    sub = p.add_subparsers(dest="verb", required=True)

    def add_common(sp, seed=True):
        if seed:
            sp.add_argument("--seed", required=True, help="seed JSON file")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("table", help="mutation table along a sequence")
    add_common(sp)
    sp.add_argument("--sequence", default="", help="1-based directions, e.g. 2,1,2")
    sp.add_argument("--mode", choices=MODES, required=True)
    sp.add_argument("--order", type=int, default=12)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("mutate", help="final row after a mutation sequence")
    add_common(sp)
    sp.add_argument("--sequence", required=True)
    sp.add_argument("--mode", choices=MODES, required=True)
    sp.add_argument("--order", type=int, default=12)
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("scatter", help="complete a rank-2 scattering diagram")
    add_common(sp)
    sp.add_argument("--order", type=int, default=2)
    sp.add_argument("--quantum", action="store_true")
    sp.add_argument("--side", choices=("A", "X"), default="A")
    sp.add_argument("--emit-svg")
    sp.add_argument("--emit-json")
    sp.set_defaults(func=cmd_scatter)

    sp = sub.add_parser("theta", help="broken lines and theta functions")
    add_common(sp)
    sp.add_argument("--gvector", required=True, help="a,b")
    sp.add_argument("--basepoint", required=True, help="x,y (fractions)")
    sp.add_argument("--order", type=int, default=4, help="total bend degree")
    sp.add_argument("--diagram-order", type=int, default=2)
    sp.add_argument("--filter-exponent", help="p,q")
    sp.add_argument("--classical", action="store_true")
    sp.add_argument("--emit-svg")
    sp.add_argument("--emit-json")
    sp.set_defaults(func=cmd_theta)

    sp = sub.add_parser("pstar", help="compatible pair and p* intertwining")
    add_common(sp)
    sp.add_argument("--check-intertwining", action="store_true")
    sp.add_argument("--order", type=int, default=8)
    sp.set_defaults(func=cmd_pstar)

    sp = sub.add_parser("poisson", help="Poisson-map verification")
    add_common(sp)
    sp.add_argument("--k", type=int, help="1-based mutation direction")
    sp.add_argument("--rank-check", action="store_true")
    sp.set_defaults(func=cmd_poisson)

    sp = sub.add_parser("check", help="run the self-check suites")
    sp.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    sp.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
