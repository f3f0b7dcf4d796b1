"""Command-line surface: enumeration, composition, verification, export.

Exit codes: 0 success, 1 a verification found a counterexample or a
golden value mismatched, 2 usage error (bad flags, inapplicable magma or
variant, malformed input files).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bases, enumeration, knownops, ratfct, variants, verify
from .clique import (
    CliqueError, clique_from_json, clique_to_json, format_clique,
)
from .magma import (
    MagmaError, UnitaryMagma, has_nontrivial_unit_divisors,
    is_right_cancelable, parse_magma_spec,
)
from .operad import LinComb
from .report import VerifyReport


class UsageError(Exception):
    pass


def _load_lincomb(path, magma):
    with open(path) as handle:
        data = json.load(handle)
    if isinstance(data, dict):
        clique = clique_from_json(data, magma=magma)
        return LinComb.of(clique)
    terms = []
    for entry in data:
        clique = clique_from_json(entry["clique"], magma=magma)
        terms.append((clique, entry["coefficient"]))
    if not terms:
        raise UsageError("empty combination file needs an arity; give one term")
    return LinComb(terms[0][0].magma, terms[0][0].arity, terms)


def _dump_lincomb(comb):
    return [
        {"coefficient": f"{v.numerator}/{v.denominator}", "clique": clique_to_json(c)}
        for c, v in comb.items()
    ]


def _emit(args, payload, human):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def cmd_magma_check(args):
    magma = parse_magma_spec(args.magma)
    info = {
        "name": magma.name,
        "finite": magma.is_finite,
        "unit_two_sided": True,  # construction rejects anything else
        "monoid": magma.is_monoid(),
        "right_cancelable": is_right_cancelable(magma) if magma.is_finite or magma.kind == "int" else None,
        "nontrivial_unit_divisors": has_nontrivial_unit_divisors(magma),
    }
    if magma.is_finite:
        info["size"] = magma.size
        info["elements"] = list(magma.names)
    lines = [f"magma {magma.name}: unit axioms hold"]
    lines.append(f"  monoid (diagnostic): {info['monoid']}")
    lines.append(f"  right cancelable: {info['right_cancelable']}")
    lines.append(f"  nontrivial unit divisors: {info['nontrivial_unit_divisors']}")
    if magma.is_finite:
        lines.append(f"  elements: {' '.join(magma.names)}")
        header = "      " + " ".join(f"{nm:>4}" for nm in magma.names)
        lines.append(header)
        for i, nm in enumerate(magma.names):
            row = " ".join(f"{magma.names[magma.table[i][j]]:>4}" for j in range(magma.size))
            lines.append(f"  {nm:>4} {row}")
    _emit(args, info, "\n".join(lines))
    return 0


def cmd_compose(args):
    magma = parse_magma_spec(args.magma)
    lhs = _load_lincomb(args.lhs, magma)
    rhs = _load_lincomb(args.rhs, magma)
    if args.variant:
        var = variants.variant(args.variant, magma)
        result = variants.variant_compose(var, lhs, rhs, args.index)
    else:
        result = bases.compose_in_basis(lhs, rhs, args.index, args.basis)
    payload = {"basis": args.basis, "terms": _dump_lincomb(result)}
    human = "\n".join(
        f"{v} * <{', '.join(f'({x},{y})={result.magma.elem_name(c.label(x, y))}' for (x, y) in _solid(c))}>"
        if _solid(c) else f"{v} * <all-unit arity {c.arity}>"
        for c, v in result.items()
    ) or "0"
    _emit(args, payload, human)
    return 0


def _solid(clique):
    return clique.solid_arcs()


def cmd_enumerate(args):
    magma = parse_magma_spec(args.magma)
    var = variants.variant(args.variant, magma) if args.variant else None
    space = enumeration.clique_space_size(magma, args.arity)
    if space > args.budget:
        raise UsageError(
            f"{space} cliques at arity {args.arity} exceed the budget "
            f"{args.budget}; pass --budget to confirm"
        )
    rows = []
    for clique in enumeration.generate_cliques(magma, args.arity):
        if var is None or (var.in_ambient(clique) and var.member(clique)):
            rows.append(clique)
    if args.json:
        print(json.dumps([clique_to_json(c) for c in rows], indent=2))
    else:
        for clique in rows:
            print(format_clique(clique))
            print()
        print(f"total: {len(rows)}")
    return 0


def cmd_sequence(args):
    magma = parse_magma_spec(args.magma)
    record = enumeration.sequence_for(
        args.variant, magma, args.max_arity,
        budget=args.budget, threads=args.threads,
    )
    sys.stdout.write(enumeration.export_sequence(record, args.format))
    return 0


def cmd_primes(args):
    magma = parse_magma_spec(args.magma)
    rows = []
    for n in range(1, args.max_size + 1):
        rows.append(
            (
                n,
                enumeration.count_prime(magma, n, threads=args.threads),
                enumeration.count_white_prime(magma, n, threads=args.threads),
                enumeration.count_minimal_prime(magma, n, threads=args.threads),
            )
        )
    if args.json:
        print(json.dumps(
            [
                {"size": n, "prime": p, "white_prime": w, "minimal_prime": mi}
                for n, p, w, mi in rows
            ],
            indent=2,
        ))
    else:
        print("size prime white-prime minimal-prime")
        for n, p, w, mi in rows:
            print(f"{n} {p} {w} {mi}")
    return 0


def cmd_dyck(args):
    magma = parse_magma_spec(args.magma)
    if args.encode:
        with open(args.encode) as handle:
            clique = clique_from_json(json.load(handle), magma=magma)
        word = enumeration.dyck_encode(clique)
        print(str(word))
        return 0
    if args.decode:
        word = _parse_colored_word(magma, args.decode)
        clique = enumeration.dyck_decode(word)
        if args.json:
            print(json.dumps(clique_to_json(clique), indent=2))
        else:
            print(format_clique(clique))
        return 0
    raise UsageError("dyck needs --encode <clique.json> or --decode <word>")


def _parse_colored_word(magma, text):
    letters = []
    colors = {}
    pos = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch not in ("a", "b"):
            raise UsageError(f"bad letter {ch!r} in word")
        letters.append(ch)
        pos += 1
        i += 1
        if i < len(text) and text[i] == "[":
            close = text.index("]", i)
            colors[pos] = magma.elem(text[i + 1:close])
            i = close + 1
    return enumeration.ColoredDyckWord(magma, tuple(letters), colors)


def _verify_reports(args):
    magma = parse_magma_spec(args.magma)
    what = args.what
    reports = []
    if what in ("axioms", "all"):
        reports.append(verify.verify_operad_axioms(
            magma, args.max_arity, budget=args.budget,
        ))
    if what in ("symmetries", "all"):
        reports.append(verify.verify_symmetries(
            magma, args.max_arity, samples=args.samples, seed=args.seed,
        ))
    if what in ("cyclic", "all"):
        reports.append(verify.verify_cyclic(magma, args.max_arity))
    if what in ("basic", "all"):
        report, _ = verify.verify_basic_set_operad(magma, args.max_arity)
        # non-injectivity is a property, not a failure, unless it disagrees
        # with cancelability (which raises); report it as informational
        reports.append(VerifyReport(
            report.name, True, report.checked,
            report.counterexample and "not basic: " + report.counterexample,
        ))
    if what in ("ideal", "all"):
        specs = [args.variant] if args.variant else [
            "cro:0", "bub", "deg:0", "deg:1", "deg:2", "nes", "acy",
            "wnc", "pat", "for", "mot", "dis", "luc",
        ]
        for spec in specs:
            try:
                var = variants.variant(spec, magma)
            except variants.VariantError as exc:
                if args.variant:
                    raise
                continue
            reports.append(variants.verify_ideal(var, magma, args.max_arity))
    if what in ("inclusions", "all"):
        if not has_nontrivial_unit_divisors(magma):
            reports.append(variants.verify_inclusions(magma, args.max_arity))
    if what in ("product", "all") and magma.factors is not None:
        reports.append(verify.verify_product_iso(magma, min(args.max_arity, 3)))
    if what in ("ratfct", "all"):
        reports.append(ratfct.verify_rf_laws(
            max_arity=min(args.max_arity, 4), samples=args.samples, seed=args.seed,
        ))
    if what in ("known-ops", "all"):
        reports.append(_known_ops_report(min(args.max_arity, 4)))
    if not reports:
        raise UsageError(f"nothing to verify for {what!r} over {args.magma}")
    return reports


def _known_ops_report(max_arity):
    checked = 0
    for n in range(1, max_arity + 1):
        for m in range(1, max_arity + 1):
            if n + m - 1 > max_arity:
                continue
            for s in knownops.all_multitildes(n):
                if s == knownops.MultiTilde(1, {(1, 1)}):
                    continue
                for t in knownops.all_multitildes(m):
                    if t == knownops.MultiTilde(1, {(1, 1)}):
                        continue
                    for i in range(1, n + 1):
                        checked += 1
                        lhs = knownops.phi_mt(knownops.mt_compose(s, t, i))
                        rhs = knownops.partial_compose(
                            knownops.phi_mt(s), knownops.phi_mt(t), i
                        )
                        if lhs != rhs:
                            return VerifyReport(
                                "known-ops", False, checked,
                                f"multi-tilde morphism fails on {s!r} o_{i} {t!r}",
                            )
    for n in range(1, max_arity + 1):
        for m in range(1, max_arity + 1):
            if n + m - 1 > max_arity:
                continue
            for c in knownops.gravity_diagrams(n):
                for d in knownops.gravity_diagrams(m):
                    for i in range(1, n + 1):
                        checked += 1
                        lhs = knownops.phi_grav(knownops.chord_compose(c, d, i))
                        rhs = knownops.grav_compose(
                            knownops.phi_grav(c), knownops.phi_grav(d), i
                        )
                        if lhs != rhs:
                            return VerifyReport(
                                "known-ops", False, checked,
                                f"gravity morphism fails on {c!r} o_{i} {d!r}",
                            )
    return VerifyReport("known-ops", True, checked, None)


def cmd_verify(args):
    if args.magma is None:
        if args.what == "all":
            from . import acceptance

            return 0 if acceptance.run_all() else 1
        if args.what == "ratfct":
            report = ratfct.verify_rf_laws(
                max_arity=min(args.max_arity, 4),
                samples=args.samples, seed=args.seed,
            )
            print(report.describe())
            return 0 if report.ok else 1
        if args.what == "known-ops":
            report = _known_ops_report(min(args.max_arity, 4))
            print(report.describe())
            return 0 if report.ok else 1
        raise UsageError(f"verify {args.what} needs --magma")
    reports = _verify_reports(args)
    ok = all(r.ok for r in reports)
    if args.json:
        print(json.dumps(
            [
                {
                    "name": r.name, "ok": r.ok, "checked": r.checked,
                    "complete": r.complete, "counterexample": r.counterexample,
                }
                for r in reports
            ],
            indent=2,
        ))
    else:
        for r in reports:
            print(r.describe())
    return 0 if ok else 1


def cmd_ratfct_check(args):
    report = ratfct.verify_rf_laws(
        max_arity=args.max_arity, samples=args.samples, seed=args.seed,
    )
    kernel_ok = _kernel_examples_zero()
    if args.json:
        print(json.dumps({
            "laws_ok": report.ok, "checked": report.checked,
            "kernel_examples_zero": kernel_ok,
        }, indent=2))
    else:
        print(report.describe())
        print(f"kernel examples exactly zero: {kernel_ok}")
    return 0 if report.ok and kernel_ok else 1


def _kernel_examples_zero():
    from .clique import Clique
    from .magma import RankFunction
    from .operad import LinComb

    z = UnitaryMagma.integers()
    rank = RankFunction.identity()
    first = (
        LinComb.of(Clique.triangle(z, 1, 0, 0))
        - LinComb.of(Clique.triangle(z, 0, 1, 0))
        - LinComb.of(Clique.triangle(z, 0, 0, 1))
    )
    second = (
        LinComb.of(Clique.from_arcs(z, 3, {(2, 3): -1, (3, 4): -1}))
        - LinComb.of(Clique.from_arcs(z, 3, {(2, 4): -1, (3, 4): -1}))
        - LinComb.of(Clique.from_arcs(z, 3, {(2, 3): -1, (2, 4): -1}))
    )
    return all(
        ratfct.rf_is_zero(ratfct.rf_image(comb, rank)) for comb in (first, second)
    )


def cmd_known_ops_check(args):
    report = _known_ops_report(args.max_arity)
    if args.json:
        print(json.dumps({
            "ok": report.ok, "checked": report.checked,
            "counterexample": report.counterexample,
        }, indent=2))
    else:
        print(report.describe())
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cliqueops",
        description="operads of magma-decorated cliques: compose, enumerate, verify",
    )
    parser.add_argument(
        "--threads", type=int,
        default=int(os.environ.get("CLIQUEOPS_THREADS", "1")),
        help="parallelism degree for census commands",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("magma-check", help="validate a magma spec and print its table")
    p.add_argument("--magma", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_magma_check)

    p = sub.add_parser("compose", help="compose two combinations from JSON files")
    p.add_argument("--magma", required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--basis", choices=["fundamental", "H", "K"], default="fundamental")
    p.add_argument("--variant", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("enumerate", help="list cliques (optionally variant members)")
    p.add_argument("--magma", required=True)
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--variant", default=None)
    p.add_argument("--budget", type=int, default=enumeration.DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("sequence", help="dimension sequence of a variant")
    p.add_argument("--variant", required=True)
    p.add_argument("--magma", required=True)
    p.add_argument("--max-arity", type=int, required=True)
    p.add_argument("--format", choices=["b", "csv", "json"], default="b")
    p.add_argument("--budget", type=int, default=enumeration.DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_sequence)

    p = sub.add_parser(
        "verify",
        help="run a verifier and report counterexamples; `verify all` with "
             "no --magma runs the full acceptance battery",
    )
    p.add_argument(
        "what",
        choices=[
            "axioms", "symmetries", "cyclic", "basic", "ideal",
            "inclusions", "product", "ratfct", "known-ops", "all",
        ],
    )
    p.add_argument("--magma", default=None)
    p.add_argument("--max-arity", type=int, default=4)
    p.add_argument("--variant", default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("primes", help="prime / white / minimal prime census")
    p.add_argument("--magma", required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_primes)

    p = sub.add_parser("dyck", help="encode or decode nesting-free cliques")
    p.add_argument("--magma", required=True)
    p.add_argument("--encode", default=None, metavar="CLIQUE_JSON")
    p.add_argument("--decode", default=None, metavar="WORD")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_dyck)

    p = sub.add_parser("ratfct-check", help="rational-function laws and kernel examples")
    p.add_argument("--max-arity", type=int, default=4)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_ratfct_check)

    p = sub.add_parser("known-ops-check", help="multi-tilde and gravity morphism checks")
    p.add_argument("--max-arity", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_known_ops_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        raise exc
    try:
        return args.fn(args)
    except (UsageError, MagmaError, CliqueError, variants.VariantError,
            enumeration.BudgetError, knownops.KnownOperadError,
            FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
