"""Command-line interface.

Every subcommand reads fronts in the text format (``L|R|X <height>`` per
line, ``#`` comments); a bare corpus name like ``trefoil`` resolves to the
bundled file of that name.  Exit codes: 0 all checks passed, 1 a check
failed or the input was invalid, 2 the skein crossing ceiling was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, corpus, fronts, rulings, skein
from .laurent import conway as conway_of

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_RESOURCE = 2


def _load_front(ref: str) -> fronts.FrontDiagram:
    path = Path(ref)
    if path.is_file():
        return fronts.parse_front(path.read_text(), name=path.stem)
    if ref in corpus.corpus_names():
        return corpus.load(ref)
    raise FileNotFoundError(f"{ref!r} is neither a file nor a bundled front")


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _poly_payload(name, poly):
    return {name: poly.to_terms(), f"{name}_text": str(poly)}


def _add_common(parser: argparse.ArgumentParser, orientable=True, skeinful=False) -> None:
    parser.add_argument("--format", choices=("json", "text"), default="text")
    if orientable:
        parser.add_argument(
            "--reverse-component",
            type=int,
            action="append",
            default=[],
            metavar="ID",
            help="reverse the orientation of a component (repeatable)",
        )
    if skeinful:
        parser.add_argument(
            "--max-crossings",
            type=int,
            default=skein.DEFAULT_MAX_CROSSINGS,
            help="skein recursion ceiling; time grows exponentially with it",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legfronts",
        description="Legendrian front diagrams, normal rulings and skein polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check front files and report violations")
    p.add_argument("fronts", nargs="+")
    _add_common(p, orientable=False)

    p = sub.add_parser("invariants", help="tb, rotation numbers, writhe, Maslov data")
    p.add_argument("front")
    _add_common(p)

    p = sub.add_parser("rulings", help="enumerate normal rulings")
    p.add_argument("front")
    p.add_argument("--class", dest="grading", choices=rulings.GRADING_FILTERS, default="ungraded")
    _add_common(p)

    for name, help_text in (
        ("homfly", "Homfly polynomial of the underlying link"),
        ("kauffman", "Dubrovnik-Kauffman polynomial of the underlying link"),
        ("conway", "Conway polynomial (Homfly at v = 1)"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("front")
        _add_common(p, skeinful=True)

    p = sub.add_parser("rutherford", help="ruling polynomial vs polynomial slices")
    p.add_argument("front")
    _add_common(p, skeinful=True)

    p = sub.add_parser("rho", help="ruling genus: value, -infinity, or unknown")
    p.add_argument("front")
    p.add_argument("--khovanov-bound", type=int, default=None)
    _add_common(p, skeinful=True)

    p = sub.add_parser("tests", help="full analysis report for one front")
    p.add_argument("front")
    p.add_argument("--khovanov-bound", type=int, default=None)
    _add_common(p, skeinful=True)

    p = sub.add_parser("connsum", help="splice two fronts and verify multiplicativity")
    p.add_argument("front1")
    p.add_argument("front2")
    _add_common(p)

    p = sub.add_parser("corpus", help="list the bundled fronts")
    _add_common(p, orientable=False)
    return parser


def _cmd_validate(args) -> int:
    worst = EXIT_OK
    for ref in args.fronts:
        path = Path(ref)
        try:
            diagram = _load_front(ref)
        except fronts.FrontFormatError as exc:
            print(f"{ref}:{exc.line}: {exc.message}", file=sys.stderr)
            worst = EXIT_FAIL
            continue
        except FileNotFoundError as exc:
            print(str(exc), file=sys.stderr)
            worst = EXIT_FAIL
            continue
        report = fronts.validate(diagram)
        if args.format == "json":
            print(json.dumps({
                "front": ref,
                "ok": report.ok,
                "violations": [
                    {"event": v.event_index, "message": v.message}
                    for v in report.violations
                ],
            }, indent=2, sort_keys=True))
        elif report.ok:
            print(f"{ref}: ok ({len(diagram.events)} events)")
        for v in report.violations:
            if v.event_index is not None and diagram.lines:
                where = f"{path}:{diagram.lines[v.event_index - 1]}"
            else:
                where = f"{ref}: end of diagram" if v.event_index is None else f"{ref}: event {v.event_index}"
            print(f"{where}: {v.message}", file=sys.stderr)
        if not report.ok:
            worst = EXIT_FAIL
    return worst


def _cmd_invariants(args) -> int:
    diagram = _load_front(args.front)
    rev = args.reverse_component
    inv = fronts.classical_invariants(diagram, rev)
    cmap = fronts.components(diagram, rev)
    maslov = fronts.maslov_potential(diagram, rev)
    indices = fronts.crossing_indices(diagram, rev)
    payload = {
        "front": diagram.name,
        "events": str(diagram),
        "components": cmap.num_components,
        "tb": inv.tb,
        "writhe": inv.writhe,
        "right_cusps": inv.num_right_cusps,
        "rotation_per_component": list(inv.rot_per_component),
        "r": inv.r,
        "maslov_modulus": maslov.modulus,
        "crossing_signs": list(inv.crossing_signs),
        "crossing_indices": {str(k): v for k, v in sorted(indices.items())},
    }
    _emit(payload, args.format, [
        f"front        {diagram.name}: {diagram}",
        f"components   {cmap.num_components}",
        f"tb           {inv.tb}   (writhe {inv.writhe} - {inv.num_right_cusps} right cusps)",
        f"rotations    {list(inv.rot_per_component)}   r = {inv.r}",
        f"maslov mod   {maslov.modulus}",
        f"signs        {list(inv.crossing_signs)}",
        f"indices      {dict(sorted(indices.items()))}",
    ])
    return EXIT_OK


def _cmd_rulings(args) -> int:
    diagram = _load_front(args.front)
    rev = args.reverse_component
    cens = rulings.census(diagram, rev)
    listed = cens.by_class[args.grading]
    poly = cens.polynomials[args.grading]
    payload = {
        "front": diagram.name,
        "class": args.grading,
        "count": len(listed),
        "rotation_gcd": cens.rotation_gcd,
        "rulings": [
            {
                "switches": list(r.switches),
                "theta": r.theta,
                "genus": r.genus,
                "grading": str(r.grading),
                "orientable": r.orientable,
            }
            for r in listed
        ],
        "polynomial": poly.to_terms(),
        "polynomial_text": str(poly),
        "polynomials_by_class": {
            cls: cens.polynomials[cls].to_terms() for cls in rulings.GRADING_FILTERS
        },
    }
    if cens.rotation_gcd != 0:
        payload["note"] = "r != 0: graded classes use residues mod 2r"
    lines = [f"front {diagram.name}: {len(listed)} {args.grading} ruling(s), polynomial {poly}"]
    for r in listed:
        g = "-" if r.genus is None else r.genus
        lines.append(f"  switches={list(r.switches)} theta={r.theta} genus={g} {r.grading}")
    _emit(payload, args.format, lines)
    return EXIT_OK


def _cmd_poly(args, which: str) -> int:
    diagram = _load_front(args.front)
    d = skein.front_to_diagram(diagram, args.reverse_component)
    if which == "homfly":
        poly = skein.homfly(d, args.max_crossings)
    elif which == "kauffman":
        poly = skein.kauffman_dubrovnik(d, args.max_crossings)
    else:
        poly = conway_of(skein.homfly(d, args.max_crossings))
    payload = {"front": diagram.name, **_poly_payload(which, poly)}
    _emit(payload, args.format, [f"{which}({diagram.name}) = {poly}"])
    return EXIT_OK


def _cmd_rutherford(args) -> int:
    diagram = _load_front(args.front)
    res = analysis.rutherford_check(diagram, args.max_crossings, args.reverse_component)
    payload = {
        "front": diagram.name,
        "tb": res.tb,
        "two_graded": {
            "pass": res.two_graded_ok,
            "homfly_slice": res.homfly_slice.to_terms(),
            "ruling_polynomial": res.two_graded_poly.to_terms(),
        },
        "ungraded": {
            "pass": res.ungraded_ok,
            "kauffman_slice": res.kauffman_slice.to_terms(),
            "ruling_polynomial": res.ungraded_poly.to_terms(),
        },
        "pass": res.passed,
    }
    _emit(payload, args.format, [
        f"front {diagram.name}: tb = {res.tb}",
        f"  two-graded: homfly v^{res.tb + 1} slice = {res.homfly_slice}, "
        f"ruling polynomial = {res.two_graded_poly} "
        f"[{'PASS' if res.two_graded_ok else 'FAIL'}]",
        f"  ungraded:   kauffman v^{res.tb + 1} slice = {res.kauffman_slice}, "
        f"ruling polynomial = {res.ungraded_poly} "
        f"[{'PASS' if res.ungraded_ok else 'FAIL'}]",
    ])
    return EXIT_OK if res.passed else EXIT_FAIL


def _cmd_rho(args) -> int:
    diagram = _load_front(args.front)
    res = analysis.rho_report(
        diagram, args.khovanov_bound, args.max_crossings, args.reverse_component
    )
    shown = {"value": str(res.value), "minus_infinity": "-infinity", "unknown": "unknown"}[res.kind]
    payload = {
        "front": diagram.name,
        "rho": {"kind": res.kind, "value": res.value, "reason": res.reason},
    }
    _emit(payload, args.format, [f"rho({diagram.name}) = {shown}   ({res.reason})"])
    return EXIT_OK


def _cmd_tests(args) -> int:
    diagram = _load_front(args.front)
    report = analysis.analyze(
        diagram, args.khovanov_bound, args.max_crossings, args.reverse_component
    )
    payload = report.to_json()
    mark = lambda ok: "PASS" if ok else "FAIL"
    lines = [
        f"front {report.front_name}: tb = {report.tb}, r = {report.r}, "
        f"{'knot' if report.is_knot else 'link'}",
        f"  {mark(report.rutherford_two_graded['pass'])} rutherford two-graded identity",
        f"  {mark(report.rutherford_ungraded['pass'])} rutherford ungraded identity",
        f"  {mark(report.max_tb_certificate['consistent'])} max-tb certificate: "
        f"tb+1 = {report.tb + 1}, e = {report.max_tb_certificate['e']}, "
        f"maximal = {report.max_tb_certificate['maximal']}",
        f"  rho: {report.rho['kind']}"
        + (f" = {report.rho['value']}" if report.rho["value"] is not None else ""),
        f"  noruling flags: {report.noruling_flags}",
        f"  {mark(report.bennequin_test)} bennequin test (M <= e)",
        f"  {mark(report.conway_test)} conway test (deg conway >= M)",
        f"  {mark(report.theorem1_check['chain_ok'])} genus chain: "
        f"max ruling genus {report.theorem1_check['max_two_graded_genus']} "
        f"<= {report.theorem1_check['half_homfly_z_degree']} "
        f"<= seifert {report.theorem1_check['seifert_genus']}",
        f"overall: {mark(report.ok)}",
    ]
    _emit(payload, args.format, lines)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_connsum(args) -> int:
    f1 = _load_front(args.front1)
    f2 = _load_front(args.front2)
    res = analysis.connsum_check(f1, f2, args.reverse_component)
    payload = {
        "front": res.composite.name,
        "events": str(res.composite),
        "text": fronts.render_front(res.composite),
        "counts_multiplicative": res.counts_ok,
        "polynomials_multiplicative": res.polynomials_ok,
        "genus_additive": res.genus_additive,
        "pass": res.passed,
    }
    _emit(payload, args.format, [
        f"{res.composite.name}: {res.composite}",
        f"  counts multiplicative:      {res.counts_ok}",
        f"  polynomials multiplicative: {res.polynomials_ok}",
        f"  max genus additive:         {res.genus_additive}",
    ])
    return EXIT_OK if res.passed else EXIT_FAIL


def _cmd_corpus(args) -> int:
    names = corpus.corpus_names()
    payload = {
        "corpus": [
            {
                "name": name,
                "path": str(corpus.corpus_path(name)),
                "events": str(corpus.load(name)),
                "description": corpus.DESCRIPTIONS.get(name, ""),
            }
            for name in names
        ]
    }
    lines = [
        f"{name:20s} {corpus.DESCRIPTIONS.get(name, ''):55s} {corpus.load(name)}"
        for name in names
    ]
    _emit(payload, args.format, lines)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "invariants":
            return _cmd_invariants(args)
        if args.command == "rulings":
            return _cmd_rulings(args)
        if args.command in ("homfly", "kauffman", "conway"):
            return _cmd_poly(args, args.command)
        if args.command == "rutherford":
            return _cmd_rutherford(args)
        if args.command == "rho":
            return _cmd_rho(args)
        if args.command == "tests":
            return _cmd_tests(args)
        if args.command == "connsum":
            return _cmd_connsum(args)
        if args.command == "corpus":
            return _cmd_corpus(args)
        raise AssertionError(f"unhandled command {args.command}")
    except fronts.FrontFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except skein.ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (fronts.InvalidFrontError, fronts.NormalFormError, FileNotFoundError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
