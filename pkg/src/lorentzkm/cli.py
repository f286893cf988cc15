"""Command-line interface: ``lorentzkm <verb> [options]``.

Exit status 0 on success, 2 on invalid input, 3 when an identity or an exact
division fails.  Timings go to stderr so stdout is byte-for-byte reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import borcherds, hyperbolic, jacobi, maass, reflective
from .data import D_INF_SCALE, RANKS, RANK3_CARTAN, SUPPORTED_T, TABLE1, TABLE2
from .series import SeriesError

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 2, 3
FAILURE_CODES = {"MISMATCH", "DIVISION_FAILED", "NON_DIVISIBLE"}


def _s(x):
    return str(Fraction(x))


def _vec(v):
    return "(" + ",".join(_s(c) for c in v) + ")"


def _dump(obj, out):
    out.write(json.dumps(obj, indent=1, sort_keys=True) + "\n")


def _parse_combo(text, t):
    try:
        combo = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"combo must be comma-separated integers, got {text!r}") from None
    if len(combo) != RANKS[t]:
        raise ValueError(f"RJ_{t} has rank {RANKS[t]}; combo {text!r} has {len(combo)} entries")
    return combo


def _check_t(t):
    reflective.check_t(t)
    return t


# -- verbs ---------------------------------------------------------------

def cmd_gens(args, out):
    names = jacobi.GENERATORS if args.name == "all" else [args.name]
    res = {}
    for name in names:
        if name not in jacobi.GENERATORS:
            raise ValueError(f"unknown generator {name!r}; known: {', '.join(jacobi.GENERATORS)}")
        res[name] = jacobi.generator(name, Fraction(args.prec))
    if args.format == "json":
        _dump({k: v.to_json() for k, v in res.items()}, out)
        return
    for name, form in res.items():
        out.write(f"{name}: weight {_s(form.weight)}, index {_s(form.index)}\n")
        for n, row in form.rows().items():
            terms = " ".join(f"{c:+d}*r^{_s(Fraction(l, jacobi.LDEN))}" for l, c in sorted(row.items()))
            out.write(f"  q^{_s(Fraction(n, jacobi.QDEN))}: {terms}\n")


def cmd_basis(args, out):
    t = _check_t(args.t)
    basis = reflective.rj_basis(t, args.prec)
    issues = reflective.table1_mismatches(t, basis)
    if args.format == "json":
        _dump({"t": t, "expressions": basis.expressions,
               "classes": [[c.D, c.l] for c in basis.classes], "mul": basis.mul,
               "forms": [f.to_json() for f in basis.forms], "table1_mismatches": issues}, out)
    else:
        _table1_text(t, basis, issues, out)
    return EXIT_FAILED if issues else EXIT_OK


def cmd_lift(args, out):
    t = _check_t(args.t)
    combo = _parse_combo(args.combo, t)
    res = borcherds.lift_combo(t, combo, args.prec_q, args.prec_s, pure_r="split")
    rho = res.weyl
    info = {"t": t, "combo": list(combo), "weight": _s(res.weight), "rho": [_s(x) for x in rho],
            "type": borcherds.weyl_type(rho, t),
            "divisor": {str(k): v for k, v in res.divisor.items()},
            "leading": [[_s(a), _s(b), _s(c), v] for a, b, c, v in res.leading(args.leading)],
            "omitted_pure_r": {str(l): e for l, e in res.moved.items()}}
    if args.format == "json":
        info["expansion"] = res.expansion.to_json()
        _dump(info, out)
        return
    out.write(f"t={t} combo={','.join(map(str, combo))}\n")
    out.write(f"weight {info['weight']}\nrho {_vec(rho)} ({info['type']})\n")
    if res.moved:
        out.write("pure r factors with negative exponent omitted: "
                  + ", ".join(f"(1-r^{l})^{e}" for l, e in res.moved.items()) + "\n")
    for a, b, c, v in res.leading(args.leading):
        out.write(f"  {v:+d} q^{_s(a)} r^{_s(b)} s^{_s(c)}\n")


def cmd_classify(args, out):
    ts = SUPPORTED_T if args.t is None else [_check_t(args.t)]
    report = {}
    for t in ts:
        report[t] = reflective.search_unit_multiplicity(t, args.bound)
    if args.format == "json":
        _dump({str(t): [list(c) for c in sols] for t, sols in report.items()}, out)
        return
    total = 0
    for t, sols in report.items():
        total += len(sols)
        out.write(f"t={t}: {len(sols)} solution{'s' if len(sols) != 1 else ''}\n")
        for c in sols:
            out.write(f"  ({','.join(map(str, c))})\n")
    if len(ts) > 1:
        out.write(f"total {total}\n")


def cmd_verify(args, out):
    names = list(maass.IDENTITIES) if args.id == "all" else [args.id]
    failed = False
    for name in names:
        rep = maass.verify_identity(name, args.prec)
        print(f"{name}: {rep.seconds:.2f}s", file=sys.stderr)
        if rep.ok:
            out.write(f"{name}: OK ({rep.terms} terms, box {rep.box[0]}x{rep.box[1]})\n")
        else:
            failed = True
            q, r, s, got, want = rep.mismatch
            out.write(f"{name}: MISMATCH at q^{_s(q)} r^{_s(r)} s^{_s(s)}: "
                      f"product {got}, sum {want}\n")
    return EXIT_FAILED if failed else EXIT_OK


def _table2_row(t, combo):
    return next((r for r in TABLE2 if r["t"] == t and tuple(r["combo"]) == tuple(combo)), None)


def _row_chamber(row, cap):
    t = row["t"]
    P0 = TABLE1[t]["P0"]
    if row["orbit"]:
        gens, seeds = row["orbit"]
        ch = hyperbolic.chamber_orbit(t, [P0[i - 1] for i in gens], seeds, cap=cap,
                                      window=row["infinite"])
        if row["P"] and set(ch.roots) == set(row["P"]):
            ch.roots = list(row["P"])
    else:
        ch = hyperbolic.Chamber(t, list(row["P"]))
    odd = set(row["odd"])
    if row["orbit"] and odd:
        gens = [P0[i - 1] for i in row["orbit"][0]]
        odd = set(hyperbolic.chamber_orbit(t, gens, row["odd"], cap=cap, window=True).roots)
    ch.odd = [i for i, a in enumerate(ch.roots) if a in odd]
    ch.weyl = hyperbolic.weyl_vector(t, ch.roots)
    return ch


def cmd_chamber(args, out):
    t = _check_t(args.t)
    if args.combo is None:
        ch = hyperbolic.vinberg_chamber(t)
        ch.weyl = hyperbolic.weyl_vector(t, ch.roots)
    else:
        combo = _parse_combo(args.combo, t)
        row = _table2_row(t, combo)
        if row is None:
            raise ValueError(f"no algebra for t={t} combo {args.combo}")
        ch = _row_chamber(row, args.cap)
    if args.format == "json":
        _dump(ch.to_json(), out)
        return
    kind = "orbit window" if ch.infinite else "chamber"
    out.write(f"t={t} {kind}: {len(ch.roots)} roots\n")
    for i, a in enumerate(ch.roots):
        mark = " (odd)" if i in ch.odd else ""
        out.write(f"  {_vec(a)}  D={hyperbolic.disc(t, a)}{mark}\n")
    out.write("gram 2t(a,b):\n")
    for row in ch.gram_x2t():
        out.write("  " + " ".join(f"{x:5d}" for x in row) + "\n")
    out.write(f"weyl {_vec(ch.weyl) if ch.weyl else 'none'}\n")
    if not ch.infinite:
        out.write("angles " + ", ".join(hyperbolic.polygon_angles(t, ch.roots)) + "\n")
    if ch.symmetry:
        out.write("symmetry generated by reflections in " + ", ".join(map(_vec, ch.symmetry)) + "\n")


# -- tables ----------------------------------------------------------------

def _table1_text(t, basis, issues, out):
    entry = TABLE1[t]
    out.write(f"t = {t}\n")
    for j, (expr, form) in enumerate(zip(basis.expressions, basis.forms), start=1):
        out.write(f"  xi{j} = {expr}\n")
        for n in sorted({item[0] for item in entry["leading"][j - 1]}):
            row = form.q_slice(n)
            terms = " ".join(f"{c:+d}r^{_s(l)}" for l, c in sorted(row.items(), key=lambda x: -x[0]))
            out.write(f"      q^{_s(n)}: {terms}\n")
    out.write("  classes " + " ".join(str(c) for c in basis.classes) + "\n")
    out.write("  Mul\n")
    for c, row in zip(basis.classes, basis.mul):
        out.write(f"    {str(c):>10} " + " ".join(f"{x:3d}" for x in row) + "\n")
    ch = hyperbolic.vinberg_chamber(t)
    out.write("  P(M0) " + " ".join(_vec(a) for a in ch.roots) + "\n")
    out.write("  G = 2t(a,b)\n")
    for row in ch.gram_x2t():
        out.write("    " + " ".join(f"{x:5d}" for x in row) + "\n")
    out.write(f"  check: {'ok' if not issues else '; '.join(issues)}\n")


def _cartan_name(row):
    c = row["cartan"]
    if c == "scaled":
        sc = D_INF_SCALE[(row["t"], tuple(row["combo"]))]
        return "2(a,a')/(a,a)" if sc is None else f"{sc}*2t(a,a')"
    if isinstance(c, str):
        return c
    return "inline"


def _p_description(row):
    t = row["t"]
    P0 = TABLE1[t]["P0"]
    if row["orbit"] and (row["infinite"] or not row["P"]):
        gens, seeds = row["orbit"]
        return f"[{','.join(f's{g}' for g in gens)}]({' '.join(map(_vec, seeds))}) D_inf"
    if row["P"] == [tuple(x) for x in P0[:3]] and len(P0) == 3:
        return "P(M0)"
    return " ".join(map(_vec, row["P"]))


def scaled_cartan_holds(row, ch):
    """The printed c * 2t (a, a') formula agrees with 2 (a, a') / a^2 on the window."""
    sc = D_INF_SCALE[(row["t"], tuple(row["combo"]))]
    if sc is None:
        return True
    c = Fraction(sc)
    A = hyperbolic.cartan_matrix(ch.t, ch.roots)
    G = ch.gram_x2t()
    return all(A[i][j] == c * G[i][j] for i in range(len(A)) for j in range(len(A)))


def table2_rows():
    """The 29 algebras: computed weight, rho and checks against the printed row."""
    rows = []
    for t in SUPPORTED_T:
        sols = reflective.search_unit_multiplicity(t)
        basis = reflective.rj_basis(t)
        for combo in sols:
            row = _table2_row(t, combo)
            phi = reflective.combination(basis, combo)
            rho = borcherds.lift_exponents(phi, t)
            w = borcherds.lift_weight(phi)
            ok = row is not None and rho == tuple(Fraction(x) for x in row["rho"]) \
                and w == Fraction(row["weight"])
            if ok:
                ch = _row_chamber(row, 40)
                ok = ch.weyl == rho
                want = row["cartan"]
                if isinstance(want, str) and want in RANK3_CARTAN:
                    want = RANK3_CARTAN[want][0]
                if isinstance(want, list):
                    ok = ok and hyperbolic.cartan_matrix(t, ch.roots) == want
                elif want == "scaled":
                    ok = ok and scaled_cartan_holds(row, ch)
            rows.append({"t": t, "combo": combo, "weight": w, "rho": rho,
                         "type": borcherds.weyl_type(rho, t),
                         "cartan": _cartan_name(row) if row else "?",
                         "P": _p_description(row) if row else "?", "ok": ok})
    return rows


def cmd_tables(args, out):
    status = EXIT_OK
    if args.table in ("1", "both"):
        ts = SUPPORTED_T if args.t is None else [_check_t(args.t)]
        for t in ts:
            basis = reflective.rj_basis(t)
            issues = reflective.table1_mismatches(t, basis)
            status = EXIT_FAILED if issues else status
            _table1_text(t, basis, issues, out)
    if args.table in ("2", "both"):
        rows = table2_rows()
        hdr = ("t", "combo", "weight", "rho", "type", "cartan", "P(M)", "check")
        cells = [[str(r["t"]), ",".join(map(str, r["combo"])), _s(r["weight"]), _vec(r["rho"]),
                  r["type"], r["cartan"], r["P"], "ok" if r["ok"] else "FAIL"] for r in rows]
        widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(hdr)]
        for line in [hdr] + cells:
            out.write("  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() + "\n")
        out.write(f"{len(rows)} algebras\n")
        if not all(r["ok"] for r in rows):
            status = EXIT_FAILED
    return status


def cmd_nonreflective(args, out):
    found = hyperbolic.t_n_non2reflective(args.bound)
    if args.format == "json":
        _dump([{"n": n, "x": x, "u": list(u), "v": list(v)} for n, x, u, v in found], out)
        return
    for n, x, u, v in found:
        out.write(f"n={n}: x={x} u={u} v={v}\n")
    out.write(f"{len(found)} certified n <= {args.bound}\n")


# -- entry point -----------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="lorentzkm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        return sp

    sp = add("gens", cmd_gens, "expand the generators of the Jacobi ring")
    sp.add_argument("--name", default="all")
    sp.add_argument("--prec", type=int, default=3, help="q-order bound (natural units)")

    sp = add("basis", cmd_basis, "reflective basis of RJ_t with Table 1 check")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--prec", type=int, default=None)

    sp = add("lift", cmd_lift, "Borcherds product of a basis combination")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--combo", required=True, help="e.g. 1,0,0")
    sp.add_argument("--prec-q", type=int, default=3)
    sp.add_argument("--prec-s", type=int, default=3)
    sp.add_argument("--leading", type=int, default=5)

    sp = add("classify", cmd_classify, "unit-multiplicity search")
    sp.add_argument("--t", type=int, default=None)
    sp.add_argument("--bound", type=int, default=20)

    sp = add("verify", cmd_verify, "denominator identity check")
    sp.add_argument("--id", default="all", help="one of: all, " + ", ".join(maass.IDENTITIES))
    sp.add_argument("--prec", type=int, default=12, help="box size in the form's q units")

    sp = add("chamber", cmd_chamber, "fundamental chamber (Vinberg) or a Table 2 chamber")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--combo", default=None)
    sp.add_argument("--cap", type=int, default=40, help="orbit size cap for D_inf windows")

    sp = add("tables", cmd_tables, "regenerate Table 1 and/or Table 2")
    sp.add_argument("--table", choices=("1", "2", "both"), default="both")
    sp.add_argument("--t", type=int, default=None)

    sp = add("nonreflective", cmd_nonreflective, "non-2-reflectivity certificates")
    sp.add_argument("--bound", type=int, default=5000)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = open(args.output, "w") if args.output else sys.stdout
    t0 = time.perf_counter()
    try:
        status = args.func(args, out) or EXIT_OK
    except SeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_FAILED if exc.code in FAILURE_CODES else EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_INPUT
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"[{args.verb}] {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
