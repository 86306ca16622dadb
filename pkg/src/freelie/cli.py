"""Command-line interface.

Exit codes: 0 affirmative, 1 negative answer, 2 parse or input error,
3 degree bound reached before the answer was settled.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import encoding, gsb, oracle
from .bracketing import kukin_bracket, special_bracket
from .errors import FreeLieError, InputError, InvariantViolation
from .liealg import expand_tree
from .parse import parse_expr, parse_presentation
from .words import Alphabet, Occurrence, canonical_bracket, is_als, lead_key, ls_factorize

OK, NEGATIVE, BAD_INPUT, BOUND = 0, 1, 2, 3


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, record: dict, text: str) -> None:
        if self.as_json:
            self.stream.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


def _occ(text: str) -> Occurrence:
    try:
        start, length = (int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"occurrence must be 'start,length', got {text!r}") from None
    if start < 0 or length < 1:
        raise InputError(f"invalid occurrence {text!r}")
    return Occurrence(start, length)


def _occ_str(o: Occurrence) -> str:
    return f"{o.start},{o.length}"


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return parse_presentation(text)


def _poly_record(p) -> str:
    return p.format()


# -- lsw ----------------------------------------------------------------------


def cmd_lsw(args, out: Output) -> int:
    A = Alphabet.parse(args.alphabet)
    w = A.word(args.word)
    if not w:
        raise InputError("the word is empty")
    spell = A.spell
    if args.action == "check":
        ok = is_als(w)
        out.emit({"word": spell(w), "als": ok}, "ALS" if ok else "not ALS")
        return OK if ok else NEGATIVE
    if args.action == "factor":
        factors = ls_factorize(w)
        out.emit({"word": spell(w), "factors": [spell(f) for f in factors]}, " ".join(spell(f) for f in factors))
        return OK
    if args.action == "bracket":
        t = canonical_bracket(w)
    elif args.action == "special":
        t = special_bracket(w, _occ(args.u))
    else:
        t = kukin_bracket(w, _occ(args.u), _occ(args.v))
    exp = expand_tree(t)
    top = min(exp, key=lead_key)
    record = {"word": spell(w), "tree": t.format(A), "leading_word": spell(top), "leading_coeff": exp[top]}
    out.emit(record, t.format(A))
    return OK


# -- gsb and relatives ---------------------------------------------------------


def _site_record(pres, i, j, rec: gsb.CompositionRecord) -> dict:
    A = pres.alphabet
    return {
        "left": pres.labels[i],
        "right": pres.labels[j],
        "kind": rec.site.kind,
        "w": A.spell(rec.site.w),
        "left_occ": _occ_str(rec.site.left_occ),
        "right_occ": _occ_str(rec.site.right_occ),
        "value": rec.value.format(),
        "remainder": rec.remainder.format(),
        "trace": [
            {"relation": pres.labels[s.index], "word": A.spell(s.word), "occ": _occ_str(s.occ),
             "coeff": pres.field.format(s.coeff)}
            for s in rec.trace
        ],
    }


def cmd_gsb(args, out: Output) -> int:
    pres = _load(args.presentation)
    A = pres.alphabet
    if args.action == "check":
        report = gsb.is_gsb(pres.relations, args.max_deg)
        failures = [_site_record(pres, f.left, f.right, f.record) for f in report.failures]
        if failures:
            verdict = "not_gsb"
        elif report.skipped:
            verdict = "bound_reached"
        else:
            verdict = "gsb"
        record = {"verdict": verdict, "max_deg": args.max_deg, "checked": report.checked,
                  "skipped": len(report.skipped), "failures": failures}
        lines = [f"{verdict}: {report.checked} compositions checked, {len(report.skipped)} above the bound"]
        for f in failures:
            lines.append(f"site {f['w']} ({f['kind']} of {f['left']} and {f['right']}): "
                         f"remainder {f['remainder']} (not reduced to zero under the leftmost strategy)")
        out.emit(record, "\n".join(lines))
        return {"gsb": OK, "not_gsb": NEGATIVE, "bound_reached": BOUND}[verdict]

    completion = gsb.complete(pres.relations, args.max_deg, workers=args.workers)
    rels = completion.relations
    record = {
        "status": completion.status,
        "max_deg": args.max_deg,
        "field": pres.field.name,
        "alphabet": list(A.letters),
        "relations": [r.format() for r in rels],
        "leading_words": [A.spell(r.leading_word) for r in rels],
        "processed": completion.processed,
        "skipped": completion.skipped,
    }
    lines = [f"# status {completion.status} (max_deg {args.max_deg})",
             f"field {pres.field.name}", f"alphabet {' > '.join(A.letters)}"]
    lines += [f"rel {r.format()}" for r in rels]
    out.emit(record, "\n".join(lines))
    return OK if completion.complete else BOUND


def _exact(pres, completion, degree: int) -> bool:
    """Whether answers at ``degree`` are final despite a possibly truncated completion."""
    if completion.complete:
        return True
    return all(r.is_homogeneous() for r in pres.relations) and degree <= completion.max_deg


def cmd_nf(args, out: Output) -> int:
    pres = _load(args.presentation)
    h = parse_expr(args.expr, pres.alphabet, pres.field)
    if h and h.degree > args.max_deg:
        raise InputError(f"expression degree {h.degree} exceeds --max-deg {args.max_deg}")
    completion = gsb.complete(pres.relations, args.max_deg, workers=args.workers)
    nf, trace = gsb.reduce(h, completion.relations)
    exact = _exact(pres, completion, h.degree if h else 0)
    record = {"input": h.format(), "normal_form": nf.format(), "steps": len(trace),
              "completion_status": completion.status, "exact": exact}
    out.emit(record, nf.format() + ("" if exact else "\n# bound reached: normal form modulo a partial basis"))
    return OK if exact else BOUND


def cmd_member(args, out: Output) -> int:
    pres = _load(args.presentation)
    h = parse_expr(args.expr, pres.alphabet, pres.field)
    if h and h.degree > args.max_deg:
        raise InputError(f"expression degree {h.degree} exceeds --max-deg {args.max_deg}")
    completion = gsb.complete(pres.relations, args.max_deg, workers=args.workers)
    nf, _ = gsb.reduce(h, completion.relations)
    member = not nf
    exact = member or _exact(pres, completion, h.degree if h else 0)
    verdict = "member" if member else ("not_member" if exact else "undetermined")
    record = {"input": h.format(), "verdict": verdict, "remainder": nf.format(),
              "completion_status": completion.status}
    out.emit(record, verdict + ("" if member else f" (remainder {nf.format()})"))
    return {"member": OK, "not_member": NEGATIVE, "undetermined": BOUND}[verdict]


def cmd_basis(args, out: Output) -> int:
    pres = _load(args.presentation)
    completion = gsb.complete(pres.relations, args.max_deg, workers=args.workers)
    trees = gsb.reduced_basis_words(completion.relations, args.max_deg, pres.alphabet)
    counts = {}
    for t in trees:
        counts[len(t.word)] = counts.get(len(t.word), 0) + 1
    exact = _exact(pres, completion, args.max_deg)
    record = {
        "completion_status": completion.status,
        "exact": exact,
        "max_deg": args.max_deg,
        "counts": {str(n): counts.get(n, 0) for n in range(1, args.max_deg + 1)},
        "basis": [t.format(pres.alphabet) for t in trees],
    }
    lines = [f"degree {n}: " + " ".join(t.format(pres.alphabet) for t in trees if len(t.word) == n)
             for n in range(1, args.max_deg + 1)]
    if not exact:
        lines.append("# bound reached: these words span the quotient but may be dependent")
    out.emit(record, "\n".join(lines))
    return OK if exact else BOUND


def cmd_oracle(args, out: Output) -> int:
    pres = _load(args.presentation)
    report = oracle.crosscheck(pres.relations, args.max_deg, pres.alphabet)
    lines = ["degree witt ideal quotient reduced_words match"]
    for row in report["rows"]:
        lines.append(f"{row['degree']} {row['witt']} {row['ideal']} {row['quotient']} "
                     f"{row['reduced_words']} {'yes' if row['match'] else 'NO'}")
    lines.append("crosscheck " + ("passed" if report["ok"] else "FAILED"))
    out.emit(report, "\n".join(lines))
    return OK if report["ok"] else NEGATIVE


# -- encode -------------------------------------------------------------------


def _config(args) -> encoding.EncodingConfig:
    if args.config:
        path = Path(args.config)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
        return encoding.parse_config(text, base=path.parent)
    if args.N is None:
        raise InputError("--N or --config is required")
    kw = dict(N=args.N, policy=args.policy)
    if args.D1:
        kw["D1"] = encoding.parse_pairs(args.D1)
    if args.D2:
        kw["D2"] = encoding.parse_pairs(args.D2)
    return encoding.EncodingConfig.named(args.phi, args.psi, **kw)


def cmd_encode(args, out: Output) -> int:
    if args.action == "check-free":
        rep = encoding.check_T_free(args.max_deg)
        record = {"max_deg": rep.max_deg, "passed": rep.passed, "als": rep.als_ok, "order": rep.order_ok,
                  "ls": rep.ls_ok, "leading": rep.leading_ok, "independent": rep.independent,
                  "counts": {str(n): {"elements": a, "rank": b} for n, (a, b) in rep.counts.items()},
                  "failures": rep.failures}
        lines = [f"degree {n}: {a} elements, rank {b}" for n, (a, b) in rep.counts.items()]
        lines += rep.failures + ["passed" if rep.passed else "FAILED"]
        out.emit(record, "\n".join(lines))
        return OK if rep.passed else NEGATIVE

    cfg = _config(args)
    tables = encoding.build_tables(cfg)
    N = cfg.N
    if args.action == "table":
        n = {f"{i},{j}": tables.n(i, j) for i in range(1, N + 1) for j in range(1, N + 1)}
        s = {f"{i},{j}": tables.s(i, j) for i in range(1, N + 1) for j in range(1, N + 1) if i != j}
        record = {"N": N, "phi": cfg.phi_name, "psi": cfg.psi_name, "policy": cfg.policy, "n": n, "s": s}
        width = max(len(str(v)) for v in n.values()) + 1
        lines = ["n_i(j)  rows i, columns j = 1.." + str(N)]
        lines += [f"i={i}: " + "".join(str(tables.n(i, j)).rjust(width) for j in range(1, N + 1))
                  for i in range(1, N + 1)]
        lines.append("s(i,j)  (i != j)")
        lines += [f"i={i}: " + "".join(("-" if i == j else str(tables.s(i, j))).rjust(width)
                                       for j in range(1, N + 1)) for i in range(1, N + 1)]
        out.emit(record, "\n".join(lines))
        return OK

    if args.action == "verify-41":
        pairs = [(args.i, args.j)] if args.i is not None else [
            (i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]
        R = encoding.complete_R(cfg, args.max_deg).relations
        records, lines, ok = [], [], True
        for i, j in pairs:
            if args.j is None and args.i is not None:
                raise InputError("--i and --j go together")
            rep = encoding.verify_lemma_41(cfg, i, j, tables, R=R, max_deg=args.max_deg)
            ok = ok and rep.passed
            records.append({
                "i": i, "j": j, "passed": rep.passed, "exponents": list(rep.exponents),
                "epsilons": list(rep.epsilons), "exponent_ok": rep.exponent_ok, "epsilon_ok": rep.epsilon_ok,
                "certificate_ok": rep.certificate_ok, "remainder": rep.remainder.format(),
                "steps": len(rep.trace),
            })
            lines.append(f"({i},{j}): exponents {rep.exponents[0]}={rep.exponents[1]} "
                         f"{'ok' if rep.exponent_ok else 'MISMATCH'}, certificate "
                         f"{'ok' if rep.certificate_ok else 'FAILED'}, remainder {rep.remainder.format()}")
        out.emit({"passed": ok, "pairs": records}, "\n".join(lines + ["passed" if ok else "FAILED"]))
        return OK if ok else NEGATIVE

    rep = encoding.verify_lemma_42(cfg, args.max_deg, tables, workers=args.workers)
    X1 = encoding.X1
    incl = [{
        "i": c.i, "j": c.j, "w": X1.spell(c.w, " "), "trivial": c.trivial,
        "decomposition_ok": c.decomposition_ok, "terms_in_S": c.terms_in_S, "terms_below_w": c.terms_below_w,
        "value": c.record.value.format(),
    } for c in rep.inclusions]
    fails = [{"left": rep.relations[f.left].label, "right": rep.relations[f.right].label,
              "w": X1.spell(f.record.site.w, " "), "remainder": f.record.remainder.format()}
             for f in rep.gsb_report.failures]
    record = {
        "passed": rep.passed, "max_deg": args.max_deg, "R_status": rep.R_status,
        "relations": len(rep.relations), "separation_ok": rep.separation_ok,
        "separation_problems": rep.separation_problems, "inclusions": incl,
        "checked": rep.gsb_report.checked, "skipped": len(rep.gsb_report.skipped), "failures": fails,
    }
    lines = [f"separation: {'ok' if rep.separation_ok else 'FAILED'}"] + rep.separation_problems
    for c in incl:
        lines.append(f"(11)x(13) at i={c['i']} j={c['j']}: trivial {c['trivial']}, "
                     f"decomposition {'ok' if c['decomposition_ok'] else 'MISMATCH'}")
    lines.append(f"compositions checked {rep.gsb_report.checked}, above bound {len(rep.gsb_report.skipped)}, "
                 f"failures {len(fails)}")
    lines += [f"  site {f['w']} of {f['left']} and {f['right']}: remainder {f['remainder']}" for f in fails]
    lines.append("passed" if rep.passed else "FAILED")
    out.emit(record, "\n".join(lines))
    return OK if rep.passed else NEGATIVE


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record")
    bounded = argparse.ArgumentParser(add_help=False)
    bounded.add_argument("--max-deg", type=int, required=True, dest="max_deg")
    bounded.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(prog="freelie", description="Free Lie algebra computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    lsw = sub.add_parser("lsw", help="Lyndon-Shirshov words")
    lsw_sub = lsw.add_subparsers(dest="action", required=True)
    for name in ("check", "factor", "bracket", "special", "kukin"):
        p = lsw_sub.add_parser(name, parents=[common])
        p.add_argument("--alphabet", required=True, help='e.g. "x > z > y"')
        p.add_argument("word")
        if name in ("special", "kukin"):
            p.add_argument("--u", required=True, help="occurrence start,length")
        if name == "kukin":
            p.add_argument("--v", required=True, help="occurrence start,length")
    lsw.set_defaults(handler=cmd_lsw)

    g = sub.add_parser("gsb", help="Groebner-Shirshov bases")
    g_sub = g.add_subparsers(dest="action", required=True)
    for name in ("check", "complete"):
        p = g_sub.add_parser(name, parents=[common, bounded])
        p.add_argument("presentation")
    g.set_defaults(handler=cmd_gsb)

    for name, handler in (("nf", cmd_nf), ("member", cmd_member)):
        p = sub.add_parser(name, parents=[common, bounded])
        p.add_argument("presentation")
        p.add_argument("expr")
        p.set_defaults(handler=handler)

    p = sub.add_parser("basis", parents=[common, bounded])
    p.add_argument("presentation")
    p.set_defaults(handler=cmd_basis)

    o = sub.add_parser("oracle", help="brute-force cross-check")
    o_sub = o.add_subparsers(dest="action", required=True)
    p = o_sub.add_parser("crosscheck", parents=[common, bounded])
    p.add_argument("presentation")
    o.set_defaults(handler=cmd_oracle)

    e = sub.add_parser("encode", help="the encoding construction")
    e_sub = e.add_subparsers(dest="action", required=True)
    cfg = argparse.ArgumentParser(add_help=False)
    cfg.add_argument("--config")
    cfg.add_argument("--phi", default="add", choices=sorted(encoding.NAMED_FUNCTIONS))
    cfg.add_argument("--psi", default="add1", choices=sorted(encoding.NAMED_FUNCTIONS))
    cfg.add_argument("--N", type=int)
    cfg.add_argument("--D1")
    cfg.add_argument("--D2")
    cfg.add_argument("--policy", default="minimal")
    e_sub.add_parser("table", parents=[common, cfg])
    p = e_sub.add_parser("verify-41", parents=[common, cfg])
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--max-deg", type=int, default=14, dest="max_deg")
    p = e_sub.add_parser("verify-42", parents=[common, cfg])
    p.add_argument("--max-deg", type=int, default=14, dest="max_deg")
    p.add_argument("--workers", type=int, default=1)
    p = e_sub.add_parser("check-free", parents=[common])
    p.add_argument("--max-deg", type=int, required=True, dest="max_deg")
    e.set_defaults(handler=cmd_encode)
    return parser


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return BAD_INPUT if e.code else OK
    if getattr(args, "max_deg", 1) is not None and getattr(args, "max_deg", 1) < 1:
        stderr.write("error: --max-deg must be positive\n")
        return BAD_INPUT
    if getattr(args, "workers", 1) < 1:
        stderr.write("error: --workers must be positive\n")
        return BAD_INPUT
    out = Output(args.json, stdout)
    try:
        return args.handler(args, out)
    except InvariantViolation:
        raise
    except FreeLieError as e:
        if args.json:
            stdout.write(json.dumps({"error": str(e), "kind": type(e).__name__}, ensure_ascii=False) + "\n")
        stderr.write(f"error: {e}\n")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
