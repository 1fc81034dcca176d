"""Command-line front end.

Computation subcommands print canonical JSON; verification subcommands
print one line per check (or a JSON report with --json).  Exit codes:
0 success, 1 a verified property failed (a JSON witness is printed),
2 malformed input (message carries the offending position).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AlgElem, Tensor2, Tensor3
from .dbracket import CyclicAlgElem, SurfaceDoubleBracket, goldman, triple
from .evaluation import RepPoint, evaluate
from .matrices import mat
from .foxpairing import SurfaceFoxPairing
from .repalgebra import RepAlgebra, RepElem
from .suites import SUITE_NAMES, run_all, run_suite
from .words import (CyclicWord, SurfaceSignature, WordParseError, format_cyclic,
                    format_word, parse_word)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def alg_elem_json(x: AlgElem, sig: SurfaceSignature) -> list:
    terms = [{"coeff": str(c), "word": format_word(w, sig)} for w, c in x.items()]
    return sorted(terms, key=lambda t: t["word"])


def tensor_json(t: Tensor2 | Tensor3, sig: SurfaceSignature) -> list:
    terms = [{"coeff": str(c), "words": [format_word(w, sig) for w in key]}
             for key, c in t.items()]
    return sorted(terms, key=lambda term: term["words"])


def cyclic_json(x: CyclicAlgElem, sig: SurfaceSignature) -> list:
    terms = [{"class": format_cyclic(cw, sig), "coeff": str(c)} for cw, c in x.items()]
    return sorted(terms, key=lambda t: t["class"])


# --- expression grammar -----------------------------------------------------

class ExprParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<entry>[pqz][0-9]+_[0-9]+_[0-9]+)
  | (?P<trcall>tr\([^)]*\))
  | (?P<detcall>det\([^)]*\))
  | (?P<gen>[pqz][0-9]+)
  | (?P<num>[0-9]+(?:/[0-9]+)?)
  | (?P<sym>[()*+^-])
""", re.VERBOSE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _ExprParser:
    """expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
    factor := '-'? atom, atom := rational | entry | tr(word) | det(gen)
    | '(' expr ')'."""

    def __init__(self, text: str, alg: RepAlgebra):
        self.text = text
        self.alg = alg
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def next(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.next()
        if text != value:
            raise ExprParseError(f"expected {value!r}", pos)

    def parse(self) -> RepElem:
        out = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExprParseError(f"unexpected trailing {text!r}", pos)
        return out

    def expr(self) -> RepElem:
        out = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> RepElem:
        out = self.factor()
        while self.peek()[1] == "*":
            self.next()
            out = out * self.factor()
        return out

    def factor(self) -> RepElem:
        if self.peek()[1] == "-":
            self.next()
            return -self.factor()
        out = self.atom()
        if self.peek()[1] == "^":
            _, _, pos = self.next()
            kind, text, npos = self.next()
            if kind != "num" or "/" in text:
                raise ExprParseError("exponent must be a nonnegative integer", npos)
            power = int(text)
            result = self.alg.one()
            for _ in range(power):
                result = result * out
            return result
        return out

    def atom(self) -> RepElem:
        kind, text, pos = self.next()
        alg = self.alg
        sig = alg.sig
        if kind == "num":
            return alg.scalar(Fraction(text))
        if kind == "entry":
            name, i, j = text.rsplit("_", 2)
            try:
                u = sig.gen_index(name)
            except KeyError:
                raise ExprParseError(f"unknown generator {name!r}", pos) from None
            i, j = int(i), int(j)
            if not (1 <= i <= alg.dim and 1 <= j <= alg.dim):
                raise ExprParseError(f"entry index out of range for dim {alg.dim}", pos)
            return alg.sym(u, i - 1, j - 1)
        if kind == "trcall":
            inner = text[3:-1]
            try:
                w = parse_word(inner, sig)
            except WordParseError as exc:
                raise ExprParseError(exc.message, pos + 3 + exc.position) from None
            return alg.trace(w)
        if kind == "detcall":
            name = text[4:-1].strip()
            try:
                u = sig.gen_index(name)
            except KeyError:
                raise ExprParseError(f"unknown generator {name!r} in det()", pos) from None
            return RepElem(alg, alg.det_poly(u), alg.zero_den)
        if text == "(":
            out = self.expr()
            self.expect(")")
            return out
        if kind == "gen":
            raise ExprParseError(
                f"bare generator {text!r}; use an entry like {text}_1_1 or tr({text})", pos)
        raise ExprParseError(f"unexpected {text!r}", pos)


def parse_expression(text: str, alg: RepAlgebra) -> RepElem:
    return _ExprParser(text, alg).parse()


def load_rep_point(path: str, sig: SurfaceSignature, dim: int) -> RepPoint:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list) or len(data) != sig.rank:
        raise ValueError(f"point file must hold {sig.rank} matrices")
    mats = []
    for m in data:
        if len(m) != dim or any(len(row) != dim for row in m):
            raise ValueError(f"each matrix must be {dim}x{dim}")
        mats.append(mat([[Fraction(str(x)) for x in row] for row in m]))
    return RepPoint(tuple(mats))


# --- commands ----------------------------------------------------------------

def _signature(args) -> SurfaceSignature:
    return SurfaceSignature(args.genus, args.punctures)


def cmd_pairing(args) -> int:
    sig = _signature(args)
    eta = SurfaceFoxPairing(sig)
    a = parse_word(args.word_a, sig)
    b = parse_word(args.word_b, sig)
    value = eta.skew(a, b) if args.command == "eta-s" else eta(a, b)
    print(_dumps(alg_elem_json(value, sig)))
    return 0


def cmd_dbl_s(args) -> int:
    sig = _signature(args)
    dbl = SurfaceDoubleBracket(sig)
    value = dbl(parse_word(args.word_a, sig), parse_word(args.word_b, sig))
    print(_dumps(tensor_json(value, sig)))
    return 0


def cmd_triple(args) -> int:
    sig = _signature(args)
    dbl = SurfaceDoubleBracket(sig)
    value = triple(dbl, parse_word(args.word_a, sig), parse_word(args.word_b, sig),
                   parse_word(args.word_c, sig))
    print(_dumps(tensor_json(value, sig)))
    return 0


def cmd_goldman(args) -> int:
    sig = _signature(args)
    dbl = SurfaceDoubleBracket(sig)
    value = goldman(dbl, CyclicWord.of(parse_word(args.word_a, sig)),
                    CyclicWord.of(parse_word(args.word_b, sig)))
    print(_dumps(cyclic_json(value, sig)))
    return 0


def cmd_rep_bracket(args) -> int:
    sig = _signature(args)
    alg = RepAlgebra(sig, args.dim)
    P = parse_expression(args.expr_a, alg)
    Q = parse_expression(args.expr_b, alg)
    print(_dumps(alg.to_json(alg.qp_bracket(P, Q))))
    return 0


def cmd_trace_bracket(args) -> int:
    sig = _signature(args)
    alg = RepAlgebra(sig, args.dim)
    a = parse_word(args.word_a, sig)
    b = parse_word(args.word_b, sig)
    print(_dumps(alg.to_json(alg.qp_bracket(alg.trace(a), alg.trace(b)))))
    return 0


def cmd_ev(args) -> int:
    sig = _signature(args)
    alg = RepAlgebra(sig, args.dim)
    P = parse_expression(args.expr, alg)
    pt = load_rep_point(args.point_file, sig, args.dim)
    print(_dumps({"value": str(evaluate(alg, P, pt))}))
    return 0


def cmd_moment_check(args) -> int:
    from .suites import moment_suite
    sig = _signature(args)
    mu = parse_word(args.word, sig) if args.word else None
    trials = args.trials if args.trials is not None else 5
    report = moment_suite(sig, args.dim, (1, 2, 3), trials, args.seed, mu=mu)
    return _emit_report(report.to_dict(), args.json)


def cmd_verify(args) -> int:
    if args.suite == "all":
        report = run_all(args.seed, trials=args.trials, dim=args.dim,
                         max_len=args.max_word_len)
        return _emit_report(report, args.json)
    sig = _signature(args)
    sub = run_suite(args.suite, sig, args.seed, trials=args.trials, dim=args.dim,
                    max_len=args.max_word_len)
    return _emit_report(sub.to_dict(), args.json)


def _emit_report(report: dict, as_json: bool) -> int:
    ok = report["ok"]
    if as_json:
        print(_dumps(report))
        return 0 if ok else 1
    for block in report.get("reports", [report]):
        label = block["suite"]
        params = block.get("params", {})
        where = ""
        if "genus" in params:
            where = f" (genus={params['genus']}, punctures={params['punctures']})"
        print(f"{label}{where}: {'pass' if block['ok'] else 'FAIL'}")
        for check in block.get("checks", ()):
            print(f"  {'pass' if check['ok'] else 'FAIL'}  {check['name']}")
            if not check["ok"]:
                print(f"  witness: {_dumps(check['detail'])}")
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", type=int, default=1, help="surface genus (default 1)")
    common.add_argument("--punctures", type=int, default=1,
                        help="boundary components beyond the based one (default 1)")
    common.add_argument("--dim", type=int, default=2, help="matrix size N (default 2)")
    common.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
    common.add_argument("--trials", type=int, default=None,
                        help="override per-suite trial counts")
    common.add_argument("--max-word-len", type=int, default=4,
                        help="sampled word length bound (default 4)")
    common.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON reports")

    parser = argparse.ArgumentParser(
        prog="surfqp",
        description="Exact quasi-Poisson brackets on surface representation spaces.")
    subs = parser.add_subparsers(dest="command", required=True)

    def sub(name: str, func, help_text: str):
        p = subs.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = sub("eta", cmd_pairing, "homotopy intersection pairing of two words")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p = sub("eta-s", cmd_pairing, "skew-symmetrized pairing of two words")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p = sub("dbl-s", cmd_dbl_s, "surface double bracket of two words")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p = sub("triple", cmd_triple, "triple bracket of three words")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p.add_argument("word_c")
    p = sub("goldman", cmd_goldman, "Goldman bracket of two conjugacy classes")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p = sub("rep-bracket", cmd_rep_bracket, "quasi-Poisson bracket of two expressions")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p = sub("trace-bracket", cmd_trace_bracket, "bracket of two trace functions")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p = sub("ev", cmd_ev, "evaluate an expression at a rational point")
    p.add_argument("expr")
    p.add_argument("point_file")
    p = sub("moment-check", cmd_moment_check, "verify the moment-map identities")
    p.add_argument("--word", default=None,
                   help="candidate moment word (default: the boundary word)")
    p = sub("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES + ("all",))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WordParseError, ExprParseError) as exc:
        print(f"surfqp: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"surfqp: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
