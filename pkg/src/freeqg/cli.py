"""Command-line interface.

Every invocation prints one JSON document
``{"verb", "inputs", "result", "provenance"}`` on stdout.  Exit status is 0
on success, 1 on a domain error (the document then carries ``error``
instead of ``result``) and 2 on a usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import fixed_vectors as fv
from .errors import FreeQGError, WordParseError
from .exact import ExactMatrix
from .fock import fock_moment
from .fusion import J_expand, catalan_closed, dim_o, dim_u, fuse, generalized_catalan, star_moment
from .pairings import count_colored, count_plain, enumerate_colored, enumerate_plain
from .powers import Explicit, check_lemma12, check_lemma13, lemma10_extremal, lemma10_sweep, lemma10_trial
from .verify import run_all
from .words import parse

FORCE_ENV = "FREEQG_FORCE"


class UsageError(Exception):
    pass


def _word(text: str):
    try:
        return parse(text)
    except WordParseError as exc:
        raise UsageError(str(exc)) from exc


def _word_or_int(text: str):
    t = text.strip()
    if t.isdigit():
        return int(t)
    return _word(t)


def _force(args) -> bool:
    return bool(args.force) or os.environ.get(FORCE_ENV, "").lower() in {"1", "true", "yes"}


def _matrix(path: str) -> ExactMatrix:
    try:
        return ExactMatrix.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read matrix file {path!r}: {exc}") from exc
    except FreeQGError as exc:
        raise UsageError(f"malformed matrix file {path!r}: {exc}") from exc


def cmd_fuse(args):
    x, y = _word(args.x), _word(args.y)
    return {"x": str(x), "y": str(y)}, fuse(x, y).to_dict(), "free-monoid fusion rule"


def cmd_decompose(args):
    w = _word(args.word)
    return {"word": str(w)}, J_expand(w).to_dict(), "J map: left fusion by letters"


def cmd_moment(args):
    w = _word(args.word)
    return {"word": str(w)}, star_moment(w), "tau(J(w))"


def cmd_catalan(args):
    v = _word_or_int(args.value)
    if isinstance(v, int):
        return {"k": v}, catalan_closed(v), "closed form (2k)!/(k!(k+1)!)"
    return {"word": str(v)}, generalized_catalan(v), "generalized Catalan recursion"


def cmd_dims(args):
    v = _word_or_int(args.value)
    if args.group == "u":
        if isinstance(v, int):
            raise UsageError("--group u takes a word")
        return {"group": "u", "n": args.n, "word": str(v)}, dim_u(v, args.n), "dimension recursion from fusion"
    if not isinstance(v, int):
        raise UsageError("--group o takes a non-negative integer")
    return {"group": "o", "n": args.n, "k": v}, dim_o(v, args.n), "Chebyshev recursion"


def cmd_pairings(args):
    v = _word_or_int(args.value)
    if isinstance(v, int):
        inputs = {"k": v}
        result = {"count": count_plain(v)}
        if args.list:
            result["pairings"] = [list(map(list, p.pairs)) for p in enumerate_plain(v)]
        return inputs, result, "non-crossing pairings (interval recursion / gap-splitting enumeration)"
    inputs = {"word": str(v)}
    result = {"count": count_colored(v)}
    if args.list:
        result["pairings"] = [list(map(list, p.pairs)) for p in enumerate_colored(v)]
    return inputs, result, "colored non-crossing pairings (interval recursion / gap-splitting enumeration)"


def cmd_fock(args):
    w = _word(args.word)
    return {"word": str(w)}, fock_moment(w), "truncated full Fock space, S + T*"


def cmd_fixed_dim(args):
    F, w = _matrix(args.matrix), _word(args.word)
    return (
        {"matrix": args.matrix, "n": F.nrows, "word": str(w)},
        fv.fixed_dim(F, w, _force(args)),
        "rank of Gram matrix of the Z basis (fraction-free elimination)",
    )


def cmd_haar(args):
    F, w = _matrix(args.matrix), _word(args.word)
    inputs = {"matrix": args.matrix, "n": F.nrows, "word": str(w)}
    if args.entry:
        try:
            i, j = (int(s) for s in args.entry.split(","))
        except ValueError as exc:
            raise UsageError(f"--entry expects I,J, got {args.entry!r}") from exc
        inputs["entry"] = [i, j]
        result = fv.haar_entry(F, w, i, j, _force(args)).to_pair()
    else:
        result = fv.haar_projector(F, w, _force(args)).tolist()
    return inputs, result, "projector V (V*V)^-1 V* onto fixed vectors"


def cmd_o_span(args):
    F = _matrix(args.matrix)
    k = _word_or_int(args.k)
    if not isinstance(k, int):
        raise UsageError("o-span takes a non-negative integer K")
    return (
        {"matrix": args.matrix, "n": F.nrows, "k": k},
        fv.w_span_dim(F, k, _force(args)),
        "rank of Gram matrix of pairing vectors v(P)",
    )


def cmd_powers(args):
    if args.which == "lemma12":
        rep = check_lemma12(args.L)
        return {"check": "lemma12", "L": args.L}, rep.to_json(), "bounded set fusion"
    if args.which == "lemma13":
        words = [_word(s) for s in args.set.split(",")] if args.set else []
        n = check_lemma13(Explicit(words), args.max_n)
        return (
            {"check": "lemma13", "set": sorted(map(str, words)), "max_n": args.max_n},
            {"N": n, "found": n is not None},
            "exact triple set fusion",
        )
    deltas = [float(x) for x in args.delta.split(",")]
    ds = [int(x) for x in args.d.split(",")]
    if len(ds) == 1 and len(deltas) == 1:
        rep = lemma10_trial(ds[0], deltas[0], args.trials, args.seed)
    else:
        rep = lemma10_sweep(ds, deltas, args.trials, args.seed)
    result = rep.to_json()
    result["extremal_ratio"] = {str(dl): lemma10_extremal(dl) for dl in deltas}
    return (
        {"check": "lemma10", "d": ds, "delta": deltas, "trials": args.trials, "seed": args.seed},
        result,
        "Monte-Carlo (numpy default_rng), floating point",
    )


def cmd_verify(args):
    results = run_all(args.max_len)
    doc = {"passed": all(r.passed for r in results), "suites": [r.to_json() for r in results]}
    return {"max_len": args.max_len}, doc, "cross-oracle suites"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="freeqg", description="Exact fusion-rule combinatorics for A_u(F) and A_o(F).")
    p.add_argument("--force", action="store_true", help=f"exceed desk-scale word-length limits (or set {FORCE_ENV}=1)")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("fuse", help="decompose r_X (x) r_Y")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_fuse)

    s = sub.add_parser("decompose", help="irreducible content of the tensor word u^W")
    s.add_argument("word")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("moment", help="dim Mor(1, u^W)")
    s.add_argument("word")
    s.set_defaults(func=cmd_moment)

    s = sub.add_parser("catalan", help="generalized Catalan number of a word, or Catalan(K)")
    s.add_argument("value", metavar="W|K")
    s.set_defaults(func=cmd_catalan)

    s = sub.add_parser("dims", help="dimension of an irreducible")
    s.add_argument("--group", choices=("u", "o"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("value", metavar="W|K")
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("pairings", help="count (and list) non-crossing pairings")
    s.add_argument("value", metavar="W|K")
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_pairings)

    s = sub.add_parser("fock", help="*-moment from the truncated Fock space")
    s.add_argument("word")
    s.set_defaults(func=cmd_fock)

    s = sub.add_parser("fixed-dim", help="exact rank certificate of dim Mor(1, u^W)")
    s.add_argument("--matrix", required=True)
    s.add_argument("word")
    s.set_defaults(func=cmd_fixed_dim)

    s = sub.add_parser("haar", help="Haar projector (Id (x) h)(u^W)")
    s.add_argument("--matrix", required=True)
    s.add_argument("--entry", metavar="I,J")
    s.add_argument("word")
    s.set_defaults(func=cmd_haar)

    s = sub.add_parser("o-span", help="rank of the pairing vectors for A_o(F)")
    s.add_argument("--matrix", required=True)
    s.add_argument("k", metavar="K")
    s.set_defaults(func=cmd_o_span)

    s = sub.add_parser("powers", help="bounded checks of the set-fusion lemmas")
    s.add_argument("which", choices=("lemma12", "lemma13", "lemma10"))
    s.add_argument("--L", type=int, default=8, help="length bound for lemma12")
    s.add_argument("--set", default="", help="comma-separated words for lemma13")
    s.add_argument("--max-n", type=int, default=10)
    s.add_argument("--d", default="2,3,4,5,6,7,8")
    s.add_argument("--delta", default="0.1,0.3333333333333333,0.45")
    s.add_argument("--trials", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_powers)

    s = sub.add_parser("verify", help="run every cross-oracle suite")
    s.add_argument("--max-len", type=int, default=8)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    doc = {"verb": args.verb}
    try:
        inputs, result, provenance = args.func(args)
    except UsageError as exc:
        print(f"freeqg {args.verb}: {exc}", file=sys.stderr)
        return 2
    except FreeQGError as exc:
        doc.update(error={"type": type(exc).__name__, "message": str(exc)})
        print(json.dumps(doc))
        print(f"freeqg {args.verb}: {exc}", file=sys.stderr)
        return 1
    doc.update(inputs=inputs, result=result, provenance={"algorithm": provenance})
    print(json.dumps(doc))
    if args.verb == "verify" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
