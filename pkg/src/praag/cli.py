"""Command line interface: ``praag {classify,certify,massey,demushkin,oracle}``.

Every command builds a JSON-serializable report. ``--json`` prints it as
is, ``--human`` (the default) renders a short text summary derived from it.

Exit codes: 0 ok, 2 unreadable or invalid input, 3 invalid prime,
4 unsupported graph class or instance too large, 5 ledger failure,
6 Massey cup obstruction, 7 degenerate form.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from dataclasses import dataclass, field

import numpy as np

from . import demushkin as dm
from .errors import (
    BudgetExceeded,
    CupObstruction,
    DegenerateForm,
    InvalidPrime,
    OddDimension,
    UnsupportedGraphClass,
)
from .galois import certify_row, classify, exactness_ledger
from .graph import SimplicialGraph
from .linalg import check_prime
from .massey import (
    DEFINED_ONLY,
    UNDEFINED,
    VANISHES,
    Presentation,
    build_raag_witness,
    character_vectors,
    exhaustive_witness_search,
    extract_superdiagonal,
    raag_presentation,
    verify_rep,
)
from .pcentral import GroupWord, commutator

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRIME = 3
EXIT_UNSUPPORTED = 4
EXIT_LEDGER = 5
EXIT_OBSTRUCTION = 6
EXIT_DEGENERATE = 7

DEFAULT_P = 2


class InputError(Exception):
    pass


@dataclass
class Report:
    command: str
    params: dict
    result: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    exit_status: int = EXIT_OK
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "result": self.result,
            "warnings": self.warnings,
            "exit_status": self.exit_status,
            "error": self.error,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        return cls(
            data["command"],
            data["params"],
            data["result"],
            data["warnings"],
            data["exit_status"],
            data.get("error"),
        )

    def human(self) -> str:
        lines = [f"{self.command}: exit {self.exit_status}"]
        if self.error:
            lines.append(f"error: {self.error}")
        r = self.result
        if self.command == "classify" and "verdict" in r:
            v = r["verdict"]
            lines.append(f"verdict: {v['status']} (rule {v['rule']}, realizable: {v['realizable']})")
            lines += [f"note: {n}" for n in v["notes"]]
        elif self.command == "certify" and "rows" in r:
            for row in r["rows"]:
                flag = "ok  " if row["pass"] else "FAIL"
                lines.append(
                    f"{flag} S={row['support']} dim_cup={row['dim_cup']} (rank {row['dim_cup_rank']}) "
                    f"res={row['res_terms']} total={row['total']}"
                )
            lines.append(r["summary"])
        elif self.command == "massey" and "witness" in r:
            for name, mat in zip(r["generators"], r["witness"]):
                lines.append(f"{name}: " + " ".join(str(x) for row in mat for x in row))
        elif self.command == "massey" and "obstruction" in r:
            lines.append("cup obstruction at pair ({}, {})".format(*r["obstruction"]))
        if self.command == "massey" and "oracle" in r:
            lines.append(f"oracle: {r['oracle']['status']} (agrees: {r['oracle']['agrees']})")
        elif self.command == "demushkin" and "y_count" in r:
            for key in ("symplectic_ok", "h2_exact", "cor_values_ok", "image_is_kernel", "y_count", "cor_rank"):
                lines.append(f"{key}: {r[key]}")
        elif self.command == "oracle" and "status" in r:
            lines.append(f"chars: {r['chars']}")
            lines.append(f"status: {r['status']} after {r['fillings']} fillings")
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


# ------------------------------------------------------------------ inputs

def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def graph_from_document(doc) -> tuple[SimplicialGraph, int | None]:
    """Parse {"vertices": [...], "edges": [[i, j], ...], "p"?: int}."""
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise InputError("graph document needs 'vertices' and 'edges'")
    verts = doc["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise InputError("'vertices' must be a list of strings")
    edges = set()
    for e in doc["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise InputError(f"bad edge {e!r}")
        i, j = e
        if i == j:
            raise InputError(f"loop at vertex {i}")
        if not (0 <= i < len(verts) and 0 <= j < len(verts)):
            raise InputError(f"edge {e} out of range")
        edges.add((min(i, j), max(i, j)))
    p = doc.get("p")
    if p is not None and (not isinstance(p, int) or isinstance(p, bool)):
        raise InputError("'p' must be an integer")
    return SimplicialGraph(tuple(verts), frozenset(edges)), p


def load_graph(path: str):
    return graph_from_document(_read_json(path))


def _resolve_prime(flag, doc_p) -> int:
    p = flag if flag is not None else (doc_p if doc_p is not None else DEFAULT_P)
    return check_prime(p)


_TOKEN = re.compile(r"\s*(\[|\]|,|\^-?\d+|[A-Za-z_][A-Za-z0-9_]*)")


def parse_word(text: str, names: list[str]) -> GroupWord:
    """Parse words like ``[[x1,x2],x3][x4,x5]`` or ``x1^2 x2^-1``."""
    d = len(names)
    index = {n: k for k, n in enumerate(names)}
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"cannot parse word at {text[pos:]!r}")
        toks.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    k = 0

    def product(stop) -> GroupWord:
        nonlocal k
        w = GroupWord(d, ())
        while k < len(toks) and toks[k] not in stop:
            w = w * factor()
        return w

    def factor() -> GroupWord:
        nonlocal k
        t = toks[k]
        if t == "[":
            k += 1
            u = product({","})
            if k >= len(toks) or toks[k] != ",":
                raise InputError("expected ',' in commutator")
            k += 1
            v = product({"]"})
            if k >= len(toks) or toks[k] != "]":
                raise InputError("expected ']'")
            k += 1
            base = commutator(u, v)
        elif t in index:
            k += 1
            base = GroupWord(d, ((index[t], 1),))
        else:
            raise InputError(f"unknown generator {t!r}")
        if k < len(toks) and toks[k].startswith("^"):
            base = base ** int(toks[k][1:])
            k += 1
        return base

    w = product(set())
    if k != len(toks):
        raise InputError(f"trailing input in word {text!r}")
    return w


def presentation_from_document(doc) -> Presentation:
    """A graph document (Artin group) or {"generators": [...], "relators": [...]}."""
    if isinstance(doc, dict) and "edges" in doc:
        g, _ = graph_from_document(doc)
        return raag_presentation(g)
    if not isinstance(doc, dict) or "generators" not in doc or "relators" not in doc:
        raise InputError("presentation document needs 'generators' and 'relators'")
    gens = doc["generators"]
    names = [f"x{i + 1}" for i in range(gens)] if isinstance(gens, int) else list(gens)
    rels = []
    for r in doc["relators"]:
        w = parse_word(r, names) if isinstance(r, str) else GroupWord(len(names), tuple(tuple(x) for x in r))
        if not w.letters:
            raise InputError(f"relator {r!r} is trivial")
        rels.append(w)
    return Presentation(len(names), tuple(rels), tuple(names))


def load_chars(path: str, n: int | None, d: int) -> list[list[int]]:
    doc = _read_json(path)
    chars = doc.get("chars") if isinstance(doc, dict) else doc
    if not isinstance(chars, list) or not chars:
        raise InputError("characters file must list coefficient vectors")
    for c in chars:
        if not (isinstance(c, list) and len(c) == d and all(isinstance(x, int) for x in c)):
            raise InputError(f"each character needs {d} integer coefficients")
    if n is not None and n != len(chars):
        raise InputError(f"-n {n} but the file lists {len(chars)} characters")
    return chars


# ---------------------------------------------------------------- commands

def cmd_classify(args) -> Report:
    rep = Report("classify", {"path": args.path, "p": args.p})
    g, doc_p = load_graph(args.path)
    p = _resolve_prime(args.p, doc_p)
    rep.params["p"] = p
    rep.result["verdict"] = classify(g, p).to_dict()
    return rep


def cmd_certify(args) -> Report:
    rep = Report("certify", {"path": args.path, "p": args.p, "all_subsets": args.all_subsets, "sample": args.sample})
    g, doc_p = load_graph(args.path)
    p = _resolve_prime(args.p, doc_p)
    rep.params["p"] = p
    policy = "all" if args.all_subsets else args.sample
    try:
        ledger = exactness_ledger(g, p, policy, seed=args.seed)
    except UnsupportedGraphClass as exc:
        rep.error = str(exc)
        rep.exit_status = EXIT_UNSUPPORTED
        return rep
    rows = [r.to_dict() for r in ledger.rows]
    if args.certificates:
        for row, d in zip(ledger.rows, rows):
            cert = certify_row(g, ledger, row)
            d["certificate"] = cert.to_dict()
            d["pass"] = d["pass"] and cert.valid
    passed = sum(r["pass"] for r in rows)
    rep.result = {
        "kind": ledger.kind,
        "rows": rows,
        "sampled": ledger.sampled,
        "summary": f"rows={len(rows)} passed={passed} |E|={g.num_edges}",
    }
    if ledger.sampled:
        rep.warnings.append(f"sampled {len(rows)} of {2 ** g.d - 1} support subsets")
    if passed != len(rows):
        rep.exit_status = EXIT_LEDGER
        rep.error = "ledger rows failed"
    return rep


def _expected_status(witness_ok: bool) -> str:
    return VANISHES if witness_ok else UNDEFINED


def cmd_massey(args) -> Report:
    rep = Report("massey", {"path": args.path, "chars": args.chars, "p": args.p, "n": args.n, "oracle": args.oracle})
    g, doc_p = load_graph(args.path)
    p = _resolve_prime(args.p, doc_p)
    rep.params["p"] = p
    chars = load_chars(args.chars, args.n, g.d)
    if len(chars) < 2:
        raise InputError("need at least two characters")
    rep.params["n"] = len(chars)
    built = None
    try:
        built = build_raag_witness(g, p, chars)
    except CupObstruction as exc:
        rep.result["obstruction"] = [exc.h, exc.h + 1]
        rep.error = str(exc)
        rep.exit_status = EXIT_OBSTRUCTION
    if built is not None:
        rep.result["generators"] = list(g.vertices)
        rep.result["witness"] = [m.tolist() for m in built.images]
        rep.result["verified"] = verify_rep(built)
        rep.result["superdiagonal"] = [list(c) for c in extract_superdiagonal(built)]
    if args.oracle:
        try:
            res = exhaustive_witness_search(raag_presentation(g), p, len(chars), chars)
            rep.result["oracle"] = {
                "status": res.status,
                "fillings": res.fillings,
                "agrees": res.status == _expected_status(built is not None),
            }
        except BudgetExceeded as exc:
            rep.warnings.append(f"oracle skipped: {exc}")
    return rep


def cmd_demushkin(args) -> Report:
    rep = Report("demushkin", {"p": args.p, "d": args.d, "form": args.form})
    p = _resolve_prime(args.p, None)
    rep.params["p"] = p
    form = None
    if args.form:
        doc = _read_json(args.form)
        mat = doc.get("form") if isinstance(doc, dict) else doc
        try:
            form = dm.DemushkinForm(p, np.array(mat, dtype=np.int64))
        except (ValueError, TypeError) as exc:
            raise InputError(f"bad form: {exc}") from None
    d = args.d if args.d is not None else (form.d if form is not None else None)
    if d is None:
        raise InputError("give -d or a form file")
    rep.params["d"] = d
    try:
        result = dm.demushkin_suite(p, d, form)
    except DegenerateForm as exc:
        rep.error = str(exc)
        rep.exit_status = EXIT_DEGENERATE
        return rep
    except OddDimension as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rep.warnings += result.pop("warnings")
    rep.result = result
    return rep


def cmd_oracle(args) -> Report:
    rep = Report("oracle", {"path": args.path, "p": args.p, "n": args.n, "chars": args.chars, "status": args.status})
    doc = _read_json(args.path)
    pres = presentation_from_document(doc)
    p = _resolve_prime(args.p, doc.get("p") if isinstance(doc, dict) else None)
    rep.params["p"] = p
    if args.chars:
        chars = load_chars(args.chars, args.n, pres.num_generators)
        n = len(chars)
        candidates = [chars]
    else:
        n = args.n if args.n is not None else 3
        vecs = character_vectors(pres.num_generators, p)
        candidates = itertools.product(vecs, repeat=n)
    rep.params["n"] = n
    searched = 0
    try:
        for chars in candidates:
            searched += 1
            res = exhaustive_witness_search(pres, p, n, chars)
            if args.chars or res.status == args.status:
                rep.result = {
                    "chars": [list(c) for c in chars],
                    "status": res.status,
                    "fillings": res.fillings,
                    "tuples_searched": searched,
                    "witness": None if res.witness is None else [m.tolist() for m in res.witness.images],
                }
                return rep
    except BudgetExceeded as exc:
        rep.error = str(exc)
        rep.exit_status = EXIT_UNSUPPORTED
        return rep
    rep.result = {"chars": None, "status": None, "fillings": 0, "tuples_searched": searched, "witness": None}
    rep.warnings.append(f"no character tuple with status {args.status}")
    return rep


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="praag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("-p", type=int, default=None, help="prime (default: file value or 2)")
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
        fmt.add_argument("--human", dest="fmt", action="store_const", const="human")
        sp.set_defaults(fmt="human")

    sp = sub.add_parser("classify", help="classify the Artin group of a graph")
    sp.add_argument("path")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("certify", help="exactness ledger over support subsets")
    sp.add_argument("path")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--all-subsets", action="store_true")
    grp.add_argument("--sample", type=int, default=None, metavar="N")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--certificates", action="store_true", help="also materialize witness relations")
    common(sp)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("massey", help="unipotent witness for a tuple of characters")
    sp.add_argument("path")
    sp.add_argument("chars")
    sp.add_argument("-n", type=int, default=None)
    sp.add_argument("--oracle", action="store_true", help="cross-check by exhaustive search")
    common(sp)
    sp.set_defaults(func=cmd_massey)

    sp = sub.add_parser("demushkin", help="symplectic basis, cup surjectivity and corestriction")
    sp.add_argument("form", nargs="?", default=None)
    sp.add_argument("-d", type=int, default=None)
    common(sp)
    sp.set_defaults(func=cmd_demushkin)

    sp = sub.add_parser("oracle", help="exhaustive unipotent search on a presentation")
    sp.add_argument("path")
    sp.add_argument("--chars", default=None)
    sp.add_argument("-n", type=int, default=None)
    sp.add_argument("--status", default=DEFINED_ONLY, choices=[VANISHES, DEFINED_ONLY, UNDEFINED])
    common(sp)
    sp.set_defaults(func=cmd_oracle)
    return parser


def run(argv=None) -> Report:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        return Report(args.command, {"argv": list(argv or [])}, exit_status=EXIT_PARSE, error=str(exc))
    except InvalidPrime as exc:
        return Report(args.command, {"argv": list(argv or [])}, exit_status=EXIT_PRIME, error=str(exc))


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = run(argv)
    print(rep.to_json() if args.fmt == "json" else rep.human())
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
