"""Command-line front end.

Categories are described in a small text format::

    category snake {
      objects a b c d;
      arrows alpha: a -> b; beta: b -> c; gamma: c -> d;
      relations alpha*beta*gamma = 0;
    }
    let ab = alpha*beta;
    object K = (alpha | beta*gamma);

Morphism expressions are Z-linear combinations of ``*``-chained arrow labels
(``2*alpha*beta - gamma``), with ``id(v)`` for identities and ``let`` names
from the session file.  Objects are ``emb(v)``, a bare vertex, ``zero``, a
session name, or a ``(rho | gamma)`` triple of expressions.

Exit codes: 0 when every verdict is positive, 1 for a negative verdict, 2
for usage, parse, or precondition errors.  ``--json`` output is byte-stable
for fixed inputs and seed; wall-clock timings are only attached when
``--timings`` is passed.
"""

from __future__ import annotations

import argparse
import ast as pyast
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import provers
from .addclosure import TupleObject, single, zero_mat
from .adelman import (
    AdelMorphism,
    AdelObject,
    CompositeNotZeroError,
    NotEpiError,
    NotMonoError,
    SideConditionError,
    WitnessError,
    cokernel,
    connecting_homomorphism,
    emb_object,
    homology,
    is_equal,
    is_iso,
    is_mono,
    is_epi,
    kernel,
    make_morphism,
)
from .evalfunctor import Representation, RepresentationError, check_representation, eval_object
from .homgroups import hom_group
from .intlinalg import IntMatrix
from .quivercat import (
    Arrow,
    CyclicQuiverError,
    EndpointError,
    LinMorphism,
    Path,
    Quiver,
    QuiverCategory,
    QuiverError,
    Relation,
    RelationError,
    compose_lin,
    format_lin,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


_SYMBOLS = ("->", "{", "}", ";", ":", "*", "+", "-", "=", "(", ")", "|", ",")


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text.startswith("->", i):
            out.append(Token("symbol", "->", line, col))
            i += 2
            col += 2
            continue
        if ch in "{};:*+-=()|,":
            out.append(Token("symbol", ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    out.append(Token("eof", "", line, col))
    return out


# Expression AST: tuple of (coefficient, factors); a factor is either an
# arrow/let name or ("id", vertex).  The empty term tuple encodes zero.
Term = tuple[int, tuple]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            raise ParseError(f"expected {want!r}, found {tok.text or tok.kind!r}",
                             tok.line, tok.col)
        return self.advance()

    def at_symbol(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "symbol" and tok.text == text

    def at_name(self, text: Optional[str] = None) -> bool:
        tok = self.peek()
        return tok.kind == "name" and (text is None or tok.text == text)

    # expr := ['-'] term (('+'|'-') term)*
    # term := INT ['*' factors] | factors
    # factors := factor ('*' factor)*
    # factor := NAME | 'id' '(' NAME ')'
    def parse_expr(self) -> tuple[Term, ...]:
        terms: list[Term] = []
        sign = 1
        if self.at_symbol("-"):
            self.advance()
            sign = -1
        terms.extend(self._term(sign))
        while self.at_symbol("+") or self.at_symbol("-"):
            sign = 1 if self.advance().text == "+" else -1
            terms.extend(self._term(sign))
        return tuple(terms)

    def _term(self, sign: int) -> list[Term]:
        coef = sign
        tok = self.peek()
        if tok.kind == "int":
            coef = sign * int(self.advance().text)
            if self.at_symbol("*"):
                self.advance()
            else:
                if coef == 0:
                    return []
                raise ParseError("a bare integer other than 0 is not a morphism",
                                 tok.line, tok.col)
        factors = [self._factor()]
        while self.at_symbol("*"):
            self.advance()
            factors.append(self._factor())
        return [(coef, tuple(factors))]

    def _factor(self):
        tok = self.expect("name")
        if tok.text == "id" and self.at_symbol("("):
            self.advance()
            v = self.expect("name").text
            self.expect("symbol", ")")
            return ("id", v)
        return tok.text


@dataclass(frozen=True)
class CategorySpec:
    """Parsed category block; relations are stored moved to one side."""

    name: str
    objects: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]
    relations: tuple[tuple[Term, ...], ...]


@dataclass(frozen=True)
class SessionSpec:
    category: CategorySpec
    lets: tuple[tuple[str, tuple[Term, ...]], ...] = ()
    objects: tuple[tuple[str, tuple[Term, ...], tuple[Term, ...]], ...] = ()


def parse_category(text: str) -> CategorySpec:
    return parse_session(text).category


def parse_session(text: str) -> SessionSpec:
    p = _Parser(tokenize(text))
    p.expect("name", "category")
    name = p.expect("name").text
    p.expect("symbol", "{")
    objects: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    relations: list[tuple[Term, ...]] = []
    keywords = ("objects", "arrows", "relations")
    while not p.at_symbol("}"):
        tok = p.peek()
        if p.at_name("objects"):
            p.advance()
            while p.at_name() and p.peek().text not in keywords:
                objects.append(p.advance().text)
            p.expect("symbol", ";")
        elif p.at_name("arrows"):
            p.advance()
            while p.at_name() and p.peek().text not in keywords:
                label = p.advance().text
                p.expect("symbol", ":")
                src = p.expect("name").text
                p.expect("symbol", "->")
                tgt = p.expect("name").text
                arrows.append((label, src, tgt))
                p.expect("symbol", ";")
        elif p.at_name("relations"):
            p.advance()
            while not p.at_symbol("}") and not (
                    p.at_name("objects") or p.at_name("arrows") or p.at_name("relations")):
                lhs = p.parse_expr()
                rhs: tuple[Term, ...] = ()
                if p.at_symbol("="):
                    p.advance()
                    rhs = p.parse_expr()
                moved = lhs + tuple((-c, f) for c, f in rhs)
                relations.append(moved)
                p.expect("symbol", ";")
        else:
            raise ParseError(
                f"expected objects/arrows/relations, found {tok.text!r}", tok.line, tok.col)
    p.expect("symbol", "}")
    lets: list[tuple[str, tuple[Term, ...]]] = []
    objs: list[tuple[str, tuple[Term, ...], tuple[Term, ...]]] = []
    while not p.peek().kind == "eof":
        if p.at_name("let"):
            p.advance()
            lname = p.expect("name").text
            p.expect("symbol", "=")
            lets.append((lname, p.parse_expr()))
            p.expect("symbol", ";")
        elif p.at_name("object"):
            p.advance()
            oname = p.expect("name").text
            p.expect("symbol", "=")
            p.expect("symbol", "(")
            rel = p.parse_expr()
            p.expect("symbol", "|")
            corel = p.parse_expr()
            p.expect("symbol", ")")
            p.expect("symbol", ";")
            objs.append((oname, rel, corel))
        else:
            tok = p.peek()
            raise ParseError(f"expected let/object, found {tok.text!r}", tok.line, tok.col)
    return SessionSpec(
        CategorySpec(name, tuple(objects), tuple(arrows), tuple(relations)),
        tuple(lets), tuple(objs))


def print_spec(spec: CategorySpec) -> str:
    lines = [f"category {spec.name} {{"]
    lines.append("  objects " + " ".join(spec.objects) + ";")
    lines.append("  arrows " + " ".join(
        f"{l}: {s} -> {t};" for l, s, t in spec.arrows))
    for rel in spec.relations:
        lines.append(f"  relations {_print_terms(rel)} = 0;")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _print_terms(terms: tuple[Term, ...]) -> str:
    if not terms:
        return "0"
    parts: list[str] = []
    for coef, factors in terms:
        word = "*".join(f"id({f[1]})" if isinstance(f, tuple) else f for f in factors)
        if coef == 1:
            piece = word
        elif coef == -1:
            piece = f"-{word}"
        else:
            piece = f"{coef}*{word}"
        if parts and not piece.startswith("-"):
            parts.append("+ " + piece)
        elif parts:
            parts.append("- " + piece[1:])
        else:
            parts.append(piece)
    return " ".join(parts)


class Session:
    """A built category together with its named morphisms and objects."""

    def __init__(self, spec: SessionSpec):
        self.spec = spec.category
        quiver = Quiver(spec.category.objects,
                        tuple(Arrow(l, s, t) for l, s, t in spec.category.arrows))
        relations = []
        for terms in spec.category.relations:
            relations.append(self._relation(quiver, terms))
        self.cat = QuiverCategory(quiver, tuple(relations), name=spec.category.name)
        self.lets: dict[str, LinMorphism] = {}
        for lname, terms in spec.lets:
            self.lets[lname] = self.eval_expr(terms)
        self.objects: dict[str, AdelObject] = {}
        for oname, rel_terms, corel_terms in spec.objects:
            rel = self.eval_expr(rel_terms)
            corel = self.eval_expr(corel_terms)
            if rel.target != corel.source:
                raise RelationError(
                    f"object {oname!r}: relation target {rel.target!r} does not "
                    f"match corelation source {corel.source!r}")
            self.objects[oname] = AdelObject(single(rel), single(corel))

    def _relation(self, quiver: Quiver, terms: tuple[Term, ...]) -> Relation:
        built: list[tuple[int, Path]] = []
        for coef, factors in terms:
            path = self._path(quiver, factors)
            built.append((coef, path))
        if not built:
            raise RelationError("empty relation")
        src, tgt = built[0][1].source, built[0][1].target
        for _, pth in built:
            if (pth.source, pth.target) != (src, tgt):
                raise RelationError(
                    f"relation mixes paths {src}->{tgt} and {pth.source}->{pth.target}")
        return Relation(src, tgt, tuple(built))

    def _path(self, quiver: Quiver, factors: tuple) -> Path:
        arrows: list[int] = []
        src: Optional[str] = None
        at: Optional[str] = None
        for f in factors:
            if isinstance(f, tuple):  # ("id", v)
                v = f[1]
                if at is not None and at != v:
                    raise RelationError(f"identity at {v!r} does not compose at {at!r}")
                src = src or v
                at = v
                continue
            idx = quiver.arrow_index(f)
            arrow = quiver.arrows[idx]
            if at is not None and arrow.source != at:
                raise RelationError(f"arrow {f!r} does not compose at {at!r}")
            src = src or arrow.source
            at = arrow.target
            arrows.append(idx)
        if src is None:
            raise RelationError("empty path")
        return Path(src, at if at is not None else src, tuple(arrows))

    def eval_expr(self, terms: tuple[Term, ...]) -> LinMorphism:
        total: Optional[LinMorphism] = None
        for coef, factors in terms:
            piece: Optional[LinMorphism] = None
            for f in factors:
                nxt = self._factor_lin(f)
                piece = nxt if piece is None else compose_lin(piece, nxt)
            assert piece is not None
            piece = piece.scale(coef)
            total = piece if total is None else total + piece
        if total is None:
            raise RelationError("cannot infer the endpoints of a bare zero expression")
        return total

    def _factor_lin(self, f) -> LinMorphism:
        if isinstance(f, tuple):
            return self.cat.identity_lin(f[1])
        if f in self.lets:
            return self.lets[f]
        return self.cat.arrow_lin(f)

    def parse_expr_text(self, text: str) -> LinMorphism:
        p = _Parser(tokenize(text))
        terms = p.parse_expr()
        if p.peek().kind != "eof":
            tok = p.peek()
            raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
        return self.eval_expr(terms)

    def parse_object_text(self, text: str) -> AdelObject:
        text = text.strip()
        if text == "zero":
            return emb_object(TupleObject(self.cat, ()))
        if text in self.objects:
            return self.objects[text]
        if text.startswith("emb(") and text.endswith(")"):
            v = text[4:-1].strip()
            return self._emb_vertex(v)
        if text in self.cat.quiver.vertices:
            return self._emb_vertex(text)
        if text.startswith("(") and text.endswith(")") and "|" in text:
            inner = text[1:-1]
            left, right = inner.split("|", 1)
            left, right = left.strip(), right.strip()
            if not left and not right:
                raise ParseError("a triple needs at least one side", 1, 1)
            empty = TupleObject(self.cat, ())
            if not left:
                corel = self.parse_expr_text(right)
                rel = zero_mat(empty, TupleObject(self.cat, (corel.source,)))
                return AdelObject(rel, single(corel))
            if not right:
                rel = self.parse_expr_text(left)
                corel = zero_mat(TupleObject(self.cat, (rel.target,)), empty)
                return AdelObject(single(rel), corel)
            rel = self.parse_expr_text(left)
            corel = self.parse_expr_text(right)
            if rel.target != corel.source:
                raise RelationError(
                    f"triple ({left} | {right}): endpoints do not meet")
            return AdelObject(single(rel), single(corel))
        raise ParseError(f"cannot parse object {text!r}", 1, 1)

    def _emb_vertex(self, v: str) -> AdelObject:
        if v not in self.cat.quiver.vertices:
            raise QuiverError(f"unknown vertex {v!r}")
        return emb_object(TupleObject(self.cat, (v,)))


def parse_representation(session: Session, text: str) -> Representation:
    """Text format: ``rank v = n`` and ``matrix arrow = [[..],[..]]`` lines;
    blank lines and ``#`` comments are ignored."""
    ranks: dict[str, int] = {}
    raw_matrices: dict[str, list[list[int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("=", 1)
        if len(parts) != 2:
            raise ParseError("expected 'rank v = n' or 'matrix a = [[..]]'", lineno, 1)
        head = parts[0].split()
        value = parts[1].strip()
        if len(head) == 2 and head[0] == "rank":
            try:
                ranks[head[1]] = int(value)
            except ValueError:
                raise ParseError(f"bad rank value {value!r}", lineno, 1) from None
        elif len(head) == 2 and head[0] == "matrix":
            try:
                rows = pyast.literal_eval(value)
                raw_matrices[head[1]] = [[int(x) for x in row] for row in rows]
            except (ValueError, SyntaxError, TypeError):
                raise ParseError(f"bad matrix literal for {head[1]!r}", lineno, 1) from None
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno, 1)
    matrices: dict[str, IntMatrix] = {}
    for label, entries in raw_matrices.items():
        idx = session.cat.quiver.arrow_index(label)
        arrow = session.cat.quiver.arrows[idx]
        cols = ranks.get(arrow.target, 0)
        matrices[label] = IntMatrix.from_rows(entries, cols=cols if not entries else None)
    return Representation(session.cat, ranks, matrices)


# -- report rendering ------------------------------------------------------------

def _format_object(x: AdelObject) -> str:
    from .addclosure import format_mat
    mid = "+".join(x.middle.summands) or "0"
    left = "+".join(x.rel_source.summands) or "0"
    right = "+".join(x.corel_target.summands) or "0"
    return (f"({left} -> {mid} -> {right}) with rel {format_mat(x.rel)}, "
            f"corel {format_mat(x.corel)}")


@dataclass
class CommandResult:
    command: str
    inputs: dict
    verdict: bool
    certificates: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)

    def to_dict(self, seed: Optional[int], timings: Optional[dict]) -> dict:
        out = {
            "command": self.command,
            "inputs": {**self.inputs, **({"seed": seed} if seed is not None else {})},
            "verdict": self.verdict,
            "certificates": self.certificates,
        }
        out.update(self.extra)
        if timings is not None:
            out["timings"] = timings
        return out


def _emit(result: CommandResult, args) -> int:
    elapsed = result.extra.pop("_elapsed", 0.0)
    timings = {"seconds": round(elapsed, 6)} if args.timings else None
    if args.json:
        payload = result.to_dict(args.seed, timings)
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in result.lines:
            print(line)
        print(f"verdict: {'pass' if result.verdict else 'FAIL'}")
        if timings:
            print(f"time: {timings['seconds']}s")
    return 0 if result.verdict else 1


def _need_session(args) -> Session:
    if not args.category:
        raise ParseError("this command needs --category FILE", 0, 0)
    with open(args.category, "r", encoding="utf-8") as fh:
        return Session(parse_session(fh.read()))


def _morphism_between(session: Session, expr: str, src: AdelObject,
                      tgt: AdelObject) -> AdelMorphism:
    lin = session.parse_expr_text(expr)
    datum = single(lin)
    if datum.source != src.middle or datum.target != tgt.middle:
        raise EndpointError(
            f"expression {expr!r} runs {lin.source}->{lin.target}, which does not "
            "match the given objects")
    made = make_morphism(src, tgt, datum)
    if made is None:
        raise WitnessError(f"{expr!r} is not a well-defined morphism between these objects")
    return made


# -- subcommand implementations ----------------------------------------------------

def _cmd_check_equal(args) -> CommandResult:
    session = _need_session(args)
    src = session.parse_object_text(args.source)
    tgt = session.parse_object_text(args.target)
    f = _morphism_between(session, args.first, src, tgt)
    g = _morphism_between(session, args.second, src, tgt)
    wp = is_equal(f, g)
    certs = []
    if wp is not None:
        certs.append(provers._cert_zero(src, tgt, f.datum - g.datum, wp))
    return CommandResult(
        "check-equal",
        {"first": args.first, "second": args.second,
         "source": args.source, "target": args.target,
         "category": session.spec.name},
        wp is not None, certs,
        lines=[f"morphisms are {'equal' if wp is not None else 'NOT equal'} "
               f"in the free abelian category"])


def _cmd_kernel(args, which: str) -> CommandResult:
    session = _need_session(args)
    src = session.parse_object_text(args.source)
    tgt = session.parse_object_text(args.target)
    f = _morphism_between(session, args.morphism, src, tgt)
    result = kernel(f) if which == "kernel" else cokernel(f)
    obj = result.obj
    return CommandResult(
        which,
        {"morphism": args.morphism, "source": args.source, "target": args.target,
         "category": session.spec.name},
        True,
        [],
        extra={"object": provers._ser_obj(obj)},
        lines=[f"{which} object: {_format_object(obj)}"])


def _cmd_homology(args) -> CommandResult:
    session = _need_session(args)
    o1, o2, o3 = (session.parse_object_text(t) for t in args.objects)
    f = _morphism_between(session, args.first, o1, o2)
    g = _morphism_between(session, args.second, o2, o3)
    h = homology(f, g)
    return CommandResult(
        "homology",
        {"first": args.first, "second": args.second,
         "objects": list(args.objects), "category": session.spec.name},
        True,
        [],
        extra={"object": provers._ser_obj(h.obj)},
        lines=[f"homology object: {_format_object(h.obj)}"])


def _cmd_is_exact(args) -> CommandResult:
    session = _need_session(args)
    o1, o2, o3 = (session.parse_object_text(t) for t in args.objects)
    f = _morphism_between(session, args.first, o1, o2)
    g = _morphism_between(session, args.second, o2, o3)
    from .adelman import exactness_certificates
    composite_wp, via, via_wp = exactness_certificates(f, g)
    certs = []
    if via_wp is not None:
        certs.append(provers._cert_exact(f, g, composite_wp, via, via_wp))
    return CommandResult(
        "is-exact",
        {"first": args.first, "second": args.second,
         "objects": list(args.objects), "category": session.spec.name},
        via_wp is not None, certs,
        lines=[f"sequence is {'exact' if via_wp is not None else 'NOT exact'} "
               "at the middle object"])


def _cmd_predicate(args, which: str) -> CommandResult:
    session = _need_session(args)
    src = session.parse_object_text(args.source)
    tgt = session.parse_object_text(args.target)
    f = _morphism_between(session, args.morphism, src, tgt)
    verdict = {"is-mono": is_mono, "is-epi": is_epi, "is-iso": is_iso}[which](f)
    return CommandResult(
        which,
        {"morphism": args.morphism, "source": args.source, "target": args.target,
         "category": session.spec.name},
        verdict, [],
        lines=[f"{which[3:]}: {verdict}"])


def _cmd_hom_group(args) -> CommandResult:
    session = _need_session(args)
    x = session.parse_object_text(args.source)
    y = session.parse_object_text(args.target)
    hg = hom_group(x, y)
    inv = hg.group.invariants().reduced()
    gens = [provers._ser_mat(g.datum) for g in hg.generators]
    gen_lines = [
        "  generator: " + " | ".join(
            format_lin(e) for row in g.datum.entries for e in row)
        for g in hg.generators
    ]
    return CommandResult(
        "hom-group",
        {"source": args.source, "target": args.target, "category": session.spec.name},
        True,
        [provers._cert_invariants(hg.group, inv.factors, inv.free_rank)],
        extra={"invariant_factors": list(inv.factors), "free_rank": inv.free_rank,
               "generators": gens},
        lines=[f"Hom group: {inv.describe()} "
               f"(invariant factors {list(inv.factors)}, free rank {inv.free_rank})"]
              + gen_lines)


def _cmd_connecting(args) -> CommandResult:
    session = _need_session(args)
    a = single(session.parse_expr_text(args.first))
    b = single(session.parse_expr_text(args.second))
    c = single(session.parse_expr_text(args.third))
    conn = connecting_homomorphism(a, b, c)
    return CommandResult(
        "connecting",
        {"first": args.first, "second": args.second, "third": args.third,
         "category": session.spec.name},
        True, [],
        extra={"morphism": provers._ser_mor(conn)},
        lines=[
            f"source: {_format_object(conn.source)}",
            f"target: {_format_object(conn.target)}",
            f"datum: {args.second}",
        ])


def _cmd_prove(args) -> CommandResult:
    name = args.lemma
    if name == "snake":
        report = provers.prove_snake(args.connecting_scale)
    elif name == "five":
        report = provers.prove_refined_five()
    elif name == "uniqueness":
        report = provers.prove_connecting_uniqueness()
    elif name == "d4":
        report = provers.explore_d4()
    else:
        raise ParseError(f"unknown lemma {name!r} (snake|five|uniqueness|d4)", 0, 0)
    d = report.to_dict()
    lines = [f"{report.lemma} in category {report.category!r}:"]
    for check in report.checks:
        mark = "ok" if check.verdict else "FAIL"
        lines.append(f"  [{mark}] {check.description}" +
                     (f" ({check.summary})" if check.summary else ""))
    return CommandResult(
        "prove", {"lemma": name}, report.overall,
        d["checks"], lines=lines)


def _cmd_sweep(args) -> CommandResult:
    lo, hi = args.range
    values = list(range(lo, hi + 1))
    report = provers.sweep_report(values)
    results = provers.exactness_sweep(values)
    lines = [f"s = {s}: {'exact' if results[s] else 'not exact'}" for s in values]
    return CommandResult(
        "sweep", {"range": [lo, hi]}, report.overall,
        report.to_dict()["checks"],
        extra={"results": {str(s): results[s] for s in values}},
        lines=lines)


def _cmd_eval(args) -> CommandResult:
    session = _need_session(args)
    with open(args.rep, "r", encoding="utf-8") as fh:
        rep = parse_representation(session, fh.read())
    valid = check_representation(rep)
    lines = [f"representation is {'valid' if valid else 'INVALID (relations violated)'}"]
    extra: dict = {"ranks": {v: rep.ranks[v] for v in session.cat.quiver.vertices}}
    verdict = valid
    if valid and args.object:
        obj = session.parse_object_text(args.object)
        gw = eval_object(rep, obj)
        inv = gw.invariants()
        extra["invariant_factors"] = list(inv.factors)
        extra["free_rank"] = inv.free_rank
        lines.append(f"evaluated object: {inv.describe()}")
    return CommandResult(
        "eval",
        {"rep": args.rep, "object": args.object, "category": session.spec.name},
        verdict, [], extra=extra, lines=lines)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." not in text:
        raise argparse.ArgumentTypeError("range must look like -3..3")
    lo, hi = text.split("..", 1)
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("range must look like -3..3") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--category", help="category/session file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None,
                        help="seed recorded in reports (required with --json)")
    common.add_argument("--timings", action="store_true",
                        help="attach wall-clock timings to the report")

    parser = argparse.ArgumentParser(
        prog="adelcat",
        description="exact homological computations in free abelian categories")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-equal", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)

    for which in ("kernel", "cokernel"):
        p = sub.add_parser(which, parents=[common])
        p.add_argument("morphism")
        p.add_argument("--source", required=True)
        p.add_argument("--target", required=True)

    p = sub.add_parser("homology", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--objects", nargs=3, required=True)

    p = sub.add_parser("is-exact", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--objects", nargs=3, required=True)

    for which in ("is-mono", "is-epi", "is-iso"):
        p = sub.add_parser(which, parents=[common])
        p.add_argument("morphism")
        p.add_argument("--source", required=True)
        p.add_argument("--target", required=True)

    p = sub.add_parser("hom-group", parents=[common])
    p.add_argument("source")
    p.add_argument("target")

    p = sub.add_parser("connecting", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("third")

    p = sub.add_parser("prove", parents=[common])
    p.add_argument("lemma", choices=["snake", "five", "uniqueness", "d4"])
    p.add_argument("--connecting-scale", type=int, default=1,
                   help="mutation hook for the snake connecting arrow")

    p = sub.add_parser("sweep", parents=[common])
    p.add_argument("--range", type=_parse_range, default=(-3, 3))

    p = sub.add_parser("eval", parents=[common])
    p.add_argument("--rep", required=True)
    p.add_argument("--object", default=None)

    return parser


_DISPATCH = {
    "check-equal": _cmd_check_equal,
    "kernel": lambda a: _cmd_kernel(a, "kernel"),
    "cokernel": lambda a: _cmd_kernel(a, "cokernel"),
    "homology": _cmd_homology,
    "is-exact": _cmd_is_exact,
    "is-mono": lambda a: _cmd_predicate(a, "is-mono"),
    "is-epi": lambda a: _cmd_predicate(a, "is-epi"),
    "is-iso": lambda a: _cmd_predicate(a, "is-iso"),
    "hom-group": _cmd_hom_group,
    "connecting": _cmd_connecting,
    "prove": _cmd_prove,
    "sweep": _cmd_sweep,
    "eval": _cmd_eval,
}


def run_command(argv: Sequence[str]) -> int:
    argv = list(argv)
    # glue "--range -3..3" together so argparse does not read the value as a flag
    merged: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == "--range" and i + 1 < len(argv):
            merged.append(f"--range={argv[i + 1]}")
            i += 2
        else:
            merged.append(argv[i])
            i += 1
    parser = build_parser()
    try:
        args = parser.parse_args(merged)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.json and args.seed is None:
        print("error: --json requires --seed for reproducible reports", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        result = _DISPATCH[args.command](args)
    except (ParseError, QuiverError, RelationError, EndpointError, WitnessError,
            RepresentationError, CompositeNotZeroError, SideConditionError,
            NotMonoError, NotEpiError, CyclicQuiverError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result.extra["_elapsed"] = time.perf_counter() - start
    return _emit(result, args)


def main() -> None:
    try:
        sys.exit(run_command(sys.argv[1:]))
    except BrokenPipeError:
        sys.exit(0)


if __name__ == "__main__":
    main()
