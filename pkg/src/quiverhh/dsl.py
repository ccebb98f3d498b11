"""Line-oriented presentation format and the equivalent JSON schema.

    field Q              # or: field fp:5
    vertex 1 2 3
    arrow a 1 2
    arrow b 1 2
    relation a*b
    relation 2/3 * (a*b) - (b*a)

Paths compose left to right: "a*b" is a followed by b.  Relation
expressions allow +, -, integer or fraction coefficients, '*' products
and parentheses; products of sums are expanded.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import Presentation, Relation
from .errors import ParseError
from .linal import Field
from .quiver import Quiver

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+*-]))")
_NAME = re.compile(r"[A-Za-z_0-9]+\Z")


def _tokenize(text: str, line_no: int):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos and text[pos:].strip():
            col = pos + 1
            raise ParseError(f"unexpected character {text[pos]!r}", line_no, col)
        if m.end() == pos:
            break
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(("num", Fraction(num), m.start(1) + 1))
        elif ident is not None:
            tokens.append(("ident", ident, m.start(2) + 1))
        elif op is not None:
            tokens.append(("op", op, m.start(3) + 1))
        pos = m.end()
    return tokens


class _ExprParser:
    """Recursive descent over the relation token stream.

    A parsed expression is a list of (coefficient, path) terms with the
    path a tuple of arrow labels; products distribute over sums.
    """

    def __init__(self, tokens, line_no):
        self.tokens = tokens
        self.pos = 0
        self.line_no = line_no

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.line_no)
        self.pos += 1
        return tok

    def parse(self):
        terms = self.expr()
        if self.peek() is not None:
            kind, val, col = self.peek()
            raise ParseError(f"unexpected token {val!r}", self.line_no, col)
        return terms

    def expr(self):
        out = self.term()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                return out
            op = self.take()[1]
            rhs = self.term()
            if op == "-":
                rhs = [(-c, p) for c, p in rhs]
            out = _combine(out + rhs)

    def term(self):
        out = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] != "*":
                return out
            self.take()
            rhs = self.factor()
            out = _combine([(c1 * c2, p1 + p2) for c1, p1 in out for c2, p2 in rhs])

    def factor(self):
        kind, val, col = self.take()
        if kind == "num":
            return [(val, ())]
        if kind == "ident":
            return [(Fraction(1), (val,))]
        if kind == "op" and val == "(":
            inner = self.expr()
            tok = self.peek()
            if tok is None or tok[1] != ")":
                raise ParseError("missing closing parenthesis", self.line_no, col)
            self.take()
            return inner
        if kind == "op" and val == "-":
            inner = self.factor()
            return [(-c, p) for c, p in inner]
        raise ParseError(f"unexpected token {val!r}", self.line_no, col)


def _combine(terms):
    acc = {}
    for c, p in terms:
        acc[p] = acc.get(p, Fraction(0)) + c
    return [(c, p) for p, c in acc.items() if c != 0]


def parse_presentation(text: str, field_override: str | None = None,
                       max_length_cap: int = 64) -> Presentation:
    field = None
    vertices: list = []
    arrows: list = []
    relations: list = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            try:
                field = Field.parse(rest)
            except ValueError as exc:
                raise ParseError(str(exc), line_no) from None
        elif head == "vertex":
            for name in rest.split():
                if not _NAME.match(name):
                    raise ParseError(f"bad vertex name {name!r}", line_no)
                if name in vertices:
                    raise ParseError(f"duplicate vertex {name!r}", line_no)
                vertices.append(name)
        elif head == "arrow":
            parts = rest.split()
            if len(parts) != 3:
                raise ParseError("arrow needs: label source target", line_no)
            label, src, dst = parts
            if any(a[0] == label for a in arrows):
                raise ParseError(f"duplicate arrow label {label!r}", line_no)
            if src not in vertices or dst not in vertices:
                raise ParseError(f"arrow {label!r} uses an undeclared vertex", line_no)
            arrows.append((label, src, dst))
        elif head == "relation":
            tokens = _tokenize(rest, line_no)
            if not tokens:
                raise ParseError("empty relation", line_no)
            terms = _ExprParser(tokens, line_no).parse()
            labels = {a[0] for a in arrows}
            for _, path in terms:
                for l in path:
                    if l not in labels:
                        raise ParseError(f"relation uses undeclared arrow {l!r}",
                                         line_no)
            if not terms:
                raise ParseError("relation cancels to zero", line_no)
            relations.append(Relation(tuple(sorted(terms, key=lambda t: t[1]))))
        else:
            raise ParseError(f"unknown directive {head!r}", line_no)
    if field is None:
        raise ParseError("missing field declaration")
    if field_override is not None:
        field = Field.parse(field_override)
    if not vertices:
        raise ParseError("no vertices declared")
    quiver = Quiver.make(vertices, arrows)
    return Presentation(quiver, tuple(relations), field, max_length_cap)


def render_presentation(p: Presentation) -> str:
    lines = [f"field {p.field.describe()}"]
    lines.append("vertex " + " ".join(p.quiver.vertices))
    for a in p.quiver.arrows:
        lines.append(f"arrow {a.label} {a.source} {a.target}")
    for rel in p.relations:
        lines.append("relation " + _render_terms(rel.terms))
    return "\n".join(lines) + "\n"


def _render_terms(terms) -> str:
    parts = []
    for i, (coef, path) in enumerate(terms):
        coef = Fraction(coef)
        mono = "*".join(path)
        neg = coef < 0
        mag = -coef if neg else coef
        body = mono if mag == 1 else f"{mag} * ({mono})"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def presentation_to_json(p: Presentation) -> dict:
    return {
        "field": p.field.describe(),
        "vertices": list(p.quiver.vertices),
        "arrows": [{"label": a.label, "src": a.source, "dst": a.target}
                   for a in p.quiver.arrows],
        "relations": [[{"coef": str(Fraction(c)), "path": list(path)}
                       for c, path in rel.terms]
                      for rel in p.relations],
    }


def presentation_from_json(data, field_override: str | None = None,
                           max_length_cap: int = 64) -> Presentation:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}", exc.lineno, exc.colno) from None
    try:
        field = Field.parse(data["field"] if field_override is None else field_override)
        vertices = list(data["vertices"])
        arrows = [(a["label"], a["src"], a["dst"]) for a in data["arrows"]]
        relations = []
        for rel in data["relations"]:
            terms = tuple(sorted(((Fraction(t["coef"]), tuple(t["path"]))
                                  for t in rel), key=lambda t: t[1]))
            relations.append(Relation(terms))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad presentation JSON: {exc}") from None
    quiver = Quiver.make(vertices, arrows)
    return Presentation(quiver, tuple(relations), field, max_length_cap)


def load_presentation(text: str, field_override: str | None = None,
                      max_length_cap: int = 64) -> Presentation:
    """Accept either the DSL or the JSON schema, sniffing the format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return presentation_from_json(text, field_override, max_length_cap)
    return parse_presentation(text, field_override, max_length_cap)
