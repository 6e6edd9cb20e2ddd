"""Parser and printer for the pp-formula language.

Grammar (whitespace insignificant, ``#`` starts a comment to end of line):

    formula  := context "|" body
    context  := var ":" vertex ("," var ":" vertex)*
    body     := ["EX" context "."] eq ("&" eq)*
    eq       := terms "=" "0"  |  terms "=" terms
    terms    := term (("+" | "-") term)*
    term     := [int "*"] pathexpr "*" var  |  [int "*"] var
    pathexpr := arrow ("*" arrow)*

Coefficients are integer literals mapped into the scalar ring; arrows in a
path expression are listed leftmost-acts-last, matching written composition.
The printer emits a canonical spelling that re-parses to an equal formula.
"""

from .errors import EngineError, ParseError
from .formulas import PpFormula
from .quivers import AlgebraElement, Path, TypedMatrix


class Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col

    def __repr__(self):
        return "%s(%r)" % (self.kind, self.text)


_PUNCT = {"|": "PIPE", ":": "COLON", ",": "COMMA", ".": "DOT", "*": "STAR",
          "+": "PLUS", "-": "MINUS", "=": "EQUALS", "&": "AMP",
          "(": "LPAREN", ")": "RPAREN", "->": "ARROW", "{": "LBRACE",
          "}": "RBRACE", "[": "LBRACKET", "]": "RBRACKET", "/": "SLASH"}


def tokenize(text, line_offset=1):
    tokens = []
    line = line_offset
    col = 1
    i = 0
    while i < len(text):
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
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if text[i:i + 2] == "->":
            tokens.append(Token("ARROW", "->", line, col))
            i += 2
            col += 2
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("INT", text[start:i], line, col))
            col += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("IDENT", text[start:i], line, col))
            col += i - start
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError("unexpected character %r" % ch, line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


class TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError("expected %s, found %r" % (kind, tok.text or "end"),
                             tok.line, tok.col)
        return self.next()

    def at(self, kind):
        return self.peek().kind == kind


def _parse_context(stream, quiver, taken):
    out = []
    while True:
        name_tok = stream.expect("IDENT")
        if name_tok.text == "EX":
            raise ParseError("EX is a reserved word", name_tok.line,
                             name_tok.col)
        stream.expect("COLON")
        sort_tok = stream.peek()
        if sort_tok.kind not in ("IDENT", "INT"):
            raise ParseError("expected a vertex name", sort_tok.line,
                             sort_tok.col)
        stream.next()
        if not quiver.has_vertex(sort_tok.text):
            raise ParseError("unknown vertex %r" % sort_tok.text,
                             sort_tok.line, sort_tok.col)
        if name_tok.text in taken:
            raise ParseError("duplicate variable %r" % name_tok.text,
                             name_tok.line, name_tok.col)
        taken.add(name_tok.text)
        out.append((name_tok.text, sort_tok.text))
        if stream.at("COMMA"):
            stream.next()
            continue
        return out


def _parse_term(stream, quiver, variables, sign):
    """One term: optional integer coefficient, optional path, a variable.
    Returns (variable name, AlgebraElement-free data: coeff, path names)."""
    tok = stream.peek()
    coeff = sign
    if tok.kind == "MINUS":
        stream.next()
        coeff = -coeff
        tok = stream.peek()
    if tok.kind == "INT":
        stream.next()
        coeff *= int(tok.text)
        stream.expect("STAR")
    names = []
    while True:
        ident = stream.expect("IDENT")
        names.append(ident)
        if stream.at("STAR"):
            stream.next()
            continue
        break
    var_tok = names[-1]
    if var_tok.text not in variables:
        raise ParseError("unknown variable %r" % var_tok.text,
                         var_tok.line, var_tok.col)
    arrow_names = names[:-1]
    for t in arrow_names:
        try:
            quiver.arrow(t.text)
        except EngineError:
            raise ParseError("unknown arrow %r" % t.text, t.line, t.col)
    return coeff, [t.text for t in arrow_names], var_tok


def _term_element(quiver, ring, coeff, arrow_names, var_sort, var_tok):
    if not arrow_names:
        return AlgebraElement(quiver, ring, var_sort, var_sort,
                              {Path.identity(var_sort): ring.from_int(coeff)})
    try:
        path = Path.from_arrow_names(quiver, arrow_names)
    except EngineError as err:
        raise ParseError(str(err), var_tok.line, var_tok.col)
    if path.src != var_sort:
        raise ParseError("path %s expects sort %s, variable %r has sort %s"
                         % ("*".join(arrow_names), path.src, var_tok.text,
                            var_sort), var_tok.line, var_tok.col)
    return AlgebraElement(quiver, ring, var_sort, path.tgt,
                          {path: ring.from_int(coeff)})


def _parse_terms(stream, quiver, ring, variables):
    """A signed sum of terms; returns list of (var, element) pieces."""
    pieces = []
    sign = 1
    while True:
        coeff, arrows, var_tok = _parse_term(stream, quiver, variables, sign)
        var_sort = variables[var_tok.text]
        elt = _term_element(quiver, ring, coeff, arrows, var_sort, var_tok)
        pieces.append((var_tok, elt))
        if stream.at("PLUS"):
            stream.next()
            sign = 1
            continue
        if stream.at("MINUS"):
            stream.next()
            sign = -1
            continue
        return pieces


def _parse_equation(stream, quiver, ring, variables):
    lhs = _parse_terms(stream, quiver, ring, variables)
    eq_tok = stream.expect("EQUALS")
    if stream.at("INT") and stream.peek().text == "0":
        nxt = stream.tokens[stream.pos + 1]
        if nxt.kind not in ("STAR",):
            stream.next()
            rhs = []
        else:
            rhs = [(t, e.neg()) for t, e in
                   _parse_terms(stream, quiver, ring, variables)]
    else:
        rhs = [(t, e.neg()) for t, e in
               _parse_terms(stream, quiver, ring, variables)]
    pieces = lhs + rhs
    sorts = {e.tgt for _, e in pieces if not e.is_zero()}
    if len(sorts) > 1:
        raise ParseError("sort mismatch in equation: %s"
                         % ", ".join(sorted(sorts)), eq_tok.line, eq_tok.col)
    eq_sort = sorts.pop() if sorts else pieces[0][1].tgt
    return eq_sort, pieces


def parse_formula(text, quiver, ring, line_offset=1):
    """Parse the DSL into a normal-form PpFormula."""
    stream = TokenStream(tokenize(text, line_offset))
    taken = set()
    context = _parse_context(stream, quiver, taken)
    stream.expect("PIPE")
    bound = []
    if stream.at("IDENT") and stream.peek().text == "EX":
        stream.next()
        bound = _parse_context(stream, quiver, taken)
        stream.expect("DOT")
    variables = {n: s for n, s in context + bound}
    equations = [_parse_equation(stream, quiver, ring, variables)]
    while stream.at("AMP"):
        stream.next()
        equations.append(_parse_equation(stream, quiver, ring, variables))
    tok = stream.peek()
    if tok.kind != "EOF":
        raise ParseError("unexpected %r after formula" % tok.text,
                         tok.line, tok.col)
    ctx_names = [n for n, _ in context]
    bound_names = [n for n, _ in bound]
    eq_sorts = tuple(s for s, _ in equations)
    a_rows = []
    b_rows = []
    for eq_sort, pieces in equations:
        a_row = [AlgebraElement.zero(quiver, ring, s, eq_sort)
                 for _, s in context]
        b_row = [AlgebraElement.zero(quiver, ring, s, eq_sort)
                 for _, s in bound]
        for var_tok, elt in pieces:
            if elt.is_zero():
                continue
            name = var_tok.text
            if name in ctx_names:
                idx = ctx_names.index(name)
                a_row[idx] = a_row[idx].add(elt)
            else:
                idx = bound_names.index(name)
                b_row[idx] = b_row[idx].add(elt)
        a_rows.append(a_row)
        b_rows.append(b_row)
    a = TypedMatrix(quiver, ring, eq_sorts, tuple(s for _, s in context), a_rows)
    b = TypedMatrix(quiver, ring, eq_sorts, tuple(s for _, s in bound), b_rows)
    return PpFormula(quiver, ring, tuple(context), tuple(bound), a, b)


# ---------------------------------------------------------------------------
# Printing


def _format_coefficient(ring, coeff):
    if ring.name == "Q":
        if coeff.denominator != 1:
            raise EngineError("cannot print non-integer coefficient %s" % coeff)
        return str(coeff.numerator)
    return str(coeff)


def _render_terms(formula, row):
    quiver, ring = formula.quiver, formula.ring
    bits = []
    columns = (list(enumerate(formula.context))
               + [(len(formula.context) + i, v)
                  for i, v in enumerate(formula.bound)])
    for idx, (name, _) in columns:
        if idx < len(formula.context):
            elt = formula.matrix_a.entries[row][idx]
        else:
            elt = formula.matrix_b.entries[row][idx - len(formula.context)]
        for path, coeff in elt.sorted_terms():
            text = _format_coefficient(ring, coeff)
            parts = []
            if text != "1":
                parts.append(text)
            if len(path) > 0:
                parts.extend(path.arrows)
            parts.append(name)
            bits.append(" * ".join(parts))
    return bits


def render_formula(formula):
    """Canonical DSL text; re-parses to an equal formula."""
    ctx = ", ".join("%s:%s" % (n, s) for n, s in formula.context)
    head = ctx + " |"
    if formula.bound:
        head += " EX " + ", ".join("%s:%s" % (n, s) for n, s in formula.bound)
        head += " ."
    eqs = []
    for row in range(formula.matrix_a.rows):
        bits = _render_terms(formula, row)
        eqs.append(" + ".join(bits) + " = 0")
    if not eqs:
        eqs = ["0 * %s = 0" % formula.context[0][0]]
    return head + " " + " & ".join(eqs)
