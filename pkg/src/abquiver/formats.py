"""Text formats for quivers, representations, formulas, pairs and
pairs-category data, with matching canonical writers.

All formats are line based; ``#`` starts a comment and blank lines are
skipped.  A line whose brackets are unbalanced continues on the next
physical line, so matrix literals may wrap.  Writers emit one canonical
spelling that re-parses to an equal object.
"""

from fractions import Fraction

from .dsl import TokenStream, parse_formula, render_formula, tokenize
from .errors import EngineError, ParseError
from .formulas import PpPair
from .linalg import ConcreteMatrix
from .nori import PairsCategoryData
from .quivers import Quiver
from .representations import Fiber, Representation
from .scalars import ring_from_tag
from .simplicial import SimplicialComplex, SimplicialMap, SimplicialPair


def _logical_lines(text):
    """(line_number, content) pairs, comments stripped, brackets balanced."""
    out = []
    pending = ""
    pending_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip() and not pending:
            continue
        if pending:
            pending += " " + body.strip()
        else:
            pending = body.strip()
            pending_line = lineno
        depth = (pending.count("[") - pending.count("]")
                 + pending.count("{") - pending.count("}")
                 + pending.count("(") - pending.count(")"))
        if depth < 0:
            raise ParseError("unbalanced brackets", lineno, 1)
        if depth == 0:
            if pending:
                out.append((pending_line, pending))
            pending = ""
            pending_line = None
    if pending:
        raise ParseError("unterminated bracket", pending_line, 1)
    return out


def _split_head(line, lineno):
    if ":" not in line:
        raise ParseError("expected 'key: value'", lineno, 1)
    head, value = line.split(":", 1)
    return head.strip(), value.strip()


# ---------------------------------------------------------------------------
# Quiver files


def parse_quiver(text):
    vertices = None
    arrows = None
    for lineno, line in _logical_lines(text):
        head, value = _split_head(line, lineno)
        if head == "vertices":
            vertices = _parse_name_list(value, lineno)
        elif head == "arrows":
            arrows = _parse_arrow_list(value, lineno)
        else:
            raise ParseError("unknown key %r in quiver file" % head, lineno, 1)
    if vertices is None:
        raise ParseError("quiver file missing 'vertices'", 1, 1)
    if arrows is None:
        arrows = []
    try:
        return Quiver(vertices, arrows)
    except EngineError as err:
        raise ParseError(str(err), 1, 1)


def _parse_name_list(value, lineno):
    stream = TokenStream(tokenize(value, lineno))
    stream.expect("LBRACKET")
    names = []
    if not stream.at("RBRACKET"):
        while True:
            tok = stream.peek()
            if tok.kind not in ("IDENT", "INT"):
                raise ParseError("expected a name", tok.line, tok.col)
            stream.next()
            names.append(tok.text)
            if stream.at("COMMA"):
                stream.next()
                continue
            break
    stream.expect("RBRACKET")
    return names


def _parse_arrow_list(value, lineno):
    stream = TokenStream(tokenize(value, lineno))
    stream.expect("LBRACKET")
    arrows = []
    if not stream.at("RBRACKET"):
        while True:
            stream.expect("LBRACE")
            fields = {}
            while True:
                key = stream.expect("IDENT").text
                stream.expect("COLON")
                tok = stream.peek()
                if tok.kind not in ("IDENT", "INT"):
                    raise ParseError("expected a name", tok.line, tok.col)
                stream.next()
                fields[key] = tok.text
                if stream.at("COMMA"):
                    stream.next()
                    continue
                break
            stream.expect("RBRACE")
            for needed in ("name", "src", "tgt"):
                if needed not in fields:
                    raise ParseError("arrow missing %r" % needed, lineno, 1)
            arrows.append((fields["name"], fields["src"], fields["tgt"]))
            if stream.at("COMMA"):
                stream.next()
                continue
            break
    stream.expect("RBRACKET")
    return arrows


def quiver_to_text(quiver):
    vertices = "vertices: [%s]" % ", ".join(quiver.vertices)
    arrows = "arrows: [%s]" % ", ".join(
        "{name: %s, src: %s, tgt: %s}" % (a.name, a.src, a.tgt)
        for a in quiver.arrows)
    return vertices + "\n" + arrows + "\n"


# ---------------------------------------------------------------------------
# Scalar and matrix literals


def _scalar_to_text(ring, value):
    if ring.name == "Q":
        return str(value)
    return str(value)


def _parse_scalar_tokens(stream, ring):
    sign = 1
    if stream.at("MINUS"):
        stream.next()
        sign = -1
    tok = stream.expect("INT")
    numerator = int(tok.text)
    if stream.at("SLASH"):
        stream.next()
        den_tok = stream.expect("INT")
        if ring.name != "Q":
            raise ParseError("fractions only make sense over Q",
                             den_tok.line, den_tok.col)
        return Fraction(sign * numerator, int(den_tok.text))
    return ring.from_int(sign * numerator)


def _parse_matrix_literal(value, lineno, ring, expected_cols=None):
    """[[a, b], [c, d]] -> list of rows.  [] is a 0-row matrix."""
    stream = TokenStream(tokenize(value, lineno))
    stream.expect("LBRACKET")
    rows = []
    if not stream.at("RBRACKET"):
        while True:
            stream.expect("LBRACKET")
            row = []
            if not stream.at("RBRACKET"):
                while True:
                    row.append(_parse_scalar_tokens(stream, ring))
                    if stream.at("COMMA"):
                        stream.next()
                        continue
                    break
            stream.expect("RBRACKET")
            rows.append(row)
            if stream.at("COMMA"):
                stream.next()
                continue
            break
    stream.expect("RBRACKET")
    tok = stream.peek()
    if tok.kind != "EOF":
        raise ParseError("unexpected %r after matrix" % tok.text,
                         tok.line, tok.col)
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ParseError("ragged matrix literal", lineno, 1)
    return rows


def _matrix_to_text(matrix):
    return "[%s]" % ", ".join(
        "[%s]" % ", ".join(_scalar_to_text(matrix.ring, x) for x in row)
        for row in matrix.entries)


# ---------------------------------------------------------------------------
# Representation files


def parse_representation(text, quiver):
    ring = None
    fibers = {}
    arrow_entries = {}
    for lineno, line in _logical_lines(text):
        head, value = _split_head(line, lineno)
        parts = head.split()
        if parts[0] == "ring":
            ring = ring_from_tag(value)
        elif parts[0] == "fiber":
            if ring is None:
                raise ParseError("ring must be declared first", lineno, 1)
            if len(parts) != 2:
                raise ParseError("expected 'fiber <vertex>:'", lineno, 1)
            vertex = parts[1]
            if not quiver.has_vertex(vertex):
                raise ParseError("unknown vertex %r" % vertex, lineno, 1)
            fibers[vertex] = _parse_fiber_value(value, lineno, ring)
        elif parts[0] == "arrow":
            if ring is None:
                raise ParseError("ring must be declared first", lineno, 1)
            if len(parts) != 2:
                raise ParseError("expected 'arrow <name>:'", lineno, 1)
            name = parts[1]
            if not value.startswith("matrix"):
                raise ParseError("expected 'matrix [[...]]'", lineno, 1)
            literal = value[len("matrix"):].strip()
            arrow_entries[name] = (lineno, _parse_matrix_literal(
                literal, lineno, ring))
        else:
            raise ParseError("unknown key %r in representation file"
                             % parts[0], lineno, 1)
    if ring is None:
        raise ParseError("representation file missing 'ring'", 1, 1)
    for v in quiver.vertices:
        if v not in fibers:
            raise ParseError("missing fiber for vertex %r" % v, 1, 1)
    matrices = {}
    for arrow in quiver.arrows:
        if arrow.name not in arrow_entries:
            raise ParseError("missing matrix for arrow %r" % arrow.name, 1, 1)
        lineno, rows = arrow_entries[arrow.name]
        want_rows = fibers[arrow.tgt].dim
        want_cols = fibers[arrow.src].dim
        if len(rows) != want_rows or any(len(r) != want_cols for r in rows):
            raise ParseError("arrow %s: matrix must be %dx%d"
                             % (arrow.name, want_rows, want_cols), lineno, 1)
        matrices[arrow.name] = ConcreteMatrix(ring, rows, want_rows,
                                              want_cols)
    try:
        return Representation(quiver, ring, fibers, matrices)
    except EngineError as err:
        raise ParseError(str(err), 1, 1)


def _parse_fiber_value(value, lineno, ring):
    if value.startswith("dim"):
        body = value[len("dim"):].strip()
        try:
            return Fiber(ring, int(body))
        except ValueError:
            raise ParseError("bad dimension %r" % body, lineno, 1)
    if value.startswith("presentation"):
        if ring.is_field:
            raise ParseError("presented fibers require ring Z", lineno, 1)
        literal = value[len("presentation"):].strip()
        rows = _parse_matrix_literal(literal, lineno, ring)
        n = len(rows)
        cols = len(rows[0]) if rows else 0
        return Fiber(ring, n, ConcreteMatrix(ring, rows, n, cols))
    raise ParseError("fiber needs 'dim n' or 'presentation [[...]]'",
                     lineno, 1)


def representation_to_text(rep):
    lines = ["ring: %s" % rep.ring.name]
    for v in rep.quiver.vertices:
        fiber = rep.fiber(v)
        if fiber.relations is None:
            lines.append("fiber %s: dim %d" % (v, fiber.dim))
        else:
            lines.append("fiber %s: presentation %s"
                         % (v, _matrix_to_text(fiber.relations)))
    for arrow in rep.quiver.arrows:
        lines.append("arrow %s: matrix %s"
                     % (arrow.name,
                        _matrix_to_text(rep.arrow_matrix(arrow.name))))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Formula and pair files


def parse_formula_file(text, quiver, ring):
    lines = _logical_lines(text)
    if len(lines) != 1:
        raise ParseError("formula file must hold exactly one formula", 1, 1)
    lineno, line = lines[0]
    return parse_formula(line, quiver, ring, line_offset=lineno)


def parse_pair_file(text, quiver, ring):
    top = None
    bottom = None
    for lineno, line in _logical_lines(text):
        head, value = _split_head(line, lineno)
        if head == "top":
            top = parse_formula(value, quiver, ring, line_offset=lineno)
        elif head == "bottom":
            bottom = parse_formula(value, quiver, ring, line_offset=lineno)
        else:
            raise ParseError("unknown key %r in pair file" % head, lineno, 1)
    if top is None or bottom is None:
        raise ParseError("pair file needs 'top:' and 'bottom:'", 1, 1)
    try:
        return PpPair(top, bottom)
    except EngineError as err:
        raise ParseError(str(err), 1, 1)


def pair_to_text(pair):
    return ("top: %s\nbottom: %s\n"
            % (render_formula(pair.top), render_formula(pair.bottom)))


def parse_pair_list(text, quiver, ring):
    """Named pairs: blocks introduced by 'pair <name>:' with top/bottom."""
    blocks = []
    current = None
    for lineno, line in _logical_lines(text):
        head, value = _split_head(line, lineno)
        parts = head.split()
        if parts[0] == "pair":
            if len(parts) != 2:
                raise ParseError("expected 'pair <name>:'", lineno, 1)
            current = {"name": parts[1]}
            blocks.append((lineno, current))
        elif head in ("top", "bottom"):
            if current is None:
                raise ParseError("'%s' outside a pair block" % head,
                                 lineno, 1)
            current[head] = parse_formula(value, quiver, ring,
                                          line_offset=lineno)
        else:
            raise ParseError("unknown key %r in pairs file" % head, lineno, 1)
    out = []
    for lineno, block in blocks:
        if "top" not in block or "bottom" not in block:
            raise ParseError("pair %r missing top/bottom" % block["name"],
                             lineno, 1)
        try:
            out.append((block["name"], PpPair(block["top"], block["bottom"])))
        except EngineError as err:
            raise ParseError(str(err), lineno, 1)
    names = [n for n, _ in out]
    if len(set(names)) != len(names):
        raise ParseError("duplicate pair names", 1, 1)
    return out


def pair_list_to_text(named_pairs):
    lines = []
    for name, pair in named_pairs:
        lines.append("pair %s:" % name)
        lines.append("top: %s" % render_formula(pair.top))
        lines.append("bottom: %s" % render_formula(pair.bottom))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Pairs-category files


def parse_pairs_category(text):
    complexes = {}
    pairs = []
    maps = []
    triples = []
    pair_by_name = {}
    for lineno, line in _logical_lines(text):
        head, value = _split_head(line, lineno)
        parts = head.split()
        kind = parts[0]
        if kind == "complex":
            if len(parts) != 2:
                raise ParseError("expected 'complex <name>:'", lineno, 1)
            complexes[parts[1]] = _parse_complex_value(value, lineno)
        elif kind == "pair":
            if len(parts) != 2:
                raise ParseError("expected 'pair <name>:'", lineno, 1)
            space, sub = _parse_two_names(value, lineno)
            try:
                pair = SimplicialPair(_lookup(complexes, space, lineno),
                                      _lookup(complexes, sub, lineno))
            except EngineError as err:
                raise ParseError(str(err), lineno, 1)
            pairs.append((parts[1], pair))
            pair_by_name[parts[1]] = pair
        elif kind == "map":
            if len(parts) != 2:
                raise ParseError("expected 'map <name>:'", lineno, 1)
            src, tgt, assignment = _parse_map_value(value, lineno)
            try:
                smap = SimplicialMap(_lookup(pair_by_name, src, lineno),
                                     _lookup(pair_by_name, tgt, lineno),
                                     assignment)
            except EngineError as err:
                raise ParseError(str(err), lineno, 1)
            maps.append((parts[1], smap))
        elif kind == "triple":
            if len(parts) != 2:
                raise ParseError("expected 'triple <name>:'", lineno, 1)
            x, y, z = _parse_three_names(value, lineno)
            triples.append((parts[1], (_lookup(complexes, x, lineno),
                                       _lookup(complexes, y, lineno),
                                       _lookup(complexes, z, lineno))))
        else:
            raise ParseError("unknown key %r in pairs-category file" % kind,
                             lineno, 1)
    try:
        return PairsCategoryData(pairs, maps, triples)
    except EngineError as err:
        raise ParseError(str(err), 1, 1)


def _lookup(table, name, lineno):
    if name not in table:
        raise ParseError("unknown name %r" % name, lineno, 1)
    return table[name]


def _parse_complex_value(value, lineno):
    stream = TokenStream(tokenize(value, lineno))
    stream.expect("LBRACKET")
    faces = []
    if not stream.at("RBRACKET"):
        while True:
            stream.expect("LBRACKET")
            face = []
            if not stream.at("RBRACKET"):
                while True:
                    tok = stream.peek()
                    if tok.kind not in ("IDENT", "INT"):
                        raise ParseError("expected a vertex label",
                                         tok.line, tok.col)
                    stream.next()
                    face.append(tok.text)
                    if stream.at("COMMA"):
                        stream.next()
                        continue
                    break
            stream.expect("RBRACKET")
            faces.append(tuple(face))
            if stream.at("COMMA"):
                stream.next()
                continue
            break
    stream.expect("RBRACKET")
    try:
        return SimplicialComplex(faces)
    except EngineError as err:
        raise ParseError(str(err), lineno, 1)


def _parse_two_names(value, lineno):
    stream = TokenStream(tokenize(value, lineno))
    stream.expect("LPAREN")
    first = stream.expect("IDENT").text
    stream.expect("COMMA")
    second = stream.expect("IDENT").text
    stream.expect("RPAREN")
    return first, second


def _parse_three_names(value, lineno):
    stream = TokenStream(tokenize(value, lineno))
    stream.expect("LPAREN")
    names = [stream.expect("IDENT").text]
    for _ in range(2):
        stream.expect("COMMA")
        names.append(stream.expect("IDENT").text)
    stream.expect("RPAREN")
    return names


def _parse_map_value(value, lineno):
    stream = TokenStream(tokenize(value, lineno))
    src = stream.expect("IDENT").text
    stream.expect("ARROW")
    tgt = stream.expect("IDENT").text
    stream.expect("LBRACE")
    assignment = {}
    if not stream.at("RBRACE"):
        while True:
            key_tok = stream.peek()
            if key_tok.kind not in ("IDENT", "INT"):
                raise ParseError("expected a vertex label", key_tok.line,
                                 key_tok.col)
            stream.next()
            stream.expect("COLON")
            val_tok = stream.peek()
            if val_tok.kind not in ("IDENT", "INT"):
                raise ParseError("expected a vertex label", val_tok.line,
                                 val_tok.col)
            stream.next()
            assignment[key_tok.text] = val_tok.text
            if stream.at("COMMA"):
                stream.next()
                continue
            break
    stream.expect("RBRACE")
    return src, tgt, assignment


def _complex_to_literal(complex_):
    top_faces = []
    covered = set()
    for d in range(complex_.dim(), -1, -1):
        for face in complex_.faces_of_dim(d):
            if frozenset(face) not in covered:
                top_faces.append(face)
                for k in range(1, 2 ** len(face)):
                    sub = frozenset(v for i, v in enumerate(face)
                                    if (k >> i) & 1)
                    covered.add(sub)
    top_faces.sort(key=lambda f: (-len(f), tuple(str(v) for v in f)))
    return "[%s]" % ", ".join("[%s]" % ", ".join(str(v) for v in face)
                              for face in top_faces)


def pairs_category_to_text(data):
    lines = []
    complex_names = {}

    def register(complex_):
        for name, existing in complex_names.items():
            if existing == complex_:
                return name
        name = "C%d" % len(complex_names)
        complex_names[name] = complex_
        lines.append("complex %s: %s" % (name, _complex_to_literal(complex_)))
        return name

    body = []
    for name, pair in data.pairs:
        a = register(pair.space)
        b = register(pair.sub)
        body.append("pair %s: (%s, %s)" % (name, a, b))
    for name, smap in data.maps:
        src = data.pair_name(smap.source)
        tgt = data.pair_name(smap.target)
        assignment = ", ".join(
            "%s: %s" % (v, smap.vertex_map[v])
            for v in sorted(smap.vertex_map, key=str)
            if v in smap.source.space.vertices)
        body.append("map %s: %s -> %s {%s}" % (name, src, tgt, assignment))
    for name, (x, y, z) in data.triples:
        body.append("triple %s: (%s, %s, %s)"
                    % (name, register(x), register(y), register(z)))
    return "\n".join(lines + body) + "\n"
