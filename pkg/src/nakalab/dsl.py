"""Line-oriented text formats for algebras and modules.

Algebra files::

    field 2            # optional, default 2
    vertex 1 2 3 4
    arrow b1 4 3       # name source target
    rel b1 b2          # zero relation, arrows left to right

Module files::

    use lambda2.quiver # path relative to the module file
    dim 4 1
    map b1 [[1]]       # dims(source) x dims(target), row-major
"""

from __future__ import annotations

import ast
import re
from pathlib import Path as FsPath

import numpy as np

from .algebra import Arrow, BoundQuiverAlgebra, Quiver
from .errors import InvalidAlgebra, InvalidModule, ParseError
from .gf import is_prime

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


def _tokens(line):
    """Split a line into (column, token) pairs, dropping a trailing comment."""
    body = line.split("#", 1)[0]
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]


def _int(tok, lineno, what, source):
    col, text = tok
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected {what}, got {text!r}", lineno, col, source) from None


def parse_algebra(text, source=None, p=None):
    """Parse the algebra DSL into a validated :class:`BoundQuiverAlgebra`.

    ``p`` overrides any ``field`` line.
    """
    field_p = 2
    field_line = None
    vertices = []
    vertex_pos = {}
    arrows = []
    arrow_pos = {}
    rels = []
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks:
            continue
        (kcol, kw), args = toks[0], toks[1:]
        if kw == "field":
            if len(args) != 1:
                raise ParseError("'field' takes one integer", lineno, kcol, source)
            field_p = _int(args[0], lineno, "a prime", source)
            field_line = (lineno, args[0][0])
            if not is_prime(field_p):
                raise ParseError(f"field characteristic {field_p} is not prime", lineno, args[0][0], source)
        elif kw == "vertex":
            if not args:
                raise ParseError("'vertex' needs at least one id", lineno, kcol, source)
            for tok in args:
                v = _int(tok, lineno, "a vertex id", source)
                if v <= 0:
                    raise ParseError("vertex ids must be positive integers", lineno, tok[0], source)
                if v in vertex_pos:
                    raise ParseError(f"vertex {v} declared twice", lineno, tok[0], source)
                vertex_pos[v] = (lineno, tok[0])
                vertices.append(v)
        elif kw == "arrow":
            if len(args) != 3:
                raise ParseError("'arrow' takes: name source target", lineno, kcol, source)
            (ncol, name), stok, ttok = args
            if not _IDENT.match(name):
                raise ParseError(f"bad arrow name {name!r}", lineno, ncol, source)
            if name in arrow_pos:
                raise ParseError(f"arrow {name!r} declared twice", lineno, ncol, source)
            s = _int(stok, lineno, "a source vertex", source)
            t = _int(ttok, lineno, "a target vertex", source)
            for v, tok in ((s, stok), (t, ttok)):
                if v not in vertex_pos:
                    raise ParseError(f"unknown vertex {v}", lineno, tok[0], source)
            arrow_pos[name] = (lineno, ncol)
            arrows.append(Arrow(name, s, t))
        elif kw == "rel":
            if len(args) < 2:
                raise ParseError("a relation needs length >= 2", lineno, kcol, source)
            by_name = {a.name: a for a in arrows}
            names = []
            for col, name in args:
                if name not in by_name:
                    raise ParseError(f"unknown arrow {name!r}", lineno, col, source)
                if names and by_name[names[-1]].target != by_name[name].source:
                    raise ParseError(
                        f"relation is not composable at {name!r}", lineno, col, source
                    )
                names.append(name)
            rels.append(tuple(names))
        else:
            raise ParseError(f"unknown keyword {kw!r}", lineno, kcol, source)
    if not vertices:
        raise ParseError("no vertices declared", 1, 1, source)
    if p is not None:
        field_p = p
    try:
        return BoundQuiverAlgebra(Quiver(tuple(vertices), tuple(arrows)), tuple(rels), field_p)
    except InvalidAlgebra as exc:
        line, col = field_line if "prime" in str(exc) and field_line else (None, None)
        raise ParseError(str(exc), line, col, source) from exc


def load_algebra(path, p=None):
    path = FsPath(path)
    return parse_algebra(path.read_text(encoding="utf-8"), source=str(path), p=p)


def _parse_matrix(text, lineno, col, source):
    norm = re.sub(r"(?<=[\d\]])\s+(?=[-\d\[])", ",", text.strip())
    try:
        value = ast.literal_eval(norm)
    except (ValueError, SyntaxError):
        raise ParseError(f"cannot read matrix {text!r}", lineno, col, source) from None
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ParseError("matrix must be a list of rows", lineno, col, source)
    widths = {len(r) for r in value}
    if len(widths) > 1:
        raise ParseError("matrix rows have different lengths", lineno, col, source)
    if not all(isinstance(x, int) for r in value for x in r):
        raise ParseError("matrix entries must be integers", lineno, col, source)
    return value


def parse_module(text, algebra=None, source=None, base_dir=None, p=None):
    """Parse a module file; returns a validated ``Representation``.

    The ``use`` line is resolved relative to ``base_dir`` unless ``algebra`` is given.
    """
    from .module import Representation

    dims = {}
    maps = {}
    positions = {}
    use = None
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        kcol, kw = toks[0]
        if kw == "use":
            if len(toks) != 2:
                raise ParseError("'use' takes one path", lineno, kcol, source)
            use = (toks[1][1], lineno, toks[1][0])
        elif kw == "dim":
            if len(toks) != 3:
                raise ParseError("'dim' takes: vertex dimension", lineno, kcol, source)
            v = _int(toks[1], lineno, "a vertex id", source)
            d = _int(toks[2], lineno, "a dimension", source)
            if d < 0:
                raise ParseError("dimension must be nonnegative", lineno, toks[2][0], source)
            dims[v] = d
            positions[("dim", v)] = (lineno, toks[1][0])
        elif kw == "map":
            if len(toks) < 3:
                raise ParseError("'map' takes: arrow matrix", lineno, kcol, source)
            name = toks[1][1]
            mcol = toks[2][0]
            maps[name] = _parse_matrix(body[mcol - 1 :], lineno, mcol, source)
            positions[("map", name)] = (lineno, toks[1][0])
        else:
            raise ParseError(f"unknown keyword {kw!r}", lineno, kcol, source)
    if algebra is None:
        if use is None:
            raise ParseError("module file has no 'use' line and no algebra was given", 1, 1, source)
        ref, lineno, col = use
        path = FsPath(base_dir or ".") / ref
        if not path.exists():
            raise ParseError(f"algebra file {ref!r} not found", lineno, col, source)
        algebra = load_algebra(path, p=p)
    q = algebra.quiver
    for v in dims:
        if v not in q.vertex_index:
            line, col = positions[("dim", v)]
            raise ParseError(f"unknown vertex {v}", line, col, source)
    full_dims = {v: dims.get(v, 0) for v in q.vertices}
    mats = {}
    for name, rows in maps.items():
        line, col = positions[("map", name)]
        if name not in q.arrow_index:
            raise ParseError(f"unknown arrow {name!r}", line, col, source)
        a = q.arrow(name)
        shape = (full_dims[a.source], full_dims[a.target])
        m = np.array(rows, dtype=np.int64).reshape(len(rows), len(rows[0]) if rows else 0)
        if m.size == 0:
            m = m.reshape(shape) if 0 in shape else m
        if m.shape != shape:
            raise ParseError(
                f"map {name!r} has shape {m.shape[0]}x{m.shape[1]}, expected {shape[0]}x{shape[1]}",
                line, col, source,
            )
        mats[name] = m % algebra.p
    try:
        return Representation(algebra, full_dims, mats)
    except InvalidModule as exc:
        raise ParseError(str(exc), None, None, source) from exc


def load_module(path, algebra=None, p=None):
    path = FsPath(path)
    return parse_module(
        path.read_text(encoding="utf-8"), algebra=algebra, source=str(path), base_dir=path.parent, p=p
    )


def format_module(module, use=None):
    """Inverse of :func:`parse_module` (``use`` line optional)."""
    lines = []
    if use:
        lines.append(f"use {use}")
    for v in module.algebra.vertices:
        if module.dims[v]:
            lines.append(f"dim {v} {module.dims[v]}")
    for a in module.algebra.arrows:
        m = module.mats[a.name]
        if m.size and np.any(m):
            lines.append(f"map {a.name} " + str(m.tolist()).replace(" ", ""))
    return "\n".join(lines) + "\n"
