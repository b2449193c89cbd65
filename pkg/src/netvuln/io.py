"""Graph readers (edge list, Pajek, GML) and trace/edge-list writers.

Readers take an open text stream and raise :class:`ParseError` on malformed
input, with the 1-based line number where one is known.
"""
import csv
import logging
import re

from .errors import ParseError
from .graph import from_edges

log = logging.getLogger(__name__)

TRACE_HEADER = ["strategy", "model_or_dataset", "seed", "iteration", "removed_step",
                "removed_cum", "f", "lcc_size", "lcc_prime"]


def _report(g, source):
    if g.dropped:
        log.info("%s: dropped %d self-loop/duplicate edge(s)", source, g.dropped)
    return g


def _is_number(tok):
    try:
        float(tok)
    except ValueError:
        return False
    return True


def read_edge_list(stream):
    """Whitespace-separated ``u v`` pairs; ``#`` starts a comment line.

    Tokens become node labels, numbered in order of first appearance. A
    numeric third column (edge weight) is ignored.
    """
    ids = {}
    edges = []
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) == 3 and _is_number(toks[2]):
            toks = toks[:2]
        if len(toks) != 2:
            raise ParseError(f"expected two tokens, got {len(toks)}", lineno)
        u, v = (ids.setdefault(t, len(ids)) for t in toks)
        edges.append((u, v))
    labels = {i: t for t, i in ids.items()}
    return _report(from_edges(edges, n_hint=len(ids), labels=labels), "edge list")


_PAJEK_VERTEX = re.compile(r'\s*(\d+)\s*(?:"([^"]*)"|(\S+))?')


def read_pajek(stream):
    """Pajek ``.net`` subset: ``*Vertices n``, optional vertex lines, then
    ``*Edges`` and/or ``*Arcs`` sections of ``i j [weight]`` lines.

    Arcs are treated as undirected edges; weights and coordinates are ignored.
    """
    n = None
    labels = {}
    edges = []
    section = None
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            head = line.split()[0].lower()
            if head == "*network":
                continue
            if head == "*vertices":
                parts = line.split()
                if len(parts) < 2 or not parts[1].isdecimal():
                    raise ParseError("malformed *Vertices header", lineno)
                n = int(parts[1])
                section = "vertices"
            elif head in ("*edges", "*arcs"):
                if n is None:
                    raise ParseError("edge section before *Vertices header", lineno)
                section = "edges"
            else:
                raise ParseError(f"unsupported Pajek section {head!r}", lineno)
            continue
        if n is None:
            raise ParseError("missing *Vertices header", lineno)
        if section == "vertices":
            m = _PAJEK_VERTEX.match(line)
            if not m:
                raise ParseError("malformed vertex line", lineno)
            i = int(m.group(1))
            if not 1 <= i <= n:
                raise ParseError(f"vertex {i} outside 1..{n}", lineno)
            label = m.group(2) if m.group(2) is not None else m.group(3)
            if label is not None:
                labels[i - 1] = label
        else:
            parts = line.split()
            if len(parts) < 2 or not (parts[0].isdecimal() and parts[1].isdecimal()):
                raise ParseError("malformed edge line", lineno)
            a, b = int(parts[0]), int(parts[1])
            for x in (a, b):
                if not 1 <= x <= n:
                    raise ParseError(f"endpoint {x} outside 1..{n}", lineno)
            edges.append((a - 1, b - 1))
    if n is None:
        raise ParseError("missing *Vertices header")
    return _report(from_edges(edges, n_hint=n, labels=labels), "pajek")


_GML_TOKEN = re.compile(r'#[^\n]*|"[^"]*"|\[|\]|[^\s\[\]"#]+|"')


def _gml_tokens(text):
    lineno, pos = 1, 0
    for m in _GML_TOKEN.finditer(text):
        lineno += text.count("\n", pos, m.start())
        pos = m.start()
        tok = m.group(0)
        if not tok.startswith("#"):
            yield tok, lineno


def _gml_parse(tokens):
    """Nested ``[(key, value), ...]`` lists; values are str or nested lists."""
    root = []
    stack = [root]
    key = None
    lineno = 0
    for tok, lineno in tokens:
        if tok == "]":
            if key is not None:
                raise ParseError(f"key {key!r} has no value", lineno)
            if len(stack) == 1:
                raise ParseError("unbalanced ']'", lineno)
            stack.pop()
        elif key is None:
            if tok == "[" or tok.startswith('"'):
                raise ParseError(f"expected a key, got {tok!r}", lineno)
            key = tok
        elif tok == "[":
            child = []
            stack[-1].append((key, child))
            stack.append(child)
            key = None
        else:
            if tok == '"':
                raise ParseError("unterminated string", lineno)
            stack[-1].append((key, tok[1:-1] if tok.startswith('"') else tok))
            key = None
    if key is not None:
        raise ParseError(f"key {key!r} has no value", lineno)
    if len(stack) != 1:
        raise ParseError("unbalanced '[': missing ']'", lineno)
    return root


def _gml_int(value):
    if not isinstance(value, str):
        return None
    try:
        return int(value)
    except ValueError:
        return None


def read_gml(stream):
    """GML subset: ``graph [ node [ id I label "L" ] ... edge [ source I target I ] ... ]``.

    Unknown keys (``value``, ``graphics``, ``directed``, ...) are skipped.
    Nodes get dense ids in declaration order.
    """
    tree = _gml_parse(_gml_tokens(stream.read()))
    graphs = [v for k, v in tree if k == "graph" and isinstance(v, list)]
    if not graphs:
        raise ParseError("no 'graph [ ... ]' block found")
    ids, labels, edges = {}, {}, []
    for key, body in graphs[0]:
        if key == "node" and isinstance(body, list):
            attrs = dict(body)
            gid = _gml_int(attrs.get("id"))
            if gid is None:
                raise ParseError("node without integer id")
            if gid in ids:
                raise ParseError(f"duplicate node id {gid}")
            ids[gid] = len(ids)
            label = attrs.get("label")
            labels[ids[gid]] = label if isinstance(label, str) else str(gid)
    for key, body in graphs[0]:
        if key == "edge" and isinstance(body, list):
            attrs = dict(body)
            s, t = _gml_int(attrs.get("source")), _gml_int(attrs.get("target"))
            if s is None or t is None:
                raise ParseError("edge without integer source/target")
            for x in (s, t):
                if x not in ids:
                    raise ParseError(f"edge references undeclared node id {x}")
            edges.append((ids[s], ids[t]))
    return _report(from_edges(edges, n_hint=len(ids), labels=labels), "gml")


READERS = {"edgelist": read_edge_list, "pajek": read_pajek, "gml": read_gml}


def read_graph(path, fmt):
    with open(path, encoding="utf-8", errors="replace") as fh:
        return READERS[fmt](fh)


def write_edge_list(g, stream):
    stream.write(f"# n={g.n} m={g.m}\n")
    for u, v in g.edges():
        stream.write(f"{u} {v}\n")


def write_trace_csv(traces, stream):
    """Write traces as CSV rows (header always written); returns the data row count."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TRACE_HEADER)
    count = 0
    for tr in traces:
        seed = "-" if tr.seed is None else tr.seed
        for r in tr.rows:
            writer.writerow([tr.strategy.code, tr.source, seed, r.iteration, len(r.removed),
                             r.removed_cum, f"{r.f:.6f}", r.lcc_size, f"{r.lcc_prime:.6f}"])
            count += 1
    return count
