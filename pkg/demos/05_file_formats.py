"""
Reading edge lists, Pajek and GML
=================================

The three readers share one output: a Graph with dense ids and text labels.
"""

import io

from netvuln import ParseError, read_edge_list, read_gml, read_pajek

# edge list: tokens become labels; self-loops and repeats are dropped and counted
g = read_edge_list(io.StringIO("# friends\nann bob\nbob cat\nbob ann\ncat cat\n"))
print(g.n, g.m, "dropped:", g.dropped, g.labels)

# Pajek: arcs count as undirected edges, weights are ignored
g = read_pajek(io.StringIO('*Vertices 3\n1 "Paris"\n2 "Lyon"\n3 "Nice"\n*Arcs\n1 2 4.0\n2 3 1.5\n'))
print([(g.label(u), g.label(v)) for u, v in g.edges()])

# GML: unknown keys such as graphics or value are skipped
text = 'graph [ node [ id 7 label "a" graphics [ x 1 ] ] node [ id 9 label "b" ] edge [ source 7 target 9 value 2 ] ]'
print(read_gml(io.StringIO(text)).edges())

# malformed input raises ParseError with a line number where there is one
try:
    read_pajek(io.StringIO("*Vertices 2\n*Edges\n1 3\n"))
except ParseError as exc:
    print("ParseError:", exc)
