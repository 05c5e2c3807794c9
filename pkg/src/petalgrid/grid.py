"""
Petal grid diagrams: construction, validation, planar-diagram extraction,
and rendering.

Coordinates are 1-indexed with x increasing rightward and y upward.  A grid
diagram of size p has 2p nodes, p horizontal and p vertical edges, two nodes
on every grid line, and vertical edges always cross over horizontal ones.

The grid of a petal permutation (a_1, ..., a_p) places node i at
(ceil(i/2), a_i) for i = 1..2p with a_{p+i} = a_i; horizontal edges join
nodes i and p+i, vertical edges join nodes 2i-1 and 2i.  The knot traverses
... -> 2i-1 -> 2i -> p+2i -> p+2i+1 -> 2i+1 -> ..., and the vertical edge
joining nodes p and p+1 is the unique inflection edge: the one whose two
adjacent horizontal edges leave it on opposite sides.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .petal import PetalPermutation

Point = tuple[int, int]


@dataclass(frozen=True)
class GridDiagram:
    size: int
    nodes: tuple[Point, ...]
    h_edges: tuple[tuple[int, int], ...]
    v_edges: tuple[tuple[int, int], ...]
    traversal: tuple[int, ...]


@dataclass(frozen=True)
class Crossing:
    over_arc: int
    under_in_arc: int
    under_out_arc: int
    sign: int
    position: Point  # (x of the vertical edge, y of the horizontal edge)


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...]
    n_arcs: int
    components: int

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[str, ...]
    inflection_edge: tuple[Point, Point] | None


def build_petal_grid(pp: PetalPermutation) -> GridDiagram:
    """The petal grid diagram of a petal permutation.

    The traversal is stored starting at node p, so the first step runs along
    the inflection edge; that anchors downstream arc numbering.
    """
    p = pp.p
    heights = pp.entries + pp.entries
    nodes = tuple(((i + 2) // 2, heights[i]) for i in range(2 * p))
    h_edges = tuple((i, p + i) for i in range(p))
    v_edges = tuple((2 * i, 2 * i + 1) for i in range(p))

    h_partner = {}
    v_partner = {}
    for a, b in h_edges:
        h_partner[a], h_partner[b] = b, a
    for a, b in v_edges:
        v_partner[a], v_partner[b] = b, a

    walk = [p - 1]
    vertical_next = True
    for _ in range(2 * p - 1):
        cur = walk[-1]
        walk.append(v_partner[cur] if vertical_next else h_partner[cur])
        vertical_next = not vertical_next
    return GridDiagram(p, nodes, h_edges, v_edges, tuple(walk))


def _edge_span(g: GridDiagram, edge: tuple[int, int]) -> tuple[Point, Point]:
    return g.nodes[edge[0]], g.nodes[edge[1]]


def validate_petal_grid(g: GridDiagram) -> ValidationReport:
    """Check the petal grid conditions, reporting violations instead of raising.

    Besides the two-nodes-per-line grid conditions, a petal grid of size
    p = 2n+1 must have exactly one inflection edge whose adjacent horizontal
    edges both have length n, while every other vertical edge has adjacent
    horizontal lengths n and n+1.
    """
    bad: list[str] = []
    p = g.size
    if p % 2 == 0 or p < 3:
        bad.append(f"size {p} is not an odd integer >= 3")
    if len(g.nodes) != 2 * p:
        bad.append(f"expected {2 * p} nodes, found {len(g.nodes)}")
    for x, y in g.nodes:
        if not (1 <= x <= p and 1 <= y <= p):
            bad.append(f"node {(x, y)} outside the {p}x{p} grid")
    for k in range(1, p + 1):
        rows = sum(1 for _, y in g.nodes if y == k)
        cols = sum(1 for x, _ in g.nodes if x == k)
        if rows != 2:
            bad.append(f"row y={k} has {rows} nodes, expected 2")
        if cols != 2:
            bad.append(f"column x={k} has {cols} nodes, expected 2")

    touched: dict[int, list[str]] = {}
    for kind, edges in (("h", g.h_edges), ("v", g.v_edges)):
        for a, b in edges:
            (x1, y1), (x2, y2) = g.nodes[a], g.nodes[b]
            if kind == "h" and y1 != y2:
                bad.append(f"horizontal edge {a}-{b} has uneven heights {y1}, {y2}")
            if kind == "v" and x1 != x2:
                bad.append(f"vertical edge {a}-{b} has uneven columns {x1}, {x2}")
            for e in (a, b):
                touched.setdefault(e, []).append(kind)
    for i in range(len(g.nodes)):
        if sorted(touched.get(i, [])) != ["h", "v"]:
            bad.append(f"node {i} is not the endpoint of exactly one edge of each kind")

    if bad:
        return ValidationReport(False, tuple(bad), None)

    n = (p - 1) // 2
    h_at: dict[int, tuple[int, int]] = {}
    for a, b in g.h_edges:
        h_at[a] = h_at[b] = (a, b)
    inflections: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for a, b in g.v_edges:
        x = g.nodes[a][0]
        sides = []
        lengths = []
        for endpoint in (a, b):
            ha, hb = h_at[endpoint]
            other = hb if ha == endpoint else ha
            ox = g.nodes[other][0]
            sides.append(1 if ox > x else -1)
            lengths.append(abs(ox - x))
        if sides[0] != sides[1]:
            inflections.append(((a, b), tuple(lengths)))
            if lengths != [n, n]:
                bad.append(
                    f"inflection edge x={x} has horizontal lengths {lengths}, expected [{n}, {n}]"
                )
        elif sorted(lengths) != [n, n + 1]:
            bad.append(
                f"vertical edge x={x} has horizontal lengths {lengths}, expected {{{n}, {n + 1}}}"
            )
    if len(inflections) != 1:
        bad.append(f"found {len(inflections)} inflection edges, expected exactly 1")
    inflection = None
    if len(inflections) == 1:
        (a, b), _ = inflections[0]
        inflection = (g.nodes[a], g.nodes[b])
    return ValidationReport(not bad, tuple(bad), inflection)


def _oriented_edges(g: GridDiagram) -> list[list[tuple[int, int]]]:
    """Edges as ordered node pairs along each traversal cycle."""
    h_partner = {}
    v_partner = {}
    for a, b in g.h_edges:
        h_partner[a], h_partner[b] = b, a
    for a, b in g.v_edges:
        v_partner[a], v_partner[b] = b, a
    cycles: list[list[tuple[int, int]]] = []
    unvisited = set(range(len(g.nodes)))
    start_order = list(g.traversal) + sorted(unvisited)
    for start in start_order:
        if start not in unvisited:
            continue
        cycle: list[tuple[int, int]] = []
        cur = start
        vertical_next = True
        while True:
            nxt = v_partner[cur] if vertical_next else h_partner[cur]
            cycle.append((cur, nxt))
            unvisited.discard(cur)
            vertical_next = not vertical_next
            cur = nxt
            if cur == start and vertical_next:
                break
            if len(cycle) > 2 * len(g.nodes):
                raise ValueError("malformed grid")
        cycles.append(cycle)
    return cycles


def to_planar_diagram(g: GridDiagram) -> PlanarDiagram:
    """Extract the oriented crossing diagram; vertical strands cross over.

    A crossing occurs where a vertical edge's open span contains a
    horizontal edge's row and vice versa.  A crossing is +1 when rotating
    the over-strand direction a quarter turn counterclockwise gives the
    under-strand direction.
    """
    for a, b in g.v_edges:
        x, (y1, y2) = g.nodes[a][0], sorted((g.nodes[a][1], g.nodes[b][1]))
        for c, d in g.h_edges:
            y, (x1, x2) = g.nodes[c][1], sorted((g.nodes[c][0], g.nodes[d][0]))
            # An edge endpoint inside the other edge's interior is a
            # T-intersection, not a crossing.
            if y in (y1, y2) and x1 < x < x2:
                raise ValueError("malformed grid")
            if x in (x1, x2) and y1 < y < y2:
                raise ValueError("malformed grid")

    cycles = _oriented_edges(g)
    v_index = {frozenset(e): i for i, e in enumerate(g.v_edges)}
    h_index = {frozenset(e): i for i, e in enumerate(g.h_edges)}
    # Passages: walk every cycle, recording for each crossing the walk
    # position of its over (vertical) and under (horizontal) passage.
    over_pos: dict[tuple[int, int], tuple[int, int]] = {}
    under_pos: dict[tuple[int, int], tuple[int, int]] = {}
    directions: dict[tuple[tuple[int, int], int], int] = {}
    cycle_events: list[list[tuple[int, tuple[int, int]]]] = []

    for ci, cycle in enumerate(cycles):
        pos = 0
        events: list[tuple[int, tuple[int, int]]] = []
        for u, v in cycle:
            (x1, y1), (x2, y2) = g.nodes[u], g.nodes[v]
            if x1 == x2:  # vertical, over
                lo, hi = sorted((y1, y2))
                hits = []
                for hj, (c, d) in enumerate(g.h_edges):
                    y = g.nodes[c][1]
                    xl, xr = sorted((g.nodes[c][0], g.nodes[d][0]))
                    if lo < y < hi and xl < x1 < xr:
                        hits.append((y, hj))
                hits.sort(reverse=(y2 < y1))
                vj = v_index[frozenset((u, v))]
                for _, hj in hits:
                    over_pos[(vj, hj)] = (ci, pos)
                    directions[((vj, hj), 0)] = 1 if y2 > y1 else -1
                    pos += 1
            else:  # horizontal, under
                lo, hi = sorted((x1, x2))
                hits = []
                for vj, (c, d) in enumerate(g.v_edges):
                    x = g.nodes[c][0]
                    yl, yh = sorted((g.nodes[c][1], g.nodes[d][1]))
                    if lo < x < hi and yl < y1 < yh:
                        hits.append((x, vj))
                hits.sort(reverse=(x2 < x1))
                hj = h_index[frozenset((u, v))]
                for _, vj in hits:
                    under_pos[(vj, hj)] = (ci, pos)
                    directions[((vj, hj), 1)] = 1 if x2 > x1 else -1
                    events.append((pos, (vj, hj)))
                    pos += 1
        cycle_events.append(events)

    # Arcs: each cycle is cut at its under passages; a cycle without any
    # under passage is a single closed arc.
    arc_base: list[int] = []
    n_arcs = 0
    for events in cycle_events:
        arc_base.append(n_arcs)
        n_arcs += max(1, len(events))

    def arc_of(ci: int, pos: int) -> int:
        events = cycle_events[ci]
        if not events:
            return arc_base[ci]
        # Arc j ends at event j; positions after event j-1 up to event j lie on arc j.
        for j, (epos, _) in enumerate(events):
            if pos <= epos:
                return arc_base[ci] + j
        return arc_base[ci]  # wraps past the last event

    crossings: list[Crossing] = []
    for key in sorted(over_pos):
        vj, hj = key
        ci_u, pos_u = under_pos[key]
        ci_o, pos_o = over_pos[key]
        events = cycle_events[ci_u]
        j = next(j for j, (epos, _) in enumerate(events) if epos == pos_u)
        under_in = arc_base[ci_u] + j
        under_out = arc_base[ci_u] + (j + 1) % len(events)
        dy = directions[(key, 0)]
        dx = directions[(key, 1)]
        position = (g.nodes[g.v_edges[vj][0]][0], g.nodes[g.h_edges[hj][0]][1])
        crossings.append(
            Crossing(arc_of(ci_o, pos_o), under_in, under_out, -dy * dx, position)
        )
    return PlanarDiagram(tuple(crossings), n_arcs, len(cycles))


def pd_to_json(d: PlanarDiagram) -> dict:
    return {
        "components": d.components,
        "arcs": d.n_arcs,
        "writhe": d.writhe,
        "crossings": [
            [c.over_arc, c.under_in_arc, c.under_out_arc, c.sign] for c in d.crossings
        ],
    }


# --- Rendering ----------------------------------------------------------------


def render_ascii(g: GridDiagram) -> str:
    """One character cell per half lattice unit; vertical strands run unbroken."""
    p = g.size
    size = 2 * p - 1
    canvas = [[" "] * size for _ in range(size)]

    def cell(x: int, y: int) -> tuple[int, int]:
        return 2 * (p - y), 2 * (x - 1)

    for a, b in g.h_edges:
        (x1, y), (x2, _) = _edge_span(g, (a, b))
        r, _ = cell(x1, y)
        for c in range(2 * (min(x1, x2) - 1), 2 * (max(x1, x2) - 1) + 1):
            canvas[r][c] = "-"
    for a, b in g.v_edges:
        (x, y1), (_, y2) = _edge_span(g, (a, b))
        _, c = cell(x, y1)
        for r in range(2 * (p - max(y1, y2)), 2 * (p - min(y1, y2)) + 1):
            canvas[r][c] = "|"
    for x, y in g.nodes:
        r, c = cell(x, y)
        canvas[r][c] = "+"
    return "\n".join("".join(row).rstrip() for row in canvas)


def render_svg(g: GridDiagram) -> str:
    """SVG 1.1 with one path per edge; horizontal paths gap under crossings."""
    p = g.size
    scale, margin, gap = 40, 30, 7
    width = 2 * margin + (p - 1) * scale

    def pt(x: int, y: float) -> tuple[float, float]:
        return margin + (x - 1) * scale, margin + (p - y) * scale

    oriented = [e for cyc in _oriented_edges(g) for e in cyc]
    paths = []
    for u, v in oriented:
        (x1, y1), (x2, y2) = g.nodes[u], g.nodes[v]
        if y1 == y2:  # horizontal: split at crossing columns
            cols = []
            for a, b in g.v_edges:
                x = g.nodes[a][0]
                yl, yh = sorted((g.nodes[a][1], g.nodes[b][1]))
                if min(x1, x2) < x < max(x1, x2) and yl < y1 < yh:
                    cols.append(x)
            cols.sort(reverse=(x2 < x1))
            segments = []
            sx, _ = pt(x1, y1)
            ex, ey = pt(x2, y2)
            cur = sx
            step = 1 if ex > sx else -1
            for x in cols:
                cx, _ = pt(x, y1)
                segments.append((cur, cx - step * gap))
                cur = cx + step * gap
            segments.append((cur, ex))
            d = " ".join(f"M {a:g} {ey:g} L {b:g} {ey:g}" for a, b in segments)
        else:
            (ax, ay), (bx, by) = pt(x1, y1), pt(x2, y2)
            d = f"M {ax:g} {ay:g} L {bx:g} {by:g}"
        paths.append(f'<path d="{d}" marker-end="url(#arrow)"/>')

    body = "\n".join(paths)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{width}" viewBox="0 0 {width} {width}">\n'
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
        '<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>\n'
        '<g stroke="black" stroke-width="2" fill="none">\n'
        f"{body}\n"
        "</g>\n</svg>\n"
    )


def write_svg(g: GridDiagram, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(g))
