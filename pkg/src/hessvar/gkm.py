"""GKM graphs of semisimple Hessenberg varieties, their component and
singular subgraphs, and DOT/JSON export.

Vertices are all of W.  For w in W and a positive root g with
l(s_g*w) < l(w) there is an edge w -> s_g*w labelled g whenever g lies in
Phi_M^+ or w^{-1}(g) is a negative simple root.  Edges point from the
longer element to the shorter one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .components import (DecompositionReport, HessenbergSpace, SemisimpleElement,
                         component_data, standard_hessenberg)
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class Edge:
    src: WeylElement
    dst: WeylElement
    label: int  # root index


@dataclass
class GkmGraph:
    W: WeylGroup = field(repr=False)
    vertices: list
    edges: list
    vertex_components: dict = field(default_factory=dict)  # w -> tuple of component ids
    singular: frozenset = frozenset()
    component_names: tuple = ()

    def edge_components(self, e: Edge) -> tuple:
        a = self.vertex_components.get(e.src, ())
        b = set(self.vertex_components.get(e.dst, ()))
        return tuple(c for c in a if c in b)

    def out_degree(self, w: WeylElement) -> int:
        return sum(1 for e in self.edges if e.src == w)

    def labelled_edges(self) -> set:
        """Edges as (source word, label, target word) strings; handy for comparisons."""
        rs = self.W.rs
        return {(str(e.src), rs.pretty(e.label), str(e.dst)) for e in self.edges}

    def to_json(self) -> str:
        rs = self.W.rs
        data = {
            "components": [{"id": k, "v": name} for k, name in enumerate(self.component_names)],
            "vertices": [
                {"word": str(w),
                 "components": list(self.vertex_components.get(w, ())),
                 "singular": w in self.singular}
                for w in self.vertices
            ],
            "edges": [
                {"src": str(e.src), "dst": str(e.dst), "label": rs.pretty(e.label),
                 "components": list(self.edge_components(e))}
                for e in self.edges
            ],
        }
        return json.dumps(data, indent=2)


def _edge_key(e: Edge):
    return (-e.src.index, e.label)


def build_gkm(W: WeylGroup, S: SemisimpleElement, H: Optional[HessenbergSpace] = None,
              experimental: bool = False, report: Optional[DecompositionReport] = None) -> GkmGraph:
    """GKM graph of B(S, H).

    Only the standard Hessenberg space is supported unless ``experimental``
    is set, in which case the simple-root condition is widened to Phi_H^-
    and no component annotation is attached.
    """
    rs = W.rs
    if H is None:
        H = standard_hessenberg(rs)
    if not H.is_standard and not experimental:
        raise ValueError("non-standard Hessenberg spaces need experimental=True")
    allowed = H.phi_H_minus
    phi_m = W.phi_plus(S.delta_M)
    edges = []
    for w in W:
        w_inv = W.inverse(w)
        for g in sorted(W.inversions(w_inv)):
            if g in phi_m or W.act(w_inv, g) in allowed:
                edges.append(Edge(w, W.mul(W.reflection(g), w), g))
    edges.sort(key=_edge_key)
    graph = GkmGraph(W, list(W.elements), edges)
    if H.is_standard:
        if report is None:
            report = component_data(W, S)
        annotate(graph, report)
    return graph


def annotate(graph: GkmGraph, report: DecompositionReport) -> GkmGraph:
    vc = {}
    for k, c in enumerate(report.components):
        for w in c.vertices:
            vc.setdefault(w, []).append(k)
    graph.vertex_components = {w: tuple(ids) for w, ids in vc.items()}
    graph.singular = report.all_singular
    graph.component_names = tuple(str(c.v) for c in report.components)
    return graph


def induced_subgraph(graph: GkmGraph, vertices: Iterable[WeylElement]) -> GkmGraph:
    keep = frozenset(vertices)
    return GkmGraph(
        graph.W,
        [w for w in graph.vertices if w in keep],
        [e for e in graph.edges if e.src in keep and e.dst in keep],
        {w: ids for w, ids in graph.vertex_components.items() if w in keep},
        graph.singular & keep,
        graph.component_names,
    )


def component_subgraph(graph: GkmGraph, component) -> GkmGraph:
    return induced_subgraph(graph, component.vertices)


def singular_subgraph(graph: GkmGraph, report: DecompositionReport) -> GkmGraph:
    """Union over pairs of components of the subgraphs induced on their common vertices."""
    verts = set()
    edges = set()
    for a, b in combinations(report.components, 2):
        common = a.vertices & b.vertices
        if not common:
            continue
        sub = induced_subgraph(graph, common)
        verts.update(sub.vertices)
        edges.update(sub.edges)
    return GkmGraph(
        graph.W,
        [w for w in graph.vertices if w in verts],
        sorted(edges, key=_edge_key),
        {w: ids for w, ids in graph.vertex_components.items() if w in verts},
        graph.singular & frozenset(verts),
        graph.component_names,
    )


DEFAULT_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)
SINGULAR_COLOR = "#d62728"


def blend(c1: str, c2: str) -> str:
    a = [int(c1[k:k + 2], 16) for k in (1, 3, 5)]
    b = [int(c2[k:k + 2], 16) for k in (1, 3, 5)]
    return "#" + "".join(f"{(x + y) // 2:02x}" for x, y in zip(a, b))


def _vertex_color(ids: Sequence[int], palette: Sequence[str]) -> Optional[str]:
    if not ids:
        return None
    ids = sorted(ids)
    if len(ids) == 1:
        return palette[ids[0] % len(palette)]
    return blend(palette[ids[0] % len(palette)], palette[ids[1] % len(palette)])


def to_dot(graph: GkmGraph, palette: Sequence[str] = DEFAULT_PALETTE,
           highlight: str = "components") -> str:
    """DOT text.  ``highlight`` is ``components``, ``singular`` or ``none``."""
    if highlight not in ("components", "singular", "none"):
        raise ValueError(f"unknown highlight mode {highlight!r}")
    if not graph.vertices:
        return "digraph G { }\n"
    rs = graph.W.rs
    lines = ["digraph G {", "  node [shape=box];"]
    for w in graph.vertices:
        attrs = [f'label="{w}"']
        color = None
        if highlight == "components":
            color = _vertex_color(graph.vertex_components.get(w, ()), palette)
        elif highlight == "singular" and w in graph.singular:
            color = SINGULAR_COLOR
        if color:
            attrs += ["style=filled", f'fillcolor="{color}"']
        lines.append(f"  v{w.index} [{', '.join(attrs)}];")
    for e in graph.edges:
        attrs = [f'label="{rs.pretty(e.label)}"']
        if highlight == "components":
            ids = graph.edge_components(e)
            if ids:
                attrs.append(f'color="{palette[ids[0] % len(palette)]}"')
        elif highlight == "singular" and e.src in graph.singular and e.dst in graph.singular:
            attrs.append(f'color="{SINGULAR_COLOR}"')
        lines.append(f"  v{e.src.index} -> v{e.dst.index} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
