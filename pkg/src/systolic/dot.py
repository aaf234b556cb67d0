"""Graphviz DOT renderings: modified Hasse diagrams and simplex chains."""

from __future__ import annotations

from typing import Iterable, List, Sequence

from .core import Complex, Simplex, boundary


def node_id(s: Simplex) -> str:
    return "-".join(str(x) for x in s)


def _node(s: Simplex, extra: str = "") -> str:
    label = "{" + ",".join(str(x) for x in s) + "}"
    return f'  "{node_id(s)}" [label="{label}"{extra}];'


def hasse_dot(K: Complex, pairs: Iterable = (), critical: Iterable = (),
              name: str = "hasse") -> str:
    """Hasse diagram with edges drawn face -> coface in gray; matched edges
    are reversed (coface -> face) and drawn bold."""
    matched = {(tuple(s), tuple(t)) for s, t in pairs}
    crit = {tuple(c) for c in critical}
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=box, fontsize=10];']
    for s in K:
        lines.append(_node(s, ", peripheries=2" if s in crit else ""))
    for t in K:
        for s in boundary(t):
            if (s, t) in matched:
                lines.append(f'  "{node_id(t)}" -> "{node_id(s)}" [style=bold, color=black];')
            else:
                lines.append(f'  "{node_id(s)}" -> "{node_id(t)}" [color=gray];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def chain_dot(chains: Sequence[Sequence[Simplex]], name: str = "rays") -> str:
    """Each sequence drawn as a chain of simplex nodes."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  node [shape=box, fontsize=10];']
    seen: List[Simplex] = []
    for chain in chains:
        for s in chain:
            s = tuple(s)
            if s not in seen:
                seen.append(s)
                lines.append(_node(s))
    for chain in chains:
        for a, b in zip(chain, chain[1:]):
            lines.append(f'  "{node_id(tuple(a))}" -> "{node_id(tuple(b))}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
