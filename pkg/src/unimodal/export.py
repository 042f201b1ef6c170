"""Graphviz export of chain decompositions."""

from __future__ import annotations

from .chains import ChainDecomposition
from .subsets import format_mask


def export_dot(dec: ChainDecomposition, name: str | None = None) -> str:
    """One node per subset, one cluster per chain, edges along each chain.

    Output depends only on the decomposition, so equal inputs give
    byte-identical text.
    """
    name = name or f"scd_{dec.n}"
    lines = [
        f"digraph {name} {{",
        "  rankdir=BT;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for i, chain in enumerate(dec.chains):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="chain {i}";')
        for m in chain.masks:
            lines.append(f'    s{m} [label="{format_mask(m)}"];')
        for a, b in zip(chain.masks, chain.masks[1:]):
            lines.append(f"    s{a} -> s{b};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
