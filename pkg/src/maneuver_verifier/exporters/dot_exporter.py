"""
Graph description (DOT) writer for navigation graphs
"""

from maneuver_verifier.core.navgraph import NavGraph
from maneuver_verifier.exporters.base import BaseExporter


def _node_id(cell) -> str:
    return f'"{cell}"'


class DotExporter(BaseExporter):
    extension = ".dot"

    def render(self, payload: NavGraph) -> str:
        lines = ["digraph navgraph {", "  rankdir=LR;"]
        for p in range(payload.num_steps + 1):
            cells = payload.cells_at(p)
            lines.append(f"  subgraph step_{p} {{")
            lines.append("    rank=same;")
            for cell in cells:
                lines.append(f"    {_node_id(cell)};")
            lines.append("  }")
        for source, target, weight in payload.edges():
            lines.append(
                f'  {_node_id(source)} -> {_node_id(target)} [label="{weight:.6g}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"
