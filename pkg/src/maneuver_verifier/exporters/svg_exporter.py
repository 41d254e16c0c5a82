"""
SVG rendering of the per-step partition with an optional trace overlay
"""

from typing import Dict, Optional

from reportlab.graphics import renderSVG
from reportlab.graphics.shapes import Drawing, Rect, String
from reportlab.lib import colors

from maneuver_verifier.core.partition import FiniteAbstraction
from maneuver_verifier.exporters.base import BaseExporter
from maneuver_verifier.geometry import FrenetRect
from maneuver_verifier.models.data_classes import Path

PALETTE = (
    "#a6cee3",
    "#b2df8a",
    "#fdbf6f",
    "#cab2d6",
    "#ffff99",
    "#fb9a99",
    "#8dd3c7",
    "#bebada",
    "#80b1d3",
    "#fccde5",
)
MARGIN = 20.0
LABEL_HEIGHT = 14.0
PANEL_GAP = 12.0


class SvgExporter(BaseExporter):
    extension = ".svg"

    def __init__(
        self,
        highlight: Optional[Path] = None,
        width: float = 800.0,
        lateral_scale: float = 8.0,
    ):
        self.highlight = highlight
        self.width = width
        self.lateral_scale = lateral_scale

    def render(self, payload: FiniteAbstraction) -> str:
        road = payload.scenario.road
        sx = (self.width - 2 * MARGIN) / (road.s_end - road.s_begin)
        sy = self.lateral_scale
        panel_height = (road.d_max - road.d_min) * sy
        row_height = panel_height + LABEL_HEIGHT + PANEL_GAP
        steps = len(payload.layers)
        height = 2 * MARGIN + steps * row_height
        drawing = Drawing(self.width, height)

        signatures = sorted(
            {str(cell.signature) for layer in payload.layers for cell in layer}
        )
        fill: Dict[str, str] = {
            sig: PALETTE[i % len(PALETTE)] for i, sig in enumerate(signatures)
        }
        highlighted = {cell.key for cell in self.highlight or ()}
        ids = [o.id for o in payload.scenario.obstacles]

        for p, layer in enumerate(payload.layers):
            # step 0 at the top
            base = height - MARGIN - (p + 1) * row_height + PANEL_GAP

            def box(rect: FrenetRect, **style) -> Rect:
                return Rect(
                    MARGIN + (rect.s_lo - road.s_begin) * sx,
                    base + (rect.d_lo - road.d_min) * sy,
                    (rect.s_hi - rect.s_lo) * sx,
                    (rect.d_hi - rect.d_lo) * sy,
                    **style,
                )

            drawing.add(
                String(
                    MARGIN,
                    base + panel_height + 3,
                    f"step {p}  t={p * payload.scenario.step:g}s",
                    fontName="Helvetica",
                    fontSize=9,
                )
            )
            drawing.add(
                box(
                    road.extent,
                    fillColor=colors.HexColor("#eeeeee"),
                    strokeColor=colors.black,
                    strokeWidth=0.5,
                )
            )

            for cell in layer:
                sig = str(cell.signature)
                outline = cell.key in highlighted
                for rect in cell.region.rects:
                    drawing.add(
                        box(
                            rect,
                            fillColor=colors.HexColor(fill[sig]),
                            strokeColor=colors.red if outline else colors.grey,
                            strokeWidth=2.0 if outline else 0.3,
                        )
                    )
                anchor = max(cell.region.rects, key=lambda r: r.area)
                drawing.add(
                    String(
                        MARGIN + ((anchor.s_lo + anchor.s_hi) / 2 - road.s_begin) * sx,
                        base + ((anchor.d_lo + anchor.d_hi) / 2 - road.d_min) * sy - 3,
                        cell.signature.letters or cell.signature.road_type.short,
                        fontName="Helvetica",
                        fontSize=7,
                        textAnchor="middle",
                    )
                )

            for obstacle_id, rect in zip(ids, payload.occupancy[p]):
                clipped = rect.overlap(road.extent)
                if clipped is None:
                    continue
                drawing.add(
                    box(
                        clipped,
                        fillColor=colors.HexColor("#555555"),
                        strokeColor=colors.black,
                        strokeWidth=0.5,
                    )
                )
                drawing.add(
                    String(
                        MARGIN + ((clipped.s_lo + clipped.s_hi) / 2 - road.s_begin) * sx,
                        base + ((clipped.d_lo + clipped.d_hi) / 2 - road.d_min) * sy - 3,
                        obstacle_id,
                        fontName="Helvetica",
                        fontSize=7,
                        textAnchor="middle",
                        fillColor=colors.white,
                    )
                )

        return renderSVG.drawToString(drawing)
