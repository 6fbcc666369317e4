import logging
from math import sqrt
from typing import Dict, Iterable, List, Optional, Tuple

from affperm import AffinePerm
from bijection import ShiRegionRecord, enumerate_extremal
from config import Config
from cores import partition_from_nset
from errors import InvalidInputError, PreconditionError
from geometry import RegionSignature, centroid, region_signature, vertices
from levelt import MINIMAL
from oracle import bfs_alcoves

logger = logging.getLogger(__name__)

PALETTE = ['#8dd3c7', '#ffffb3', '#bebada', '#fb8072', '#80b1d3', '#fdb462',
           '#b3de69', '#fccde5', '#d9d9d9', '#bc80bd', '#ccebc5', '#ffed6f']

Coords = Tuple[float, float]


class SVG:
    """Minimal SVG 1.1 document builder."""

    def __init__(self):
        self.svg = ""

    def header(self, width: int, height: int) -> None:
        self.svg += f"""<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">
"""

    def group_start(self, attr: Dict[str, str]) -> None:
        g_attr = [f'{key}="{value}"' for key, value in attr.items() if key != 'title']
        self.svg += f'<g {" ".join(g_attr)}>\n'
        if 'title' in attr:
            self.svg += f'<title>{attr["title"]}</title>\n'

    def group_end(self) -> None:
        self.svg += '</g>\n'

    def polygon(self, points: Iterable[Coords], fill: str, extra: str = "") -> None:
        coords = ' '.join(f"{x:.2f},{y:.2f}" for x, y in points)
        self.svg += f'<polygon points="{coords}" fill="{fill}" {extra}/>\n'

    def line(self, start: Coords, end: Coords, stroke: str, extra: str = "") -> None:
        self.svg += (f'<line x1="{start[0]:.2f}" y1="{start[1]:.2f}" x2="{end[0]:.2f}" '
                     f'y2="{end[1]:.2f}" stroke="{stroke}" {extra}/>\n')

    def text(self, x: float, y: float, string: str, extra: str = "") -> None:
        self.svg += f'<text x="{x:.2f}" y="{y:.2f}" {extra}>{string}</text>\n'

    def get_svg(self) -> str:
        return f"{self.svg}</svg>\n"


class ShiArrangementPlot:
    """The rank-two m-Shi arrangement drawn inside the hexagon |<x|alpha>| <= 2m+1.

    Points of V are placed by their pairings a = <x|e1-e2>, b = <x|e2-e3>, so
    every root has the same screen length.
    """

    def __init__(self, n: int, m: int, highlight: Optional[Iterable[AffinePerm]] = None,
                 scale: int = None):
        if n != 3:
            raise PreconditionError(f"plotting is only available for n = 3, got n = {n}")
        if m < 1:
            raise InvalidInputError(f"m must be at least 1, got {m}")
        self.n = n
        self.m = m
        self.scale = scale or Config.SVG_SCALE
        self.radius = 2 * m + 1
        self.size = int(4 * self.scale * self.radius / sqrt(3)) + 2 * self.scale

        self.regions: Dict[RegionSignature, List[AffinePerm]] = {}
        for w in bfs_alcoves(n, 3 * self.radius):
            if self._inside(w):
                self.regions.setdefault(region_signature(w, m), []).append(w)
        self.records: List[ShiRegionRecord] = enumerate_extremal(n, m, MINIMAL)
        self.highlighted = set()
        for w in highlight or ():
            if w.n != n:
                raise InvalidInputError(f"highlighted alcove {w.to_list()} is not of rank {n}")
            self.highlighted.add(region_signature(w, m))
        logger.info(f"Plotting {len(self.regions)} regions for m={m} "
                    f"({len(self.highlighted)} highlighted)")

    def _inside(self, w: AffinePerm) -> bool:
        return all(abs(v.pair(i, j)) <= self.radius
                   for v in vertices(w) for i, j in ((1, 2), (2, 3), (1, 3)))

    def project(self, a: float, b: float) -> Coords:
        centre = self.size / 2
        return centre + self.scale * a, centre - self.scale * (a + 2 * b) / sqrt(3)

    def _project_point(self, point) -> Coords:
        return self.project(float(point.pair(1, 2)), float(point.pair(2, 3)))

    def hyperplane_segment(self, i: int, j: int, level: int) -> Tuple[Coords, Coords]:
        """The part of <x|e_i-e_j> = level inside the viewport hexagon."""
        R = self.radius
        if (i, j) == (1, 2):
            low, high = max(-R, -R - level), min(R, R - level)
            return self.project(level, low), self.project(level, high)
        if (i, j) == (2, 3):
            low, high = max(-R, -R - level), min(R, R - level)
            return self.project(low, level), self.project(high, level)
        low, high = max(-R, level - R), min(R, level + R)
        return self.project(low, level - low), self.project(high, level - high)

    def labels(self) -> List[Tuple[str, Coords]]:
        return [(str(partition_from_nset(record.core)), self._project_point(centroid(record.w)))
                for record in self.records]

    def _outline_edges(self, alcoves: List[AffinePerm]) -> List[Tuple[Coords, Coords]]:
        counts: Dict[Tuple, int] = {}
        for w in alcoves:
            corners = [tuple(v.coords) for v in vertices(w)]
            for a in range(3):
                edge = tuple(sorted((corners[a], corners[(a + 1) % 3])))
                counts[edge] = counts.get(edge, 0) + 1
        edges = []
        for (p, q), count in counts.items():
            if count == 1:
                edges.append((self.project(float(p[0] - p[1]), float(p[1] - p[2])),
                              self.project(float(q[0] - q[1]), float(q[1] - q[2]))))
        return edges

    def render(self) -> str:
        svg = SVG()
        svg.header(self.size, self.size)

        svg.group_start({'id': 'regions'})
        ordered = sorted(self.regions, key=lambda s: s.values)
        for index, sig in enumerate(ordered):
            fill = PALETTE[index % len(PALETTE)]
            opacity = '0.85' if sig.is_bounded() else '0.45'
            svg.group_start({'class': 'region', 'title': ' '.join(str(v) for v in sig.values)})
            for w in self.regions[sig]:
                svg.polygon((self._project_point(v) for v in vertices(w)), fill,
                            f'fill-opacity="{opacity}" stroke="#bbbbbb" stroke-width="0.5"')
            svg.group_end()
        svg.group_end()

        R = self.radius
        svg.group_start({'id': 'dominant-chamber'})
        svg.polygon([self.project(0, 0), self.project(R, 0), self.project(0, R)], 'none',
                    'stroke="#333333" stroke-width="2" stroke-dasharray="6,4"')
        cx, cy = self.project(R / 3, R / 3)
        svg.text(cx, cy, 'C', 'font-size="14" font-style="italic" fill="#333333"')
        svg.group_end()

        svg.group_start({'id': 'shi-hyperplanes'})
        for i, j in ((1, 2), (2, 3), (1, 3)):
            for level in range(-self.m + 1, self.m + 1):
                start, end = self.hyperplane_segment(i, j, level)
                svg.line(start, end, '#000000', 'stroke-width="1.5"')
        svg.group_end()

        if self.highlighted:
            svg.group_start({'id': 'highlight'})
            for sig in sorted(self.highlighted, key=lambda s: s.values):
                for start, end in self._outline_edges(self.regions.get(sig, [])):
                    svg.line(start, end, '#d62728', 'stroke-width="3"')
            svg.group_end()

        svg.group_start({'id': 'labels', 'font-size': str(max(8, self.scale // 9)),
                         'text-anchor': 'middle'})
        for text, (x, y) in self.labels():
            svg.text(x, y, text)
        svg.group_end()
        return svg.get_svg()

    def save(self, path: str) -> None:
        with open(path, 'w') as f:
            f.write(self.render())
        logger.info(f"Wrote SVG plot to {path}")



def plot_arrangement(n: int, m: int, out: Optional[str] = None,
                     highlight: Optional[Iterable[AffinePerm]] = None) -> ShiArrangementPlot:
    plot = ShiArrangementPlot(n, m, highlight)
    if out:
        plot.save(out)
    return plot
