"""Lower convex hulls of (X-degree, p-valuation) points."""

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import MultiPoly, RationalFunction
from ..algebra import variables as V


class EmptyInput(ValueError):
    """No nonzero coefficient to build a polygon from."""


@dataclass
class NewtonPolygon:
    points: list       # (degree, valuation)
    vertices: list
    slopes: list       # Fractions, one per unit of X-degree

    @property
    def height(self):
        return self.points[-1][1] - self.points[0][1]

    def integral_slopes(self):
        return all(s.denominator == 1 for s in self.slopes)

    def slope_multiplicities(self):
        out = {}
        for s in self.slopes:
            out[s] = out.get(s, 0) + 1
        return out

    def to_json(self):
        return {
            "points": [list(pt) for pt in self.points],
            "vertices": [list(v) for v in self.vertices],
            "slopes": [str(s) for s in self.slopes],
            "height": self.height,
        }

    def to_csv(self):
        lines = ["degree,valuation"] + [f"{d},{v}" for d, v in self.points]
        return "\n".join(lines) + "\n"

    def to_svg(self, unit_x=40, unit_y=10, margin=20):
        """Integer-lattice drawing with a flipped vertical axis; the hull is one polyline."""
        xs = [d for d, _ in self.points]
        vs = [v for _, v in self.points]
        x_lo, v_lo, v_hi = min(xs), min(vs), max(vs)
        width = (max(xs) - x_lo) * unit_x + 2 * margin
        height = (v_hi - v_lo) * unit_y + 2 * margin

        def px(d, v):
            return (d - x_lo) * unit_x + margin, height - margin - (v - v_lo) * unit_y

        dots = "".join(
            '<circle cx="%d" cy="%d" r="3"/>' % px(d, v) for d, v in self.points)
        hull = " ".join("%d,%d" % px(d, v) for d, v in self.vertices)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
            f'<g fill="black">{dots}</g>'
            f'<polyline points="{hull}" fill="none" stroke="black"/>'
            "</svg>\n"
        )


def valuation(c, weights=None):
    """Minimum over terms of (p-exponent + weighted generator exponents), minus the p-power denominator."""
    if hasattr(c, "value"):
        c = c.value
    c = RationalFunction.coerce(c)
    if not c:
        raise ValueError("valuation of zero")
    if not c.den.is_monomial() or c.den.variables() not in ([], ["p"]):
        raise ValueError("valuation needs a p-power denominator")
    weights = weights or {}
    best = None
    for k in c.num.keys():
        v = V.exponent(k, "p") + sum(w * V.exponent(k, n) for n, w in weights.items())
        best = v if best is None else min(best, v)
    return best - c.den.degree("p")


def lower_hull(points):
    pts = sorted(points)
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def polygon_from_points(points):
    points = sorted(points)
    if not points:
        raise EmptyInput("no points")
    xs = [d for d, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate degrees")
    hull = lower_hull(points)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.extend([Fraction(y2 - y1, x2 - x1)] * (x2 - x1))
    return NewtonPolygon(points, hull, slopes)


def newton_polygon(coeffs, weights=None):
    """Polygon of ``(i, valuation(coeffs[i]))``; zero or None entries are skipped.

    Default convention: generators weigh 0, so the valuation is the minimal
    power of p.  ``weights`` maps generator names to p-weights.
    """
    points = [(i, valuation(c, weights)) for i, c in enumerate(coeffs) if c is not None and c != 0]
    if not points:
        raise EmptyInput("all coefficients are zero")
    return polygon_from_points(points)
