"""
Newton polygons to CSV and SVG
==============================

Writes the polygons of the genus-2 R and S to the system temp directory.
"""

import os
import tempfile

from heckelab.rankin import newton_polygon, rankin_pipeline

res = rankin_pipeline(2)
out = tempfile.gettempdir()
for name, e in (("R", res.R), ("S", res.S)):
    poly = newton_polygon(e.coefficients())
    print(name, "slopes", [str(s) for s in poly.slopes])
    with open(os.path.join(out, f"newton_{name}.svg"), "w") as fh:
        fh.write(poly.to_svg())
    with open(os.path.join(out, f"newton_{name}.csv"), "w") as fh:
        fh.write(poly.to_csv())
print("written to", out)
