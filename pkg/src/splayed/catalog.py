"""Catalogs of example germs and plane-curve pairs used by tests and scripts."""

from dataclasses import dataclass

from .parse import parse


@dataclass(frozen=True)
class PairCase:
    name: str
    category: str
    names: tuple
    g: str
    h: str

    def polys(self):
        return parse(self.g, self.names), parse(self.h, self.names)


XY = ("x", "y")
XYZ = ("x", "y", "z")
XYZW = ("x", "y", "z", "w")

# linear changes of coordinates used for the transformed variants
M2 = [[1, 2], [3, 5]]
M3 = [[1, 1, 0], [0, 1, 2], [1, 0, 1]]


def _transformed(name, base, matrix):
    g, h = base.polys()
    g, h = g.linear_substitute(matrix), h.linear_substitute(matrix)
    return PairCase(name, "linear-transform", base.names, g.to_string(base.names), h.to_string(base.names))


_BASE = [
    # disjoint variables
    PairCase("lines-xy", "disjoint", XY, "x", "y"),
    PairCase("cusp-x-plane-z", "disjoint", XYZ, "x^3+y^2", "z"),
    PairCase("two-lines-plane", "disjoint", XYZ, "x^2+y^2", "z"),
    PairCase("node-plane", "disjoint", XYZ, "x*y", "z"),
    PairCase("node-node-4d", "disjoint", XYZW, "x*y", "z*w"),
    PairCase("cusp-cusp-4d", "disjoint", XYZW, "x^2-y^3", "z^2-w^3"),
    # transversal smooth pairs
    PairCase("line-diagonal", "transversal", XY, "x", "x+y"),
    PairCase("parabola-line", "transversal", XY, "x+y^2", "y"),
    PairCase("two-parabolas", "transversal", XY, "x-y^2", "y-x^2"),
    PairCase("planes-3d", "transversal", XYZ, "x+y+z", "x-y"),
    PairCase("saddle-plane", "transversal", XYZ, "x+y*z", "y"),
    PairCase("node-skew-plane", "transversal", XYZ, "x*y", "z-x"),
    # tangential pairs
    PairCase("parabola-tangent", "tangential", XY, "y-x^2", "y"),
    PairCase("parabolas-tangent", "tangential", XY, "y-x^2", "y+x^2"),
    PairCase("flex-tangent", "tangential", XY, "y-x^3", "y"),
    PairCase("cusp-tangent", "tangential", XY, "x^2-y^3", "x"),
    PairCase("sphere-tangent-plane", "tangential", XYZ, "x+x^2+y^2+z^2", "x"),
    # meetings at singular points
    PairCase("cone-plane", "singular-meeting", XYZ, "x^2+y^2-z^2", "x"),
    PairCase("cone-plane-z", "singular-meeting", XYZ, "x^2+y^2-z^2", "z"),
    PairCase("cusp-transverse", "singular-meeting", XY, "x^2-y^3", "y"),
    PairCase("cusp-e-curve", "singular-meeting", XY, "x^3+y^2", "x^5+y^7"),
    PairCase("node-line", "singular-meeting", XY, "x*y", "x+y"),
    PairCase("two-lines-line", "singular-meeting", XY, "x^2-y^2", "x"),
    PairCase("node-node", "singular-meeting", XY, "x*y", "x^2-y^2"),
    # unit-multiplied variants
    PairCase("unit-lines", "unit", XY, "(1+x)*x", "y"),
    PairCase("unit-parabola-tangent", "unit", XY, "(1+y)*(y-x^2)", "y"),
    PairCase("unit-cone-plane", "unit", XYZ, "(1+x+y)*(x^2+y^2-z^2)", "x"),
    PairCase("unit-cusp-plane", "unit", XYZ, "(1-z)*(x^3+y^2)", "(1+x)*z"),
    PairCase("unit-cusp-tangent", "unit", XY, "(2+x)*(x^2-y^3)", "(1-y)*x"),
]

_BY_NAME = {c.name: c for c in _BASE}

PAIR_CATALOG = _BASE + [
    _transformed("moved-lines", _BY_NAME["lines-xy"], M2),
    _transformed("moved-cusp-plane", _BY_NAME["cusp-x-plane-z"], M3),
    _transformed("moved-cone-plane", _BY_NAME["cone-plane"], M3),
    _transformed("moved-parabola-tangent", _BY_NAME["parabola-tangent"], M2),
    _transformed("moved-cusp-tangent", _BY_NAME["cusp-tangent"], M2),
    _transformed("moved-node-line", _BY_NAME["node-line"], M2),
]


@dataclass(frozen=True)
class CurvePairCase:
    name: str
    f1: str
    f2: str

    def polys(self):
        return parse(self.f1, XYZ), parse(self.f2, XYZ)


# plane projective curves in coordinates x, y, z
CURVE_CATALOG = [
    CurvePairCase("two-lines", "x", "y"),
    CurvePairCase("lines-general", "x+y-z", "2*x-y+3*z"),
    CurvePairCase("conic-secant", "x*z-y^2", "x-z"),
    CurvePairCase("conic-secant-through-vertex", "y^2-x*z", "y"),
    CurvePairCase("conic-tangent", "x^2+y^2-z^2", "x-z"),
    CurvePairCase("conic-tangent-at-infinity", "y*z-x^2", "z"),
    CurvePairCase("two-conics-transversal", "x^2+y^2-z^2", "x^2+4*y^2-2*z^2"),
    CurvePairCase("two-conics-bitangent", "x^2+y^2-z^2", "x^2+2*y^2-z^2"),
    CurvePairCase("nodal-cubic-line-through-node", "y^2*z-x^2*(x+z)", "x"),
    CurvePairCase("nodal-cubic-line-off-node", "y^2*z-x^2*(x+z)", "x-z"),
    CurvePairCase("cuspidal-cubic-cusp-tangent", "y^2*z-x^3", "y"),
    CurvePairCase("cuspidal-cubic-line-off-cusp", "y^2*z-x^3", "x-2*z"),
    CurvePairCase("smooth-cubic-flex-tangent", "x^3+y^3+z^3", "x+y"),
    CurvePairCase("fermat-cubic-transversal", "x^3+y^3-z^3", "x+2*y+3*z"),
]
