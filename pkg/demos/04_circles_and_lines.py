"""Exact degeneracy counting: coplanar quadruples, collinear triples, and
four-point circles.

Planes and lines are hashed by canonical primitive integer keys, so
coincident flats collide in a dictionary and m cohabiting points contribute
C(m, 4) or C(m, 3) at once.  Circles ride on the lift (x, y, x^2 + y^2):
circles become non-vertical plane sections of a paraboloid.
"""

from fractions import Fraction

from quadcount import (
    PointSet2,
    PointSet3,
    collinear_triples,
    concyclic_quadruples_naive,
    coplanar_fast,
    coplanar_naive,
    four_point_circles,
    moment_curve_points,
)

# Hash-based and brute-force coplanar counts agree, including on inputs with
# many points per plane and per line.
grid27 = PointSet3.from_rows([(x, y, z) for x in range(3) for y in range(3) for z in range(3)])
fast = coplanar_fast(grid27)
print(f"3x3x3 grid: {fast.count} coplanar quadruples "
      f"(naive agrees: {coplanar_naive(grid27).count == fast.count}); "
      f"max points on one plane: {fast.degeneracy['max_points_per_plane']}")

# The moment curve is the degree-3 control: no plane meets it four times.
mom = moment_curve_points(60)
print(f"moment curve, 60 points: {coplanar_fast(mom).count} coplanar quadruples")

shadow = PointSet2.from_rows([(p[0], p[1]) for p in mom.points])
print(f"its planar shadow: {collinear_triples(shadow).count} collinear triples")

# Collinear triples pile up as C(m, 3) on a heavy line.
seven = PointSet2.from_rows([(i, 3 * i - 2) for i in range(7)])
print(f"7 points on one line: {collinear_triples(seven).count} collinear triples (C(7,3) = 35)")

# Circles through four points, counted on the paraboloid lift and
# cross-checked by the direct concyclicity determinant.
circle8 = [(5, 0), (4, 3), (3, 4), (0, 5), (-3, 4), (-4, 3), (-5, 0), (0, -5)]
points = PointSet2.from_rows(circle8 + [(1, 1), (2, 0)])
report = four_point_circles(points)
oracle = concyclic_quadruples_naive(points)
print(f"8 points on x^2+y^2=25 plus 2 strays: {report.circles} four-point circle(s), "
      f"{report.count} concyclic quadruples (determinant oracle: {oracle.count})")

# Exact rational coordinates are first-class citizens.
rational = PointSet2.from_rows(
    [(1, 0), (0, 1), (-1, 0), (0, -1), (Fraction(3, 5), Fraction(4, 5))]
)
r = four_point_circles(rational)
print(f"5 rational cocircular points: {r.circles} circle, {r.count} quadruples")

# Collinear 2D points lift onto vertical planes, which encode lines, not
# circles; they are excluded by construction.
line = PointSet2.from_rows([(i, 2 * i + 1) for i in range(6)])
print(f"6 collinear points: {four_point_circles(line).circles} circles")
