#pragma once

#include <array>

#include "discpack/constants.hpp"
#include "discpack/interval.hpp"

namespace discpack {

enum class RadiusClass : unsigned char { Large, Small };

inline Interval radius_of(RadiusClass c, const CaseParams& p) {
  return c == RadiusClass::Large ? exact(1.0) : p.r;
}

/// A set of triangles: three disc radius classes plus a box of edge lengths.
/// Edge k is opposite vertex k throughout.
struct TriangleBox {
  std::array<RadiusClass, 3> classes;
  std::array<Interval, 3> edges;
};

/// Law-of-cosines angle enclosure, domain-clamped. Propagates
/// domain_empty_error when the box contains no valid triangle and clamping
/// empties the acos domain.
Interval angle(Interval opposite, Interval side1, Interval side2);

/// Heron enclosure with the radicand clamped to [0, inf). A box whose
/// radicand is surely negative admits no triangle; returns [0, 0] there.
Interval area(Interval e1, Interval e2, Interval e3);

/// Angles at the three vertices (angle k at vertex k).
std::array<Interval, 3> angles(const TriangleBox& T);

/// Sharp enclosure of the angle range at vertex k over a box, from the
/// monotonicity structure of the cosine: decreasing in the opposite edge,
/// along each adjacent edge decreasing to an interior minimum then
/// increasing. Corner evaluations plus the critical values bound the range
/// without the dependency loss of the naive expression.
Interval angle_range(const std::array<Interval, 3>& e, int k);

/// Sharp enclosure of the area range over a box: the minimum sits at a
/// corner, the maximum at a corner or on one right-angle critical surface.
Interval area_range(const std::array<Interval, 3>& e);

/// E(T) = delta * area(T) - cov(T), cov as the sector sum
/// (1/2) sum_v r_v^2 * angle_v.
Interval excess(const TriangleBox& T, const CaseParams& p);

/// Edge lengths of the tight triangle: sum of the two incident radii.
std::array<Interval, 3> tight_edges(const std::array<RadiusClass, 3>& classes,
                                    Interval r);

/// Minimum over vertices of 2*area / opposite edge.
Interval min_altitude(const TriangleBox& T);

/// Support disc of the triangle in the frame alpha=(0,0), beta=(c,0),
/// gamma=(u,v) with v > 0 (alpha = vertex 1, beta = vertex 2, gamma =
/// vertex 3, so c = edge 3, b = edge 2, a = edge 1). `wide` marks the honest
/// whole-line enclosure when the quadratic cannot be resolved on a fat box.
struct SupportDisc {
  Interval radius;
  Interval x, y;
  Interval u, v;
  bool wide = false;
};

SupportDisc support_disc(const TriangleBox& T, const CaseParams& p);

Interval support_radius(const TriangleBox& T, const CaseParams& p);

/// Signed distance of the support center to edge k (1..3): positive when the
/// center and the opposite vertex lie on the same side of the edge.
Interval signed_edge_distance(const TriangleBox& T, int edge_index,
                              const CaseParams& p);

/// All three signed distances from an already computed support disc.
std::array<Interval, 3> signed_edge_distances(const SupportDisc& s,
                                              const TriangleBox& T);

}  // namespace discpack
