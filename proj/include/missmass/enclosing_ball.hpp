#pragma once

#include <cstddef>
#include <span>

namespace missmass {

/// Minimum enclosing euclidean ball of k points given only their squared
/// pairwise distances (row-major k x k). Works in any ambient dimension: every
/// candidate centre is the circumcentre of a support subset inside its affine
/// hull, and the smallest candidate ball containing all points is the answer.
double min_enclosing_ball_radius(std::span<const double> squared_distances, std::size_t k);

/// True iff some ball of radius radius*(1+rel_tol) contains all k points.
/// Only support sets of at most max_support points are tried; pass the ambient
/// dimension plus one when it is known.
bool fits_in_ball(std::span<const double> squared_distances, std::size_t k, double radius, double rel_tol = 1e-9,
                  std::size_t max_support = static_cast<std::size_t>(-1));

} // namespace missmass
