#pragma once

#include <functional>
#include <vector>

#include "linecong/scene.hpp"

namespace linecong {

struct Polyline {
  std::vector<Point2> points;
  bool closed = false;
};

/// Zero-level curves of f by marching squares on a grid_n x grid_n lattice of
/// cell-centred samples covering the open domain. Nodes are classed as
/// f > 0 or f <= 0, so a zero that only touches the lattice at nodes is still
/// found. Each crossing is refined on its edge until |f| <= iso_tol (or the
/// bracket is exhausted). Nodes where f throws MathError are treated as
/// missing and the surrounding cells are skipped.
std::vector<Polyline> zero_contours(const std::function<double(const Point2&)>& f,
                                    const DomainRect& domain, int grid_n, double iso_tol = 1e-10);

/// Lattice coordinate used by zero_contours along one axis.
double lattice_coordinate(double lo, double hi, int grid_n, int i);

double distance_to_polyline(const Point2& p, const std::vector<Point2>& line);

/// Symmetric Hausdorff distance between two polylines (point-to-segment).
double hausdorff_distance(const std::vector<Point2>& a, const std::vector<Point2>& b);

}  // namespace linecong
