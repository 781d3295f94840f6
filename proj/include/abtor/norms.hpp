#pragma once

#include <set>
#include <vector>

#include "abtor/laurent.hpp"

namespace abtor {

/// Support of a Laurent polynomial; the convex hull is only built on request.
class LatticePolytope {
public:
  LatticePolytope(std::size_t dimension, std::set<Exponent> points);

  std::size_t dimension() const { return dimension_; }
  const std::set<Exponent>& points() const { return points_; }
  bool empty() const { return points_.empty(); }

  /// max <s,g> - min <s,g> over the points; 0 when empty.
  long width(const std::vector<long>& s) const;

  /// Hull vertices: sorted endpoints for b = 1, counter-clockwise from the
  /// lowest-leftmost point for b = 2. Unsupported for b >= 3.
  std::vector<Exponent> vertices() const;

private:
  std::size_t dimension_;
  std::set<Exponent> points_;
};

LatticePolytope newton_polytope(const MultiLaurent& f);

/// ||s||_A = max <s,g> - min <s,g> over the support of f; 0 for f = 0.
long alexander_norm(const MultiLaurent& f, const std::vector<long>& s);

/// Degree span in one variable; ZeroPolynomial for f = 0.
long span(const MultiLaurent& f, std::size_t variable);

}  // namespace abtor
