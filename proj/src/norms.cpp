#include "abtor/norms.hpp"

#include <algorithm>

#include "abtor/error.hpp"

namespace abtor {

LatticePolytope::LatticePolytope(std::size_t dimension, std::set<Exponent> points)
    : dimension_(dimension), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != dimension_) fail(Errc::ArityMismatch, "lattice point of the wrong dimension");
}

long LatticePolytope::width(const std::vector<long>& s) const {
  if (s.size() != dimension_) fail(Errc::ArityMismatch, "direction has the wrong length");
  if (points_.empty()) return 0;
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& p : points_) {
    long v = 0;
    for (std::size_t i = 0; i < dimension_; ++i) v += s[i] * p[i];
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  }
  return hi - lo;
}

std::vector<Exponent> LatticePolytope::vertices() const {
  if (points_.empty()) return {};
  if (dimension_ == 0) return {*points_.begin()};
  if (dimension_ == 1) {
    if (points_.size() == 1) return {*points_.begin()};
    return {*points_.begin(), *points_.rbegin()};
  }
  if (dimension_ > 2) fail(Errc::Unsupported, "hull vertices are only computed in dimension <= 2");
  // Andrew's monotone chain on points sorted by (x, y).
  std::vector<Exponent> pts(points_.begin(), points_.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Exponent& o, const Exponent& a, const Exponent& b) {
    return static_cast<long>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<long>(a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Exponent> hull;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t start = hull.size();
    for (const auto& p : pts) {
      while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return hull;
}

LatticePolytope newton_polytope(const MultiLaurent& f) {
  std::set<Exponent> pts;
  for (const auto& [e, c] : f.terms()) pts.insert(e);
  return LatticePolytope(f.var_count(), std::move(pts));
}

long alexander_norm(const MultiLaurent& f, const std::vector<long>& s) {
  return newton_polytope(f).width(s);
}

long span(const MultiLaurent& f, std::size_t variable) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "the span of the zero polynomial is undefined");
  if (variable >= f.var_count()) fail(Errc::ArityMismatch, "variable index out of range");
  std::vector<long> s(f.var_count(), 0);
  s[variable] = 1;
  return alexander_norm(f, s);
}

}  // namespace abtor
