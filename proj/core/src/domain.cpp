#include "ridgelab/domain.hpp"

#include <cmath>
#include <sstream>

namespace ridgelab {

Domain::Domain(DomainKind kind, int d, std::vector<std::pair<double, double>> bounds)
    : kind_(kind), d_(d), bounds_(std::move(bounds)) {
  if (d_ < 1) throw std::invalid_argument("Domain: dimension must be >= 1");
  for (const auto& [lo, hi] : bounds_)
    if (!(lo < hi)) throw std::invalid_argument("Domain: bounds need lower < upper");
}

Domain Domain::unit_cube(int d) {
  return Domain(DomainKind::Cube, d, std::vector<std::pair<double, double>>(d, {0.0, 1.0}));
}

Domain Domain::unit_ball(int d) {
  return Domain(DomainKind::Ball, d, std::vector<std::pair<double, double>>(d, {-1.0, 1.0}));
}

Domain Domain::box(std::vector<std::pair<double, double>> bounds) {
  int d = static_cast<int>(bounds.size());
  bool unit = true;
  for (const auto& [lo, hi] : bounds) unit = unit && lo == 0.0 && hi == 1.0;
  return Domain(unit ? DomainKind::Cube : DomainKind::IntervalProduct, d, std::move(bounds));
}

bool Domain::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != d_) throw std::invalid_argument("Domain: dimension mismatch");
  if (kind_ == DomainKind::Ball) return dot(x, x) < 1.0;
  for (int i = 0; i < d_; ++i)
    if (!(x[i] > bounds_[i].first && x[i] < bounds_[i].second)) return false;
  return true;
}

bool Domain::in_shrunk(const Point& x, const Point& v) const {
  if (x.size() != v.size()) throw std::invalid_argument("Domain: direction dimension mismatch");
  for (double c : v)
    if (!std::isfinite(c)) throw std::invalid_argument("Domain: direction must be finite");
  return contains(x) && contains(axpy(1.0, v, x));
}

std::function<bool(const Point&)> Domain::shrink_predicate(Point v) const {
  return [dom = *this, v = std::move(v)](const Point& x) { return dom.in_shrunk(x, v); };
}

double Domain::box_volume() const {
  double vol = 1.0;
  for (const auto& [lo, hi] : bounds_) vol *= hi - lo;
  return vol;
}

std::string Domain::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case DomainKind::Cube: os << "unit-cube"; break;
    case DomainKind::Ball: os << "unit-ball"; break;
    case DomainKind::IntervalProduct: os << "interval-product"; break;
  }
  os << " d=" << d_;
  return os.str();
}

}  // namespace ridgelab
