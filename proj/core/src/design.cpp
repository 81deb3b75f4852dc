#include "ffd/design.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ffd {

namespace {

constexpr std::int64_t kMaxPoints = std::int64_t{1} << 31;

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

DesignSpec::DesignSpec(std::vector<int> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) {
    throw std::invalid_argument("design needs at least one factor");
  }
  point_count_ = 1;
  for (int n : levels_) {
    if (n < 2) {
      throw std::invalid_argument("factor level count must be >= 2, got " +
                                  std::to_string(n));
    }
    point_count_ *= n;
    if (point_count_ > kMaxPoints) {
      throw std::invalid_argument("design size exceeds 2^31 points");
    }
  }
}

std::int64_t DesignSpec::index_of(std::span<const int> coords) const {
  if (coords.size() != levels_.size()) {
    throw std::invalid_argument("coordinate tuple has wrong length");
  }
  std::int64_t index = 0;
  std::int64_t stride = 1;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (coords[j] < 0 || coords[j] >= levels_[j]) {
      throw std::invalid_argument("coordinate out of range");
    }
    index += coords[j] * stride;
    stride *= levels_[j];
  }
  return index;
}

std::vector<int> DesignSpec::coords_at(std::int64_t index) const {
  if (index < 0 || index >= point_count_) {
    throw std::invalid_argument("point index out of range");
  }
  std::vector<int> coords(levels_.size());
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    coords[j] = static_cast<int>(index % levels_[j]);
    index /= levels_[j];
  }
  return coords;
}

int Exponent::weight() const {
  int w = 0;
  for (int c : coords) w += (c != 0);
  return w;
}

RootOfUnity RootOfUnity::reduced() const {
  if (h == 0) return {0, 1};
  std::int64_t g = std::gcd(h, order);
  return {h / g, order / g};
}

RootOfUnity RootOfUnity::times(const RootOfUnity& other) const {
  std::int64_t s = lcm64(order, other.order);
  std::int64_t combined = (h * (s / order) + other.h * (s / other.order)) % s;
  return {combined, s};
}

std::complex<double> RootOfUnity::value() const {
  double angle = 2.0 * std::numbers::pi * static_cast<double>(h) /
                 static_cast<double>(order);
  return std::polar(1.0, angle);
}

bool RootOfUnity::same_value(const RootOfUnity& other) const {
  RootOfUnity a = reduced();
  RootOfUnity b = other.reduced();
  return a.h == b.h && a.order == b.order;
}

void check_point(const DesignSpec& spec, const Point& zeta) {
  if (static_cast<int>(zeta.coords.size()) != spec.factor_count()) {
    throw std::invalid_argument("point has wrong number of coordinates");
  }
  for (int j = 0; j < spec.factor_count(); ++j) {
    if (zeta.coords[j] < 0 || zeta.coords[j] >= spec.level(j)) {
      throw std::invalid_argument("point coordinate out of range");
    }
  }
}

void check_exponent(const DesignSpec& spec, const Exponent& alpha) {
  if (static_cast<int>(alpha.coords.size()) != spec.factor_count()) {
    throw std::invalid_argument("exponent has wrong number of coordinates");
  }
  for (int j = 0; j < spec.factor_count(); ++j) {
    if (alpha.coords[j] < 0 || alpha.coords[j] >= spec.level(j)) {
      throw std::invalid_argument("exponent coordinate out of range");
    }
  }
}

std::vector<Point> enumerate_points(const DesignSpec& spec) {
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(spec.point_count()));
  std::vector<int> coords(spec.factor_count(), 0);
  for (std::int64_t i = 0; i < spec.point_count(); ++i) {
    points.push_back(Point{coords});
    for (int j = 0; j < spec.factor_count(); ++j) {
      if (++coords[j] < spec.level(j)) break;
      coords[j] = 0;
    }
  }
  return points;
}

Exponent residue_diff(const Exponent& a, const Exponent& b,
                      const DesignSpec& spec) {
  check_exponent(spec, a);
  check_exponent(spec, b);
  Exponent out;
  out.coords.resize(a.coords.size());
  for (std::size_t j = 0; j < a.coords.size(); ++j) {
    int n = spec.level(static_cast<int>(j));
    out.coords[j] = ((a.coords[j] - b.coords[j]) % n + n) % n;
  }
  return out;
}

Exponent residue_sum(const Exponent& a, const Exponent& b,
                     const DesignSpec& spec) {
  check_exponent(spec, a);
  check_exponent(spec, b);
  Exponent out;
  out.coords.resize(a.coords.size());
  for (std::size_t j = 0; j < a.coords.size(); ++j) {
    int n = spec.level(static_cast<int>(j));
    out.coords[j] = (a.coords[j] + b.coords[j]) % n;
  }
  return out;
}

Exponent residue_scale(const Exponent& alpha, std::int64_t k,
                       const DesignSpec& spec) {
  check_exponent(spec, alpha);
  Exponent out;
  out.coords.resize(alpha.coords.size());
  for (std::size_t j = 0; j < alpha.coords.size(); ++j) {
    int n = spec.level(static_cast<int>(j));
    out.coords[j] = static_cast<int>(((alpha.coords[j] * k) % n + n) % n);
  }
  return out;
}

RootOfUnity eval_term(const Exponent& alpha, const Point& zeta,
                      const DesignSpec& spec) {
  check_exponent(spec, alpha);
  check_point(spec, zeta);
  // s_j = n_j / gcd(alpha_j, n_j); the term lives in Omega_s, s = lcm(s_j).
  std::int64_t s = 1;
  for (int j = 0; j < spec.factor_count(); ++j) {
    if (alpha.coords[j] == 0) continue;
    std::int64_t g = std::gcd<std::int64_t>(alpha.coords[j], spec.level(j));
    s = lcm64(s, spec.level(j) / g);
  }
  std::int64_t h = 0;
  for (int j = 0; j < spec.factor_count(); ++j) {
    if (alpha.coords[j] == 0) continue;
    std::int64_t g = std::gcd<std::int64_t>(alpha.coords[j], spec.level(j));
    std::int64_t sj = spec.level(j) / g;
    std::int64_t aj = alpha.coords[j] / g;  // coprime to sj
    h = (h + (s / sj) * ((aj * zeta.coords[j]) % sj)) % s;
  }
  return {h, s};
}

}  // namespace ffd
