#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace ffd {

// A full factorial design with m factors, factor j taking the integer-coded
// levels {0, ..., n_j - 1}.  Points and interaction exponents share the same
// index set, and both are addressed by the canonical first-coordinate-fastest
// (colexicographic) index
//
//   index(z) = sum_j z_j * prod_{k<j} n_k .
class DesignSpec {
 public:
  // Levels must hold at least one factor, every n_j >= 2, and the total
  // number of points must fit in 2^31.  Throws std::invalid_argument.
  explicit DesignSpec(std::vector<int> levels);

  int factor_count() const { return static_cast<int>(levels_.size()); }
  int level(int factor) const { return levels_[factor]; }
  const std::vector<int>& levels() const { return levels_; }

  // #D = prod n_j.
  std::int64_t point_count() const { return point_count_; }

  // Canonical index of an integer-coded tuple (point or exponent).
  std::int64_t index_of(std::span<const int> coords) const;

  // Inverse of index_of.
  std::vector<int> coords_at(std::int64_t index) const;

  bool operator==(const DesignSpec& other) const {
    return levels_ == other.levels_;
  }

 private:
  std::vector<int> levels_;
  std::int64_t point_count_ = 0;
};

// One treatment combination in integer coding.
struct Point {
  std::vector<int> coords;

  bool operator==(const Point& other) const { return coords == other.coords; }
  auto operator<=>(const Point& other) const { return coords <=> other.coords; }
};

// A multi-exponent alpha indexing the interaction term X^alpha.
struct Exponent {
  std::vector<int> coords;

  // Hamming weight: number of nonzero components.
  int weight() const;
  bool is_zero() const { return weight() == 0; }

  bool operator==(const Exponent& other) const {
    return coords == other.coords;
  }
  auto operator<=>(const Exponent& other) const {
    return coords <=> other.coords;
  }
};

// The root of unity omega_h = exp(2*pi*i * h / order).  All constraint
// building carries roots of unity exactly in this form; floating complex
// values appear only in analysis cross-checks.
struct RootOfUnity {
  std::int64_t h = 0;
  std::int64_t order = 1;

  // Same complex value with gcd(h, order) divided out (h = 0 -> order 1).
  RootOfUnity reduced() const;

  // Exact residue product in the combined order lcm(order, other.order).
  RootOfUnity times(const RootOfUnity& other) const;

  RootOfUnity conjugate() const { return {(order - h) % order, order}; }

  std::complex<double> value() const;

  // Equality as complex numbers (compares reduced forms).
  bool same_value(const RootOfUnity& other) const;
};

void check_point(const DesignSpec& spec, const Point& zeta);
void check_exponent(const DesignSpec& spec, const Exponent& alpha);

// All #D points in canonical order.
std::vector<Point> enumerate_points(const DesignSpec& spec);

// Componentwise difference [a - b], component j computed in Z_{n_j}.
Exponent residue_diff(const Exponent& a, const Exponent& b,
                      const DesignSpec& spec);

// Componentwise sum in the residue rings, [a + b].
Exponent residue_sum(const Exponent& a, const Exponent& b,
                     const DesignSpec& spec);

// [k * alpha] componentwise.
Exponent residue_scale(const Exponent& alpha, std::int64_t k,
                       const DesignSpec& spec);

// Exact evaluation of X^alpha(zeta) as a residue index in Omega_s, where s is
// the order of the term (see strata.hpp).  The result satisfies
// exp(2*pi*i*h/s) = prod_j exp(2*pi*i*alpha_j*zeta_j/n_j) exactly.
RootOfUnity eval_term(const Exponent& alpha, const Point& zeta,
                      const DesignSpec& spec);

}  // namespace ffd
