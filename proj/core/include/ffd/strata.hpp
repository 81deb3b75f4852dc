#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffd/design.hpp"
#include "ffd/matrix.hpp"

namespace ffd {

// Partition of the full design induced by a term X^alpha: point zeta lies in
// cell h iff conj(X^alpha(zeta)) = omega_h in Omega_s.  Every cell has exactly
// #D / s members.
struct StrataTable {
  Exponent alpha;
  std::int64_t order = 1;                       // s
  std::vector<std::vector<std::int64_t>> cells;  // cell h -> ascending indices
  std::vector<std::int32_t> cell_of_point;       // size #D

  std::int64_t cell_size() const {
    return static_cast<std::int64_t>(cell_of_point.size()) / order;
  }
};

// Order s of the term X^alpha on the design: s_j = 1 when alpha_j = 0, else
// n_j / gcd(alpha_j, n_j); s = lcm over j.  The zero exponent has order 1.
std::int64_t term_order(const Exponent& alpha, const DesignSpec& spec);

// Builds the strata partition for a nonzero exponent.  Throws for alpha = 0
// (its only stratum is the whole design).
StrataTable build_strata(const Exponent& alpha, const DesignSpec& spec);

// n_{alpha,h} = sum over cell h of y.  y must have length #D.
std::vector<std::int64_t> strata_counts(const StrataTable& table,
                                        std::span<const std::int64_t> y);

// The cyclotomic polynomial Phi_s with exact integer coefficients,
// coeffs[k] multiplying zeta^k, monic of degree phi(s).
struct CycloPoly {
  std::int64_t s = 1;
  std::vector<std::int64_t> coeffs;

  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs.size()) - 1;
  }
};

// Computed by exact division Phi_s = (zeta^s - 1) / prod_{d|s, d<s} Phi_d.
CycloPoly cyclotomic(std::int64_t s);

// Residues zeta^h mod Phi_s for h = 0..s-1, each a row of phi(s) integer
// coefficients.  Row h gives the representation of omega_s^h over the power
// basis 1, zeta, ..., zeta^{phi(s)-1}.
IntMatrix cyclotomic_power_residues(std::int64_t s);

enum class CenteringEncoding {
  kCyclotomic,  // phi(s) homogeneous rows: remainder of sum n_h zeta^h mod Phi_s
  kLambda,      // s rows n_h - lambda = 0, prime s only; adds a lambda column
};

// Integer rows over the strata-count variables n_{alpha,0..s-1} whose
// vanishing is equivalent to c_alpha = 0.  For kLambda the matrix has one
// extra trailing column for lambda (entry -1 in every row).
struct CenteringRows {
  std::int64_t order = 1;
  bool uses_lambda = false;
  IntMatrix rows;  // cols = s, or s + 1 with lambda
};

CenteringRows centering_rows(const Exponent& alpha, const DesignSpec& spec,
                             CenteringEncoding encoding);

bool is_prime(std::int64_t n);

}  // namespace ffd
