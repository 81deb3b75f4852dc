#include "ffd/strata.hpp"

#include <numeric>
#include <stdexcept>

namespace ffd {

namespace {

// Exact polynomial long division; requires the divisor to be monic and the
// division to come out even.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  std::size_t dn = num.size() - 1;
  std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> quot(dn - dd + 1, 0);
  for (std::size_t k = dn - dd + 1; k-- > 0;) {
    std::int64_t c = num[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (std::int64_t v : num) {
    if (v != 0) throw std::logic_error("cyclotomic division not exact");
  }
  return quot;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t term_order(const Exponent& alpha, const DesignSpec& spec) {
  check_exponent(spec, alpha);
  std::int64_t s = 1;
  for (int j = 0; j < spec.factor_count(); ++j) {
    if (alpha.coords[j] == 0) continue;
    std::int64_t g = std::gcd<std::int64_t>(alpha.coords[j], spec.level(j));
    std::int64_t sj = spec.level(j) / g;
    s = s / std::gcd(s, sj) * sj;
  }
  return s;
}

StrataTable build_strata(const Exponent& alpha, const DesignSpec& spec) {
  check_exponent(spec, alpha);
  if (alpha.is_zero()) {
    throw std::invalid_argument(
        "strata of the zero exponent are the whole design");
  }
  StrataTable table;
  table.alpha = alpha;
  table.order = term_order(alpha, spec);
  table.cells.assign(static_cast<std::size_t>(table.order), {});
  table.cell_of_point.resize(static_cast<std::size_t>(spec.point_count()));

  std::vector<int> coords(spec.factor_count(), 0);
  for (std::int64_t i = 0; i < spec.point_count(); ++i) {
    RootOfUnity w = eval_term(alpha, Point{coords}, spec);
    std::int64_t h = (table.order - w.h) % table.order;  // conjugate residue
    table.cells[static_cast<std::size_t>(h)].push_back(i);
    table.cell_of_point[static_cast<std::size_t>(i)] =
        static_cast<std::int32_t>(h);
    for (int j = 0; j < spec.factor_count(); ++j) {
      if (++coords[j] < spec.level(j)) break;
      coords[j] = 0;
    }
  }
  return table;
}

std::vector<std::int64_t> strata_counts(const StrataTable& table,
                                        std::span<const std::int64_t> y) {
  if (y.size() != table.cell_of_point.size()) {
    throw std::invalid_argument("counting function has wrong length");
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(table.order), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    counts[static_cast<std::size_t>(table.cell_of_point[i])] += y[i];
  }
  return counts;
}

CycloPoly cyclotomic(std::int64_t s) {
  if (s < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  // zeta^s - 1
  std::vector<std::int64_t> num(static_cast<std::size_t>(s) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(s)] = 1;
  for (std::int64_t d = 1; d < s; ++d) {
    if (s % d != 0) continue;
    CycloPoly phi_d = cyclotomic(d);
    num = divide_exact(std::move(num), phi_d.coeffs);
  }
  return CycloPoly{s, std::move(num)};
}

IntMatrix cyclotomic_power_residues(std::int64_t s) {
  CycloPoly phi = cyclotomic(s);
  std::int64_t deg = phi.degree();
  IntMatrix table(s, deg);
  std::vector<std::int64_t> current(static_cast<std::size_t>(deg), 0);
  current[0] = 1;
  for (std::int64_t h = 0; h < s; ++h) {
    for (std::int64_t k = 0; k < deg; ++k) {
      table.at(h, k) = current[static_cast<std::size_t>(k)];
    }
    // multiply by zeta and reduce the leading term via the monic Phi_s
    std::int64_t lead = current[static_cast<std::size_t>(deg - 1)];
    for (std::int64_t k = deg - 1; k > 0; --k) {
      current[static_cast<std::size_t>(k)] =
          current[static_cast<std::size_t>(k - 1)] -
          lead * phi.coeffs[static_cast<std::size_t>(k)];
    }
    current[0] = -lead * phi.coeffs[0];
  }
  return table;
}

CenteringRows centering_rows(const Exponent& alpha, const DesignSpec& spec,
                             CenteringEncoding encoding) {
  check_exponent(spec, alpha);
  if (alpha.is_zero()) {
    throw std::invalid_argument("centering the zero exponent is vacuous");
  }
  CenteringRows out;
  out.order = term_order(alpha, spec);
  if (encoding == CenteringEncoding::kLambda) {
    if (!is_prime(out.order)) {
      throw std::invalid_argument(
          "lambda encoding needs a prime term order, got " +
          std::to_string(out.order));
    }
    out.uses_lambda = true;
    out.rows = IntMatrix(out.order, out.order + 1);
    for (std::int64_t h = 0; h < out.order; ++h) {
      out.rows.at(h, h) = 1;
      out.rows.at(h, out.order) = -1;
    }
    return out;
  }
  // Remainder of sum_h n_h zeta^h modulo Phi_s: row k collects the zeta^k
  // coefficient as an integer combination of the n_h.
  IntMatrix residues = cyclotomic_power_residues(out.order);
  out.uses_lambda = false;
  out.rows = IntMatrix(residues.cols(), out.order);
  for (std::int64_t h = 0; h < out.order; ++h) {
    for (std::int64_t k = 0; k < residues.cols(); ++k) {
      out.rows.at(k, h) = residues.at(h, k);
    }
  }
  return out;
}

}  // namespace ffd
