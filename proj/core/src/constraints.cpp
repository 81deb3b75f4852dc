#include "ffd/constraints.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ffd {

namespace {

// Canonical signature of the unordered strata partition: cells relabeled in
// first-seen order along the canonical point order.  Two exponents share the
// signature iff they induce the same partition of D.
std::vector<std::int32_t> partition_signature(const StrataTable& table) {
  std::vector<std::int32_t> relabel(static_cast<std::size_t>(table.order), -1);
  std::vector<std::int32_t> sig(table.cell_of_point.size());
  std::int32_t next = 0;
  for (std::size_t i = 0; i < table.cell_of_point.size(); ++i) {
    std::int32_t cell = table.cell_of_point[i];
    if (relabel[static_cast<std::size_t>(cell)] < 0) {
      relabel[static_cast<std::size_t>(cell)] = next++;
    }
    sig[i] = relabel[static_cast<std::size_t>(cell)];
  }
  return sig;
}

std::vector<Exponent> dedup_by_partition(const DesignSpec& spec,
                                         std::vector<Exponent> exponents) {
  std::map<std::vector<std::int32_t>, bool> seen;
  std::vector<Exponent> kept;
  for (auto& alpha : exponents) {
    auto sig = partition_signature(build_strata(alpha, spec));
    if (!seen.emplace(std::move(sig), true).second) continue;
    kept.push_back(std::move(alpha));
  }
  return kept;
}

bool support_within(const Exponent& alpha, std::initializer_list<int> factors) {
  for (int j = 0; j < static_cast<int>(alpha.coords.size()); ++j) {
    if (alpha.coords[j] == 0) continue;
    if (std::find(factors.begin(), factors.end(), j) == factors.end()) {
      return false;
    }
  }
  return true;
}

// Subsets of {0..m-1} of the given size, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

void append_margin_rows(ConstraintSystem& system, const std::vector<int>& I) {
  const DesignSpec& spec = system.spec;
  std::int64_t cells = 1;
  for (int j : I) cells *= spec.level(j);
  std::vector<int> cell(I.size(), 0);
  for (std::int64_t c = 0; c < cells; ++c) {
    std::vector<std::int64_t> row(
        static_cast<std::size_t>(spec.point_count()) + 1, 0);
    std::vector<int> coords(spec.factor_count(), 0);
    for (std::int64_t i = 0; i < spec.point_count(); ++i) {
      bool match = true;
      for (std::size_t k = 0; k < I.size(); ++k) {
        if (coords[static_cast<std::size_t>(I[k])] != cell[k]) {
          match = false;
          break;
        }
      }
      if (match) row[static_cast<std::size_t>(i)] = 1;
      for (int j = 0; j < spec.factor_count(); ++j) {
        if (++coords[j] < spec.level(j)) break;
        coords[j] = 0;
      }
    }
    row.back() = -1;
    system.matrix.append_row(row);
    RowDescriptor desc;
    desc.kind = RowKind::kMargin;
    desc.margin_factors = I;
    desc.margin_cell = cell;
    system.rows.push_back(std::move(desc));
    // advance the margin cell, first listed factor fastest
    for (std::size_t k = 0; k < I.size(); ++k) {
      if (++cell[k] < spec.level(I[k])) break;
      cell[k] = 0;
    }
  }
}

}  // namespace

std::vector<Exponent> oa_constraints(const DesignSpec& spec, int strength,
                                     bool dedup) {
  if (strength < 1 || strength > spec.factor_count()) {
    throw std::invalid_argument("strength must be between 1 and m");
  }
  std::vector<Exponent> out;
  std::vector<int> coords(spec.factor_count(), 0);
  for (std::int64_t i = 0; i < spec.point_count(); ++i) {
    Exponent alpha{coords};
    int w = alpha.weight();
    if (w >= 1 && w <= strength) out.push_back(std::move(alpha));
    for (int j = 0; j < spec.factor_count(); ++j) {
      if (++coords[j] < spec.level(j)) break;
      coords[j] = 0;
    }
  }
  if (dedup) out = dedup_by_partition(spec, std::move(out));
  return out;
}

DesignSpec sudoku_design(int p) {
  return DesignSpec(std::vector<int>(6, p));
}

std::vector<Exponent> sudoku_constraints(int p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("sudoku base must be prime");
  }
  DesignSpec spec = sudoku_design(p);
  std::vector<Exponent> out;
  std::vector<int> coords(6, 0);
  for (std::int64_t i = 0; i < spec.point_count(); ++i) {
    Exponent alpha{coords};
    if (!alpha.is_zero() &&
        (support_within(alpha, {0, 1, 2, 3}) ||   // rows x columns
         support_within(alpha, {0, 1, 4, 5}) ||   // rows x symbols
         support_within(alpha, {2, 3, 4, 5}) ||   // columns x symbols
         support_within(alpha, {0, 2, 4, 5}))) {  // boxes x symbols
      out.push_back(std::move(alpha));
    }
    for (int j = 0; j < 6; ++j) {
      if (++coords[j] < p) break;
      coords[j] = 0;
    }
  }
  return out;
}

std::vector<Exponent> class_exponents(const DesignSpec& spec,
                                      const ConstraintClass& cls, bool dedup) {
  if (const auto* oa = std::get_if<OaClass>(&cls)) {
    return oa_constraints(spec, oa->strength, dedup);
  }
  if (const auto* sudoku = std::get_if<SudokuClass>(&cls)) {
    if (!(spec == sudoku_design(sudoku->base))) {
      throw std::invalid_argument(
          "sudoku class needs the six-factor p-level design");
    }
    auto exponents = sudoku_constraints(sudoku->base);
    if (dedup) exponents = dedup_by_partition(spec, std::move(exponents));
    return exponents;
  }
  const auto& custom = std::get<CustomClass>(cls);
  std::vector<Exponent> out = custom.exponents;
  for (const auto& alpha : out) {
    check_exponent(spec, alpha);
    if (alpha.is_zero()) {
      throw std::invalid_argument("custom constraint set contains zero");
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Exponent& a, const Exponent& b) {
              return spec.index_of(a.coords) < spec.index_of(b.coords);
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (dedup) out = dedup_by_partition(spec, std::move(out));
  return out;
}

std::string to_string(SystemEncoding encoding) {
  switch (encoding) {
    case SystemEncoding::kStrataLambda: return "strata-lambda";
    case SystemEncoding::kCyclotomic: return "cyclotomic";
    case SystemEncoding::kMargins: return "margins";
    case SystemEncoding::kAuto: return "auto";
  }
  return "?";
}

ConstraintSystem build_strata_system(const DesignSpec& spec,
                                     std::span<const Exponent> constraints,
                                     SystemEncoding encoding) {
  if (constraints.empty()) {
    throw std::invalid_argument("constraint set is empty");
  }
  if (encoding == SystemEncoding::kMargins) {
    throw std::invalid_argument("margin systems come from build_margin_system");
  }

  std::vector<std::int64_t> orders;
  orders.reserve(constraints.size());
  for (const auto& alpha : constraints) {
    orders.push_back(term_order(alpha, spec));
  }
  bool uniform_prime =
      is_prime(orders.front()) &&
      std::all_of(orders.begin(), orders.end(),
                  [&](std::int64_t s) { return s == orders.front(); });
  if (encoding == SystemEncoding::kAuto) {
    encoding = uniform_prime ? SystemEncoding::kStrataLambda
                             : SystemEncoding::kCyclotomic;
  }
  if (encoding == SystemEncoding::kStrataLambda && !uniform_prime) {
    // The lambda column is shared, so every exponent must balance to the
    // same #F/s; mixed orders would force the empty solution.
    throw std::invalid_argument(
        "strata-lambda encoding needs one common prime term order");
  }

  ConstraintSystem system{spec, encoding,
                          encoding == SystemEncoding::kStrataLambda
                              ? AuxColumn::kLambda
                              : AuxColumn::kNone,
                          IntMatrix(), {}};
  std::int64_t cols = spec.point_count() + (system.has_aux() ? 1 : 0);

  for (std::size_t idx = 0; idx < constraints.size(); ++idx) {
    const Exponent& alpha = constraints[idx];
    StrataTable table = build_strata(alpha, spec);
    if (encoding == SystemEncoding::kStrataLambda) {
      for (std::int64_t h = 0; h < table.order; ++h) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(cols), 0);
        for (std::int64_t i : table.cells[static_cast<std::size_t>(h)]) {
          row[static_cast<std::size_t>(i)] = 1;
        }
        row.back() = -1;
        system.matrix.append_row(row);
        system.rows.push_back(
            RowDescriptor{RowKind::kStratumCell, alpha, h, {}, {}});
      }
    } else {
      CenteringRows rows = centering_rows(alpha, spec,
                                          CenteringEncoding::kCyclotomic);
      for (std::int64_t k = 0; k < rows.rows.rows(); ++k) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(cols), 0);
        for (std::int64_t i = 0; i < spec.point_count(); ++i) {
          row[static_cast<std::size_t>(i)] =
              rows.rows.at(k, table.cell_of_point[static_cast<std::size_t>(i)]);
        }
        system.matrix.append_row(row);
        system.rows.push_back(
            RowDescriptor{RowKind::kRemainderCoeff, alpha, k, {}, {}});
      }
    }
  }
  return system;
}

ConstraintSystem build_margin_system(const DesignSpec& spec,
                                     const ConstraintClass& cls) {
  ConstraintSystem system{spec, SystemEncoding::kMargins, AuxColumn::kRho,
                          IntMatrix(), {}};
  if (const auto* oa = std::get_if<OaClass>(&cls)) {
    for (int j = 1; j < spec.factor_count(); ++j) {
      if (spec.level(j) != spec.level(0)) {
        throw std::invalid_argument(
            "margin systems need equal factor levels; use a strata encoding "
            "for mixed designs");
      }
    }
    if (oa->strength < 1 || oa->strength > spec.factor_count()) {
      throw std::invalid_argument("strength must be between 1 and m");
    }
    for (const auto& I : subsets_of_size(spec.factor_count(), oa->strength)) {
      append_margin_rows(system, I);
    }
    return system;
  }
  if (const auto* sudoku = std::get_if<SudokuClass>(&cls)) {
    if (!(spec == sudoku_design(sudoku->base))) {
      throw std::invalid_argument(
          "sudoku class needs the six-factor p-level design");
    }
    // The four maximal projection groups of the sudoku conditions.
    for (const std::vector<int>& I :
         {std::vector<int>{0, 1, 2, 3}, std::vector<int>{0, 1, 4, 5},
          std::vector<int>{2, 3, 4, 5}, std::vector<int>{0, 2, 4, 5}}) {
      append_margin_rows(system, I);
    }
    return system;
  }
  throw std::invalid_argument(
      "custom constraint sets have no margin formulation");
}

ConstraintSystem build_system(const DesignSpec& spec,
                              const ConstraintClass& cls,
                              SystemEncoding encoding, bool dedup) {
  if (encoding == SystemEncoding::kMargins) {
    return build_margin_system(spec, cls);
  }
  auto exponents = class_exponents(spec, cls, dedup);
  return build_strata_system(spec, exponents, encoding);
}

IntMatrix ConstraintSystem::move_matrix() const {
  IntMatrix out(0, 0);
  std::vector<std::int64_t> row(static_cast<std::size_t>(point_cols()));
  for (std::int64_t r = 0; r < matrix.rows(); ++r) {
    for (std::int64_t c = 0; c < point_cols(); ++c) row[c] = matrix.at(r, c);
    out.append_row(row);
  }
  if (!has_aux()) {
    // pin the fraction size so fibers stay fixed-size
    std::fill(row.begin(), row.end(), 1);
    out.append_row(row);
  }
  return out;
}

std::int64_t implied_aux(const ConstraintSystem& system,
                         std::span<const std::int64_t> y) {
  if (!system.has_aux()) {
    throw std::invalid_argument("system has no aux column");
  }
  if (static_cast<std::int64_t>(y.size()) != system.point_cols()) {
    throw std::invalid_argument("counting function has wrong length");
  }
  std::int64_t v = 0;
  for (std::int64_t c = 0; c < system.point_cols(); ++c) {
    v += system.matrix.at(0, c) * y[c];
  }
  return v;
}

bool is_compatible(const ConstraintSystem& system,
                   std::span<const std::int64_t> y) {
  if (static_cast<std::int64_t>(y.size()) != system.point_cols()) return false;
  if (!system.has_aux()) {
    return system.matrix.in_kernel(y);
  }
  std::int64_t aux = implied_aux(system, y);
  if (aux < 0) return false;
  for (std::int64_t r = 0; r < system.matrix.rows(); ++r) {
    std::int64_t acc = 0;
    for (std::int64_t c = 0; c < system.point_cols(); ++c) {
      acc += system.matrix.at(r, c) * y[c];
    }
    if (acc != aux) return false;
  }
  return true;
}

}  // namespace ffd
