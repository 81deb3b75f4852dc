#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ffd/design.hpp"
#include "ffd/matrix.hpp"
#include "ffd/strata.hpp"

namespace ffd {

// Orthogonal-array conditions: all nonzero exponents of weight <= strength
// must be centered.
struct OaClass {
  int strength = 1;
};

// p^2 x p^2 sudoku conditions on the 6-factor p-level design with factors
// ordered R1, R2, C1, C2, S1, S2.
struct SudokuClass {
  int base = 2;  // p, prime
};

// Explicit set of exponents C subset of L \ {0}.
struct CustomClass {
  std::vector<Exponent> exponents;
};

using ConstraintClass = std::variant<OaClass, SudokuClass, CustomClass>;

// All nonzero alpha with wt(alpha) <= t, in canonical (colex-index) order.
// With dedup, one representative is kept per group of exponents inducing the
// same unordered strata partition (coprime multiples / conjugates).
std::vector<Exponent> oa_constraints(const DesignSpec& spec, int strength,
                                     bool dedup = false);

// The union C1 u C2 u C3 u C4 of the four sudoku projection groups, without
// duplicates, canonical order.  p must be prime.
std::vector<Exponent> sudoku_constraints(int p);

// Design spec implied by a constraint class (six p-level factors for sudoku);
// OA/custom classes need an explicit spec.
DesignSpec sudoku_design(int p);

// Resolves a class to its exponent set over the given spec.
std::vector<Exponent> class_exponents(const DesignSpec& spec,
                                      const ConstraintClass& cls, bool dedup);

enum class SystemEncoding {
  kStrataLambda,  // s rows per exponent, shared trailing lambda column
  kCyclotomic,    // phi(s) homogeneous rows per exponent, no aux column
  kMargins,       // one row per (I, zeta_I), shared trailing rho column
  kAuto,          // strata-lambda when every order is the same prime, else cyclotomic
};

std::string to_string(SystemEncoding encoding);

enum class AuxColumn { kNone, kLambda, kRho };

enum class RowKind { kStratumCell, kRemainderCoeff, kMargin };

// Reconstructs which condition produced a row.
struct RowDescriptor {
  RowKind kind = RowKind::kStratumCell;
  Exponent alpha;                   // strata rows
  std::int64_t index = 0;           // cell h or remainder coefficient k
  std::vector<int> margin_factors;  // margin rows: I (0-based, ascending)
  std::vector<int> margin_cell;     // margin rows: zeta_I values

  bool operator==(const RowDescriptor& other) const = default;
};

// An integer matrix whose nonnegative integer kernel is the set of compatible
// counting functions.  Columns: #D point columns in canonical order, plus an
// optional trailing aux column (lambda or rho).
struct ConstraintSystem {
  DesignSpec spec;
  SystemEncoding encoding = SystemEncoding::kCyclotomic;
  AuxColumn aux = AuxColumn::kNone;
  IntMatrix matrix;
  std::vector<RowDescriptor> rows;

  std::int64_t point_cols() const { return spec.point_count(); }
  bool has_aux() const { return aux != AuxColumn::kNone; }
  std::int64_t cols() const { return matrix.cols(); }

  // The homogeneous move system A X = 0 over the point columns only.  For
  // aux-column systems this is the matrix with the aux column dropped (fibers
  // then fix all strata counts / margins, hence the fraction size).  For
  // cyclotomic systems, whose rows vanish on every compatible function, a
  // total-sum row is appended so that fibers are still size-fixed.
  IntMatrix move_matrix() const;

  // Full matrix including the aux column as an ordinary variable
  // (size-varying fibers).
  const IntMatrix& extended_matrix() const { return matrix; }
};

// Builds the strata system for the constraint set C (canonical order
// expected; use class_exponents).  kAuto picks kStrataLambda when all term
// orders are one common prime, else kCyclotomic.  kStrataLambda with
// non-uniform or composite orders is rejected.
ConstraintSystem build_strata_system(const DesignSpec& spec,
                                     std::span<const Exponent> constraints,
                                     SystemEncoding encoding);

// Builds the margin system: for OA classes one row per (I, zeta_I) with
// #I = strength; for the sudoku class the four 4-margin projection groups.
// Requires equal levels for OA classes.
ConstraintSystem build_margin_system(const DesignSpec& spec,
                                     const ConstraintClass& cls);

// Convenience: build the system for a class with the requested encoding.
ConstraintSystem build_system(const DesignSpec& spec,
                              const ConstraintClass& cls,
                              SystemEncoding encoding, bool dedup = false);

// True iff y (point columns only) is a compatible counting function: for aux
// systems the implied aux value must be a nonnegative integer making the
// extended vector a kernel element; cyclotomic rows must vanish directly.
bool is_compatible(const ConstraintSystem& system,
                   std::span<const std::int64_t> y);

// The aux value implied by y (lambda = #F/s, rho = #F/s^t); throws if the
// system has no aux column or the division is not exact.
std::int64_t implied_aux(const ConstraintSystem& system,
                         std::span<const std::int64_t> y);

}  // namespace ffd
