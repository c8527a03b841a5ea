#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coquasi/matrix.hpp"
#include "coquasi/tensor.hpp"

namespace coquasi {

/// A candidate dual quasi-Hopf algebra presented by structure constants:
/// coalgebra (Δ, ε), unit and multiplication, reassociator φ, and the
/// optional Hopf layer (S, α, β). Construction does not validate the
/// axioms; the checkers do.
struct AlgebraInstance {
  FieldSpec field;
  Index dim = 0;
  std::vector<std::string> basis;  // labels, length dim

  LinMap comult;        // Δ: 1 → 2
  SparseTensor counit;  // ε: Functional arity 1
  LinMap mult;          // M: 2 → 1
  SparseTensor unit;    // Element arity 1
  SparseTensor phi;     // reassociator: Functional arity 3

  std::optional<LinMap> antipode;           // S: 1 → 1
  std::optional<SparseTensor> alpha, beta;  // Functional arity 1

  std::vector<SparseTensor> grouplikes;  // declared hints (Element arity 1)

  bool has_hopf_data() const { return antipode.has_value(); }
  std::optional<Index> label_index(std::string_view label) const;

  SparseTensor basis_elem(Index i) const;
  SparseTensor zero_elem() const;

  /// M(a ⊗ b) for arity-1 Elements.
  SparseTensor product(const SparseTensor& a, const SparseTensor& b) const;

  /// Δ^(legs-1)(e_i), an Element of the given arity.
  SparseTensor sweedler_legs(Index i, unsigned legs) const;

  Scalar counit_of(const SparseTensor& x) const;       // ε(x)
  SparseTensor antipode_of(const SparseTensor& x) const;  // S(x); MissingAntipodeData
};

enum class CheckStatus { Pass, Fail, Skipped };

/// First counterexample of a failed check: the basis tuple it fails at and
/// both evaluated side values.
struct Witness {
  Key tuple;
  std::string lhs, rhs;
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;  // present iff Fail
  bool informational = false;      // failure does not affect overall verdict
};

/// Ordered list of named checks. Line format (one per check):
///   <name> PASS
///   <name> FAIL at (i,j,k): lhs=<value> rhs=<value>
///   <name> SKIPPED
class Report {
 public:
  void pass(std::string name, bool informational = false);
  void fail(std::string name, Witness w, bool informational = false);
  void skip(std::string name, bool informational = false);
  void append(const Report& other, const std::string& prefix = "");

  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(std::string_view name) const;

  /// True when no non-informational check failed or was skipped.
  bool ok() const;
  const CheckResult* first_failure() const;  // non-informational

  std::string to_string() const;

 private:
  std::vector<CheckResult> checks_;
};

/// Formats an Element/Functional tensor as `lbl,...,lbl:coeff` terms in key
/// order, space-separated; the zero tensor prints as "0".
std::string format_tensor(const AlgebraInstance& H, const SparseTensor& t);
std::string format_tuple(const Key& t);  // "(i,j,k)"

}  // namespace coquasi
