#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coquasi/algebra.hpp"

namespace coquasi {

/// Element expression of the identity language:
///   elemexpr := VAR SUBSCRIPT | "1" | "S(" elemexpr ")" | "Sl(" elemexpr ")"
///             | "(" elemexpr elemexpr ")"
/// Products carry explicit parentheses because the multiplication is not
/// associative.
struct ElemExpr {
  enum class Kind { Var, Unit, Apply, Product };
  Kind kind = Kind::Unit;
  std::string var;
  int subscript = 0;                       // Var
  std::string op;                          // Apply: "S" | "Sl"
  std::shared_ptr<ElemExpr> child;         // Apply
  std::shared_ptr<ElemExpr> left, right;   // Product
  int line = 0, column = 0;                // ignored by equality

  friend bool operator==(const ElemExpr& a, const ElemExpr& b);
};

using ElemPtr = std::shared_ptr<ElemExpr>;

/// One functional application, e.g. phi(h1,S(h3),h5).
struct ScalarFactor {
  std::string name;
  std::vector<ElemPtr> args;
  int line = 0, column = 0;

  friend bool operator==(const ScalarFactor& a, const ScalarFactor& b);
};

/// One side of an identity: commuting scalar factors and at most one
/// element expression. depth maps each variable to its maximal Sweedler
/// subscript on this side.
struct IdentitySide {
  std::vector<ScalarFactor> factors;
  ElemPtr element;  // null for scalar-valued sides
  std::map<std::string, int> depth;

  friend bool operator==(const IdentitySide& a, const IdentitySide& b);
};

struct SweedlerIdentity {
  IdentitySide lhs, rhs;
  std::vector<std::string> variables;  // first-appearance order
  bool element_valued = false;

  friend bool operator==(const SweedlerIdentity& a, const SweedlerIdentity& b);
};

/// Parses and validates an identity. Enforces the Sweedler subscript
/// discipline per side (subscripts 1..m each exactly once), equal free
/// variable sets and matching result kinds; fixed arities for the built-in
/// functional names (phi/phiinv: 3, alpha/beta/eps/T: 1) are checked here.
/// Throws SyntaxError and its refinements SubscriptGap, DuplicateSubscript,
/// MixedResultKind, AmbiguousProduct.
SweedlerIdentity parse_identity(std::string_view text);

/// Canonical printing; parse_identity(print_identity(id)) == id.
std::string print_identity(const SweedlerIdentity& id);

/// Names usable in identities, resolved against an instance: functionals
/// by name and the unary element operators S and Sl.
struct Binding {
  std::map<std::string, SparseTensor> functionals;
  std::map<std::string, LinMap> operators;
};

/// phi, phiinv, eps, plus alpha/beta/S (and Sl when S is invertible) for
/// Hopf instances and T bound to the left integral when one exists.
Binding default_binding(const AlgebraInstance& H);

/// Exhaustive evaluation: every tuple of basis elements assigned to the
/// free variables, each side expanded through iterated coproducts and
/// compared exactly; the first failing tuple becomes the witness.
Report evaluate_identity(const SweedlerIdentity& id, const AlgebraInstance& H, const Binding& b,
                         const std::string& name = "identity");

/// The displayed axiom identities as parsed artifacts:
/// e1, e2a, e2b, e3, e4, e5a, e5b, e6a, e6b.
const std::vector<std::pair<std::string, SweedlerIdentity>>& builtin_corpus();

}  // namespace coquasi
