#pragma once

#include "coquasi/algebra.hpp"

namespace coquasi {

/// Thrown by builders that validate their output against the axiom
/// checker and refuse to emit a failing instance.
struct ChecksFailed : Error {
  Report report;
  explicit ChecksFailed(Report r);
};

/// Cyclic group data for the cocycle-twist builders. ζ^n = 1 is verified
/// at construction.
struct CyclicGroupSpec {
  Index order;
  FieldSpec field;
  Scalar zeta;
  CyclicGroupSpec(Index n, const FieldSpec& f, const Scalar& z);
};

/// Group algebra K[Z/n]: grouplike basis e, g, g2, ..., trivial
/// reassociator written out on its full ε⊗ε⊗ε support, S(g^a) = g^{-a},
/// α = β = ε, every basis element declared grouplike.
AlgebraInstance group_algebra(Index n, const FieldSpec& f);

/// Normalized 3-cocycle ω(a,b,c) = ζ^{a·⌊(b+c)/n⌋} on residues in [0, n).
Scalar standard_cocycle(const CyclicGroupSpec& spec, Index a, Index b, Index c);

/// K_ω[Z/n]: the group algebra with φ(g^a,g^b,g^c) = ω(a,b,c), α = ε and
/// β(g^a) = ω(a, n-a, a)^{-1}. The result is validated with the full Hopf
/// checker before being returned (ChecksFailed otherwise). beta_override
/// is a hook for exercising that validation.
AlgebraInstance twisted_group_algebra(const CyclicGroupSpec& spec,
                                      const std::optional<SparseTensor>& beta_override = {});

/// Sweedler's 4-dimensional Hopf algebra on {1, g, x, gx} with trivial
/// reassociator; requires characteristic ≠ 2.
AlgebraInstance sweedler_h4(const FieldSpec& f);

/// Single structure-constant perturbation, applied without validation.
struct Mutation {
  std::string target;  // mult | comult | phi | counit | unit | antipode | alpha | beta
  Key key;
  Scalar delta;
};

AlgebraInstance mutate(const AlgebraInstance& H, const Mutation& m);
AlgebraInstance mutate(const AlgebraInstance& H, const std::vector<Mutation>& ms);

/// Fixed catalogue of deliberately broken instances with the check each
/// one is expected to fail first, and where.
struct CatalogueMutant {
  std::string name;
  AlgebraInstance instance;
  std::string failing_check;
  Key witness_tuple;
};

std::vector<CatalogueMutant> mutant_catalogue();

}  // namespace coquasi
