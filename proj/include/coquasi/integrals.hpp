#pragma once

#include "coquasi/algebra.hpp"

namespace coquasi {

/// Basis of the space of left integrals: functionals T with
/// h* * T = h*(1) T, equivalently x_1 T(x_2) = T(x) 1 for all basis x.
/// Computed as an exact null space; vectors are normalized so the first
/// nonzero coordinate is 1. Uses only the coalgebra and the unit.
std::vector<SparseTensor> left_integrals(const AlgebraInstance& H);

/// Mirror condition T(x_1) x_2 = T(x) 1.
std::vector<SparseTensor> right_integrals(const AlgebraInstance& H);

/// Verifies h* * T ∈ span{T} and T * h* ∈ span{T} for every dual basis
/// functional h*.
Report check_ideal_property(const AlgebraInstance& H, const SparseTensor& T);

/// Reads off the coefficients λ_j with T * e^j = λ_j T (coefficient taken
/// at the first coordinate where T is nonzero, then proportionality
/// verified on all coordinates) and returns a = Σ_j λ_j e_j. Throws
/// NotProportional when some T * e^j leaves span{T}.
SparseTensor extract_distinguished(const AlgebraInstance& H, const SparseTensor& T);

/// extract_distinguished plus verification that a is grouplike with
/// ε(a) = 1 and, when the antipode is present, that a S(a) = S(a) a = 1.
/// Throws NotGrouplike when a verification fails.
SparseTensor distinguished_grouplike(const AlgebraInstance& H, const SparseTensor& T);

/// Δ(x) = x ⊗ x and ε(x) = 1, exactly.
bool is_grouplike(const AlgebraInstance& H, const SparseTensor& x);

struct IntegralData {
  std::vector<SparseTensor> left, right;
  std::optional<SparseTensor> distinguished;  // present iff dim left == 1 and extraction succeeded
};

IntegralData integral_data(const AlgebraInstance& H);

}  // namespace coquasi
