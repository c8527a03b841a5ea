#pragma once

#include "coquasi/algebra.hpp"

namespace coquasi {

/// Convolution algebra structure on (H^{⊗k})*: (f*g)(x) = f(x_(1)) g(x_(2))
/// with the component-wise coproduct on H^{⊗k}.
struct ConvContext {
  const AlgebraInstance* H;
  Index k = 1;
};

/// Unit of the convolution algebra: ε^{⊗k}.
SparseTensor conv_unit(const AlgebraInstance& H, Index k);

SparseTensor convolve(const SparseTensor& f, const SparseTensor& g, const ConvContext& ctx);

/// Exact two-sided convolution inverse: solves the n^k × n^k linear system
/// f * g = ε^{⊗k} and then verifies g * f = ε^{⊗k} as well; throws
/// NotInvertible when either step fails.
SparseTensor convolution_inverse(const SparseTensor& f, const ConvContext& ctx);

/// Linear map from H^{⊗s} into the convolution algebra H*, stored as a
/// Functional of arity s+1 keyed (source..., evaluation point). These carry
/// σ, σ⁻¹ and the maps assembled by the proof pipeline.
struct DualMap {
  Index source_arity = 1;
  SparseTensor data;
};

/// Unit of the convolution algebra of maps H^{⊗s} → H*: x ↦ ε^{⊗s}(x) ε.
DualMap dual_map_unit(const AlgebraInstance& H, Index s);

/// (F*G)(x) = F(x_(1)) * G(x_(2)), convolution in H* after the
/// component-wise coproduct of the source.
DualMap convolve_maps(const DualMap& F, const DualMap& G, const AlgebraInstance& H);

/// The functional F(e_src) ∈ H*.
SparseTensor dual_map_at(const DualMap& F, const Key& src, const AlgebraInstance& H);

/// A LinMap n→n whose target is read as H* (rows of values), as a DualMap.
DualMap dual_map_of(const LinMap& m, const AlgebraInstance& H);

}  // namespace coquasi
