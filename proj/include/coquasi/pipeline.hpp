#pragma once

#include "coquasi/algebra.hpp"
#include "coquasi/convolution.hpp"

namespace coquasi {

/// Antipode rank data. At finite dimension injectivity and surjectivity
/// coincide (rank argument) and the left inverse, when it exists, is the
/// two-sided inverse.
struct AntipodeStatus {
  bool injective = false;
  bool surjective = false;
  std::optional<Matrix> left_inverse;  // S^l with S^l ∘ S = S ∘ S^l = id
  std::optional<unsigned> order;       // smallest k ≤ 2n² with S^k = id
};

/// (h ⇀ f)(g) = f(gh), extended linearly in h.
SparseTensor harpoon(const AlgebraInstance& H, const SparseTensor& h, const SparseTensor& f);

/// Left coaction h ↦ a S(h_2) ⊗ h_1 twisting the regular right comodule by
/// the grouplike a. Throws NotGrouplike.
LinMap a_coaction(const AlgebraInstance& H, const SparseTensor& a);

/// Dual action h ·^a e^j = e^j(a S(h_2)) h_1 as an element of H.
SparseTensor a_dual_action(const AlgebraInstance& H, const SparseTensor& a, Index h, Index j);

/// σ: H⊗H → H*, σ(h⊗g)(f) = φ(f,h,g), and the map built the same way from
/// φ⁻¹. Stored as DualMaps keyed (h, g, evaluation point).
DualMap sigma_map(const AlgebraInstance& H);
DualMap sigma_map_from(const AlgebraInstance& H, const SparseTensor& phi_like);

/// Verifies that the map built from φ⁻¹ is the two-sided convolution
/// inverse of σ in the convolution algebra of maps H⊗H → H*.
Report check_sigma_inverse(const AlgebraInstance& H, const SparseTensor& phi_inv);

/// θ*(T⊗−): column h holds the coordinates of
///   σ(S(h_5)⊗α(h_6)h_7) * (S(h_4) ⇀ T) * σ⁻¹(S(h_3)⊗β(S(h_2))S²(h_1)).
Matrix map_theta_star(const AlgebraInstance& H, const SparseTensor& T);

/// p: column h holds the coordinates of
///   σ(S(S^l(h_3))⊗α(S^l(h_2))S^l(h_1)) * (h_4 ⇀ T) * σ⁻¹(h_5 β(h_6)⊗S(h_7)).
Matrix map_p(const AlgebraInstance& H, const SparseTensor& T, const Matrix& s_left_inverse);

/// θ_c(h) = c h; the coinner automorphisms
///   q_c(h) = φ⁻¹(c,S(c),h_1) h_2 φ(c,S(c),h_3),
///   r_c(h) = φ(c,S(c),h_1) h_2 φ⁻¹(c,S(c),h_3).
/// All require c grouplike (NotGrouplike otherwise).
Matrix theta_c(const AlgebraInstance& H, const SparseTensor& c);
Matrix q_c(const AlgebraInstance& H, const SparseTensor& c);
Matrix r_c(const AlgebraInstance& H, const SparseTensor& c);

/// The coinner-automorphism lemma for a grouplike c: c S(c) = S(c) c = 1,
/// θ_c∘θ_{S(c)} = r_c, θ_{S(c)}∘θ_c = r_{S(c)}, q_c∘r_c = r_c∘q_c = id and
/// θ_c⁻¹ = θ_{S(c)}∘q_c = q_{S(c)}∘θ_{S(c)}.
Report check_theta_lemma(const AlgebraInstance& H, const SparseTensor& c);

AntipodeStatus antipode_status(const AlgebraInstance& H);

/// Matrix of a LinMap 1→1 in the column convention: at(i, j) is the
/// e_i-coordinate of the image of e_j, so mat(f∘g) = mat(f)·mat(g).
Matrix matrix_of(const LinMap& m);
LinMap linmap_of(const Matrix& m);

/// End-to-end verification, nine stages in a fixed report order:
/// (1) axiom checks, (2) σ⁻¹ two-sided, (3) integral dimension and ideal
/// property, (4) distinguished grouplike with inverse S(a), (5) θ* full
/// rank, (6) p colinear / p∘S = θ*(T⊗−) / p full rank, (7) θ_a lemma,
/// (8) S bijective, (9) rank(θ_a∘S) = n. Stages whose prerequisites
/// failed are reported SKIPPED.
Report verify_theorem(const AlgebraInstance& H);

}  // namespace coquasi
