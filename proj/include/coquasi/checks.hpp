#pragma once

#include "coquasi/algebra.hpp"

namespace coquasi {

/// Coassociativity and the two counit laws, one named check each, verified
/// on every basis element.
Report check_coalgebra(const AlgebraInstance& H);

/// Coalgebra checks plus the dual quasi-bialgebra layer: u and M coalgebra
/// maps, quasi-associativity (e1), unit laws (e2a/e2b), the reassociator
/// 3-cocycle condition (e3), normalization (e4), and convolution
/// invertibility of φ. Later layers are reported as SKIPPED when an
/// earlier layer fails.
Report check_dual_quasi_bialgebra(const AlgebraInstance& H);

/// Bialgebra checks plus the Hopf layer: S an anti-coalgebra map, the
/// antipode identities (e5a/e5b) and the zigzag identities (e6a/e6b);
/// α/β convolution invertibility is recorded informationally. Throws
/// MissingAntipodeData when the instance has no S/α/β block.
Report check_dual_quasi_hopf(const AlgebraInstance& H);

}  // namespace coquasi
