#pragma once

#include <string>
#include <string_view>

#include "coquasi/algebra.hpp"

namespace coquasi {

/// Parses the line-oriented instance format. The result is structurally
/// valid (consistent dimensions, S/α/β all present or all absent,
/// ε(unit) = 1); the algebra axioms are not checked here.
AlgebraInstance parse_instance(std::string_view text);

/// Reads and parses an instance file.
AlgebraInstance load_instance(const std::string& path);

/// Canonical serialization; parse ∘ serialize is the identity and the
/// output is byte-stable, so generated fixtures can be diffed.
std::string serialize_instance(const AlgebraInstance& H);

void write_instance(const AlgebraInstance& H, const std::string& path);

}  // namespace coquasi
