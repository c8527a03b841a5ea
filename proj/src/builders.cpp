#include "coquasi/builders.hpp"

#include "coquasi/checks.hpp"

namespace coquasi {

ChecksFailed::ChecksFailed(Report r)
    : Error(r.first_failure() ? "builder validation failed at check '" +
                                    r.first_failure()->name + "'"
                              : "builder validation failed"),
      report(std::move(r)) {}

CyclicGroupSpec::CyclicGroupSpec(Index n, const FieldSpec& f, const Scalar& z)
    : order(n), field(f), zeta(z) {
  if (n == 0) throw Error("cyclic group order must be positive");
  if (zeta.field() != field) throw Error("root of unity lies in a different field");
  if (!(zeta.pow(n) == Scalar::one(field)))
    throw Error("zeta^" + std::to_string(n) + " != 1; not an n-th root of unity");
}

namespace {

std::vector<std::string> cyclic_labels(Index n) {
  std::vector<std::string> labels;
  labels.push_back("e");
  for (Index a = 1; a < n; ++a) labels.push_back(a == 1 ? "g" : "g" + std::to_string(a));
  return labels;
}

}  // namespace

AlgebraInstance group_algebra(Index n, const FieldSpec& f) {
  if (n == 0) throw Error("cyclic group order must be positive");
  AlgebraInstance H;
  H.field = f;
  H.dim = n;
  H.basis = cyclic_labels(n);
  Scalar one = Scalar::one(f);

  H.unit = SparseTensor(Variance::Element, f, {n});
  H.unit.set({0}, one);

  H.counit = SparseTensor(Variance::Functional, f, {n});
  for (Index a = 0; a < n; ++a) H.counit.set({a}, one);

  H.mult = LinMap(f, {n, n}, {n});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) H.mult.add({a, b}, {(a + b) % n}, one);

  H.comult = LinMap(f, {n}, {n, n});
  for (Index a = 0; a < n; ++a) H.comult.add({a}, {a, a}, one);

  H.phi = SparseTensor(Variance::Functional, f, {n, n, n});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) H.phi.set({a, b, c}, one);

  LinMap S(f, {n}, {n});
  for (Index a = 0; a < n; ++a) S.add({a}, {(n - a) % n}, one);
  H.antipode = std::move(S);
  H.alpha = H.counit;
  H.beta = H.counit;

  for (Index a = 0; a < n; ++a) H.grouplikes.push_back(H.basis_elem(a));
  return H;
}

Scalar standard_cocycle(const CyclicGroupSpec& spec, Index a, Index b, Index c) {
  Index n = spec.order;
  if (a >= n || b >= n || c >= n) throw DimensionMismatch("cocycle argument out of range");
  long long exponent = static_cast<long long>(a) * ((b + c) / n);
  return spec.zeta.pow(exponent);
}

AlgebraInstance twisted_group_algebra(const CyclicGroupSpec& spec,
                                      const std::optional<SparseTensor>& beta_override) {
  Index n = spec.order;
  AlgebraInstance H = group_algebra(n, spec.field);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) H.phi.set({a, b, c}, standard_cocycle(spec, a, b, c));

  if (beta_override) {
    H.beta = *beta_override;
  } else {
    SparseTensor beta(Variance::Functional, spec.field, {n});
    for (Index a = 0; a < n; ++a)
      beta.set({a}, standard_cocycle(spec, a, (n - a) % n, a).inv());
    H.beta = std::move(beta);
  }

  Report rep = check_dual_quasi_hopf(H);
  if (!rep.ok()) throw ChecksFailed(std::move(rep));
  return H;
}

AlgebraInstance sweedler_h4(const FieldSpec& f) {
  if (f.kind == FieldKind::PrimeField && f.modulus == 2)
    throw UnsupportedCharacteristic("the 4-dimensional instance needs characteristic != 2");
  const Index n = 4;  // basis 1, g, x, gx
  AlgebraInstance H;
  H.field = f;
  H.dim = n;
  H.basis = {"1", "g", "x", "gx"};
  Scalar one = Scalar::one(f), minus = -one;

  H.unit = SparseTensor(Variance::Element, f, {n});
  H.unit.set({0}, one);

  H.counit = SparseTensor(Variance::Functional, f, {n});
  H.counit.set({0}, one);
  H.counit.set({1}, one);

  // relations g^2 = 1, x^2 = 0, xg = -gx, written out as a table
  H.mult = LinMap(f, {n, n}, {n});
  auto put = [&](Index a, Index b, Index t, const Scalar& c) { H.mult.add({a, b}, {t}, c); };
  for (Index b = 0; b < n; ++b) put(0, b, b, one);  // 1·y
  put(1, 1, 0, one);                                // g·g
  put(1, 2, 3, one);                                // g·x = gx
  put(1, 3, 2, one);                                // g·gx = x
  put(2, 0, 2, one);                                // x·1
  put(2, 1, 3, minus);                              // x·g = -gx
  put(3, 0, 3, one);                                // gx·1
  put(3, 1, 2, minus);                              // gx·g = -x

  H.comult = LinMap(f, {n}, {n, n});
  H.comult.add({0}, {0, 0}, one);
  H.comult.add({1}, {1, 1}, one);
  H.comult.add({2}, {2, 0}, one);  // Δ(x) = x⊗1 + g⊗x
  H.comult.add({2}, {1, 2}, one);
  H.comult.add({3}, {3, 1}, one);  // Δ(gx) = gx⊗g + 1⊗gx
  H.comult.add({3}, {0, 3}, one);

  // trivial reassociator on its ε⊗ε⊗ε support
  H.phi = SparseTensor(Variance::Functional, f, {n, n, n});
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b)
      for (Index c = 0; c < 2; ++c) H.phi.set({a, b, c}, one);

  LinMap S(f, {n}, {n});
  S.add({0}, {0}, one);
  S.add({1}, {1}, one);
  S.add({2}, {3}, minus);  // S(x) = -gx
  S.add({3}, {2}, one);    // S(gx) = x
  H.antipode = std::move(S);
  H.alpha = H.counit;
  H.beta = H.counit;

  H.grouplikes = {H.basis_elem(0), H.basis_elem(1)};
  return H;
}

AlgebraInstance mutate(const AlgebraInstance& H, const Mutation& m) {
  AlgebraInstance out = H;
  auto want_key = [&](std::size_t len) {
    if (m.key.size() != len)
      throw ArityMismatch("mutation key for '" + m.target + "' needs " + std::to_string(len) +
                          " indices");
  };
  if (m.target == "mult") {
    want_key(3);
    out.mult.add({m.key[0], m.key[1]}, {m.key[2]}, m.delta);
  } else if (m.target == "comult") {
    want_key(3);
    out.comult.add({m.key[0]}, {m.key[1], m.key[2]}, m.delta);
  } else if (m.target == "phi") {
    want_key(3);
    out.phi.add(m.key, m.delta);
  } else if (m.target == "counit") {
    want_key(1);
    out.counit.add(m.key, m.delta);
  } else if (m.target == "unit") {
    want_key(1);
    out.unit.add(m.key, m.delta);
  } else if (m.target == "antipode") {
    want_key(2);
    if (!out.antipode) throw MissingAntipodeData();
    out.antipode->add({m.key[0]}, {m.key[1]}, m.delta);
  } else if (m.target == "alpha") {
    want_key(1);
    if (!out.alpha) throw MissingAntipodeData();
    out.alpha->add(m.key, m.delta);
  } else if (m.target == "beta") {
    want_key(1);
    if (!out.beta) throw MissingAntipodeData();
    out.beta->add(m.key, m.delta);
  } else {
    throw UnknownTarget(m.target);
  }
  return out;
}

AlgebraInstance mutate(const AlgebraInstance& H, const std::vector<Mutation>& ms) {
  AlgebraInstance out = H;
  for (const Mutation& m : ms) out = mutate(out, m);
  return out;
}

std::vector<CatalogueMutant> mutant_catalogue() {
  FieldSpec q = FieldSpec::rationals();
  Scalar two = Scalar::of_int(q, 2), minus_two = Scalar::of_int(q, -2);
  CyclicGroupSpec z2{2, q, Scalar::of_int(q, -1)};

  std::vector<CatalogueMutant> out;

  // φ(g^a,g^b,g^c) = (-1)^{ab} on K[Z/2]: not a 3-cocycle
  out.push_back({"noncocycle",
                 mutate(group_algebra(2, q), {{"phi", {1, 1, 0}, minus_two},
                                              {"phi", {1, 1, 1}, minus_two}}),
                 "e3",
                 {1, 1, 0, 0}});

  // K_ω[Z/2] with φ(g,g,g) flipped back to +1: β no longer matches φ
  out.push_back({"phi-flip",
                 mutate(twisted_group_algebra(z2), {{"phi", {1, 1, 1}, two}}),
                 "e6a",
                 {1}});

  // H4 with Δ(x) corrupted to x⊗1 + x⊗g
  out.push_back({"h4-comult",
                 mutate(sweedler_h4(q), {{"comult", {2, 1, 2}, Scalar::of_int(q, -1)},
                                         {"comult", {2, 2, 1}, Scalar::of_int(q, 1)}}),
                 "coassoc",
                 {2}});

  // K_ω[Z/2] with β = ε
  out.push_back({"beta-eps",
                 mutate(twisted_group_algebra(z2), {{"beta", {1}, two}}),
                 "e6a",
                 {1}});

  return out;
}

}  // namespace coquasi
