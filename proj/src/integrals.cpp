#include "coquasi/integrals.hpp"

#include "coquasi/convolution.hpp"

namespace coquasi {

namespace {

std::vector<SparseTensor> kernel_functionals(const AlgebraInstance& H, const Matrix& A) {
  std::vector<SparseTensor> out;
  for (const Vec& v : A.null_space()) {
    SparseTensor f(Variance::Functional, H.field, {H.dim});
    for (Index j = 0; j < H.dim; ++j) f.add({j}, v[j]);
    out.push_back(std::move(f));
  }
  return out;
}

SparseTensor delta_functional(const AlgebraInstance& H, Index j) {
  SparseTensor f(Variance::Functional, H.field, {H.dim});
  f.set({j}, Scalar::one(H.field));
  return f;
}

// u == λ·T for the λ read off at T's first nonzero coordinate?
std::optional<Scalar> proportionality(const SparseTensor& T, const SparseTensor& u) {
  const auto& entries = T.entries();
  if (entries.empty()) return std::nullopt;
  const auto& [k0, t0] = *entries.begin();
  Scalar lambda = u.coeff(k0) / t0;
  if (u == T.scaled(lambda)) return lambda;
  return std::nullopt;
}

}  // namespace

std::vector<SparseTensor> left_integrals(const AlgebraInstance& H) {
  const Index n = H.dim;
  // rows indexed (x = e_i, output coordinate b): Σ_v Δ_i[b,v] T(v) = T(i) unit_b
  Matrix A(H.field, static_cast<std::size_t>(n) * n, n);
  for (Index i = 0; i < n; ++i) {
    for (const auto& [k, c] : H.comult.apply(H.basis_elem(i)).entries())
      A.at(static_cast<std::size_t>(i) * n + k[0], k[1]) += c;
    for (Index b = 0; b < n; ++b)
      A.at(static_cast<std::size_t>(i) * n + b, i) -= H.unit.coeff({b});
  }
  return kernel_functionals(H, A);
}

std::vector<SparseTensor> right_integrals(const AlgebraInstance& H) {
  const Index n = H.dim;
  Matrix A(H.field, static_cast<std::size_t>(n) * n, n);
  for (Index i = 0; i < n; ++i) {
    for (const auto& [k, c] : H.comult.apply(H.basis_elem(i)).entries())
      A.at(static_cast<std::size_t>(i) * n + k[1], k[0]) += c;
    for (Index b = 0; b < n; ++b)
      A.at(static_cast<std::size_t>(i) * n + b, i) -= H.unit.coeff({b});
  }
  return kernel_functionals(H, A);
}

Report check_ideal_property(const AlgebraInstance& H, const SparseTensor& T) {
  Report rep;
  ConvContext ctx{&H, 1};
  std::string span = "multiple of " + format_tensor(H, T);

  std::optional<Witness> left;
  for (Index j = 0; j < H.dim && !left; ++j) {
    SparseTensor u = convolve(delta_functional(H, j), T, ctx);
    if (!proportionality(T, u)) left = Witness{{j}, format_tensor(H, u), span};
  }
  left ? rep.fail("ideal-left", *left) : rep.pass("ideal-left");

  std::optional<Witness> right;
  for (Index j = 0; j < H.dim && !right; ++j) {
    SparseTensor u = convolve(T, delta_functional(H, j), ctx);
    if (!proportionality(T, u)) right = Witness{{j}, format_tensor(H, u), span};
  }
  right ? rep.fail("ideal-right", *right) : rep.pass("ideal-right");
  return rep;
}

SparseTensor extract_distinguished(const AlgebraInstance& H, const SparseTensor& T) {
  if (T.is_zero()) throw NotProportional("integral is zero");
  ConvContext ctx{&H, 1};
  SparseTensor a(Variance::Element, H.field, {H.dim});
  for (Index j = 0; j < H.dim; ++j) {
    SparseTensor u = convolve(T, delta_functional(H, j), ctx);
    auto lambda = proportionality(T, u);
    if (!lambda)
      throw NotProportional("T * e^" + std::to_string(j) + " is not a multiple of T");
    a.add({j}, *lambda);
  }
  return a;
}

SparseTensor distinguished_grouplike(const AlgebraInstance& H, const SparseTensor& T) {
  SparseTensor a = extract_distinguished(H, T);
  if (!is_grouplike(H, a))
    throw NotGrouplike("extracted element " + format_tensor(H, a) + " is not grouplike");
  if (H.has_hopf_data()) {
    SparseTensor sa = H.antipode->apply(a);
    if (!(H.product(a, sa) == H.unit) || !(H.product(sa, a) == H.unit))
      throw NotGrouplike("extracted grouplike is not invertible with inverse S(a)");
  }
  return a;
}

bool is_grouplike(const AlgebraInstance& H, const SparseTensor& x) {
  return H.comult.apply(x) == tensor_product(x, x) &&
         H.counit_of(x) == Scalar::one(H.field);
}

IntegralData integral_data(const AlgebraInstance& H) {
  IntegralData d;
  d.left = left_integrals(H);
  d.right = right_integrals(H);
  if (d.left.size() == 1) {
    try {
      d.distinguished = distinguished_grouplike(H, d.left[0]);
    } catch (const Error&) {
      // reported by the callers that need it
    }
  }
  return d;
}

}  // namespace coquasi
