#include "coquasi/convolution.hpp"

namespace coquasi {

namespace {

// Enumerates the component-wise coproduct of the basis tensor e_key of
// H^{⊗k}: calls fn(first, second, coeff) for every split term.
template <typename Fn>
void for_each_split(const AlgebraInstance& H, const Key& key, Fn&& fn) {
  std::size_t k = key.size();
  // per-component coproduct terms
  std::vector<std::vector<std::pair<std::pair<Index, Index>, Scalar>>> comps(k);
  for (std::size_t j = 0; j < k; ++j) {
    SparseTensor cp = H.comult.apply(SparseTensor::basis_element(H.field, H.dim, key[j]));
    for (const auto& [uv, c] : cp.entries()) comps[j].push_back({{uv[0], uv[1]}, c});
    if (comps[j].empty()) return;  // Δ of this component is zero
  }
  Key first(k), second(k);
  Scalar one = Scalar::one(H.field);
  auto rec = [&](auto&& self, std::size_t j, const Scalar& acc) -> void {
    if (j == k) {
      fn(first, second, acc);
      return;
    }
    for (const auto& [uv, c] : comps[j]) {
      first[j] = uv.first;
      second[j] = uv.second;
      self(self, j + 1, acc * c);
    }
  };
  rec(rec, 0, one);
}

void check_functional(const SparseTensor& f, const ConvContext& ctx, const char* who) {
  if (f.variance() != Variance::Functional)
    throw ArityMismatch(std::string(who) + ": expected a Functional tensor");
  if (f.arity() != ctx.k)
    throw ArityMismatch(std::string(who) + ": arity " + std::to_string(f.arity()) +
                        " does not match context arity " + std::to_string(ctx.k));
  for (Index d : f.dims())
    if (d != ctx.H->dim) throw ArityMismatch(std::string(who) + ": leg dimension mismatch");
}

std::size_t flat_index(const Key& key, Index n) {
  std::size_t f = 0;
  for (Index i : key) f = f * n + i;
  return f;
}

void all_keys_next(Key& key, Index n) {  // lexicographic increment
  for (std::size_t j = key.size(); j-- > 0;) {
    if (++key[j] < n) break;
    key[j] = 0;
  }
}

}  // namespace

SparseTensor conv_unit(const AlgebraInstance& H, Index k) {
  SparseTensor u = H.counit;
  for (Index i = 1; i < k; ++i) u = tensor_product(u, H.counit);
  return u;
}

SparseTensor convolve(const SparseTensor& f, const SparseTensor& g, const ConvContext& ctx) {
  check_functional(f, ctx, "convolve");
  check_functional(g, ctx, "convolve");
  const AlgebraInstance& H = *ctx.H;
  SparseTensor r(Variance::Functional, H.field, f.dims());
  std::size_t total = 1;
  for (Index j = 0; j < ctx.k; ++j) total *= H.dim;
  Key x(ctx.k, 0);
  for (std::size_t step = 0; step < total; ++step) {
    Scalar acc = Scalar::zero(H.field);
    for_each_split(H, x, [&](const Key& a, const Key& b, const Scalar& c) {
      Scalar fa = f.coeff(a);
      if (fa.is_zero()) return;
      Scalar gb = g.coeff(b);
      if (gb.is_zero()) return;
      acc += c * fa * gb;
    });
    r.add(x, acc);
    all_keys_next(x, H.dim);
  }
  return r;
}

SparseTensor convolution_inverse(const SparseTensor& f, const ConvContext& ctx) {
  check_functional(f, ctx, "convolution_inverse");
  const AlgebraInstance& H = *ctx.H;
  std::size_t total = 1;
  for (Index j = 0; j < ctx.k; ++j) total *= H.dim;

  // left-convolution-by-f matrix: (f*g)(x) = Σ_y L[x][y] g(y)
  Matrix L(H.field, total, total);
  SparseTensor unit = conv_unit(H, ctx.k);
  Vec rhs(total, Scalar::zero(H.field));
  Key x(ctx.k, 0);
  for (std::size_t row = 0; row < total; ++row) {
    for_each_split(H, x, [&](const Key& a, const Key& b, const Scalar& c) {
      Scalar fa = f.coeff(a);
      if (fa.is_zero()) return;
      L.at(row, flat_index(b, H.dim)) += c * fa;
    });
    rhs[row] = unit.coeff(x);
    all_keys_next(x, H.dim);
  }

  auto sol = L.solve(rhs);
  if (!sol) throw NotInvertible("no right convolution inverse exists");
  SparseTensor g(Variance::Functional, H.field, f.dims());
  Key y(ctx.k, 0);
  for (std::size_t i = 0; i < total; ++i) {
    g.add(y, (*sol)[i]);
    all_keys_next(y, H.dim);
  }

  // both-sided verification is mandatory
  if (!(convolve(f, g, ctx) == unit))
    throw NotInvertible("right inverse verification failed");
  if (!(convolve(g, f, ctx) == unit))
    throw NotInvertible("candidate inverse is not a left inverse");
  return g;
}

DualMap dual_map_unit(const AlgebraInstance& H, Index s) {
  return {s, conv_unit(H, s + 1)};
}

DualMap convolve_maps(const DualMap& F, const DualMap& G, const AlgebraInstance& H) {
  if (F.source_arity != G.source_arity)
    throw ArityMismatch("convolve_maps: source arity mismatch");
  // Under the currying H^{⊗s} → H*  ≅  (H^{⊗(s+1)})*, convolution of maps
  // is convolution of the underlying functionals.
  ConvContext ctx{&H, static_cast<Index>(F.source_arity + 1)};
  return {F.source_arity, convolve(F.data, G.data, ctx)};
}

SparseTensor dual_map_at(const DualMap& F, const Key& src, const AlgebraInstance& H) {
  if (src.size() != F.source_arity) throw ArityMismatch("dual_map_at: source arity mismatch");
  SparseTensor r(Variance::Functional, H.field, {H.dim});
  Key lo = src;
  lo.push_back(0);
  auto it = F.data.entries().lower_bound(lo);
  for (; it != F.data.entries().end(); ++it) {
    const Key& k = it->first;
    if (!std::equal(src.begin(), src.end(), k.begin())) break;
    r.add({k.back()}, it->second);
  }
  return r;
}

DualMap dual_map_of(const LinMap& m, const AlgebraInstance& H) {
  if (m.source_arity() != 1 || m.target_arity() != 1)
    throw ArityMismatch("dual_map_of: expected a LinMap 1→1");
  SparseTensor data(Variance::Functional, H.field, {H.dim, H.dim});
  for (const auto& [k, v] : m.data().entries()) data.add(k, v);
  return {1, data};
}

}  // namespace coquasi
