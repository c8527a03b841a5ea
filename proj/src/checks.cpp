#include "coquasi/checks.hpp"

#include "coquasi/convolution.hpp"

namespace coquasi {

namespace {

Scalar eval3(const SparseTensor& f3, const SparseTensor& a, const SparseTensor& b,
             const SparseTensor& c) {
  return contract(f3, tensor_product(tensor_product(a, b), c));
}

// Contracts one leg of an Element tensor against an arity-1 functional.
SparseTensor contract_leg(const SparseTensor& t, std::size_t leg, const SparseTensor& f) {
  std::vector<Index> dims;
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (i != leg) dims.push_back(t.dims()[i]);
  SparseTensor r(t.variance(), t.field(), dims);
  for (const auto& [k, v] : t.entries()) {
    Scalar fv = f.coeff({k[leg]});
    if (fv.is_zero()) continue;
    Key nk;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (i != leg) nk.push_back(k[i]);
    r.add(nk, v * fv);
  }
  return r;
}

void report_tensor_check(Report& rep, const AlgebraInstance& H, const std::string& name,
                         std::optional<std::pair<Key, std::pair<SparseTensor, SparseTensor>>> bad) {
  if (!bad)
    rep.pass(name);
  else
    rep.fail(name, {bad->first, format_tensor(H, bad->second.first),
                    format_tensor(H, bad->second.second)});
}

void report_scalar_check(Report& rep, const std::string& name,
                         std::optional<std::pair<Key, std::pair<Scalar, Scalar>>> bad) {
  if (!bad)
    rep.pass(name);
  else
    rep.fail(name, {bad->first, bad->second.first.to_string(), bad->second.second.to_string()});
}

void check_coalgebra_into(const AlgebraInstance& H, Report& rep) {
  using TensorFail = std::optional<std::pair<Key, std::pair<SparseTensor, SparseTensor>>>;

  TensorFail coassoc;
  for (Index i = 0; i < H.dim && !coassoc; ++i) {
    SparseTensor d = H.comult.apply(H.basis_elem(i));
    SparseTensor lhs = apply_leg(d, 0, H.comult);
    SparseTensor rhs = apply_leg(d, 1, H.comult);
    if (!(lhs == rhs)) coassoc = {{i}, {lhs, rhs}};
  }
  report_tensor_check(rep, H, "coassoc", coassoc);

  TensorFail left;
  for (Index i = 0; i < H.dim && !left; ++i) {
    SparseTensor lhs = contract_leg(H.comult.apply(H.basis_elem(i)), 0, H.counit);
    SparseTensor rhs = H.basis_elem(i);
    if (!(lhs == rhs)) left = {{i}, {lhs, rhs}};
  }
  report_tensor_check(rep, H, "counit-left", left);

  TensorFail right;
  for (Index i = 0; i < H.dim && !right; ++i) {
    SparseTensor lhs = contract_leg(H.comult.apply(H.basis_elem(i)), 1, H.counit);
    SparseTensor rhs = H.basis_elem(i);
    if (!(lhs == rhs)) right = {{i}, {lhs, rhs}};
  }
  report_tensor_check(rep, H, "counit-right", right);
}

const char* kBialgebraChecks[] = {"unit-coalgebra-map", "unit-counit",     "mult-coalgebra-map",
                                  "mult-counit-map",    "e1",              "e2a",
                                  "e2b",                "e3",              "e4",
                                  "phi-invertible"};

void check_bialgebra_into(const AlgebraInstance& H, Report& rep) {
  using TensorFail = std::optional<std::pair<Key, std::pair<SparseTensor, SparseTensor>>>;
  using ScalarFail = std::optional<std::pair<Key, std::pair<Scalar, Scalar>>>;
  const Index n = H.dim;

  {
    SparseTensor lhs = H.comult.apply(H.unit);
    SparseTensor rhs = tensor_product(H.unit, H.unit);
    report_tensor_check(rep, H, "unit-coalgebra-map",
                        lhs == rhs ? TensorFail{} : TensorFail{{Key{}, {lhs, rhs}}});
  }
  {
    Scalar lhs = H.counit_of(H.unit), rhs = Scalar::one(H.field);
    report_scalar_check(rep, "unit-counit",
                        lhs == rhs ? ScalarFail{} : ScalarFail{{Key{}, {lhs, rhs}}});
  }

  TensorFail mult_comap;
  for (Index a = 0; a < n && !mult_comap; ++a)
    for (Index b = 0; b < n && !mult_comap; ++b) {
      SparseTensor lhs = H.comult.apply(H.product(H.basis_elem(a), H.basis_elem(b)));
      SparseTensor rhs(Variance::Element, H.field, {n, n});
      for (const auto& [ka, ca] : H.comult.apply(H.basis_elem(a)).entries())
        for (const auto& [kb, cb] : H.comult.apply(H.basis_elem(b)).entries()) {
          SparseTensor t = tensor_product(H.product(H.basis_elem(ka[0]), H.basis_elem(kb[0])),
                                          H.product(H.basis_elem(ka[1]), H.basis_elem(kb[1])));
          rhs = rhs + t.scaled(ca * cb);
        }
      if (!(lhs == rhs)) mult_comap = {{a, b}, {lhs, rhs}};
    }
  report_tensor_check(rep, H, "mult-coalgebra-map", mult_comap);

  ScalarFail mult_counit;
  for (Index a = 0; a < n && !mult_counit; ++a)
    for (Index b = 0; b < n && !mult_counit; ++b) {
      Scalar lhs = H.counit_of(H.product(H.basis_elem(a), H.basis_elem(b)));
      Scalar rhs = H.counit.coeff({a}) * H.counit.coeff({b});
      if (!(lhs == rhs)) mult_counit = {{a, b}, {lhs, rhs}};
    }
  report_scalar_check(rep, "mult-counit-map", mult_counit);

  // e1: h1(g1 f1) φ(h2,g2,f2)  =  φ(h1,g1,f1) (h2 g2) f2
  TensorFail e1;
  for (Index h = 0; h < n && !e1; ++h)
    for (Index g = 0; g < n && !e1; ++g)
      for (Index f = 0; f < n && !e1; ++f) {
        SparseTensor lhs = H.zero_elem(), rhs = H.zero_elem();
        for (const auto& [kh, ch] : H.comult.apply(H.basis_elem(h)).entries())
          for (const auto& [kg, cg] : H.comult.apply(H.basis_elem(g)).entries())
            for (const auto& [kf, cf] : H.comult.apply(H.basis_elem(f)).entries()) {
              Scalar c = ch * cg * cf;
              Scalar phi_l = H.phi.coeff({kh[1], kg[1], kf[1]});
              if (!phi_l.is_zero()) {
                SparseTensor prod = H.product(
                    H.basis_elem(kh[0]), H.product(H.basis_elem(kg[0]), H.basis_elem(kf[0])));
                lhs = lhs + prod.scaled(c * phi_l);
              }
              Scalar phi_r = H.phi.coeff({kh[0], kg[0], kf[0]});
              if (!phi_r.is_zero()) {
                SparseTensor prod = H.product(
                    H.product(H.basis_elem(kh[1]), H.basis_elem(kg[1])), H.basis_elem(kf[1]));
                rhs = rhs + prod.scaled(c * phi_r);
              }
            }
        if (!(lhs == rhs)) e1 = {{h, g, f}, {lhs, rhs}};
      }
  report_tensor_check(rep, H, "e1", e1);

  TensorFail e2a;
  for (Index h = 0; h < n && !e2a; ++h) {
    SparseTensor lhs = H.product(H.unit, H.basis_elem(h));
    if (!(lhs == H.basis_elem(h))) e2a = {{h}, {lhs, H.basis_elem(h)}};
  }
  report_tensor_check(rep, H, "e2a", e2a);

  TensorFail e2b;
  for (Index h = 0; h < n && !e2b; ++h) {
    SparseTensor lhs = H.product(H.basis_elem(h), H.unit);
    if (!(lhs == H.basis_elem(h))) e2b = {{h}, {lhs, H.basis_elem(h)}};
  }
  report_tensor_check(rep, H, "e2b", e2b);

  // e3: φ(h1,g1,f1e1) φ(h2g2,f2,e2)  =  φ(g1,f1,e1) φ(h1,g2f2,e2) φ(h2,g3,f3)
  ScalarFail e3;
  for (Index h = 0; h < n && !e3; ++h)
    for (Index g = 0; g < n && !e3; ++g)
      for (Index f = 0; f < n && !e3; ++f)
        for (Index e = 0; e < n && !e3; ++e) {
          Scalar lhs = Scalar::zero(H.field), rhs = Scalar::zero(H.field);
          for (const auto& [kh, ch] : H.sweedler_legs(h, 2).entries())
            for (const auto& [kg, cg] : H.sweedler_legs(g, 2).entries())
              for (const auto& [kf, cf] : H.sweedler_legs(f, 2).entries())
                for (const auto& [ke, ce] : H.sweedler_legs(e, 2).entries()) {
                  Scalar c = ch * cg * cf * ce;
                  lhs += c *
                         eval3(H.phi, H.basis_elem(kh[0]), H.basis_elem(kg[0]),
                               H.product(H.basis_elem(kf[0]), H.basis_elem(ke[0]))) *
                         eval3(H.phi, H.product(H.basis_elem(kh[1]), H.basis_elem(kg[1])),
                               H.basis_elem(kf[1]), H.basis_elem(ke[1]));
                }
          for (const auto& [kh, ch] : H.sweedler_legs(h, 2).entries())
            for (const auto& [kg, cg] : H.sweedler_legs(g, 3).entries())
              for (const auto& [kf, cf] : H.sweedler_legs(f, 3).entries())
                for (const auto& [ke, ce] : H.sweedler_legs(e, 2).entries()) {
                  Scalar c = ch * cg * cf * ce;
                  rhs += c * H.phi.coeff({kg[0], kf[0], ke[0]}) *
                         eval3(H.phi, H.basis_elem(kh[0]),
                               H.product(H.basis_elem(kg[1]), H.basis_elem(kf[1])),
                               H.basis_elem(ke[1])) *
                         H.phi.coeff({kh[1], kg[2], kf[2]});
                }
          if (!(lhs == rhs)) e3 = {{h, g, f, e}, {lhs, rhs}};
        }
  report_scalar_check(rep, "e3", e3);

  // e4: φ(h,1,g) = ε(h) ε(g)
  ScalarFail e4;
  for (Index h = 0; h < n && !e4; ++h)
    for (Index g = 0; g < n && !e4; ++g) {
      Scalar lhs = eval3(H.phi, H.basis_elem(h), H.unit, H.basis_elem(g));
      Scalar rhs = H.counit.coeff({h}) * H.counit.coeff({g});
      if (!(lhs == rhs)) e4 = {{h, g}, {lhs, rhs}};
    }
  report_scalar_check(rep, "e4", e4);

  try {
    convolution_inverse(H.phi, {&H, 3});
    rep.pass("phi-invertible");
  } catch (const NotInvertible& e) {
    rep.fail("phi-invertible", {Key{}, e.what(), "two-sided convolution inverse"});
  }
}

const char* kHopfChecks[] = {"antipode-anticoalgebra", "antipode-counit", "e5a", "e5b",
                             "e6a",                    "e6b"};

void check_hopf_into(const AlgebraInstance& H, Report& rep) {
  using TensorFail = std::optional<std::pair<Key, std::pair<SparseTensor, SparseTensor>>>;
  using ScalarFail = std::optional<std::pair<Key, std::pair<Scalar, Scalar>>>;
  const Index n = H.dim;
  const LinMap& S = *H.antipode;
  const SparseTensor& alpha = *H.alpha;
  const SparseTensor& beta = *H.beta;

  TensorFail anti;
  for (Index h = 0; h < n && !anti; ++h) {
    SparseTensor lhs = H.comult.apply(S.apply(H.basis_elem(h)));
    SparseTensor d = H.comult.apply(H.basis_elem(h));
    SparseTensor rhs = apply_leg(apply_leg(d, 0, S), 1, S).permuted({1, 0});
    if (!(lhs == rhs)) anti = {{h}, {lhs, rhs}};
  }
  report_tensor_check(rep, H, "antipode-anticoalgebra", anti);

  ScalarFail eps_s;
  for (Index h = 0; h < n && !eps_s; ++h) {
    Scalar lhs = H.counit_of(S.apply(H.basis_elem(h)));
    Scalar rhs = H.counit.coeff({h});
    if (!(lhs == rhs)) eps_s = {{h}, {lhs, rhs}};
  }
  report_scalar_check(rep, "antipode-counit", eps_s);

  // e5a: S(h1) α(h2) h3 = α(h) 1
  TensorFail e5a;
  for (Index h = 0; h < n && !e5a; ++h) {
    SparseTensor lhs = H.zero_elem();
    for (const auto& [k, c] : H.sweedler_legs(h, 3).entries()) {
      Scalar a = alpha.coeff({k[1]});
      if (a.is_zero()) continue;
      lhs = lhs + H.product(S.apply(H.basis_elem(k[0])), H.basis_elem(k[2])).scaled(c * a);
    }
    SparseTensor rhs = H.unit.scaled(alpha.coeff({h}));
    if (!(lhs == rhs)) e5a = {{h}, {lhs, rhs}};
  }
  report_tensor_check(rep, H, "e5a", e5a);

  // e5b: h1 β(h2) S(h3) = β(h) 1
  TensorFail e5b;
  for (Index h = 0; h < n && !e5b; ++h) {
    SparseTensor lhs = H.zero_elem();
    for (const auto& [k, c] : H.sweedler_legs(h, 3).entries()) {
      Scalar b = beta.coeff({k[1]});
      if (b.is_zero()) continue;
      lhs = lhs + H.product(H.basis_elem(k[0]), S.apply(H.basis_elem(k[2]))).scaled(c * b);
    }
    SparseTensor rhs = H.unit.scaled(beta.coeff({h}));
    if (!(lhs == rhs)) e5b = {{h}, {lhs, rhs}};
  }
  report_tensor_check(rep, H, "e5b", e5b);

  // e6a: φ(h1 β(h2), S(h3), α(h4) h5) = ε(h)
  ScalarFail e6a;
  for (Index h = 0; h < n && !e6a; ++h) {
    Scalar lhs = Scalar::zero(H.field);
    for (const auto& [k, c] : H.sweedler_legs(h, 5).entries()) {
      Scalar w = beta.coeff({k[1]}) * alpha.coeff({k[3]});
      if (w.is_zero()) continue;
      lhs += c * w * eval3(H.phi, H.basis_elem(k[0]), S.apply(H.basis_elem(k[2])),
                           H.basis_elem(k[4]));
    }
    Scalar rhs = H.counit.coeff({h});
    if (!(lhs == rhs)) e6a = {{h}, {lhs, rhs}};
  }
  report_scalar_check(rep, "e6a", e6a);

  // e6b: φ⁻¹(S(h1), α(h2) h3, β(h4) S(h5)) = ε(h)
  SparseTensor phi_inv = convolution_inverse(H.phi, {&H, 3});
  ScalarFail e6b;
  for (Index h = 0; h < n && !e6b; ++h) {
    Scalar lhs = Scalar::zero(H.field);
    for (const auto& [k, c] : H.sweedler_legs(h, 5).entries()) {
      Scalar w = alpha.coeff({k[1]}) * beta.coeff({k[3]});
      if (w.is_zero()) continue;
      lhs += c * w * eval3(phi_inv, S.apply(H.basis_elem(k[0])), H.basis_elem(k[2]),
                           S.apply(H.basis_elem(k[4])));
    }
    Scalar rhs = H.counit.coeff({h});
    if (!(lhs == rhs)) e6b = {{h}, {lhs, rhs}};
  }
  report_scalar_check(rep, "e6b", e6b);

  for (const char* name : {"alpha", "beta"}) {
    const SparseTensor& f = name[0] == 'a' ? alpha : beta;
    std::string check = std::string("info:") + name + "-invertible";
    try {
      convolution_inverse(f, {&H, 1});
      rep.pass(check, /*informational=*/true);
    } catch (const NotInvertible& e) {
      rep.fail(check, {Key{}, e.what(), "two-sided convolution inverse"}, /*informational=*/true);
    }
  }
}

}  // namespace

Report check_coalgebra(const AlgebraInstance& H) {
  Report rep;
  check_coalgebra_into(H, rep);
  return rep;
}

Report check_dual_quasi_bialgebra(const AlgebraInstance& H) {
  Report rep = check_coalgebra(H);
  if (rep.ok())
    check_bialgebra_into(H, rep);
  else
    for (const char* name : kBialgebraChecks) rep.skip(name);
  return rep;
}

Report check_dual_quasi_hopf(const AlgebraInstance& H) {
  if (!H.has_hopf_data()) throw MissingAntipodeData();
  Report rep = check_dual_quasi_bialgebra(H);
  if (rep.ok()) {
    check_hopf_into(H, rep);
  } else {
    for (const char* name : kHopfChecks) rep.skip(name);
    rep.skip("info:alpha-invertible", true);
    rep.skip("info:beta-invertible", true);
  }
  return rep;
}

}  // namespace coquasi
