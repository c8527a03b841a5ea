#include "coquasi/algebra.hpp"

#include <sstream>

namespace coquasi {

std::optional<Index> AlgebraInstance::label_index(std::string_view label) const {
  for (Index i = 0; i < dim; ++i)
    if (basis[i] == label) return i;
  return std::nullopt;
}

SparseTensor AlgebraInstance::basis_elem(Index i) const {
  return SparseTensor::basis_element(field, dim, i);
}

SparseTensor AlgebraInstance::zero_elem() const {
  return SparseTensor(Variance::Element, field, {dim});
}

SparseTensor AlgebraInstance::product(const SparseTensor& a, const SparseTensor& b) const {
  return mult.apply(tensor_product(a, b));
}

SparseTensor AlgebraInstance::sweedler_legs(Index i, unsigned legs) const {
  if (legs == 0) throw ArityMismatch("sweedler_legs: at least one leg required");
  return iterated_coproduct(comult, i, legs - 1);
}

Scalar AlgebraInstance::counit_of(const SparseTensor& x) const { return contract(counit, x); }

SparseTensor AlgebraInstance::antipode_of(const SparseTensor& x) const {
  if (!antipode) throw MissingAntipodeData();
  return antipode->apply(x);
}

void Report::pass(std::string name, bool informational) {
  checks_.push_back({std::move(name), CheckStatus::Pass, std::nullopt, informational});
}

void Report::fail(std::string name, Witness w, bool informational) {
  checks_.push_back({std::move(name), CheckStatus::Fail, std::move(w), informational});
}

void Report::skip(std::string name, bool informational) {
  checks_.push_back({std::move(name), CheckStatus::Skipped, std::nullopt, informational});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    CheckResult r = c;
    r.name = prefix + r.name;
    checks_.push_back(std::move(r));
  }
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (!c.informational && c.status != CheckStatus::Pass) return false;
  return true;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.informational && c.status == CheckStatus::Fail) return &c;
  return nullptr;
}

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << c.name;
    switch (c.status) {
      case CheckStatus::Pass:
        os << " PASS";
        break;
      case CheckStatus::Skipped:
        os << " SKIPPED";
        break;
      case CheckStatus::Fail:
        os << " FAIL";
        if (!c.witness->tuple.empty()) os << " at " << format_tuple(c.witness->tuple);
        os << ": lhs=" << c.witness->lhs << " rhs=" << c.witness->rhs;
        break;
    }
    os << '\n';
  }
  return os.str();
}

std::string format_tensor(const AlgebraInstance& H, const SparseTensor& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t.entries()) {
    if (!first) os << ' ';
    first = false;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) os << ',';
      os << H.basis[k[i]];
    }
    os << ':' << v.to_string();
  }
  return os.str();
}

std::string format_tuple(const Key& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

}  // namespace coquasi
