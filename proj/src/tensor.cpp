#include "coquasi/tensor.hpp"

#include <atomic>

namespace coquasi {

namespace {
std::atomic<std::size_t> g_term_ceiling{1000000};
}

std::size_t term_ceiling() { return g_term_ceiling.load(); }
void set_term_ceiling(std::size_t ceiling) { g_term_ceiling.store(ceiling); }

SparseTensor::SparseTensor(Variance v, const FieldSpec& f, std::vector<Index> dims)
    : variance_(v), field_(f), dims_(std::move(dims)) {}

SparseTensor SparseTensor::basis_element(const FieldSpec& f, Index dim, Index i) {
  SparseTensor t(Variance::Element, f, {dim});
  t.set({i}, Scalar::one(f));
  return t;
}

void SparseTensor::check_key(const Key& k) const {
  if (k.size() != dims_.size())
    throw ArityMismatch("key arity " + std::to_string(k.size()) + " does not match tensor arity " +
                        std::to_string(dims_.size()));
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] >= dims_[i])
      throw DimensionMismatch("tensor index " + std::to_string(k[i]) + " out of range for leg " +
                              std::to_string(i) + " of size " + std::to_string(dims_[i]));
}

void SparseTensor::add(const Key& k, const Scalar& c) {
  check_key(k);
  if (c.is_zero()) return;
  auto it = entries_.find(k);
  if (it == entries_.end()) {
    if (entries_.size() >= term_ceiling()) throw CostExceeded(term_ceiling());
    entries_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseTensor::set(const Key& k, const Scalar& c) {
  check_key(k);
  if (c.is_zero())
    entries_.erase(k);
  else
    entries_[k] = c;
}

Scalar SparseTensor::coeff(const Key& k) const {
  check_key(k);
  auto it = entries_.find(k);
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

SparseTensor SparseTensor::scaled(const Scalar& c) const {
  SparseTensor r(variance_, field_, dims_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : entries_) r.entries_.emplace(k, v * c);
  return r;
}

SparseTensor SparseTensor::operator+(const SparseTensor& o) const {
  if (dims_ != o.dims_ || variance_ != o.variance_)
    throw ArityMismatch("tensor sum shape mismatch");
  SparseTensor r = *this;
  for (const auto& [k, v] : o.entries_) r.add(k, v);
  return r;
}

bool SparseTensor::operator==(const SparseTensor& o) const {
  return variance_ == o.variance_ && dims_ == o.dims_ && entries_ == o.entries_;
}

SparseTensor SparseTensor::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != arity()) throw ArityMismatch("permutation length mismatch");
  std::vector<Index> new_dims(arity());
  for (std::size_t i = 0; i < arity(); ++i) new_dims[i] = dims_[perm[i]];
  SparseTensor r(variance_, field_, new_dims);
  for (const auto& [k, v] : entries_) {
    Key nk(arity());
    for (std::size_t i = 0; i < arity(); ++i) nk[i] = k[perm[i]];
    r.set(nk, v);
  }
  return r;
}

SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b) {
  if (a.variance() != b.variance())
    throw ArityMismatch("tensor product of mixed variance");
  if (a.field() != b.field()) throw Error("tensor product over different fields");
  std::vector<Index> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  SparseTensor r(a.variance(), a.field(), dims);
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries()) {
      Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(k, va * vb);
    }
  return r;
}

Scalar contract(const SparseTensor& f, const SparseTensor& x) {
  if (f.variance() != Variance::Functional || x.variance() != Variance::Element)
    throw ArityMismatch("contract expects a Functional against an Element");
  if (f.dims() != x.dims()) throw ArityMismatch("contract shape mismatch");
  Scalar acc = Scalar::zero(f.field());
  const auto& small = f.term_count() <= x.term_count() ? f : x;
  const auto& large = f.term_count() <= x.term_count() ? x : f;
  for (const auto& [k, v] : small.entries()) {
    auto it = large.entries().find(k);
    if (it != large.entries().end()) acc += v * it->second;
  }
  return acc;
}

LinMap::LinMap(const FieldSpec& f, std::vector<Index> source_dims, std::vector<Index> target_dims)
    : source_dims_(std::move(source_dims)), target_dims_(std::move(target_dims)) {
  std::vector<Index> dims = source_dims_;
  dims.insert(dims.end(), target_dims_.begin(), target_dims_.end());
  data_ = SparseTensor(Variance::Element, f, dims);
}

LinMap LinMap::identity(const FieldSpec& f, Index dim) {
  LinMap m(f, {dim}, {dim});
  for (Index i = 0; i < dim; ++i) m.add({i}, {i}, Scalar::one(f));
  return m;
}

void LinMap::add(const Key& src, const Key& tgt, const Scalar& c) {
  if (src.size() != source_arity() || tgt.size() != target_arity())
    throw ArityMismatch("LinMap entry arity mismatch");
  Key k = src;
  k.insert(k.end(), tgt.begin(), tgt.end());
  data_.add(k, c);
}

Scalar LinMap::coeff(const Key& src, const Key& tgt) const {
  Key k = src;
  k.insert(k.end(), tgt.begin(), tgt.end());
  return data_.coeff(k);
}

SparseTensor LinMap::apply(const SparseTensor& x) const {
  if (x.arity() != source_arity())
    throw ArityMismatch("LinMap::apply: argument arity " + std::to_string(x.arity()) +
                        " does not match source arity " + std::to_string(source_arity()));
  SparseTensor r(x.variance(), x.field(), target_dims_);
  for (const auto& [k, v] : data_.entries()) {
    Key src(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(source_arity()));
    auto it = x.entries().find(src);
    if (it == x.entries().end()) continue;
    Key tgt(k.begin() + static_cast<std::ptrdiff_t>(source_arity()), k.end());
    r.add(tgt, v * it->second);
  }
  return r;
}

bool LinMap::operator==(const LinMap& o) const {
  return source_dims_ == o.source_dims_ && target_dims_ == o.target_dims_ && data_ == o.data_;
}

SparseTensor apply_leg(const SparseTensor& t, std::size_t leg, const LinMap& m) {
  if (leg >= t.arity()) throw ArityMismatch("apply_leg: leg out of range");
  if (m.source_arity() != 1) throw ArityMismatch("apply_leg: map must have source arity 1");
  if (m.source_dims()[0] != t.dims()[leg])
    throw ArityMismatch("apply_leg: leg dimension mismatch");

  std::vector<Index> dims;
  dims.insert(dims.end(), t.dims().begin(), t.dims().begin() + static_cast<std::ptrdiff_t>(leg));
  dims.insert(dims.end(), m.target_dims().begin(), m.target_dims().end());
  dims.insert(dims.end(), t.dims().begin() + static_cast<std::ptrdiff_t>(leg) + 1, t.dims().end());

  SparseTensor r(t.variance(), t.field(), dims);
  for (const auto& [k, v] : t.entries()) {
    for (const auto& [mk, mv] : m.data().entries()) {
      if (mk[0] != k[leg]) continue;
      Key nk;
      nk.insert(nk.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(leg));
      nk.insert(nk.end(), mk.begin() + 1, mk.end());
      nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(leg) + 1, k.end());
      r.add(nk, v * mv);
    }
  }
  return r;
}

SparseTensor iterated_coproduct(const LinMap& comult, Index basis_index, unsigned m) {
  SparseTensor t = SparseTensor::basis_element(comult.field(), comult.source_dims()[0], basis_index);
  for (unsigned step = 0; step < m; ++step) t = apply_leg(t, t.arity() - 1, comult);
  return t;
}

}  // namespace coquasi
