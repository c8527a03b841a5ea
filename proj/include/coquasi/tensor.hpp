#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coquasi/scalar.hpp"

namespace coquasi {

using Index = std::uint32_t;
using Key = std::vector<Index>;

/// Distinguishes tensors carrying elements of H^{⊗k} from functionals in
/// (H^{⊗k})*. Contraction pairs one of each.
enum class Variance { Element, Functional };

/// Global term-count ceiling for sparse expansions; operations that would
/// grow past it throw CostExceeded. Default 10^6.
std::size_t term_ceiling();
void set_term_ceiling(std::size_t ceiling);

/// Sparse multilinear data over tuples of basis indices. Entries are kept
/// in lexicographic key order and never store zero coefficients.
class SparseTensor {
 public:
  SparseTensor() : variance_(Variance::Element), field_(FieldSpec::rationals()) {}
  SparseTensor(Variance v, const FieldSpec& f, std::vector<Index> dims);

  /// Arity-1 Element tensor e_i.
  static SparseTensor basis_element(const FieldSpec& f, Index dim, Index i);

  Variance variance() const { return variance_; }
  const std::vector<Index>& dims() const { return dims_; }
  std::size_t arity() const { return dims_.size(); }
  const FieldSpec& field() const { return field_; }
  std::size_t term_count() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  void add(const Key& k, const Scalar& c);  // accumulates; prunes zeros
  void set(const Key& k, const Scalar& c);
  Scalar coeff(const Key& k) const;

  const std::map<Key, Scalar>& entries() const { return entries_; }

  SparseTensor scaled(const Scalar& c) const;
  SparseTensor operator+(const SparseTensor& o) const;
  bool operator==(const SparseTensor& o) const;

  /// Result leg i is input leg perm[i].
  SparseTensor permuted(const std::vector<std::size_t>& perm) const;

 private:
  Variance variance_;
  FieldSpec field_;
  std::vector<Index> dims_;
  std::map<Key, Scalar> entries_;

  void check_key(const Key& k) const;
};

/// Tensor product; operands must share field and variance.
SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b);

/// Evaluation pairing ⟨f, x⟩ of a Functional against an Element of the
/// same shape: sum of products over the shared support.
Scalar contract(const SparseTensor& f, const SparseTensor& x);

/// Linear map between tensor powers of the basis space, stored sparsely as
/// a tensor of arity source+target keyed (source..., target...).
class LinMap {
 public:
  LinMap() = default;
  LinMap(const FieldSpec& f, std::vector<Index> source_dims, std::vector<Index> target_dims);
  static LinMap identity(const FieldSpec& f, Index dim);

  std::size_t source_arity() const { return source_dims_.size(); }
  std::size_t target_arity() const { return target_dims_.size(); }
  const std::vector<Index>& source_dims() const { return source_dims_; }
  const std::vector<Index>& target_dims() const { return target_dims_; }
  const FieldSpec& field() const { return data_.field(); }
  const SparseTensor& data() const { return data_; }

  void add(const Key& src, const Key& tgt, const Scalar& c);
  Scalar coeff(const Key& src, const Key& tgt) const;

  /// Image of a full Element tensor (x arity == source arity).
  SparseTensor apply(const SparseTensor& x) const;

  bool operator==(const LinMap& o) const;

 private:
  std::vector<Index> source_dims_, target_dims_;
  SparseTensor data_;
};

/// Applies a source-arity-1 map to one leg of a tensor; the leg is replaced
/// in place by the map's target legs (so arity changes for maps 1→k, k≠1).
SparseTensor apply_leg(const SparseTensor& t, std::size_t leg, const LinMap& m);

/// Δ^(m)(e_i): m successive sparse applications of the comultiplication to
/// the last leg; Δ^(0) is the identity. Result is an Element of arity m+1.
SparseTensor iterated_coproduct(const LinMap& comult, Index basis_index, unsigned m);

}  // namespace coquasi
