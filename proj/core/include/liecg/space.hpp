#pragma once

#include <memory>
#include <mutex>
#include <map>
#include <vector>

#include "liecg/irrep.hpp"
#include "liecg/sparse.hpp"

namespace liecg {

// A carrier space with a gl(rank) action. Generators are the raw e^i_j, which move a
// fundamental index i to j; the traceless E^i_j differ by a multiple of the identity on
// each weight space. Basis states are orthogonal with squared norms given by metric().
template <class F>
class Space {
 public:
  virtual ~Space() = default;
  virtual std::size_t dim() const = 0;
  virtual int rank() const = 0;
  virtual SparseVec<F> apply(int i, int j, const SparseVec<F>& v) const = 0;
  virtual F metric(Index k) const = 0;
  // letter counts: fundamental letters count +1, antifundamental -1
  virtual Weight weight(Index k) const = 0;

  F ip(const SparseVec<F>& a, const SparseVec<F>& b) const;
  F norm2(const SparseVec<F>& a) const { return ip(a, a); }
  Weight weight_of(const SparseVec<F>& v) const { return weight(v.e.front().first); }
  // basis states of a given weight (lazily indexed)
  const std::vector<Index>& states_of_weight(const Weight& w) const;
  std::vector<Weight> weights() const;

 private:
  mutable std::once_flag windex_once_;
  mutable std::map<Weight, std::vector<Index>> windex_;
};

enum class Slot { Fund, AntiFund };

// Tensor product of (anti)fundamental factors; basis index is the mixed-radix word with
// the first factor most significant.
template <class F>
class TensorSpace : public Space<F> {
 public:
  TensorSpace(int n, std::vector<Slot> factors);
  std::size_t dim() const override { return dim_; }
  int rank() const override { return n_; }
  SparseVec<F> apply(int i, int j, const SparseVec<F>& v) const override;
  F metric(Index) const override { return F(1); }
  Weight weight(Index k) const override;

  std::vector<int> word(Index k) const;
  Index index(const std::vector<int>& word) const;
  const std::vector<Slot>& factors() const { return factors_; }

 private:
  int n_;
  std::vector<Slot> factors_;
  std::size_t dim_;
};

// Matrix of e^i_j (raw) or E^i_j = e^i_j - delta_ij (net letters)/n (traceless).
template <class F>
SparseOp<F> generator(const Space<F>& s, int i, int j, bool traceless = true);

// Restriction of the action to a subalgebra: generator (a,b) of the view is the sum over
// copies c of base generator (map[c][a], map[c][b]).
template <class F>
class ViewSpace : public Space<F> {
 public:
  ViewSpace(std::shared_ptr<const Space<F>> base, std::vector<std::vector<int>> map);
  std::size_t dim() const override { return base_->dim(); }
  int rank() const override { return rank_; }
  SparseVec<F> apply(int i, int j, const SparseVec<F>& v) const override;
  F metric(Index k) const override { return base_->metric(k); }
  Weight weight(Index k) const override;
  const Space<F>& base() const { return *base_; }

 private:
  std::shared_ptr<const Space<F>> base_;
  std::vector<std::vector<int>> map_;
  int rank_;
};

// Index order (flavor f, spin s) -> s*nf + f.
struct EmbeddingMap {
  int nf = 4;
  int index(int f, int s) const { return s * nf + f; }
  std::vector<std::vector<int>> flavor_map() const;  // copies over spin
  std::vector<std::vector<int>> spin_map() const;    // copies over flavor
};
EmbeddingMap product_embedding(int nf);
// Restriction of SU(n) to the SU(m) acting on the first m indices.
std::vector<std::vector<int>> leading_map(int m);

// Physical charges of a letter-count weight of SU(8) or SU(6) (index order above), or of
// SU(4)/SU(3) flavor weights.
struct ChainCharges {
  Rational C, Y, Iz, Jz;
};
ChainCharges chain_charges(const Weight& w, int nf, bool spin);

// An invariant subspace presented in an orthogonal basis u_l with squared norms N_l.
// e^i_j u_k = sum_l c_lk u_l, with c_lk = <u_l, e u_k> / N_l.
template <class F>
class Model : public Space<F> {
 public:
  Model(int n, std::vector<F> norms, std::vector<Weight> weights, std::vector<SparseOp<F>> gens);
  std::size_t dim() const override { return norms_.size(); }
  int rank() const override { return n_; }
  SparseVec<F> apply(int i, int j, const SparseVec<F>& v) const override;
  F metric(Index k) const override { return norms_[k]; }
  Weight weight(Index k) const override { return weights_[k]; }

  const SparseOp<F>& op(int i, int j) const { return gens_[i * n_ + j]; }
  // (e e)^i_j = sum_z e^i_z e^z_j
  const SparseOp<F>& op2(int i, int j) const;
  const std::vector<F>& norms() const { return norms_; }

 private:
  int n_;
  std::vector<F> norms_;
  std::vector<Weight> weights_;
  std::vector<SparseOp<F>> gens_;
  mutable std::once_flag sq_once_;
  mutable std::vector<SparseOp<F>> sq_;
};

// Builds the model of span(states) inside `parent`. States must be orthogonal weight
// vectors spanning an invariant subspace; `norms` are their squared norms.
template <class F>
std::shared_ptr<Model<F>> make_model(const Space<F>& parent, const std::vector<SparseVec<F>>& states,
                                     const std::vector<F>& norms);

// A (x) B with index a*dim(B) + b.
template <class F>
class ProductSpace : public Space<F> {
 public:
  ProductSpace(std::shared_ptr<const Model<F>> a, std::shared_ptr<const Model<F>> b);
  std::size_t dim() const override { return da_ * db_; }
  int rank() const override { return a_->rank(); }
  SparseVec<F> apply(int i, int j, const SparseVec<F>& v) const override;
  F metric(Index k) const override { return a_->metric(k / db_) * b_->metric(k % db_); }
  Weight weight(Index k) const override;

  Index pair(Index a, Index b) const { return static_cast<Index>(a * db_ + b); }
  Index first(Index k) const { return static_cast<Index>(k / db_); }
  Index second(Index k) const { return static_cast<Index>(k % db_); }
  const Model<F>& A() const { return *a_; }
  const Model<F>& B() const { return *b_; }
  bool symmetric() const { return a_ == b_; }

  // sum_{ij} A^i_j (x) B^j_i
  SparseVec<F> X(const SparseVec<F>& v) const;
  // sum_{xy} (AA)^x_y (x) B^y_x + A^x_y (x) (BB)^y_x
  SparseVec<F> Y(const SparseVec<F>& v) const;
  // exchange of the two factors (symmetric products only)
  SparseVec<F> swap(const SparseVec<F>& v) const;

 private:
  std::shared_ptr<const Model<F>> a_, b_;
  std::size_t da_, db_;
};

// |p,q> in A(x)B  ->  |q,p> in B(x)A
template <class F>
SparseVec<F> swap_factors(const SparseVec<F>& v, std::size_t dA, std::size_t dB);

}  // namespace liecg
