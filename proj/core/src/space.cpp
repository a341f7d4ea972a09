#include "liecg/space.hpp"

#include <numeric>

namespace liecg {

template <class F>
F Space<F>::ip(const SparseVec<F>& a, const SparseVec<F>& b) const {
  F s(0);
  auto x = a.e.begin(), y = b.e.begin();
  while (x != a.e.end() && y != b.e.end()) {
    if (x->first < y->first) ++x;
    else if (y->first < x->first) ++y;
    else { s += x->second * y->second * metric(x->first); ++x; ++y; }
  }
  return s;
}

template <class F>
const std::vector<Index>& Space<F>::states_of_weight(const Weight& w) const {
  std::call_once(windex_once_, [this] {
    for (Index k = 0; k < dim(); ++k) windex_[weight(k)].push_back(k);
  });
  static const std::vector<Index> none;
  auto it = windex_.find(w);
  return it == windex_.end() ? none : it->second;
}

template <class F>
std::vector<Weight> Space<F>::weights() const {
  states_of_weight(Weight{});
  std::vector<Weight> out;
  for (auto& kv : windex_) out.push_back(kv.first);
  return out;
}

// ---------------------------------------------------------------- tensor space

template <class F>
TensorSpace<F>::TensorSpace(int n, std::vector<Slot> factors) : n_(n), factors_(std::move(factors)) {
  dim_ = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) dim_ *= static_cast<std::size_t>(n_);
  if (dim_ > (std::size_t(1) << 31)) throw Error(ErrorKind::Internal, "tensor space too large");
}

template <class F>
std::vector<int> TensorSpace<F>::word(Index k) const {
  std::vector<int> w(factors_.size());
  for (std::size_t p = factors_.size(); p-- > 0;) {
    w[p] = static_cast<int>(k % n_);
    k /= n_;
  }
  return w;
}

template <class F>
Index TensorSpace<F>::index(const std::vector<int>& w) const {
  Index k = 0;
  for (int x : w) k = k * n_ + x;
  return k;
}

template <class F>
Weight TensorSpace<F>::weight(Index k) const {
  Weight out(n_, 0);
  auto w = word(k);
  for (std::size_t p = 0; p < w.size(); ++p) out[w[p]] += factors_[p] == Slot::Fund ? 1 : -1;
  return out;
}

template <class F>
SparseVec<F> TensorSpace<F>::apply(int i, int j, const SparseVec<F>& v) const {
  Accum<F> acc;
  for (auto& [k, x] : v.e) {
    auto w = word(k);
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (factors_[p] == Slot::Fund && w[p] == i) {
        w[p] = j;
        acc.add(index(w), x);
        w[p] = i;
      } else if (factors_[p] == Slot::AntiFund && w[p] == j) {
        w[p] = i;
        acc.add(index(w), -x);
        w[p] = j;
      }
    }
  }
  return acc.take();
}

template <class F>
SparseOp<F> generator(const Space<F>& s, int i, int j, bool traceless) {
  SparseOp<F> op;
  op.dim = s.dim();
  op.cols.resize(s.dim());
  const int n = s.rank();
  for (Index k = 0; k < s.dim(); ++k) {
    SparseVec<F> img = s.apply(i, j, SparseVec<F>::unit(k));
    if (traceless && i == j) {
      Weight w = s.weight(k);
      int net = std::accumulate(w.begin(), w.end(), 0);
      if (net) img = axpy(img, F(-F(net) / F(n)), SparseVec<F>::unit(k));
    }
    op.cols[k] = std::move(img);
  }
  return op;
}

// ---------------------------------------------------------------- views

template <class F>
ViewSpace<F>::ViewSpace(std::shared_ptr<const Space<F>> base, std::vector<std::vector<int>> map)
    : base_(std::move(base)), map_(std::move(map)) {
  rank_ = map_.empty() ? 0 : static_cast<int>(map_[0].size());
}

template <class F>
SparseVec<F> ViewSpace<F>::apply(int i, int j, const SparseVec<F>& v) const {
  if (map_.size() == 1) return base_->apply(map_[0][i], map_[0][j], v);
  Accum<F> acc;
  for (auto& c : map_) acc.add(base_->apply(c[i], c[j], v));
  return acc.take();
}

template <class F>
Weight ViewSpace<F>::weight(Index k) const {
  Weight b = base_->weight(k), out(rank_, 0);
  for (auto& c : map_)
    for (int a = 0; a < rank_; ++a) out[a] += b[c[a]];
  return out;
}

EmbeddingMap product_embedding(int nf) {
  if (nf < 1) throw Error(ErrorKind::Usage, "bad flavor count");
  return EmbeddingMap{nf};
}

std::vector<std::vector<int>> EmbeddingMap::flavor_map() const {
  std::vector<std::vector<int>> m(2, std::vector<int>(nf));
  for (int s = 0; s < 2; ++s)
    for (int f = 0; f < nf; ++f) m[s][f] = index(f, s);
  return m;
}

std::vector<std::vector<int>> EmbeddingMap::spin_map() const {
  std::vector<std::vector<int>> m(nf, std::vector<int>(2));
  for (int f = 0; f < nf; ++f)
    for (int s = 0; s < 2; ++s) m[f][s] = index(f, s);
  return m;
}

std::vector<std::vector<int>> leading_map(int m) {
  std::vector<int> c(m);
  std::iota(c.begin(), c.end(), 0);
  return {c};
}

ChainCharges chain_charges(const Weight& w, int nf, bool spin) {
  Weight f(nf, 0);
  ChainCharges q;
  if (spin) {
    int up = 0, down = 0;
    for (int a = 0; a < nf; ++a) {
      f[a] = w[a] + w[nf + a];
      up += w[a];
      down += w[nf + a];
    }
    q.Jz = Rational(up - down, 2);
  } else {
    for (int a = 0; a < nf && a < static_cast<int>(w.size()); ++a) f[a] = w[a];
    q.Jz = 0;
  }
  q.Iz = nf >= 2 ? Rational(f[0] - f[1], 2) : Rational(0);
  q.Y = nf >= 3 ? Rational(f[0] + f[1] - 2 * f[2], 3) : Rational(0);
  q.C = nf >= 4 ? Rational(f[3]) : Rational(0);
  q.Iz.canonicalize();
  q.Y.canonicalize();
  q.Jz.canonicalize();
  return q;
}

// ---------------------------------------------------------------- models

template <class F>
Model<F>::Model(int n, std::vector<F> norms, std::vector<Weight> weights, std::vector<SparseOp<F>> gens)
    : n_(n), norms_(std::move(norms)), weights_(std::move(weights)), gens_(std::move(gens)) {}

template <class F>
SparseVec<F> Model<F>::apply(int i, int j, const SparseVec<F>& v) const {
  return liecg::apply(op(i, j), v);
}

template <class F>
const SparseOp<F>& Model<F>::op2(int i, int j) const {
  std::call_once(sq_once_, [this] {
    sq_.resize(static_cast<std::size_t>(n_) * n_);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        SparseOp<F>& o = sq_[x * n_ + y];
        o.dim = dim();
        o.cols.resize(dim());
        for (Index k = 0; k < dim(); ++k) {
          Accum<F> acc;
          for (int z = 0; z < n_; ++z) {
            // e^x_z e^z_y: apply e^z_y first
            for (auto& [l, c] : op(z, y).cols[k].e) acc.add(op(x, z).cols[l], c);
          }
          o.cols[k] = acc.take();
        }
      }
  });
  return sq_[i * n_ + j];
}

template <class F>
std::shared_ptr<Model<F>> make_model(const Space<F>& parent, const std::vector<SparseVec<F>>& states,
                                     const std::vector<F>& norms) {
  const int n = parent.rank();
  const std::size_t d = states.size();
  // inverted index: parent basis state -> (model state, coordinate * metric)
  std::map<Index, std::vector<std::pair<Index, F>>> inv;
  for (Index l = 0; l < d; ++l)
    for (auto& [k, x] : states[l].e) inv[k].emplace_back(l, x * parent.metric(k));
  std::vector<Weight> weights(d);
  for (Index l = 0; l < d; ++l) weights[l] = parent.weight_of(states[l]);
  std::vector<SparseOp<F>> gens(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseOp<F>& op = gens[i * n + j];
      op.dim = d;
      op.cols.resize(d);
      for (Index k = 0; k < d; ++k) {
        SparseVec<F> w = parent.apply(i, j, states[k]);
        if (vanishes(w, states[k])) continue;
        Accum<F> acc;
        for (auto& [p, x] : w.e) {
          auto it = inv.find(p);
          if (it == inv.end()) throw Error(ErrorKind::Internal, "model span is not invariant");
          for (auto& [l, y] : it->second) acc.add(l, x * y);
        }
        SparseVec<F> c = acc.take();
        F tot(0);
        for (auto& [l, y] : c.e) {
          y /= norms[l];
          tot += y * y * norms[l];
        }
        F ww = parent.norm2(w);
        bool ok;
        if constexpr (Field<F>::exact) ok = (tot == ww);
        else ok = std::fabs(tot - ww) <= 1e-8 * std::max(1.0, std::fabs(ww));
        if (!ok) throw Error(ErrorKind::Internal, "model span is not invariant");
        op.cols[k] = std::move(c);
      }
    }
  return std::make_shared<Model<F>>(n, norms, std::move(weights), std::move(gens));
}

// ---------------------------------------------------------------- products

template <class F>
ProductSpace<F>::ProductSpace(std::shared_ptr<const Model<F>> a, std::shared_ptr<const Model<F>> b)
    : a_(std::move(a)), b_(std::move(b)), da_(a_->dim()), db_(b_->dim()) {
  if (a_->rank() != b_->rank()) throw Error(ErrorKind::Internal, "rank mismatch in product");
}

template <class F>
Weight ProductSpace<F>::weight(Index k) const {
  Weight w = a_->weight(first(k)), wb = b_->weight(second(k));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
  return w;
}

template <class F>
SparseVec<F> ProductSpace<F>::apply(int i, int j, const SparseVec<F>& v) const {
  Accum<F> acc;
  const auto& oa = a_->op(i, j);
  const auto& ob = b_->op(i, j);
  for (auto& [k, x] : v.e) {
    Index a = first(k), b = second(k);
    for (auto& [a2, c] : oa.cols[a].e) acc.add(pair(a2, b), x * c);
    for (auto& [b2, c] : ob.cols[b].e) acc.add(pair(a, b2), x * c);
  }
  return acc.take();
}

template <class F>
SparseVec<F> ProductSpace<F>::X(const SparseVec<F>& v) const {
  const int n = rank();
  Accum<F> acc;
  for (auto& [k, x] : v.e) {
    Index a = first(k), b = second(k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& ca = a_->op(i, j).cols[a];
        if (ca.empty()) continue;
        const auto& cb = b_->op(j, i).cols[b];
        for (auto& [a2, p] : ca.e)
          for (auto& [b2, q] : cb.e) acc.add(pair(a2, b2), x * p * q);
      }
  }
  return acc.take();
}

template <class F>
SparseVec<F> ProductSpace<F>::Y(const SparseVec<F>& v) const {
  const int n = rank();
  Accum<F> acc;
  for (auto& [k, x] : v.e) {
    Index a = first(k), b = second(k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& ca2 = a_->op2(i, j).cols[a];
        const auto& cb = b_->op(j, i).cols[b];
        for (auto& [a2, p] : ca2.e)
          for (auto& [b2, q] : cb.e) acc.add(pair(a2, b2), x * p * q);
        const auto& ca = a_->op(i, j).cols[a];
        const auto& cb2 = b_->op2(j, i).cols[b];
        for (auto& [a2, p] : ca.e)
          for (auto& [b2, q] : cb2.e) acc.add(pair(a2, b2), x * p * q);
      }
  }
  return acc.take();
}

template <class F>
SparseVec<F> swap_factors(const SparseVec<F>& v, std::size_t dA, std::size_t dB) {
  std::vector<std::pair<Index, F>> e;
  e.reserve(v.size());
  for (auto& [k, x] : v.e) e.emplace_back(static_cast<Index>((k % dB) * dA + k / dB), x);
  (void)dA;
  std::sort(e.begin(), e.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  SparseVec<F> out;
  out.e = std::move(e);
  return out;
}

template <class F>
SparseVec<F> ProductSpace<F>::swap(const SparseVec<F>& v) const {
  if (!symmetric()) throw Error(ErrorKind::Internal, "swap on a non-symmetric product");
  return swap_factors(v, da_, db_);
}

#define LIECG_INST(F)                                                                               \
  template class Space<F>;                                                                          \
  template class TensorSpace<F>;                                                                    \
  template class ViewSpace<F>;                                                                      \
  template class Model<F>;                                                                          \
  template class ProductSpace<F>;                                                                   \
  template SparseOp<F> generator<F>(const Space<F>&, int, int, bool);                               \
  template std::shared_ptr<Model<F>> make_model<F>(const Space<F>&, const std::vector<SparseVec<F>>&, \
                                                   const std::vector<F>&);                          \
  template SparseVec<F> swap_factors<F>(const SparseVec<F>&, std::size_t, std::size_t);
LIECG_INST(Rational)
LIECG_INST(double)
#undef LIECG_INST

}  // namespace liecg
