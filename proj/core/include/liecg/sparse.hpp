#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "liecg/exact_arith.hpp"

namespace liecg {

using Index = std::uint32_t;

// Row pivot choice inside the incremental eliminations. Results never depend on it.
enum class PivotRule { SmallestBitSize, FirstIndex };
PivotRule pivot_rule();
void set_pivot_rule(PivotRule r);

template <class F>
struct SparseVec {
  std::vector<std::pair<Index, F>> e;  // strictly increasing indices, no zeros

  bool empty() const { return e.empty(); }
  std::size_t size() const { return e.size(); }
  const F* find(Index i) const {
    auto it = std::lower_bound(e.begin(), e.end(), i, [](const auto& p, Index k) { return p.first < k; });
    return (it != e.end() && it->first == i) ? &it->second : nullptr;
  }
  F at(Index i) const {
    const F* p = find(i);
    return p ? *p : F(0);
  }
  static SparseVec unit(Index i) {
    SparseVec v;
    v.e.emplace_back(i, F(1));
    return v;
  }
  bool operator==(const SparseVec& o) const { return e == o.e; }
};

template <class F>
struct SparseOp {
  std::size_t dim = 0;
  std::vector<SparseVec<F>> cols;  // cols[k] = image of basis vector k
};

namespace detail {
inline void prune(std::vector<std::pair<Index, Rational>>& v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const auto& p) { return sgn(p.second) == 0; }), v.end());
}
inline void prune(std::vector<std::pair<Index, double>>& v) {
  double mx = 0;
  for (auto& p : v) mx = std::max(mx, std::fabs(p.second));
  const double cut = std::max(1e-300, mx * 1e-12);
  v.erase(std::remove_if(v.begin(), v.end(), [cut](const auto& p) { return std::fabs(p.second) <= cut; }), v.end());
}
}  // namespace detail

// Collects (index, value) contributions, then sorts and combines them.
template <class F>
class Accum {
 public:
  void reserve(std::size_t n) { buf_.reserve(n); }
  void add(Index i, const F& x) { buf_.emplace_back(i, x); }
  void add(const SparseVec<F>& v) {
    for (auto& p : v.e) buf_.push_back(p);
  }
  void add(const SparseVec<F>& v, const F& s) {
    for (auto& p : v.e) buf_.emplace_back(p.first, p.second * s);
  }
  SparseVec<F> take() {
    SparseVec<F> out;
    std::stable_sort(buf_.begin(), buf_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& p : buf_) {
      if (!out.e.empty() && out.e.back().first == p.first)
        out.e.back().second += p.second;
      else
        out.e.push_back(std::move(p));
    }
    buf_.clear();
    detail::prune(out.e);
    return out;
  }

 private:
  std::vector<std::pair<Index, F>> buf_;
};

template <class F>
F dot(const SparseVec<F>& v, const SparseVec<F>& w) {
  F s(0);
  auto a = v.e.begin(), b = w.e.begin();
  while (a != v.e.end() && b != w.e.end()) {
    if (a->first < b->first) ++a;
    else if (b->first < a->first) ++b;
    else { s += a->second * b->second; ++a; ++b; }
  }
  return s;
}

// Inner product with a diagonal metric (squared norms of the basis states).
template <class F>
F dot(const SparseVec<F>& v, const SparseVec<F>& w, const std::vector<F>& metric) {
  F s(0);
  auto a = v.e.begin(), b = w.e.begin();
  while (a != v.e.end() && b != w.e.end()) {
    if (a->first < b->first) ++a;
    else if (b->first < a->first) ++b;
    else { s += a->second * b->second * metric[a->first]; ++a; ++b; }
  }
  return s;
}

// v + s*w
template <class F>
SparseVec<F> axpy(const SparseVec<F>& v, const F& s, const SparseVec<F>& w) {
  SparseVec<F> out;
  out.e.reserve(v.size() + w.size());
  auto a = v.e.begin(), b = w.e.begin();
  while (a != v.e.end() || b != w.e.end()) {
    if (b == w.e.end() || (a != v.e.end() && a->first < b->first)) {
      out.e.push_back(*a++);
    } else if (a == v.e.end() || b->first < a->first) {
      out.e.emplace_back(b->first, b->second * s);
      ++b;
    } else {
      F x = a->second + b->second * s;
      out.e.emplace_back(a->first, std::move(x));
      ++a; ++b;
    }
  }
  detail::prune(out.e);
  return out;
}

template <class F>
SparseVec<F> scaled(SparseVec<F> v, const F& s) {
  for (auto& p : v.e) p.second *= s;
  detail::prune(v.e);
  return v;
}

template <class F>
SparseVec<F> apply(const SparseOp<F>& op, const SparseVec<F>& v) {
  Accum<F> acc;
  for (auto& [k, x] : v.e)
    if (k < op.cols.size()) acc.add(op.cols[k], x);
  return acc.take();
}

inline Rational primitive_factor(const SparseVec<Rational>& v) {
  if (v.empty()) return Rational(1);
  Integer g = 0, l = 1;
  for (auto& p : v.e) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.second.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.second.get_den_mpz_t());
  }
  Rational f(l, abs(g));
  f.canonicalize();
  return f;
}
inline double primitive_factor(const SparseVec<double>& v) {
  double mx = 0;
  for (auto& p : v.e) mx = std::max(mx, std::fabs(p.second));
  return mx > 0 ? 1.0 / mx : 1.0;
}

// Positive rescaling to a canonical representative: primitive integer vector (exact) or
// unit max-norm (floating point). Signs are kept.
template <class F>
SparseVec<F> normalized(SparseVec<F> v) {
  F f = primitive_factor(v);
  for (auto& p : v.e) p.second *= f;
  return v;
}

template <class F>
F max_abs(const SparseVec<F>& v) {
  F m(0);
  for (auto& p : v.e) {
    F a = Field<F>::abs(p.second);
    if (a > m) m = a;
  }
  return m;
}

// Operator image counted as zero: empty, or for double tiny next to the source vector.
template <class F>
bool vanishes(const SparseVec<F>& img, const SparseVec<F>& src) {
  if constexpr (Field<F>::exact) {
    (void)src;
    return img.empty();
  } else {
    return img.empty() || max_abs(img) <= 1e-9 * std::max(max_abs(src), 1e-300);
  }
}

// Incremental column elimination. Column k is dependent iff it lies in the span of the
// columns before it; the dependency is expressed over the earlier independent columns,
// which makes it independent of the pivot rule.
template <class F>
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track), rule_(pivot_rule()) {}

  bool add(const SparseVec<F>& col, SparseVec<F>* dep = nullptr) {
    Index k = static_cast<Index>(ncols_++);
    SparseVec<F> v = col;
    SparseVec<F> comb;
    if (track_) comb = SparseVec<F>::unit(k);
    F scale = max_abs(col);
    reduce(v, track_ ? &comb : nullptr);
    if (is_null(v, scale)) {
      if (dep) *dep = std::move(comb);
      return false;
    }
    Row r;
    F f = primitive_factor(v);
    r.v = scaled(std::move(v), f);
    if (track_) r.comb = scaled(std::move(comb), f);
    choose_pivot(r);
    rows_.push_back(std::move(r));
    return true;
  }

  bool in_span(const SparseVec<F>& col) const {
    SparseVec<F> v = col;
    F scale = max_abs(col);
    reduce(v, nullptr);
    return is_null(v, scale);
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return ncols_; }

 private:
  struct Row {
    SparseVec<F> v;
    Index piv = 0;
    F pivval;
    SparseVec<F> comb;
  };

  static bool is_null(const SparseVec<F>& v, const F& scale) {
    if constexpr (Field<F>::exact) {
      (void)scale;
      return v.empty();
    } else {
      return v.empty() || max_abs(v) <= 1e-8 * std::max(scale, 1e-300);
    }
  }

  void choose_pivot(Row& r) const {
    std::size_t best = 0;
    if constexpr (Field<F>::exact) {
      if (rule_ == PivotRule::SmallestBitSize) {
        std::size_t bc = Field<F>::cost(r.v.e[0].second);
        for (std::size_t i = 1; i < r.v.e.size(); ++i) {
          std::size_t c = Field<F>::cost(r.v.e[i].second);
          if (c < bc) { bc = c; best = i; }
        }
      }
    } else {
      double bv = std::fabs(r.v.e[0].second);
      for (std::size_t i = 1; i < r.v.e.size(); ++i)
        if (std::fabs(r.v.e[i].second) > bv * (1 + 1e-12)) { bv = std::fabs(r.v.e[i].second); best = i; }
    }
    r.piv = r.v.e[best].first;
    r.pivval = r.v.e[best].second;
  }

  void reduce(SparseVec<F>& v, SparseVec<F>* comb) const {
    for (const Row& r : rows_) {
      const F* x = v.find(r.piv);
      if (!x) continue;
      F c = -(*x) / r.pivval;
      v = axpy(v, c, r.v);
      if constexpr (!Field<F>::exact) {
        auto it = std::lower_bound(v.e.begin(), v.e.end(), r.piv, [](const auto& p, Index k) { return p.first < k; });
        if (it != v.e.end() && it->first == r.piv) v.e.erase(it);
      }
      if (comb) *comb = axpy(*comb, c, r.comb);
    }
  }

  bool track_;
  PivotRule rule_;
  std::size_t ncols_ = 0;
  std::vector<Row> rows_;
};

template <class F>
using LinOp = std::function<SparseVec<F>(const SparseVec<F>&)>;

template <class F>
LinOp<F> as_linop(const SparseOp<F>& op) {
  return [&op](const SparseVec<F>& v) { return apply(op, v); };
}

// Basis of {v in span(basis) : op(v) = 0 for all ops}. `stride` bounds the ambient index range.
template <class F>
std::vector<SparseVec<F>> joint_null_space(const std::vector<LinOp<F>>& ops, const std::vector<SparseVec<F>>& basis,
                                           std::size_t stride) {
  if (ops.empty()) return basis;
  Echelon<F> ech(true);
  std::vector<SparseVec<F>> out;
  for (const auto& b : basis) {
    Accum<F> acc;
    for (std::size_t j = 0; j < ops.size(); ++j) {
      SparseVec<F> img = ops[j](b);
      for (auto& [i, x] : img.e) acc.add(static_cast<Index>(j * stride + i), x);
    }
    SparseVec<F> img = acc.take();
    if (vanishes(img, b)) img = SparseVec<F>{};
    SparseVec<F> dep;
    if (!ech.add(std::move(img), &dep)) {
      Accum<F> v;
      for (auto& [k, t] : dep.e) v.add(basis[k], t);
      SparseVec<F> nv = v.take();
      if (!nv.empty()) out.push_back(normalized(std::move(nv)));
    }
  }
  return out;
}

template <class F>
std::vector<SparseVec<F>> joint_null_space(const std::vector<SparseOp<F>>& ops, const std::vector<SparseVec<F>>& basis) {
  std::vector<LinOp<F>> fs;
  std::size_t stride = 1;
  for (auto& op : ops) {
    fs.push_back(as_linop(op));
    stride = std::max(stride, op.dim);
  }
  for (auto& b : basis)
    if (!b.empty()) stride = std::max<std::size_t>(stride, b.e.back().first + 1);
  return joint_null_space(fs, basis, stride);
}

// Classical Gram-Schmidt without normalization; returns (vector, squared norm) pairs.
template <class F>
std::vector<std::pair<SparseVec<F>, F>> orthogonalize(const std::vector<SparseVec<F>>& vs,
                                                      const std::vector<F>* metric = nullptr) {
  auto ip = [metric](const SparseVec<F>& a, const SparseVec<F>& b) { return metric ? dot(a, b, *metric) : dot(a, b); };
  std::vector<std::pair<SparseVec<F>, F>> out;
  for (const auto& v : vs) {
    SparseVec<F> w = v;
    for (auto& [u, n] : out) {
      F c = ip(u, v) / n;
      if (!Field<F>::zero(c)) w = axpy(w, F(-c), u);
    }
    if constexpr (!Field<F>::exact) {
      if (max_abs(w) <= 1e-8 * std::max(max_abs(v), 1e-300)) continue;
    }
    if (w.empty()) continue;
    F n = ip(w, w);
    out.emplace_back(std::move(w), std::move(n));
  }
  return out;
}

}  // namespace liecg
