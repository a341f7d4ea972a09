#pragma once

// Helpers shared by the flavor and spin-flavor coupling code.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "liecg/errors.hpp"
#include "liecg/space.hpp"

namespace liecg::detail {

inline Weight canonical_of(const Weight& row) {
  Weight c = row;
  for (auto& x : c) x -= row.back();
  return c;
}

inline Weight add_shift(Weight w, int s) {
  for (auto& x : w) x += s;
  return w;
}

template <class F>
bool nonzero(const SparseVec<F>& v) {
  if constexpr (Field<F>::exact) return !v.empty();
  else return max_abs(v) > 1e-9;
}

template <class F>
bool same(const F& a, const F& b) {
  if constexpr (Field<F>::exact) return a == b;
  else return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

template <class F>
F rayleigh(const Space<F>& P, const SparseVec<F>& h, const SparseVec<F>& img) {
  F x = P.ip(h, img) / P.norm2(h);
  SparseVec<F> r = axpy(img, F(-x), h);
  if (nonzero(r)) throw Error(ErrorKind::Internal, "product invariant is not scalar on a highest weight");
  return x;
}

// matrix of op in the orthogonal family us (vector, squared norm), minus shift on the diagonal
template <class F>
SparseOp<F> coordinate_matrix(const std::vector<const std::pair<SparseVec<F>, F>*>& us,
                              const std::function<SparseVec<F>(const SparseVec<F>&)>& op, const Space<F>& P,
                              const F& shift) {
  const std::size_t d = us.size();
  SparseOp<F> M;
  M.dim = d;
  M.cols.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    SparseVec<F> img = op(us[k]->first);
    Accum<F> acc;
    for (std::size_t l = 0; l < d; ++l) {
      F c = P.ip(us[l]->first, img) / us[l]->second;
      if (l == k) c -= shift;
      acc.add(static_cast<Index>(l), c);
    }
    M.cols[k] = acc.take();
  }
  return M;
}

template <class F>
SparseOp<F> shift_diagonal(SparseOp<F> M, const F& s) {
  for (std::size_t k = 0; k < M.dim; ++k) {
    SparseVec<F> e;
    e.e.emplace_back(static_cast<Index>(k), F(-s));
    M.cols[k] = axpy(M.cols[k], F(1), e);
  }
  return M;
}

// One irrep class of a product: highest weight, the two invariants and, in symmetric
// products, the exchange eigenvalue. `count` copies, numbered from `first` of `ncopies`.
template <class F>
struct IrrepClass {
  Weight hw;
  F x, y;
  int swap = 0;
  int count = 1;
  int ncopies = 1;
  int first = 0;
};

// Classes from the highest-weight vectors, highest weight first.
template <class F>
std::vector<IrrepClass<F>> classify_irreps(const ProductSpace<F>& P,
                                           const std::map<Weight, std::vector<SparseVec<F>>>& hws) {
  std::vector<IrrepClass<F>> out;
  std::vector<std::pair<F, F>> seen;
  for (auto it = hws.rbegin(); it != hws.rend(); ++it) {
    const auto& H = it->second;
    F x = rayleigh(P, H[0], P.X(H[0]));
    F y = rayleigh(P, H[0], P.Y(H[0]));
    for (auto& [sx, sy] : seen)
      if (same(sx, x) && same(sy, y)) throw Error(ErrorKind::Internal, "product invariants do not separate irreps");
    seen.emplace_back(x, y);
    int n = static_cast<int>(H.size());
    if (P.symmetric()) {
      Echelon<F> ep, em;
      for (auto& h : H) {
        SparseVec<F> s = P.swap(h);
        ep.add(axpy(h, F(1), s));
        em.add(axpy(h, F(-1), s));
      }
      int np = static_cast<int>(ep.rank()), nm = static_cast<int>(em.rank());
      if (np + nm != n) throw Error(ErrorKind::Internal, "exchange classes do not add up");
      if (np) out.push_back({it->first, x, y, 1, np, n, 0});
      if (nm) out.push_back({it->first, x, y, -1, nm, n, np});
    } else {
      out.push_back({it->first, x, y, 0, n, n, 0});
    }
  }
  return out;
}

// Joint null space of `ops` (coordinates over an orthogonal family with squared norms
// `metric`), resolved by successive maximum overlap: the projection of each family member
// in order, orthogonalized against the earlier ones. Returns the coefficient vectors.
template <class F>
std::vector<std::pair<SparseVec<F>, F>> overlap_seeds(const std::vector<SparseOp<F>>& ops, const std::vector<F>& metric) {
  const std::size_t d = metric.size();
  std::vector<SparseVec<F>> unit;
  for (std::size_t k = 0; k < d; ++k) unit.push_back(SparseVec<F>::unit(static_cast<Index>(k)));
  auto null = joint_null_space(ops, unit);
  auto onull = orthogonalize(null, &metric);
  std::vector<std::pair<SparseVec<F>, F>> seeds;
  for (std::size_t k = 0; k < d && seeds.size() < onull.size(); ++k) {
    Accum<F> acc;
    for (auto& [nv, nn] : onull) acc.add(nv, F(nv.at(static_cast<Index>(k)) * metric[k] / nn));
    SparseVec<F> p = acc.take();
    for (auto& [sv, sn] : seeds) p = axpy(p, F(-dot(sv, p, metric) / sn), sv);
    if (!nonzero(p)) continue;
    F pn = dot(p, p, metric);
    seeds.emplace_back(std::move(p), pn);
  }
  if (seeds.size() != onull.size()) throw Error(ErrorKind::Internal, "not enough coupled seeds");
  return seeds;
}

}  // namespace liecg::detail
