#include "liecg/coupling.hpp"

#include <numeric>
#include <tuple>

#include "common.hpp"
#include "liecg/once_map.hpp"
#include "liecg/parallel.hpp"

namespace liecg {

using namespace detail;

namespace {

bool canonical_hw(int m, const Weight& hw) {
  if (static_cast<int>(hw.size()) != m || hw.back() != 0) return false;
  for (int i = 0; i + 1 < m; ++i)
    if (hw[i] < hw[i + 1]) return false;
  return true;
}

}  // namespace

template <>
Rational field_sqrt<Rational>(const Rational& x) {
  Rational r;
  if (!exact_sqrt(x, r)) throw Error(ErrorKind::NotCommensurable, "scale " + x.get_str() + " is not a square");
  return r;
}
template <>
double field_sqrt<double>(const double& x) {
  return std::sqrt(x);
}

template <class F>
const AbstractIrrep<F>& abstract_irrep(int m, const Weight& hw) {
  static OnceMap<std::pair<int, Weight>, AbstractIrrep<F>> reg;
  if (!canonical_hw(m, hw)) throw Error(ErrorKind::Internal, "abstract irrep needs a canonical highest weight");
  return reg.get({m, hw}, [&] {
    AbstractIrrep<F> out;
    out.m = m;
    out.hw = hw;
    int k = std::accumulate(hw.begin(), hw.end(), 0);
    TensorSpace<F> t(m, std::vector<Slot>(k, Slot::Fund));
    std::vector<SparseVec<F>> basis;
    for (Index i : t.states_of_weight(hw)) basis.push_back(SparseVec<F>::unit(i));
    auto ns = joint_null_space(raising_ops<F>(t, m), basis, t.dim());
    if (ns.empty()) throw Error(ErrorKind::Internal, "no highest-weight vector in tensor power");
    GTBlock<F> b = build_gt<F>(t, m, ns[0]);
    out.model = make_model<F>(t, b.states, b.norms);
    out.patterns = b.patterns;
    for (Index i = 0; i < b.size(); ++i) out.index[b.patterns[i]] = i;
    return out;
  });
}

template <class F>
Embedding<F> embed(const AbstractIrrep<F>& abs, int shift, const std::vector<F>& norms,
                   const std::map<Pattern, Index>& where) {
  Embedding<F> e;
  const std::size_t d = abs.patterns.size();
  e.index.resize(d);
  e.kappa.resize(d);
  auto locate = [&](const Pattern& p) {
    auto it = where.find(shifted(p, shift));
    if (it == where.end()) throw Error(ErrorKind::Internal, "realized block lacks pattern " + pattern_str(p));
    return it->second;
  };
  const auto& an = abs.model->norms();
  Index ref = abs.index.at(highest_pattern(abs.hw));
  Index rref = locate(abs.patterns[ref]);
  F base = an[ref] / norms[rref];
  for (Index a = 0; a < d; ++a) {
    e.index[a] = locate(abs.patterns[a]);
    e.kappa[a] = a == ref ? F(1) : field_sqrt<F>(F(an[a] / norms[e.index[a]] / base));
  }
  return e;
}

namespace {

// v' in A'(x)B' coordinates -> P coordinates through two embeddings
template <class F>
SparseVec<F> transfer(const SparseVec<F>& v, std::size_t dB_abs, const Embedding<F>& e1, const Embedding<F>& e2,
                      const ProductSpace<F>& P) {
  Accum<F> acc;
  for (auto& [k, x] : v.e) {
    Index a = static_cast<Index>(k / dB_abs), b = static_cast<Index>(k % dB_abs);
    acc.add(P.pair(e1.index[a], e2.index[b]), x * e1.kappa[a] * e2.kappa[b]);
  }
  return acc.take();
}

// sub-block of an abstract level-m irrep with second row `row`, keyed by sub-pattern
std::map<Pattern, Index> sub_block(const std::vector<Pattern>& patterns, const Weight& row) {
  std::map<Pattern, Index> out;
  for (Index i = 0; i < patterns.size(); ++i)
    if (patterns[i].size() > 1 && patterns[i][1] == row) out[Pattern(patterns[i].begin() + 1, patterns[i].end())] = i;
  return out;
}

template <class F>
std::vector<Uncoupled<F>> build_uncoupled(const Coupling<F>& C) {
  const int m = C.m;
  std::vector<Uncoupled<F>> out;
  auto subs1 = ranked_subirreps(C.A->hw), subs2 = ranked_subirreps(C.B->hw);
  for (int r1 = 0; r1 < static_cast<int>(subs1.size()); ++r1)
    for (int r2 = 0; r2 < static_cast<int>(subs2.size()); ++r2) {
      const Weight &l1 = subs1[r1], &l2 = subs2[r2];
      Weight c1 = canonical_of(l1), c2 = canonical_of(l2);
      int s1 = l1.back(), s2 = l2.back();
      const auto& A1 = abstract_irrep<F>(m - 1, c1);
      const auto& B1 = abstract_irrep<F>(m - 1, c2);
      Embedding<F> e1 = embed(A1, s1, C.A->model->norms(), sub_block(C.A->patterns, l1));
      Embedding<F> e2 = embed(B1, s2, C.B->model->norms(), sub_block(C.B->patterns, l2));
      const Coupling<F>& sub = couple_abstract<F>(m - 1, c1, c2, SubOrder::First);
      for (const auto& ci : sub.irreps) {
        Uncoupled<F> u;
        u.nu1 = l1;
        u.nu2 = l2;
        u.rank1 = r1;
        u.rank2 = r2;
        u.nu = add_shift(ci.hw, s1 + s2);
        u.gamma = ci.copy;
        u.ngamma = ci.ncopies;
        for (std::size_t k = 0; k < ci.block.size(); ++k) {
          SparseVec<F> v = transfer(ci.block.states[k], B1.model->dim(), e1, e2, *C.P);
          F n = C.P->norm2(v);
          u.states.emplace(shifted(ci.block.patterns[k], s1 + s2), std::make_pair(std::move(v), n));
        }
        out.push_back(std::move(u));
      }
    }
  auto key = [&](const Uncoupled<F>& u) {
    return C.order == SubOrder::First ? std::make_tuple(u.rank1, u.rank2, u.gamma)
                                      : std::make_tuple(u.rank2, u.rank1, u.gamma);
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  return out;
}

}  // namespace

template <class F>
std::vector<std::pair<Weight, int>> Coupling<F>::series() const {
  std::vector<std::pair<Weight, int>> out;
  for (auto& ci : irreps)
    if (ci.copy == 0) out.emplace_back(ci.hw, ci.ncopies);
  return out;
}

template <class F>
const Coupling<F>& couple_abstract(int m, const Weight& a, const Weight& b, SubOrder order) {
  static OnceMap<std::tuple<int, Weight, Weight, int>, Coupling<F>> reg;
  return reg.get({m, a, b, static_cast<int>(order)}, [&] {
    Coupling<F> C;
    C.m = m;
    C.a = a;
    C.b = b;
    C.order = order;
    C.A = &abstract_irrep<F>(m, a);
    C.B = &abstract_irrep<F>(m, b);
    C.P = std::make_shared<ProductSpace<F>>(C.A->model, C.B->model);
    const ProductSpace<F>& P = *C.P;

    auto hws = highest_weight_vectors<F>(P, m);
    long long total = 0;
    for (auto& [w, vs] : hws) total += dimension_of_weight(w) * static_cast<long long>(vs.size());
    if (total != static_cast<long long>(P.dim()))
      throw Error(ErrorKind::IncompleteDecomposition, "Clebsch-Gordan series does not exhaust the product");

    if (m == 1) {
      CoupledIrrep<F> ci;
      ci.hw = hws.begin()->first;
      ci.block = build_gt<F>(P, 1, hws.begin()->second[0]);
      C.irreps.push_back(std::move(ci));
      return C;
    }
    C.uncoupled = build_uncoupled(C);

    auto tasks = classify_irreps(P, hws);
    std::vector<std::vector<CoupledIrrep<F>>> results(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t t) {
      const auto& T = tasks[t];
      const Weight nu_top = ranked_subirreps(T.hw)[0];
      const Pattern sub_hw = highest_pattern(nu_top);
      std::vector<const std::pair<SparseVec<F>, F>*> us;
      for (auto& u : C.uncoupled)
        if (u.nu == nu_top) us.push_back(&u.states.at(sub_hw));
      const std::size_t d = us.size();
      std::vector<SparseOp<F>> ops;
      ops.push_back(coordinate_matrix<F>(us, [&](const SparseVec<F>& v) { return P.X(v); }, P, T.x));
      ops.push_back(coordinate_matrix<F>(us, [&](const SparseVec<F>& v) { return P.Y(v); }, P, T.y));
      if (T.swap)
        ops.push_back(coordinate_matrix<F>(us, [&](const SparseVec<F>& v) { return P.swap(v); }, P, F(T.swap)));
      std::vector<F> metric(d);
      for (std::size_t k = 0; k < d; ++k) metric[k] = us[k]->second;
      auto seeds = overlap_seeds(ops, metric);
      if (static_cast<int>(seeds.size()) != T.count)
        throw Error(ErrorKind::Internal, "isotypic subspace has the wrong dimension");
      for (int s = 0; s < T.count; ++s) {
        Accum<F> acc;
        for (auto& [k, x] : seeds[s].first.e) acc.add(us[k]->first, x);
        SparseVec<F> seed = acc.take();
        SparseVec<F> top = raise_to_hw(P, m, seed);
        Weight wt = P.weight_of(top);
        if (Weight(wt.begin(), wt.begin() + m) != T.hw) throw Error(ErrorKind::Internal, "raised seed missed the highest weight");
        CoupledIrrep<F> ci;
        ci.hw = T.hw;
        ci.copy = T.first + s;
        ci.ncopies = T.ncopies;
        ci.swap = T.swap;
        ci.block = build_gt<F>(P, m, top);
        Pattern p{T.hw};
        p.insert(p.end(), sub_hw.begin(), sub_hw.end());
        const auto& st = ci.block.states[ci.block.at(p)];
        F ov = P.ip(st, seed);
        int sg = Field<F>::sign(ov);
        if (sg == 0) throw Error(ErrorKind::Internal, "coupled state orthogonal to its seed");
        if (sg < 0) ci.block.negate();
        results[t].push_back(std::move(ci));
      }
    });
    for (auto& r : results)
      for (auto& ci : r) C.irreps.push_back(std::move(ci));
    return C;
  });
}

template <class F>
std::vector<FlavorRow<F>> flavor_rows(const Coupling<F>& C, bool check_zeta) {
  const ProductSpace<F>& P = *C.P;
  struct Job {
    std::size_t irrep;
    Weight nu;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < C.irreps.size(); ++i)
    for (const Weight& nu : ranked_subirreps(C.irreps[i].hw)) jobs.push_back({i, nu});
  std::vector<FlavorRow<F>> rows(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t j) {
    const auto& ci = C.irreps[jobs[j].irrep];
    const Weight& nu = jobs[j].nu;
    FlavorRow<F> row;
    row.irrep = jobs[j].irrep;
    row.nu = nu;
    const Pattern sub_hw = highest_pattern(nu);
    auto full = [&](const Pattern& sp) {
      Pattern p{ci.hw};
      p.insert(p.end(), sp.begin(), sp.end());
      return p;
    };
    std::size_t h = ci.block.at(full(sub_hw));
    const auto& c = ci.block.states[h];
    const F& nc = ci.block.norms[h];
    F total(0);
    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < C.uncoupled.size(); ++k)
      if (C.uncoupled[k].nu == nu) cand.push_back(k);
    std::vector<SignedSq<F>> vals(cand.size());
    for (std::size_t q = 0; q < cand.size(); ++q) {
      const auto& [u, nu_] = C.uncoupled[cand[q]].states.at(sub_hw);
      F d = P.ip(u, c);
      vals[q].sign = Field<F>::sign(d);
      vals[q].sq = d * d / (nu_ * nc);
      if (vals[q].sign) {
        total += vals[q].sq;
        row.cols.emplace_back(cand[q], vals[q]);
      }
    }
    if (!same(total, F(1))) throw Error(ErrorKind::Internal, "scalar-factor row is not normalized");
    if (check_zeta) {
      for (std::size_t k = 0; k < ci.block.size(); ++k) {
        const Pattern& p = ci.block.patterns[k];
        if (p[1] != nu) continue;
        Pattern sp(p.begin() + 1, p.end());
        for (std::size_t q = 0; q < cand.size(); ++q) {
          const auto& [u, nu_] = C.uncoupled[cand[q]].states.at(sp);
          F d = P.ip(u, ci.block.states[k]);
          int sg = Field<F>::sign(d);
          if (sg != vals[q].sign || (sg && !same(F(d * d / (nu_ * ci.block.norms[k])), vals[q].sq)))
            throw Error(ErrorKind::ZetaDependence, "scalar factor changes at " + pattern_str(p));
        }
      }
    }
    rows[j] = std::move(row);
  });
  return rows;
}

template <class F>
std::vector<int> exchange_phases(const Coupling<F>& ab, const Coupling<F>* ba) {
  std::vector<int> out;
  for (const auto& ci : ab.irreps) {
    if (ab.P->symmetric()) {
      out.push_back(ci.swap);
      continue;
    }
    if (!ba) throw Error(ErrorKind::Internal, "reversed product needed for the exchange phase");
    const auto& x = ci.block.states[ci.block.at(highest_pattern(ci.hw))];
    F xx = ab.P->norm2(x);
    int xi = 0;
    for (const auto& cj : ba->irreps) {
      if (cj.hw != ci.hw) continue;
      SparseVec<F> y = swap_factors(cj.block.states[cj.block.at(highest_pattern(cj.hw))], ba->P->A().dim(),
                                    ba->P->B().dim());
      F d = ab.P->ip(x, y);
      if (Field<F>::sign(d) == 0) continue;
      if (!same(F(d * d), F(xx * ab.P->norm2(y)))) continue;
      xi = Field<F>::sign(d);
      break;
    }
    if (!xi) throw Error(ErrorKind::InconsistentXi, "no exchanged partner for a coupled irrep");
    out.push_back(xi);
  }
  return out;
}

#define LIECG_INST(F)                                                                                        \
  template const AbstractIrrep<F>& abstract_irrep<F>(int, const Weight&);                                   \
  template Embedding<F> embed<F>(const AbstractIrrep<F>&, int, const std::vector<F>&,                        \
                                 const std::map<Pattern, Index>&);                                           \
  template struct Coupling<F>;                                                                               \
  template const Coupling<F>& couple_abstract<F>(int, const Weight&, const Weight&, SubOrder);               \
  template std::vector<FlavorRow<F>> flavor_rows<F>(const Coupling<F>&, bool);                               \
  template std::vector<int> exchange_phases<F>(const Coupling<F>&, const Coupling<F>*);
LIECG_INST(Rational)
LIECG_INST(double)
#undef LIECG_INST

}  // namespace liecg
