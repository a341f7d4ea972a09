#include "liecg/spin_flavor.hpp"

#include <numeric>
#include <tuple>

#include "common.hpp"
#include "liecg/once_map.hpp"
#include "liecg/parallel.hpp"

namespace liecg {

using namespace detail;

namespace {

SubgroupIrrep mu_of(int nf, const std::string& flavor, int mult) {
  return SubgroupIrrep{parse_irrep(nf, flavor), mult};
}

bool mu_rank_less(const SubgroupIrrep& a, const SubgroupIrrep& b) {
  if (a.spin_mult != b.spin_mult) return a.spin_mult > b.spin_mult;
  long long da = dimension(a.flavor), db = dimension(b.flavor);
  if (da != db) return da > db;
  return a.flavor.rows > b.flavor.rows;
}

std::pair<Weight, Weight> split_weight(const Weight& w, int nf) {
  Weight f(nf, 0), s(2, 0);
  for (int k = 0; k < 2 * nf; ++k) {
    f[k % nf] += w[k];
    s[k / nf] += w[k];
  }
  return {f, s};
}

bool dominant(const Weight& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

Pattern spin_pattern(const Weight& hw, int twice_jz) {
  int tot = hw[0] + hw[1];
  return Pattern{hw, Weight{(tot + twice_jz) / 2}};
}

}  // namespace

std::vector<AnchorSpec> anchors_for(int nf, const YoungDiagram& R) {
  const std::string l = display_label(R);
  std::vector<AnchorSpec> out;
  const int u_minus = nf;  // (u,-)
  if (nf == 4 && l == "63") {
    Pattern rho{{1, 0, 0, -1}, {1, 0, -1}, {1, -1}, {1}};
    Pattern zero{{0, 0, 0, 0}, {0, 0, 0}, {0, 0}, {0}};
    out.push_back({mu_of(4, "15", 1), mu_of(4, "15", 3), rho, rho, 0, 2, 0, u_minus});
    out.push_back({mu_of(4, "1", 3), mu_of(4, "15", 3), zero, rho, 2, 2, 0, 1});
  } else if (nf == 4 && l == "120") {
    Pattern sig{{2, 1, 0, 0}, {2, 1, 0}, {2, 0}, {2}};
    Pattern sigs{{3, 0, 0, 0}, {3, 0, 0}, {2, 0}, {2}};
    out.push_back({mu_of(4, "20", 2), mu_of(4, "20'", 4), sig, sigs, 1, 3, 0, u_minus});
  } else if (nf == 3 && l == "35") {
    Pattern rho{{1, 0, -1}, {1, -1}, {1}};
    Pattern zero{{0, 0, 0}, {0, 0}, {0}};
    out.push_back({mu_of(3, "8", 1), mu_of(3, "8", 3), rho, rho, 0, 2, 0, u_minus});
    out.push_back({mu_of(3, "1", 3), mu_of(3, "8", 3), zero, rho, 2, 2, 0, 1});
  } else if (nf == 3 && l == "56") {
    Pattern sig{{2, 1, 0}, {2, 0}, {2}};
    Pattern sigs{{3, 0, 0}, {2, 0}, {2}};
    out.push_back({mu_of(3, "8", 2), mu_of(3, "10", 4), sig, sigs, 1, 3, 0, u_minus});
  }
  return out;
}

namespace {

template <class F>
struct RawState {
  int block;
  Pattern fp;
  int tjz;
};

template <class F>
Index find_state(const std::vector<SubgroupIrrep>& mus, const std::vector<RawState<F>>& raw, const SubgroupIrrep& mu,
                 const Pattern& fp, int tjz) {
  for (Index k = 0; k < raw.size(); ++k)
    if (mus[raw[k].block] == mu && raw[k].fp == fp && raw[k].tjz == tjz) return k;
  throw Error(ErrorKind::Internal, "anchor state not found");
}

}  // namespace

template <class F>
F anchor_value(const FactorModel<F>& fm, const AnchorSpec& a) {
  std::vector<SubgroupIrrep> mus;
  for (auto& b : fm.blocks) mus.push_back(b.mu);
  std::vector<RawState<F>> raw(fm.states.size());
  for (Index k = 0; k < raw.size(); ++k) raw[k] = {fm.block_of[k], fm.flavor_pattern[k], fm.twice_jz[k]};
  Index bra = find_state(mus, raw, a.bra_mu, a.bra_pattern, a.bra_2jz);
  Index ket = find_state(mus, raw, a.ket_mu, a.ket_pattern, a.ket_2jz);
  return fm.model->ip(fm.states[bra], fm.model->apply(a.i, a.j, fm.states[ket]));
}

template <class F>
const FactorModel<F>& factor_model(int nf, const YoungDiagram& R0) {
  static OnceMap<std::pair<int, YoungDiagram>, FactorModel<F>> reg;
  YoungDiagram R = canonicalize(R0);
  if (R.n != 2 * nf) throw Error(ErrorKind::Usage, "irrep does not belong to SU(" + std::to_string(2 * nf) + ")");
  return reg.get({nf, R}, [&] {
    const int n = 2 * nf;
    FactorModel<F> fm;
    fm.nf = nf;
    fm.R = R;
    fm.label = display_label(R);
    fm.hw = physical_hw(R);
    std::vector<Slot> slots;
    for (int x : fm.hw)
      for (int k = 0; k < -x; ++k) slots.push_back(Slot::AntiFund);
    for (int x : fm.hw)
      for (int k = 0; k < x; ++k) slots.push_back(Slot::Fund);
    TensorSpace<F> t(n, slots);
    std::vector<SparseVec<F>> basis;
    for (Index i : t.states_of_weight(fm.hw)) basis.push_back(SparseVec<F>::unit(i));
    auto hv = joint_null_space(raising_ops<F>(t, n), basis, t.dim());
    if (hv.empty()) throw Error(ErrorKind::Internal, "no highest-weight vector for " + fm.label);
    GTBlock<F> whole = build_gt<F>(t, n, hv[0]);
    std::shared_ptr<const Model<F>> M0 = make_model<F>(t, whole.states, whole.norms);

    EmbeddingMap em{nf};
    ViewSpace<F> Vf(M0, em.flavor_map()), Vs(M0, em.spin_map());

    // subgroup highest weights
    std::map<std::pair<Weight, Weight>, std::vector<SparseVec<F>>> byH;
    for (Index k = 0; k < M0->dim(); ++k) byH[split_weight(M0->weight(k), nf)].push_back(SparseVec<F>::unit(k));
    std::vector<LinOp<F>> ops = raising_ops<F>(Vf, nf);
    ops.push_back([&Vs](const SparseVec<F>& v) { return Vs.apply(1, 0, v); });
    struct Cand {
      SubgroupIrrep mu;
      Weight fw, sw;
      SparseVec<F> v;
      int gamma, ngamma;
    };
    std::vector<Cand> cands;
    for (auto& [key, b] : byH) {
      const auto& [fw, sw] = key;
      if (!dominant(fw) || sw[0] < sw[1]) continue;
      auto ns = joint_null_space(ops, b, M0->dim());
      for (std::size_t g = 0; g < ns.size(); ++g)
        cands.push_back({SubgroupIrrep{diagram_of_weight(fw), sw[0] - sw[1] + 1}, fw, sw, ns[g], static_cast<int>(g),
                         static_cast<int>(ns.size())});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return mu_rank_less(a.mu, b.mu); });

    std::vector<SparseVec<F>> states;
    std::vector<RawState<F>> raw;
    long long total = 0;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      GTBlock<F> fg = build_gt<F>(Vf, nf, cands[c].v);
      const int tj = cands[c].sw[0] - cands[c].sw[1];
      for (std::size_t k = 0; k < fg.size(); ++k) {
        SparseVec<F> cur = fg.states[k];
        for (int s = 0; s <= tj; ++s) {
          if (cur.empty()) throw Error(ErrorKind::Internal, "spin multiplet ends early");
          states.push_back(cur);
          raw.push_back({static_cast<int>(c), fg.patterns[k], tj - 2 * s});
          cur = Vs.apply(0, 1, cur);
        }
      }
      total += static_cast<long long>(fg.size()) * (tj + 1);
    }
    if (total != static_cast<long long>(M0->dim()))
      throw Error(ErrorKind::IncompleteDecomposition, "subgroup content of " + fm.label + " does not add up");

    std::vector<SubgroupIrrep> mus;
    for (auto& c : cands) mus.push_back(c.mu);
    for (const AnchorSpec& a : anchors_for(nf, R)) {
      Index bra = find_state(mus, raw, a.bra_mu, a.bra_pattern, a.bra_2jz);
      Index ket = find_state(mus, raw, a.ket_mu, a.ket_pattern, a.ket_2jz);
      F v = M0->ip(states[bra], M0->apply(a.i, a.j, states[ket]));
      int sg = Field<F>::sign(v);
      if (sg == 0) throw Error(ErrorKind::ZeroAnchor, "anchor matrix element vanishes in " + fm.label);
      if (sg < 0)
        for (std::size_t k = 0; k < states.size(); ++k)
          if (raw[k].block == raw[bra].block) states[k] = scaled(states[k], F(-1));
    }

    std::vector<F> norms(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) norms[k] = M0->norm2(states[k]);
    fm.model = M0;
    fm.states = states;
    fm.norms = norms;
    for (auto& r : raw) {
      fm.block_of.push_back(r.block);
      fm.flavor_pattern.push_back(r.fp);
      fm.twice_jz.push_back(r.tjz);
    }

    for (std::size_t c = 0; c < cands.size(); ++c) {
      SubBlock<F> b;
      b.mu = cands[c].mu;
      b.flavor_hw = cands[c].fw;
      b.spin_hw = cands[c].sw;
      b.gamma = cands[c].gamma;
      b.ngamma = cands[c].ngamma;
      b.flavor = &abstract_irrep<F>(nf, canonical_of(b.flavor_hw));
      b.spin = &abstract_irrep<F>(2, Weight{b.spin_hw[0] - b.spin_hw[1], 0});
      const int fs = b.flavor_hw.back();
      std::map<std::pair<Pattern, int>, Index> where;
      for (Index k = 0; k < raw.size(); ++k)
        if (raw[k].block == static_cast<int>(c)) where[{raw[k].fp, raw[k].tjz}] = k;
      const auto& fa = *b.flavor;
      const auto& sa = *b.spin;
      const std::size_t dS = sa.patterns.size();
      const Index fref = fa.index.at(highest_pattern(fa.hw));
      const Index sref = sa.index.at(highest_pattern(sa.hw));
      auto locate = [&](Index a, Index s) {
        const Pattern& sp = sa.patterns[s];
        int tjz = 2 * sp[1][0] - sp[0][0] - sp[0][1];
        auto it = where.find({shifted(fa.patterns[a], fs), tjz});
        if (it == where.end()) throw Error(ErrorKind::Internal, "sub-block lacks a state");
        return it->second;
      };
      auto ratio = [&](Index a, Index s, Index k) {
        return F(fa.model->norms()[a] * sa.model->norms()[s] / norms[k]);
      };
      const F base = ratio(fref, sref, locate(fref, sref));
      b.index.resize(fa.patterns.size() * dS);
      b.kappa.resize(b.index.size());
      for (Index a = 0; a < fa.patterns.size(); ++a)
        for (Index s = 0; s < dS; ++s) {
          Index k = locate(a, s);
          b.index[a * dS + s] = k;
          b.kappa[a * dS + s] = (a == fref && s == sref) ? F(1) : field_sqrt<F>(F(ratio(a, s, k) / base));
        }
      fm.blocks.push_back(std::move(b));
    }
    return fm;
  });
}

namespace {

template <class F>
SparseVec<F> lift(const SpinFlavorCoupling<F>& C, const SFUncoupled<F>& u, const SparseVec<F>& fv,
                  const SparseVec<F>& sv) {
  const SubBlock<F>& B1 = C.R1->blocks[u.b1];
  const SubBlock<F>& B2 = C.R2->blocks[u.b2];
  const std::size_t dF2 = B2.flavor->model->dim();
  const std::size_t dS1 = B1.spin->model->dim(), dS2 = B2.spin->model->dim();
  Accum<F> acc;
  for (auto& [kf, xf] : fv.e) {
    Index a1 = static_cast<Index>(kf / dF2), a2 = static_cast<Index>(kf % dF2);
    for (auto& [ks, xs] : sv.e) {
      Index s1 = static_cast<Index>(ks / dS2), s2 = static_cast<Index>(ks % dS2);
      std::size_t p1 = a1 * dS1 + s1, p2 = a2 * dS2 + s2;
      F c = xf * xs * B1.kappa[p1] * B2.kappa[p2];
      const auto& v1 = C.R1->states[B1.index[p1]];
      const auto& v2 = C.R2->states[B2.index[p2]];
      for (auto& [i, x] : v1.e)
        for (auto& [j, y] : v2.e) acc.add(C.P->pair(i, j), F(c * x * y));
    }
  }
  return acc.take();
}

}  // namespace

template <class F>
SparseVec<F> uncoupled_state(const SpinFlavorCoupling<F>& C, const SFUncoupled<F>& u, const Pattern& flavor,
                             int twice_jz) {
  const auto& fb = u.fc->irreps[u.firr].block;
  const auto& sb = u.sc->irreps[u.sirr].block;
  const Weight& shw = u.sc->irreps[u.sirr].hw;
  return lift(C, u, fb.states[fb.at(shifted(flavor, -u.fshift))], sb.states[sb.at(spin_pattern(shw, twice_jz))]);
}

template <class F>
std::vector<std::pair<Weight, int>> SpinFlavorCoupling<F>::series() const {
  std::vector<std::pair<Weight, int>> out;
  for (auto& r : irreps)
    if (r.copy == 0) out.emplace_back(r.hw, r.ncopies);
  return out;
}

template <class F>
std::map<SubgroupIrrep, int> SpinFlavorCoupling<F>::content(std::size_t irrep) const {
  std::map<SubgroupIrrep, int> out;
  for (auto& r : rows)
    if (r.irrep == irrep) ++out[SubgroupIrrep{diagram_of_weight(groups[r.group].flavor_hw), groups[r.group].spin_mult}];
  return out;
}

template <class F>
const SpinFlavorCoupling<F>& couple_spin_flavor(int nf, const YoungDiagram& R1, const YoungDiagram& R2,
                                                SubOrder order) {
  static OnceMap<std::tuple<int, YoungDiagram, YoungDiagram, int>, SpinFlavorCoupling<F>> reg;
  return reg.get({nf, canonicalize(R1), canonicalize(R2), static_cast<int>(order)}, [&] {
    SpinFlavorCoupling<F> C;
    C.nf = nf;
    C.order = order;
    C.R1 = &factor_model<F>(nf, R1);
    C.R2 = &factor_model<F>(nf, R2);
    C.P = std::make_shared<ProductSpace<F>>(C.R1->model, C.R2->model);
    const ProductSpace<F>& P = *C.P;
    const int n = 2 * nf;

    // subgroup-coupled families
    for (int b1 = 0; b1 < static_cast<int>(C.R1->blocks.size()); ++b1)
      for (int b2 = 0; b2 < static_cast<int>(C.R2->blocks.size()); ++b2) {
        const SubBlock<F>& B1 = C.R1->blocks[b1];
        const SubBlock<F>& B2 = C.R2->blocks[b2];
        const Coupling<F>& fc = couple_abstract<F>(nf, B1.flavor->hw, B2.flavor->hw, SubOrder::First);
        const Coupling<F>& sc = couple_abstract<F>(2, B1.spin->hw, B2.spin->hw, SubOrder::First);
        for (std::size_t fi = 0; fi < fc.irreps.size(); ++fi)
          for (std::size_t sj = 0; sj < sc.irreps.size(); ++sj) {
            SFUncoupled<F> u;
            u.b1 = b1;
            u.b2 = b2;
            u.gamma = fc.irreps[fi].copy;
            u.ngamma = fc.irreps[fi].ncopies;
            u.fc = &fc;
            u.sc = &sc;
            u.firr = fi;
            u.sirr = sj;
            u.fshift = B1.flavor_hw.back() + B2.flavor_hw.back();
            u.sshift = B1.spin_hw[1] + B2.spin_hw[1];
            u.flavor_hw = add_shift(fc.irreps[fi].hw, u.fshift);
            const Weight& shw = sc.irreps[sj].hw;
            u.spin_mult = shw[0] - shw[1] + 1;
            const auto& fb = fc.irreps[fi].block;
            const auto& sb = sc.irreps[sj].block;
            u.state = lift(C, u, fb.states[fb.at(highest_pattern(fb.top()))], sb.states[sb.at(highest_pattern(shw))]);
            u.norm = P.norm2(u.state);
            C.uncoupled.push_back(std::move(u));
          }
      }
    auto key = [&](const SFUncoupled<F>& u) {
      return order == SubOrder::First ? std::make_tuple(u.b1, u.b2, u.gamma) : std::make_tuple(u.b2, u.b1, u.gamma);
    };
    std::stable_sort(C.uncoupled.begin(), C.uncoupled.end(),
                     [&](const auto& x, const auto& y) { return key(x) < key(y); });
    std::map<std::pair<Weight, int>, std::size_t> gidx;
    for (std::size_t k = 0; k < C.uncoupled.size(); ++k) {
      auto g = std::make_pair(C.uncoupled[k].flavor_hw, C.uncoupled[k].spin_mult);
      auto it = gidx.find(g);
      if (it == gidx.end()) {
        it = gidx.emplace(g, C.groups.size()).first;
        C.groups.push_back(SFGroup<F>{g.first, g.second, {}});
      }
      C.groups[it->second].us.push_back(k);
    }

    // Clebsch-Gordan series of the big group
    auto hws = highest_weight_vectors<F>(P, n);
    long long total = 0;
    for (auto& [w, vs] : hws) total += dimension_of_weight(w) * static_cast<long long>(vs.size());
    if (total != static_cast<long long>(P.dim()))
      throw Error(ErrorKind::IncompleteDecomposition, "Clebsch-Gordan series does not exhaust the product");
    auto tasks = classify_irreps(P, hws);
    for (auto& T : tasks) {
      if (T.count != 1) throw Error(ErrorKind::Internal, "repeated irreps within one exchange class");
      C.irreps.push_back(SFIrrep<F>{T.hw, T.first, T.ncopies, T.swap});
    }

    // invariants in each family group
    const std::size_t ng = C.groups.size();
    std::vector<std::vector<SparseOp<F>>> mats(ng);
    std::vector<std::vector<F>> metrics(ng);
    parallel_for(ng, [&](std::size_t g) {
      std::vector<const std::pair<SparseVec<F>, F>*> us;
      std::vector<std::pair<SparseVec<F>, F>> store;
      store.reserve(C.groups[g].us.size());
      for (std::size_t k : C.groups[g].us) {
        store.emplace_back(C.uncoupled[k].state, C.uncoupled[k].norm);
        metrics[g].push_back(C.uncoupled[k].norm);
      }
      for (auto& s : store) us.push_back(&s);
      mats[g].push_back(coordinate_matrix<F>(us, [&](const SparseVec<F>& v) { return P.X(v); }, P, F(0)));
      mats[g].push_back(coordinate_matrix<F>(us, [&](const SparseVec<F>& v) { return P.Y(v); }, P, F(0)));
      if (P.symmetric())
        mats[g].push_back(coordinate_matrix<F>(us, [&](const SparseVec<F>& v) { return P.swap(v); }, P, F(0)));
    });

    const std::size_t nt = tasks.size();
    std::vector<std::vector<SFCoupledRow<F>>> found(nt * ng);
    parallel_for(nt * ng, [&](std::size_t job) {
      const std::size_t t = job / ng, g = job % ng;
      const auto& T = tasks[t];
      std::vector<SparseOp<F>> ops{shift_diagonal(mats[g][0], T.x), shift_diagonal(mats[g][1], T.y)};
      if (T.swap) ops.push_back(shift_diagonal(mats[g][2], F(T.swap)));
      auto seeds = overlap_seeds(ops, metrics[g]);
      const auto& us = C.groups[g].us;
      for (std::size_t s = 0; s < seeds.size(); ++s) {
        SFCoupledRow<F> r;
        r.irrep = t;
        r.group = g;
        r.gamma = static_cast<int>(s);
        r.ngamma = static_cast<int>(seeds.size());
        r.norm = seeds[s].second;
        Accum<F> acc;
        for (auto& [k, a] : seeds[s].first.e) {
          acc.add(C.uncoupled[us[k]].state, a);
          SignedSq<F> v;
          v.sign = Field<F>::sign(a);
          v.sq = a * a * metrics[g][k] / r.norm;
          r.cols.emplace_back(us[k], v);
        }
        r.state = acc.take();
        found[job].push_back(std::move(r));
      }
    });
    for (std::size_t t = 0; t < nt; ++t) {
      long long d = 0;
      for (std::size_t g = 0; g < ng; ++g)
        d += static_cast<long long>(found[t * ng + g].size()) * dimension_of_weight(C.groups[g].flavor_hw) *
             C.groups[g].spin_mult;
      if (d != dimension_of_weight(tasks[t].hw))
        throw Error(ErrorKind::IncompleteDecomposition, "subgroup content of a coupled irrep does not add up");
    }
    for (auto& f : found)
      for (auto& r : f) C.rows.push_back(std::move(r));
    return C;
  });
}

template <class F>
void check_zeta(const SpinFlavorCoupling<F>& C) {
  const int nf = C.nf;
  EmbeddingMap em{nf};
  std::shared_ptr<const Space<F>> base = C.P;
  ViewSpace<F> Vf(base, em.flavor_map()), Vs(base, em.spin_map());
  parallel_for(C.groups.size(), [&](std::size_t g) {
    const auto& G = C.groups[g];
    std::map<std::tuple<std::size_t, Pattern, int>, std::pair<SparseVec<F>, F>> cache;
    auto ustate = [&](std::size_t k, const Pattern& p, int tjz) -> const std::pair<SparseVec<F>, F>& {
      auto key = std::make_tuple(k, p, tjz);
      auto it = cache.find(key);
      if (it == cache.end()) {
        SparseVec<F> v = uncoupled_state(C, C.uncoupled[k], p, tjz);
        F nv = C.P->norm2(v);
        it = cache.emplace(key, std::make_pair(std::move(v), nv)).first;
      }
      return it->second;
    };
    for (const auto& r : C.rows) {
      if (r.group != g) continue;
      std::map<std::size_t, SignedSq<F>> ref;
      for (auto& [k, v] : r.cols) ref[k] = v;
      GTBlock<F> fg = build_gt<F>(Vf, nf, r.state);
      const int tj = G.spin_mult - 1;
      for (std::size_t q = 0; q < fg.size(); ++q) {
        SparseVec<F> cur = fg.states[q];
        for (int s = 0; s <= tj; ++s) {
          const int tjz = tj - 2 * s;
          F nc = C.P->norm2(cur);
          for (std::size_t k : G.us) {
            const auto& [u, nu] = ustate(k, fg.patterns[q], tjz);
            F d = C.P->ip(u, cur);
            int sg = Field<F>::sign(d);
            auto it = ref.find(k);
            int want = it == ref.end() ? 0 : it->second.sign;
            if (sg != want || (sg && !same(F(d * d / (nu * nc)), it->second.sq)))
              throw Error(ErrorKind::ZetaDependence,
                          "scalar factor changes at " + pattern_str(fg.patterns[q]) + " 2Jz=" + std::to_string(tjz));
          }
          cur = Vs.apply(0, 1, cur);
        }
      }
    }
  });
}

template <class F>
std::vector<int> exchange_phases(const SpinFlavorCoupling<F>& ab, const SpinFlavorCoupling<F>* ba) {
  std::vector<int> out;
  for (const auto& r : ab.rows) {
    const auto& ir = ab.irreps[r.irrep];
    if (ab.P->symmetric()) {
      out.push_back(ir.swap);
      continue;
    }
    if (!ba) throw Error(ErrorKind::Internal, "reversed product needed for the exchange phase");
    const auto& G = ab.groups[r.group];
    int xi = 0;
    for (const auto& q : ba->rows) {
      const auto& iq = ba->irreps[q.irrep];
      const auto& Gq = ba->groups[q.group];
      if (iq.hw != ir.hw || iq.copy != ir.copy || Gq.flavor_hw != G.flavor_hw || Gq.spin_mult != G.spin_mult ||
          q.gamma != r.gamma)
        continue;
      SparseVec<F> y = swap_factors(q.state, ba->P->A().dim(), ba->P->B().dim());
      F d = ab.P->ip(r.state, y);
      if (Field<F>::sign(d) != 0 && same(F(d * d), F(r.norm * ab.P->norm2(y)))) xi = Field<F>::sign(d);
      break;
    }
    if (!xi) throw Error(ErrorKind::InconsistentXi, "no exchanged partner for a coupled row");
    out.push_back(xi);
  }
  return out;
}

#define LIECG_INST(F)                                                                                      \
  template const FactorModel<F>& factor_model<F>(int, const YoungDiagram&);                               \
  template F anchor_value<F>(const FactorModel<F>&, const AnchorSpec&);                                    \
  template struct SpinFlavorCoupling<F>;                                                                   \
  template const SpinFlavorCoupling<F>& couple_spin_flavor<F>(int, const YoungDiagram&, const YoungDiagram&, \
                                                              SubOrder);                                   \
  template SparseVec<F> uncoupled_state<F>(const SpinFlavorCoupling<F>&, const SFUncoupled<F>&,            \
                                           const Pattern&, int);                                           \
  template void check_zeta<F>(const SpinFlavorCoupling<F>&);                                               \
  template std::vector<int> exchange_phases<F>(const SpinFlavorCoupling<F>&, const SpinFlavorCoupling<F>*);
LIECG_INST(Rational)
LIECG_INST(double)
#undef LIECG_INST

}  // namespace liecg
