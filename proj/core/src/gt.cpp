#include "liecg/gt.hpp"

#include <deque>
#include <numeric>
#include <sstream>

namespace liecg {

Weight pattern_weight(const Pattern& p) {
  const std::size_t m = p.size();
  Weight w(m, 0);
  int prev = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    const Weight& row = p[m - k];
    int s = std::accumulate(row.begin(), row.end(), 0);
    w[k - 1] = s - prev;
    prev = s;
  }
  return w;
}

Pattern shifted(Pattern p, int s) {
  for (auto& r : p)
    for (auto& x : r) x += s;
  return p;
}

Pattern highest_pattern(const Weight& top) {
  Pattern p;
  for (std::size_t k = top.size(); k >= 1; --k) p.emplace_back(top.begin(), top.begin() + k);
  return p;
}

std::string pattern_str(const Pattern& p) {
  std::ostringstream os;
  for (std::size_t r = 0; r < p.size(); ++r) {
    os << (r ? " " : "") << "(";
    for (std::size_t i = 0; i < p[r].size(); ++i) os << (i ? "," : "") << p[r][i];
    os << ")";
  }
  return os.str();
}

bool sub_rank_less(const Weight& a, const Weight& b) {
  long long da = dimension_of_weight(a), db = dimension_of_weight(b);
  if (da != db) return da > db;
  auto ca = diagram_of_weight(a).rows, cb = diagram_of_weight(b).rows;
  if (ca != cb) return ca > cb;
  return a > b;
}

std::vector<Weight> ranked_subirreps(const Weight& row) {
  auto v = interlacing(row);
  std::stable_sort(v.begin(), v.end(), sub_rank_less);
  return v;
}

template <class F>
std::size_t GTBlock<F>::at(const Pattern& p) const {
  auto it = index.find(p);
  if (it == index.end()) throw Error(ErrorKind::Internal, "pattern " + pattern_str(p) + " not in block");
  return it->second;
}

template <class F>
void GTBlock<F>::negate() {
  for (auto& s : states)
    for (auto& e : s.e) e.second = -e.second;
}

template <class F>
std::vector<LinOp<F>> raising_ops(const Space<F>& s, int m) {
  std::vector<LinOp<F>> ops;
  for (int i = 0; i + 1 < m; ++i) ops.push_back([&s, i](const SparseVec<F>& v) { return s.apply(i + 1, i, v); });
  return ops;
}

template <class F>
bool is_dominant_hw(const Space<F>& s, int m, const SparseVec<F>& v) {
  for (int i = 0; i + 1 < m; ++i)
    if (!vanishes(s.apply(i + 1, i, v), v)) return false;
  return true;
}

template <class F>
SparseVec<F> raise_to_hw(const Space<F>& s, int m, SparseVec<F> v) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i + 1 < m; ++i) {
      SparseVec<F> w = s.apply(i + 1, i, v);
      if (!vanishes(w, v)) {
        v = normalized(std::move(w));
        moved = true;
        break;
      }
    }
  }
  return v;
}

namespace {

template <class F>
struct WeightSpace {
  Echelon<F> ech;
  std::vector<SparseVec<F>> basis;
};

// Span of the module generated from hw by level-m lowering operators, per weight.
template <class F>
std::map<Weight, WeightSpace<F>> lowering_module(const Space<F>& s, int m, const SparseVec<F>& hw) {
  std::map<Weight, WeightSpace<F>> ws;
  std::deque<std::pair<Weight, SparseVec<F>>> todo;
  Weight w0 = s.weight_of(hw);
  ws[w0].ech.add(hw);
  ws[w0].basis.push_back(hw);
  todo.emplace_back(w0, hw);
  while (!todo.empty()) {
    auto [w, v] = std::move(todo.front());
    todo.pop_front();
    for (int i = 0; i + 1 < m; ++i) {
      SparseVec<F> img = s.apply(i, i + 1, v);
      if (vanishes(img, v)) continue;
      Weight w2 = w;
      w2[i] -= 1;
      w2[i + 1] += 1;
      auto& t = ws[w2];
      if (t.ech.add(img)) {
        img = normalized(std::move(img));
        t.basis.push_back(img);
        todo.emplace_back(w2, std::move(img));
      }
    }
  }
  return ws;
}

template <class F>
GTBlock<F> build_rec(const Space<F>& s, int m, const SparseVec<F>& hw) {
  GTBlock<F> out;
  Weight full = s.weight_of(hw);
  Weight top(full.begin(), full.begin() + m);
  if (m == 1) {
    out.states.push_back(hw);
    out.patterns.push_back({top});
    return out;
  }
  auto module = lowering_module(s, m, hw);
  const int total = std::accumulate(top.begin(), top.end(), 0);
  for (const Weight& sub : ranked_subirreps(top)) {
    Weight w = full;
    for (int i = 0; i + 1 < m; ++i) w[i] = sub[i];
    w[m - 1] = total - std::accumulate(sub.begin(), sub.end(), 0);
    auto it = module.find(w);
    if (it == module.end()) throw Error(ErrorKind::Internal, "missing sub-irrep weight space");
    SparseVec<F> v;
    if (w == full) {
      v = hw;
    } else if (m - 1 == 1) {
      if (it->second.basis.size() != 1) throw Error(ErrorKind::Internal, "sub-irrep weight space not simple");
      v = it->second.basis[0];
    } else {
      auto ns = joint_null_space(raising_ops(s, m - 1), it->second.basis, s.dim());
      if (ns.size() != 1) throw Error(ErrorKind::Internal, "sub-irrep highest weight not unique");
      v = std::move(ns[0]);
    }
    GTBlock<F> b = build_rec(s, m - 1, v);
    for (std::size_t k = 0; k < b.size(); ++k) {
      Pattern p{top};
      p.insert(p.end(), b.patterns[k].begin(), b.patterns[k].end());
      out.states.push_back(std::move(b.states[k]));
      out.patterns.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

template <class F>
GTBlock<F> build_gt(const Space<F>& s, int m, const SparseVec<F>& hw) {
  if (hw.empty()) throw Error(ErrorKind::Internal, "empty highest-weight vector");
  GTBlock<F> b = build_rec(s, m, hw);
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) b.index[b.patterns[k]] = k;
  Weight full = s.weight_of(hw);
  std::size_t h = b.at(highest_pattern(Weight(full.begin(), full.begin() + m)));
  b.states[h] = hw;
  // sign fixing along lowering edges
  std::map<Weight, std::vector<std::size_t>> byw;
  std::vector<Weight> wk(n);
  for (std::size_t k = 0; k < n; ++k) {
    wk[k] = s.weight_of(b.states[k]);
    byw[wk[k]].push_back(k);
  }
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> todo{h};
  seen[h] = 1;
  while (!todo.empty()) {
    std::size_t k = todo.front();
    todo.pop_front();
    for (int i = 0; i + 1 < m; ++i) {
      SparseVec<F> img = s.apply(i, i + 1, b.states[k]);
      if (vanishes(img, b.states[k])) continue;
      Weight w2 = wk[k];
      w2[i] -= 1;
      w2[i + 1] += 1;
      auto it = byw.find(w2);
      if (it == byw.end()) throw Error(ErrorKind::Internal, "lowering leaves the block");
      for (std::size_t l : it->second) {
        F ov = s.ip(b.states[l], img);
        int sg = Field<F>::sign(ov);
        if (sg == 0) continue;
        if (!seen[l]) {
          if (sg < 0)
            for (auto& e : b.states[l].e) e.second = -e.second;
          seen[l] = 1;
          todo.push_back(l);
        } else if (sg < 0) {
          throw Error(ErrorKind::PhaseObstruction, "negative lowering element at " + pattern_str(b.patterns[l]));
        }
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!seen[k]) throw Error(ErrorKind::Internal, "state unreachable from the highest weight");
  b.norms.resize(n);
  for (std::size_t k = 0; k < n; ++k) b.norms[k] = s.norm2(b.states[k]);
  return b;
}

template <class F>
bool baird_ok(const Space<F>& s, int m, const GTBlock<F>& b) {
  std::map<Weight, std::vector<std::size_t>> byw;
  for (std::size_t k = 0; k < b.size(); ++k) byw[s.weight_of(b.states[k])].push_back(k);
  for (std::size_t k = 0; k < b.size(); ++k)
    for (int i = 0; i + 1 < m; ++i) {
      SparseVec<F> img = s.apply(i, i + 1, b.states[k]);
      if (vanishes(img, b.states[k])) continue;
      auto it = byw.find(s.weight_of(img));
      if (it == byw.end()) return false;
      for (std::size_t l : it->second)
        if (Field<F>::sign(s.ip(b.states[l], img)) < 0) return false;
    }
  return true;
}

template <class F>
std::map<Weight, std::vector<SparseVec<F>>> highest_weight_vectors(const Space<F>& s, int m,
                                                                   const std::vector<Index>* restrict_to) {
  std::map<Weight, std::vector<Index>> cand;
  if (restrict_to) {
    for (Index k : *restrict_to) cand[s.weight(k)].push_back(k);
  } else {
    for (const Weight& w : s.weights()) cand[w] = s.states_of_weight(w);
  }
  std::map<Weight, std::vector<SparseVec<F>>> out;
  auto ops = raising_ops(s, m);
  for (auto& [w, idx] : cand) {
    bool dom = true;
    for (int i = 0; i + 1 < m; ++i)
      if (w[i] < w[i + 1]) dom = false;
    if (!dom) continue;
    std::vector<SparseVec<F>> basis;
    for (Index k : idx) basis.push_back(SparseVec<F>::unit(k));
    auto ns = joint_null_space(ops, basis, s.dim());
    if (!ns.empty()) out[w] = std::move(ns);
  }
  return out;
}

template <class F>
std::vector<GTBlock<F>> decompose_group(const Space<F>& s, const std::vector<SparseVec<F>>* restrict_to) {
  const int m = s.rank();
  std::map<Weight, std::vector<SparseVec<F>>> hws;
  std::size_t expect = s.dim();
  if (restrict_to) {
    expect = restrict_to->size();
    std::map<Weight, std::vector<SparseVec<F>>> byw;
    for (auto& v : *restrict_to) byw[s.weight_of(v)].push_back(v);
    auto ops = raising_ops(s, m);
    for (auto& [w, basis] : byw) {
      auto ns = joint_null_space(ops, basis, s.dim());
      if (!ns.empty()) hws[w] = std::move(ns);
    }
  } else {
    hws = highest_weight_vectors(s, m);
  }
  std::vector<GTBlock<F>> out;
  std::size_t total = 0;
  for (auto it = hws.rbegin(); it != hws.rend(); ++it) {
    // copies with the same highest weight: orthogonalize under the space metric
    std::vector<std::pair<SparseVec<F>, F>> o2;
    for (auto& v : it->second) {
      SparseVec<F> x = v;
      for (auto& [u, n] : o2) x = axpy(x, F(-s.ip(u, v) / n), u);
      if (vanishes(x, v)) continue;
      F nn = s.norm2(x);
      o2.emplace_back(std::move(x), nn);
    }
    for (auto& [v, n] : o2) {
      out.push_back(build_gt(s, m, normalized(v)));
      total += out.back().size();
    }
  }
  if (total != expect)
    throw Error(ErrorKind::IncompleteDecomposition,
                std::to_string(total) + " of " + std::to_string(expect) + " states resolved");
  return out;
}

#define LIECG_INST(F)                                                                                    \
  template struct GTBlock<F>;                                                                            \
  template GTBlock<F> build_gt<F>(const Space<F>&, int, const SparseVec<F>&);                            \
  template SparseVec<F> raise_to_hw<F>(const Space<F>&, int, SparseVec<F>);                              \
  template std::vector<LinOp<F>> raising_ops<F>(const Space<F>&, int);                                   \
  template bool is_dominant_hw<F>(const Space<F>&, int, const SparseVec<F>&);                            \
  template std::map<Weight, std::vector<SparseVec<F>>> highest_weight_vectors<F>(const Space<F>&, int,   \
                                                                                 const std::vector<Index>*); \
  template std::vector<GTBlock<F>> decompose_group<F>(const Space<F>&, const std::vector<SparseVec<F>>*); \
  template bool baird_ok<F>(const Space<F>&, int, const GTBlock<F>&);
LIECG_INST(Rational)
LIECG_INST(double)
#undef LIECG_INST

}  // namespace liecg
