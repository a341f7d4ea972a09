#include "liecg/engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "common.hpp"
#include "liecg/errors.hpp"
#include "liecg/once_map.hpp"

namespace liecg {

using namespace detail;

std::string copy_label(int copy, int ncopies) { return ncopies > 1 ? std::string(1, "sab"[copy]) : std::string(); }

std::string irrep_label(const Weight& hw, int copy, int ncopies) {
  std::string l = display_label(diagram_of_weight(hw));
  if (ncopies > 1) l += "_" + copy_label(copy, ncopies);
  return l;
}

std::string charge_str(const Rational& q0) {
  Rational q = q0;
  q.canonicalize();
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

namespace {

struct Factor {
  YoungDiagram d;
  std::string label;
  Weight hw;      // canonical
  Weight phys;    // physical letter counts
  int shift = 0;  // phys - hw
};

Factor factor(int n, const std::string& s) {
  Factor f;
  f.d = parse_irrep(n, s);
  f.label = display_label(f.d);
  f.hw = f.d.rows;
  f.hw.resize(n, 0);
  f.phys = physical_hw(f.d);
  f.shift = f.phys.back();
  return f;
}

Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

int total(const Weight& w) { return std::accumulate(w.begin(), w.end(), 0); }

// charges of a level m-1 row inside a physical level-m row
Rational su4_charm(const Weight& top, const Weight& sub) { return Rational(total(top) - total(sub)); }
Rational su3_isospin(const Weight& sub) { return frac(sub[0] - sub[1], 2); }
Rational su3_hypercharge(const Weight& top, const Weight& sub) { return frac(3 * total(sub) - 2 * total(top), 3); }

struct RowKey {
  std::string block;
  Rational q1, q2;
  std::string R;
  int copy = 0, gamma = 0;
};

bool key_less(const RowKey& a, const RowKey& b) {
  if (a.block != b.block) return label_less(a.block, b.block);
  if (a.q1 != b.q1) return a.q1 < b.q1;
  if (a.q2 != b.q2) return a.q2 < b.q2;
  if (a.R != b.R) return label_less(a.R, b.R);
  if (a.copy != b.copy) return a.copy < b.copy;
  return a.gamma < b.gamma;
}

template <class F>
SignedSq<F> mul(const SignedSq<F>& a, const SignedSq<F>& b) {
  return SignedSq<F>{a.sign * b.sign, F(a.sq * b.sq)};
}

// Columns of one row. In symmetric products the pair (x,y), (y,x) is merged into one
// column tagged S or A, worth sqrt(2) times the (x,y) entry.
template <class F>
std::vector<SFColumn<F>> make_columns(const std::vector<std::pair<std::size_t, SignedSq<F>>>& cols,
                                      const std::function<std::size_t(std::size_t)>& partner,
                                      const std::function<SFColumn<F>(std::size_t)>& column) {
  std::vector<SFColumn<F>> out;
  std::map<std::size_t, SignedSq<F>> val(cols.begin(), cols.end());
  std::set<std::size_t> done;
  for (auto& [k, v] : cols) {
    if (done.count(k)) continue;
    SFColumn<F> c = column(k);
    c.value = v;
    std::size_t p = partner(k);
    if (p != static_cast<std::size_t>(-1)) {
      auto it = val.find(p);
      if (it == val.end() || !same(it->second.sq, v.sq))
        throw Error(ErrorKind::Internal, "exchanged columns of a symmetric product differ in size");
      c.sym = it->second.sign == v.sign ? "S" : "A";
      c.value.sq = v.sq * F(2);
      done.insert(p);
    }
    done.insert(k);
    out.push_back(std::move(c));
  }
  return out;
}

template <class F>
SFTable<F> sort_rows(Chain c, const Factor& A, const Factor& B, std::vector<std::pair<RowKey, SFTableRow<F>>> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return key_less(x.first, y.first); });
  SFTable<F> t;
  t.chain = c;
  t.R1 = A.label;
  t.R2 = B.label;
  for (auto& [k, r] : rows) t.rows.push_back(std::move(r));
  return t;
}

template <class F>
SFTable<F> flavor_table(Chain c, const std::string& R1, const std::string& R2, const EngineOptions& opt) {
  const int m = chain_rank(c);
  Factor A = factor(m, R1), B = factor(m, R2);
  const Coupling<F>& C = couple_abstract<F>(m, A.hw, B.hw, SubOrder::First);
  auto frows = flavor_rows(C, opt.check_zeta);
  const Coupling<F>* ba = C.P->symmetric() ? nullptr : &couple_abstract<F>(m, B.hw, A.hw, opt.reversed_order.value_or(SubOrder::First));
  auto xi = exchange_phases(C, ba);

  auto name = [&](const Factor& f, const Weight& sub_canonical) {
    Weight sub = add_shift(sub_canonical, f.shift);
    if (c == Chain::SU4) return name_state(c, f.label, display_label(diagram_of_weight(sub)), su4_charm(f.phys, sub));
    return name_state(c, f.label, "", su3_isospin(sub), su3_hypercharge(f.phys, sub));
  };
  auto column = [&](std::size_t k) {
    const auto& u = C.uncoupled[k];
    SFColumn<F> col;
    col.mu1 = name(A, u.nu1);
    col.mu2 = name(B, u.nu2);
    col.gammap = copy_label(u.gamma, u.ngamma);
    return col;
  };
  auto partner = [&](std::size_t k) {
    const auto& u = C.uncoupled[k];
    if (!C.P->symmetric() || u.rank1 == u.rank2) return static_cast<std::size_t>(-1);
    for (std::size_t j = 0; j < C.uncoupled.size(); ++j) {
      const auto& v = C.uncoupled[j];
      if (v.rank1 == u.rank2 && v.rank2 == u.rank1 && v.gamma == u.gamma && v.nu == u.nu) return j;
    }
    throw Error(ErrorKind::Internal, "no exchanged partner column");
  };

  const int s = A.shift + B.shift;
  std::vector<std::pair<RowKey, SFTableRow<F>>> rows;
  for (const auto& fr : frows) {
    const auto& ci = C.irreps[fr.irrep];
    Weight top = add_shift(ci.hw, s), nu = add_shift(fr.nu, s);
    RowKey key;
    SFTableRow<F> row;
    row.R = display_label(diagram_of_weight(ci.hw));
    row.sigma = copy_label(ci.copy, ci.ncopies);
    row.xi = xi[fr.irrep];
    key.R = row.R;
    key.copy = ci.copy;
    if (c == Chain::SU4) {
      key.block = display_label(diagram_of_weight(nu));
      key.q1 = su4_charm(top, nu);
      row.mu = key.block + "," + charge_str(key.q1);
    } else {
      key.q1 = su3_isospin(nu);
      key.q2 = su3_hypercharge(top, nu);
      row.mu = charge_str(key.q1) + "," + charge_str(key.q2);
    }
    row.cols = make_columns<F>(fr.cols, partner, column);
    rows.emplace_back(std::move(key), std::move(row));
  }
  return sort_rows(c, A, B, std::move(rows));
}

template <class F>
SFTable<F> spin_flavor_table(Chain c, const std::string& R1, const std::string& R2, const EngineOptions& opt) {
  const int nf = chain_flavors(c);
  Factor A = factor(2 * nf, R1), B = factor(2 * nf, R2);
  const SpinFlavorCoupling<F>& C = couple_spin_flavor<F>(nf, A.d, B.d, SubOrder::First);
  if (opt.check_zeta) check_zeta(C);
  const SpinFlavorCoupling<F>* ba =
      C.P->symmetric() ? nullptr : &couple_spin_flavor<F>(nf, B.d, A.d, opt.reversed_order.value_or(SubOrder::Second));
  auto xi = exchange_phases(C, ba);

  auto name = [&](const Factor& f, const FactorModel<F>& fm, int b) {
    const auto& blk = fm.blocks[b];
    return name_state(c, f.label, display_label(blk.mu.flavor), frac(blk.mu.spin_mult - 1, 2));
  };
  auto column = [&](std::size_t k) {
    const auto& u = C.uncoupled[k];
    SFColumn<F> col;
    col.mu1 = name(A, *C.R1, u.b1);
    col.mu2 = name(B, *C.R2, u.b2);
    col.gammap = copy_label(u.gamma, u.ngamma);
    return col;
  };
  auto partner = [&](std::size_t k) {
    const auto& u = C.uncoupled[k];
    if (!C.P->symmetric() || u.b1 == u.b2) return static_cast<std::size_t>(-1);
    for (std::size_t j = 0; j < C.uncoupled.size(); ++j) {
      const auto& v = C.uncoupled[j];
      if (v.b1 == u.b2 && v.b2 == u.b1 && v.gamma == u.gamma && v.flavor_hw == u.flavor_hw &&
          v.spin_mult == u.spin_mult)
        return j;
    }
    throw Error(ErrorKind::Internal, "no exchanged partner column");
  };

  std::vector<std::pair<RowKey, SFTableRow<F>>> rows;
  for (std::size_t i = 0; i < C.rows.size(); ++i) {
    const auto& r = C.rows[i];
    const auto& ir = C.irreps[r.irrep];
    const auto& G = C.groups[r.group];
    RowKey key;
    SFTableRow<F> row;
    row.R = display_label(diagram_of_weight(ir.hw));
    row.sigma = copy_label(ir.copy, ir.ncopies);
    key.block = display_label(diagram_of_weight(G.flavor_hw));
    key.q1 = G.spin_mult;
    key.R = row.R;
    key.copy = ir.copy;
    key.gamma = r.gamma;
    row.mu = key.block + "_" + std::to_string(G.spin_mult);
    row.gamma = copy_label(r.gamma, r.ngamma);
    row.xi = xi[i];
    row.cols = make_columns<F>(r.cols, partner, column);
    rows.emplace_back(std::move(key), std::move(row));
  }
  return sort_rows(c, A, B, std::move(rows));
}

const std::vector<std::pair<std::string, std::string>>& known_products(Chain c) {
  static const std::vector<std::pair<std::string, std::string>> su8{{"63", "63"}, {"120", "63"}};
  static const std::vector<std::pair<std::string, std::string>> su6{{"35", "35"}, {"56", "35"}};
  static const std::vector<std::pair<std::string, std::string>> none;
  return c == Chain::SU8 ? su8 : c == Chain::SU6 ? su6 : none;
}

std::string block_label(const std::string& flavor, int mult, int gamma, int ngamma) {
  if (ngamma > 1) return flavor + "_{" + copy_label(gamma, ngamma) + "," + std::to_string(mult) + "}";
  return flavor + "_" + std::to_string(mult);
}

std::vector<ReducedEntry> entries_from_counts(const std::map<SubgroupIrrep, int>& counts) {
  std::vector<ReducedEntry> out;
  for (auto& [mu, k] : counts)
    for (int g = 0; g < k; ++g) {
      ReducedEntry e;
      e.sub = display_label(mu.flavor);
      e.q = mu.spin_mult;
      e.gamma = g;
      e.ngamma = k;
      e.label = block_label(e.sub, mu.spin_mult, g, k);
      out.push_back(e);
    }
  return out;
}

}  // namespace

template <class F>
SFTable<F> compute_table(Chain c, const std::string& R1, const std::string& R2, const EngineOptions& opt) {
  return spin_flavor(c) ? spin_flavor_table<F>(c, R1, R2, opt) : flavor_table<F>(c, R1, R2, opt);
}

std::vector<SeriesEntry> cg_series(Chain c, const std::string& R1, const std::string& R2) {
  const int n = chain_rank(c);
  Factor A = factor(n, R1), B = factor(n, R2);
  std::vector<SeriesEntry> out;
  bool sym = false;
  if (spin_flavor(c)) {
    const auto& C = couple_spin_flavor<Rational>(chain_flavors(c), A.d, B.d, SubOrder::First);
    sym = C.P->symmetric();
    for (auto& ir : C.irreps)
      out.push_back({irrep_label(ir.hw, ir.copy, ir.ncopies), dimension_of_weight(ir.hw), ir.swap});
  } else {
    const auto& C = couple_abstract<Rational>(n, A.hw, B.hw, SubOrder::First);
    sym = C.P->symmetric();
    for (auto& ci : C.irreps)
      out.push_back({irrep_label(ci.hw, ci.copy, ci.ncopies), dimension_of_weight(ci.hw), ci.swap});
  }
  std::stable_sort(out.begin(), out.end(), [&](const SeriesEntry& x, const SeriesEntry& y) {
    if (sym && x.swap != y.swap) return x.swap > y.swap;
    return label_less(x.label, y.label);
  });
  return out;
}

std::vector<ReducedEntry> decompose(Chain c, const std::string& R) {
  const int n = chain_rank(c);
  Factor f = factor(n, R);
  if (!spin_flavor(c)) {
    std::vector<ReducedEntry> out;
    for (const Weight& sub0 : ranked_subirreps(f.hw)) {
      Weight sub = add_shift(sub0, f.shift);
      ReducedEntry e;
      if (c == Chain::SU4) {
        e.sub = display_label(diagram_of_weight(sub));
        e.q = su4_charm(f.phys, sub);
        e.label = e.sub + "," + charge_str(e.q);
      } else {
        e.sub = charge_str(su3_isospin(sub));
        e.q = su3_hypercharge(f.phys, sub);
        e.label = e.sub + "," + charge_str(e.q);
      }
      out.push_back(e);
    }
    return out;
  }
  const int nf = chain_flavors(c);
  if (!anchors_for(nf, f.d).empty()) {
    const auto& fm = factor_model<Rational>(nf, f.d);
    std::map<SubgroupIrrep, int> counts;
    for (auto& b : fm.blocks) ++counts[b.mu];
    return entries_from_counts(counts);
  }
  for (auto& [a, b] : known_products(c)) {
    const auto& C = couple_spin_flavor<Rational>(nf, parse_irrep(n, a), parse_irrep(n, b), SubOrder::First);
    for (std::size_t i = 0; i < C.irreps.size(); ++i)
      if (display_label(diagram_of_weight(C.irreps[i].hw)) == f.label) return entries_from_counts(C.content(i));
  }
  throw Error(ErrorKind::UnknownIrrep, f.label + " is not realized in any of the tabulated " + chain_group(c) +
                                           " products");
}

const std::vector<Product>& tabulated_products() {
  static const std::vector<Product> p{
      {Chain::SU8, "63", "63"}, {Chain::SU8, "120", "63"}, {Chain::SU6, "35", "35"}, {Chain::SU6, "56", "35"},
      {Chain::SU4, "15", "15"}, {Chain::SU4, "20", "15"},  {Chain::SU4, "20'", "15"}, {Chain::SU3, "3", "3"},
      {Chain::SU3, "3", "3*"},  {Chain::SU3, "3*", "3*"},  {Chain::SU3, "6", "3"},    {Chain::SU3, "6", "3*"},
      {Chain::SU3, "8", "3"},   {Chain::SU3, "8", "3*"},   {Chain::SU3, "10", "3"},   {Chain::SU3, "10", "3*"},
      {Chain::SU3, "6", "8"},   {Chain::SU3, "10", "8"},   {Chain::SU3, "8", "8"},
  };
  return p;
}

StateSpec parse_state(Chain c, const std::string& s) {
  StateSpec st;
  std::string pat = s;
  if (spin_flavor(c)) {
    auto a = s.find(':'), b = s.rfind(':');
    if (a == std::string::npos || a == b) throw Error(ErrorKind::Usage, "state must read mu:pattern:2Jz, got " + s);
    st.mu = s.substr(0, a);
    pat = s.substr(a + 1, b - a - 1);
    try {
      st.twice_jz = std::stoi(s.substr(b + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "bad 2Jz in " + s);
    }
  }
  std::stringstream rows(pat);
  std::string row;
  while (std::getline(rows, row, '/')) {
    Weight w;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) {
      try {
        w.push_back(std::stoi(e));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Usage, "bad pattern entry '" + e + "' in " + s);
      }
    }
    st.pattern.push_back(w);
  }
  for (std::size_t k = 0; k < st.pattern.size(); ++k)
    if (st.pattern[k].size() != st.pattern.size() - k) throw Error(ErrorKind::Usage, "pattern rows must shrink by one: " + s);
  return st;
}

template <class F>
SignedSq<F> radical_sum(const std::vector<SignedSq<F>>& terms) {
  if constexpr (Field<F>::exact) {
    std::vector<SignedRadical> r;
    for (auto& t : terms)
      if (t.sign) r.emplace_back(t.sign, t.sq);
    SignedRadical s = liecg::radical_sum(r);
    return SignedSq<F>{s.sign(), s.radicand()};
  } else {
    double v = 0;
    for (auto& t : terms) v += t.sign * std::sqrt(t.sq);
    return SignedSq<F>{Field<F>::sign(v), v * v};
  }
}

namespace {

bool interlaces(const Pattern& p) {
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    for (std::size_t i = 0; i < p[k + 1].size(); ++i)
      if (p[k + 1][i] > p[k][i] || p[k + 1][i] < p[k][i + 1]) return false;
  return true;
}

template <class F>
const std::vector<FlavorRow<F>>& cached_rows(const Coupling<F>& C) {
  static OnceMap<const Coupling<F>*, std::vector<FlavorRow<F>>> reg;
  return reg.get(&C, [&] { return flavor_rows(C, false); });
}

Weight sum(const Weight& a, const Weight& b) {
  Weight s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

Pattern tail(const Pattern& p, int shift) { return shifted(Pattern(p.begin() + 1, p.end()), shift); }

}  // namespace

template <class F>
SignedSq<F> flavor_cg(int m, const Weight& a, const Weight& b, std::size_t irrep, const Pattern& pa, const Pattern& pb,
                      const Pattern& p) {
  if (static_cast<int>(pa.size()) != m || static_cast<int>(pb.size()) != m || static_cast<int>(p.size()) != m ||
      pa[0] != a || pb[0] != b || !interlaces(pa) || !interlaces(pb) || !interlaces(p))
    throw Error(ErrorKind::IndexMismatch, "pattern does not belong to its irrep");
  if (sum(pattern_weight(pa), pattern_weight(pb)) != pattern_weight(p))
    throw Error(ErrorKind::IndexMismatch, "weights do not add up: " + pattern_str(pa) + " + " + pattern_str(pb) +
                                              " vs " + pattern_str(p));
  if (m == 1) return SignedSq<F>{1, F(1)};
  const Coupling<F>& C = couple_abstract<F>(m, a, b, SubOrder::First);
  if (irrep >= C.irreps.size() || C.irreps[irrep].hw != p[0])
    throw Error(ErrorKind::IndexMismatch, "coupled pattern does not belong to the coupled irrep");
  const FlavorRow<F>* row = nullptr;
  for (auto& r : cached_rows(C))
    if (r.irrep == irrep && r.nu == p[1]) row = &r;
  if (!row) throw Error(ErrorKind::Internal, "missing scalar-factor row");
  std::vector<SignedSq<F>> terms;
  for (auto& [k, sf] : row->cols) {
    const auto& u = C.uncoupled[k];
    if (u.nu1 != pa[1] || u.nu2 != pb[1]) continue;
    const int s1 = u.nu1.back(), s2 = u.nu2.back();
    Weight c1 = canonical_of(u.nu1), c2 = canonical_of(u.nu2);
    const Coupling<F>& sub = couple_abstract<F>(m - 1, c1, c2, SubOrder::First);
    const Weight target = add_shift(u.nu, -(s1 + s2));
    std::size_t j = sub.irreps.size();
    for (std::size_t q = 0; q < sub.irreps.size(); ++q)
      if (sub.irreps[q].hw == target && sub.irreps[q].copy == u.gamma) j = q;
    if (j == sub.irreps.size()) throw Error(ErrorKind::Internal, "subgroup coupling lost an irrep");
    SignedSq<F> rec = flavor_cg<F>(m - 1, c1, c2, j, tail(pa, -s1), tail(pb, -s2), tail(p, -(s1 + s2)));
    if (rec.sign) terms.push_back(mul(sf, rec));
  }
  return radical_sum(terms);
}

template <class F>
SignedSq<F> full_cg(Chain c, const std::string& R1, const std::string& R2, const std::string& R, const StateSpec& s1,
                    const StateSpec& s2, const StateSpec& s) {
  const int n = chain_rank(c);
  Factor A = factor(n, R1), B = factor(n, R2);
  if (!spin_flavor(c)) {
    const Coupling<F>& C = couple_abstract<F>(n, A.hw, B.hw, SubOrder::First);
    for (std::size_t i = 0; i < C.irreps.size(); ++i) {
      const auto& ci = C.irreps[i];
      if (irrep_label(ci.hw, ci.copy, ci.ncopies) != R) continue;
      return flavor_cg<F>(n, A.hw, B.hw, i, shifted(s1.pattern, -A.shift), shifted(s2.pattern, -B.shift),
                          shifted(s.pattern, -(A.shift + B.shift)));
    }
    throw Error(ErrorKind::IndexMismatch, R + " does not occur in " + A.label + " x " + B.label);
  }

  const int nf = chain_flavors(c);
  const SpinFlavorCoupling<F>& C = couple_spin_flavor<F>(nf, A.d, B.d, SubOrder::First);
  std::size_t irrep = C.irreps.size();
  for (std::size_t i = 0; i < C.irreps.size(); ++i)
    if (irrep_label(C.irreps[i].hw, C.irreps[i].copy, C.irreps[i].ncopies) == R) irrep = i;
  if (irrep == C.irreps.size()) throw Error(ErrorKind::IndexMismatch, R + " does not occur in " + A.label + " x " + B.label);

  auto find_block = [&](const FactorModel<F>& fm, const std::string& mu) {
    std::map<SubgroupIrrep, int> seen, count;
    for (auto& b : fm.blocks) ++count[b.mu];
    for (std::size_t k = 0; k < fm.blocks.size(); ++k) {
      const auto& b = fm.blocks[k];
      int g = seen[b.mu]++;
      if (block_label(display_label(b.mu.flavor), b.mu.spin_mult, g, count[b.mu]) == mu) return static_cast<int>(k);
    }
    throw Error(ErrorKind::IndexMismatch, "no sub-block " + mu + " in " + fm.label);
  };
  const int b1 = find_block(*C.R1, s1.mu), b2 = find_block(*C.R2, s2.mu);
  const SFCoupledRow<F>* row = nullptr;
  for (auto& r : C.rows) {
    if (r.irrep != irrep) continue;
    const auto& G = C.groups[r.group];
    if (block_label(display_label(diagram_of_weight(G.flavor_hw)), G.spin_mult, r.gamma, r.ngamma) == s.mu) row = &r;
  }
  if (!row) throw Error(ErrorKind::IndexMismatch, "no sub-block " + s.mu + " in " + R);
  if (s1.twice_jz + s2.twice_jz != s.twice_jz) throw Error(ErrorKind::IndexMismatch, "Jz does not add up");

  const auto& B1 = C.R1->blocks[b1];
  const auto& B2 = C.R2->blocks[b2];
  auto spin_pat = [](const Weight& hw, int tjz) {
    int tot = hw[0] + hw[1];
    if ((tot + tjz) % 2 || tjz > hw[0] - hw[1] || -tjz > hw[0] - hw[1])
      throw Error(ErrorKind::IndexMismatch, "2Jz " + std::to_string(tjz) + " outside the spin multiplet");
    return Pattern{hw, Weight{(tot + tjz) / 2}};
  };
  std::vector<SignedSq<F>> terms;
  for (auto& [k, sf] : row->cols) {
    const auto& u = C.uncoupled[k];
    if (u.b1 != b1 || u.b2 != b2) continue;
    SignedSq<F> fcg = flavor_cg<F>(nf, B1.flavor->hw, B2.flavor->hw, u.firr, shifted(s1.pattern, -B1.flavor_hw.back()),
                                   shifted(s2.pattern, -B2.flavor_hw.back()), shifted(s.pattern, -u.fshift));
    const Weight& shw = u.sc->irreps[u.sirr].hw;
    SignedSq<F> scg = flavor_cg<F>(2, B1.spin->hw, B2.spin->hw, u.sirr, spin_pat(B1.spin->hw, s1.twice_jz),
                                   spin_pat(B2.spin->hw, s2.twice_jz), spin_pat(shw, s.twice_jz));
    terms.push_back(mul(mul(sf, fcg), scg));
  }
  return radical_sum(terms);
}

#define LIECG_INST(F)                                                                                          \
  template SFTable<F> compute_table<F>(Chain, const std::string&, const std::string&, const EngineOptions&);  \
  template SignedSq<F> full_cg<F>(Chain, const std::string&, const std::string&, const std::string&,          \
                                  const StateSpec&, const StateSpec&, const StateSpec&);                      \
  template SignedSq<F> flavor_cg<F>(int, const Weight&, const Weight&, std::size_t, const Pattern&,            \
                                    const Pattern&, const Pattern&);                                           \
  template SignedSq<F> radical_sum<F>(const std::vector<SignedSq<F>>&);
LIECG_INST(Rational)
LIECG_INST(double)
#undef LIECG_INST

}  // namespace liecg
