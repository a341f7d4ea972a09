#include "liecg/sf.hpp"

#include <map>

#include "liecg/errors.hpp"

namespace liecg {

template <class F>
std::string SFColumn<F>::label() const {
  std::string s = gammap.empty() ? "|" + mu1 + "," + mu2 + ">" : "|(" + mu1 + "," + mu2 + ")_" + gammap + ">";
  if (!sym.empty()) s += "_" + sym;
  return s;
}

template <class F>
std::string SFTableRow<F>::lhs(Chain c) const {
  std::string r = sigma.empty() ? R : R + "_" + sigma;
  std::string m = mu;
  if (spin_flavor(c) && !gamma.empty()) {
    auto p = mu.rfind('_');
    m = mu.substr(0, p) + "_{" + gamma + "," + mu.substr(p + 1) + "}";
  }
  return "|" + r + ";" + m + ">";
}

SignedRadical radical(const SignedSq<Rational>& v) { return v.sign ? SignedRadical(v.sign, v.sq) : SignedRadical(); }
double approx(const SignedSq<Rational>& v) { return v.sign * std::sqrt(v.sq.get_d()); }
double approx(const SignedSq<double>& v) { return v.sign * std::sqrt(v.sq); }

// trial division is enough for table-sized numbers
void squarefree_split(const Integer& n0, Integer& s, Integer& t) {
  Integer n = n0;
  s = 1;
  t = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2) t *= p;
  }
  t *= n;
}

namespace {

// sqrt(p/q) = sqrt(p q) / q = (s / q) sqrt(t)
std::map<Integer, Rational> radical_classes(const std::vector<SignedRadical>& terms) {
  std::map<Integer, Rational> classes;
  for (const auto& r : terms) {
    if (r.is_zero()) continue;
    Integer pq = r.radicand().get_num() * r.radicand().get_den();
    Integer s, t;
    squarefree_split(pq, s, t);
    Rational c(s, r.radicand().get_den());
    c.canonicalize();
    classes[t] += r.sign() * c;
  }
  return classes;
}

}  // namespace

bool radical_sum_is_zero(const std::vector<SignedRadical>& terms) {
  for (auto& [t, c] : radical_classes(terms))
    if (sgn(c) != 0) return false;
  return true;
}

SignedRadical radical_sum(const std::vector<SignedRadical>& terms) {
  SignedRadical out;
  bool found = false;
  for (auto& [t, c] : radical_classes(terms)) {
    if (sgn(c) == 0) continue;
    if (found) throw Error(ErrorKind::NotCommensurable, "sum of radicals is not a single radical");
    found = true;
    out = SignedRadical(sgn(c), c * c * Rational(t));
  }
  return out;
}

std::vector<InverseEntry> invert_sf(const SFTable<Rational>& t, const std::string& mu, const SFColumn<Rational>& col) {
  std::vector<InverseEntry> out;
  for (const auto& r : t.rows) {
    if (r.mu != mu) continue;
    for (const auto& c : r.cols)
      if (c.same_column(col)) out.push_back({r.R, r.sigma, r.gamma, radical(c.value)});
  }
  return out;
}

UnitarityReport verify_unitarity(const SFTable<Rational>& t) {
  UnitarityReport rep;
  auto fail = [&](const std::string& s) {
    if (rep.ok) rep.first_violation = s;
    rep.ok = false;
  };
  std::map<std::string, std::vector<const SFTableRow<Rational>*>> bymu;
  for (const auto& r : t.rows) {
    bymu[r.mu].push_back(&r);
    Rational s = 0;
    for (auto& c : r.cols) s += c.value.sq;
    ++rep.rows_checked;
    if (s != 1) fail("row " + r.lhs(t.chain) + " has norm " + s.get_str());
  }
  for (auto& [mu, rows] : bymu) {
    // columns of this mu in first-seen order
    std::vector<SFColumn<Rational>> cols;
    for (auto* r : rows)
      for (auto& c : r->cols) {
        bool seen = false;
        for (auto& k : cols) seen = seen || k.same_column(c);
        if (!seen) cols.push_back(c);
      }
    auto entry = [](const SFTableRow<Rational>* r, const SFColumn<Rational>& c) {
      for (auto& x : r->cols)
        if (x.same_column(c)) return radical(x.value);
      return SignedRadical();
    };
    if (cols.size() != rows.size())
      fail("mu " + mu + ": " + std::to_string(rows.size()) + " rows but " + std::to_string(cols.size()) + " columns");
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        if (rows[a]->gamma != rows[b]->gamma && rows[a]->R == rows[b]->R && rows[a]->sigma == rows[b]->sigma) {
        }
        std::vector<SignedRadical> terms;
        for (auto& c : cols) terms.push_back(srad_mul(entry(rows[a], c), entry(rows[b], c)));
        if (!radical_sum_is_zero(terms)) fail("rows " + rows[a]->lhs(t.chain) + " and " + rows[b]->lhs(t.chain) + " are not orthogonal");
      }
    for (std::size_t a = 0; a < cols.size(); ++a) {
      ++rep.columns_checked;
      Rational s = 0;
      for (auto* r : rows) s += entry(r, cols[a]).radicand();
      if (s != 1) fail("column " + cols[a].label() + " of mu " + mu + " has norm " + s.get_str());
      for (std::size_t b = a + 1; b < cols.size(); ++b) {
        std::vector<SignedRadical> terms;
        for (auto* r : rows) terms.push_back(srad_mul(entry(r, cols[a]), entry(r, cols[b])));
        if (!radical_sum_is_zero(terms))
          fail("columns " + cols[a].label() + " and " + cols[b].label() + " of mu " + mu + " are not orthogonal");
      }
    }
  }
  return rep;
}

template struct SFColumn<Rational>;
template struct SFColumn<double>;
template struct SFTableRow<Rational>;
template struct SFTableRow<double>;

}  // namespace liecg
