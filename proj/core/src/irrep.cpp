#include "liecg/irrep.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#ifndef LIECG_DEFAULT_FIXTURES
#define LIECG_DEFAULT_FIXTURES "fixtures"
#endif

namespace liecg {

namespace {

struct Table1Entry {
  int n;
  const char* label;
  std::vector<int> rows;
};

const std::vector<Table1Entry>& table1() {
  static const std::vector<Table1Entry> t = {
      {8, "8", {1}}, {8, "8*", {1, 1, 1, 1, 1, 1, 1}}, {8, "63", {2, 1, 1, 1, 1, 1, 1}}, {8, "120", {3}},
      {8, "168", {2, 1}}, {8, "720", {2, 2, 1, 1, 1, 1}}, {8, "945", {3, 1, 1, 1, 1, 1}},
      {8, "945*", {3, 3, 2, 2, 2, 2, 2}}, {8, "1232", {4, 2, 2, 2, 2, 2, 2}}, {8, "2520", {5, 1, 1, 1, 1, 1, 1}},
      {8, "4752", {4, 2, 1, 1, 1, 1, 1}},
      {6, "6", {1}}, {6, "6*", {1, 1, 1, 1, 1}}, {6, "35", {2, 1, 1, 1, 1}}, {6, "56", {3}}, {6, "70", {2, 1}},
      {6, "189", {2, 2, 1, 1}}, {6, "280", {3, 1, 1, 1}}, {6, "280*", {3, 3, 2, 2, 2}},
      {6, "405", {4, 2, 2, 2, 2}}, {6, "700", {5, 1, 1, 1, 1}}, {6, "1134", {4, 2, 1, 1, 1}},
      {4, "4", {1}}, {4, "4*", {1, 1, 1}}, {4, "15", {2, 1, 1}}, {4, "20", {2, 1}}, {4, "20'", {3}},
      {4, "20''", {2, 2}}, {4, "36*", {3, 2, 2}}, {4, "45", {3, 1}}, {4, "45*", {3, 3, 2}},
      {4, "60*", {3, 3, 1}}, {4, "84", {4, 2, 2}}, {4, "120", {5, 1, 1}}, {4, "140", {4, 2, 1}},
      {3, "3", {1}}, {3, "3*", {1, 1}}, {3, "6", {2}}, {3, "6*", {2, 2}}, {3, "8", {2, 1}}, {3, "10", {3}},
      {3, "10*", {3, 3}}, {3, "15", {3, 1}}, {3, "15*", {3, 2}}, {3, "15'", {4}}, {3, "24*", {4, 1}},
      {3, "27", {4, 2}}, {3, "35", {5, 1}},
  };
  return t;
}

const char* table1_label(const YoungDiagram& d) {
  for (auto& e : table1())
    if (e.n == d.n && e.rows == d.rows) return e.label;
  return nullptr;
}

std::string toggle_star(const std::string& s) {
  if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
  return s + "*";
}

int boxes(const YoungDiagram& d) { return std::accumulate(d.rows.begin(), d.rows.end(), 0); }

}  // namespace

YoungDiagram canonicalize(YoungDiagram d) {
  while (!d.rows.empty() && d.rows.back() == 0) d.rows.pop_back();
  if (static_cast<int>(d.rows.size()) == d.n) {
    int c = d.rows.back();
    for (auto& r : d.rows) r -= c;
    while (!d.rows.empty() && d.rows.back() == 0) d.rows.pop_back();
  }
  return d;
}

YoungDiagram make_diagram(int n, std::vector<int> rows) {
  if (n < 1) throw Error(ErrorKind::UnknownIrrep, "rank must be positive");
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (static_cast<int>(rows.size()) > n) throw Error(ErrorKind::UnknownIrrep, "too many rows for SU(" + std::to_string(n) + ")");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i] < 0 || (i && rows[i] > rows[i - 1])) throw Error(ErrorKind::UnknownIrrep, "rows must be a partition");
  return canonicalize(YoungDiagram{n, std::move(rows)});
}

YoungDiagram diagram_of_weight(const Weight& hw) {
  YoungDiagram d;
  d.n = static_cast<int>(hw.size());
  int last = hw.empty() ? 0 : hw.back();
  for (int w : hw) d.rows.push_back(w - last);
  return canonicalize(d);
}

long long dimension(const YoungDiagram& d) {
  // hook-content formula
  Integer num = 1, den = 1;
  std::vector<int> cols(d.rows.empty() ? 0 : d.rows[0], 0);
  for (std::size_t r = 0; r < d.rows.size(); ++r)
    for (int c = 0; c < d.rows[r]; ++c) cols[c]++;
  for (std::size_t r = 0; r < d.rows.size(); ++r)
    for (int c = 0; c < d.rows[r]; ++c) {
      num *= d.n + c - static_cast<int>(r);
      den *= (d.rows[r] - c - 1) + (cols[c] - static_cast<int>(r) - 1) + 1;
    }
  Integer q = num / den;
  return q.get_si();
}

long long dimension_of_weight(const Weight& hw) { return dimension(diagram_of_weight(hw)); }

YoungDiagram conjugate(const YoungDiagram& d0) {
  YoungDiagram d = canonicalize(d0);
  if (d.rows.empty()) return d;
  int r = d.rows[0];
  std::vector<int> padded(d.n, 0);
  std::copy(d.rows.begin(), d.rows.end(), padded.begin());
  YoungDiagram c{d.n, {}};
  for (int i = 0; i < d.n; ++i) c.rows.push_back(r - padded[d.n - 1 - i]);
  return canonicalize(c);
}

std::vector<Rational> highest_weight(const YoungDiagram& d) {
  std::vector<Rational> w(d.n, Rational(0));
  Rational mean(boxes(d), d.n);
  mean.canonicalize();
  for (int i = 0; i < d.n; ++i) w[i] = Rational(i < static_cast<int>(d.rows.size()) ? d.rows[i] : 0) - mean;
  return w;
}

Weight physical_hw(const YoungDiagram& d0) {
  YoungDiagram d = canonicalize(d0);
  Weight w(d.n, 0);
  for (std::size_t i = 0; i < d.rows.size(); ++i) w[i] = d.rows[i];
  int shift = 0;
  if (d.rows.empty()) return w;
  if (conjugate(d) == d) {
    if (boxes(d) % d.n == 0) shift = -boxes(d) / d.n;
  } else {
    std::string l = display_label(d);
    if (l.back() == '*') shift = -d.rows[0];
  }
  for (auto& x : w) x += shift;
  return w;
}

std::string diagram_str(const YoungDiagram& d) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.rows.size();) {
    std::size_t j = i;
    while (j < d.rows.size() && d.rows[j] == d.rows[i]) ++j;
    if (i) os << ",";
    os << d.rows[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << "]";
  return os.str();
}

std::vector<YoungDiagram> diagrams_up_to(int n, long long maxdim) {
  // dimension grows with every Dynkin label, so pruning on them is safe
  auto diagram = [n](const std::vector<int>& a) {
    std::vector<int> rows(n - 1, 0);
    int acc = 0;
    for (int k = n - 2; k >= 0; --k) rows[k] = acc += a[k];
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return YoungDiagram{n, rows};
  };
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo{std::vector<int>(n - 1, 0)};
  seen.insert(todo[0]);
  std::set<YoungDiagram> out;
  while (!todo.empty()) {
    std::vector<int> a = todo.back();
    todo.pop_back();
    out.insert(diagram(a));
    for (int k = 0; k < n - 1; ++k) {
      std::vector<int> b = a;
      ++b[k];
      if (seen.count(b) || dimension(diagram(b)) > maxdim) continue;
      seen.insert(b);
      todo.push_back(b);
    }
  }
  return {out.begin(), out.end()};
}

std::string display_label(const YoungDiagram& d0) {
  static std::mutex mu;
  static std::map<YoungDiagram, std::string> cache;
  YoungDiagram d = canonicalize(d0);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  std::string label;
  YoungDiagram c = conjugate(d);
  if (d.rows.empty()) {
    label = "1";
  } else if (const char* t = table1_label(d)) {
    label = t;
  } else if (const char* t = table1_label(c)) {
    label = toggle_star(t);
  } else {
    long long dim = dimension(d);
    for (auto& e : diagrams_up_to(d.n, dim))
      if (dimension(e) == dim && !(e == d) && !(e == c))
        throw Error(ErrorKind::UnlabeledDiagram, diagram_str(d) + " of SU(" + std::to_string(d.n) + ")");
    label = std::to_string(dim);
    if (!(c == d)) {
      bool starred = d.rows.size() > c.rows.size() || (d.rows.size() == c.rows.size() && boxes(d) > boxes(c));
      if (starred) label += "*";
    }
  }
  std::lock_guard<std::mutex> lk(mu);
  cache[d] = label;
  return label;
}

YoungDiagram parse_irrep(int n, const std::string& label) {
  if (!label.empty() && label[0] == '[') {
    std::vector<int> rows;
    static const std::regex part(R"((\d+)(?:\^(\d+))?)");
    for (auto it = std::sregex_iterator(label.begin(), label.end(), part); it != std::sregex_iterator(); ++it) {
      int v = std::stoi((*it)[1]);
      int k = (*it)[2].matched ? std::stoi((*it)[2]) : 1;
      for (int i = 0; i < k; ++i) rows.push_back(v);
    }
    return make_diagram(n, rows);
  }
  if (label == "1") return YoungDiagram{n, {}};
  int dim = label_dimension(label);
  if (dim <= 0) throw Error(ErrorKind::UnknownIrrep, "'" + label + "'");
  for (auto& e : diagrams_up_to(n, dim)) {
    if (dimension(e) != dim) continue;
    try {
      if (display_label(e) == label) return e;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::UnknownIrrep, "'" + label + "' of SU(" + std::to_string(n) + ")");
}

IrrepId irrep_id(const YoungDiagram& d) {
  YoungDiagram c = canonicalize(d);
  return IrrepId{c, dimension(c), display_label(c)};
}

int label_dimension(const std::string& label) {
  std::size_t i = 0;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
  return i ? std::stoi(label.substr(0, i)) : 0;
}

int decoration_rank(const std::string& label) {
  int primes = static_cast<int>(std::count(label.begin(), label.end(), '\''));
  int star = label.find('*') != std::string::npos ? 1 : 0;
  return primes + 16 * star;
}

bool label_less(const std::string& a, const std::string& b) {
  int da = label_dimension(a), db = label_dimension(b);
  if (da != db) return da < db;
  return decoration_rank(a) < decoration_rank(b);
}

std::vector<Weight> interlacing(const Weight& row) {
  std::vector<Weight> out;
  std::size_t m = row.size();
  if (m < 2) return out;
  Weight cur(m - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m - 1) {
      out.push_back(cur);
      return;
    }
    for (int v = row[i]; v >= row[i + 1]; --v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::map<Weight, long long> weight_multiplicities(const Weight& hw) {
  std::map<Weight, long long> out;
  std::size_t m = hw.size();
  Weight w(m, 0);
  std::function<void(const Weight&, std::size_t)> rec = [&](const Weight& row, std::size_t k) {
    // row has length k; fixes weight component k-1
    int s = std::accumulate(row.begin(), row.end(), 0);
    if (k == 1) {
      w[0] = s;
      out[w]++;
      return;
    }
    for (auto& sub : interlacing(row)) {
      w[k - 1] = s - std::accumulate(sub.begin(), sub.end(), 0);
      rec(sub, k - 1);
    }
  };
  if (m) rec(hw, m);
  return out;
}

std::map<SubgroupIrrep, int> branch_spin_flavor(const YoungDiagram& R, int nf) {
  int N = 2 * nf;
  if (R.n != N) throw Error(ErrorKind::UnknownIrrep, "rank mismatch in spin-flavor branching");
  Weight hw(N, 0);
  for (std::size_t i = 0; i < R.rows.size(); ++i) hw[i] = R.rows[i];
  // character keyed by (flavor weight, spin weight); index i = s*nf + f
  std::map<Weight, long long> ch;
  for (auto& [w, m] : weight_multiplicities(hw)) {
    Weight key(nf + 2, 0);
    for (int s = 0; s < 2; ++s)
      for (int f = 0; f < nf; ++f) {
        key[f] += w[s * nf + f];
        key[nf + s] += w[s * nf + f];
      }
    ch[key] += m;
  }
  std::map<SubgroupIrrep, int> out;
  while (true) {
    while (!ch.empty() && ch.rbegin()->second == 0) ch.erase(std::prev(ch.end()));
    if (ch.empty()) break;
    Weight top = ch.rbegin()->first;
    long long mult = ch.rbegin()->second;
    if (mult < 0) throw Error(ErrorKind::Internal, "negative multiplicity in branching");
    Weight fw(top.begin(), top.begin() + nf), sw(top.begin() + nf, top.end());
    auto fch = weight_multiplicities(fw);
    auto sch = weight_multiplicities(sw);
    for (auto& [a, ma] : fch)
      for (auto& [b, mb] : sch) {
        Weight key(a);
        key.insert(key.end(), b.begin(), b.end());
        ch[key] -= mult * ma * mb;
      }
    SubgroupIrrep mu{diagram_of_weight(fw), sw[0] - sw[1] + 1};
    out[mu] += static_cast<int>(mult);
  }
  return out;
}

std::string fixture_dir() {
  const char* env = std::getenv("LIECG_FIXTURES");
  return env && *env ? std::string(env) : std::string(LIECG_DEFAULT_FIXTURES);
}

namespace {
std::map<std::pair<int, std::string>, std::vector<ReductionEntry>> load_reductions() {
  std::map<std::pair<int, std::string>, std::vector<ReductionEntry>> out;
  std::string path = fixture_dir() + "/reductions.fix";
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::UnknownIrrep, "cannot open " + path);
  static const std::regex head(R"(^REDUCTION SU(\d+) (\S+)\s*$)");
  static const std::regex item(R"(^\s+(\S+?)_(?:\{([sab]),(\d+)\}|(\d+))\s*$)");
  std::string line;
  std::vector<ReductionEntry>* cur = nullptr;
  while (std::getline(in, line)) {
    std::smatch m;
    if (line.empty() || line[0] == '#') continue;
    if (std::regex_match(line, m, head)) {
      cur = &out[{std::stoi(m[1]), m[2].str()}];
    } else if (cur && std::regex_match(line, m, item)) {
      ReductionEntry e;
      e.flavor = m[1];
      if (m[2].matched) {
        e.gamma = m[2].str()[0];
        e.spin_mult = std::stoi(m[3]);
      } else {
        e.spin_mult = std::stoi(m[4]);
      }
      cur->push_back(e);
    }
  }
  return out;
}

const std::map<std::pair<int, std::string>, std::vector<ReductionEntry>>& reductions() {
  static const auto r = load_reductions();
  return r;
}
}  // namespace

std::vector<ReductionEntry> expected_reduction(int n, const std::string& label) {
  auto it = reductions().find({n, label});
  if (it == reductions().end())
    throw Error(ErrorKind::UnknownIrrep, label + " of SU(" + std::to_string(n) + ") has no reference reduction");
  return it->second;
}

std::vector<std::pair<int, std::string>> reduction_irreps() {
  std::vector<std::pair<int, std::string>> out;
  for (auto& [k, v] : reductions()) out.push_back(k);
  return out;
}

}  // namespace liecg
