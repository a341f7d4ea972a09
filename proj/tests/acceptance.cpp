// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "liecg/engine.hpp"
#include "liecg/table_io.hpp"

using namespace liecg;

namespace {

using Clock = std::chrono::steady_clock;
using Vec = SparseVec<Rational>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string name(const Product& p) { return chain_group(p.chain) + " " + p.R1 + "x" + p.R2; }

int failures = 0;

void report(int k, bool ok, const std::string& detail) {
  std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failures;
}

std::vector<Product> of_chain(Chain c) {
  std::vector<Product> out;
  for (auto& p : tabulated_products())
    if (p.chain == c) out.push_back(p);
  return out;
}

// golden equality for one chain within a time budget
void golden(int k, Chain c, double budget, const std::string& note = "") {
  auto t0 = Clock::now();
  std::ostringstream msg;
  bool ok = true;
  std::size_t rows = 0;
  for (auto& p : of_chain(c)) {
    try {
      auto t = compute_table<Rational>(p.chain, p.R1, p.R2);
      rows += t.rows.size();
      auto d = verify_against_fixture(t, load_fixture(fixture_path(p.chain, p.R1, p.R2)));
      if (!d.ok()) {
        ok = false;
        msg << name(p) << ": " << d.lines.front() << "; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      msg << name(p) << ": " << e.what() << "; ";
    }
  }
  double s = seconds_since(t0);
  msg << of_chain(c).size() << " products, " << rows << " rows exact";
  if (!note.empty()) msg << ", " << note;
  msg << ", " << s << " s (budget " << budget << " s)";
  report(k, ok && s <= budget, msg.str());
}

Weight canonical(int n, const std::string& label) {
  YoungDiagram d = parse_irrep(n, label);
  Weight w(n, 0);
  for (std::size_t i = 0; i < d.rows.size(); ++i) w[i] = d.rows[i];
  return w;
}

int commutator_failures(const Space<Rational>& s, unsigned seed) {
  std::mt19937_64 rng(seed);
  const int n = s.rank();
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(s.dim() - 1));
  std::uniform_int_distribution<int> ix(0, n - 1);
  int bad = 0;
  for (int t = 0; t < 50; ++t) {
    Vec v = Vec::unit(pick(rng));
    for (int u = 0; u < 8; ++u) {
      int i = ix(rng), j = ix(rng), k = ix(rng), l = ix(rng);
      Vec lhs = axpy(s.apply(i, j, s.apply(k, l, v)), Rational(-1), s.apply(k, l, s.apply(i, j, v)));
      Vec rhs;
      if (i == l) rhs = axpy(rhs, Rational(1), s.apply(k, j, v));
      if (k == j) rhs = axpy(rhs, Rational(-1), s.apply(i, l, v));
      bad += !(lhs == rhs);
    }
  }
  return bad;
}

Vec casimir(const Space<Rational>& s, const Vec& v) {
  Accum<Rational> acc;
  for (int i = 0; i < s.rank(); ++i)
    for (int j = 0; j < s.rank(); ++j) acc.add(s.apply(i, j, s.apply(j, i, v)), Rational(1));
  return acc.take();
}

bool eigen(const Vec& v, const Vec& w, Rational& c) {
  if (v.empty()) return false;
  c = w.at(v.e.front().first) / v.e.front().second;
  return scaled(v, c) == w;
}

void properties() {
  auto t0 = Clock::now();
  std::ostringstream msg;
  int comm = 0, baird = 0, cas = 0, zeta = 0;
  std::size_t spaces = 0, blocks = 0, sfrows = 0;

  for (int n : {3, 4, 6, 8}) {
    comm += commutator_failures(TensorSpace<Rational>(n, {Slot::AntiFund, Slot::Fund}), n);
    comm += commutator_failures(TensorSpace<Rational>(n, {Slot::Fund, Slot::Fund, Slot::Fund}), n + 1);
    spaces += 2;
  }
  for (auto& p : tabulated_products()) {
    const int n = chain_rank(p.chain);
    if (!spin_flavor(p.chain)) {
      const auto& C = couple_abstract<Rational>(n, canonical(n, p.R1), canonical(n, p.R2));
      comm += commutator_failures(*C.A->model, 17) + commutator_failures(*C.B->model, 19) +
              commutator_failures(*C.P, 23);
      spaces += 3;
      for (auto& ir : C.irreps) {
        ++blocks;
        baird += !baird_ok(*C.P, n, ir.block);
        Rational c0, c;
        for (std::size_t k = 0; k < ir.block.size(); ++k) {
          bool ok = eigen(ir.block.states[k], casimir(*C.P, ir.block.states[k]), c);
          if (k == 0) c0 = c;
          cas += !ok || c != c0;
        }
      }
    } else {
      const int nf = chain_flavors(p.chain);
      const auto& C = couple_spin_flavor<Rational>(nf, parse_irrep(n, p.R1), parse_irrep(n, p.R2));
      comm += commutator_failures(*C.R1->model, 29) + commutator_failures(*C.R2->model, 31) +
              commutator_failures(*C.P, 37);
      spaces += 3;
      // flavor parts of both factors: nonnegative lowering within each sub-block
      for (const FactorModel<Rational>* fm : {C.R1, C.R2}) {
        ViewSpace<Rational> F(fm->model, product_embedding(nf).flavor_map());
        for (std::size_t k = 0; k < fm->states.size(); ++k)
          for (int i = 0; i + 1 < nf; ++i) {
            Vec img = F.apply(i, i + 1, fm->states[k]);
            for (std::size_t l = 0; l < fm->states.size(); ++l)
              if (fm->block_of[l] == fm->block_of[k] && fm->twice_jz[l] == fm->twice_jz[k])
                baird += sgn(fm->model->ip(fm->states[l], img)) < 0;
          }
        blocks += fm->blocks.size();
      }
      // coupled sub-block heads: one Casimir value per coupled irrep
      std::map<std::size_t, Rational> per;
      for (auto& r : C.rows) {
        ++sfrows;
        Rational c;
        bool ok = eigen(r.state, casimir(*C.P, r.state), c);
        auto it = per.find(r.irrep);
        if (it == per.end()) per[r.irrep] = c;
        cas += !ok || (it != per.end() && it->second != c);
      }
    }
  }
  EngineOptions opt;
  opt.check_zeta = true;
  for (auto& p : tabulated_products()) {
    try {
      compute_table<Rational>(p.chain, p.R1, p.R2, opt);
    } catch (const Error& e) {
      ++zeta;
      msg << name(p) << ": " << e.what() << "; ";
    }
  }
  msg << "commutators on " << spaces << " spaces: " << comm << " failures; Baird on " << blocks
      << " flavor blocks: " << baird << "; Casimir on blocks and " << sfrows << " coupled sub-blocks: " << cas
      << "; zeta over all states of 19 products: " << zeta << " (" << seconds_since(t0) << " s)";
  report(8, comm == 0 && baird == 0 && cas == 0 && zeta == 0, msg.str());
}

std::string run(const std::string& args) {
  std::string cmd = std::string(LIECG_CLI) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "popen failed";
  std::array<char, 1 << 14> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  if (st != 0) out += "\nexit " + std::to_string(st);
  return out;
}

}  // namespace

int main() {
  golden(1, Chain::SU8, 600);
  golden(2, Chain::SU6, 60);
  golden(3, Chain::SU4, 30, "both 4* rows of 20x15 with xi as tabulated");
  golden(4, Chain::SU3, 30);

  {
    struct S {
      Chain c;
      const char *a, *b;
      long long want;
    };
    bool ok = true;
    std::ostringstream msg;
    for (const S& s : {S{Chain::SU8, "63", "63", 3969}, S{Chain::SU8, "120", "63", 7560},
                       S{Chain::SU6, "35", "35", 1225}, S{Chain::SU6, "56", "35", 1960}}) {
      long long tot = 0;
      for (auto& e : cg_series(s.c, s.a, s.b)) tot += e.dim;
      ok = ok && tot == s.want;
      msg << s.a << "x" << s.b << "=" << tot << " ";
    }
    report(5, ok, msg.str());
  }

  {
    bool ok = true;
    std::ostringstream msg;
    int n_ok = 0;
    auto irreps = reduction_irreps();
    for (auto& [n, label] : irreps) {
      std::vector<std::string> want, got;
      for (auto& e : expected_reduction(n, label)) {
        std::string m = std::to_string(e.spin_mult);
        want.push_back(e.gamma ? e.flavor + "_{" + std::string(1, e.gamma) + "," + m + "}" : e.flavor + "_" + m);
      }
      try {
        for (auto& e : decompose(n == 8 ? Chain::SU8 : Chain::SU6, label)) got.push_back(e.label);
      } catch (const Error& e) {
        msg << label << ": " << e.what() << "; ";
      }
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      if (want == got) ++n_ok;
      else {
        ok = false;
        msg << "SU" << n << " " << label << " differs; ";
      }
    }
    msg << n_ok << " of " << irreps.size() << " reference reductions reproduced";
    report(6, ok, msg.str());
  }

  {
    bool ok = true;
    std::size_t rows = 0, cols = 0;
    std::ostringstream msg;
    for (auto& p : tabulated_products()) {
      auto u = verify_unitarity(compute_table<Rational>(p.chain, p.R1, p.R2));
      rows += u.rows_checked;
      cols += u.columns_checked;
      if (!u.ok) {
        ok = false;
        msg << name(p) << ": " << u.first_violation << "; ";
      }
    }
    msg << rows << " rows and " << cols << " columns orthonormal in all four chains";
    report(7, ok, msg.str());
  }

  properties();

  {
    double worst = 0;
    bool ok = true;
    std::ostringstream msg;
    std::size_t entries = 0;
    for (auto& p : tabulated_products()) {
      try {
        auto ex = compute_table<Rational>(p.chain, p.R1, p.R2);
        auto fl = compute_table<double>(p.chain, p.R1, p.R2);
        if (ex.rows.size() != fl.rows.size()) throw std::runtime_error("row count differs");
        for (std::size_t i = 0; i < ex.rows.size(); ++i) {
          const auto& a = ex.rows[i];
          const auto& b = fl.rows[i];
          if (a.lhs(p.chain) != b.lhs(p.chain) || a.xi != b.xi || a.cols.size() != b.cols.size())
            throw std::runtime_error("row " + a.lhs(p.chain) + " differs");
          for (std::size_t k = 0; k < a.cols.size(); ++k) {
            ++entries;
            if (a.cols[k].label() != b.cols[k].label() || a.cols[k].value.sign != b.cols[k].value.sign)
              throw std::runtime_error("sign or column differs in " + a.lhs(p.chain));
            worst = std::max(worst, std::fabs(approx(a.cols[k].value) - approx(b.cols[k].value)));
          }
        }
      } catch (const std::exception& e) {
        ok = false;
        msg << name(p) << ": " << e.what() << "; ";
      }
    }
    msg << entries << " coefficients, max |exact - double| = " << worst << " (tolerance 1e-9)";
    report(9, ok && worst <= 1e-9, msg.str());
  }

  {
    bool ok = true;
    std::ostringstream msg;
    for (auto& p : tabulated_products()) {
      std::string prod = chain_group(p.chain) + " \"" + p.R1 + "\" \"" + p.R2 + "\"";
      std::string ref = run("--threads 1 --pivot bitsize sf " + prod + " --format json");
      for (const char* v : {"--threads 4 --pivot bitsize", "--threads 1 --pivot first", "--threads 4 --pivot first"})
        if (run(std::string(v) + " sf " + prod + " --format json") != ref) {
          ok = false;
          msg << name(p) << " differs under " << v << "; ";
        }
      if (ref.find("\"rows\"") == std::string::npos) {
        ok = false;
        msg << name(p) << ": no JSON output; ";
      }
    }
    msg << "JSON of 19 products byte-identical for threads {1,4} x pivot {bitsize,first}";
    report(10, ok, msg.str());
  }

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
