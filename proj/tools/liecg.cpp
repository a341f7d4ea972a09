// liecg: scalar factors and Clebsch-Gordan coefficients of the spin-flavor and flavor chains.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liecg/engine.hpp"
#include "liecg/errors.hpp"
#include "liecg/parallel.hpp"
#include "liecg/table_io.hpp"

using namespace liecg;

namespace {

constexpr int kOk = 0, kDiff = 1, kUsage = 2;

bool usage_kind(ErrorKind k) {
  return k == ErrorKind::Usage || k == ErrorKind::UnknownIrrep || k == ErrorKind::UnlabeledDiagram ||
         k == ErrorKind::UnknownMultiplet || k == ErrorKind::IndexMismatch;
}

void sort_entries(std::vector<ReducedEntry>& es) {
  std::stable_sort(es.begin(), es.end(), [](const ReducedEntry& a, const ReducedEntry& b) {
    if (a.sub != b.sub) return label_less(a.sub, b.sub);
    if (a.q != b.q) return a.q < b.q;
    return a.gamma < b.gamma;
  });
}

int cmd_decompose(const std::string& group, const std::string& R) {
  Chain c = parse_chain(group);
  auto es = decompose(c, R);
  if (spin_flavor(c)) sort_entries(es);
  std::cout << chain_group(c) << " " << display_label(parse_irrep(chain_rank(c), R)) << " =";
  for (std::size_t i = 0; i < es.size(); ++i) std::cout << (i ? " + " : " ") << es[i].label;
  std::cout << "\n";
  return kOk;
}

int cmd_couple(const std::string& group, const std::string& R1, const std::string& R2) {
  Chain c = parse_chain(group);
  auto s = cg_series(c, R1, R2);
  const int n = chain_rank(c);
  long long d1 = dimension(parse_irrep(n, R1)), d2 = dimension(parse_irrep(n, R2)), tot = 0;
  std::cout << R1 << " x " << R2 << " =";
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::cout << (i ? " + " : " ") << s[i].label;
    tot += s[i].dim;
  }
  std::cout << "\n" << d1 << " x " << d2 << " = " << d1 * d2 << ", sum of dimensions " << tot << "\n";
  return tot == d1 * d2 ? kOk : kDiff;
}

int cmd_sf(const std::string& group, const std::string& R1, const std::string& R2, const std::string& format,
           bool zeta, const std::string& out) {
  Chain c = parse_chain(group);
  EngineOptions opt;
  opt.check_zeta = zeta;
  auto t = compute_table<Rational>(c, R1, R2, opt);
  Format f = parse_format(format);
  if (out.empty()) {
    emit(std::cout, t, f);
  } else {
    std::ofstream o(out);
    if (!o) throw Error(ErrorKind::Usage, "cannot write " + out);
    emit(o, t, f);
  }
  return kOk;
}

int cmd_emit(const std::string& format, const std::string& input, const std::vector<std::string>& product) {
  Format f = parse_format(format);
  SFTable<Rational> t;
  if (!input.empty()) {
    std::stringstream buf;
    if (input == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(input);
      if (!in) throw Error(ErrorKind::Usage, "cannot open " + input);
      buf << in.rdbuf();
    }
    t = parse_json_table(buf.str());
  } else if (product.size() == 3) {
    t = compute_table<Rational>(parse_chain(product[0]), product[1], product[2]);
  } else {
    throw Error(ErrorKind::Usage, "emit needs --input FILE or <group> <R1> <R2>");
  }
  emit(std::cout, t, f);
  return kOk;
}

int cmd_cg(const std::vector<std::string>& a) {
  if (a.size() != 7) throw Error(ErrorKind::Usage, "cg <group> <R1> <R2> <R> <state1> <state2> <state>");
  Chain c = parse_chain(a[0]);
  auto v = full_cg<Rational>(c, a[1], a[2], a[3], parse_state(c, a[4]), parse_state(c, a[5]), parse_state(c, a[6]));
  SignedRadical r = v.sign ? SignedRadical(v.sign, v.sq) : SignedRadical();
  std::cout << (r.is_zero() ? std::string("0") : r.str()) << "  (" << r.to_double() << ")\n";
  return kOk;
}

struct Tally {
  int failures = 0;
  void line(bool ok, const std::string& what) {
    std::cout << (ok ? "ok    " : "FAIL  ") << what << "\n";
    if (!ok) ++failures;
  }
};

std::string product_name(const Product& p) { return chain_group(p.chain) + " " + p.R1 + " x " + p.R2; }

void verify_golden(const Product& p, bool zeta, Tally& t) {
  EngineOptions opt;
  opt.check_zeta = zeta;
  auto tab = compute_table<Rational>(p.chain, p.R1, p.R2, opt);
  auto diff = verify_against_fixture(tab, load_fixture(fixture_path(p.chain, p.R1, p.R2)));
  t.line(diff.ok(), product_name(p) + ": " + std::to_string(tab.rows.size()) + " rows against the reference table" +
                        (zeta ? ", every state checked" : ""));
  for (std::size_t i = 0; i < diff.lines.size() && i < 20; ++i) std::cout << "        " << diff.lines[i] << "\n";
  auto u = verify_unitarity(tab);
  t.line(u.ok, product_name(p) + ": unitarity" + (u.ok ? "" : " (" + u.first_violation + ")"));
}

void verify_oracle(const Product& p, Tally& t) {
  auto ex = compute_table<Rational>(p.chain, p.R1, p.R2);
  auto fl = compute_table<double>(p.chain, p.R1, p.R2);
  double worst = 0;
  bool shape = ex.rows.size() == fl.rows.size();
  for (std::size_t i = 0; shape && i < ex.rows.size(); ++i) {
    shape = ex.rows[i].lhs(p.chain) == fl.rows[i].lhs(p.chain) && ex.rows[i].cols.size() == fl.rows[i].cols.size() &&
            ex.rows[i].xi == fl.rows[i].xi;
    for (std::size_t k = 0; shape && k < ex.rows[i].cols.size(); ++k)
      worst = std::max(worst, std::fabs(approx(ex.rows[i].cols[k].value) - approx(fl.rows[i].cols[k].value)));
  }
  std::ostringstream s;
  s << product_name(p) << ": floating-point run, max deviation " << worst;
  t.line(shape && worst <= 1e-9, s.str());
}

void verify_reductions(Tally& t) {
  for (auto& [n, label] : reduction_irreps()) {
    Chain c = n == 8 ? Chain::SU8 : Chain::SU6;
    std::vector<std::string> want, got;
    for (auto& e : expected_reduction(n, label)) {
      std::string g = e.gamma ? std::string(1, e.gamma) : "";
      want.push_back(g.empty() ? e.flavor + "_" + std::to_string(e.spin_mult)
                               : e.flavor + "_{" + g + "," + std::to_string(e.spin_mult) + "}");
    }
    for (auto& e : decompose(c, label)) got.push_back(e.label);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    t.line(want == got, chain_group(c) + " " + label + ": subgroup content");
  }
}

int cmd_verify(bool all, const std::vector<std::string>& only) {
  Tally t;
  std::vector<Product> ps;
  if (only.size() == 3) ps.push_back({parse_chain(only[0]), only[1], only[2]});
  else if (only.empty()) ps = tabulated_products();
  else throw Error(ErrorKind::Usage, "verify [--all] [<group> <R1> <R2>]");
  for (auto& p : ps) {
    try {
      verify_golden(p, all, t);
      if (all) verify_oracle(p, t);
    } catch (const Error& e) {
      t.line(false, product_name(p) + ": " + e.what());
    }
  }
  if (all && only.empty()) verify_reductions(t);
  std::cout << (t.failures ? std::to_string(t.failures) + " check(s) failed" : std::string("all checks passed")) << "\n";
  return t.failures ? kDiff : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scalar factors and Clebsch-Gordan coefficients for SU(8), SU(6), SU(4) and SU(3) chains"};
  app.require_subcommand(1);
  int nthreads = 1;
  app.add_option("--threads", nthreads, "worker threads (output does not depend on it)")->check(CLI::PositiveNumber);
  std::string pivot = "bitsize";
  app.add_option("--pivot", pivot, "elimination pivot: bitsize (smallest entry) or first (lowest index)")
      ->check(CLI::IsMember({"bitsize", "first"}));

  std::string group, R, R1, R2, format = "text", out, input;
  bool zeta = false, all = false;
  std::vector<std::string> rest;

  auto* dec = app.add_subcommand("decompose", "subgroup content of an irrep");
  dec->add_option("group", group)->required();
  dec->add_option("irrep", R)->required();

  auto* cpl = app.add_subcommand("couple", "Clebsch-Gordan series of R1 x R2");
  cpl->add_option("group", group)->required();
  cpl->add_option("R1", R1)->required();
  cpl->add_option("R2", R2)->required();

  auto* sf = app.add_subcommand("sf", "scalar-factor table of R1 x R2");
  sf->add_option("group", group)->required();
  sf->add_option("R1", R1)->required();
  sf->add_option("R2", R2)->required();
  sf->add_option("--format", format, "text, json or latex");
  sf->add_option("-o,--output", out, "write to a file");
  sf->add_flag("--check-zeta", zeta, "compare every state of each row block with its highest state");
  sf->add_flag("--chain", "accepted for compatibility; the chain follows from the group");

  auto* cg = app.add_subcommand("cg", "full Clebsch-Gordan coefficient as a product of scalar factors");
  cg->add_option("args", rest, "<group> <R1> <R2> <R> <state1> <state2> <state>")->expected(7);
  cg->footer(
      "Flavor chains: a state is a GT pattern, rows separated by '/', e.g. 1,0,-1/1,0/1 in the SU(3) octet.\n"
      "Spin-flavor chains: mu:pattern:2Jz, e.g. 15_3:1,0,0,-1/1,0,-1/1,-1/1:2 (rho+ with Jz = 1).\n"
      "Patterns use physical letter counts (top row as printed by 'decompose').");

  auto* ver = app.add_subcommand("verify", "compare with the reference tables");
  ver->add_flag("--all", all, "also check every state, the floating-point oracle and the subgroup contents");
  ver->add_option("product", rest, "<group> <R1> <R2>");

  auto* em = app.add_subcommand("emit", "render a table as text, json or latex");
  em->add_option("--format", format, "text, json or latex")->required();
  em->add_option("--input", input, "JSON table file ('-' for stdin)");
  em->add_option("product", rest, "<group> <R1> <R2>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  set_threads(nthreads);
  set_pivot_rule(pivot == "first" ? PivotRule::FirstIndex : PivotRule::SmallestBitSize);

  try {
    if (*dec) return cmd_decompose(group, R);
    if (*cpl) return cmd_couple(group, R1, R2);
    if (*sf) return cmd_sf(group, R1, R2, format, zeta, out);
    if (*cg) return cmd_cg(rest);
    if (*ver) return cmd_verify(all, rest);
    if (*em) return cmd_emit(format, input, rest);
  } catch (const Error& e) {
    std::cerr << "liecg: " << e.what() << "\n";
    return usage_kind(e.kind()) ? kUsage : kDiff;
  } catch (const std::exception& e) {
    std::cerr << "liecg: " << e.what() << "\n";
    return kDiff;
  }
  return kUsage;
}
