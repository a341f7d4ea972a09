#include "liecg/table_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "liecg/errors.hpp"
#include "liecg/irrep.hpp"

namespace liecg {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string value_str(const SignedRadical& v) { return v.str(); }

}  // namespace

Fixture parse_fixture(std::istream& in) {
  Fixture f;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      // header "# SU8 63 x 63"
      std::istringstream h(t.substr(1));
      std::string g, a, x, b;
      if (f.group.empty() && h >> g >> a >> x >> b && x == "x" && g.rfind("SU", 0) == 0) {
        f.group = g;
        f.R1 = a;
        f.R2 = b;
      }
      continue;
    }
    if (t.rfind("ROW ", 0) == 0) {
      std::istringstream r(t.substr(4));
      std::string xi, lhs;
      r >> xi >> lhs;
      if ((xi != "+" && xi != "-") || lhs.empty())
        throw Error(ErrorKind::Usage, "fixture line " + std::to_string(lineno) + ": bad ROW");
      f.rows.push_back({xi == "+" ? 1 : -1, lhs, {}});
      continue;
    }
    if (f.rows.empty()) throw Error(ErrorKind::Usage, "fixture line " + std::to_string(lineno) + ": entry before ROW");
    auto sp = t.rfind(' ');
    if (sp == std::string::npos) throw Error(ErrorKind::Usage, "fixture line " + std::to_string(lineno) + ": bad entry");
    f.rows.back().cols.emplace_back(trim(t.substr(0, sp)), parse_srad(t.substr(sp + 1)));
  }
  return f;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot open fixture " + path);
  return parse_fixture(in);
}

std::string fixture_path(Chain c, const std::string& R1, const std::string& R2) {
  auto enc = [](std::string s) {
    std::string o;
    for (char ch : s) o += ch == '\'' ? 'p' : ch == '*' ? 'b' : ch;
    return o;
  };
  std::string g = chain_group(c);
  for (auto& ch : g) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return fixture_dir() + "/" + g + "_" + enc(R1) + "x" + enc(R2) + ".fix";
}

Fixture to_fixture(const SFTable<Rational>& t) {
  Fixture f;
  f.group = chain_group(t.chain);
  f.R1 = t.R1;
  f.R2 = t.R2;
  for (const auto& r : t.rows) {
    FixtureRow fr{r.xi, r.lhs(t.chain), {}};
    for (const auto& c : r.cols) fr.cols.emplace_back(c.label(), radical(c.value));
    f.rows.push_back(std::move(fr));
  }
  return f;
}

FixtureDiff verify_against_fixture(const SFTable<Rational>& t, const Fixture& f) {
  FixtureDiff d;
  Fixture g = to_fixture(t);
  std::map<std::string, std::size_t> ref;
  for (std::size_t i = 0; i < f.rows.size(); ++i) ref[f.rows[i].lhs] = i;
  std::map<std::string, std::size_t> got;
  for (std::size_t i = 0; i < g.rows.size(); ++i) got[g.rows[i].lhs] = i;
  for (auto& r : f.rows)
    if (!got.count(r.lhs)) d.lines.push_back("missing row " + r.lhs);
  for (auto& r : g.rows)
    if (!ref.count(r.lhs)) d.lines.push_back("extra row " + r.lhs);
  // row order over the rows both sides have
  std::vector<std::string> a, b;
  for (auto& r : f.rows)
    if (got.count(r.lhs)) a.push_back(r.lhs);
  for (auto& r : g.rows)
    if (ref.count(r.lhs)) b.push_back(r.lhs);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) {
      d.lines.push_back("row order differs at " + a[i] + " (computed " + b[i] + ")");
      break;
    }
  for (auto& r : g.rows) {
    auto it = ref.find(r.lhs);
    if (it == ref.end()) continue;
    const FixtureRow& e = f.rows[it->second];
    if (e.xi != r.xi)
      d.lines.push_back(r.lhs + ": xi " + std::string(r.xi > 0 ? "+" : "-") + ", expected " + (e.xi > 0 ? "+" : "-"));
    const std::size_t n = std::max(e.cols.size(), r.cols.size());
    for (std::size_t k = 0; k < n; ++k) {
      std::string want = k < e.cols.size() ? e.cols[k].first + " " + value_str(e.cols[k].second) : "(none)";
      std::string have = k < r.cols.size() ? r.cols[k].first + " " + value_str(r.cols[k].second) : "(none)";
      if (want != have) d.lines.push_back(r.lhs + " column " + std::to_string(k + 1) + ": " + have + ", expected " + want);
    }
  }
  return d;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  throw Error(ErrorKind::Usage, "unknown format " + s + " (text, json, latex)");
}

std::string latex_symbol(const std::string& name0) {
  static const char* greek[] = {"rho", "pi", "omega", "eta", "Delta", "Sigma", "Xi", "Omega", "Lambda", "psi"};
  std::string name = name0, sup;
  while (!name.empty() && (name.back() == '*' || name.back() == '\'')) {
    sup = (name.back() == '*' ? "^*" : "^\\prime") + sup;
    name.pop_back();
  }
  std::string base = name, sub;
  auto us = name.find('_');
  if (us != std::string::npos) {
    base = name.substr(0, us);
    sub = name.substr(us + 1);
  }
  bool bar = base.size() > 3 && base.compare(base.size() - 3, 3, "bar") == 0;
  if (bar) base = base.substr(0, base.size() - 3);
  for (const char* g : greek)
    if (base == g) base = "\\" + base;
  std::string out = bar ? "{\\bar " + base + "}" : base;
  if (!sub.empty()) out += sub.size() > 1 ? "_{" + sub + "}" : "_" + sub;
  return out + sup;
}

std::string latex_irrep(const std::string& label) {
  std::string out;
  int primes = 0;
  bool star = false;
  std::size_t i = 0;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) out += label[i++];
  for (; i < label.size() && (label[i] == '\'' || label[i] == '*'); ++i) {
    if (label[i] == '*') star = true;
    else ++primes;
  }
  std::string sup;
  if (primes == 1) sup = "\\prime";
  if (primes == 2) sup = "\\prime\\prime";
  if (star) sup += "*";
  if (!sup.empty()) out += sup.size() > 1 ? "^{" + sup + "}" : "^" + sup;
  out += label.substr(i);
  return out;
}

namespace {

std::string latex_frac(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string s = sgn(q) < 0 ? "-" : "";
  return s + "\\frac{" + Integer(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_lhs(const SFTableRow<Rational>& r, Chain c) {
  std::string R = r.sigma.empty() ? r.R : r.R + "_" + r.sigma;
  std::string s = "|\\mathbf{" + latex_irrep(R) + "};";
  if (spin_flavor(c)) {
    auto p = r.mu.rfind('_');
    std::string sub = r.gamma.empty() ? r.mu.substr(p + 1) : "{" + r.gamma + "," + r.mu.substr(p + 1) + "}";
    s += "\\mathbf{" + latex_irrep(r.mu.substr(0, p)) + "_" + sub + "}";
  } else {
    auto p = r.mu.find(',');
    std::string a = r.mu.substr(0, p), b = r.mu.substr(p + 1);
    if (c == Chain::SU4) s += "\\mathbf{" + latex_irrep(a) + "}," + b;
    else s += latex_frac(Rational(a)) + "," + latex_frac(Rational(b));
  }
  return s + "\\rangle";
}

std::string latex_col(const SFColumn<Rational>& c) {
  std::string pair = latex_symbol(c.mu1) + "," + latex_symbol(c.mu2);
  std::string s = c.gammap.empty() ? "|" + pair + "\\rangle" : "|(" + pair + ")_" + c.gammap + "\\rangle";
  if (!c.sym.empty()) s += "_" + c.sym;
  return s;
}

void emit_text(std::ostream& out, const SFTable<Rational>& t) {
  out << "# " << chain_group(t.chain) << " " << t.R1 << " x " << t.R2 << "\n";
  out << "# chain " << chain_name(t.chain) << "\n\n";
  for (const auto& r : t.rows) {
    out << "ROW " << (r.xi > 0 ? "+" : "-") << " " << r.lhs(t.chain) << "\n";
    for (const auto& c : r.cols) out << "  " << c.label() << " " << radical(c.value).str() << "\n";
  }
}

void emit_latex(std::ostream& out, const SFTable<Rational>& t) {
  out << "% " << chain_group(t.chain) << ": " << t.R1 << " x " << t.R2 << "\n";
  std::string block;
  bool open = false;
  for (const auto& r : t.rows) {
    if (!open || r.mu != block) {
      if (open) out << "\n\\end{eqnarray}\n";
      out << "\\begin{eqnarray}\n";
      block = r.mu;
      open = true;
    } else {
      out << "\n\\nonumber \\\\\n";
    }
    out << "(" << (r.xi > 0 ? "+" : "-") << ")~~&\n" << latex_lhs(r, t.chain) << "\n&=\n";
    bool first = true;
    for (const auto& c : r.cols) {
      const Rational& q = c.value.sq;
      std::string sign = c.value.sign < 0 ? "-" : first ? "\\phantom{+}" : "+";
      std::string mag = q == 1 ? "" : "\\sqrt{\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}}";
      out << (first ? "" : "\n") << sign << mag << latex_col(c);
      first = false;
    }
  }
  if (open) out << "\n\\end{eqnarray}\n";
}

void emit_json(std::ostream& out, const SFTable<Rational>& t) {
  nlohmann::ordered_json j;
  j["product"] = {{"group", chain_group(t.chain)}, {"R1", t.R1}, {"R2", t.R2}};
  j["chain"] = chain_name(t.chain);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json jr;
    jr["R"] = r.R;
    jr["sigma"] = r.sigma;
    jr["mu"] = r.mu;
    jr["gamma"] = r.gamma;
    jr["xi"] = r.xi;
    auto cols = nlohmann::ordered_json::array();
    for (const auto& c : r.cols) {
      Rational q = c.value.sq;
      q.canonicalize();
      cols.push_back({{"mu1", c.mu1},
                      {"mu2", c.mu2},
                      {"gammap", c.gammap},
                      {"sym", c.sym},
                      {"sign", c.value.sign},
                      {"p", q.get_num().get_str()},
                      {"q", q.get_den().get_str()}});
    }
    jr["cols"] = std::move(cols);
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  out << j.dump(1) << "\n";
}

Chain chain_from_name(const std::string& s) {
  for (Chain c : {Chain::SU8, Chain::SU6, Chain::SU4, Chain::SU3})
    if (chain_name(c) == s) return c;
  throw Error(ErrorKind::Usage, "unknown chain " + s);
}

}  // namespace

void emit(std::ostream& out, const SFTable<Rational>& t, Format f) {
  switch (f) {
    case Format::Text: emit_text(out, t); break;
    case Format::Json: emit_json(out, t); break;
    case Format::Latex: emit_latex(out, t); break;
  }
}

std::string emit_string(const SFTable<Rational>& t, Format f) {
  std::ostringstream s;
  emit(s, t, f);
  return s.str();
}

SFTable<Rational> parse_json_table(const std::string& text) {
  SFTable<Rational> t;
  try {
    auto j = nlohmann::json::parse(text);
    t.chain = chain_from_name(j.at("chain").get<std::string>());
    t.R1 = j.at("product").at("R1").get<std::string>();
    t.R2 = j.at("product").at("R2").get<std::string>();
    for (const auto& jr : j.at("rows")) {
      SFTableRow<Rational> r;
      r.R = jr.at("R").get<std::string>();
      r.sigma = jr.at("sigma").get<std::string>();
      r.mu = jr.at("mu").get<std::string>();
      r.gamma = jr.at("gamma").get<std::string>();
      r.xi = jr.at("xi").get<int>();
      for (const auto& jc : jr.at("cols")) {
        SFColumn<Rational> c;
        c.mu1 = jc.at("mu1").get<std::string>();
        c.mu2 = jc.at("mu2").get<std::string>();
        c.gammap = jc.at("gammap").get<std::string>();
        c.sym = jc.at("sym").get<std::string>();
        c.value.sign = jc.at("sign").get<int>();
        c.value.sq = Rational(Integer(jc.at("p").get<std::string>()), Integer(jc.at("q").get<std::string>()));
        c.value.sq.canonicalize();
        r.cols.push_back(std::move(c));
      }
      t.rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Usage, std::string("bad table JSON: ") + e.what());
  }
  return t;
}

}  // namespace liecg
