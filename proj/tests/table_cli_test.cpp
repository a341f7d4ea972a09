#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "liecg/engine.hpp"
#include "liecg/table_io.hpp"

using namespace liecg;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::string strip(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ws(line);
    std::string tok, joined;
    while (ws >> tok) joined += (joined.empty() ? "" : " ") + tok;
    if (!joined.empty()) out += joined + "\n";
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + LIECG_CLI + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Naming, Examples) {
  EXPECT_EQ(name_state(Chain::SU8, "120", "20'", q(3, 2)), "Delta");
  EXPECT_EQ(name_state(Chain::SU8, "63", "15", q(1)), "rho");
  EXPECT_EQ(name_state(Chain::SU8, "120", "20", q(1, 2)), "Sigma");
  EXPECT_EQ(name_state(Chain::SU4, "20'", "6", q(1)), "Sigma_c*");
  EXPECT_EQ(name_state(Chain::SU6, "35", "8", q(1)), "rho");
  EXPECT_EQ(name_state(Chain::SU6, "56", "8", q(1, 2)), "Sigma");
  EXPECT_EQ(name_state(Chain::SU3, "8", "", q(1, 2), q(1)), "K");
  try {
    name_state(Chain::SU8, "63", "20", q(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownMultiplet);
  }
}

TEST(NamingProperty, InjectivePerChain) {
  for (Chain c : {Chain::SU8, Chain::SU6, Chain::SU4, Chain::SU3}) {
    std::set<std::string> keys, names;
    for (const auto& p : particle_table()) {
      std::string key;
      std::string name;
      switch (c) {
        case Chain::SU8:
          if (p.su8.empty()) continue;
          key = p.su8 + "|" + p.su4 + "|" + p.J.get_str();
          name = name_state(c, p.su8, p.su4, p.J);
          break;
        case Chain::SU6:
          if (p.su6.empty()) continue;
          key = p.su6 + "|" + p.su3 + "|" + p.J.get_str();
          name = name_state(c, p.su6, p.su3, p.J);
          break;
        case Chain::SU4:
          if (p.su4.empty()) continue;
          key = p.su4 + "|" + p.su3 + "|" + p.C.get_str();
          name = name_state(c, p.su4, p.su3, p.C);
          break;
        case Chain::SU3:
          if (p.su3.empty()) continue;
          key = p.su3 + "|" + p.I.get_str() + "|" + p.Y.get_str();
          name = name_state(c, p.su3, "", p.I, p.Y);
          break;
      }
      if (keys.insert(key).second) EXPECT_TRUE(names.insert(name).second) << chain_group(c) << " " << name;
      EXPECT_EQ(find_symbol(name).name, name);
    }
    EXPECT_EQ(keys.size(), names.size());
  }
}

TEST(Fixtures, RowsAreUnitNormalized) {
  for (const Product& p : tabulated_products()) {
    Fixture f = load_fixture(fixture_path(p.chain, p.R1, p.R2));
    EXPECT_FALSE(f.rows.empty());
    for (auto& r : f.rows) {
      Rational s = 0;
      for (auto& [label, v] : r.cols) s += v.radicand();
      EXPECT_EQ(s, 1) << f.group << " " << r.lhs;
    }
  }
}

TEST(Emit, TextMatchesFixtureFiles) {
  for (const Product& p : tabulated_products()) {
    auto t = compute_table<Rational>(p.chain, p.R1, p.R2);
    EXPECT_EQ(strip(emit_string(t, Format::Text)), strip(slurp(fixture_path(p.chain, p.R1, p.R2))))
        << chain_group(p.chain) << " " << p.R1 << " x " << p.R2;
  }
}

TEST(Emit, JsonRoundTrip) {
  for (const Product& p : tabulated_products()) {
    if (p.chain == Chain::SU8) continue;
    auto t = compute_table<Rational>(p.chain, p.R1, p.R2);
    std::string js = emit_string(t, Format::Json);
    auto back = parse_json_table(js);
    EXPECT_EQ(emit_string(back, Format::Json), js);
    ASSERT_EQ(back.rows.size(), t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      EXPECT_EQ(back.rows[i].lhs(back.chain), t.rows[i].lhs(t.chain));
      ASSERT_EQ(back.rows[i].cols.size(), t.rows[i].cols.size());
      for (std::size_t k = 0; k < t.rows[i].cols.size(); ++k) {
        EXPECT_TRUE(back.rows[i].cols[k].same_column(t.rows[i].cols[k]));
        EXPECT_EQ(back.rows[i].cols[k].value.sign, t.rows[i].cols[k].value.sign);
        EXPECT_EQ(back.rows[i].cols[k].value.sq, t.rows[i].cols[k].value.sq);
      }
    }
  }
}

TEST(Emit, JsonSchema) {
  auto j = nlohmann::json::parse(emit_string(compute_table<Rational>(Chain::SU3, "8", "8"), Format::Json));
  EXPECT_EQ(j["product"]["group"], "SU3");
  EXPECT_EQ(j["product"]["R1"], "8");
  EXPECT_TRUE(j["chain"].is_string());
  for (auto& r : j["rows"]) {
    for (const char* k : {"R", "sigma", "mu", "gamma", "xi", "cols"}) EXPECT_TRUE(r.contains(k)) << k;
    for (auto& c : r["cols"]) {
      for (const char* k : {"mu1", "mu2", "gammap", "sym", "sign", "p", "q"}) EXPECT_TRUE(c.contains(k)) << k;
      Rational x(Integer(c["p"].get<std::string>()), Integer(c["q"].get<std::string>()));
      EXPECT_TRUE(is_canonical(x));
      EXPECT_NE(c["sign"].get<int>(), 0);
    }
  }
}

TEST(Emit, Latex) {
  auto t = compute_table<Rational>(Chain::SU8, "63", "63");
  std::string s = emit_string(t, Format::Latex);
  EXPECT_NE(s.find("\\sqrt{\\frac{5}{7}}"), std::string::npos);
  EXPECT_NE(s.find("\\begin{eqnarray}"), std::string::npos);
  EXPECT_EQ(latex_symbol("omega_1"), "\\omega_1");
  EXPECT_EQ(parse_format("latex"), Format::Latex);
  EXPECT_THROW(parse_format("xml"), Error);
}

TEST(Verify, MatchingFixtureHasNoDiff) {
  auto t = compute_table<Rational>(Chain::SU3, "8", "8");
  EXPECT_TRUE(verify_against_fixture(t, load_fixture(fixture_path(Chain::SU3, "8", "8"))).ok());
}

TEST(Verify, InjectedSignFlipIsReported) {
  std::istringstream in(slurp(fixture_path(Chain::SU8, "63", "63")));
  Fixture f = parse_fixture(in);
  auto& r = f.rows[0];
  ASSERT_GE(r.cols.size(), 2u);
  r.cols[1].second = SignedRadical(-r.cols[1].second.sign(), r.cols[1].second.radicand());
  auto d = verify_against_fixture(compute_table<Rational>(Chain::SU8, "63", "63"), f);
  ASSERT_EQ(d.lines.size(), 1u);
  EXPECT_NE(d.lines[0].find("|1;1_1>"), std::string::npos);
  EXPECT_NE(d.lines[0].find("column 2"), std::string::npos);
}

TEST(Verify, InjectedXiAndOrderFaults) {
  std::istringstream in(slurp(fixture_path(Chain::SU3, "8", "8")));
  Fixture f = parse_fixture(in);
  f.rows[0].xi = -f.rows[0].xi;
  std::swap(f.rows[1], f.rows[2]);
  auto d = verify_against_fixture(compute_table<Rational>(Chain::SU3, "8", "8"), f);
  EXPECT_GE(d.lines.size(), 2u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify SU3 8 8").code, 0);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("decompose SU8 999").code, 2);
  EXPECT_EQ(run("sf SU3 8 8 --format xml").code, 2);
  EXPECT_EQ(run("cg SU3 8 8 1 1,0,-1/1,-1/1 1,0,-1/1,-1/1 0,0,0/0,0/0").code, 2);

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "liecg_cli_test";
  fs::create_directories(dir);
  std::string text = slurp(fixture_path(Chain::SU3, "8", "8"));
  auto pos = text.find("+sqrt(3/8)");
  ASSERT_NE(pos, std::string::npos);
  text[pos] = '-';
  std::ofstream(dir / "su3_8x8.fix") << text;
  CliResult bad = run("verify SU3 8 8", "LIECG_FIXTURES=" + dir.string());
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, Subcommands) {
  CliResult d = run("decompose SU8 945");
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("15_{s,3}"), std::string::npos);
  CliResult c = run("couple SU8 63 63");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("3969"), std::string::npos);
  CliResult s = run("sf SU6 56 35 --format json");
  EXPECT_EQ(s.code, 0);
  EXPECT_NO_THROW(parse_json_table(s.out));
  CliResult g = run("cg SU3 8 8 1 1,0,-1/1,-1/1 1,0,-1/1,-1/-1 0,0,0/0,0/0");
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("sqrt(1/8)"), std::string::npos);
}

TEST(Cli, EmitFromJsonInput) {
  namespace fs = std::filesystem;
  fs::path f = fs::temp_directory_path() / "liecg_emit_test.json";
  std::ofstream(f) << emit_string(compute_table<Rational>(Chain::SU3, "10", "8"), Format::Json);
  CliResult r = run("emit --format text --input " + f.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(strip(r.out), strip(slurp(fixture_path(Chain::SU3, "10", "8"))));
  fs::remove(f);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  CliResult a = run("--threads 1 sf SU4 20 15 --format json");
  CliResult b = run("--threads 4 sf SU4 20 15 --format json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
