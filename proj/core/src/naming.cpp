#include "liecg/naming.hpp"

#include <algorithm>

#include "liecg/errors.hpp"

namespace liecg {

Chain parse_chain(const std::string& g) {
  std::string s;
  for (char ch : g)
    if (ch != '(' && ch != ')' && ch != ' ') s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "SU8") return Chain::SU8;
  if (s == "SU6") return Chain::SU6;
  if (s == "SU4") return Chain::SU4;
  if (s == "SU3") return Chain::SU3;
  throw Error(ErrorKind::Usage, "unknown group " + g);
}

int chain_rank(Chain c) {
  switch (c) {
    case Chain::SU8: return 8;
    case Chain::SU6: return 6;
    case Chain::SU4: return 4;
    case Chain::SU3: return 3;
  }
  return 0;
}

int chain_flavors(Chain c) { return spin_flavor(c) ? chain_rank(c) / 2 : chain_rank(c); }
bool spin_flavor(Chain c) { return c == Chain::SU8 || c == Chain::SU6; }
std::string chain_group(Chain c) { return "SU" + std::to_string(chain_rank(c)); }

std::string chain_name(Chain c) {
  switch (c) {
    case Chain::SU8: return "SU8>SU4xSU2";
    case Chain::SU6: return "SU6>SU3xSU2";
    case Chain::SU4: return "SU4>SU3xU1";
    case Chain::SU3: return "SU3>SU2xU1";
  }
  return "";
}

const std::vector<ParticleSymbol>& particle_table() {
  auto q = [](const char* s) { return Rational(s); };
  static const std::vector<ParticleSymbol> t = [&] {
    struct Raw {
      const char *name, *su8, *su6, *su4, *su3, *I, *Y, *C, *J;
    };
    static const Raw raw[] = {
        {"Delta", "120", "56", "20'", "10", "3/2", "1", "0", "3/2"},
        {"Sigma*", "120", "56", "20'", "10", "1", "0", "0", "3/2"},
        {"Xi*", "120", "56", "20'", "10", "1/2", "-1", "0", "3/2"},
        {"Omega", "120", "56", "20'", "10", "0", "-2", "0", "3/2"},
        {"Sigma_c*", "120", "", "20'", "6", "1", "2/3", "1", "3/2"},
        {"Xi_c*", "120", "", "20'", "6", "1/2", "-1/3", "1", "3/2"},
        {"Omega_c*", "120", "", "20'", "6", "0", "-4/3", "1", "3/2"},
        {"Xi_cc*", "120", "", "20'", "3", "1/2", "1/3", "2", "3/2"},
        {"Omega_cc*", "120", "", "20'", "3", "0", "-2/3", "2", "3/2"},
        {"Omega_ccc", "120", "", "20'", "1", "0", "0", "3", "3/2"},
        {"Sigma", "120", "56", "20", "8", "1", "0", "0", "1/2"},
        {"N", "120", "56", "20", "8", "1/2", "1", "0", "1/2"},
        {"Xi", "120", "56", "20", "8", "1/2", "-1", "0", "1/2"},
        {"Lambda", "120", "56", "20", "8", "0", "0", "0", "1/2"},
        {"Sigma_c", "120", "", "20", "6", "1", "2/3", "1", "1/2"},
        {"Xi_c'", "120", "", "20", "6", "1/2", "-1/3", "1", "1/2"},
        {"Omega_c", "120", "", "20", "6", "0", "-4/3", "1", "1/2"},
        {"Xi_c", "120", "", "20", "3*", "1/2", "-1/3", "1", "1/2"},
        {"Lambda_c", "120", "", "20", "3*", "0", "2/3", "1", "1/2"},
        {"Xi_cc", "120", "", "20", "3", "1/2", "1/3", "2", "1/2"},
        {"Omega_cc", "120", "", "20", "3", "0", "-2/3", "2", "1/2"},
        {"rho", "63", "35", "15", "8", "1", "0", "0", "1"},
        {"K*", "63", "35", "15", "8", "1/2", "1", "0", "1"},
        {"Kbar*", "63", "35", "15", "8", "1/2", "-1", "0", "1"},
        {"omega_8", "63", "35", "15", "8", "0", "0", "0", "1"},
        {"D*", "63", "", "15", "3*", "1/2", "-1/3", "1", "1"},
        {"D_s*", "63", "", "15", "3*", "0", "2/3", "1", "1"},
        {"Dbar*", "63", "", "15", "3", "1/2", "1/3", "-1", "1"},
        {"Dbar_s*", "63", "", "15", "3", "0", "-2/3", "-1", "1"},
        {"psi", "63", "", "15", "1", "0", "0", "0", "1"},
        {"omega_1", "63", "35", "1", "1", "0", "0", "0", "1"},
        {"pi", "63", "35", "15", "8", "1", "0", "0", "0"},
        {"K", "63", "35", "15", "8", "1/2", "1", "0", "0"},
        {"Kbar", "63", "35", "15", "8", "1/2", "-1", "0", "0"},
        {"eta", "63", "35", "15", "8", "0", "0", "0", "0"},
        {"D", "63", "", "15", "3*", "1/2", "-1/3", "1", "0"},
        {"D_s", "63", "", "15", "3*", "0", "2/3", "1", "0"},
        {"Dbar", "63", "", "15", "3", "1/2", "1/3", "-1", "0"},
        {"Dbar_s", "63", "", "15", "3", "0", "-2/3", "-1", "0"},
        {"eta_c", "63", "", "15", "1", "0", "0", "0", "0"},
        {"eta'", "1", "1", "1", "1", "0", "0", "0", "0"},
    };
    std::vector<ParticleSymbol> v;
    for (auto& r : raw) v.push_back({r.name, r.su8, r.su6, r.su4, r.su3, q(r.I), q(r.Y), q(r.C), q(r.J)});
    return v;
  }();
  return t;
}

std::string name_state(Chain c, const std::string& R, const std::string& sub, const Rational& q1, const Rational& q2) {
  const ParticleSymbol* best = nullptr;
  for (const auto& p : particle_table()) {
    bool ok = false;
    switch (c) {
      case Chain::SU8: ok = p.su8 == R && p.su4 == sub && p.J == q1; break;
      case Chain::SU6: ok = p.su6 == R && p.su3 == sub && p.J == q1; break;
      case Chain::SU4: ok = p.su4 == R && p.su3 == sub && p.C == q1; break;
      case Chain::SU3: ok = p.su3 == R && p.I == q1 && p.Y == q2; break;
    }
    if (ok && (!best || p.J < best->J)) best = &p;
  }
  if (!best)
    throw Error(ErrorKind::UnknownMultiplet, "no particle symbol for " + R + " / " + sub + " / " + q1.get_str() +
                                                 (c == Chain::SU3 ? " / " + q2.get_str() : ""));
  return best->name;
}

const ParticleSymbol& find_symbol(const std::string& name) {
  for (const auto& p : particle_table())
    if (p.name == name) return p;
  throw Error(ErrorKind::UnknownMultiplet, "unknown particle symbol " + name);
}

}  // namespace liecg
