#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecg/coupling.hpp"
#include "liecg/irrep.hpp"
#include "liecg/naming.hpp"
#include "liecg/sf.hpp"
#include "liecg/spin_flavor.hpp"

namespace liecg {

struct EngineOptions {
  bool check_zeta = false;
  // overlap order of the reversed product used for exchange phases; by default the
  // baryon-first order for spin-flavor chains and the plain order for flavor chains
  std::optional<SubOrder> reversed_order;
};

// Scalar-factor table of R1 (x) R2 in the given chain, rows and columns in presentation order.
template <class F>
SFTable<F> compute_table(Chain c, const std::string& R1, const std::string& R2, const EngineOptions& opt = {});

// Clebsch-Gordan series with sigma labels; dimensions add up to dim(R1) dim(R2).
struct SeriesEntry {
  std::string label;  // "63_s"
  long long dim = 0;
  int swap = 0;       // exchange eigenvalue in symmetric products
};
std::vector<SeriesEntry> cg_series(Chain c, const std::string& R1, const std::string& R2);

// Subgroup content of an irrep. Spin-flavor chains: realized from the factor model or from
// a coupled block of a product; flavor chains: branching with the U(1) charge.
struct ReducedEntry {
  std::string label;  // "15_{s,3}", "3*,1", "1/2,-1"
  std::string sub;    // flavor label (spin-flavor, SU4) or I (SU3)
  Rational q;         // 2J+1, C or Y
  int gamma = 0, ngamma = 1;
};
std::vector<ReducedEntry> decompose(Chain c, const std::string& R);

// A basis state of one factor or of the coupled irrep. Spin-flavor chains: sub-block label
// (with gamma if repeated), physical flavor pattern and 2 Jz. Flavor chains: physical GT
// pattern only.
struct StateSpec {
  std::string mu;
  Pattern pattern;
  int twice_jz = 0;
};
StateSpec parse_state(Chain c, const std::string& s);  // "15_3:1,0,0,-1/1,0,-1/1,-1/1:2" or "1,0,-1/1,0/1"

// Full Clebsch-Gordan coefficient <R1 s1; R2 s2 | R, s> as the product of scalar factors
// down the chain (sum over intermediate multiplicity labels). R carries sigma ("63_s").
// IndexMismatch when the states are inconsistent.
template <class F>
SignedSq<F> full_cg(Chain c, const std::string& R1, const std::string& R2, const std::string& R, const StateSpec& s1,
                    const StateSpec& s2, const StateSpec& s);

// Flavor-chain recursion on canonical patterns (exposed for tests).
template <class F>
SignedSq<F> flavor_cg(int m, const Weight& a, const Weight& b, std::size_t irrep, const Pattern& pa, const Pattern& pb,
                      const Pattern& p);

// Exact sum of signed square roots that must collapse to one radical (NotCommensurable
// otherwise); plain sum for double.
template <class F>
SignedSq<F> radical_sum(const std::vector<SignedSq<F>>& terms);

// Products with reference tables.
struct Product {
  Chain chain;
  std::string R1, R2;
};
const std::vector<Product>& tabulated_products();

std::string copy_label(int copy, int ncopies);  // "", "s", "a", "b"
std::string irrep_label(const Weight& hw, int copy, int ncopies);
std::string charge_str(const Rational& q);       // "1/2", "-1", "0"

}  // namespace liecg
