#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <optional>

#include "liecg/coupling.hpp"
#include "liecg/engine.hpp"
#include "liecg/gt.hpp"
#include "liecg/spin_flavor.hpp"

using namespace liecg;

namespace {

using Vec = SparseVec<Rational>;

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// sum_ij e^i_j e^j_i applied to v
Vec casimir(const Space<Rational>& s, const Vec& v) {
  Accum<Rational> acc;
  for (int i = 0; i < s.rank(); ++i)
    for (int j = 0; j < s.rank(); ++j) acc.add(s.apply(i, j, s.apply(j, i, v)), Rational(1));
  return acc.take();
}

// eigenvalue if v is an eigenvector, otherwise nullopt
std::optional<Rational> eigenvalue(const Vec& v, const Vec& w) {
  if (v.empty()) return std::nullopt;
  Rational c = w.at(v.e.front().first) / v.e.front().second;
  if (!(scaled(v, c) == w)) return std::nullopt;
  return c;
}

void check_blocks(const Space<Rational>& s, const std::vector<GTBlock<Rational>>& blocks, std::size_t dim) {
  std::size_t total = 0;
  std::vector<const Vec*> all;
  for (auto& b : blocks) {
    total += b.size();
    EXPECT_EQ(static_cast<long long>(b.size()), dimension_of_weight(b.top()));
    EXPECT_TRUE(baird_ok(s, s.rank(), b));
    std::optional<Rational> c0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      EXPECT_GT(sgn(s.norm2(b.states[k])), 0);
      auto c = eigenvalue(b.states[k], casimir(s, b.states[k]));
      ASSERT_TRUE(c.has_value()) << "Casimir does not act as a scalar";
      if (!c0) c0 = c;
      EXPECT_EQ(*c, *c0);
      all.push_back(&b.states[k]);
    }
  }
  EXPECT_EQ(total, dim);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) EXPECT_EQ(s.ip(*all[a], *all[b]), 0);
}

std::vector<long long> block_dims(const std::vector<GTBlock<Rational>>& bs) {
  std::vector<long long> d;
  for (auto& b : bs) d.push_back(static_cast<long long>(b.size()));
  return d;
}

}  // namespace

TEST(Decomposer, ThreeTimesThreeBar) {
  TensorSpace<Rational> s(3, {Slot::Fund, Slot::AntiFund});
  auto bs = decompose_group(s);
  EXPECT_EQ(block_dims(bs), (std::vector<long long>{8, 1}));
  check_blocks(s, bs, 9);
}

TEST(Decomposer, EightBarTimesEight) {
  TensorSpace<Rational> s(8, {Slot::AntiFund, Slot::Fund});
  auto bs = decompose_group(s);
  EXPECT_EQ(block_dims(bs), (std::vector<long long>{63, 1}));
  check_blocks(s, bs, 64);
}

TEST(Decomposer, SymmetricSliceOfEightCubed) {
  TensorSpace<Rational> s(8, {Slot::Fund, Slot::Fund, Slot::Fund});
  std::vector<Vec> sym;
  for (int a = 0; a < 8; ++a)
    for (int b = a; b < 8; ++b)
      for (int c = b; c < 8; ++c) {
        std::vector<int> w{a, b, c};
        Accum<Rational> acc;
        do acc.add(s.index(w), Rational(1));
        while (std::next_permutation(w.begin(), w.end()));
        sym.push_back(acc.take());
      }
  auto bs = decompose_group(s, &sym);
  EXPECT_EQ(block_dims(bs), (std::vector<long long>{120}));
  check_blocks(s, bs, 120);
}

TEST(DecomposerProperty, MixedTensorSpaces) {
  for (auto f : {std::vector<Slot>{Slot::Fund, Slot::Fund, Slot::AntiFund},
                 std::vector<Slot>{Slot::Fund, Slot::Fund, Slot::Fund}}) {
    TensorSpace<Rational> s(3, f);
    check_blocks(s, decompose_group(s), s.dim());
  }
  TensorSpace<Rational> s4(4, {Slot::Fund, Slot::Fund, Slot::AntiFund});
  check_blocks(s4, decompose_group(s4), s4.dim());
}

TEST(DecomposerProperty, CoupledFlavorBlocks) {
  // every coupled block of the flavor products: orthogonal, Baird, Casimir
  struct P {
    int m;
    Weight a, b;
  };
  for (const P& p : {P{3, {2, 1, 0}, {2, 1, 0}}, P{3, {3, 0, 0}, {2, 1, 0}}, P{3, {2, 0, 0}, {1, 1, 0}},
                     P{4, {2, 1, 1, 0}, {2, 1, 1, 0}}, P{4, {3, 0, 0, 0}, {2, 1, 1, 0}}}) {
    const auto& c = couple_abstract<Rational>(p.m, p.a, p.b);
    std::vector<GTBlock<Rational>> bs;
    for (auto& ir : c.irreps) bs.push_back(ir.block);
    check_blocks(*c.P, bs, c.P->dim());
  }
}

TEST(DecomposerProperty, FactorModelsSatisfyBairdAndAnchors) {
  for (auto [nf, label] : {std::pair<int, const char*>{4, "63"}, {4, "120"}, {3, "35"}, {3, "56"}}) {
    const auto& fm = factor_model<Rational>(nf, parse_irrep(2 * nf, label));
    ViewSpace<Rational> F(fm.model, product_embedding(nf).flavor_map());
    for (std::size_t k = 0; k < fm.states.size(); ++k)
      for (int i = 0; i + 1 < nf; ++i) {
        Vec img = F.apply(i, i + 1, fm.states[k]);
        for (std::size_t l = 0; l < fm.states.size(); ++l)
          if (fm.block_of[l] == fm.block_of[k] && fm.twice_jz[l] == fm.twice_jz[k])
            EXPECT_GE(sgn(fm.model->ip(fm.states[l], img)), 0) << label;
      }
    auto anchors = anchors_for(nf, parse_irrep(2 * nf, label));
    EXPECT_FALSE(anchors.empty());
    for (auto& a : anchors) EXPECT_GT(sgn(anchor_value(fm, a)), 0) << label;
  }
}

TEST(Decomposer, Series) {
  auto labels = [](Chain c, const char* a, const char* b) {
    std::vector<std::string> out;
    for (auto& e : cg_series(c, a, b)) out.push_back(e.label);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<std::string> want{"1", "1232", "63_a", "63_s", "720", "945", "945*"};
  EXPECT_EQ(labels(Chain::SU8, "63", "63"), want);
  want = {"120", "168", "2520", "4752"};
  EXPECT_EQ(labels(Chain::SU8, "120", "63"), want);
}

TEST(Decomposer, Completeness) {
  auto total = [](Chain c, const char* a, const char* b) {
    long long t = 0;
    for (auto& e : cg_series(c, a, b)) t += e.dim;
    return t;
  };
  EXPECT_EQ(total(Chain::SU8, "63", "63"), 3969);
  EXPECT_EQ(total(Chain::SU8, "120", "63"), 7560);
  EXPECT_EQ(total(Chain::SU6, "35", "35"), 1225);
  EXPECT_EQ(total(Chain::SU6, "56", "35"), 1960);
  for (const Product& p : tabulated_products()) {
    int n = chain_rank(p.chain);
    EXPECT_EQ(total(p.chain, p.R1.c_str(), p.R2.c_str()),
              dimension(parse_irrep(n, p.R1)) * dimension(parse_irrep(n, p.R2)));
  }
}

TEST(Decomposer, SubgroupContentMatchesReference) {
  for (auto& [n, label] : reduction_irreps()) {
    Chain c = n == 8 ? Chain::SU8 : Chain::SU6;
    std::vector<std::string> want, got;
    for (auto& e : expected_reduction(n, label)) {
      std::string m = std::to_string(e.spin_mult);
      want.push_back(e.gamma ? e.flavor + "_{" + std::string(1, e.gamma) + "," + m + "}" : e.flavor + "_" + m);
    }
    for (auto& e : decompose(c, label)) got.push_back(e.label);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(want, got) << n << " " << label;
  }
}

TEST(Decomposer, ExchangePhases) {
  auto xi = [](const SFTable<Rational>& t, const std::string& lhs) {
    for (auto& r : t.rows)
      if (r.lhs(t.chain) == lhs) return r.xi;
    ADD_FAILURE() << "no row " << lhs;
    return 0;
  };
  auto t = compute_table<Rational>(Chain::SU8, "63", "63");
  EXPECT_EQ(xi(t, "|63_s;1_3>"), 1);
  EXPECT_EQ(xi(t, "|945;1_3>"), -1);
  auto u = compute_table<Rational>(Chain::SU8, "120", "63");
  EXPECT_EQ(xi(u, "|4752;20_6>"), 1);
}

TEST(Decomposer, DegeneracyLabelsFollowOverlapOrder) {
  auto t = compute_table<Rational>(Chain::SU8, "120", "63");
  auto value = [&](const std::string& lhs, const std::string& col) {
    for (auto& r : t.rows)
      if (r.lhs(t.chain) == lhs)
        for (auto& c : r.cols)
          if (c.label() == col) return c.value.sign;
    return 0;
  };
  EXPECT_GT(value("|4752;20_{s,4}>", "|Delta,rho>"), 0);
  EXPECT_EQ(value("|4752;20_{a,4}>", "|Delta,rho>"), 0);
  EXPECT_GT(value("|4752;20_{a,4}>", "|Delta,pi>"), 0);
  EXPECT_EQ(value("|4752;20_{b,4}>", "|Delta,rho>"), 0);
  EXPECT_EQ(value("|4752;20_{b,4}>", "|Delta,pi>"), 0);
  EXPECT_GT(value("|4752;20_{b,4}>", "|(Sigma,rho)_s>"), 0);
}

TEST(DecomposerProperty, PivotRuleDoesNotChangeTheBasis) {
  set_pivot_rule(PivotRule::FirstIndex);
  TensorSpace<Rational> s(3, {Slot::Fund, Slot::Fund, Slot::AntiFund});
  auto a = decompose_group(s);
  set_pivot_rule(PivotRule::SmallestBitSize);
  auto b = decompose_group(s);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].patterns, b[k].patterns);
    EXPECT_EQ(a[k].states, b[k].states);
  }
}
