#include <gtest/gtest.h>

#include <random>

#include "liecg/coupling.hpp"
#include "liecg/space.hpp"
#include "liecg/spin_flavor.hpp"

using namespace liecg;

namespace {

using Vec = SparseVec<Rational>;

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// [e^i_j, e^k_l] - (d_il e^k_j - d_kj e^i_l) on sampled basis vectors
int commutator_failures(const Space<Rational>& s, unsigned seed, int vectors = 50, int quads = 20) {
  std::mt19937_64 rng(seed);
  const int n = s.rank();
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(s.dim() - 1));
  std::uniform_int_distribution<int> ix(0, n - 1);
  int bad = 0;
  for (int t = 0; t < vectors; ++t) {
    Vec v = Vec::unit(pick(rng));
    for (int u = 0; u < quads; ++u) {
      int i = ix(rng), j = ix(rng), k = ix(rng), l = ix(rng);
      Vec lhs = axpy(s.apply(i, j, s.apply(k, l, v)), q(-1), s.apply(k, l, s.apply(i, j, v)));
      Vec rhs;
      if (i == l) rhs = axpy(rhs, q(1), s.apply(k, j, v));
      if (k == j) rhs = axpy(rhs, q(-1), s.apply(i, l, v));
      if (!(lhs == rhs)) ++bad;
    }
  }
  return bad;
}

std::shared_ptr<const Space<Rational>> tensor(int n, std::vector<Slot> f) {
  return std::make_shared<TensorSpace<Rational>>(n, std::move(f));
}

}  // namespace

TEST(TensorRep, Dimensions) {
  EXPECT_EQ(TensorSpace<Rational>(8, {Slot::AntiFund, Slot::Fund}).dim(), 64u);
  EXPECT_EQ(TensorSpace<Rational>(8, {Slot::Fund, Slot::Fund, Slot::Fund}).dim(), 512u);
  EXPECT_EQ(TensorSpace<Rational>(2, {Slot::Fund}).dim(), 2u);
}

TEST(TensorRep, MixedRadixIndex) {
  TensorSpace<Rational> s(3, {Slot::Fund, Slot::AntiFund, Slot::Fund});
  for (Index k = 0; k < s.dim(); ++k) EXPECT_EQ(s.index(s.word(k)), k);
  EXPECT_EQ(s.word(5), (std::vector<int>{0, 1, 2}));
}

TEST(TensorRep, DiagonalGenerators) {
  TensorSpace<Rational> f3(3, {Slot::Fund}), a3(3, {Slot::AntiFund});
  EXPECT_EQ(apply(generator(f3, 0, 0), Vec::unit(0)).at(0), q(2, 3));
  EXPECT_EQ(apply(generator(a3, 0, 0), Vec::unit(0)).at(0), q(-2, 3));
  TensorSpace<Rational> f2(2, {Slot::Fund, Slot::Fund});
  // [E^1_2, E^2_1] = E^1_1 - E^2_2 on every word
  for (Index k = 0; k < f2.dim(); ++k) {
    Vec v = Vec::unit(k);
    Vec lhs = axpy(apply(generator(f2, 0, 1), apply(generator(f2, 1, 0), v)), q(-1),
                   apply(generator(f2, 1, 0), apply(generator(f2, 0, 1), v)));
    Vec rhs = axpy(apply(generator(f2, 1, 1), v), q(-1), apply(generator(f2, 0, 0), v));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(TensorRep, TracelessWeights) {
  TensorSpace<Rational> s(8, {Slot::Fund, Slot::Fund, Slot::Fund});
  std::vector<SparseOp<Rational>> diag;
  for (int i = 0; i < 8; ++i) diag.push_back(generator(s, i, i));
  std::vector<Rational> w;
  for (auto& op : diag) w.push_back(apply(op, Vec::unit(0)).at(0));
  EXPECT_EQ(w[0], q(21, 8));
  for (int i = 1; i < 8; ++i) EXPECT_EQ(w[i], q(-3, 8));

  TensorSpace<Rational> m(3, {Slot::AntiFund, Slot::Fund, Slot::Fund});
  for (Index k = 0; k < m.dim(); ++k) {
    Rational sum = 0;
    Weight lc = m.weight(k);
    int net = 0;
    for (int x : lc) net += x;
    for (int i = 0; i < 3; ++i) {
      Rational c = apply(generator(m, i, i), Vec::unit(k)).at(k);
      EXPECT_EQ(c, Rational(lc[i]) - Rational(net, 3));
      sum += c;
    }
    EXPECT_EQ(sum, 0);
  }
}

TEST(TensorRepProperty, CommutatorsOnTensorSpaces) {
  EXPECT_EQ(commutator_failures(TensorSpace<Rational>(8, {Slot::AntiFund, Slot::Fund}), 1), 0);
  EXPECT_EQ(commutator_failures(TensorSpace<Rational>(8, {Slot::Fund, Slot::Fund, Slot::Fund}), 2), 0);
  EXPECT_EQ(commutator_failures(TensorSpace<Rational>(6, {Slot::AntiFund, Slot::Fund}), 3), 0);
  EXPECT_EQ(commutator_failures(TensorSpace<Rational>(3, {Slot::Fund, Slot::AntiFund, Slot::Fund}), 4), 0);
}

TEST(TensorRepProperty, CommutatorsOnPipelineSpaces) {
  EXPECT_EQ(commutator_failures(*abstract_irrep<Rational>(3, {2, 1, 0}).model, 5), 0);
  EXPECT_EQ(commutator_failures(*abstract_irrep<Rational>(4, {3, 0, 0, 0}).model, 6), 0);
  EXPECT_EQ(commutator_failures(*factor_model<Rational>(4, parse_irrep(8, "63")).model, 7), 0);
  EXPECT_EQ(commutator_failures(*factor_model<Rational>(4, parse_irrep(8, "120")).model, 8), 0);
  EXPECT_EQ(commutator_failures(*factor_model<Rational>(3, parse_irrep(6, "56")).model, 9), 0);
  EXPECT_EQ(commutator_failures(*couple_abstract<Rational>(3, {2, 1, 0}, {2, 1, 0}).P, 10), 0);
  EXPECT_EQ(commutator_failures(*couple_spin_flavor<Rational>(3, parse_irrep(6, "35"), parse_irrep(6, "35")).P, 11),
            0);
}

TEST(TensorRep, ProductEmbedding) {
  EmbeddingMap e = product_embedding(4);
  // (u,+) (d,+) (s,+) (c,+) (u,-) (d,-) (s,-) (c,-)
  EXPECT_EQ(e.index(0, 0), 0);
  EXPECT_EQ(e.index(3, 0), 3);
  EXPECT_EQ(e.index(0, 1), 4);
  EXPECT_EQ(e.index(3, 1), 7);
  auto fm = e.flavor_map(), sm = e.spin_map();
  ASSERT_EQ(fm.size(), 2u);
  EXPECT_EQ(fm[1], (std::vector<int>{4, 5, 6, 7}));
  ASSERT_EQ(sm.size(), 4u);
  EXPECT_EQ(sm[0], (std::vector<int>{0, 4}));
}

TEST(TensorRepProperty, FlavorAndSpinCommute) {
  for (int nf : {3, 4}) {
    EmbeddingMap e = product_embedding(nf);
    auto base = tensor(2 * nf, {Slot::AntiFund, Slot::Fund, Slot::Fund});
    ViewSpace<Rational> F(base, e.flavor_map()), S(base, e.spin_map());
    std::mt19937_64 rng(nf);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(base->dim() - 1));
    std::uniform_int_distribution<int> fi(0, nf - 1), si(0, 1);
    for (int t = 0; t < 50; ++t) {
      Vec v = Vec::unit(pick(rng));
      int a = fi(rng), b = fi(rng), s = si(rng), u = si(rng);
      Vec c = axpy(F.apply(a, b, S.apply(s, u, v)), q(-1), S.apply(s, u, F.apply(a, b, v)));
      EXPECT_TRUE(c.empty());
    }
    // flavor generators close on themselves
    EXPECT_EQ(commutator_failures(F, 12), 0);
    EXPECT_EQ(commutator_failures(S, 13), 0);
  }
}

TEST(TensorRep, ChainCharges) {
  // D0 = c ubar
  auto d = chain_charges({-1, 0, 0, 1}, 4, false);
  EXPECT_EQ(d.C, 1);
  EXPECT_EQ(d.Y, q(-1, 3));
  EXPECT_EQ(d.Iz, q(-1, 2));
  // pi+ = u dbar
  auto pi = chain_charges({1, -1, 0, 0}, 4, false);
  EXPECT_EQ(pi.Iz, 1);
  EXPECT_EQ(pi.Y, 0);
  EXPECT_EQ(pi.C, 0);
  // Omega_ccc with all spins up
  auto o = chain_charges({0, 0, 0, 3, 0, 0, 0, 0}, 4, true);
  EXPECT_EQ(o.C, 3);
  EXPECT_EQ(o.Y, 0);
  EXPECT_EQ(o.Iz, 0);
  EXPECT_EQ(o.Jz, q(3, 2));
  // D_s+ = c sbar
  EXPECT_EQ(chain_charges({0, 0, -1, 1}, 4, false).Y, q(2, 3));
}
