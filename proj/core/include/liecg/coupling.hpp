#pragma once

#include <map>
#include <memory>
#include <vector>

#include "liecg/gt.hpp"

namespace liecg {

// Irrep of SU(m) with canonical highest weight (last entry 0), realized once in a tensor
// power of the fundamental and kept as a model in standard order.
template <class F>
struct AbstractIrrep {
  int m = 1;
  Weight hw;
  std::shared_ptr<const Model<F>> model;
  std::vector<Pattern> patterns;
  std::map<Pattern, Index> index;
};

template <class F>
const AbstractIrrep<F>& abstract_irrep(int m, const Weight& hw);

// A realized copy of an abstract irrep: abstract state a sits at model state index[a] and
// coordinates transfer with the rational scale kappa[a] (kappa = 1 at the highest weight).
template <class F>
struct Embedding {
  std::vector<Index> index;
  std::vector<F> kappa;
};

// `norms` and `where` describe the realized states: where(pattern) gives the model index of
// the realized state with that (shifted) pattern.
template <class F>
Embedding<F> embed(const AbstractIrrep<F>& abs, int shift, const std::vector<F>& norms,
                   const std::map<Pattern, Index>& where);

// exact square root for Rational (NotCommensurable if irrational), std::sqrt for double
template <class F>
F field_sqrt(const F& x);

enum class SubOrder { First, Second };

// Subgroup-coupled state family |nu1; nu2; nu, gamma''> realized in a level-m product.
template <class F>
struct Uncoupled {
  Weight nu1, nu2;  // level m-1 rows in A and B
  int rank1 = 0, rank2 = 0;
  Weight nu;        // coupled level m-1 row
  int gamma = 0, ngamma = 1;
  // sub-pattern (rows m-1..1) -> state in P and its squared norm
  std::map<Pattern, std::pair<SparseVec<F>, F>> states;
};

template <class F>
struct CoupledIrrep {
  Weight hw;          // letter counts in the product
  int copy = 0;       // sigma index
  int ncopies = 1;
  int swap = 0;       // exchange eigenvalue in symmetric products, else 0
  GTBlock<F> block;   // states in P coordinates
};

template <class F>
struct Coupling {
  int m = 1;
  Weight a, b;
  SubOrder order = SubOrder::First;
  const AbstractIrrep<F>* A = nullptr;
  const AbstractIrrep<F>* B = nullptr;
  std::shared_ptr<ProductSpace<F>> P;
  std::vector<CoupledIrrep<F>> irreps;     // highest weight descending, then sigma
  std::vector<Uncoupled<F>> uncoupled;     // in overlap order
  std::vector<std::pair<Weight, int>> series() const;  // (hw, multiplicity)
};

// Clebsch-Gordan resolution of the SU(m) product a (x) b of canonical irreps. Repeated
// irreps are separated by exchange symmetry when a == b and otherwise by successive
// maximum overlap with the subgroup-coupled states in `order`.
template <class F>
const Coupling<F>& couple_abstract(int m, const Weight& a, const Weight& b, SubOrder order = SubOrder::First);

template <class F>
struct SignedSq {
  int sign = 0;
  F sq = F(0);
};

template <class F>
struct FlavorRow {
  std::size_t irrep = 0;  // index into Coupling::irreps
  Weight nu;              // level m-1 row of the coupled state
  std::vector<std::pair<std::size_t, SignedSq<F>>> cols;  // index into Coupling::uncoupled
};

// Scalar factors of every (R, sigma, nu). With check_zeta, every state of each nu block is
// compared against its highest state (ZetaDependence on mismatch).
template <class F>
std::vector<FlavorRow<F>> flavor_rows(const Coupling<F>& c, bool check_zeta);

// Exchange phase of every coupled irrep of `ab`, found against `ba` (the reversed product).
template <class F>
std::vector<int> exchange_phases(const Coupling<F>& ab, const Coupling<F>* ba);

}  // namespace liecg
