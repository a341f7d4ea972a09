#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liecg/coupling.hpp"
#include "liecg/irrep.hpp"

namespace liecg {

// One SU(nf) x SU(2) irrep inside a realized SU(2nf) irrep.
template <class F>
struct SubBlock {
  SubgroupIrrep mu;
  Weight flavor_hw;  // physical letter counts, length nf
  Weight spin_hw;    // (n+, n-)
  int gamma = 0, ngamma = 1;
  const AbstractIrrep<F>* flavor = nullptr;  // canonical models
  const AbstractIrrep<F>* spin = nullptr;
  // abstract pair (f * dim(spin) + s) -> subgroup state, with transfer scale
  std::vector<Index> index;
  std::vector<F> kappa;
};

// SU(2nf) irrep in the basis adapted to SU(nf) x SU(2): flavor parts are standard
// (nonnegative lowering), spin parts follow Condon-Shortley, and the relative signs of the
// sub-blocks are fixed by the anchor inequalities for the meson and baryon irreps.
template <class F>
struct FactorModel {
  int nf = 3;
  YoungDiagram R;
  std::string label;
  Weight hw;
  std::shared_ptr<const Model<F>> model;  // weight basis
  // subgroup-adapted states as vectors over the weight basis (these mix weights)
  std::vector<SparseVec<F>> states;
  std::vector<F> norms;
  std::vector<SubBlock<F>> blocks;  // J descending, flavor dimension, flavor diagram
  std::vector<int> block_of;        // per subgroup state
  std::vector<Pattern> flavor_pattern;
  std::vector<int> twice_jz;
};

// Builds the realized factor from a small tensor space; ZeroAnchor if an anchor vanishes.
template <class F>
const FactorModel<F>& factor_model(int nf, const YoungDiagram& R);

// Anchor matrix elements <bra|e^i_j|ket> of a factor (after sign fixing); empty when the
// irrep has none.
struct AnchorSpec {
  SubgroupIrrep bra_mu, ket_mu;
  Pattern bra_pattern, ket_pattern;
  int bra_2jz = 0, ket_2jz = 0;
  int i = 0, j = 0;
};
std::vector<AnchorSpec> anchors_for(int nf, const YoungDiagram& R);
template <class F>
F anchor_value(const FactorModel<F>& fm, const AnchorSpec& a);

// Subgroup-coupled family |R1 mu1; R2 mu2; mu gamma'> of a spin-flavor product.
template <class F>
struct SFUncoupled {
  int b1 = 0, b2 = 0;  // sub-block indices in R1 and R2
  int gamma = 0, ngamma = 1;
  const Coupling<F>* fc = nullptr;  // flavor coupling of the two blocks
  const Coupling<F>* sc = nullptr;  // spin coupling
  std::size_t firr = 0, sirr = 0;
  int fshift = 0, sshift = 0;       // physical minus canonical
  Weight flavor_hw;
  int spin_mult = 1;
  SparseVec<F> state;               // at the subgroup highest weight
  F norm = F(0);
};

template <class F>
struct SFGroup {
  Weight flavor_hw;
  int spin_mult = 1;
  std::vector<std::size_t> us;  // into uncoupled, in overlap order
};

template <class F>
struct SFIrrep {
  Weight hw;  // physical letter counts
  int copy = 0, ncopies = 1, swap = 0;
};

template <class F>
struct SFCoupledRow {
  std::size_t irrep = 0;  // into irreps
  std::size_t group = 0;  // into groups
  int gamma = 0, ngamma = 1;
  std::vector<std::pair<std::size_t, SignedSq<F>>> cols;  // into uncoupled, zero entries omitted
  SparseVec<F> state;     // coupled subgroup highest-weight state
  F norm = F(0);
};

template <class F>
struct SpinFlavorCoupling {
  int nf = 3;
  SubOrder order = SubOrder::First;
  const FactorModel<F>* R1 = nullptr;
  const FactorModel<F>* R2 = nullptr;
  std::shared_ptr<ProductSpace<F>> P;
  std::vector<SFIrrep<F>> irreps;
  std::vector<SFUncoupled<F>> uncoupled;
  std::vector<SFGroup<F>> groups;
  std::vector<SFCoupledRow<F>> rows;

  std::vector<std::pair<Weight, int>> series() const;
  // SU(nf) x SU(2) content of one coupled irrep, with degeneracy counts
  std::map<SubgroupIrrep, int> content(std::size_t irrep) const;
};

template <class F>
const SpinFlavorCoupling<F>& couple_spin_flavor(int nf, const YoungDiagram& R1, const YoungDiagram& R2,
                                                SubOrder order = SubOrder::First);

// Uncoupled state of family u at a general subgroup state (physical flavor pattern, 2 Jz).
template <class F>
SparseVec<F> uncoupled_state(const SpinFlavorCoupling<F>& c, const SFUncoupled<F>& u, const Pattern& flavor,
                             int twice_jz);

// Every state of every row block compared with its highest state (ZetaDependence).
template <class F>
void check_zeta(const SpinFlavorCoupling<F>& c);

// Exchange phase per row; `ba` is the reversed product (unused for symmetric products).
template <class F>
std::vector<int> exchange_phases(const SpinFlavorCoupling<F>& ab, const SpinFlavorCoupling<F>* ba);

}  // namespace liecg
