#pragma once

#include <map>
#include <vector>

#include "liecg/space.hpp"

namespace liecg {

// Gelfand-Tsetlin pattern, top row (length m) first, down to the row of length 1.
using Pattern = std::vector<Weight>;

Weight pattern_weight(const Pattern& p);  // length m letter counts
Pattern shifted(Pattern p, int s);
Pattern highest_pattern(const Weight& top);  // all rows at their maximum
std::string pattern_str(const Pattern& p);

// Presentation order of the SU(m-1) irreps inside an SU(m) irrep with top row `row`:
// dimension descending, then canonical diagram, then raw row, both lexicographically
// descending.
std::vector<Weight> ranked_subirreps(const Weight& row);
bool sub_rank_less(const Weight& a, const Weight& b);

// Orthogonal standard basis of one irrep, states in nested sub-irrep order.
template <class F>
struct GTBlock {
  std::vector<SparseVec<F>> states;
  std::vector<F> norms;
  std::vector<Pattern> patterns;
  std::map<Pattern, std::size_t> index;

  std::size_t size() const { return states.size(); }
  const Weight& top() const { return patterns.front().front(); }
  std::size_t at(const Pattern& p) const;
  void negate();
};

// Builds the level-m standard basis of the irrep generated by the highest-weight vector
// `hw` (annihilated by e^{i+1}_i, i < m-1). Sub-irrep highest weights are null vectors of
// the level m-1 raising operators; signs follow the nonnegative-lowering rule and are
// verified on every edge (PhaseObstruction otherwise).
template <class F>
GTBlock<F> build_gt(const Space<F>& s, int m, const SparseVec<F>& hw);

// Applies level-m raising operators greedily (first nonzero) until a highest weight is hit.
template <class F>
SparseVec<F> raise_to_hw(const Space<F>& s, int m, SparseVec<F> v);

// Level-m raising operators as linear maps on s.
template <class F>
std::vector<LinOp<F>> raising_ops(const Space<F>& s, int m);

template <class F>
bool is_dominant_hw(const Space<F>& s, int m, const SparseVec<F>& v);

// Highest-weight vectors of every irrep in s at level m, keyed by highest weight.
template <class F>
std::map<Weight, std::vector<SparseVec<F>>> highest_weight_vectors(const Space<F>& s, int m,
                                                                   const std::vector<Index>* restrict_to = nullptr);

// Complete decomposition of s (optionally restricted to an invariant span) into standard
// blocks, from the highest weight downward. Throws IncompleteDecomposition if the
// dimensions do not add up.
template <class F>
std::vector<GTBlock<F>> decompose_group(const Space<F>& s, const std::vector<SparseVec<F>>* restrict_to = nullptr);

// Checks the nonnegative-lowering condition for every e^i_{i+1}, i < m-1.
template <class F>
bool baird_ok(const Space<F>& s, int m, const GTBlock<F>& b);

}  // namespace liecg
