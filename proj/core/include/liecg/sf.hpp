#pragma once

#include <string>
#include <vector>

#include "liecg/coupling.hpp"
#include "liecg/naming.hpp"

namespace liecg {

// One uncoupled column of a scalar-factor row.
template <class F>
struct SFColumn {
  std::string mu1, mu2;  // particle symbols
  std::string gammap;    // "", "s", "a", "b"
  std::string sym;       // "", "S", "A" (exchange-merged columns of symmetric products)
  SignedSq<F> value;

  std::string label() const;  // "|rho,pi>_S", "|(rho,rho)_s>"
  bool same_column(const SFColumn& o) const {
    return mu1 == o.mu1 && mu2 == o.mu2 && gammap == o.gammap && sym == o.sym;
  }
};

// Scalar factors of one coupled state |R,sigma; mu,gamma>.
template <class F>
struct SFTableRow {
  std::string R, sigma;  // "945", "" / "63", "s"
  std::string mu;        // "15_3" (spin-flavor), "3*,1" (SU4: irrep, C), "1/2,-1" (SU3: I, Y)
  std::string gamma;     // spin-flavor degeneracy label or ""
  int xi = 1;
  std::vector<SFColumn<F>> cols;  // zero entries omitted

  std::string lhs(Chain c) const;  // "|945;15_{s,3}>"
};

template <class F>
struct SFTable {
  Chain chain = Chain::SU3;
  std::string R1, R2;
  std::vector<SFTableRow<F>> rows;
};

SignedRadical radical(const SignedSq<Rational>& v);
double approx(const SignedSq<Rational>& v);
double approx(const SignedSq<double>& v);

// Transposed read-out: rows of the same mu containing the given column.
struct InverseEntry {
  std::string R, sigma, gamma;
  SignedRadical value;
};
std::vector<InverseEntry> invert_sf(const SFTable<Rational>& t, const std::string& mu, const SFColumn<Rational>& col);

// Row and column orthonormality within each mu, checked exactly.
struct UnitarityReport {
  bool ok = true;
  std::size_t rows_checked = 0, columns_checked = 0;
  std::string first_violation;
};
UnitarityReport verify_unitarity(const SFTable<Rational>& t);

// Exact test of sum_k sign_k sqrt(r_k) == 0 (radicals grouped by squarefree part).
bool radical_sum_is_zero(const std::vector<SignedRadical>& terms);
// sum_k sign_k sqrt(r_k) as one radical; NotCommensurable if it is not one.
SignedRadical radical_sum(const std::vector<SignedRadical>& terms);
// n = s^2 t with t squarefree (n > 0)
void squarefree_split(const Integer& n, Integer& s, Integer& t);

}  // namespace liecg
