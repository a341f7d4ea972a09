#pragma once

#include <map>
#include <string>
#include <vector>

#include "liecg/exact_arith.hpp"

namespace liecg {

using Weight = std::vector<int>;

// Partition with at most n rows, labelling an irrep of SU(n).
struct YoungDiagram {
  int n = 2;
  std::vector<int> rows;

  bool operator==(const YoungDiagram& o) const { return n == o.n && rows == o.rows; }
  bool operator<(const YoungDiagram& o) const { return n != o.n ? n < o.n : rows < o.rows; }
};

// Validates and strips columns of height n.
YoungDiagram make_diagram(int n, std::vector<int> rows);
YoungDiagram canonicalize(YoungDiagram d);
// Canonical diagram of the irrep whose U(n) highest weight is `hw` (any integer shift).
YoungDiagram diagram_of_weight(const Weight& hw);

long long dimension(const YoungDiagram& d);
long long dimension_of_weight(const Weight& hw);
YoungDiagram conjugate(const YoungDiagram& d);
std::vector<Rational> highest_weight(const YoungDiagram& d);
std::string diagram_str(const YoungDiagram& d);  // e.g. "[2,1^6]"
// Letter-count highest weight of the realization used for physical labels: unstarred
// irreps live in tensor powers of the fundamental, starred ones in powers of the
// antifundamental, self-conjugate ones are shifted to zero total.
Weight physical_hw(const YoungDiagram& d);

// Table-1 style label; throws UnlabeledDiagram for equal-dimension collisions that the
// reference list does not cover.
std::string display_label(const YoungDiagram& d);
// Inverse of display_label; throws UnknownIrrep.
YoungDiagram parse_irrep(int n, const std::string& label);
// All canonical SU(n) diagrams of dimension <= maxdim.
std::vector<YoungDiagram> diagrams_up_to(int n, long long maxdim);

struct IrrepId {
  YoungDiagram diagram;
  long long dim = 1;
  std::string label;
};
IrrepId irrep_id(const YoungDiagram& d);

// Decoration rank used for ordering equal dimensions: unstarred first, then primes:
// "" < "'" < "''" < "*" < "'*"
int decoration_rank(const std::string& label);
int label_dimension(const std::string& label);
// Presentation order of labels: dimension, then decoration.
bool label_less(const std::string& a, const std::string& b);

// Rows of length m-1 interlacing `row` (length m), in lexicographically decreasing order.
std::vector<Weight> interlacing(const Weight& row);
// Weight multiplicities of the U(m) irrep with highest weight hw (letter-count weights).
std::map<Weight, long long> weight_multiplicities(const Weight& hw);

// Spin-flavor content of an SU(2 nf) irrep: pairs (flavor diagram, 2J+1) with multiplicity.
struct SubgroupIrrep {
  YoungDiagram flavor;
  int spin_mult = 1;
  bool operator<(const SubgroupIrrep& o) const {
    return flavor < o.flavor || (flavor == o.flavor && spin_mult < o.spin_mult);
  }
  bool operator==(const SubgroupIrrep& o) const { return flavor == o.flavor && spin_mult == o.spin_mult; }
};
std::map<SubgroupIrrep, int> branch_spin_flavor(const YoungDiagram& R, int nf);

// Reference reductions shipped as a fixture file.
struct ReductionEntry {
  std::string flavor;  // SU(nf) label
  int spin_mult = 1;
  char gamma = 0;      // 0, 's', 'a', 'b'
};
std::string fixture_dir();
std::vector<ReductionEntry> expected_reduction(int n, const std::string& label);
std::vector<std::pair<int, std::string>> reduction_irreps();

}  // namespace liecg
