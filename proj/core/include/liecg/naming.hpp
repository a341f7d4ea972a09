#pragma once

#include <string>
#include <vector>

#include "liecg/exact_arith.hpp"

namespace liecg {

// Reduction chains with tabulated scalar factors.
enum class Chain { SU8, SU6, SU4, SU3 };

Chain parse_chain(const std::string& group);  // "SU8", "SU(8)", ...
int chain_rank(Chain c);                       // 8, 6, 4, 3
int chain_flavors(Chain c);                    // 4, 3 for spin-flavor chains; n otherwise
bool spin_flavor(Chain c);
std::string chain_group(Chain c);              // "SU8"
std::string chain_name(Chain c);               // "SU8>SU4xSU2"

struct ParticleSymbol {
  std::string name;  // ascii, e.g. "Sigma_c*", "Dbar_s"
  std::string su8, su6, su4, su3;  // empty where the particle has no entry
  Rational I, Y, C, J;
};

// Rows run from highest to lowest weight.
const std::vector<ParticleSymbol>& particle_table();

// Symbol of the multiplet (lowest J first, then table order). Keys per chain:
//   SU8: (R, SU(4) irrep, J)   SU6: (R, SU(3) irrep, J)
//   SU4: (R, SU(3) irrep, C)   SU3: (R, I, Y)
// The second key is unused for SU3. Throws UnknownMultiplet.
std::string name_state(Chain c, const std::string& R, const std::string& sub, const Rational& q1,
                       const Rational& q2 = Rational(0));

// Inverse: the multiplet of a symbol within a chain.
const ParticleSymbol& find_symbol(const std::string& name);

}  // namespace liecg
