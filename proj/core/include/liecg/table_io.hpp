#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liecg/sf.hpp"

namespace liecg {

// Line-oriented reference table:
//   ROW <+|-> <lhs>
//     <column label> <+|->sqrt(p/q)
// with '#' comments.
struct FixtureRow {
  int xi = 1;
  std::string lhs;
  std::vector<std::pair<std::string, SignedRadical>> cols;
};

struct Fixture {
  std::string group, R1, R2;  // from the "# SU8 63 x 63" header when present
  std::vector<FixtureRow> rows;
};

Fixture parse_fixture(std::istream& in);
Fixture load_fixture(const std::string& path);
// <dir>/<group>_<R1>x<R2>.fix with ' -> p and * -> b, e.g. su4_20px15.fix
std::string fixture_path(Chain c, const std::string& R1, const std::string& R2);
Fixture to_fixture(const SFTable<Rational>& t);

struct FixtureDiff {
  bool ok() const { return lines.empty(); }
  std::vector<std::string> lines;
};
// Order-sensitive comparison of rows, xi, columns and exact values.
FixtureDiff verify_against_fixture(const SFTable<Rational>& t, const Fixture& f);

enum class Format { Text, Json, Latex };
Format parse_format(const std::string& s);
void emit(std::ostream& out, const SFTable<Rational>& t, Format f);
std::string emit_string(const SFTable<Rational>& t, Format f);

// Inverse of the JSON emitter.
SFTable<Rational> parse_json_table(const std::string& text);

// LaTeX forms of particle symbols and irrep labels.
std::string latex_symbol(const std::string& name);
std::string latex_irrep(const std::string& label);

}  // namespace liecg
