#include "liecg/exact_arith.hpp"

#include <regex>

namespace liecg {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotCommensurable: return "NotCommensurable";
    case ErrorKind::UnlabeledDiagram: return "UnlabeledDiagram";
    case ErrorKind::UnknownIrrep: return "UnknownIrrep";
    case ErrorKind::IncompleteDecomposition: return "IncompleteDecomposition";
    case ErrorKind::PhaseObstruction: return "PhaseObstruction";
    case ErrorKind::ZeroAnchor: return "ZeroAnchor";
    case ErrorKind::InconsistentXi: return "InconsistentXi";
    case ErrorKind::ZetaDependence: return "ZetaDependence";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::UnknownMultiplet: return "UnknownMultiplet";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

bool is_canonical(const Rational& x) {
  if (sgn(x.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return g == 1;
}

SignedRadical::SignedRadical(int sign, Rational radicand) : sign_(sign), rad_(std::move(radicand)) {
  rad_.canonicalize();
  if (sgn(rad_) < 0) throw Error(ErrorKind::Internal, "negative radicand");
  if (sign_ > 1 || sign_ < -1) throw Error(ErrorKind::Internal, "bad sign");
  if ((sign_ == 0) != (sgn(rad_) == 0)) throw Error(ErrorKind::Internal, "sign/radicand mismatch");
}

std::string SignedRadical::str() const {
  if (sign_ == 0) return "0";
  std::string s = sign_ > 0 ? "+sqrt(" : "-sqrt(";
  s += rad_.get_num().get_str() + "/" + rad_.get_den().get_str() + ")";
  return s;
}

SignedRadical srad_from_signed_rational(const Rational& x) {
  return SignedRadical(sgn(x), x * x);
}

SignedRadical srad_mul(const SignedRadical& a, const SignedRadical& b) {
  return SignedRadical(a.sign() * b.sign(), a.radicand() * b.radicand());
}

bool exact_sqrt(const Rational& x, Rational& root) {
  if (sgn(x) < 0) return false;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

Rational srad_ratio_as_rational(const SignedRadical& a, const SignedRadical& b) {
  if (b.is_zero()) throw Error(ErrorKind::Internal, "ratio by zero radical");
  if (a.is_zero()) return Rational(0);
  Rational r;
  if (!exact_sqrt(a.radicand() / b.radicand(), r))
    throw Error(ErrorKind::NotCommensurable, a.str() + " / " + b.str());
  return a.sign() * b.sign() > 0 ? r : Rational(-r);
}

SignedRadical parse_srad(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?)sqrt\((\d+)(?:/(\d+))?\)\s*$)");
  std::smatch m;
  if (s == "0") return SignedRadical();
  if (!std::regex_match(s, m, re)) throw Error(ErrorKind::Usage, "cannot parse coefficient '" + s + "'");
  Rational r(Integer(m[2].str()), Integer(m[3].matched ? m[3].str() : std::string("1")));
  r.canonicalize();
  int sg = m[1].str() == "-" ? -1 : 1;
  if (sgn(r) == 0) sg = 0;
  return SignedRadical(sg, r);
}

}  // namespace liecg
