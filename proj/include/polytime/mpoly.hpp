#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace polytime {

// Every length/time bound in this library is a polynomial with nonnegative
// integer coefficients, so eval is monotone in every argument by
// construction. Coefficients are arbitrary precision: bounds of composed
// expressions overflow any fixed width.
using Nat = boost::multiprecision::cpp_int;

struct Monomial {
  Nat coeff;  // > 0
  // (variable index, power), power >= 1, ascending variable index, no repeats.
  std::vector<std::pair<std::size_t, std::size_t>> factors;

  bool operator==(const Monomial&) const = default;
};

// Sparse multivariate polynomial in canonical form: monomials ordered by
// total degree desc, then largest single exponent desc, then lexicographically
// from x0 desc; like terms merged; zero coefficients dropped.
class MPoly {
 public:
  MPoly() = default;

  static MPoly constant(std::size_t n_vars, Nat c);
  static MPoly variable(std::size_t n_vars, std::size_t i);
  // Canonicalizes: merges like terms, drops zeros, sorts. Throws PolyError if
  // a term mentions a variable >= n_vars or a negative coefficient.
  static MPoly from_monomials(std::size_t n_vars, std::vector<Monomial> terms);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  bool operator==(const MPoly&) const = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Monomial> monomials_;
};

MPoly add(const MPoly& p, const MPoly& q);
MPoly mul(const MPoly& p, const MPoly& q);

// P(Q0,...,Q_{m-1}); all Qi must share one variable count, which becomes the
// result's. The overload without n_vars takes it from qs (0 if qs is empty).
MPoly compose(const MPoly& p, const std::vector<MPoly>& qs, std::size_t n_vars);
MPoly compose(const MPoly& p, const std::vector<MPoly>& qs);

// Same monomials over a wider variable space (n_vars >= p.num_vars()).
MPoly inject(const MPoly& p, std::size_t n_vars);

// Each xi replaced by x_{i+1}; variable count grows by one.
MPoly shift(const MPoly& p);

Nat eval(const MPoly& p, const std::vector<Nat>& vs);

std::string print_canonical(const MPoly& p);

// Univariate polynomial with nonnegative integer coefficients;
// coeffs[k] is the coefficient of x^k, trailing zeros dropped.
class UPoly {
 public:
  UPoly() = default;

  static UPoly constant(Nat c);
  static UPoly variable();
  static UPoly from_coefficients(std::vector<Nat> coeffs);

  const std::vector<Nat>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  bool operator==(const UPoly&) const = default;

 private:
  std::vector<Nat> coeffs_;
};

UPoly add(const UPoly& p, const UPoly& q);
UPoly mul(const UPoly& p, const UPoly& q);
UPoly compose(const UPoly& p, const UPoly& q);
Nat eval(const UPoly& p, const Nat& v);
std::string print_canonical(const UPoly& p);

// [P]: all variables replaced by a single one, so that
// eval(P, v) <= eval([P], max(v)) for every v.
UPoly univariate_collapse(const MPoly& p);

}  // namespace polytime
