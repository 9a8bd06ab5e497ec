#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "modrep/field.hpp"

namespace modrep {

/// Univariate polynomial over a finite field, coefficients low to high,
/// with no trailing zero coefficients (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly x(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Poly monic() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

PolyDivision divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& m);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible_by_trial_division(const Poly& f);

/// Distinct-degree factorization of the squarefree part of `f`: entry
/// (d, g) means g is the product of the distinct monic irreducible factors
/// of f of degree d.
std::vector<std::pair<int, Poly>> distinct_degree_factors(const Poly& f);

/// Splits a squarefree product of irreducibles of equal degree d into two
/// nontrivial factors (Cantor-Zassenhaus). `g` must have degree > d.
Poly equal_degree_split(const Poly& g, int d, std::mt19937_64& rng);

/// A nontrivial monic factor h of f with gcd(h, f/h^k)=1 for the power of h
/// dividing f; i.e. a set of irreducible factors coprime to the rest. Empty
/// when f is a power of a single irreducible polynomial.
Poly coprime_factor(const Poly& f, std::mt19937_64& rng);

}  // namespace modrep
