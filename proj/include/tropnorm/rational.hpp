#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropnorm {

// Exact rational scalar. GMP keeps the invariants (reduced, positive
// denominator) on every operation; nothing here ever rounds.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Integer slope / exponent / normal vectors.
using IntVec = std::vector<long long>;
// Exact rational points and multiplier vectors.
using QVector = std::vector<Rational>;

// Parses "p/q" (q > 0) or "p". Throws std::invalid_argument on anything else,
// including decimal notation and zero denominators.
Rational parse_rational(const std::string& text);

// Canonical form: "p/q" with gcd(p,q)=1 and q>0, or plain "p" when q=1.
std::string rational_string(const Rational& q);

inline Rational dot(const IntVec& a, const QVector& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
  return s;
}

inline Rational dot(const QVector& a, const QVector& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool is_zero(const IntVec& a) {
  for (long long v : a)
    if (v != 0) return false;
  return true;
}

// gcd of absolute values; 0 for the zero vector.
inline long long content(const IntVec& a) {
  long long g = 0;
  for (long long v : a) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

}  // namespace tropnorm
