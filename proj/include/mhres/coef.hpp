#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mhres {

using Rational = mpq_class;

// product of coefficient indeterminates as a sorted multiset of ids
using CoefMono = std::vector<std::uint32_t>;

// polynomial with rational coefficients in the generic coefficient indeterminates
class CoefPoly {
 public:
  CoefPoly() = default;
  CoefPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  CoefPoly(long c);             // NOLINT(google-explicit-constructor)
  static CoefPoly var(std::uint32_t id);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // constant term
  int degree() const;
  const std::map<CoefMono, Rational>& terms() const { return terms_; }
  // ids occurring in any term
  std::vector<std::uint32_t> variables() const;

  CoefPoly& operator+=(const CoefPoly& o);
  CoefPoly& operator-=(const CoefPoly& o);
  CoefPoly& operator*=(const CoefPoly& o);
  CoefPoly operator-() const;
  friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
  friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
  friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
  friend bool operator==(const CoefPoly& a, const CoefPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const CoefPoly& a, const CoefPoly& b) { return !(a == b); }
  bool operator<(const CoefPoly& o) const { return terms_ < o.terms_; }

  // throws std::out_of_range when an id has no value
  Rational evaluate(const std::vector<Rational>& values) const;
  CoefPoly substitute(const std::function<CoefPoly(std::uint32_t)>& f) const;

  std::string str(const std::function<std::string(std::uint32_t)>& name) const;

 private:
  void add_term(const CoefMono& m, const Rational& c);
  std::map<CoefMono, Rational> terms_;
};

inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(const CoefPoly& v) { return v.is_zero(); }

std::string rational_str(const Rational& v);
inline std::string ring_str(const Rational& v) { return rational_str(v); }

}  // namespace mhres
