#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhres/coef.hpp"
#include "mhres/combinatorics.hpp"

namespace mhres {

using Exponent = std::vector<int>;

class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class R>
class MultiPoly {
 public:
  using Terms = std::map<Exponent, R>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const R& c) {
    return monomial(nvars, Exponent(nvars, 0), c);
  }
  static MultiPoly monomial(int nvars, const Exponent& e, const R& c) {
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
  }
  static MultiPoly variable(int nvars, int v) {
    Exponent e(nvars, 0);
    e[v] = 1;
    return monomial(nvars, e, R(1L));
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  R coef(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0L) : it->second;
  }

  void add_term(const Exponent& e, const R& c) {
    if (mhres::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (mhres::is_zero(it->second)) terms_.erase(it);
    }
  }

  // largest total degree in variables [v0, v0+count)
  int degree_in(int v0, int count) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (int v = v0; v < v0 + count; ++v) t += e[v];
      d = std::max(d, t);
    }
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, R(-c));
    return *this;
  }
  MultiPoly operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, R(-c));
    return out;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
        out.add_term(e, R(ca * cb));
      }
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const R& c) const {
    MultiPoly out(nvars_);
    for (const auto& [e, v] : terms_) out.add_term(e, R(v * c));
    return out;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // pad with trailing variables of exponent zero
  MultiPoly extend(int nvars) const {
    MultiPoly out(nvars);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f.resize(nvars, 0);
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  // move the exponent of variable `from` onto variable `to`
  MultiPoly rename_var(int from, int to) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f[to] += f[from];
      f[from] = 0;
      out.add_term(f, c);
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F f) const -> MultiPoly<decltype(f(std::declval<R>()))> {
    using S = decltype(f(std::declval<R>()));
    MultiPoly<S> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

 private:
  int nvars_;
  Terms terms_;
};

template <class R>
bool is_zero(const MultiPoly<R>& p) {
  return p.is_zero();
}

template <class R>
R ring_divide_rational(const R& a, const Rational& c);
template <>
inline Rational ring_divide_rational(const Rational& a, const Rational& c) { return a / c; }
template <>
inline CoefPoly ring_divide_rational(const CoefPoly& a, const Rational& c) {
  return a * CoefPoly(Rational(Rational(1) / c));
}

inline bool is_rational_constant(const Rational&) { return true; }
inline bool is_rational_constant(const CoefPoly& c) { return c.is_constant(); }
inline Rational as_rational(const Rational& c) { return c; }
inline Rational as_rational(const CoefPoly& c) { return c.constant_value(); }

// exact quotient; the divisor's lex-leading coefficient must be a rational constant
template <class R>
MultiPoly<R> exact_divide(const MultiPoly<R>& num, const MultiPoly<R>& den) {
  if (den.is_zero()) throw DivisionError("division by the zero polynomial");
  const auto& [dle, dlc] = *den.terms().rbegin();
  if (!is_rational_constant(dlc))
    throw DivisionError("leading coefficient of the divisor is not a constant");
  const Rational lc = as_rational(dlc);
  const int nv = num.nvars();
  MultiPoly<R> rem = num, quot(nv);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    Exponent e(nv);
    for (int v = 0; v < nv; ++v) {
      e[v] = re[v] - dle[v];
      if (e[v] < 0) throw DivisionError("division is not exact");
    }
    const auto t = MultiPoly<R>::monomial(nv, e, ring_divide_rational(rc, lc));
    quot += t;
    rem -= t * den;
  }
  return quot;
}

// division-free Laplace expansion along the first row, minors memoized by column mask
template <class T>
T ring_det(const std::vector<std::vector<T>>& M, const T& zero, const T& one) {
  const std::size_t n = M.size();
  if (n == 0) return one;
  for (const auto& row : M)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n > 20) throw std::invalid_argument("determinant too large for expansion");
  // minor over the last k rows with column set `mask`
  std::map<unsigned long, T> memo;
  const unsigned long full = (1UL << n) - 1;
  memo[0] = one;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t row = n - k;
    std::map<unsigned long, T> next;
    for (const auto& [mask, val] : memo) {
      (void)val;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1UL << c)) continue;
        const unsigned long nm = mask | (1UL << c);
        if (next.count(nm)) continue;
        T acc = zero;
        int pos = 0;
        for (std::size_t cc = 0; cc < n; ++cc) {
          if (!(nm & (1UL << cc))) continue;
          const unsigned long sub = nm & ~(1UL << cc);
          auto it = memo.find(sub);
          if (it != memo.end() && !is_zero(M[row][cc])) {
            T t = M[row][cc] * it->second;
            if (pos % 2) acc -= t; else acc += t;
          }
          ++pos;
        }
        next.emplace(nm, std::move(acc));
      }
    }
    memo.swap(next);
  }
  return memo.at(full);
}

template <class R>
MultiPoly<R> poly_matrix_det(const std::vector<std::vector<MultiPoly<R>>>& M) {
  const int nv = M.empty() || M[0].empty() ? 0 : M[0][0].nvars();
  return ring_det(M, MultiPoly<R>(nv), MultiPoly<R>::constant(nv, R(1L)));
}

// Variables of polynomials over x and y: x_{k,j} at index offset(k)+j, y_{k,j} at n + that.
template <class R>
MultiPoly<R> substitute_group(const MultiPoly<R>& f, const SystemData& sys, int k, bool to_y) {
  MultiPoly<R> out = f;
  for (int j = 0; j < sys.l[k]; ++j) {
    const int v = sys.offset(k) + j;
    out = to_y ? out.rename_var(v, sys.n + v) : out.rename_var(sys.n + v, v);
  }
  return out;
}

std::string var_name(const SystemData& sys, int v, bool y = false);

// terms listed in `order` when given (others appended), else by degree
template <class R, class CoefFmt>
std::string poly_str(const MultiPoly<R>& p, const std::vector<std::string>& names, CoefFmt fmt,
                     const std::vector<Exponent>* order = nullptr) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, R>> ts;
  if (order) {
    for (const auto& e : *order) {
      auto it = p.terms().find(e);
      if (it != p.terms().end()) ts.push_back(*it);
    }
    for (const auto& t : p.terms())
      if (std::find(order->begin(), order->end(), t.first) == order->end()) ts.push_back(t);
  } else {
    ts.assign(p.terms().begin(), p.terms().end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
      int da = 0, db = 0;
      for (int v : a.first) da += v;
      for (int v : b.first) db += v;
      if (da != db) return da < db;
      return a.first > b.first;
    });
  }
  std::ostringstream os;
  for (std::size_t t = 0; t < ts.size(); ++t) {
    std::string c = fmt(ts[t].second);
    bool compound = c.find_first_of("+-", 1) != std::string::npos;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t v = 0; v < ts[t].first.size(); ++v) {
      const int a = ts[t].first[v];
      if (!a) continue;
      mono << (any ? "*" : "") << names[v];
      if (a > 1) mono << "^" << a;
      any = true;
    }
    if (t && !compound && c[0] == '-') {
      os << " - ";
      c.erase(0, 1);
    } else if (t) {
      os << " + ";
    }
    if (!any) {
      os << (compound ? "(" + c + ")" : c);
    } else if (c == "1") {
      os << mono.str();
    } else if (c == "-1") {
      os << "-" << mono.str();
    } else {
      os << (compound ? "(" + c + ")" : c) << "*" << mono.str();
    }
  }
  return os.str();
}

// ---- generic systems ----

// indeterminate ids: polynomial i owns ids [offset[i], offset[i]+size[i])
struct CoefLayout {
  std::vector<std::uint32_t> offset, size;
  std::uint32_t total = 0;
  std::string name(std::uint32_t id) const;
  std::pair<int, int> locate(std::uint32_t id) const;
};

// affine exponents of f_i in canonical labeling order
std::vector<Exponent> support_monomials(const SystemData& sys, int i);

// exponents in l variables with total <= deg, lexicographically ascending
std::vector<Exponent> group_monomials(int l, int deg);

// canonical order across groups, on per-group ranks
bool shell_less(const std::vector<int>& a, const std::vector<int>& b);

CoefLayout coef_layout(const SystemData& sys);

struct GenericSystem {
  CoefLayout layout;
  std::vector<std::vector<Exponent>> supports;
  std::vector<MultiPoly<CoefPoly>> polys;  // over the n affine variables
};
GenericSystem make_generic_system(const SystemData& sys);

// coefficient values listed in layout order
std::vector<MultiPoly<Rational>> make_numeric_system(const SystemData& sys,
                                                     const std::vector<Rational>& values);

template <class R>
R coef(const MultiPoly<R>& f, const Exponent& mono) {
  return f.coef(mono);
}

std::vector<std::string> affine_var_names(const SystemData& sys, bool with_y = false);

}  // namespace mhres
