#include "mhres/coef.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mhres {

CoefPoly::CoefPoly(const Rational& c) {
  if (sgn(c) != 0) terms_[{}] = c;
}

CoefPoly::CoefPoly(long c) {
  if (c != 0) terms_[{}] = Rational(c);
}

CoefPoly CoefPoly::var(std::uint32_t id) {
  CoefPoly p;
  p.terms_[{id}] = 1;
  return p;
}

bool CoefPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational CoefPoly::constant_value() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

int CoefPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::vector<std::uint32_t> CoefPoly::variables() const {
  std::set<std::uint32_t> s;
  for (const auto& [m, c] : terms_) s.insert(m.begin(), m.end());
  return {s.begin(), s.end()};
}

void CoefPoly::add_term(const CoefMono& m, const Rational& c) {
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoefPoly CoefPoly::operator-() const {
  CoefPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
  CoefPoly out;
  CoefMono buf;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      buf.resize(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), buf.begin());
      out.add_term(buf, ca * cb);
    }
  }
  return out;
}

CoefPoly& CoefPoly::operator*=(const CoefPoly& o) { return *this = *this * o; }

Rational CoefPoly::evaluate(const std::vector<Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (auto id : m) {
      if (id >= values.size()) throw std::out_of_range("no value for coefficient indeterminate");
      t *= values[id];
    }
    total += t;
  }
  return total;
}

CoefPoly CoefPoly::substitute(const std::function<CoefPoly(std::uint32_t)>& f) const {
  CoefPoly out;
  for (const auto& [m, c] : terms_) {
    CoefPoly t(c);
    for (auto id : m) t *= f(id);
    out += t;
  }
  return out;
}

std::string rational_str(const Rational& v) { return v.get_str(); }

std::string CoefPoly::str(const std::function<std::string(std::uint32_t)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || m.empty()) os << a.get_str();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0 || !unit) os << "*";
      os << name(m[i]);
    }
  }
  return os.str();
}

}  // namespace mhres
