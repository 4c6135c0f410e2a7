#include "mhres/complex.hpp"

#include <algorithm>
#include <sstream>

namespace mhres {

bool CohSummand::top_in(int k) const {
  return std::find(cq.begin(), cq.end(), k) != cq.end();
}

bool summand_order(const CohSummand& a, const CohSummand& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.z != b.z) return a.z < b.z;
  return a.ep < b.ep;
}

const std::vector<CohSummand>& WeymanComplex::term(int nu) const {
  static const std::vector<CohSummand> empty;
  auto it = terms.find(nu);
  return it == terms.end() ? empty : it->second;
}

WeymanComplex make_complex(const SystemData& sys, const IntVec& m) {
  if (static_cast<int>(m.size()) != sys.r)
    throw InvalidData("degree vector has " + std::to_string(m.size()) + " entries, expected " +
                      std::to_string(sys.r));
  WeymanComplex c{sys, m, {}};
  for (int p = 0; p <= sys.n + 1; ++p) {
    for (const auto& I : index_subsets(sys.n + 1, p)) {
      int z = 0;
      for (int i : I) z += sys.s[i];
      bool skip = false;
      for (int k = 0; k < sys.r && !skip; ++k) skip = in_pk(sys, m, k, z);
      if (skip) continue;
      CohSummand s;
      s.p = p;
      s.z = z;
      s.ep = I;
      for (int k = 0; k < sys.r; ++k) {
        if (pk_below(sys, m, k, z)) s.cq.push_back(k);
        s.twist.push_back(static_cast<long>(m[k]) - static_cast<long>(z) * sys.d[k]);
      }
      s.nu = p - q_of(sys, m, z);
      s.dim = cohomology_dim(sys, s.twist);
      c.terms[s.nu].push_back(std::move(s));
    }
  }
  for (auto& [nu, v] : c.terms) std::sort(v.begin(), v.end(), summand_order);
  return c;
}

Integer term_dim(const WeymanComplex& c, int nu) {
  Integer t = 0;
  for (const auto& s : c.term(nu)) t += s.dim;
  return t;
}

std::string format_blocks(const WeymanComplex& c) {
  std::ostringstream os;
  bool first_term = true;
  for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it) {
    if (!first_term) os << " -> ";
    first_term = false;
    std::vector<int> ps;
    for (const auto& s : it->second)
      if (ps.empty() || ps.back() != s.p) ps.push_back(s.p);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) os << " + ";
      os << "K_{" << it->first << "," << ps[i] << "}";
    }
  }
  return os.str();
}

std::string format_cohs(const WeymanComplex& c) {
  std::ostringstream os;
  bool first_term = true;
  for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it) {
    if (!first_term) os << " -> ";
    first_term = false;
    const auto& v = it->second;
    bool first = true;
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i + 1;
      while (j < v.size() && v[j].q() == v[i].q() && v[j].twist == v[i].twist) ++j;
      if (!first) os << " + ";
      first = false;
      os << "H^" << v[i].q() << "(";
      for (std::size_t k = 0; k < v[i].twist.size(); ++k) os << (k ? "," : "") << v[i].twist[k];
      os << ")";
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
  }
  return os.str();
}

IntVec dual_vector(const SystemData& sys, const IntVec& m) {
  IntVec rho = critical_degree(sys);
  for (int k = 0; k < sys.r; ++k) rho[k] -= m[k];
  return rho;
}

nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json summand_to_json(const CohSummand& s) {
  std::vector<int> cq1;
  for (int k : s.cq) cq1.push_back(k + 1);
  return {{"p", s.p}, {"z", s.z}, {"nu", s.nu}, {"cq", cq1}, {"ep", s.ep},
          {"twist", s.twist}, {"dim", integer_json(s.dim)}};
}

nlohmann::json complex_to_json(const WeymanComplex& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it) {
    nlohmann::json ss = nlohmann::json::array();
    for (const auto& s : it->second) ss.push_back(summand_to_json(s));
    terms.push_back({{"nu", it->first}, {"summands", ss}});
  }
  return {{"m", c.m}, {"terms", terms}};
}

}  // namespace mhres
