#include "mhres/matrices.hpp"

#include <numeric>
#include <sstream>

#include "mhres/matrix_io.hpp"

namespace mhres {

std::vector<GroupBasis> twist_basis(const SystemData& sys, const std::vector<long>& twist) {
  std::vector<GroupBasis> out;
  for (int k = 0; k < sys.r; ++k) {
    const long t = twist[k];
    if (t >= 0) {
      out.push_back({false, group_monomials(sys.l[k], static_cast<int>(t))});
    } else if (t < -sys.l[k]) {
      auto v = group_monomials(sys.l[k], static_cast<int>(-t - sys.l[k] - 1));
      std::reverse(v.begin(), v.end());
      out.push_back({true, std::move(v)});
    } else {
      out.push_back({false, {}});
    }
  }
  return out;
}

std::vector<BasisLabel> basis_of_summand(const SystemData& sys, const CohSummand& s) {
  const auto per = twist_basis(sys, s.twist);
  std::vector<BasisLabel> out;
  for (const auto& idx : detail::exponent_product(per)) {
    BasisLabel b;
    b.p = s.p;
    b.ep = s.ep;
    for (int k = 0; k < sys.r; ++k) {
      b.dual.push_back(per[k].dual);
      const auto& e = per[k].monos[idx[k]];
      b.alpha.insert(b.alpha.end(), e.begin(), e.end());
    }
    out.push_back(std::move(b));
  }
  return out;
}

Exponent homogeneous_rep(const SystemData& sys, const std::vector<long>& twist, const BasisLabel& b) {
  Exponent a;
  for (int k = 0; k < sys.r; ++k) {
    int tot = 0;
    for (int j = 0; j < sys.l[k]; ++j) tot += b.alpha[sys.offset(k) + j];
    if (!b.dual[k]) {
      a.push_back(static_cast<int>(twist[k]) - tot);
      for (int j = 0; j < sys.l[k]; ++j) a.push_back(b.alpha[sys.offset(k) + j]);
    } else {
      const int D = static_cast<int>(-twist[k]) - sys.l[k] - 1;
      a.push_back(-1 - (D - tot));
      for (int j = 0; j < sys.l[k]; ++j) a.push_back(-1 - b.alpha[sys.offset(k) + j]);
    }
  }
  return a;
}

std::uint32_t index_mask(const std::vector<int>& ep) {
  std::uint32_t m = 0;
  for (int i : ep) m |= 1u << i;
  return m;
}

const char* block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::Zero: return "zero";
    case BlockKind::Sylvester: return "sylvester";
    case BlockKind::Bezout: return "bezout";
  }
  return "?";
}

std::vector<int> substituted_groups(const SystemData& sys, const IntVec& m, const CohSummand& src,
                                    const CohSummand& tgt) {
  std::vector<int> G;
  for (int k : src.cq)
    if (!tgt.top_in(k)) G.push_back(k);
  // larger m_k/d_k first
  std::stable_sort(G.begin(), G.end(), [&](int a, int b) {
    return static_cast<long>(m[a]) * sys.d[b] > static_cast<long>(m[b]) * sys.d[a];
  });
  return G;
}

std::string label_str(const SystemData& sys, const BasisLabel& b) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < b.ep.size(); ++i) os << (i ? "," : "") << b.ep[i];
  os << "}";
  for (int k = 0; k < sys.r; ++k) {
    std::ostringstream mono;
    bool any = false;
    for (int j = 0; j < sys.l[k]; ++j) {
      const int v = sys.offset(k) + j;
      const int a = b.alpha[v];
      if (!a) continue;
      mono << (any ? "*" : "") << var_name(sys, v);
      if (a > 1) mono << "^" << a;
      any = true;
    }
    const std::string m = any ? mono.str() : "1";
    os << " " << (b.dual[k] ? "(" + m + ")*" : m);
  }
  return os.str();
}

// ---- export ----

std::string entry_str(const Rational& v, const CoefLayout&) { return v.get_str(); }

std::string entry_str(const CoefPoly& v, const CoefLayout& lay) {
  return v.str([&](std::uint32_t id) { return lay.name(id); });
}

std::optional<std::string> bracket_form(const CoefPoly& v, const CoefLayout& lay) {
  if (v.is_zero()) return std::nullopt;
  const int t = v.degree();
  if (t < 2) return std::nullopt;
  std::vector<int> polys;
  std::map<std::vector<int>, Rational> lambda;
  for (const auto& [mono, c] : v.terms()) {
    if (static_cast<int>(mono.size()) != t) return std::nullopt;
    std::vector<std::pair<int, int>> pj;
    for (auto id : mono) pj.push_back(lay.locate(id));
    std::sort(pj.begin(), pj.end());
    std::vector<int> ps, js;
    for (auto [p, j] : pj) {
      ps.push_back(p);
      js.push_back(j);
    }
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) return std::nullopt;
    if (polys.empty()) polys = ps;
    if (ps != polys) return std::nullopt;
    if (std::is_sorted(js.begin(), js.end()) && std::adjacent_find(js.begin(), js.end()) == js.end())
      lambda[js] = c;
  }
  // rebuild and compare
  CoefPoly rebuilt;
  for (const auto& [js, c] : lambda) {
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b) inv += perm[a] > perm[b];
      CoefPoly term(Rational(inv % 2 ? -c : c));
      for (int r = 0; r < t; ++r)
        term *= CoefPoly::var(lay.offset[polys[r]] + static_cast<std::uint32_t>(js[perm[r]]));
      rebuilt += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (rebuilt != v) return std::nullopt;
  std::ostringstream os;
  bool first = true;
  for (const auto& [js, c] : lambda) {
    const Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1) os << a.get_str() << " ";
    os << "[";
    const bool wide = std::any_of(js.begin(), js.end(), [](int j) { return j > 9; });
    for (std::size_t r = 0; r < js.size(); ++r) os << (wide && r ? "," : "") << js[r];
    os << "]";
  }
  return os.str();
}

}  // namespace mhres
