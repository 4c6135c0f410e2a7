#include "mhres/polyring.hpp"

#include <functional>

namespace mhres {

std::string var_name(const SystemData& sys, int v, bool y) {
  const std::string base = y ? "y" : "x";
  if (sys.r == 1 || sys.n == sys.r) return base + std::to_string(v + 1);
  int k = 0;
  while (v >= sys.l[k]) v -= sys.l[k++];
  return base + std::to_string(k + 1) + "_" + std::to_string(v + 1);
}

std::vector<std::string> affine_var_names(const SystemData& sys, bool with_y) {
  std::vector<std::string> out;
  for (int v = 0; v < sys.n; ++v) out.push_back(var_name(sys, v));
  if (with_y)
    for (int v = 0; v < sys.n; ++v) out.push_back(var_name(sys, v, true));
  return out;
}

std::vector<Exponent> group_monomials(int l, int deg) {
  std::vector<Exponent> out;
  if (deg < 0) return out;
  Exponent e(l, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == l) {
      out.push_back(e);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[pos] = a;
      rec(pos + 1, left - a);
    }
    e[pos] = 0;
  };
  rec(0, deg);
  return out;
}

bool shell_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty()) return false;
  const int ma = *std::max_element(a.begin(), a.end());
  const int mb = *std::max_element(b.begin(), b.end());
  if (ma != mb) return ma < mb;
  int pa = static_cast<int>(a.size()) - 1, pb = pa;
  while (a[pa] != ma) --pa;
  while (b[pb] != mb) --pb;
  if (pa != pb) return pa < pb;
  std::vector<int> ra = a, rb = b;
  ra.erase(ra.begin() + pa);
  rb.erase(rb.begin() + pb);
  return shell_less(ra, rb);
}

std::vector<Exponent> support_monomials(const SystemData& sys, int i) {
  std::vector<std::vector<Exponent>> per;
  for (int k = 0; k < sys.r; ++k) per.push_back(group_monomials(sys.l[k], sys.s[i] * sys.d[k]));
  std::vector<std::vector<int>> ranks{{}};
  for (int k = 0; k < sys.r; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& pre : ranks)
      for (int t = 0; t < static_cast<int>(per[k].size()); ++t) {
        auto v = pre;
        v.push_back(t);
        next.push_back(std::move(v));
      }
    ranks.swap(next);
  }
  std::stable_sort(ranks.begin(), ranks.end(), shell_less);
  std::vector<Exponent> out;
  for (const auto& rk : ranks) {
    Exponent e;
    for (int k = 0; k < sys.r; ++k) e.insert(e.end(), per[k][rk[k]].begin(), per[k][rk[k]].end());
    out.push_back(std::move(e));
  }
  return out;
}

CoefLayout coef_layout(const SystemData& sys) {
  CoefLayout lay;
  for (int i = 0; i <= sys.n; ++i) {
    std::uint32_t sz = 1;
    for (int k = 0; k < sys.r; ++k)
      sz *= static_cast<std::uint32_t>(binomial(sys.s[i] * sys.d[k] + sys.l[k], sys.l[k]).get_ui());
    lay.offset.push_back(lay.total);
    lay.size.push_back(sz);
    lay.total += sz;
  }
  return lay;
}

std::pair<int, int> CoefLayout::locate(std::uint32_t id) const {
  for (std::size_t i = 0; i < offset.size(); ++i)
    if (id >= offset[i] && id < offset[i] + size[i]) return {static_cast<int>(i), static_cast<int>(id - offset[i])};
  throw std::out_of_range("unknown coefficient indeterminate");
}

std::string CoefLayout::name(std::uint32_t id) const {
  auto [i, j] = locate(id);
  const std::string letter =
      i < 26 ? std::string(1, static_cast<char>('a' + i)) : "f" + std::to_string(i) + "_";
  return letter + std::to_string(j);
}

GenericSystem make_generic_system(const SystemData& sys) {
  GenericSystem g;
  g.layout = coef_layout(sys);
  for (int i = 0; i <= sys.n; ++i) {
    g.supports.push_back(support_monomials(sys, i));
    MultiPoly<CoefPoly> f(sys.n);
    for (std::size_t j = 0; j < g.supports[i].size(); ++j)
      f.add_term(g.supports[i][j], CoefPoly::var(g.layout.offset[i] + static_cast<std::uint32_t>(j)));
    g.polys.push_back(std::move(f));
  }
  return g;
}

std::vector<MultiPoly<Rational>> make_numeric_system(const SystemData& sys,
                                                     const std::vector<Rational>& values) {
  const CoefLayout lay = coef_layout(sys);
  if (values.size() != lay.total)
    throw std::invalid_argument("expected " + std::to_string(lay.total) + " coefficient values");
  std::vector<MultiPoly<Rational>> out;
  for (int i = 0; i <= sys.n; ++i) {
    const auto sup = support_monomials(sys, i);
    MultiPoly<Rational> f(sys.n);
    for (std::size_t j = 0; j < sup.size(); ++j) f.add_term(sup[j], values[lay.offset[i] + j]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace mhres
