#pragma once

// Koszul complex on the Cech resolution of prod P^{l_k}, contracted onto
// cohomology. Cochains of one group are pairs (homogeneous Laurent exponent a,
// nonempty coordinate set J with J containing every j where a_j < 0).

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "mhres/combinatorics.hpp"
#include "mhres/polyring.hpp"

namespace mhres {

struct CechState {
  std::uint32_t I = 0;  // exterior index set as a bitmask
  Exponent a;           // homogeneous exponents, groups concatenated (l_k + 1 each)
  std::vector<std::uint32_t> J;

  bool operator<(const CechState& o) const { return std::tie(I, a, J) < std::tie(o.I, o.a, o.J); }
};

struct CohClass {
  std::uint32_t I;
  Exponent a;
  bool operator<(const CohClass& o) const { return std::tie(I, a) < std::tie(o.I, o.a); }
};

template <class R>
class CechTransfer {
 public:
  using Chain = std::map<CechState, R>;

  CechTransfer(const SystemData& sys, const std::vector<MultiPoly<R>>& polys) : sys_(sys) {
    for (int k = 0; k < sys.r; ++k) hoff_.push_back(sys.offset(k) + k);
    for (int i = 0; i <= sys.n; ++i) {
      std::vector<std::pair<Exponent, R>> ts;
      for (const auto& [e, c] : polys[i].terms()) {
        Exponent h;
        for (int k = 0; k < sys.r; ++k) {
          int tot = 0;
          for (int j = 0; j < sys.l[k]; ++j) tot += e[sys.offset(k) + j];
          h.push_back(sys.s[i] * sys.d[k] - tot);
          for (int j = 0; j < sys.l[k]; ++j) h.push_back(e[sys.offset(k) + j]);
        }
        ts.emplace_back(std::move(h), c);
      }
      hom_terms_.push_back(std::move(ts));
    }
  }

  // image of the cohomology class (I, a) under the transferred differential
  std::map<CohClass, R> transfer(std::uint32_t I, const Exponent& a) const {
    Chain cur;
    for (auto& [c, J] : iota_all(a)) add(cur, CechState{I, a, J}, R(static_cast<long>(c)));
    std::map<CohClass, R> res;
    for (int guard = 0; !cur.empty(); ++guard) {
      if (guard > sys_.n + sys_.r + 4) throw std::logic_error("transfer did not terminate");
      Chain d = koszul(cur);
      for (const auto& [st, c] : d)
        if (proj_all(st.a, st.J)) add(res, CohClass{st.I, st.a}, c);
      cur = homotopy(d, true);
    }
    return res;
  }

 private:
  template <class Map, class Key>
  static void add(Map& m, const Key& k, const R& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = m.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) m.erase(it);
    }
  }

  int len(int k) const { return sys_.l[k] + 1; }

  std::uint32_t neg_mask(const Exponent& a, int k) const {
    std::uint32_t N = 0;
    for (int j = 0; j < len(k); ++j)
      if (a[hoff_[k] + j] < 0) N |= 1u << j;
    return N;
  }

  std::uint32_t all(int k) const { return (1u << len(k)) - 1; }

  // contracting vertex: largest coordinate with nonnegative exponent
  int vertex(int k, std::uint32_t N) const {
    for (int j = len(k) - 1; j >= 0; --j)
      if (!(N >> j & 1u)) return j;
    return -1;
  }

  bool proj(const Exponent& a, int k, std::uint32_t J) const {
    const std::uint32_t N = neg_mask(a, k);
    if (N == all(k)) return J == all(k);
    if (N) return false;
    return J == (1u << vertex(k, N));
  }

  bool proj_all(const Exponent& a, const std::vector<std::uint32_t>& J) const {
    for (int k = 0; k < sys_.r; ++k)
      if (!proj(a, k, J[k])) return false;
    return true;
  }

  std::vector<std::uint32_t> iota(const Exponent& a, int k) const {
    const std::uint32_t N = neg_mask(a, k);
    if (N == all(k)) return {all(k)};
    if (N) throw std::logic_error("exponent is not a cohomology class representative");
    std::vector<std::uint32_t> out;
    for (int j = 0; j < len(k); ++j) out.push_back(1u << j);
    return out;
  }

  std::vector<std::pair<int, std::vector<std::uint32_t>>> iota_all(const Exponent& a) const {
    std::vector<std::pair<int, std::vector<std::uint32_t>>> out{{1, {}}};
    for (int k = 0; k < sys_.r; ++k) {
      decltype(out) next;
      for (const auto& [c, Js] : out)
        for (auto J : iota(a, k)) {
          auto v = Js;
          v.push_back(J);
          next.emplace_back(c, std::move(v));
        }
      out.swap(next);
    }
    return out;
  }

  // single-group homotopy: returns sign (0 when it vanishes) and new set
  std::pair<int, std::uint32_t> h_group(const Exponent& a, int k, std::uint32_t J) const {
    const std::uint32_t N = neg_mask(a, k);
    if (N == all(k)) return {0, 0};
    const int v = vertex(k, N);
    if (!(J >> v & 1u)) return {0, 0};
    const std::uint32_t K = J & ~(1u << v);
    if (!K) return {0, 0};
    const int below = std::popcount(J & ((1u << v) - 1));
    return {below % 2 ? -1 : 1, K};
  }

  // tensor homotopy sum_k (iota p)^{<k} (x) h_k (x) id, Koszul-signed by cochain degree
  Chain homotopy(const Chain& in, bool negate) const {
    Chain out;
    for (const auto& [st, c] : in) {
      const int sgI = (std::popcount(st.I) % 2 ? -1 : 1) * (negate ? -1 : 1);
      int sgn = 1;
      for (int k = 0; k < sys_.r; ++k) {
        if (k > 0) {
          if (!proj(st.a, k - 1, st.J[k - 1])) break;
          if ((std::popcount(st.J[k - 1]) - 1) % 2) sgn = -sgn;
        }
        auto [e, K] = h_group(st.a, k, st.J[k]);
        if (!e) continue;
        std::vector<std::vector<std::uint32_t>> heads{{}};
        for (int g = 0; g < k; ++g) {
          decltype(heads) next;
          for (const auto& hd : heads)
            for (auto J : iota(st.a, g)) {
              auto v = hd;
              v.push_back(J);
              next.push_back(std::move(v));
            }
          heads.swap(next);
        }
        for (auto& hd : heads) {
          CechState ns{st.I, st.a, hd};
          ns.J.push_back(K);
          ns.J.insert(ns.J.end(), st.J.begin() + k + 1, st.J.end());
          add(out, ns, R(c * R(static_cast<long>(sgI * sgn * e))));
        }
      }
    }
    return out;
  }

  Chain koszul(const Chain& in) const {
    Chain out;
    for (const auto& [st, c] : in) {
      int pos = 0;
      for (int i = 0; i <= sys_.n; ++i) {
        if (!(st.I >> i & 1u)) continue;
        const R sc = pos % 2 ? R(-c) : c;
        ++pos;
        const std::uint32_t I2 = st.I & ~(1u << i);
        for (const auto& [b, cf] : hom_terms_[i]) {
          CechState ns{I2, st.a, st.J};
          for (std::size_t v = 0; v < b.size(); ++v) ns.a[v] += b[v];
          add(out, ns, R(sc * cf));
        }
      }
    }
    return out;
  }

  SystemData sys_;
  std::vector<int> hoff_;
  std::vector<std::vector<std::pair<Exponent, R>>> hom_terms_;
};

}  // namespace mhres
