#include "mhres/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace mhres {

int SystemData::offset(int k) const {
  int o = 0;
  for (int g = 0; g < k; ++g) o += l[g];
  return o;
}

SystemData validate_system(const IntVec& l, const IntVec& d, const IntVec& s) {
  if (l.empty()) throw InvalidData("l must contain at least one group");
  if (d.size() != l.size())
    throw InvalidData("length mismatch: d has " + std::to_string(d.size()) +
                      " entries, l has " + std::to_string(l.size()));
  for (int v : l)
    if (v <= 0) throw InvalidData("non-positive group size in l");
  for (int v : d)
    if (v <= 0) throw InvalidData("non-positive degree in d");
  const int n = std::accumulate(l.begin(), l.end(), 0);
  if (static_cast<int>(s.size()) != n + 1)
    throw InvalidData("length mismatch: s must have sum(l)+1 = " + std::to_string(n + 1) +
                      " entries, got " + std::to_string(s.size()));
  for (int v : s)
    if (v <= 0) throw InvalidData("non-positive scale factor in s");
  if (!std::is_sorted(s.begin(), s.end())) throw InvalidData("s is not sorted nondecreasing");
  int g = 0;
  for (int v : s) g = std::gcd(g, v);
  if (g != 1) throw InvalidData("gcd(s) = " + std::to_string(g) + ", expected 1");
  SystemData sys{l, d, s, n, static_cast<int>(l.size())};
  return sys;
}

IntVec critical_degree(const SystemData& sys) {
  const int total = std::accumulate(sys.s.begin(), sys.s.end(), 0);
  IntVec rho(sys.r);
  for (int k = 0; k < sys.r; ++k) rho[k] = sys.d[k] * total - sys.l[k] - 1;
  return rho;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BottDim bott_dim(int lk, long twist) {
  if (twist >= 0) return {0, binomial(twist + lk, lk)};
  if (twist < -lk) return {lk, binomial(-twist - 1, lk)};
  return {std::nullopt, 0};
}

Integer cohomology_dim(const SystemData& sys, const std::vector<long>& twist) {
  Integer out = 1;
  for (int k = 0; k < sys.r; ++k) out *= bott_dim(sys.l[k], twist[k]).dim;
  return out;
}

std::vector<std::vector<int>> index_subsets(int n_plus_1, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n_plus_1) return out;
  std::vector<int> cur(p);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n_plus_1 - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

SumSet sum_set(const SystemData& sys, int p) {
  if (p < 0 || p > sys.n + 1)
    throw std::out_of_range("sum_set: p must lie in [0, n+1]");
  std::map<int, long> counts;
  for (const auto& I : index_subsets(sys.n + 1, p)) {
    int z = 0;
    for (int i : I) z += sys.s[i];
    ++counts[z];
  }
  SumSet out;
  for (auto [z, c] : counts) {
    out.values.push_back(z);
    out.multiplicity.push_back(c);
  }
  return out;
}

bool pk_below(const SystemData& sys, const IntVec& m, int k, long z) {
  return z * sys.d[k] > static_cast<long>(m[k]) + sys.l[k];
}

bool pk_above(const SystemData& sys, const IntVec& m, int k, long z) {
  return z * sys.d[k] <= m[k];
}

bool in_pk(const SystemData& sys, const IntVec& m, int k, long z) {
  return !pk_below(sys, m, k, z) && !pk_above(sys, m, k, z);
}

static long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<long> pk_interval(const SystemData& sys, const IntVec& m, int k) {
  std::vector<long> out;
  const long lo = floor_div(m[k], sys.d[k]) + 1;
  const long hi = floor_div(static_cast<long>(m[k]) + sys.l[k], sys.d[k]);
  for (long z = lo; z <= hi; ++z) out.push_back(z);
  return out;
}

int q_of(const SystemData& sys, const IntVec& m, long z) {
  int q = 0;
  for (int k = 0; k < sys.r; ++k)
    if (pk_below(sys, m, k, z)) q += sys.l[k];
  return q;
}

std::vector<KnpEntry> knp_support(const SystemData& sys, const IntVec& m, int p) {
  const SumSet sp = sum_set(sys, p);
  std::vector<KnpEntry> out;
  for (std::size_t t = 0; t < sp.values.size(); ++t) {
    const int z = sp.values[t];
    bool hit = false;
    for (int k = 0; k < sys.r && !hit; ++k) hit = in_pk(sys, m, k, z);
    if (hit) continue;
    std::vector<long> tw(sys.r);
    for (int k = 0; k < sys.r; ++k) tw[k] = static_cast<long>(m[k]) - static_cast<long>(z) * sys.d[k];
    out.push_back({z, p - q_of(sys, m, z), cohomology_dim(sys, tw), sp.multiplicity[t]});
  }
  return out;
}

ResultantDegrees resultant_degrees(const SystemData& sys) {
  // multinomial(n; l) * prod d_k^{l_k} * prod s / s_i
  Integer multi = 1;
  int used = 0;
  for (int k = 0; k < sys.r; ++k) {
    used += sys.l[k];
    multi *= binomial(used, sys.l[k]);
  }
  Integer dpow = 1;
  for (int k = 0; k < sys.r; ++k) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), sys.d[k], sys.l[k]);
    dpow *= t;
  }
  Integer sprod = 1;
  for (int v : sys.s) sprod *= v;
  ResultantDegrees out;
  out.total = 0;
  for (int i = 0; i <= sys.n; ++i) {
    Integer deg = multi * dpow * (sprod / sys.s[i]);
    out.per_poly.push_back(deg);
    out.total += deg;
  }
  return out;
}

std::string join_ints(const IntVec& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace mhres
