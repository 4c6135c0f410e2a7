#include "mhres/search.hpp"

#include <algorithm>
#include <numeric>

#include "mhres/complex.hpp"

namespace mhres {

bool Box::empty() const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (lo[k] > hi[k]) return true;
  return false;
}

bool Box::contains(const IntVec& m) const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (m[k] < lo[k] || m[k] > hi[k]) return false;
  return true;
}

static int s_sum(const SystemData& sys, int from, int to) {
  int t = 0;
  for (int i = std::max(from, 0); i <= std::min(to, sys.n); ++i) t += sys.s[i];
  return t;
}

Box m_bounds(const SystemData& sys) {
  const int total = s_sum(sys, 0, sys.n);
  Box b;
  for (int k = 0; k < sys.r; ++k) {
    b.lo.push_back(std::max(-sys.d[k], -sys.l[k]));
    b.hi.push_back(sys.d[k] * total - 1 + std::min(sys.d[k] - sys.l[k], 0));
  }
  return b;
}

bool cheap_filter(const SystemData& sys, const IntVec& m) {
  bool low = false, high = false;
  for (int k = 0; k < sys.r; ++k) {
    if (m[k] < sys.d[k] * s_sum(sys, sys.n - 1, sys.n)) low = true;
    if (m[k] >= sys.d[k] * s_sum(sys, 0, sys.n - 2) - sys.l[k]) high = true;
  }
  return low && high;
}

bool is_determinantal_vector(const SystemData& sys, const IntVec& m) {
  const WeymanComplex c = make_complex(sys, m);
  return term_dim(c, 2) == 0 && term_dim(c, -1) == 0;
}

std::vector<DetVector> enumerate_det_vectors(const SystemData& sys, bool use_filter) {
  const Box b = m_bounds(sys);
  std::vector<DetVector> out;
  IntVec m = b.lo;
  while (true) {
    if (!use_filter || cheap_filter(sys, m)) {
      const WeymanComplex c = make_complex(sys, m);
      if (term_dim(c, 2) == 0 && term_dim(c, -1) == 0) out.push_back({m, term_dim(c, 0)});
    }
    int k = sys.r - 1;
    while (k >= 0 && m[k] == b.hi[k]) {
      m[k] = b.lo[k];
      --k;
    }
    if (k < 0) break;
    ++m[k];
  }
  std::stable_sort(out.begin(), out.end(), [](const DetVector& a, const DetVector& c) {
    if (a.dim != c.dim) return a.dim < c.dim;
    return a.m > c.m;
  });
  return out;
}

Box perm_box(const SystemData& sys, const IntVec& perm) {
  Box b;
  b.perm = perm;
  for (int k = 0; k < sys.r; ++k) {
    int upto = 0;  // pi[k]
    for (int i = 0; i < sys.r; ++i)
      if (perm[i] <= perm[k]) upto += sys.l[i];
    const int before = upto - sys.l[k];  // pi[k-1], zero for the first group in pi order
    b.lo.push_back(sys.d[k] * s_sum(sys, sys.n - upto + 2, sys.n) - sys.l[k]);
    b.hi.push_back(sys.d[k] * s_sum(sys, 0, before + 1) - 1);
  }
  return b;
}

std::vector<Box> det_boxes(const SystemData& sys) {
  IntVec perm(sys.r);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Box> out;
  do {
    Box b = perm_box(sys, perm);
    if (b.empty()) continue;
    bool dup = false;
    for (const auto& o : out) dup = dup || (o.lo == b.lo && o.hi == b.hi);
    if (!dup) out.push_back(std::move(b));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

HasDeter has_deter(const SystemData& sys) {
  IntVec perm(sys.r);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (!perm_box(sys, perm).empty()) return {true, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

bool necessary_condition_r_le_2(const SystemData& sys) {
  for (int k = 0; k < sys.r; ++k) {
    const int lhs = sys.d[k] * s_sum(sys, sys.n - sys.l[k] + 2, sys.n) - sys.l[k];
    if (!(lhs < sys.d[k] * (sys.s[0] + sys.s[1]))) return false;
  }
  return true;
}

static bool all_ones(const SystemData& sys) {
  return std::all_of(sys.s.begin(), sys.s.end(), [](int v) { return v == 1; });
}

std::vector<IntVec> pure_vectors(const SystemData& sys) {
  if (all_ones(sys)) throw InvalidData("pure_vectors: s is all ones, use unmixed_pure_exists");
  const int total = s_sum(sys, 0, sys.n);
  if (sys.l == IntVec{1}) return {{sys.d[0] * (sys.s[0] + sys.s[1]) - 1}, {-1}};
  if (sys.l == IntVec{1, 1}) return {{-1, sys.d[1] * total - 1}, {sys.d[0] * total - 1, -1}};
  return {};
}

bool unmixed_pure_exists(const SystemData& sys) {
  if (!all_ones(sys)) throw InvalidData("unmixed_pure_exists: s must be all ones");
  for (int k = 0; k < sys.r; ++k)
    if (std::min(sys.l[k], sys.d[k]) != 1) return false;
  return true;
}

std::vector<int> OpenInterval::members() const {
  std::vector<int> out;
  for (int v = lo + 1; v < hi; ++v) out.push_back(v);
  return out;
}

OpenInterval homogeneous_interval(const SystemData& sys) {
  if (sys.r != 1) throw InvalidData("homogeneous_interval: requires r = 1");
  return {sys.d[0] * s_sum(sys, 2, sys.n) - sys.n - 1, sys.d[0] * (sys.s[0] + sys.s[1])};
}

MinDimReport min_dim_probe(const SystemData& sys) {
  const auto vecs = enumerate_det_vectors(sys);
  if (vecs.empty()) throw InvalidData("min_dim_probe: data admits no determinantal vector");
  MinDimReport rep;
  rep.min_dim = vecs.front().dim;
  const auto boxes = det_boxes(sys);
  for (const auto& v : vecs) {
    if (v.dim != rep.min_dim) break;
    rep.argmin.push_back(v.m);
    std::vector<MinDimReport::Distance> ds;
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      MinDimReport::Distance d{b, {}, 0};
      for (int k = 0; k < sys.r; ++k) {
        Rational c(boxes[b].lo[k] + boxes[b].hi[k], 2);
        c.canonicalize();
        Rational diff = abs(Rational(v.m[k]) - c);
        if (diff > d.linf) d.linf = diff;
        d.center.push_back(c);
      }
      ds.push_back(std::move(d));
    }
    rep.distances.push_back(std::move(ds));
  }
  return rep;
}

}  // namespace mhres
