#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhres/cech.hpp"
#include "mhres/complex.hpp"
#include "mhres/polyring.hpp"

namespace mhres {

template <class R>
using Dense = std::vector<std::vector<R>>;

struct BasisLabel {
  int p = 0;
  std::vector<int> ep;
  std::vector<bool> dual;  // per group: true when the group carries S(.)*
  Exponent alpha;          // affine exponents, groups concatenated

  bool operator==(const BasisLabel& o) const {
    return p == o.p && ep == o.ep && dual == o.dual && alpha == o.alpha;
  }
};

std::string label_str(const SystemData& sys, const BasisLabel& b);

// primal groups list monomials lexicographically, dual groups in reverse;
// first group most significant
std::vector<BasisLabel> basis_of_summand(const SystemData& sys, const CohSummand& s);

// per-group monomial list of a cohomology H(twist) with the same convention
struct GroupBasis {
  bool dual;
  std::vector<Exponent> monos;
};
std::vector<GroupBasis> twist_basis(const SystemData& sys, const std::vector<long>& twist);

// homogeneous Laurent exponents representing a basis element (primal: the
// monomial itself; dual: -1 minus the homogenized dual monomial)
Exponent homogeneous_rep(const SystemData& sys, const std::vector<long>& twist, const BasisLabel& b);

std::uint32_t index_mask(const std::vector<int>& ep);

enum class BezoutMethod { Transfer, Affine };
enum class BlockKind { Zero, Sylvester, Bezout };
const char* block_kind_name(BlockKind k);

struct BlockInfo {
  int a = 0, b = 0;
  std::vector<int> source_ep, target_ep;
  std::size_t source = 0, target = 0;  // summand indices
  std::size_t row0 = 0, col0 = 0, nrows = 0, ncols = 0;
  BlockKind kind = BlockKind::Zero;
};

// groups substituted in an affine partial Bezoutian for the pair, in substitution order
std::vector<int> substituted_groups(const SystemData& sys, const IntVec& m, const CohSummand& src,
                                    const CohSummand& tgt);

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<int>> exponent_product(const std::vector<GroupBasis>& per) {
  std::vector<std::vector<int>> idx{{}};
  for (const auto& g : per) {
    std::vector<std::vector<int>> next;
    for (const auto& pre : idx)
      for (int t = 0; t < static_cast<int>(g.monos.size()); ++t) {
        auto v = pre;
        v.push_back(t);
        next.push_back(std::move(v));
      }
    idx.swap(next);
  }
  return idx;
}

}  // namespace detail

// rows: source basis, columns: target basis
template <class R>
Dense<R> mult_map(const SystemData& sys, const MultiPoly<R>& g, const std::vector<long>& source_twist,
                  const std::vector<long>& target_twist) {
  const auto sb = twist_basis(sys, source_twist);
  const auto tb = twist_basis(sys, target_twist);
  for (int k = 0; k < sys.r; ++k) {
    if (sb[k].monos.empty() || tb[k].monos.empty())
      throw std::invalid_argument("mult_map: vanishing cohomology at source or target");
    if (sb[k].dual != tb[k].dual)
      throw std::invalid_argument("mult_map: source and target differ in cohomological degree");
    const long delta = target_twist[k] - source_twist[k];
    if (delta < 0 || (!g.is_zero() && g.degree_in(sys.offset(k), sys.l[k]) > delta))
      throw std::invalid_argument("mult_map: degree mismatch in group " + std::to_string(k + 1));
  }
  const auto si = detail::exponent_product(sb);
  const auto ti = detail::exponent_product(tb);
  Dense<R> out(si.size(), std::vector<R>(ti.size(), R(0L)));
  Exponent u(sys.n);
  for (std::size_t r = 0; r < si.size(); ++r) {
    for (std::size_t c = 0; c < ti.size(); ++c) {
      bool ok = true;
      for (int k = 0; k < sys.r && ok; ++k) {
        const auto& al = sb[k].monos[si[r][k]];
        const auto& be = tb[k].monos[ti[c][k]];
        for (int j = 0; j < sys.l[k]; ++j) {
          const int v = sb[k].dual ? al[j] - be[j] : be[j] - al[j];
          if (v < 0) ok = false;
          u[sys.offset(k) + j] = v;
        }
      }
      if (ok) out[r][c] = g.coef(u);
    }
  }
  return out;
}

// Koszul-signed multiplication block K_{1,a} -> K_{0,a-1} between two summands
template <class R>
Dense<R> sylvester_block(const SystemData& sys, const std::vector<MultiPoly<R>>& polys,
                         const CohSummand& src, const CohSummand& tgt) {
  const std::size_t nr = src.dim.get_ui(), nc = tgt.dim.get_ui();
  Dense<R> zero(nr, std::vector<R>(nc, R(0L)));
  if (src.p != tgt.p + 1) return zero;
  if (!std::includes(src.ep.begin(), src.ep.end(), tgt.ep.begin(), tgt.ep.end())) return zero;
  int pos = 0, removed = -1;
  for (std::size_t t = 0; t < src.ep.size(); ++t)
    if (!std::binary_search(tgt.ep.begin(), tgt.ep.end(), src.ep[t])) {
      pos = static_cast<int>(t) + 1;
      removed = src.ep[t];
    }
  auto M = mult_map(sys, polys[removed], src.twist, tgt.twist);
  if (pos % 2 == 0)
    for (auto& row : M)
      for (auto& e : row) e = R(-e);
  return M;
}

// (P - P|x_v->y_v) / (x_v - y_v) for P free of y_v
template <class R>
MultiPoly<R> divided_difference(const MultiPoly<R>& P, int xv, int yv) {
  MultiPoly<R> out(P.nvars());
  for (const auto& [e, c] : P.terms()) {
    if (e[yv] != 0) throw std::invalid_argument("divided_difference: polynomial already involves y");
    for (int t = 0; t < e[xv]; ++t) {
      Exponent f = e;
      f[xv] = t;
      f[yv] = e[xv] - 1 - t;
      out.add_term(f, c);
    }
  }
  return out;
}

// det[f_i(w_0) ... f_i(w_k)] / prod (x_v - y_v), w_j = first j listed variables moved to y.
// Polynomials in the result live over 2n variables (x then y).
template <class R>
MultiPoly<R> partial_bezoutian(const SystemData& sys, const std::vector<MultiPoly<R>>& polys,
                               const std::vector<int>& T, const std::vector<int>& G) {
  std::vector<int> vars;
  for (int k : G)
    for (int j = 0; j < sys.l[k]; ++j) vars.push_back(sys.offset(k) + j);
  if (vars.size() + 1 != T.size())
    throw std::invalid_argument("partial_bezoutian: need |T| = (substituted variables) + 1");
  const int nv = 2 * sys.n;
  std::vector<std::vector<MultiPoly<R>>> M;
  for (int i : T) {
    std::vector<MultiPoly<R>> row;
    MultiPoly<R> cur = polys[i].extend(nv);
    row.push_back(cur);
    for (int v : vars) {
      cur = cur.rename_var(v, sys.n + v);
      row.push_back(cur);
    }
    M.push_back(std::move(row));
  }
  MultiPoly<R> D = poly_matrix_det(M);
  for (int v : vars) {
    MultiPoly<R> lin = MultiPoly<R>::variable(nv, v) - MultiPoly<R>::variable(nv, sys.n + v);
    D = exact_divide(D, lin);
  }
  return D;
}

template <class R>
struct BlockMatrix {
  SystemData sys;
  IntVec m;
  BezoutMethod method = BezoutMethod::Transfer;
  std::vector<CohSummand> row_summands, col_summands;  // K_1 and K_0
  std::vector<BasisLabel> rows, cols;
  std::vector<BlockInfo> blocks;
  Dense<R> entries;
  // rows are the K_1 side; the classical Sylvester layout is the transpose
  bool rows_are_source = true;

  bool square() const { return rows.size() == cols.size(); }

  Dense<R> block(const BlockInfo& b) const {
    Dense<R> out(b.nrows, std::vector<R>(b.ncols));
    for (std::size_t i = 0; i < b.nrows; ++i)
      for (std::size_t j = 0; j < b.ncols; ++j) out[i][j] = entries[b.row0 + i][b.col0 + j];
    return out;
  }

  const BlockInfo* find_block(const std::vector<int>& src_ep, const std::vector<int>& tgt_ep) const {
    for (const auto& b : blocks)
      if (b.source_ep == src_ep && b.target_ep == tgt_ep) return &b;
    return nullptr;
  }

  // same matrix with every entry mapped through f
  template <class F>
  auto map_entries(F f) const -> BlockMatrix<decltype(f(std::declval<R>()))> {
    BlockMatrix<decltype(f(std::declval<R>()))> out;
    out.sys = sys;
    out.m = m;
    out.method = method;
    out.row_summands = row_summands;
    out.col_summands = col_summands;
    out.rows = rows;
    out.cols = cols;
    out.blocks = blocks;
    out.rows_are_source = rows_are_source;
    for (const auto& row : entries) {
      out.entries.emplace_back();
      for (const auto& e : row) out.entries.back().push_back(f(e));
    }
    return out;
  }
};

namespace detail {

template <class R>
void layout_blocks(BlockMatrix<R>& M) {
  const auto& sys = M.sys;
  std::vector<std::size_t> r0, c0;
  for (const auto& s : M.row_summands) {
    r0.push_back(M.rows.size());
    for (auto& b : basis_of_summand(sys, s)) M.rows.push_back(std::move(b));
  }
  for (const auto& s : M.col_summands) {
    c0.push_back(M.cols.size());
    for (auto& b : basis_of_summand(sys, s)) M.cols.push_back(std::move(b));
  }
  for (std::size_t a = 0; a < M.row_summands.size(); ++a) {
    for (std::size_t b = 0; b < M.col_summands.size(); ++b) {
      const auto& s = M.row_summands[a];
      const auto& t = M.col_summands[b];
      BlockInfo bi;
      bi.a = s.p;
      bi.b = t.p;
      bi.source_ep = s.ep;
      bi.target_ep = t.ep;
      bi.source = a;
      bi.target = b;
      bi.row0 = r0[a];
      bi.col0 = c0[b];
      bi.nrows = s.dim.get_ui();
      bi.ncols = t.dim.get_ui();
      const bool nested = std::includes(s.ep.begin(), s.ep.end(), t.ep.begin(), t.ep.end());
      if (s.p - 1 < t.p || !nested)
        bi.kind = BlockKind::Zero;
      else if (s.p - 1 == t.p)
        bi.kind = BlockKind::Sylvester;
      else
        bi.kind = BlockKind::Bezout;
      M.blocks.push_back(std::move(bi));
    }
  }
  M.entries.assign(M.rows.size(), std::vector<R>(M.cols.size(), R(0L)));
}

inline int koszul_sign(const std::vector<int>& I, const std::vector<int>& T) {
  int tot = 0;
  for (std::size_t t = 0; t < T.size(); ++t) {
    const int pos = static_cast<int>(std::find(I.begin(), I.end(), T[t]) - I.begin()) + 1;
    tot += pos - static_cast<int>(t + 1);
  }
  return tot % 2 ? -1 : 1;
}

template <class R>
void fill_affine_bezout(BlockMatrix<R>& M, const std::vector<MultiPoly<R>>& polys, const BlockInfo& bi) {
  const auto& sys = M.sys;
  const auto& s = M.row_summands[bi.source];
  const auto& t = M.col_summands[bi.target];
  std::vector<int> T;
  for (int i : s.ep)
    if (!std::binary_search(t.ep.begin(), t.ep.end(), i)) T.push_back(i);
  const auto G = substituted_groups(sys, M.m, s, t);
  const MultiPoly<R> B = partial_bezoutian(sys, polys, T, G);
  const int sg = koszul_sign(s.ep, T);
  std::vector<bool> inG(sys.r, false);
  for (int k : G) inG[k] = true;
  Exponent e(2 * sys.n);
  for (std::size_t i = 0; i < bi.nrows; ++i) {
    const auto& ls = M.rows[bi.row0 + i];
    for (std::size_t j = 0; j < bi.ncols; ++j) {
      const auto& lt = M.cols[bi.col0 + j];
      std::fill(e.begin(), e.end(), 0);
      bool ok = true;
      for (int k = 0; k < sys.r && ok; ++k) {
        for (int jj = 0; jj < sys.l[k]; ++jj) {
          const int v = sys.offset(k) + jj;
          if (inG[k]) {
            e[v] = ls.alpha[v];
            e[sys.n + v] = lt.alpha[v];
          } else {
            const int u = ls.dual[k] ? ls.alpha[v] - lt.alpha[v] : lt.alpha[v] - ls.alpha[v];
            if (u < 0) ok = false;
            e[v] = u;
          }
        }
      }
      if (!ok) continue;
      R c = B.coef(e);
      M.entries[bi.row0 + i][bi.col0 + j] = sg < 0 ? R(-c) : c;
    }
  }
}

template <class R>
bool negated(const R& a, const R& b) {
  return R(a + b) == R(0L) && !is_zero(a);
}

// Flip signs of whole summand rows/columns so that every Sylvester block of
// the transferred differential agrees with the explicit formula.
template <class R>
void align_signs(BlockMatrix<R>& M, const Dense<R>& transfer, const std::vector<MultiPoly<R>>& polys) {
  const std::size_t nr = M.row_summands.size(), nc = M.col_summands.size();
  std::vector<int> rs(nr, 0), cs(nc, 0);  // 0 = unset
  // relation per Sylvester block: sign(row) * sign(col) = rel
  struct Edge {
    std::size_t a, b;
    int rel;
  };
  std::vector<Edge> edges;
  for (const auto& bi : M.blocks) {
    if (bi.kind != BlockKind::Sylvester) continue;
    const auto F = sylvester_block(M.sys, polys, M.row_summands[bi.source], M.col_summands[bi.target]);
    int rel = 0;
    for (std::size_t i = 0; i < bi.nrows && !rel; ++i)
      for (std::size_t j = 0; j < bi.ncols && !rel; ++j) {
        const R& t = transfer[bi.row0 + i][bi.col0 + j];
        if (is_zero(F[i][j]) && is_zero(t)) continue;
        if (F[i][j] == t) rel = 1;
        else if (negated(F[i][j], t)) rel = -1;
        else throw std::logic_error("transferred Sylvester block differs from the explicit formula");
      }
    if (!rel) continue;
    for (std::size_t i = 0; i < bi.nrows; ++i)
      for (std::size_t j = 0; j < bi.ncols; ++j) {
        const R& t = transfer[bi.row0 + i][bi.col0 + j];
        if (!(rel > 0 ? F[i][j] == t : (F[i][j] + t) == R(0L)))
          throw std::logic_error("transferred Sylvester block differs from the explicit formula");
      }
    edges.push_back({bi.source, bi.target, rel});
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : edges) {
      if (!rs[e.a] && !cs[e.b]) continue;
      if (rs[e.a] && !cs[e.b]) {
        cs[e.b] = rs[e.a] * e.rel;
        changed = true;
      } else if (!rs[e.a] && cs[e.b]) {
        rs[e.a] = cs[e.b] * e.rel;
        changed = true;
      } else if (rs[e.a] * cs[e.b] != e.rel) {
        throw std::logic_error("inconsistent Sylvester sign pattern");
      }
    }
    if (!changed)
      for (const auto& e : edges)
        if (!rs[e.a] && !cs[e.b]) {
          rs[e.a] = 1;
          changed = true;
          break;
        }
  }
  for (auto& v : rs) v = v ? v : 1;
  for (auto& v : cs) v = v ? v : 1;
  for (const auto& bi : M.blocks) {
    const int sg = rs[bi.source] * cs[bi.target];
    for (std::size_t i = 0; i < bi.nrows; ++i)
      for (std::size_t j = 0; j < bi.ncols; ++j) {
        const R& t = transfer[bi.row0 + i][bi.col0 + j];
        M.entries[bi.row0 + i][bi.col0 + j] = sg < 0 ? R(-t) : t;
      }
  }
}

template <class R>
Dense<R> transfer_matrix(const BlockMatrix<R>& M, const std::vector<MultiPoly<R>>& polys) {
  const auto& sys = M.sys;
  std::map<CohClass, std::size_t> col_index;
  {
    std::size_t c = 0;
    for (const auto& t : M.col_summands) {
      for (std::size_t j = 0; j < t.dim.get_ui(); ++j, ++c)
        col_index[{index_mask(t.ep), homogeneous_rep(sys, t.twist, M.cols[c])}] = c;
    }
  }
  CechTransfer<R> ct(sys, polys);
  Dense<R> out(M.rows.size(), std::vector<R>(M.cols.size(), R(0L)));
  std::size_t r = 0;
  for (const auto& s : M.row_summands) {
    for (std::size_t i = 0; i < s.dim.get_ui(); ++i, ++r) {
      const auto img = ct.transfer(index_mask(s.ep), homogeneous_rep(sys, s.twist, M.rows[r]));
      for (const auto& [cls, c] : img) {
        auto it = col_index.find(cls);
        if (it == col_index.end()) throw std::logic_error("transferred class lies outside K_0");
        out[r][it->second] += c;
      }
    }
  }
  return out;
}

}  // namespace detail

template <class R>
BlockMatrix<R> assemble_matrix(const SystemData& sys, const std::vector<MultiPoly<R>>& polys, const IntVec& m,
                               BezoutMethod method = BezoutMethod::Transfer) {
  const WeymanComplex cx = make_complex(sys, m);
  BlockMatrix<R> M;
  M.sys = sys;
  M.m = m;
  M.method = method;
  M.row_summands = cx.term(1);
  M.col_summands = cx.term(0);
  detail::layout_blocks(M);
  bool any_bezout = false;
  for (const auto& bi : M.blocks) any_bezout = any_bezout || bi.kind == BlockKind::Bezout;
  if (method == BezoutMethod::Transfer && any_bezout) {
    detail::align_signs(M, detail::transfer_matrix(M, polys), polys);
    return M;
  }
  for (const auto& bi : M.blocks) {
    if (bi.kind == BlockKind::Sylvester) {
      const auto B = sylvester_block(sys, polys, M.row_summands[bi.source], M.col_summands[bi.target]);
      for (std::size_t i = 0; i < bi.nrows; ++i)
        for (std::size_t j = 0; j < bi.ncols; ++j) M.entries[bi.row0 + i][bi.col0 + j] = B[i][j];
    } else if (bi.kind == BlockKind::Bezout) {
      detail::fill_affine_bezout(M, polys, bi);
    }
  }
  return M;
}

// entries of delta between two summands of the complex at m
template <class R>
Dense<R> bezout_block(const SystemData& sys, const std::vector<MultiPoly<R>>& polys, const IntVec& m,
                      const CohSummand& src, const CohSummand& tgt,
                      BezoutMethod method = BezoutMethod::Transfer) {
  const auto M = assemble_matrix(sys, polys, m, method);
  const BlockInfo* b = M.find_block(src.ep, tgt.ep);
  if (!b) throw std::invalid_argument("bezout_block: summands are not terms K_1, K_0 of the complex");
  return M.block(*b);
}

// ---- Morley form ----

// homogeneous variables: xbar_{k,j} at offset(k)+k+j, ybar after all xbar
template <class R>
std::vector<std::vector<MultiPoly<R>>> morley_decompose(const SystemData& sys,
                                                        const std::vector<MultiPoly<R>>& polys) {
  const int H = sys.n + sys.r;
  const int nv = 2 * H;
  std::vector<std::vector<MultiPoly<R>>> table;
  for (int i = 0; i <= sys.n; ++i) {
    MultiPoly<R> P(nv);
    for (const auto& [e, c] : polys[i].terms()) {
      Exponent h(nv, 0);
      for (int k = 0; k < sys.r; ++k) {
        const int ho = sys.offset(k) + k;
        int tot = 0;
        for (int j = 0; j < sys.l[k]; ++j) {
          h[ho + 1 + j] = e[sys.offset(k) + j];
          tot += e[sys.offset(k) + j];
        }
        h[ho] = sys.s[i] * sys.d[k] - tot;
      }
      P.add_term(h, c);
    }
    std::vector<MultiPoly<R>> cols;
    for (int k = 0; k < sys.r; ++k) {
      const int ho = sys.offset(k) + k;
      for (int j = 0; j <= sys.l[k]; ++j) {
        const int xv = ho + j, yv = H + ho + j;
        MultiPoly<R> dd = divided_difference(P, xv, yv);
        if (k < sys.r - 1 && j == sys.l[k]) {
          P = dd;  // continue into the next group
        } else {
          cols.push_back(std::move(dd));
          P = P.rename_var(xv, yv);
        }
      }
    }
    table.push_back(std::move(cols));
  }
  return table;
}

template <class R>
MultiPoly<R> morley_det(const SystemData& sys, const std::vector<MultiPoly<R>>& polys) {
  return poly_matrix_det(morley_decompose(sys, polys));
}

// piece of xbar-degree rho-m and ybar-degree m, dehomogenized; rows follow the
// dual basis of degree rho-m, columns the primal basis of degree m
template <class R>
Dense<R> morley_graded_piece(const SystemData& sys, const MultiPoly<R>& D, const IntVec& m) {
  const IntVec rho = critical_degree(sys);
  std::vector<long> row_tw, col_tw;
  for (int k = 0; k < sys.r; ++k) {
    row_tw.push_back(static_cast<long>(m[k]) - static_cast<long>(rho[k]) - sys.l[k] - 1);
    col_tw.push_back(m[k]);
  }
  const auto rb = twist_basis(sys, row_tw), cb = twist_basis(sys, col_tw);
  const auto ri = detail::exponent_product(rb), ci = detail::exponent_product(cb);
  auto flat = [&](const std::vector<GroupBasis>& gb, const std::vector<int>& idx) {
    Exponent e;
    for (int k = 0; k < sys.r; ++k) e.insert(e.end(), gb[k].monos[idx[k]].begin(), gb[k].monos[idx[k]].end());
    return e;
  };
  std::map<Exponent, std::size_t> rpos, cpos;
  for (std::size_t t = 0; t < ri.size(); ++t) rpos[flat(rb, ri[t])] = t;
  for (std::size_t t = 0; t < ci.size(); ++t) cpos[flat(cb, ci[t])] = t;
  Dense<R> out(ri.size(), std::vector<R>(ci.size(), R(0L)));
  const int H = sys.n + sys.r;
  for (const auto& [e, c] : D.terms()) {
    Exponent xa, ya;
    bool ok = true;
    for (int k = 0; k < sys.r && ok; ++k) {
      const int ho = sys.offset(k) + k;
      int dx = 0, dy = 0;
      for (int j = 0; j <= sys.l[k]; ++j) {
        dx += e[ho + j];
        dy += e[H + ho + j];
      }
      if (dx != rho[k] - m[k] || dy != m[k]) ok = false;
      for (int j = 1; j <= sys.l[k]; ++j) {
        xa.push_back(e[ho + j]);
        ya.push_back(e[H + ho + j]);
      }
    }
    if (!ok) continue;
    out[rpos.at(xa)][cpos.at(ya)] += c;
  }
  return out;
}

// ---- comparison up to permutations and signs ----

struct MatchOptions {
  bool allow_transpose = true;
  bool line_signs = false;  // independent sign per row and per column
};

namespace detail {

template <class R>
R canon_sign(const R& v) {
  R n = R(-v);
  return n < v ? n : v;
}

template <class R>
bool signs_consistent(const Dense<R>& A, const Dense<R>& B, const std::vector<std::size_t>& rp,
                      const std::vector<std::size_t>& cp, bool line_signs) {
  const std::size_t n = A.size(), m = n ? A[0].size() : 0;
  if (!line_signs) {
    for (int s : {1, -1}) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < m && ok; ++j)
          ok = s > 0 ? A[i][j] == B[rp[i]][cp[j]] : (A[i][j] + B[rp[i]][cp[j]]) == R(0L);
      if (ok) return true;
    }
    return false;
  }
  std::vector<int> rs(n, 0), cs(m, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (rs[start]) continue;
    rs[start] = 1;
    std::vector<std::pair<bool, std::size_t>> stack{{true, start}};
    while (!stack.empty()) {
      auto [isrow, idx] = stack.back();
      stack.pop_back();
      for (std::size_t o = 0; o < (isrow ? m : n); ++o) {
        const R& a = isrow ? A[idx][o] : A[o][idx];
        const R& b = isrow ? B[rp[idx]][cp[o]] : B[rp[o]][cp[idx]];
        if (is_zero(a) && is_zero(b)) continue;
        int rel;
        if (a == b) rel = 1;
        else if ((a + b) == R(0L)) rel = -1;
        else return false;
        int& mine = isrow ? rs[idx] : cs[idx];
        int& other = isrow ? cs[o] : rs[o];
        if (!other) {
          other = mine * rel;
          stack.push_back({!isrow, o});
        } else if (other != mine * rel) {
          return false;
        }
      }
    }
  }
  return true;
}

template <class R>
bool match_perm(const Dense<R>& A, const Dense<R>& B, bool line_signs) {
  const std::size_t n = A.size();
  if (n != B.size()) return false;
  const std::size_t m = n ? A[0].size() : 0;
  if (n && m != B[0].size()) return false;
  auto key = [](const R& v) { return canon_sign(v); };
  // greedy row multiset check, then backtrack over column permutations
  std::vector<std::size_t> cp(m), rp(n);
  std::vector<bool> used(m, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t c) -> bool {
    // rows of A restricted to columns < c must match rows of B restricted to cp[0..c)
    std::multiset<std::vector<R>> ra, rb;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<R> x, y;
      for (std::size_t j = 0; j < c; ++j) {
        x.push_back(key(A[i][j]));
        y.push_back(key(B[i][cp[j]]));
      }
      ra.insert(x);
      rb.insert(y);
    }
    if (ra != rb) return false;
    if (c == m) {
      // all row bijections compatible with keys; try them by backtracking
      std::vector<bool> rused(n, false);
      std::function<bool(std::size_t)> rrec = [&](std::size_t i) -> bool {
        if (i == n) return signs_consistent(A, B, rp, cp, line_signs);
        for (std::size_t t = 0; t < n; ++t) {
          if (rused[t]) continue;
          bool same = true;
          for (std::size_t j = 0; j < m && same; ++j) same = key(A[i][j]) == key(B[t][cp[j]]);
          if (!same) continue;
          rused[t] = true;
          rp[i] = t;
          if (rrec(i + 1)) return true;
          rused[t] = false;
        }
        return false;
      };
      return rrec(0);
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (used[t]) continue;
      used[t] = true;
      cp[c] = t;
      if (rec(c + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace detail

template <class R>
Dense<R> transpose(const Dense<R>& A) {
  if (A.empty()) return A;
  Dense<R> T(A[0].size(), std::vector<R>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
  return T;
}

// A equals B after row/column permutations and a global sign (or per-line signs)
template <class R>
bool equivalent_matrices(const Dense<R>& A, const Dense<R>& B, MatchOptions opt = {}) {
  if (detail::match_perm(A, B, opt.line_signs)) return true;
  return opt.allow_transpose && detail::match_perm(transpose(A), B, opt.line_signs);
}

}  // namespace mhres
