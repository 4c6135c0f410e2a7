#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mhres/matrices.hpp"
#include "mhres/matrix_io.hpp"
#include "mhres/search.hpp"
#include "mhres/verify.hpp"

using namespace mhres;
using CMat = Dense<CoefPoly>;

static const SystemData bilinear = validate_system({1, 1}, {1, 1}, {1, 1, 2});
static const SystemData unmixed = validate_system({1, 1}, {1, 1}, {1, 1, 1});
static const SystemData quadrics = validate_system({2}, {2}, {1, 1, 1});

static CoefPoly cv(const GenericSystem& g, int i, int pos) { return CoefPoly::var(g.layout.offset[i] + pos); }

static CMat drop_zero_rows(const CMat& A) {
  CMat out;
  for (const auto& row : A) {
    bool any = false;
    for (const auto& e : row) any = any || !e.is_zero();
    if (any) out.push_back(row);
  }
  return out;
}

static bool all_zero(const CMat& A) {
  for (const auto& row : A)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

static CMat negate(CMat A) {
  for (auto& row : A)
    for (auto& e : row) e = -e;
  return A;
}

// reference 10x10 "twisted" Sylvester matrix of the bilinear system at m=(3,-1)
static CMat golden_10x10(const GenericSystem& g) {
  auto a = [&](int j) { return cv(g, 0, j); };
  auto b = [&](int j) { return cv(g, 1, j); };
  auto c = [&](int j) { return cv(g, 2, j); };
  const CoefPoly z(0L);
  return {
      {-b(1), -b(3), z, a(1), a(3), z, z, z, z, z},
      {-b(0), -b(2), z, a(0), a(2), z, z, z, z, z},
      {z, -b(1), -b(3), z, a(1), a(3), z, z, z, z},
      {z, -b(0), -b(2), z, a(0), a(2), z, z, z, z},
      {-c(4), -c(5), -c(8), z, z, z, a(1), z, a(3), z},
      {-c(1), -c(3), -c(7), z, z, z, a(0), a(1), a(2), a(3)},
      {-c(0), -c(2), -c(6), z, z, z, z, a(0), z, a(2)},
      {z, z, z, -c(4), -c(5), -c(8), b(1), z, b(3), z},
      {z, z, z, -c(1), -c(3), -c(7), b(0), b(1), b(2), b(3)},
      {z, z, z, -c(0), -c(2), -c(6), z, b(0), z, b(2)},
  };
}

TEST_CASE("basis_of_summand") {
  auto c = make_complex(bilinear, {2, 0});
  const auto& k0 = c.term(0);
  REQUIRE(k0.size() == 2);
  auto b = basis_of_summand(bilinear, k0[0]);
  REQUIRE(b.size() == 3);
  CHECK(b[0].alpha == Exponent{0, 0});
  CHECK(b[1].alpha == Exponent{1, 0});
  CHECK(b[2].alpha == Exponent{2, 0});
  CHECK_FALSE(b[0].dual[0]);
  CHECK(basis_of_summand(bilinear, k0[1]).size() == 1);
  const auto& k1 = c.term(1);
  REQUIRE(k1.size() == 2);
  auto d = basis_of_summand(bilinear, k1[1]);
  CHECK(k1[1].twist == std::vector<long>{-2, -4});
  REQUIRE(d.size() == 3);
  CHECK(d[0].dual[0]);
  CHECK(d[0].dual[1]);
  for (const auto& cx : {make_complex(bilinear, {3, -1}), make_complex(quadrics, {1})})
    for (const auto& [nu, v] : cx.terms)
      for (const auto& s : v) CHECK(Integer(basis_of_summand(cx.sys, s).size()) == s.dim);
}

TEST_CASE("mult_map") {
  auto g = make_generic_system(unmixed);
  auto M = mult_map(unmixed, g.polys[2], {0, -3}, {1, -2});
  CHECK(M == CMat{{cv(g, 2, 2), cv(g, 2, 3)}, {cv(g, 2, 0), cv(g, 2, 1)}});
  auto one = MultiPoly<CoefPoly>::constant(2, CoefPoly(1L));
  CHECK(mult_map(unmixed, one, {0, 0}, {0, 0}) == CMat{{CoefPoly(1L)}});
  auto u = validate_system({1}, {1}, {1, 1});
  auto h = make_generic_system(u);
  auto S = mult_map(u, h.polys[0], {1}, {2});
  const CoefPoly a0 = cv(h, 0, 0), a1 = cv(h, 0, 1), z(0L);
  CHECK(S == CMat{{a0, a1, z}, {z, a0, a1}});
  CHECK_THROWS_AS(mult_map(u, h.polys[0], {1}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(mult_map(u, h.polys[0], {2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(mult_map(u, h.polys[0], {1}, {-3}), std::invalid_argument);
}

TEST_CASE("mult_map agrees with brute-force expansion on primal spaces") {
  auto sys = validate_system({1, 2}, {1, 1}, {1, 1, 1, 2});
  auto g = make_generic_system(sys);
  auto M = mult_map(sys, g.polys[3], {1, 0}, {3, 2});
  auto sb = twist_basis(sys, {1, 0}), tb = twist_basis(sys, {3, 2});
  auto flat = [&](const std::vector<GroupBasis>& gb) {
    std::vector<Exponent> out;
    for (const auto& idx : detail::exponent_product(gb)) {
      Exponent e;
      for (int k = 0; k < sys.r; ++k) e.insert(e.end(), gb[k].monos[idx[k]].begin(), gb[k].monos[idx[k]].end());
      out.push_back(e);
    }
    return out;
  };
  auto S = flat(sb), T = flat(tb);
  REQUIRE(M.size() == S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    auto prod = g.polys[3] * MultiPoly<CoefPoly>::monomial(sys.n, S[i], CoefPoly(1L));
    for (std::size_t j = 0; j < T.size(); ++j) CHECK(M[i][j] == prod.coef(T[j]));
  }
}

TEST_CASE("golden 10x10 at m=(3,-1)") {
  auto g = make_generic_system(bilinear);
  const CMat gold = golden_10x10(g);
  auto M = assemble_matrix(bilinear, g.polys, {3, -1});
  REQUIRE(M.square());
  REQUIRE(M.rows.size() == 10);
  for (const auto& b : M.blocks) CHECK(b.kind != BlockKind::Bezout);
  CHECK(equivalent_matrices(M.entries, gold, {true, true}));
  // the dual vector matches with a single global sign
  auto D = assemble_matrix(bilinear, g.polys, {-1, 3});
  CHECK(equivalent_matrices(D.entries, gold, {false, false}));
  CHECK(equivalent_matrices(transpose(D.entries), M.entries, {false, true}));
}

TEST_CASE("Sylvester entries follow the signed coefficient formula") {
  auto g = make_generic_system(bilinear);
  auto M = assemble_matrix(bilinear, g.polys, {3, -1});
  for (const auto& b : M.blocks) {
    const auto& s = M.row_summands[b.source];
    const auto& t = M.col_summands[b.target];
    auto blk = M.block(b);
    if (!std::includes(s.ep.begin(), s.ep.end(), t.ep.begin(), t.ep.end())) {
      CHECK(all_zero(blk));
      continue;
    }
    int pos = 0, removed = -1;
    for (int i : s.ep) {
      ++pos;
      if (!std::binary_search(t.ep.begin(), t.ep.end(), i)) {
        removed = i;
        break;
      }
    }
    auto mm = mult_map(bilinear, g.polys[removed], s.twist, t.twist);
    CHECK(blk == (pos % 2 ? mm : negate(mm)));
  }
}

TEST_CASE("unmixed bilinear block structure") {
  auto g = make_generic_system(unmixed);
  auto M = assemble_matrix(unmixed, g.polys, {2, -1});
  REQUIRE(M.rows.size() == 6);
  REQUIRE(M.blocks.size() == 9);
  auto mm = [&](int i, const BlockInfo& b) {
    return mult_map(unmixed, g.polys[i], M.row_summands[b.source].twist, M.col_summands[b.target].twist);
  };
  // K_1 summands e_p = {0,1},{0,2},{1,2}; K_0 summands {0},{1},{2}
  for (const auto& b : M.blocks) {
    const auto& s = M.row_summands[b.source].ep;
    const auto& t = M.col_summands[b.target].ep;
    auto blk = M.block(b);
    if (!std::includes(s.begin(), s.end(), t.begin(), t.end())) {
      CHECK(all_zero(blk));
    } else if (t[0] == s[1]) {
      CHECK(blk == mm(s[0], b));
    } else {
      CHECK(blk == negate(mm(s[1], b)));
    }
  }
}

TEST_CASE("hybrid 4x4 at m=(2,0)") {
  auto g = make_generic_system(bilinear);
  auto M = assemble_matrix(bilinear, g.polys, {2, 0});
  REQUIRE(M.rows.size() == 4);
  REQUIRE(M.cols.size() == 4);
  REQUIRE(M.blocks.size() == 4);
  std::map<std::pair<int, int>, const BlockInfo*> at;
  for (const auto& b : M.blocks) at[{M.row_summands[b.source].p, M.col_summands[b.target].p}] = &b;
  const BlockInfo& bx2 = *at.at({2, 0});
  const BlockInfo& zero = *at.at({2, 1});
  const BlockInfo& delta = *at.at({3, 0});
  const BlockInfo& bx1 = *at.at({3, 1});
  CHECK(bx2.nrows == 1);
  CHECK(bx2.ncols == 3);
  CHECK(zero.nrows == 1);
  CHECK(zero.ncols == 1);
  CHECK(delta.nrows == 3);
  CHECK(delta.ncols == 3);
  CHECK(bx1.nrows == 3);
  CHECK(bx1.ncols == 1);
  CHECK(bx2.kind == BlockKind::Bezout);
  CHECK(delta.kind == BlockKind::Bezout);
  CHECK(bx1.kind == BlockKind::Bezout);
  CHECK(all_zero(M.block(zero)));
  CHECK(bx2.row0 == 0);
  CHECK(bx2.col0 == 0);
  CHECK(delta.row0 == 1);
  CHECK(bx1.col0 == 3);
  CHECK(substituted_groups(bilinear, {2, 0}, M.row_summands[bx2.source], M.col_summands[bx2.target]) ==
        std::vector<int>{1});
  CHECK(substituted_groups(bilinear, {2, 0}, M.row_summands[bx1.source], M.col_summands[bx1.target]) ==
        std::vector<int>{0});
  for (const auto& row : M.block(bx2))
    for (const auto& e : row) CHECK(e.degree() == 2);
  for (const auto& row : M.block(delta))
    for (const auto& e : row) CHECK(e.degree() == 3);
}

TEST_CASE("block column at m=(3,1)") {
  auto g = make_generic_system(bilinear);
  auto M = assemble_matrix(bilinear, g.polys, {3, 1});
  REQUIRE(M.rows.size() == 8);
  REQUIRE(M.cols.size() == 8);
  REQUIRE(M.col_summands.size() == 1);
  std::vector<int> removed;
  int bez = 0;
  for (const auto& b : M.blocks) {
    const auto& s = M.row_summands[b.source];
    if (b.kind == BlockKind::Sylvester) {
      CHECK(s.p == 1);
      const int i = s.ep[0];
      removed.push_back(i);
      CHECK(M.block(b) == mult_map(bilinear, g.polys[i], s.twist, M.col_summands[b.target].twist));
    } else {
      CHECK(b.kind == BlockKind::Bezout);
      CHECK(s.p == 2);
      CHECK(b.nrows == 1);
      ++bez;
    }
  }
  std::sort(removed.begin(), removed.end());
  CHECK(removed == std::vector<int>{0, 1});
  CHECK(bez == 2);
}

// [ijk] over the a, b, c coefficient columns
static CoefPoly bracket(const GenericSystem& g, int i, int j, int k) {
  std::vector<std::vector<CoefPoly>> M;
  for (int p = 0; p < 3; ++p) M.push_back({cv(g, p, i), cv(g, p, j), cv(g, p, k)});
  return ring_det(M, CoefPoly(0L), CoefPoly(1L));
}

TEST_CASE("one-group Bezout blocks in brackets") {
  auto g = make_generic_system(quadrics);
  auto B = [&](int i, int j, int k) { return bracket(g, i, j, k); };
  CHECK(B(1, 4, 2) == -B(1, 2, 4));

  auto M0 = assemble_matrix(quadrics, g.polys, {0});
  const BlockInfo* b0 = nullptr;
  for (const auto& b : M0.blocks)
    if (b.kind == BlockKind::Bezout) b0 = &b;
  REQUIRE(b0);
  CMat col = drop_zero_rows(M0.block(*b0));
  CMat gold0{{B(1, 4, 2)}, {B(2, 3, 4) + B(1, 5, 2)}, {B(2, 3, 5)}, {B(0, 4, 2)}, {B(0, 5, 2)}};
  CHECK(equivalent_matrices(col, gold0, {false, false}));
  for (const auto& row : col) CHECK(bracket_form(row[0], g.layout).has_value());

  auto M1 = assemble_matrix(quadrics, g.polys, {1});
  const BlockInfo* b1 = nullptr;
  for (const auto& b : M1.blocks)
    if (b.kind == BlockKind::Bezout) b1 = &b;
  REQUIRE(b1);
  CMat blk = drop_zero_rows(M1.block(*b1));
  CMat gold1{
      {B(1, 4, 2), B(1, 5, 2), B(1, 3, 2) + B(0, 4, 2)},
      {B(1, 5, 2) + B(2, 3, 4), B(1, 5, 4) + B(2, 3, 5), B(0, 5, 2) + B(1, 3, 4)},
      {B(2, 3, 5), B(3, 5, 4), B(1, 3, 5)},
      {B(0, 4, 2), B(0, 5, 2), B(0, 4, 1) + B(0, 3, 2)},
      {B(0, 5, 2), B(0, 5, 4), B(0, 5, 1)},
  };
  CHECK(blk.size() == 5);
  CHECK(equivalent_matrices(blk, gold1, {true, true}));
}

TEST_CASE("bracket_form renders brackets") {
  auto g = make_generic_system(quadrics);
  CHECK(bracket_form(bracket(g, 1, 2, 4), g.layout) == std::optional<std::string>("[124]"));
  CHECK(bracket_form(-bracket(g, 1, 2, 4), g.layout) == std::optional<std::string>("-[124]"));
  CHECK_FALSE(bracket_form(cv(g, 0, 1), g.layout).has_value());
}

TEST_CASE("partial_bezoutian") {
  auto u = validate_system({1}, {1}, {1, 1});
  auto h = make_generic_system(u);
  auto B = partial_bezoutian(u, h.polys, {0, 1}, {0});
  REQUIRE(B.size() == 1);
  const CoefPoly a0 = cv(h, 0, 0), a1 = cv(h, 0, 1), b0 = cv(h, 1, 0), b1 = cv(h, 1, 1);
  CHECK(B.coef(Exponent{0, 0}) == a1 * b0 - a0 * b1);

  auto g = make_generic_system(bilinear);
  auto P = partial_bezoutian(bilinear, g.polys, {0, 2}, {1});
  auto Q = partial_bezoutian(bilinear, g.polys, {2, 0}, {1});
  CHECK(P == -Q);
  auto F = partial_bezoutian(bilinear, g.polys, {0, 1, 2}, {0, 1});
  auto G = partial_bezoutian(bilinear, g.polys, {1, 0, 2}, {0, 1});
  CHECK(F == -G);
  CHECK_THROWS_AS(partial_bezoutian(bilinear, g.polys, {0, 1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("affine and transfer methods agree at m=2,3") {
  auto g = make_generic_system(quadrics);
  for (int m : {2, 3}) {
    auto A = assemble_matrix(quadrics, g.polys, {m}, BezoutMethod::Affine);
    auto T = assemble_matrix(quadrics, g.polys, {m}, BezoutMethod::Transfer);
    CHECK(equivalent_matrices(A.entries, T.entries, {false, true}));
  }
}

TEST_CASE("Morley form") {
  auto u = validate_system({1}, {1}, {1, 1});
  auto h = make_generic_system(u);
  auto D = morley_det(u, h.polys);
  auto piece = morley_graded_piece(u, D, {0});
  REQUIRE(piece.size() == 1);
  const CoefPoly a0 = cv(h, 0, 0), a1 = cv(h, 0, 1), b0 = cv(h, 1, 0), b1 = cv(h, 1, 1);
  CHECK((piece[0][0] == a0 * b1 - a1 * b0 || piece[0][0] == a1 * b0 - a0 * b1));

  // one group: graded pieces are the Bezout blocks
  auto g = make_generic_system(quadrics);
  auto Dq = morley_det(quadrics, g.polys);
  for (int m : {1, 2}) {
    auto M = assemble_matrix(quadrics, g.polys, {m});
    for (const auto& b : M.blocks)
      if (b.kind == BlockKind::Bezout) CHECK(equivalent_matrices(morley_graded_piece(quadrics, Dq, {m}), M.block(b), {true, true}));
  }

  // two groups: the expansion loses degree in the first group, so the (1,1) piece vanishes
  auto g5 = make_generic_system(bilinear);
  auto D5 = morley_det(bilinear, g5.polys);
  CHECK(all_zero(morley_graded_piece(bilinear, D5, {1, 1})));
}

TEST_CASE("duality: dimensions and determinants") {
  auto g = make_generic_system(bilinear);
  auto vals = random_coefficients(bilinear, 77);
  std::optional<Rational> ref;
  for (const auto& v : enumerate_det_vectors(bilinear)) {
    auto M = assemble_matrix(bilinear, g.polys, v.m);
    auto N = assemble_matrix(bilinear, g.polys, dual_vector(bilinear, v.m));
    CHECK(M.rows.size() == N.rows.size());
    CHECK(Integer(M.rows.size()) == term_dim(make_complex(bilinear, v.m), 0));
    auto d = det_or_rank(specialize(M, vals));
    auto e = det_or_rank(specialize(N, vals));
    REQUIRE(d.det);
    REQUIRE(e.det);
    CHECK(abs(*d.det) == abs(*e.det));
    if (!ref) ref = abs(*d.det);
    CHECK(abs(*d.det) == *ref);
  }
}

TEST_CASE("non-determinantal vectors give rectangular matrices") {
  auto g = make_generic_system(bilinear);
  auto M = assemble_matrix(bilinear, g.polys, {0, 0});
  CHECK(M.rows.size() == term_dim(make_complex(bilinear, {0, 0}), 1));
  CHECK(M.cols.size() == term_dim(make_complex(bilinear, {0, 0}), 0));
}

TEST_CASE("matrix export") {
  auto g = make_generic_system(bilinear);
  auto M = assemble_matrix(bilinear, g.polys, {2, 0});
  auto j = matrix_to_json(M, g.layout);
  CHECK(j["rows"].size() == 4);
  CHECK(j["blocks"].size() == 4);
  auto tex = matrix_to_latex(M, g.layout);
  CHECK(tex.find("\\begin{array}") != std::string::npos);
  auto vals = random_coefficients(bilinear, 1);
  auto N = M.map_entries([&](const CoefPoly& c) { return c.evaluate(vals); });
  auto csv = matrix_to_csv(N);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
