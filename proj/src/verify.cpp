#include "mhres/verify.hpp"

#include <stdexcept>

namespace mhres {

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

std::vector<Rational> random_coefficients(const SystemData& sys, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CoefLayout lay = coef_layout(sys);
  std::vector<Rational> v(lay.total);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

std::vector<Rational> random_point(const SystemData& sys, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 9), sign(0, 1);
  std::vector<Rational> pt;
  for (int v = 0; v < sys.n; ++v) {
    Rational q(num(rng) * (sign(rng) ? -1 : 1), den(rng));
    q.canonicalize();
    pt.push_back(q);
  }
  return pt;
}

std::vector<Rational> plant_root(const SystemData& sys, const std::vector<Rational>& point, std::uint64_t seed) {
  if (static_cast<int>(point.size()) != sys.n)
    throw std::invalid_argument("plant_root: point needs one coordinate per affine variable");
  for (const auto& c : point)
    if (sgn(c) == 0) throw std::invalid_argument("plant_root: point has a zero coordinate");
  auto values = random_coefficients(sys, seed);
  const CoefLayout lay = coef_layout(sys);
  for (int i = 0; i <= sys.n; ++i) {
    const auto sup = support_monomials(sys, i);
    Rational val = 0;
    std::size_t constant = sup.size();
    for (std::size_t j = 0; j < sup.size(); ++j) {
      Rational t = values[lay.offset[i] + j];
      bool is_const = true;
      for (int v = 0; v < sys.n; ++v)
        for (int a = 0; a < sup[j][v]; ++a) {
          t *= point[v];
          is_const = false;
        }
      if (is_const) constant = j;
      val += t;
    }
    values[lay.offset[i] + constant] -= val;
  }
  return values;
}

RatMatrix specialize(const Dense<CoefPoly>& M, const std::vector<Rational>& values) {
  RatMatrix out;
  for (const auto& row : M) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(e.evaluate(values));
  }
  return out;
}

RatMatrix specialize(const BlockMatrix<CoefPoly>& M, const std::vector<Rational>& values) {
  return specialize(M.entries, values);
}

DetRank det_or_rank(const RatMatrix& M) {
  DetRank out;
  const std::size_t n = M.size(), m = n ? M[0].size() : 0;
  // clear denominators row by row, then fraction-free elimination
  std::vector<std::vector<Integer>> A(n, std::vector<Integer>(m));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (const auto& e : M[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < m; ++j) A[i][j] = M[i][j].get_num() * (l / M[i][j].get_den());
  }
  Integer prev = 1;
  int sign = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) continue;
    if (piv != row) {
      std::swap(A[piv], A[row]);
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < m; ++j) {
        A[i][j] = A[i][j] * A[row][col] - A[i][col] * A[row][j];
        mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      A[i][col] = 0;
    }
    prev = A[row][col];
    ++row;
  }
  out.rank = row;
  if (n == m) {
    if (row < n) {
      out.det = Rational(0);
    } else {
      Rational d(Integer(sign) * A[n - 1][n - 1]);
      d /= scale;
      out.det = d;
    }
  }
  return out;
}

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> coef(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xs[j];
      }
      basis.swap(next);
      denom *= xs[i] - xs[j];
    }
    const Rational w = ys[i] / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) coef[t] += basis[t] * w;
  }
  return coef;
}

Rational numeric_det(const SystemData& sys, const IntVec& m, const std::vector<Rational>& values,
                     BezoutMethod method) {
  const auto polys = make_numeric_system(sys, values);
  const auto M = assemble_matrix(sys, polys, m, method);
  if (!M.square()) throw std::invalid_argument("numeric_det: degree vector is not determinantal");
  return *det_or_rank(M.entries).det;
}

DegreeProbe degree_by_scaling(const SystemData& sys, const IntVec& m, int i, std::uint64_t seed,
                              BezoutMethod method) {
  const CoefLayout lay = coef_layout(sys);
  const std::size_t size = term_dim(make_complex(sys, m), 0).get_ui();
  for (int attempt = 0; attempt < 3; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt) * 7919;
    const auto base = random_coefficients(sys, s);
    if (sgn(numeric_det(sys, m, base, method)) == 0) continue;
    std::vector<Rational> xs, ys;
    for (std::size_t t = 1; t <= size + 2; ++t) {
      auto v = base;
      for (std::uint32_t j = 0; j < lay.size[i]; ++j) v[lay.offset[i] + j] *= static_cast<long>(t);
      xs.emplace_back(static_cast<long>(t));
      ys.push_back(numeric_det(sys, m, v, method));
    }
    const auto c = interpolate(xs, ys);
    DegreeProbe out;
    out.seed = s;
    for (int t = static_cast<int>(c.size()) - 1; t >= 0; --t)
      if (sgn(c[t]) != 0) {
        out.degree = t;
        break;
      }
    out.homogeneous = true;
    for (int t = 0; t < out.degree; ++t) out.homogeneous = out.homogeneous && sgn(c[t]) == 0;
    return out;
  }
  throw std::runtime_error("degree_by_scaling: three singular specializations in a row");
}

bool VerifyReport::degrees_pass() const {
  if (per_poly_degrees.size() != expected_degrees.size()) return false;
  for (std::size_t i = 0; i < per_poly_degrees.size(); ++i)
    if (Integer(per_poly_degrees[i]) != expected_degrees[i]) return false;
  return true;
}

VerifyReport verify_vector(const SystemData& sys, const IntVec& m, int trials, std::uint64_t seed,
                           bool with_degrees, BezoutMethod method) {
  VerifyReport rep;
  rep.m = m;
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto pt = random_point(sys, rng);
    if (sgn(numeric_det(sys, m, plant_root(sys, pt, rng()), method)) == 0) ++rep.planted_zero;
    if (sgn(numeric_det(sys, m, random_coefficients(sys, rng()), method)) != 0) ++rep.generic_nonzero;
  }
  if (with_degrees) {
    rep.expected_degrees = resultant_degrees(sys).per_poly;
    for (int i = 0; i <= sys.n; ++i) rep.per_poly_degrees.push_back(degree_by_scaling(sys, m, i, rng(), method).degree);
  }
  return rep;
}

nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json exp = nlohmann::json::array();
  for (const auto& e : r.expected_degrees) exp.push_back(integer_json(e));
  return {{"m", r.m},
          {"trials", r.trials},
          {"seed", r.seed},
          {"planted_root_zero", r.planted_zero},
          {"generic_nonzero", r.generic_nonzero},
          {"planted_root_pass", r.planted_root_pass()},
          {"generic_nonzero_pass", r.generic_nonzero_pass()},
          {"per_poly_degrees", r.per_poly_degrees},
          {"expected_degrees", exp}};
}

}  // namespace mhres
