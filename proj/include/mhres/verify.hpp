#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "json.hpp"
#include "mhres/matrices.hpp"

namespace mhres {

using RatMatrix = Dense<Rational>;

// rational with numerator in [-bound, bound] and denominator in [1, bound]
Rational random_rational(std::mt19937_64& rng, long bound = 1000);

std::vector<Rational> random_coefficients(const SystemData& sys, std::uint64_t seed);

// random coefficients with each constant term adjusted so that f_i(point) = 0
std::vector<Rational> plant_root(const SystemData& sys, const std::vector<Rational>& point, std::uint64_t seed);

std::vector<Rational> random_point(const SystemData& sys, std::mt19937_64& rng);

RatMatrix specialize(const BlockMatrix<CoefPoly>& M, const std::vector<Rational>& values);
RatMatrix specialize(const Dense<CoefPoly>& M, const std::vector<Rational>& values);

struct DetRank {
  std::optional<Rational> det;  // square input only
  std::size_t rank = 0;
};
DetRank det_or_rank(const RatMatrix& M);

// exact polynomial through (x_i, y_i), coefficients by ascending power
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

struct DegreeProbe {
  int degree = -1;
  bool homogeneous = false;  // only the top coefficient is nonzero
  std::uint64_t seed = 0;    // seed that produced a nonsingular specialization
};
DegreeProbe degree_by_scaling(const SystemData& sys, const IntVec& m, int i, std::uint64_t seed,
                              BezoutMethod method = BezoutMethod::Transfer);

Rational numeric_det(const SystemData& sys, const IntVec& m, const std::vector<Rational>& values,
                     BezoutMethod method = BezoutMethod::Transfer);

struct VerifyReport {
  IntVec m;
  int trials = 0;
  std::uint64_t seed = 0;
  int planted_zero = 0;      // planted-root trials with det exactly 0
  int generic_nonzero = 0;   // generic trials with det != 0
  std::vector<int> per_poly_degrees;
  std::vector<Integer> expected_degrees;
  bool planted_root_pass() const { return planted_zero == trials; }
  bool generic_nonzero_pass() const { return 20 * generic_nonzero >= 19 * trials; }
  bool degrees_pass() const;
};
VerifyReport verify_vector(const SystemData& sys, const IntVec& m, int trials, std::uint64_t seed,
                           bool with_degrees = true, BezoutMethod method = BezoutMethod::Transfer);
nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace mhres
