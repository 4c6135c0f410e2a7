#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhres {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<int>;

class InvalidData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SystemData {
  IntVec l, d, s;
  int n = 0;
  int r = 0;

  int offset(int k) const;  // first affine variable of group k (0-based)
};

SystemData validate_system(const IntVec& l, const IntVec& d, const IntVec& s);

IntVec critical_degree(const SystemData& sys);

Integer binomial(long n, long k);

struct BottDim {
  std::optional<int> index;  // cohomological degree, empty when H vanishes
  Integer dim;
};
BottDim bott_dim(int lk, long twist);

// product over groups of the Bott dimension at the given twist
Integer cohomology_dim(const SystemData& sys, const std::vector<long>& twist);

struct SumSet {
  std::vector<int> values;        // sorted, distinct
  std::vector<long> multiplicity;  // index sets realizing each value
};
SumSet sum_set(const SystemData& sys, int p);

// P_k = (m_k/d_k, (m_k+l_k)/d_k] ∩ Z, groups 0-based here
bool pk_below(const SystemData& sys, const IntVec& m, int k, long z);  // P_k < z
bool pk_above(const SystemData& sys, const IntVec& m, int k, long z);  // P_k > z
bool in_pk(const SystemData& sys, const IntVec& m, int k, long z);
std::vector<long> pk_interval(const SystemData& sys, const IntVec& m, int k);

int q_of(const SystemData& sys, const IntVec& m, long z);

struct KnpEntry {
  int z;
  int nu;
  Integer dim;
  long multiplicity;
};
std::vector<KnpEntry> knp_support(const SystemData& sys, const IntVec& m, int p);

struct ResultantDegrees {
  std::vector<Integer> per_poly;
  Integer total;
};
ResultantDegrees resultant_degrees(const SystemData& sys);

// all p-subsets of {0..n}, lexicographic
std::vector<std::vector<int>> index_subsets(int n_plus_1, int p);

std::string join_ints(const IntVec& v, const char* sep = ",");

}  // namespace mhres
