#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mhres/combinatorics.hpp"

namespace mhres {

struct CohSummand {
  int p = 0;
  int z = 0;
  int nu = 0;
  std::vector<int> cq;  // groups carrying top cohomology, 0-based
  std::vector<int> ep;  // polynomial indices, sorted
  std::vector<long> twist;
  Integer dim;

  int q() const { return p - nu; }
  bool top_in(int k) const;
};

// p ascending, then z, then e_p
bool summand_order(const CohSummand& a, const CohSummand& b);

struct WeymanComplex {
  SystemData sys;
  IntVec m;
  std::map<int, std::vector<CohSummand>> terms;  // nu -> summands, canonical order

  const std::vector<CohSummand>& term(int nu) const;
};

WeymanComplex make_complex(const SystemData& sys, const IntVec& m);

Integer term_dim(const WeymanComplex& c, int nu);

std::string format_blocks(const WeymanComplex& c);
std::string format_cohs(const WeymanComplex& c);

IntVec dual_vector(const SystemData& sys, const IntVec& m);

// small values as numbers, big ones as decimal strings
nlohmann::json integer_json(const Integer& v);
nlohmann::json summand_to_json(const CohSummand& s);
nlohmann::json complex_to_json(const WeymanComplex& c);

}  // namespace mhres
