#pragma once

#include <optional>
#include <vector>

#include "mhres/combinatorics.hpp"

namespace mhres {

struct Box {
  IntVec lo, hi;
  IntVec perm;  // pi(k) in 1..r; empty for the global bound box
  bool empty() const;
  bool contains(const IntVec& m) const;
};

Box m_bounds(const SystemData& sys);

bool cheap_filter(const SystemData& sys, const IntVec& m);

bool is_determinantal_vector(const SystemData& sys, const IntVec& m);

struct DetVector {
  IntVec m;
  Integer dim;
  bool operator==(const DetVector& o) const { return m == o.m && dim == o.dim; }
};

// sorted by dimension, ties by m in decreasing lexicographic order
std::vector<DetVector> enumerate_det_vectors(const SystemData& sys, bool use_filter = true);

// box attached to one permutation, possibly empty
Box perm_box(const SystemData& sys, const IntVec& perm);

std::vector<Box> det_boxes(const SystemData& sys);

struct HasDeter {
  bool value = false;
  IntVec witness;  // permutation when value is true
};
HasDeter has_deter(const SystemData& sys);

bool necessary_condition_r_le_2(const SystemData& sys);

std::vector<IntVec> pure_vectors(const SystemData& sys);

bool unmixed_pure_exists(const SystemData& sys);

struct OpenInterval {
  int lo, hi;  // exclusive endpoints
  std::vector<int> members() const;
};
OpenInterval homogeneous_interval(const SystemData& sys);

struct MinDimReport {
  Integer min_dim;
  std::vector<IntVec> argmin;
  struct Distance {
    std::size_t box;
    std::vector<Rational> center;
    Rational linf;
  };
  std::vector<std::vector<Distance>> distances;  // per argmin, per box
};
MinDimReport min_dim_probe(const SystemData& sys);

}  // namespace mhres
