#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvs/bivsolve.hpp"

namespace bvs {

struct SignCondition {
  enum class Relation { positive, negative, zero };
  BivPoly polynomial;
  Relation relation = Relation::positive;
};

std::vector<SolutionBox> simultaneous_inequalities(const BivPoly& P, const BivPoly& Q,
                                                   const std::vector<SignCondition>& conditions,
                                                   const FilterConfig& cfg = {});

struct TopologyVertex {
  enum class Kind {
    critical,      // on the fiber of a critical point
    intermediate,  // on a fiber between two critical fibers
    end,           // on one of the two outermost fibers
  };
  std::size_t fiber = 0;
  Kind kind = Kind::intermediate;
  bool critical_point = false;  // the singular or vertical-tangent point of its fiber
  RealAlgNum x;
  // every vertex has an isolating y-interval; the exact y is kept for intermediate
  // fibers and for critical points
  Rational y_lo, y_hi;
  std::optional<RealAlgNum> y;
  int above = 0;  // branches of the fiber strictly above this vertex
};

struct TopologyGraph {
  std::vector<TopologyVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<RealAlgNum> fibers;  // ascending x-values, rational ones as point intervals
  std::vector<bool> fiber_is_critical;
  Integer shear;  // coordinates refer to F(x + shear*y, y)
  bool sheared() const { return sgn(shear) != 0; }

  std::vector<std::size_t> degrees() const;
  std::size_t components() const;
  long betti1() const { return static_cast<long>(edges.size()) - static_cast<long>(vertices.size()) + static_cast<long>(components()); }
};

TopologyGraph curve_topology(const BivPoly& F, const FilterConfig& cfg = {});

// plain DOT: one node per vertex with fiber index and 4-digit coordinates, one edge per line
std::string to_dot(const TopologyGraph& g);

}  // namespace bvs
