#pragma once

#include <optional>
#include <vector>

#include "bvs/algnum.hpp"

namespace bvs {

struct SolutionBox {
  RealAlgNum alpha;  // x
  RealAlgNum beta;   // y
  std::optional<int> multiplicity;
};

struct ShearReport {
  Integer t0;
  BivPoly sheared_F, sheared_G;
  std::vector<Integer> tried;
};

struct KDecomposition {
  struct Part {
    UniPoly gamma;
    int k;  // sr_0 .. sr_{k-1} vanish on the roots of gamma, sr_k does not
  };
  std::vector<Part> gammas;
  UniPoly phi0;  // square-free part of the resultant
};

// width every reported interval is refined to
Rational canonical_width();

enum class Solver { grid, mrur, grur };

std::vector<SolutionBox> solve_grid(const BivPoly& F, const BivPoly& G, const FilterConfig& cfg = {});
std::vector<SolutionBox> solve_mrur(const BivPoly& F, const BivPoly& G, const FilterConfig& cfg = {});
std::vector<SolutionBox> solve_grur(const BivPoly& F, const BivPoly& G, const FilterConfig& cfg = {});
std::vector<SolutionBox> solve(Solver s, const BivPoly& F, const BivPoly& G, const FilterConfig& cfg = {});

ShearReport choose_shear(const BivPoly& F, const BivPoly& G, const FilterConfig& cfg = {});
std::vector<SolutionBox> with_multiplicities(const BivPoly& F, const BivPoly& G,
                                             const std::vector<SolutionBox>& solutions,
                                             const FilterConfig& cfg = {});
KDecomposition compute_k(const BivPoly& F, const BivPoly& G);
// constant leading coefficients in y and at most one complex solution above every abscissa
bool generic_position(const BivPoly& F, const BivPoly& G);

// throws CoprimalityError unless both resultants are nonzero; returns (res_y, res_x)
std::pair<UniPoly, UniPoly> check_coprime(const BivPoly& F, const BivPoly& G);

// A rational univariate representation of the ordinates: on the roots of gamma,
// y = a1(x) / a2(x) with a1 = -sr_{k,k-1} and a2 = k * sr_k.
struct RurPart {
  UniPoly gamma;
  int k;
  UniPoly a1, a2;
};
struct MrurResult {
  std::vector<SolutionBox> solutions;
  std::vector<RurPart> rur;
  // for each solution, the index of its part in rur
  std::vector<std::size_t> part_of;
};
MrurResult solve_mrur_detailed(const BivPoly& F, const BivPoly& G, const FilterConfig& cfg = {});

// lexicographic order by (alpha, beta)
bool solution_less(const SolutionBox& a, const SolutionBox& b, const FilterConfig& cfg = {});
bool same_solutions(const std::vector<SolutionBox>& a, const std::vector<SolutionBox>& b,
                    const FilterConfig& cfg = {});

}  // namespace bvs
