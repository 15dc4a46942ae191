#pragma once

#include <map>
#include <string>
#include <vector>

#include "liegraph/rootdata.hpp"

namespace liegraph {

// A1/A2 string-polytope machinery for the reduced word s1 (A1) and s1 s2 s1
// (A2). Dominant weights are fundamental-coordinate vectors.
using FundWeight = std::vector<int>;  // length 1 (A1) or 2 (A2)

// all integer points of the string polytope P(lambda); |points| = dim V^lambda
std::vector<std::vector<long long>> string_polytope_points(Family family, const FundWeight& lambda);

// weight map Psi_lambda(u) = lambda - sum u_j alpha_{i_j} in fundamental coords
FundWeight string_weight(Family family, const FundWeight& lambda, const std::vector<long long>& u);

// Kostka number K_{lambda,omega}
long long weight_multiplicity(Family family, const FundWeight& lambda, const FundWeight& omega);

// Littlewood-Richardson coefficient via the relative polytope slice
long long lr_polytope(Family family, const FundWeight& lambda, const FundWeight& mu,
                      const FundWeight& nu);

// Weyl-invariant virtual character with integer multiplicities
struct CharacterElement {
  std::map<FundWeight, long long> mult;
};

CharacterElement character(Family family, const FundWeight& lambda);
CharacterElement character_product(Family family, const CharacterElement& a, const CharacterElement& b);

// decompose ch^lambda ch^mu by repeated subtraction of maximal dominant
// terms; returns the coefficient of nu
long long lr_oracle(Family family, const FundWeight& lambda, const FundWeight& mu,
                    const FundWeight& nu);

struct ScalingRow {
  long long t = 0;
  double count_scaled = 0.0;   // (1/t^l) sum_nu c^{tx,ty}_nu
  double linear_scaled = 0.0;  // same with f(z) = first fundamental coordinate of z
};

// scaled Littlewood-Richardson sums along t_list; asserts nothing itself,
// callers check the Cauchy behavior
std::vector<ScalingRow> lr_scaling_check(Family family, const FundWeight& x, const FundWeight& y,
                                         const std::vector<long long>& t_list);

std::string lr_table_csv(Family family, const FundWeight& lambda, const FundWeight& mu);

}  // namespace liegraph
