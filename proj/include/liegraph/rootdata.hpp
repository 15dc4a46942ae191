#pragma once

#include <functional>
#include <string>
#include <vector>

namespace liegraph {

enum class Family { A, B, C, D };

const char* family_name(Family f);

// Weight-space vectors in the orthogonal e-basis of the classical tori.
// Family A uses n+1 coordinates that sum to zero; B/C/D use n coordinates.
using Vec = std::vector<double>;

// Dominant weight stored as doubled partition coordinates (e-basis), so the
// half-integer spin weights of B/D stay exact. For D the last coordinate may
// be negative. `fund` holds the non-negative coefficients on the fundamental
// weights; the two encodings are kept in sync on construction.
struct DominantWeight {
  Family family;
  int n;
  std::vector<int> fund;              // coefficients on omega_1..omega_d
  std::vector<long long> coords2;     // doubled partition coordinates

  bool operator==(const DominantWeight& o) const {
    return family == o.family && n == o.n && fund == o.fund;
  }
};

// Signed permutation acting on e-coordinates. `perm[i]` is the source index
// of coordinate i, `flip[i]` multiplies by -1 (unused for family A).
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> flip;
  int sign;  // determinant of the action
};

struct RootSystem {
  Family family = Family::A;
  int n = 0;          // family parameter
  int rank = 0;       // d = dim T
  int coords = 0;     // e-basis length (n+1 for A, n otherwise)
  int dim_group = 0;  // d + 2|Phi+|
  std::vector<Vec> positive_roots;
  std::vector<Vec> simple_roots;
  std::vector<Vec> fundamental_weights;
  Vec rho;
  double e_norm_sq = 0.0;      // appendix value ||e_i||^2
  long long e_norm_den = 0;    // ||e_i||^2 = 1 / e_norm_den
  long long weyl_order = 0;
  bool so_sublattice = false;  // restrict \hat G to the SO(d) integral weights

  double inner(const Vec& x, const Vec& y) const;
  double norm(const Vec& x) const;

  Vec fund_to_vec(const std::vector<int>& fund) const;  // e-basis (A projected)
  Vec weight_vec(const DominantWeight& w) const;

  DominantWeight weight_from_fund(const std::vector<int>& fund) const;
};

// configuration error (std::invalid_argument) outside A:n>=1, B:n>=2, C:n>=2, D:n>=3
RootSystem build_root_system(Family family, int n);

// same data with dominant-weight enumeration restricted to integer partitions
// (irreducibles of SO(2n+1) / SO(2n) instead of the spin cover)
RootSystem build_root_system_so(Family family, int n);

double weight_norm(const RootSystem& rs, const Vec& x);

long long weyl_dimension(const RootSystem& rs, const DominantWeight& w);
// Weyl product formula over positive roots, evaluated in exact rational
// arithmetic; kept as the independent route checked against weyl_dimension.
long long weyl_dimension_product(const RootSystem& rs, const DominantWeight& w);

// all dominant weights with ||lambda+rho|| <= cutoff, lexicographic on fund coords
std::vector<DominantWeight> enumerate_dominant_weights(const RootSystem& rs, double cutoff);

struct GroupVolumes {
  double vol_t_mod_tZ;
  double vol_G_macdonald;
  double vol_G_kp;
};
GroupVolumes volumes(const RootSystem& rs);

void for_each_weyl(const RootSystem& rs, const std::function<void(const WeylElement&)>& fn);
Vec weyl_apply(const RootSystem& rs, const WeylElement& w, const Vec& x);

std::string rootsystem_to_json(const RootSystem& rs);

}  // namespace liegraph
