#include "liegraph/crystal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace liegraph {

namespace {

void check_family(Family family, const FundWeight& w) {
  if (family == Family::A && (w.size() == 1 || w.size() == 2)) return;
  throw std::invalid_argument("crystal module supports A1 and A2 only");
}

bool dominant(const FundWeight& w) {
  for (int c : w)
    if (c < 0) return false;
  return true;
}

// simple-root expansion in fundamental coordinates
// A1: alpha = (2); A2: alpha1 = (2,-1), alpha2 = (-1,2)
FundWeight subtract_roots_a2(const FundWeight& lambda, long long n1, long long n2) {
  return {(int)(lambda[0] - 2 * n1 + n2), (int)(lambda[1] + n1 - 2 * n2)};
}

}  // namespace

std::vector<std::vector<long long>> string_polytope_points(Family family, const FundWeight& lambda) {
  check_family(family, lambda);
  if (!dominant(lambda)) throw std::invalid_argument("lambda must be dominant");
  std::vector<std::vector<long long>> pts;
  if (lambda.size() == 1) {
    for (long long u = 0; u <= lambda[0]; ++u) pts.push_back({u});
    return pts;
  }
  const long long a1 = lambda[0], a2 = lambda[1];
  for (long long u3 = 0; u3 <= a1; ++u3)
    for (long long u2 = u3; u2 <= u3 + a2; ++u2)
      for (long long u1 = 0; u1 <= a1 - 2 * u3 + u2; ++u1) pts.push_back({u1, u2, u3});
  return pts;
}

FundWeight string_weight(Family family, const FundWeight& lambda, const std::vector<long long>& u) {
  check_family(family, lambda);
  if (lambda.size() == 1) return {(int)(lambda[0] - 2 * u[0])};
  // word s1 s2 s1: wt = lambda - (u1 + u3) alpha1 - u2 alpha2
  return subtract_roots_a2(lambda, u[0] + u[2], u[1]);
}

long long weight_multiplicity(Family family, const FundWeight& lambda, const FundWeight& omega) {
  long long count = 0;
  for (const auto& u : string_polytope_points(family, lambda))
    if (string_weight(family, lambda, u) == omega) ++count;
  return count;
}

namespace {

// integer points of the relative polytope P(lambda, mu) (cuts below), plus
// the slice condition sum u_j alpha_{i_j} = lambda + mu - nu
long long lr_points(const FundWeight& lambda, const FundWeight& mu, const FundWeight& nu,
                    bool count_slice) {
  if (lambda.size() == 1) {
    long long k = lambda[0], l = mu[0], m = nu[0];
    // u in [0, min(k,l)] with 2u = k + l - m
    long long target = k + l - m;
    if (target < 0 || target % 2 != 0) return 0;
    long long u = target / 2;
    (void)count_slice;
    return (u >= 0 && u <= std::min(k, l)) ? 1 : 0;
  }
  const long long x1 = lambda[0], x2 = lambda[1];
  const long long y1 = mu[0], y2 = mu[1];
  // lambda + mu - nu = d1 alpha1 + d2 alpha2 must lie in the root lattice
  long long r1 = x1 + y1 - nu[0], r2 = x2 + y2 - nu[1];
  // alpha1 = (2,-1), alpha2 = (-1,2): d1 = (2 r1 + r2)/3, d2 = (r1 + 2 r2)/3
  if ((2 * r1 + r2) % 3 != 0 || (r1 + 2 * r2) % 3 != 0) return 0;
  long long d1 = (2 * r1 + r2) / 3, d2 = (r1 + 2 * r2) / 3;
  if (d1 < 0 || d2 < 0) return 0;
  long long count = 0;
  for (long long u3 = 0; u3 <= std::min(y1, x2); ++u3) {
    long long u1 = d1 - u3;  // u1 + u3 = d1
    long long u2 = d2;
    if (u1 < 0 || u1 > x1) continue;
    if (u2 < u3 || u2 > u3 + y2) continue;
    if (u1 > y1 - 2 * u3 + u2) continue;
    if (u2 > u1 + x2) continue;
    ++count;
  }
  return count;
}

}  // namespace

long long lr_polytope(Family family, const FundWeight& lambda, const FundWeight& mu,
                      const FundWeight& nu) {
  check_family(family, lambda);
  if (!dominant(lambda) || !dominant(mu) || !dominant(nu))
    throw std::invalid_argument("all weights must be dominant");
  return lr_points(lambda, mu, nu, true);
}

namespace {

RootSystem crystal_rs(size_t rank) { return build_root_system(Family::A, (int)rank); }

double fund_norm(const RootSystem& rs, const FundWeight& w) {
  std::vector<int> f(w.begin(), w.end());
  return rs.norm(rs.fund_to_vec(f));
}

}  // namespace

CharacterElement character(Family family, const FundWeight& lambda) {
  check_family(family, lambda);
  CharacterElement ch;
  for (const auto& u : string_polytope_points(family, lambda))
    ++ch.mult[string_weight(family, lambda, u)];
  return ch;
}

CharacterElement character_product(Family family, const CharacterElement& a,
                                   const CharacterElement& b) {
  (void)family;
  CharacterElement p;
  for (const auto& [wa, ma] : a.mult)
    for (const auto& [wb, mb] : b.mult) {
      FundWeight w(wa.size());
      for (size_t i = 0; i < wa.size(); ++i) w[i] = wa[i] + wb[i];
      p.mult[w] += ma * mb;
    }
  return p;
}

long long lr_oracle(Family family, const FundWeight& lambda, const FundWeight& mu,
                    const FundWeight& nu) {
  check_family(family, lambda);
  int limit = lambda.size() == 1 ? 12 : 6;
  for (int c : lambda)
    if (c > limit) throw std::invalid_argument("lr_oracle guarded at small coordinates");
  for (int c : mu)
    if (c > limit) throw std::invalid_argument("lr_oracle guarded at small coordinates");

  RootSystem rs = crystal_rs(lambda.size());
  CharacterElement prod = character_product(family, character(family, lambda), character(family, mu));
  long long result = 0;
  // subtract maximal dominant terms in decreasing norm, then lexicographic
  for (;;) {
    bool found = false;
    FundWeight best;
    double best_norm = -1.0;
    for (const auto& [w, m] : prod.mult) {
      if (m == 0 || !dominant(w)) continue;
      double nw = fund_norm(rs, w);
      if (!found || nw > best_norm + 1e-12 ||
          (std::abs(nw - best_norm) <= 1e-12 && w > best)) {
        found = true;
        best = w;
        best_norm = nw;
      }
    }
    if (!found) break;
    long long coeff = prod.mult[best];
    if (coeff < 0) throw std::runtime_error("character decomposition hit a negative coefficient");
    if (best == nu) result = coeff;
    CharacterElement chb = character(family, best);
    for (const auto& [w, m] : chb.mult) {
      prod.mult[w] -= coeff * m;
      if (prod.mult[w] == 0) prod.mult.erase(w);
    }
  }
  return result;
}

std::vector<ScalingRow> lr_scaling_check(Family family, const FundWeight& x, const FundWeight& y,
                                         const std::vector<long long>& t_list) {
  check_family(family, x);
  const size_t l = x.size() == 1 ? 1 : 3;
  std::vector<ScalingRow> rows;
  for (long long t : t_list) {
    FundWeight tx(x.size()), ty(y.size());
    for (size_t i = 0; i < x.size(); ++i) {
      tx[i] = (int)(t * x[i]);
      ty[i] = (int)(t * y[i]);
    }
    // sum over integer points of the relative polytope whose weight image is
    // dominant; each point contributes to c^{tx,ty}_nu with nu = tx+ty-sum u alpha
    double count = 0.0, linear = 0.0;
    if (x.size() == 1) {
      long long k = tx[0], lq = ty[0];
      for (long long u = 0; u <= std::min(k, lq); ++u) {
        long long nu = k + lq - 2 * u;
        if (nu < 0) continue;
        count += 1.0;
        linear += double(nu) / t;
      }
    } else {
      const long long y1 = ty[0], y2 = ty[1], x1 = tx[0], x2 = tx[1];
      for (long long u3 = 0; u3 <= std::min(y1, (long long)x2); ++u3)
        for (long long u2 = u3; u2 <= u3 + y2; ++u2) {
          if (u2 > u3 + y2) break;
          long long u1max = std::min({(long long)x1, y1 - 2 * u3 + u2});
          for (long long u1 = 0; u1 <= u1max; ++u1) {
            if (u2 > u1 + x2) continue;
            long long n1 = tx[0] + ty[0] - 2 * (u1 + u3) + u2;
            long long n2 = tx[1] + ty[1] + (u1 + u3) - 2 * u2;
            if (n1 < 0 || n2 < 0) continue;
            count += 1.0;
            linear += double(n1) / t;
          }
        }
    }
    ScalingRow row;
    row.t = t;
    row.count_scaled = count / std::pow((double)t, (double)l);
    row.linear_scaled = linear / std::pow((double)t, (double)l);
    rows.push_back(row);
  }
  return rows;
}

std::string lr_table_csv(Family family, const FundWeight& lambda, const FundWeight& mu) {
  std::ostringstream os;
  os << "lambda,mu,nu,c\n";
  auto fmt = [](const FundWeight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(w[i]);
    }
    return s;
  };
  // support: nu with c > 0 (bounded by the polytope weight images)
  std::map<FundWeight, long long> support;
  FundWeight sum(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) sum[i] = lambda[i] + mu[i];
  for (const auto& u : string_polytope_points(family, mu)) {
    FundWeight shift = string_weight(family, sum, u);
    if (!dominant(shift)) continue;
    long long c = lr_polytope(family, lambda, mu, shift);
    if (c > 0) support[shift] = c;
  }
  for (const auto& [nu, c] : support)
    os << "\"" << fmt(lambda) << "\",\"" << fmt(mu) << "\",\"" << fmt(nu) << "\"," << c << "\n";
  return os.str();
}

}  // namespace liegraph
