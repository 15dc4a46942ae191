#include "liegraph/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "liegraph/util.hpp"

namespace liegraph {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

double RootSystem::inner(const Vec& x, const Vec& y) const {
  if (x.size() != (size_t)coords || y.size() != (size_t)coords)
    throw std::invalid_argument("weight vector dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < coords; ++i) s += x[i] * y[i];
  return s * e_norm_sq;
}

double RootSystem::norm(const Vec& x) const { return std::sqrt(std::max(0.0, inner(x, x))); }

namespace {

Vec basis_vec(int len, int i, double v = 1.0) {
  Vec e(len, 0.0);
  e[i] = v;
  return e;
}

void project_sum_zero(Vec& v) {
  double mean = std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
  for (double& c : v) c -= mean;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// exact rational with gcd reduction, for the Weyl product formula
struct Rat {
  __int128 num = 1, den = 1;
  void mul(long long a, long long b) {
    num *= a;
    den *= b;
    reduce();
  }
  void reduce() {
    __int128 a = num < 0 ? -num : num, b = den < 0 ? -den : den;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }
};

}  // namespace

RootSystem build_root_system(Family family, int n) {
  int min_n = family == Family::A ? 1 : family == Family::D ? 3 : 2;
  if (n < min_n)
    throw std::invalid_argument(std::string("unsupported rank for family ") + family_name(family) +
                                ": n = " + std::to_string(n));
  RootSystem rs;
  rs.family = family;
  rs.n = n;
  rs.rank = n;
  rs.coords = family == Family::A ? n + 1 : n;
  const int m = rs.coords;

  switch (family) {
    case Family::A: {
      for (int i = 0; i < n + 1; ++i)
        for (int j = i + 1; j < n + 1; ++j) {
          Vec r(m, 0.0);
          r[i] = 1.0;
          r[j] = -1.0;
          rs.positive_roots.push_back(r);
          if (j == i + 1) rs.simple_roots.push_back(r);
        }
      for (int i = 1; i <= n; ++i) {
        Vec w(m, 0.0);
        for (int j = 0; j < i; ++j) w[j] = 1.0;
        project_sum_zero(w);
        rs.fundamental_weights.push_back(w);
      }
      rs.e_norm_den = 2 * n + 2;
      rs.weyl_order = factorial(n + 1);
      break;
    }
    case Family::B: {
      for (int i = 0; i < n; ++i) rs.positive_roots.push_back(basis_vec(m, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Vec r(m, 0.0);
          r[i] = 1.0;
          r[j] = -1.0;
          rs.positive_roots.push_back(r);
          r[j] = 1.0;
          rs.positive_roots.push_back(r);
        }
      for (int i = 0; i < n - 1; ++i) {
        Vec r(m, 0.0);
        r[i] = 1.0;
        r[i + 1] = -1.0;
        rs.simple_roots.push_back(r);
      }
      rs.simple_roots.push_back(basis_vec(m, n - 1));
      for (int i = 1; i <= n - 1; ++i) {
        Vec w(m, 0.0);
        for (int j = 0; j < i; ++j) w[j] = 1.0;
        rs.fundamental_weights.push_back(w);
      }
      rs.fundamental_weights.push_back(Vec(m, 0.5));
      rs.e_norm_den = 4 * n - 2;
      rs.weyl_order = factorial(n) << n;
      break;
    }
    case Family::C: {
      for (int i = 0; i < n; ++i) rs.positive_roots.push_back(basis_vec(m, i, 2.0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Vec r(m, 0.0);
          r[i] = 1.0;
          r[j] = -1.0;
          rs.positive_roots.push_back(r);
          r[j] = 1.0;
          rs.positive_roots.push_back(r);
        }
      for (int i = 0; i < n - 1; ++i) {
        Vec r(m, 0.0);
        r[i] = 1.0;
        r[i + 1] = -1.0;
        rs.simple_roots.push_back(r);
      }
      rs.simple_roots.push_back(basis_vec(m, n - 1, 2.0));
      for (int i = 1; i <= n; ++i) {
        Vec w(m, 0.0);
        for (int j = 0; j < i; ++j) w[j] = 1.0;
        rs.fundamental_weights.push_back(w);
      }
      rs.e_norm_den = 4 * n + 4;
      rs.weyl_order = factorial(n) << n;
      break;
    }
    case Family::D: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Vec r(m, 0.0);
          r[i] = 1.0;
          r[j] = -1.0;
          rs.positive_roots.push_back(r);
          r[j] = 1.0;
          rs.positive_roots.push_back(r);
        }
      for (int i = 0; i < n - 1; ++i) {
        Vec r(m, 0.0);
        r[i] = 1.0;
        r[i + 1] = -1.0;
        rs.simple_roots.push_back(r);
      }
      {
        Vec r(m, 0.0);
        r[n - 2] = 1.0;
        r[n - 1] = 1.0;
        rs.simple_roots.push_back(r);
      }
      for (int i = 1; i <= n - 2; ++i) {
        Vec w(m, 0.0);
        for (int j = 0; j < i; ++j) w[j] = 1.0;
        rs.fundamental_weights.push_back(w);
      }
      {
        Vec w(m, 0.5);
        w[n - 1] = -0.5;
        rs.fundamental_weights.push_back(w);  // omega_{n-1}
        w[n - 1] = 0.5;
        rs.fundamental_weights.push_back(w);  // omega_n
      }
      rs.e_norm_den = 4 * n - 4;
      rs.weyl_order = factorial(n) << (n - 1);
      break;
    }
  }

  rs.e_norm_sq = 1.0 / double(rs.e_norm_den);
  rs.rho.assign(m, 0.0);
  for (const Vec& r : rs.positive_roots)
    for (int i = 0; i < m; ++i) rs.rho[i] += 0.5 * r[i];
  rs.dim_group = rs.rank + 2 * (int)rs.positive_roots.size();
  return rs;
}

RootSystem build_root_system_so(Family family, int n) {
  if (family != Family::B && family != Family::D)
    throw std::invalid_argument("SO sublattice only applies to families B and D");
  RootSystem rs = build_root_system(family, n);
  rs.so_sublattice = true;
  return rs;
}

double weight_norm(const RootSystem& rs, const Vec& x) { return rs.norm(x); }

Vec RootSystem::fund_to_vec(const std::vector<int>& fund) const {
  if (fund.size() != (size_t)rank) throw std::invalid_argument("fundamental coordinate count mismatch");
  Vec v(coords, 0.0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < coords; ++j) v[j] += fund[i] * fundamental_weights[i][j];
  return v;
}

Vec RootSystem::weight_vec(const DominantWeight& w) const {
  Vec v(coords, 0.0);
  for (int i = 0; i < n; ++i) v[i] = 0.5 * double(w.coords2[i]);
  if (family == Family::A) project_sum_zero(v);
  return v;
}

DominantWeight RootSystem::weight_from_fund(const std::vector<int>& fund) const {
  if (fund.size() != (size_t)rank) throw std::invalid_argument("fundamental coordinate count mismatch");
  for (int c : fund)
    if (c < 0) throw std::invalid_argument("dominant weight needs non-negative coordinates");
  DominantWeight w;
  w.family = family;
  w.n = n;
  w.fund = fund;
  w.coords2.assign(n, 0);
  switch (family) {
    case Family::A:
      for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = i; j < n; ++j) s += fund[j];
        w.coords2[i] = 2 * s;
      }
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = i; j < n; ++j) s += fund[j];
        w.coords2[i] = 2 * s;
      }
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = i; j < n - 1; ++j) s += fund[j];
        w.coords2[i] = 2 * s + fund[n - 1];
      }
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = i; j < n - 2; ++j) s += fund[j];
        long long half = (i < n - 1) ? (fund[n - 2] + fund[n - 1]) : (long long)(fund[n - 1] - fund[n - 2]);
        w.coords2[i] = 2 * s + half;
      }
      break;
  }
  return w;
}

long long weyl_dimension(const RootSystem& rs, const DominantWeight& w) {
  if (w.family != rs.family || w.n != rs.n) throw std::invalid_argument("weight/system mismatch");
  for (int c : w.fund)
    if (c < 0) throw std::invalid_argument("weight is not dominant");
  const int n = rs.n;
  const std::vector<long long>& t = w.coords2;  // doubled partition coordinates
  Rat r;
  switch (rs.family) {
    case Family::A: {
      // lambda_{n+1} = 0
      auto tc = t;
      tc.push_back(0);
      for (int i = 0; i < n + 1; ++i)
        for (int j = i + 1; j < n + 1; ++j) r.mul((tc[i] - tc[j]) / 2 + (j - i), j - i);
      break;
    }
    case Family::B: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.mul((t[i] - t[j]) / 2 + (j - i), j - i);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          int c = 2 * n + 1 - (i + 1) - (j + 1);
          r.mul((t[i] + t[j]) / 2 + c, c);
        }
      break;
    }
    case Family::C: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.mul((t[i] - t[j]) / 2 + (j - i), j - i);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          int c = 2 * n + 2 - (i + 1) - (j + 1);
          r.mul((t[i] + t[j]) / 2 + c, c);
        }
      break;
    }
    case Family::D: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          r.mul((t[i] - t[j]) / 2 + (j - i), j - i);
          int c = 2 * n - (i + 1) - (j + 1);
          r.mul((t[i] + t[j]) / 2 + c, c);
        }
      break;
    }
  }
  if (r.den != 1) throw std::runtime_error("dimension formula did not reduce to an integer");
  return (long long)r.num;
}

long long weyl_dimension_product(const RootSystem& rs, const DominantWeight& w) {
  // <alpha, rho+lambda> in doubled e-coordinates; the overall 1/e_norm_den cancels
  const int n = rs.n;
  std::vector<long long> mu2(rs.coords, 0), rho2(rs.coords, 0);
  for (int i = 0; i < n; ++i) mu2[i] = w.coords2[i];
  for (int i = 0; i < rs.coords; ++i) rho2[i] = (long long)std::llround(2.0 * rs.rho[i]);
  if (rs.family == Family::A) {
    // rho has sum-zero half-integer coords; any shift of all coordinates pairs
    // identically against the sum-zero roots, so use (n, n-1, ..., 0) doubled
    for (int i = 0; i < rs.coords; ++i) rho2[i] = 2 * (rs.coords - 1 - i);
  }
  Rat r;
  for (const Vec& a : rs.positive_roots) {
    long long num = 0, den = 0;
    for (int i = 0; i < rs.coords; ++i) {
      long long ai = (long long)std::llround(a[i]);
      num += ai * (mu2[i] + rho2[i]);
      den += ai * rho2[i];
    }
    r.mul(num, den);
  }
  if (r.den != 1) throw std::runtime_error("product formula did not reduce to an integer");
  return (long long)r.num;
}

std::vector<DominantWeight> enumerate_dominant_weights(const RootSystem& rs, double cutoff) {
  std::vector<DominantWeight> out;
  if (cutoff <= 0.0) return out;
  const int d = rs.rank;
  std::vector<int> fund(d, 0);
  Vec acc = rs.rho;  // lambda + rho accumulated in e-coordinates
  const double tol = 1e-12 * (1.0 + cutoff);

  std::function<void(int)> rec = [&](int level) {
    if (rs.norm(acc) > cutoff + tol) return;
    if (level == d) {
      bool keep = true;
      if (rs.so_sublattice) {
        if (rs.family == Family::B) keep = fund[d - 1] % 2 == 0;
        if (rs.family == Family::D) keep = (fund[d - 2] + fund[d - 1]) % 2 == 0;
      }
      if (keep) out.push_back(rs.weight_from_fund(fund));
      return;
    }
    for (int v = 0;; ++v) {
      fund[level] = v;
      if (v > 0)
        for (int j = 0; j < rs.coords; ++j) acc[j] += rs.fundamental_weights[level][j];
      if (rs.norm(acc) > cutoff + tol) {
        for (int j = 0; j < rs.coords; ++j) acc[j] -= v * rs.fundamental_weights[level][j];
        fund[level] = 0;
        return;
      }
      rec(level + 1);
    }
  };
  rec(0);
  return out;
}

GroupVolumes volumes(const RootSystem& rs) {
  GroupVolumes v{};
  const int n = rs.n;
  switch (rs.family) {
    case Family::A: v.vol_t_mod_tZ = std::pow(2.0, n / 2.0) * std::pow(n + 1.0, (n + 1) / 2.0); break;
    case Family::B: v.vol_t_mod_tZ = std::pow(2.0, n / 2.0 + 1.0) * std::pow(2.0 * n - 1.0, n / 2.0); break;
    case Family::C: v.vol_t_mod_tZ = std::pow(2.0, n) * std::pow(n + 1.0, n / 2.0); break;
    case Family::D: v.vol_t_mod_tZ = std::pow(2.0, n + 1.0) * std::pow(n - 1.0, n / 2.0); break;
  }

  // Macdonald: vol(t/tZ) * 2^dimG * prod 1/||alpha||^2 * prod pi^(m_i+1)/m_i!
  std::vector<int> exponents;
  if (rs.family == Family::A)
    for (int i = 1; i <= n; ++i) exponents.push_back(i);
  else if (rs.family == Family::B || rs.family == Family::C)
    for (int i = 1; i <= n; ++i) exponents.push_back(2 * i - 1);
  else {
    for (int i = 1; i <= n - 1; ++i) exponents.push_back(2 * i - 1);
    exponents.push_back(n - 1);
  }
  double mac = v.vol_t_mod_tZ * std::pow(2.0, rs.dim_group);
  for (const Vec& a : rs.positive_roots) mac /= rs.inner(a, a);
  const double pi = 3.141592653589793238462643383279503;
  for (int m : exponents) mac *= std::pow(pi, m + 1) / double(factorial(m));
  v.vol_G_macdonald = mac;

  // Kac-Peterson: (2 sqrt2 pi)^dimG * prod sinc(2 pi <rho, alpha>)
  double kp = std::pow(2.0 * std::sqrt(2.0) * pi, rs.dim_group);
  for (const Vec& a : rs.positive_roots) {
    double x = 2.0 * pi * rs.inner(rs.rho, a);
    kp *= std::sin(x) / x;
  }
  v.vol_G_kp = kp;
  return v;
}

void for_each_weyl(const RootSystem& rs, const std::function<void(const WeylElement&)>& fn) {
  if (rs.weyl_order > 3628800)
    throw std::invalid_argument("Weyl group too large to enumerate");
  const int m = rs.coords;
  WeylElement w;
  w.perm.resize(m);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.flip.assign(m, 1);

  auto perm_sign = [](const std::vector<int>& p) {
    int s = 1;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (size_t j = i; !seen[j]; j = (size_t)p[j]) {
        seen[j] = 1;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  };

  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 0);
  do {
    int ps = perm_sign(base);
    w.perm = base;
    if (rs.family == Family::A) {
      w.flip.assign(m, 1);
      w.sign = ps;
      fn(w);
      continue;
    }
    const int patterns = 1 << m;
    for (int mask = 0; mask < patterns; ++mask) {
      int flips = __builtin_popcount((unsigned)mask);
      if (rs.family == Family::D && flips % 2 != 0) continue;
      for (int i = 0; i < m; ++i) w.flip[i] = (mask >> i) & 1 ? -1 : 1;
      w.sign = (flips % 2 == 0 ? ps : -ps);
      fn(w);
    }
  } while (std::next_permutation(base.begin(), base.end()));
}

Vec weyl_apply(const RootSystem& rs, const WeylElement& w, const Vec& x) {
  if (x.size() != (size_t)rs.coords) throw std::invalid_argument("weight vector dimension mismatch");
  Vec y(rs.coords);
  for (int i = 0; i < rs.coords; ++i) y[i] = w.flip[i] * x[w.perm[i]];
  return y;
}

std::string rootsystem_to_json(const RootSystem& rs) {
  std::ostringstream os;
  auto vec = [&](const Vec& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += format_double(v[i]);
    }
    return s + "]";
  };
  os << "{\"family\":\"" << family_name(rs.family) << "\",\"n\":" << rs.n << ",\"rank\":" << rs.rank
     << ",\"dim_group\":" << rs.dim_group << ",\"e_norm_sq\":\"1/" << rs.e_norm_den << "\""
     << ",\"weyl_order\":" << rs.weyl_order << ",\"so_sublattice\":" << (rs.so_sublattice ? "true" : "false")
     << ",\"positive_roots\":[";
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    if (i) os << ",";
    os << vec(rs.positive_roots[i]);
  }
  os << "],\"simple_roots\":[";
  for (size_t i = 0; i < rs.simple_roots.size(); ++i) {
    if (i) os << ",";
    os << vec(rs.simple_roots[i]);
  }
  os << "],\"fundamental_weights\":[";
  for (size_t i = 0; i < rs.fundamental_weights.size(); ++i) {
    if (i) os << ",";
    os << vec(rs.fundamental_weights[i]);
  }
  os << "],\"rho\":" << vec(rs.rho) << "}";
  return os.str();
}

}  // namespace liegraph
