#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "liegraph/bessel.hpp"
#include "liegraph/circuits.hpp"
#include "liegraph/crystal.hpp"
#include "liegraph/gaussian.hpp"
#include "liegraph/geometry.hpp"
#include "liegraph/moments.hpp"
#include "liegraph/poisson.hpp"
#include "liegraph/rankone.hpp"
#include "liegraph/rootdata.hpp"
#include "liegraph/spectra.hpp"
#include "liegraph/util.hpp"

using namespace liegraph;

namespace {

struct Options {
  std::string space = "su2";
  std::string family = "A";
  int n = 1;
  double L = 1.0;
  double ell = 1.0;
  int N = 200;
  int trials = 20;
  uint64_t seed = 1;
  double cutoff = 0.0;
  int s = 4;
  int top = 10;
  int k_max = 10;
  std::string out;
  std::string format = "json";
  std::string lambda = "1 1";
  std::string mu = "1 1";
};

SpaceSpec parse_space(const std::string& s) {
  if (s.rfind("su", 0) == 0) return make_space(SpaceKind::SU, std::stoi(s.substr(2)));
  if (s.rfind("so", 0) == 0) return make_space(SpaceKind::SO, std::stoi(s.substr(2)));
  if (s.rfind("usp", 0) == 0) return make_space(SpaceKind::USp, std::stoi(s.substr(3)));
  if (s.rfind("sphere", 0) == 0) return make_space(SpaceKind::SphereR, std::stoi(s.substr(6)));
  throw CLI::ValidationError("--space must look like su2, so3, usp2 or sphere2");
}

Family parse_family(const std::string& f) {
  if (f == "A") return Family::A;
  if (f == "B") return Family::B;
  if (f == "C") return Family::C;
  if (f == "D") return Family::D;
  throw CLI::ValidationError("--family must be one of A, B, C, D");
}

std::vector<int> parse_coords(const std::string& s) {
  std::vector<int> v;
  std::istringstream is(s);
  int x;
  while (is >> x) v.push_back(x);
  return v;
}

void emit(const Options& opt, const std::string& command, const std::string& config_json,
          const std::string& payload_json, const std::string& csv = "") {
  std::ostringstream os;
  os << "{\"command\":\"" << command << "\",\"seed\":" << opt.seed << ",\"config\":" << config_json
     << ",\"outputs\":" << payload_json << ",\"content_hash\":\"" << git_blob_sha1(payload_json)
     << "\"}";
  std::string summary = os.str();
  if (opt.out.empty()) {
    std::cout << summary << "\n";
    if (opt.format == "csv" && !csv.empty()) std::cout << csv;
  } else {
    std::ofstream f(opt.out);
    f << summary << "\n";
    if (!csv.empty()) {
      std::ofstream fc(opt.out + ".csv");
      fc << csv;
    }
  }
}

RootSystem space_rs_or_family(const Options& opt, bool prefer_space) {
  if (prefer_space) return space_root_system(parse_space(opt.space));
  return build_root_system(parse_family(opt.family), opt.n);
}

int cmd_limit_spectrum(const Options& opt, bool family_given) {
  RootSystem rs = space_rs_or_family(opt, !family_given);
  double cutoff = opt.cutoff > 0.0 ? opt.cutoff : 40.0 / opt.L;
  std::vector<SpectralLine> lines = limiting_spectrum(rs, opt.L, cutoff);
  if (opt.top > 0 && (int)lines.size() > opt.top) lines.resize(opt.top);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i) os << ",";
    os << "{\"lambda\":[";
    for (size_t j = 0; j < lines[i].lambda.fund.size(); ++j) {
      if (j) os << ",";
      os << lines[i].lambda.fund[j];
    }
    os << "],\"c\":" << format_double(lines[i].c) << ",\"multiplicity\":" << lines[i].multiplicity
       << "}";
  }
  os << "]";
  std::ostringstream cfg;
  if (family_given)
    cfg << "{\"family\":\"" << opt.family << "\",\"n\":" << opt.n;
  else
    cfg << "{\"space\":\"" << opt.space << "\"";
  cfg << ",\"L\":" << format_double(opt.L) << ",\"cutoff\":" << format_double(cutoff)
      << ",\"top\":" << opt.top << "}";
  emit(opt, "limit-spectrum", cfg.str(), os.str(), spectrum_to_csv(lines));
  return 0;
}

int cmd_simulate_gaussian(const Options& opt) {
  SpaceSpec space = parse_space(opt.space);
  RootSystem rs = space_root_system(space);
  double cutoff = opt.cutoff > 0.0 ? opt.cutoff : 40.0 / opt.L;
  std::vector<SpectralLine> lines = limiting_spectrum(rs, opt.L, cutoff);
  std::ostringstream os;
  os << "[";
  for (int t = 0; t < opt.trials; ++t) {
    Rng rng(opt.seed, (uint64_t)t);
    GeometricGraph g = build_geometric_graph(space, opt.N, opt.L, rng);
    SymMatrix a = SymMatrix::zero(opt.N);
    for (int i = 0; i < opt.N; ++i)
      for (int j = 0; j < opt.N; ++j) a.at(i, j) = g.edge(i, j) ? 1.0 : 0.0;
    std::vector<double> ev = eig_symmetric(a);
    for (double& v : ev) v /= opt.N;
    double delta = gk_delta(ev, lines);
    if (t) os << ",";
    os << "{\"trial\":" << t << ",\"top\":" << format_double(ev.front())
       << ",\"gk_delta\":" << format_double(delta) << "}";
  }
  os << "]";
  std::ostringstream cfg;
  cfg << "{\"space\":\"" << opt.space << "\",\"regime\":\"gaussian\",\"N\":" << opt.N
      << ",\"L\":" << format_double(opt.L) << ",\"trials\":" << opt.trials << "}";
  emit(opt, "simulate-gaussian", cfg.str(), os.str());
  return 0;
}

int cmd_rankone_table(const Options& opt) {
  RankOneKind kind;
  int n = 2;
  if (opt.space.rfind("sphere", 0) == 0) {
    kind = RankOneKind::SphereR;
    n = std::stoi(opt.space.substr(6));
  } else if (opt.space.rfind("projr", 0) == 0) {
    kind = RankOneKind::ProjR;
    n = std::stoi(opt.space.substr(5));
  } else if (opt.space.rfind("projc", 0) == 0) {
    kind = RankOneKind::ProjC;
    n = std::stoi(opt.space.substr(5));
  } else if (opt.space.rfind("projh", 0) == 0) {
    kind = RankOneKind::ProjH;
    n = std::stoi(opt.space.substr(5));
  } else if (opt.space == "projo2") {
    kind = RankOneKind::ProjO2;
  } else {
    throw CLI::ValidationError("rank-one space must be sphereN, projrN, projcN, projhN or projo2");
  }
  RankOneSpace sp = make_rankone(kind, n);
  std::ostringstream os;
  os << "[";
  for (int k = 0; k <= opt.k_max; ++k) {
    if (k) os << ",";
    os << "{\"k\":" << k << ",\"c\":" << format_double(rankone_eigenvalue(sp, k, opt.L))
       << ",\"multiplicity\":" << rankone_multiplicity(sp, k) << "}";
  }
  os << "]";
  std::ostringstream cfg;
  cfg << "{\"space\":\"" << opt.space << "\",\"L\":" << format_double(opt.L)
      << ",\"k_max\":" << opt.k_max << "}";
  emit(opt, "rankone-table", cfg.str(), os.str(), rankone_to_csv(sp, opt.L, opt.k_max));
  return 0;
}

int cmd_simulate_poisson(const Options& opt) {
  SpaceSpec space = parse_space(opt.space);
  Rng rng(opt.seed, 0);
  BsComparison cmp = bs_compare(space, opt.N, opt.ell, /*n=*/1, opt.trials, rng);
  std::ostringstream cfg;
  cfg << "{\"space\":\"" << opt.space << "\",\"regime\":\"poisson\",\"N\":" << opt.N
      << ",\"ell\":" << format_double(opt.ell) << ",\"trials\":" << opt.trials << "}";
  emit(opt, "simulate-poisson", cfg.str(), histogram_json(cmp));
  return 0;
}

int cmd_circuit_table(const Options& opt) {
  std::ostringstream cfg;
  cfg << "{\"s\":" << opt.s << "}";
  emit(opt, "circuit-table", cfg.str(), expansion_table_json(opt.s));
  return 0;
}

int cmd_moments(const Options& opt) {
  RootSystem rs = build_root_system(Family::A, 1);
  Rng rng(opt.seed, 0);
  LimitMomentTable t = limiting_moments(rs, opt.ell, opt.s, rng);
  std::ostringstream cfg;
  cfg << "{\"ell\":" << format_double(opt.ell) << ",\"s_max\":" << opt.s << "}";
  emit(opt, "moments", cfg.str(), moment_table_json(t));
  return 0;
}

int cmd_lr(const Options& opt) {
  Family fam = parse_family(opt.family);
  std::vector<int> lam = parse_coords(opt.lambda), mu = parse_coords(opt.mu);
  std::string csv = lr_table_csv(fam, lam, mu);
  std::ostringstream os;
  os << "{\"rows\":" << std::count(csv.begin(), csv.end(), '\n') - 1 << "}";
  std::ostringstream cfg;
  cfg << "{\"family\":\"" << opt.family << "\",\"lambda\":\"" << opt.lambda << "\",\"mu\":\""
      << opt.mu << "\"}";
  emit(opt, "lr", cfg.str(), os.str(), csv);
  return 0;
}

int cmd_volumes(const Options& opt) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  struct Row {
    Family f;
    int n;
  };
  const Row rows[] = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                      {Family::C, 2}, {Family::C, 3}, {Family::D, 3}, {Family::D, 4}};
  for (const Row& r : rows) {
    RootSystem rs = build_root_system(r.f, r.n);
    GroupVolumes v = volumes(rs);
    if (!first) os << ",";
    first = false;
    os << "{\"family\":\"" << family_name(r.f) << "\",\"n\":" << r.n << ",\"vol_t_mod_tZ\":"
       << format_double(v.vol_t_mod_tZ) << ",\"vol_G_macdonald\":" << format_double(v.vol_G_macdonald)
       << ",\"vol_G_kp\":" << format_double(v.vol_G_kp)
       << ",\"rel_gap\":" << format_double(std::abs(v.vol_G_kp - v.vol_G_macdonald) /
                                           v.vol_G_macdonald)
       << "}";
  }
  os << "]";
  emit(opt, "volumes", "{}", os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random geometric graph spectra on compact Lie groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--space", opt.space, "space, e.g. su2, su3, so3, usp2, sphere2");
    c->add_option("--family", opt.family, "root-system family A,B,C,D");
    c->add_option("--n", opt.n, "family parameter");
    c->add_option("--L", opt.L, "connection level");
    c->add_option("--ell", opt.ell, "Poissonian intensity parameter");
    c->add_option("--N", opt.N, "number of points");
    c->add_option("--trials", opt.trials, "number of trials");
    c->add_option("--seed", opt.seed, "random seed");
    c->add_option("--cutoff", opt.cutoff, "dominant-weight norm cutoff");
    c->add_option("--s", opt.s, "moment order / circuit length");
    c->add_option("--top", opt.top, "number of spectral lines to print");
    c->add_option("--k", opt.k_max, "largest k in rank-one tables");
    c->add_option("--lambda", opt.lambda, "dominant weight, space separated");
    c->add_option("--mu", opt.mu, "dominant weight, space separated");
    c->add_option("--out", opt.out, "output file (default stdout)");
    c->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* spectrum = app.add_subcommand("limit-spectrum", "Gaussian-regime limiting spectrum");
  CLI::App* gaussian = app.add_subcommand("simulate-gaussian", "graphs + gk_delta trace");
  CLI::App* rankone = app.add_subcommand("rankone-table", "rank-one eigenvalue table");
  CLI::App* poisson = app.add_subcommand("simulate-poisson", "Benjamini-Schramm comparison");
  CLI::App* circuits = app.add_subcommand("circuit-table", "circuit expansion fixtures");
  CLI::App* moments = app.add_subcommand("moments", "limit moment table");
  CLI::App* lr = app.add_subcommand("lr", "Littlewood-Richardson tables");
  CLI::App* vols = app.add_subcommand("volumes", "volume consistency report");
  for (CLI::App* c : {spectrum, gaussian, rankone, poisson, circuits, moments, lr, vols})
    add_common(c);

  CLI11_PARSE(app, argc, argv);
  try {
    if (spectrum->parsed()) return cmd_limit_spectrum(opt, spectrum->count("--family") > 0);
    if (gaussian->parsed()) return cmd_simulate_gaussian(opt);
    if (rankone->parsed()) return cmd_rankone_table(opt);
    if (poisson->parsed()) return cmd_simulate_poisson(opt);
    if (circuits->parsed()) return cmd_circuit_table(opt);
    if (moments->parsed()) return cmd_moments(opt);
    if (lr->parsed()) return cmd_lr(opt);
    if (vols->parsed()) return cmd_volumes(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
