#include "gpath/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gpath/recover.hpp"

namespace gpath {

namespace {

std::uint64_t mix1(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t dbits(double d) { return std::bit_cast<std::uint64_t>(d); }

void check(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

std::string mode_string(const ExperimentConfig& cfg) {
  std::string s = "dpv";
  s += cfg.dp_vertices ? '1' : '0';
  s += "-dpe";
  s += cfg.dp_edges ? '1' : '0';
  s += "-split";
  s += cfg.splitting ? '1' : '0';
  return s;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c, std::uint64_t d, std::uint64_t e) {
  std::uint64_t h = mix1(seed);
  for (std::uint64_t v : {a, b, c, d, e}) h = mix1(h ^ v);
  return h;
}

ResultRow run_cell(const ExperimentConfig& cfg, int vertices,
                   std::int64_t edges, double eps_v, double eps_e) {
  check(cfg.trials >= 1, "trials must be >= 1");
  ResultRow row;
  row.vertices = vertices;
  row.edges = edges;
  row.eps_v = eps_v;
  row.eps_e = eps_e;
  row.mode = mode_string(cfg);
  row.trials = cfg.trials;

  int usable = 0;
  double good_sum = 0;
  std::vector<double> runtimes;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(vertices),
                     static_cast<std::uint64_t>(edges), dbits(eps_v),
                     dbits(eps_e), static_cast<std::uint64_t>(t)));
    auto [net, path] =
        generate_map(vertices, edges, rng, cfg.cyclic_revisits);
    PublishOptions opt;
    opt.eps_v = eps_v;
    opt.eps_e = eps_e;
    opt.dp_vertices = cfg.dp_vertices;
    opt.dp_edges = cfg.dp_edges;
    opt.splitting = cfg.splitting;

    const auto start = cfg.measure_runtime
                           ? std::chrono::steady_clock::now()
                           : std::chrono::steady_clock::time_point{};
    PublishResult res = publish(net, path, opt, rng);
    const bool counts = cfg.splitting ? res.success : res.usable;
    if (counts) {
      ++usable;
      Reconstruction rec =
          reconstruct_path(res.graph, net, res.graph.lineage);
      good_sum += score_good_output(rec, path);
    }
    if (cfg.measure_runtime) {
      const auto stop = std::chrono::steady_clock::now();
      runtimes.push_back(
          std::chrono::duration<double, std::milli>(stop - start).count());
    }
  }

  row.usable_fraction = static_cast<double>(usable) / cfg.trials;
  row.good_output_fraction = usable ? good_sum / usable : 0.0;
  row.overall_good_fraction = row.usable_fraction * row.good_output_fraction;
  if (!runtimes.empty()) {
    double sum = 0;
    for (double r : runtimes) sum += r;
    row.mean_runtime_ms = sum / static_cast<double>(runtimes.size());
    std::sort(runtimes.begin(), runtimes.end());
    const std::size_t m = runtimes.size() / 2;
    row.median_runtime_ms = runtimes.size() % 2
                                ? runtimes[m]
                                : 0.5 * (runtimes[m - 1] + runtimes[m]);
  }
  return row;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  check(cfg.v_min >= 2 && cfg.v_max >= cfg.v_min, "bad vertex range");
  check(!cfg.eps_v_grid.empty() && !cfg.eps_e_grid.empty(),
        "epsilon grids must be nonempty");
  check(cfg.trials >= 1, "trials must be >= 1");

  std::vector<ResultRow> rows;
  for (int v = cfg.v_min; v <= cfg.v_max; ++v) {
    const std::int64_t lo = v - 1;
    const std::int64_t hi = static_cast<std::int64_t>(v) * (v - 1) / 2;
    std::vector<std::int64_t> edge_counts;
    if (cfg.edges_full) {
      for (std::int64_t e = lo; e <= hi; ++e) edge_counts.push_back(e);
    } else {
      for (std::int64_t e : cfg.edge_list)
        if (e >= lo && e <= hi) edge_counts.push_back(e);
    }
    for (std::int64_t e : edge_counts)
      for (double ev : cfg.eps_v_grid)
        for (double ee : cfg.eps_e_grid)
          rows.push_back(run_cell(cfg, v, e, ev, ee));
  }
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a,
                                         const ResultRow& b) {
    return std::tie(a.vertices, a.edges, a.eps_v, a.eps_e, a.mode) <
           std::tie(b.vertices, b.edges, b.eps_v, b.eps_e, b.mode);
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "# gpath-results v1 cells=" << rows.size() << "\n";
  out << "vertices,edges,eps_v,eps_e,mode,usable_fraction,"
         "good_output_fraction,overall_good_fraction,mean_runtime_ms,"
         "median_runtime_ms,trials\n";
  for (const ResultRow& r : rows) {
    std::ostringstream s;
    s << r.vertices << ',' << r.edges << ',' << std::fixed
      << std::setprecision(3) << r.eps_v << ',' << r.eps_e << ',' << r.mode
      << ',' << std::setprecision(6) << r.usable_fraction << ','
      << r.good_output_fraction << ',' << r.overall_good_fraction << ','
      << r.mean_runtime_ms << ',' << r.median_runtime_ms << ',' << r.trials;
    out << s.str() << "\n";
  }
}

ExperimentConfig read_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream t(line);
    std::string key;
    if (!(t >> key)) continue;
    auto num = [&](const char* what) {
      double v = 0;
      if (!(t >> v)) throw ConfigError(std::string("missing value for ") + what);
      return v;
    };
    if (key == "vertices") {
      cfg.v_min = static_cast<int>(num("vertices"));
      cfg.v_max = static_cast<int>(num("vertices"));
    } else if (key == "edges") {
      std::string word;
      if (!(t >> word)) throw ConfigError("missing value for edges");
      if (word == "full") {
        cfg.edges_full = true;
      } else {
        cfg.edges_full = false;
        cfg.edge_list.clear();
        cfg.edge_list.push_back(std::stoll(word));
        std::int64_t e = 0;
        while (t >> e) cfg.edge_list.push_back(e);
      }
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(num("trials"));
    } else if (key == "eps_v") {
      cfg.eps_v_grid.clear();
      double v = 0;
      while (t >> v) cfg.eps_v_grid.push_back(v);
    } else if (key == "eps_e") {
      cfg.eps_e_grid.clear();
      double v = 0;
      while (t >> v) cfg.eps_e_grid.push_back(v);
    } else if (key == "dp_vertices") {
      cfg.dp_vertices = num("dp_vertices") != 0;
    } else if (key == "dp_edges") {
      cfg.dp_edges = num("dp_edges") != 0;
    } else if (key == "splitting") {
      cfg.splitting = num("splitting") != 0;
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(num("seed"));
    } else if (key == "cyclic") {
      cfg.cyclic_revisits = static_cast<int>(num("cyclic"));
    } else if (key == "measure_runtime") {
      cfg.measure_runtime = num("measure_runtime") != 0;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  check(!cfg.eps_v_grid.empty() && !cfg.eps_e_grid.empty(),
        "epsilon grids must be nonempty");
  check(cfg.trials >= 1, "trials must be >= 1");
  check(cfg.v_min >= 2 && cfg.v_max >= cfg.v_min, "bad vertex range");
  return cfg;
}

namespace {

double beta_cf(double a, double b, double x) {
  const int kMaxIter = 300;
  const double eps = 1e-14, tiny = 1e-300;
  const double qab = a + b, qap = a + 1, qam = a - 1;
  double c = 1, d = 1 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1) < eps) break;
  }
  return h;
}

double reg_inc_beta(double a, double b, double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) -
                             std::lgamma(b) + a * std::log(x) +
                             b * std::log1p(-x));
  if (x < (a + 1) / (a + b + 2)) return bt * beta_cf(a, b, x) / a;
  return 1 - bt * beta_cf(b, a, 1 - x) / b;
}

double student_t_cdf(double t, double nu) {
  const double x = nu / (nu + t * t);
  const double tail = 0.5 * reg_inc_beta(nu / 2, 0.5, x);
  return t < 0 ? tail : 1 - tail;
}

std::vector<double> ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(n, 0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2 + 1;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

SpearmanResult spearman(const std::vector<double>& x,
                        const std::vector<double>& y) {
  check(x.size() == y.size() && x.size() >= 3,
        "spearman needs matched samples of size >= 3");
  const std::vector<double> rx = ranks(x), ry = ranks(y);
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  SpearmanResult out;
  if (sxx == 0 || syy == 0) {
    out.rho = 0;
    out.p_negative = 1;
    return out;
  }
  out.rho = sxy / std::sqrt(sxx * syy);
  const double nu = static_cast<double>(n) - 2;
  const double clamped = std::clamp(out.rho, -0.999999, 0.999999);
  const double t = clamped * std::sqrt(nu / (1 - clamped * clamped));
  out.p_negative = student_t_cdf(t, nu);
  return out;
}

}  // namespace gpath
