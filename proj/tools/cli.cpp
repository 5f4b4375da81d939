#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "effvec/column_means.hpp"
#include "effvec/construction.hpp"
#include "effvec/efficiency.hpp"
#include "effvec/error.hpp"
#include "effvec/experiments.hpp"
#include "effvec/io.hpp"
#include "effvec/spectral.hpp"
#include "json.hpp"

namespace effvec::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Common {
  bool full_precision = false;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  int digits() const { return full_precision ? 17 : 6; }
};

double round_to(double x, int digits) {
  if (digits >= 17 || !std::isfinite(x)) return x;
  return std::strtod(format_number(x, digits).c_str(), nullptr);
}

Json number_array(const PriorityVector& w, int digits) {
  Json arr = Json::array();
  for (double x : w) arr.push_back(round_to(x, digits));
  return arr;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json arr = Json::array();
  for (std::size_t i : v) arr.push_back(i + 1);
  return arr;
}

// Comma-separated 1-based indices -> 0-based.
std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const double v = parse_number(item);
    if (v < 1 || v != std::floor(v)) {
      throw Error(ErrorKind::ParseError, "index '" + item + "' is not a positive integer");
    }
    out.push_back(static_cast<std::size_t>(v) - 1);
  }
  return out;
}

std::size_t parse_position(long long pos) {
  if (pos < 1) {
    throw Error(ErrorKind::IndexOutOfRange, "positions are 1-based",
                {{"index", static_cast<double>(pos)}});
  }
  return static_cast<std::size_t>(pos - 1);
}

// A vector argument is a file (JSON or one CSV line) if such a file exists,
// otherwise an inline list such as "4/3,7/6,1".
PriorityVector read_vector_arg(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) {
    const std::string text = read_text_file(arg);
    if (fs::path(arg).extension() == ".json") return parse_vector_json(text);
    std::string joined;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      if (line.empty() || line.front() == '#') continue;
      if (!joined.empty()) joined += ',';
      joined += line;
    }
    return parse_vector_list(joined);
  }
  return parse_vector_list(arg);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EFFVEC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadConfig, "EFFVEC_SEED is not an unsigned integer");
    }
  }
  return 0;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
  f << content;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, std::size_t n, int digits) {
  std::string s = "# index,pattern,norm1,norm2";
  for (std::size_t i = 0; i < n; ++i) s += ",w" + std::to_string(i + 1);
  s += '\n';
  for (const auto& r : rows) {
    s += std::to_string(r.index) + ',' + r.pattern + ',' + format_number(r.norm1, digits) + ',' +
         format_number(r.norm2, digits);
    for (double x : r.vector) s += ',' + format_number(x, digits);
    s += '\n';
  }
  return s;
}

Json subset_ref(std::uint64_t index, std::size_t n) {
  return {{"index", index}, {"pattern", ColumnSubset::from_index(index, n).bit_pattern()}};
}

Json summary_json(const BestWorstSummary& s, int d) {
  auto norm_block = [&](const NormSummary& ns) {
    Json j;
    j["min"] = subset_ref(ns.argmin, s.n);
    j["min"]["value"] = round_to(ns.min, d);
    j["max"] = subset_ref(ns.argmax, s.n);
    j["max"]["value"] = round_to(ns.max, d);
    j["all_columns"] = round_to(ns.all_columns, d);
    j["perron"] = round_to(ns.perron, d);
    j["max_over_min"] = round_to(ns.ratio(), d);
    j["all_columns_over_min"] = round_to(ns.all_columns_over_min(), d);
    return j;
  };
  Json j;
  j["n"] = s.n;
  j["subsets"] = s.rows.size();
  j["norm1"] = norm_block(s.norm1);
  j["frobenius"] = norm_block(s.frobenius);
  j["all_columns_mean"] = number_array(s.all_columns_mean, d);
  j["perron"] = {{"vector", number_array(s.perron_vector.normalized(), d)},
                 {"eigenvalue", round_to(s.perron_eigenvalue, d)},
                 {"efficient", s.perron_efficient}};
  return j;
}

// ---- subcommands -----------------------------------------------------------

void cmd_validate(const std::string& matrix, const std::string& format, const Common& c,
                  std::ostream& out) {
  const PCMatrix a = read_matrix_file(matrix);
  if (format == "csv") {
    out << matrix_to_csv(a, c.digits());
    return;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(round_to(a(i, j), c.digits()));
    rows.push_back(row);
  }
  out << Json{{"n", a.size()}, {"entries", rows}, {"consistent", is_consistent(a)}}.dump()
      << '\n';
}

void cmd_check(const std::string& matrix, const std::string& vec, double eps, std::ostream& out) {
  const PCMatrix a = read_matrix_file(matrix);
  const PriorityVector w = read_vector_arg(vec);
  const auto g = build_digraph(a, w, eps);
  const auto conn = is_strongly_connected(g);
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
  Json j;
  j["efficient"] = conn.strongly_connected;
  if (conn.strongly_connected) {
    j["witness"] = nullptr;
  } else {
    j["witness"] = {{"root", conn.root + 1}, {"closed_set", one_based(conn.witness)}};
  }
  j["edges"] = edges;
  j["eps"] = eps;
  out << j.dump() << '\n';
}

void cmd_extend(const std::string& matrix, const std::string& vec, long long pos,
                std::size_t samples, std::uint64_t seed, const Common& c, std::ostream& out) {
  const PCMatrix a = read_matrix_file(matrix);
  const PriorityVector w = read_vector_arg(vec);
  const std::size_t p = parse_position(pos);
  const auto iv = extension_interval(a, w, p);
  std::vector<double> xs{iv.lo};
  if (iv.hi / iv.lo - 1.0 > kProjectiveTolerance) {
    xs.push_back(std::sqrt(iv.lo * iv.hi));
    xs.push_back(iv.hi);
    RandomStream rng(seed);
    for (std::size_t k = 0; k < samples; ++k) xs.push_back(rng.log_uniform(iv.lo, iv.hi));
  }
  Json ext = Json::array();
  for (double x : xs) {
    const auto v = extend(a, w, p, x);
    ext.push_back({{"x", round_to(x, c.digits())},
                   {"vector", number_array(v, c.digits())},
                   {"efficient", is_efficient(a, v).efficient}});
  }
  Json j;
  j["position"] = pos;
  j["interval"] = {{"lo", round_to(iv.lo, c.digits())}, {"hi", round_to(iv.hi, c.digits())}};
  j["extensions"] = ext;
  out << j.dump() << '\n';
}

void cmd_enumerate(const std::string& matrix, const std::string& seed_set,
                   const std::string& order, const EnumerationStrategy& base,
                   const std::string& provenance_path, const Common& c, std::ostream& out) {
  const PCMatrix a = read_matrix_file(matrix);
  EnumerationStrategy strategy = base;
  if (!order.empty()) strategy.growth_order = parse_indices(order);
  const auto family = inductive_enumerate(a, parse_indices(seed_set), strategy);
  for (const auto& m : family.members) out << Json{{"weights", number_array(m, c.digits())}}.dump() << '\n';
  if (!provenance_path.empty()) {
    const auto& p = family.provenance;
    Json steps = Json::array();
    for (const auto& s : p.steps) {
      Json samples = Json::array();
      for (const auto& per_parent : s.samples) {
        Json xs = Json::array();
        for (double x : per_parent) xs.push_back(x);
        samples.push_back(xs);
      }
      steps.push_back({{"added_index", s.added_index + 1},
                       {"vectors_in", s.vectors_in},
                       {"vectors_out", s.vectors_out},
                       {"samples", samples}});
    }
    Json j;
    j["seed"] = one_based(p.seed);
    j["seed_vectors"] = p.seed_vectors;
    j["strategy"] = {{"interior_samples", p.strategy.interior_samples},
                     {"rng_seed", p.strategy.rng_seed},
                     {"budget", p.strategy.budget},
                     {"seed_grid", p.strategy.seed_grid},
                     {"growth_order", one_based(p.strategy.growth_order)}};
    j["steps"] = steps;
    j["members"] = family.members.size();
    j["truncated"] = p.truncated;
    write_file(provenance_path, j.dump(2) + "\n");
  }
}

void cmd_sweep(const std::string& matrix, const std::string& format, const Common& c,
               std::ostream& out) {
  const PCMatrix a = read_matrix_file(matrix);
  SweepOptions opts;
  opts.threads = c.threads;
  const auto rows = sweep_all_subsets(a, opts);
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"index", r.index},
                     {"pattern", r.pattern},
                     {"norm1", round_to(r.norm1, c.digits())},
                     {"norm2", round_to(r.norm2, c.digits())},
                     {"vector", number_array(r.vector, c.digits())}});
    }
    out << arr.dump() << '\n';
    return;
  }
  out << sweep_csv(rows, a.size(), c.digits());
}

void cmd_perron(const std::string& matrix, double tol, std::size_t max_iter, const Common& c,
                std::ostream& out) {
  const PCMatrix a = read_matrix_file(matrix);
  const auto r = perron_vector(a, tol, max_iter);
  const auto d = deviation(a, r.vector);
  Json j;
  j["vector"] = number_array(r.vector.normalized(), c.digits());
  j["eigenvalue"] = round_to(r.eigenvalue, c.digits());
  j["iterations"] = r.iterations;
  j["residual"] = r.residual;
  j["efficient"] = is_efficient(a, r.vector).efficient;
  j["norm1"] = round_to(norm1(d), c.digits());
  j["frobenius"] = round_to(norm_frobenius(d), c.digits());
  out << j.dump() << '\n';
}

void cmd_table(const std::string& matrix, const std::string& csv_path, const Common& c,
               std::ostream& out) {
  const PCMatrix a = read_matrix_file(matrix);
  const auto s = best_worst_summary(a, c.threads);
  if (!csv_path.empty()) write_file(csv_path, sweep_csv(s.rows, a.size(), c.digits()));
  out << summary_json(s, c.digits()).dump() << '\n';
}

void cmd_experiment(ExperimentConfig config, const std::string& norms, const std::string& out_dir,
                    const Common& c, std::ostream& out) {
  config.norms = {false, false};
  std::stringstream ss(norms);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "norm1") {
      config.norms.norm1 = true;
    } else if (item == "frobenius") {
      config.norms.frobenius = true;
    } else {
      throw Error(ErrorKind::BadConfig, "unknown norm '" + item + "'");
    }
  }
  config.threads = c.threads;
  config.validate();
  const int d = c.digits();
  const auto matrices = generate_matrices(config);
  const auto records = batch_compare(matrices, config.threads);

  std::string per = "# matrix";
  if (config.norms.norm1) per += ",argmin1,min1,all_columns1,perron1";
  if (config.norms.frobenius) per += ",argmin2,min2,all_columns2,perron2";
  per += ",perron_efficient,inefficient_means\n";
  const std::uint64_t full = (std::uint64_t{1} << config.n) - 1;
  std::size_t proper1 = 0, proper2 = 0, perron_ok = 0, bad_means = 0;
  for (const auto& r : records) {
    per += std::to_string(r.matrix + 1);
    if (config.norms.norm1) {
      per += ',' + std::to_string(r.argmin1) + ',' + format_number(r.min1, d) + ',' +
             format_number(r.all_columns1, d) + ',' + format_number(r.perron1, d);
    }
    if (config.norms.frobenius) {
      per += ',' + std::to_string(r.argmin2) + ',' + format_number(r.min2, d) + ',' +
             format_number(r.all_columns2, d) + ',' + format_number(r.perron2, d);
    }
    per += std::string(",") + (r.perron_efficient ? "1" : "0") + ',' +
           std::to_string(r.inefficient_means) + '\n';
    proper1 += r.argmin1 != full;
    proper2 += r.argmin2 != full;
    perron_ok += r.perron_efficient;
    bad_means += r.inefficient_means;
  }

  Json summary;
  summary["config"] = {{"n", config.n},
                       {"count", config.count},
                       {"generator", std::string(to_string(config.generator))},
                       {"lo", config.lo},
                       {"hi", config.hi},
                       {"seed", config.seed},
                       {"norms", norms}};
  if (config.norms.norm1) summary["proper_subset_argmin_norm1"] = proper1;
  if (config.norms.frobenius) summary["proper_subset_argmin_frobenius"] = proper2;
  summary["perron_efficient"] = perron_ok;
  summary["inefficient_subset_means"] = bad_means;

  std::string stats_csv;
  if (config.norms.frobenius) {
    const auto stats = subset_statistics(matrices, config.threads);
    stats_csv = "# index,pattern,p,n_wins\n";
    std::size_t best = 0;
    for (std::size_t i = 0; i < stats.p.size(); ++i) {
      stats_csv += std::to_string(i + 1) + ',' +
                   ColumnSubset::from_index(i + 1, config.n).bit_pattern() + ',' +
                   format_number(stats.p[i], d) + ',' + std::to_string(stats.wins[i]) + '\n';
      if (stats.p[i] < stats.p[best]) best = i;
    }
    std::size_t wins_total = 0;
    for (auto w : stats.wins) wins_total += w;
    summary["subset_stats"] = {
        {"matrices_used", stats.matrices_used},
        {"matrices_excluded", stats.excluded.size()},
        {"excluded_below_norm", kDegenerateNorm},
        {"tie_policy", "all subsets within relative 1e-12 of the minimum are counted"},
        {"wins_total", wins_total},
        {"best_p", subset_ref(best + 1, config.n)},
        {"all_columns_p_over_best", round_to(stats.p.back() / stats.p[best], d)}};
    summary["subset_stats"]["best_p"]["p"] = round_to(stats.p[best], d);
  }

  if (!out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorKind::IoError, "cannot create '" + out_dir + "'");
    write_file(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
    write_file(fs::path(out_dir) / "per_matrix.csv", per);
    if (!stats_csv.empty()) write_file(fs::path(out_dir) / "subset_stats.csv", stats_csv);
  }
  out << summary.dump() << '\n';
}

void report(std::ostream& err, std::string_view kind, const std::string& message,
            const std::vector<ErrorDetail>& details = {}) {
  Json j;
  j["error"] = std::string(kind);
  j["message"] = message;
  Json d = Json::object();
  for (const auto& kv : details) d[kv.key] = kv.value;
  j["details"] = d;
  err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Efficient priority vectors for reciprocal comparison matrices", "effvec"};
  app.require_subcommand(1, 1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--full-precision", common.full_precision, "Print 17 significant digits");
    sub->add_option("--threads", common.threads, "Worker thread cap")
        ->check(CLI::PositiveNumber);
  };

  std::string matrix, vec, format = "json", sweep_format = "csv", seed_set, order, provenance, csv_path, out_dir;
  std::string norms = "norm1,frobenius", generator = "uniform-upper";
  double eps = kEdgeTolerance, tol = 1e-13;
  long long position = 0;
  std::size_t samples = 3, max_iter = 100000;
  std::optional<std::uint64_t> seed;
  EnumerationStrategy strategy;
  ExperimentConfig config;

  auto* validate = app.add_subcommand("validate", "Validate and canonicalize a matrix");
  validate->add_option("-m,--matrix", matrix, "Matrix file (CSV or JSON)")->required();
  validate->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_common(validate);

  auto* check = app.add_subcommand("check", "Decide whether a vector is efficient");
  check->add_option("-m,--matrix", matrix, "Matrix file")->required();
  check->add_option("-w,--vector", vec, "Inline list or vector file")->required();
  check->add_option("--eps", eps, "Relative edge tolerance")->check(CLI::NonNegativeNumber);
  add_common(check);

  auto* ext = app.add_subcommand("extend", "Extension interval at a position");
  ext->add_option("-m,--matrix", matrix, "Matrix file")->required();
  ext->add_option("-w,--vector", vec, "Efficient vector for the reduced matrix")->required();
  ext->add_option("-p,--position", position, "1-based position of the new entry")->required();
  ext->add_option("--samples", samples, "Log-uniform interior samples");
  ext->add_option("--seed", seed, "RNG seed");
  add_common(ext);

  auto* enumerate = app.add_subcommand("enumerate", "Grow a family of efficient vectors");
  enumerate->add_option("-m,--matrix", matrix, "Matrix file")->required();
  enumerate->add_option("-s,--seed-set", seed_set, "2 or 3 1-based indices, e.g. 1,2")
      ->required();
  enumerate->add_option("--samples", strategy.interior_samples, "Interior samples per interval");
  enumerate->add_option("--seed", seed, "RNG seed");
  enumerate->add_option("--budget", strategy.budget, "Maximum family size")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--grid", strategy.seed_grid, "Grid points per chain parameter");
  enumerate->add_option("--order", order, "Growth order of the remaining indices");
  enumerate->add_option("--provenance", provenance, "Write provenance JSON here");
  add_common(enumerate);

  auto* sweep = app.add_subcommand("sweep", "Norms of all column-subset geometric means");
  sweep->add_option("-m,--matrix", matrix, "Matrix file")->required();
  sweep->add_option("--format", sweep_format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  add_common(sweep);

  auto* perron = app.add_subcommand("perron", "Perron eigenvector by power iteration");
  perron->add_option("-m,--matrix", matrix, "Matrix file")->required();
  perron->add_option("--tol", tol, "Convergence tolerance")->check(CLI::PositiveNumber);
  perron->add_option("--max-iter", max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  add_common(perron);

  auto* table = app.add_subcommand("table", "Best/worst subset summary");
  table->add_option("-m,--matrix", matrix, "Matrix file")->required();
  table->add_option("--csv", csv_path, "Write the per-subset table here");
  add_common(table);

  auto* experiment = app.add_subcommand("experiment", "Random-matrix batch experiment");
  experiment->add_option("--n", config.n, "Dimension");
  experiment->add_option("--count", config.count, "Number of matrices");
  experiment->add_option("--generator", generator, "uniform-upper or hadamard-quotient")
      ->check(CLI::IsMember({"uniform-upper", "hadamard-quotient"}));
  experiment->add_option("--lo", config.lo, "Lower end of the open sampling interval");
  experiment->add_option("--hi", config.hi, "Upper end of the open sampling interval");
  experiment->add_option("--seed", seed, "RNG seed (falls back to EFFVEC_SEED)");
  experiment->add_option("--norms", norms, "norm1,frobenius");
  experiment->add_option("--out-dir", out_dir, "Directory for the output files");
  add_common(experiment);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n';
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      cmd_validate(matrix, format, common, out);
    } else if (check->parsed()) {
      cmd_check(matrix, vec, eps, out);
    } else if (ext->parsed()) {
      cmd_extend(matrix, vec, position, samples, resolve_seed(seed), common, out);
    } else if (enumerate->parsed()) {
      strategy.rng_seed = resolve_seed(seed);
      cmd_enumerate(matrix, seed_set, order, strategy, provenance, common, out);
    } else if (sweep->parsed()) {
      cmd_sweep(matrix, sweep_format, common, out);
    } else if (perron->parsed()) {
      cmd_perron(matrix, tol, max_iter, common, out);
    } else if (table->parsed()) {
      cmd_table(matrix, csv_path, common, out);
    } else if (experiment->parsed()) {
      config.generator = parse_generator(generator);
      config.seed = resolve_seed(seed);
      cmd_experiment(config, norms, out_dir, common, out);
    }
  } catch (const Error& e) {
    report(err, to_string(e.kind()), e.what(), e.details());
    return kExitDomainError;
  } catch (const std::exception& e) {
    report(err, "InternalError", e.what());
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace effvec::cli
