// wishent: entropy-based statistics for multilook PolSAR covariance data
// under the scaled complex Wishart model. Subcommands: estimate, entropy,
// test, simulate, casestudy.

#include <CLI11.hpp>
#include <json.hpp>

#include "wishart/entropy.hpp"
#include "wishart/errors.hpp"
#include "wishart/fixtures.hpp"
#include "wishart/inference.hpp"
#include "wishart/model.hpp"
#include "wishart/polsar_io.hpp"
#include "wishart/simulate.hpp"
#include "wishart/special_functions.hpp"
#include "wishart/stats_tests.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace wishart;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

std::string g_command_line;

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path.string() + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return hex64(fnv1a64(ss.str()));
}

std::string sig6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw domain_error("cannot parse " + what + " from '" + s + "'");
  }
}

EntropyKind parse_kind(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts[0] == "shannon" && parts.size() == 1) return EntropyKind::shannon();
  if (parts.size() == 2) {
    const double beta = parse_double(parts[1], "entropy order");
    if (parts[0] == "renyi") return EntropyKind::renyi(beta);
    if (parts[0] == "tsallis") return EntropyKind::tsallis(beta);
  }
  throw domain_error("unknown entropy kind '" + spec +
                     "' (use shannon, renyi:<beta>, tsallis:<beta>)");
}

std::vector<EntropyKind> parse_kinds(const std::string& csv) {
  std::vector<EntropyKind> kinds;
  for (const auto& tok : split(csv, ',')) kinds.push_back(parse_kind(tok));
  if (kinds.empty()) throw domain_error("no entropy kinds given");
  return kinds;
}

QuantileConvention parse_convention(const std::string& s) {
  if (s == "two-sided") return QuantileConvention::two_sided;
  if (s == "paper-compat") return QuantileConvention::paper_compat;
  throw domain_error("unknown convention '" + s + "' (two-sided|paper-compat)");
}

const char* convention_name(QuantileConvention c) {
  return c == QuantileConvention::two_sided ? "two-sided" : "paper-compat";
}

const char* regime_name(LooksRegime r) {
  return r == LooksRegime::classical ? "classical" : "relaxed";
}

// A region resolved to (id, sample) pairs from pixel data, or to scalar
// fixture values when no imagery is available.
struct ScalarRegion {
  std::string id;
  int m;
  long n;
  double looks;
  double log_det_sigma;
};

struct PixelRegion {
  std::string id;
  SampleSet sample;
};

ScalarRegion parse_fixture(const std::string& spec) {
  if (const RegionFixture* f = find_fixture(spec)) {
    return {std::string(f->id), f->m, f->n, f->looks, std::log(f->det_sigma)};
  }
  ScalarRegion r{"fixture", 0, 0, 0.0, std::numeric_limits<double>::quiet_NaN()};
  bool have_det = false;
  for (const auto& kv : split(spec, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw domain_error("fixture '" + spec +
                         "' is neither a known region id nor a key=value list");
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    if (key == "m") r.m = static_cast<int>(parse_double(val, "m"));
    else if (key == "n" || key == "N") r.n = static_cast<long>(parse_double(val, "n"));
    else if (key == "looks" || key == "L") r.looks = parse_double(val, "looks");
    else if (key == "det") { r.log_det_sigma = std::log(parse_double(val, "det")); have_det = true; }
    else if (key == "logdet") { r.log_det_sigma = parse_double(val, "logdet"); have_det = true; }
    else throw domain_error("unknown fixture key '" + key + "'");
  }
  if (r.m < 1 || r.n < 1 || !(r.looks > 0.0) || !have_det)
    throw domain_error("fixture '" + spec + "' must set m, n, looks, and det/logdet");
  return r;
}

CovarianceStack load_stack(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
    return read_stack_csv(path);
  return read_stack(path);
}

// Shared --stack/--region/--mask option block.
struct RegionOptions {
  std::string stack_path;
  std::vector<std::string> rects;
  std::vector<std::string> masks;
  std::vector<std::string> fixtures;

  void attach(CLI::App* cmd, bool allow_fixtures) {
    cmd->add_option("--stack", stack_path, "PCSK covariance stack (or .csv interchange)");
    cmd->add_option("--region", rects,
                    "inclusive pixel rectangle x0,y0,x1,y1 (repeatable)");
    cmd->add_option("--mask", masks, "PMSK selection mask file (repeatable)");
    if (allow_fixtures)
      cmd->add_option("--fixture", fixtures,
                      "named region fixture (A1..A3, B1..B3) or "
                      "m=..,n=..,looks=..,det=.. scalars (repeatable)");
  }

  bool fixture_mode() const { return !fixtures.empty(); }

  std::vector<PixelRegion> load_pixel_regions(json& inputs) const {
    if (stack_path.empty())
      throw domain_error("no --stack given (and no --fixture where allowed)");
    const CovarianceStack stack = load_stack(stack_path);
    inputs["stack"] = {{"path", stack_path}, {"fnv1a64", file_digest(stack_path)},
                       {"m", stack.m}, {"rows", stack.rows}, {"cols", stack.cols}};
    std::vector<PixelRegion> regions;
    for (const auto& spec : rects) {
      const auto f = split(spec, ',');
      if (f.size() != 4) throw domain_error("--region expects x0,y0,x1,y1");
      const RectRegion rect{static_cast<int>(parse_double(f[0], "x0")),
                            static_cast<int>(parse_double(f[1], "y0")),
                            static_cast<int>(parse_double(f[2], "x1")),
                            static_cast<int>(parse_double(f[3], "y1"))};
      regions.push_back({"rect(" + spec + ")", extract_region(stack, RegionSpec(rect))});
    }
    for (const auto& path : masks) {
      const MaskRegion mask = read_mask(path);
      inputs["masks"].push_back({{"path", path}, {"fnv1a64", file_digest(path)}});
      regions.push_back({"mask(" + path + ")", extract_region(stack, RegionSpec(mask))});
    }
    if (regions.empty()) throw domain_error("no regions selected; use --region/--mask");
    return regions;
  }

  std::vector<ScalarRegion> load_fixture_regions(json& inputs) const {
    std::vector<ScalarRegion> regions;
    for (const auto& spec : fixtures) {
      auto r = parse_fixture(spec);
      if (r.id == "fixture") r.id = "fixture(" + spec + ")";
      regions.push_back(r);
      inputs["fixtures"].push_back(spec);
    }
    return regions;
  }
};

struct ReportWriter {
  json report;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  ReportWriter(const std::string& command, std::uint64_t seed) {
    report["tool"] = "wishent";
    report["command"] = command;
    report["command_line"] = g_command_line;
    report["seed"] = seed;
    report["inputs"] = json::object();
  }

  // The digest covers everything except itself and the timing field, which
  // is the one run-dependent value in the report.
  void finalize(const std::string& json_path) {
    json canonical = report;
    canonical.erase("timing_ms");
    canonical.erase("digest");
    report["digest"] = hex64(fnv1a64(canonical.dump()));
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw io_error(json_path + ": cannot open for writing");
      out << report.dump(2) << '\n';
    }
    std::cout << "report digest " << report["digest"].get<std::string>() << "\n";
  }
};

json interval_json(const ConfidenceInterval& ci) {
  return {{"lower", ci.lower},
          {"upper", ci.upper},
          {"level", ci.level},
          {"convention", convention_name(ci.convention)}};
}

// ---------------------------------------------------------------- estimate

int cmd_estimate(const RegionOptions& regions_opt, double fixed_looks,
                 std::uint64_t seed, const std::string& json_path) {
  ReportWriter w("estimate", seed);
  w.report["parameters"] = {{"fixed_looks", fixed_looks}};
  const auto regions = regions_opt.load_pixel_regions(w.report["inputs"]);
  w.report["regions"] = json::array();

  for (const auto& region : regions) {
    try {
      const MLFit fit = estimate(region.sample);
      const double aic_free = aic(region.sample, fit.params, false);
      const WishartParams fixed(fit.params.sigma, fixed_looks);
      const double aic_fixed = aic(region.sample, fixed, true);
      json r = {{"id", region.id},
                {"n", region.sample.size()},
                {"log_det_sigma", log_det(fit.params.sigma)},
                {"trace_sigma", fit.params.sigma.trace()},
                {"looks", fit.params.looks},
                {"regime", regime_name(fit.params.regime())},
                {"residual", fit.residual},
                {"iterations", fit.iterations},
                {"branch", fit.branch},
                {"log_likelihood", fit.log_likelihood},
                {"aic", {{"looks_free", aic_free},
                         {"looks_fixed", aic_fixed},
                         {"fixed_value", fixed_looks}}}};
      w.report["regions"].push_back(r);
      std::cout << region.id << ": N=" << region.sample.size()
                << " looks=" << sig6(fit.params.looks)
                << " lndet=" << sig6(log_det(fit.params.sigma))
                << " regime=" << regime_name(fit.params.regime())
                << " aic_free=" << sig6(aic_free) << " aic_fixed=" << sig6(aic_fixed)
                << "\n";
    } catch (const numerical_error& e) {
      throw numerical_error("region " + region.id + ": " + e.what());
    }
  }
  w.finalize(json_path);
  return kExitOk;
}

// ----------------------------------------------------------------- entropy

int cmd_entropy(const RegionOptions& regions_opt, const std::string& kinds_csv,
                double level, bool level_requested, const std::string& convention_s,
                bool normalize, std::uint64_t seed, const std::string& json_path) {
  const auto kinds = parse_kinds(kinds_csv);
  const auto convention = parse_convention(convention_s);

  const bool tsallis_requested =
      std::any_of(kinds.begin(), kinds.end(), [](const EntropyKind& k) {
        return k.family() == EntropyFamily::tsallis;
      });
  if (tsallis_requested && level_requested)
    throw unsupported_kind_error(
        "confidence intervals for the Tsallis entropy are unsupported: its "
        "asymptotic variance has no tractable closed form");

  ReportWriter w("entropy", seed);
  w.report["parameters"] = {{"kinds", kinds_csv},
                            {"level", level},
                            {"convention", convention_name(convention)},
                            {"normalize", normalize}};
  w.report["regions"] = json::array();

  // Resolve every region to the scalars the formulas need.
  std::vector<ScalarRegion> scalars;
  if (regions_opt.fixture_mode()) {
    if (normalize)
      throw domain_error("--normalize needs pixel data; fixtures carry only |Sigma|");
    scalars = regions_opt.load_fixture_regions(w.report["inputs"]);
    if (!regions_opt.stack_path.empty())
      throw domain_error("give either --stack regions or --fixture scalars, not both");
  } else {
    const auto regions = regions_opt.load_pixel_regions(w.report["inputs"]);
    for (const auto& region : regions) {
      try {
        const MLFit fit = estimate(region.sample);
        const HermitianMatrix sigma =
            normalize ? normalize_covariance(fit.params.sigma) : fit.params.sigma;
        scalars.push_back({region.id, fit.params.dim(),
                           static_cast<long>(region.sample.size()), fit.params.looks,
                           log_det(sigma)});
      } catch (const numerical_error& e) {
        throw numerical_error("region " + region.id + ": " + e.what());
      }
    }
  }

  for (const auto& r : scalars) {
    json rj = {{"id", r.id},
               {"n", r.n},
               {"m", r.m},
               {"looks", r.looks},
               {"log_det_sigma", r.log_det_sigma},
               {"regime", r.looks < r.m ? "relaxed" : "classical"},
               {"entropies", json::array()}};
    for (const auto& kind : kinds) {
      const double value = entropy_scalar(kind, r.m, r.looks, r.log_det_sigma);
      json ej = {{"kind", kind.name()}, {"value", value}};
      if (kind.family() == EntropyFamily::renyi)
        ej["q"] = r.looks + (1.0 - kind.beta()) * (r.m - r.looks);
      if (kind.family() == EntropyFamily::tsallis) {
        ej["variance"] = nullptr;
        ej["ci"] = nullptr;
        ej["note"] = "variance intractable; point value only";
      } else {
        const double variance = entropy_variance(kind, r.m, r.looks);
        const EntropyEstimate est{value, variance, r.n, kind};
        ej["variance"] = variance;
        ej["ci"] = interval_json(confidence_interval(est, level, convention));
      }
      rj["entropies"].push_back(ej);
      std::cout << r.id << " " << kind.name() << ": " << sig6(value);
      if (!ej["ci"].is_null())
        std::cout << "  ci" << level * 100 << "%=[" << sig6(ej["ci"]["lower"]) << ", "
                  << sig6(ej["ci"]["upper"]) << "]";
      std::cout << "\n";
    }
    w.report["regions"].push_back(rj);
  }
  w.finalize(json_path);
  return kExitOk;
}

// -------------------------------------------------------------------- test

int cmd_test(const RegionOptions& regions_opt, const std::string& kinds_csv,
             const std::string& levels_csv, double level,
             const std::string& convention_s, std::uint64_t seed,
             const std::string& json_path) {
  const auto kinds = parse_kinds(kinds_csv);
  for (const auto& kind : kinds)
    if (kind.family() == EntropyFamily::tsallis)
      throw unsupported_kind_error(
          "the Tsallis entropy admits no variance, hence no contrast test");
  std::vector<double> levels;
  for (const auto& tok : split(levels_csv, ','))
    levels.push_back(parse_double(tok, "significance level"));
  const auto convention = parse_convention(convention_s);

  ReportWriter w("test", seed);
  w.report["parameters"] = {{"kinds", kinds_csv},
                            {"levels", levels},
                            {"level", level},
                            {"convention", convention_name(convention)}};

  std::vector<ScalarRegion> scalars;
  if (regions_opt.fixture_mode()) {
    scalars = regions_opt.load_fixture_regions(w.report["inputs"]);
  } else {
    const auto regions = regions_opt.load_pixel_regions(w.report["inputs"]);
    for (const auto& region : regions) {
      try {
        const MLFit fit = estimate(region.sample);
        scalars.push_back({region.id, fit.params.dim(),
                           static_cast<long>(region.sample.size()), fit.params.looks,
                           log_det(fit.params.sigma)});
      } catch (const numerical_error& e) {
        throw numerical_error("region " + region.id + ": " + e.what());
      }
    }
  }
  if (scalars.size() < 2) throw domain_error("test needs r >= 2 regions");

  w.report["regions"] = json::array();
  for (const auto& r : scalars)
    w.report["regions"].push_back({{"id", r.id},
                                   {"n", r.n},
                                   {"looks", r.looks},
                                   {"log_det_sigma", r.log_det_sigma}});

  w.report["tests"] = json::array();
  for (const auto& kind : kinds) {
    std::vector<EntropyEstimate> estimates;
    for (const auto& r : scalars)
      estimates.push_back({entropy_scalar(kind, r.m, r.looks, r.log_det_sigma),
                           entropy_variance(kind, r.m, r.looks), r.n, kind});
    const TestOutcome out = entropy_test(estimates);
    json tj = {{"kind", kind.name()},
               {"statistic", out.statistic},
               {"df", out.df},
               {"p_value", out.p_value},
               {"pooled_mean", out.pooled_mean},
               {"decisions", json::array()}};
    std::cout << kind.name() << ": S=" << sig6(out.statistic) << " df=" << out.df
              << " p=" << sig6(out.p_value);
    for (double alpha : levels) {
      const bool reject = out.reject(alpha);
      tj["decisions"].push_back({{"alpha", alpha}, {"reject", reject}});
      std::cout << " " << alpha * 100 << "%:" << (reject ? "reject" : "keep");
    }
    std::cout << "\n";

    if (scalars.size() == 2) {
      const auto d =
          difference_interval(estimates[0], estimates[1], level, convention);
      tj["difference_interval"] = interval_json(d);
    }
    w.report["tests"].push_back(tj);
  }
  w.finalize(json_path);
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

HermitianMatrix parse_sigma(const json& spec) {
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    if (name == "sigma-u" || name == "sigma_u") return esar_urban_covariance();
    throw domain_error("unknown named covariance '" + name + "'");
  }
  if (spec.is_object()) {
    if (spec.contains("base")) {
      const auto base = parse_sigma(spec.at("base"));
      return base.scaled(spec.value("scale", 1.0));
    }
    const auto diag = spec.at("diag").get<std::vector<double>>();
    std::vector<Complex> upper;
    if (spec.contains("upper"))
      for (const auto& pair : spec.at("upper"))
        upper.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return HermitianMatrix::from_upper(static_cast<int>(diag.size()), diag, upper);
  }
  throw domain_error("covariance spec must be a name or an object");
}

int cmd_simulate(const std::string& config_path, long replicas_override,
                 std::uint64_t seed, bool seed_given, int threads,
                 const std::string& out_prefix) {
  json cfg_json = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw io_error(config_path + ": cannot open for reading");
    try {
      cfg_json = json::parse(in);
    } catch (const json::parse_error& e) {
      throw io_error(config_path + ": " + e.what());
    }
  }

  MCConfig cfg;
  if (cfg_json.contains("replicas")) cfg.replicas = cfg_json["replicas"].get<long>();
  if (cfg_json.contains("sample_sizes"))
    cfg.sample_sizes = cfg_json["sample_sizes"].get<std::vector<long>>();
  if (cfg_json.contains("levels"))
    cfg.levels = cfg_json["levels"].get<std::vector<double>>();
  if (cfg_json.contains("seed")) cfg.master_seed = cfg_json["seed"].get<std::uint64_t>();
  if (cfg_json.contains("threads")) cfg.threads = cfg_json["threads"].get<int>();
  if (cfg_json.contains("kinds")) {
    cfg.kinds.clear();
    for (const auto& k : cfg_json["kinds"])
      cfg.kinds.push_back(parse_kind(k.get<std::string>()));
  }
  if (replicas_override > 0) cfg.replicas = replicas_override;
  if (seed_given) cfg.master_seed = seed;
  if (threads > 0) cfg.threads = threads;

  const double looks = cfg_json.value("looks", 3.2);
  const HermitianMatrix sigma = cfg_json.contains("sigma")
                                    ? parse_sigma(cfg_json["sigma"])
                                    : esar_urban_covariance();
  const WishartParams p1(sigma, looks);

  const std::string mode = cfg_json.value("mode", "size");
  MCReport report;
  if (mode == "size") {
    report = mc_size_experiment(p1, cfg);
  } else if (mode == "power") {
    const HermitianMatrix sigma2 = cfg_json.contains("sigma2")
                                       ? parse_sigma(cfg_json["sigma2"])
                                       : sigma.scaled(1.2);
    const WishartParams p2(sigma2, cfg_json.value("looks2", looks));
    report = mc_power_experiment(p1, p2, cfg);
  } else {
    throw domain_error("mode must be 'size' or 'power'");
  }

  const std::string csv_path = out_prefix + ".csv";
  const std::string json_path = out_prefix + ".json";
  {
    std::ofstream csv(csv_path);
    if (!csv) throw io_error(csv_path + ": cannot open for writing");
    report.write_csv(csv);
  }
  {
    std::ofstream js(json_path);
    if (!js) throw io_error(json_path + ": cannot open for writing");
    report.write_json(js);
  }
  std::cout << "wrote " << csv_path << " and " << json_path << " (seed "
            << report.master_seed << ", " << report.replicas << " replicas)\n";
  return kExitOk;
}

// --------------------------------------------------------------- casestudy

int cmd_casestudy(double lmin, double lmax, double lstep,
                  const std::string& betas_csv, const std::string& scales_csv,
                  const std::string& out_path) {
  if (!(lmin > 0.0) || !(lmax >= lmin) || !(lstep > 0.0))
    throw domain_error("casestudy needs 0 < lmin <= lmax and lstep > 0");
  std::vector<double> betas;
  for (const auto& tok : split(betas_csv, ','))
    betas.push_back(parse_double(tok, "beta"));
  std::vector<double> scales;
  for (const auto& tok : split(scales_csv, ','))
    scales.push_back(parse_double(tok, "scale"));

  std::ofstream out(out_path);
  if (!out) throw io_error(out_path + ": cannot open for writing");
  out << "looks,scale_k,kind,value\n";
  const auto& base = esar_urban_covariance();
  char buf[64];
  auto emit = [&](double looks, double k, const std::string& kind, double value) {
    std::snprintf(buf, sizeof buf, "%.15g", value);
    if (std::strtod(buf, nullptr) != value) std::snprintf(buf, sizeof buf, "%.17g", value);
    out << sig6(looks) << ',' << sig6(k) << ',' << kind << ',' << buf << '\n';
  };
  for (double k : scales) {
    const HermitianMatrix sigma = base.scaled(1.0 + k);
    for (double looks = lmin; looks <= lmax + 1e-12; looks += lstep) {
      const WishartParams p(sigma, looks);
      emit(looks, k, "shannon", shannon_entropy(p).value);
      for (double beta : betas) {
        emit(looks, k, EntropyKind::renyi(beta).name(), renyi_entropy(p, beta).value);
        emit(looks, k, EntropyKind::tsallis(beta).name(),
             tsallis_entropy(p, beta).value);
      }
    }
  }
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) {
    if (i > 0) g_command_line += ' ';
    g_command_line += argv[i];
  }

  CLI::App app{"entropy statistics for PolSAR covariance data under the "
               "scaled complex Wishart model"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "master seed echoed into every report")
      ->capture_default_str();

  // estimate
  auto* est = app.add_subcommand("estimate", "ML fit (Sigma-hat, L-hat) per region");
  RegionOptions est_regions;
  est_regions.attach(est, false);
  double fixed_looks = 3.2;
  std::string est_json;
  est->add_option("--fixed-looks", fixed_looks, "L for the fixed-looks AIC comparison")
      ->capture_default_str();
  est->add_option("--json", est_json, "write the full-precision report here");

  // entropy
  auto* ent = app.add_subcommand("entropy", "entropies with variances and intervals");
  RegionOptions ent_regions;
  ent_regions.attach(ent, true);
  std::string ent_kinds = "shannon,renyi:0.1,renyi:0.8";
  double ent_level = 0.95;
  std::string ent_convention = "two-sided";
  bool ent_normalize = false;
  std::string ent_json;
  ent->add_option("--kinds", ent_kinds, "comma list: shannon,renyi:b,tsallis:b")
      ->capture_default_str();
  auto* ent_level_opt =
      ent->add_option("--level", ent_level, "confidence level")->capture_default_str();
  ent->add_option("--convention", ent_convention, "two-sided|paper-compat")
      ->capture_default_str();
  ent->add_flag("--normalize", ent_normalize,
                "use Sigma/tr(Sigma) (unit-trace covariance) per region");
  ent->add_option("--json", ent_json, "write the full-precision report here");

  // test
  auto* tst = app.add_subcommand("test", "entropy contrast test across r regions");
  RegionOptions tst_regions;
  tst_regions.attach(tst, true);
  std::string tst_kinds = "shannon,renyi:0.1,renyi:0.8";
  std::string tst_levels = "0.01,0.05,0.10";
  double tst_level = 0.95;
  std::string tst_convention = "two-sided";
  std::string tst_json;
  tst->add_option("--kinds", tst_kinds, "comma list (Tsallis unsupported)")
      ->capture_default_str();
  tst->add_option("--levels", tst_levels, "significance levels for decisions")
      ->capture_default_str();
  tst->add_option("--level", tst_level, "confidence level for difference intervals")
      ->capture_default_str();
  tst->add_option("--convention", tst_convention, "two-sided|paper-compat")
      ->capture_default_str();
  tst->add_option("--json", tst_json, "write the full-precision report here");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo size/power campaign");
  std::string sim_config;
  long sim_replicas = 0;
  int sim_threads = 0;
  std::string sim_out = "mcreport";
  sim->add_option("--config", sim_config, "JSON config (mode, sigma, looks, ...)");
  sim->add_option("--replicas", sim_replicas, "override replica count");
  sim->add_option("--threads", sim_threads, "worker threads (deterministic result)");
  sim->add_option("--out", sim_out, "output prefix for .csv/.json")
      ->capture_default_str();

  // casestudy
  auto* cs = app.add_subcommand("casestudy", "entropy curves over a looks grid");
  double cs_lmin = 3.0, cs_lmax = 50.0, cs_lstep = 1.0;
  std::string cs_betas = "0.1,0.5,0.8";
  std::string cs_scales = "0,0.1,0.2";
  std::string cs_out = "casestudy.csv";
  cs->add_option("--lmin", cs_lmin)->capture_default_str();
  cs->add_option("--lmax", cs_lmax)->capture_default_str();
  cs->add_option("--lstep", cs_lstep)->capture_default_str();
  cs->add_option("--betas", cs_betas, "orders for the Renyi/Tsallis curves")
      ->capture_default_str();
  cs->add_option("--scales", cs_scales, "k values for (1+k) Sigma")
      ->capture_default_str();
  cs->add_option("--out", cs_out, "output CSV")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (est->parsed())
      return cmd_estimate(est_regions, fixed_looks, seed, est_json);
    if (ent->parsed())
      return cmd_entropy(ent_regions, ent_kinds, ent_level, ent_level_opt->count() > 0,
                         ent_convention, ent_normalize, seed, ent_json);
    if (tst->parsed())
      return cmd_test(tst_regions, tst_kinds, tst_levels, tst_level, tst_convention,
                      seed, tst_json);
    if (sim->parsed())
      return cmd_simulate(sim_config, sim_replicas, seed,
                          app.count("--seed") > 0, sim_threads, sim_out);
    if (cs->parsed())
      return cmd_casestudy(cs_lmin, cs_lmax, cs_lstep, cs_betas, cs_scales, cs_out);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitInput;
}
