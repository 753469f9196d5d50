#include "wishart/simulate.hpp"
#include "wishart/errors.hpp"
#include "wishart/inference.hpp"
#include "wishart/special_functions.hpp"
#include "wishart/stats_tests.hpp"

#include <json.hpp>

#include <Eigen/Cholesky>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

namespace wishart {

namespace {

Eigen::MatrixXcd cholesky_factor(const HermitianMatrix& a) {
  Eigen::LLT<Eigen::MatrixXcd> llt(a.matrix());
  if (llt.info() != Eigen::Success)
    throw not_positive_definite_error("sample_wishart: Sigma is not positive definite");
  return llt.matrixL();
}

void run_parallel(long total, int threads, const std::function<void(long)>& body) {
  if (threads <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    threads = hc > 0 ? static_cast<int>(hc) : 1;
  }
  if (threads == 1 || total <= 1) {
    for (long i = 0; i < total; ++i) body(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const long i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= total) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

} // namespace

SampleSet sample_wishart(const WishartParams& p, long n, RngStream& stream) {
  const int m = p.dim();
  if (!(p.looks > m - 1))
    throw domain_error("sample_wishart: requires looks > m - 1");
  if (n < 1) throw domain_error("sample_wishart: need at least one draw");

  const Eigen::MatrixXcd c = cholesky_factor(p.sigma);
  const double L = p.looks;
  const bool integer_looks = std::abs(L - std::round(L)) < 1e-12;

  SampleSet out;
  if (integer_looks) {
    const long looks = static_cast<long>(std::llround(L));
    Eigen::VectorXcd g(m);
    for (long k = 0; k < n; ++k) {
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(m, m);
      for (long i = 0; i < looks; ++i) {
        for (int j = 0; j < m; ++j) g(j) = stream.complex_normal();
        const Eigen::VectorXcd y = c * g;
        acc.noalias() += y * y.adjoint();
      }
      out.add(HermitianMatrix::from_matrix(acc / L));
    }
  } else {
    // Bartlett: Z = (1/L) C T T^H C^H with |T_kk|^2 ~ Gamma(L-k, 1) and
    // standard circular complex Gaussian strict-lower entries.
    Eigen::MatrixXcd t(m, m);
    for (long k = 0; k < n; ++k) {
      t.setZero();
      for (int i = 0; i < m; ++i) {
        t(i, i) = std::sqrt(stream.gamma(L - i));
        for (int j = 0; j < i; ++j) t(i, j) = stream.complex_normal();
      }
      const Eigen::MatrixXcd a = c * t;
      out.add(HermitianMatrix::from_matrix(a * a.adjoint() / L));
    }
  }
  return out;
}

void MCConfig::validate() const {
  if (replicas < 1) throw domain_error("MCConfig: replicas must be >= 1");
  if (sample_sizes.empty()) throw domain_error("MCConfig: no sample sizes");
  for (long n : sample_sizes)
    if (n < 2) throw domain_error("MCConfig: every sample size must be >= 2");
  if (levels.empty()) throw domain_error("MCConfig: no significance levels");
  for (double a : levels)
    if (!(a > 0.0 && a < 1.0)) throw domain_error("MCConfig: levels must lie in (0, 1)");
  if (kinds.empty()) throw domain_error("MCConfig: no entropy kinds");
}

namespace {

struct ReplicaSlot {
  bool failed = false;
  std::vector<double> statistic; // one per kind
};

MCReport mc_run(const WishartParams& p1, const WishartParams& p2, const MCConfig& cfg,
                bool null_is_true) {
  cfg.validate();
  const std::size_t n_kinds = cfg.kinds.size();

  MCReport report;
  report.master_seed = cfg.master_seed;
  report.replicas = cfg.replicas;
  report.null_is_true = null_is_true;

  for (std::size_t ni = 0; ni < cfg.sample_sizes.size(); ++ni) {
    const long n = cfg.sample_sizes[ni];
    std::vector<ReplicaSlot> slots(static_cast<std::size_t>(cfg.replicas));

    run_parallel(cfg.replicas, cfg.threads, [&](long j) {
      auto& slot = slots[static_cast<std::size_t>(j)];
      slot.statistic.assign(n_kinds, 0.0);
      RngStream stream(cfg.master_seed,
                       (static_cast<std::uint64_t>(ni) << 40) |
                           static_cast<std::uint64_t>(j));
      try {
        const SampleSet u = sample_wishart(p1, n, stream);
        const SampleSet v = sample_wishart(p2, n, stream);
        const MLFit f1 = estimate(u);
        const MLFit f2 = estimate(v);
        for (std::size_t ki = 0; ki < n_kinds; ++ki) {
          const EntropyKind& kind = cfg.kinds[ki];
          const EntropyEstimate e1{entropy(kind, f1.params).value,
                                   entropy_variance(kind, f1.params), n, kind};
          const EntropyEstimate e2{entropy(kind, f2.params).value,
                                   entropy_variance(kind, f2.params), n, kind};
          const EntropyEstimate pair[2] = {e1, e2};
          slot.statistic[ki] = entropy_test(pair).statistic;
        }
      } catch (const numerical_error&) {
        slot.failed = true;
      }
    });

    long excluded = 0;
    for (const auto& s : slots) excluded += s.failed ? 1 : 0;
    if (excluded * 100 > cfg.replicas)
      throw numerical_error("mc experiment: more than 1% of replicas failed at N = " +
                            std::to_string(n));
    const long used = cfg.replicas - excluded;
    report.exclusions.push_back({n, excluded});

    for (std::size_t ki = 0; ki < n_kinds; ++ki) {
      const EntropyKind& kind = cfg.kinds[ki];
      // Reductions walk replicas in index order: reports are bitwise
      // reproducible for any thread count.
      std::vector<long> rejections(cfg.levels.size(), 0);
      double sum_s = 0.0;
      for (const auto& s : slots) {
        if (s.failed) continue;
        const double stat = s.statistic[ki];
        sum_s += stat;
        const double p_value = chi2_survival(stat, 1);
        for (std::size_t ai = 0; ai < cfg.levels.size(); ++ai)
          if (p_value <= cfg.levels[ai]) ++rejections[ai];
      }
      const double mean_s = used > 0 ? sum_s / static_cast<double>(used) : 0.0;
      double ss = 0.0;
      for (const auto& s : slots) {
        if (s.failed) continue;
        const double d = s.statistic[ki] - mean_s;
        ss += d * d;
      }
      const double cv = (used > 0 && mean_s != 0.0)
                            ? std::sqrt(ss) / (mean_s * std::sqrt(static_cast<double>(used)))
                            : 0.0;
      report.statistics.push_back({kind, n, mean_s, cv});
      for (std::size_t ai = 0; ai < cfg.levels.size(); ++ai) {
        const double rate =
            used > 0 ? static_cast<double>(rejections[ai]) / static_cast<double>(used) : 0.0;
        report.rates.push_back({kind, n, cfg.levels[ai], rejections[ai], used, rate});
      }
    }
  }
  return report;
}

// Shortest decimal form that still round-trips exactly.
std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

MCReport mc_size_experiment(const WishartParams& p, const MCConfig& cfg) {
  return mc_run(p, p, cfg, true);
}

MCReport mc_power_experiment(const WishartParams& p1, const WishartParams& p2,
                             const MCConfig& cfg) {
  const bool same = p1.looks == p2.looks && p1.dim() == p2.dim() &&
                    p1.sigma.matrix() == p2.sigma.matrix();
  return mc_run(p1, p2, cfg, same);
}

const MCRateCell& MCReport::rate_at(const EntropyKind& kind, long n, double alpha) const {
  for (const auto& c : rates)
    if (c.kind == kind && c.sample_size == n && c.alpha == alpha) return c;
  throw domain_error("MCReport: no such rate cell");
}

const MCStatCell& MCReport::stat_at(const EntropyKind& kind, long n) const {
  for (const auto& c : statistics)
    if (c.kind == kind && c.sample_size == n) return c;
  throw domain_error("MCReport: no such statistic cell");
}

void MCReport::write_csv(std::ostream& os) const {
  os << "kind,sample_size,alpha,rejections,replicas_used,excluded,rate,"
        "mean_statistic,cv\n";
  for (const auto& c : rates) {
    long excluded = 0;
    for (const auto& e : exclusions)
      if (e.sample_size == c.sample_size) excluded = e.excluded;
    const auto& st = stat_at(c.kind, c.sample_size);
    os << c.kind.name() << ',' << c.sample_size << ',' << format_double(c.alpha) << ','
       << c.rejections << ',' << c.replicas_used << ',' << excluded << ','
       << format_double(c.rate) << ',' << format_double(st.mean_statistic) << ','
       << format_double(st.cv) << '\n';
  }
}

void MCReport::write_json(std::ostream& os) const {
  nlohmann::ordered_json j;
  j["seed"] = master_seed;
  j["replicas"] = replicas;
  j["mode"] = null_is_true ? "size" : "power";
  j["rates"] = nlohmann::ordered_json::array();
  for (const auto& c : rates) {
    j["rates"].push_back({{"kind", c.kind.name()},
                          {"sample_size", c.sample_size},
                          {"alpha", c.alpha},
                          {"rejections", c.rejections},
                          {"replicas_used", c.replicas_used},
                          {"rate", c.rate}});
  }
  j["statistics"] = nlohmann::ordered_json::array();
  for (const auto& c : statistics) {
    j["statistics"].push_back({{"kind", c.kind.name()},
                               {"sample_size", c.sample_size},
                               {"mean_statistic", c.mean_statistic},
                               {"cv", c.cv}});
  }
  j["exclusions"] = nlohmann::ordered_json::array();
  for (const auto& e : exclusions)
    j["exclusions"].push_back({{"sample_size", e.sample_size}, {"excluded", e.excluded}});
  os << j.dump(2) << '\n';
}

} // namespace wishart
