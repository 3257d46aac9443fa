#include "runner.hpp"

#include <stdexcept>
#include <string>

#include "contagion/greedy.hpp"
#include "contagion/warmup_k2.hpp"

namespace contagion::cli {

void check_preconditions(const Graph& g, std::uint32_t k, Algorithm algo) {
  if (k == 0) throw std::invalid_argument("--k must be at least 1");
  if ((algo == Algorithm::k2_iterated || algo == Algorithm::k2_baseline) && k != 2)
    throw std::invalid_argument(std::string(to_string(algo)) + " requires --k 2");
  if (algo == Algorithm::k2_baseline && !g.empty() && g.min_degree() < 2)
    throw std::invalid_argument("k2base requires minimum degree >= 2 (got " + std::to_string(g.min_degree()) +
                                "); use --algo greedy");
}

FindOutcome run_algorithm(const Graph& g, std::uint32_t k, Algorithm algo, const FindOptions& options) {
  check_preconditions(g, k, algo);
  const ThresholdConfig cfg(k);
  FindOutcome out;
  switch (algo) {
    case Algorithm::greedy:
      out.report = greedy_contagious(g, cfg);
      break;
    case Algorithm::random_permutation:
      out.report = randomized_contagious(g, cfg, options.seed, options.max_trials);
      break;
    case Algorithm::k2_iterated: {
      WarmupParams params;
      params.seed = options.seed;
      out.report = iterated_random_k2(g, params);
      break;
    }
    case Algorithm::k2_baseline:
      out.report = random_2dom_baseline(g, options.seed);
      break;
    case Algorithm::exact: {
      ExactOptions exact_options;
      exact_options.allow_large = options.force;
      const Rational w = weight_value(g, cfg);
      const std::uint64_t cap = options.cap.value_or(floor_of(w));
      out.exact = min_contagious_exact(g, cfg, cap, exact_options);
      if (out.exact->found()) {
        ContagiousSetReport report;
        report.algorithm = Algorithm::exact;
        report.set = *out.exact->optimum;
        report.w = w;
        report.verified = is_contagious(g, cfg, report.set);
        out.report = std::move(report);
      }
      break;
    }
  }
  return out;
}

}  // namespace contagion::cli
