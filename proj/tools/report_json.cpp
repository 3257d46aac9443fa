#include "report_json.hpp"

#include <type_traits>

namespace contagion::cli {

json rational_json(const Rational& r) {
  return {
      {"numerator", boost::multiprecision::numerator(r).str()},
      {"denominator", boost::multiprecision::denominator(r).str()},
      {"decimal", to_double(r)},
      {"floor", floor_of(r)},
  };
}

json graph_summary_json(const Graph& g) {
  return {
      {"n", g.num_vertices()},
      {"m", g.num_edges()},
      {"min_degree", g.min_degree()},
      {"max_degree", g.max_degree()},
  };
}

json certificate_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, DeletionOrder>) {
          return {{"type", "deletion-order"}, {"order", c.order}};
        } else if constexpr (std::is_same_v<T, PermutationCertificate>) {
          return {
              {"type", "permutation"},
              {"master_seed", c.master_seed},
              {"trial", c.trial},
              {"sample_seed", c.sample_seed},
              {"trials_run", c.trials_run},
              {"status", c.accepted ? "accepted" : "fallback"},
          };
        } else {
          json rounds = json::array();
          for (const auto& r : c.rounds)
            rounds.push_back({
                {"index", r.index},
                {"residual_size", r.residual.size()},
                {"residual_min_degree", r.residual_min_degree},
                {"chosen_size", r.chosen.size()},
                {"p", r.p},
            });
          return {
              {"type", "warmup"},
              {"master_seed", c.master_seed},
              {"attempt_seed", c.attempt_seed},
              {"restarts", c.restarts},
              {"patched", c.patched},
              {"added_at_end", c.added_at_end},
              {"rounds", std::move(rounds)},
          };
        }
      },
      cert);
}

json contagious_set_json(const ContagiousSetReport& report) {
  return {
      {"algorithm", to_string(report.algorithm)},
      {"w", rational_json(report.w)},
      {"set", report.set},
      {"size", report.size()},
      {"verified", report.verified},
      {"certificate", certificate_json(report.certificate)},
  };
}

json exact_json(const ExactResult& result, const Rational& w) {
  json out = {
      {"algorithm", to_string(Algorithm::exact)},
      {"w", rational_json(w)},
      {"subsets_tested", result.subsets_tested},
      {"certificate",
       {{"type", "exhaustive"}, {"cap", result.cap}, {"forced", result.forced}, {"subsets_tested", result.subsets_tested}}},
  };
  if (result.found()) {
    out["set"] = *result.optimum;
    out["size"] = result.size();
  } else {
    out["set"] = nullptr;
    out["size"] = nullptr;
  }
  return out;
}

json cascade_json(const CascadeResult& result) {
  json rounds = json::array();
  for (auto r : result.round) {
    if (r == kNeverActivated)
      rounds.push_back(nullptr);
    else
      rounds.push_back(r);
  }
  return {
      {"contagious", result.fully_activated},
      {"activated_count", result.activated_count},
      {"last_round", result.last_round()},
      {"rounds", std::move(rounds)},
  };
}

}  // namespace contagion::cli
