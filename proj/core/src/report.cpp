#include "contagion/report.hpp"

#include <stdexcept>
#include <string>

namespace contagion {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::greedy: return "greedy";
    case Algorithm::random_permutation: return "random";
    case Algorithm::k2_iterated: return "k2iter";
    case Algorithm::k2_baseline: return "k2base";
    case Algorithm::exact: return "exact";
  }
  return "unknown";
}

Algorithm algorithm_from_string(std::string_view name) {
  for (auto a : {Algorithm::greedy, Algorithm::random_permutation, Algorithm::k2_iterated, Algorithm::k2_baseline,
                 Algorithm::exact})
    if (to_string(a) == name) return a;
  throw std::invalid_argument("unknown algorithm \"" + std::string(name) + "\"");
}

}  // namespace contagion
