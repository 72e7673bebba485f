#include "treelab/distribution.hpp"

#include "treelab/errors.hpp"

namespace treelab {

Polynomial counts_to_polynomial(const ExponentCounts& counts, const std::vector<std::string>& variables) {
  Polynomial p(variables);
  for (const auto& [e, c] : counts) p.add_term(e, Rational(Integer(static_cast<long>(c))));
  return p;
}

Polynomial distribution_polynomial(std::span<const WeaklyIncreasingTree> family, const std::vector<StatisticId>& stats,
                                   std::vector<std::string> variables, int jobs) {
  if (variables.empty())
    for (const auto& s : stats) variables.push_back(default_variable(s));
  if (variables.size() != stats.size()) throw DomainError("one variable per statistic is required");
  auto exps = [&](const WeaklyIncreasingTree& t) {
    const auto v = wit_stats(t);
    std::vector<int> e;
    e.reserve(stats.size());
    for (const auto& s : stats) e.push_back(statistic_value(v, s));
    return e;
  };
  const auto counts = jobs == 1 ? count_exponents_serial(family, exps) : count_exponents_parallel(family, exps, jobs);
  return counts_to_polynomial(counts, variables);
}

}  // namespace treelab
