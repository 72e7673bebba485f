#include "treelab/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace treelab {

const char* scope_kind_name(ScopeKind k) {
  switch (k) {
    case ScopeKind::multiset: return "multiset";
    case ScopeKind::plane: return "n";
    case ScopeKind::perms: return "n";
    case ScopeKind::order: return "order";
  }
  return "?";
}

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = [] {
    std::vector<CheckSpec> v;
    register_tree_checks(v);
    register_permutation_checks(v);
    return v;
  }();
  return registry;
}

const CheckSpec* find_check(const std::string& id) {
  for (const auto& c : check_registry())
    if (c.id == id) return &c;
  return nullptr;
}

int max_scope() {
  if (const char* env = std::getenv("TREELAB_MAX_SCOPE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return 10;
}

std::vector<Multiset> multisets_in_scope(const CheckSpec& spec, const CheckRequest& request) {
  if (request.multiset) return {*request.multiset};
  if (request.n) return {Multiset::plane(*request.n)};
  std::vector<Multiset> out;
  for (int m = std::max(spec.min_size, 1); m <= spec.default_size; ++m) {
    auto part = compositions(m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

int upper_in_scope(const CheckSpec& spec, const CheckRequest& request) {
  return request.n.value_or(spec.default_size);
}

CheckResult run_check(const CheckSpec& spec, const CheckRequest& request) {
  const int cap = max_scope();
  if (request.multiset && spec.kind != ScopeKind::multiset)
    throw std::invalid_argument("check " + spec.id + " takes --" + scope_kind_name(spec.kind) + ", not --multiset");
  if (request.multiset && request.n) throw std::invalid_argument("--multiset and --n are mutually exclusive");
  if (request.multiset) {
    if (request.multiset->cardinality() < spec.min_size)
      throw std::invalid_argument("check " + spec.id + " needs |M| >= " + std::to_string(spec.min_size));
    if (request.multiset->cardinality() > cap)
      throw std::invalid_argument("|M| exceeds the scope limit " + std::to_string(cap) + " (raise TREELAB_MAX_SCOPE)");
  }
  if (request.n) {
    if (*request.n < spec.min_size)
      throw std::invalid_argument("check " + spec.id + " needs " + scope_kind_name(spec.kind) +
                                  " >= " + std::to_string(spec.min_size));
    const int limit = spec.kind == ScopeKind::order ? 2 * cap : cap;
    if (*request.n > limit)
      throw std::invalid_argument("scope " + std::to_string(*request.n) + " exceeds the limit " + std::to_string(limit) +
                                  " (raise TREELAB_MAX_SCOPE)");
  }
  return spec.run(spec, request);
}

Json report_json(const CheckSpec& spec, const CheckResult& result, std::optional<double> elapsed_ms) {
  Json out;
  out["schemaVersion"] = 1;
  out["checkId"] = spec.id;
  out["scope"] = result.scope;
  out["status"] = result.pass ? "pass" : "fail";
  out["counts"] = result.counts;
  out["counterexample"] = result.counterexample ? Json(*result.counterexample) : Json(nullptr);
  out["details"] = result.details;
  if (elapsed_ms) out["elapsedMs"] = *elapsed_ms;
  return out;
}

}  // namespace treelab
