#pragma once
// Registry of exhaustive identity checks exposed through `treelab verify`.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treelab/encoding.hpp"
#include "treelab/multiset.hpp"

namespace treelab {

enum class ScopeKind {
  multiset,  // families T_M; default all compositions with min_size <= m <= default_size
  plane,     // plane trees P_n for n in [min_size, N]
  perms,     // S_n for n in [min_size, N]
  order,     // series through t^N
};

const char* scope_kind_name(ScopeKind k);

struct CheckRequest {
  std::optional<Multiset> multiset;  // multiset-kind only
  std::optional<int> n;              // upper end of the range (or the order)
  int jobs = 0;
  // eq3.1 parameters
  std::string x = "1", y = "4", z = "6";
};

struct CheckResult {
  bool pass = true;
  std::int64_t counts = 0;
  std::optional<std::string> counterexample;
  Json scope = Json::object();
  Json details = Json::object();
};

struct CheckSpec {
  std::string id;
  ScopeKind kind;
  int min_size;
  int default_size;
  std::string description;
  std::function<CheckResult(const CheckSpec&, const CheckRequest&)> run;
};

const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(const std::string& id);

// Largest n / m accepted; TREELAB_MAX_SCOPE overrides the default of 10.
int max_scope();

// Validates the request against the check's scope kind and limits (throws
// std::invalid_argument for usage errors) and runs it.
CheckResult run_check(const CheckSpec& spec, const CheckRequest& request);

// Ordered report object; elapsed_ms is included only when given.
Json report_json(const CheckSpec& spec, const CheckResult& result, std::optional<double> elapsed_ms = std::nullopt);

// Registration hooks implemented in verify_trees.cpp / verify_permutations.cpp.
void register_tree_checks(std::vector<CheckSpec>& out);
void register_permutation_checks(std::vector<CheckSpec>& out);

// Shared helpers for the check implementations.
std::vector<Multiset> multisets_in_scope(const CheckSpec& spec, const CheckRequest& request);
int upper_in_scope(const CheckSpec& spec, const CheckRequest& request);

}  // namespace treelab
