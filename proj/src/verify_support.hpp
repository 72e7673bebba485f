#pragma once
// Internal helpers shared by the check implementations.

#include <functional>
#include <optional>
#include <string>

#include "treelab/kernels.hpp"
#include "treelab/polynomial.hpp"
#include "treelab/verify.hpp"

namespace treelab::detail {

template <class Item, class Check>
std::optional<Failure> first_failure(const std::vector<Item>& items, Check&& check, int jobs) {
  std::span<const Item> view(items);
  return jobs == 1 ? first_failure_serial(view, check) : first_failure_parallel(view, check, jobs);
}

inline Json range_scope(const char* key, int from, int to) {
  Json s;
  s[key] = to;
  s["from"] = from;
  return s;
}

inline Json multiset_scope(const CheckSpec& spec, const CheckRequest& req, std::size_t family_count) {
  Json s;
  if (req.multiset) {
    s["multiset"] = req.multiset->to_string();
  } else if (req.n) {
    s["multiset"] = Multiset::plane(*req.n).to_string();
  } else {
    s["compositionsFrom"] = std::max(spec.min_size, 1);
    s["compositionsTo"] = spec.default_size;
    s["multisets"] = family_count;
  }
  return s;
}

inline void fail_with(CheckResult& r, std::string counterexample, std::string reason) {
  r.pass = false;
  r.counterexample = std::move(counterexample);
  r.details["reason"] = std::move(reason);
}

// Records a polynomial mismatch; returns whether a and b agree.
inline bool expect_equal(CheckResult& r, const Polynomial& a, const Polynomial& b, const std::string& where) {
  if (a == b) return true;
  if (r.pass) {
    fail_with(r, where, "polynomials differ");
    r.details["lhs"] = to_string(a);
    r.details["rhs"] = to_string(b);
  }
  return false;
}

}  // namespace treelab::detail
