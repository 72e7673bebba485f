#pragma once
// Folds over enumerated families. Each *_parallel kernel has a *_serial
// reference with identical results; the parallel versions merge per-thread
// partials in a fixed order so their output does not depend on the thread
// count.

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treelab {

using ExponentCounts = std::map<std::vector<int>, std::int64_t>;

struct Failure {
  std::size_t index = 0;
  std::string message;
};

// 0 keeps the OpenMP default.
inline int effective_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

inline void merge_counts(ExponentCounts& into, const ExponentCounts& from) {
  for (const auto& [e, c] : from) into[e] += c;
}

template <class Item, class F>
ExponentCounts count_exponents_serial(std::span<const Item> items, F&& exponents_of) {
  ExponentCounts out;
  for (const auto& it : items) ++out[exponents_of(it)];
  return out;
}

// exponents_of must not throw.
template <class Item, class F>
ExponentCounts count_exponents_parallel(std::span<const Item> items, F&& exponents_of, int jobs = 0) {
  const int threads = effective_jobs(jobs);
  std::vector<ExponentCounts> partial(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::int64_t>(items.size());
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    ++partial[static_cast<std::size_t>(omp_get_thread_num())][exponents_of(items[static_cast<std::size_t>(i)])];
  }
  ExponentCounts out;
  for (const auto& p : partial) merge_counts(out, p);
  return out;
}

// `check` returns nullopt on success or a message. Exceptions count as
// failures. The reported failure is the one with the smallest index.
template <class Item, class Check>
std::optional<Failure> first_failure_serial(std::span<const Item> items, Check&& check) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::optional<std::string> msg;
    try {
      msg = check(items[i]);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    if (msg) return Failure{i, *msg};
  }
  return std::nullopt;
}

template <class Item, class Check>
std::optional<Failure> first_failure_parallel(std::span<const Item> items, Check&& check, int jobs = 0) {
  const int threads = effective_jobs(jobs);
  const auto n = static_cast<std::int64_t>(items.size());
  std::vector<std::optional<Failure>> partial(static_cast<std::size_t>(threads));
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
    if (mine && static_cast<std::int64_t>(mine->index) < i) continue;
    std::optional<std::string> msg;
    try {
      msg = check(items[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    if (msg) mine = Failure{static_cast<std::size_t>(i), *msg};
  }
  std::optional<Failure> best;
  for (auto& p : partial)
    if (p && (!best || p->index < best->index)) best = std::move(p);
  return best;
}

// Permutations of 1..n by lexicographic rank.
inline std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const auto f = fact[static_cast<std::size_t>(i - 1)];
    const auto k = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

inline std::uint64_t permutation_count(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// F maps a word (1..n) to an exponent vector.
template <class F>
ExponentCounts count_permutations_serial(int n, F&& exponents_of) {
  ExponentCounts out;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    ++out[exponents_of(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

template <class F>
ExponentCounts count_permutations_parallel(int n, F&& exponents_of, int jobs = 0) {
  const int threads = effective_jobs(jobs);
  const std::uint64_t total = permutation_count(n);
  // Fixed chunking keeps the work split independent of the thread count.
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(5040, total));
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::vector<ExponentCounts> partial(static_cast<std::size_t>(threads));
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    auto w = unrank_permutation(n, begin);
    for (std::uint64_t r = begin; r < end; ++r) {
      ++mine[exponents_of(w)];
      std::next_permutation(w.begin(), w.end());
    }
  }
  ExponentCounts out;
  for (const auto& p : partial) merge_counts(out, p);
  return out;
}

}  // namespace treelab
