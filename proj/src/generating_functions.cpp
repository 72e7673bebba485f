#include "treelab/generating_functions.hpp"

#include "treelab/distribution.hpp"
#include "treelab/errors.hpp"
#include "treelab/kernels.hpp"
#include "treelab/permutation.hpp"

namespace treelab {

namespace {

const std::vector<std::string> kNarayanaVars{"u1", "u2", "u3", "v1", "v2"};
const std::vector<std::string> kEulerianVars{"x", "y", "z1", "z2"};

Polynomial var(const std::string& name) { return Polynomial::variable(name); }
Polynomial num(const Rational& c) { return Polynomial::constant(c); }

TruncatedSeries series_const(const Polynomial& c, int order) { return TruncatedSeries::constant(c, order); }

// e^{c t} for a polynomial c.
TruncatedSeries exp_linear(const Polynomial& c, int order) { return (c * TruncatedSeries::t(order)).exp(); }

}  // namespace

Integer narayana(long n, long k) {
  if (n < 1) throw DomainError("narayana needs n >= 1");
  if (k < 1 || k > n) return 0;
  Integer v = binomial(n, k) * binomial(n, k - 1);
  return v / n;
}

Integer refined_narayana_count(long n, long k, long l) {
  if (n < 1) throw DomainError("refined count needs n >= 1");
  if (k < 1 || l < 0) return 0;
  Integer v = binomial(n, k) * binomial(n - k, l) * binomial(n - k - l, k - 1);
  if (v % n != 0) throw ConsistencyError("refined count is not integral");
  return v / n;
}

Polynomial motzkin_poly(int n) {
  if (n < 0) throw DomainError("Motzkin polynomial needs n >= 0");
  Polynomial p({"u", "v"});
  for (int k = 0; 2 * k <= n; ++k)
    p.add_term({k + 1, n - 2 * k}, Rational(binomial(n, 2 * k) * catalan(static_cast<unsigned long>(k))));
  return p;
}

TruncatedSeries narayana_gf_closed(int order) {
  if (order < 1) throw DomainError("order must be at least 1");
  const auto u1 = var("u1"), u2 = var("u2"), u3 = var("u3"), v1 = var("v1"), v2 = var("v2");
  const Polynomial a = u1 - u3 + v1 - v2;
  const Polynomial b = u1 + u3 - v1 + v2;
  const Polynomial c = v1 + num(1);
  // One extra order: the final division by t consumes it.
  const int K = order + 1;
  TruncatedSeries radicand(K, {num(1), num(-2) * c, c * c - num(2) * b,
                               num(2) * (b * c - num(2) * u1 - num(2) * u2 * v2), a * a});
  TruncatedSeries front(K, {num(1), -c, a});
  const auto numerator = front - radicand.sqrt();
  auto n = (num(Rational(1, 2)) * numerator).divide_by_t(1);
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) out[i] = n[i].with_variables(kNarayanaVars);
  return out;
}

TruncatedSeries narayana_gf_fixedpoint(int order) {
  if (order < 1) throw DomainError("order must be at least 1");
  const auto u1 = var("u1"), u2 = var("u2"), u3 = var("u3"), v1 = var("v1"), v2 = var("v2");
  const auto t = TruncatedSeries::t(order);
  TruncatedSeries N(order);
  // N = t(u1 + N + (N + u3 t - u1 t)N + u2 v2 t + v2 t N + v1(N - u1 t - t N))
  for (int it = 0; it < order; ++it) {
    const auto inner = series_const(u1, order) + N + (N + u3 * t - u1 * t) * N + (u2 * v2) * t + v2 * (t * N) +
                       v1 * (N - u1 * t - t * N);
    N = t * inner;
  }
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) out[i] = N[i].with_variables(kNarayanaVars);
  return out;
}

Polynomial eulerian_refined(int n, int jobs) {
  if (n < 1) throw DomainError("n must be at least 1");
  auto exps = [](const std::vector<int>& w) {
    const auto s = perm_stats(Permutation(w));
    return std::vector<int>{s.dd, s.da, s.pk1, s.pk2};
  };
  const auto counts = jobs == 1 ? count_permutations_serial(n, exps) : count_permutations_parallel(n, exps, jobs);
  return counts_to_polynomial(counts, kEulerianVars);
}

Polynomial eulerian_recurrence(int n, const std::vector<Polynomial>& A) {
  if (n < 4 || static_cast<int>(A.size()) < n) throw DomainError("recurrence needs n >= 4 and A_1..A_{n-1}");
  Polynomial rhs = (var("x") + var("y")) * A[static_cast<std::size_t>(n - 1)] +
                   Rational(n - 1) * ((var("z1") + var("z2")) * A[static_cast<std::size_t>(n - 2)]);
  for (int i = 2; i <= n - 3; ++i)
    rhs += Rational(binomial(n - 1, i)) * (A[static_cast<std::size_t>(i)] * A[static_cast<std::size_t>(n - 1 - i)]);
  return rhs.with_variables(kEulerianVars);
}

TruncatedSeries eulerian_egf(int order, int jobs) {
  TruncatedSeries A(order);
  for (int n = 1; n <= order; ++n) A[n] = Rational(1) / Rational(factorial(static_cast<unsigned long>(n))) * eulerian_refined(n, jobs);
  return A;
}

TruncatedSeries riccati_residual(int order, int jobs) {
  if (order < 1) throw DomainError("order must be at least 1");
  const auto A = eulerian_egf(order, jobs);
  const auto x = var("x"), y = var("y"), z1 = var("z1"), z2 = var("z2");
  const auto t = TruncatedSeries::t(order);
  const auto rhs = A * A + ((z2 - z1) * t + series_const(x + y, order)) * A + ((z2 - z1) * y) * t + series_const(z1, order);
  auto res = A.derivative() - rhs.truncated(order - 1);
  for (int i = 0; i <= res.order(); ++i) res[i] = res[i].with_variables(kEulerianVars);
  return res;
}

namespace {

// int_0^t e^{(z-1)x^2/2} dx through t^order.
TruncatedSeries gaussian_integral(int order) {
  const int K = std::max(order - 1, 0);
  auto t = TruncatedSeries::t(K);
  const auto g = (num(Rational(1, 2)) * (var("z") - num(1)) * (t * t)).exp();
  return g.integral().truncated(order);
}

}  // namespace

TruncatedSeries elizalde_noy_egf(int order) {
  const auto denom = series_const(num(1), order) - gaussian_integral(order);
  auto out = denom.inverse();
  for (int i = 0; i <= order; ++i) out[i] = out[i].with_variables({"z"});
  return out;
}

TruncatedSeries pk1_egf_closed(int order) {
  if (order < 1) throw DomainError("order must be at least 1");
  const auto t = TruncatedSeries::t(order);
  const auto g = (num(Rational(1, 2)) * (var("z") - num(1)) * (t * t)).exp();
  const auto denom = series_const(num(1), order) - gaussian_integral(order);
  auto out = g * denom.inverse() + (var("z") - num(1)) * t - series_const(num(1), order);
  for (int i = 0; i <= order; ++i) out[i] = out[i].with_variables({"z"});
  return out;
}

Polynomial pk1_distribution(int n, int jobs) {
  if (n < 1) throw DomainError("n must be at least 1");
  auto exps = [](const std::vector<int>& w) { return std::vector<int>{perm_stats(Permutation(w)).pk1}; };
  const auto counts = jobs == 1 ? count_permutations_serial(n, exps) : count_permutations_parallel(n, exps, jobs);
  return counts_to_polynomial(counts, {"z"});
}

Polynomial consecutive132_distribution(int n, int jobs) {
  if (n < 0) throw DomainError("n must be non-negative");
  if (n == 0) return Polynomial::constant(1, {"z"});
  auto exps = [](const std::vector<int>& w) { return std::vector<int>{consecutive_pattern_count(w, {1, 3, 2})}; };
  const auto counts = jobs == 1 ? count_permutations_serial(n, exps) : count_permutations_parallel(n, exps, jobs);
  return counts_to_polynomial(counts, {"z"});
}

Polynomial pk1_from_132_rhs(int n, Pk1Form form, const std::vector<Polynomial>& B) {
  if (static_cast<int>(B.size()) < n + 1) throw DomainError("need B_0..B_n");
  Polynomial sum({"z"});
  const auto zm1 = var("z") - num(1);
  for (int k = 0; 2 * k <= n; ++k) {
    Rational coeff;
    if (form == Pk1Form::multinomial) {
      coeff = Rational(factorial(static_cast<unsigned long>(n))) /
              Rational(factorial(static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(n - 2 * k)));
    } else {
      coeff = Rational(binomial(n, k));
    }
    Rational scale = coeff / Rational(Integer(1) << static_cast<mp_bitcnt_t>(k));
    scale.canonicalize();
    sum += scale * (zm1.pow(static_cast<unsigned>(k)) * B[static_cast<std::size_t>(n - 2 * k)]);
  }
  return sum.with_variables({"z"});
}

TruncatedSeries carlitz_scoville_series(const Rational& x, const Rational& y, const Rational& z, int order) {
  const Rational s = x + y;
  const Rational disc = s * s - 4 * z;
  Rational d;
  if (disc == 0) throw DomainError("unsupported parameters: repeated root u = v");
  if (disc < 0 || !rational_sqrt(disc, d)) throw DomainError("unsupported parameters: u, v are not rational");
  Rational u = (s + d) / 2, v = (s - d) / 2;
  u.canonicalize();
  v.canonicalize();
  const auto eu = exp_linear(num(u), order), ev = exp_linear(num(v), order);
  const auto numerator = num(u * v) * (eu - ev);
  const auto denominator = num(u) * ev - num(v) * eu;
  return numerator * denominator.inverse();
}

}  // namespace treelab
