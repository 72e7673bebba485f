#pragma once

#include <vector>

#include "treelab/integer.hpp"
#include "treelab/polynomial.hpp"
#include "treelab/series.hpp"

namespace treelab {

// (1/n) C(n,k) C(n,k-1); 0 outside 1 <= k <= n. DomainError for n < 1.
Integer narayana(long n, long k);
// (1/n) C(n,k) C(n-k,l) C(n-k-l,k-1); DomainError for n < 1.
Integer refined_narayana_count(long n, long k, long l);

// Sum_k C(n,2k) C_k u^{k+1} v^{n-2k}, variables (u, v).
Polynomial motzkin_poly(int n);

// N(t) = sum_{n>=1} N_n t^n over (u1, u2, u3, v1, v2), through t^order.
TruncatedSeries narayana_gf_closed(int order);
TruncatedSeries narayana_gf_fixedpoint(int order);

// Sum over S_n of x^dd y^da z1^pk1 z2^pk2; brute force.
Polynomial eulerian_refined(int n, int jobs = 0);
// Right-hand side of the convolution recurrence for A_n (n >= 4) given
// A[1..n-1] (A[0] unused).
Polynomial eulerian_recurrence(int n, const std::vector<Polynomial>& A);
// sum_{n>=1} A_n t^n/n! through t^order from the brute-force A_n.
TruncatedSeries eulerian_egf(int order, int jobs = 0);
// dA/dt - (A^2 + ((z2-z1)t + x + y)A + (z2-z1)y t + z1) through t^(order-1).
TruncatedSeries riccati_residual(int order, int jobs = 0);

// Closed form for sum_n (sum_{S_n} z^pk1) t^n/n!, variable z.
TruncatedSeries pk1_egf_closed(int order);
// 1 / (1 - int_0^t e^{(z-1)x^2/2} dx).
TruncatedSeries elizalde_noy_egf(int order);
// Brute force over S_n.
Polynomial pk1_distribution(int n, int jobs = 0);
Polynomial consecutive132_distribution(int n, int jobs = 0);  // B_n(z)

// sum_k (z-1)^k / 2^k * coeff(n,k) * B_{n-2k}(z) with coeff = n!/(k!(n-2k)!)
// (multinomial) or C(n,k) (binomial). B[j] = B_j(z).
enum class Pk1Form { multinomial, binomial };
Polynomial pk1_from_132_rhs(int n, Pk1Form form, const std::vector<Polynomial>& B);

// uv(e^{ut} - e^{vt}) / (u e^{vt} - v e^{ut}) with u + v = x + y, uv = z.
// DomainError unless u, v are distinct rationals.
TruncatedSeries carlitz_scoville_series(const Rational& x, const Rational& y, const Rational& z, int order);

}  // namespace treelab
