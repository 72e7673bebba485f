#include "treelab/series.hpp"

#include <algorithm>

#include "treelab/errors.hpp"

namespace treelab {

namespace {

Rational unit_constant(const TruncatedSeries& s, const char* what) {
  auto c = s[0].as_constant();
  if (!c || *c == 0) throw DomainError(std::string(what) + " needs a non-zero rational constant term");
  return *c;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {
  if (order < 0) throw DomainError("negative truncation order");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Polynomial> coefficients) : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coefficients[i]);
}

TruncatedSeries TruncatedSeries::constant(const Polynomial& c, int order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::t(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = Polynomial::constant(1);
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) throw DomainError("cannot extend a truncated series");
  return TruncatedSeries(order, {coeffs_.begin(), coeffs_.begin() + order + 1});
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order_, b.order_));
  for (int n = 0; n <= out.order_; ++n) out[n] = a[n] + b[n];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order_, b.order_));
  for (int n = 0; n <= out.order_; ++n) out[n] = a[n] - b[n];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order_, b.order_));
  for (int i = 0; i <= out.order_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= out.order_; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const Polynomial& c, const TruncatedSeries& a) {
  TruncatedSeries out(a.order_);
  for (int n = 0; n <= a.order_; ++n) out[n] = c * a[n];
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(order_);
  for (int n = 0; n <= order_; ++n) out[n] = -coeffs_[static_cast<std::size_t>(n)];
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order_ != b.order_) return false;
  for (int n = 0; n <= a.order_; ++n)
    if (!(a[n] == b[n])) return false;
  return true;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order_ == 0) throw DomainError("derivative of an order-0 series carries no information");
  TruncatedSeries out(order_ - 1);
  for (int n = 1; n <= order_; ++n) out[n - 1] = Rational(n) * coeffs_[static_cast<std::size_t>(n)];
  return out;
}

TruncatedSeries TruncatedSeries::integral() const {
  TruncatedSeries out(order_ + 1);
  for (int n = 0; n <= order_; ++n) out[n + 1] = Rational(1, n + 1) * coeffs_[static_cast<std::size_t>(n)];
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Rational inv0 = 1 / unit_constant(*this, "inverse");
  TruncatedSeries out(order_);
  out[0] = Polynomial::constant(inv0);
  for (int n = 1; n <= order_; ++n) {
    Polynomial acc;
    for (int k = 1; k <= n; ++k) acc += coeffs_[static_cast<std::size_t>(k)] * out[n - k];
    out[n] = -inv0 * acc;
  }
  return out;
}

TruncatedSeries TruncatedSeries::sqrt() const {
  const Rational c0 = unit_constant(*this, "sqrt");
  Rational r;
  if (!rational_sqrt(c0, r)) throw DomainError("sqrt needs a rational square as constant term");
  TruncatedSeries out(order_);
  out[0] = Polynomial::constant(r);
  const Rational half_inv = 1 / (2 * r);
  for (int n = 1; n <= order_; ++n) {
    Polynomial acc = coeffs_[static_cast<std::size_t>(n)];
    for (int k = 1; k < n; ++k) acc -= out[k] * out[n - k];
    out[n] = half_inv * acc;
  }
  return out;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw DomainError("exp needs a zero constant term");
  TruncatedSeries out(order_);
  out[0] = Polynomial::constant(1);
  // n e_n = sum_k k f_k e_{n-k}
  for (int n = 1; n <= order_; ++n) {
    Polynomial acc;
    for (int k = 1; k <= n; ++k) acc += Rational(k) * (coeffs_[static_cast<std::size_t>(k)] * out[n - k]);
    out[n] = Rational(1, n) * acc;
  }
  return out;
}

TruncatedSeries TruncatedSeries::divide_by_t(int k) const {
  if (k > order_) throw DomainError("division by t^" + std::to_string(k) + " exceeds the truncation order");
  for (int n = 0; n < k; ++n)
    if (!coeffs_[static_cast<std::size_t>(n)].is_zero())
      throw ConsistencyError("division by t^" + std::to_string(k) + " leaves a remainder at t^" + std::to_string(n) +
                             ": " + to_string(coeffs_[static_cast<std::size_t>(n)]));
  TruncatedSeries out(order_ - k);
  for (int n = k; n <= order_; ++n) out[n - k] = coeffs_[static_cast<std::size_t>(n)];
  return out;
}

TruncatedSeries TruncatedSeries::substitute(const std::map<std::string, Polynomial>& values) const {
  TruncatedSeries out(order_);
  for (int n = 0; n <= order_; ++n) out[n] = coeffs_[static_cast<std::size_t>(n)].substitute(values);
  return out;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) out += "t^" + std::to_string(n) + ": " + to_string(s[n]) + "\n";
  return out;
}

}  // namespace treelab
