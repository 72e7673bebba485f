#pragma once

#include <string>
#include <vector>

#include "treelab/polynomial.hpp"

namespace treelab {

// Power series in t known exactly through t^order; coefficients are
// polynomials. Binary operations truncate to the smaller order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Polynomial> coefficients);

  static TruncatedSeries constant(const Polynomial& c, int order);
  static TruncatedSeries t(int order);  // the series variable itself

  int order() const noexcept { return order_; }
  const Polynomial& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Polynomial& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries truncated(int order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Polynomial& c, const TruncatedSeries& a);
  TruncatedSeries operator-() const;
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  // d/dt, known through order - 1.
  TruncatedSeries derivative() const;
  // Integral from 0, known through order + 1.
  TruncatedSeries integral() const;
  // Constant term must be a non-zero rational (DomainError otherwise).
  TruncatedSeries inverse() const;
  // Constant term must be a non-zero rational square.
  TruncatedSeries sqrt() const;
  // Constant term must be zero.
  TruncatedSeries exp() const;
  // Divides by t^k; throws ConsistencyError unless c_0..c_{k-1} vanish.
  TruncatedSeries divide_by_t(int k = 1) const;

  TruncatedSeries substitute(const std::map<std::string, Polynomial>& values) const;
  bool is_zero() const;

 private:
  int order_;
  std::vector<Polynomial> coeffs_;
};

// One line per coefficient: "t^n: <poly>".
std::string to_string(const TruncatedSeries& s);

}  // namespace treelab
