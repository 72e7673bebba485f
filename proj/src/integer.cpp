#include "treelab/integer.hpp"

#include <mutex>
#include <vector>

#include "treelab/errors.hpp"

namespace treelab {

namespace {

constexpr long kPascalRows = 512;

class PascalCache {
 public:
  Integer get(long n, long k) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
      const auto r = rows_.size();
      std::vector<Integer> row(r + 1);
      row.front() = 1;
      row.back() = 1;
      for (std::size_t j = 1; j < r; ++j) row[j] = rows_[r - 1][j - 1] + rows_[r - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

PascalCache& pascal() {
  static PascalCache cache;
  return cache;
}

}  // namespace

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n < kPascalRows) return pascal().get(n, k);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer catalan(unsigned long n) {
  Integer c = binomial(static_cast<long>(2 * n), static_cast<long>(n));
  c /= static_cast<unsigned long>(n + 1);
  return c;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& part, std::size_t offset) {
    std::size_t i = 0;
    if (!part.empty() && part[0] == '-') i = 1;
    if (i == part.size()) throw ParseError("expected an integer in '" + text + "'", offset);
    for (std::size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9')
        throw ParseError("unexpected character in rational '" + text + "'", offset + j);
    }
    return Integer(part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(text, 0));
  Integer num = parse_int(text.substr(0, slash), 0);
  Integer den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'", slash + 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value < 0) return false;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) || !mpz_perfect_square_p(value.get_den_mpz_t()))
    return false;
  Integer num = sqrt(Integer(value.get_num()));
  Integer den = sqrt(Integer(value.get_den()));
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

}  // namespace treelab
