#include "treelab/multiset.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "treelab/errors.hpp"

namespace treelab {

Multiset::Multiset(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
  if (mult_.empty()) throw std::invalid_argument("multiset must contain at least one value");
  for (int p : mult_) {
    if (p <= 0) throw std::invalid_argument("multiplicities must be positive");
  }
  cardinality_ = std::accumulate(mult_.begin(), mult_.end(), 0);
}

Multiset Multiset::distinct(int n) { return Multiset(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Multiset::partial_sum(int i) const {
  return std::accumulate(mult_.begin(), mult_.begin() + i, 0);
}

std::string Multiset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(i + 1) + '^' + std::to_string(mult_[i]);
  }
  return out;
}

namespace {

int parse_positive_int(std::string_view digits, std::string_view token, std::size_t pos) {
  int value = 0;
  if (!digits.empty() && digits.front() == '-')
    throw ParseError("malformed multiset token '" + std::string(token) + "'", pos);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("malformed multiset token '" + std::string(token) + "'", pos);
  return value;
}

}  // namespace

Multiset parse_multiset(std::string_view text) {
  std::vector<int> mult;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') { token.remove_prefix(1); ++start; }
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);

    const std::size_t caret = token.find('^');
    if (caret == std::string_view::npos)
      throw ParseError("malformed multiset token '" + std::string(token) + "' (expected value^multiplicity)", start);
    const int value = parse_positive_int(token.substr(0, caret), token, start);
    const int multiplicity = parse_positive_int(token.substr(caret + 1), token, start + caret + 1);
    if (value != static_cast<int>(mult.size()) + 1)
      throw ParseError("gap in multiset values at token '" + std::string(token) + "' (expected value " +
                           std::to_string(mult.size() + 1) + ")",
                       start);
    if (multiplicity == 0)
      throw ParseError("zero multiplicity in token '" + std::string(token) + "'", start + caret + 1);
    mult.push_back(multiplicity);

    if (end == text.size()) break;
    start = end + 1;
  }
  return Multiset(std::move(mult));
}

std::vector<Multiset> compositions(int m) {
  std::vector<Multiset> out;
  if (m <= 0) return out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      parts.push_back(p);
      self(self, remaining - p);
      parts.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

Integer count_wit(const Multiset& m) {
  Integer product = 1;
  int partial = 0;
  for (int p : m.multiplicities()) {
    partial += p;
    product *= binomial(partial + p, p);
  }
  Integer quotient;
  Integer remainder;
  mpz_tdiv_qr_ui(quotient.get_mpz_t(), remainder.get_mpz_t(), product.get_mpz_t(),
                 static_cast<unsigned long>(1 + partial));
  if (remainder != 0) throw ConsistencyError("tree count formula produced a non-integer");
  return quotient;
}

}  // namespace treelab
