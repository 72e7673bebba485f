#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "treelab/integer.hpp"

namespace treelab {

// Sparse polynomial with rational coefficients. Exponent vectors are indexed
// by the variable list; zero coefficients are never stored. Binary operations
// unify variable lists (left operand's order, then new names from the right).
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(const Rational& c, std::vector<std::string> variables = {});
  static Polynomial variable(const std::string& name, std::vector<std::string> variables = {});
  // c * prod vars[i]^exps[i]
  static Polynomial monomial(std::vector<std::string> variables, Exponents exps, const Rational& c = 1);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_integral() const;
  std::optional<Rational> as_constant() const;
  Rational coefficient(const Exponents& exps) const;
  Rational coefficient_sum() const;
  int degree_in(const std::string& name) const;

  // Adds c * monomial; `exps` must match the variable count.
  void add_term(const Exponents& exps, const Rational& c);

  // Re-expresses over `variables`, which must contain every variable with a
  // non-zero exponent (DomainError otherwise).
  Polynomial with_variables(const std::vector<std::string>& variables) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  // Name-based: two polynomials are equal when they agree after unification.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Replaces the named variables; others stay symbolic.
  Polynomial substitute(const std::map<std::string, Polynomial>& values) const;
  // Every variable that occurs must be bound; DomainError otherwise.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  // Terms in canonical order: ascending total degree, then lexicographically
  // descending exponent vectors.
  std::vector<std::pair<Exponents, Rational>> ordered_terms() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;

  void extend_to(const std::vector<std::string>& vars);
};

// "0" for zero; factors joined by '*', terms by " + " or " - ".
std::string to_string(const Polynomial& p);
// {"variables": [...], "terms": [[[exps...], "p/q"], ...]}
nlohmann::ordered_json to_json(const Polynomial& p);

// Accepts the canonical text form and compact forms such as
// "u_2v_1^2v_2 + 2u_1" (underscores dropped, '*' optional). A variable is a
// letter followed by optional digits. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

}  // namespace treelab
