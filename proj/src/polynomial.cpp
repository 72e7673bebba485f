#include "treelab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "treelab/errors.hpp"

namespace treelab {

namespace {

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

int total_degree(const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw DomainError("duplicate variable " + vars_[i]);
}

Polynomial Polynomial::constant(const Rational& c, std::vector<std::string> variables) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const std::string& name, std::vector<std::string> variables) {
  if (std::find(variables.begin(), variables.end(), name) == variables.end()) variables.push_back(name);
  Polynomial p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[static_cast<std::size_t>(std::find(p.vars_.begin(), p.vars_.end(), name) - p.vars_.begin())] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponents exps, const Rational& c) {
  Polynomial p(std::move(variables));
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0) return terms_.begin()->second;
  return std::nullopt;
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

int Polynomial::degree_in(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return 0;
  const auto k = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != vars_.size()) throw DomainError("exponent vector length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::extend_to(const std::vector<std::string>& vars) {
  if (vars == vars_) return;
  *this = with_variables(vars);
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& variables) const {
  Polynomial out(variables);
  std::vector<int> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it != variables.end()) where[i] = static_cast<int>(it - variables.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents f(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw DomainError("variable " + vars_[i] + " is not in the target variable list");
      f[static_cast<std::size_t>(where[i])] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  const auto vars = merged(vars_, o.vars_);
  extend_to(vars);
  const Polynomial& rhs = o.vars_ == vars ? o : o.with_variables(vars);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  const auto vars = merged(vars_, o.vars_);
  const Polynomial a = with_variables(vars);
  const Polynomial b = o.with_variables(vars);
  Polynomial out(vars);
  Exponents e(vars.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1, vars_);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  const auto vars = merged(a.vars_, b.vars_);
  return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& values) const {
  std::vector<std::string> kept;
  for (const auto& v : vars_)
    if (!values.count(v)) kept.push_back(v);
  Polynomial out(kept);
  std::vector<std::vector<Polynomial>> powers(vars_.size());
  for (const auto& [e, c] : terms_) {
    Polynomial term(kept);
    Exponents rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (!values.count(vars_[i])) rest.push_back(e[i]);
    term.add_term(rest, c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = values.find(vars_[i]);
      if (it == values.end() || e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(1));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * it->second);
      term *= cache[static_cast<std::size_t>(e[i])];
    }
    out += term;
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(vars_[i]);
      if (it == values.end()) throw DomainError("no value for variable " + vars_[i]);
      for (int k = 0; k < e[i]; ++k) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

std::vector<std::pair<Polynomial::Exponents, Rational>> Polynomial::ordered_terms() const {
  std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.ordered_terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? p.variables()[i] : p.variables()[i] + "^" + std::to_string(e[i]));
    }
    if (mag != 1 || factors.empty()) factors.insert(factors.begin(), to_string(mag));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += '*';
      out += factors[i];
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const Polynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.ordered_terms()) terms.push_back({e, to_string(c)});
  nlohmann::ordered_json out;
  out["variables"] = p.variables();
  out["terms"] = std::move(terms);
  return out;
}

namespace {

struct PolyCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= text.size();
  }
  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }
  unsigned long number() {
    skip();
    const std::size_t start = pos;
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
      ++pos;
      if (v > 1'000'000'000UL) throw ParseError("number too large", start);
    }
    if (pos == start) throw ParseError("expected a number", start);
    return v;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  PolyCursor cur{text};
  Polynomial out;
  if (cur.at_end()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (!cur.at_end()) {
    int sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
      sign = cur.peek() == '-' ? -1 : 1;
      ++cur.pos;
    } else if (!first) {
      throw ParseError(std::string("expected '+' or '-', got '") + cur.peek() + "'", cur.pos);
    }
    first = false;
    Rational coef = sign;
    bool any_factor = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      Rational c(Integer(cur.number()));
      if (cur.peek() == '/') {
        ++cur.pos;
        const std::size_t at = cur.pos;
        const auto d = cur.number();
        if (d == 0) throw ParseError("zero denominator", at);
        c /= Rational(Integer(d));
      }
      coef *= c;
      any_factor = true;
      if (cur.peek() == '*') ++cur.pos;
    }
    Polynomial term = Polynomial::constant(coef);
    while (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
      std::string name(1, cur.text[cur.pos++]);
      while (cur.pos < cur.text.size() && (std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])) || cur.text[cur.pos] == '_')) {
        if (cur.text[cur.pos] != '_') name += cur.text[cur.pos];
        ++cur.pos;
      }
      unsigned long e = 1;
      if (cur.peek() == '^') {
        ++cur.pos;
        const bool braced = cur.peek() == '{';
        if (braced) ++cur.pos;
        e = cur.number();
        if (braced) {
          if (cur.peek() != '}') throw ParseError("expected '}'", cur.pos);
          ++cur.pos;
        }
      }
      term *= Polynomial::variable(name).pow(static_cast<unsigned>(e));
      any_factor = true;
      if (cur.peek() == '*') ++cur.pos;
    }
    if (!any_factor) throw ParseError("expected a term", cur.pos);
    out += term;
  }
  return out;
}

}  // namespace treelab
