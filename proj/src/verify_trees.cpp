#include <map>
#include <set>

#include "treelab/bijections.hpp"
#include "treelab/distribution.hpp"
#include "treelab/enumerate.hpp"
#include "treelab/generating_functions.hpp"
#include "treelab/tree_stats.hpp"
#include "treelab/validate.hpp"
#include "verify_support.hpp"

namespace treelab {

namespace {

using detail::expect_equal;
using detail::fail_with;
using Kind = StatisticId::Kind;
using TreeCheck = std::function<std::optional<std::string>(const WeaklyIncreasingTree&, const Multiset&)>;

StatisticId stat(Kind k, int q = 0) { return StatisticId{k, q}; }

Polynomial var(const std::string& name) { return Polynomial::variable(name); }

std::string mismatch(const char* what, int expected, int got) {
  return std::string(what) + ": expected " + std::to_string(expected) + ", got " + std::to_string(got);
}

// Runs `check` on every tree of every multiset in scope; stops at the first
// multiset with a failing tree.
CheckResult per_tree(const CheckSpec& spec, const CheckRequest& req, const TreeCheck& check) {
  CheckResult r;
  const auto sets = multisets_in_scope(spec, req);
  r.scope = detail::multiset_scope(spec, req, sets.size());
  for (const auto& m : sets) {
    const auto family = enumerate_wit(m);
    auto failure = detail::first_failure(family, [&](const WeaklyIncreasingTree& t) { return check(t, m); }, req.jobs);
    if (failure) {
      r.counts += static_cast<std::int64_t>(failure->index) + 1;
      fail_with(r, render(family[failure->index]), failure->message);
      r.details["multiset"] = m.to_string();
      return r;
    }
    r.counts += static_cast<std::int64_t>(family.size());
  }
  return r;
}

std::optional<std::string> in_family(const WeaklyIncreasingTree& t, const Multiset& m, const char* map) {
  if (auto v = validate_wit(t, m)) return std::string(map) + " leaves T_M: " + describe(*v);
  return std::nullopt;
}

CheckResult check_thm12(const CheckSpec& spec, const CheckRequest& req) {
  return per_tree(spec, req, [](const WeaklyIncreasingTree& t, const Multiset& m) -> std::optional<std::string> {
    const auto p = Phi(t);
    if (auto bad = in_family(p, m, "Phi")) return bad;
    if (!(Phi(p) == t)) return "Phi is not involutive here";
    const auto a = wit_stats(t), b = wit_stats(p);
    if (b.sleaf != a.eleaf) return mismatch("sleaf(Phi T) vs eleaf(T)", a.eleaf, b.sleaf);
    if (b.eleaf != a.sleaf) return mismatch("eleaf(Phi T) vs sleaf(T)", a.sleaf, b.eleaf);
    if (b.yleaf != a.yint) return mismatch("yleaf(Phi T) vs yint(T)", a.yint, b.yleaf);
    if (b.yint != a.yleaf) return mismatch("yint(Phi T) vs yleaf(T)", a.yleaf, b.yint);
    return std::nullopt;
  });
}

CheckResult check_thm18(const CheckSpec& spec, const CheckRequest& req) {
  return per_tree(spec, req, [](const WeaklyIncreasingTree& t, const Multiset& m) -> std::optional<std::string> {
    const auto p = Psi(t);
    if (auto bad = in_family(p, m, "Psi")) return bad;
    if (!(Psi(p) == t)) return "Psi is not involutive here";
    const auto a = wit_stats(t), b = wit_stats(p);
    if (a.snuleaf != b.snuleaf) return mismatch("snuleaf", a.snuleaf, b.snuleaf);
    if (a.etleaf != b.etleaf) return mismatch("etleaf", a.etleaf, b.etleaf);
    if (a.syleaf != b.syleaf) return mismatch("syleaf", a.syleaf, b.syleaf);
    if (a.yerleaf != b.yerleaf) return mismatch("yerleaf", a.yerleaf, b.yerleaf);
    if (a.yint != b.yint) return mismatch("yint", a.yint, b.yint);
    if (b.suleaf != a.entleaf) return mismatch("suleaf(Psi T) vs entleaf(T)", a.entleaf, b.suleaf);
    if (b.entleaf != a.suleaf) return mismatch("entleaf(Psi T) vs suleaf(T)", a.suleaf, b.entleaf);
    return std::nullopt;
  });
}

CheckResult check_lem21(const CheckSpec& spec, const CheckRequest& req) {
  return per_tree(spec, req, [](const WeaklyIncreasingTree& t, const Multiset&) -> std::optional<std::string> {
    if (auto m = transport_check_leaf_kinds(t)) return describe(*m);
    return std::nullopt;
  });
}

CheckResult check_lem22(const CheckSpec& spec, const CheckRequest& req) {
  return per_tree(spec, req, [](const WeaklyIncreasingTree& t, const Multiset&) -> std::optional<std::string> {
    if (auto m = transport_check_refined(t)) return describe(*m);
    return std::nullopt;
  });
}

CheckResult check_cor24(const CheckSpec& spec, const CheckRequest& req) {
  CheckResult r = per_tree(spec, req, [](const WeaklyIncreasingTree& t, const Multiset& m) -> std::optional<std::string> {
    const auto a = wit_stats(t);
    if (a.oleaf < 1 || a.oleaf > m.cardinality() / 2) return std::nullopt;
    const auto u = parity_toggle(t);
    if (auto bad = in_family(u, m, "parity toggle")) return bad;
    const auto b = wit_stats(u);
    if (b.oleaf != a.oleaf) return mismatch("oleaf after toggle", a.oleaf, b.oleaf);
    if ((a.yleaf - b.yleaf) % 2 == 0) return "yleaf parity unchanged by the toggle";
    if (!(parity_toggle(u) == t)) return "toggle is not involutive here";
    return std::nullopt;
  });
  if (!r.pass) return r;
  // The involution already pairs the classes; the class sizes are compared
  // independently as well.
  Json sizes = Json::array();
  for (const auto& m : multisets_in_scope(spec, req)) {
    std::map<int, std::pair<int, int>> by_k;
    for (const auto& t : enumerate_wit(m)) {
      const auto s = wit_stats(t);
      auto& slot = by_k[s.oleaf];
      (s.yleaf % 2 == 0 ? slot.first : slot.second)++;
    }
    for (int k = 1; k <= m.cardinality() / 2; ++k) {
      const auto [even, odd] = by_k[k];
      if (even != odd) {
        fail_with(r, m.to_string(), "|P_e(M," + std::to_string(k) + ")| = " + std::to_string(even) +
                                        " but |P_o(M," + std::to_string(k) + ")| = " + std::to_string(odd));
        return r;
      }
      if (req.multiset || req.n) sizes.push_back({{"k", k}, {"even", even}, {"odd", odd}});
    }
  }
  if (!sizes.empty()) r.details["classes"] = sizes;
  return r;
}

CheckResult check_thm14(const CheckSpec& spec, const CheckRequest& req) {
  CheckResult r;
  const auto sets = multisets_in_scope(spec, req);
  r.scope = detail::multiset_scope(spec, req, sets.size());
  const std::vector<StatisticId> lhs_stats{stat(Kind::oleaf), stat(Kind::yleaf), stat(Kind::oint), stat(Kind::yint)};
  const std::vector<StatisticId> rhs_stats{stat(Kind::oleaf), stat(Kind::yleaf)};
  for (const auto& m : sets) {
    const auto family = enumerate_wit(m);
    const auto tips = enumerate_tip_augmented(m);
    r.counts += static_cast<std::int64_t>(family.size());
    const auto lhs = distribution_polynomial(family, lhs_stats, {"x1", "x2", "y1", "y2"}, req.jobs);
    const auto rhs = distribution_polynomial(tips, rhs_stats, {"a", "b"}, req.jobs)
                         .substitute({{"a", var("x1") * var("y1")}, {"b", var("x2") + var("y2")}});
    if (!expect_equal(r, lhs, rhs, m.to_string())) return r;
    if (req.multiset || req.n) r.details["distribution"] = to_string(lhs.with_variables({"x1", "x2", "y1", "y2"}));
  }
  return r;
}

CheckResult check_thm28(const CheckSpec& spec, const CheckRequest& req) {
  return per_tree(spec, req, [](const WeaklyIncreasingTree& t, const Multiset&) -> std::optional<std::string> {
    const auto pm = partner_map(t);
    if (!pm.is_permutation()) return "partner map is not a permutation";
    const auto h = Theta(t);
    for (int v = 0; v < static_cast<int>(t.size()); ++v) {
      const auto& e = pm.entries[static_cast<std::size_t>(v)];
      const int w = h.find_tag(t.node(e.partner).tag);
      if (w == kNoNode) return "partner of node " + std::to_string(v) + " lost its identity";
      const auto& hw = h.node(w);
      const int deg = static_cast<int>(hw.children.size());
      const bool odd = hw.depth % 2 == 1;
      const std::string at = "node " + std::to_string(v) + " (" + case_name(e.kind) + "): ";
      switch (e.kind) {
        case PartnerMap::Case::internal:
          if (!odd || deg != t.degree(v) - 1)
            return at + "partner should be odd-level of degree " + std::to_string(t.degree(v) - 1);
          break;
        case PartnerMap::Case::non_youngest_leaf:
          if (odd || deg != 0) return at + "partner should be an even-level leaf";
          break;
        case PartnerMap::Case::youngest_leaf:
          if (odd || deg != e.path_length)
            return at + "partner should be even-level internal of degree " + std::to_string(e.path_length);
          break;
      }
    }
    const auto a = wit_stats(t), b = wit_stats(h);
    if (a.oleaf != b.oleaf) return mismatch("oleaf(Theta T)", a.oleaf, b.oleaf);
    if (a.ystleaf != b.elint) return mismatch("elint(Theta T) vs ystleaf(T)", a.ystleaf, b.elint);
    return std::nullopt;
  });
}

CheckResult check_deutsch(const CheckSpec& spec, const CheckRequest& req) {
  return per_tree(spec, req, [](const WeaklyIncreasingTree& t, const Multiset& m) -> std::optional<std::string> {
    const auto h = Theta(t);
    if (auto bad = in_family(h, m, "Theta")) return bad;
    if (!(hat_recursive(t) == h)) return "Theta(T) = " + render(h) + " but the recursive hat gives " + render(hat_recursive(t));
    if (!(Theta_inv(h) == t)) return "Theta_inv(Theta(T)) != T";
    const auto a = wit_stats(t), b = wit_stats(h);
    for (int q = 1; q <= m.cardinality(); ++q)
      if (a.deg_at(q) != b.od_at(q - 1))
        return mismatch(("od_" + std::to_string(q - 1) + "(Theta T) vs deg_" + std::to_string(q) + "(T)").c_str(),
                        a.deg_at(q), b.od_at(q - 1));
    if (a.leaf != b.el) return mismatch("el(Theta T) vs leaf(T)", a.leaf, b.el);
    return std::nullopt;
  });
}

CheckResult check_count(const CheckSpec& spec, const CheckRequest& req) {
  CheckResult r;
  const auto sets = multisets_in_scope(spec, req);
  r.scope = detail::multiset_scope(spec, req, sets.size());
  for (const auto& m : sets) {
    const auto family = enumerate_wit(m);
    const auto binaries = enumerate_wibt(m);
    r.counts += static_cast<std::int64_t>(family.size());
    const Integer expected = count_wit(m);
    if (Integer(static_cast<long>(family.size())) != expected || Integer(static_cast<long>(binaries.size())) != expected) {
      fail_with(r, m.to_string(), "enumerated " + std::to_string(family.size()) + " trees and " +
                                      std::to_string(binaries.size()) + " binary trees, formula gives " + to_string(expected));
      return r;
    }
    std::set<std::string> seen;
    for (const auto& t : family) {
      if (auto v = validate_wit(t, m)) {
        fail_with(r, render(t), "enumerated tree is invalid: " + describe(*v));
        return r;
      }
      if (!seen.insert(render(t)).second) {
        fail_with(r, render(t), "tree enumerated twice");
        return r;
      }
    }
    if (req.multiset || req.n) r.details["count"] = to_string(expected);
  }
  return r;
}

int single_child_count(const LabeledBinaryTree& b) {
  int c = 0;
  for (int i = 0; i < static_cast<int>(b.size()); ++i) c += b.child_count(i) == 1;
  return c;
}

CheckResult check_orbits(const CheckSpec& spec, const CheckRequest& req) {
  CheckResult r;
  const auto sets = multisets_in_scope(spec, req);
  r.scope = detail::multiset_scope(spec, req, sets.size());
  for (const auto& m : sets) {
    const auto family = enumerate_wibt(m);
    r.counts += static_cast<std::int64_t>(family.size());
    std::map<std::string, std::vector<std::size_t>> orbits;
    std::map<std::string, LabeledBinaryTree> reps;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto c = orbit_canonical(family[i]);
      const auto key = render(c);
      orbits[key].push_back(i);
      reps.emplace(key, c);
    }
    Polynomial full, by_orbit;
    for (const auto& b : family) {
      const auto s = binary_stats(b);
      full += Polynomial::monomial({"x1", "y1", "x2", "y2"}, {s.leaf_count, s.leaf_count, s.only_left, s.only_right});
    }
    for (const auto& [key, members] : orbits) {
      const auto& rep = reps.at(key);
      if (binary_stats(rep).only_right != 0) {
        fail_with(r, key, "orbit representative has an only-right node");
        return r;
      }
      // Regenerate the orbit from the representative.
      std::vector<int> positions;
      for (int i = 0; i < static_cast<int>(rep.size()); ++i)
        if (rep.child_count(i) == 1) positions.push_back(i + 1);
      std::set<std::string> generated;
      for (unsigned mask = 0; mask < (1u << positions.size()); ++mask) {
        LabeledBinaryTree g = rep;
        for (std::size_t j = 0; j < positions.size(); ++j)
          if (mask & (1u << j)) g = varphi(g, positions[j]);
        generated.insert(render(g));
      }
      std::set<std::string> actual;
      int reps_without_right = 0;
      for (auto i : members) {
        actual.insert(render(family[i]));
        reps_without_right += binary_stats(family[i]).only_right == 0;
      }
      if (generated != actual || members.size() != (std::size_t{1} << single_child_count(rep)) || reps_without_right != 1) {
        fail_with(r, key, "orbit of size " + std::to_string(members.size()) + " does not match 2^" +
                              std::to_string(single_child_count(rep)) + " generated members with one only-right-free tree");
        return r;
      }
      const auto s = binary_stats(rep);
      by_orbit += (var("x1") * var("y1")).pow(static_cast<unsigned>(s.leaf_count)) *
                  (var("x2") + var("y2")).pow(static_cast<unsigned>(s.only_left));
    }
    if (!expect_equal(r, full, by_orbit, m.to_string())) return r;
    if (req.multiset || req.n) r.details["orbits"] = orbits.size();
  }
  return r;
}

// Plane-tree checks: n ranges over [min_size, N].

template <class PerN>
CheckResult per_plane_n(const CheckSpec& spec, const CheckRequest& req, PerN&& body) {
  CheckResult r;
  const int top = upper_in_scope(spec, req);
  r.scope = detail::range_scope("n", spec.min_size, top);
  for (int n = spec.min_size; n <= top && r.pass; ++n) body(n, r);
  return r;
}

CheckResult check_cor15(const CheckSpec& spec, const CheckRequest& req) {
  return per_plane_n(spec, req, [&](int n, CheckResult& r) {
    const auto family = enumerate_plane_trees(n);
    r.counts += static_cast<std::int64_t>(family.size());
    const auto lhs = distribution_polynomial(
        family, {stat(Kind::oleaf), stat(Kind::yleaf), stat(Kind::oint), stat(Kind::yint)}, {"x1", "x2", "y1", "y2"}, req.jobs);
    const auto rhs = motzkin_poly(n - 1).substitute({{"u", var("x1") * var("y1")}, {"v", var("x2") + var("y2")}});
    expect_equal(r, lhs, rhs, "n=" + std::to_string(n));
  });
}

CheckResult check_sym17(const CheckSpec& spec, const CheckRequest& req) {
  return per_plane_n(spec, req, [&](int n, CheckResult& r) {
    const auto tips = enumerate_tip_augmented(Multiset::plane(n + 1));
    r.counts += static_cast<std::int64_t>(tips.size());
    const auto mn = distribution_polynomial(
        tips, {stat(Kind::sleaf), stat(Kind::etleaf), stat(Kind::entleaf), stat(Kind::yerleaf), stat(Kind::syleaf)},
        {"u1", "u2", "u3", "v1", "v2"}, req.jobs);
    const auto swapped = mn.substitute({{"u1", var("u3")}, {"u3", var("u1")}});
    expect_equal(r, mn, swapped, "n=" + std::to_string(n));
    if (r.pass && req.n && n == *req.n) r.details["refinedMotzkin"] = to_string(mn.with_variables({"u1", "u2", "u3", "v1", "v2"}));
  });
}

Integer oleaf_count_formula(int n, int k) {
  if (n - 2 * k + 1 < 0 || k < 1) return 0;
  return (Integer(1) << static_cast<mp_bitcnt_t>(n - 2 * k + 1)) * binomial(n - 1, 2 * k - 2) *
         catalan(static_cast<unsigned long>(k - 1));
}

CheckResult check_cor26(const CheckSpec& spec, const CheckRequest& req) {
  return per_plane_n(spec, req, [&](int n, CheckResult& r) {
    const auto family = enumerate_plane_trees(n);
    r.counts += static_cast<std::int64_t>(family.size());
    std::map<std::pair<int, int>, long> joint;
    std::map<int, long> by_k;
    for (const auto& t : family) {
      const auto s = wit_stats(t);
      ++joint[{s.oleaf, s.yleaf}];
      ++by_k[s.oleaf];
    }
    for (int k = 0; k <= n + 1; ++k) {
      for (int l = 0; l <= n + 1; ++l) {
        const Integer formula = refined_narayana_count(n, k, l);
        const long seen = joint.count({k, l}) ? joint[{k, l}] : 0;
        if (formula != seen) {
          fail_with(r, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l),
                    "N_{n,k,l} formula gives " + to_string(formula) + ", enumeration " + std::to_string(seen));
          return;
        }
      }
      const Integer formula = oleaf_count_formula(n, k);
      const long seen = by_k.count(k) ? by_k[k] : 0;
      if (formula != seen) {
        fail_with(r, "n=" + std::to_string(n) + " k=" + std::to_string(k),
                  "|{oleaf=k}| formula gives " + to_string(formula) + ", enumeration " + std::to_string(seen));
        return;
      }
    }
  });
}

// Reference tables for N_2..N_5 in compact notation.
const char* const kNarayanaTables[] = {
    "u_1+u_2v_2",
    "u_1+u_1u_3+u_1v_2+u_2v_2+u_2v_1v_2",
    "u_2v_1^2v_2+u_1u_2v_2+u_1u_3v_1+u_1v_1v_2+u_2u_3v_2+u_2v_1v_2+u_2v_2^2+u_1^2+2u_1u_3+2u_1v_2+u_2v_2+u_1",
    "u_2v_1^3v_2+2u_1u_2v_1v_2+u_1u_3v_1^2+u_1v_1^2v_2+u_2^2v_2^2+2u_2u_3v_1v_2+u_2v_1^2v_2"
    "+2u_2v_1v_2^2+u_1^2u_3+u_1^2v_1+u_1^2v_2+4u_1u_2v_2+u_1u_3^2+2u_1u_3v_1+2u_1u_3v_2"
    "+2u_1v_1v_5+u_1v_2^2+2u_2u_3v_2+u_2v_1v_2+2u_2v_2+3u_1^2+3u_1u_3+3u_1v_2+u_2v_2+u_1",
};

CheckResult check_thm27(const CheckSpec& spec, const CheckRequest& req) {
  CheckResult r;
  const int K = upper_in_scope(spec, req);
  r.scope = detail::range_scope("order", 1, K);
  const std::vector<std::string> vars{"u1", "u2", "u3", "v1", "v2"};
  const auto closed = narayana_gf_closed(K);
  const auto fixed = narayana_gf_fixedpoint(K);
  const std::map<std::string, Polynomial> ones{{"u1", Polynomial::constant(1)}, {"u2", Polynomial::constant(1)},
                                               {"u3", Polynomial::constant(1)}, {"v1", Polynomial::constant(1)},
                                               {"v2", Polynomial::constant(1)}};
  if (!closed[0].is_zero() || !fixed[0].is_zero()) fail_with(r, "n=0", "constant term of N(t) is not zero");
  for (int n = 1; n <= K && r.pass; ++n) {
    const auto family = enumerate_plane_trees(n);
    r.counts += static_cast<std::int64_t>(family.size());
    const auto enumerated = distribution_polynomial(
        family, {stat(Kind::sleaf), stat(Kind::etleaf), stat(Kind::entleaf), stat(Kind::yerleaf), stat(Kind::syleaf)}, vars,
        req.jobs);
    const std::string where = "n=" + std::to_string(n);
    if (!expect_equal(r, closed[n], enumerated, where + " closed form vs enumeration")) break;
    if (!expect_equal(r, fixed[n], enumerated, where + " fixed point vs enumeration")) break;
    const auto at_ones = closed[n].substitute(ones).as_constant();
    if (!at_ones || *at_ones != Rational(catalan(static_cast<unsigned long>(n)))) {
      fail_with(r, where, "all-ones specialization is not the Catalan number");
      break;
    }
    if (n >= 2 && n <= 5) {
      const auto table = parse_polynomial(kNarayanaTables[n - 2]);
      const std::string key = "N" + std::to_string(n);
      if (table == enumerated) {
        r.details["tables"][key] = "match";
      } else if (n == 5) {
        // The five-variable table is recorded, not asserted: v5 is read as v2
        // and any remaining monomials are listed against the computed ones.
        const auto corrected = table.substitute({{"v5", var("v2")}}).with_variables(vars);
        Json diff = Json::array();
        for (const auto& [exps, c] : (enumerated - corrected).ordered_terms())
          diff.push_back({{"monomial", to_string(Polynomial::monomial(vars, exps))}, {"computedMinusReference", to_string(c)}});
        r.details["tables"][key] = corrected == enumerated ? "match after v5 -> v2" : "differs after v5 -> v2";
        r.details["tables"]["N5Residual"] = diff;
      } else {
        r.details["tables"][key] = "differs from enumeration";
        fail_with(r, where, "table for " + key + " differs from enumeration");
      }
    }
  }
  return r;
}

CheckResult check_cor29(const CheckSpec& spec, const CheckRequest& req) {
  CheckResult r = per_plane_n(spec, req, [&](int n, CheckResult& r) {
    const auto family = enumerate_plane_trees(n);
    r.counts += static_cast<std::int64_t>(family.size());
    const auto joint = distribution_polynomial(family, {stat(Kind::oleaf), stat(Kind::elint)}, {"x", "y"}, req.jobs);
    const auto swapped = joint.substitute({{"x", var("y")}, {"y", var("x")}});
    if (!expect_equal(r, joint, swapped, "n=" + std::to_string(n) + " (oleaf, elint) symmetry")) return;
    std::map<int, long> by_k;
    for (const auto& t : family) ++by_k[wit_stats(t).elint];
    for (int k = 0; k <= n + 1; ++k) {
      const Integer formula = oleaf_count_formula(n, k);
      const long seen = by_k.count(k) ? by_k[k] : 0;
      if (formula != seen) {
        fail_with(r, "n=" + std::to_string(n) + " k=" + std::to_string(k),
                  "|{elint=k}| formula gives " + to_string(formula) + ", enumeration " + std::to_string(seen));
        return;
      }
    }
  });
  if (!r.pass) return r;
  // Increasing trees: (ystleaf, elint) is not symmetric and oleaf, elint are
  // not equidistributed for some n; both are scanned for n = 2..6.
  Json increasing = Json::array();
  std::optional<int> first_asymmetric, first_unequal;
  for (int n = 2; n <= std::min(6, max_scope()); ++n) {
    const auto inc = enumerate_wit(Multiset::distinct(n));
    r.counts += static_cast<std::int64_t>(inc.size());
    const auto pair = distribution_polynomial(inc, {stat(Kind::ystleaf), stat(Kind::elint)}, {"x", "y"}, req.jobs);
    const bool symmetric = pair == pair.substitute({{"x", var("y")}, {"y", var("x")}});
    const auto oleaf = distribution_polynomial(inc, {stat(Kind::oleaf)}, {"x"}, req.jobs);
    const auto elint = distribution_polynomial(inc, {stat(Kind::elint)}, {"x"}, req.jobs);
    const bool equal = oleaf == elint;
    if (!symmetric && !first_asymmetric) first_asymmetric = n;
    if (!equal && !first_unequal) first_unequal = n;
    increasing.push_back({{"n", n},
                          {"ystleafElint", to_string(pair.with_variables({"x", "y"}))},
                          {"symmetric", symmetric},
                          {"oleaf", to_string(oleaf)},
                          {"elint", to_string(elint)},
                          {"equidistributed", equal}});
  }
  r.details["increasing"] = increasing;
  r.details["firstAsymmetricN"] = first_asymmetric ? Json(*first_asymmetric) : Json(nullptr);
  r.details["firstNonEquidistributedN"] = first_unequal ? Json(*first_unequal) : Json(nullptr);
  if (!first_asymmetric) fail_with(r, "increasing trees", "(ystleaf, elint) is symmetric for every n scanned");
  else if (!first_unequal) fail_with(r, "increasing trees", "oleaf and elint are equidistributed for every n scanned");
  return r;
}

CheckResult check_cor210(const CheckSpec& spec, const CheckRequest& req) {
  return per_plane_n(spec, req, [&](int n, CheckResult& r) {
    const auto family = enumerate_plane_trees(n);
    r.counts += static_cast<std::int64_t>(family.size());
    const auto lhs = distribution_polynomial(family, {stat(Kind::oleaf), stat(Kind::yleaf)}, {"x", "y"}, req.jobs);
    const auto rhs = distribution_polynomial(family, {stat(Kind::elint), stat(Kind::elleaf)}, {"x", "y"}, req.jobs);
    expect_equal(r, lhs, rhs, "n=" + std::to_string(n));
  });
}

}  // namespace

void register_tree_checks(std::vector<CheckSpec>& out) {
  out.push_back({"thm1.2", ScopeKind::multiset, 2, 7, "Phi is an involution exchanging (sleaf,eleaf) and (yleaf,yint)", check_thm12});
  out.push_back({"thm1.4", ScopeKind::multiset, 1, 7, "(oleaf,yleaf,oint,yint) over T_M via tip-augmented trees", check_thm14});
  out.push_back({"cor1.5", ScopeKind::plane, 1, 10, "plane-tree distribution equals M_{n-1}(x1 y1, x2 + y2)", check_cor15});
  out.push_back({"sym1.7", ScopeKind::plane, 2, 9, "refined Motzkin polynomial symmetric in u1, u3", check_sym17});
  out.push_back({"thm1.8", ScopeKind::multiset, 2, 7, "Psi is an involution exchanging suleaf and entleaf", check_thm18});
  out.push_back({"lem2.1", ScopeKind::multiset, 2, 7, "leaf kinds transported by rho", check_lem21});
  out.push_back({"lem2.2", ScopeKind::multiset, 2, 7, "refined leaf kinds transported by rho", check_lem22});
  out.push_back({"cor2.4", ScopeKind::multiset, 2, 7, "parity toggle pairs even and odd yleaf classes", check_cor24});
  out.push_back({"cor2.6", ScopeKind::plane, 1, 10, "refined Narayana numbers and oleaf counts", check_cor26});
  out.push_back({"thm2.7", ScopeKind::order, 1, 8, "closed form, fixed point and enumeration of N(t)", check_thm27});
  out.push_back({"thm2.8", ScopeKind::multiset, 1, 7, "partner-map claims for Theta", check_thm28});
  out.push_back({"deutsch-eq", ScopeKind::multiset, 1, 7, "Theta equals the recursive hat; degree and level laws", check_deutsch});
  out.push_back({"cor2.9", ScopeKind::plane, 1, 9, "(oleaf, elint) symmetric on plane trees", check_cor29});
  out.push_back({"cor2.10", ScopeKind::plane, 1, 9, "(oleaf, yleaf) ~ (elint, elleaf) on plane trees", check_cor210});
  out.push_back({"count-formula", ScopeKind::multiset, 1, 7, "|T_M| equals the product formula", check_count});
  out.push_back({"orbit-structure", ScopeKind::multiset, 1, 6, "Z_2^m orbits on B_M", check_orbits});
}

}  // namespace treelab
