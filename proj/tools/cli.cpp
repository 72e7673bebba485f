#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>
#include <charconv>

#include "treelab/bijections.hpp"
#include "treelab/distribution.hpp"
#include "treelab/encoding.hpp"
#include "treelab/enumerate.hpp"
#include "treelab/errors.hpp"
#include "treelab/generating_functions.hpp"
#include "treelab/permutation.hpp"
#include "treelab/tree_stats.hpp"
#include "treelab/validate.hpp"
#include "treelab/verify.hpp"

namespace treelab {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Globals {
  std::string format = "auto";
  int jobs = 0;
  std::optional<int> order;
  bool seedless = false;
  bool timing = false;
};

Format resolve_format(const Globals& g, Format fallback) {
  if (g.format == "text") return Format::text;
  if (g.format == "json") return Format::json;
  if (g.format == "csv") return Format::csv;
  return fallback;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct FamilyArgs {
  std::optional<std::string> multiset;
  std::optional<int> n;
};

Multiset family_multiset(const FamilyArgs& f) {
  if (f.multiset && f.n) throw UsageError("give exactly one of --multiset and --n");
  if (f.multiset) return parse_multiset(*f.multiset);
  if (f.n) {
    if (*f.n < 1) throw UsageError("--n must be at least 1");
    return Multiset::plane(*f.n);
  }
  throw UsageError("one of --multiset or --n is required");
}

void check_cap(int size) {
  if (size > max_scope())
    throw UsageError("size " + std::to_string(size) + " exceeds the scope limit " + std::to_string(max_scope()) +
                     " (raise TREELAB_MAX_SCOPE)");
}

// ---- count ----

int cmd_count(const Globals& g, const FamilyArgs& f, std::ostream& out) {
  const auto m = family_multiset(f);
  const auto c = count_wit(m);
  if (resolve_format(g, Format::text) == Format::json) {
    Json j;
    j["multiset"] = m.to_string();
    j["count"] = to_string(c);
    out << j.dump() << '\n';
  } else {
    out << to_string(c) << '\n';
  }
  return kExitOk;
}

// ---- enumerate ----

struct EnumerateArgs {
  FamilyArgs family;
  bool binary = false;
  bool tip_augmented = false;
  std::optional<int> perms;
  bool avoid312 = false;
};

int cmd_enumerate(const Globals& g, const EnumerateArgs& a, std::ostream& out) {
  std::vector<std::string> items;
  if (a.perms) {
    if (a.family.multiset || a.family.n || a.binary || a.tip_augmented)
      throw UsageError("--perms cannot be combined with tree options");
    if (*a.perms < 1) throw UsageError("--perms must be at least 1");
    check_cap(*a.perms);
    const auto family = a.avoid312 ? enumerate_avoiding_312(*a.perms) : enumerate_permutations(*a.perms);
    for (const auto& p : family) items.push_back(render(p));
  } else {
    if (a.avoid312) throw UsageError("--avoid-312 needs --perms");
    if (a.binary && a.tip_augmented) throw UsageError("--binary and --tip-augmented are exclusive");
    const auto m = family_multiset(a.family);
    check_cap(m.cardinality());
    if (a.binary) {
      for (const auto& b : enumerate_wibt(m)) items.push_back(render(b));
    } else {
      const auto family = a.tip_augmented ? enumerate_tip_augmented(m) : enumerate_wit(m);
      for (const auto& t : family) items.push_back(render(t));
    }
  }
  if (resolve_format(g, Format::text) == Format::json) {
    out << Json(items).dump() << '\n';
  } else {
    for (const auto& s : items) out << s << '\n';
  }
  return kExitOk;
}

// ---- map ----

enum class Domain { wit, binary, perm };

using Value = std::variant<WeaklyIncreasingTree, LabeledBinaryTree, Permutation>;

Value parse_value(Domain d, const std::string& text) {
  switch (d) {
    case Domain::wit: return parse_wit(text);
    case Domain::binary: return parse_binary(text);
    case Domain::perm: return parse_permutation(text);
  }
  throw UsageError("bad domain");
}

std::string render_value(const Value& v) {
  return std::visit([](const auto& x) { return render(x); }, v);
}

struct MapSpec {
  Domain domain;
  std::function<Value(const Value&, int)> apply;  // int = node parameter, -1 when absent
  bool needs_node = false;
};

template <class T>
const T& as(const Value& v) {
  return std::get<T>(v);
}

const std::map<std::string, MapSpec>& map_table() {
  using W = WeaklyIncreasingTree;
  using B = LabeledBinaryTree;
  using P = Permutation;
  static const std::map<std::string, MapSpec> table{
      {"rho", {Domain::wit, [](const Value& v, int) -> Value { return rho(as<W>(v)); }}},
      {"rho_inv", {Domain::binary, [](const Value& v, int) -> Value { return rho_inv(as<B>(v)); }}},
      {"phi_at", {Domain::binary, [](const Value& v, int i) -> Value { return switch_at(as<B>(v), NodeRef{i}); }, true}},
      {"mirror", {Domain::binary, [](const Value& v, int) -> Value { return mirror(as<B>(v)); }}},
      {"Phi", {Domain::wit, [](const Value& v, int) -> Value { return Phi(as<W>(v)); }}},
      {"psi", {Domain::binary, [](const Value& v, int) -> Value { return psi(as<B>(v)); }}},
      {"Psi", {Domain::wit, [](const Value& v, int) -> Value { return Psi(as<W>(v)); }}},
      {"varphi", {Domain::binary, [](const Value& v, int i) -> Value { return varphi(as<B>(v), i); }, true}},
      {"orbit_canonical", {Domain::binary, [](const Value& v, int) -> Value { return orbit_canonical(as<B>(v)); }}},
      {"theta", {Domain::binary, [](const Value& v, int) -> Value { return theta(as<B>(v)); }}},
      {"theta_inv", {Domain::binary, [](const Value& v, int) -> Value { return theta_inv(as<B>(v)); }}},
      {"Theta", {Domain::wit, [](const Value& v, int) -> Value { return Theta(as<W>(v)); }}},
      {"Theta_inv", {Domain::wit, [](const Value& v, int) -> Value { return Theta_inv(as<W>(v)); }}},
      {"hat", {Domain::wit, [](const Value& v, int) -> Value { return hat_recursive(as<W>(v)); }}},
      {"parity_toggle", {Domain::wit, [](const Value& v, int) -> Value { return parity_toggle(as<W>(v)); }}},
      {"lambda", {Domain::perm, [](const Value& v, int) -> Value { return lambda_map(as<P>(v).word()); }}},
      {"lambda_inv", {Domain::binary, [](const Value& v, int) -> Value { return Permutation(lambda_inv(as<B>(v))); }}},
      {"Lambda", {Domain::perm, [](const Value& v, int) -> Value { return Lambda(as<P>(v)); }}},
      {"Upsilon", {Domain::perm, [](const Value& v, int) -> Value { return Upsilon(as<P>(v)); }}},
  };
  return table;
}

std::string map_names() {
  std::string s;
  for (const auto& [name, spec] : map_table()) s += (s.empty() ? "" : ", ") + name + (spec.needs_node ? ":<i>" : "");
  return s + ", partner_map";
}

int parse_node_suffix(const std::string& text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) throw UsageError("bad node index '" + text + "'");
  return v;
}

struct MapArgs {
  std::string name;
  std::string input;
  std::optional<int> node;
};

int cmd_partner_map(const Globals& g, const MapArgs& a, std::ostream& out) {
  const auto t = parse_wit(a.input);
  const auto pm = partner_map(t);
  if (resolve_format(g, Format::text) == Format::json) {
    Json rows = Json::array();
    for (std::size_t v = 0; v < pm.entries.size(); ++v) {
      const auto& e = pm.entries[v];
      Json row;
      row["node"] = v;
      row["partner"] = e.partner;
      row["case"] = case_name(e.kind);
      if (e.kind == PartnerMap::Case::youngest_leaf) row["k"] = e.path_length;
      rows.push_back(row);
    }
    Json j;
    j["map"] = "partner_map";
    j["input"] = render(t);
    j["entries"] = rows;
    out << j.dump() << '\n';
  } else {
    for (std::size_t v = 0; v < pm.entries.size(); ++v) {
      const auto& e = pm.entries[v];
      out << v << " -> " << e.partner << ' ' << case_name(e.kind);
      if (e.kind == PartnerMap::Case::youngest_leaf) out << " k=" << e.path_length;
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_map(const Globals& g, const MapArgs& a, std::ostream& out) {
  std::string name = a.name;
  std::optional<int> node = a.node;
  if (const auto colon = name.find(':'); colon != std::string::npos) {
    if (node) throw UsageError("give the node either as " + name + " or with --node, not both");
    node = parse_node_suffix(name.substr(colon + 1));
    name = name.substr(0, colon);
  }
  if (name == "partner_map") return cmd_partner_map(g, a, out);
  const auto it = map_table().find(name);
  if (it == map_table().end()) throw UsageError("unknown map '" + a.name + "'; valid maps: " + map_names());
  const auto& spec = it->second;
  if (spec.needs_node && !node) throw UsageError("map " + name + " needs a node (" + name + ":<i> or --node)");
  if (!spec.needs_node && node) throw UsageError("map " + name + " takes no node");
  const auto input = parse_value(spec.domain, a.input);
  const auto image = spec.apply(input, node.value_or(-1));
  const auto text = render_value(image);
  if (resolve_format(g, Format::text) == Format::json) {
    Json j;
    j["map"] = a.name;
    j["input"] = render_value(input);
    j["output"] = text;
    out << j.dump() << '\n';
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

// ---- table ----

struct TableArgs {
  FamilyArgs family;
  std::optional<int> perms;
  std::string stats;
  std::string vars;
  bool tip_augmented = false;
};

void print_polynomial(const Globals& g, const Polynomial& p, Json meta, std::ostream& out) {
  switch (resolve_format(g, Format::text)) {
    case Format::text:
      out << to_string(p) << '\n';
      break;
    case Format::csv:
      for (const auto& [exps, c] : p.ordered_terms()) {
        for (int e : exps) out << e << ',';
        out << to_string(c) << '\n';
      }
      break;
    case Format::json: {
      meta["polynomial"] = to_string(p);
      meta["terms"] = to_json(p)["terms"];
      out << meta.dump() << '\n';
      break;
    }
  }
}

int cmd_table(const Globals& g, const TableArgs& a, std::ostream& out) {
  const auto names = split_list(a.stats);
  if (names.empty()) throw UsageError("--stats needs at least one statistic");
  auto vars = split_list(a.vars);
  if (!vars.empty() && vars.size() != names.size()) throw UsageError("--vars must list one variable per statistic");
  Json meta;
  meta["stats"] = names;
  Polynomial p;
  if (a.perms) {
    if (a.family.multiset || a.family.n || a.tip_augmented) throw UsageError("--perms cannot be combined with tree options");
    if (*a.perms < 1) throw UsageError("--perms must be at least 1");
    check_cap(*a.perms);
    for (const auto& s : names) perm_statistic(PermStatVector{}, s);  // rejects unknown names
    if (vars.empty()) vars = names;
    const int n = *a.perms;
    auto exps = [&names](const std::vector<int>& w) {
      const auto s = perm_stats(Permutation(w));
      std::vector<int> e;
      e.reserve(names.size());
      for (const auto& name : names) e.push_back(perm_statistic(s, name));
      return e;
    };
    const auto counts = g.jobs == 1 ? count_permutations_serial(n, exps) : count_permutations_parallel(n, exps, g.jobs);
    p = counts_to_polynomial(counts, vars);
    meta["family"] = "S_" + std::to_string(n);
  } else {
    std::vector<StatisticId> ids;
    for (const auto& s : names) ids.push_back(parse_statistic(s));
    if (vars.empty())
      for (const auto& id : ids) vars.push_back(default_variable(id));
    const auto m = family_multiset(a.family);
    check_cap(m.cardinality());
    const auto family = a.tip_augmented ? enumerate_tip_augmented(m) : enumerate_wit(m);
    p = distribution_polynomial(family, ids, vars, g.jobs);
    meta["family"] = std::string(a.tip_augmented ? "A:" : "T:") + m.to_string();
  }
  meta["variables"] = vars;
  print_polynomial(g, p, meta, out);
  return kExitOk;
}

// ---- series ----

struct SeriesArgs {
  std::string which;
  std::string x = "1", y = "4", z = "6";
};

int cmd_series(const Globals& g, const SeriesArgs& a, std::ostream& out) {
  const bool brute = a.which == "riccati" || a.which == "riccati-residual";
  const int order = g.order.value_or(brute ? 8 : 10);
  if (order < 1) throw UsageError("--order must be at least 1");
  if (order > 2 * max_scope()) throw UsageError("--order exceeds the limit " + std::to_string(2 * max_scope()));
  if (brute && order > max_scope()) throw UsageError("--order exceeds the brute-force limit " + std::to_string(max_scope()));
  std::optional<TruncatedSeries> s;
  if (a.which == "narayana") s = narayana_gf_closed(order);
  else if (a.which == "narayana-fixedpoint") s = narayana_gf_fixedpoint(order);
  else if (a.which == "riccati") s = eulerian_egf(order, g.jobs);
  else if (a.which == "riccati-residual") s = riccati_residual(order, g.jobs);
  else if (a.which == "pk1") s = pk1_egf_closed(order);
  else if (a.which == "elizalde-noy") s = elizalde_noy_egf(order);
  else if (a.which == "carlitz")
    s = carlitz_scoville_series(parse_rational(a.x), parse_rational(a.y), parse_rational(a.z), order);
  else
    throw UsageError("unknown series '" + a.which +
                     "'; valid: narayana, narayana-fixedpoint, riccati, riccati-residual, pk1, elizalde-noy, carlitz");
  switch (resolve_format(g, Format::text)) {
    case Format::text:
      out << to_string(*s);
      break;
    case Format::csv:
      for (int i = 0; i <= s->order(); ++i) out << i << ",\"" << to_string((*s)[i]) << "\"\n";
      break;
    case Format::json: {
      Json j;
      j["which"] = a.which;
      j["order"] = s->order();
      Json cs = Json::array();
      for (int i = 0; i <= s->order(); ++i) cs.push_back(to_string((*s)[i]));
      j["coefficients"] = cs;
      out << j.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  std::optional<std::string> check;
  bool all = false;
  bool list = false;
  std::optional<std::string> multiset;
  std::optional<int> n;
  std::string x = "1", y = "4", z = "6";
};

void print_report(const Globals& g, const CheckSpec& spec, const CheckResult& r, std::optional<double> ms, std::ostream& out) {
  if (resolve_format(g, Format::json) == Format::text) {
    out << spec.id << ": " << (r.pass ? "pass" : "fail") << " (" << r.counts << " objects)";
    if (r.counterexample) out << " counterexample " << *r.counterexample;
    if (ms) out << " " << *ms << " ms";
    out << '\n';
  } else {
    out << report_json(spec, r, ms).dump() << '\n';
  }
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  if (a.list) {
    for (const auto& spec : check_registry())
      out << spec.id << '\t' << scope_kind_name(spec.kind) << '\t' << spec.description << '\n';
    return kExitOk;
  }
  std::vector<const CheckSpec*> todo;
  if (a.all) {
    if (a.check || a.multiset || a.n || g.order) throw UsageError("--all runs default scopes; drop --check/--n/--multiset/--order");
    for (const auto& spec : check_registry()) todo.push_back(&spec);
  } else {
    if (!a.check) throw UsageError("one of --check or --all is required");
    const auto* spec = find_check(*a.check);
    if (!spec) {
      std::string ids;
      for (const auto& c : check_registry()) ids += (ids.empty() ? "" : ", ") + c.id;
      throw UsageError("unknown check '" + *a.check + "'; valid checks: " + ids);
    }
    todo.push_back(spec);
  }
  bool all_pass = true;
  for (const auto* spec : todo) {
    CheckRequest req;
    req.jobs = g.jobs;
    req.x = a.x;
    req.y = a.y;
    req.z = a.z;
    if (a.multiset) req.multiset = parse_multiset(*a.multiset);
    if (a.n && g.order) throw UsageError("give either --n or --order");
    if (g.order && spec->kind != ScopeKind::order) throw UsageError("check " + spec->id + " takes --n, not --order");
    req.n = a.n ? a.n : g.order;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = run_check(*spec, req);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::optional<double> ms;
    if (g.timing)
      ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    print_report(g, *spec, r, ms, out);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitFail;
}

// ---- stats ----

struct StatsArgs {
  std::string input;
  std::string kind = "auto";
};

int cmd_stats(const Globals& g, const StatsArgs& a, std::ostream& out) {
  std::string kind = a.kind;
  if (kind == "auto") {
    if (a.input.find(';') != std::string::npos) kind = "binary";
    else if (a.input.find('(') != std::string::npos || a.input == "0") kind = "wit";
    else kind = "perm";
  }
  std::vector<std::pair<std::string, Json>> rows;
  if (kind == "wit") {
    const auto t = parse_wit(a.input);
    require_valid(t);
    const auto s = wit_stats(t);
    for (const auto& name : statistic_names()) {
      if (name.find(':') != std::string::npos) continue;
      rows.emplace_back(name, statistic_value(s, parse_statistic(name)));
    }
    Json deg = Json::object(), od = Json::object();
    for (const auto& [q, c] : s.deg) deg[std::to_string(q)] = c;
    for (const auto& [q, c] : s.od) od[std::to_string(q)] = c;
    rows.emplace_back("deg", deg);
    rows.emplace_back("od", od);
  } else if (kind == "binary") {
    const auto b = parse_binary(a.input);
    require_valid(b);
    const auto s = binary_stats(b);
    rows = {{"rightLeaf", s.right_leaf},
            {"leftLeaf", s.left_leaf},
            {"onlyLeft", s.only_left},
            {"onlyRight", s.only_right},
            {"leafCount", s.leaf_count},
            {"rlParentHasLeft", s.rl_parent_has_left},
            {"rlParentNoLeft", s.rl_parent_no_left},
            {"llParentNoRight", s.ll_parent_no_right},
            {"llParentHasRight", s.ll_parent_has_right},
            {"olLeftHasLeft", s.ol_left_has_left},
            {"olLeftNoLeft", s.ol_left_no_left},
            {"twin", s.twin}};
  } else if (kind == "perm") {
    const auto p = parse_permutation(a.input);
    if (!p.is_sn()) throw DomainError("statistics need a permutation of 1..n");
    const auto s = perm_stats(p);
    auto set_json = [](const std::set<int>& xs) { return Json(std::vector<int>(xs.begin(), xs.end())); };
    rows.emplace_back("DES", set_json(s.DES));
    rows.emplace_back("ASC", set_json(s.ASC));
    rows.emplace_back("tildeASC", set_json(s.tildeASC));
    for (const auto& name : perm_statistic_names()) rows.emplace_back(name, perm_statistic(s, name));
  } else {
    throw UsageError("--kind must be auto, wit, binary or perm");
  }
  switch (resolve_format(g, Format::text)) {
    case Format::json: {
      Json j;
      j["kind"] = kind;
      for (const auto& [k, v] : rows) j[k] = v;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      for (const auto& [k, v] : rows) out << k << ",\"" << v.dump() << "\"\n";
      break;
    case Format::text:
      for (const auto& [k, v] : rows) out << k << ' ' << v.dump() << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weakly increasing trees, binary trees and permutation statistics", "treelab"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"auto", "text", "json", "csv"}));
  app.add_option("--jobs", g.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--order", g.order, "Series order or order-kind verification scope");
  app.add_flag("--seedless", g.seedless, "Accepted for compatibility; nothing here is random");
  app.add_flag("--timing", g.timing, "Add elapsedMs to verification reports");

  std::function<int()> action;

  FamilyArgs count_args;
  auto* count = app.add_subcommand("count", "Number of weakly increasing trees on a multiset");
  count->add_option("--multiset", count_args.multiset, "Multiset such as 1^2,2^1");
  count->add_option("--n", count_args.n, "Plane trees with n edges");
  count->callback([&] { action = [&] { return cmd_count(g, count_args, out); }; });

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List a family in canonical order");
  enumerate->add_option("--multiset", enum_args.family.multiset, "Multiset");
  enumerate->add_option("--n", enum_args.family.n, "Plane trees with n edges");
  enumerate->add_flag("--binary", enum_args.binary, "Weakly increasing binary trees instead");
  enumerate->add_flag("--tip-augmented", enum_args.tip_augmented, "Only trees without young internal nodes");
  enumerate->add_option("--perms", enum_args.perms, "Permutations of 1..N");
  enumerate->add_flag("--avoid-312", enum_args.avoid312, "Only 312-avoiding permutations");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(g, enum_args, out); }; });

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Apply a bijection");
  map->add_option("--map", map_args.name, "Map name")->required();
  map->add_option("--input", map_args.input, "Encoded input")->required();
  map->add_option("--node", map_args.node, "Node parameter for phi_at (0-based) or varphi (1-based)");
  map->callback([&] { action = [&] { return cmd_map(g, map_args, out); }; });

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Joint distribution as a polynomial");
  table->add_option("--multiset", table_args.family.multiset, "Multiset");
  table->add_option("--n", table_args.family.n, "Plane trees with n edges");
  table->add_option("--perms", table_args.perms, "Permutations of 1..N");
  table->add_option("--stats", table_args.stats, "Comma-separated statistics")->required();
  table->add_option("--vars", table_args.vars, "Comma-separated variable names");
  table->add_flag("--tip-augmented", table_args.tip_augmented, "Restrict to trees without young internal nodes");
  table->callback([&] { action = [&] { return cmd_table(g, table_args, out); }; });

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Expand a generating function");
  series->add_option("--which", series_args.which, "Series name")->required();
  series->add_option("--x", series_args.x, "Carlitz parameter x");
  series->add_option("--y", series_args.y, "Carlitz parameter y");
  series->add_option("--z", series_args.z, "Carlitz parameter z");
  series->callback([&] { action = [&] { return cmd_series(g, series_args, out); }; });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--check", verify_args.check, "Check id");
  verify->add_flag("--all", verify_args.all, "Every check at its default scope");
  verify->add_flag("--list", verify_args.list, "List check ids");
  verify->add_option("--multiset", verify_args.multiset, "Multiset scope");
  verify->add_option("--n", verify_args.n, "Upper end of the size range");
  verify->add_option("--x", verify_args.x, "eq3.1 parameter x");
  verify->add_option("--y", verify_args.y, "eq3.1 parameter y");
  verify->add_option("--z", verify_args.z, "eq3.1 parameter z");
  verify->callback([&] { action = [&] { return cmd_verify(g, verify_args, out); }; });

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Statistic vector of one object");
  stats->add_option("--input", stats_args.input, "Encoded tree or permutation")->required();
  stats->add_option("--kind", stats_args.kind, "auto, wit, binary or perm");
  stats->callback([&] { action = [&] { return cmd_stats(g, stats_args, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace treelab
