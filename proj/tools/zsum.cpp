// zsum: zero-sum invariants of finite abelian groups.
//
// Verbs: info, exact, report, family, seq, polytope.
// Exit codes: 0 success, 1 usage or parse error, 2 budget exceeded,
// 3 refusal to fabricate a value the current policy cannot certify.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zsum/bounds.hpp"
#include "zsum/group.hpp"
#include "zsum/numbers.hpp"
#include "zsum/oracle.hpp"
#include "zsum/polytope.hpp"
#include "zsum/provider.hpp"
#include "zsum/report.hpp"
#include "zsum/sequences.hpp"

using namespace zsum;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string rat_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string approx_str(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", q.get_d());
  return buf;
}

Rational rat_parse(const std::string& s) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string element_str(const GroupElement& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out + ")";
}

/// Shared knobs; each verb wires the subset it uses.
struct CommonFlags {
  std::string format = "table";
  std::uint64_t budget = 64;
  std::uint64_t cross_budget = 32;
  unsigned threads = 1;
  bool allow_conjectural = false;
  bool permissive = false;
  bool include_h = false;
  std::vector<std::string> c_r;

  ProviderPolicy policy() const {
    ProviderPolicy p;
    p.search_budget = budget;
    p.allow_conjectural = allow_conjectural;
    p.permissive_fallback = permissive;
    p.threads = threads;
    for (const std::string& spec : c_r) {
      auto eq = spec.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--c-r expects r=value, got '" + spec + "'");
      unsigned long r = std::stoul(spec.substr(0, eq));
      p.set_c_r(static_cast<unsigned>(r), rat_parse(spec.substr(eq + 1)));
    }
    return p;
  }

  SearchOptions search() const {
    SearchOptions s;
    s.max_order = budget;
    s.max_order_cross = cross_budget;
    s.threads = threads;
    return s;
  }
};

void add_policy_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--budget", f.budget, "order cap for D/eta searches (default 64)");
  cmd->add_option("--threads", f.threads, "worker threads for the oracles (default 1)");
  cmd->add_flag("--allow-conjectural", f.allow_conjectural,
                "admit conjectured eta formulas (watermarked)");
  cmd->add_flag("--permissive", f.permissive,
                "fall back to coarse certified bounds instead of refusing");
  cmd->add_option("--c-r", f.c_r, "c_r constant as r=value, e.g. --c-r 3=19/2 (repeatable)")
      ->take_all();
}

void add_format_flag(CLI::App* cmd, CommonFlags& f, const std::string& choices) {
  cmd->add_option("--format", f.format, "output format: " + choices)
      ->check(CLI::IsMember(std::vector<std::string>{"json", "csv", "table"}));
}

int run_info(const std::string& spec, const CommonFlags& f) {
  GroupSpec G = GroupSpec::parse(spec);
  GroupStats st = group_stats(G);
  Rational ks = kstar(G), Ks = Kstar(G);
  ElementSequence w = kstar_witness(G);
  std::map<GroupElement, std::uint64_t> mult;
  for (const GroupElement& g : w.elements()) ++mult[g];

  if (f.format == "json") {
    ordered_json j;
    j["group"] = G.to_string();
    j["stats"] = {{"order", st.order}, {"exponent", st.exponent}, {"rank", st.rank},
                  {"tau", st.tau},     {"omega", st.omega},       {"pminus", st.pminus}};
    j["kstar"] = rat_str(ks);
    j["Kstar"] = rat_str(Ks);
    ordered_json jw = ordered_json::array();
    for (const auto& [g, c] : mult) jw.push_back({{"element", g}, {"count", c}});
    j["kstar_witness"] = std::move(jw);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (f.format == "csv") {
    std::cout << "field,value\n"
              << "group," << G.to_string() << "\norder," << st.order << "\nexponent,"
              << st.exponent << "\nrank," << st.rank << "\ntau," << st.tau << "\nomega,"
              << st.omega << "\npminus," << st.pminus << "\nkstar," << rat_str(ks) << "\nKstar,"
              << rat_str(Ks) << "\n";
    return 0;
  }
  std::cout << "group " << G.to_string() << "\n"
            << "  order " << st.order << "  exponent " << st.exponent << "  rank " << st.rank
            << "  tau " << st.tau << "  omega " << st.omega << "  P^- " << st.pminus << "\n"
            << "  k* = " << rat_str(ks) << " (~" << approx_str(ks) << ")   K* = " << rat_str(Ks)
            << " (~" << approx_str(Ks) << ")\n"
            << "  k*-witness:";
  for (const auto& [g, c] : mult) std::cout << " " << element_str(g) << "^" << c;
  std::cout << "  [cross = " << rat_str(cross_number(w, G)) << "]\n";
  return 0;
}

int run_exact(const std::string& invariant, const std::string& spec, const CommonFlags& f,
              std::uint64_t d_prime, std::uint64_t d) {
  GroupSpec G = GroupSpec::parse(spec);
  SearchOptions opts = f.search();
  std::string name = invariant;
  std::optional<std::uint64_t> integer_value;
  std::optional<Rational> rational_value;
  std::string extra;

  if (invariant == "D" || invariant == "davenport") {
    name = "D";
    integer_value = davenport_exact(G, opts);
  } else if (invariant == "eta") {
    integer_value = eta_exact(G, opts);
  } else if (invariant == "k") {
    LittleCrossResult res = little_cross_exact(G, opts);
    rational_value = res.value;
    extra = std::to_string(res.witnesses.size()) + " minimal-length maximizer(s) of length " +
            (res.witnesses.empty() ? "0" : std::to_string(res.witnesses.front().sequence.size()));
  } else if (invariant == "K" || invariant == "cross") {
    name = "K";
    rational_value = cross_exact(G, opts);
  } else if (invariant == "D-rel") {
    if (d == 0) throw std::invalid_argument("D-rel needs --d (and --d-prime)");
    if (d_prime == 0) d_prime = d;
    integer_value = d_relative_exact(G, d_prime, d, opts);
    name = "D_(" + std::to_string(d_prime) + "," + std::to_string(d) + ")";
  } else if (invariant == "eta-rel") {
    if (d == 0) throw std::invalid_argument("eta-rel needs --d (and --d-prime)");
    if (d_prime == 0) d_prime = d;
    integer_value = eta_relative_exact(G, d_prime, d, opts);
    name = "eta_(" + std::to_string(d_prime) + "," + std::to_string(d) + ")";
  } else {
    throw std::invalid_argument("unknown invariant '" + invariant +
                                "' (use D, eta, k, K, D-rel, eta-rel)");
  }

  if (f.format == "json") {
    ordered_json j;
    j["invariant"] = name;
    j["group"] = G.to_string();
    if (integer_value) j["value"] = *integer_value;
    if (rational_value) j["value"] = rat_str(*rational_value);
    j["order_budget"] = opts.max_order;
    j["cross_budget"] = opts.max_order_cross;
    if (!extra.empty()) j["stats"] = extra;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << name << "(" << G.to_string() << ") = ";
  if (integer_value) std::cout << *integer_value;
  if (rational_value)
    std::cout << rat_str(*rational_value) << " (~" << approx_str(*rational_value) << ")";
  std::cout << "\n";
  if (!extra.empty()) std::cout << "  " << extra << "\n";
  return 0;
}

int run_report(const std::string& spec, const CommonFlags& f, bool no_exact) {
  GroupSpec G = GroupSpec::parse(spec);
  ReportOptions opts;
  opts.policy = f.policy();
  opts.search = f.search();
  opts.want_exact = !no_exact;
  opts.include_h = f.include_h;
  BoundReport r = build_report(G, opts);
  if (f.format == "json")
    std::cout << report_json(r);
  else if (f.format == "csv")
    std::cout << report_csv(r);
  else
    std::cout << report_table(r);
  return 0;
}

int run_family(const std::string& kind, const CommonFlags& f, unsigned omega_n, unsigned rank,
               const std::string& ells_text, std::uint64_t p_min, std::uint64_t p_max,
               const std::string& bounds_text) {
  FamilySpec spec;
  if (kind == "cyclic-by-primes" || kind == "cyclic")
    spec.kind = FamilyKind::CyclicByPrimes;
  else if (kind == "power-of-cyclic" || kind == "power")
    spec.kind = FamilyKind::PowerOfCyclic;
  else if (kind == "unitary-chain" || kind == "chain")
    spec.kind = FamilyKind::UnitaryChain;
  else
    throw std::invalid_argument("unknown family kind '" + kind +
                                "' (use cyclic-by-primes, power-of-cyclic, unitary-chain)");
  spec.omega = omega_n;
  spec.rank = rank;
  spec.p_min = p_min;
  spec.p_max = p_max;
  if (!ells_text.empty()) {
    for (std::size_t pos = 0; pos < ells_text.size();) {
      auto comma = ells_text.find(',', pos);
      if (comma == std::string::npos) comma = ells_text.size();
      spec.ells.push_back(static_cast<unsigned>(std::stoul(ells_text.substr(pos, comma - pos))));
      pos = comma + 1;
    }
  }
  std::vector<std::string> methods;
  if (!bounds_text.empty()) {
    for (std::size_t pos = 0; pos < bounds_text.size();) {
      auto comma = bounds_text.find(',', pos);
      if (comma == std::string::npos) comma = bounds_text.size();
      methods.push_back(bounds_text.substr(pos, comma - pos));
      pos = comma + 1;
    }
  }
  FamilyTable t = family_table(spec, methods, f.policy());
  if (f.format == "json") {
    ordered_json j;
    j["schema"] = "zsum-family/1";
    j["kind"] = family_kind_name(spec.kind);
    j["limit_target"] = rat_str(t.limit_target);
    j["methods"] = t.methods;
    j["conjectural"] = t.conjectural_watermark;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < t.members.size(); ++i) {
      ordered_json row;
      row["pminus"] = t.members[i].pminus;
      row["group"] = t.members[i].group.to_string();
      ordered_json cells = ordered_json::object();
      for (std::size_t c = 0; c < t.methods.size(); ++c)
        cells[t.methods[c]] = t.cells[i][c] ? ordered_json(rat_str(*t.cells[i][c]))
                                            : ordered_json(nullptr);
      row["bounds"] = std::move(cells);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else if (f.format == "csv") {
    std::cout << family_csv(t);
  } else {
    std::cout << family_table_text(t);
  }
  return 0;
}

int run_seq(const std::string& kind, std::uint64_t l, std::uint64_t max_l,
            const std::string& format) {
  if (kind == "alpha" || kind == "beta" || kind == "gamma") {
    SequenceTriple t = sequence_triple(l);
    const Rational& v = kind == "alpha" ? t.alpha : kind == "beta" ? t.beta : t.gamma;
    Rational ratio = v / Rational(static_cast<unsigned long>(l));
    if (format == "json") {
      ordered_json j;
      j["kind"] = kind;
      j["l"] = l;
      j["value"] = rat_str(v);
      j["value_approx"] = approx_str(v);
      j["ratio"] = rat_str(ratio);
      j["ratio_approx"] = approx_str(ratio);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << kind << "_" << l << " = " << rat_str(v) << " (~" << approx_str(v) << ")\n"
                << kind << "_" << l << "/" << l << " = " << rat_str(ratio) << " (~"
                << approx_str(ratio) << ")\n";
    }
    return 0;
  }
  if (kind == "table") {
    std::cout << "l,alpha,beta,gamma,alpha_dec,beta_dec,gamma_dec\n";
    for (std::uint64_t i = 1; i <= max_l; ++i) {
      SequenceTriple t = sequence_triple(i);
      std::cout << i << "," << rat_str(t.alpha) << "," << rat_str(t.beta) << ","
                << rat_str(t.gamma) << "," << approx_str(t.alpha) << "," << approx_str(t.beta)
                << "," << approx_str(t.gamma) << "\n";
    }
    return 0;
  }
  if (kind == "check") {
    SequenceSweepReport rep = sequence_sweep(max_l, default_sweep_sample(1000));
    auto line = [](bool ok, const std::string& what) {
      std::cout << (ok ? "PASS  " : "FAIL  ") << what << "\n";
      return ok;
    };
    bool ok = true;
    ok &= line(rep.alpha_le_2l, "alpha_l <= 2l for all l <= " + std::to_string(rep.max_l));
    ok &= line(rep.alpha_ratio_le_d1, "alpha_l / l <= alpha_9 / 9");
    ok &= line(rep.gamma_ratio_le_d2, "gamma_l / l <= gamma_8 / 8");
    ok &= line(rep.alpha_ratio_argmax == 9, "alpha_l / l maximized exactly at l = 9");
    ok &= line(rep.gamma_ratio_argmax == 8, "gamma_l / l maximized exactly at l = 8");
    ok &= line(rep.gamma_ratio_increasing_to_8, "gamma_l / l strictly increasing on 1..8");
    ok &= line(rep.gamma_ratio_decreasing_from_8, "gamma_l / l strictly decreasing from 8");
    ok &= line(rep.rosser_ok, "p_l >= l log l (certified interval arithmetic)");
    ok &= line(rep.beta_lower_ok, "beta_l >= l - 2 - log log p_l (certified)");
    ok &= line(rep.beta_ratio_below_one, "beta_l < l");
    ok &= line(rep.closed_form_ok, "alpha_l matches its closed form");
    ok &= line(rep.samples_failed == 0, "alpha(n) / beta(n) envelope on " +
                                            std::to_string(rep.samples_checked) +
                                            " sampled moduli");
    if (rep.gamma_lower_first_failure != 0)
      std::cout << "NOTE  5l/2 <= gamma_l holds up to l = " << rep.gamma_lower_holds_up_to
                << " and first fails at l = " << rep.gamma_lower_first_failure
                << " (gamma_l / l tends to 2)\n";
    else
      std::cout << "NOTE  5l/2 <= gamma_l holds on the whole checked range (it first fails at"
                   " l = 1989; extend --max-l to see it)\n";
    return ok ? 0 : 1;
  }
  throw std::invalid_argument("unknown seq kind '" + kind +
                              "' (use alpha, beta, gamma, table, check)");
}

int run_polytope(const std::string& spec, const CommonFlags& f) {
  GroupSpec G = GroupSpec::parse(spec);
  InvariantProvider provider(f.policy());
  ProfilePolytope P = build_polytope(G, provider);
  PolytopeSolution sol = maximize(P);
  bool meets_h = sol.optimum >= P.h_threshold;

  if (f.format == "json") {
    ordered_json j;
    j["schema"] = "zsum-polytope/1";
    j["group"] = P.group.to_string();
    j["exponent"] = P.n;
    ordered_json cons = ordered_json::array();
    for (std::uint64_t d : P.divs) {
      ordered_json c;
      c["d"] = d;
      c["weight"] = "1/" + std::to_string(d);
      auto it = P.f_cap.find(d);
      c["f_cap"] = it == P.f_cap.end() ? ordered_json(nullptr) : ordered_json(it->second);
      c["g_cap"] = P.g_cap.at(d);
      cons.push_back(std::move(c));
    }
    j["caps"] = std::move(cons);
    j["h_threshold"] = rat_str(P.h_threshold);
    ordered_json led = ordered_json::array();
    for (const CapLedgerEntry& e : P.ledger)
      led.push_back({{"quantity", e.quantity},
                     {"d", e.d},
                     {"d_prime", e.d_prime},
                     {"section", e.upsilon.to_string()},
                     {"value", e.value.value},
                     {"provenance", provenance_name(e.value.provenance)},
                     {"note", e.value.source_note}});
    j["ledger"] = std::move(led);
    j["all_exact"] = P.all_exact;
    j["conjectural"] = P.used_conjectural;
    j["optimum"] = rat_str(sol.optimum);
    j["optimum_approx"] = approx_str(sol.optimum);
    ordered_json ax = ordered_json::object();
    for (const auto& [d, c] : sol.argmax) ax[std::to_string(d)] = c;
    j["argmax"] = std::move(ax);
    j["node_count"] = sol.node_count;
    if (f.include_h) j["argmax_meets_h"] = meets_h;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "profile polytope of " << P.group.to_string() << " (exponent " << P.n << ")\n"
            << "  d      weight  f_cap  g_cap\n";
  for (std::uint64_t d : P.divs) {
    std::string ds = std::to_string(d);
    ds.resize(7, ' ');
    std::string w = "1/" + std::to_string(d);
    w.resize(8, ' ');
    auto it = P.f_cap.find(d);
    std::string fc = it == P.f_cap.end() ? "-" : std::to_string(it->second);
    fc.resize(7, ' ');
    std::cout << "  " << ds << w << fc << P.g_cap.at(d) << "\n";
  }
  std::cout << "  h threshold (k*) = " << rat_str(P.h_threshold) << "\n  constraint sources:\n";
  for (const CapLedgerEntry& e : P.ledger)
    std::cout << "    " << e.quantity << " d=" << e.d << " d'=" << e.d_prime << " section "
              << e.upsilon.to_string() << ": " << e.value.value << " ["
              << provenance_name(e.value.provenance) << "] " << e.value.source_note << "\n";
  std::cout << "  optimum " << rat_str(sol.optimum) << " (~" << approx_str(sol.optimum)
            << ") at x = {";
  bool first = true;
  for (const auto& [d, c] : sol.argmax) {
    if (!first) std::cout << ", ";
    first = false;
    std::cout << d << ":" << c;
  }
  std::cout << "}  [" << sol.node_count << " nodes]\n";
  if (f.include_h)
    std::cout << "  argmax meets h >= 0: " << (meets_h ? "yes" : "no") << " (experimental)\n";
  if (!P.all_exact) std::cout << "  [caps not all exact]\n";
  if (P.used_conjectural) std::cout << "  [watermark: conjectural values admitted]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum invariants of finite abelian groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zsum 1.0.0");

  CommonFlags f;

  auto* info = app.add_subcommand("info", "normalized spec, stats, k*, K*, k*-witness");
  std::string info_spec;
  info->add_option("group", info_spec, "invariant factors, e.g. 2,6")->required();
  add_format_flag(info, f, "json|csv|table");

  auto* exact = app.add_subcommand("exact", "oracle value of D, eta, k, K, D-rel, eta-rel");
  std::string exact_inv, exact_spec;
  std::uint64_t exact_d = 0, exact_dp = 0;
  exact->add_option("invariant", exact_inv, "D | eta | k | K | D-rel | eta-rel")->required();
  exact->add_option("group", exact_spec)->required();
  exact->add_option("--d", exact_d, "divisor d for the relative invariants");
  exact->add_option("--d-prime", exact_dp, "divisor d' (defaults to d)");
  exact->add_option("--budget", f.budget, "order cap for D/eta searches (default 64)");
  exact->add_option("--cross-budget", f.cross_budget, "order cap for k/K searches (default 32)");
  exact->add_option("--threads", f.threads);
  add_format_flag(exact, f, "json|table");

  auto* report = app.add_subcommand("report", "full bound report for one group");
  std::string report_spec;
  bool report_no_exact = false;
  report->add_option("group", report_spec)->required();
  report->add_flag("--no-exact", report_no_exact, "skip the oracle block");
  report->add_option("--cross-budget", f.cross_budget, "order cap for k/K oracle (default 32)");
  report->add_flag("--include-h", f.include_h,
                   "also test the argmax against the experimental h >= 0 half-space");
  add_policy_flags(report, f);
  add_format_flag(report, f, "json|csv|table");

  auto* family = app.add_subcommand("family", "bound trajectories along a group family");
  std::string family_kind, family_ells, family_bounds = "alpha,sharp";
  unsigned family_omega = 1, family_rank = 2;
  std::uint64_t family_pmin = 2, family_pmax = 97;
  family->add_option("kind", family_kind, "cyclic-by-primes | power-of-cyclic | unitary-chain")
      ->required();
  family->add_option("--omega", family_omega, "omega(n) for the cyclic kinds (default 1)");
  family->add_option("--rank", family_rank, "r for power-of-cyclic (default 2)");
  family->add_option("--ells", family_ells, "unitary-chain signature l_1,...,l_r");
  family->add_option("--p-min", family_pmin, "smallest P^- (default 2)");
  family->add_option("--p-max", family_pmax, "largest P^- (default 97)");
  family->add_option("--bounds", family_bounds,
                     "comma list of kstar,gs,kz,alpha,sharp,smooth,polytope");
  add_policy_flags(family, f);
  add_format_flag(family, f, "json|csv|table");

  auto* seq = app.add_subcommand("seq", "the alpha/beta/gamma sequences and their lemma checks");
  std::string seq_kind;
  std::uint64_t seq_l = 9, seq_maxl = 10000;
  seq->add_option("kind", seq_kind, "alpha | beta | gamma | table | check")->required();
  seq->add_option("--l", seq_l, "index for alpha/beta/gamma (default 9)");
  seq->add_option("--max-l", seq_maxl, "sweep bound for table/check (default 10000)");
  add_format_flag(seq, f, "json|table");

  auto* poly = app.add_subcommand("polytope", "dump the profile polytope and its optimum");
  std::string poly_spec;
  poly->add_option("group", poly_spec)->required();
  poly->add_flag("--include-h", f.include_h,
                 "also test the argmax against the experimental h >= 0 half-space");
  add_policy_flags(poly, f);
  add_format_flag(poly, f, "json|table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message or the help text
    return code == 0 ? 0 : 1;
  }

  try {
    if (info->parsed()) return run_info(info_spec, f);
    if (exact->parsed()) return run_exact(exact_inv, exact_spec, f, exact_dp, exact_d);
    if (report->parsed()) return run_report(report_spec, f, report_no_exact);
    if (family->parsed())
      return run_family(family_kind, f, family_omega, family_rank, family_ells, family_pmin,
                        family_pmax, family_bounds);
    if (seq->parsed()) return run_seq(seq_kind, seq_l, seq_maxl, f.format);
    if (poly->parsed()) return run_polytope(poly_spec, f);
  } catch (const PolicyRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
