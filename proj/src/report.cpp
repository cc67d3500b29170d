#include "zsum/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "zsum/numbers.hpp"

namespace zsum {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string rat_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rat_parse(const std::string& s) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string approx_str(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", q.get_d());
  return buf;
}

BoundMethod method_from_name(const std::string& name) {
  for (BoundMethod m : {BoundMethod::KStarLower, BoundMethod::GS, BoundMethod::KZ,
                        BoundMethod::AlphaRank1, BoundMethod::AlphaRank2,
                        BoundMethod::Qualitative, BoundMethod::Polytope})
    if (name == bound_method_name(m)) return m;
  throw std::invalid_argument("unknown bound method: '" + name + "'");
}

Provenance provenance_from_name(const std::string& name) {
  for (Provenance p : {Provenance::ExactFormula, Provenance::ExactSearch, Provenance::UpperBound,
                       Provenance::Conjectural})
    if (name == provenance_name(p)) return p;
  throw std::invalid_argument("unknown provenance: '" + name + "'");
}

ordered_json bound_to_json(const BoundValue& b) {
  ordered_json j;
  j["method"] = bound_method_name(b.method);
  j["direction"] = b.lower ? "lower" : "upper";
  j["lo"] = rat_str(b.lo);
  j["hi"] = rat_str(b.hi);
  j["approx"] = approx_str(b.hi);
  j["exact"] = b.exact();
  j["conjectural"] = b.conjectural;
  j["note"] = b.note;
  j["assumptions"] = b.assumptions;
  return j;
}

BoundValue bound_from_json(const ordered_json& j) {
  BoundValue b;
  b.method = method_from_name(j.at("method").get<std::string>());
  b.lower = j.at("direction").get<std::string>() == "lower";
  b.lo = rat_parse(j.at("lo").get<std::string>());
  b.hi = rat_parse(j.at("hi").get<std::string>());
  b.conjectural = j.at("conjectural").get<bool>();
  b.note = j.at("note").get<std::string>();
  b.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  return b;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

GroupStats group_stats(const GroupSpec& G) {
  GroupStats s;
  s.order = G.order();
  s.exponent = G.exponent();
  s.rank = G.rank();
  s.tau = tau(s.exponent);
  s.omega = omega(s.exponent);
  s.pminus = pminus(s.exponent);
  return s;
}

BoundReport build_report(const GroupSpec& G, const ReportOptions& opts) {
  BoundReport r;
  r.group = G.to_string();
  r.stats = group_stats(G);
  r.kstar_value = kstar(G);
  r.Kstar_value = Kstar(G);

  InvariantProvider provider(opts.policy);

  const std::uint64_t order = G.order();
  if (opts.want_exact && order <= opts.search.max_order && order <= opts.search.max_order_cross) {
    try {
      ExactBlock e;
      LittleCrossResult lc = little_cross_exact(G, opts.search);
      e.k = lc.value;
      e.K = cross_exact(G, opts.search);
      e.davenport = lc.davenport;
      e.eta = eta_exact(G, opts.search);
      e.order_budget = opts.search.max_order;
      e.cross_budget = opts.search.max_order_cross;
      r.exact = std::move(e);
    } catch (const BudgetExceeded& ex) {
      r.unavailable.push_back(std::string("exact: ") + ex.what());
    }
  }

  r.bounds.push_back(kstar_lower(G));
  r.bounds.push_back(gs_bound(G).bound);
  if (G.is_cyclic() && order >= 2) r.bounds.push_back(kz_bound(G));
  if (G.rank() <= 2) r.bounds.push_back(alpha_bound(G));
  if (!G.is_trivial()) {
    QualitativeBounds q = qualitative_bound(G, provider);
    if (q.sharp)
      r.bounds.push_back(*q.sharp);
    else
      r.unavailable.push_back("qualitative sharp: " + q.sharp_unavailable);
    if (q.smooth)
      r.bounds.push_back(*q.smooth);
    else
      r.unavailable.push_back("qualitative smooth: " + q.smooth_unavailable);
  }

  try {
    ProfilePolytope P = build_polytope(G, provider);
    PolytopeSolution sol = maximize(P);
    PolytopeBlock pb;
    pb.optimum = sol.optimum;
    pb.argmax = sol.argmax;
    pb.node_count = sol.node_count;
    pb.h_threshold = P.h_threshold;
    pb.include_h = opts.include_h;
    if (opts.include_h) pb.argmax_meets_h = sol.optimum >= P.h_threshold;
    pb.all_exact = P.all_exact;
    pb.used_conjectural = P.used_conjectural;
    pb.ledger = P.ledger;
    r.polytope = std::move(pb);
  } catch (const PolicyRefusal& ex) {
    r.unavailable.push_back(std::string("polytope: ") + ex.what());
  } catch (const BudgetExceeded& ex) {
    r.unavailable.push_back(std::string("polytope: ") + ex.what());
  }

  // Sandwich check on k(G): every certified lower endpoint must sit below
  // every certified upper endpoint.
  Rational max_lower = r.kstar_value;
  bool have_upper = false;
  Rational min_upper;
  auto offer_upper = [&](const Rational& v) {
    if (!have_upper || v < min_upper) min_upper = v;
    have_upper = true;
  };
  for (const BoundValue& b : r.bounds) {
    if (b.lower)
      max_lower = std::max(max_lower, b.lo);
    else
      offer_upper(b.hi);
  }
  if (r.polytope) offer_upper(r.polytope->optimum);
  if (r.exact) {
    max_lower = std::max(max_lower, r.exact->k);
    offer_upper(r.exact->k);
  }
  r.verdict = !have_upper || max_lower <= min_upper;

  for (const BoundValue& b : r.bounds) r.conjectural_watermark |= b.conjectural;
  if (r.polytope) r.conjectural_watermark |= r.polytope->used_conjectural;

  return r;
}

std::string report_json(const BoundReport& r) {
  ordered_json j;
  j["schema"] = "zsum-report/1";
  j["group"] = r.group;
  j["stats"] = {{"order", r.stats.order},   {"exponent", r.stats.exponent},
                {"rank", r.stats.rank},     {"tau", r.stats.tau},
                {"omega", r.stats.omega},   {"pminus", r.stats.pminus}};
  j["kstar"] = rat_str(r.kstar_value);
  j["kstar_approx"] = approx_str(r.kstar_value);
  j["Kstar"] = rat_str(r.Kstar_value);
  j["Kstar_approx"] = approx_str(r.Kstar_value);
  if (r.exact) {
    j["exact"] = {{"k", rat_str(r.exact->k)},
                  {"K", rat_str(r.exact->K)},
                  {"davenport", r.exact->davenport},
                  {"eta", r.exact->eta},
                  {"order_budget", r.exact->order_budget},
                  {"cross_budget", r.exact->cross_budget}};
  } else {
    j["exact"] = nullptr;
  }
  j["bounds"] = ordered_json::array();
  for (const BoundValue& b : r.bounds) j["bounds"].push_back(bound_to_json(b));
  j["unavailable"] = r.unavailable;
  if (r.polytope) {
    const PolytopeBlock& p = *r.polytope;
    ordered_json pj;
    pj["optimum"] = rat_str(p.optimum);
    pj["optimum_approx"] = approx_str(p.optimum);
    ordered_json ax = ordered_json::object();
    for (const auto& [d, c] : p.argmax) ax[std::to_string(d)] = c;
    pj["argmax"] = std::move(ax);
    pj["node_count"] = p.node_count;
    pj["h_threshold"] = rat_str(p.h_threshold);
    pj["include_h"] = p.include_h;
    pj["argmax_meets_h"] = p.argmax_meets_h;
    pj["all_exact"] = p.all_exact;
    pj["conjectural"] = p.used_conjectural;
    ordered_json cons = ordered_json::array();
    for (const CapLedgerEntry& e : p.ledger) {
      cons.push_back({{"quantity", e.quantity},
                      {"d", e.d},
                      {"d_prime", e.d_prime},
                      {"section", e.upsilon.to_string()},
                      {"value", e.value.value},
                      {"provenance", provenance_name(e.value.provenance)},
                      {"note", e.value.source_note}});
    }
    pj["constraints"] = std::move(cons);
    j["polytope"] = std::move(pj);
  } else {
    j["polytope"] = nullptr;
  }
  j["verdict"] = r.verdict;
  j["conjectural"] = r.conjectural_watermark;
  return j.dump(2) + "\n";
}

BoundReport report_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.at("schema").get<std::string>() != "zsum-report/1")
    throw std::invalid_argument("unsupported report schema");
  BoundReport r;
  r.group = j.at("group").get<std::string>();
  const auto& st = j.at("stats");
  r.stats.order = st.at("order").get<std::uint64_t>();
  r.stats.exponent = st.at("exponent").get<std::uint64_t>();
  r.stats.rank = st.at("rank").get<unsigned>();
  r.stats.tau = st.at("tau").get<std::uint64_t>();
  r.stats.omega = st.at("omega").get<unsigned>();
  r.stats.pminus = st.at("pminus").get<std::uint64_t>();
  r.kstar_value = rat_parse(j.at("kstar").get<std::string>());
  r.Kstar_value = rat_parse(j.at("Kstar").get<std::string>());
  if (!j.at("exact").is_null()) {
    const auto& e = j.at("exact");
    ExactBlock eb;
    eb.k = rat_parse(e.at("k").get<std::string>());
    eb.K = rat_parse(e.at("K").get<std::string>());
    eb.davenport = e.at("davenport").get<std::uint64_t>();
    eb.eta = e.at("eta").get<std::uint64_t>();
    eb.order_budget = e.at("order_budget").get<std::uint64_t>();
    eb.cross_budget = e.at("cross_budget").get<std::uint64_t>();
    r.exact = std::move(eb);
  }
  for (const auto& b : j.at("bounds")) r.bounds.push_back(bound_from_json(b));
  r.unavailable = j.at("unavailable").get<std::vector<std::string>>();
  if (!j.at("polytope").is_null()) {
    const auto& p = j.at("polytope");
    PolytopeBlock pb;
    pb.optimum = rat_parse(p.at("optimum").get<std::string>());
    for (const auto& [key, v] : p.at("argmax").items())
      pb.argmax[std::stoull(key)] = v.get<std::uint64_t>();
    pb.node_count = p.at("node_count").get<std::uint64_t>();
    pb.h_threshold = rat_parse(p.at("h_threshold").get<std::string>());
    pb.include_h = p.at("include_h").get<bool>();
    pb.argmax_meets_h = p.at("argmax_meets_h").get<bool>();
    pb.all_exact = p.at("all_exact").get<bool>();
    pb.used_conjectural = p.at("conjectural").get<bool>();
    for (const auto& c : p.at("constraints")) {
      CapLedgerEntry e;
      e.quantity = c.at("quantity").get<std::string>();
      e.d = c.at("d").get<std::uint64_t>();
      e.d_prime = c.at("d_prime").get<std::uint64_t>();
      e.upsilon = GroupSpec::parse(c.at("section").get<std::string>());
      e.value.value = c.at("value").get<std::uint64_t>();
      e.value.provenance = provenance_from_name(c.at("provenance").get<std::string>());
      e.value.source_note = c.at("note").get<std::string>();
      pb.ledger.push_back(std::move(e));
    }
    r.polytope = std::move(pb);
  }
  r.verdict = j.at("verdict").get<bool>();
  r.conjectural_watermark = j.at("conjectural").get<bool>();
  return r;
}

std::string report_csv(const BoundReport& r) {
  std::string out = "section,item,value,approx,flags,note\n";
  auto row = [&](const std::string& a, const std::string& b, const std::string& v,
                 const std::string& ap, const std::string& fl, const std::string& note) {
    out += csv_escape(a) + ',' + csv_escape(b) + ',' + csv_escape(v) + ',' + csv_escape(ap) + ',' +
           csv_escape(fl) + ',' + csv_escape(note) + '\n';
  };
  row("meta", "group", r.group, "", "", "");
  row("meta", "order", std::to_string(r.stats.order), "", "", "");
  row("meta", "exponent", std::to_string(r.stats.exponent), "", "", "");
  row("meta", "rank", std::to_string(r.stats.rank), "", "", "");
  row("meta", "tau", std::to_string(r.stats.tau), "", "", "");
  row("meta", "omega", std::to_string(r.stats.omega), "", "", "");
  row("meta", "pminus", std::to_string(r.stats.pminus), "", "", "");
  row("meta", "kstar", rat_str(r.kstar_value), approx_str(r.kstar_value), "lower;exact", "");
  row("meta", "Kstar", rat_str(r.Kstar_value), approx_str(r.Kstar_value), "lower;exact", "");
  if (r.exact) {
    row("exact", "k", rat_str(r.exact->k), approx_str(r.exact->k), "oracle", "");
    row("exact", "K", rat_str(r.exact->K), approx_str(r.exact->K), "oracle", "");
    row("exact", "davenport", std::to_string(r.exact->davenport), "", "oracle", "");
    row("exact", "eta", std::to_string(r.exact->eta), "", "oracle", "");
  }
  for (const BoundValue& b : r.bounds) {
    std::string flags = b.lower ? "lower" : "upper";
    flags += b.exact() ? ";exact" : ";interval";
    if (b.conjectural) flags += ";conjectural";
    std::string note = b.note;
    for (const std::string& a : b.assumptions) note += " | " + a;
    row("bound", bound_method_name(b.method), rat_str(b.hi), approx_str(b.hi), flags, note);
  }
  if (r.polytope) {
    std::string flags = "upper";
    flags += r.polytope->all_exact ? ";exact" : ";inexact-caps";
    if (r.polytope->used_conjectural) flags += ";conjectural";
    row("polytope", "optimum", rat_str(r.polytope->optimum), approx_str(r.polytope->optimum),
        flags, "");
  }
  for (const std::string& u : r.unavailable) row("unavailable", "", "", "", "", u);
  row("verdict", "sandwich", r.verdict ? "true" : "false", "",
      r.conjectural_watermark ? "conjectural" : "", "");
  return out;
}

std::string report_table(const BoundReport& r) {
  std::string out;
  out += "group " + r.group + "\n";
  out += "  order " + std::to_string(r.stats.order) + "  exponent " +
         std::to_string(r.stats.exponent) + "  rank " + std::to_string(r.stats.rank) + "  tau " +
         std::to_string(r.stats.tau) + "  omega " + std::to_string(r.stats.omega) + "  P^- " +
         std::to_string(r.stats.pminus) + "\n";
  out += "  k* = " + rat_str(r.kstar_value) + " (~" + approx_str(r.kstar_value) + ")   K* = " +
         rat_str(r.Kstar_value) + " (~" + approx_str(r.Kstar_value) + ")\n";
  if (r.exact) {
    out += "  exact: k = " + rat_str(r.exact->k) + ", K = " + rat_str(r.exact->K) +
           ", D = " + std::to_string(r.exact->davenport) +
           ", eta = " + std::to_string(r.exact->eta) + "  [budgets " +
           std::to_string(r.exact->order_budget) + "/" + std::to_string(r.exact->cross_budget) +
           "]\n";
  }
  out += "  bounds on k:\n";
  for (const BoundValue& b : r.bounds) {
    out += std::string("    ") + (b.lower ? "lower  " : "upper  ");
    std::string name = bound_method_name(b.method);
    name.resize(14, ' ');
    out += name;
    if (b.exact())
      out += rat_str(b.hi) + " (~" + approx_str(b.hi) + ")";
    else
      out += "[" + approx_str(b.lo) + ", " + approx_str(b.hi) + "]";
    if (b.conjectural) out += "  CONJECTURAL";
    if (!b.note.empty()) out += "  " + b.note;
    for (const std::string& a : b.assumptions) out += "\n      assuming: " + a;
    out += "\n";
  }
  if (r.polytope) {
    out += "  polytope optimum " + rat_str(r.polytope->optimum) + " (~" +
           approx_str(r.polytope->optimum) + ") at x = {";
    bool first = true;
    for (const auto& [d, c] : r.polytope->argmax) {
      if (!first) out += ", ";
      first = false;
      out += std::to_string(d) + ":" + std::to_string(c);
    }
    out += "}";
    if (!r.polytope->all_exact) out += "  [caps not all exact]";
    if (r.polytope->used_conjectural) out += "  CONJECTURAL";
    out += "\n";
    if (r.polytope->include_h)
      out += std::string("  argmax meets h >= 0: ") +
             (r.polytope->argmax_meets_h ? "yes" : "no") + " (experimental)\n";
  }
  for (const std::string& u : r.unavailable) out += "  unavailable: " + u + "\n";
  out += std::string("  verdict: ") + (r.verdict ? "consistent" : "INCONSISTENT");
  if (r.conjectural_watermark) out += "  [watermark: conjectural values admitted]";
  out += "\n";
  return out;
}

// --- families ---------------------------------------------------------------

namespace {

std::uint64_t next_prime_after(std::uint64_t p) {
  for (std::uint64_t q = p + 1;; ++q)
    if (is_prime(q)) return q;
}


/// The l_r consecutive primes starting at p, multiplied into the prefix
/// products n_1, ..., n_r. Throws BudgetExceeded past 64 bits.
std::vector<std::uint64_t> chain_moduli(std::uint64_t p, const std::vector<unsigned>& ells) {
  std::vector<std::uint64_t> moduli;
  Integer n = 1;
  std::uint64_t q = p;
  unsigned have = 0;
  for (unsigned li : ells) {
    while (have < li) {
      n *= Integer(static_cast<unsigned long>(q));
      q = next_prime_after(q);
      ++have;
    }
    if (!n.fits_ulong_p()) throw BudgetExceeded("family member exponent exceeds 64 bits");
    moduli.push_back(n.get_ui());
  }
  return moduli;
}

std::optional<Rational> family_cell(const GroupSpec& G, const std::string& method,
                                    const InvariantProvider& provider, bool& conjectural) {
  try {
    if (method == "kstar") return kstar(G);
    if (method == "gs") return gs_bound(G).bound.hi;
    if (method == "kz") {
      if (!G.is_cyclic() || G.order() < 2) return std::nullopt;
      return kz_bound(G).hi;
    }
    if (method == "alpha") {
      if (G.rank() > 2) return std::nullopt;
      return alpha_bound(G).hi;
    }
    if (method == "sharp" || method == "smooth") {
      QualitativeBounds q = qualitative_bound(G, provider);
      const std::optional<BoundValue>& b = method == "sharp" ? q.sharp : q.smooth;
      if (!b) return std::nullopt;
      conjectural |= b->conjectural;
      return b->hi;
    }
    if (method == "polytope") {
      PolytopeSolution sol = maximize(build_polytope(G, provider));
      conjectural |= sol.used_conjectural;
      return sol.optimum;
    }
  } catch (const PolicyRefusal&) {
    return std::nullopt;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  throw std::invalid_argument("unknown family bound method: '" + method + "'");
}

}  // namespace

std::vector<FamilyMember> enumerate_family(const FamilySpec& spec) {
  std::vector<unsigned> ells;
  unsigned copies = 1;
  switch (spec.kind) {
    case FamilyKind::CyclicByPrimes:
      if (spec.omega < 1) throw std::invalid_argument("empty family: omega must be >= 1");
      ells = {spec.omega};
      break;
    case FamilyKind::PowerOfCyclic:
      if (spec.omega < 1 || spec.rank < 1)
        throw std::invalid_argument("empty family: rank and omega must be >= 1");
      ells = {spec.omega};
      copies = spec.rank;
      break;
    case FamilyKind::UnitaryChain:
      ells = spec.ells;
      if (ells.empty()) throw std::invalid_argument("empty family: no signature");
      for (std::size_t i = 0; i < ells.size(); ++i) {
        if (ells[i] < 1) throw std::invalid_argument("empty family: l_i must be >= 1");
        if (i && ells[i] < ells[i - 1])
          throw std::invalid_argument(
              "empty family: the signature must be nondecreasing (n_i | n_{i+1} forces "
              "omega(n_i) <= omega(n_{i+1}))");
      }
      break;
  }
  if (spec.p_min > spec.p_max) throw std::invalid_argument("empty family: p_min > p_max");

  std::vector<FamilyMember> members;
  for (std::uint64_t p = spec.p_min; p <= spec.p_max; ++p) {
    if (!is_prime(p)) continue;
    std::vector<std::uint64_t> chain = chain_moduli(p, ells);
    std::vector<std::uint64_t> moduli;
    for (std::uint64_t ni : chain)
      for (unsigned c = 0; c < copies; ++c) moduli.push_back(ni);
    members.push_back({GroupSpec::from_moduli(moduli), p});
  }
  if (members.empty()) throw std::invalid_argument("empty family: no primes in range");
  return members;
}

Rational family_limit_target(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::CyclicByPrimes: return Rational(spec.omega);
    case FamilyKind::PowerOfCyclic:
      return Rational(spec.rank) * Rational(spec.omega);
    case FamilyKind::UnitaryChain: {
      unsigned long total = 0;
      for (unsigned l : spec.ells) total += l;
      return Rational(total);
    }
  }
  return Rational(0);
}

FamilyTable family_table(const FamilySpec& spec, const std::vector<std::string>& methods,
                         const ProviderPolicy& policy) {
  FamilyTable t;
  t.spec = spec;
  t.limit_target = family_limit_target(spec);
  t.methods = methods.empty() ? std::vector<std::string>{"alpha", "sharp"} : methods;
  if (std::find(t.methods.begin(), t.methods.end(), "kstar") == t.methods.end())
    t.methods.push_back("kstar");
  t.members = enumerate_family(spec);

  InvariantProvider provider(policy);
  for (const FamilyMember& m : t.members) {
    std::vector<std::optional<Rational>> row;
    for (const std::string& method : t.methods)
      row.push_back(family_cell(m.group, method, provider, t.conjectural_watermark));
    t.cells.push_back(std::move(row));
  }
  return t;
}

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::CyclicByPrimes: return "cyclic-by-primes";
    case FamilyKind::PowerOfCyclic: return "power-of-cyclic";
    case FamilyKind::UnitaryChain: return "unitary-chain";
  }
  return "?";
}

std::string family_csv(const FamilyTable& t) {
  std::string out = "# family " + std::string(family_kind_name(t.spec.kind));
  if (t.spec.kind == FamilyKind::UnitaryChain) {
    out += " signature=(";
    for (std::size_t i = 0; i < t.spec.ells.size(); ++i)
      out += (i ? "," : "") + std::to_string(t.spec.ells[i]);
    out += ")";
  } else {
    out += " omega=" + std::to_string(t.spec.omega);
    if (t.spec.kind == FamilyKind::PowerOfCyclic) out += " rank=" + std::to_string(t.spec.rank);
  }
  out += " p in [" + std::to_string(t.spec.p_min) + "," + std::to_string(t.spec.p_max) +
         "]; k tends to " + rat_str(t.limit_target);
  if (t.conjectural_watermark) out += "; CONJECTURAL VALUES ADMITTED";
  out += "\npminus,group";
  for (const std::string& m : t.methods) out += "," + m + "," + m + "_dec";
  out += "\n";
  for (std::size_t i = 0; i < t.members.size(); ++i) {
    out += std::to_string(t.members[i].pminus) + "," + csv_escape(t.members[i].group.to_string());
    for (const auto& cell : t.cells[i]) {
      if (cell)
        out += "," + rat_str(*cell) + "," + approx_str(*cell);
      else
        out += ",,";
    }
    out += "\n";
  }
  return out;
}

std::string family_table_text(const FamilyTable& t) {
  std::string out = "family " + std::string(family_kind_name(t.spec.kind)) +
                    ", k tends to " + rat_str(t.limit_target) + " (~" +
                    approx_str(t.limit_target) + ")";
  if (t.conjectural_watermark) out += "  [watermark: conjectural values admitted]";
  out += "\n";
  std::vector<std::size_t> widths;
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"pminus", "group"};
  for (const std::string& m : t.methods) header.push_back(m);
  grid.push_back(header);
  for (std::size_t i = 0; i < t.members.size(); ++i) {
    std::vector<std::string> line = {std::to_string(t.members[i].pminus),
                                     t.members[i].group.to_string()};
    for (const auto& cell : t.cells[i]) line.push_back(cell ? approx_str(*cell) : "-");
    grid.push_back(std::move(line));
  }
  widths.assign(grid[0].size(), 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
  for (const auto& line : grid) {
    out += "  ";
    for (std::size_t c = 0; c < line.size(); ++c) {
      std::string cell = line[c];
      cell.resize(widths[c] + 2, ' ');
      out += cell;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  return out;
}

}  // namespace zsum
