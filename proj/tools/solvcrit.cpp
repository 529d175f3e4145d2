// solvcrit: command-line front end for the solvability and witness-pair checks.
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or data error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "solvcrit/catalog.hpp"
#include "solvcrit/criterion.hpp"
#include "solvcrit/numbertheory.hpp"
#include "solvcrit/structure.hpp"

using namespace solvcrit;
using json = nlohmann::ordered_json;

namespace {

enum class Format { text, tsv, json };

struct Settings {
  std::string group_name;
  std::string group_file;
  std::string format = "text";
  unsigned workers = 1;
};

Format format_of(const Settings& s) {
  if (s.format == "tsv")
    return Format::tsv;
  if (s.format == "json")
    return Format::json;
  return Format::text;
}

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Group selected_group(const Settings& s) {
  if (!s.group_name.empty() && !s.group_file.empty())
    throw UsageError("give either --group or --file, not both");
  if (!s.group_file.empty()) {
    Group g = load_group_file(s.group_file);
    return g.label().empty() ? g.with_label(s.group_file) : g;
  }
  if (s.group_name.empty())
    throw UsageError("this command needs --group <name> or --file <path>");
  return resolve_group(s.group_name);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

template <typename Seq>
std::vector<std::string> strings_of(const Seq& seq) {
  std::vector<std::string> out;
  for (const auto& x : seq) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, UInt128>)
      out.push_back(to_string(x));
    else
      out.push_back(std::to_string(x));
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_order(const Settings& s) {
  Group g = selected_group(s);
  switch (format_of(s)) {
  case Format::text: std::cout << g.label() << ": order " << g.order() << "\n"; break;
  case Format::tsv: std::cout << "group\torder\n" << g.label() << "\t" << g.order() << "\n"; break;
  case Format::json:
    emit({{"command", "order"}, {"group", g.label()}, {"degree", g.degree()}, {"order", g.order()},
          {"base", g.chain().base()}});
    break;
  }
  return 0;
}

int cmd_solvable(const Settings& s) {
  Group g = selected_group(s);
  auto r = derived_series(g);
  auto series = join(strings_of(r.series_orders), " > ");
  switch (format_of(s)) {
  case Format::text:
    std::cout << g.label() << ": " << (r.solvable ? "solvable" : "not solvable")
              << " (derived series orders " << series << ")\n";
    break;
  case Format::tsv:
    std::cout << "group\tsolvable\tderived_series\n"
              << g.label() << "\t" << (r.solvable ? "true" : "false") << "\t"
              << join(strings_of(r.series_orders), ",") << "\n";
    break;
  case Format::json:
    emit({{"command", "solvable"}, {"group", g.label()}, {"solvable", r.solvable},
          {"derived_series", r.series_orders}});
    break;
  }
  return 0;
}

int cmd_spectrum(const Settings& s) {
  Group g = selected_group(s);
  auto sp = order_spectrum(g);
  switch (format_of(s)) {
  case Format::text:
    std::cout << g.label() << ": element orders {" << join(strings_of(sp.orders), ", ") << "}\n";
    break;
  case Format::tsv:
    std::cout << "group\telement_orders\n" << g.label() << "\t" << join(strings_of(sp.orders), ",") << "\n";
    break;
  case Format::json:
    emit({{"command", "spectrum"}, {"group", g.label()}, {"group_order", sp.group_order},
          {"element_orders", sp.orders}});
    break;
  }
  return 0;
}

int cmd_classes(const Settings& s) {
  Group g = selected_group(s);
  auto classes = conjugacy_classes(g);
  switch (format_of(s)) {
  case Format::text:
    std::cout << g.label() << ": " << classes.size() << " conjugacy classes\n";
    for (const auto& c : classes)
      std::cout << "  " << c.name << "  size " << c.size << "  rep " << c.representative.to_string()
                << "\n";
    break;
  case Format::tsv:
    std::cout << "class\tsize\telement_order\trepresentative\n";
    for (const auto& c : classes)
      std::cout << c.name << "\t" << c.size << "\t" << c.order_of_elements << "\t"
                << c.representative.to_string() << "\n";
    break;
  case Format::json: {
    json arr = json::array();
    for (const auto& c : classes)
      arr.push_back({{"name", c.name}, {"size", c.size}, {"element_order", c.order_of_elements},
                     {"representative", c.representative.to_string()}});
    emit({{"command", "classes"}, {"group", g.label()}, {"group_order", g.order()},
          {"classes", arr}});
    break;
  }
  }
  return 0;
}

int cmd_criterion(const Settings& s) {
  Group g = selected_group(s);
  CriterionOptions opt{s.workers, true};
  auto r = check_criterion(g, opt);
  const auto& cls = r.classes;
  auto pair_name = [&](const ClassPairWitness& w) {
    return cls[w.class_c].name + "\t" + cls[w.class_d].name;
  };
  switch (format_of(s)) {
  case Format::text:
    std::cout << g.label() << ": criterion " << (r.holds ? "holds" : "fails") << " ("
              << r.class_pairs.size() << " class pairs, " << r.pairs_checked
              << " element pairs checked)\n";
    if (r.counterexample)
      std::cout << "  counterexample: every x in " << cls[r.counterexample->first].name
                << ", y in " << cls[r.counterexample->second].name
                << " generates a nonsolvable subgroup\n";
    for (const auto& w : r.class_pairs)
      if (!w.witness)
        std::cout << "  no solvable pair: " << cls[w.class_c].name << " x " << cls[w.class_d].name
                  << "\n";
    break;
  case Format::tsv:
    std::cout << "class_c\tclass_d\tsolvable_witness\tx\ty\tpairs_scanned\n";
    for (const auto& w : r.class_pairs)
      std::cout << pair_name(w) << "\t" << (w.witness ? "yes" : "no") << "\t"
                << (w.witness ? w.witness->first.to_string() : "-") << "\t"
                << (w.witness ? w.witness->second.to_string() : "-") << "\t" << w.pairs_scanned
                << "\n";
    break;
  case Format::json: {
    json pairs = json::array();
    for (const auto& w : r.class_pairs) {
      json p = {{"class_c", cls[w.class_c].name}, {"class_d", cls[w.class_d].name},
                {"pairs_scanned", w.pairs_scanned}};
      p["witness"] = w.witness ? json{w.witness->first.to_string(), w.witness->second.to_string()}
                               : json(nullptr);
      pairs.push_back(std::move(p));
    }
    json out = {{"command", "criterion"}, {"group", g.label()}, {"holds", r.holds},
                {"pairs_checked", r.pairs_checked}};
    out["counterexample"] = r.counterexample ? json{cls[r.counterexample->first].name,
                                                    cls[r.counterexample->second].name}
                                             : json(nullptr);
    out["class_pairs"] = std::move(pairs);
    emit(out);
    break;
  }
  }
  return r.holds ? 0 : 1;
}

json outcomes_json(const WitnessReport& w) {
  json arr = json::array();
  for (const auto& [v, count] : w.outcomes)
    arr.push_back({{"order", v.order}, {"solvable", v.solvable}, {"count", count}});
  return arr;
}

int cmd_witness_verify(const Settings& s, std::uint64_t a, std::uint64_t b) {
  Group g = selected_group(s);
  ElementTable table(g);
  if (!order_spectrum(table).contains(a) || !order_spectrum(table).contains(b))
    throw UsageError("a and b must both be element orders of " + g.label());
  auto classes = conjugacy_classes(table);
  SubgroupVerdictCache cache;
  auto w = verify_witness_pair(table, classes, a, b, cache, {s.workers, true});
  switch (format_of(s)) {
  case Format::text:
    std::cout << g.label() << ": (" << a << ", " << b << ") "
              << (w.verified ? "is a witness pair" : "is not a witness pair") << " ("
              << w.pairs_checked << " pairs checked)\n";
    for (const auto& [v, count] : w.outcomes)
      std::cout << "  order " << v.order << (v.solvable ? " solvable" : " nonsolvable") << " x"
                << count << "\n";
    if (w.counterexample)
      std::cout << "  counterexample: x = " << w.counterexample->first.to_string()
                << ", y = " << w.counterexample->second.to_string() << "\n";
    break;
  case Format::tsv:
    std::cout << "subgroup_order\tsolvable\tcount\n";
    for (const auto& [v, count] : w.outcomes)
      std::cout << v.order << "\t" << (v.solvable ? "true" : "false") << "\t" << count << "\n";
    break;
  case Format::json: {
    json out = {{"command", "witness verify"}, {"group", g.label()}, {"a", a}, {"b", b},
                {"verified", w.verified}, {"pairs_checked", w.pairs_checked},
                {"outcomes", outcomes_json(w)}};
    out["counterexample"] = w.counterexample ? json{w.counterexample->first.to_string(),
                                                    w.counterexample->second.to_string()}
                                             : json(nullptr);
    emit(out);
    break;
  }
  }
  return w.verified ? 0 : 1;
}

int cmd_witness_search(const Settings& s, bool primes) {
  Group g = selected_group(s);
  auto pairs = search_witness_pairs(g, primes, {s.workers, true});
  switch (format_of(s)) {
  case Format::text:
    std::cout << g.label() << ": " << pairs.size() << (primes ? " prime" : "")
              << " witness pairs\n";
    for (auto [a, b] : pairs)
      std::cout << "  (" << a << ", " << b << ")\n";
    break;
  case Format::tsv:
    std::cout << "a\tb\n";
    for (auto [a, b] : pairs)
      std::cout << a << "\t" << b << "\n";
    break;
  case Format::json: {
    json arr = json::array();
    for (auto [a, b] : pairs)
      arr.push_back({a, b});
    emit({{"command", "witness search"}, {"group", g.label()}, {"primes_only", primes},
          {"pairs", arr}});
    break;
  }
  }
  return 0;
}

int cmd_ppd(const Settings& s, const std::string& q_text, unsigned e, bool basic, bool large) {
  UInt128 q = parse_uint128(q_text);
  if (q < 2)
    throw UsageError("q must be at least 2");
  if (e < 1)
    throw UsageError("e must be positive");
  DivisorSet d = [&] {
    if (basic) {
      PrimePower pp = PrimePower::of(q);
      return large ? lbpd(pp, e) : bppd(pp, e);
    }
    return large ? lpd(q, e) : ppd(q, e);
  }();
  const auto primes = strings_of(d.primes);
  const std::string square = d.square_entry ? to_string(*d.square_entry) : "-";
  switch (format_of(s)) {
  case Format::text:
    std::cout << flavor_name(d.flavor) << "(" << to_string(q) << ", " << e << ") = {"
              << join(primes, ", ");
    if (d.square_entry)
      std::cout << (primes.empty() ? "" : ", ") << square << " (square)";
    std::cout << "}\n";
    break;
  case Format::tsv:
    std::cout << "flavor\tq\te\tprimes\tsquare_entry\n"
              << flavor_name(d.flavor) << "\t" << to_string(q) << "\t" << e << "\t"
              << (primes.empty() ? "-" : join(primes, ",")) << "\t" << square << "\n";
    break;
  case Format::json: {
    json out = {{"command", "ppd"}, {"flavor", flavor_name(d.flavor)}, {"q", to_string(q)},
                {"e", e}, {"primes", primes}};
    out["square_entry"] = d.square_entry ? json(square) : json(nullptr);
    out["empty"] = d.empty();
    emit(out);
    break;
  }
  }
  return 0;
}

int cmd_zsigmondy_scan(const Settings& s, unsigned qmax, unsigned emax) {
  struct Row {
    unsigned q, e;
    bool closed_form, computed;
  };
  std::vector<Row> rows;
  for (unsigned q = 2; q <= qmax; ++q) {
    std::optional<PrimePower> pp;
    try {
      pp = PrimePower::of(q);
    } catch (const std::invalid_argument&) {
      continue;
    }
    for (unsigned e = 2; e <= emax; ++e) {
      try {
        checked_pow(q, e);
      } catch (const std::out_of_range&) {
        break;
      }
      rows.push_back({q, e, zsigmondy_empty(q, e), bppd(*pp, e).empty()});
    }
  }
  bool ok = true;
  for (const auto& r : rows)
    ok = ok && r.closed_form == r.computed;
  switch (format_of(s)) {
  case Format::text: {
    std::size_t empty = 0;
    for (const auto& r : rows) {
      empty += r.computed;
      if (r.computed || r.closed_form != r.computed)
        std::cout << "  (" << r.q << ", " << r.e << ") bppd empty: computed "
                  << (r.computed ? "yes" : "no") << ", closed form "
                  << (r.closed_form ? "yes" : "no")
                  << (r.closed_form == r.computed ? "" : "  MISMATCH") << "\n";
    }
    std::cout << rows.size() << " (q, e) pairs scanned, " << empty << " with empty bppd; "
              << (ok ? "closed form agrees everywhere" : "MISMATCH found") << "\n";
    break;
  }
  case Format::tsv:
    std::cout << "q\te\tclosed_form_empty\tcomputed_empty\tagree\n";
    for (const auto& r : rows)
      std::cout << r.q << "\t" << r.e << "\t" << r.closed_form << "\t" << r.computed << "\t"
                << (r.closed_form == r.computed) << "\n";
    break;
  case Format::json: {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"q", r.q}, {"e", r.e}, {"closed_form_empty", r.closed_form},
                     {"computed_empty", r.computed}});
    emit({{"command", "zsigmondy-scan"}, {"agree", ok}, {"rows", arr}});
    break;
  }
  }
  return ok ? 0 : 1;
}

int cmd_alt_pair(const Settings& s, std::uint64_t m) {
  if (m < 5)
    throw UsageError("m must be at least 5");
  auto [p, q] = alternating_pair(m);
  switch (format_of(s)) {
  case Format::text: std::cout << "A" << m << ": p = " << p << ", q = " << q << "\n"; break;
  case Format::tsv: std::cout << "m\tp\tq\n" << m << "\t" << p << "\t" << q << "\n"; break;
  case Format::json: emit({{"command", "alt-pair"}, {"m", m}, {"p", p}, {"q", q}}); break;
  }
  return 0;
}

int cmd_phi(const Settings& s, unsigned k, const std::string& q_text) {
  UInt128 q = parse_uint128(q_text);
  UInt128 v = cyclotomic_value(k, q);
  switch (format_of(s)) {
  case Format::text: std::cout << "Phi_" << k << "(" << to_string(q) << ") = " << to_string(v) << "\n"; break;
  case Format::tsv: std::cout << "k\tq\tvalue\n" << k << "\t" << to_string(q) << "\t" << to_string(v) << "\n"; break;
  case Format::json:
    emit({{"command", "phi"}, {"k", k}, {"q", to_string(q)}, {"value", to_string(v)}});
    break;
  }
  return 0;
}

int cmd_verify_table(const Settings& s, const std::string& path) {
  auto rows = load_expected_table(path);
  auto resolver = [](std::string_view name) { return resolve_group(name); };
  auto report = verify_expected_table(rows, resolver, {s.workers, true});
  switch (format_of(s)) {
  case Format::text:
    for (const auto& r : report.rows) {
      std::cout << status_name(r.status) << "  " << r.row.group_label << " (" << r.row.a << ", "
                << r.row.b << ")";
      if (r.witness)
        std::cout << "  outcome orders {" << join(strings_of(r.witness->outcome_orders()), ", ")
                  << "}";
      if (!r.reason.empty())
        std::cout << "  " << r.reason;
      std::cout << "\n";
    }
    break;
  case Format::tsv:
    std::cout << "group\ta\tb\tstatus\toutcome_orders\treason\n";
    for (const auto& r : report.rows)
      std::cout << r.row.group_label << "\t" << r.row.a << "\t" << r.row.b << "\t"
                << status_name(r.status) << "\t"
                << (r.witness ? join(strings_of(r.witness->outcome_orders()), ",") : "-") << "\t"
                << (r.reason.empty() ? "-" : r.reason) << "\n";
    break;
  case Format::json: {
    json arr = json::array();
    for (const auto& r : report.rows) {
      json row = {{"group", r.row.group_label}, {"a", r.row.a}, {"b", r.row.b},
                  {"status", status_name(r.status)}, {"reason", r.reason},
                  {"allowed_orders", r.row.allowed_orders},
                  {"outcome_groups", r.row.outcome_groups}};
      if (r.witness) {
        row["outcome_orders"] = r.witness->outcome_orders();
        row["pairs_checked"] = r.witness->pairs_checked;
        row["unexpected_orders"] = r.unexpected_orders;
      }
      arr.push_back(std::move(row));
    }
    emit({{"command", "verify-table"}, {"passed", report.passed()}, {"rows", arr}});
    break;
  }
  }
  return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvability criterion and witness-pair checks for permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--group", s.group_name, "Catalogue group: A5, S6, C12, D10, F20, psl2:7, M11, ...");
  app.add_option("--file", s.group_file, "Group definition file");
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv", "json"}));
  app.add_option("--workers", s.workers, "Worker threads for criterion and witness sweeps")
      ->check(CLI::Range(1u, 256u));

  std::function<int()> run;

  app.add_subcommand("order", "Group order")->callback([&] { run = [&] { return cmd_order(s); }; });
  app.add_subcommand("solvable", "Derived series and solvability")->callback([&] {
    run = [&] { return cmd_solvable(s); };
  });
  app.add_subcommand("spectrum", "Set of element orders")->callback([&] {
    run = [&] { return cmd_spectrum(s); };
  });
  app.add_subcommand("classes", "Conjugacy classes")->callback([&] {
    run = [&] { return cmd_classes(s); };
  });
  app.add_subcommand("criterion", "Check the class-pair solvability criterion")->callback([&] {
    run = [&] { return cmd_criterion(s); };
  });

  auto* witness = app.add_subcommand("witness", "Witness pairs of element orders");
  witness->require_subcommand(1);
  std::uint64_t wa = 0, wb = 0;
  auto* verify = witness->add_subcommand("verify", "Check one pair (a, b)");
  verify->add_option("a", wa)->required();
  verify->add_option("b", wb)->required();
  verify->callback([&] { run = [&] { return cmd_witness_verify(s, wa, wb); }; });
  bool primes_only = false;
  auto* search = witness->add_subcommand("search", "Find all witness pairs");
  search->add_flag("--primes", primes_only, "Only distinct prime pairs");
  search->callback([&] { run = [&] { return cmd_witness_search(s, primes_only); }; });

  std::string ppd_q;
  unsigned ppd_e = 0;
  bool basic = false, large = false;
  auto* ppd_cmd = app.add_subcommand("ppd", "Primitive prime divisors of q^e - 1");
  ppd_cmd->add_option("q", ppd_q)->required();
  ppd_cmd->add_option("e", ppd_e)->required();
  ppd_cmd->add_flag("--basic", basic, "Basic primitive prime divisors");
  ppd_cmd->add_flag("--large", large, "Large primitive divisors");
  ppd_cmd->callback([&] { run = [&] { return cmd_ppd(s, ppd_q, ppd_e, basic, large); }; });

  unsigned qmax = 0, emax = 0;
  auto* zs = app.add_subcommand("zsigmondy-scan", "Compare the Zsigmondy exceptions with factorisation");
  zs->add_option("qmax", qmax)->required();
  zs->add_option("emax", emax)->required();
  zs->callback([&] { run = [&] { return cmd_zsigmondy_scan(s, qmax, emax); }; });

  std::uint64_t alt_m = 0;
  auto* alt = app.add_subcommand("alt-pair", "Prime pair for the alternating group A_m");
  alt->add_option("m", alt_m)->required();
  alt->callback([&] { run = [&] { return cmd_alt_pair(s, alt_m); }; });

  unsigned phi_k = 0;
  std::string phi_q;
  auto* phi = app.add_subcommand("phi", "Cyclotomic value Phi_k(q)");
  phi->add_option("k", phi_k)->required();
  phi->add_option("q", phi_q)->required();
  phi->callback([&] { run = [&] { return cmd_phi(s, phi_k, phi_q); }; });

  std::string table_path;
  auto* vt = app.add_subcommand("verify-table", "Check an expected-outcome table");
  vt->add_option("file", table_path)->required();
  vt->callback([&] { run = [&] { return cmd_verify_table(s, table_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
