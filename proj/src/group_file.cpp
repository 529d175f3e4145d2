#include <charconv>
#include <fstream>
#include <sstream>

#include "solvcrit/catalog.hpp"
#include "solvcrit/structure.hpp"

namespace solvcrit {

ParseError::ParseError(std::size_t line, const std::string& what)
    : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view strip(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_positive(std::string_view s, std::size_t line, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw ParseError(line, std::string(what) + " must be a positive integer, got \"" +
                               std::string(s) + "\"");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

GroupSpecFile parse_group_file(std::string_view text) {
  GroupSpecFile spec;
  std::vector<std::size_t> gen_lines;
  std::size_t lineno = 0;
  bool saw_degree = false;
  for (std::string_view raw : split(text, '\n')) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = strip(line);
    if (line.empty())
      continue;
    auto sp = line.find_first_of(" \t");
    std::string_view key = line.substr(0, sp);
    std::string_view value = sp == std::string_view::npos ? std::string_view{} : strip(line.substr(sp));
    if (key == "label") {
      if (value.empty())
        throw ParseError(lineno, "label needs a value");
      spec.label = std::string(value);
    } else if (key == "degree") {
      if (saw_degree)
        throw ParseError(lineno, "duplicate degree");
      spec.degree = parse_positive(value, lineno, "degree");
      saw_degree = true;
    } else if (key == "order") {
      if (spec.expected_order)
        throw ParseError(lineno, "duplicate order");
      spec.expected_order = parse_positive(value, lineno, "order");
    } else if (key == "gen") {
      spec.generator_strings.emplace_back(value);
      gen_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown keyword \"" + std::string(key) + "\"");
    }
  }
  if (!saw_degree)
    throw ParseError(lineno, "missing degree");
  if (spec.generator_strings.empty())
    throw ParseError(lineno, "no generators");
  for (std::size_t i = 0; i < spec.generator_strings.size(); ++i) {
    try {
      parse_cycles(spec.generator_strings[i], spec.degree);
    } catch (const std::invalid_argument& e) {
      throw ParseError(gen_lines[i], e.what());
    }
  }
  return spec;
}

Group load_group(const GroupSpecFile& spec) {
  std::vector<Permutation> gens;
  for (const auto& s : spec.generator_strings)
    gens.push_back(parse_cycles(s, spec.degree));
  Group g(std::move(gens), spec.label);
  if (spec.expected_order && g.order() != *spec.expected_order)
    throw DataError((spec.label.empty() ? std::string("group") : spec.label) +
                    ": generators give order " + std::to_string(g.order()) + ", file declares " +
                    std::to_string(*spec.expected_order));
  return g;
}

Group load_group_file(const std::filesystem::path& path) {
  try {
    return load_group(parse_group_file(read_file(path)));
  } catch (const ParseError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

std::vector<ExpectedOutcomeRow> parse_expected_table(std::string_view text) {
  std::vector<ExpectedOutcomeRow> rows;
  std::size_t lineno = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto cols = fields(strip(line));
    if (cols.empty())
      continue;
    if (cols.size() != 6)
      throw ParseError(lineno, "expected 6 columns (group a b scale orders outcomes), got " +
                                   std::to_string(cols.size()));
    ExpectedOutcomeRow row;
    row.line = lineno;
    row.group_label = std::string(cols[0]);
    row.a = parse_positive(cols[1], lineno, "a");
    row.b = parse_positive(cols[2], lineno, "b");
    if (cols[3] == "desk")
      row.desk_scale = true;
    else if (cols[3] != "infeasible")
      throw ParseError(lineno, "scale must be desk or infeasible");
    if (cols[4] != "-") {
      for (auto o : split(cols[4], ','))
        row.allowed_orders.insert(parse_positive(o, lineno, "allowed order"));
    }
    for (auto o : split(cols[5], ','))
      if (!o.empty())
        row.outcome_groups.emplace_back(o);
    if (row.desk_scale && row.allowed_orders.empty())
      throw ParseError(lineno, "desk-scale row needs allowed orders");
    for (auto o : row.allowed_orders)
      if (o <= 1)
        throw ParseError(lineno, "allowed orders must exceed 1");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ExpectedOutcomeRow> load_expected_table(const std::filesystem::path& path) {
  try {
    return parse_expected_table(read_file(path));
  } catch (const ParseError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string_view status_name(RowStatus s) {
  switch (s) {
  case RowStatus::pass: return "PASS";
  case RowStatus::fail: return "FAIL";
  case RowStatus::skipped: return "SKIPPED";
  }
  return "?";
}

bool TableReport::passed() const {
  for (const auto& r : rows)
    if (r.status == RowStatus::fail)
      return false;
  return true;
}

TableReport verify_expected_table(const std::vector<ExpectedOutcomeRow>& rows,
                                  const GroupResolver& resolve, const CriterionOptions& options,
                                  std::uint64_t cap) {
  TableReport report;
  for (const auto& row : rows) {
    RowResult result{row, RowStatus::skipped, {}, std::nullopt, {}};
    if (!row.desk_scale) {
      result.reason = "not constructible at desk scale";
      report.rows.push_back(std::move(result));
      continue;
    }
    Group g = resolve(row.group_label);
    if (g.order() > cap) {
      result.reason = CapExceeded(g.order(), cap).what();
      report.rows.push_back(std::move(result));
      continue;
    }
    ElementTable table(g, cap);
    auto classes = conjugacy_classes(table);
    auto spectrum = order_spectrum(table);
    if (!spectrum.contains(row.a) || !spectrum.contains(row.b)) {
      result.status = RowStatus::fail;
      result.reason = "a or b is not an element order";
      report.rows.push_back(std::move(result));
      continue;
    }
    SubgroupVerdictCache cache(options.use_cache);
    WitnessReport w = verify_witness_pair(table, classes, row.a, row.b, cache, options);
    for (GroupOrder o : w.outcome_orders())
      if (!row.allowed_orders.count(o))
        result.unexpected_orders.push_back(o);
    if (!w.verified) {
      result.status = RowStatus::fail;
      result.reason = "solvable subgroup found";
    } else if (!result.unexpected_orders.empty()) {
      result.status = RowStatus::fail;
      result.reason = "subgroup order outside the allowed set";
    } else {
      result.status = RowStatus::pass;
    }
    result.witness = std::move(w);
    report.rows.push_back(std::move(result));
  }
  return report;
}

} // namespace solvcrit
