#ifndef SOLVCRIT_CATALOG_HPP
#define SOLVCRIT_CATALOG_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "solvcrit/criterion.hpp"
#include "solvcrit/group.hpp"

namespace solvcrit {

// Standard generators; every constructor checks the order of its result.
Group make_alternating(unsigned m);
Group make_symmetric(unsigned m);
Group make_cyclic(unsigned n);
Group make_dihedral(unsigned n); // order 2n
Group make_frobenius20();        // AGL(1,5)

// GF(p^k) with elements encoded as base-p digit strings of polynomial
// coefficients modulo the least monic irreducible of degree k.
class FiniteField {
public:
  explicit FiniteField(unsigned q); // prime power, at most 1024

  unsigned size() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  // Coefficients c_0..c_{k-1} of x^k + c_{k-1}x^{k-1} + ... + c_0.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned inv(unsigned a) const; // a != 0
  // Least element (by encoding) generating the multiplicative group.
  unsigned primitive_element() const { return primitive_; }

private:
  unsigned q_, p_, k_;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> mul_;
  unsigned primitive_;
};

// PSL(2,q) on the q+1 points of the projective line: field element v is point
// v+1 and infinity is point q+1. Generated by x -> x+1, x -> nu^2 x and
// x -> -1/x for the primitive element nu. Requires 4 <= q <= 32.
Group make_psl2(unsigned q);

class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct GroupSpecFile {
  std::string label;
  std::size_t degree = 0;
  std::vector<std::string> generator_strings;
  std::optional<GroupOrder> expected_order;
};

// Line grammar: `label <s>`, `degree <n>`, `order <n>`, `gen <cycles>`, `#`
// comments and blank lines. Throws ParseError carrying the 1-based line.
GroupSpecFile parse_group_file(std::string_view text);
// Builds the group and enforces the expected order. Throws DataError.
Group load_group(const GroupSpecFile& spec);
Group load_group_file(const std::filesystem::path& path);

// SOLVCRIT_DATA_DIR from the environment, else the directory shipped with the
// source tree.
std::filesystem::path default_data_dir();

// Catalogue names: An, Sn, Cn, Dn (order 2n), F20, psl2:q, and any <name>.grp
// in the data directory (M11, M12). Throws DataError for unknown names.
Group resolve_group(std::string_view name, const std::filesystem::path& data_dir = default_data_dir());

struct ExpectedOutcomeRow {
  std::string group_label;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool desk_scale = false;
  std::set<GroupOrder> allowed_orders;     // desk-scale rows only
  std::vector<std::string> outcome_groups; // names as printed in the source table
  std::size_t line = 0;
};

// Whitespace-separated columns: group a b scale orders outcomes, where scale
// is `desk` or `infeasible`, orders is comma-separated (or `-` for infeasible
// rows) and outcomes is a comma-separated list of group names.
std::vector<ExpectedOutcomeRow> parse_expected_table(std::string_view text);
std::vector<ExpectedOutcomeRow> load_expected_table(const std::filesystem::path& path);

enum class RowStatus { pass, fail, skipped };
std::string_view status_name(RowStatus s);

struct RowResult {
  ExpectedOutcomeRow row;
  RowStatus status;
  std::string reason;
  std::optional<WitnessReport> witness;
  std::vector<GroupOrder> unexpected_orders;
};

struct TableReport {
  std::vector<RowResult> rows;
  bool passed() const; // no row failed
};

using GroupResolver = std::function<Group(std::string_view)>;

TableReport verify_expected_table(const std::vector<ExpectedOutcomeRow>& rows,
                                  const GroupResolver& resolve,
                                  const CriterionOptions& options = {},
                                  std::uint64_t cap = default_enumeration_cap());

} // namespace solvcrit

#endif
