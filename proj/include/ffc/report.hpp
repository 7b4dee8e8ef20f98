#ifndef FFC_REPORT_HPP
#define FFC_REPORT_HPP

// Tables, the discrepancy log, and their bit-stable CSV/JSON serialization.
// Exact integers are decimal strings, rationals "num/den", reals %.12g.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ffc/ratfn.hpp"

namespace ffc {

using Value = std::variant<std::monostate, bool, long long, Int, Rat, double, std::string>;

std::string format_value(const Value& v);

/// Provenance of a column: exact, formula, envelope or literal.
struct Column {
  std::string name;
  std::string provenance = "exact";
};

struct Table {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Value>> rows;

  void add_row(std::vector<Value> row);
};

struct Discrepancy {
  std::string source_ref;
  std::string literal_value;
  std::string computed_value;
  std::string note;
};

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::map<std::string, std::string> config;
  std::vector<Table> tables;
  std::vector<Discrepancy> discrepancies;
  std::vector<Criterion> criteria;

  bool all_pass() const;
};

enum class Format { Csv, Json };

std::string emit_report(const Report& r, Format f);
std::string emit_csv(const Report& r);
std::string emit_json(const Report& r);

/// Write to a temporary file next to `path`, then rename over it.
void write_atomic(const std::string& path, const std::string& bytes);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ffc

#endif
