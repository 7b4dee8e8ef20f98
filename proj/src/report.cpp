#include "ffc/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ffc/field.hpp"

namespace ffc {

namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string rat_text(Rat r) {
  r.canonicalize();
  return to_string(r);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json to_json(const Value& v) {
  struct Visit {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(bool b) const { return b; }
    nlohmann::json operator()(long long k) const { return k; }
    nlohmann::json operator()(const Int& k) const { return k.get_str(); }
    nlohmann::json operator()(const Rat& r) const { return rat_text(r); }
    // round-trip through the 12-digit text so the dump is stable
    nlohmann::json operator()(double x) const { return std::strtod(format_real(x).c_str(), nullptr); }
    nlohmann::json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visit{}, v);
}

}  // namespace

std::string format_value(const Value& v) {
  struct Visit {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(long long k) const { return std::to_string(k); }
    std::string operator()(const Int& k) const { return k.get_str(); }
    std::string operator()(const Rat& r) const { return rat_text(r); }
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visit{}, v);
}

void Table::add_row(std::vector<Value> row) {
  if (row.size() != columns.size()) throw ConsistencyError("row width does not match table " + name);
  rows.push_back(std::move(row));
}

bool Report::all_pass() const {
  for (auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

std::string emit_csv(const Report& r) {
  std::ostringstream out;
  const bool sections = r.tables.size() != 1 || !r.discrepancies.empty() || !r.criteria.empty();
  for (const Table& t : r.tables) {
    if (sections) out << "# table " << t.name << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i].name;
    out << "\n";
    for (auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(format_value(row[i]));
      out << "\n";
    }
  }
  if (!r.criteria.empty()) {
    out << "# table criteria\nid,name,pass,detail\n";
    for (auto& c : r.criteria)
      out << c.id << "," << csv_escape(c.name) << "," << (c.pass ? "true" : "false") << "," << csv_escape(c.detail) << "\n";
  }
  if (!r.discrepancies.empty()) {
    out << "# table discrepancies\nsource_ref,literal_value,computed_value,note\n";
    for (auto& d : r.discrepancies)
      out << csv_escape(d.source_ref) << "," << csv_escape(d.literal_value) << "," << csv_escape(d.computed_value) << ","
          << csv_escape(d.note) << "\n";
  }
  return out.str();
}

std::string emit_json(const Report& r) {
  nlohmann::json j;
  nlohmann::json meta;
  meta["version"] = kVersion;
  meta["command"] = r.command;
  meta["config"] = r.config;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) meta["timestamp"] = epoch;
  j["metadata"] = meta;
  nlohmann::json tables = nlohmann::json::object();
  for (const Table& t : r.tables) {
    nlohmann::json jt;
    nlohmann::json cols = nlohmann::json::array(), prov = nlohmann::json::object();
    for (auto& c : t.columns) {
      cols.push_back(c.name);
      prov[c.name] = c.provenance;
    }
    jt["columns"] = cols;
    jt["provenance"] = prov;
    nlohmann::json rows = nlohmann::json::array();
    for (auto& row : t.rows) {
      nlohmann::json o = nlohmann::json::object();
      for (std::size_t i = 0; i < row.size(); ++i) o[t.columns[i].name] = to_json(row[i]);
      rows.push_back(o);
    }
    jt["rows"] = rows;
    tables[t.name] = jt;
  }
  j["tables"] = tables;
  nlohmann::json crit = nlohmann::json::array();
  for (auto& c : r.criteria) crit.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["criteria"] = crit;
  nlohmann::json disc = nlohmann::json::array();
  for (auto& d : r.discrepancies)
    disc.push_back({{"source_ref", d.source_ref},
                    {"literal_value", d.literal_value},
                    {"computed_value", d.computed_value},
                    {"note", d.note}});
  j["discrepancies"] = disc;
  return j.dump(2) + "\n";
}

std::string emit_report(const Report& r, Format f) { return f == Format::Json ? emit_json(r) : emit_csv(r); }

void write_atomic(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace ffc
