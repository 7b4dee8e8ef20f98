#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ffc/report.hpp"

using namespace ffc;

namespace {

Report sample() {
  Report r;
  r.command = "sample";
  r.config["q"] = "3";
  Table t{"t", {{"n"}, {"exact"}, {"ratio"}, {"real", "envelope"}, {"flag"}, {"text"}, {"blank"}}, {}};
  t.add_row({1LL, Int("123456789012345678901234567890"), Rat(3, 2), 0.1 + 0.2, true, std::string("a,\"b\""), Value{}});
  t.add_row({2LL, Int(-7), Rat(-1, 3), 1e-20, false, std::string("plain"), Value{}});
  r.tables.push_back(t);
  r.discrepancies.push_back({"ref", "16", "12", "note"});
  r.criteria.push_back({1, "first", true, "ok"});
  return r;
}

}  // namespace

TEST_CASE("value formatting") {
  CHECK(format_value(Rat(3, 2)) == "3/2");
  CHECK(format_value(Rat(4, 2)) == "2");
  CHECK(format_value(0.1 + 0.2) == "0.3");
  CHECK(format_value(1.0 / 3) == "0.333333333333");
  CHECK(format_value(Int(-12)) == "-12");
  CHECK(format_value(Value{}) == "");
}

TEST_CASE("rows must match the header") {
  Table t{"t", {{"a"}, {"b"}}, {}};
  CHECK_THROWS(t.add_row({1LL}));
}

TEST_CASE("JSON round trip") {
  Report r = sample();
  const std::string text = emit_json(r);
  CHECK(text == emit_json(sample()));
  auto j = nlohmann::json::parse(text);
  CHECK(j["metadata"]["command"] == "sample");
  CHECK(j["metadata"]["config"]["q"] == "3");
  auto rows = j["tables"]["t"]["rows"];
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["exact"] == "123456789012345678901234567890");
  CHECK(rows[0]["ratio"] == "3/2");
  CHECK(rows[1]["ratio"] == "-1/3");
  CHECK(rows[0]["real"].get<double>() == 0.3);
  CHECK(rows[0]["flag"] == true);
  CHECK(rows[0]["text"] == "a,\"b\"");
  CHECK(rows[0]["blank"].is_null());
  CHECK(j["tables"]["t"]["provenance"]["real"] == "envelope");
  CHECK(j["discrepancies"][0]["computed_value"] == "12");
  // re-serializing the parsed document reproduces the bytes
  CHECK(j.dump(2) + "\n" == text);
}

TEST_CASE("CSV layout") {
  Report r = sample();
  const std::string csv = emit_csv(r);
  CHECK(csv.find('\r') == std::string::npos);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# table t");
  std::getline(in, line);
  CHECK(line == "n,exact,ratio,real,flag,text,blank");
  std::getline(in, line);
  CHECK(line == "1,123456789012345678901234567890,3/2,0.3,true,\"a,\"\"b\"\"\",");
  Report single;
  single.tables.push_back(r.tables[0]);
  CHECK(emit_csv(single).rfind("n,exact", 0) == 0);
}

TEST_CASE("atomic write") {
  namespace fs = std::filesystem;
  const fs::path p = fs::temp_directory_path() / "ffc_report_test.csv";
  write_atomic(p.string(), "a\n");
  write_atomic(p.string(), "b\n");
  std::ifstream f(p);
  std::string s((std::istreambuf_iterator<char>(f)), {});
  CHECK(s == "b\n");
  CHECK_FALSE(fs::exists(p.string() + ".tmp"));
  fs::remove(p);
}
