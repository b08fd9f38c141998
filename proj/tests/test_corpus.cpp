#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nuengine/corpus.hpp"

using namespace nuengine;
using namespace nuengine::corpus;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("nuengine-test-" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ReportDocument sample_document() {
  ReportDocument doc;
  verify::TheoremARow r;
  r.name = "S3";
  r.order_g = 6;
  r.order_nu = 216;
  r.order_h = 6;
  r.n = 3;
  r.order_nu2 = 1;
  r.order_g2 = 1;
  r.formula_ok = true;
  r.complete = true;
  verify::TheoremARow bad;
  bad.name = "big, group";
  bad.error = "cap exceeded";
  doc.rows = {r, bad};
  verify::CheckReport c;
  c.check = "basic-identities";
  c.group = "S3";
  c.scope = verify::Scope::sampled(10000, 42);
  c.tested = 10000;
  c.value = 7;
  c.counterexample = std::vector<std::string>{"g=a", "h=b"};
  c.passed = false;
  doc.checks = {c};
  return doc;
}

}  // namespace

TEST_CASE("builtin entries have their expected orders") {
  const auto entries = builtin_corpus();
  REQUIRE(entries.size() > 20);
  for (std::size_t i = 1; i < entries.size(); ++i) CHECK(entries[i - 1].name < entries[i].name);
  for (const auto& e : entries) {
    REQUIRE(e.expected_order);
    CHECK(fp::presented_order(e.presentation) == *e.expected_order);
  }
  CHECK(find_entry(entries, "Q8")->expected_order == 8u);
  CHECK_FALSE(find_entry(entries, "nope"));
}

TEST_CASE("loading corpus files") {
  CHECK(load_corpus(temp_file("one", "group C5 { gens: a; rels: a^5; }\n")).size() == 1);
  CHECK(load_corpus(temp_file("empty", "")).empty());
  CHECK_THROWS_AS(load_corpus(temp_file("dup", "group X { gens: a; rels: a^2; }\n"
                                              "group X { gens: b; rels: b^3; }\n")),
                  CorpusError);
  CHECK_THROWS_AS(load_corpus(temp_file("bad", "group X { gens: a; rels: c; }")), fp::ParseError);
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.txt"), CorpusError);
}

TEST_CASE("json round trip is byte identical") {
  ReportDocument doc = sample_document();
  doc.canonicalize();
  const std::string text = to_json(doc);
  const ReportDocument back = from_json(text);
  CHECK(back == doc);
  CHECK(to_json(back) == text);

  const auto path = std::filesystem::temp_directory_path() / "nuengine-test-report.json";
  write_report(doc, Format::kJson, path);
  CHECK(slurp(path) == text);
  CHECK(read_report(path) == doc);
}

TEST_CASE("empty document") {
  const ReportDocument empty;
  const std::string text = to_json(empty);
  CHECK(from_json(text) == empty);
  CHECK(text.find("\"timestamp\": \"1970-01-01T00:00:00Z\"") != std::string::npos);
  CHECK(to_csv(empty) ==
        "name,order_G,order_nu,order_H,n_max_tensor_class,order_nu_second_derived,"
        "order_G_second_derived,formula_ok\n");
}

TEST_CASE("csv rows") {
  ReportDocument doc = sample_document();
  doc.canonicalize();
  const std::string csv = to_csv(doc);
  std::istringstream in(csv);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == "S3,6,216,6,3,1,1,true");
  CHECK(lines[2] == "\"big, group\",,,,,,,");
}

TEST_CASE("family csv") {
  ReportDocument doc;
  verify::FamilyRow f;
  f.family = "dihedral";
  f.name = "D3";
  f.parameter = 3;
  f.order_g = 6;
  f.order_g_derived = 3;
  f.max_commutator_class = 2;
  f.complete = true;
  doc.family = {f};
  CHECK(to_csv(doc).find("D3,dihedral,3,6,3,2,,true") != std::string::npos);
  CHECK(from_json(to_json(doc)) == doc);
}

TEST_CASE("malformed reports") {
  CHECK_THROWS_AS(from_json("{"), CorpusError);
  std::string text = to_json(ReportDocument{});
  text.replace(text.find("\"schema\": 1"), 11, "\"schema\": 2");
  CHECK_THROWS_AS(from_json(text), CorpusError);
  CHECK(format_from_string("csv") == Format::kCsv);
  CHECK_THROWS_AS(format_from_string("xml"), CorpusError);
}

TEST_CASE("canonical order") {
  ReportDocument doc;
  for (const char* n : {"b", "a", "c"}) {
    verify::TheoremARow r;
    r.name = n;
    doc.rows.push_back(r);
  }
  doc.canonicalize();
  CHECK(doc.rows[0].name == "a");
  CHECK(doc.rows[2].name == "c");
}
