#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nuengine/corpus.hpp"

namespace nuengine::corpus {

using nlohmann::json;

namespace {

json scope_json(const verify::Scope& s) {
  if (s.kind == verify::Scope::Kind::kExhaustive) return {{"kind", "exhaustive"}};
  return {{"kind", "sampled"}, {"count", s.count}, {"seed", s.seed}};
}

verify::Scope scope_from(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exhaustive") return verify::Scope::exhaustive();
  if (kind == "sampled")
    return verify::Scope::sampled(j.at("count").get<std::uint64_t>(), j.at("seed").get<std::uint64_t>());
  throw CorpusError("unknown scope kind '" + kind + "'");
}

json row_json(const verify::TheoremARow& r) {
  json j = {{"name", r.name},
            {"order_G", r.order_g},
            {"order_nu", r.order_nu},
            {"order_H", r.order_h},
            {"n_max_tensor_class", r.n},
            {"order_nu_second_derived", r.order_nu2},
            {"order_G_second_derived", r.order_g2},
            {"formula_ok", r.formula_ok},
            {"complete", r.complete}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

verify::TheoremARow row_from(const json& j) {
  verify::TheoremARow r;
  r.name = j.at("name").get<std::string>();
  r.order_g = j.at("order_G").get<std::uint64_t>();
  r.order_nu = j.at("order_nu").get<std::uint64_t>();
  r.order_h = j.at("order_H").get<std::uint64_t>();
  r.n = j.at("n_max_tensor_class").get<std::uint64_t>();
  r.order_nu2 = j.at("order_nu_second_derived").get<std::uint64_t>();
  r.order_g2 = j.at("order_G_second_derived").get<std::uint64_t>();
  r.formula_ok = j.at("formula_ok").get<bool>();
  r.complete = j.at("complete").get<bool>();
  r.error = j.value("error", "");
  return r;
}

json check_json(const verify::CheckReport& c) {
  json j = {{"check", c.check},       {"group", c.group},   {"scope", scope_json(c.scope)},
            {"passed", c.passed},     {"tested", c.tested}, {"note", c.note}};
  if (c.counterexample) j["counterexample"] = *c.counterexample;
  if (c.value) j["value"] = *c.value;
  return j;
}

verify::CheckReport check_from(const json& j) {
  verify::CheckReport c;
  c.check = j.at("check").get<std::string>();
  c.group = j.at("group").get<std::string>();
  c.scope = scope_from(j.at("scope"));
  c.passed = j.at("passed").get<bool>();
  c.tested = j.at("tested").get<std::uint64_t>();
  c.note = j.at("note").get<std::string>();
  if (j.contains("counterexample"))
    c.counterexample = j.at("counterexample").get<std::vector<std::string>>();
  if (j.contains("value")) c.value = j.at("value").get<std::uint64_t>();
  return c;
}

json family_json(const verify::FamilyRow& r) {
  json j = {{"family", r.family},
            {"name", r.name},
            {"parameter", r.parameter},
            {"order_G", r.order_g},
            {"order_G_derived", r.order_g_derived},
            {"max_commutator_class", r.max_commutator_class},
            {"complete", r.complete}};
  if (r.max_tensor_class) j["max_tensor_class"] = *r.max_tensor_class;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

verify::FamilyRow family_from(const json& j) {
  verify::FamilyRow r;
  r.family = j.at("family").get<std::string>();
  r.name = j.at("name").get<std::string>();
  r.parameter = j.at("parameter").get<std::uint64_t>();
  r.order_g = j.at("order_G").get<std::uint64_t>();
  r.order_g_derived = j.at("order_G_derived").get<std::uint64_t>();
  r.max_commutator_class = j.at("max_commutator_class").get<std::uint64_t>();
  r.complete = j.at("complete").get<bool>();
  if (j.contains("max_tensor_class")) r.max_tensor_class = j.at("max_tensor_class").get<std::uint64_t>();
  r.error = j.value("error", "");
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void ReportDocument::canonicalize() {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  std::stable_sort(family.begin(), family.end(), [](const auto& a, const auto& b) {
    return std::tie(a.family, a.parameter) < std::tie(b.family, b.parameter);
  });
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) {
    return std::tie(a.group, a.check) < std::tie(b.group, b.check);
  });
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw CorpusError("unknown format '" + s + "'");
}

std::string to_json(const ReportDocument& doc) {
  json j;
  j["schema"] = doc.schema;
  j["tool_version"] = doc.tool_version;
  j["timestamp"] = doc.timestamp;
  j["caps"] = {{"coset_cap", doc.caps.coset_cap},
               {"order_cap", doc.caps.order_cap},
               {"direct_cap", doc.caps.direct_cap}};
  j["seed"] = doc.seed;
  j["rows"] = json::array();
  for (const auto& r : doc.rows) j["rows"].push_back(row_json(r));
  j["checks"] = json::array();
  for (const auto& c : doc.checks) j["checks"].push_back(check_json(c));
  j["family"] = json::array();
  for (const auto& f : doc.family) j["family"].push_back(family_json(f));
  return j.dump(2) + "\n";
}

ReportDocument from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CorpusError(std::string("malformed report: ") + e.what());
  }
  ReportDocument doc;
  doc.schema = j.at("schema").get<std::uint64_t>();
  if (doc.schema != 1) throw CorpusError("unsupported report schema " + std::to_string(doc.schema));
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.timestamp = j.at("timestamp").get<std::string>();
  const json& caps = j.at("caps");
  doc.caps.coset_cap = caps.at("coset_cap").get<std::uint64_t>();
  doc.caps.order_cap = caps.at("order_cap").get<std::uint64_t>();
  doc.caps.direct_cap = caps.at("direct_cap").get<std::uint64_t>();
  doc.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& r : j.at("rows")) doc.rows.push_back(row_from(r));
  for (const auto& c : j.at("checks")) doc.checks.push_back(check_from(c));
  if (j.contains("family"))
    for (const auto& f : j.at("family")) doc.family.push_back(family_from(f));
  return doc;
}

std::string to_csv(const ReportDocument& doc) {
  std::ostringstream out;
  if (doc.rows.empty() && !doc.family.empty()) {
    out << "name,family,parameter,order_G,order_G_derived,max_commutator_class,max_tensor_class,"
           "complete\n";
    for (const auto& r : doc.family) {
      out << csv_field(r.name) << ',' << r.family << ',' << r.parameter << ',';
      if (r.complete) out << r.order_g << ',' << r.order_g_derived << ',' << r.max_commutator_class;
      else out << ",,";
      out << ',';
      if (r.max_tensor_class) out << *r.max_tensor_class;
      out << ',' << (r.complete ? "true" : "false") << '\n';
    }
    return out.str();
  }
  out << "name,order_G,order_nu,order_H,n_max_tensor_class,order_nu_second_derived,"
         "order_G_second_derived,formula_ok\n";
  for (const auto& r : doc.rows) {
    out << csv_field(r.name) << ',';
    if (r.complete)
      out << r.order_g << ',' << r.order_nu << ',' << r.order_h << ',' << r.n << ','
          << r.order_nu2 << ',' << r.order_g2 << ',' << (r.formula_ok ? "true" : "false");
    else
      out << ",,,,,,";
    out << '\n';
  }
  return out.str();
}

void write_report(const ReportDocument& doc, Format format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CorpusError("cannot write " + path.string());
  out << (format == Format::kJson ? to_json(doc) : to_csv(doc));
  if (!out) throw CorpusError("write failed for " + path.string());
}

ReportDocument read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace nuengine::corpus
