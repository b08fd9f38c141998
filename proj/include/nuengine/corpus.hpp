#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nuengine/verify.hpp"

namespace nuengine::corpus {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kFixedTimestamp = "1970-01-01T00:00:00Z";

struct CorpusEntry {
  std::string name;
  fp::Presentation presentation;
  std::optional<std::uint64_t> expected_order;
  std::vector<std::string> tags;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted by name.
std::vector<CorpusEntry> builtin_corpus();
/// Entries in file order; duplicate names are rejected.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);
std::vector<CorpusEntry> corpus_from_text(std::string_view text);
std::optional<CorpusEntry> find_entry(const std::vector<CorpusEntry>& entries,
                                      const std::string& name);

struct ReportCaps {
  std::uint64_t coset_cap = 50000;
  std::uint64_t order_cap = 32;
  std::uint64_t direct_cap = 12;

  friend bool operator==(const ReportCaps&, const ReportCaps&) = default;
};

struct ReportDocument {
  std::uint64_t schema = 1;
  std::string tool_version = kToolVersion;
  std::string timestamp = kFixedTimestamp;
  ReportCaps caps;
  std::uint64_t seed = 42;
  std::vector<verify::TheoremARow> rows;
  std::vector<verify::CheckReport> checks;
  std::vector<verify::FamilyRow> family;

  /// Rows by name, family rows by family then parameter, checks by group then name.
  void canonicalize();

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

enum class Format { kJson, kCsv };
Format format_from_string(const std::string& s);

std::string to_json(const ReportDocument& doc);
ReportDocument from_json(std::string_view text);
/// Theorem A rows, or family rows when the document holds only those.
std::string to_csv(const ReportDocument& doc);

void write_report(const ReportDocument& doc, Format format, const std::filesystem::path& path);
ReportDocument read_report(const std::filesystem::path& path);

}  // namespace nuengine::corpus
