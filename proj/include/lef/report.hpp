#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lef {

/// One verification outcome. Rendered as
///   level=<level> check=<check> verdict=<verdict> payload=<payload> caps=<caps>
/// with spaces in fields replaced by '_'.
struct ReportRecord {
  std::string level = "all";
  std::string check;
  std::string verdict;
  std::string payload;
  std::string caps = "none";
  /// Hard checks decide the exit status; `ok` is their outcome.
  bool hard = false;
  bool ok = true;
};

class Report {
 public:
  void meta(const std::string& key, const std::string& value) { meta_[key] = value; }
  void add(ReportRecord r) { records_.push_back(std::move(r)); }
  /// Digest of the run inputs; when set, every record line ends in input=<digest>.
  void set_input_digest(std::string d) { digest_ = std::move(d); }
  /// Appends all records and metadata of `other`.
  void merge(const Report& other);

  bool passed() const;
  /// "level/check" for every failing hard check.
  std::vector<std::string> failures() const;
  const std::vector<ReportRecord>& records() const noexcept { return records_; }

  /// Metadata lines "meta key=value" sorted by key, then records sorted by
  /// level (numeric levels first, ascending) and check name.
  std::string render() const;

 private:
  std::map<std::string, std::string> meta_;
  std::vector<ReportRecord> records_;
  std::string digest_;
};

/// Adds word_bound, composition, semidirect and seed metadata.
void add_standard_meta(Report& r, std::uint64_t seed, const std::string& semidirect = "right");

std::string record_line(const ReportRecord& r);

}  // namespace lef
