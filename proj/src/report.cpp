#include "lef/report.hpp"

#include <algorithm>
#include <tuple>

namespace lef {

namespace {

std::string clean(std::string s) {
  if (s.empty()) return "-";
  for (auto& c : s)
    if (c == ' ' || c == '\t' || c == '\n') c = '_';
  return s;
}

auto sort_key(const ReportRecord& r) {
  const bool numeric = !r.level.empty() && r.level.find_first_not_of("0123456789") == std::string::npos;
  return std::make_tuple(numeric ? 0 : 1, numeric ? std::stoull(r.level) : 0ULL, r.level, r.check, r.payload);
}

}  // namespace

void Report::merge(const Report& other) {
  for (const auto& [k, v] : other.meta_) meta_[k] = v;
  if (digest_.empty()) digest_ = other.digest_;
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::passed() const {
  return std::none_of(records_.begin(), records_.end(), [](const auto& r) { return r.hard && !r.ok; });
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& r : records_)
    if (r.hard && !r.ok) out.push_back(r.level + "/" + r.check);
  std::sort(out.begin(), out.end());
  return out;
}

std::string record_line(const ReportRecord& r) {
  return "level=" + clean(r.level) + " check=" + clean(r.check) + " verdict=" + clean(r.verdict) +
         " payload=" + clean(r.payload) + " caps=" + clean(r.caps);
}

std::string Report::render() const {
  std::string out;
  for (const auto& [k, v] : meta_) out += "meta " + clean(k) + "=" + clean(v) + "\n";
  auto sorted = records_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
  for (const auto& r : sorted) {
    out += record_line(r);
    if (!digest_.empty()) out += " input=" + clean(digest_);
    out += "\n";
  }
  return out;
}

void add_standard_meta(Report& r, std::uint64_t seed, const std::string& semidirect) {
  r.meta("word_bound", "2R+1");
  r.meta("composition", "right-to-left");
  r.meta("semidirect", semidirect);
  r.meta("seed", std::to_string(seed));
}

}  // namespace lef
