#ifndef MRING_REPORT_HPP
#define MRING_REPORT_HPP

#include <nlohmann/json.hpp>

#include "mring/core.hpp"

namespace mring {

enum class AuditStatus { Pass, Fail, Skip };

inline const char* to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Pass: return "PASS";
    case AuditStatus::Fail: return "FAIL";
    case AuditStatus::Skip: return "SKIP";
  }
  return "?";
}

struct AuditEntry {
  std::string prop;
  std::string space;
  AuditStatus status = AuditStatus::Pass;
  std::string detail;  // witness on failure, reason on skip
  double ms = 0.0;
};

struct AuditReport {
  std::uint64_t seed = 0;
  std::vector<AuditEntry> entries;

  void sort_entries() {
    std::stable_sort(entries.begin(), entries.end(), [](const AuditEntry& a, const AuditEntry& b) {
      if (a.prop != b.prop) return a.prop < b.prop;
      return a.space < b.space;
    });
  }

  bool all_pass() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const AuditEntry& e) { return e.status == AuditStatus::Fail; });
  }

  int count(AuditStatus s) const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [&](const AuditEntry& e) { return e.status == s; }));
  }

  // Reports are byte-identical for identical (input, seed, version); wall
  // clock timings are opt-in because they break that.
  std::string render_text(bool timings = false) const {
    std::string out;
    out += "mring audit report (version " + std::string(kVersion) +
           ", seed " + std::to_string(seed) + ")\n";
    for (const auto& e : entries) {
      out += "[" + std::string(to_string(e.status)) + "] " + e.prop + " space=" + e.space;
      if (!e.detail.empty()) out += " :: " + e.detail;
      if (timings) out += " (" + std::to_string(e.ms) + " ms)";
      out += "\n";
    }
    out += "summary: " + std::to_string(count(AuditStatus::Pass)) + " pass, " +
           std::to_string(count(AuditStatus::Fail)) + " fail, " +
           std::to_string(count(AuditStatus::Skip)) + " skip\n";
    return out;
  }

  std::string render_json(bool timings = false) const {
    nlohmann::ordered_json doc;
    doc["tool"] = "mring";
    doc["version"] = kVersion;
    doc["seed"] = seed;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
      nlohmann::ordered_json je;
      je["prop"] = e.prop;
      je["space"] = e.space;
      je["status"] = to_string(e.status);
      je["detail"] = e.detail;
      if (timings) je["ms"] = e.ms;
      doc["entries"].push_back(je);
    }
    doc["summary"] = {{"pass", count(AuditStatus::Pass)},
                      {"fail", count(AuditStatus::Fail)},
                      {"skip", count(AuditStatus::Skip)}};
    return doc.dump(2) + "\n";
  }
};

}  // namespace mring

#endif
