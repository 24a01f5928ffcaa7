#ifndef MRING_SWEEP_HPP
#define MRING_SWEEP_HPP

#include "mring/audits.hpp"

namespace mring {

/// All set partitions of {0..n-1} as atom lists, in restricted-growth order.
/// One partition per sigma-algebra on n labeled points.
inline std::vector<std::vector<Subset>> set_partitions(int n) {
  std::vector<std::vector<Subset>> out;
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      std::vector<Subset> atoms(static_cast<std::size_t>(blocks), Subset::empty(n));
      for (int p = 0; p < n; ++p)
        atoms[static_cast<std::size_t>(assignment[static_cast<std::size_t>(p)])] =
            atoms[static_cast<std::size_t>(assignment[static_cast<std::size_t>(p)])].with(p);
      out.push_back(std::move(atoms));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      assignment[static_cast<std::size_t>(i)] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(0, 0);
  return out;
}

inline std::string partition_name(int n, const std::vector<Subset>& atoms) {
  std::string name = "n" + std::to_string(n) + "[";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) name += "|";
    for (int p : atoms[i].members()) name += std::to_string(p);
  }
  return name + "]";
}

struct SweptSpace {
  std::string name;
  SpacePtr space;
};

inline std::vector<SweptSpace> swept_spaces(int max_points) {
  if (max_points < 1 || max_points > 5)
    throw validation_error("sweep supports 1 to 5 points");
  std::vector<SweptSpace> out;
  for (int n = 1; n <= max_points; ++n) {
    GroundSet ground = GroundSet::indexed(n);
    for (auto& atoms : set_partitions(n))
      out.push_back({partition_name(n, atoms),
                     MeasurableSpace::make(SigmaAlgebra::from_atoms(ground, std::move(atoms)))});
  }
  return out;
}

/// Full audit of every sigma-algebra on 1..max_points points, plus the
/// pairwise Stone audits.
inline AuditReport sweep(int max_points, std::uint64_t seed,
                         const std::vector<std::string>& filter = {},
                         std::uint64_t cap = kDefaultSubfamilyCap) {
  AuditReport report;
  report.seed = seed;
  auto spaces = swept_spaces(max_points);
  for (const auto& s : spaces) {
    auto entries = run_audits(s.space, s.name, filter, seed, cap);
    report.entries.insert(report.entries.end(), entries.begin(), entries.end());
  }
  if (filter.empty()) {
    std::vector<SpaceSummary> summaries;
    for (const auto& s : spaces) summaries.push_back(summarize_space(s.space, s.name, cap));
    for (std::size_t i = 0; i < summaries.size(); ++i)
      for (std::size_t j = i + 1; j < summaries.size(); ++j) {
        auto entries = run_pair_audits(summaries[i], summaries[j]);
        report.entries.insert(report.entries.end(), entries.begin(), entries.end());
      }
  }
  report.sort_entries();
  return report;
}

}  // namespace mring

#endif
