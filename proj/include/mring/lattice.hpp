#ifndef MRING_LATTICE_HPP
#define MRING_LATTICE_HPP

#include <optional>

#include "mring/sigma_algebra.hpp"

namespace mring {

/// Proper filter of the sigma-algebra lattice; models a Z_A-filter.
/// Finite lattices make every filter principal, but the member list is kept
/// explicit so audits never rely on principality.
class LatticeFilter {
 public:
  static LatticeFilter principal(SpacePtr space, const Subset& g) {
    require_member(*space, g);
    if (g.none()) throw membership_error("principal filter at the empty set is improper");
    std::vector<Subset> members;
    for (const auto& s : space->algebra().sets())
      if (g.subset_of(s)) members.push_back(s);
    return LatticeFilter(std::move(space), std::move(members), g);
  }

  static LatticeFilter from_members(SpacePtr space, std::vector<Subset> members) {
    canonical_sort(members);
    if (members.empty()) throw validation_error("filter must be nonempty");
    Subset g = Subset::full(space->points());
    for (const auto& m : members) {
      require_member(*space, m);
      if (m.none()) throw validation_error("filter containing the empty set is improper");
      g = g & m;
    }
    for (const auto& a : members) {
      for (const auto& b : members) {
        Subset ab = a & b;
        if (!std::binary_search(members.begin(), members.end(), ab, canonical_less))
          throw validation_error("family not meet-closed");
      }
      for (const auto& s : space->algebra().sets())
        if (a.subset_of(s) && !std::binary_search(members.begin(), members.end(), s, canonical_less))
          throw validation_error("family not up-closed");
    }
    if (!std::binary_search(members.begin(), members.end(), g, canonical_less))
      throw validation_error("filter minimum missing");
    return LatticeFilter(std::move(space), std::move(members), g);
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<Subset>& members() const { return members_; }
  const Subset& generator() const { return generator_; }

  bool contains(const Subset& s) const {
    return std::binary_search(members_.begin(), members_.end(), s, canonical_less);
  }
  bool subfilter_of(const LatticeFilter& o) const {
    return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end(),
                         canonical_less);
  }
  bool operator==(const LatticeFilter& o) const {
    return space_ == o.space_ && members_ == o.members_;
  }

  Subset total_intersection() const {
    Subset g = Subset::full(space_->points());
    for (const auto& m : members_) g = g & m;
    return g;
  }

 private:
  LatticeFilter(SpacePtr space, std::vector<Subset> members, Subset generator)
      : space_(std::move(space)), members_(std::move(members)), generator_(generator) {}

  SpacePtr space_;
  std::vector<Subset> members_;
  Subset generator_;
};

/// Ideal of the sigma-algebra lattice (down- and join-closed).
class LatticeIdeal {
 public:
  static LatticeIdeal principal(SpacePtr space, const Subset& g) {
    require_member(*space, g);
    std::vector<Subset> members;
    for (const auto& s : space->algebra().sets())
      if (s.subset_of(g)) members.push_back(s);
    return LatticeIdeal(std::move(space), std::move(members), g);
  }

  static LatticeIdeal from_members(SpacePtr space, std::vector<Subset> members) {
    canonical_sort(members);
    if (members.empty()) throw validation_error("ideal must be nonempty");
    Subset g = Subset::empty(space->points());
    for (const auto& m : members) {
      require_member(*space, m);
      g = g | m;
    }
    for (const auto& a : members) {
      for (const auto& b : members)
        if (!std::binary_search(members.begin(), members.end(), a | b, canonical_less))
          throw validation_error("family not join-closed");
      for (const auto& s : space->algebra().sets())
        if (s.subset_of(a) && !std::binary_search(members.begin(), members.end(), s, canonical_less))
          throw validation_error("family not down-closed");
    }
    if (!std::binary_search(members.begin(), members.end(), g, canonical_less))
      throw validation_error("ideal maximum missing");
    return LatticeIdeal(std::move(space), std::move(members), g);
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<Subset>& members() const { return members_; }
  const Subset& generator() const { return generator_; }
  bool proper() const { return !generator_.is_full(); }

  bool contains(const Subset& s) const {
    return std::binary_search(members_.begin(), members_.end(), s, canonical_less);
  }
  bool subideal_of(const LatticeIdeal& o) const {
    return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end(),
                         canonical_less);
  }
  bool operator==(const LatticeIdeal& o) const {
    return space_ == o.space_ && members_ == o.members_;
  }

 private:
  LatticeIdeal(SpacePtr space, std::vector<Subset> members, Subset generator)
      : space_(std::move(space)), members_(std::move(members)), generator_(generator) {}

  SpacePtr space_;
  std::vector<Subset> members_;
  Subset generator_;
};

inline std::vector<LatticeFilter> enumerate_proper_filters(const SpacePtr& space) {
  std::vector<LatticeFilter> out;
  for (const auto& g : space->algebra().sets())
    if (g.any()) out.push_back(LatticeFilter::principal(space, g));
  return out;
}

inline std::vector<LatticeIdeal> enumerate_ideals(const SpacePtr& space) {
  std::vector<LatticeIdeal> out;
  for (const auto& g : space->algebra().sets()) out.push_back(LatticeIdeal::principal(space, g));
  return out;
}

/// No proper filter strictly contains F.
inline bool is_ultrafilter(const LatticeFilter& f) {
  for (const auto& g : enumerate_proper_filters(f.space()))
    if (f.subfilter_of(g) && !(g == f)) return false;
  return true;
}

inline bool is_prime_filter(const LatticeFilter& f) {
  for (const auto& a : f.space()->algebra().sets())
    for (const auto& b : f.space()->algebra().sets())
      if (f.contains(a | b) && !f.contains(a) && !f.contains(b)) return false;
  return true;
}

inline bool is_prime_lattice_ideal(const LatticeIdeal& j) {
  if (!j.proper()) return false;
  for (const auto& a : j.space()->algebra().sets())
    for (const auto& b : j.space()->algebra().sets())
      if (j.contains(a & b) && !j.contains(a) && !j.contains(b)) return false;
  return true;
}

inline bool is_maximal_lattice_ideal(const LatticeIdeal& j) {
  if (!j.proper()) return false;
  for (const auto& k : enumerate_ideals(j.space()))
    if (k.proper() && j.subideal_of(k) && !(k == j)) return false;
  return true;
}

/// All prime ideals of the lattice Id ordering.
inline std::vector<LatticeIdeal> sigma_id(const SpacePtr& space) {
  std::vector<LatticeIdeal> out;
  for (const auto& j : enumerate_ideals(space))
    if (is_prime_lattice_ideal(j)) out.push_back(j);
  return out;
}

inline std::vector<LatticeIdeal> max_id(const SpacePtr& space) {
  std::vector<LatticeIdeal> out;
  for (const auto& j : enumerate_ideals(space))
    if (is_maximal_lattice_ideal(j)) out.push_back(j);
  return out;
}

/// Literal subfamily sweep with early exit on an empty intersection.
inline bool has_fip(const SpacePtr& space, const std::vector<Subset>& family,
                    std::uint64_t cap = 1ull << 16) {
  if (family.empty()) throw input_shape_error("FIP check needs a nonempty family");
  for (const auto& s : family) require_member(*space, s);
  const std::size_t m = family.size();
  if (m >= 63 || (1ull << m) > cap) throw resource_error("FIP sweep exceeds subfamily cap");
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    Subset meet = Subset::full(space->points());
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) meet = meet & family[i];
    if (meet.none()) return false;
  }
  return true;
}

/// Extends a FIP family to an ultrafilter containing it.
inline LatticeFilter fip_extension(const SpacePtr& space, const std::vector<Subset>& family,
                                   std::uint64_t cap = 1ull << 16) {
  if (!has_fip(space, family, cap)) throw no_extension_error("family lacks the finite intersection property");
  Subset meet = Subset::full(space->points());
  for (const auto& s : family) meet = meet & s;
  // Shrink to an atom below the total meet; its principal filter is an
  // ultrafilter containing every member of the family.
  for (const auto& atom : space->atoms())
    if (atom.subset_of(meet)) return LatticeFilter::principal(space, atom);
  throw no_extension_error("no atom under the family meet");
}

struct FixedOrFree {
  bool fixed = false;
  std::optional<int> witness;  // a point in the total intersection
};

inline FixedOrFree fixed_or_free(const LatticeFilter& f) {
  Subset meet = f.total_intersection();
  FixedOrFree out;
  out.fixed = meet.any();
  if (out.fixed) out.witness = meet.first();
  return out;
}

}  // namespace mring

#endif
