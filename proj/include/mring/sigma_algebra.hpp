#ifndef MRING_SIGMA_ALGEBRA_HPP
#define MRING_SIGMA_ALGEBRA_HPP

#include <memory>
#include <optional>

#include "mring/core.hpp"

namespace mring {

/// Finite sigma-algebra: canonically ordered family of subsets closed under
/// complement and union, together with its atom partition.
class SigmaAlgebra {
 public:
  static SigmaAlgebra generate(const GroundSet& ground, const std::vector<Subset>& generators) {
    const int n = ground.size();
    for (const auto& g : generators)
      if (g.width() != n) throw input_shape_error("generator width does not match ground set");
    // Points are equivalent iff they lie in exactly the same generators;
    // the equivalence classes are the atoms.
    std::vector<Subset> blocks{Subset::full(n)};
    for (const auto& g : generators) {
      std::vector<Subset> next;
      for (const auto& b : blocks) {
        Subset in = b & g;
        Subset out = b - g;
        if (in.any()) next.push_back(in);
        if (out.any()) next.push_back(out);
      }
      blocks = std::move(next);
    }
    return from_atoms(ground, std::move(blocks));
  }

  static SigmaAlgebra from_atoms(const GroundSet& ground, std::vector<Subset> atoms) {
    canonical_sort(atoms);
    const int k = static_cast<int>(atoms.size());
    if (k > 20) throw resource_error("too many atoms to materialize the algebra");
    std::vector<Subset> sets;
    sets.reserve(1u << k);
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
      Subset u = Subset::empty(ground.size());
      for (int i = 0; i < k; ++i)
        if ((mask >> i) & 1) u = u | atoms[static_cast<std::size_t>(i)];
      sets.push_back(u);
    }
    canonical_sort(sets);
    SigmaAlgebra a(ground, std::move(sets), std::move(atoms));
    a.validate();
    return a;
  }

  /// Builds from an explicit family, checking the closure invariants.
  static SigmaAlgebra from_family(const GroundSet& ground, std::vector<Subset> family) {
    for (const auto& s : family)
      if (s.width() != ground.size()) throw input_shape_error("family width mismatch");
    canonical_sort(family);
    std::vector<Subset> atoms = compute_atoms(ground, family);
    SigmaAlgebra a(ground, std::move(family), std::move(atoms));
    a.validate();
    return a;
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& sets() const { return sets_; }
  const std::vector<Subset>& atoms() const { return atoms_; }
  int size() const { return static_cast<int>(sets_.size()); }

  bool contains(const Subset& s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less);
  }

  int index_of(const Subset& s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s, canonical_less);
    if (it == sets_.end() || !(*it == s)) throw membership_error("subset not in the sigma-algebra");
    return static_cast<int>(it - sets_.begin());
  }

  /// The atom containing point p.
  const Subset& atom_of(int p) const {
    for (const auto& a : atoms_)
      if (a.test(p)) return a;
    throw error("point not covered by atoms");
  }

  int atom_index_of(int p) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i].test(p)) return static_cast<int>(i);
    throw error("point not covered by atoms");
  }

  bool operator==(const SigmaAlgebra& o) const {
    return ground_ == o.ground_ && sets_ == o.sets_;
  }

  void validate() const {
    const int n = ground_.size();
    if (!contains(Subset::full(n))) throw validation_error("sigma-algebra lacks X");
    if (!contains(Subset::empty(n))) throw validation_error("sigma-algebra lacks the empty set");
    for (const auto& a : sets_) {
      if (!contains(a.complement()))
        throw validation_error("not complement-closed at " + render_subset(a, ground_));
      for (const auto& b : sets_)
        if (!contains(a | b))
          throw validation_error("not union-closed at " + render_subset(a, ground_) + " | " +
                                 render_subset(b, ground_));
    }
    // Atoms partition X and every member is the union of the atoms inside it.
    Subset cover = Subset::empty(n);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (atoms_[i].none()) throw validation_error("empty atom");
      for (std::size_t j = i + 1; j < atoms_.size(); ++j)
        if (!atoms_[i].disjoint(atoms_[j])) throw validation_error("overlapping atoms");
      cover = cover | atoms_[i];
    }
    if (!cover.is_full()) throw validation_error("atoms do not cover X");
    for (const auto& s : sets_) {
      Subset u = Subset::empty(n);
      for (const auto& a : atoms_)
        if (a.subset_of(s)) u = u | a;
      if (!(u == s))
        throw validation_error("member is not a union of atoms: " + render_subset(s, ground_));
    }
  }

 private:
  SigmaAlgebra(GroundSet ground, std::vector<Subset> sets, std::vector<Subset> atoms)
      : ground_(std::move(ground)), sets_(std::move(sets)), atoms_(std::move(atoms)) {}

  static std::vector<Subset> compute_atoms(const GroundSet& ground, const std::vector<Subset>& family) {
    // Fingerprint classes over the full family: minimal nonempty members.
    const int n = ground.size();
    std::vector<Subset> blocks{Subset::full(n)};
    for (const auto& g : family) {
      std::vector<Subset> next;
      for (const auto& b : blocks) {
        Subset in = b & g;
        Subset out = b - g;
        if (in.any()) next.push_back(in);
        if (out.any()) next.push_back(out);
      }
      blocks = std::move(next);
    }
    canonical_sort(blocks);
    return blocks;
  }

  GroundSet ground_;
  std::vector<Subset> sets_;
  std::vector<Subset> atoms_;
};

class MeasurableSpace;
using SpacePtr = std::shared_ptr<const MeasurableSpace>;

class MeasurableSpace {
 public:
  explicit MeasurableSpace(SigmaAlgebra algebra) : algebra_(std::move(algebra)) {}

  static SpacePtr make(SigmaAlgebra algebra) {
    return std::make_shared<const MeasurableSpace>(std::move(algebra));
  }
  static SpacePtr generate(const GroundSet& ground, const std::vector<Subset>& generators) {
    return make(SigmaAlgebra::generate(ground, generators));
  }
  static SpacePtr power_set(const GroundSet& ground) {
    std::vector<Subset> atoms;
    for (int i = 0; i < ground.size(); ++i) atoms.push_back(Subset::empty(ground.size()).with(i));
    return make(SigmaAlgebra::from_atoms(ground, std::move(atoms)));
  }

  const GroundSet& ground() const { return algebra_.ground(); }
  const SigmaAlgebra& algebra() const { return algebra_; }
  int points() const { return ground().size(); }
  int atom_count() const { return static_cast<int>(algebra_.atoms().size()); }
  const std::vector<Subset>& atoms() const { return algebra_.atoms(); }
  int atom_index(int p) const { return algebra_.atom_index_of(p); }

 private:
  SigmaAlgebra algebra_;
};

inline void require_member(const MeasurableSpace& space, const Subset& s) {
  if (!space.algebra().contains(s))
    throw membership_error("subset not in the sigma-algebra: " + render_subset(s, space.ground()));
}

/// p < X and A∩B ⊆ p forces A ⊆ p or B ⊆ p, swept over all pairs.
inline bool is_prime_element(const MeasurableSpace& space, const Subset& p) {
  require_member(space, p);
  if (p.is_full()) return false;
  for (const auto& a : space.algebra().sets())
    for (const auto& b : space.algebra().sets())
      if ((a & b).subset_of(p) && !a.subset_of(p) && !b.subset_of(p)) return false;
  return true;
}

inline constexpr std::uint64_t kDefaultSubfamilyCap = 1ull << 20;

/// Literal cover check: every subfamily of the algebra covering A admits a
/// finite subcover. Enumerates subfamilies lazily up to `cap`.
inline bool is_compact_element(const MeasurableSpace& space, const Subset& a,
                               std::uint64_t cap = kDefaultSubfamilyCap) {
  require_member(space, a);
  const auto& sets = space.algebra().sets();
  const std::size_t m = sets.size();
  if (m >= 63 || (1ull << m) > cap)
    throw resource_error("cover enumeration exceeds subfamily cap");
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    Subset u = Subset::empty(a.width());
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) u = u | sets[i];
    if (!a.subset_of(u)) continue;
    // Greedy finite subcover; at finite scale the whole subfamily qualifies,
    // the search keeps the check literal.
    Subset got = Subset::empty(a.width());
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1)) continue;
      if ((sets[i] & (a - got)).any()) got = got | sets[i];
      if (a.subset_of(got)) break;
    }
    if (!a.subset_of(got)) return false;
  }
  return true;
}

inline bool is_compact_space(const MeasurableSpace& space,
                             std::uint64_t cap = kDefaultSubfamilyCap) {
  return is_compact_element(space, Subset::full(space.points()), cap);
}

struct LawCheck {
  std::string law;
  bool pass = true;
  std::string witness;
};

/// Checks the Boolean-algebra and sigma-frame laws by exhaustive sweep.
inline std::vector<LawCheck> audit_boolean_sigma_frame(const MeasurableSpace& space,
                                                       std::uint64_t cap = kDefaultSubfamilyCap) {
  const auto& A = space.algebra();
  const auto& S = A.sets();
  const GroundSet& g = space.ground();
  std::vector<LawCheck> out;

  LawCheck dist{"distributivity"};
  for (const auto& x : S)
    for (const auto& y : S)
      for (const auto& z : S) {
        if (!((x | (y & z)) == ((x | y) & (x | z))) || !((x & (y | z)) == ((x & y) | (x & z)))) {
          dist.pass = false;
          dist.witness = render_subset(x, g) + "," + render_subset(y, g) + "," + render_subset(z, g);
          break;
        }
      }
  out.push_back(dist);

  LawCheck comp{"complementation"};
  for (const auto& x : S) {
    Subset xc = x.complement();
    if (!A.contains(xc) || !(x | xc).is_full() || (x & xc).any()) {
      comp.pass = false;
      comp.witness = render_subset(x, g);
      break;
    }
  }
  out.push_back(comp);

  LawCheck frame{"frame-distribution"};
  const std::size_t m = S.size();
  if (m >= 63 || (1ull << m) > cap) throw resource_error("frame law sweep exceeds subfamily cap");
  for (const auto& x : S) {
    for (std::uint64_t mask = 0; mask < (1ull << m) && frame.pass; ++mask) {
      Subset join = Subset::empty(x.width());
      Subset meet_join = Subset::empty(x.width());
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1) {
          join = join | S[i];
          meet_join = meet_join | (x & S[i]);
        }
      if (!((x & join) == meet_join)) {
        frame.pass = false;
        frame.witness = render_subset(x, g) + " vs subfamily " + std::to_string(mask);
      }
    }
    if (!frame.pass) break;
  }
  out.push_back(frame);
  return out;
}

}  // namespace mring

#endif
