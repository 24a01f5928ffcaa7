#ifndef MRING_RING_IDEAL_HPP
#define MRING_RING_IDEAL_HPP

#include "mring/fn_samples.hpp"
#include "mring/lattice.hpp"

namespace mring {

/// Ideal of M(X), represented intensionally by its Z-filter: f belongs iff
/// Z(f) belongs to the filter. Faithful for all ideals because every ideal
/// of M(X) is a z-ideal. A missing filter marks the improper ideal M(X).
class RingIdealRep {
 public:
  explicit RingIdealRep(LatticeFilter zfilter) : space_(zfilter.space()), zfilter_(std::move(zfilter)) {}

  static RingIdealRep whole_ring(SpacePtr space) { return RingIdealRep(std::move(space)); }

  bool proper() const { return zfilter_.has_value(); }
  const SpacePtr& space() const { return space_; }
  const LatticeFilter& zfilter() const {
    if (!zfilter_) throw error("improper ideal has no Z-filter");
    return *zfilter_;
  }

  bool contains(const MeasurableFn& f) const {
    if (!zfilter_) return true;
    return zfilter_->contains(zero_set(f));
  }

  bool subideal_of(const RingIdealRep& o) const {
    if (!o.zfilter_) return true;
    if (!zfilter_) return false;
    return zfilter_->subfilter_of(*o.zfilter_);
  }

  bool operator==(const RingIdealRep& o) const {
    return space_ == o.space_ && zfilter_ == o.zfilter_;
  }

  /// Intersection of the zero-sets of all members.
  Subset zero_intersection() const {
    if (!zfilter_) return Subset::empty(space_->points());
    return zfilter_->total_intersection();
  }

 private:
  explicit RingIdealRep(SpacePtr space) : space_(std::move(space)) {}
  SpacePtr space_;
  std::optional<LatticeFilter> zfilter_;
};

inline LatticeFilter z_image(const RingIdealRep& ideal) {
  if (!ideal.proper()) throw validation_error("z-image of an improper ideal");
  return ideal.zfilter();
}

inline RingIdealRep z_preimage(const LatticeFilter& filter) { return RingIdealRep(filter); }

/// Maximal ideal together with its fixed-point witness when one exists.
struct MaxIdealPoint {
  RingIdealRep ideal;
  std::optional<int> witness;
};

/// All maximal ideals, computed two independent ways and asserted equal:
/// via Z-ultrafilters and via M^J over prime lattice ideals J.
inline std::vector<MaxIdealPoint> maximal_ideals(const SpacePtr& space) {
  std::vector<RingIdealRep> via_ultra;
  for (const auto& f : enumerate_proper_filters(space))
    if (is_ultrafilter(f)) via_ultra.push_back(z_preimage(f));

  // M^J = {f : coz(f) in J}; as a Z-filter this is the up-set of the
  // complement of J's maximum, but membership is evaluated literally here.
  std::vector<RingIdealRep> via_prime_ideals;
  auto samples = sign_patterns(space);
  for (const auto& j : sigma_id(space)) {
    std::vector<Subset> zsets;
    for (const auto& f : samples)
      if (j.contains(cozero(f))) zsets.push_back(zero_set(f));
    canonical_sort(zsets);
    via_prime_ideals.push_back(z_preimage(LatticeFilter::from_members(space, std::move(zsets))));
  }

  auto key = [](const RingIdealRep& i) { return i.zfilter().generator().bits(); };
  auto by_key = [&](const RingIdealRep& a, const RingIdealRep& b) { return key(a) < key(b); };
  std::sort(via_ultra.begin(), via_ultra.end(), by_key);
  std::sort(via_prime_ideals.begin(), via_prime_ideals.end(), by_key);
  if (!(via_ultra == via_prime_ideals))
    throw error("maximal ideal enumerations disagree");

  std::vector<MaxIdealPoint> out;
  for (auto& ideal : via_ultra) {
    MaxIdealPoint m{std::move(ideal), std::nullopt};
    Subset meet = m.ideal.zero_intersection();
    if (meet.any()) m.witness = meet.first();
    out.push_back(std::move(m));
  }
  return out;
}

/// M_p = {f : f(p) = 0}; its Z-filter is the up-set of the smallest member
/// containing p.
inline MaxIdealPoint point_ideal(const SpacePtr& space, int p) {
  if (p < 0 || p >= space->points()) throw validation_error("unknown point index");
  Subset smallest = Subset::full(space->points());
  for (const auto& s : space->algebra().sets())
    if (s.test(p) && s.popcount() < smallest.popcount()) smallest = s;
  MaxIdealPoint out{z_preimage(LatticeFilter::principal(space, smallest)), std::nullopt};
  Subset meet = out.ideal.zero_intersection();
  if (meet.any()) out.witness = meet.first();
  return out;
}

/// M_P = {f : coz(f) ⊆ P} for a prime element P.
inline RingIdealRep ideal_from_prime_element(const SpacePtr& space, const Subset& p) {
  if (!is_prime_element(*space, p)) throw membership_error("not a prime element of the algebra");
  return z_preimage(LatticeFilter::principal(space, p.complement()));
}

inline RingIdealRep annihilator(const MeasurableFn& f) {
  Subset coz = cozero(f);
  if (coz.none()) return RingIdealRep::whole_ring(f.space());
  return z_preimage(LatticeFilter::principal(f.space(), coz));
}

/// Literal annihilator comparison over a sample: Ann(f) ⊆ Ann(g).
inline bool ann_subset(const MeasurableFn& f, const MeasurableFn& g,
                       const std::vector<MeasurableFn>& samples) {
  for (const auto& h : samples)
    if ((h * f).is_zero() && !((h * g).is_zero())) return false;
  return true;
}

/// Maximal ideals containing f.
inline std::vector<int> mason_set(const MeasurableFn& f, const std::vector<MaxIdealPoint>& maximal) {
  std::vector<int> out;
  for (std::size_t i = 0; i < maximal.size(); ++i)
    if (maximal[i].ideal.contains(f)) out.push_back(static_cast<int>(i));
  return out;
}

struct PrimeIdealAudit {
  bool via_prime_filter = false;   // Z-filter is a prime filter
  bool contains_prime = false;     // contains some prime ideal
  bool product_condition = false;  // fg = 0 forces f or g inside
  bool sign_condition = false;     // some zero-set in Z[I] where f keeps sign
  bool agree() const {
    return via_prime_filter == contains_prime && contains_prime == product_condition &&
           product_condition == sign_condition;
  }
  bool prime() const { return via_prime_filter && agree(); }
};

/// Evaluates the four primeness conditions independently on the function
/// quotient and reports their (dis)agreement.
inline PrimeIdealAudit is_prime_ideal(const RingIdealRep& ideal) {
  if (!ideal.proper()) throw validation_error("primeness is asked of proper ideals");
  const auto& space = ideal.space();
  PrimeIdealAudit audit;

  audit.via_prime_filter = is_prime_filter(ideal.zfilter());

  audit.contains_prime = false;
  for (const auto& f : enumerate_proper_filters(space)) {
    if (!is_prime_filter(f)) continue;
    if (z_preimage(f).subideal_of(ideal)) {
      audit.contains_prime = true;
      break;
    }
  }

  auto quotient = sign_patterns(space);
  audit.product_condition = true;
  for (const auto& f : quotient) {
    for (const auto& g : quotient) {
      if ((f * g).is_zero() && !ideal.contains(f) && !ideal.contains(g)) {
        audit.product_condition = false;
        break;
      }
    }
    if (!audit.product_condition) break;
  }

  audit.sign_condition = true;
  for (const auto& f : quotient) {
    bool found = false;
    for (const auto& z : ideal.zfilter().members()) {
      bool pos = false, neg = false;
      for (int p : z.members()) {
        if (f.at(p) > Rational(0)) pos = true;
        if (f.at(p) < Rational(0)) neg = true;
      }
      if (!(pos && neg)) {
        found = true;
        break;
      }
    }
    if (!found) {
      audit.sign_condition = false;
      break;
    }
  }
  return audit;
}

struct ZIdealAudit {
  bool z_algebra_ideal = false;  // Z(f) ⊆ Z(g), f inside forces g inside
  bool mason_z_ideal = false;    // closed under the Mason relation
  bool z_circ_ideal = false;     // annihilator-equality and double-annihilator closure
  bool all() const { return z_algebra_ideal && mason_z_ideal && z_circ_ideal; }
};

inline ZIdealAudit z_ideal_audits(const RingIdealRep& ideal, Rng& rng) {
  if (!ideal.proper()) throw validation_error("z-ideal audits need a proper ideal");
  const auto& space = ideal.space();
  auto samples = sample_fns(space, rng, 20);
  auto maximal = maximal_ideals(space);
  ZIdealAudit audit{true, true, true};
  for (const auto& f : samples) {
    if (!ideal.contains(f)) continue;
    for (const auto& g : samples) {
      if (zero_set(f).subset_of(zero_set(g)) && !ideal.contains(g)) audit.z_algebra_ideal = false;
      auto mf = mason_set(f, maximal);
      auto mg = mason_set(g, maximal);
      if (std::includes(mg.begin(), mg.end(), mf.begin(), mf.end()) && !ideal.contains(g))
        audit.mason_z_ideal = false;
      bool ann_eq = ann_subset(f, g, samples) && ann_subset(g, f, samples);
      if (ann_eq && !ideal.contains(g)) audit.z_circ_ideal = false;
    }
    // Ann(Ann(f)) ⊆ I: members of the double annihilator are those killed by
    // everything that kills f.
    for (const auto& g : samples) {
      bool in_double_ann = true;
      for (const auto& h : samples)
        if ((h * f).is_zero() && !(h * g).is_zero()) in_double_ann = false;
      if (in_double_ann && !ideal.contains(g)) audit.z_circ_ideal = false;
    }
  }
  return audit;
}

struct GelfandAudit {
  bool pass = true;
  std::string witness;
};

/// Every prime ideal sits inside exactly one maximal ideal.
inline GelfandAudit gelfand_audit(const SpacePtr& space) {
  GelfandAudit out;
  auto maximal = maximal_ideals(space);
  for (const auto& f : enumerate_proper_filters(space)) {
    if (!is_prime_filter(f)) continue;
    RingIdealRep prime = z_preimage(f);
    int count = 0;
    for (const auto& m : maximal)
      if (prime.subideal_of(m.ideal)) ++count;
    if (count != 1) {
      out.pass = false;
      out.witness = "prime at " + render_subset(f.generator(), space->ground()) + " lies in " +
                    std::to_string(count) + " maximal ideals";
      return out;
    }
  }
  return out;
}

struct CompactnessAudit {
  bool lattice_compact = false;
  bool proper_ideals_fixed = false;
  bool maximal_ideals_fixed = false;
  bool zfilters_fixed = false;
  bool ultrafilters_fixed = false;
  bool equivalent() const {
    return lattice_compact == proper_ideals_fixed && proper_ideals_fixed == maximal_ideals_fixed &&
           maximal_ideals_fixed == zfilters_fixed && zfilters_fixed == ultrafilters_fixed;
  }
};

/// The five compactness conditions, each by its own literal procedure.
inline CompactnessAudit compactness_equivalences(const SpacePtr& space,
                                                 std::uint64_t cap = kDefaultSubfamilyCap) {
  CompactnessAudit audit;
  audit.lattice_compact = is_compact_space(*space, cap);

  // (2) every proper ideal of M(X) is fixed: intersect zero-sets of sampled members.
  audit.proper_ideals_fixed = true;
  auto quotient = sign_patterns(space);
  for (const auto& f : enumerate_proper_filters(space)) {
    RingIdealRep ideal = z_preimage(f);
    Subset meet = Subset::full(space->points());
    for (const auto& fn : quotient)
      if (ideal.contains(fn)) meet = meet & zero_set(fn);
    if (meet.none()) audit.proper_ideals_fixed = false;
  }

  // (3) every maximal ideal is fixed.
  audit.maximal_ideals_fixed = true;
  for (const auto& m : maximal_ideals(space)) {
    Subset meet = Subset::full(space->points());
    for (const auto& fn : quotient)
      if (m.ideal.contains(fn)) meet = meet & zero_set(fn);
    if (meet.none()) audit.maximal_ideals_fixed = false;
  }

  // (4) every Z-filter is fixed: intersect the member sets directly.
  audit.zfilters_fixed = true;
  for (const auto& f : enumerate_proper_filters(space)) {
    Subset meet = Subset::full(space->points());
    for (const auto& s : f.members()) meet = meet & s;
    if (meet.none()) audit.zfilters_fixed = false;
  }

  // (5) every Z-ultrafilter is fixed.
  audit.ultrafilters_fixed = true;
  for (const auto& f : enumerate_proper_filters(space)) {
    if (!is_ultrafilter(f)) continue;
    Subset meet = Subset::full(space->points());
    for (const auto& s : f.members()) meet = meet & s;
    if (meet.none()) audit.ultrafilters_fixed = false;
  }
  return audit;
}

}  // namespace mring

#endif
