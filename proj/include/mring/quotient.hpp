#ifndef MRING_QUOTIENT_HPP
#define MRING_QUOTIENT_HPP

#include <map>

#include "mring/ring_ideal.hpp"

namespace mring {

/// Point map between spaces. Flags are recomputed from the map, never trusted.
class SpaceMorphism {
 public:
  SpaceMorphism(SpacePtr source, SpacePtr target, std::vector<int> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (static_cast<int>(map_.size()) != source_->points())
      throw input_shape_error("morphism must map every source point");
    for (int y : map_)
      if (y < 0 || y >= target_->points()) throw input_shape_error("morphism target out of range");
    recompute_flags();
  }

  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int apply(int p) const { return map_.at(static_cast<std::size_t>(p)); }

  Subset image(const Subset& a) const {
    Subset out = Subset::empty(target_->points());
    for (int p : a.members()) out = out.with(apply(p));
    return out;
  }
  Subset preimage(const Subset& b) const {
    Subset out = Subset::empty(source_->points());
    for (int p = 0; p < source_->points(); ++p)
      if (b.test(apply(p))) out = out.with(p);
    return out;
  }

  bool injective() const { return injective_; }
  bool surjective() const { return surjective_; }
  bool forward_measurable() const { return forward_measurable_; }
  bool backward_measurable() const { return backward_measurable_; }

  /// Bijective and A measurable iff its image is, for every subset A.
  bool is_homeomorphism() const {
    if (!injective_ || !surjective_) return false;
    const int n = source_->points();
    if (n <= 16) {
      for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        Subset a(n, bits);
        if (source_->algebra().contains(a) != target_->algebra().contains(image(a))) return false;
      }
      return true;
    }
    return forward_measurable_ && backward_measurable_;
  }

 private:
  void recompute_flags() {
    std::vector<int> hits(static_cast<std::size_t>(target_->points()), 0);
    for (int y : map_) ++hits[static_cast<std::size_t>(y)];
    injective_ = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
    surjective_ = std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
    forward_measurable_ = true;
    for (const auto& a : source_->algebra().sets())
      if (!target_->algebra().contains(image(a))) forward_measurable_ = false;
    backward_measurable_ = true;
    for (const auto& b : target_->algebra().sets())
      if (!source_->algebra().contains(preimage(b))) backward_measurable_ = false;
  }

  SpacePtr source_;
  SpacePtr target_;
  std::vector<int> map_;
  bool injective_ = false, surjective_ = false;
  bool forward_measurable_ = false, backward_measurable_ = false;
};

/// Smallest sigma-algebra making every given function measurable; generated
/// by the level sets.
inline SigmaAlgebra weak_sigma_algebra(const GroundSet& ground,
                                       const std::vector<std::vector<Rational>>& functions) {
  std::vector<Subset> generators;
  for (const auto& values : functions) {
    if (static_cast<int>(values.size()) != ground.size())
      throw input_shape_error("function not defined on the whole ground set");
    std::map<Rational, Subset> levels;
    for (int p = 0; p < ground.size(); ++p) {
      auto [it, fresh] = levels.try_emplace(values[static_cast<std::size_t>(p)],
                                            Subset::empty(ground.size()));
      it->second = it->second.with(p);
    }
    for (const auto& [value, level] : levels) generators.push_back(level);
  }
  return SigmaAlgebra::generate(ground, generators);
}

/// Partition of X by x ~ x' iff f(x) = f(x') for every f, audited against the
/// sampled function quotient rather than assumed equal to the atoms.
inline std::vector<Subset> indistinguishability(const SpacePtr& space) {
  auto quotient = sign_patterns(space);
  std::vector<Subset> classes;
  std::vector<bool> assigned(static_cast<std::size_t>(space->points()), false);
  for (int x = 0; x < space->points(); ++x) {
    if (assigned[static_cast<std::size_t>(x)]) continue;
    Subset cls = Subset::empty(space->points()).with(x);
    for (int y = x + 1; y < space->points(); ++y) {
      if (assigned[static_cast<std::size_t>(y)]) continue;
      bool same = true;
      for (const auto& f : quotient)
        if (f.at(x) != f.at(y)) {
          same = false;
          break;
        }
      if (same) {
        cls = cls.with(y);
        assigned[static_cast<std::size_t>(y)] = true;
      }
    }
    assigned[static_cast<std::size_t>(x)] = true;
    classes.push_back(cls);
  }
  canonical_sort(classes);
  // Derived theorem: the classes coincide with the atoms.
  if (!(classes == space->atoms())) throw error("indistinguishability classes differ from atoms");
  return classes;
}

struct TMeasurableAudit {
  bool point_separation = false;   // measurable set separates each pair
  bool point_ideals_distinct = false;
  bool maximal_zero_bound = false; // every maximal ideal's zero meet has <= 1 point
  bool prime_zero_bound = false;   // same bound over prime ideals
  bool agree() const {
    return point_separation == point_ideals_distinct && point_ideals_distinct == maximal_zero_bound &&
           maximal_zero_bound == prime_zero_bound;
  }
  bool t_measurable() const { return point_separation; }
};

inline TMeasurableAudit t_measurable_audit(const SpacePtr& space) {
  TMeasurableAudit audit;

  audit.point_separation = true;
  for (int x = 0; x < space->points(); ++x)
    for (int y = x + 1; y < space->points(); ++y) {
      bool separated = false;
      for (const auto& s : space->algebra().sets())
        if (s.test(x) != s.test(y)) separated = true;
      if (!separated) audit.point_separation = false;
    }

  audit.point_ideals_distinct = true;
  for (int x = 0; x < space->points(); ++x)
    for (int y = x + 1; y < space->points(); ++y)
      if (point_ideal(space, x).ideal == point_ideal(space, y).ideal)
        audit.point_ideals_distinct = false;

  audit.maximal_zero_bound = true;
  for (const auto& m : maximal_ideals(space))
    if (m.ideal.zero_intersection().popcount() > 1) audit.maximal_zero_bound = false;

  audit.prime_zero_bound = true;
  for (const auto& f : enumerate_proper_filters(space)) {
    if (!is_prime_filter(f)) continue;
    if (z_preimage(f).zero_intersection().popcount() > 1) audit.prime_zero_bound = false;
  }
  return audit;
}

inline bool is_t_measurable(const SpacePtr& space) {
  auto audit = t_measurable_audit(space);
  if (!audit.agree()) throw error("T-measurability conditions disagree");
  return audit.t_measurable();
}

struct Quotient {
  SpacePtr quotient;
  SpaceMorphism theta;
};

/// X/~ with its weak sigma-algebra and the projection theta.
inline Quotient t_quotient(const SpacePtr& space) {
  auto classes = indistinguishability(space);
  const int k = static_cast<int>(classes.size());

  std::vector<std::string> labels;
  for (const auto& cls : classes)
    labels.push_back("[" + space->ground().label(cls.first()) + "]");
  GroundSet yground(labels);

  // Induced functions h_f on the classes, for the sampled quotient.
  std::vector<std::vector<Rational>> induced;
  for (const auto& f : sign_patterns(space)) {
    std::vector<Rational> values(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c)
      values[static_cast<std::size_t>(c)] = f.at(classes[static_cast<std::size_t>(c)].first());
    induced.push_back(std::move(values));
  }
  SpacePtr y = MeasurableSpace::make(weak_sigma_algebra(yground, induced));

  std::vector<int> theta_map(static_cast<std::size_t>(space->points()));
  for (int p = 0; p < space->points(); ++p)
    for (int c = 0; c < k; ++c)
      if (classes[static_cast<std::size_t>(c)].test(p)) theta_map[static_cast<std::size_t>(p)] = c;

  SpaceMorphism theta(space, y, std::move(theta_map));
  if (!theta.surjective()) throw error("quotient projection must be onto");
  if (!is_t_measurable(y)) throw error("quotient failed to be T-measurable");
  return Quotient{std::move(y), std::move(theta)};
}

/// Pulls g on the quotient back along theta.
inline MeasurableFn pull_back(const SpaceMorphism& theta, const MeasurableFn& g) {
  std::vector<Rational> values(static_cast<std::size_t>(theta.source()->points()));
  for (int p = 0; p < theta.source()->points(); ++p) values[static_cast<std::size_t>(p)] = g.at(theta.apply(p));
  return MeasurableFn::make(theta.source(), std::move(values));
}

/// Induced h_f on the quotient with h_f(theta(x)) = f(x).
inline MeasurableFn push_forward(const SpaceMorphism& theta, const MeasurableFn& f) {
  std::vector<std::optional<Rational>> values(static_cast<std::size_t>(theta.target()->points()));
  for (int p = 0; p < theta.source()->points(); ++p) {
    auto& slot = values[static_cast<std::size_t>(theta.apply(p))];
    if (slot && *slot != f.at(p)) throw error("function does not factor through the quotient");
    slot = f.at(p);
  }
  std::vector<Rational> out;
  for (auto& v : values) {
    if (!v) throw error("quotient point with no preimage");
    out.push_back(*v);
  }
  return MeasurableFn::make(theta.target(), std::move(out));
}

struct Spectrum {
  SpacePtr spectrum;                       // points are maximal ideals
  std::vector<MaxIdealPoint> ideals;       // in spectrum point order
  std::optional<SpaceMorphism> phi;        // x -> M_x, when X is T-measurable
  std::string phi_note;
};

/// max(M(X)) with the algebra generated by the sets F(f) = {M : f in M}.
inline Spectrum spectrum(const SpacePtr& space) {
  auto ideals = maximal_ideals(space);
  std::sort(ideals.begin(), ideals.end(), [](const MaxIdealPoint& a, const MaxIdealPoint& b) {
    return canonical_less(a.ideal.zfilter().generator(), b.ideal.zfilter().generator());
  });
  const int m = static_cast<int>(ideals.size());

  std::vector<std::string> labels;
  for (const auto& mi : ideals)
    labels.push_back("M" + render_subset(mi.ideal.zfilter().generator(), space->ground()));
  GroundSet ground(labels);

  std::vector<Subset> generators;
  for (const auto& f : sign_patterns(space)) {
    Subset ff = Subset::empty(m);
    for (int i = 0; i < m; ++i)
      if (ideals[static_cast<std::size_t>(i)].ideal.contains(f)) ff = ff.with(i);
    generators.push_back(ff);
  }
  SpacePtr spec = MeasurableSpace::make(SigmaAlgebra::generate(ground, generators));

  Spectrum out{spec, std::move(ideals), std::nullopt, ""};
  if (is_t_measurable(space)) {
    std::vector<int> phi_map(static_cast<std::size_t>(space->points()));
    for (int x = 0; x < space->points(); ++x) {
      auto mx = point_ideal(space, x);
      bool found = false;
      for (int i = 0; i < m; ++i)
        if (out.ideals[static_cast<std::size_t>(i)].ideal == mx.ideal) {
          phi_map[static_cast<std::size_t>(x)] = i;
          found = true;
        }
      if (!found) throw error("point ideal missing from the spectrum");
    }
    out.phi = SpaceMorphism(space, spec, std::move(phi_map));
  } else {
    out.phi_note = "input is not T-measurable; the point map x -> M_x is not injective";
  }
  return out;
}

struct HomeoDecision {
  bool homeomorphic = false;
  std::optional<SpaceMorphism> witness;
  std::string certificate;
};

/// Decides homeomorphism via the multiset of atom sizes, constructing and
/// verifying a witness on YES.
inline HomeoDecision spaces_homeomorphic(const SpacePtr& x, const SpacePtr& y) {
  auto sizes = [](const SpacePtr& s) {
    std::vector<int> out;
    for (const auto& a : s->atoms()) out.push_back(a.popcount());
    std::sort(out.begin(), out.end());
    return out;
  };
  auto sx = sizes(x), sy = sizes(y);
  if (sx != sy) {
    HomeoDecision out;
    auto show = [](const std::vector<int>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    out.certificate = "atom size multisets differ: " + show(sx) + " vs " + show(sy);
    return out;
  }
  // Atoms are already canonically ordered (size then bit pattern); pairing
  // them in order is the lexicographically least matching.
  std::vector<int> map(static_cast<std::size_t>(x->points()), -1);
  for (std::size_t i = 0; i < x->atoms().size(); ++i) {
    auto from = x->atoms()[i].members();
    auto to = y->atoms()[i].members();
    for (std::size_t j = 0; j < from.size(); ++j)
      map[static_cast<std::size_t>(from[j])] = to[j];
  }
  SpaceMorphism witness(x, y, std::move(map));
  if (!witness.is_homeomorphism()) throw error("constructed atom matching failed verification");
  HomeoDecision out;
  out.homeomorphic = true;
  out.witness = std::move(witness);
  out.certificate = "atom size multisets agree";
  return out;
}

struct RingIsoDecision {
  bool isomorphic = false;
  std::string note;
};

/// M(X) is determined at finite scale by the atom count.
inline RingIsoDecision rings_isomorphic(const SpacePtr& x, const SpacePtr& y) {
  RingIsoDecision out;
  out.isomorphic = x->atom_count() == y->atom_count();
  out.note = "atom counts " + std::to_string(x->atom_count()) + " vs " +
             std::to_string(y->atom_count());
  return out;
}

}  // namespace mring

#endif
