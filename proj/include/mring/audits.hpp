#ifndef MRING_AUDITS_HPP
#define MRING_AUDITS_HPP

#include <chrono>
#include <functional>

#include "mring/quotient.hpp"
#include "mring/report.hpp"

namespace mring {
namespace detail {

inline bool is_maximal_ring_ideal(const RingIdealRep& ideal) {
  if (!ideal.proper()) return false;
  for (const auto& f : enumerate_proper_filters(ideal.space())) {
    RingIdealRep bigger = z_preimage(f);
    if (ideal.subideal_of(bigger) && !(bigger == ideal)) return false;
  }
  return true;
}

/// M^J = {f : coz(f) in J}, derived literally from sampled membership.
inline RingIdealRep ideal_over_lattice_ideal(const SpacePtr& space, const LatticeIdeal& j,
                                             const std::vector<MeasurableFn>& quotient) {
  std::vector<Subset> zsets;
  for (const auto& f : quotient)
    if (j.contains(cozero(f))) zsets.push_back(zero_set(f));
  canonical_sort(zsets);
  return z_preimage(LatticeFilter::from_members(space, std::move(zsets)));
}

inline Subset coz_union(const RingIdealRep& ideal, const std::vector<MeasurableFn>& quotient) {
  Subset u = Subset::empty(ideal.space()->points());
  for (const auto& f : quotient)
    if (ideal.contains(f)) u = u | cozero(f);
  return u;
}

inline bool fn_is_measurable_on(const SpacePtr& space, const std::vector<Rational>& values) {
  try {
    (void)MeasurableFn::make(space, values);
    return true;
  } catch (const measurability_error&) {
    return false;
  }
}

}  // namespace detail

struct AuditContext {
  SpacePtr space;
  std::string space_name;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultSubfamilyCap;
};

using AuditFn = std::function<void(const AuditContext&, AuditEntry&)>;

inline AuditEntry run_one_audit(const std::string& prop, const AuditFn& fn, const AuditContext& ctx) {
  AuditEntry entry{prop, ctx.space_name, AuditStatus::Pass, "", 0.0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    fn(ctx, entry);
  } catch (const resource_error& e) {
    entry.status = AuditStatus::Skip;
    entry.detail = std::string("resource cap: ") + e.what();
  } catch (const error& e) {
    entry.status = AuditStatus::Fail;
    entry.detail = e.what();
  }
  entry.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return entry;
}

inline void fail(AuditEntry& entry, const std::string& witness) {
  entry.status = AuditStatus::Fail;
  if (entry.detail.empty()) entry.detail = witness;
}

inline void skip(AuditEntry& entry, const std::string& reason) {
  entry.status = AuditStatus::Skip;
  entry.detail = reason;
}

// ---------------------------------------------------------------------------
// Per-proposition audits. Each evaluates its claim by a literal computation
// over the space and records a minimal witness on failure.
// ---------------------------------------------------------------------------

inline void audit_M15(const AuditContext& ctx, AuditEntry& e) {
  auto image = zero_set_image(ctx.space);  // throws on mismatch
  if (!(image == ctx.space->algebra().sets())) fail(e, "zero-set image differs from the algebra");
}

inline void audit_unit(const AuditContext& ctx, AuditEntry& e) {
  Rng rng(ctx.seed);
  for (const auto& f : sample_fns(ctx.space, rng, 20)) {
    if (zero_set(f).none()) {
      MeasurableFn inv = inverse(f);
      if (!((f * inv) == MeasurableFn::one(ctx.space)))
        return fail(e, "inverse does not multiply to one");
      if (!is_unit(f)) return fail(e, "empty zero-set not recognized as unit");
    } else {
      if (is_unit(f)) return fail(e, "nonempty zero-set classified as unit");
      // no sampled g inverts f
      for (const auto& g : sign_patterns(ctx.space))
        if ((f * g) == MeasurableFn::one(ctx.space))
          return fail(e, "non-unit had a sampled inverse");
    }
  }
}

inline void audit_chi(const AuditContext& ctx, AuditEntry& e) {
  for (const auto& a : ctx.space->algebra().sets())
    if (!(zero_set(characteristic(ctx.space, a)) == a.complement()))
      return fail(e, "Z(chi_A) != A^c at " + render_subset(a, ctx.space->ground()));
}

inline void audit_M30(const AuditContext& ctx, AuditEntry& e) {
  Rng rng(ctx.seed);
  auto samples = sample_fns(ctx.space, rng, 20);
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    RingIdealRep ideal = z_preimage(filter);
    std::vector<Subset> zsets;
    for (const auto& f : samples) {
      if (!ideal.contains(f)) continue;
      zsets.push_back(zero_set(f));
      if (zero_set(f).none()) return fail(e, "empty set appeared in Z[I]");
      for (const auto& g : samples) {
        if (ideal.contains(g) && !ideal.contains(f - g))
          return fail(e, "ideal not closed under subtraction");
        if (!ideal.contains(f * g)) return fail(e, "ideal not closed under ring multiplication");
      }
    }
    // The recomputed zero-set family must close up into exactly the filter.
    canonical_sort(zsets);
    auto recomputed = LatticeFilter::from_members(ctx.space, zsets);
    if (!(recomputed == filter)) return fail(e, "Z[I] differs from the representing filter");
  }
}

inline void audit_M35(const AuditContext& ctx, AuditEntry& e) {
  auto maximal = maximal_ideals(ctx.space);
  int ultra_count = 0;
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    bool ultra = is_ultrafilter(filter);
    bool maximal_ideal = detail::is_maximal_ring_ideal(z_preimage(filter));
    if (ultra != maximal_ideal)
      return fail(e, "ultrafilter/maximal-ideal correspondence broken at " +
                         render_subset(filter.generator(), ctx.space->ground()));
    if (ultra) ++ultra_count;
  }
  if (ultra_count != static_cast<int>(maximal.size()))
    return fail(e, "Z is not a bijection between ultrafilters and maximal ideals");
}

inline void audit_M40(const AuditContext& ctx, AuditEntry& e) {
  Rng rng(ctx.seed);
  auto samples = sample_fns(ctx.space, rng, 20);
  for (const auto& m : maximal_ideals(ctx.space)) {
    for (const auto& f : samples) {
      bool meets_all = true;
      for (const auto& z : m.ideal.zfilter().members())
        if ((zero_set(f) & z).none()) meets_all = false;
      if (meets_all && !m.ideal.contains(f))
        return fail(e, "function meeting every member of Z[M] escaped M");
    }
  }
}

inline void audit_M45(const AuditContext& ctx, AuditEntry& e) {
  Rng rng(ctx.seed);
  auto samples = sample_fns(ctx.space, rng, 20);
  for (int p = 0; p < ctx.space->points(); ++p) {
    auto mp = point_ideal(ctx.space, p);
    for (const auto& f : samples)
      if (mp.ideal.contains(f) != (f.at(p) == Rational(0)))
        return fail(e, "M_p membership differs from f(p)=0 at point " + ctx.space->ground().label(p));
    if (!detail::is_maximal_ring_ideal(mp.ideal))
      return fail(e, "M_p not maximal at point " + ctx.space->ground().label(p));
  }
}

inline void audit_M45_1(const AuditContext& ctx, AuditEntry& e) {
  auto quotient = sign_patterns(ctx.space);
  std::vector<RingIdealRep> over_primes;
  for (const auto& j : sigma_id(ctx.space)) {
    Subset join = Subset::empty(ctx.space->points());
    for (const auto& s : j.members()) join = join | s;
    if (join.is_full()) continue;  // union of P must fall short of X
    over_primes.push_back(detail::ideal_over_lattice_ideal(ctx.space, j, quotient));
  }
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    RingIdealRep ideal = z_preimage(filter);
    bool fixed_maximal = detail::is_maximal_ring_ideal(ideal) && ideal.zero_intersection().any();
    bool matches = std::find(over_primes.begin(), over_primes.end(), ideal) != over_primes.end();
    if (fixed_maximal != matches)
      return fail(e, "fixed-maximal vs prime-lattice-ideal characterization broken at " +
                         render_subset(filter.generator(), ctx.space->ground()));
  }
}

inline void audit_M50(const AuditContext& ctx, AuditEntry& e) {
  auto quotient = sign_patterns(ctx.space);
  auto maximal = maximal_ideals(ctx.space);
  for (const auto& f : quotient)
    for (const auto& g : quotient) {
      auto mf = mason_set(f, maximal);
      auto mg = mason_set(g, maximal);
      bool mason = std::includes(mg.begin(), mg.end(), mf.begin(), mf.end());
      bool zsub = zero_set(f).subset_of(zero_set(g));
      bool ann = ann_subset(f, g, quotient);
      if (mason != zsub || zsub != ann)
        return fail(e, "Mason/zero-set/annihilator equivalence broken");
    }
}

inline void audit_M55(const AuditContext& ctx, AuditEntry& e) {
  auto quotient = sign_patterns(ctx.space);
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    RingIdealRep ideal = z_preimage(filter);
    bool cond3 = true;  // Ann(a) = Ann(b), a inside -> b inside
    bool cond4 = true;  // a inside -> Ann(Ann(a)) inside
    for (const auto& a : quotient) {
      if (!ideal.contains(a)) continue;
      for (const auto& b : quotient) {
        if (ann_subset(a, b, quotient) && ann_subset(b, a, quotient) && !ideal.contains(b))
          cond3 = false;
        bool in_double_ann = true;
        for (const auto& h : quotient)
          if ((h * a).is_zero() && !(h * b).is_zero()) in_double_ann = false;
        if (in_double_ann && !ideal.contains(b)) cond4 = false;
      }
    }
    if (cond3 != cond4) return fail(e, "annihilator conditions (3) and (4) disagree");
  }
}

inline void audit_M65(const AuditContext& ctx, AuditEntry& e) {
  Rng rng(ctx.seed);
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    auto audit = z_ideal_audits(z_preimage(filter), rng);
    if (audit.z_algebra_ideal != audit.mason_z_ideal || audit.mason_z_ideal != audit.z_circ_ideal)
      return fail(e, "z-ideal notions disagree at " +
                         render_subset(filter.generator(), ctx.space->ground()));
  }
}

inline void audit_M66(const AuditContext& ctx, AuditEntry& e) {
  Rng rng(ctx.seed);
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    auto audit = z_ideal_audits(z_preimage(filter), rng);
    if (!audit.all())
      return fail(e, "ideal failed a z-ideal condition at " +
                         render_subset(filter.generator(), ctx.space->ground()));
  }
}

inline void audit_M85(const AuditContext& ctx, AuditEntry& e) {
  bool compact = is_compact_space(*ctx.space, ctx.cap);
  const auto& sets = ctx.space->algebra().sets();
  const int m = static_cast<int>(sets.size());
  bool all_fip_nonempty = true;
  // All families of size <= 4, literal FIP sweep on each.
  std::vector<int> idx;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (!idx.empty()) {
      std::vector<Subset> family;
      for (int i : idx) family.push_back(sets[static_cast<std::size_t>(i)]);
      if (has_fip(ctx.space, family)) {
        Subset meet = Subset::full(ctx.space->points());
        for (const auto& s : family) meet = meet & s;
        if (meet.none()) all_fip_nonempty = false;
      }
    }
    if (remaining == 0) return;
    for (int i = start; i < m; ++i) {
      idx.push_back(i);
      rec(i + 1, remaining - 1);
      idx.pop_back();
    }
  };
  rec(0, 4);
  if (compact != all_fip_nonempty) return fail(e, "compactness vs FIP equivalence broken");
  if (!all_fip_nonempty) return fail(e, "a FIP family had empty total intersection");
}

inline void audit_M95(const AuditContext& ctx, AuditEntry& e) {
  auto audit = compactness_equivalences(ctx.space, ctx.cap);
  if (!audit.equivalent()) return fail(e, "five compactness conditions disagree");
  if (!audit.lattice_compact) return fail(e, "finite space reported non-compact");
}

inline void audit_M105(const AuditContext& ctx, AuditEntry& e) {
  auto audit = t_measurable_audit(ctx.space);
  if (audit.point_separation != audit.point_ideals_distinct ||
      audit.point_ideals_distinct != audit.maximal_zero_bound)
    return fail(e, "T-measurability conditions (1)-(3) disagree");
}

inline void audit_M110(const AuditContext& ctx, AuditEntry& e) {
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    auto audit = is_prime_ideal(z_preimage(filter));
    if (!audit.agree())
      return fail(e, "four primeness conditions disagree at " +
                         render_subset(filter.generator(), ctx.space->ground()));
  }
}

inline void audit_M115(const AuditContext& ctx, AuditEntry& e) {
  auto audit = gelfand_audit(ctx.space);
  if (!audit.pass) return fail(e, audit.witness);
}

inline void audit_M120(const AuditContext& ctx, AuditEntry& e) {
  auto audit = t_measurable_audit(ctx.space);
  if (audit.point_separation != audit.prime_zero_bound)
    return fail(e, "T-measurable iff prime zero bound broken");
}

inline void audit_M130(const AuditContext& ctx, AuditEntry& e) {
  int prime_filters = 0, prime_ideals = 0;
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    bool pf = is_prime_filter(filter);
    auto audit = is_prime_ideal(z_preimage(filter));
    if (pf != audit.product_condition)
      return fail(e, "prime filter vs prime ideal correspondence broken at " +
                         render_subset(filter.generator(), ctx.space->ground()));
    if (pf) ++prime_filters;
    if (audit.product_condition) ++prime_ideals;
  }
  if (prime_filters != prime_ideals) return fail(e, "prime correspondence is not a bijection");
}

inline void audit_I_eq_J(const AuditContext& ctx, AuditEntry& e) {
  auto quotient = sign_patterns(ctx.space);
  auto ideals = enumerate_ideals(ctx.space);
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      // Compare M^I and M^J by literal sampled membership.
      bool equal = true;
      for (const auto& f : quotient)
        if (ideals[i].contains(cozero(f)) != ideals[j].contains(cozero(f))) equal = false;
      if (equal) return fail(e, "distinct lattice ideals induced the same ring ideal");
    }
}

inline void audit_prime_eq_max(const AuditContext& ctx, AuditEntry& e) {
  auto sigma = sigma_id(ctx.space);
  auto maxima = max_id(ctx.space);
  auto key = [](const LatticeIdeal& j) { return j.generator().bits(); };
  auto by_key = [&](const LatticeIdeal& a, const LatticeIdeal& b) { return key(a) < key(b); };
  std::sort(sigma.begin(), sigma.end(), by_key);
  std::sort(maxima.begin(), maxima.end(), by_key);
  if (!(sigma == maxima)) return fail(e, "prime and maximal lattice ideals differ");
}

inline void audit_max(const AuditContext& ctx, AuditEntry& e) {
  auto quotient = sign_patterns(ctx.space);
  std::vector<RingIdealRep> over_primes;
  for (const auto& j : sigma_id(ctx.space))
    over_primes.push_back(detail::ideal_over_lattice_ideal(ctx.space, j, quotient));
  for (std::size_t i = 0; i < over_primes.size(); ++i)
    for (std::size_t j = i + 1; j < over_primes.size(); ++j)
      if (over_primes[i] == over_primes[j]) return fail(e, "M^J not unique across prime ideals");
  // M maximal iff M = M^J for some prime lattice ideal J.
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    RingIdealRep ideal = z_preimage(filter);
    bool maximal = detail::is_maximal_ring_ideal(ideal);
    bool matches = std::find(over_primes.begin(), over_primes.end(), ideal) != over_primes.end();
    if (maximal != matches)
      return fail(e, "maximal ideal characterization via Sigma Id broken at " +
                         render_subset(filter.generator(), ctx.space->ground()));
  }
}

inline void audit_fixmax(const AuditContext& ctx, AuditEntry& e) {
  auto quotient = sign_patterns(ctx.space);
  std::vector<RingIdealRep> over_prime_elements;
  for (const auto& p : ctx.space->algebra().sets())
    if (is_prime_element(*ctx.space, p))
      over_prime_elements.push_back(ideal_from_prime_element(ctx.space, p));
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    RingIdealRep ideal = z_preimage(filter);
    Subset cozu = detail::coz_union(ideal, quotient);
    bool lhs = detail::is_maximal_ring_ideal(ideal) && ideal.zero_intersection().any() &&
               ctx.space->algebra().contains(cozu);
    bool rhs = std::find(over_prime_elements.begin(), over_prime_elements.end(), ideal) !=
               over_prime_elements.end();
    if (lhs != rhs)
      return fail(e, "fixed-maximal vs prime-element characterization broken at " +
                         render_subset(filter.generator(), ctx.space->ground()));
  }
}

inline void audit_fixprim(const AuditContext& ctx, AuditEntry& e) {
  auto quotient = sign_patterns(ctx.space);
  for (const auto& filter : enumerate_proper_filters(ctx.space)) {
    RingIdealRep ideal = z_preimage(filter);
    if (!ctx.space->algebra().contains(detail::coz_union(ideal, quotient))) continue;
    bool fixed = ideal.zero_intersection().any();
    bool fixed_prime = fixed && is_prime_ideal(ideal).prime();
    bool fixed_maximal = fixed && detail::is_maximal_ring_ideal(ideal);
    if (fixed_prime != fixed_maximal)
      return fail(e, "fixed prime vs fixed maximal equivalence broken at " +
                         render_subset(filter.generator(), ctx.space->ground()));
  }
}

inline void audit_M200(const AuditContext& ctx, AuditEntry& e) {
  for (const auto& a : ctx.space->algebra().sets())
    if (!is_compact_element(*ctx.space, a, ctx.cap))
      return fail(e, "non-compact member " + render_subset(a, ctx.space->ground()));
}

inline void audit_M205(const AuditContext& ctx, AuditEntry& e) {
  const auto& sets = ctx.space->algebra().sets();
  std::vector<bool> compact;
  for (const auto& a : sets) compact.push_back(is_compact_element(*ctx.space, a, ctx.cap));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      bool inter = compact[ctx.space->algebra().index_of(sets[i] & sets[j])];
      bool uni = compact[ctx.space->algebra().index_of(sets[i] | sets[j])];
      if ((compact[i] || compact[j]) && !inter) return fail(e, "intersection compactness broken");
      if (compact[i] && compact[j] && !uni) return fail(e, "union compactness broken");
      if (compact[i] && sets[j].subset_of(sets[i]) && !compact[j])
        return fail(e, "downward compactness broken");
    }
  // (3) A compact iff the up-set of A^c is a compact lattice: top of that
  // sublattice covered only from within it.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<Subset> upset;
    for (const auto& s : sets)
      if (sets[i].complement().subset_of(s)) upset.push_back(s);
    const std::size_t m = upset.size();
    if (m >= 63 || (1ull << m) > ctx.cap) throw resource_error("up-set sweep exceeds cap");
    bool upset_compact = true;
    Subset top = Subset::full(ctx.space->points());
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      Subset u = Subset::empty(ctx.space->points());
      for (std::size_t k = 0; k < m; ++k)
        if ((mask >> k) & 1) u = u | upset[k];
      if (!(u == top)) continue;
      Subset got = Subset::empty(ctx.space->points());
      for (std::size_t k = 0; k < m; ++k) {
        if (!((mask >> k) & 1)) continue;
        if ((upset[k] & (top - got)).any()) got = got | upset[k];
        if (top.subset_of(got)) break;
      }
      if (!top.subset_of(got)) upset_compact = false;
    }
    if (compact[i] != upset_compact) return fail(e, "up-set compact-lattice criterion broken");
  }
}

inline void audit_M200_1(const AuditContext& ctx, AuditEntry& e) {
  auto q = t_quotient(ctx.space);
  for (const auto& a : ctx.space->algebra().sets()) {
    if (is_compact_element(*ctx.space, a, ctx.cap) &&
        !is_compact_element(*q.quotient, q.theta.image(a), ctx.cap))
      return fail(e, "theta image of a compact element is not compact");
  }
  for (const auto& b : q.quotient->algebra().sets()) {
    if (is_compact_element(*q.quotient, b, ctx.cap) &&
        !is_compact_element(*ctx.space, q.theta.preimage(b), ctx.cap))
      return fail(e, "theta preimage of a compact element is not compact");
  }
}

inline void audit_M210(const AuditContext& ctx, AuditEntry& e) {
  auto spec = spectrum(ctx.space);
  if (!is_t_measurable(spec.spectrum)) return fail(e, "spectrum is not T-measurable");
  const int m = spec.spectrum->points();
  auto F = [&](const MeasurableFn& f) {
    Subset out = Subset::empty(m);
    for (int i = 0; i < m; ++i)
      if (spec.ideals[static_cast<std::size_t>(i)].ideal.contains(f)) out = out.with(i);
    return out;
  };
  if (F(MeasurableFn::one(ctx.space)).any()) return fail(e, "F(1) is nonempty");
  if (!F(MeasurableFn::zero(ctx.space)).is_full()) return fail(e, "F(0) misses a maximal ideal");
  Rng rng(ctx.seed);
  for (const auto& f : sample_fns(ctx.space, rng, 20))
    if (!(F(f).complement() == F(characteristic(ctx.space, zero_set(f)))))
      return fail(e, "complement law F(f)^c = F(chi_Z(f)) broken");
}

inline void audit_M215(const AuditContext& ctx, AuditEntry& e) {
  if (!is_t_measurable(ctx.space))
    return skip(e, "space is not T-measurable; homeomorphism claim does not apply");
  if (!is_compact_space(*ctx.space, ctx.cap)) return fail(e, "finite space reported non-compact");
  auto spec = spectrum(ctx.space);
  if (!spec.phi) return fail(e, "phi missing on a T-measurable space");
  if (!spec.phi->is_homeomorphism()) return fail(e, "phi is not a homeomorphism");
  Rng rng(ctx.seed);
  for (const auto& f : sample_fns(ctx.space, rng, 20)) {
    Subset ff = Subset::empty(spec.spectrum->points());
    for (int i = 0; i < spec.spectrum->points(); ++i)
      if (spec.ideals[static_cast<std::size_t>(i)].ideal.contains(f)) ff = ff.with(i);
    if (!(spec.phi->image(zero_set(f)) == ff)) return fail(e, "phi[Z(f)] != F(f)");
  }
}

inline void audit_X_P_1(const AuditContext& ctx, AuditEntry& e) {
  if (!is_t_measurable(ctx.space)) return skip(e, "space is not T-measurable");
  for (const auto& p : ctx.space->algebra().sets())
    if (is_prime_element(*ctx.space, p) != (p.complement().popcount() == 1))
      return fail(e, "prime element vs singleton complement broken at " +
                         render_subset(p, ctx.space->ground()));
}

inline void audit_M260(const AuditContext& ctx, AuditEntry& e) {
  // The weak sigma-algebra of the whole sampled function quotient is the
  // original algebra; the empty family induces the trivial one.
  std::vector<std::vector<Rational>> fns;
  for (const auto& f : sign_patterns(ctx.space)) fns.push_back(f.values());
  if (!(weak_sigma_algebra(ctx.space->ground(), fns) == ctx.space->algebra()))
    return fail(e, "weak algebra of M(X) differs from the algebra");
  auto trivial = weak_sigma_algebra(ctx.space->ground(), {});
  if (trivial.atoms().size() != 1)
    return fail(e, "weak algebra of the empty family is not trivial");
}

inline void audit_M270(const AuditContext& ctx, AuditEntry& e) {
  // Generated-algebra preimage criterion, exercised along theta and along the
  // identity into the power set (a genuinely failing instance when the
  // algebra is not the full power set).
  auto q = t_quotient(ctx.space);
  auto check = [&](const SpaceMorphism& f, const std::vector<Subset>& generators) -> bool {
    bool gens_land = true;
    for (const auto& g : generators)
      if (!ctx.space->algebra().contains(f.preimage(g))) gens_land = false;
    SigmaAlgebra generated = SigmaAlgebra::generate(f.target()->ground(), generators);
    bool all_land = true;
    for (const auto& b : generated.sets())
      if (!ctx.space->algebra().contains(f.preimage(b))) all_land = false;
    return gens_land == all_land;
  };
  if (!check(q.theta, q.quotient->atoms())) return fail(e, "preimage criterion broken along theta");
  auto pow = MeasurableSpace::power_set(ctx.space->ground());
  std::vector<int> id(static_cast<std::size_t>(ctx.space->points()));
  for (int p = 0; p < ctx.space->points(); ++p) id[static_cast<std::size_t>(p)] = p;
  if (!check(SpaceMorphism(ctx.space, pow, id), pow->atoms()))
    return fail(e, "preimage criterion broken along the identity into the power set");
}

inline void audit_M280(const AuditContext& ctx, AuditEntry& e) {
  auto q = t_quotient(ctx.space);
  auto check = [&](const SpaceMorphism& f) -> bool {
    bool compositions_measurable = true;
    for (const auto& g : sign_patterns(f.target())) {
      std::vector<Rational> composed(static_cast<std::size_t>(ctx.space->points()));
      for (int p = 0; p < ctx.space->points(); ++p)
        composed[static_cast<std::size_t>(p)] = g.at(f.apply(p));
      if (!detail::fn_is_measurable_on(ctx.space, composed)) compositions_measurable = false;
    }
    bool preimages_measurable = true;
    for (const auto& a : f.target()->algebra().sets())
      if (!ctx.space->algebra().contains(f.preimage(a))) preimages_measurable = false;
    return compositions_measurable == preimages_measurable;
  };
  if (!check(q.theta)) return fail(e, "composition criterion broken along theta");
  auto pow = MeasurableSpace::power_set(ctx.space->ground());
  std::vector<int> id(static_cast<std::size_t>(ctx.space->points()));
  for (int p = 0; p < ctx.space->points(); ++p) id[static_cast<std::size_t>(p)] = p;
  if (!check(SpaceMorphism(ctx.space, pow, id)))
    return fail(e, "composition criterion broken along the identity into the power set");
}

inline void audit_M285(const AuditContext& ctx, AuditEntry& e) {
  auto classes = indistinguishability(ctx.space);  // throws if classes differ from atoms
  for (const auto& a : ctx.space->algebra().sets()) {
    Subset u = Subset::empty(ctx.space->points());
    for (const auto& cls : classes)
      if ((cls & a).any()) u = u | cls;
    if (!(u == a)) return fail(e, "member is not a union of classes: " +
                                      render_subset(a, ctx.space->ground()));
  }
  auto q = t_quotient(ctx.space);
  if (!is_t_measurable(q.quotient)) return fail(e, "quotient is not T-measurable");
}

inline void audit_M290(const AuditContext& ctx, AuditEntry& e) {
  auto q = t_quotient(ctx.space);
  Rng rng(ctx.seed);
  auto samples = sample_fns(ctx.space, rng, 100);
  for (const auto& f : samples) {
    MeasurableFn hf = push_forward(q.theta, f);
    if (!(pull_back(q.theta, hf) == f)) return fail(e, "h_f composed with theta differs from f");
  }
  // eta: g -> g∘theta is injective and surjective on the function quotient.
  for (const auto& g : sign_patterns(q.quotient))
    if (pull_back(q.theta, g).is_zero() && !g.is_zero())
      return fail(e, "eta has nonzero kernel");
  for (const auto& a : ctx.space->algebra().sets())
    if (!q.quotient->algebra().contains(q.theta.image(a)))
      return fail(e, "theta image of a measurable set is not measurable");
  for (const auto& b : q.quotient->algebra().sets())
    if (!ctx.space->algebra().contains(q.theta.preimage(b)))
      return fail(e, "theta preimage of a measurable set is not measurable");
  // eta preserves the ring structure along sampled pairs.
  auto gq = sign_patterns(q.quotient);
  for (std::size_t i = 0; i < gq.size() && i < 16; ++i)
    for (std::size_t j = 0; j < gq.size() && j < 16; ++j) {
      if (!(pull_back(q.theta, gq[i] + gq[j]) == pull_back(q.theta, gq[i]) + pull_back(q.theta, gq[j])))
        return fail(e, "eta fails additivity");
      if (!(pull_back(q.theta, gq[i] * gq[j]) == pull_back(q.theta, gq[i]) * pull_back(q.theta, gq[j])))
        return fail(e, "eta fails multiplicativity");
    }
}

inline void audit_M295(const AuditContext& ctx, AuditEntry& e) {
  if (!is_compact_space(*ctx.space, ctx.cap)) return fail(e, "finite space reported non-compact");
  auto q = t_quotient(ctx.space);
  if (!is_compact_space(*q.quotient, ctx.cap)) return fail(e, "quotient is not compact");
  if (!is_t_measurable(q.quotient)) return fail(e, "quotient is not T-measurable");
  if (!rings_isomorphic(ctx.space, q.quotient).isomorphic)
    return fail(e, "M(X) and M(X/~) are not ring-isomorphic");
}

inline void audit_M220_single(const AuditContext& ctx, AuditEntry& e) {
  // Single-space instance: the T-quotient and the spectrum of the quotient
  // are both compact T-measurable and must satisfy the bi-implication.
  auto q = t_quotient(ctx.space);
  auto spec = spectrum(q.quotient);
  bool rings = rings_isomorphic(q.quotient, spec.spectrum).isomorphic;
  bool spaces = spaces_homeomorphic(q.quotient, spec.spectrum).homeomorphic;
  if (rings != spaces) return fail(e, "ring isomorphism and homeomorphism disagree");
  if (!rings) return fail(e, "quotient and its spectrum should be isomorphic");
}

struct AuditSpec {
  std::string id;
  AuditFn fn;
};

inline const std::vector<AuditSpec>& audit_registry() {
  static const std::vector<AuditSpec> registry = {
      {"I=J", audit_I_eq_J},
      {"M105", audit_M105},
      {"M110", audit_M110},
      {"M115", audit_M115},
      {"M120", audit_M120},
      {"M130", audit_M130},
      {"M15", audit_M15},
      {"M200", audit_M200},
      {"M200-1", audit_M200_1},
      {"M205", audit_M205},
      {"M210", audit_M210},
      {"M215", audit_M215},
      {"M220", audit_M220_single},
      {"M260", audit_M260},
      {"M270", audit_M270},
      {"M280", audit_M280},
      {"M285", audit_M285},
      {"M290", audit_M290},
      {"M295", audit_M295},
      {"M30", audit_M30},
      {"M35", audit_M35},
      {"M40", audit_M40},
      {"M45", audit_M45},
      {"M45-1", audit_M45_1},
      {"M50", audit_M50},
      {"M55", audit_M55},
      {"M65", audit_M65},
      {"M66", audit_M66},
      {"M85", audit_M85},
      {"M95", audit_M95},
      {"X-P=1", audit_X_P_1},
      {"chi", audit_chi},
      {"fixmax", audit_fixmax},
      {"fixprim", audit_fixprim},
      {"max", audit_max},
      {"prime=max", audit_prime_eq_max},
      {"unit", audit_unit},
  };
  return registry;
}

inline bool known_prop(const std::string& id) {
  for (const auto& spec : audit_registry())
    if (spec.id == id) return true;
  return false;
}

inline std::vector<AuditEntry> run_audits(const SpacePtr& space, const std::string& space_name,
                                          const std::vector<std::string>& filter, std::uint64_t seed,
                                          std::uint64_t cap = kDefaultSubfamilyCap) {
  for (const auto& id : filter)
    if (!known_prop(id)) throw validation_error("unknown proposition id: " + id);
  AuditContext ctx{space, space_name, seed, cap};
  std::vector<AuditEntry> out;
  for (const auto& spec : audit_registry()) {
    if (!filter.empty() && std::find(filter.begin(), filter.end(), spec.id) == filter.end()) continue;
    out.push_back(run_one_audit(spec.id, spec.fn, ctx));
  }
  return out;
}

/// Per-space facts reused by the pairwise audits.
struct SpaceSummary {
  SpacePtr space;
  std::string name;
  bool t_measurable = false;
  std::optional<bool> compact;  // empty when the cover sweep hit the cap
  SpacePtr quotient;
};

inline SpaceSummary summarize_space(const SpacePtr& space, const std::string& name,
                                    std::uint64_t cap = kDefaultSubfamilyCap) {
  SpaceSummary s{space, name, is_t_measurable(space), std::nullopt, t_quotient(space).quotient};
  try {
    s.compact = is_compact_space(*space, cap);
  } catch (const resource_error&) {
  }
  return s;
}

/// Pairwise audits: the Stone bi-implication on a pair of spaces.
inline std::vector<AuditEntry> run_pair_audits(const SpaceSummary& x, const SpaceSummary& y) {
  std::vector<AuditEntry> out;
  const std::string pair_name = x.name + "|" + y.name;

  AuditEntry m220{"M220", pair_name, AuditStatus::Pass, "", 0.0};
  try {
    if (!x.compact || !y.compact) {
      skip(m220, "compactness check hit the resource cap");
    } else if (x.t_measurable && y.t_measurable && *x.compact && *y.compact) {
      bool rings = rings_isomorphic(x.space, y.space).isomorphic;
      bool spaces = spaces_homeomorphic(x.space, y.space).homeomorphic;
      if (rings != spaces) fail(m220, "ring isomorphism and homeomorphism disagree");
    } else {
      skip(m220, "pair is not compact T-measurable; hypothesis not satisfied");
    }
  } catch (const error& ex) {
    fail(m220, ex.what());
  }
  out.push_back(m220);

  // M295 pairwise: quotients carry the ring comparison for arbitrary inputs.
  AuditEntry m295{"M295", pair_name, AuditStatus::Pass, "", 0.0};
  try {
    bool rings = rings_isomorphic(x.space, y.space).isomorphic;
    bool quotient_homeo = spaces_homeomorphic(x.quotient, y.quotient).homeomorphic;
    if (rings != quotient_homeo) fail(m295, "ring isomorphism vs quotient homeomorphism disagree");
  } catch (const error& ex) {
    fail(m295, ex.what());
  }
  out.push_back(m295);
  return out;
}

}  // namespace mring

#endif
