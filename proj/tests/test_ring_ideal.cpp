#include <catch2/catch_amalgamated.hpp>

#include "mring/ring_ideal.hpp"
#include "mring/sweep.hpp"

using namespace mring;

namespace {

Subset sub(int width, std::initializer_list<int> pts) {
  Subset s = Subset::empty(width);
  for (int p : pts) s = s.with(p);
  return s;
}

SpacePtr three_point() {
  return MeasurableSpace::generate(GroundSet({"a", "b", "c"}), {sub(3, {0})});
}

}  // namespace

TEST_CASE("z image and preimage are inverse on proper filters") {
  for (const auto& s : swept_spaces(4))
    for (const auto& f : enumerate_proper_filters(s.space)) {
      auto ideal = z_preimage(f);
      CHECK(z_image(ideal) == f);
      CHECK(ideal.proper());
    }
}

TEST_CASE("distinct filters give distinct ideals") {
  for (const auto& s : swept_spaces(4)) {
    auto filters = enumerate_proper_filters(s.space);
    for (std::size_t i = 0; i < filters.size(); ++i)
      for (std::size_t j = i + 1; j < filters.size(); ++j)
        CHECK_FALSE(z_preimage(filters[i]) == z_preimage(filters[j]));
  }
}

TEST_CASE("ideal membership is closed under the ring operations") {
  auto x = three_point();
  Rng rng(31);
  auto fns = sample_fns(x, rng, 40);
  for (const auto& filter : enumerate_proper_filters(x)) {
    auto ideal = z_preimage(filter);
    for (const auto& f : fns) {
      if (!ideal.contains(f)) continue;
      for (const auto& g : fns) {
        CHECK(ideal.contains(f * g));
        if (ideal.contains(g)) CHECK(ideal.contains(f - g));
      }
    }
  }
}

TEST_CASE("maximal ideals are in bijection with atoms") {
  for (const auto& s : swept_spaces(4)) {
    auto maximal = maximal_ideals(s.space);
    CHECK(maximal.size() == s.space->atoms().size());
    for (const auto& m : maximal) {
      CHECK(is_ultrafilter(m.ideal.zfilter()));
      REQUIRE(m.witness.has_value());
    }
  }
}

TEST_CASE("point ideals coincide on indistinguishable points") {
  // atoms {a}, {b,c}: M_b and M_c are the same ideal.
  auto x = three_point();
  CHECK(point_ideal(x, 1).ideal == point_ideal(x, 2).ideal);
  CHECK_FALSE(point_ideal(x, 0).ideal == point_ideal(x, 1).ideal);
  // On the power set all point ideals differ.
  auto y = MeasurableSpace::power_set(GroundSet::indexed(3));
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q)
      CHECK_FALSE(point_ideal(y, p).ideal == point_ideal(y, q).ideal);
}

TEST_CASE("every point ideal is maximal and every maximal ideal is a point ideal") {
  for (const auto& s : swept_spaces(4)) {
    auto maximal = maximal_ideals(s.space);
    for (int p = 0; p < s.space->points(); ++p) {
      auto mp = point_ideal(s.space, p);
      bool found = false;
      for (const auto& m : maximal)
        if (m.ideal == mp.ideal) found = true;
      CHECK(found);
    }
    for (const auto& m : maximal) {
      bool found = false;
      for (int p = 0; p < s.space->points(); ++p)
        if (point_ideal(s.space, p).ideal == m.ideal) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("prime ideal audit four conditions agree everywhere") {
  for (const auto& s : swept_spaces(4))
    for (const auto& f : enumerate_proper_filters(s.space)) {
      auto audit = is_prime_ideal(z_preimage(f));
      INFO(s.name << " filter at " << render_subset(f.generator(), s.space->ground()));
      CHECK(audit.agree());
    }
}

TEST_CASE("the zero ideal on a two atom space is not prime") {
  auto x = three_point();
  // {0} = z_preimage of the filter at X: Z(f) = X iff f = 0.
  auto zero_ideal = z_preimage(LatticeFilter::principal(x, Subset::full(3)));
  auto audit = is_prime_ideal(zero_ideal);
  CHECK(audit.agree());
  CHECK_FALSE(audit.prime());
  // chi_{a} * chi_{bc} = 0 with neither factor zero.
  auto f = characteristic(x, sub(3, {0}));
  auto g = characteristic(x, sub(3, {1, 2}));
  CHECK((f * g).is_zero());
  CHECK_FALSE(zero_ideal.contains(f));
  CHECK_FALSE(zero_ideal.contains(g));
}

TEST_CASE("prime ideals coincide with maximal ideals") {
  for (const auto& s : swept_spaces(4))
    for (const auto& f : enumerate_proper_filters(s.space)) {
      auto ideal = z_preimage(f);
      bool prime = is_prime_ideal(ideal).prime();
      bool maximal = false;
      for (const auto& m : maximal_ideals(s.space))
        if (m.ideal == ideal) maximal = true;
      CHECK(prime == maximal);
    }
}

TEST_CASE("annihilators") {
  auto x = three_point();
  auto f = characteristic(x, sub(3, {0}));
  auto ann = annihilator(f);
  CHECK(ann.proper());
  CHECK(ann.zfilter().generator() == sub(3, {0}));
  CHECK(ann.contains(characteristic(x, sub(3, {1, 2}))));
  CHECK_FALSE(ann.contains(MeasurableFn::one(x)));
  CHECK_FALSE(annihilator(MeasurableFn::zero(x)).proper());
  // literal check against sampled multiplication
  Rng rng(3);
  for (const auto& g : sample_fns(x, rng, 40)) CHECK(ann.contains(g) == (f * g).is_zero());
}

TEST_CASE("z ideal audits pass on every ideal") {
  for (const auto& s : swept_spaces(3)) {
    Rng rng(77);
    for (const auto& f : enumerate_proper_filters(s.space)) CHECK(z_ideal_audits(z_preimage(f), rng).all());
  }
}

TEST_CASE("gelfand property holds") {
  for (const auto& s : swept_spaces(4)) CHECK(gelfand_audit(s.space).pass);
}

TEST_CASE("five compactness conditions agree and hold") {
  for (const auto& s : swept_spaces(3)) {
    auto audit = compactness_equivalences(s.space);
    CHECK(audit.equivalent());
    CHECK(audit.lattice_compact);
  }
}

TEST_CASE("mason sets track zero set containment") {
  auto x = three_point();
  auto maximal = maximal_ideals(x);
  auto fns = sign_patterns(x);
  for (const auto& f : fns)
    for (const auto& g : fns) {
      auto mf = mason_set(f, maximal);
      auto mg = mason_set(g, maximal);
      CHECK(std::includes(mg.begin(), mg.end(), mf.begin(), mf.end()) ==
            zero_set(f).subset_of(zero_set(g)));
    }
}

TEST_CASE("prime element ideals are the fixed maximal ideals") {
  auto x = MeasurableSpace::power_set(GroundSet::indexed(3));
  for (const auto& p : x->algebra().sets()) {
    if (!is_prime_element(*x, p)) continue;
    auto ideal = ideal_from_prime_element(x, p);
    bool maximal = false;
    for (const auto& m : maximal_ideals(x))
      if (m.ideal == ideal) maximal = true;
    CHECK(maximal);
    CHECK(ideal.zero_intersection().any());
  }
  CHECK_THROWS_AS(ideal_from_prime_element(x, Subset::full(3)), membership_error);
}
