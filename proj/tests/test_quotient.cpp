#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "mring/quotient.hpp"
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

// Oracle: search every bijection of the point sets for a homeomorphism.
bool homeo_oracle(const SpacePtr& x, const SpacePtr& y) {
  if (x->points() != y->points()) return false;
  std::vector<int> perm(static_cast<std::size_t>(x->points()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (SpaceMorphism(x, y, perm).is_homeomorphism()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("weak sigma algebra of explicit functions") {
  GroundSet g({"a", "b", "c"});
  // one function separating a from b,c
  auto a1 = weak_sigma_algebra(g, {{Rational(1), Rational(0), Rational(0)}});
  CHECK(a1.size() == 4);
  CHECK(a1.contains(sub(3, {0})));
  // constants generate the trivial algebra
  auto a2 = weak_sigma_algebra(g, {{Rational(5), Rational(5), Rational(5)}});
  CHECK(a2.size() == 2);
  // separating family gives the power set
  auto a3 = weak_sigma_algebra(g, {{Rational(0), Rational(1), Rational(2)}});
  CHECK(a3.size() == 8);
}

TEST_CASE("indistinguishability classes are the atoms") {
  for (const auto& s : swept_spaces(4)) CHECK(indistinguishability(s.space) == s.space->atoms());
}

TEST_CASE("T measurability examples") {
  CHECK_FALSE(is_t_measurable(three_point()));
  CHECK(is_t_measurable(MeasurableSpace::power_set(GroundSet::indexed(3))));
  for (const auto& s : swept_spaces(4)) {
    auto audit = t_measurable_audit(s.space);
    CHECK(audit.agree());
    CHECK(audit.t_measurable() == (s.space->atom_count() == s.space->points()));
  }
}

TEST_CASE("quotient of the two atom three point space is a two point power set") {
  auto x = three_point();
  auto q = t_quotient(x);
  CHECK(q.quotient->points() == 2);
  CHECK(q.quotient->algebra().size() == 4);
  CHECK(is_t_measurable(q.quotient));
  CHECK(q.theta.surjective());
  CHECK(q.theta.apply(1) == q.theta.apply(2));
  CHECK(q.theta.apply(0) != q.theta.apply(1));
  CHECK(q.quotient->ground().labels() == std::vector<std::string>{"[a]", "[b]"});
}

TEST_CASE("quotient of a T measurable space is itself up to homeomorphism") {
  auto x = MeasurableSpace::power_set(GroundSet::indexed(3));
  auto q = t_quotient(x);
  CHECK(q.quotient->points() == 3);
  CHECK(spaces_homeomorphic(x, q.quotient).homeomorphic);
}

TEST_CASE("functions factor through the quotient") {
  auto x = three_point();
  auto q = t_quotient(x);
  Rng rng(7);
  for (const auto& f : sample_fns(x, rng, 60)) {
    auto h = push_forward(q.theta, f);
    CHECK(pull_back(q.theta, h) == f);
  }
}

TEST_CASE("spectrum points are the maximal ideals") {
  auto x = three_point();
  auto spec = spectrum(x);
  CHECK(spec.spectrum->points() == 2);
  CHECK(spec.ideals.size() == 2);
  CHECK(is_t_measurable(spec.spectrum));
  // x is not T-measurable so phi is withheld
  CHECK_FALSE(spec.phi.has_value());
  CHECK_FALSE(spec.phi_note.empty());
}

TEST_CASE("spectrum of a T measurable space is homeomorphic to it") {
  for (const auto& s : swept_spaces(4)) {
    if (!is_t_measurable(s.space)) continue;
    auto spec = spectrum(s.space);
    REQUIRE(spec.phi.has_value());
    CHECK(spec.phi->is_homeomorphism());
  }
}

TEST_CASE("multiset criterion agrees with the bijection search oracle") {
  auto spaces = swept_spaces(5);
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = 0; j < spaces.size(); ++j) {
      auto decision = spaces_homeomorphic(spaces[i].space, spaces[j].space);
      INFO(spaces[i].name << " vs " << spaces[j].name);
      if (spaces[i].space->points() != spaces[j].space->points()) {
        CHECK_FALSE(decision.homeomorphic);
        continue;
      }
      REQUIRE(decision.homeomorphic == homeo_oracle(spaces[i].space, spaces[j].space));
      if (decision.homeomorphic) {
        REQUIRE(decision.witness.has_value());
        CHECK(decision.witness->is_homeomorphism());
      } else {
        CHECK_FALSE(decision.certificate.empty());
      }
    }
}

TEST_CASE("ring isomorphic but not homeomorphic counterexample") {
  // atoms {a},{b,c} versus the two point power set: same function rings,
  // different spaces.
  auto x = three_point();
  auto y = MeasurableSpace::power_set(GroundSet::indexed(2));
  CHECK(rings_isomorphic(x, y).isomorphic);
  CHECK_FALSE(spaces_homeomorphic(x, y).homeomorphic);
  CHECK_FALSE(is_t_measurable(x));
  // the obstruction disappears after passing to the quotient
  CHECK(spaces_homeomorphic(t_quotient(x).quotient, y).homeomorphic);
}

TEST_CASE("ring isomorphism tracks atom counts across the sweep") {
  auto spaces = swept_spaces(4);
  for (const auto& a : spaces)
    for (const auto& b : spaces)
      CHECK(rings_isomorphic(a.space, b.space).isomorphic ==
            (a.space->atom_count() == b.space->atom_count()));
}

TEST_CASE("morphism flag recomputation") {
  auto x = three_point();
  auto y = MeasurableSpace::power_set(GroundSet::indexed(2));
  SpaceMorphism theta(x, y, {0, 1, 1});
  CHECK(theta.surjective());
  CHECK_FALSE(theta.injective());
  CHECK(theta.forward_measurable());
  CHECK(theta.backward_measurable());
  CHECK_FALSE(theta.is_homeomorphism());
  CHECK(theta.image(sub(3, {1, 2})) == sub(2, {1}));
  CHECK(theta.preimage(sub(2, {0})) == sub(3, {0}));
  CHECK_THROWS_AS(SpaceMorphism(x, y, {0, 1}), input_shape_error);
  CHECK_THROWS_AS(SpaceMorphism(x, y, {0, 1, 5}), input_shape_error);
}
