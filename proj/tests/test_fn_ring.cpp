#include <catch2/catch_amalgamated.hpp>

#include "mring/fn_samples.hpp"
#include "mring/ring_ideal.hpp"

using namespace mring;

namespace {

Subset sub(int width, std::initializer_list<int> pts) {
  Subset s = Subset::empty(width);
  for (int p : pts) s = s.with(p);
  return s;
}

SpacePtr three_point() {
  // atoms {a}, {b,c}
  return MeasurableSpace::generate(GroundSet({"a", "b", "c"}), {sub(3, {0})});
}

// Oracle for atom-constancy: f is measurable iff each level set lies in the
// algebra, checked without consulting atoms.
bool level_set_oracle(const SpacePtr& space, const std::vector<Rational>& values) {
  std::vector<Rational> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (const auto& v : distinct) {
    Subset level = Subset::empty(space->points());
    for (int p = 0; p < space->points(); ++p)
      if (values[static_cast<std::size_t>(p)] == v) level = level.with(p);
    if (!space->algebra().contains(level)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("construction rejects values that vary on an atom") {
  auto x = three_point();
  CHECK_THROWS_AS(MeasurableFn::make(x, {Rational(1), Rational(0), Rational(2)}),
                  measurability_error);
  CHECK_NOTHROW(MeasurableFn::make(x, {Rational(1), Rational(2), Rational(2)}));
  CHECK_THROWS_AS(MeasurableFn::make(x, {Rational(1)}), input_shape_error);
}

TEST_CASE("measurability agrees with the level set oracle") {
  Rng rng(411);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng.next(4));
    auto space = MeasurableSpace::generate(
        GroundSet::indexed(n), {Subset(n, rng.next(1ull << n)), Subset(n, rng.next(1ull << n))});
    std::vector<Rational> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = Rational(rng.next_in(0, 2));
    bool accepted = true;
    try {
      (void)MeasurableFn::make(space, values);
    } catch (const measurability_error&) {
      accepted = false;
    }
    REQUIRE(accepted == level_set_oracle(space, values));
  }
}

TEST_CASE("ring operations are pointwise and exact") {
  auto x = three_point();
  auto f = MeasurableFn::make(x, {Rational(1, 2), Rational(-3), Rational(-3)});
  auto g = MeasurableFn::make(x, {Rational(1, 3), Rational(2), Rational(2)});
  CHECK((f + g).at(0) == Rational(5, 6));
  CHECK((f * g).at(1) == Rational(-6));
  CHECK((f - g).at(2) == Rational(-5));
  CHECK((-f).at(0) == Rational(-1, 2));
  CHECK((f + (-f)).is_zero());
  CHECK(join(f, g).at(1) == Rational(2));
  CHECK(meet(f, g).at(0) == Rational(1, 3));
  CHECK(abs(f).at(1) == Rational(3));
}

TEST_CASE("positive and negative parts decompose f") {
  auto x = three_point();
  Rng rng(5);
  for (const auto& f : sample_fns(x, rng, 50)) {
    CHECK(pos_part(f) + neg_part(f) == f);
    CHECK(pos_part(f) - neg_part(f) == abs(f));
    CHECK((pos_part(f) * neg_part(f)).is_zero());
  }
}

TEST_CASE("zero set laws") {
  auto x = three_point();
  Rng rng(17);
  auto fns = sample_fns(x, rng, 50);
  for (const auto& f : fns)
    for (const auto& g : fns) {
      CHECK(zero_set(f * g) == (zero_set(f) | zero_set(g)));
      CHECK(zero_set(f * f + g * g) == (zero_set(f) & zero_set(g)));
    }
  for (const auto& f : fns) {
    CHECK(zero_set(f) == zero_set(abs(f)));
    CHECK(zero_set(f) == zero_set(f * f * f));
    CHECK(cozero(f) == zero_set(f).complement());
  }
}

TEST_CASE("units are the functions with empty zero set") {
  auto x = three_point();
  auto u = MeasurableFn::make(x, {Rational(2), Rational(-1, 3), Rational(-1, 3)});
  CHECK(is_unit(u));
  CHECK(inverse(u) * u == MeasurableFn::one(x));
  auto f = MeasurableFn::make(x, {Rational(0), Rational(1), Rational(1)});
  CHECK_FALSE(is_unit(f));
  CHECK_THROWS_AS(inverse(f), non_unit_error);
}

TEST_CASE("characteristic functions hit every member") {
  auto x = three_point();
  for (const auto& a : x->algebra().sets()) {
    auto chi = characteristic(x, a);
    CHECK(zero_set(chi) == a.complement());
    CHECK(chi * chi == chi);
  }
  CHECK_THROWS_AS(characteristic(x, sub(3, {1})), membership_error);
}

TEST_CASE("zero set image recovers the sigma algebra") {
  for (int n = 1; n <= 4; ++n) {
    auto space = MeasurableSpace::generate(GroundSet::indexed(n),
                                           {Subset(n, 1), Subset(n, (1ull << n) - 1)});
    CHECK(zero_set_image(space) == space->algebra().sets());
  }
}

TEST_CASE("three way membership equivalence for M_p") {
  // f(p) = 0 iff f in M_p iff Z(f) in the Z-filter of M_p.
  auto x = three_point();
  Rng rng(23);
  for (int p = 0; p < 3; ++p) {
    auto mp = point_ideal(x, p);
    for (const auto& f : sample_fns(x, rng, 50)) {
      bool vanishes = f.at(p) == Rational(0);
      CHECK(mp.ideal.contains(f) == vanishes);
      CHECK(mp.ideal.zfilter().contains(zero_set(f)) == vanishes);
    }
  }
}

TEST_CASE("operations require a shared space") {
  auto x = three_point();
  auto y = MeasurableSpace::power_set(GroundSet({"a", "b", "c"}));
  auto f = MeasurableFn::one(x);
  auto g = MeasurableFn::one(y);
  CHECK_THROWS_AS(f + g, input_shape_error);
}

TEST_CASE("sign patterns enumerate three to the atoms") {
  auto x = three_point();
  auto patterns = sign_patterns(x);
  CHECK(patterns.size() == 9);
  std::sort(patterns.begin(), patterns.end(), [](const MeasurableFn& a, const MeasurableFn& b) {
    return a.values() < b.values();
  });
  CHECK(std::adjacent_find(patterns.begin(), patterns.end()) == patterns.end());
}

TEST_CASE("rational parsing round trips") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(render_rational(Rational(-6, 4)) == "-3/2");
  CHECK(render_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("x"), validation_error);
  CHECK_THROWS_AS(parse_rational("1/0"), validation_error);
}
