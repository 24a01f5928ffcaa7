#ifndef MRING_FN_SAMPLES_HPP
#define MRING_FN_SAMPLES_HPP

#include <random>

#include "mring/measurable_fn.hpp"

namespace mring {

/// Deterministic generator; avoids std distributions so streams are
/// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }
  long long next_in(long long lo, long long hi) {
    return lo + static_cast<long long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

/// All atom-sign patterns in {-1,0,+1}^atoms. The paper predicates in scope
/// depend on f only through zero-sets, sign data, and ring relations, so this
/// quotient is a faithful stand-in for "all of M(X)".
inline std::vector<MeasurableFn> sign_patterns(const SpacePtr& space) {
  const int k = space->atom_count();
  std::vector<MeasurableFn> out;
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Rational> atom_values(static_cast<std::size_t>(k));
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      atom_values[static_cast<std::size_t>(i)] = Rational(static_cast<long long>(c % 3) - 1);
      c /= 3;
    }
    out.push_back(MeasurableFn::from_atom_values(space, atom_values));
  }
  return out;
}

inline MeasurableFn random_fn(const SpacePtr& space, Rng& rng) {
  std::vector<Rational> atom_values(static_cast<std::size_t>(space->atom_count()));
  for (auto& v : atom_values) v = Rational(rng.next_in(-6, 6), rng.next_in(1, 4));
  return MeasurableFn::from_atom_values(space, atom_values);
}

/// Sign patterns plus `extra` seeded random functions.
inline std::vector<MeasurableFn> sample_fns(const SpacePtr& space, Rng& rng, int extra = 100) {
  auto out = sign_patterns(space);
  for (int i = 0; i < extra; ++i) out.push_back(random_fn(space, rng));
  return out;
}

}  // namespace mring

#endif
