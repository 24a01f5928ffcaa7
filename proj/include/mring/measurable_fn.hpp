#ifndef MRING_MEASURABLE_FN_HPP
#define MRING_MEASURABLE_FN_HPP

#include <numeric>

#include "mring/rational.hpp"
#include "mring/sigma_algebra.hpp"

namespace mring {

/// Element of M(X): an atom-constant function into the rationals.
class MeasurableFn {
 public:
  static MeasurableFn make(SpacePtr space, std::vector<Rational> values) {
    if (static_cast<int>(values.size()) != space->points())
      throw input_shape_error("one value per point required");
    for (const auto& atom : space->atoms()) {
      auto pts = atom.members();
      for (std::size_t i = 1; i < pts.size(); ++i)
        if (values[static_cast<std::size_t>(pts[i])] != values[static_cast<std::size_t>(pts[0])])
          throw measurability_error("values not constant on atom " +
                                    render_subset(atom, space->ground()));
    }
    return MeasurableFn(std::move(space), std::move(values));
  }

  static MeasurableFn from_atom_values(SpacePtr space, const std::vector<Rational>& atom_values) {
    if (static_cast<int>(atom_values.size()) != space->atom_count())
      throw input_shape_error("one value per atom required");
    std::vector<Rational> values(static_cast<std::size_t>(space->points()));
    for (int p = 0; p < space->points(); ++p)
      values[static_cast<std::size_t>(p)] = atom_values[static_cast<std::size_t>(space->atom_index(p))];
    return MeasurableFn(std::move(space), std::move(values));
  }

  static MeasurableFn constant(SpacePtr space, const Rational& r) {
    return MeasurableFn(space, std::vector<Rational>(static_cast<std::size_t>(space->points()), r));
  }
  static MeasurableFn zero(SpacePtr space) { return constant(std::move(space), Rational(0)); }
  static MeasurableFn one(SpacePtr space) { return constant(std::move(space), Rational(1)); }

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(int p) const { return values_.at(static_cast<std::size_t>(p)); }

  bool operator==(const MeasurableFn& o) const {
    return space_ == o.space_ && values_ == o.values_;
  }

  friend MeasurableFn operator+(const MeasurableFn& f, const MeasurableFn& g) {
    return zip(f, g, [](const Rational& a, const Rational& b) { return a + b; });
  }
  friend MeasurableFn operator-(const MeasurableFn& f, const MeasurableFn& g) {
    return zip(f, g, [](const Rational& a, const Rational& b) { return a - b; });
  }
  friend MeasurableFn operator*(const MeasurableFn& f, const MeasurableFn& g) {
    return zip(f, g, [](const Rational& a, const Rational& b) { return a * b; });
  }
  friend MeasurableFn operator-(const MeasurableFn& f) {
    return MeasurableFn::zero(f.space_) - f;
  }

  friend MeasurableFn join(const MeasurableFn& f, const MeasurableFn& g) {
    return zip(f, g, [](const Rational& a, const Rational& b) { return a < b ? b : a; });
  }
  friend MeasurableFn meet(const MeasurableFn& f, const MeasurableFn& g) {
    return zip(f, g, [](const Rational& a, const Rational& b) { return a < b ? a : b; });
  }
  friend MeasurableFn abs(const MeasurableFn& f) {
    MeasurableFn out = f;
    for (auto& v : out.values_)
      if (v < Rational(0)) v = -v;
    return out;
  }
  /// f+ = f ∨ 0.
  friend MeasurableFn pos_part(const MeasurableFn& f) { return join(f, zero(f.space_)); }
  /// f- = f ∧ 0.
  friend MeasurableFn neg_part(const MeasurableFn& f) { return meet(f, zero(f.space_)); }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& v) { return v == Rational(0); });
  }

 private:
  MeasurableFn(SpacePtr space, std::vector<Rational> values)
      : space_(std::move(space)), values_(std::move(values)) {}

  template <class Op>
  static MeasurableFn zip(const MeasurableFn& f, const MeasurableFn& g, Op op) {
    if (f.space_ != g.space_) throw input_shape_error("functions live on different spaces");
    std::vector<Rational> out(f.values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f.values_[i], g.values_[i]);
    return MeasurableFn(f.space_, std::move(out));
  }

  SpacePtr space_;
  std::vector<Rational> values_;
};

inline Subset zero_set(const MeasurableFn& f) {
  Subset z = Subset::empty(f.space()->points());
  for (int p = 0; p < f.space()->points(); ++p)
    if (f.at(p) == Rational(0)) z = z.with(p);
  return z;
}

inline Subset cozero(const MeasurableFn& f) { return zero_set(f).complement(); }

inline MeasurableFn characteristic(const SpacePtr& space, const Subset& a) {
  require_member(*space, a);
  std::vector<Rational> values(static_cast<std::size_t>(space->points()), Rational(0));
  for (int p : a.members()) values[static_cast<std::size_t>(p)] = Rational(1);
  return MeasurableFn::make(space, std::move(values));
}

inline bool is_unit(const MeasurableFn& f) { return zero_set(f).none(); }

inline MeasurableFn inverse(const MeasurableFn& f) {
  if (!is_unit(f)) throw non_unit_error("function with nonempty zero-set has no inverse");
  std::vector<Rational> values(f.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = Rational(1) / f.values()[i];
  return MeasurableFn::make(f.space(), std::move(values));
}

/// Distinct zero-sets over a spanning family of atom-indicator combinations;
/// asserted equal to the algebra before return.
inline std::vector<Subset> zero_set_image(const SpacePtr& space) {
  const int k = space->atom_count();
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    std::vector<Rational> atom_values(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) atom_values[static_cast<std::size_t>(i)] = Rational((mask >> i) & 1);
    out.push_back(zero_set(MeasurableFn::from_atom_values(space, atom_values)));
  }
  canonical_sort(out);
  if (!(out == space->algebra().sets()))
    throw error("zero-set image differs from the sigma-algebra");
  return out;
}

}  // namespace mring

#endif
