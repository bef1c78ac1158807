#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsgs/errors.hpp"

namespace nsgs {

using Int = std::int64_t;

/// Adds two non-negative values, throwing instead of wrapping.
Int checked_add(Int a, Int b);

class NumericalSet;

/// Strictly increasing list of positive integers; the complement of a
/// numerical set below its conductor.  The largest entry is the Frobenius
/// number of the corresponding set.
class GapSet {
public:
    explicit GapSet(std::vector<Int> values);

    const std::vector<Int>& values() const { return values_; }
    Int frobenius() const { return values_.back(); }
    Int size() const { return static_cast<Int>(values_.size()); }

    bool operator==(const GapSet&) const = default;

private:
    std::vector<Int> values_;
};

/// A cofinite subset of the non-negative integers containing 0, stored in
/// canonical form: the elements below the conductor plus the conductor
/// itself.  Everything at or above the conductor belongs to the set, and the
/// conductor's predecessor never does, so two sets are equal iff their
/// fields are equal.  The full set N0 is not representable (conductor >= 2).
///
/// Instances are immutable values; they can be copied and shared freely
/// across threads.
class NumericalSet {
public:
    static NumericalSet from_small_elements(std::vector<Int> elems, Int conductor);
    static NumericalSet from_gaps(const GapSet& gaps);

    const std::vector<Int>& small_elements() const { return small_; }
    Int conductor() const { return conductor_; }
    Int frobenius() const { return conductor_ - 1; }
    Int genus() const { return conductor_ - static_cast<Int>(small_.size()); }

    GapSet gaps() const;
    bool contains(Int x) const;

    /// Smallest nonzero element (the conductor when no other exists).
    Int multiplicity() const;

    bool operator==(const NumericalSet&) const = default;

private:
    NumericalSet(std::vector<Int> small, Int conductor)
        : small_(std::move(small)), conductor_(conductor) {}

    std::vector<Int> small_;
    Int conductor_;
};

/// True when the set is closed under addition.  Only sums of elements below
/// the conductor need checking: anything involving an element at or above
/// the conductor lands at or above it again.
bool is_semigroup(const NumericalSet& s);

/// Elements not expressible as a sum of two nonzero elements.  Everything
/// past conductor + multiplicity is expressible, so the result is finite.
/// Throws NotASemigroup when the set is not closed under addition.
std::vector<Int> minimal_generators(const NumericalSet& s);

/// Ordering used for canonical enumeration output: by Frobenius number,
/// then by gap membership with the largest differing value deciding.
bool canonical_less(const NumericalSet& a, const NumericalSet& b);

/// Text notation: small elements, the conductor, then the literal token
/// "->", all space separated ("0 2 3 6 8 9 11 ->").  parse_set also accepts
/// the alternate gap form "gaps: 1 4 5 7 10".
std::string to_string(const NumericalSet& s);
NumericalSet parse_set(const std::string& text);

} // namespace nsgs

template <>
struct std::hash<nsgs::NumericalSet> {
    std::size_t operator()(const nsgs::NumericalSet& s) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        const auto mix = [&h](nsgs::Int v) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ULL;
        };
        for (nsgs::Int e : s.small_elements()) mix(e);
        mix(s.conductor());
        return h;
    }
};
