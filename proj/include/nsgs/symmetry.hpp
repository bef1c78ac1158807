#pragma once

#include <string>

#include "nsgs/numerical_set.hpp"
#include "nsgs/sum_ops.hpp"

namespace nsgs {

/// Result of splitting a set into an over-semigroup and its dual:
/// set_sum(summand, dual_summand, kind) reproduces the original exactly.
struct Decomposition {
    NumericalSet summand;
    SumKind kind;
    NumericalSet dual_summand;
};

enum class RingLabel { Gorenstein, Kunz, Neither };

std::string to_string(RingLabel label);

/// Frobenius number odd and every gap x has frobenius - x in the set.
/// Equivalent to genus == (frobenius + 1) / 2.  Throws NotASemigroup.
bool is_symmetric(const NumericalSet& s);

/// Frobenius number even and every gap x is frobenius / 2 or has
/// frobenius - x in the set.  Equivalent to genus == (frobenius + 2) / 2.
/// Throws NotASemigroup.
bool is_pseudo_symmetric(const NumericalSet& s);

/// The set whose diagram is the transpose of this one's.  Explicitly:
/// {0} with frobenius - x for every non-maximal gap x, then everything from
/// the conductor on.  An involution; keeps the Frobenius number.  Defined
/// for every proper numerical set.
NumericalSet dual(const NumericalSet& s);

/// Splits a symmetric semigroup as T end-to-end T* (conductor/2 in S) or
/// T overlap T* (conductor/2 not in S).  The summand T is the unique
/// semigroup producing S under the returned kind.  Throws NotSymmetric, or
/// ExcludedCase for {0,2,->} where the split degenerates to the set itself.
Decomposition decompose_symmetric(const NumericalSet& s);

/// Splits a pseudo-symmetric semigroup as T conjoint T* or T discrete T*
/// with T never symmetric.  Throws NotPseudoSymmetric, or ExcludedCase for
/// {0,3,->} whose only summand would be the symmetric {0,2,->}.
Decomposition decompose_pseudo_symmetric(const NumericalSet& s);

/// Closed-form test deciding whether set_sum(s, dual(s), kind) is a
/// semigroup, evaluated on the small elements alone:
///   Discrete   conductor minimal AND 2*conductor - s_i - s_j never small;
///   EndToEnd   2*conductor - s_i - s_j - 1 never small;
///   Conjoint   conductor minimal AND 2*frobenius - s_i - s_j never small;
///   Overlap    2*frobenius - s_i - s_j - 1 never small.
/// Throws NotASemigroup.
bool dual_sum_is_semigroup(const NumericalSet& s, SumKind kind);

/// Gorenstein for symmetric semigroups, Kunz for pseudo-symmetric ones,
/// Neither otherwise.  Throws NotASemigroup.
RingLabel classify_ring(const NumericalSet& s);

} // namespace nsgs
