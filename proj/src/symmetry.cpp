#include "nsgs/symmetry.hpp"

#include <algorithm>
#include <cassert>

#include "nsgs/young_diagram.hpp"

namespace nsgs {

std::string to_string(RingLabel label) {
    switch (label) {
        case RingLabel::Gorenstein: return "Gorenstein";
        case RingLabel::Kunz: return "Kunz";
        case RingLabel::Neither: return "Neither";
    }
    throw MalformedInput("invalid ring label");
}

namespace {

void require_semigroup(const NumericalSet& s, const char* what) {
    if (!is_semigroup(s)) {
        throw NotASemigroup(std::string(what) + " is defined for semigroups only");
    }
}

// Small elements of s strictly below limit.
std::vector<Int> small_prefix(const NumericalSet& s, Int limit) {
    std::vector<Int> out;
    for (Int e : s.small_elements()) {
        if (e >= limit) break;
        out.push_back(e);
    }
    return out;
}

} // namespace

bool is_symmetric(const NumericalSet& s) {
    require_semigroup(s, "symmetry");
    const Int f = s.frobenius();
    const GapSet gap_list = s.gaps();
    bool result = f % 2 == 1;
    if (result) {
        for (Int x : gap_list.values()) {
            if (!s.contains(f - x)) {
                result = false;
                break;
            }
        }
    }
    assert(result == (s.genus() == (f + 1) / 2 && f % 2 == 1));
    return result;
}

bool is_pseudo_symmetric(const NumericalSet& s) {
    require_semigroup(s, "pseudo-symmetry");
    const Int f = s.frobenius();
    const GapSet gap_list = s.gaps();
    bool result = f % 2 == 0;
    if (result) {
        for (Int x : gap_list.values()) {
            if (2 * x != f && !s.contains(f - x)) {
                result = false;
                break;
            }
        }
    }
    assert(result == (s.genus() == (f + 2) / 2 && f % 2 == 0));
    return result;
}

NumericalSet dual(const NumericalSet& s) {
    return numerical_set_of(transpose(diagram_of(s)));
}

Decomposition decompose_symmetric(const NumericalSet& s) {
    if (!is_symmetric(s)) {
        throw NotSymmetric("set is not a symmetric semigroup");
    }
    const Int half = s.conductor() / 2;
    if (half < 2) {
        // {0,2,->}: the only candidate is the set itself under the overlap
        // sum, a degenerate self-decomposition.
        throw ExcludedCase("the one-gap semigroup does not split properly");
    }
    NumericalSet summand = s.contains(half)
        ? NumericalSet::from_small_elements(small_prefix(s, half), half)
        : NumericalSet::from_small_elements(small_prefix(s, half), half + 1);
    const SumKind kind = s.contains(half) ? SumKind::EndToEnd : SumKind::Overlap;
    NumericalSet partner = dual(summand);
    assert(set_sum(summand, partner, kind) == s);
    return Decomposition{std::move(summand), kind, std::move(partner)};
}

Decomposition decompose_pseudo_symmetric(const NumericalSet& s) {
    if (!is_pseudo_symmetric(s)) {
        throw NotPseudoSymmetric("set is not a pseudo-symmetric semigroup");
    }
    const Int half = s.frobenius() / 2;
    if (s.frobenius() == 2) {
        // {0,3,->}: both candidate summands collapse to the symmetric
        // {0,2,->}, so no admissible summand exists.
        throw ExcludedCase("the two-gap semigroup has no non-symmetric summand");
    }
    SumKind kind = s.contains(half + 1) ? SumKind::Discrete : SumKind::Conjoint;
    if (kind == SumKind::Discrete && half == 2) {
        // {0,3,5,->}: the discrete summand would be the symmetric {0,2,->};
        // the conjoint summand {0,3,->} is the admissible one.
        kind = SumKind::Conjoint;
    }
    NumericalSet summand = kind == SumKind::Discrete
        ? NumericalSet::from_small_elements(small_prefix(s, half), half)
        : NumericalSet::from_small_elements(small_prefix(s, half), half + 1);
    NumericalSet partner = dual(summand);
    assert(set_sum(summand, partner, kind) == s);
    assert(!is_symmetric(summand));
    return Decomposition{std::move(summand), kind, std::move(partner)};
}

bool dual_sum_is_semigroup(const NumericalSet& s, SumKind kind) {
    require_semigroup(s, "the dual-sum closure criterion");
    // Only the discrete sum needs the conductor to be a minimal generator:
    // its extra glueing row turns the conductor into a gap of the sum.  The
    // conjoint sum has no such row; when frobenius-1 is an element the
    // difference inequality below already covers minimality.
    if (kind == SumKind::Discrete) {
        const auto gens = minimal_generators(s);
        if (!std::binary_search(gens.begin(), gens.end(), s.conductor())) {
            return false;
        }
    }
    Int base = 2 * s.conductor();
    switch (kind) {
        case SumKind::Discrete: break;
        case SumKind::EndToEnd: base -= 1; break;
        case SumKind::Conjoint: base -= 2; break;
        case SumKind::Overlap: base -= 3; break;
    }
    const auto& small = s.small_elements();
    for (Int x : small) {
        for (Int y : small) {
            if (std::binary_search(small.begin(), small.end(), base - x - y)) {
                return false;
            }
        }
    }
    return true;
}

RingLabel classify_ring(const NumericalSet& s) {
    require_semigroup(s, "ring classification");
    if (is_symmetric(s)) return RingLabel::Gorenstein;
    if (is_pseudo_symmetric(s)) return RingLabel::Kunz;
    return RingLabel::Neither;
}

} // namespace nsgs
