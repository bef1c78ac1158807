#pragma once

#include <string>

#include "nsgs/numerical_set.hpp"
#include "nsgs/young_diagram.hpp"

namespace nsgs {

/// The four ways of glueing one Young diagram above another.
enum class SumKind { Discrete, EndToEnd, Conjoint, Overlap };

inline constexpr SumKind kAllSumKinds[] = {
    SumKind::Discrete, SumKind::EndToEnd, SumKind::Conjoint, SumKind::Overlap};

std::string to_string(SumKind kind);
/// Accepts the single letters D/E/C/O.
SumKind parse_sum_kind(const std::string& token);

/// Glues the second diagram above the first.  With n columns/k rows on the
/// left and m columns/l rows on the right the result has:
///   Discrete   n+m columns, k+l+1 rows (a separating row of length n);
///   EndToEnd   n+m columns, k+l rows;
///   Conjoint   n+m-1 columns, k+l rows;
///   Overlap    n+m-1 columns, k+l-1 rows (one row shared).
YoungDiagram diagram_sum(const YoungDiagram& y, const YoungDiagram& z, SumKind kind);

/// The same operations through the set/diagram bijection, computed directly
/// on small elements: the right operand is shifted past the left one, with
/// the overlap amount depending on the kind.
NumericalSet set_sum(const NumericalSet& s, const NumericalSet& t, SumKind kind);

/// Closed-form gap list of set_sum(s, t, kind), built from the operands'
/// gaps alone.  Always equals gaps(set_sum(s, t, kind)).
GapSet predicted_gaps(const NumericalSet& s, const NumericalSet& t, SumKind kind);

/// True when the conductor is a sum of two nonzero elements, in which case
/// both the conjoint and the discrete self-sum fail to be semigroups.
/// Throws NotASemigroup for inputs not closed under addition.
bool self_sum_closure_counterexample(const NumericalSet& s);

} // namespace nsgs
