#include "nsgs/sum_ops.hpp"

#include <algorithm>

namespace nsgs {

std::string to_string(SumKind kind) {
    switch (kind) {
        case SumKind::Discrete: return "discrete";
        case SumKind::EndToEnd: return "end-to-end";
        case SumKind::Conjoint: return "conjoint";
        case SumKind::Overlap: return "overlap";
    }
    throw MalformedInput("invalid sum kind");
}

SumKind parse_sum_kind(const std::string& token) {
    if (token == "D") return SumKind::Discrete;
    if (token == "E") return SumKind::EndToEnd;
    if (token == "C") return SumKind::Conjoint;
    if (token == "O") return SumKind::Overlap;
    throw MalformedInput("sum kind must be one of D, E, C, O");
}

YoungDiagram diagram_sum(const YoungDiagram& y, const YoungDiagram& z, SumKind kind) {
    const Int n = y.column_count();
    const auto& upper = z.rows();
    std::vector<Int> rows;
    rows.reserve(upper.size() + y.rows().size() + 1);
    switch (kind) {
        case SumKind::Discrete:
            for (Int r : upper) rows.push_back(checked_add(r, n));
            rows.push_back(n);
            break;
        case SumKind::EndToEnd:
            for (Int r : upper) rows.push_back(checked_add(r, n));
            break;
        case SumKind::Conjoint:
            for (Int r : upper) rows.push_back(checked_add(r, n - 1));
            break;
        case SumKind::Overlap:
            // The bottom box of z's first column lands on the last box of
            // y's first row, so z's shifted bottom row absorbs y's top row.
            for (Int r : upper) rows.push_back(checked_add(r, n - 1));
            rows.insert(rows.end(), y.rows().begin() + 1, y.rows().end());
            return YoungDiagram(std::move(rows));
    }
    rows.insert(rows.end(), y.rows().begin(), y.rows().end());
    return YoungDiagram(std::move(rows));
}

NumericalSet set_sum(const NumericalSet& s, const NumericalSet& t, SumKind kind) {
    Int shift = s.conductor();
    switch (kind) {
        case SumKind::Discrete: shift += 1; break;
        case SumKind::EndToEnd: break;
        case SumKind::Conjoint: shift -= 1; break;
        case SumKind::Overlap: shift -= 2; break;
    }
    std::vector<Int> elems(s.small_elements());
    if (kind == SumKind::Discrete) {
        elems.push_back(checked_add(s.conductor(), 1));
    } else if (kind == SumKind::EndToEnd) {
        elems.push_back(s.conductor());
    }
    for (std::size_t i = 1; i < t.small_elements().size(); ++i) {
        elems.push_back(checked_add(t.small_elements()[i], shift));
    }
    return NumericalSet::from_small_elements(std::move(elems),
                                             checked_add(t.conductor(), shift));
}

GapSet predicted_gaps(const NumericalSet& s, const NumericalSet& t, SumKind kind) {
    const auto a = s.gaps().values();
    const auto b = t.gaps().values();
    const Int top = a.back();
    Int offset = top;
    switch (kind) {
        case SumKind::Discrete: offset += 2; break;
        case SumKind::EndToEnd: offset += 1; break;
        case SumKind::Conjoint: break;
        case SumKind::Overlap: offset -= 1; break;
    }
    std::vector<Int> out;
    out.reserve(a.size() + b.size() + 1);
    const std::size_t keep = kind == SumKind::Overlap ? a.size() - 1 : a.size();
    out.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(keep));
    if (kind == SumKind::Discrete) {
        out.push_back(checked_add(top, 1));
    }
    for (Int g : b) {
        out.push_back(checked_add(g, offset));
    }
    return GapSet(std::move(out));
}

bool self_sum_closure_counterexample(const NumericalSet& s) {
    if (!is_semigroup(s)) {
        throw NotASemigroup("self-sum closure test is defined for semigroups only");
    }
    const auto gens = minimal_generators(s);
    return !std::binary_search(gens.begin(), gens.end(), s.conductor());
}

} // namespace nsgs
