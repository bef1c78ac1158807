#include "nsgs/young_diagram.hpp"

#include <algorithm>

namespace nsgs {

YoungDiagram::YoungDiagram(std::vector<Int> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw MalformedInput("a Young diagram needs at least one row");
    }
    Int prev = rows_.front();
    for (Int r : rows_) {
        if (r < 1 || r > prev) {
            throw MalformedInput("row lengths must be positive and weakly decreasing");
        }
        prev = r;
    }
}

Int YoungDiagram::column_length(Int j) const {
    Int n = 0;
    for (Int r : rows_) {
        if (r > j) ++n;
        else break;
    }
    return n;
}

Int YoungDiagram::box_count() const {
    Int n = 0;
    for (Int r : rows_) n += r;
    return n;
}

bool YoungDiagram::contains_box(Int row, Int col) const {
    return row >= 0 && row < row_count() && col >= 0 && col < rows_[static_cast<std::size_t>(row)];
}

HookGrid::HookGrid(const YoungDiagram& diagram) : diagram_(diagram) {
    const auto& rows = diagram_.rows();
    values_.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        values_[i].resize(static_cast<std::size_t>(rows[i]));
        for (Int j = 0; j < rows[i]; ++j) {
            // boxes to the right + boxes below + the box itself
            values_[i][static_cast<std::size_t>(j)] =
                (rows[i] - j) + (diagram_.column_length(j) - static_cast<Int>(i)) - 1;
        }
    }
}

Int HookGrid::hook(Int row, Int col) const {
    if (!diagram_.contains_box(row, col)) {
        throw IndexOutOfRange("no box at the requested position");
    }
    return values_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

YoungDiagram diagram_of(const NumericalSet& s) {
    const auto gap_list = s.gaps().values();
    const auto& small = s.small_elements();
    // Row for the j-th gap (from the bottom) spans as many boxes as there
    // are set members below that gap.
    std::vector<Int> rows(gap_list.size());
    std::size_t members_below = 0;
    for (std::size_t j = 0; j < gap_list.size(); ++j) {
        while (members_below < small.size() && small[members_below] < gap_list[j]) {
            ++members_below;
        }
        rows[gap_list.size() - 1 - j] = static_cast<Int>(members_below);
    }
    return YoungDiagram(std::move(rows));
}

NumericalSet numerical_set_of(const YoungDiagram& y) {
    const auto& rows = y.rows();
    const std::size_t k = rows.size();
    // The j-th row from the bottom (1-based) yields the gap row_length + j - 1:
    // integers below a gap split into set members (the row length) and the
    // smaller gaps (j - 1 of them).
    std::vector<Int> gap_list(k);
    for (std::size_t j = 1; j <= k; ++j) {
        gap_list[j - 1] = rows[k - j] + static_cast<Int>(j) - 1;
    }
    return NumericalSet::from_gaps(GapSet(std::move(gap_list)));
}

HookGrid hook_grid(const YoungDiagram& y) {
    return HookGrid(y);
}

std::vector<Int> column_hook_set(const NumericalSet& s, Int i) {
    const YoungDiagram y = diagram_of(s);
    if (i < 0 || i >= y.column_count()) {
        throw IndexOutOfRange("column index outside the diagram");
    }
    const HookGrid grid(y);
    const Int len = y.column_length(i);
    std::vector<Int> hooks(static_cast<std::size_t>(len));
    for (Int row = 0; row < len; ++row) {
        hooks[static_cast<std::size_t>(len - 1 - row)] = grid.hook(row, i);
    }
    return hooks;
}

YoungDiagram transpose(const YoungDiagram& y) {
    std::vector<Int> cols(static_cast<std::size_t>(y.column_count()));
    for (Int j = 0; j < y.column_count(); ++j) {
        cols[static_cast<std::size_t>(j)] = y.column_length(j);
    }
    return YoungDiagram(std::move(cols));
}

std::vector<BoxCoord> hook_cells(const YoungDiagram& y, Int row, Int col) {
    if (!y.contains_box(row, col)) {
        throw IndexOutOfRange("no box at the requested position");
    }
    std::vector<BoxCoord> cells{{row, col}};
    for (Int j = col + 1; j < y.rows()[static_cast<std::size_t>(row)]; ++j) {
        cells.push_back({row, j});
    }
    for (Int i = row + 1; i < y.column_length(col); ++i) {
        cells.push_back({i, col});
    }
    return cells;
}

bool is_semigroup_via_hooks(const NumericalSet& s) {
    const auto gap_list = s.gaps().values();
    const Int columns = static_cast<Int>(s.small_elements().size());
    for (Int i = 1; i < columns; ++i) {
        for (Int h : column_hook_set(s, i)) {
            if (!std::binary_search(gap_list.begin(), gap_list.end(), h)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace nsgs
