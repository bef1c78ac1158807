#pragma once

#include <vector>

#include "nsgs/numerical_set.hpp"

namespace nsgs {

/// A partition: weakly decreasing positive row lengths, top row first.
class YoungDiagram {
public:
    explicit YoungDiagram(std::vector<Int> rows);

    const std::vector<Int>& rows() const { return rows_; }
    Int row_count() const { return static_cast<Int>(rows_.size()); }
    Int column_count() const { return rows_.front(); }
    /// Number of boxes in column j.
    Int column_length(Int j) const;
    Int box_count() const;
    bool contains_box(Int row, Int col) const;

    bool operator==(const YoungDiagram&) const = default;

private:
    std::vector<Int> rows_;
};

/// Hook lengths for every box, row-major.  A box's hook is the box itself,
/// the boxes to its right, and the boxes below it.
class HookGrid {
public:
    explicit HookGrid(const YoungDiagram& diagram);

    Int hook(Int row, Int col) const;
    const YoungDiagram& diagram() const { return diagram_; }

private:
    YoungDiagram diagram_;
    std::vector<std::vector<Int>> values_;
};

struct BoxCoord {
    Int row = 0;
    Int col = 0;
    bool operator==(const BoxCoord&) const = default;
};

/// Lattice-path image of a numerical set: walking x = 0 .. F(S), step right
/// on members and up on gaps; the region above the path is the diagram.
/// Row count equals the genus, top row length the number of small elements.
YoungDiagram diagram_of(const NumericalSet& s);

/// Inverse of diagram_of; the correspondence is a bijection.
NumericalSet numerical_set_of(const YoungDiagram& y);

HookGrid hook_grid(const YoungDiagram& y);

/// Hook lengths of column i, ascending (bottom box first).  Column 0 gives
/// the gaps of the corresponding set.
std::vector<Int> column_hook_set(const NumericalSet& s, Int i);

/// Conjugate partition (rows and columns interchanged).
YoungDiagram transpose(const YoungDiagram& y);

/// Coordinates of every box in the hook of (row, col).
std::vector<BoxCoord> hook_cells(const YoungDiagram& y, Int row, Int col);

/// Semigroup test through the diagram: every column's hook lengths must
/// appear among the first column's.  Agrees with is_semigroup on all inputs.
bool is_semigroup_via_hooks(const NumericalSet& s);

} // namespace nsgs
