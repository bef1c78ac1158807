#include "nsgs/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace nsgs {

namespace {

std::vector<std::vector<bool>> highlight_mask(const YoungDiagram& diagram,
                                              const std::vector<BoxCoord>& highlight) {
    std::vector<std::vector<bool>> mask(diagram.rows().size());
    for (std::size_t i = 0; i < mask.size(); ++i) {
        mask[i].assign(static_cast<std::size_t>(diagram.rows()[i]), false);
    }
    for (const BoxCoord& box : highlight) {
        if (!diagram.contains_box(box.row, box.col)) {
            throw InvalidHighlight("highlight coordinate outside the diagram");
        }
        mask[static_cast<std::size_t>(box.row)][static_cast<std::size_t>(box.col)] = true;
    }
    return mask;
}

std::string render_ascii(const YoungDiagram& diagram, const RenderOptions& options,
                         const std::vector<std::vector<bool>>& marked) {
    const HookGrid grid(diagram);
    std::string out;
    for (Int row = 0; row < diagram.row_count(); ++row) {
        for (Int col = 0; col < diagram.rows()[static_cast<std::size_t>(row)]; ++col) {
            const bool hot = marked[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (options.show_hooks) {
                char cell[8];
                std::snprintf(cell, sizeof cell, hot ? "<%3lld>" : "[%3lld]",
                              static_cast<long long>(grid.hook(row, col)));
                out += cell;
            } else {
                out += hot ? "<  >" : "[  ]";
            }
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const YoungDiagram& diagram, const RenderOptions& options,
                       const std::vector<std::vector<bool>>& marked) {
    const HookGrid grid(diagram);
    const Int cell = options.cell_size;
    const Int width = diagram.column_count() * cell;
    const Int height = diagram.row_count() * cell;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    for (Int row = 0; row < diagram.row_count(); ++row) {
        for (Int col = 0; col < diagram.rows()[static_cast<std::size_t>(row)]; ++col) {
            const bool hot = marked[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            out << "  <rect x=\"" << col * cell << "\" y=\"" << row * cell << "\" width=\""
                << cell << "\" height=\"" << cell << "\" fill=\""
                << (hot ? "#f4b860" : "#ffffff") << "\" stroke=\"#000000\"/>\n";
            if (options.show_hooks) {
                out << "  <text x=\"" << col * cell + cell / 2 << "\" y=\""
                    << row * cell + cell / 2
                    << "\" text-anchor=\"middle\" dominant-baseline=\"central\" "
                       "font-family=\"monospace\" font-size=\""
                    << (cell * 2) / 5 << "\">" << grid.hook(row, col) << "</text>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string render(const YoungDiagram& diagram, const RenderOptions& options) {
    if (options.cell_size < 8 || options.cell_size > 128) {
        throw MalformedInput("cell size must lie in [8, 128]");
    }
    const auto marked = highlight_mask(diagram, options.highlight);
    return options.format == RenderFormat::Ascii ? render_ascii(diagram, options, marked)
                                                 : render_svg(diagram, options, marked);
}

} // namespace nsgs
