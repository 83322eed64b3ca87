#include "bars/svg.hpp"

#include <iomanip>
#include <sstream>

namespace bars {

namespace {

std::string num(const QNum& x)
{
    std::ostringstream out;
    out << std::setprecision(12) << to_double(x.interval().midpoint());
    return out.str();
}

} // namespace

std::string render_svg(const Dissection& d)
{
    if (d.whole.dimension() != 2)
        throw DimensionUnsupported("SVG output needs a 2D dissection, got dimension " +
                                   std::to_string(d.whole.dimension()));
    const PlacedBox& w = d.whole;
    // y' = top - y flips the axis so the origin sits bottom left.
    const QNum top = w.upper(1) + w.lower(1);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(w.lower(0)) << " " << num(w.lower(1)) << " "
        << num(w.spec.side(0)) << " " << num(w.spec.side(1)) << "\">\n";
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const PlacedBox& p = d.pieces[i];
        unsigned hue = static_cast<unsigned>((i * 137.508)) % 360;
        out << "  <rect x=\"" << num(p.lower(0)) << "\" y=\"" << num(top - p.upper(1)) << "\" width=\""
            << num(p.spec.side(0)) << "\" height=\"" << num(p.spec.side(1)) << "\" fill=\"hsl(" << hue
            << ",65%,70%)\" stroke=\"black\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace bars
