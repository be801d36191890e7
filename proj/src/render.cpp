#include "arrowhead/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "arrowhead/errors.hpp"

namespace arrowhead {

namespace {

struct Bounds {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void add(CartesianPoint p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
};

// Maps lattice Cartesian coordinates to SVG pixels with y pointing down.
class Canvas {
public:
    Canvas(const Bounds& bounds, const RenderSpec& spec) : bounds_(bounds), spec_(spec) {
        if (!(spec.scale > 0.0) || spec.margin < 0.0) {
            throw std::invalid_argument("render scale must be positive and margin non-negative");
        }
    }

    double width() const { return (bounds_.max_x - bounds_.min_x) * spec_.scale + 2 * spec_.margin; }
    double height() const { return (bounds_.max_y - bounds_.min_y) * spec_.scale + 2 * spec_.margin; }

    void point(std::ostream& out, CartesianPoint p) const {
        out << number((p.x - bounds_.min_x) * spec_.scale + spec_.margin) << ","
            << number((bounds_.max_y - p.y) * spec_.scale + spec_.margin);
    }

    static std::string number(double v) {
        std::ostringstream out;
        out.precision(6);
        out << std::fixed << (std::abs(v) < 5e-7 ? 0.0 : v);
        auto s = out.str();
        s.erase(s.find_last_not_of('0') + 1);
        if (s.back() == '.') s.pop_back();
        return s;
    }

private:
    Bounds bounds_;
    const RenderSpec& spec_;
};

void open_document(std::ostream& out, const Canvas& canvas) {
    const auto w = Canvas::number(canvas.width());
    const auto h = Canvas::number(canvas.height());
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
}

void write_path(std::ostream& out, const Canvas& canvas, std::span<const CartesianPoint> polyline,
                const RenderSpec& spec) {
    out << "<path fill=\"none\" stroke=\"" << spec.curve_color << "\" stroke-width=\""
        << Canvas::number(spec.stroke_width) << "\" stroke-linejoin=\"round\" d=\"";
    for (std::size_t i = 0; i < polyline.size(); ++i) {
        out << (i == 0 ? "M" : " L");
        canvas.point(out, polyline[i]);
    }
    out << "\"/>\n";
}

std::array<CartesianPoint, 3> tile_corners(const DarkTile& t) {
    return {to_cartesian({t.x, t.y}), to_cartesian({t.x + 1, t.y}), to_cartesian({t.x, t.y + 1})};
}

}  // namespace

std::string render_curve(std::span<const CartesianPoint> polyline, const RenderSpec& spec) {
    if (polyline.empty()) throw EmptyPolyline();
    Bounds bounds;
    for (const auto& p : polyline) bounds.add(p);
    const Canvas canvas(bounds, spec);
    std::ostringstream out;
    open_document(out, canvas);
    write_path(out, canvas, polyline, spec);
    out << "</svg>\n";
    return out.str();
}

std::string render_gasket(const GasketApproximation& gasket, const RenderSpec& spec,
                          std::span<const CartesianPoint> overlay) {
    if (static_cast<long long>(gasket.tiles.size()) > spec.tile_cap) {
        throw SizeGuard(gasket.tiles.size(), static_cast<unsigned long long>(spec.tile_cap));
    }
    Bounds bounds;
    for (const auto& t : gasket.tiles) {
        for (const auto& c : tile_corners(t)) bounds.add(c);
    }
    for (const auto& p : overlay) bounds.add(p);
    if (gasket.tiles.empty() && overlay.empty()) bounds.add({0.0, 0.0});
    const Canvas canvas(bounds, spec);

    std::ostringstream out;
    open_document(out, canvas);
    out << "<g fill=\"" << spec.tile_fill << "\" stroke=\"none\">\n";
    for (const auto& t : gasket.tiles) {
        out << "<polygon points=\"";
        const auto corners = tile_corners(t);
        for (std::size_t i = 0; i < corners.size(); ++i) {
            if (i > 0) out << " ";
            canvas.point(out, corners[i]);
        }
        out << "\"/>\n";
    }
    out << "</g>\n";
    if (!overlay.empty()) write_path(out, canvas, overlay, spec);
    out << "</svg>\n";
    return out.str();
}

}  // namespace arrowhead
