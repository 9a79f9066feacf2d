#include "okbody/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "okbody/errors.hpp"

namespace okb {

namespace {

std::string fmt6(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << v;
    return os.str();
}

struct Canvas {
    double xmin, xmax, ymin, ymax;
    double scale = 60.0;
    double margin = 40.0;
    double px(double x) const { return margin + (x - xmin) * scale; }
    double py(double y) const { return margin + (ymax - y) * scale; }
    double width() const { return 2 * margin + (xmax - xmin) * scale; }
    double height() const { return 2 * margin + (ymax - ymin) * scale; }
};

void open_svg(std::ostream& os, const Canvas& c) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt6(c.width())
       << "\" height=\"" << fmt6(c.height()) << "\" viewBox=\"0 0 "
       << fmt6(c.width()) << " " << fmt6(c.height()) << "\">\n";
}

void grid_and_axes(std::ostream& os, const Canvas& c) {
    os << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double x = std::ceil(c.xmin); x <= c.xmax + 1e-9; x += 1.0)
        os << "    <line x1=\"" << fmt6(c.px(x)) << "\" y1=\"" << fmt6(c.py(c.ymin))
           << "\" x2=\"" << fmt6(c.px(x)) << "\" y2=\"" << fmt6(c.py(c.ymax))
           << "\"/>\n";
    for (double y = std::ceil(c.ymin); y <= c.ymax + 1e-9; y += 1.0)
        os << "    <line x1=\"" << fmt6(c.px(c.xmin)) << "\" y1=\"" << fmt6(c.py(y))
           << "\" x2=\"" << fmt6(c.px(c.xmax)) << "\" y2=\"" << fmt6(c.py(y))
           << "\"/>\n";
    os << "  </g>\n";
    os << "  <g stroke=\"#333333\" stroke-width=\"1.5\">\n";
    os << "    <line x1=\"" << fmt6(c.px(c.xmin)) << "\" y1=\"" << fmt6(c.py(0))
       << "\" x2=\"" << fmt6(c.px(c.xmax)) << "\" y2=\"" << fmt6(c.py(0)) << "\"/>\n";
    os << "    <line x1=\"" << fmt6(c.px(0)) << "\" y1=\"" << fmt6(c.py(c.ymin))
       << "\" x2=\"" << fmt6(c.px(0)) << "\" y2=\"" << fmt6(c.py(c.ymax)) << "\"/>\n";
    os << "  </g>\n";
}

std::ofstream open_file(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("IOError", "cannot write " + path);
    return out;
}

} // namespace

void emit_svg_polygon(const VertexList& vertices, const std::string& path) {
    if (vertices.empty()) fail("IOError", "nothing to draw");
    Canvas c{0, 1, 0, 1};
    c.xmin = c.ymin = 0;
    c.xmax = c.ymax = 1;
    for (const auto& [t, y] : vertices) {
        c.xmin = std::min(c.xmin, t.approx());
        c.xmax = std::max(c.xmax, t.approx());
        c.ymin = std::min(c.ymin, y.approx());
        c.ymax = std::max(c.ymax, y.approx());
    }
    auto out = open_file(path);
    open_svg(out, c);
    grid_and_axes(out, c);
    out << "  <polygon fill=\"#4a90d920\" stroke=\"#4a90d9\" stroke-width=\"2\" points=\"";
    for (const auto& [t, y] : vertices)
        out << fmt6(c.px(t.approx())) << "," << fmt6(c.py(y.approx())) << " ";
    out << "\"/>\n";
    for (const auto& [t, y] : vertices) {
        out << "  <circle cx=\"" << fmt6(c.px(t.approx())) << "\" cy=\""
            << fmt6(c.py(y.approx())) << "\" r=\"3\" fill=\"#d04040\" data-exact=\"("
            << t.str() << ", " << y.str() << ")\"/>\n";
        out << "  <text x=\"" << fmt6(c.px(t.approx()) + 5) << "\" y=\""
            << fmt6(c.py(y.approx()) - 5) << "\" font-size=\"11\">(" << fmt6(t.approx())
            << ", " << fmt6(y.approx()) << ")</text>\n";
    }
    out << "</svg>\n";
}

void emit_svg_slice(const SliceBody& body, const std::string& path) {
    if (body.f_samples.empty()) fail("IOError", "nothing to draw");
    Canvas c{0, 1, 0, 1};
    for (const auto& [r, f] : body.f_samples) {
        c.xmin = std::min(c.xmin, r.approx());
        c.xmax = std::max(c.xmax, r.approx());
        c.ymax = std::max(c.ymax, f.approx());
    }
    c.scale = 240.0;
    auto out = open_file(path);
    open_svg(out, c);
    grid_and_axes(out, c);
    out << "  <polyline fill=\"none\" stroke=\"#d04040\" stroke-width=\"2\" points=\"";
    for (const auto& [r, f] : body.f_samples)
        out << fmt6(c.px(r.approx())) << "," << fmt6(c.py(f.approx())) << " ";
    out << "\"/>\n";
    for (const auto& [r, f] : body.f_samples)
        out << "  <circle cx=\"" << fmt6(c.px(r.approx())) << "\" cy=\""
            << fmt6(c.py(f.approx())) << "\" r=\"2.5\" fill=\"#d04040\" data-exact=\"f("
            << r.str() << ") = " << f.str() << "\"/>\n";
    out << "  <text x=\"" << fmt6(c.margin) << "\" y=\"" << fmt6(c.margin / 2)
        << "\" font-size=\"12\">f(r) samples; g(r,t) = " << body.g.c0.str();
    if (body.g.cr.sign() >= 0) out << "+";
    out << body.g.cr.str() << "r";
    if (body.g.ct.sign() >= 0) out << "+";
    out << body.g.ct.str() << "t</text>\n";
    out << "</svg>\n";
}

} // namespace okb
