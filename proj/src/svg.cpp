#include "gtwist/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gtwist {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kArcSamples = 64;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", x);
    return buf;
}

struct Mapper {
    double min_x, min_y, scale, size;

    double mx(double x) const { return (x - min_x) * scale + 20.0; }
    double my(double y) const { return size - ((y - min_y) * scale + 20.0); }  // y up
};

void open_svg(std::ostringstream& out, double size) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
        << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << " " << fmt(size) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void vertex_dot(std::ostringstream& out, const Mapper& m, double x, double y, int label) {
    out << "<circle cx=\"" << fmt(m.mx(x)) << "\" cy=\"" << fmt(m.my(y))
        << "\" r=\"3\" fill=\"black\"/>\n";
    out << "<text x=\"" << fmt(m.mx(x) + 5) << "\" y=\"" << fmt(m.my(y) - 5)
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << label << "</text>\n";
}

}  // namespace

std::string render_svg(const RadialDrawing& d) {
    validate_radial(d);
    double max_r = 0;
    for (const Rat& r : d.rho) max_r = std::max(max_r, r.get_d());
    const double size = 520.0;
    const Mapper m{-max_r, -max_r, (size - 40.0) / (2 * max_r), size};

    std::ostringstream out;
    open_svg(out, size);
    // Reference ray r at angle 0 and the origin O.
    out << "<line x1=\"" << fmt(m.mx(0)) << "\" y1=\"" << fmt(m.my(0)) << "\" x2=\""
        << fmt(m.mx(max_r)) << "\" y2=\"" << fmt(m.my(0))
        << "\" stroke=\"red\" stroke-width=\"1\" stroke-dasharray=\"6 3\"/>\n";
    out << "<circle cx=\"" << fmt(m.mx(0)) << "\" cy=\"" << fmt(m.my(0))
        << "\" r=\"2.5\" fill=\"red\"/>\n";
    out << "<text x=\"" << fmt(m.mx(0) + 4) << "\" y=\"" << fmt(m.my(0) + 12)
        << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"red\">O</text>\n";
    out << "<text x=\"" << fmt(m.mx(max_r) - 12) << "\" y=\"" << fmt(m.my(0) - 4)
        << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"red\">r</text>\n";

    for (Vertex u = 0; u < d.n; ++u)
        for (Vertex v = u + 1; v < d.n; ++v) {
            const EdgeArc arc = edge_arc(d, Edge{u, v});
            const double a = arc.a.get_d(), b = arc.b.get_d();
            const double ra = arc.ra.get_d(), rb = arc.rb.get_d();
            out << "<polyline fill=\"none\" stroke=\"#3366aa\" stroke-width=\"1.2\" points=\"";
            for (int s = 0; s <= kArcSamples; ++s) {
                const double psi = a + (b - a) * s / kArcSamples;
                const double r = ra + (rb - ra) * s / kArcSamples;
                const double ang = 2 * kPi * psi;
                if (s) out << " ";
                out << fmt(m.mx(r * std::cos(ang))) << "," << fmt(m.my(r * std::sin(ang)));
            }
            out << "\"/>\n";
        }
    for (Vertex v = 0; v < d.n; ++v) {
        const double ang = 2 * kPi * d.theta[v].get_d();
        const double r = d.rho[v].get_d();
        vertex_dot(out, m, r * std::cos(ang), r * std::sin(ang), v);
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const PointSet& ps) {
    require_general_position(ps);
    double min_x = ps.pts[0].x.get_d(), max_x = min_x;
    double min_y = ps.pts[0].y.get_d(), max_y = min_y;
    for (const Point& p : ps.pts) {
        min_x = std::min(min_x, p.x.get_d());
        max_x = std::max(max_x, p.x.get_d());
        min_y = std::min(min_y, p.y.get_d());
        max_y = std::max(max_y, p.y.get_d());
    }
    const double span = std::max(std::max(max_x - min_x, max_y - min_y), 1e-9);
    const double size = 520.0;
    const Mapper m{min_x, min_y, (size - 40.0) / span, size};

    std::ostringstream out;
    open_svg(out, size);
    for (int u = 0; u < ps.n(); ++u)
        for (int v = u + 1; v < ps.n(); ++v)
            out << "<line x1=\"" << fmt(m.mx(ps.pts[u].x.get_d())) << "\" y1=\""
                << fmt(m.my(ps.pts[u].y.get_d())) << "\" x2=\"" << fmt(m.mx(ps.pts[v].x.get_d()))
                << "\" y2=\"" << fmt(m.my(ps.pts[v].y.get_d()))
                << "\" stroke=\"#3366aa\" stroke-width=\"1.2\"/>\n";
    for (int v = 0; v < ps.n(); ++v)
        vertex_dot(out, m, ps.pts[v].x.get_d(), ps.pts[v].y.get_d(), v);
    out << "</svg>\n";
    return out.str();
}

}  // namespace gtwist
