#include "arrangeops/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

namespace arrangeops {

namespace {

struct Frame {
    double q0, q1, t0, t1;  // world box
    double width = 860, height = 640, margin = 48;

    double x(double q) const {
        return margin + (q - q0) / (q1 - q0) * (width - 2 * margin);
    }
    double y(double t) const {
        return height - margin - (t - t0) / (t1 - t0) * (height - 2 * margin);
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

} // namespace

std::string render_svg(const Arrangement& P, bool highlight_envelope) {
    const int r = P.rank();
    double qmin = P.line(1).q.to_double(), qmax = qmin, tmax = 0.0;
    for (int k = 1; k <= r; ++k) {
        double q = P.line(k).q.to_double();
        qmin = std::min(qmin, q);
        qmax = std::max(qmax, q);
    }
    std::vector<Point2> crossings;
    std::map<std::pair<double, double>, std::string> labels;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            Point2 x = P.crossing(i, j);
            double xq = x.q.to_double(), xt = x.t.to_double();
            qmin = std::min(qmin, xq);
            qmax = std::max(qmax, xq);
            tmax = std::max(tmax, xt);
            auto key = std::make_pair(xq, xt);
            auto it = labels.find(key);
            if (it == labels.end()) {
                labels[key] = "P" + std::to_string(i) + std::to_string(j);
                crossings.push_back(x);
            } else if (it->second.find(std::to_string(j)) == std::string::npos) {
                it->second += std::to_string(j);
            }
        }
    if (tmax <= 0.0) tmax = 1.0;
    double qpad = std::max(1.0, 0.1 * (qmax - qmin));
    Frame f{qmin - qpad, qmax + qpad, -0.18 * tmax, 1.25 * tmax};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << f.width << "\" height=\"" << f.height << "\" viewBox=\"0 0 " << f.width
        << " " << f.height << "\">\n"
        << "  <defs>\n"
        << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
        << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#334\"/>\n"
        << "    </marker>\n"
        << "  </defs>\n";

    // root line, dashed, directed by increasing q
    svg << "  <line class=\"root\" x1=\"" << fmt(f.x(f.q0)) << "\" y1=\"" << fmt(f.y(0))
        << "\" x2=\"" << fmt(f.x(f.q1) - 12) << "\" y2=\"" << fmt(f.y(0))
        << "\" stroke=\"#46a\" stroke-width=\"2\" stroke-dasharray=\"8 5\" "
           "marker-end=\"url(#arrow)\"/>\n";

    // particle lines from slightly below the root to the top of the frame
    for (int k = 1; k <= r; ++k) {
        double q = P.line(k).q.to_double();
        double p = P.line(k).p.to_double();
        double tlo = f.t0, thi = f.t1;
        svg << "  <line class=\"particle\" x1=\"" << fmt(f.x(q + p * tlo)) << "\" y1=\""
            << fmt(f.y(tlo)) << "\" x2=\"" << fmt(f.x(q + p * thi)) << "\" y2=\""
            << fmt(f.y(thi)) << "\" stroke=\"#223\" stroke-width=\"2\" "
               "marker-end=\"url(#arrow)\"/>\n";
    }

    if (highlight_envelope) {
        svg << "  <polyline class=\"envelope\" points=\"";
        for (const Point2& v : upper_envelope(P))
            svg << fmt(f.x(v.q.to_double())) << "," << fmt(f.y(v.t.to_double())) << " ";
        svg << "\" fill=\"none\" stroke=\"#e80\" stroke-width=\"5\" "
               "stroke-opacity=\"0.55\"/>\n";
    }

    // root crossings
    for (int k = 1; k <= r; ++k) {
        double q = P.line(k).q.to_double();
        svg << "  <circle cx=\"" << fmt(f.x(q)) << "\" cy=\"" << fmt(f.y(0))
            << "\" r=\"4\" fill=\"#46a\"/>\n"
            << "  <text x=\"" << fmt(f.x(q) + 5) << "\" y=\"" << fmt(f.y(0) + 16)
            << "\" font-size=\"12\" fill=\"#234\">" << k << "</text>\n";
    }
    // pairwise crossings with labels
    for (const Point2& pt : crossings) {
        double xq = pt.q.to_double(), xt = pt.t.to_double();
        svg << "  <circle cx=\"" << fmt(f.x(xq)) << "\" cy=\"" << fmt(f.y(xt))
            << "\" r=\"3.5\" fill=\"#c33\"/>\n"
            << "  <text x=\"" << fmt(f.x(xq) + 6) << "\" y=\"" << fmt(f.y(xt) - 6)
            << "\" font-size=\"11\" fill=\"#822\">"
            << labels[std::make_pair(xq, xt)] << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace arrangeops
