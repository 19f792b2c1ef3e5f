#include "tilebalance/render.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tilebalance/report.hpp"

namespace tilebalance {

namespace {

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = x0;
    double x1 = -x0;
    double y1 = -x0;

    void add(Vec2 p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
};

// SVG's y axis points down; mirror so the drawing keeps the tiling's orientation.
std::string path_data(const Polygon& poly) {
    std::string d;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        d += (i == 0 ? "M " : " L ") + fixed9(poly[i].x) + " " + fixed9(-poly[i].y);
    }
    return d + " Z";
}

std::string document(const Box& box, const std::string& title, const std::string& body, double stroke) {
    const double pad = 0.02 * std::max(box.x1 - box.x0, box.y1 - box.y0);
    const double x = box.x0 - pad;
    const double y = -box.y1 - pad;
    const double w = box.x1 - box.x0 + 2 * pad;
    const double h = box.y1 - box.y0 + 2 * pad;
    const double px = 800.0;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
       << "<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed9(px) << "\" height=\""
       << fixed9(px * h / w) << "\" viewBox=\"" << fixed9(x) << " " << fixed9(y) << " " << fixed9(w) << " "
       << fixed9(h) << "\">\n"
       << "<title>" << title << "</title>\n"
       << "<style type=\"text/css\"><![CDATA[\n"
       << "path { stroke: #222222; stroke-width: " << fixed9(stroke) << "; stroke-linejoin: round; }\n"
       << ".tile { fill: #dfe6ee; }\n"
       << ".f1 { fill: #9ecae1; }\n"
       << ".f2 { fill: #fdd0a2; }\n"
       << ".f3 { fill: #a1d99b; }\n"
       << ".disk { fill: none; stroke: #cb181d; stroke-width: " << fixed9(2 * stroke) << "; }\n"
       << "]]></style>\n"
       << body << "</svg>\n";
    return os.str();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_patch_svg(const PeriodicTiling& tiling, const Patch& patch) {
    Box box;
    std::string body;
    const std::pair<const char*, const std::vector<PlacedTile>*> parts[] = {
        {"f1", &patch.f1}, {"f2", &patch.f2}, {"f3", &patch.f3}};
    for (const auto& [cls, tiles] : parts) {
        body += std::string("<g id=\"") + cls + "\">\n";
        for (const PlacedTile& t : *tiles) {
            for (Vec2 p : t.polygon) box.add(p);
            body += std::string("<path class=\"") + cls + "\" d=\"" + path_data(t.polygon) + "\"/>\n";
        }
        body += "</g>\n";
    }
    const Disk& d = patch.disk;
    box.add(d.center - Vec2{d.radius, d.radius});
    box.add(d.center + Vec2{d.radius, d.radius});
    body += "<circle class=\"disk\" cx=\"" + fixed9(d.center.x) + "\" cy=\"" + fixed9(-d.center.y) + "\" r=\"" +
            fixed9(d.radius) + "\"/>\n";
    return document(box, escape(tiling.name()) + " patch, r = " + fixed9(d.radius), body,
                    0.02 * circumradius_bound(tiling));
}

std::string render_region_svg(const PeriodicTiling& tiling, const Disk& region) {
    Box box;
    std::string body = "<g id=\"tiles\">\n";
    for (const PlacedTile& t : embed(tiling, region)) {
        for (Vec2 p : t.polygon) box.add(p);
        body += "<path class=\"tile\" d=\"" + path_data(t.polygon) + "\"/>\n";
    }
    body += "</g>\n";
    return document(box, escape(tiling.name()), body, 0.02 * circumradius_bound(tiling));
}

}  // namespace tilebalance
