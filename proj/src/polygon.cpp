#include "zetamill/polygon.hpp"

#include <algorithm>
#include <sstream>

namespace zetamill {

std::vector<std::pair<Rational, Rational>> ConvexPolygonQ::slopes() const {
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        Rational dx = vertices[i].x - vertices[i - 1].x;
        out.emplace_back((vertices[i].y - vertices[i - 1].y) / dx, dx);
    }
    return out;
}

Rational ConvexPolygonQ::value_at(const Rational& x) const {
    if (vertices.empty()) throw UsageError("empty polygon");
    if (x < vertices.front().x || x > vertices.back().x) throw UsageError("abscissa outside polygon");
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (x <= vertices[i].x) {
            const auto& a = vertices[i - 1];
            const auto& b = vertices[i];
            return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
        }
    }
    return vertices.back().y;
}

ConvexPolygonQ lower_hull(std::vector<PointQ> pts) {
    std::sort(pts.begin(), pts.end(), [](const PointQ& a, const PointQ& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::vector<PointQ> uniq;
    for (const auto& pt : pts)
        if (uniq.empty() || uniq.back().x != pt.x) uniq.push_back(pt);
    std::vector<PointQ> hull;
    for (const auto& pt : uniq) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b unless it lies strictly below segment a-pt
            Rational cross = (b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    return ConvexPolygonQ{hull};
}

std::string to_string(const ConvexPolygonQ& P) {
    std::ostringstream os;
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
        os << (i ? " " : "") << '(' << P.vertices[i].x << ',' << P.vertices[i].y << ')';
    return os.str();
}

}  // namespace zetamill
