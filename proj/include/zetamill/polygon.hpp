#pragma once

#include "zetamill/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zetamill {

struct PointQ {
    Rational x, y;
    bool operator==(const PointQ& o) const { return x == o.x && y == o.y; }
};

// lower convex polygon, x-increasing vertices, first vertex (0,0)
struct ConvexPolygonQ {
    std::vector<PointQ> vertices;

    std::vector<std::pair<Rational, Rational>> slopes() const;  // (slope, horizontal length)
    Rational width() const { return vertices.empty() ? Rational(0) : vertices.back().x; }
    Rational end_height() const { return vertices.empty() ? Rational(0) : vertices.back().y; }
    // piecewise-linear value at abscissa x within [0, width]
    Rational value_at(const Rational& x) const;
    bool operator==(const ConvexPolygonQ& o) const { return vertices == o.vertices; }
};

// lower convex hull; at equal abscissa the lowest point is kept; collinear points dropped
ConvexPolygonQ lower_hull(std::vector<PointQ> pts);

std::string to_string(const ConvexPolygonQ& P);

}  // namespace zetamill
