#include "zetamill/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace zetamill {

namespace {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(QMat& M, int ncols) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < ncols && row < M.size(); ++col) {
        std::size_t sel = row;
        while (sel < M.size() && M[sel][col] == 0) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[row], M[sel]);
        Rational inv = 1 / M[row][col];
        for (auto& v : M[row]) v *= inv;
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == row || M[r][col] == 0) continue;
            Rational f = M[r][col];
            for (int c = 0; c < ncols; ++c) M[r][c] -= f * M[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<QVec> nullspace(QMat M, int ncols) {
    auto piv = rref(M, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_piv[free]) continue;
        QVec v(ncols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -M[r][free];
        basis.push_back(v);
    }
    return basis;
}

std::vector<std::int64_t> primitive(const QVec& v) {
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    std::vector<BigInt> w;
    BigInt g = 0;
    for (const auto& x : v) {
        BigInt c = numerator(x) * (l / denominator(x));
        w.push_back(c);
        g = boost::multiprecision::gcd(g, c);
    }
    std::vector<std::int64_t> out;
    for (auto& c : w) {
        BigInt r = g == 0 ? c : c / g;
        if (boost::multiprecision::abs(r) > BigInt(INT64_MAX / 4)) throw CapExceeded("facet normal too large");
        out.push_back(static_cast<std::int64_t>(r));
    }
    return out;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const Point& x) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * x[i];
    return static_cast<std::int64_t>(s);
}

int affine_rank(const std::vector<Point>& pts) {
    if (pts.size() <= 1) return 0;
    QMat D;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec row;
        for (std::size_t c = 0; c < pts[0].size(); ++c) row.emplace_back(pts[i][c] - pts[0][c]);
        D.push_back(row);
    }
    return static_cast<int>(rref(D, static_cast<int>(pts[0].size())).size());
}

// facets of the hull of the points V (full-dimensional in Z^m)
std::vector<Halfspace> facets_of(const std::vector<Point>& Y, const std::vector<int>& V, int m) {
    std::set<Halfspace> found;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(pick.size()) == m) {
            QMat D;
            for (int i = 1; i < m; ++i) {
                QVec row;
                for (int c = 0; c < m; ++c) row.emplace_back(Y[pick[i]][c] - Y[pick[0]][c]);
                D.push_back(row);
            }
            auto ns = nullspace(D, m);
            if (ns.size() != 1) return;
            auto a = primitive(ns[0]);
            std::int64_t b = dot(a, Y[pick[0]]);
            bool pos = false, negs = false;
            for (int v : V) {
                std::int64_t s = dot(a, Y[v]) - b;
                if (s > 0) pos = true;
                if (s < 0) negs = true;
            }
            if (pos && negs) return;
            if (negs) {
                for (auto& x : a) x = -x;
                b = -b;
            }
            found.insert(Halfspace{a, b});
            return;
        }
        for (std::size_t i = start; i < V.size(); ++i) {
            pick.push_back(V[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return {found.begin(), found.end()};
}

std::vector<int> extreme_of(const std::vector<Point>& Y, const std::vector<int>& V,
                            const std::vector<Halfspace>& H, int m) {
    std::vector<int> out;
    for (int v : V) {
        QMat N;
        for (const auto& h : H)
            if (dot(h.a, Y[v]) == h.b) {
                QVec row(h.a.begin(), h.a.end());
                N.push_back(row);
            }
        if (static_cast<int>(rref(N, m).size()) == m) out.push_back(v);
    }
    return out;
}

}  // namespace

bool LatticePolytope::contains(const Point& x) const { return contains_dilate(x, 1); }

bool LatticePolytope::contains_dilate(const Point& x, std::int64_t k) const {
    for (const auto& e : equations)
        if (dot(e.a, x) != k * e.b) return false;
    for (const auto& h : halfspaces)
        if (dot(h.a, x) < k * h.b) return false;
    return true;
}

std::string to_string(const Point& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ')';
    return os.str();
}

LatticePolytope convex_hull(const std::vector<Point>& points) {
    if (points.empty()) throw UsageError("convex hull of an empty point set");
    const int n = static_cast<int>(points[0].size());
    if (n > limits().max_dimension) throw CapExceeded("ambient dimension above the configured cap");
    for (const auto& x : points)
        if (static_cast<int>(x.size()) != n) throw UsageError("points of mixed dimension");
    std::vector<Point> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope P;
    P.n = n;
    QMat D;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec row;
        for (int c = 0; c < n; ++c) row.emplace_back(pts[i][c] - pts[0][c]);
        D.push_back(row);
    }
    QMat R = D;
    auto S = rref(R, n);
    const int m = static_cast<int>(S.size());
    P.dim = m;
    for (const auto& a : nullspace(D.empty() ? QMat{} : D, n)) {
        auto ai = primitive(a);
        P.equations.push_back(Halfspace{ai, dot(ai, pts[0])});
    }
    if (D.empty()) {
        // single point: equations are the coordinate hyperplanes
        P.equations.clear();
        for (int c = 0; c < n; ++c) {
            std::vector<std::int64_t> a(n, 0);
            a[c] = 1;
            P.equations.push_back(Halfspace{a, pts[0][c]});
        }
    }
    if (m == 0) {
        P.vertices = {pts[0]};
        return P;
    }

    std::vector<Point> Y;
    for (const auto& x : pts) {
        Point y;
        for (int c : S) y.push_back(x[c]);
        Y.push_back(y);
    }
    // initial simplex
    std::vector<int> V{0};
    for (int i = 1; i < static_cast<int>(Y.size()) && static_cast<int>(V.size()) < m + 1; ++i) {
        std::vector<Point> trial;
        for (int v : V) trial.push_back(Y[v]);
        trial.push_back(Y[i]);
        if (affine_rank(trial) == static_cast<int>(V.size())) V.push_back(i);
    }
    auto H = facets_of(Y, V, m);
    std::vector<bool> inV(Y.size(), false);
    for (int v : V) inV[v] = true;
    for (int i = 0; i < static_cast<int>(Y.size()); ++i) {
        if (inV[i]) continue;
        bool outside = false;
        for (const auto& h : H)
            if (dot(h.a, Y[i]) < h.b) {
                outside = true;
                break;
            }
        if (!outside) continue;
        V.push_back(i);
        H = facets_of(Y, V, m);
        V = extreme_of(Y, V, H, m);
        std::fill(inV.begin(), inV.end(), false);
        for (int v : V) inV[v] = true;
    }
    V = extreme_of(Y, V, H, m);
    for (int v : V) P.vertices.push_back(pts[v]);
    std::sort(P.vertices.begin(), P.vertices.end());
    for (const auto& h : H) {
        std::vector<std::int64_t> a(n, 0);
        for (int j = 0; j < m; ++j) a[S[j]] = h.a[j];
        P.halfspaces.push_back(Halfspace{a, h.b});
    }
    std::sort(P.halfspaces.begin(), P.halfspaces.end());

    // cross-validation: every input point satisfies the description,
    // every facet carries at least m affinely independent vertices
    for (const auto& x : pts)
        if (!P.contains(x)) throw MathInconsistency("hull description excludes an input point");
    for (const auto& h : P.halfspaces) {
        std::vector<Point> on;
        for (const auto& v : P.vertices)
            if (dot(h.a, v) == h.b) on.push_back(v);
        if (affine_rank(on) != m - 1) throw MathInconsistency("degenerate facet in hull");
    }
    return P;
}

Face whole_face(const LatticePolytope& P) {
    Face f;
    f.dim = P.dim;
    for (int i = 0; i < static_cast<int>(P.vertices.size()); ++i) f.vertices.push_back(i);
    return f;
}

std::vector<Face> enumerate_faces(const LatticePolytope& P) {
    const std::size_t nv = P.vertices.size();
    std::vector<std::vector<char>> facet_masks;
    for (const auto& h : P.halfspaces) {
        std::vector<char> m(nv, 0);
        for (std::size_t v = 0; v < nv; ++v) m[v] = dot(h.a, P.vertices[v]) == h.b;
        facet_masks.push_back(m);
    }
    std::set<std::vector<char>> masks(facet_masks.begin(), facet_masks.end());
    std::vector<std::vector<char>> frontier(masks.begin(), masks.end());
    while (!frontier.empty()) {
        std::vector<std::vector<char>> next;
        for (const auto& f : frontier)
            for (const auto& g : facet_masks) {
                std::vector<char> x(nv);
                bool any = false;
                for (std::size_t v = 0; v < nv; ++v) {
                    x[v] = f[v] && g[v];
                    any |= x[v] != 0;
                }
                if (any && masks.insert(x).second) next.push_back(x);
            }
        frontier.swap(next);
    }
    std::vector<Face> faces;
    for (const auto& m : masks) {
        Face f;
        std::vector<Point> pts;
        for (std::size_t v = 0; v < nv; ++v)
            if (m[v]) {
                f.vertices.push_back(static_cast<int>(v));
                pts.push_back(P.vertices[v]);
            }
        for (std::size_t h = 0; h < P.halfspaces.size(); ++h)
            if (std::all_of(f.vertices.begin(), f.vertices.end(), [&](int v) {
                    return dot(P.halfspaces[h].a, P.vertices[v]) == P.halfspaces[h].b;
                }))
                f.halfspaces.push_back(static_cast<int>(h));
        f.dim = affine_rank(pts);
        faces.push_back(f);
    }
    faces.push_back(whole_face(P));
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.dim < b.dim || (a.dim == b.dim && a.vertices < b.vertices);
    });
    return faces;
}

bool on_face(const LatticePolytope& P, const Face& F, const Point& x) {
    if (!P.contains(x)) return false;
    for (int h : F.halfspaces)
        if (dot(P.halfspaces[h].a, x) != P.halfspaces[h].b) return false;
    return true;
}

std::vector<Point> dilate_lattice_points(const LatticePolytope& P, std::int64_t k) {
    if (k < 0) throw UsageError("negative dilation");
    const int n = P.n;
    if (k == 0) return {Point(n, 0)};
    Point lo(n), hi(n);
    for (int c = 0; c < n; ++c) {
        lo[c] = hi[c] = P.vertices[0][c];
        for (const auto& v : P.vertices) {
            lo[c] = std::min(lo[c], v[c]);
            hi[c] = std::max(hi[c], v[c]);
        }
        lo[c] *= k;
        hi[c] *= k;
    }
    BigInt box = 1;
    for (int c = 0; c < n; ++c) box *= (hi[c] - lo[c] + 1);
    if (box > BigInt(limits().enumeration_cap)) throw CapExceeded("dilate bounding box exceeds the enumeration cap");
    std::vector<Point> out;
    Point x = lo;
    while (true) {
        if (P.contains_dilate(x, k)) out.push_back(x);
        int c = n - 1;
        while (c >= 0 && x[c] == hi[c]) x[c] = lo[c], --c;
        if (c < 0) break;
        ++x[c];
    }
    return out;
}

BigInt dilate_lattice_count(const LatticePolytope& P, std::int64_t k) {
    return BigInt(dilate_lattice_points(P, k).size());
}

BigInt normalized_volume(const LatticePolytope& P) {
    if (P.dim != P.n) throw UsageError("normalized volume of a lower-dimensional polytope");
    const int n = P.n;
    BigInt s = 0;
    for (int i = 0; i <= n; ++i) {
        BigInt term = binomial(n, i) * dilate_lattice_count(P, i);
        s += ((n - i) % 2 == 0) ? term : BigInt(-term);
    }
    return s;
}

HodgeData hodge_numbers(const LatticePolytope& P) {
    if (P.dim != P.n) throw UsageError("Hodge numbers of a lower-dimensional polytope");
    const int n = P.n;
    HodgeData H;
    H.n = n;
    for (int k = 0; k <= n + 1; ++k) H.W.push_back(dilate_lattice_count(P, k));
    BigInt d = 0;
    for (int i = 0; i <= n; ++i) {
        BigInt term = binomial(n, i) * H.W[i];
        d += ((n - i) % 2 == 0) ? term : BigInt(-term);
    }
    H.d = d;
    BigInt total = 0;
    for (int k = 0; k <= n + 1; ++k) {
        BigInt h = 0;
        for (int i = 0; i <= k; ++i) {
            BigInt term = binomial(n + 1, i) * H.W[k - i];
            h += (i % 2 == 0) ? term : BigInt(-term);
        }
        if (h < 0) throw MathInconsistency("negative Hodge number h(" + std::to_string(k) + ")");
        if (k == n + 1) {
            if (h != 0) throw MathInconsistency("h(n+1) does not vanish");
            break;
        }
        H.h.push_back(h);
        total += h;
    }
    if (total != d) throw MathInconsistency("sum of Hodge numbers differs from the normalized volume");
    H.HP = hodge_polygon(H);
    return H;
}

ConvexPolygonQ hodge_polygon(const HodgeData& H) {
    ConvexPolygonQ poly;
    poly.vertices.push_back(PointQ{0, 0});
    Rational x = 0, y = 0;
    for (int k = 1; k < static_cast<int>(H.h.size()); ++k) {
        if (H.h[k] == 0) continue;
        x += Rational(H.h[k]);
        y += Rational(H.h[k] * (k - 1));
        poly.vertices.push_back(PointQ{x, y});
    }
    return poly;
}

DualResult polar_dual(const LatticePolytope& P) {
    if (P.dim != P.n) throw UsageError("polar dual needs a full-dimensional polytope");
    for (const auto& h : P.halfspaces)
        if (h.b >= 0) throw UsageError("origin is not strictly interior");
    auto dual_vertices = [](const LatticePolytope& Q) {
        std::vector<std::vector<Rational>> out;
        for (const auto& h : Q.halfspaces) {
            std::vector<Rational> v;
            for (auto a : h.a) v.emplace_back(a, -h.b);
            out.push_back(v);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    DualResult R;
    R.vertices = dual_vertices(P);
    R.reflexive = std::all_of(R.vertices.begin(), R.vertices.end(), [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return denominator(x) == 1; });
    });
    // (P*)* = P via the integral dilate L P*
    BigInt L = 1;
    for (const auto& v : R.vertices)
        for (const auto& x : v) L = lcm(L, denominator(x));
    std::vector<Point> scaled;
    for (const auto& v : R.vertices) {
        Point y;
        for (const auto& x : v) y.push_back(static_cast<std::int64_t>(numerator(x) * (L / denominator(x))));
        scaled.push_back(y);
    }
    auto LD = convex_hull(scaled);
    if (LD.vertices.size() != R.vertices.size()) throw MathInconsistency("dual vertex list is redundant");
    auto back = dual_vertices(LD);
    std::vector<Point> bidual;
    for (const auto& v : back) {
        Point y;
        for (const auto& x : v) {
            Rational z = x * Rational(L);
            if (denominator(z) != 1) throw MathInconsistency("bidual is not the original polytope");
            y.push_back(static_cast<std::int64_t>(numerator(z)));
        }
        bidual.push_back(y);
    }
    std::sort(bidual.begin(), bidual.end());
    if (bidual != P.vertices) throw MathInconsistency("bidual is not the original polytope");
    return R;
}

SemigroupResult semigroup_exponents(const LatticePolytope& P, int search_bound) {
    if (P.dim != P.n) throw UsageError("semigroup exponents need a full-dimensional polytope");
    SemigroupResult R;
    R.bound = search_bound;
    R.threshold = (search_bound + 1) / 2;
    const auto gens = dilate_lattice_points(P, 1);
    std::map<std::pair<Point, std::int64_t>, bool> memo;
    std::function<bool(const Point&, std::int64_t)> decomposable = [&](const Point& w, std::int64_t m) -> bool {
        if (m == 0) return std::all_of(w.begin(), w.end(), [](std::int64_t c) { return c == 0; });
        if (m == 1) return P.contains(w);
        auto key = std::make_pair(w, m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = false;
        Point rest(w.size());
        for (const auto& g : gens) {
            for (std::size_t c = 0; c < w.size(); ++c) rest[c] = w[c] - g[c];
            if (P.contains_dilate(rest, m - 1) && decomposable(rest, m - 1)) {
                ok = true;
                break;
            }
        }
        memo[key] = ok;
        return ok;
    };
    std::vector<std::pair<Point, std::int64_t>> holes;
    for (std::int64_t u0 = 2; u0 <= search_bound; ++u0)
        for (const auto& u : dilate_lattice_points(P, u0))
            if (!decomposable(u, u0)) holes.emplace_back(u, u0);
    R.holes = static_cast<int>(holes.size());
    auto passes = [&](std::int64_t D, std::int64_t min_weight) {
        for (const auto& [u, u0] : holes) {
            if (u0 < min_weight) continue;
            Point Du = u;
            for (auto& c : Du) c *= D;
            if (!decomposable(Du, D * u0)) return false;
        }
        return true;
    };
    for (int D = 1; D <= search_bound && !R.I; ++D)
        if (passes(D, 0)) R.I = D;
    for (int D = 1; D <= search_bound && !R.I_inf; ++D)
        if (passes(D, R.threshold)) R.I_inf = D;
    return R;
}

BigInt simplex_volume(const std::vector<Point>& pts) {
    const std::size_t n = pts.size() - 1;
    QMat M;
    for (std::size_t i = 1; i <= n; ++i) {
        QVec row;
        for (std::size_t c = 0; c < n; ++c) row.emplace_back(pts[i][c] - pts[0][c]);
        M.push_back(row);
    }
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && M[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(M[sel], M[col]);
            det = -det;
        }
        det *= M[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (M[r][col] == 0) continue;
            Rational f = M[r][col] / M[col][col];
            for (std::size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
        }
    }
    return boost::multiprecision::abs(numerator(det));
}

TriangulationVerdict verify_convex_triangulation(const LatticePolytope& P, const std::vector<Point>& points,
                                                 const std::vector<std::vector<int>>& cells,
                                                 const std::vector<Rational>& heights) {
    const int n = P.n;
    if (P.dim != n) throw UsageError("triangulation of a lower-dimensional polytope");
    if (heights.size() != points.size()) throw UsageError("one height per point required");
    for (const auto& x : points)
        if (static_cast<int>(x.size()) != n) throw UsageError("point of wrong dimension");
    TriangulationVerdict V;
    auto fail = [&](const std::string& cond, const std::string& w) {
        V.pass = false;
        V.condition = cond;
        V.witness = w;
        return V;
    };
    auto cell_str = [&](const std::vector<int>& c) {
        std::string s = "[";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "]";
    };
    // (a)
    for (const auto& c : cells) {
        if (static_cast<int>(c.size()) != n + 1) throw UsageError("cell " + cell_str(c) + " does not have n+1 points");
        std::set<int> distinct(c.begin(), c.end());
        for (int i : c)
            if (i < 0 || i >= static_cast<int>(points.size())) throw UsageError("cell index out of range");
        if (distinct.size() != c.size()) return fail("a", "cell " + cell_str(c) + " repeats a point");
        std::vector<Point> pts;
        for (int i : c) pts.push_back(points[i]);
        BigInt vol = simplex_volume(pts);
        if (vol == 0) return fail("a", "cell " + cell_str(c) + " is degenerate");
        for (const auto& x : pts)
            if (!P.contains(x)) return fail("a", "cell " + cell_str(c) + " leaves the polytope at " + to_string(x));
        V.volume_sum += vol;
    }
    // (b) volumes and facet matching
    if (V.volume_sum != normalized_volume(P))
        return fail("b", "cell volumes sum to " + V.volume_sum.str() + ", polytope has " + normalized_volume(P).str());
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;  // facet -> (cell, opposite point)
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
        for (int drop = 0; drop <= n; ++drop) {
            std::vector<int> f;
            for (int j = 0; j <= n; ++j)
                if (j != drop) f.push_back(cells[ci][j]);
            std::sort(f.begin(), f.end());
            facets[f].emplace_back(ci, cells[ci][drop]);
        }
    // hyperplane through a facet, oriented arbitrarily
    auto plane = [&](const std::vector<int>& f) {
        QMat D;
        for (std::size_t i = 1; i < f.size(); ++i) {
            QVec row;
            for (int c = 0; c < n; ++c) row.emplace_back(points[f[i]][c] - points[f[0]][c]);
            D.push_back(row);
        }
        auto a = primitive(nullspace(D, n).at(0));
        return Halfspace{a, dot(a, points[f[0]])};
    };
    for (const auto& [f, users] : facets) {
        bool boundary = false;
        for (const auto& h : P.halfspaces)
            if (std::all_of(f.begin(), f.end(), [&](int i) { return dot(h.a, points[i]) == h.b; })) boundary = true;
        if (boundary && users.size() != 1)
            return fail("b", "boundary facet " + cell_str(f) + " used by " + std::to_string(users.size()) + " cells");
        if (!boundary && users.size() != 2)
            return fail("b", "interior facet " + cell_str(f) + " used by " + std::to_string(users.size()) + " cells");
        if (!boundary) {
            auto H = plane(f);
            std::int64_t s1 = dot(H.a, points[users[0].second]) - H.b;
            std::int64_t s2 = dot(H.a, points[users[1].second]) - H.b;
            if ((s1 > 0) == (s2 > 0))
                return fail("b", "cells " + cell_str(cells[users[0].first]) + " and " +
                                     cell_str(cells[users[1].first]) + " overlap across " + cell_str(f));
        }
    }
    // (c) strict local convexity across interior facets
    for (const auto& [f, users] : facets) {
        if (users.size() != 2) continue;
        for (int side = 0; side < 2; ++side) {
            const auto& A = cells[users[side].first];
            int b = users[1 - side].second;
            // barycentric coordinates of point b with respect to A
            QMat M(n + 1, QVec(n + 2, 0));
            for (int r = 0; r < n; ++r) {
                for (int j = 0; j <= n; ++j) M[r][j] = points[A[j]][r];
                M[r][n + 1] = points[b][r];
            }
            for (int j = 0; j <= n; ++j) M[n][j] = 1;
            M[n][n + 1] = 1;
            rref(M, n + 1);
            Rational lifted = 0;
            for (int j = 0; j <= n; ++j) lifted += M[j][n + 1] * heights[A[j]];
            if (!(lifted < heights[b]))
                return fail("c", "lift not strictly convex across facet " + cell_str(f) + ": extension of cell " +
                                     cell_str(A) + " gives " + to_string(lifted) + " at point " + std::to_string(b) +
                                     " with height " + to_string(heights[b]));
        }
    }
    V.pass = true;
    return V;
}

OrdinarityPrediction ordinarity_prediction(const std::vector<LatticePolytope>& simplices, std::uint64_t p) {
    OrdinarityPrediction R;
    R.lcm = 1;
    for (const auto& s : simplices) R.lcm = lcm(R.lcm, normalized_volume(s));
    R.predicted_ordinary = (BigInt(p) % R.lcm) == (1 % R.lcm);
    return R;
}

}  // namespace zetamill
