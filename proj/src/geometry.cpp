#include "anisocox/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anisocox {

double Vec2::norm() const { return std::sqrt(norm2()); }

Mat2 Mat2::inverse() const {
    const double dt = det();
    if (dt == 0.0) throw std::invalid_argument("Mat2: singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2 Mat2::rotation(double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    return {ct, -st, st, ct};
}

Window::Window(double x0, double x1, double y0, double y1)
    : x_min(x0), x_max(x1), y_min(y0), y_max(y1) {
    if (!(x_max > x_min && y_max > y_min)) {
        throw std::invalid_argument("Window: requires x_max > x_min and y_max > y_min");
    }
}

double Window::boundary_distance(Vec2 p) const {
    const double dx = std::min(p.x - x_min, x_max - p.x);
    const double dy = std::min(p.y - y_min, y_max - p.y);
    return std::min(dx, dy);
}

std::array<Vec2, 4> Window::corners() const {
    return {Vec2{x_min, y_min}, Vec2{x_max, y_min}, Vec2{x_max, y_max}, Vec2{x_min, y_max}};
}

double translation_overlap(const Window& w, Vec2 u) {
    const double ox = std::max(0.0, w.width() - std::abs(u.x));
    const double oy = std::max(0.0, w.height() - std::abs(u.y));
    return ox * oy;
}

Window erode(const Window& w, double R) {
    if (R < 0.0) throw std::invalid_argument("erode: R must be nonnegative");
    if (2.0 * R >= w.min_side()) {
        throw std::invalid_argument("erode: R too large, eroded window is empty");
    }
    return Window(w.x_min + R, w.x_max - R, w.y_min + R, w.y_max - R);
}

Region::Region(const Window& base, const Mat2& map, bool identity)
    : base_(base), map_(map), inverse_(map.inverse()), abs_det_(std::abs(map.det())),
      identity_(identity) {}

Region Region::rectangle(const Window& w) { return Region(w, Mat2::identity(), true); }

Region Region::transformed(const Window& base, const Mat2& map) {
    const bool identity = map.a == 1.0 && map.b == 0.0 && map.c == 0.0 && map.d == 1.0;
    return Region(base, map, identity);
}

namespace {

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm2();
    double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + ab * t)).norm();
}

} // namespace

double Region::boundary_distance(Vec2 p) const {
    if (identity_) return base_.boundary_distance(p);
    const auto cs = corners();
    double best = point_segment_distance(p, cs[3], cs[0]);
    for (int i = 0; i < 3; ++i) {
        best = std::min(best, point_segment_distance(p, cs[i], cs[i + 1]));
    }
    return best;
}

std::array<Vec2, 4> Region::corners() const {
    std::array<Vec2, 4> out;
    const auto base_corners = base_.corners();
    for (int i = 0; i < 4; ++i) out[i] = map_.apply(base_corners[i]);
    if (map_.det() < 0.0) std::swap(out[1], out[3]); // keep counter-clockwise order
    return out;
}

Window Region::bounding_box() const {
    const auto cs = corners();
    double x0 = cs[0].x, x1 = cs[0].x, y0 = cs[0].y, y1 = cs[0].y;
    for (const Vec2& c : cs) {
        x0 = std::min(x0, c.x);
        x1 = std::max(x1, c.x);
        y0 = std::min(y0, c.y);
        y1 = std::max(y1, c.y);
    }
    return Window(x0, x1, y0, y1);
}

double polygon_area(const std::vector<Vec2>& poly) {
    if (poly.size() < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % poly.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return 0.5 * std::abs(twice);
}

std::vector<Vec2> convex_intersection(const std::vector<Vec2>& subject,
                                      const std::vector<Vec2>& clip) {
    // Sutherland-Hodgman against each clip edge.
    std::vector<Vec2> output = subject;
    for (std::size_t i = 0; i < clip.size() && !output.empty(); ++i) {
        const Vec2 a = clip[i];
        const Vec2 b = clip[(i + 1) % clip.size()];
        const Vec2 edge = b - a;
        auto inside = [&](Vec2 p) { return edge.x * (p.y - a.y) - edge.y * (p.x - a.x) >= 0.0; };
        auto cross_point = [&](Vec2 p, Vec2 q) {
            const Vec2 pq = q - p;
            const double denom = edge.x * pq.y - edge.y * pq.x;
            const double t = denom == 0.0 ? 0.0
                                          : (edge.x * (a.y - p.y) - edge.y * (a.x - p.x)) / denom;
            return p + pq * t;
        };
        std::vector<Vec2> input;
        input.swap(output);
        for (std::size_t j = 0; j < input.size(); ++j) {
            const Vec2 cur = input[j];
            const Vec2 prev = input[(j + input.size() - 1) % input.size()];
            if (inside(cur)) {
                if (!inside(prev)) output.push_back(cross_point(prev, cur));
                output.push_back(cur);
            } else if (inside(prev)) {
                output.push_back(cross_point(prev, cur));
            }
        }
    }
    return output;
}

PointPattern::PointPattern(std::vector<Vec2> pts, int type)
    : points(std::move(pts)), type_id(type) {}

PointPattern::PointPattern(std::vector<Vec2> pts, int type, const Window& w)
    : points(std::move(pts)), type_id(type) {
    for (const Vec2& p : points) {
        if (!w.contains(p)) {
            throw std::invalid_argument("PointPattern: point outside its window");
        }
    }
}

MultiTypePattern::MultiTypePattern(std::vector<PointPattern> comps, const Window& w)
    : components(std::move(comps)), window(w) {
    if (components.empty()) throw std::invalid_argument("MultiTypePattern: needs P >= 1");
    for (const auto& c : components) {
        for (const Vec2& p : c.points) {
            if (!window.contains(p)) {
                throw std::invalid_argument("MultiTypePattern: point outside shared window");
            }
        }
    }
}

double wrap_axial(double theta) {
    double t = std::fmod(theta, kPi);
    if (t < 0.0) t += kPi;
    return t;
}

Deformation::Deformation(double theta_, double zeta_) : theta(wrap_axial(theta_)), zeta(zeta_) {
    if (!(zeta > 0.0) || !std::isfinite(zeta)) {
        throw std::invalid_argument("Deformation: requires zeta > 0");
    }
}

Mat2 Deformation::matrix() const {
    const Mat2 r = Mat2::rotation(theta);
    return r.mul(Mat2::diagonal(1.0, zeta * zeta)).mul(r.transpose());
}

Mat2 Deformation::sqrt_matrix() const {
    const Mat2 r = Mat2::rotation(theta);
    return r.mul(Mat2::diagonal(1.0, zeta)).mul(r.transpose());
}

Mat2 Deformation::inv_sqrt_matrix() const {
    const Mat2 r = Mat2::rotation(theta);
    return r.mul(Mat2::diagonal(1.0, 1.0 / zeta)).mul(r.transpose());
}

Mat2 Deformation::iso_map() const {
    return Mat2::diagonal(1.0, 1.0 / zeta).mul(Mat2::rotation(theta).transpose());
}

Mat2 Deformation::iso_map_inverse() const {
    return Mat2::rotation(theta).mul(Mat2::diagonal(1.0, zeta));
}

Deformation::Normalized Deformation::normalized() const {
    if (zeta <= 1.0) return {*this, 1.0, false};
    // Axis swap: the unit axis at theta becomes the minor axis of the
    // rescaled ellipse, and the Matern scale absorbs the overall factor.
    return {Deformation(theta + kPi / 2.0, 1.0 / zeta), zeta, true};
}

FryProcess fry_points(const PointPattern& a, const PointPattern& b, double r_max) {
    if (!(r_max > 0.0)) throw std::invalid_argument("fry_points: requires r_max > 0");
    FryProcess out;
    out.type_pair = {a.type_id, b.type_id};
    // Same type means the marginal Fry process; callers pass one pattern twice.
    const bool same = &a == &b || a.type_id == b.type_id;
    const double r2 = r_max * r_max;
    if (same) {
        const auto& pts = a.points;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const Vec2 u = pts[i] - pts[j];
                const double n2 = u.norm2();
                if (n2 > 0.0 && n2 <= r2) {
                    out.vectors.push_back(u);
                    out.vectors.push_back(-u);
                }
            }
        }
    } else {
        for (const Vec2& pa : a.points) {
            for (const Vec2& pb : b.points) {
                const Vec2 u = pa - pb;
                const double n2 = u.norm2();
                if (n2 > 0.0 && n2 <= r2) {
                    out.vectors.push_back(u);
                    out.vectors.push_back(-u);
                }
            }
        }
    }
    return out;
}

std::pair<PointPattern, Region> isotropise(const PointPattern& pattern, const Window& window,
                                           const Deformation& d) {
    const Mat2 t = d.iso_map();
    std::vector<Vec2> pts;
    pts.reserve(pattern.points.size());
    for (const Vec2& p : pattern.points) pts.push_back(t.apply(p));
    return {PointPattern(std::move(pts), pattern.type_id), Region::transformed(window, t)};
}

std::size_t count_interior(const PointPattern& pattern, const Region& region, double R) {
    std::size_t n = 0;
    for (const Vec2& p : pattern.points) {
        if (region.contains(p) && region.boundary_distance(p) > R) ++n;
    }
    return n;
}

} // namespace anisocox
