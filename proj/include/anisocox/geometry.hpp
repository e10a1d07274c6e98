#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace anisocox {

constexpr double kPi = 3.14159265358979323846;

/// Spatial dimension. Fixed to 2 for patterns and windows; covariance
/// formulas keep it symbolic so Gamma(nu + d/2) terms read like the source.
constexpr int kDim = 2;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const;
};

/// 2x2 matrix, row major.
struct Mat2 {
    double a = 1.0, b = 0.0; // [a b]
    double c = 0.0, d = 1.0; // [c d]

    Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 mul(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 transpose() const { return {a, c, b, d}; }
    double det() const { return a * d - b * c; }
    Mat2 inverse() const;
    static Mat2 identity() { return {}; }
    static Mat2 rotation(double theta);
    static Mat2 diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }
};

/// Rectangular observation window [x_min, x_max] x [y_min, y_max].
struct Window {
    double x_min, x_max, y_min, y_max;

    Window(double x0, double x1, double y0, double y1);
    static Window unit_square() { return Window(0.0, 1.0, 0.0, 1.0); }

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
    double min_side() const { return width() < height() ? width() : height(); }
    bool contains(Vec2 p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
    /// Distance from an interior point to the nearest boundary edge.
    double boundary_distance(Vec2 p) const;
    std::array<Vec2, 4> corners() const;
};

/// |W intersect W_u| for a rectangle W translated by u.
double translation_overlap(const Window& w, Vec2 u);

/// W shrunk by R on every side. Throws when the erosion is empty.
Window erode(const Window& w, double R);

/// Observation region: a rectangle or a linear image of one (the
/// parallelogram produced by isotropising a rectangular window). Stored as
/// the base rectangle plus the map, so areas, containment and translation
/// overlaps pull back to exact rectangle formulas.
class Region {
  public:
    static Region rectangle(const Window& w);
    static Region transformed(const Window& base, const Mat2& map);

    double area() const { return base_.area() * abs_det_; }
    bool contains(Vec2 p) const { return base_.contains(inverse_.apply(p)); }
    double boundary_distance(Vec2 p) const;
    double translation_overlap(Vec2 u) const {
        return anisocox::translation_overlap(base_, inverse_.apply(u)) * abs_det_;
    }
    std::array<Vec2, 4> corners() const;
    /// Axis-aligned bounding box of the region.
    Window bounding_box() const;
    const Window& base() const { return base_; }
    const Mat2& map() const { return map_; }
    bool is_rectangle() const { return identity_; }

  private:
    Region(const Window& base, const Mat2& map, bool identity);
    Window base_;
    Mat2 map_;
    Mat2 inverse_;
    double abs_det_;
    bool identity_;
};

/// Area of a simple polygon (shoelace formula).
double polygon_area(const std::vector<Vec2>& poly);

/// Intersection of two convex polygons given in counter-clockwise order.
std::vector<Vec2> convex_intersection(const std::vector<Vec2>& subject,
                                      const std::vector<Vec2>& clip);

/// Points of one type; construction against a window enforces containment.
struct PointPattern {
    std::vector<Vec2> points;
    int type_id = 0;

    PointPattern() = default;
    PointPattern(std::vector<Vec2> pts, int type);
    /// Validating constructor: every point must lie inside `w`.
    PointPattern(std::vector<Vec2> pts, int type, const Window& w);
    std::size_t size() const { return points.size(); }
};

struct MultiTypePattern {
    std::vector<PointPattern> components;
    Window window;

    MultiTypePattern(std::vector<PointPattern> comps, const Window& w);
    int types() const { return static_cast<int>(components.size()); }
};

/// Elliptical deformation (theta, zeta): Sigma = R_theta diag(1, zeta^2) R_theta^T.
/// theta is reduced mod pi; zeta > 1 is allowed for raw estimates.
struct Deformation {
    double theta;
    double zeta;

    Deformation(double theta_, double zeta_);
    static Deformation none() { return Deformation(0.0, 1.0); }

    Mat2 matrix() const;
    Mat2 sqrt_matrix() const;     // R diag(1, zeta) R^T
    Mat2 inv_sqrt_matrix() const; // R diag(1, 1/zeta) R^T
    /// Map applied by isotropisation: diag(1, 1/zeta) R^T. Its inverse is
    /// R diag(1, zeta).
    Mat2 iso_map() const;
    Mat2 iso_map_inverse() const;
    bool is_identity() const { return zeta == 1.0 && theta == 0.0; }
    /// Equivalent representation with zeta in (0, 1]: swaps the axes and
    /// reports the factor by which a Matern scale alpha must be multiplied.
    struct Normalized {
        Deformation deformation;
        double alpha_factor;
        bool swapped;
    };
    Normalized normalized() const;
};

/// Difference vectors x_a - x_b between two patterns; both orderings are kept
/// so the set is symmetric of order 2 about the origin.
struct FryProcess {
    std::vector<Vec2> vectors;
    std::pair<int, int> type_pair{0, 0};
};

/// All difference vectors with norm in (0, r_max]. Pass the same pattern
/// twice for the marginal process (self pairs excluded).
FryProcess fry_points(const PointPattern& a, const PointPattern& b, double r_max);

/// Back-transform of a pattern and its window by (theta, zeta): each point x
/// maps to diag(1, 1/zeta) R_theta^T x, the window maps to a parallelogram.
std::pair<PointPattern, Region> isotropise(const PointPattern& pattern, const Window& window,
                                           const Deformation& d);

/// Number of pattern points lying further than R from the region boundary.
std::size_t count_interior(const PointPattern& pattern, const Region& region, double R);

/// Reduce an angle to [0, pi).
double wrap_axial(double theta);

} // namespace anisocox
