#include "sepspace/geometry.hpp"

#include <algorithm>

namespace sepspace::geom {

namespace {

constexpr double TWO_PI = 6.283185307179586476925286766559;

double wrap01(double t) {
    t = std::fmod(t, 1.0);
    return t < 0 ? t + 1.0 : t;
}

double angle_param(const Disk& d, Vec2 p) {
    return wrap01(std::atan2(p.y - d.c.y, p.x - d.c.x) / TWO_PI);
}

struct Seg {
    Vec2 a, b;
    double t0, t1; // perimeter parameter range on the owning polygon
};

std::vector<Seg> segments(const Poly& poly) {
    std::vector<Seg> segs;
    const std::size_t n = poly.pts.size();
    double total = 0;
    for (std::size_t i = 0; i < n; ++i)
        total += (poly.pts[(i + 1) % n] - poly.pts[i]).norm();
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = poly.pts[i], b = poly.pts[(i + 1) % n];
        double len = (b - a).norm();
        segs.push_back({a, b, acc / total, (acc + len) / total});
        acc += len;
    }
    return segs;
}

// circle vs segment: fills crossings with (circle param, polygon param)
void circle_segment(const Disk& d, const Seg& s, double eps,
                    std::vector<std::pair<double, double>>& hits) {
    Vec2 u = s.b - s.a;
    double len2 = u.dot(u);
    require(len2 > 0, "GENERAL_POSITION_VIOLATION", "degenerate polygon edge");
    Vec2 w = s.a - d.c;
    double a = len2;
    double b = 2 * u.dot(w);
    double c = w.dot(w) - d.r * d.r;
    double disc = b * b - 4 * a * c;
    double len = std::sqrt(len2);
    // tangency scale: discriminant of order (2*len*r*eps)
    if (std::abs(disc) <= 8 * len * d.r * eps * std::max(1.0, d.r)) {
        // touching the line; only degenerate if the touch point is on the segment
        double s0 = -b / (2 * a);
        if (s0 >= -eps && s0 <= 1 + eps)
            raise("DEGENERATE_TANGENCY", "circle tangent to a polygon edge");
        return;
    }
    if (disc < 0) return;
    double root = std::sqrt(disc);
    for (double sgn : {-1.0, 1.0}) {
        double t = (-b + sgn * root) / (2 * a);
        if (t < -eps / len || t > 1 + eps / len) continue;
        require(t > eps / len && t < 1 - eps / len, "DEGENERATE_TANGENCY",
                "circle passes through a polygon vertex");
        Vec2 p = s.a + u * t;
        hits.emplace_back(angle_param(d, p), s.t0 + (s.t1 - s.t0) * t);
    }
}

void seg_seg(const Seg& s1, const Seg& s2, double eps,
             std::vector<std::pair<double, double>>& hits) {
    Vec2 r = s1.b - s1.a;
    Vec2 q = s2.b - s2.a;
    double denom = r.cross(q);
    Vec2 d = s2.a - s1.a;
    double scale = r.norm() * q.norm();
    if (std::abs(denom) <= eps * std::max(1.0, scale)) {
        // parallel: overlap would be degenerate
        if (std::abs(d.cross(r)) <= eps * std::max(1.0, r.norm())) {
            double t0 = d.dot(r) / r.dot(r);
            double t1 = (s2.b - s1.a).dot(r) / r.dot(r);
            if (std::max(std::min(t0, t1), 0.0) <= std::min(std::max(t0, t1), 1.0))
                raise("DEGENERATE_TANGENCY", "collinear overlapping polygon edges");
        }
        return;
    }
    double t = d.cross(q) / denom;
    double u = d.cross(r) / denom;
    double et = eps / std::max(r.norm(), 1e-300);
    double eu = eps / std::max(q.norm(), 1e-300);
    if (t < -et || t > 1 + et || u < -eu || u > 1 + eu) return;
    require(t > et && t < 1 - et && u > eu && u < 1 - eu, "DEGENERATE_TANGENCY",
            "polygon boundaries touch at a vertex");
    hits.emplace_back(s1.t0 + (s1.t1 - s1.t0) * t, s2.t0 + (s2.t1 - s2.t0) * u);
}

} // namespace

double perimeter(const Shape& s) {
    if (const Disk* d = std::get_if<Disk>(&s)) return TWO_PI * d->r;
    const Poly& p = std::get<Poly>(s);
    double total = 0;
    for (std::size_t i = 0; i < p.pts.size(); ++i)
        total += (p.pts[(i + 1) % p.pts.size()] - p.pts[i]).norm();
    return total;
}

Vec2 boundary_at(const Shape& s, double t) {
    t = wrap01(t);
    if (const Disk* d = std::get_if<Disk>(&s)) {
        double a = t * TWO_PI;
        return {d->c.x + d->r * std::cos(a), d->c.y + d->r * std::sin(a)};
    }
    const Poly& p = std::get<Poly>(s);
    auto segs = segments(p);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Seg& seg = segs[i];
        if (t <= seg.t1 || i + 1 == segs.size()) {
            double span = seg.t1 - seg.t0;
            double local = span > 0 ? std::clamp((t - seg.t0) / span, 0.0, 1.0) : 0;
            return seg.a + (seg.b - seg.a) * local;
        }
    }
    return p.pts.front();
}

Vec2 tangent_at(const Shape& s, double t) {
    t = wrap01(t);
    if (const Disk* d = std::get_if<Disk>(&s)) {
        (void)d;
        double a = t * TWO_PI;
        return {-std::sin(a), std::cos(a)};
    }
    const Poly& p = std::get<Poly>(s);
    auto segs = segments(p);
    for (const Seg& seg : segs) {
        if (t >= seg.t0 && t <= seg.t1) {
            Vec2 u = seg.b - seg.a;
            double n = u.norm();
            return {u.x / n, u.y / n};
        }
    }
    Vec2 u = segs.front().b - segs.front().a;
    double n = u.norm();
    return {u.x / n, u.y / n};
}

bool point_inside(const Shape& s, Vec2 p, double eps) {
    if (const Disk* d = std::get_if<Disk>(&s))
        return (p - d->c).norm() < d->r - eps;
    const Poly& poly = std::get<Poly>(s);
    // even-odd ray cast along +x
    bool inside = false;
    const std::size_t n = poly.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = poly.pts[i], b = poly.pts[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (xint > p.x) inside = !inside;
        }
    }
    return inside && boundary_distance(s, p) > eps;
}

double boundary_distance(const Shape& s, Vec2 p) {
    if (const Disk* d = std::get_if<Disk>(&s))
        return std::abs((p - d->c).norm() - d->r);
    const Poly& poly = std::get<Poly>(s);
    double best = 1e300;
    const std::size_t n = poly.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = poly.pts[i], b = poly.pts[(i + 1) % n];
        Vec2 u = b - a;
        double t = std::clamp((p - a).dot(u) / u.dot(u), 0.0, 1.0);
        best = std::min(best, (p - (a + u * t)).norm());
    }
    return best;
}

std::vector<Crossing> boundary_crossings(const Shape& a, const Shape& b, double eps) {
    std::vector<std::pair<double, double>> hits;
    if (const Disk* da = std::get_if<Disk>(&a)) {
        if (const Disk* db = std::get_if<Disk>(&b)) {
            double d = (db->c - da->c).norm();
            double sum = da->r + db->r;
            double dif = std::abs(da->r - db->r);
            require(std::abs(d - sum) > eps && std::abs(d - dif) > eps,
                    "DEGENERATE_TANGENCY", "tangent circles");
            if (d > sum || d < dif) return {};
            // standard two-point circle intersection
            double x = (d * d + da->r * da->r - db->r * db->r) / (2 * d);
            double h2 = da->r * da->r - x * x;
            require(h2 > eps * eps, "DEGENERATE_TANGENCY", "near-tangent circles");
            double h = std::sqrt(h2);
            Vec2 u = (db->c - da->c) * (1.0 / d);
            Vec2 base = da->c + u * x;
            Vec2 nrm{-u.y, u.x};
            for (double sgn : {1.0, -1.0}) {
                Vec2 p = base + nrm * (sgn * h);
                hits.emplace_back(angle_param(*da, p), angle_param(*db, p));
            }
        } else {
            for (const Seg& s : segments(std::get<Poly>(b))) circle_segment(*da, s, eps, hits);
        }
    } else if (const Disk* db = std::get_if<Disk>(&b)) {
        std::vector<std::pair<double, double>> swapped;
        for (const Seg& s : segments(std::get<Poly>(a))) circle_segment(*db, s, eps, swapped);
        for (auto [tb, ta] : swapped) hits.emplace_back(ta, tb);
    } else {
        for (const Seg& s1 : segments(std::get<Poly>(a)))
            for (const Seg& s2 : segments(std::get<Poly>(b))) seg_seg(s1, s2, eps, hits);
    }
    std::vector<Crossing> out;
    out.reserve(hits.size());
    for (auto [ta, tb] : hits) out.push_back({wrap01(ta), wrap01(tb), boundary_at(a, ta)});
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
        return x.ta < y.ta;
    });
    return out;
}

bool contains(const Shape& a, const Shape& b, double eps) {
    if (const Disk* da = std::get_if<Disk>(&a)) {
        if (const Disk* db = std::get_if<Disk>(&b))
            return (db->c - da->c).norm() + db->r < da->r - eps;
    }
    // no crossings assumed: b inside a iff a boundary sample of b is inside a
    // and a's boundary is not inside b
    return point_inside(a, boundary_at(b, 0.0), eps) &&
           !point_inside(b, boundary_at(a, 0.0), eps);
}

bool intersects(const Shape& a, const Shape& b, double eps) {
    if (!boundary_crossings(a, b, eps).empty()) return true;
    return contains(a, b, eps) || contains(b, a, eps);
}

} // namespace sepspace::geom
