#include "semitoric/polygon.hpp"

#include <algorithm>
#include <sstream>

namespace semitoric {

namespace {

Rational dot(const VecZ2& v, const Pt& p) {
    return Rational(v.x) * p.x + Rational(v.y) * p.y;
}

BigInt idot(const VecZ2& a, const VecZ2& b) { return a.x * b.x + a.y * b.y; }

VecZ2 left_normal(const VecZ2& t) { return {-t.y, t.x}; }
VecZ2 right_normal(const VecZ2& t) { return {t.y, -t.x}; }

// Andrew's monotone chain; collinear points dropped. Returns CCW cycle.
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Pt> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool points_collinear(const std::vector<Pt>& pts) {
    if (pts.size() < 3) return true;
    for (size_t i = 2; i < pts.size(); ++i)
        if (cross(pts[1] - pts[0], pts[i] - pts[0]) != 0) return false;
    return true;
}

} // namespace

RationalPolygon RationalPolygon::strip(const VecZ2& dir, const Rational& c_low,
                                       const Rational& c_high) {
    VecZ2 d = primitive(dir);
    Rational lo = c_low, hi = c_high;
    if (d.x < 0 || (d.x == 0 && d.y < 0)) {
        d = -d;
        // normal flips with the direction
        Rational nlo = -hi, nhi = -lo;
        lo = nlo;
        hi = nhi;
    }
    if (!(lo < hi)) fail(ErrorCode::EmptyInterior, "strip with empty interior");
    RationalPolygon p;
    p.kind_ = Kind::Strip;
    p.strip_dir_ = d;
    p.strip_low_ = lo;
    p.strip_high_ = hi;
    return p;
}

RationalPolygon RationalPolygon::chain_with_rays(std::vector<Pt> chain, const VecZ2& rin,
                                                 const VecZ2& rout) {
    RationalPolygon p;
    p.kind_ = Kind::Chain;
    p.vertices_ = std::move(chain);
    p.ray_in_ = primitive(rin);
    p.ray_out_ = primitive(rout);
    p.validate_or_throw();
    return p;
}

RationalPolygon RationalPolygon::from_points(const std::vector<Pt>& pts,
                                             const std::vector<VecZ2>& rays) {
    if (rays.empty()) {
        std::vector<Pt> hull = convex_hull(pts);
        if (hull.size() < 3) fail(ErrorCode::EmptyInterior, "hull is a point or segment");
        RationalPolygon p;
        p.kind_ = Kind::Compact;
        p.vertices_ = std::move(hull);
        p.canonicalize();
        p.validate_or_throw();
        return p;
    }
    if (rays.size() > 2) fail(ErrorCode::InvalidArgument, "at most two recession rays");
    if (pts.empty()) fail(ErrorCode::InvalidArgument, "no points given");

    VecZ2 r1 = primitive(rays[0]);
    VecZ2 r2 = primitive(rays.size() == 2 ? rays[1] : rays[0]);
    BigInt cr = det2(r1, r2);
    if (cr < 0) std::swap(r1, r2);
    if (cr == 0) {
        if (idot(r1, r2) < 0) {
            // opposite rays: the region is a full strip
            VecZ2 n = left_normal(r1);
            Rational lo = dot(n, pts[0]), hi = lo;
            for (const auto& p : pts) {
                Rational v = dot(n, p);
                lo = rat_min(lo, v);
                hi = rat_max(hi, v);
            }
            if (lo == hi) fail(ErrorCode::EmptyInterior, "strip with empty interior");
            return strip(r1, lo, hi);
        }
        r2 = r1;
    }
    const VecZ2 ray_out = r1;
    const VecZ2 ray_in = r2;

    std::vector<Pt> augmented = pts;
    for (const auto& p : pts) {
        augmented.push_back(p + Pt{Rational(ray_out.x), Rational(ray_out.y)});
        if (!(ray_in == ray_out))
            augmented.push_back(p + Pt{Rational(ray_in.x), Rational(ray_in.y)});
    }
    if (points_collinear(augmented)) fail(ErrorCode::EmptyInterior, "points and rays span no area");
    std::vector<Pt> hull = convex_hull(augmented);

    auto attach = [&hull](const VecZ2& ext_normal, const VecZ2& along) {
        size_t best = 0;
        for (size_t i = 1; i < hull.size(); ++i) {
            Rational cur = dot(ext_normal, hull[i]);
            Rational b = dot(ext_normal, hull[best]);
            if (cur > b || (cur == b && dot(along, hull[i]) < dot(along, hull[best]))) best = i;
        }
        return best;
    };
    size_t end_idx = attach(right_normal(ray_out), ray_out);
    size_t start_idx = attach(left_normal(ray_in), ray_in);

    std::vector<Pt> chain;
    for (size_t i = start_idx;; i = (i + 1) % hull.size()) {
        chain.push_back(hull[i]);
        if (i == end_idx) break;
    }
    // absorb chain endpoints that continue straight into a ray
    while (chain.size() >= 2) {
        VecZ2 t = primitive_direction(chain[0], chain[1]);
        if (det2(ray_in, t) == 0)
            chain.erase(chain.begin());
        else
            break;
    }
    while (chain.size() >= 2) {
        VecZ2 t = primitive_direction(chain[chain.size() - 2], chain.back());
        if (det2(t, ray_out) == 0)
            chain.pop_back();
        else
            break;
    }
    return chain_with_rays(std::move(chain), ray_in, ray_out);
}

void RationalPolygon::canonicalize() {
    if (kind_ == Kind::Compact && !vertices_.empty()) {
        auto it = std::min_element(vertices_.begin(), vertices_.end(), lex_less);
        std::rotate(vertices_.begin(), it, vertices_.end());
    }
}

void RationalPolygon::validate_or_throw() const {
    if (kind_ == Kind::Strip) {
        if (!(strip_low_ < strip_high_)) fail(ErrorCode::EmptyInterior, "strip bounds");
        return;
    }
    std::vector<VecZ2> travels;
    if (kind_ == Kind::Chain) {
        if (vertices_.empty()) fail(ErrorCode::EmptyInterior, "chain without vertices");
        travels.push_back(-ray_in_);
        for (size_t i = 0; i + 1 < vertices_.size(); ++i)
            travels.push_back(primitive_direction(vertices_[i], vertices_[i + 1]));
        travels.push_back(ray_out_);
        for (size_t i = 0; i + 1 < travels.size(); ++i)
            if (det2(travels[i], travels[i + 1]) <= 0)
                fail(ErrorCode::EmptyInterior, "chain not strictly convex");
        // global half-plane containment catches over-turning chains
        for (const auto& hp : halfplanes()) {
            for (const auto& v : vertices_)
                if (!hp.satisfied(v)) fail(ErrorCode::EmptyInterior, "chain not convex");
            for (const auto& r : {ray_in_, ray_out_})
                if (hp.normal.x * r.x + hp.normal.y * r.y > 0)
                    fail(ErrorCode::EmptyInterior, "recession violates a half-plane");
        }
        return;
    }
    if (vertices_.size() < 3) fail(ErrorCode::EmptyInterior, "fewer than three vertices");
    const size_t n = vertices_.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& a = vertices_[i];
        const Pt& b = vertices_[(i + 1) % n];
        const Pt& c = vertices_[(i + 2) % n];
        if (cross(b - a, c - b) <= 0)
            fail(ErrorCode::EmptyInterior, "vertex cycle not strictly convex/ccw");
    }
}

std::vector<BoundaryEdge> RationalPolygon::edges() const {
    std::vector<BoundaryEdge> out;
    if (kind_ == Kind::Compact) {
        const size_t n = vertices_.size();
        for (size_t i = 0; i < n; ++i) {
            const Pt& a = vertices_[i];
            const Pt& b = vertices_[(i + 1) % n];
            out.push_back({a, b, false, false, primitive_direction(a, b)});
        }
        return out;
    }
    if (kind_ == Kind::Chain) {
        out.push_back({vertices_.front(), vertices_.front(), true, false, -ray_in_});
        for (size_t i = 0; i + 1 < vertices_.size(); ++i)
            out.push_back({vertices_[i], vertices_[i + 1], false, false,
                           primitive_direction(vertices_[i], vertices_[i + 1])});
        out.push_back({vertices_.back(), vertices_.back(), false, true, ray_out_});
        return out;
    }
    // Strip: base points on each boundary line
    VecZ2 n = left_normal(strip_dir_);
    Rational nn = Rational(n.x * n.x + n.y * n.y);
    Pt base_low{Rational(n.x) * strip_low_ / nn, Rational(n.y) * strip_low_ / nn};
    Pt base_high{Rational(n.x) * strip_high_ / nn, Rational(n.y) * strip_high_ / nn};
    out.push_back({base_low, base_low, true, true, strip_dir_});
    out.push_back({base_high, base_high, true, true, -strip_dir_});
    return out;
}

std::vector<HalfPlane> RationalPolygon::halfplanes() const {
    std::vector<HalfPlane> out;
    for (const auto& e : edges()) {
        VecZ2 n = right_normal(e.travel);
        out.push_back({n, dot(n, e.a)});
    }
    return out;
}

bool RationalPolygon::contains(const Pt& p) const {
    for (const auto& hp : halfplanes())
        if (!hp.satisfied(p)) return false;
    return true;
}

bool RationalPolygon::interior_contains(const Pt& p) const {
    for (const auto& hp : halfplanes())
        if (!hp.strictly(p)) return false;
    return true;
}

bool RationalPolygon::on_boundary(const Pt& p) const {
    return contains(p) && !interior_contains(p);
}

bool RationalPolygon::is_vertex(const Pt& p) const {
    return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
}

std::vector<VecZ2> RationalPolygon::recession() const {
    switch (kind_) {
        case Kind::Compact: return {};
        case Kind::Chain: return {ray_in_, ray_out_};
        case Kind::Strip: return {strip_dir_, -strip_dir_};
    }
    return {};
}

bool RationalPolygon::has_vertical_recession() const {
    for (const auto& r : recession())
        if (r.x == 0) return true;
    return false;
}

std::optional<Rational> RationalPolygon::x_min() const {
    for (const auto& r : recession())
        if (r.x < 0) return std::nullopt;
    if (kind_ == Kind::Strip) {
        // vertical strip: n = (-1, 0) up to sign; x in [-high, -low]
        return -strip_high_;
    }
    Rational m = vertices_.front().x;
    for (const auto& v : vertices_) m = rat_min(m, v.x);
    return m;
}

std::optional<Rational> RationalPolygon::x_max() const {
    for (const auto& r : recession())
        if (r.x > 0) return std::nullopt;
    if (kind_ == Kind::Strip) return -strip_low_;
    Rational m = vertices_.front().x;
    for (const auto& v : vertices_) m = rat_max(m, v.x);
    return m;
}

std::optional<Rational> RationalPolygon::y_min() const {
    for (const auto& r : recession())
        if (r.y < 0) return std::nullopt;
    if (kind_ == Kind::Strip) return strip_low_; // horizontal strip, n = (0,1)
    Rational m = vertices_.front().y;
    for (const auto& v : vertices_) m = rat_min(m, v.y);
    return m;
}

std::optional<Rational> RationalPolygon::y_max() const {
    for (const auto& r : recession())
        if (r.y > 0) return std::nullopt;
    if (kind_ == Kind::Strip) return strip_high_;
    Rational m = vertices_.front().y;
    for (const auto& v : vertices_) m = rat_max(m, v.y);
    return m;
}

VerticalSlice RationalPolygon::vertical_slice(const Rational& lambda) const {
    VerticalSlice s;
    s.lambda = lambda;
    bool have_top = false, have_bot = false;
    Rational top, bot;
    for (const auto& hp : halfplanes()) {
        Rational rhs = hp.offset - Rational(hp.normal.x) * lambda;
        if (hp.normal.y == 0) {
            if (Rational(0) > rhs) {
                s.kind = VerticalSlice::Kind::Empty;
                return s;
            }
        } else if (hp.normal.y > 0) {
            Rational ub = rhs / Rational(hp.normal.y);
            if (!have_top || ub < top) top = ub;
            have_top = true;
        } else {
            Rational lb = rhs / Rational(hp.normal.y);
            if (!have_bot || lb > bot) bot = lb;
            have_bot = true;
        }
    }
    if (have_top && have_bot && bot > top) {
        s.kind = VerticalSlice::Kind::Empty;
        return s;
    }
    if (have_top && have_bot) {
        s.kind = VerticalSlice::Kind::Compact;
        s.bottom = Pt{lambda, bot};
        s.top = Pt{lambda, top};
        return s;
    }
    s.kind = VerticalSlice::Kind::Unbounded;
    s.bottom_infinite = !have_bot;
    s.top_infinite = !have_top;
    if (have_bot) s.bottom = Pt{lambda, bot};
    if (have_top) s.top = Pt{lambda, top};
    return s;
}

Pt RationalPolygon::top_boundary_point(const Rational& lambda) const {
    VerticalSlice s = vertical_slice(lambda);
    if (s.empty()) fail(ErrorCode::EmptySlice, "no slice at x = " + rat_to_string(lambda));
    if (!s.compact()) fail(ErrorCode::UnboundedSlice, "slice at x = " + rat_to_string(lambda));
    return s.top;
}

CornerBasis RationalPolygon::corner_basis(const Pt& z) const {
    if (is_vertex(z)) {
        size_t i = std::find(vertices_.begin(), vertices_.end(), z) - vertices_.begin();
        VecZ2 d1, d2;
        if (kind_ == Kind::Compact) {
            const size_t n = vertices_.size();
            d1 = primitive_direction(z, vertices_[(i + 1) % n]);
            d2 = primitive_direction(z, vertices_[(i + n - 1) % n]);
        } else {
            d1 = (i + 1 < vertices_.size()) ? primitive_direction(z, vertices_[i + 1]) : ray_out_;
            d2 = (i > 0) ? primitive_direction(z, vertices_[i - 1]) : ray_in_;
        }
        if (det2(d1, d2) > 0) return {z, d1, d2};
        return {z, d2, d1};
    }
    for (const auto& e : edges()) {
        Pt rel = z - e.a;
        if (Rational(e.travel.x) * rel.y != Rational(e.travel.y) * rel.x) continue;
        Rational s = dot(e.travel, rel);
        bool within = true;
        if (!e.a_infinite && s < 0) within = false;
        if (!e.b_infinite) {
            Rational send = dot(e.travel, e.b - e.a);
            if (s > send) within = false;
        }
        if (!within) continue;
        VecZ2 t = e.travel;
        VecZ2 u = -t, v = t;
        if (t.x < 0) std::swap(u, v);
        if (t.x == 0) {
            u = VecZ2{0, -1};
            v = VecZ2{0, 1};
        }
        return {z, u, v};
    }
    fail(ErrorCode::PointNotOnBoundary, pt_to_string(z));
}

RationalPolygon RationalPolygon::map_affine(const AffineMapZ& m) const {
    if (!m.linear.unimodular())
        fail(ErrorCode::InvalidArgument, "affine map must have unimodular linear part");
    RationalPolygon p;
    p.kind_ = kind_;
    const bool flip = m.linear.det() < 0;
    if (kind_ == Kind::Strip) {
        VecZ2 nd = m.linear.apply(strip_dir_);
        auto es = edges();
        Pt low = m.apply(es[0].a);
        Pt high = m.apply(es[1].a);
        VecZ2 d = primitive(nd);
        if (d.x < 0 || (d.x == 0 && d.y < 0)) d = -d;
        VecZ2 n = left_normal(d);
        Rational c1 = dot(n, low), c2 = dot(n, high);
        return strip(d, rat_min(c1, c2), rat_max(c1, c2));
    }
    p.vertices_.reserve(vertices_.size());
    for (const auto& v : vertices_) p.vertices_.push_back(m.apply(v));
    if (kind_ == Kind::Chain) {
        p.ray_in_ = m.linear.apply(ray_in_);
        p.ray_out_ = m.linear.apply(ray_out_);
        if (flip) {
            std::reverse(p.vertices_.begin(), p.vertices_.end());
            std::swap(p.ray_in_, p.ray_out_);
        }
    } else if (flip) {
        std::reverse(p.vertices_.begin(), p.vertices_.end());
    }
    p.canonicalize();
    p.validate_or_throw();
    return p;
}

std::optional<RationalPolygon> RationalPolygon::try_map_shear(const PiecewiseShear& ps) const {
    if (ps.trivial()) return *this;
    if (kind_ == Kind::Strip) {
        if (strip_dir_.x == 0) return *this; // vertical strip is setwise invariant
        return std::nullopt;
    }

    // Candidate boundary points: vertices plus finite slice endpoints at each cut.
    std::vector<Pt> inserted;
    for (const auto& c : ps.cuts) {
        VerticalSlice s = vertical_slice(c.lambda);
        if (s.empty()) continue;
        if (s.compact() || !s.bottom_infinite) inserted.push_back(s.bottom);
        if (s.compact() || !s.top_infinite) inserted.push_back(s.top);
    }
    std::erase_if(inserted, [this](const Pt& p) { return is_vertex(p); });
    std::sort(inserted.begin(), inserted.end(), lex_less);
    inserted.erase(std::unique(inserted.begin(), inserted.end()), inserted.end());

    // Walk the boundary and splice the inserted points into place.
    std::vector<Pt> path;
    std::vector<Pt> before_front; // points on the incoming infinite edge
    for (const auto& e : edges()) {
        std::vector<std::pair<Rational, Pt>> on_edge;
        for (const auto& q : inserted) {
            Pt rel = q - e.a;
            if (Rational(e.travel.x) * rel.y != Rational(e.travel.y) * rel.x) continue;
            Rational s = dot(e.travel, rel);
            if (!e.a_infinite && s <= 0) continue;
            if (!e.b_infinite) {
                Rational send = dot(e.travel, e.b - e.a);
                if (s >= send) continue;
            }
            if (e.a_infinite && s >= 0) continue;
            on_edge.push_back({s, q});
        }
        std::sort(on_edge.begin(), on_edge.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        if (e.a_infinite) {
            for (auto& [s, q] : on_edge) before_front.push_back(q);
            continue;
        }
        path.push_back(e.a);
        for (auto& [s, q] : on_edge) path.push_back(q);
    }
    if (kind_ == Kind::Chain)
        path.insert(path.begin(), before_front.begin(), before_front.end());

    std::vector<Pt> mapped;
    mapped.reserve(path.size());
    for (const auto& q : path) mapped.push_back(apply_tvec(ps, q));

    auto shear_ray = [&ps](const VecZ2& r) {
        if (r.x > 0) {
            BigInt total = 0;
            for (const auto& c : ps.cuts) total += c.n;
            return primitive(MatZ2::shear(total).apply(r));
        }
        return r;
    };

    if (kind_ == Kind::Compact) {
        const size_t n = mapped.size();
        for (size_t i = 0; i < n; ++i) {
            const Pt& a = mapped[i];
            const Pt& b = mapped[(i + 1) % n];
            const Pt& c = mapped[(i + 2) % n];
            if (cross(b - a, c - b) < 0) return std::nullopt;
        }
        std::vector<Pt> kept;
        for (size_t i = 0; i < n; ++i) {
            const Pt& prev = mapped[(i + n - 1) % n];
            const Pt& cur = mapped[i];
            const Pt& next = mapped[(i + 1) % n];
            if (cross(cur - prev, next - cur) != 0) kept.push_back(cur);
        }
        if (kept.size() < 3) return std::nullopt;
        RationalPolygon out;
        out.kind_ = Kind::Compact;
        out.vertices_ = std::move(kept);
        out.canonicalize();
        out.validate_or_throw();
        return out;
    }

    VecZ2 rin = shear_ray(ray_in_);
    VecZ2 rout = shear_ray(ray_out_);
    // convexity along the open path
    std::vector<VecZ2> travels;
    travels.push_back(-rin);
    for (size_t i = 0; i + 1 < mapped.size(); ++i)
        travels.push_back(primitive_direction(mapped[i], mapped[i + 1]));
    travels.push_back(rout);
    for (size_t i = 0; i + 1 < travels.size(); ++i)
        if (det2(travels[i], travels[i + 1]) < 0) return std::nullopt;
    // drop subdivision points that stayed straight
    std::vector<Pt> kept;
    for (size_t i = 0; i < mapped.size(); ++i) {
        if (det2(travels[i], travels[i + 1]) != 0) kept.push_back(mapped[i]);
    }
    if (kept.empty()) return std::nullopt;
    try {
        return chain_with_rays(std::move(kept), rin, rout);
    } catch (const Error&) {
        return std::nullopt;
    }
}

RationalPolygon RationalPolygon::map_shear(const PiecewiseShear& ps) const {
    auto r = try_map_shear(ps);
    if (!r) fail(ErrorCode::NonConvexImage, "piecewise shear breaks convexity");
    return *r;
}

bool RationalPolygon::is_convex_image(const PiecewiseShear& ps) const {
    return try_map_shear(ps).has_value();
}

std::string RationalPolygon::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Compact:
            os << "polygon[";
            for (size_t i = 0; i < vertices_.size(); ++i)
                os << (i ? " " : "") << pt_to_string(vertices_[i]);
            os << "]";
            break;
        case Kind::Chain:
            os << "chain[in=(" << ray_in_.x << "," << ray_in_.y << ") ";
            for (const auto& v : vertices_) os << pt_to_string(v) << " ";
            os << "out=(" << ray_out_.x << "," << ray_out_.y << ")]";
            break;
        case Kind::Strip:
            os << "strip[dir=(" << strip_dir_.x << "," << strip_dir_.y << ") "
               << rat_to_string(strip_low_) << ".." << rat_to_string(strip_high_) << "]";
            break;
    }
    return os.str();
}

} // namespace semitoric
