#include "projkit/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace projkit {

double ProjectableSet::distance(const Vector& x) const {
    return projkit::distance(x, project(x));
}

void ProjectableSet::check_query(const Vector& x) const {
    if (x.dim() != dimension()) {
        throw DimensionError(name() + ": query dimension " + std::to_string(x.dim()) +
                             " != set dimension " + std::to_string(dimension()));
    }
}

// ---------------------------------------------------------------- FullSpace

FullSpaceSet::FullSpaceSet(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DimensionError("fullspace: dimension must be >= 1");
}

Vector FullSpaceSet::project(const Vector& x) const {
    check_query(x);
    return x;
}

// ---------------------------------------------------------------- Halfspace

HalfspaceSet::HalfspaceSet(Vector normal, double offset)
    : normal_(std::move(normal)), offset_(offset), normal_sq_(dot(normal_, normal_)) {
    if (normal_sq_ == 0.0) throw DimensionError("halfspace: zero normal");
}

Vector HalfspaceSet::project(const Vector& x) const {
    check_query(x);
    const double excess = dot(normal_, x) - offset_;
    if (excess <= 0.0) return x;
    return x - (excess / normal_sq_) * normal_;
}

// ------------------------------------------------------------ FinitePointSet

namespace {
constexpr std::size_t kLeafSize = 8;
constexpr std::size_t kTreeThreshold = 64;
}  // namespace

FinitePointSet::FinitePointSet(std::vector<Vector> points) : pts_(std::move(points)) {
    if (pts_.empty()) throw DimensionError("finite_points: empty point list");
    dim_ = pts_.front().dim();
    for (const auto& p : pts_) {
        if (p.dim() != dim_) throw DimensionError("finite_points: mixed dimensions");
    }
    if (pts_.size() >= kTreeThreshold) {
        order_.resize(pts_.size());
        for (std::size_t i = 0; i < pts_.size(); ++i) order_[i] = static_cast<std::uint32_t>(i);
        nodes_.reserve(2 * pts_.size() / kLeafSize + 2);
        build(0, static_cast<std::uint32_t>(pts_.size()), 0);
    }
}

std::uint32_t FinitePointSet::build(std::uint32_t begin, std::uint32_t end, std::size_t depth) {
    const std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    if (end - begin <= kLeafSize) {
        nodes_[id].begin = begin;
        nodes_[id].end = end;
        return id;
    }
    // split on the widest axis to keep the tree balanced on curve-like data
    std::size_t axis = 0;
    double best_spread = -1.0;
    for (std::size_t ax = 0; ax < dim_; ++ax) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::uint32_t i = begin; i < end; ++i) {
            const double v = pts_[order_[i]][ax];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > best_spread) {
            best_spread = hi - lo;
            axis = ax;
        }
    }
    (void)depth;
    const std::uint32_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](std::uint32_t lhs, std::uint32_t rhs) {
                         return pts_[lhs][axis] < pts_[rhs][axis];
                     });
    nodes_[id].axis = static_cast<std::int32_t>(axis);
    nodes_[id].split = pts_[order_[mid]][axis];
    const std::uint32_t left = build(begin, mid, depth + 1);
    const std::uint32_t right = build(mid, end, depth + 1);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

double FinitePointSet::point_d2(std::size_t idx, const Vector& q) const {
    const Vector& p = pts_[idx];
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        const double d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

bool FinitePointSet::better(std::size_t candidate, std::size_t incumbent, double d2,
                            double best_d2) const {
    if (d2 < best_d2) return true;
    if (d2 > best_d2) return false;
    return lex_less(pts_[candidate], pts_[incumbent]);
}

void FinitePointSet::search(std::uint32_t node, const Vector& q, double& best_d2,
                            std::size_t& best_idx) const {
    const Node& n = nodes_[node];
    if (n.axis < 0) {
        for (std::uint32_t i = n.begin; i < n.end; ++i) {
            const std::size_t idx = order_[i];
            const double d2 = point_d2(idx, q);
            if (best_idx == pts_.size() || better(idx, best_idx, d2, best_d2)) {
                best_d2 = d2;
                best_idx = idx;
            }
        }
        return;
    }
    const double diff = q[static_cast<std::size_t>(n.axis)] - n.split;
    const std::uint32_t near = diff < 0.0 ? n.left : n.right;
    const std::uint32_t far = diff < 0.0 ? n.right : n.left;
    search(near, q, best_d2, best_idx);
    // descend on equality too: equidistant points in the far half can win the
    // lexicographic tie-break
    if (diff * diff <= best_d2) search(far, q, best_d2, best_idx);
}

std::size_t FinitePointSet::nearest_index(const Vector& x) const {
    check_query(x);
    double best_d2 = std::numeric_limits<double>::infinity();
    std::size_t best_idx = pts_.size();
    if (nodes_.empty()) {
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            const double d2 = point_d2(i, x);
            if (best_idx == pts_.size() || better(i, best_idx, d2, best_d2)) {
                best_d2 = d2;
                best_idx = i;
            }
        }
    } else {
        search(0, x, best_d2, best_idx);
    }
    return best_idx;
}

Vector FinitePointSet::project(const Vector& x) const {
    return pts_[nearest_index(x)];
}

double FinitePointSet::distance(const Vector& x) const {
    return projkit::distance(x, pts_[nearest_index(x)]);
}

// -------------------------------------------------------------------- Sector

SectorSet::SectorSet(double theta_lo, double theta_hi, std::optional<double> radius_cap)
    : lo_(theta_lo), hi_(theta_hi), cap_(radius_cap) {
    const double width = hi_ - lo_;
    if (!(width > 0.0) || !(width < 2.0 * std::numbers::pi)) {
        throw DomainError("sector: angular width must lie in (0, 2*pi)");
    }
    if (cap_ && !(*cap_ > 0.0)) throw DomainError("sector: radius cap must be positive");
}

Vector SectorSet::project(const Vector& x) const {
    check_query(x);
    const double r = std::hypot(x[0], x[1]);
    if (r == 0.0) return x;  // apex belongs to the sector

    const double two_pi = 2.0 * std::numbers::pi;
    double rel = std::fmod(std::atan2(x[1], x[0]) - lo_, two_pi);
    if (rel < 0.0) rel += two_pi;
    const bool inside_angle = rel <= hi_ - lo_;
    if (inside_angle && (!cap_ || r <= *cap_)) return x;

    Vector best = Vector::zeros(2);  // apex
    double best_d = r;
    auto consider = [&](const Vector& cand) {
        const double d = projkit::distance(x, cand);
        if (d < best_d || (d == best_d && lex_less(cand, best))) {
            best_d = d;
            best = cand;
        }
    };
    for (double theta : {lo_, hi_}) {
        const Vector dir{std::cos(theta), std::sin(theta)};
        double t = dot(x, dir);
        t = std::max(t, 0.0);
        if (cap_) t = std::min(t, *cap_);
        consider(t * dir);
    }
    if (cap_ && inside_angle && r > *cap_) {
        consider((*cap_ / r) * x);
    }
    return best;
}

// -------------------------------------------------------------------- Curves

Curve parabola_curve() {
    return Curve{"parabola", [](double t) { return t * t; }, [](double t) { return 2.0 * t; }};
}

Curve flat_exp_curve() {
    auto f = [](double t) { return t == 0.0 ? 0.0 : std::exp(-1.0 / (t * t)); };
    auto df = [f](double t) { return t == 0.0 ? 0.0 : f(t) * 2.0 / (t * t * t); };
    return Curve{"flat_exp", f, df};
}

Curve abs32_smoothed_curve(double eps) {
    if (!(eps > 0.0)) throw DomainError("abs32_smoothed: eps must be positive");
    auto f = [eps](double t) { return std::pow(t * t + eps, 0.75); };
    auto df = [eps](double t) { return 1.5 * t * std::pow(t * t + eps, -0.25); };
    return Curve{"abs32_smoothed", f, df};
}

Curve curve_by_name(const std::string& name) {
    if (name == "parabola") return parabola_curve();
    if (name == "flat_exp") return flat_exp_curve();
    if (name == "abs32_smoothed") return abs32_smoothed_curve(1e-6);
    throw LookupError("unknown curve: " + name);
}

// ------------------------------------------------------------------ Epigraph

EpigraphSet::EpigraphSet(Curve curve, double lo, double hi)
    : curve_(std::move(curve)), lo_(lo), hi_(hi) {
    if (!(lo_ < hi_)) throw DomainError("epigraph: empty solver bracket");
    if (!curve_.f || !curve_.df) throw DomainError("epigraph: curve needs f and f'");
}

double EpigraphSet::solve_stationarity(double u1, double u2) const {
    const auto& f = curve_.f;
    const auto& df = curve_.df;
    auto g = [&](double t) { return (t - u1) + (f(t) - u2) * df(t); };

    // locate the squared-distance basin on a coarse grid (ties toward small t)
    constexpr int kCells = 256;
    const double h = (hi_ - lo_) / kCells;
    double best_s = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i <= kCells; ++i) {
        const double t = lo_ + i * h;
        const double dy = f(t) - u2;
        const double dt = t - u1;
        const double s = dt * dt + dy * dy;
        if (s < best_s) {
            best_s = s;
            best_i = i;
        }
    }
    double l = lo_ + std::max(0, best_i - 1) * h;
    double r = lo_ + std::min(kCells, best_i + 1) * h;
    double gl = g(l), gr = g(r);
    if (!std::isfinite(gl) || !std::isfinite(gr)) {
        throw NumericError("epigraph: non-finite stationarity residual");
    }
    if (gl > 0.0 || gr < 0.0) {
        throw BracketError("epigraph: no stationary point bracketed in [" +
                           std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    }
    if (gl == 0.0) return l;
    if (gr == 0.0) return r;
    // secant steps alternated with bisection; the bisection half guarantees
    // convergence when f' is ill-conditioned near a flat minimum
    double t = 0.5 * (l + r);
    for (int it = 0; it < 120; ++it) {
        if (it % 2 == 1 && gr != gl) {
            t = l - gl * (r - l) / (gr - gl);
            if (!(t > l && t < r)) t = 0.5 * (l + r);
        } else {
            t = 0.5 * (l + r);
        }
        const double gt = g(t);
        if (gt == 0.0) return t;
        if (gt < 0.0) {
            l = t;
            gl = gt;
        } else {
            r = t;
            gr = gt;
        }
        if (r - l <= 1e-16 * (1.0 + std::abs(l) + std::abs(r))) break;
    }
    return std::abs(gl) <= std::abs(gr) ? l : r;
}

Vector EpigraphSet::project(const Vector& u) const {
    check_query(u);
    const double fu = curve_.f(u[0]);
    if (!std::isfinite(fu)) throw NumericError("epigraph: non-finite curve value");
    if (u[1] >= fu) return u;  // already in the epigraph
    const double t = solve_stationarity(u[0], u[1]);
    return Vector{t, curve_.f(t)};
}

// ------------------------------------------------------------------- Support

SupportSet::SupportSet(std::vector<bool> mask) : mask_(std::move(mask)) {
    if (mask_.empty()) throw DimensionError("support: empty mask");
}

SupportSet SupportSet::from_indices(const std::vector<std::size_t>& on, std::size_t n) {
    std::vector<bool> mask(n, false);
    for (std::size_t i : on) {
        if (i >= n) throw DimensionError("support: index out of range");
        mask[i] = true;
    }
    return SupportSet(std::move(mask));
}

Vector SupportSet::project(const Vector& x) const {
    check_query(x);
    std::vector<double> out(x.coords());
    for (std::size_t t = 0; t < mask_.size(); ++t) {
        if (!mask_[t]) {
            out[2 * t] = 0.0;
            out[2 * t + 1] = 0.0;
        }
    }
    return Vector(std::move(out));
}

// ------------------------------------------------------------------ Diagonal

DiagonalSet::DiagonalSet(std::size_t blocks, std::size_t block_dim) : m_(blocks), d_(block_dim) {
    if (m_ == 0 || d_ == 0) throw DimensionError("diagonal: blocks and block_dim must be >= 1");
}

Vector DiagonalSet::project(const Vector& x) const {
    check_query(x);
    std::vector<double> mean(d_, 0.0);
    for (std::size_t b = 0; b < m_; ++b) {
        for (std::size_t i = 0; i < d_; ++i) mean[i] += x[b * d_ + i];
    }
    for (double& v : mean) v /= static_cast<double>(m_);
    std::vector<double> out(dimension());
    for (std::size_t b = 0; b < m_; ++b) {
        for (std::size_t i = 0; i < d_; ++i) out[b * d_ + i] = mean[i];
    }
    return Vector(std::move(out));
}

// ------------------------------------------------------------------- Product

ProductSet::ProductSet(std::vector<SetPtr> components)
    : components_(std::move(components)), dim_(0) {
    if (components_.empty()) throw DimensionError("product: no components");
    for (const auto& c : components_) {
        if (!c) throw DimensionError("product: null component");
        dim_ += c->dimension();
    }
}

Vector ProductSet::project(const Vector& x) const {
    check_query(x);
    std::vector<double> out;
    out.reserve(dim_);
    std::size_t at = 0;
    for (const auto& c : components_) {
        const std::size_t d = c->dimension();
        std::vector<double> blk(x.coords().begin() + at, x.coords().begin() + at + d);
        const Vector pb = c->project(Vector(std::move(blk)));
        out.insert(out.end(), pb.coords().begin(), pb.coords().end());
        at += d;
    }
    return Vector(std::move(out));
}

// ------------------------------------------------------------------ Cylinder

CylinderSet::CylinderSet(double radius, double h_lo, double h_hi)
    : radius_(radius), h_lo_(h_lo), h_hi_(h_hi) {
    if (!(radius_ > 0.0)) throw DomainError("cylinder: radius must be positive");
    if (!(h_lo_ <= h_hi_)) throw DomainError("cylinder: empty height range");
}

Vector CylinderSet::project(const Vector& x) const {
    check_query(x);
    const double h = std::clamp(x[2], h_lo_, h_hi_);
    const double rho = std::hypot(x[0], x[1]);
    if (rho == 0.0) {
        // every point of the circle is equidistant; lexicographic tie-break
        return Vector{-radius_, 0.0, h};
    }
    const double s = radius_ / rho;
    return Vector{s * x[0], s * x[1], h};
}

}  // namespace projkit
