#include "projkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace projkit {

namespace {

void validate(const std::vector<double>& c) {
    if (c.empty()) {
        throw DimensionError("Vector: dimension must be >= 1");
    }
    for (double x : c) {
        if (!std::isfinite(x)) {
            throw NumericError("Vector: non-finite coordinate");
        }
    }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : c_(std::move(coords)) {
    validate(c_);
}

Vector::Vector(std::initializer_list<double> coords) : c_(coords) {
    validate(c_);
}

Vector Vector::zeros(std::size_t dim) {
    if (dim == 0) {
        throw DimensionError("Vector: dimension must be >= 1");
    }
    return Vector(std::vector<double>(dim, 0.0));
}

namespace {

void check_dims(const Vector& u, const Vector& v, const char* op) {
    if (u.dim() != v.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch");
    }
}

}  // namespace

Vector operator+(const Vector& u, const Vector& v) {
    check_dims(u, v, "operator+");
    std::vector<double> out(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] + v[i];
    return Vector(std::move(out));
}

Vector operator-(const Vector& u, const Vector& v) {
    check_dims(u, v, "operator-");
    std::vector<double> out(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] - v[i];
    return Vector(std::move(out));
}

Vector operator*(double s, const Vector& v) {
    std::vector<double> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
    return Vector(std::move(out));
}

double dot(const Vector& u, const Vector& v) {
    check_dims(u, v, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
    return s;
}

double norm(const Vector& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) s += v[i] * v[i];
    return std::sqrt(s);
}

double distance(const Vector& u, const Vector& v) {
    check_dims(u, v, "distance");
    double s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        const double d = u[i] - v[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool lex_less(const Vector& u, const Vector& v) {
    check_dims(u, v, "lex_less");
    return std::lexicographical_compare(u.coords().begin(), u.coords().end(),
                                        v.coords().begin(), v.coords().end());
}

double cos_angle(const Vector& u, const Vector& v) {
    check_dims(u, v, "cos_angle");
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu == 0.0 || nv == 0.0) {
        throw DegenerateAngleError("cos_angle: zero vector");
    }
    return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

BuildingBlock make_block(Vector b, Vector a_plus, Vector b_plus) {
    if (b.dim() != a_plus.dim() || b.dim() != b_plus.dim()) {
        throw DimensionError("make_block: dimension mismatch");
    }
    BuildingBlock blk{std::move(b), std::move(a_plus), std::move(b_plus)};

    const Vector u_alpha = blk.b - blk.a_plus;
    const Vector v_alpha = blk.b_plus - blk.a_plus;
    if (norm(u_alpha) == 0.0 || norm(v_alpha) == 0.0) {
        blk.alpha_degenerate = true;
    } else {
        blk.cos_alpha = cos_angle(u_alpha, v_alpha);
    }

    const Vector u_beta = blk.a_plus - blk.b_plus;
    const Vector v_beta = blk.b - blk.b_plus;
    if (norm(u_beta) == 0.0 || norm(v_beta) == 0.0) {
        blk.beta_degenerate = true;
    } else {
        blk.cos_beta = cos_angle(u_beta, v_beta);
    }
    return blk;
}

}  // namespace projkit
