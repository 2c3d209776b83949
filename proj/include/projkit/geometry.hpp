#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "projkit/errors.hpp"

namespace projkit {

/// Immutable point in n-dimensional Euclidean space. Construction rejects
/// empty coordinate lists and non-finite entries, so a Vector held anywhere
/// in the library is always a valid finite point.
class Vector {
  public:
    explicit Vector(std::vector<double> coords);
    Vector(std::initializer_list<double> coords);

    static Vector zeros(std::size_t dim);

    std::size_t dim() const noexcept { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    const std::vector<double>& coords() const noexcept { return c_; }

    bool operator==(const Vector& other) const = default;

  private:
    std::vector<double> c_;
};

Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(double s, const Vector& v);

double dot(const Vector& u, const Vector& v);
double norm(const Vector& v);
double distance(const Vector& u, const Vector& v);

/// Strict lexicographic order on coordinate tuples; the tie-break used to
/// make set-valued projections single-valued.
bool lex_less(const Vector& u, const Vector& v);

/// Cosine of the angle between two nonzero vectors, clamped into [-1, 1]
/// so downstream acos/1-cos arithmetic never sees rounding overshoot.
/// Throws DegenerateAngleError if either vector is zero.
double cos_angle(const Vector& u, const Vector& v);

/// Consecutive projection triple b -> a_plus -> b_plus with the two angle
/// cosines cached: cos_alpha at a_plus between (b - a_plus, b_plus - a_plus),
/// cos_beta at b_plus between (a_plus - b_plus, b - b_plus). When a difference
/// vector vanishes the cosine is stored as 0 and flagged degenerate;
/// diagnostics must skip flagged values.
struct BuildingBlock {
    Vector b;
    Vector a_plus;
    Vector b_plus;
    double cos_alpha = 0.0;
    double cos_beta = 0.0;
    bool alpha_degenerate = false;
    bool beta_degenerate = false;
};

/// Builds a BuildingBlock, computing both cosines under the stated
/// degeneracy convention. Throws DimensionError on mixed dimensions.
BuildingBlock make_block(Vector b, Vector a_plus, Vector b_plus);

}  // namespace projkit
