#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projkit/geometry.hpp"

namespace projkit {

/// A closed set exposing nearest-point projection and distance. Projections
/// are single-valued: ties are broken toward the lexicographically smallest
/// coordinate tuple. Implementations are immutable after construction and
/// projections are pure, so sets are safe to share across threads.
class ProjectableSet {
  public:
    virtual ~ProjectableSet() = default;

    virtual std::size_t dimension() const = 0;
    virtual Vector project(const Vector& x) const = 0;
    virtual double distance(const Vector& x) const;
    virtual std::string name() const = 0;

  protected:
    /// Throws DimensionError unless x matches the set dimension.
    void check_query(const Vector& x) const;
};

using SetPtr = std::shared_ptr<const ProjectableSet>;

/// The whole space; projection is the identity.
class FullSpaceSet : public ProjectableSet {
  public:
    explicit FullSpaceSet(std::size_t dim);
    std::size_t dimension() const override { return dim_; }
    Vector project(const Vector& x) const override;
    std::string name() const override { return "fullspace"; }

  private:
    std::size_t dim_;
};

/// Closed halfspace {z : <normal, z> <= offset}.
class HalfspaceSet : public ProjectableSet {
  public:
    HalfspaceSet(Vector normal, double offset);
    std::size_t dimension() const override { return normal_.dim(); }
    Vector project(const Vector& x) const override;
    std::string name() const override { return "halfspace"; }
    const Vector& normal() const { return normal_; }
    double offset() const { return offset_; }

  private:
    Vector normal_;
    double offset_;
    double normal_sq_;
};

/// Finite point cloud; projection returns the nearest listed point. Large
/// clouds are indexed with an exact kd-tree that preserves the lexicographic
/// tie-break of the linear scan.
class FinitePointSet : public ProjectableSet {
  public:
    explicit FinitePointSet(std::vector<Vector> points);
    std::size_t dimension() const override { return dim_; }
    Vector project(const Vector& x) const override;
    double distance(const Vector& x) const override;
    std::string name() const override { return "finite_points"; }

    const std::vector<Vector>& points() const { return pts_; }
    std::size_t nearest_index(const Vector& x) const;

  private:
    struct Node {
        double split = 0.0;
        std::int32_t axis = -1;  // -1 marks a leaf
        std::uint32_t left = 0, right = 0;
        std::uint32_t begin = 0, end = 0;
    };

    std::vector<Vector> pts_;
    std::size_t dim_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> order_;

    std::uint32_t build(std::uint32_t begin, std::uint32_t end, std::size_t depth);
    void search(std::uint32_t node, const Vector& q, double& best_d2,
                std::size_t& best_idx) const;
    double point_d2(std::size_t idx, const Vector& q) const;
    bool better(std::size_t candidate, std::size_t incumbent, double d2,
                double best_d2) const;
};

/// Planar angular sector {r in [0, cap], theta in [theta_lo, theta_hi]},
/// optionally unbounded when no radius cap is given. Width must be < 2*pi.
class SectorSet : public ProjectableSet {
  public:
    SectorSet(double theta_lo, double theta_hi, std::optional<double> radius_cap);
    std::size_t dimension() const override { return 2; }
    Vector project(const Vector& x) const override;
    std::string name() const override { return "sector"; }
    double theta_lo() const { return lo_; }
    double theta_hi() const { return hi_; }
    std::optional<double> radius_cap() const { return cap_; }

  private:
    double lo_, hi_;
    std::optional<double> cap_;
};

/// Scalar curve with derivative, used to define epigraph sets.
struct Curve {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> df;
};

Curve parabola_curve();                     // t^2
Curve flat_exp_curve();                     // exp(-1/t^2), 0 at t = 0
Curve abs32_smoothed_curve(double eps);     // (t^2 + eps)^(3/4)
Curve curve_by_name(const std::string& name);

/// Epigraph {(x, y) : y >= f(x)} of a differentiable curve. Points below the
/// graph project onto it; the foot is found as a root of the stationarity
/// equation (t - u1) + (f(t) - u2) f'(t) = 0 inside the solver bracket, by
/// coarse localization, bisection, and Newton polish. If the nearest-point
/// basin sits at the bracket edge with no interior root, BracketError.
class EpigraphSet : public ProjectableSet {
  public:
    EpigraphSet(Curve curve, double lo, double hi);
    std::size_t dimension() const override { return 2; }
    Vector project(const Vector& u) const override;
    std::string name() const override { return "epigraph(" + curve_.name + ")"; }
    const Curve& curve() const { return curve_; }
    double bracket_lo() const { return lo_; }
    double bracket_hi() const { return hi_; }

  private:
    Curve curve_;
    double lo_, hi_;
    double solve_stationarity(double u1, double u2) const;
};

/// Time-domain support constraint for length-N complex signals stored as
/// interleaved (re, im) pairs in R^{2N}: entries off the mask are zeroed.
class SupportSet : public ProjectableSet {
  public:
    explicit SupportSet(std::vector<bool> mask);
    static SupportSet from_indices(const std::vector<std::size_t>& on, std::size_t n);
    std::size_t dimension() const override { return 2 * mask_.size(); }
    Vector project(const Vector& x) const override;
    std::string name() const override { return "support"; }
    const std::vector<bool>& mask() const { return mask_; }

  private:
    std::vector<bool> mask_;
};

/// Diagonal {(x, ..., x)} of m blocks of dimension d; projection replaces
/// every block by the blockwise mean.
class DiagonalSet : public ProjectableSet {
  public:
    DiagonalSet(std::size_t blocks, std::size_t block_dim);
    std::size_t dimension() const override { return m_ * d_; }
    Vector project(const Vector& x) const override;
    std::string name() const override { return "diagonal"; }
    std::size_t blocks() const { return m_; }
    std::size_t block_dim() const { return d_; }

  private:
    std::size_t m_, d_;
};

/// Cartesian product C_1 x ... x C_m; projection acts componentwise.
class ProductSet : public ProjectableSet {
  public:
    explicit ProductSet(std::vector<SetPtr> components);
    std::size_t dimension() const override { return dim_; }
    Vector project(const Vector& x) const override;
    std::string name() const override { return "product"; }
    const std::vector<SetPtr>& components() const { return components_; }

  private:
    std::vector<SetPtr> components_;
    std::size_t dim_;
};

/// Cylinder shell {(R cos a, R sin a, h) : h in [h_lo, h_hi]} in R^3.
class CylinderSet : public ProjectableSet {
  public:
    CylinderSet(double radius, double h_lo, double h_hi);
    std::size_t dimension() const override { return 3; }
    Vector project(const Vector& x) const override;
    std::string name() const override { return "cylinder"; }
    double radius() const { return radius_; }
    double h_lo() const { return h_lo_; }
    double h_hi() const { return h_hi_; }

  private:
    double radius_, h_lo_, h_hi_;
};

}  // namespace projkit
