#pragma once

#include <Eigen/Dense>
#include <vector>

#include "polyrot/errors.hpp"

namespace polyrot {

/// Hard cap on the ambient dimension handled by the library.
inline constexpr int kMaxDimension = 16;

/// Antisymmetry defect accepted by make_skew before rejection.
inline constexpr double kSkewDefectTol = 1e-12;

/// An element of so(n): a real antisymmetric n-by-n matrix.
///
/// Construction canonicalizes the input to (A - A^T)/2 once the defect
/// ||A + A^T||_inf passes the tolerance gate, so downstream code may rely on
/// exact antisymmetry. The matrix is never scale-normalized; a direction is
/// the ray of its positive multiples.
class SkewMatrix {
public:
    explicit SkewMatrix(const Eigen::MatrixXd& entries);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const { return m_; }

    bool is_zero() const { return m_.isZero(0.0); }

    SkewMatrix scaled(double c) const;
    SkewMatrix negated() const { return scaled(-1.0); }

private:
    Eigen::MatrixXd m_;
};

/// Validating factory, equivalent to the SkewMatrix constructor.
SkewMatrix make_skew(const Eigen::MatrixXd& entries);

/// Magnitudes of the 2x2 rotation blocks of the antisymmetric normal form.
///
/// lambdas holds floor(n/2) non-negative block magnitudes in descending
/// order; rank is twice the number of magnitudes above the (relative)
/// tolerance. The orthogonal change of basis itself is not materialized.
struct SpectralBlocks {
    std::vector<double> lambdas;
    int rank = 0;
};

/// Block magnitudes and rank of S. rank_tolerance is relative to the largest
/// singular value.
SpectralBlocks spectral_blocks(const SkewMatrix& S, double rank_tolerance = 1e-9);

/// Largest even rank an n-dimensional antisymmetric matrix can attain.
inline int max_skew_rank(int n) { return 2 * (n / 2); }

/// exp(tS) by scaling-and-squaring on the truncated power series. The result
/// is orthogonal with positive determinant up to roundoff.
Eigen::MatrixXd exp_map(const SkewMatrix& S, double t);

/// A finite rotation about a centre point: x -> exp(tS)(x - q) + q.
struct CenteredRotation {
    SkewMatrix S;
    Eigen::VectorXd centre;
    double t = 0.0;
};

Eigen::VectorXd apply_centered(const CenteredRotation& rot, const Eigen::VectorXd& x);

/// Coefficient of t in the signed displacement of x along the unit normal
/// n_vec under the rotation about q: (S n_vec) . (q - x).
double first_order_displacement(const SkewMatrix& S,
                                const Eigen::VectorXd& q,
                                const Eigen::VectorXd& x,
                                const Eigen::VectorXd& n_vec);

}  // namespace polyrot
