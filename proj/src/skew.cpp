#include "polyrot/skew.hpp"

#include <algorithm>
#include <cmath>

namespace polyrot {

SkewMatrix::SkewMatrix(const Eigen::MatrixXd& entries) {
    if (entries.rows() != entries.cols()) {
        throw NotSquareError("skew matrix must be square, got " +
                             std::to_string(entries.rows()) + "x" +
                             std::to_string(entries.cols()));
    }
    const int n = static_cast<int>(entries.rows());
    if (n < 2) {
        throw DimensionTooSmallError("skew matrix dimension must be >= 2, got " +
                                     std::to_string(n));
    }
    if (n > kMaxDimension) {
        throw DimensionTooSmallError("dimension " + std::to_string(n) +
                                     " exceeds the supported cap of " +
                                     std::to_string(kMaxDimension));
    }
    const double defect = (entries + entries.transpose()).cwiseAbs().maxCoeff();
    if (defect > kSkewDefectTol) {
        throw NotSkewError("antisymmetry defect " + std::to_string(defect) +
                           " exceeds tolerance");
    }
    m_ = 0.5 * (entries - entries.transpose());
}

SkewMatrix SkewMatrix::scaled(double c) const {
    SkewMatrix out = *this;
    out.m_ *= c;
    return out;
}

SkewMatrix make_skew(const Eigen::MatrixXd& entries) { return SkewMatrix(entries); }

SpectralBlocks spectral_blocks(const SkewMatrix& S, double rank_tolerance) {
    const int n = S.dim();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(S.matrix());
    const Eigen::VectorXd sv = svd.singularValues();  // descending

    // Singular values of an antisymmetric matrix come in equal pairs, plus a
    // final zero when n is odd. Take one representative per pair.
    SpectralBlocks out;
    out.lambdas.reserve(n / 2);
    for (int i = 0; i + 1 < n; i += 2) {
        out.lambdas.push_back(0.5 * (sv[i] + sv[i + 1]));
    }
    const double largest = sv.size() > 0 ? sv[0] : 0.0;
    const double threshold = rank_tolerance * largest;
    if (largest > 0.0) {
        for (double lam : out.lambdas) {
            if (lam > threshold) out.rank += 2;
        }
    }
    return out;
}

Eigen::MatrixXd exp_map(const SkewMatrix& S, double t) {
    const int n = S.dim();
    Eigen::MatrixXd A = t * S.matrix();

    // Scale until the norm is below 1/2, run the series, square back up.
    double norm = A.cwiseAbs().maxCoeff() * n;  // bound on the induced inf-norm
    int squarings = 0;
    while (norm > 0.5 && squarings < 64) {
        A *= 0.5;
        norm *= 0.5;
        ++squarings;
    }

    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= 40; ++k) {
        term = (term * A) / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-17) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

Eigen::VectorXd apply_centered(const CenteredRotation& rot, const Eigen::VectorXd& x) {
    if (x.size() != rot.S.dim() || rot.centre.size() != rot.S.dim()) {
        throw DimensionMismatchError("point/centre dimension does not match rotation");
    }
    return exp_map(rot.S, rot.t) * (x - rot.centre) + rot.centre;
}

double first_order_displacement(const SkewMatrix& S,
                                const Eigen::VectorXd& q,
                                const Eigen::VectorXd& x,
                                const Eigen::VectorXd& n_vec) {
    const int n = S.dim();
    if (q.size() != n || x.size() != n || n_vec.size() != n) {
        throw DimensionMismatchError("first_order_displacement: dimension mismatch");
    }
    if (std::abs(n_vec.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("first_order_displacement: n_vec must be unit length");
    }
    return (S.matrix() * n_vec).dot(q - x);
}

}  // namespace polyrot
