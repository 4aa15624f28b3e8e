#ifndef BRIDGEFLOW_LINALG_HPP
#define BRIDGEFLOW_LINALG_HPP

// Small dense numerics used by every bridge formula: matrix exponential,
// controllability Gramian, PSD square root and SPD solves. Everything here is
// templated on the scalar type and accepts arbitrary Eigen expressions.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bridgeflow {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<double>;
using Vector = VectorX<double>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotPsdError : public std::domain_error {
public:
    NotPsdError(const std::string& what, double min_eigenvalue)
        : std::domain_error(what), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class SingularMatrixError : public std::domain_error {
public:
    SingularMatrixError(const std::string& what, double min_eigenvalue)
        : std::domain_error(what), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& M, const char* what) {
    if (M.rows() != M.cols() || M.rows() == 0) {
        std::ostringstream os;
        os << what << ": expected a non-empty square matrix, got " << M.rows() << "x" << M.cols();
        throw DimensionError(os.str());
    }
}

// Padé coefficients b_0..b_m for degrees 3, 5, 7, 9, 13 (Higham 2005).
inline constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
inline constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
inline constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                                 25200.0,    1512.0,    56.0,      1.0};
inline constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                                  302702400.0,   30270240.0,   2162160.0,
                                                  110880.0,      3960.0,       90.0,
                                                  1.0};
inline constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// 1-norm thresholds below which the degree-m approximant is accurate to unit roundoff.
inline constexpr std::array<double, 5> kPadeTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                                     9.504178996162932e-1, 2.097847961257068e0,
                                                     5.371920351148152e0};

template <typename Scalar, std::size_t N>
MatrixX<Scalar> pade_low(const MatrixX<Scalar>& A, const std::array<double, N>& b) {
    const Eigen::Index n = A.rows();
    const MatrixX<Scalar> I = MatrixX<Scalar>::Identity(n, n);
    const MatrixX<Scalar> A2 = A * A;
    MatrixX<Scalar> power = I;
    MatrixX<Scalar> odd = Scalar(b[1]) * I;
    MatrixX<Scalar> even = Scalar(b[0]) * I;
    for (std::size_t k = 2; k + 1 < N + 1; k += 2) {
        power = power * A2;
        even.noalias() += Scalar(b[k]) * power;
        if (k + 1 < N) odd.noalias() += Scalar(b[k + 1]) * power;
    }
    const MatrixX<Scalar> U = A * odd;
    return (even - U).partialPivLu().solve(even + U);
}

template <typename Scalar>
MatrixX<Scalar> pade13(const MatrixX<Scalar>& A) {
    const auto& b = kPade13;
    const Eigen::Index n = A.rows();
    const MatrixX<Scalar> I = MatrixX<Scalar>::Identity(n, n);
    const MatrixX<Scalar> A2 = A * A;
    const MatrixX<Scalar> A4 = A2 * A2;
    const MatrixX<Scalar> A6 = A4 * A2;
    const MatrixX<Scalar> inner_u =
        Scalar(b[13]) * A6 + Scalar(b[11]) * A4 + Scalar(b[9]) * A2;
    const MatrixX<Scalar> U =
        A * (A6 * inner_u + Scalar(b[7]) * A6 + Scalar(b[5]) * A4 + Scalar(b[3]) * A2 +
             Scalar(b[1]) * I);
    const MatrixX<Scalar> inner_v =
        Scalar(b[12]) * A6 + Scalar(b[10]) * A4 + Scalar(b[8]) * A2;
    const MatrixX<Scalar> V = A6 * inner_v + Scalar(b[6]) * A6 + Scalar(b[4]) * A4 +
                              Scalar(b[2]) * A2 + Scalar(b[0]) * I;
    return (V - U).partialPivLu().solve(V + U);
}

}  // namespace detail

/// e^{M t} by scaling and squaring around a Padé core. Negative t is allowed.
template <typename Derived>
MatrixX<typename Derived::Scalar> expm(const Eigen::MatrixBase<Derived>& M,
                                       typename Derived::Scalar t = 1) {
    using Scalar = typename Derived::Scalar;
    using std::ceil;
    using std::log2;
    detail::require_square(M, "expm");
    const MatrixX<Scalar> A = M * t;
    const double norm1 = static_cast<double>(A.cwiseAbs().colwise().sum().maxCoeff());
    if (!std::isfinite(norm1)) throw std::domain_error("expm: non-finite input");
    if (norm1 == 0.0) return MatrixX<Scalar>::Identity(A.rows(), A.cols());

    if (norm1 <= detail::kPadeTheta[0]) return detail::pade_low(A, detail::kPade3);
    if (norm1 <= detail::kPadeTheta[1]) return detail::pade_low(A, detail::kPade5);
    if (norm1 <= detail::kPadeTheta[2]) return detail::pade_low(A, detail::kPade7);
    if (norm1 <= detail::kPadeTheta[3]) return detail::pade_low(A, detail::kPade9);

    int squarings = 0;
    if (norm1 > detail::kPadeTheta[4])
        squarings = static_cast<int>(ceil(log2(norm1 / detail::kPadeTheta[4])));
    const MatrixX<Scalar> scaled = A / Scalar(std::ldexp(1.0, squarings));
    MatrixX<Scalar> E = detail::pade13(scaled);
    for (int i = 0; i < squarings; ++i) E = (E * E).eval();
    return E;
}

template <typename Scalar>
struct GramianBlocks {
    MatrixX<Scalar> gramian;  ///< Φ_t
    MatrixX<Scalar> transition;  ///< e^{tA}
};

/// Van Loan block exponential: exp(t·[[-A, BBᵀ],[0, Aᵀ]]) = [[F11, F12],[0, F22]] with
/// F22 = e^{tAᵀ} and Φ_t = F22ᵀ F12. Also hands back e^{tA} = F22ᵀ.
template <typename DerivedA, typename DerivedB>
GramianBlocks<typename DerivedA::Scalar> gramian_blocks(const Eigen::MatrixBase<DerivedA>& A,
                                                        const Eigen::MatrixBase<DerivedB>& B,
                                                        typename DerivedA::Scalar t) {
    using Scalar = typename DerivedA::Scalar;
    detail::require_square(A, "gramian");
    if (B.rows() != A.rows() || B.cols() == 0) {
        std::ostringstream os;
        os << "gramian: B is " << B.rows() << "x" << B.cols() << " but A is " << A.rows() << "x"
           << A.cols();
        throw DimensionError(os.str());
    }
    if (!(t >= Scalar(0))) throw std::domain_error("gramian: t must be >= 0");
    const Eigen::Index n = A.rows();
    if (t == Scalar(0)) return {MatrixX<Scalar>::Zero(n, n), MatrixX<Scalar>::Identity(n, n)};

    MatrixX<Scalar> block = MatrixX<Scalar>::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = -A;
    block.topRightCorner(n, n) = B * B.transpose();
    block.bottomRightCorner(n, n) = A.transpose();
    const MatrixX<Scalar> E = expm(block, t);
    const MatrixX<Scalar> transition = E.bottomRightCorner(n, n).transpose();
    MatrixX<Scalar> G = transition * E.topRightCorner(n, n);
    G = (Scalar(0.5) * (G + G.transpose())).eval();
    return {std::move(G), transition};
}

/// Controllability Gramian Φ_t = ∫₀ᵗ e^{(t-s)A} B Bᵀ e^{(t-s)Aᵀ} ds.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> gramian(const Eigen::MatrixBase<DerivedA>& A,
                                           const Eigen::MatrixBase<DerivedB>& B,
                                           typename DerivedA::Scalar t) {
    return gramian_blocks(A, B, t).gramian;
}

/// Relative symmetry defect ‖S − Sᵀ‖_F / ‖S‖_F (0 for the zero matrix).
template <typename Derived>
double asymmetry(const Eigen::MatrixBase<Derived>& S) {
    const double scale = static_cast<double>(S.norm());
    if (scale == 0.0) return 0.0;
    return static_cast<double>((S - S.transpose()).norm()) / scale;
}

/// True when S is symmetric to 1e-10 (relative Frobenius) and its eigenvalues are
/// ≥ −1e-10·(spectral norm).
template <typename Derived>
bool is_psd(const Eigen::MatrixBase<Derived>& S) {
    using Scalar = typename Derived::Scalar;
    if (S.rows() != S.cols()) return false;
    if (asymmetry(S) > 1e-10) return false;
    const MatrixX<Scalar> sym = Scalar(0.5) * (S + S.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> eig(sym, Eigen::EigenvaluesOnly);
    const auto& w = eig.eigenvalues();
    const double spectral = std::max(std::abs(double(w(0))), std::abs(double(w(w.size() - 1))));
    return double(w(0)) >= -1e-10 * spectral;
}

/// Symmetric square root of a PSD matrix. Eigenvalues in [−1e-8·‖S‖₂, 0) are clamped to zero;
/// anything more negative throws NotPsdError.
template <typename Derived>
MatrixX<typename Derived::Scalar> psd_sqrt(const Eigen::MatrixBase<Derived>& S) {
    using Scalar = typename Derived::Scalar;
    detail::require_square(S, "psd_sqrt");
    const MatrixX<Scalar> sym = Scalar(0.5) * (S + S.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> eig(sym);
    if (eig.info() != Eigen::Success) throw std::domain_error("psd_sqrt: eigensolver failed");
    VectorX<Scalar> w = eig.eigenvalues();
    const double spectral = std::max(std::abs(double(w(0))), std::abs(double(w(w.size() - 1))));
    if (double(w(0)) < -1e-8 * spectral) {
        std::ostringstream os;
        os << "psd_sqrt: matrix is not PSD (min eigenvalue " << double(w(0)) << ", spectral norm "
           << spectral << ")";
        throw NotPsdError(os.str(), double(w(0)));
    }
    w = w.cwiseMax(Scalar(0)).cwiseSqrt();
    const auto& Q = eig.eigenvectors();
    MatrixX<Scalar> R = Q * w.asDiagonal() * Q.transpose();
    return Scalar(0.5) * (R + R.transpose());
}

/// Cholesky factor of a strictly positive definite matrix, checked up front so that repeated
/// solves against the same matrix pay for the conditioning test once.
template <typename Scalar>
class SpdFactor {
public:
    template <typename Derived>
    explicit SpdFactor(const Eigen::MatrixBase<Derived>& S) {
        detail::require_square(S, "solve_spd");
        const MatrixX<Scalar> sym = Scalar(0.5) * (S + S.transpose());
        Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> eig(sym, Eigen::EigenvaluesOnly);
        const auto& w = eig.eigenvalues();
        min_eigenvalue_ = double(w(0));
        const double spectral =
            std::max(std::abs(double(w(0))), std::abs(double(w(w.size() - 1))));
        if (!(min_eigenvalue_ > 1e-12 * spectral) || spectral == 0.0) {
            std::ostringstream os;
            os << "solve_spd: matrix is singular to working precision (min eigenvalue "
               << min_eigenvalue_ << ", spectral norm " << spectral << ")";
            throw SingularMatrixError(os.str(), min_eigenvalue_);
        }
        llt_.compute(sym);
        if (llt_.info() != Eigen::Success)
            throw SingularMatrixError("solve_spd: Cholesky factorisation failed", min_eigenvalue_);
    }

    template <typename Rhs>
    MatrixX<Scalar> solve(const Eigen::MatrixBase<Rhs>& V) const {
        if (V.rows() != llt_.rows()) {
            std::ostringstream os;
            os << "solve_spd: right-hand side has " << V.rows() << " rows, expected "
               << llt_.rows();
            throw DimensionError(os.str());
        }
        return llt_.solve(V);
    }

    /// log det via the Cholesky diagonal.
    Scalar log_determinant() const {
        return Scalar(2) * llt_.matrixLLT().diagonal().array().log().sum();
    }

    const Eigen::LLT<MatrixX<Scalar>>& llt() const { return llt_; }
    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    Eigen::LLT<MatrixX<Scalar>> llt_;
    double min_eigenvalue_ = 0.0;
};

/// X with S·X = V for strictly positive definite S.
template <typename DerivedS, typename DerivedV>
MatrixX<typename DerivedS::Scalar> solve_spd(const Eigen::MatrixBase<DerivedS>& S,
                                             const Eigen::MatrixBase<DerivedV>& V) {
    return SpdFactor<typename DerivedS::Scalar>(S).solve(V);
}

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_LINALG_HPP
