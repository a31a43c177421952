#include "opalg/grid.hpp"

#include <cmath>

namespace opalg::fock {

GridRep::GridRep(int m, double omega_max, double hbar)
    : m_(m), omega_max_(omega_max), dw_(omega_max / m), hbar_(hbar) {
    if (m < 64) throw Error(Error::Kind::RejectedInput, "grid size must be >= 64");
    omega_ = Eigen::VectorXd(m);
    for (int j = 0; j < m; ++j) omega_(j) = (j + 1) * dw_;

    std::vector<Eigen::Triplet<Complex>> te, td, tc;
    for (int j = 0; j < m; ++j) te.emplace_back(j, j, Complex(hbar * omega_(j), 0.0));
    // D = -(i hbar / 2)(Omega dc + dc Omega) with the antisymmetric central
    // difference dc (Dirichlet beyond the ends)
    for (int j = 0; j < m; ++j) {
        if (j + 1 < m) {
            double w = (omega_(j) + omega_(j + 1)) / (4.0 * dw_);
            td.emplace_back(j, j + 1, Complex(0.0, -hbar * w));
            td.emplace_back(j + 1, j, Complex(0.0, hbar * w));
        }
    }
    // C = -hbar d omega d + hbar/(4 omega): conservative stencil plus the
    // one-photon weight term
    for (int j = 0; j < m; ++j) {
        double wp = omega_(j) + dw_ / 2.0, wm = omega_(j) - dw_ / 2.0;
        tc.emplace_back(j, j, Complex(hbar * (wp + wm) / (dw_ * dw_) + hbar / (4.0 * omega_(j)), 0.0));
        if (j + 1 < m) tc.emplace_back(j, j + 1, Complex(-hbar * wp / (dw_ * dw_), 0.0));
        if (j > 0) tc.emplace_back(j, j - 1, Complex(-hbar * wm / (dw_ * dw_), 0.0));
    }
    E_ = Sparse(m, m);
    D_ = Sparse(m, m);
    C_ = Sparse(m, m);
    E_.setFromTriplets(te.begin(), te.end());
    D_.setFromTriplets(td.begin(), td.end());
    C_.setFromTriplets(tc.begin(), tc.end());
}

Vector GridRep::gaussian_state(double center_frac, double width_frac) const {
    Vector psi(m_);
    const double w0 = center_frac * omega_max_, s = width_frac * omega_max_;
    for (int j = 0; j < m_; ++j)
        psi(j) = std::exp(-(omega_(j) - w0) * (omega_(j) - w0) / (2.0 * s * s));
    psi.normalize();
    return psi;
}

Eigen::VectorXd GridRep::interior_mask() const {
    Eigen::VectorXd mask(m_);
    for (int j = 0; j < m_; ++j)
        mask(j) = (omega_(j) > omega_max_ / 8.0 && omega_(j) < 7.0 * omega_max_ / 8.0) ? 1.0 : 0.0;
    return mask;
}

double GridRep::bracket_residual_on_state(const Sparse& a, const Sparse& b, const Sparse& expected,
                                          const Vector& psi) const {
    Vector lhs = (a * (b * psi) - b * (a * psi)) / Complex(0.0, hbar_);
    Vector res = lhs - expected * psi;
    Eigen::VectorXd mask = interior_mask();
    res = res.cwiseProduct(mask.cast<Complex>());
    double denom = (expected * psi).norm();
    return res.norm() / std::max(1.0, denom);
}

double GridRep::alpha2_expectation(const Vector& psi) const {
    Vector ce = C_ * (E_ * psi), ec = E_ * (C_ * psi);
    Vector dd = D_ * (D_ * psi);
    Vector a2 = 0.5 * (ce + ec) - dd + Complex(hbar_ * hbar_ / 4.0, 0.0) * psi;
    return (psi.adjoint() * a2).real()(0, 0);
}

ConvergenceResult grid_convergence_check(int base_m, int doublings, double omega_max, double hbar) {
    ConvergenceResult r;
    for (int j = 0; j <= doublings; ++j) {
        int m = base_m << j;
        GridRep g(m, omega_max, hbar);
        Vector psi = g.gaussian_state();
        r.sizes.push_back(m);
        r.residuals.push_back(g.bracket_residual_on_state(g.E(), g.D(), g.E(), psi));
    }
    double acc = 0.0;
    for (size_t j = 1; j < r.residuals.size(); ++j)
        acc += std::log2(r.residuals[j - 1] / r.residuals[j]);
    r.measured_order = acc / (r.residuals.size() - 1);
    return r;
}

}  // namespace opalg::fock
