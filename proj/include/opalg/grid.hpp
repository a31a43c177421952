#ifndef OPALG_GRID_HPP
#define OPALG_GRID_HPP

#include "opalg/fock.hpp"

namespace opalg::fock {

/// Frequency-grid cross-oracle.  E is exact multiplication by hbar*omega_j;
/// D and C are second-order central-difference realizations of the first- and
/// second-order frequency operators of the one-photon sector:
///   D = -(i hbar/2)(omega d + d omega),  C = -hbar d omega d + hbar/(4 omega).
/// Bracket relations hold to O(domega^2) on interior grid points.
class GridRep {
public:
    GridRep(int m, double omega_max, double hbar);

    int size() const { return m_; }
    double domega() const { return dw_; }
    double hbar() const { return hbar_; }
    const Eigen::VectorXd& omega() const { return omega_; }
    const Sparse& E() const { return E_; }
    const Sparse& D() const { return D_; }
    const Sparse& C() const { return C_; }

    /// Normalized gaussian profile centered in the grid interior.
    Vector gaussian_state(double center_frac = 0.5, double width_frac = 0.1) const;

    /// 0/1 mask of interior points (omega in [omega_max/8, 7 omega_max/8]).
    Eigen::VectorXd interior_mask() const;

    /// ||P ( [A,B]/(i hbar) - expected ) psi|| / ||expected psi|| on a state,
    /// interior-restricted.
    double bracket_residual_on_state(const Sparse& a, const Sparse& b, const Sparse& expected,
                                     const Vector& psi) const;

    /// <psi| alpha2 |psi> with alpha2 = C.E - D^2 + hbar^2/4.
    double alpha2_expectation(const Vector& psi) const;

private:
    int m_;
    double omega_max_, dw_, hbar_;
    Eigen::VectorXd omega_;
    Sparse E_, D_, C_;
};

struct ConvergenceResult {
    std::vector<int> sizes;
    std::vector<double> residuals;
    double measured_order = 0.0;  // mean log2 ratio under grid doubling
};

/// Convergence of the (E,D)-E residual on a smooth state under domega
/// halving; the measured order is the observable the suite asserts on.
ConvergenceResult grid_convergence_check(int base_m, int doublings, double omega_max, double hbar);

}  // namespace opalg::fock

#endif
