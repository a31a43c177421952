#ifndef OPALG_FOCK_HPP
#define OPALG_FOCK_HPP

#include "opalg/algebras.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <random>

namespace opalg::fock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Sparse = Eigen::SparseMatrix<Complex>;

/// Deterministic stream of complex gaussians (Box-Muller over the raw
/// mt19937_64 output, so results are identical across platforms).  Per-item
/// streams are derived by counter, never by scheduling order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    static Rng for_item(std::uint64_t seed, std::uint64_t counter) {
        return Rng(seed ^ (0x9E3779B97F4A7C15ull * (counter + 1)));
    }
    double uniform();  // [0,1)
    std::uint64_t bits() { return gen_(); }
    double gaussian();
    Complex complex_gaussian() { return {gaussian(), gaussian()}; }

private:
    std::mt19937_64 gen_;
};

/// Truncated lowest-weight representation of the 2d conformal generators,
/// built from the ladder matrices
///   K0|n> = (n+k)|n>,  K+|n> = sqrt((n+1)(n+2k))|n+1>,  K-|n> = sqrt(n(n+2k-1))|n-1>
/// through E = hbar(K0 - K1), C = hbar(K0 + K1), D = hbar K2 with
/// K1 = (K+ + K-)/2 and K2 = (K+ - K-)/(2i).  E, D, C are hermitian and the
/// bracket relations hold exactly on the exactness windows.
class SingleParticleRep {
public:
    SingleParticleRep(int dim, const Rational& k, double hbar);

    int dim() const { return dim_; }
    double hbar() const { return hbar_; }
    const Rational& k() const { return k_; }

    const Matrix& E() const { return E_; }
    const Matrix& D() const { return D_; }
    const Matrix& C() const { return C_; }
    const Matrix& K0() const { return K0_; }

    /// Spectral inversion of E on its positive spectrum (the whole truncated
    /// block; the smallest eigenvalue is checked against eps_min).
    const Matrix& inverse_E() const { return Einv_; }
    double min_E_eigenvalue() const { return min_eig_; }

    /// Projector onto basis states with index < dim - margin.
    Matrix window(int margin) const;

private:
    int dim_;
    Rational k_;
    double hbar_;
    Matrix K0_, E_, D_, C_, Einv_;
    double min_eig_;
};

/// Maps a core-letter expression over conf2d onto the representation
/// (letters E, D, C, invE).  Linear in the expression; words multiply.
Matrix evaluate(const Expr& e, const AlgebraSpec& alg, const SingleParticleRep& rep);

/// Operator 2-norm via deterministic power iteration on M^dag M.
double op_norm(const Matrix& m, int iters = 120);
double sparse_op_norm(const Sparse& m, int iters = 120);

/// || [A,B]/(i hbar) - expected || restricted to window(margin), normalized by
/// max(1, ||A|| ||B||).
double commutator_residual(const SingleParticleRep& rep, const AlgebraSpec& alg, const Expr& a,
                           const Expr& b, const Expr& expected, int margin);

/// One photon-number block of the second-quantized representation.  Basis
/// states are occupation multisets of the single-particle modes.
struct FockBlock {
    int nphotons = 0;
    Eigen::Index dim = 0;
    std::vector<Word> basis;     // sorted mode multisets, colex order
    Sparse E, D, C;              // lifted generators
    Eigen::VectorXd window_max;  // per state: max occupied mode (-1 for vacuum)

    /// Diagonal 0/1 projector data for window(margin).
    Eigen::VectorXd window_mask(int base_dim, int margin) const;
};

/// Second quantization over a truncated bosonic Fock space: block-diagonal
/// lifts of the one-particle generators, the photon-number operator, and the
/// inter-block mode operators.  Photon-number invariance is exact by block
/// structure.
class FockRep {
public:
    FockRep(const SingleParticleRep& base, int nmax, std::uint64_t block_budget = 2000000);

    const SingleParticleRep& base() const { return base_; }
    int nmax() const { return nmax_; }
    const FockBlock& block(int n) const { return blocks_.at(n); }

    /// Creation operator for mode m, block n -> n+1 (a^dag_m), and its
    /// adjoint a_m, block n -> n-1.
    Sparse adag(int mode, int n) const;
    Sparse a(int mode, int n) const;

    /// Direct sums over all blocks (E/D/C and the photon number N).
    Sparse full(char generator) const;  // 'E', 'D', 'C'
    Sparse full_N() const;
    Eigen::Index full_dim() const;

    /// alpha2 on a block: (CE + EC)/2 - D^2 + hbar^2/4.
    Sparse alpha2_block(int n) const;

    /// Expectation values of alpha2 on random window states drawn from blocks
    /// 1..nmax (round robin), complex-gaussian coefficients, per-item seeds.
    /// Requesting the vacuum block is rejected (E vanishes there).
    std::vector<double> casimir_samples(int nstates, std::uint64_t seed) const;
    double casimir_on_block_state(int n, const Vector& state) const;

private:
    SingleParticleRep base_;
    int nmax_;
    std::vector<FockBlock> blocks_;
};

/// Sum of Kronecker products sum_i A_i (x) B_i acting on the tensor of the
/// two one-photon sectors.  Matrices stay in factored form; matvecs run as
/// A V B^T on matrix-shaped states.
struct KronOp {
    std::vector<std::pair<Matrix, Matrix>> terms;

    KronOp operator*(const KronOp& o) const;
    KronOp operator+(const KronOp& o) const;
    KronOp operator-(const KronOp& o) const;
    KronOp scaled(Complex c) const;
    KronOp adjoint() const;
    Matrix apply(const Matrix& v) const;  // v is dplus x dminus
};

/// Two-sector construction for the localisation observables.  Sectors are
/// one-photon Fock blocks; the massive window is the (1,1) photon block with
/// both sector spectra above eps_min, intersected with the index windows.
class TwoSectorRep {
public:
    TwoSectorRep(SingleParticleRep plus, SingleParticleRep minus, double eps_min);

    const SingleParticleRep& plus() const { return plus_; }
    const SingleParticleRep& minus() const { return minus_; }

    /// Evaluate a conf2d-pair expression (derived symbols allowed) on the
    /// massive (1,1) block in factored form.
    KronOp evaluate_pair(const Expr& e, const AlgebraSpec& pair_alg) const;

    /// Windowed residual ||P (op - expected) P|| / max(1, scale), window =
    /// index window(margin) in both sectors.
    double windowed_norm(const KronOp& op, int margin, double scale = 1.0) const;

    /// True when a photon-number block (n+, n-) lies in the massive window:
    /// localisation observables exist only where both sectors carry photons.
    bool block_massive(int nplus, int nminus) const { return nplus >= 1 && nminus >= 1; }

private:
    SingleParticleRep plus_, minus_;
    double eps_min_;
};

TwoSectorRep build_two_sector(const SingleParticleRep& plus, const SingleParticleRep& minus,
                              double eps_min);

/// Random inverse-free expressions over the conf2d generators, bounded degree
/// and term count, coefficients from a small exact set.  Deterministic in
/// (seed, counter).
Expr random_expr(const AlgebraSpec& alg, std::uint64_t seed, std::uint64_t counter,
                 int max_degree = 3, int max_terms = 4);

}  // namespace opalg::fock

#endif
