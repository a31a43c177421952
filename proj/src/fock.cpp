#include "opalg/fock.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>

namespace opalg::fock {

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
}

double Rng::gaussian() {
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

SingleParticleRep::SingleParticleRep(int dim, const Rational& k, double hbar)
    : dim_(dim), k_(k), hbar_(hbar) {
    if (dim < 8) throw Error(Error::Kind::RejectedInput, "representation dimension must be >= 8");
    if (k <= 0) throw Error(Error::Kind::RejectedInput, "lowest weight k must be positive");
    const double kd = static_cast<double>(k);
    Matrix Kp = Matrix::Zero(dim, dim), Km = Matrix::Zero(dim, dim);
    K0_ = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) K0_(n, n) = n + kd;
    for (int n = 0; n + 1 < dim; ++n) Kp(n + 1, n) = std::sqrt((n + 1.0) * (n + 2.0 * kd));
    for (int n = 1; n < dim; ++n) Km(n - 1, n) = std::sqrt(n * (n + 2.0 * kd - 1.0));
    Matrix K1 = (Kp + Km) / 2.0;
    Matrix K2 = (Kp - Km) / Complex(0.0, 2.0);
    E_ = hbar * (K0_ - K1);
    C_ = hbar * (K0_ + K1);
    D_ = hbar * K2;

    Eigen::SelfAdjointEigenSolver<Matrix> es(E_);
    min_eig_ = es.eigenvalues().minCoeff();
    Einv_ = E_.inverse();
    Einv_ = ((Einv_ + Einv_.adjoint()) / 2.0).eval();  // hermitian by construction
}

Matrix SingleParticleRep::window(int margin) const {
    Matrix p = Matrix::Zero(dim_, dim_);
    for (int j = 0; j < dim_ - margin; ++j) p(j, j) = 1.0;
    return p;
}

Matrix evaluate(const Expr& e, const AlgebraSpec& alg, const SingleParticleRep& rep) {
    const int d = rep.dim();
    Matrix out = Matrix::Zero(d, d);
    for (const auto& [w, s] : e.terms()) {
        Matrix prod = Matrix::Identity(d, d);
        for (letter_t l : w) {
            const std::string& name = alg.info(l).name;
            if (name == "E")
                prod = (prod * rep.E()).eval();
            else if (name == "D")
                prod = (prod * rep.D()).eval();
            else if (name == "C")
                prod = (prod * rep.C()).eval();
            else if (name == "invE")
                prod = (prod * rep.inverse_E()).eval();
            else
                throw Error(Error::Kind::RejectedInput,
                            "letter '" + name + "' has no matrix in this representation");
        }
        out += s.to_complex(rep.hbar()) * prod;
    }
    return out;
}

double op_norm(const Matrix& m, int iters) {
    if (m.rows() == 0) return 0.0;
    Rng rng(0xB5297A4D0F1E2Dull);
    Vector v(m.cols());
    for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = rng.complex_gaussian();
    v.normalize();
    double norm = 0.0;
    for (int it = 0; it < iters; ++it) {
        Vector w = m.adjoint() * (m * v);
        double n = w.norm();
        if (n == 0.0) return 0.0;
        v = w / n;
        norm = std::sqrt(n);
    }
    return norm;
}

double sparse_op_norm(const Sparse& m, int iters) {
    if (m.rows() == 0) return 0.0;
    Rng rng(0xB5297A4D0F1E2Dull);
    Vector v(m.cols());
    for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = rng.complex_gaussian();
    v.normalize();
    double norm = 0.0;
    for (int it = 0; it < iters; ++it) {
        Vector w = m.adjoint() * (m * v).eval();
        double n = w.norm();
        if (n == 0.0) return 0.0;
        v = w / n;
        norm = std::sqrt(n);
    }
    return norm;
}

double commutator_residual(const SingleParticleRep& rep, const AlgebraSpec& alg, const Expr& a,
                           const Expr& b, const Expr& expected, int margin) {
    Matrix A = evaluate(a, alg, rep), B = evaluate(b, alg, rep);
    Matrix X = evaluate(expected, alg, rep);
    Matrix res = (A * B - B * A) / Complex(0.0, rep.hbar()) - X;
    Matrix P = rep.window(margin);
    double scale = std::max(1.0, op_norm(A) * op_norm(B));
    return op_norm(P * res * P) / scale;
}

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t v = 1;
    for (std::uint64_t j = 0; j < r; ++j) v = v * (n - j) / (j + 1);
    return v;
}

void enumerate_multisets(int d, int n, Word& cur, std::vector<Word>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    int start = cur.empty() ? 0 : cur.back();
    for (int m = start; m < d; ++m) {
        cur.push_back(static_cast<letter_t>(m));
        enumerate_multisets(d, n, cur, out);
        cur.pop_back();
    }
}

/// dGamma(A) on the occupation basis of one block, for banded A.
Sparse lift_operator(const Matrix& A, const std::vector<Word>& basis,
                     const std::map<Word, Eigen::Index>& index, int d) {
    std::vector<Eigen::Triplet<Complex>> trip;
    for (Eigen::Index col = 0; col < static_cast<Eigen::Index>(basis.size()); ++col) {
        const Word& w = basis[col];
        // occupation counts of the (sorted) multiset
        for (size_t p = 0; p < w.size(); ++p) {
            if (p > 0 && w[p] == w[p - 1]) continue;  // one transfer per distinct mode
            int j = w[p];
            int mj = 0;
            for (letter_t m : w) mj += (m == j);
            for (int i = std::max(0, j - 2); i <= std::min(d - 1, j + 2); ++i) {
                Complex aij = A(i, j);
                if (aij == Complex(0.0, 0.0)) continue;
                Word target = w;
                target.erase(target.find(static_cast<letter_t>(j)), 1);
                int mi = 0;
                for (letter_t m : target) mi += (m == i);
                target.insert(std::upper_bound(target.begin(), target.end(),
                                               static_cast<letter_t>(i)),
                              static_cast<letter_t>(i));
                double amp = std::sqrt(static_cast<double>(mj)) * std::sqrt(mi + 1.0);
                trip.emplace_back(index.at(target), col, aij * amp);
            }
        }
    }
    Sparse m(basis.size(), basis.size());
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

}  // namespace

Eigen::VectorXd FockBlock::window_mask(int base_dim, int margin) const {
    Eigen::VectorXd mask(dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        mask(j) = window_max(j) < base_dim - margin ? 1.0 : 0.0;
    return mask;
}

FockRep::FockRep(const SingleParticleRep& base, int nmax, std::uint64_t block_budget)
    : base_(base), nmax_(nmax) {
    if (nmax < 0) throw Error(Error::Kind::RejectedInput, "nmax must be >= 0");
    const int d = base.dim();
    std::uint64_t total = 0;
    for (int n = 0; n <= nmax; ++n) total += binom(d + n - 1, n);
    if (total > block_budget)
        throw Error(Error::Kind::ResourceGuard,
                    "Fock space size " + std::to_string(total) + " exceeds the configured budget " +
                        std::to_string(block_budget));
    for (int n = 0; n <= nmax; ++n) {
        FockBlock b;
        b.nphotons = n;
        Word cur;
        enumerate_multisets(d, n, cur, b.basis);
        b.dim = static_cast<Eigen::Index>(b.basis.size());
        std::map<Word, Eigen::Index> index;
        for (Eigen::Index j = 0; j < b.dim; ++j) index[b.basis[j]] = j;
        b.E = lift_operator(base.E(), b.basis, index, d);
        b.D = lift_operator(base.D(), b.basis, index, d);
        b.C = lift_operator(base.C(), b.basis, index, d);
        b.window_max = Eigen::VectorXd(b.dim);
        for (Eigen::Index j = 0; j < b.dim; ++j)
            b.window_max(j) = b.basis[j].empty() ? -1.0 : static_cast<double>(b.basis[j].back());
        blocks_.push_back(std::move(b));
    }
}

Sparse FockRep::adag(int mode, int n) const {
    const FockBlock& from = block(n);
    const FockBlock& to = block(n + 1);
    std::map<Word, Eigen::Index> index;
    for (Eigen::Index j = 0; j < to.dim; ++j) index[to.basis[j]] = j;
    std::vector<Eigen::Triplet<Complex>> trip;
    for (Eigen::Index col = 0; col < from.dim; ++col) {
        Word target = from.basis[col];
        int m = 0;
        for (letter_t x : target) m += (x == mode);
        target.insert(std::upper_bound(target.begin(), target.end(), static_cast<letter_t>(mode)),
                      static_cast<letter_t>(mode));
        trip.emplace_back(index.at(target), col, std::sqrt(m + 1.0));
    }
    Sparse r(to.dim, from.dim);
    r.setFromTriplets(trip.begin(), trip.end());
    return r;
}

Sparse FockRep::a(int mode, int n) const { return adag(mode, n - 1).adjoint(); }

Eigen::Index FockRep::full_dim() const {
    Eigen::Index d = 0;
    for (const auto& b : blocks_) d += b.dim;
    return d;
}

Sparse FockRep::full(char generator) const {
    std::vector<Eigen::Triplet<Complex>> trip;
    Eigen::Index off = 0;
    for (const auto& b : blocks_) {
        const Sparse& m = generator == 'E' ? b.E : generator == 'D' ? b.D : b.C;
        for (int kk = 0; kk < m.outerSize(); ++kk)
            for (Sparse::InnerIterator it(m, kk); it; ++it)
                trip.emplace_back(off + it.row(), off + it.col(), it.value());
        off += b.dim;
    }
    Sparse r(full_dim(), full_dim());
    r.setFromTriplets(trip.begin(), trip.end());
    return r;
}

Sparse FockRep::full_N() const {
    std::vector<Eigen::Triplet<Complex>> trip;
    Eigen::Index off = 0;
    for (const auto& b : blocks_) {
        for (Eigen::Index j = 0; j < b.dim; ++j)
            trip.emplace_back(off + j, off + j, Complex(b.nphotons, 0.0));
        off += b.dim;
    }
    Sparse r(full_dim(), full_dim());
    r.setFromTriplets(trip.begin(), trip.end());
    return r;
}

Sparse FockRep::alpha2_block(int n) const {
    const FockBlock& b = block(n);
    const double h = base_.hbar();
    Sparse id(b.dim, b.dim);
    id.setIdentity();
    Sparse r = Sparse((b.C * b.E + b.E * b.C) * 0.5) - Sparse(b.D * b.D) +
               Sparse(id * Complex(h * h / 4.0, 0.0));
    return r;
}

double FockRep::casimir_on_block_state(int n, const Vector& state) const {
    if (n < 1)
        throw Error(Error::Kind::RejectedInput,
                    "alpha2 samples need at least one photon (E vanishes on the vacuum)");
    Sparse a2 = alpha2_block(n);
    return (state.adjoint() * (a2 * state)).real()(0, 0);
}

std::vector<double> FockRep::casimir_samples(int nstates, std::uint64_t seed) const {
    if (nmax_ < 1)
        throw Error(Error::Kind::RejectedInput, "alpha2 samples need at least one photon block");
    std::vector<double> vals;
    vals.reserve(nstates);
    std::vector<Sparse> a2;
    std::vector<Eigen::VectorXd> masks;
    for (int n = 1; n <= nmax_; ++n) {
        a2.push_back(alpha2_block(n));
        masks.push_back(block(n).window_mask(base_.dim(), 2));
    }
    for (int s = 0; s < nstates; ++s) {
        int n = 1 + (s % nmax_);
        const FockBlock& b = block(n);
        Rng rng = Rng::for_item(seed, s);
        Vector v(b.dim);
        for (Eigen::Index j = 0; j < b.dim; ++j) v(j) = rng.complex_gaussian();
        v = v.cwiseProduct(masks[n - 1].cast<Complex>());
        v.normalize();
        vals.push_back((v.adjoint() * (a2[n - 1] * v)).real()(0, 0));
    }
    return vals;
}

KronOp KronOp::operator*(const KronOp& o) const {
    KronOp r;
    for (const auto& [a1, b1] : terms)
        for (const auto& [a2, b2] : o.terms) r.terms.emplace_back(a1 * a2, b1 * b2);
    return r;
}

KronOp KronOp::operator+(const KronOp& o) const {
    KronOp r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
}

KronOp KronOp::operator-(const KronOp& o) const { return *this + o.scaled(Complex(-1.0, 0.0)); }

KronOp KronOp::scaled(Complex c) const {
    KronOp r = *this;
    for (auto& [a, b] : r.terms) a = (a * c).eval();
    return r;
}

KronOp KronOp::adjoint() const {
    KronOp r;
    for (const auto& [a, b] : terms) r.terms.emplace_back(a.adjoint(), b.adjoint());
    return r;
}

Matrix KronOp::apply(const Matrix& v) const {
    Matrix out = Matrix::Zero(v.rows(), v.cols());
    for (const auto& [a, b] : terms) out += a * v * b.transpose();
    return out;
}

TwoSectorRep::TwoSectorRep(SingleParticleRep plus, SingleParticleRep minus, double eps_min)
    : plus_(std::move(plus)), minus_(std::move(minus)), eps_min_(eps_min) {
    if (eps_min <= 0) throw Error(Error::Kind::RejectedInput, "eps_min must be positive");
    if (plus_.min_E_eigenvalue() <= eps_min || minus_.min_E_eigenvalue() <= eps_min)
        throw Error(Error::Kind::RejectedInput,
                    "empty massive window: sector energies do not exceed eps_min = " +
                        std::to_string(eps_min) + " (min eigenvalues " +
                        std::to_string(plus_.min_E_eigenvalue()) + ", " +
                        std::to_string(minus_.min_E_eigenvalue()) + ")");
}

TwoSectorRep build_two_sector(const SingleParticleRep& plus, const SingleParticleRep& minus,
                              double eps_min) {
    return TwoSectorRep(plus, minus, eps_min);
}

KronOp TwoSectorRep::evaluate_pair(const Expr& e, const AlgebraSpec& pair_alg) const {
    Expr core = expand_derived(e, pair_alg);
    const int dp = plus_.dim(), dm = minus_.dim();
    auto letter_term = [&](letter_t l) -> std::pair<Matrix, Matrix> {
        const std::string& name = pair_alg.info(l).name;
        const bool is_plus = name.back() == 'p';
        const SingleParticleRep& rep = is_plus ? plus_ : minus_;
        std::string base = name.substr(0, name.size() - 1);
        Matrix m;
        if (base == "E")
            m = rep.E();
        else if (base == "D")
            m = rep.D();
        else if (base == "C")
            m = rep.C();
        else if (base == "invE")
            m = rep.inverse_E();
        else
            throw Error(Error::Kind::RejectedInput,
                        "letter '" + name + "' has no matrix in the two-sector representation");
        if (is_plus) return {m, Matrix::Identity(dm, dm)};
        return {Matrix::Identity(dp, dp), m};
    };
    KronOp out;
    const double h = plus_.hbar();
    for (const auto& [w, s] : core.terms()) {
        std::pair<Matrix, Matrix> acc{Matrix::Identity(dp, dp), Matrix::Identity(dm, dm)};
        for (letter_t l : w) {
            auto t = letter_term(l);
            acc.first = (acc.first * t.first).eval();
            acc.second = (acc.second * t.second).eval();
        }
        acc.first *= s.to_complex(h);
        out.terms.push_back(std::move(acc));
    }
    return out;
}

double TwoSectorRep::windowed_norm(const KronOp& op, int margin, double scale) const {
    Matrix pw = plus_.window(margin), mw = minus_.window(margin);
    KronOp proj;
    for (const auto& [a, b] : op.terms) proj.terms.emplace_back(pw * a * pw, mw * b * mw);
    // power iteration on M^dag M with matrix-shaped states
    KronOp adj = proj.adjoint();
    Rng rng(0xC0FFEE1234ull);
    Matrix v(plus_.dim(), minus_.dim());
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j) v(i, j) = rng.complex_gaussian();
    v /= v.norm();
    double norm = 0.0;
    for (int it = 0; it < 120; ++it) {
        Matrix w = adj.apply(proj.apply(v));
        double n = w.norm();
        if (n == 0.0) return 0.0;
        v = w / n;
        norm = std::sqrt(n);
    }
    return norm / std::max(1.0, scale);
}

Expr random_expr(const AlgebraSpec& alg, std::uint64_t seed, std::uint64_t counter, int max_degree,
                 int max_terms) {
    Rng rng = Rng::for_item(seed, counter);
    const letter_t gens[3] = {alg.letter("E"), alg.letter("D"), alg.letter("C")};
    static const Scalar coeffs[8] = {
        Scalar::integer(1),        Scalar::integer(-1),       Scalar::integer(2),
        Scalar::integer(-2),       Scalar::rational(1, 2),    Scalar::rational(-1, 2),
        Scalar::i(),               -Scalar::i()};
    Expr e;
    int nterms = 1 + static_cast<int>(rng.bits() % max_terms);
    for (int t = 0; t < nterms; ++t) {
        int len = static_cast<int>(rng.bits() % (max_degree + 1));
        Word w;
        for (int j = 0; j < len; ++j) w.push_back(gens[rng.bits() % 3]);
        e.add_term(w, coeffs[rng.bits() % 8]);
    }
    return e;
}

}  // namespace opalg::fock
