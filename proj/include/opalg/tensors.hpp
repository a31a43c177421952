#ifndef OPALG_TENSORS_HPP
#define OPALG_TENSORS_HPP

#include "opalg/scalar.hpp"

namespace opalg {

/// Minkowski tensor, signature (+,-,-,-); diagonal, so a single index form.
inline int eta(int mu, int nu) {
    if (mu != nu) return 0;
    return mu == 0 ? 1 : -1;
}

/// Totally antisymmetric rank-4 tensor with epsilon_{0123} = +1 (all indices
/// down).  Returns the signature of (mu,nu,rho,sigma) as a permutation of
/// (0,1,2,3), or 0 when an index repeats.
int epsilon_lower(int mu, int nu, int rho, int sigma);

/// All-upper components; raising all four indices with eta flips the sign
/// (det eta = -1), so epsilon^{0123} = -1.
inline int epsilon_upper(int mu, int nu, int rho, int sigma) {
    return -epsilon_lower(mu, nu, rho, sigma);
}

}  // namespace opalg

#endif
