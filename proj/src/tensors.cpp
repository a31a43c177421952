#include "opalg/tensors.hpp"

namespace opalg {

int epsilon_lower(int mu, int nu, int rho, int sigma) {
    int idx[4] = {mu, nu, rho, sigma};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (idx[a] == idx[b]) return 0;
    int sign = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 3 - a; ++b)
            if (idx[b] > idx[b + 1]) {
                std::swap(idx[b], idx[b + 1]);
                sign = -sign;
            }
    return sign;
}

}  // namespace opalg
