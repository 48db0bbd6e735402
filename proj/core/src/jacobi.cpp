#include "vergraph/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace vergraph {

std::vector<double> jacobi_eigenvalues(SymmetricMatrix a)
{
    const std::size_t n = a.dim();
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        double diag = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            diag += a(p, p) * a(p, p);
            for (std::size_t q = p + 1; q < n; ++q) {
                off += a(p, q) * a(p, q);
            }
        }
        if (off == 0.0 || off <= 1e-36 * diag) {
            break;
        }

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                // Rotation angle zeroing a(p, q); t is the smaller root of
                // t^2 + 2 theta t - 1 = 0.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a.set(p, q, 0.0);
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) {
                        continue;
                    }
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a.set(r, p, arp - s * (arq + tau * arp));
                    a.set(r, q, arq + s * (arp - tau * arq));
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = a(i, i);
    }
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

} // namespace vergraph
