#include "qfunc/random.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>

namespace qfunc {

double RandomSource::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::gaussian() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex RandomSource::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex{re, im};
}

Complex RandomSource::unimodular() {
    return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
}

CVector RandomSource::unit_state(int dim) {
    CVector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = complex_gaussian();
    return v / v.norm();
}

CMatrix RandomSource::unitary(int dim) {
    CMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = complex_gaussian();
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    // Fix column phases so the distribution does not depend on the QR
    // sign conventions.
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

}  // namespace qfunc
