#pragma once

#include "qfunc/types.hpp"

#include <utility>
#include <vector>

namespace qfunc {

/// Complex polynomial with coefficients stored in ascending degree.
/// Canonical form: no trailing zero coefficients (the zero polynomial is
/// represented by a single zero term).
class Polynomial {
public:
    Polynomial() : coeffs_{Complex{0.0}} {}
    explicit Polynomial(std::vector<Complex> coeffs);

    /// Monic product of (x - r) over the given roots.
    static Polynomial from_roots(const std::vector<Complex>& roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero(double tol = 0.0) const;
    bool is_monic(double tol = kDefaultTol) const;

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int i) const;

    Complex operator()(Complex x) const;
    CMatrix operator()(const CMatrix& m) const;

    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Quotient and remainder of num / den.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

    /// Human-readable form, highest degree first. Coefficient parts smaller
    /// than display_eps are dropped from the printout only.
    std::string str(double display_eps = 1e-9) const;

private:
    std::vector<Complex> coeffs_;
};

}  // namespace qfunc
