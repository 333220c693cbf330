#include "qfunc/polynomial.hpp"

#include <cmath>
#include <sstream>

namespace qfunc {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        coeffs_.push_back(Complex{0.0});
    }
    while (coeffs_.size() > 1 && coeffs_.back() == Complex{0.0}) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex{1.0}};
    for (Complex r : roots) {
        // multiply by (x - r)
        std::vector<Complex> next(c.size() + 1, Complex{0.0});
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

bool Polynomial::is_zero(double tol) const {
    for (Complex c : coeffs_) {
        if (std::abs(c) > tol) return false;
    }
    return true;
}

bool Polynomial::is_monic(double tol) const {
    return std::abs(coeffs_.back() - Complex{1.0}) <= tol;
}

Complex Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return Complex{0.0};
    return coeffs_[static_cast<std::size_t>(i)];
}

Complex Polynomial::operator()(Complex x) const {
    Complex acc{0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

CMatrix Polynomial::operator()(const CMatrix& m) const {
    if (m.rows() != m.cols()) {
        throw DimensionError("polynomial evaluation requires a square matrix");
    }
    const auto n = m.rows();
    CMatrix acc = CMatrix::Zero(n, n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * m + *it * CMatrix::Identity(n, n);
    }
    return acc;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    std::vector<Complex> out(coeffs_.size() + rhs.coeffs_.size() - 1, Complex{0.0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Complex> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex{0.0});
    for (std::size_t i = 0; i < out.size(); ++i) {
        Complex a = i < coeffs_.size() ? coeffs_[i] : Complex{0.0};
        Complex b = i < rhs.coeffs_.size() ? rhs.coeffs_[i] : Complex{0.0};
        out[i] = a - b;
    }
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<Complex> rem = num.coeffs_;
    const int dn = num.degree();
    const int dd = den.degree();
    if (dn < dd) {
        return {Polynomial(), num};
    }
    std::vector<Complex> quot(static_cast<std::size_t>(dn - dd) + 1, Complex{0.0});
    const Complex lead = den.coeffs_.back();
    for (int k = dn - dd; k >= 0; --k) {
        Complex q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= q * den.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(std::max(dd, 1)));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

// Clean display of one coefficient: drops parts below eps, prints reals
// without a parenthesized pair.
std::string coeff_str(Complex z, double eps) {
    return format_complex(z, eps);
}

}  // namespace

std::string format_complex(Complex z, double display_eps) {
    double re = z.real();
    double im = z.imag();
    if (std::abs(re) < display_eps) re = 0.0;
    if (std::abs(im) < display_eps) im = 0.0;

    auto num = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };

    if (im == 0.0) return num(re);
    if (re == 0.0) {
        if (im == 1.0) return "i";
        if (im == -1.0) return "-i";
        return num(im) + "i";
    }
    std::ostringstream os;
    os << "(" << num(re) << (im > 0 ? "+" : "-");
    double ai = std::abs(im);
    if (ai != 1.0) os << num(ai);
    os << "i)";
    return os.str();
}

std::string Polynomial::str(double display_eps) const {
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        Complex c = coeffs_[static_cast<std::size_t>(d)];
        if (std::abs(c.real()) < display_eps && std::abs(c.imag()) < display_eps && degree() > 0) {
            continue;
        }
        std::string cs = coeff_str(c, display_eps);
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find('(') == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            os << (negated ? "-" : "");
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        if (d == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << " ";
            os << "x";
            if (d > 1) os << "^" << d;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace qfunc
