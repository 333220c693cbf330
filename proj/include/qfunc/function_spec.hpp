#pragma once

#include "qfunc/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qfunc {

/// The m roots of x^m - tau, ordered as rho * omega^k for k = 0..m-1 with
/// rho the principal m-th root of tau and omega = exp(2 pi i / m).
std::vector<Complex> binomial_roots(int m, Complex tau);

/// A scalar function, given either by its sample values on the roots of
/// x^m - tau or by a named closed form. Evaluation off the sample nodes
/// snaps to the nearest node; a point farther than kNodeTol from every
/// node is outside the domain.
class FunctionSpec {
public:
    enum class Kind { Samples, Frft, Power, Identity, Conjugate };

    static FunctionSpec samples(int m, Complex tau, std::vector<Complex> values);
    /// Fractional Fourier transform angle x: the function on the 4th roots
    /// of unity realized by the closed-form combination coefficients.
    static FunctionSpec frft(double x);
    /// Principal-branch power lambda^s.
    static FunctionSpec power(double s);
    static FunctionSpec identity();
    static FunctionSpec conjugate();

    Kind kind() const { return kind_; }
    std::optional<int> sample_count() const;
    std::optional<Complex> sample_tau() const;
    const std::vector<Complex>& sample_values() const { return samples_; }
    double parameter() const { return param_; }

    Complex evaluate(Complex lambda) const;
    std::string describe() const;

private:
    FunctionSpec(Kind kind, double param) : kind_(kind), param_(param) {}

    Kind kind_;
    double param_ = 0.0;  // frft angle or power exponent
    int m_ = 0;
    Complex tau_{1.0};
    std::vector<Complex> samples_;
};

}  // namespace qfunc
