#include "qfunc/function_spec.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qfunc {

std::vector<Complex> binomial_roots(int m, Complex tau) {
    if (m < 1) {
        throw PreconditionError("binomial_roots: m must be >= 1");
    }
    if (std::abs(std::abs(tau) - 1.0) > kUnimodularTol) {
        throw PreconditionError("binomial_roots: |tau| must be 1");
    }
    const double base = std::arg(tau);
    std::vector<Complex> roots(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double theta = (base + 2.0 * std::numbers::pi * k) / m;
        roots[static_cast<std::size_t>(k)] = Complex{std::cos(theta), std::sin(theta)};
    }
    return roots;
}

FunctionSpec FunctionSpec::samples(int m, Complex tau, std::vector<Complex> values) {
    if (m < 1) {
        throw PreconditionError("FunctionSpec::samples: m must be >= 1");
    }
    if (static_cast<int>(values.size()) != m) {
        throw DimensionError("FunctionSpec::samples: expected exactly m sample values");
    }
    FunctionSpec f(Kind::Samples, 0.0);
    f.m_ = m;
    f.tau_ = tau;
    f.samples_ = std::move(values);
    return f;
}

FunctionSpec FunctionSpec::frft(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("FunctionSpec::frft: angle must be finite");
    }
    return FunctionSpec(Kind::Frft, x);
}

FunctionSpec FunctionSpec::power(double s) {
    if (!std::isfinite(s)) {
        throw DomainError("FunctionSpec::power: exponent must be finite");
    }
    return FunctionSpec(Kind::Power, s);
}

FunctionSpec FunctionSpec::identity() { return FunctionSpec(Kind::Identity, 0.0); }

FunctionSpec FunctionSpec::conjugate() { return FunctionSpec(Kind::Conjugate, 0.0); }

std::optional<int> FunctionSpec::sample_count() const {
    if (kind_ == Kind::Samples) return m_;
    if (kind_ == Kind::Frft) return 4;
    return std::nullopt;
}

std::optional<Complex> FunctionSpec::sample_tau() const {
    if (kind_ == Kind::Samples) return tau_;
    if (kind_ == Kind::Frft) return Complex{1.0};
    return std::nullopt;
}

namespace {

int nearest_node(Complex lambda, const std::vector<Complex>& nodes) {
    int best = 0;
    double best_dist = std::abs(lambda - nodes[0]);
    for (int k = 1; k < static_cast<int>(nodes.size()); ++k) {
        double d = std::abs(lambda - nodes[static_cast<std::size_t>(k)]);
        if (d < best_dist) {
            best = k;
            best_dist = d;
        }
    }
    if (best_dist > kNodeTol) {
        std::ostringstream os;
        os << "function undefined at " << format_complex(lambda)
           << " (nearest node " << format_complex(nodes[static_cast<std::size_t>(best)])
           << " is " << best_dist << " away)";
        throw DomainError(os.str());
    }
    return best;
}

}  // namespace

Complex FunctionSpec::evaluate(Complex lambda) const {
    switch (kind_) {
        case Kind::Identity:
            return lambda;
        case Kind::Conjugate:
            return std::conj(lambda);
        case Kind::Power:
            return std::pow(lambda, Complex{param_});
        case Kind::Frft: {
            // Eigenvalue-to-phase map solved from the interpolation problem on
            // the 4th roots of unity; used for reference evaluation only.
            static const std::vector<Complex> nodes{
                Complex{1.0}, Complex{0.0, 1.0}, Complex{-1.0}, Complex{0.0, -1.0}};
            const double x = param_;
            const Complex phases[4] = {
                Complex{1.0},
                std::polar(1.0, x),
                std::polar(1.0, 2.0 * x),
                std::polar(1.0, -x),
            };
            return phases[nearest_node(lambda, nodes)];
        }
        case Kind::Samples: {
            const auto nodes = binomial_roots(m_, tau_);
            return samples_[static_cast<std::size_t>(nearest_node(lambda, nodes))];
        }
    }
    throw Error("FunctionSpec: unreachable kind");
}

std::string FunctionSpec::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Samples:
            os << "samples(m=" << m_ << ", tau=" << format_complex(tau_) << ")";
            break;
        case Kind::Frft:
            os << "frft(x=" << param_ << ")";
            break;
        case Kind::Power:
            os << "power(s=" << param_ << ")";
            break;
        case Kind::Identity:
            os << "identity";
            break;
        case Kind::Conjugate:
            os << "conjugate";
            break;
    }
    return os.str();
}

}  // namespace qfunc
