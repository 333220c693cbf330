#pragma once

#include "qfunc/types.hpp"

#include <cstdint>
#include <random>

namespace qfunc {

/// Seeded generator for test inputs and sampled verification states. Draws
/// are produced by explicit arithmetic on mt19937_64 output so that a fixed
/// seed yields the same sequence on every standard library.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal via Box-Muller.
    double gaussian();

    Complex complex_gaussian();

    /// Uniform point on the unit circle.
    Complex unimodular();

    CVector unit_state(int dim);

    /// Haar-like unitary from the QR factorization of a Gaussian matrix.
    CMatrix unitary(int dim);

private:
    std::mt19937_64 engine_;
};

}  // namespace qfunc
