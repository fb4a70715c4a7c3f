#pragma once

#include <cstdint>
#include <random>

#include "framemult/frames.hpp"

namespace framemult {

/// Deterministic source of random test objects. All randomness in the
/// library and the CLI flows through this wrapper so that a fixed seed
/// reproduces every result bit-for-bit on a given platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double real(double lo = -1.0, double hi = 1.0);
    double gaussian();
    Complex complex_gaussian();

    CVector vector(std::size_t dim);
    CMatrix matrix(std::size_t rows, std::size_t cols);

    /// Unitary matrix via modified Gram-Schmidt of a Gaussian matrix.
    CMatrix unitary(std::size_t n);

    /// Invertible matrix (resampled until the condition is moderate).
    CMatrix invertible(std::size_t n, double max_condition = 1e4);

    /// N Gaussian vectors in C^d; spanning with probability 1 when N >= d.
    FrameSeq frame(std::size_t dim, std::size_t count);

    /// Complex values with modulus in [lo_abs, hi_abs] and uniform phase.
    std::vector<Complex> semi_normalized_symbol(std::size_t count, double lo_abs = 0.5,
                                                double hi_abs = 2.0);

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace framemult
