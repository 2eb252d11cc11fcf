#pragma once

#include "rpa/grid_operator.hpp"

#include <cstdint>
#include <random>

namespace rpa {

/// Shape of randomly sampled values.
struct SampleOptions {
    /// Integer exponents keep point values rational (needed under principal
    /// filters and for pointwise evaluation).
    bool integral_exponents = false;
    Natural max_modulus = 3;
    int max_terms = 3;
    int max_numerator = 6;
    int max_denominator = 4;
    int max_exponent = 2;
};

/// Seeded generator of algebra elements. The same seed and call sequence
/// always yields the same values.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed, SampleOptions options = {});

    std::mt19937_64 &engine() noexcept { return engine_; }
    const SampleOptions &options() const noexcept { return options_; }

    long integer(long lo, long hi);
    bool coin() { return integer(0, 1) == 1; }

    Rational rational();
    Rational nonzero_rational();
    Rational exponent();
    Puiseux poly();
    Germ germ();
    /// Nonzero, all coefficients positive.
    Puiseux positive_poly();
    /// One monomial c·n^e per class with c > 0.
    Germ positive_monomial_germ();

    RpaReal real(const Filter &filter);
    RpaReal strictly_positive(const Filter &filter);
    RpaComplex complex(const Filter &filter);
    RpaComplex nonzero_complex(const Filter &filter);

    /// Random start, strictly positive random lengths.
    Grid grid(std::size_t intervals, const Filter &filter);
    /// Breakpoints with a single class polynomial each. Such points are
    /// totally ordered, so any two aligned grids can be refined together.
    Grid aligned_grid(std::size_t intervals, const Filter &filter);
    /// Lengths d_h·L for rational d_h > 0 and one positive monomial germ L.
    Grid monomial_grid(std::size_t intervals, const Filter &filter);

    StepWave wave(const Grid &grid);
    /// Coefficients c_h·G for complex rationals c_h (not all zero) and one
    /// positive monomial germ G. On a monomial grid ⟨ψ,ψ⟩ is then a monomial
    /// in every class, hence invertible.
    StepWave normalizable_wave(const Grid &grid);

    GridOperator op(const Grid &grid);
    /// Satisfies w_j·a_ji = w_i·conj(a_ij) by construction.
    GridOperator hermitian(const Grid &grid);

  private:
    std::mt19937_64 engine_;
    SampleOptions options_;
};

} // namespace rpa
