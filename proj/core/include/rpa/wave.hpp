#pragma once

#include "rpa/complex.hpp"

#include <span>
#include <vector>

namespace rpa {

/// Breakpoints a₀ < a₁ < … < a_m in ℝ_F delimiting the intervals [a_{h−1}, a_h).
/// Endpoints may be infinitely large (±ω), so an "infinite interval" simply
/// has an infinitely large length.
class Grid {
  public:
    /// Needs at least two breakpoints sharing one filter; every length must be
    /// strictly positive. Throws IncomparableBreakpoints when a length has
    /// classes of both signs, NonIncreasingBreakpoints otherwise.
    explicit Grid(std::vector<RpaReal> breakpoints);

    /// Breakpoints 0, 1, …, intervals.
    static Grid unit(std::size_t intervals, const Filter &filter);

    std::span<const RpaReal> breakpoints() const noexcept { return breakpoints_; }
    std::span<const RpaReal> lengths() const noexcept { return lengths_; }
    std::size_t intervals() const noexcept { return lengths_.size(); }
    const Filter &filter() const noexcept { return breakpoints_.front().filter(); }

    friend bool operator==(const Grid &a, const Grid &b) { return a.breakpoints_ == b.breakpoints_; }

  private:
    std::vector<RpaReal> breakpoints_;
    std::vector<RpaReal> lengths_;
};

/// ψ = Σ_h γ_h·H_h with H_h the indicator of the h-th grid interval.
class StepWave {
  public:
    /// Throws InvalidArgument on a coefficient count mismatch and
    /// FilterMismatch when a coefficient lives over another filter.
    StepWave(Grid grid, std::vector<RpaComplex> coeffs);

    static StepWave zero(const Grid &grid);

    const Grid &grid() const noexcept { return grid_; }
    std::span<const RpaComplex> coeffs() const noexcept { return coeffs_; }
    const Filter &filter() const noexcept { return grid_.filter(); }
    bool is_zero() const;

    friend bool operator==(const StepWave &, const StepWave &) = default;

  private:
    Grid grid_;
    std::vector<RpaComplex> coeffs_;
};

inline StepWave make_wave(Grid grid, std::vector<RpaComplex> coeffs) {
    return {std::move(grid), std::move(coeffs)};
}

/// Both waves re-expressed on the merged breakpoint list. A wave is zero
/// outside its own grid.
struct Refinement {
    Grid grid;
    std::vector<RpaComplex> first;
    std::vector<RpaComplex> second;
};

/// Throws IncomparableBreakpoints when two breakpoints cannot be ordered.
Refinement refine_common(const StepWave &psi, const StepWave &chi);

StepWave operator+(const StepWave &psi, const StepWave &chi);
StepWave operator-(const StepWave &psi, const StepWave &chi);
StepWave operator*(const RpaComplex &c, const StepWave &psi);
StepWave pointwise_mul(const StepWave &psi, const StepWave &chi);

/// ∫ψ = Σ_h (a_h − a_{h−1})·γ_h.
RpaComplex integrate(const StepWave &psi);

/// ⟨ψ, χ⟩ = ∫ conj(ψ)·χ, antilinear in the first argument.
RpaComplex inner_product(const StepWave &psi, const StepWave &chi);

/// ⟨ψ,ψ⟩·⟨χ,χ⟩ − |⟨ψ,χ⟩|², the squared Schwarz gap.
RpaReal schwarz_gap(const StepWave &psi, const StepWave &chi);
bool schwarz_holds(const StepWave &psi, const StepWave &chi);

/// ‖ψ‖² = sup_h |γ_h|², taken class by class.
RpaReal norm_squared(const StepWave &psi);
RpaReal norm_approx(const StepWave &psi, unsigned order);

} // namespace rpa
