#pragma once

#include "rpa/wave.hpp"

#include <string>
#include <vector>

namespace rpa {

/// A linear operator on the waves of one fixed grid, acting on coefficient
/// vectors: (Aψ)_i = Σ_j a_ij·γ_j.
class GridOperator {
  public:
    /// `rows` must be square with one row per grid interval.
    GridOperator(Grid grid, std::vector<std::vector<RpaComplex>> rows);

    static GridOperator identity(const Grid &grid);
    static GridOperator zero(const Grid &grid);

    const Grid &grid() const noexcept { return grid_; }
    const Filter &filter() const noexcept { return grid_.filter(); }
    std::size_t dim() const noexcept { return dim_; }
    const RpaComplex &operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    GridOperator &operator+=(const GridOperator &rhs);
    GridOperator &operator-=(const GridOperator &rhs);
    friend GridOperator operator+(GridOperator a, const GridOperator &b) { return a += b; }
    friend GridOperator operator-(GridOperator a, const GridOperator &b) { return a -= b; }
    /// Composition: (A·B)ψ = A(Bψ).
    friend GridOperator operator*(const GridOperator &a, const GridOperator &b);
    friend GridOperator operator*(const RpaComplex &c, const GridOperator &a);
    friend bool operator==(const GridOperator &, const GridOperator &) = default;

    bool is_zero() const;

  private:
    GridOperator(Grid grid, std::vector<RpaComplex> entries, std::size_t dim);

    Grid grid_;
    std::vector<RpaComplex> entries_;
    std::size_t dim_ = 0;
};

/// Throws GridMismatch unless ψ lives on A's grid.
StepWave apply(const GridOperator &a, const StepWave &psi);

/// ⟨Aψ,χ⟩ = ⟨ψ,Aχ⟩ for all ψ, χ on the grid. With interval lengths w this is
/// the entrywise condition w_j·a_ji = w_i·conj(a_ij).
bool is_hermitian(const GridOperator &a);

/// ⟨ψ,Aψ⟩ / ⟨ψ,ψ⟩. Throws NotNormalizable when ⟨ψ,ψ⟩ has no representable inverse.
RpaComplex expectation(const GridOperator &a, const StepWave &psi);

/// The expectation is fixed by conjugation, i.e. lies in ℝ_F.
bool expectation_is_real(const GridOperator &a, const StepWave &psi);

/// ⟨A²⟩ − ⟨A⟩², exact. Requires Hermitian A (throws InvalidArgument otherwise).
RpaReal variance(const GridOperator &a, const StepWave &psi);
RpaReal uncertainty_approx(const GridOperator &a, const StepWave &psi, unsigned order);

/// A − ⟨A⟩_ψ·I.
GridOperator center(const GridOperator &a, const StepWave &psi);

GridOperator commutator(const GridOperator &a, const GridOperator &b);
RpaComplex trace(const GridOperator &a);
GridOperator power(const GridOperator &a, unsigned exponent);

struct HeisenbergVerdict {
    bool holds = false;
    /// 4·Var(A)·Var(B) − |⟨[A,B]⟩|², the squared uncertainty relation.
    RpaReal residual;
};

/// Requires Hermitian A and B.
HeisenbergVerdict heisenberg_holds(const GridOperator &a, const GridOperator &b,
                                   const StepWave &psi);

/// An explicit M with ‖Aψ‖ ≤ M‖ψ‖ for every ψ on the grid.
struct BoundCertificate {
    RpaReal bound;
    std::string method = "row-sum-l1";
};

/// Eventual maximum over rows of Σ_j |a_ij|₁.
BoundCertificate bound_certificate(const GridOperator &a);

/// bound ≥ 0 and ‖Aψ‖² ≤ bound²·‖ψ‖², decided exactly.
bool certifies(const RpaReal &bound, const GridOperator &a, const StepWave &psi);

struct BoundCombination {
    BoundCertificate sum;     // A + B
    BoundCertificate scaled;  // c·A
    BoundCertificate product; // A·B
    bool sum_ok = false;      // sum ≤ bound(A) + bound(B)
    bool scaled_ok = false;   // scaled ≤ |c|₁·bound(A)
    bool product_ok = false;  // product ≤ bound(A)·bound(B)
};

BoundCombination bound_combinators(const GridOperator &a, const GridOperator &b,
                                   const RpaComplex &c);

/// [A,B] − c·I.
GridOperator wintner_residual(const GridOperator &a, const GridOperator &b, const RpaComplex &c);

struct WintnerVerdict {
    GridOperator residual;
    RpaComplex trace;
    bool nonzero = false;
};

/// trace([A,B] − c·I) = −m·c, which is nonzero whenever c is, so the
/// residual never vanishes for c ≠ 0.
WintnerVerdict wintner_check(const GridOperator &a, const GridOperator &b, const RpaComplex &c);

/// (A·Bⁿ − Bⁿ·A) − Σ_{k<n} Bᵏ·[A,B]·B^{n−1−k}; zero for every A, B and n ≥ 1.
GridOperator power_commutator_residual(const GridOperator &a, const GridOperator &b, unsigned n);

} // namespace rpa
