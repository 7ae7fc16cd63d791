#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wdvvkit/rat.hpp"
#include "wdvvkit/report.hpp"

namespace wdvvkit {

/// Counts of degree-k rational plane curves through 3k-1 generic points;
/// values[i] is N_{i+1}.
struct GwTable {
    std::vector<BigInt> values;

    int order() const { return static_cast<int>(values.size()); }
    const BigInt& N(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

/// Truncated series Σ c_{k,m} x3^m e^{k x2} with exact rational coefficients.
/// K bounds the exponential degree k; products drop slices above K. No zero
/// coefficients are stored.
class QSeries {
public:
    explicit QSeries(int K);

    int truncation() const { return K_; }
    const std::map<std::pair<int, unsigned>, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_coeff(int k, unsigned m, const Rat& c);
    Rat coeff(int k, unsigned m) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;

    /// d/dx2: scales the k-slice by k.
    QSeries d2() const;
    /// d/dx3: power-rule derivative in x3.
    QSeries d3() const;

    /// Smallest k holding a nonzero coefficient, or 0 when the series is zero.
    int first_nonzero_slice() const;

private:
    int K_;
    std::map<std::pair<int, unsigned>, Rat> coeffs_;
};

/// N_k by the quadratic recursion
///   N_k = Σ_{p+q=k} N_p N_q p² q [q·binom(3k-4,3p-2) - p·binom(3k-4,3p-1)],
/// seeded with N_1 = 1. Throws Error when a computed N_k is not positive.
GwTable nk_recursion(int K);

/// The series Σ N_k/(3k-1)! x3^{3k-1} e^{k x2} for a complete table.
QSeries build_series(const GwTable& table);

/// Residual of the scalar constraint f223² = f333 + f222·f233, truncated at
/// the series' own order. Identically zero exactly when the table solves it.
QSeries pde_residual(const QSeries& f);

/// N_k recovered order by order from the scalar constraint alone: slice k of
/// the residual of the partial series determines c_k through the linear f333
/// term. Uses no binomial formula. Throws Error when a recovered N_k fails
/// to be a positive integer.
GwTable solve_from_pde(int K);

/// Certifies a table: integrality, positivity, and vanishing of the
/// constraint residual for its series.
Report certify_table(const GwTable& table);

} // namespace wdvvkit
