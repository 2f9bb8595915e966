#ifndef RNAGROWTH_COUNTING_HPP
#define RNAGROWTH_COUNTING_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rnagrowth/models.hpp"
#include "rnagrowth/power_series.hpp"

namespace rnagrowth {

inline constexpr int kDefaultOracleCap = 14;

// Exact counts indexed by structure size n.
struct CountSequence {
    std::string model;
    int n_max = 0;
    std::vector<mpz_class> values;  // values[n], n = 0..n_max
};

// Lambda-structure recurrence: ones up to n = lambda, then
// S_n = S_{n-1} + sum_{j=0}^{n-1-lambda} S_{n-2-j} S_j.
CountSequence recurrence_counts(int lambda, int n_max);

// Watson-Crick restricted primary structures via the 4-state recurrence
// starting from the all-ones state at n = 1. values[0] = 1 (the empty string).
CountSequence wc_primary_counts(int n_max);

// 4^n, the unrestricted primary count; n >= 1.
mpz_class unrestricted_primary(int n);

// Brute-force enumeration of non-crossing arc sets over n backbone nodes,
// every arc of length >= lambda, every node in at most one arc. Structurally
// independent of the recurrence it is used to validate.
mpz_class oracle_count(int n, int lambda, int cap = kDefaultOracleCap);

// The unique power series S with S(0) = s0 and phi(z, S(z)) = 0 mod
// z^{n_max+1}, by Newton iteration with precision doubling in exact rational
// arithmetic. For counting models every coefficient is checked to be a
// non-negative integer.
PowerSeries implicit_series(const ModelSpec& model, int n_max);

// phi(z, s(z)) truncated at s.order(); zero iff s satisfies the equation.
PowerSeries substitute_series(const MultiPoly& phi, const PowerSeries& s);

// Counts by the model's natural route: recurrence for recurrence kinds,
// implicit-equation extraction for algebraic kinds.
CountSequence model_counts(const ModelSpec& model, int n_max);

}  // namespace rnagrowth

#endif
