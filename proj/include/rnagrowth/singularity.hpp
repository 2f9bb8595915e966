#ifndef RNAGROWTH_SINGULARITY_HPP
#define RNAGROWTH_SINGULARITY_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rnagrowth/counting.hpp"
#include "rnagrowth/models.hpp"
#include "rnagrowth/multipoly.hpp"

namespace rnagrowth {

struct RootRecord {
    std::complex<double> value;
    double residual = 0.0;  // |p_monic(value)| after polishing
    bool multiple = false;  // multiplicity > 1 in the pre-square-free input
    bool certified_real = false;
    // exact bracket with a verified sign change (or an exact root when equal)
    mpq_class bracket_lo{0}, bracket_hi{0};
};

struct RootSet {
    UniPoly input;       // normalized as given
    UniPoly poly;        // square-free integer-normalized polynomial actually solved
    std::vector<RootRecord> roots;  // sorted by (Re, Im)
};

// Square-free reduction, Durand-Kerner simultaneous iteration (Aberth
// fallback), Newton polishing, then exact-rational bisection certificates for
// the real roots, each bracket narrowed to width <= tol.
RootSet find_roots(const UniPoly& p, double tol = 1e-12, int max_iterations = 500);

enum class Strategy { PositiveReal, MinModulus };

struct DominantResult {
    double value = 0.0;
    bool certified = false;     // real root with an exact bracket
    mpq_class lo{0}, hi{0};     // when certified
    int tie_count = 0;          // roots with modulus within tie_tol of value
    int set_index = -1;         // which candidate set the root came from
    int root_index = -1;
    std::string strategy;
};

// Selects the dominant singularity among the candidate root sets.
// PositiveReal picks the smallest certified positive real root (errors when
// none exists); MinModulus picks the smallest modulus over all roots.
DominantResult dominant_singularity(const std::vector<RootSet>& candidates, Strategy strategy,
                                    double tie_tol = 1e-9);
DominantResult dominant_singularity(const RootSet& roots, Strategy strategy,
                                    double tie_tol = 1e-9);

// Narrows a certified bracket by exact bisection until both the bracket and
// its reciprocal are no wider than `width`.
void refine_bracket(const UniPoly& poly, mpq_class& lo, mpq_class& hi, const mpq_class& width);

struct RootTestReport {
    int n_used = 0;
    double max_nth_root = 0.0;
    int max_at = 0;
    double final_ratio = 0.0;
    int ratio_span = 1;  // index gap between the last two nonzero counts
    bool pass = false;
};

// Empirical validation that |S_n|^{1/n} stays below growth*(1+rel_tol) and
// that the tail ratio of the counts approaches the growth constant. The ratio
// uses the last two nonzero entries (lacunary sequences have zero terms).
RootTestReport root_test(const CountSequence& counts, double growth, double rel_tol);

struct GrowthReport {
    std::string model;
    UniPoly radicand;
    std::string radicand_source;  // "published", "derived", "denominator"
    std::string R;                // decimal string at the requested digits
    std::string growth;           // decimal string of 1/R
    double R_value = 0.0;
    double growth_value = 0.0;
    RootSet candidates;
    std::optional<RootSet> lc_candidates;  // roots of the leading coefficient of phi
    int tie_count = 0;
    RootTestReport root_test;
    std::optional<std::string> published_growth;
    std::optional<double> published_rel_error;
    bool certified = false;  // root test passed
    std::vector<std::string> notes;
};

// Full pipeline for one model: radicand, roots, dominant singularity,
// growth = 1/R, and the root-test validation over the first n_validate counts.
GrowthReport growth_report(const ModelSpec& model, int n_validate = 200, int digits = 7,
                           double rel_tol = 0.01, Strategy strategy = Strategy::PositiveReal);

}  // namespace rnagrowth

#endif
