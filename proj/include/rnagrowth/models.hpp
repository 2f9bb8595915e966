#ifndef RNAGROWTH_MODELS_HPP
#define RNAGROWTH_MODELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rnagrowth/multipoly.hpp"

namespace rnagrowth {

enum class ModelKind {
    Recurrence,   // lambda-structure counting recurrence, paired with lambda_phi
    PrimaryFree,  // unrestricted primary structures, 4^n
    PrimaryWc,    // Watson-Crick restricted primary structures, 4-state recurrence
    Algebraic,    // implicit equation phi(z, S) = 0 with initial value S(0)
    System,       // two equations in (z, S, T); T is eliminated
};

const char* model_kind_name(ModelKind k);

// A named structure family and everything needed to count it and to locate
// the dominant singularity of its generating function.
struct ModelSpec {
    std::string name;
    ModelKind kind = ModelKind::Algebraic;

    int lambda = 0;  // Recurrence kind: minimum arc length, >= 2

    std::optional<MultiPoly> phi;  // implicit equation in (z, S)
    mpq_class s0{0};               // S(0), fixes the power-series branch

    std::optional<MultiPoly> eq1, eq2;  // System kind, pre-elimination

    std::optional<UniPoly> published_radicand;
    std::optional<std::string> published_growth;

    // Primary models have rational generating functions; the singularities
    // are the roots of this polynomial (the denominator).
    std::optional<UniPoly> singular_poly;

    bool counting = true;  // coefficients must be non-negative integers

    std::vector<std::string> notes;  // provenance: stripped factors etc.

    bool has_phi() const { return phi.has_value(); }
    bool has_oracle() const { return kind == ModelKind::Recurrence; }
};

// x^2 S^2 - (1 - x + sum_{k=2..lambda} x^k) S + 1, the implicit equation of
// the lambda-structure generating function. lambda >= 2.
MultiPoly lambda_phi(int lambda);

// Resultant elimination of T from a two-equation system. The result is an
// Algebraic model: phi normalized to integer coprime coefficients with
// positive leading coefficient, spurious z / (1-z) content stripped and
// recorded in notes, s0 picked so that phi(0, s0) = 0 with a simple root.
ModelSpec eliminate_auxiliary(const ModelSpec& system);

const ModelSpec& get_model(const std::string& name);
const std::vector<std::string>& model_names();

// Registry name first; otherwise treat the argument as a model-file path.
ModelSpec resolve_model(const std::string& name_or_path);

ModelSpec load_model_file(const std::string& path);

// Shared invariant check: phi(0, s0) = 0 and dphi/dS(0, s0) != 0.
void check_branch_point(const ModelSpec& m);

}  // namespace rnagrowth

#endif
