#pragma once

#include <string>
#include <vector>

#include "wittex/cocycle.hpp"

namespace wittex {

// Weight constraint of a reference row: either an exact point (alpha, beta)
// or the whole line alpha - beta = offset.
struct WeightPattern {
    bool is_line = false;
    Scalar alpha, beta;  // point rows
    long offset = 0;     // line rows
};

enum class CoordSystem { Theta, Monomial };

// One row of the reference classification shipped with the tool.  The tables
// printed by the CLI are always regenerated from the solvers; these rows are
// the baseline they are compared against, kept verbatim including their
// display text so that any disagreement can be surfaced rather than hidden.
struct BaselineRow {
    unsigned degree = 1;
    WeightPattern weights;
    CoordSystem coords = CoordSystem::Monomial;
    std::string alpha_text;  // weight columns as displayed
    std::string beta_text;
    std::string display;     // class column as displayed
    // Machine form: graded coefficients c_0..c_{n-1} as polynomials in alpha
    // (Theta rows), or the class polynomial in k, m, alpha (Monomial rows).
    std::vector<MPoly> theta_coeffs;
    MPoly monomial;
    // Alternate statement of a tabulated class recorded separately, carrying
    // its own independently stated weights; compared on those weights.
    bool variant = false;
};

// One reference row of the non-polynomial classification.
struct NonPolyRow {
    Scalar alpha, beta;
    bool gamma_integral = true;  // else valid for generic gamma
    unsigned degree = 0;
    std::string display;
    // Built at a concrete offset: gamma = 0 for integral rows, 1/2 otherwise.
    Cocycle machine;
};

// Graded-coordinate rows (with the recorded alternate statements appended).
const std::vector<BaselineRow>& theta_table();
// Monomial-coordinate rows.
const std::vector<BaselineRow>& monomial_table();
// Point-mass and inverse-index rows.
const std::vector<NonPolyRow>& nonpoly_table();

// A reference row in display form.
struct TableRow {
    std::string alpha_constraint;  // exact value or "alpha - beta = c"
    std::string beta;
    std::string gamma_constraint;
    unsigned degree = 0;
    std::string class_polynomial;
    std::string coordinate_system;  // "theta" or "M"
};

// The outcome of checking one baseline row against the regenerated
// classification: does the row's class pass the residual check at its stated
// weights and represent the class the solver finds there (modulo equivalence
// and scalar)?
struct RowVerdict {
    TableRow row;
    bool variant = false;
    bool matches = false;
    std::string note;         // reason for disagreement; empty when it matches
    std::string regenerated;  // the solver's class for this slot, rendered
};

struct TableComparison {
    std::string which;  // "poly-theta", "poly-M" or "nonpoly"
    std::vector<RowVerdict> rows;
    bool clean() const;
};

// Regenerates the classification for every row of the named table and
// compares; which must be one of "poly-theta", "poly-M", "nonpoly"
// (DegenerateInput otherwise).
TableComparison compare_table(const std::string& which);

// One-line plain-text rendering of a structure-constant function, component
// by component.
std::string render_cocycle(const Cocycle& c);

}  // namespace wittex
