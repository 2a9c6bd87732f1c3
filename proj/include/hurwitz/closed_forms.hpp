#pragma once

#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// <tau_{m_1} ... tau_{m_n}>_0 = (n-3)!/prod m_i! when sum m_i = n-3, else 0.
// Requires n >= 3; the unstable cases live inside elsv_genus0.
Rat psi_correlator_genus0(const std::vector<int>& ms);

// Genus-0 ELSV evaluation: (w!/|Aut mu|) prod mu_i^{mu_i}/mu_i! times the
// psi-correlator sum, with the n = 1, 2 unstable integrals 1/mu_1^2 and
// 1/(mu_1 + mu_2).
Rat elsv_genus0(const Partition& mu);

// ((n+d-2)!/|Aut mu|) prod mu_i^{mu_i}/mu_i! * d^{n-3}, the n < 3 power
// taken as an exact rational.
Rat hurwitz_genus0(const Partition& mu);

// d^{d-2} minimal transitive factorizations of a fixed d-cycle.
Int denes_count(int d);

// The 1891 small-degree formulas, one evaluator per printed expression.
enum class SmallDegreeFormula {
    Degree2,          // 1/2 for every genus
    Degree3TwoOne,    // (3^{2g+3} - 3)/3!
    Degree3Three,     // 3^{2g}
    Degree4TwoOneOne, // (2^{2g+4} - 4)(3^{2g+5} - 3)/4!
    Degree5,          // the degree-5 exponential polynomial
    Degree6,          // the degree-6 exponential polynomial
};

Rat hurwitz_small_degree(int g, SmallDegreeFormula which);

int small_degree_formula_degree(SmallDegreeFormula which);
std::string small_degree_formula_name(SmallDegreeFormula which);

// Exhaustive comparison of one formula against the character backend over
// every profile of its degree for g = 0..gmax.
struct FormulaResolution {
    SmallDegreeFormula formula;
    int degree = 0;
    int gmax = 0;
    std::vector<Rat> formula_values;                           // g = 0..gmax
    std::vector<std::pair<Partition, std::vector<Rat>>> table; // per profile
    std::vector<Partition> matches;                            // full-row matches
    std::string report() const;
};

FormulaResolution resolve_formula_profile(SmallDegreeFormula which, int gmax);

}  // namespace hurwitz
