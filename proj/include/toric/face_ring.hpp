#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "toric/dichar.hpp"
#include "toric/polytope.hpp"

namespace toric {

using Rational = boost::multiprecision::cpp_rational;

/// Presentation of the graded quotient attached to a pair: one degree-1
/// variable x_F per facet, the squarefree monomial ideal generated by the
/// minimal non-faces, and one linear form per row of the dicharacteristic.
struct GradedPresentation {
    SimplePolytope base;
    std::vector<std::vector<int>> nonface_generators;  // minimal non-faces, sorted facet index sets
    IntMat linear_forms;                               // n x m; row i = coefficients of lambda_i
};

GradedPresentation presentation(const CharacteristicPair& pair);

/// Exponent vector over the facets; compared by lexicographic order within a
/// fixed degree (graded lex over the facet list order).
struct Monomial {
    std::vector<int> exponents;

    int degree() const;
    std::string to_string(const SimplePolytope& base) const;
    bool operator==(const Monomial& o) const = default;
};

/// A reduced class in one degree: coefficients over the echelon-selected
/// standard monomial basis of that degree's quotient component.
struct GradedClass {
    int degree = 0;
    std::vector<Monomial> basis;
    std::vector<Rational> coeffs;

    bool is_zero() const;
};

/// Rank over the rationals of the degree-d component of the quotient.
long graded_rank(const GradedPresentation& pres, int degree);

/// Degree-d part of the product over all facets of (1 + x_F), reduced into the
/// standard monomial basis.
GradedClass total_chern(const CharacteristicPair& pair, int degree);

/// Substitutes x_F -> -x_F in an expansion before reduction; used to compare
/// reorientations.
GradedClass total_chern_with_sign(const CharacteristicPair& pair, int degree,
                                  const std::string& negated_facet);

struct BettiReport {
    bool ok = true;
    std::vector<long> ranks;        // degree 0..n
    std::vector<Int> h;             // h-vector of the base
    Int vertex_count = 0;
    std::vector<std::string> problems;
};

/// Checks graded ranks against the h-vector degree by degree and their total
/// against the vertex count.
BettiReport betti_check(const CharacteristicPair& pair);

}  // namespace toric
