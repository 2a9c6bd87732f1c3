#pragma once

#include <vector>

#include "hurwitz/instance.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Full integer character table of S_d. Rows are irreducibles lambda and
// columns are classes mu, both over partitions_of(d) in canonical order.
struct CharacterTable {
    int degree = 0;
    std::vector<Partition> index;  // shared row/column index
    std::vector<std::vector<Int>> chi;

    const Int& value(const Partition& lambda, const Partition& mu) const;
    const Int& dimension(const Partition& lambda) const;  // chi^lambda_(1^d)
};

inline constexpr int kDefaultCharacterDegreeBound = 20;

// Cached per degree; built with the Murnaghan-Nakayama ribbon recursion.
const CharacterTable& character_table(int d, int bound = kDefaultCharacterDegreeBound);

// Coefficient of prod x_i^{lambda_i + m - i} in Delta(x) p_mu(x) with
// m = l(lambda). Exact multivariate expansion; small-d oracle only.
Int frobenius_character(const Partition& lambda, const Partition& mu, int bound = 8);

// f^lambda(C_mu) = |C_mu| chi^lambda_mu / dim lambda.
Rat central_character(const Partition& lambda, const Partition& mu);

// The class (2, 1^{d-2}) of simple branch points; requires d >= 2.
Partition simple_class(int d);

// h•_{g,mu} = sum_lambda (f^lambda/d!)^2 f^lambda(C_mu) f^lambda(C_2)^w,
// for any w >= 0 (not just the Riemann-Hurwitz one).
Rat character_disconnected(const Partition& mu, int w);

Rat character_hurwitz(const HurwitzInstance& inst);

}  // namespace hurwitz
