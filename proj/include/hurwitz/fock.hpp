#pragma once

#include <map>
#include <string>

#include "hurwitz/instance.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Finite combination of charge-0 basis vectors v_lambda. The basis state
// of lambda has beads at the half-integer Maya positions lambda_i - i + 1/2.
class FockVector {
public:
    FockVector() = default;
    static FockVector basis(const Partition& lambda);
    static FockVector vacuum() { return basis(Partition()); }

    bool is_zero() const { return amp_.empty(); }
    const std::map<Partition, Rat>& amplitudes() const { return amp_; }
    Rat amplitude(const Partition& lambda) const;

    void add(const Partition& lambda, const Rat& coeff);  // drops exact zeros
    FockVector& operator+=(const FockVector& o);
    FockVector& operator*=(const Rat& s);
    friend bool operator==(const FockVector& a, const FockVector& b) = default;

    // Inner product making the basis orthonormal.
    Rat dot(const FockVector& o) const;

private:
    std::map<Partition, Rat> amp_;
};

// Bosonic operator: removes ribbons of length n (n > 0) or adds ribbons of
// length -n (n < 0), with sign (-1)^{height-1}.
FockVector apply_alpha(int n, const FockVector& v);

// Content operator F_2: diagonal with eigenvalue sum_{k in S} k^2/2
// regularized against the vacuum; equals the content sum of lambda.
FockVector apply_F2(const FockVector& v);

// E_{i,j} = :psi_i psi*_j:, moving a bead from position j to position i.
// Positions are half-integers passed doubled (e.g. 7/2 -> 7, -1/2 -> -1).
FockVector apply_E(int two_i, int two_j, const FockVector& v);

// Maya-position form of the content sum, sum_{k in S} k^2/2 regularized.
Rat content_sum_maya(const Partition& lambda);

// <0| e^{alpha_1} v, evaluated by iterated apply_alpha(1, .).
Rat vacuum_exp_alpha1(const FockVector& v);

// h•_{g,mu} = (|C_mu|/d!) < e^{alpha_1} F_2^w prod_i alpha_{-mu_i} >.
Rat fock_disconnected(const Partition& mu, int w, int degree_bound = 20);
Rat fock_hurwitz(const HurwitzInstance& inst, int degree_bound = 20);

// Beads and gaps around the origin, positive positions to the left.
std::string maya_ascii(const Partition& lambda, int radius = 8);

}  // namespace hurwitz
