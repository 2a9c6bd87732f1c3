#pragma once

#include <vector>

#include "hurwitz/instance.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Element of the center of C[S_d] in the class-sum basis: coefficient(mu)
// is the coefficient of C_mu, indexed by partitions_of(d) in canonical order.
class ClassVector {
public:
    explicit ClassVector(int d);
    static ClassVector basis(const Partition& mu);

    int degree() const { return d_; }
    const std::vector<Rat>& coefficients() const { return c_; }
    const Rat& coefficient(const Partition& mu) const;
    Rat& at(int index) { return c_[static_cast<size_t>(index)]; }
    const Rat& at(int index) const { return c_[static_cast<size_t>(index)]; }

    // Total number of group elements counted with multiplicity,
    // sum_mu coefficient(mu) * |C_mu|.
    Rat mass() const;

    ClassVector& operator+=(const ClassVector& o);
    ClassVector& operator*=(const Rat& s);
    friend bool operator==(const ClassVector& a, const ClassVector& b) = default;

private:
    int d_;
    std::vector<Rat> c_;
};

// T[nu][mu] = number of transpositions t with cycle_type(t * rep_nu) = mu;
// equivalently the coefficient of C_nu in C_2 * C_mu. Cached per degree.
const std::vector<std::vector<long long>>& c2_transition_table(int d);

// Left multiplication by the class sum of transpositions.
ClassVector multiply_by_C2(const ClassVector& v);

// (1/d!) [C_e] C_mu C_2^w. Zero whenever w and d - l(mu) have different
// parity; callers may pass any w >= 0.
Rat class_algebra_disconnected(const Partition& mu, int w);

// Disconnected Hurwitz number via w applications of multiply_by_C2.
Rat class_algebra_hurwitz(const HurwitzInstance& inst);

}  // namespace hurwitz
