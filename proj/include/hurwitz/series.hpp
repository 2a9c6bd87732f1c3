#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/instance.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Monomial p_mu t^w keyed by the partition mu of p-indices.
struct SeriesTerm {
    Partition mono;
    int tpow = 0;
    friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
    friend auto operator<=>(const SeriesTerm&, const SeriesTerm&) = default;
};

// Polynomial in t and p_1..p_D with exact rational coefficients, truncated
// to total p-weight <= D and t-degree <= W. Stored coefficients are nonzero;
// equality ignores unstored zeros.
class TruncatedSeries {
public:
    TruncatedSeries(int p_cap, int t_cap) : p_cap_(p_cap), t_cap_(t_cap) {}

    int p_cap() const { return p_cap_; }
    int t_cap() const { return t_cap_; }
    const std::map<SeriesTerm, Rat>& terms() const { return c_; }

    Rat coefficient(const Partition& mono, int tpow) const;
    void add_term(const Partition& mono, int tpow, const Rat& coeff);
    bool is_zero() const { return c_.empty(); }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rat& s);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    TruncatedSeries d_dt() const;
    TruncatedSeries d_dp(int i) const;
    TruncatedSeries multiply_by_p(int i) const;
    TruncatedSeries multiply_by_t() const;

    // One line per term: "p-exponents;t-power;value" with p-exponents the
    // multiplicity vector m_1..m_D, sorted by (weight, t, canonical order).
    std::string dump() const;

private:
    int p_cap_, t_cap_;
    std::map<SeriesTerm, Rat> c_;
};

// Coefficient of p_mu t^w is value(g, mu)/w! where g is recovered from
// w = 2g - 2 + l(mu) + d; pairs with no valid genus contribute nothing.
// Connected assembly: connected numbers vanish outside valid genera.
TruncatedSeries assemble_series(const std::function<Rat(int, const Partition&)>& value,
                                int p_cap, int t_cap);

// Disconnected assembly keeps every (mu, w) pair: disconnected covers can
// carry negative formal genus (e.g. two degree-1 sheets at w = 0), and the
// exp/log correspondence needs those coefficients. Parity-obstructed pairs
// are skipped; with_one adds the constant term of exp.
TruncatedSeries assemble_series_raw(const std::function<Rat(const Partition&, int)>& value,
                                    int p_cap, int t_cap, bool with_one = false);

// Formal exponential; requires zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& s);
// Formal logarithm; requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& s);

// Connected number from a disconnected backend: w! [p_mu t^w] log(1 + H•).
Rat connected_from_disconnected(const HurwitzInstance& inst,
                                const std::function<Rat(const Partition&, int)>& disconnected);

// dH/dt - (1/2) sum_{i,j} [ p_{i+j} ij d2H/dp_i dp_j + p_i p_j (i+j) dH/dp_{i+j} ],
// the disconnected cut-and-join form, truncated to (D, W-1).
TruncatedSeries cut_join_residual_disconnected(const TruncatedSeries& s);

// Connected form; carries the additional first-order quadratic term
// p_{i+j} ij (dH/dp_i)(dH/dp_j), all under the same leading 1/2.
TruncatedSeries cut_join_residual_connected(const TruncatedSeries& s);

}  // namespace hurwitz
