#include "hurwitz/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hurwitz/characters.hpp"
#include "hurwitz/instance.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

Rat psi_correlator_genus0(const std::vector<int>& ms) {
    const int n = static_cast<int>(ms.size());
    if (n < 3) throw std::invalid_argument("psi_correlator_genus0: needs n >= 3");
    long long total = 0;
    for (int m : ms) {
        if (m < 0) throw std::invalid_argument("psi_correlator_genus0: negative index");
        total += m;
    }
    if (total != n - 3) return Rat(0);
    Int denom = 1;
    for (int m : ms) denom *= factorial(static_cast<unsigned>(m));
    return make_rat(factorial(static_cast<unsigned>(n - 3)), denom);
}

namespace {

// Sum over (m_1..m_n) >= 0 with sum m_i = n-3 of <tau_m>_0 prod mu_i^{m_i}.
Rat correlator_sum(const Partition& mu) {
    const int n = mu.length();
    Rat total(0);
    std::vector<int> ms(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            ms[static_cast<size_t>(pos)] = left;
            Rat term = psi_correlator_genus0(ms);
            if (term != 0) {
                for (int i = 0; i < n; ++i)
                    term *= Rat(ipow(Int(mu.part(i)),
                                     static_cast<unsigned long>(ms[static_cast<size_t>(i)])));
                total += term;
            }
            return;
        }
        for (int m = 0; m <= left; ++m) {
            ms[static_cast<size_t>(pos)] = m;
            rec(pos + 1, left - m);
        }
    };
    rec(0, n - 3);
    return total;
}

Rat vertex_prefactor(const Partition& mu) {
    Rat p(1);
    for (int i = 0; i < mu.length(); ++i) {
        int m = mu.part(i);
        p *= make_rat(ipow(Int(m), static_cast<unsigned long>(m)),
                      factorial(static_cast<unsigned>(m)));
    }
    return p;
}

}  // namespace

Rat elsv_genus0(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("elsv_genus0: empty profile");
    const int n = mu.length();
    const int d = mu.size();
    const int w = d + n - 2;
    Rat integral;
    if (n == 1) {
        integral = make_rat(Int(1), Int(mu.part(0)) * Int(mu.part(0)));
    } else if (n == 2) {
        integral = make_rat(Int(1), Int(mu.part(0) + mu.part(1)));
    } else {
        integral = correlator_sum(mu);
    }
    return make_rat(factorial(static_cast<unsigned>(w)), aut_order(mu)) *
           vertex_prefactor(mu) * integral;
}

Rat hurwitz_genus0(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("hurwitz_genus0: empty profile");
    const int n = mu.length();
    const int d = mu.size();
    Rat power = n >= 3 ? Rat(ipow(Int(d), static_cast<unsigned long>(n - 3)))
                       : make_rat(Int(1), ipow(Int(d), static_cast<unsigned long>(3 - n)));
    return make_rat(factorial(static_cast<unsigned>(n + d - 2)), aut_order(mu)) *
           vertex_prefactor(mu) * power;
}

Int denes_count(int d) {
    if (d < 1) throw std::invalid_argument("denes_count: d must be >= 1");
    if (d == 1) return 1;  // 1^{-1}
    return ipow(Int(d), static_cast<unsigned long>(d - 2));
}

namespace {

Rat power_term(long base, int exponent, const Rat& scale) {
    return scale * Rat(ipow(Int(base), static_cast<unsigned long>(exponent)));
}

}  // namespace

Rat hurwitz_small_degree(int g, SmallDegreeFormula which) {
    if (g < 0) throw std::invalid_argument("hurwitz_small_degree: g must be >= 0");
    switch (which) {
        case SmallDegreeFormula::Degree2:
            return Rat(1, 2);
        case SmallDegreeFormula::Degree3TwoOne:
            return make_rat(ipow(Int(3), static_cast<unsigned long>(2 * g + 3)) - 3, Int(6));
        case SmallDegreeFormula::Degree3Three:
            return Rat(ipow(Int(3), static_cast<unsigned long>(2 * g)));
        case SmallDegreeFormula::Degree4TwoOneOne: {
            Int a = ipow(Int(2), static_cast<unsigned long>(2 * g + 4)) - 4;
            Int b = ipow(Int(3), static_cast<unsigned long>(2 * g + 5)) - 3;
            return make_rat(a * b, Int(24));
        }
        case SmallDegreeFormula::Degree5: {
            const int e = 2 * g + 8;
            Rat v(0);
            v += power_term(10, e, Rat(1, 7200));
            v -= power_term(6, e, Rat(1, 288));
            v += power_term(5, e, Rat(1, 450));
            v -= power_term(4, e, Rat(1, 72));
            v += power_term(3, e, Rat(1, 18));
            v += power_term(2, e, Rat(1, 12));
            v -= Rat(5, 9);
            return v;
        }
        case SmallDegreeFormula::Degree6: {
            const int e = 2 * g + 10;
            Rat v(0);
            v += power_term(15, e, make_rat(Int(1), Int(2) * 360 * 360));
            v -= power_term(10, e, Rat(1, 7200));
            v += power_term(9, e, make_rat(Int(1), Int(2) * 72 * 72));
            v -= power_term(7, e, make_rat(Int(1), Int(2) * 24 * 24));
            v += power_term(6, e, make_rat(Int(1), Int(2) * 36 * 36));
            v -= power_term(5, e, Rat(1, 360));
            v += power_term(4, e, Rat(1, 36));
            v -= power_term(3, e, Rat(19, 324));
            v -= power_term(2, e, Rat(19, 144));
            v += Rat(727, 1152);
            return v;
        }
    }
    throw std::invalid_argument("hurwitz_small_degree: unknown formula");
}

int small_degree_formula_degree(SmallDegreeFormula which) {
    switch (which) {
        case SmallDegreeFormula::Degree2: return 2;
        case SmallDegreeFormula::Degree3TwoOne:
        case SmallDegreeFormula::Degree3Three: return 3;
        case SmallDegreeFormula::Degree4TwoOneOne: return 4;
        case SmallDegreeFormula::Degree5: return 5;
        case SmallDegreeFormula::Degree6: return 6;
    }
    return 0;
}

std::string small_degree_formula_name(SmallDegreeFormula which) {
    switch (which) {
        case SmallDegreeFormula::Degree2: return "degree-2";
        case SmallDegreeFormula::Degree3TwoOne: return "degree-3 profile (2,1)";
        case SmallDegreeFormula::Degree3Three: return "degree-3 profile (3)";
        case SmallDegreeFormula::Degree4TwoOneOne: return "degree-4 profile (2,1,1)";
        case SmallDegreeFormula::Degree5: return "degree-5 expression";
        case SmallDegreeFormula::Degree6: return "degree-6 expression";
    }
    return "?";
}

FormulaResolution resolve_formula_profile(SmallDegreeFormula which, int gmax) {
    FormulaResolution res;
    res.formula = which;
    res.degree = small_degree_formula_degree(which);
    res.gmax = gmax;
    for (int g = 0; g <= gmax; ++g) res.formula_values.push_back(hurwitz_small_degree(g, which));

    for (const auto& mu : partitions_of(res.degree)) {
        std::vector<Rat> values;
        bool all_match = true;
        for (int g = 0; g <= gmax; ++g) {
            HurwitzInstance inst(g, mu);
            Rat connected = connected_from_disconnected(
                inst, [](const Partition& nu, int w) { return character_disconnected(nu, w); });
            values.push_back(connected);
            if (connected != res.formula_values[static_cast<size_t>(g)]) all_match = false;
        }
        if (all_match) res.matches.push_back(mu);
        res.table.emplace_back(mu, std::move(values));
    }
    return res;
}

std::string FormulaResolution::report() const {
    std::ostringstream os;
    os << "formula " << small_degree_formula_name(formula) << " (degree " << degree
       << "), g = 0.." << gmax << "\n";
    os << "  formula values:";
    for (const auto& v : formula_values) os << ' ' << rat_to_string(v);
    os << "\n";
    for (const auto& [mu, values] : table) {
        os << "  profile (" << format_partition(mu) << "):";
        for (const auto& v : values) os << ' ' << rat_to_string(v);
        bool match = std::find(matches.begin(), matches.end(), mu) != matches.end();
        os << (match ? "   <-- MATCH" : "") << "\n";
    }
    if (matches.empty()) os << "  NO PROFILE MATCHES\n";
    return os.str();
}

}  // namespace hurwitz
