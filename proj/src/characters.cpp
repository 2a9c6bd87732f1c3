#include "hurwitz/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Border-strip additions via beta-sets: pad kappa to L rows, set
// beta_i = kappa_i + (L-1-i), and adding a strip of size r moves one
// beta up by r. The crossing count reproduces the (-1)^{height-1} sign.
std::vector<std::pair<Partition, int>> add_border_strips(const Partition& kappa, int r) {
    int L = kappa.length() + r;
    std::vector<long> beta(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) {
        int part = i < kappa.length() ? kappa.part(i) : 0;
        beta[static_cast<size_t>(i)] = part + (L - 1 - i);
    }
    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < L; ++i) {
        long target = beta[static_cast<size_t>(i)] + r;
        bool occupied = false;
        int crossings = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            long bj = beta[static_cast<size_t>(j)];
            if (bj == target) {
                occupied = true;
                break;
            }
            if (bj > beta[static_cast<size_t>(i)] && bj < target) ++crossings;
        }
        if (occupied) continue;
        std::vector<long> nb = beta;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> parts;
        for (int k = 0; k < L; ++k) {
            long p = nb[static_cast<size_t>(k)] - (L - 1 - k);
            if (p > 0) parts.push_back(static_cast<int>(p));
        }
        out.emplace_back(Partition(std::move(parts)), (crossings % 2) ? -1 : 1);
    }
    return out;
}

CharacterTable build_character_table(int d) {
    CharacterTable t;
    t.degree = d;
    t.index = partitions_of(d);
    t.chi.assign(t.index.size(), std::vector<Int>(t.index.size(), Int(0)));

    // Expand p_mu in the Schur basis one power sum at a time; the
    // coefficients of the final states are the characters of column mu.
    for (size_t m = 0; m < t.index.size(); ++m) {
        std::map<Partition, Int> state;
        state[Partition()] = 1;
        for (int part : t.index[m].parts()) {
            std::map<Partition, Int> next;
            for (const auto& [kappa, coef] : state) {
                for (const auto& [shape, sign] : add_border_strips(kappa, part)) {
                    next[shape] += sign > 0 ? coef : -coef;
                }
            }
            state = std::move(next);
        }
        for (const auto& [lambda, coef] : state) {
            if (coef == 0) continue;
            t.chi[static_cast<size_t>(partition_index(lambda))][m] = coef;
        }
    }
    return t;
}

std::mutex g_table_mutex;
std::map<int, CharacterTable> g_table_cache;

}  // namespace

const Int& CharacterTable::value(const Partition& lambda, const Partition& mu) const {
    if (lambda.size() != degree || mu.size() != degree)
        throw std::invalid_argument("character table lookup: degree mismatch");
    return chi[static_cast<size_t>(partition_index(lambda))]
              [static_cast<size_t>(partition_index(mu))];
}

const Int& CharacterTable::dimension(const Partition& lambda) const {
    return chi[static_cast<size_t>(partition_index(lambda))][index.size() - 1];
}

const CharacterTable& character_table(int d, int bound) {
    if (d < 1) throw std::invalid_argument("character_table: d must be >= 1");
    if (d > bound)
        throw FeasibilityError("character table degree " + std::to_string(d) +
                               " exceeds bound " + std::to_string(bound));
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_table_cache.find(d);
    if (it != g_table_cache.end()) return it->second;
    return g_table_cache.emplace(d, build_character_table(d)).first->second;
}

Int frobenius_character(const Partition& lambda, const Partition& mu, int bound) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("frobenius_character: |lambda| != |mu|");
    if (lambda.size() > bound)
        throw FeasibilityError("frobenius_character: degree exceeds bound " +
                               std::to_string(bound));
    const int m = lambda.length();
    if (m == 0) return 1;

    std::vector<int> target(static_cast<size_t>(m));
    long long target_total = 0;
    for (int i = 0; i < m; ++i) {
        target[static_cast<size_t>(i)] = lambda.part(i) + m - (i + 1);
        target_total += target[static_cast<size_t>(i)];
    }

    using Poly = std::map<std::vector<int>, long long>;
    Poly poly;
    poly[std::vector<int>(static_cast<size_t>(m), 0)] = 1;

    auto fits = [&](const std::vector<int>& e) {
        for (int i = 0; i < m; ++i)
            if (e[static_cast<size_t>(i)] > target[static_cast<size_t>(i)]) return false;
        return true;
    };

    // Vandermonde prod_{i<j} (x_i - x_j), truncated against the target.
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            Poly next;
            for (const auto& [e, c] : poly) {
                std::vector<int> ei = e;
                ++ei[static_cast<size_t>(i)];
                if (fits(ei)) next[std::move(ei)] += c;
                std::vector<int> ej = e;
                ++ej[static_cast<size_t>(j)];
                if (fits(ej)) next[std::move(ej)] -= c;
            }
            poly = std::move(next);
        }
    }

    // Multiply by each power sum p_r = x_1^r + ... + x_m^r.
    long long remaining = lambda.size();
    for (int r : mu.parts()) {
        remaining -= r;
        Poly next;
        for (const auto& [e, c] : poly) {
            for (int i = 0; i < m; ++i) {
                std::vector<int> e2 = e;
                e2[static_cast<size_t>(i)] += r;
                if (!fits(e2)) continue;
                long long total = std::accumulate(e2.begin(), e2.end(), 0LL);
                if (total + remaining > target_total) continue;
                next[std::move(e2)] += c;
            }
        }
        poly = std::move(next);
    }

    auto it = poly.find(target);
    return it == poly.end() ? Int(0) : Int(static_cast<long>(it->second));
}

Rat central_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("central_character: |lambda| != |mu|");
    const auto& table = character_table(lambda.size());
    return make_rat(class_size(mu) * table.value(lambda, mu), table.dimension(lambda));
}

Partition simple_class(int d) {
    if (d < 2) throw std::invalid_argument("simple_class: d must be >= 2");
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<size_t>(d - 2), 1);
    return Partition(std::move(parts));
}

Rat character_disconnected(const Partition& mu, int w) {
    if (w < 0) throw std::invalid_argument("character_disconnected: w < 0");
    const int d = mu.size();
    const auto& table = character_table(d);
    const Int dfact = factorial(static_cast<unsigned>(d));
    Rat sum(0);
    for (const auto& lambda : table.index) {
        Rat dim_ratio = make_rat(table.dimension(lambda), dfact);
        Rat f_mu = central_character(lambda, mu);
        Rat f_2 = (d >= 2) ? central_character(lambda, simple_class(d)) : Rat(0);
        Rat term = dim_ratio * dim_ratio * f_mu * rpow(f_2, static_cast<unsigned long>(w));
        sum += term;
    }
    return sum;
}

Rat character_hurwitz(const HurwitzInstance& inst) {
    return character_disconnected(inst.profile, inst.branch_count);
}

}  // namespace hurwitz
