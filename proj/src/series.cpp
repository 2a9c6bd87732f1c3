#include "hurwitz/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Rat TruncatedSeries::coefficient(const Partition& mono, int tpow) const {
    auto it = c_.find(SeriesTerm{mono, tpow});
    return it == c_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::add_term(const Partition& mono, int tpow, const Rat& coeff) {
    if (coeff == 0) return;
    if (mono.size() > p_cap_ || tpow > t_cap_ || tpow < 0) return;  // truncation
    SeriesTerm key{mono, tpow};
    auto it = c_.find(key);
    if (it == c_.end()) {
        c_.emplace(std::move(key), coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    for (const auto& [k, v] : o.c_) add_term(k.mono, k.tpow, v);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    for (const auto& [k, v] : o.c_) add_term(k.mono, k.tpow, -v);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [k, v] : c_) v *= s;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.p_cap_, b.p_cap_), std::min(a.t_cap_, b.t_cap_));
    for (const auto& [ka, va] : a.c_) {
        for (const auto& [kb, vb] : b.c_) {
            int tpow = ka.tpow + kb.tpow;
            if (tpow > out.t_cap_) continue;
            if (ka.mono.size() + kb.mono.size() > out.p_cap_) continue;
            std::vector<int> parts = ka.mono.parts();
            parts.insert(parts.end(), kb.mono.parts().begin(), kb.mono.parts().end());
            out.add_term(Partition(std::move(parts)), tpow, va * vb);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::d_dt() const {
    TruncatedSeries out(p_cap_, t_cap_);
    for (const auto& [k, v] : c_) {
        if (k.tpow == 0) continue;
        out.add_term(k.mono, k.tpow - 1, v * k.tpow);
    }
    return out;
}

TruncatedSeries TruncatedSeries::d_dp(int i) const {
    TruncatedSeries out(p_cap_, t_cap_);
    for (const auto& [k, v] : c_) {
        auto& parts = k.mono.parts();
        int mult = static_cast<int>(std::count(parts.begin(), parts.end(), i));
        if (mult == 0) continue;
        std::vector<int> rest;
        bool dropped = false;
        for (int p : parts) {
            if (p == i && !dropped) {
                dropped = true;
                continue;
            }
            rest.push_back(p);
        }
        out.add_term(Partition(std::move(rest)), k.tpow, v * mult);
    }
    return out;
}

TruncatedSeries TruncatedSeries::multiply_by_p(int i) const {
    TruncatedSeries out(p_cap_, t_cap_);
    for (const auto& [k, v] : c_) {
        std::vector<int> parts = k.mono.parts();
        parts.push_back(i);
        out.add_term(Partition(std::move(parts)), k.tpow, v);
    }
    return out;
}

TruncatedSeries TruncatedSeries::multiply_by_t() const {
    TruncatedSeries out(p_cap_, t_cap_);
    for (const auto& [k, v] : c_) out.add_term(k.mono, k.tpow + 1, v);
    return out;
}

std::string TruncatedSeries::dump() const {
    std::vector<const std::pair<const SeriesTerm, Rat>*> order;
    for (const auto& kv : c_) order.push_back(&kv);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        if (a->first.mono.size() != b->first.mono.size())
            return a->first.mono.size() < b->first.mono.size();
        if (a->first.tpow != b->first.tpow) return a->first.tpow < b->first.tpow;
        return canonical_before(a->first.mono, b->first.mono);
    });
    std::ostringstream os;
    for (const auto* kv : order) {
        auto m = kv->first.mono.multiplicities();
        for (int i = 1; i <= p_cap_; ++i) {
            if (i > 1) os << ',';
            os << (i < static_cast<int>(m.size()) ? m[static_cast<size_t>(i)] : 0);
        }
        os << ';' << kv->first.tpow << ';' << rat_to_string(kv->second) << '\n';
    }
    return os.str();
}

TruncatedSeries assemble_series(const std::function<Rat(int, const Partition&)>& value,
                                int p_cap, int t_cap) {
    TruncatedSeries out(p_cap, t_cap);
    for (int d = 1; d <= p_cap; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int w = 0; w <= t_cap; ++w) {
                int g2 = w + 2 - mu.length() - d;
                if (g2 < 0 || (g2 & 1)) continue;
                out.add_term(mu, w,
                             value(g2 / 2, mu) / Rat(factorial(static_cast<unsigned>(w))));
            }
        }
    }
    return out;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (s.coefficient(Partition(), 0) != 0)
        throw std::invalid_argument("series_exp: nonzero constant term");
    TruncatedSeries acc(s.p_cap(), s.t_cap());
    acc.add_term(Partition(), 0, Rat(1));
    TruncatedSeries power = acc;  // s^0
    Int kfact = 1;
    for (int k = 1; k <= s.p_cap() + s.t_cap() + 1; ++k) {
        power = power * s;
        if (power.is_zero()) break;
        kfact *= k;
        TruncatedSeries term = power;
        term *= make_rat(Int(1), kfact);
        acc += term;
    }
    return acc;
}

TruncatedSeries series_log(const TruncatedSeries& s) {
    if (s.coefficient(Partition(), 0) != 1)
        throw std::invalid_argument("series_log: constant term must be 1");
    TruncatedSeries u = s;
    u.add_term(Partition(), 0, Rat(-1));
    TruncatedSeries acc(s.p_cap(), s.t_cap());
    TruncatedSeries power(s.p_cap(), s.t_cap());
    power.add_term(Partition(), 0, Rat(1));
    for (int k = 1; k <= s.p_cap() + s.t_cap() + 1; ++k) {
        power = power * u;
        if (power.is_zero()) break;
        TruncatedSeries term = power;
        term *= make_rat(Int((k & 1) ? 1 : -1), Int(static_cast<long>(k)));
        acc += term;
    }
    return acc;
}

TruncatedSeries assemble_series_raw(const std::function<Rat(const Partition&, int)>& value,
                                    int p_cap, int t_cap, bool with_one) {
    TruncatedSeries out(p_cap, t_cap);
    if (with_one) out.add_term(Partition(), 0, Rat(1));
    for (int d = 1; d <= p_cap; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int w = 0; w <= t_cap; ++w) {
                if (((d - mu.length()) - w) & 1) continue;  // parity obstruction
                out.add_term(mu, w, value(mu, w) / Rat(factorial(static_cast<unsigned>(w))));
            }
        }
    }
    return out;
}

Rat connected_from_disconnected(const HurwitzInstance& inst,
                                const std::function<Rat(const Partition&, int)>& disconnected) {
    TruncatedSeries hstar =
        assemble_series_raw(disconnected, inst.degree, inst.branch_count, true);
    TruncatedSeries h = series_log(hstar);
    return h.coefficient(inst.profile, inst.branch_count) *
           Rat(factorial(static_cast<unsigned>(inst.branch_count)));
}

namespace {

TruncatedSeries cut_join_rhs(const TruncatedSeries& s, bool connected) {
    TruncatedSeries rhs(s.p_cap(), s.t_cap());
    const int cap = s.p_cap();
    for (int i = 1; i < cap; ++i) {
        for (int j = 1; i + j <= cap; ++j) {
            // join: p_{i+j} (i j) d^2/dp_i dp_j
            TruncatedSeries join = s.d_dp(i).d_dp(j).multiply_by_p(i + j);
            join *= Rat(static_cast<long>(i) * j);
            rhs += join;
            // cut: p_i p_j (i+j) d/dp_{i+j}
            TruncatedSeries cut = s.d_dp(i + j).multiply_by_p(i).multiply_by_p(j);
            cut *= Rat(static_cast<long>(i) + j);
            rhs += cut;
            if (connected) {
                TruncatedSeries quad = (s.d_dp(i) * s.d_dp(j)).multiply_by_p(i + j);
                quad *= Rat(static_cast<long>(i) * j);
                rhs += quad;
            }
        }
    }
    rhs *= Rat(1, 2);
    return rhs;
}

TruncatedSeries restrict_t(const TruncatedSeries& s, int t_cap) {
    TruncatedSeries out(s.p_cap(), t_cap);
    for (const auto& [k, v] : s.terms()) out.add_term(k.mono, k.tpow, v);
    return out;
}

}  // namespace

TruncatedSeries cut_join_residual_disconnected(const TruncatedSeries& s) {
    TruncatedSeries r = s.d_dt();
    r -= cut_join_rhs(s, false);
    return restrict_t(r, std::max(0, s.t_cap() - 1));
}

TruncatedSeries cut_join_residual_connected(const TruncatedSeries& s) {
    TruncatedSeries r = s.d_dt();
    r -= cut_join_rhs(s, true);
    return restrict_t(r, std::max(0, s.t_cap() - 1));
}

}  // namespace hurwitz
