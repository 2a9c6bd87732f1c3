#include "hurwitz/fock.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Beta window of L rows: beta_i = lambda_i + (L - 1 - i), 0-based, strictly
// decreasing and >= 0. Positions below the window are beads of the vacuum
// tail, so a move landing there is blocked.
std::vector<long> beta_set(const Partition& lambda, int rows) {
    std::vector<long> beta(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        int part = i < lambda.length() ? lambda.part(i) : 0;
        beta[static_cast<size_t>(i)] = part + (rows - 1 - i);
    }
    return beta;
}

Partition partition_from_beta(std::vector<long> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int rows = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int k = 0; k < rows; ++k) {
        long p = beta[static_cast<size_t>(k)] - (rows - 1 - k);
        if (p > 0) parts.push_back(static_cast<int>(p));
    }
    return Partition(std::move(parts));
}

// All single-bead moves by +shift (ribbon additions for shift > 0,
// removals for shift < 0), with the crossing-parity sign.
std::vector<std::pair<Partition, int>> bead_moves(const Partition& lambda, int shift) {
    int rows = lambda.length() + std::max(0, shift);
    if (rows == 0) rows = 1;
    std::vector<long> beta = beta_set(lambda, rows);
    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < rows; ++i) {
        long from = beta[static_cast<size_t>(i)];
        long to = from + shift;
        if (to < 0) continue;
        bool occupied = false;
        int crossings = 0;
        long lo = std::min(from, to), hi = std::max(from, to);
        for (int j = 0; j < rows; ++j) {
            if (j == i) continue;
            long bj = beta[static_cast<size_t>(j)];
            if (bj == to) {
                occupied = true;
                break;
            }
            if (bj > lo && bj < hi) ++crossings;
        }
        if (occupied) continue;
        std::vector<long> nb = beta;
        nb[static_cast<size_t>(i)] = to;
        out.emplace_back(partition_from_beta(std::move(nb)), (crossings % 2) ? -1 : 1);
    }
    return out;
}

// Membership of the half-integer position c + 1/2 in the Maya bead set.
bool bead_at(const Partition& lambda, long c) {
    if (c < -static_cast<long>(lambda.length())) return true;  // vacuum tail
    for (int r = 1; r <= lambda.length(); ++r) {
        if (lambda.part(r - 1) - r == c) return true;
    }
    return false;
}

}  // namespace

FockVector FockVector::basis(const Partition& lambda) {
    FockVector v;
    v.amp_[lambda] = 1;
    return v;
}

Rat FockVector::amplitude(const Partition& lambda) const {
    auto it = amp_.find(lambda);
    return it == amp_.end() ? Rat(0) : it->second;
}

void FockVector::add(const Partition& lambda, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = amp_.find(lambda);
    if (it == amp_.end()) {
        amp_.emplace(lambda, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) amp_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [lambda, c] : o.amp_) add(lambda, c);
    return *this;
}

FockVector& FockVector::operator*=(const Rat& s) {
    if (s == 0) {
        amp_.clear();
        return *this;
    }
    for (auto& [lambda, c] : amp_) c *= s;
    return *this;
}

Rat FockVector::dot(const FockVector& o) const {
    const auto* small = this;
    const auto* large = &o;
    if (small->amp_.size() > large->amp_.size()) std::swap(small, large);
    Rat r(0);
    for (const auto& [lambda, c] : small->amp_) {
        auto it = large->amp_.find(lambda);
        if (it != large->amp_.end()) r += c * it->second;
    }
    return r;
}

FockVector apply_alpha(int n, const FockVector& v) {
    if (n == 0) throw std::invalid_argument("apply_alpha: n must be nonzero");
    FockVector out;
    for (const auto& [lambda, c] : v.amplitudes()) {
        for (const auto& [shape, sign] : bead_moves(lambda, -n)) {
            out.add(shape, sign > 0 ? c : -c);
        }
    }
    return out;
}

Rat content_sum_maya(const Partition& lambda) {
    Rat total(0);
    // Positive beads.
    for (int r = 1; r <= lambda.length(); ++r) {
        long c = lambda.part(r - 1) - r;
        if (c >= 0) total += make_rat(Int((2 * c + 1) * (2 * c + 1)), Int(8));
    }
    // Negative holes; none exist below row length(lambda).
    for (long c = -1; c >= -static_cast<long>(lambda.length()); --c) {
        if (!bead_at(lambda, c)) total -= make_rat(Int((2 * c + 1) * (2 * c + 1)), Int(8));
    }
    return total;
}

FockVector apply_F2(const FockVector& v) {
    FockVector out;
    for (const auto& [lambda, c] : v.amplitudes()) {
        out.add(lambda, c * content_sum_maya(lambda));
    }
    return out;
}

FockVector apply_E(int two_i, int two_j, const FockVector& v) {
    if ((two_i & 1) == 0 || (two_j & 1) == 0)
        throw std::invalid_argument("apply_E: positions must be half-integers");
    FockVector out;
    // c-coordinates: position = c + 1/2.
    long ci = (two_i - 1) / 2;
    long cj = (two_j - 1) / 2;
    for (const auto& [lambda, coeff] : v.amplitudes()) {
        if (two_i == two_j) {
            // Normal ordering: eigenvalue [k in S] for k > 0, -[k not in S] for k < 0.
            int eig = two_i > 0 ? (bead_at(lambda, ci) ? 1 : 0)
                                : (bead_at(lambda, ci) ? 0 : -1);
            if (eig) out.add(lambda, coeff * eig);
            continue;
        }
        // Window covering both positions plus the whole partition.
        long need = std::max<long>(0, -std::min(ci, cj));
        int rows = lambda.length() + static_cast<int>(need) + 1;
        std::vector<long> beta = beta_set(lambda, rows);
        long from = cj + rows;  // beta value of position c: c + rows (0-based window)
        long to = ci + rows;
        bool has_from = false, occupied = false;
        int crossings = 0;
        long lo = std::min(from, to), hi = std::max(from, to);
        size_t from_idx = 0;
        for (size_t k = 0; k < beta.size(); ++k) {
            if (beta[k] == from) {
                has_from = true;
                from_idx = k;
            }
            if (beta[k] == to) occupied = true;
            if (beta[k] > lo && beta[k] < hi) ++crossings;
        }
        if (!has_from || occupied) continue;
        std::vector<long> nb = beta;
        nb[from_idx] = to;
        int sign = (crossings % 2) ? -1 : 1;
        out.add(partition_from_beta(std::move(nb)), sign > 0 ? coeff : -coeff);
    }
    return out;
}

Rat vacuum_exp_alpha1(const FockVector& v) {
    Rat total(0);
    FockVector u = v;
    Int kfact = 1;
    for (unsigned k = 0; !u.is_zero(); ++k) {
        if (k > 0) {
            kfact *= k;
            u = apply_alpha(1, u);
        }
        total += u.amplitude(Partition()) / Rat(kfact);
    }
    return total;
}

Rat fock_disconnected(const Partition& mu, int w, int degree_bound) {
    if (w < 0) throw std::invalid_argument("fock_disconnected: w < 0");
    const int d = mu.size();
    if (d > degree_bound)
        throw FeasibilityError("fock backend: degree " + std::to_string(d) +
                               " exceeds bound " + std::to_string(degree_bound));
    FockVector u = FockVector::vacuum();
    for (int part : mu.parts()) u = apply_alpha(-part, u);
    if (w > 0) {
        FockVector scaled;
        for (const auto& [lambda, c] : u.amplitudes()) {
            scaled.add(lambda, c * rpow(content_sum_maya(lambda), static_cast<unsigned long>(w)));
        }
        u = std::move(scaled);
    }
    Rat pairing = vacuum_exp_alpha1(u);
    return make_rat(class_size(mu), factorial(static_cast<unsigned>(d))) * pairing;
}

Rat fock_hurwitz(const HurwitzInstance& inst, int degree_bound) {
    return fock_disconnected(inst.profile, inst.branch_count, degree_bound);
}

std::string maya_ascii(const Partition& lambda, int radius) {
    std::string s;
    for (long c = radius - 1; c >= -radius; --c) {
        s += bead_at(lambda, c) ? '*' : '.';
        if (c == 0) s += '|';
    }
    return s;
}

}  // namespace hurwitz
