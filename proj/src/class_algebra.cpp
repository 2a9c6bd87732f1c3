#include "hurwitz/class_algebra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

ClassVector::ClassVector(int d)
    : d_(d), c_(partitions_of(d).size(), Rat(0)) {}

ClassVector ClassVector::basis(const Partition& mu) {
    ClassVector v(mu.size());
    v.c_[static_cast<size_t>(partition_index(mu))] = 1;
    return v;
}

const Rat& ClassVector::coefficient(const Partition& mu) const {
    if (mu.size() != d_) throw std::invalid_argument("coefficient: degree mismatch");
    return c_[static_cast<size_t>(partition_index(mu))];
}

Rat ClassVector::mass() const {
    const auto& parts = partitions_of(d_);
    Rat m(0);
    for (size_t i = 0; i < parts.size(); ++i) m += c_[i] * Rat(class_size(parts[i]));
    return m;
}

ClassVector& ClassVector::operator+=(const ClassVector& o) {
    if (o.d_ != d_) throw std::invalid_argument("ClassVector: degree mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

ClassVector& ClassVector::operator*=(const Rat& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

namespace {
std::mutex g_c2_mutex;
std::map<int, std::vector<std::vector<long long>>> g_c2_cache;
}  // namespace

const std::vector<std::vector<long long>>& c2_transition_table(int d) {
    std::lock_guard<std::mutex> lock(g_c2_mutex);
    auto it = g_c2_cache.find(d);
    if (it != g_c2_cache.end()) return it->second;

    const auto& parts = partitions_of(d);
    const auto ts = transpositions(d);
    std::vector<std::vector<long long>> table(parts.size(),
                                              std::vector<long long>(parts.size(), 0));
    for (size_t nu = 0; nu < parts.size(); ++nu) {
        Perm rep = class_representative(parts[nu]);
        for (const auto& [a, b] : ts) {
            // t * rep, i.e. swap the values a and b in the image table.
            Perm p = rep;
            for (auto& x : p) {
                if (x == a) x = b;
                else if (x == b) x = a;
            }
            ++table[nu][static_cast<size_t>(partition_index(cycle_type(p)))];
        }
    }
    return g_c2_cache.emplace(d, std::move(table)).first->second;
}

ClassVector multiply_by_C2(const ClassVector& v) {
    const auto& table = c2_transition_table(v.degree());
    ClassVector out(v.degree());
    for (size_t nu = 0; nu < table.size(); ++nu) {
        Rat acc(0);
        for (size_t mu = 0; mu < table.size(); ++mu) {
            if (table[nu][mu] == 0) continue;
            acc += v.at(static_cast<int>(mu)) * Rat(static_cast<long>(table[nu][mu]));
        }
        out.at(static_cast<int>(nu)) = acc;
    }
    return out;
}

Rat class_algebra_disconnected(const Partition& mu, int w) {
    if (w < 0) throw std::invalid_argument("class_algebra_disconnected: w < 0");
    int d = mu.size();
    ClassVector v = ClassVector::basis(mu);
    for (int i = 0; i < w; ++i) v = multiply_by_C2(v);
    Partition identity_class(std::vector<int>(static_cast<size_t>(d), 1));
    return v.coefficient(identity_class) / Rat(factorial(static_cast<unsigned>(d)));
}

Rat class_algebra_hurwitz(const HurwitzInstance& inst) {
    return class_algebra_disconnected(inst.profile, inst.branch_count);
}

}  // namespace hurwitz
