#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Immutable weakly decreasing sequence of positive integers. The empty
// partition (d = 0) is a valid value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }              // d
    int length() const { return static_cast<int>(parts_.size()); }  // n
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }

    // m[i] = number of parts equal to i, for i = 1..size (index 0 unused).
    std::vector<int> multiplicities() const;

    Partition conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Canonical order used everywhere a list of partitions of d is indexed:
// reverse-lexicographic, i.e. (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
bool canonical_before(const Partition& a, const Partition& b);

// All partitions of d in canonical order; cached, safe for concurrent use.
const std::vector<Partition>& partitions_of(int d);

// Index of mu within partitions_of(mu.size()).
int partition_index(const Partition& mu);

struct HookData {
    // hooks[i][j] for cell (i, j) of the Young diagram, 0-based.
    std::vector<std::vector<int>> hooks;
    Int dimension;  // f^lambda = d! / prod hooks
};

HookData hook_data(const Partition& lambda);

// prod_i m_i(mu)!
Int aut_order(const Partition& mu);

// Number of permutations in S_d of cycle type mu: d! / (prod i^{m_i} m_i!).
Int class_size(const Partition& mu);

// Centralizer order z_mu = prod i^{m_i} m_i! = d! / class_size(mu).
Int centralizer_order(const Partition& mu);

// Sum of cell contents j - i over the Young diagram.
long long content_sum(const Partition& lambda);

// Parses "2,1,1" and the exponent shorthand "2,1^2" / "1^4".
Partition parse_partition(const std::string& text);

// Comma-separated parts; the empty partition renders as "".
std::string format_partition(const Partition& mu);

}  // namespace hurwitz
