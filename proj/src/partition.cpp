#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(static_cast<size_t>(size_) + 1, 0);
    for (int p : parts_) ++m[static_cast<size_t>(p)];
    return m;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
    }
    return Partition(std::move(t));
}

bool canonical_before(const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        gen_partitions(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

std::mutex g_partitions_mutex;
std::map<int, std::vector<Partition>> g_partitions_cache;

}  // namespace

const std::vector<Partition>& partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: d must be >= 0");
    std::lock_guard<std::mutex> lock(g_partitions_mutex);
    auto it = g_partitions_cache.find(d);
    if (it != g_partitions_cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(d, d, stack, out);
    return g_partitions_cache.emplace(d, std::move(out)).first->second;
}

int partition_index(const Partition& mu) {
    const auto& all = partitions_of(mu.size());
    auto it = std::lower_bound(all.begin(), all.end(), mu, canonical_before);
    return static_cast<int>(it - all.begin());
}

HookData hook_data(const Partition& lambda) {
    HookData h;
    if (lambda.empty()) {
        h.dimension = 1;
        return h;
    }
    const Partition conj = lambda.conjugate();
    h.hooks.resize(static_cast<size_t>(lambda.length()));
    Int prod = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        h.hooks[static_cast<size_t>(i)].resize(static_cast<size_t>(lambda.part(i)));
        for (int j = 0; j < lambda.part(i); ++j) {
            int hook = lambda.part(i) - (j + 1) + conj.part(j) - (i + 1) + 1;
            h.hooks[static_cast<size_t>(i)][static_cast<size_t>(j)] = hook;
            prod *= hook;
        }
    }
    Int fact = factorial(static_cast<unsigned>(lambda.size()));
    h.dimension = fact / prod;
    if (h.dimension * prod != fact) throw std::logic_error("hook product does not divide d!");
    return h;
}

Int aut_order(const Partition& mu) {
    Int a = 1;
    auto m = mu.multiplicities();
    for (size_t i = 1; i < m.size(); ++i) a *= factorial(static_cast<unsigned>(m[i]));
    return a;
}

Int centralizer_order(const Partition& mu) {
    Int z = 1;
    auto m = mu.multiplicities();
    for (size_t i = 1; i < m.size(); ++i) {
        z *= ipow(Int(static_cast<long>(i)), static_cast<unsigned long>(m[i]));
        z *= factorial(static_cast<unsigned>(m[i]));
    }
    return z;
}

Int class_size(const Partition& mu) {
    return factorial(static_cast<unsigned>(mu.size())) / centralizer_order(mu);
}

long long content_sum(const Partition& lambda) {
    long long s = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) s += j - i;
    }
    return s;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty part in partition: " + text);
        size_t caret = tok.find('^');
        int value, count = 1;
        try {
            if (caret == std::string::npos) {
                value = std::stoi(tok);
            } else {
                value = std::stoi(tok.substr(0, caret));
                count = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition syntax: " + text);
        }
        if (value <= 0 || count <= 0) throw std::invalid_argument("bad partition syntax: " + text);
        for (int k = 0; k < count; ++k) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& mu) {
    std::string s;
    for (int i = 0; i < mu.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(mu.part(i));
    }
    return s;
}

}  // namespace hurwitz
