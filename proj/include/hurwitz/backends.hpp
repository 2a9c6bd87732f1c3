#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/brute_force.hpp"
#include "hurwitz/instance.hpp"
#include "hurwitz/monodromy.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class Backend { Brute, Character, ClassAlg, Graphs, Fock, Closed, Auto };

std::string backend_name(Backend b);
std::optional<Backend> parse_backend(const std::string& name);

struct ComputeOptions {
    BruteForceOptions brute;
    MonodromyBounds graphs;
    int character_bound = 20;
    int fock_bound = 20;
};

// Connected (or disconnected) Hurwitz number through the chosen backend;
// disconnected backends reach connected values through the series log.
// Throws FeasibilityError when the backend cannot run the instance.
Rat compute_hurwitz(const HurwitzInstance& inst, Backend backend, bool connected,
                    const ComputeOptions& opts = {});

// Connected value via character backend + series log; the default route.
Rat character_connected(const HurwitzInstance& inst);

struct CheckEntry {
    int genus;
    Partition profile;
    bool connected;
    std::vector<std::pair<std::string, Rat>> values;  // per applicable backend
    bool agree = true;
};

struct CheckReport {
    std::vector<CheckEntry> entries;
    bool all_agree = true;
    std::string first_divergence;
    std::string render() const;
};

// Runs every applicable backend on every (g <= gmax, mu |- d <= dmax)
// instance, both connected and disconnected, and compares exactly.
// corrupt_backend deliberately perturbs one backend (self-test hook).
CheckReport run_check_matrix(int dmax, int gmax, int threads = 0,
                             const std::string& corrupt_backend = "");

}  // namespace hurwitz
