#pragma once

#include <string>
#include <vector>

#include "hurwitz/instance.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class EventKind { Cut, Join };

// One trivalent vertex of a monodromy graph, at branch point position
// 1 + its index in the event sequence.
struct GraphEvent {
    EventKind kind;
    int in1 = -1, in2 = -1;    // consumed strand ids; in2 only for joins
    int out1 = -1, out2 = -1;  // produced strand ids; out2 only for cuts
};

struct StrandInfo {
    int weight = 0;
    int birth = -1;  // event index, or -1 for a leaf over infinity
    int death = -1;  // event index, or -1 when the strand runs out to w
    bool leaf = false;
    bool interior() const { return !leaf && death >= 0; }
};

// One isomorphism class of monodromy graphs, grouped by the underlying
// weighted graph with branch-point positions forgotten. fine_class_count is
// the number of position-rigid classes merged here; contribution is their
// summed weight, so that the contributions of all classes add up to h_{g,mu}.
struct MonodromyGraph {
    Partition profile;
    int genus = 0;
    int branch_count = 0;
    std::vector<GraphEvent> events;
    std::vector<StrandInfo> strands;
    Int interior_product = 1;
    int wiener_count = 0;
    int fork_count = 0;
    long long fine_class_count = 0;
    long long history_count = 0;
    Rat contribution;
};

struct MonodromyBounds {
    int max_degree = 8;
    int max_branch = 10;
};

// One representative per isomorphism class, deterministically ordered.
// Requires w >= 1 and the instance within bounds.
std::vector<MonodromyGraph> enumerate_graphs(const HurwitzInstance& inst,
                                             const MonodromyBounds& bounds = {});

// prod of interior edge weights over 2^(#wieners + #balanced forks),
// evaluated on the stored representative.
Rat graph_weight(const MonodromyGraph& g);

// Weighted sum over all classes; exact for every instance, including the
// eventless w = 1 case where the automorphism convention degenerates.
Rat monodromy_hurwitz(const HurwitzInstance& inst, const MonodromyBounds& bounds = {});

std::string export_dot(const MonodromyGraph& g);
std::string export_dot_combined(const std::vector<MonodromyGraph>& graphs);

}  // namespace hurwitz
