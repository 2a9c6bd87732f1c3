#include "hurwitz/monodromy.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Terminal strand weights over w: (2, 1^{d-2}), or (2) when d = 2.
std::vector<int> terminal_weights(int d) {
    std::vector<int> t{2};
    t.insert(t.end(), static_cast<size_t>(d - 2), 1);
    return t;
}

struct Enumerator {
    int d, n, total_events, total_joins, total_cuts;
    std::vector<int> terminal;  // sorted descending

    std::vector<StrandInfo> strands;
    std::vector<GraphEvent> events;
    std::vector<int> live;  // strand ids, ascending
    std::vector<int> comp;  // per-strand component label (DSU with rollback)
    std::vector<std::pair<int, int>> dsu_undo;
    int joins_used = 0, cuts_used = 0;
    long long step_product = 1;

    struct FineAgg {
        long long histories = 0;
        Int product_sum = 0;
        std::vector<GraphEvent> events;
        std::vector<StrandInfo> strands;
    };
    std::map<std::string, FineAgg> fine;

    explicit Enumerator(const HurwitzInstance& inst)
        : d(inst.degree), n(inst.profile.length()), total_events(inst.branch_count - 1) {
        total_joins = inst.genus + n - 1;
        total_cuts = total_events - total_joins;
        if (d >= 2) terminal = terminal_weights(d);
        for (int i = 0; i < n; ++i) {
            strands.push_back(StrandInfo{inst.profile.part(i), -1, -1, true});
            live.push_back(i);
            comp.push_back(i);
        }
    }

    int find(int c) {
        while (comp[static_cast<size_t>(c)] != c) c = comp[static_cast<size_t>(c)];
        return c;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        dsu_undo.emplace_back(b, comp[static_cast<size_t>(b)]);
        comp[static_cast<size_t>(b)] = a;
    }
    void rollback(size_t mark) {
        while (dsu_undo.size() > mark) {
            comp[static_cast<size_t>(dsu_undo.back().first)] = dsu_undo.back().second;
            dsu_undo.pop_back();
        }
    }
    int live_components() {
        int count = 0;
        std::vector<int> roots;
        for (int s : live) {
            int r = find(comp[static_cast<size_t>(s)]);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
                roots.push_back(r);
                ++count;
            }
        }
        return count;
    }

    bool prune() {
        int joins_left = total_joins - joins_used;
        int cuts_left = total_cuts - cuts_used;
        if (joins_left < 0 || cuts_left < 0) return true;
        if (live_components() - 1 > joins_left) return true;
        if (joins_left == 0) {
            // Remaining cuts can only split; every strand must reach parts
            // of size at most 2.
            int min_parts = 0;
            for (int s : live) min_parts += (strands[static_cast<size_t>(s)].weight + 1) / 2;
            if (min_parts > d - 1) return true;
        }
        return false;
    }

    void finish() {
        std::vector<int> weights;
        for (int s : live) weights.push_back(strands[static_cast<size_t>(s)].weight);
        std::sort(weights.rbegin(), weights.rend());
        if (weights != terminal) return;
        if (live_components() != 1) return;
        std::string key = fine_key();
        FineAgg& agg = fine[key];
        if (agg.histories == 0) {
            agg.events = events;
            agg.strands = strands;
        }
        ++agg.histories;
        agg.product_sum += Int(static_cast<long>(step_product));
    }

    // Signature of a strand: (birth event, death event, weight). Events are
    // pinned to positions, so strands with equal signatures are parallel and
    // interchangeable; leaves are interchangeable within equal weight.
    std::string fine_key() const {
        auto sig = [&](int s) {
            const StrandInfo& si = strands[static_cast<size_t>(s)];
            std::ostringstream os;
            os << (si.leaf ? -1 : si.birth) << ':' << si.death << ':' << si.weight;
            return os.str();
        };
        std::ostringstream os;
        for (const auto& e : events) {
            if (e.kind == EventKind::Cut) {
                std::string a = sig(e.out1), b = sig(e.out2);
                if (b < a) std::swap(a, b);
                os << "C[" << sig(e.in1) << "->" << a << "," << b << "]";
            } else {
                std::string a = sig(e.in1), b = sig(e.in2);
                if (b < a) std::swap(a, b);
                os << "J[" << a << "," << b << "->" << sig(e.out1) << "]";
            }
        }
        return os.str();
    }

    void dfs() {
        if (prune()) return;
        if (static_cast<int>(events.size()) == total_events) {
            finish();
            return;
        }
        const int event_idx = static_cast<int>(events.size());
        // Joins over unordered pairs of live strands.
        if (joins_used < total_joins) {
            for (size_t i = 0; i < live.size(); ++i) {
                for (size_t j = i + 1; j < live.size(); ++j) {
                    int a = live[i], b = live[j];
                    int wa = strands[static_cast<size_t>(a)].weight;
                    int wb = strands[static_cast<size_t>(b)].weight;
                    int child = static_cast<int>(strands.size());

                    strands.push_back(StrandInfo{wa + wb, event_idx, -1, false});
                    strands[static_cast<size_t>(a)].death = event_idx;
                    strands[static_cast<size_t>(b)].death = event_idx;
                    comp.push_back(comp[static_cast<size_t>(a)]);
                    size_t mark = dsu_undo.size();
                    unite(comp[static_cast<size_t>(a)], comp[static_cast<size_t>(b)]);
                    events.push_back(GraphEvent{EventKind::Join, a, b, child, -1});
                    std::vector<int> saved_live = live;
                    live.erase(live.begin() + static_cast<long>(j));
                    live.erase(live.begin() + static_cast<long>(i));
                    live.push_back(child);
                    ++joins_used;
                    step_product *= static_cast<long long>(wa) * wb;

                    dfs();

                    step_product /= static_cast<long long>(wa) * wb;
                    --joins_used;
                    live = std::move(saved_live);
                    events.pop_back();
                    rollback(mark);
                    comp.pop_back();
                    strands[static_cast<size_t>(a)].death = -1;
                    strands[static_cast<size_t>(b)].death = -1;
                    strands.pop_back();
                }
            }
        }
        // Cuts over live strands of weight >= 2, unordered splits.
        if (cuts_used < total_cuts) {
            for (size_t i = 0; i < live.size(); ++i) {
                int s = live[i];
                int w = strands[static_cast<size_t>(s)].weight;
                for (int a = 1; 2 * a <= w; ++a) {
                    int b = w - a;
                    long long ways = (a == b) ? w / 2 : w;
                    int c1 = static_cast<int>(strands.size());
                    int c2 = c1 + 1;

                    strands.push_back(StrandInfo{a, event_idx, -1, false});
                    strands.push_back(StrandInfo{b, event_idx, -1, false});
                    strands[static_cast<size_t>(s)].death = event_idx;
                    comp.push_back(comp[static_cast<size_t>(s)]);
                    comp.push_back(comp[static_cast<size_t>(s)]);
                    events.push_back(GraphEvent{EventKind::Cut, s, -1, c1, c2});
                    std::vector<int> saved_live = live;
                    live.erase(live.begin() + static_cast<long>(i));
                    live.push_back(c1);
                    live.push_back(c2);
                    ++cuts_used;
                    step_product *= ways;

                    dfs();

                    step_product /= ways;
                    --cuts_used;
                    live = std::move(saved_live);
                    events.pop_back();
                    comp.pop_back();
                    comp.pop_back();
                    strands[static_cast<size_t>(s)].death = -1;
                    strands.pop_back();
                    strands.pop_back();
                }
            }
        }
    }
};

// Deterministic canonical string of the underlying weighted multigraph with
// unlabeled 1-valent ends; used to group position-rigid classes the way the
// paper's table does.
struct AbstractGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, weight)

    std::string canonical() const {
        std::vector<int> color(static_cast<size_t>(n), 0);
        refine(color);
        return canonical_search(color);
    }

    void refine(std::vector<int>& color) const {
        for (int round = 0; round < n; ++round) {
            std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> sig_id;
            std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sigs(
                static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) {
                std::vector<std::pair<int, int>> nb;
                for (auto [u, w] : adj[static_cast<size_t>(v)])
                    nb.emplace_back(w, color[static_cast<size_t>(u)]);
                std::sort(nb.begin(), nb.end());
                sigs[static_cast<size_t>(v)] = {color[static_cast<size_t>(v)], std::move(nb)};
            }
            for (const auto& s : sigs) sig_id.emplace(s, 0);
            int counter = 0;
            for (auto& [s, id] : sig_id) id = counter++;  // ids in signature order
            std::vector<int> next(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) next[static_cast<size_t>(v)] = sig_id[sigs[static_cast<size_t>(v)]];
            if (next == color) break;
            color = std::move(next);
        }
    }

    std::string canonical_search(const std::vector<int>& color) const {
        // Find the smallest color class with more than one vertex.
        std::map<int, std::vector<int>> cells;
        for (int v = 0; v < n; ++v) cells[color[static_cast<size_t>(v)]].push_back(v);
        const std::vector<int>* target = nullptr;
        for (const auto& [c, vs] : cells) {
            if (vs.size() > 1 && (!target || vs.size() < target->size())) target = &vs;
        }
        if (!target) return serialize(color);
        std::string best;
        for (int v : *target) {
            std::vector<int> c2 = color;
            c2[static_cast<size_t>(v)] = n + 1;  // individualize
            refine(c2);
            std::string s = canonical_search(c2);
            if (best.empty() || s < best) best = s;
        }
        return best;
    }

    std::string serialize(const std::vector<int>& color) const {
        // Colors are discrete here; order vertices by color.
        std::vector<int> order(static_cast<size_t>(n));
        std::vector<std::pair<int, int>> by_color;
        for (int v = 0; v < n; ++v) by_color.emplace_back(color[static_cast<size_t>(v)], v);
        std::sort(by_color.begin(), by_color.end());
        for (int pos = 0; pos < n; ++pos) order[static_cast<size_t>(by_color[static_cast<size_t>(pos)].second)] = pos;
        std::vector<std::array<int, 3>> edges;
        for (int v = 0; v < n; ++v) {
            for (auto [u, w] : adj[static_cast<size_t>(v)]) {
                int a = order[static_cast<size_t>(v)], b = order[static_cast<size_t>(u)];
                if (a <= b) edges.push_back({a, b, w});
            }
        }
        std::sort(edges.begin(), edges.end());
        std::ostringstream os;
        for (const auto& e : edges) os << e[0] << '-' << e[1] << ':' << e[2] << ';';
        return os.str();
    }
};

AbstractGraph abstract_graph(const std::vector<GraphEvent>& events,
                             const std::vector<StrandInfo>& strands) {
    AbstractGraph g;
    int event_count = static_cast<int>(events.size());
    std::vector<int> strand_u, strand_v;
    int next = event_count;
    for (const auto& s : strands) {
        strand_u.push_back(s.leaf ? next++ : s.birth);
        strand_v.push_back(s.death >= 0 ? s.death : next++);
    }
    g.n = next;
    g.adj.resize(static_cast<size_t>(g.n));
    for (size_t i = 0; i < strands.size(); ++i) {
        int u = strand_u[i], v = strand_v[i], w = strands[i].weight;
        g.adj[static_cast<size_t>(u)].emplace_back(v, w);
        if (u != v) g.adj[static_cast<size_t>(v)].emplace_back(u, w);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

void analyze(MonodromyGraph& mg) {
    mg.interior_product = 1;
    for (const auto& s : mg.strands)
        if (s.interior()) mg.interior_product *= s.weight;

    mg.wiener_count = 0;
    for (size_t i = 0; i < mg.strands.size(); ++i) {
        for (size_t j = i + 1; j < mg.strands.size(); ++j) {
            const auto& a = mg.strands[i];
            const auto& b = mg.strands[j];
            if (a.interior() && b.interior() && a.birth == b.birth && a.death == b.death &&
                a.weight == b.weight &&
                mg.events[static_cast<size_t>(a.birth)].kind == EventKind::Cut)
                ++mg.wiener_count;
        }
    }
    mg.fork_count = 0;
    for (const auto& e : mg.events) {
        if (e.kind == EventKind::Join) {
            const auto& a = mg.strands[static_cast<size_t>(e.in1)];
            const auto& b = mg.strands[static_cast<size_t>(e.in2)];
            if (a.leaf && b.leaf && a.weight == b.weight) ++mg.fork_count;
        } else {
            const auto& a = mg.strands[static_cast<size_t>(e.out1)];
            const auto& b = mg.strands[static_cast<size_t>(e.out2)];
            if (a.death < 0 && b.death < 0 && a.weight == b.weight) ++mg.fork_count;
        }
    }
}

}  // namespace

std::vector<MonodromyGraph> enumerate_graphs(const HurwitzInstance& inst,
                                             const MonodromyBounds& bounds) {
    if (inst.branch_count < 1)
        throw FeasibilityError("monodromy graphs require w >= 1");
    if (inst.degree > bounds.max_degree || inst.branch_count > bounds.max_branch)
        throw FeasibilityError("monodromy enumeration bound exceeded: d=" +
                               std::to_string(inst.degree) +
                               " w=" + std::to_string(inst.branch_count));
    Enumerator en(inst);
    if (inst.degree >= 2 && en.total_joins >= 0 && en.total_cuts >= 0) en.dfs();

    const Rat z = Rat(centralizer_order(inst.profile));
    // Group position-rigid classes by the underlying abstract graph.
    std::map<std::string, MonodromyGraph> coarse;
    for (const auto& [key, agg] : en.fine) {
        std::string abs_key = abstract_graph(agg.events, agg.strands).canonical();
        auto it = coarse.find(abs_key);
        if (it == coarse.end()) {
            MonodromyGraph mg;
            mg.profile = inst.profile;
            mg.genus = inst.genus;
            mg.branch_count = inst.branch_count;
            mg.events = agg.events;
            mg.strands = agg.strands;
            mg.fine_class_count = 1;
            mg.history_count = agg.histories;
            mg.contribution = Rat(agg.product_sum) / z;
            analyze(mg);
            coarse.emplace(abs_key, std::move(mg));
        } else {
            it->second.fine_class_count += 1;
            it->second.history_count += agg.histories;
            it->second.contribution += Rat(agg.product_sum) / z;
        }
    }
    std::vector<MonodromyGraph> out;
    for (auto& [k, mg] : coarse) out.push_back(std::move(mg));
    return out;
}

Rat graph_weight(const MonodromyGraph& g) {
    return make_rat(g.interior_product, ipow(Int(2), static_cast<unsigned long>(
                                                         g.wiener_count + g.fork_count)));
}

Rat monodromy_hurwitz(const HurwitzInstance& inst, const MonodromyBounds& bounds) {
    Rat total(0);
    for (const auto& g : enumerate_graphs(inst, bounds)) total += g.contribution;
    return total;
}

namespace {

void dot_body(const MonodromyGraph& g, const std::string& prefix, const std::string& indent,
              std::ostringstream& os) {
    std::vector<std::string> birth_node(g.strands.size()), death_node(g.strands.size());
    int leaf_idx = 0, end_idx = 0;
    for (size_t s = 0; s < g.strands.size(); ++s) {
        const auto& si = g.strands[s];
        birth_node[s] = si.leaf ? prefix + "inf" + std::to_string(leaf_idx++)
                                : prefix + "ev" + std::to_string(si.birth);
        death_node[s] = si.death >= 0 ? prefix + "ev" + std::to_string(si.death)
                                      : prefix + "end" + std::to_string(end_idx++);
    }
    for (int i = 0; i < leaf_idx; ++i)
        os << indent << prefix << "inf" << i << " [shape=plaintext, label=\"inf\"];\n";
    for (size_t e = 0; e < g.events.size(); ++e)
        os << indent << prefix << "ev" << e << " [shape=point, xlabel=\"" << (e + 1)
           << "\"];\n";
    for (int i = 0; i < end_idx; ++i)
        os << indent << prefix << "end" << i << " [shape=plaintext, label=\"w\"];\n";
    for (size_t s = 0; s < g.strands.size(); ++s)
        os << indent << birth_node[s] << " -> " << death_node[s] << " [label=\""
           << g.strands[s].weight << "\"];\n";
}

}  // namespace

std::string export_dot(const MonodromyGraph& g) {
    std::ostringstream os;
    os << "digraph monodromy {\n  rankdir=LR;\n";
    dot_body(g, "", "  ", os);
    os << "}\n";
    return os.str();
}

std::string export_dot_combined(const std::vector<MonodromyGraph>& graphs) {
    std::ostringstream os;
    os << "digraph monodromy_classes {\n  rankdir=LR;\n";
    for (size_t i = 0; i < graphs.size(); ++i) {
        os << "  subgraph cluster_" << i << " {\n    label=\"class " << i
           << " (contribution " << rat_to_string(graphs[i].contribution) << ")\";\n";
        dot_body(graphs[i], "g" + std::to_string(i) + "_", "    ", os);
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hurwitz
