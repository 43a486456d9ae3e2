#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minors/bitset.hpp"
#include "minors/graph.hpp"

namespace minors {

// Branch sets of a minor model, indexed by the vertices of H, as subsets of
// the host's vertex set.
using BranchSets = std::vector<Bitset>;

// Certification check, deliberately written against the plain Graph API and
// shared by nothing in the search code path. Reports the first violated
// condition, or nullopt for a valid model.
inline std::optional<std::string> model_violation(const BranchSets& model, const Graph& h, const Graph& g) {
    if (static_cast<int>(model.size()) != h.vertex_count())
        return "model has " + std::to_string(model.size()) + " branch sets for |V(H)| = " +
               std::to_string(h.vertex_count());
    std::size_t n = static_cast<std::size_t>(g.vertex_count());
    Bitset seen(n);
    for (std::size_t v = 0; v < model.size(); ++v) {
        const Bitset& x = model[v];
        if (x.size() != n) return "branch set " + std::to_string(v) + " not over V(G)";
        if (!x.any()) return "branch set " + std::to_string(v) + " empty";
        if (x.intersects(seen)) return "branch set " + std::to_string(v) + " overlaps an earlier one";
        seen |= x;
        if (!connected_in(g, x)) return "branch set " + std::to_string(v) + " not connected";
    }
    for (auto [v, w] : h.edges()) {
        bool witnessed = false;
        model[static_cast<std::size_t>(v)].for_each([&](std::size_t u) {
            if (!witnessed && g.neighbors(static_cast<int>(u)).intersects(model[static_cast<std::size_t>(w)]))
                witnessed = true;
        });
        if (!witnessed)
            return "edge {" + std::to_string(v) + "," + std::to_string(w) + "} of H has no witness";
    }
    return std::nullopt;
}

inline bool validate_model(const BranchSets& model, const Graph& h, const Graph& g) {
    return !model_violation(model, h, g).has_value();
}

} // namespace minors
