#pragma once

#include <gpprism/general_position.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gpprism
{
    /// A 3-uniform hypergraph of forbidden triples on at most 64 vertices.
    /// For every pair (a, b) it keeps the mask of vertices c that complete a
    /// forbidden triple, so feasibility after choosing a vertex is one mask
    /// operation per already chosen vertex.
    class TripleSystem
    {
        private:
            int _n = 0;
            std::vector<Triple> _triples;
            std::vector<std::uint64_t> _completing;
            std::vector<int> _degree;

        public:
            /// Throws GraphTooLarge when n > 64.
            TripleSystem(int n, std::vector<Triple> triples);

            /// Bad triples of g (geodesics of length <= max_len when given).
            static auto geodesic(const Graph & g, const DistanceMatrix & d, std::optional<int> max_len) -> TripleSystem;

            /// Triples inducing a path on three vertices. Sets avoiding them
            /// induce disjoint unions of cliques.
            static auto induced_paths(const Graph & g) -> TripleSystem;

            auto size() const -> int { return _n; }
            auto triples() const -> const std::vector<Triple> & { return _triples; }
            auto degree(int v) const -> int { return _degree[v]; }
            auto completing(int a, int b) const -> std::uint64_t { return _completing[a * _n + b]; }

            auto is_free(std::uint64_t set) const -> bool;
    };
}
