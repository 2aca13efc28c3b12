#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gpprism
{
    /// A subset of [0, universe), stored as dense 64-bit words. Iteration is
    /// always in increasing vertex order, and ordering compares the sorted
    /// member lists lexicographically.
    class VertexSet
    {
        private:
            int _universe = 0;
            std::vector<std::uint64_t> _words;

            auto trim() -> void;

        public:
            VertexSet() = default;
            explicit VertexSet(int universe);

            static auto full(int universe) -> VertexSet;
            static auto of(int universe, std::initializer_list<int> members) -> VertexSet;
            static auto of(int universe, std::span<const int> members) -> VertexSet;
            static auto from_mask(int universe, std::uint64_t mask) -> VertexSet;

            auto universe() const -> int { return _universe; }
            auto contains(int v) const -> bool;
            auto insert(int v) -> void;
            auto erase(int v) -> void;

            auto size() const -> int;
            auto empty() const -> bool;
            auto first() const -> int;
            auto members() const -> std::vector<int>;

            /// Low 64 bits; only meaningful when universe <= 64.
            auto mask() const -> std::uint64_t;

            auto complement() const -> VertexSet;
            auto intersects(const VertexSet & other) const -> bool;
            auto is_subset_of(const VertexSet & other) const -> bool;

            auto operator|=(const VertexSet & other) -> VertexSet &;
            auto operator&=(const VertexSet & other) -> VertexSet &;
            auto operator-=(const VertexSet & other) -> VertexSet &;

            friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            auto operator==(const VertexSet & other) const -> bool = default;
            auto operator<(const VertexSet & other) const -> bool;

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    std::uint64_t bits = _words[w];
                    while (bits) {
                        int b = std::countr_zero(bits);
                        bits &= bits - 1;
                        f(int(w * 64 + b));
                    }
                }
            }
    };

    /// "{0,3,5}"
    auto to_string(const VertexSet & s) -> std::string;
}
