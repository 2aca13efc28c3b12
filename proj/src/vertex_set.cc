#include <gpprism/vertex_set.hh>
#include <gpprism/error.hh>

#include <algorithm>

using namespace gpprism;

VertexSet::VertexSet(int universe) :
    _universe(universe),
    _words((universe + 63) / 64, 0)
{
}

auto VertexSet::trim() -> void
{
    if (_universe % 64 != 0 && ! _words.empty())
        _words.back() &= (std::uint64_t{1} << (_universe % 64)) - 1;
}

auto VertexSet::full(int universe) -> VertexSet
{
    VertexSet result(universe);
    std::fill(result._words.begin(), result._words.end(), ~std::uint64_t{0});
    result.trim();
    return result;
}

auto VertexSet::of(int universe, std::initializer_list<int> members) -> VertexSet
{
    return of(universe, std::span<const int>(members.begin(), members.size()));
}

auto VertexSet::of(int universe, std::span<const int> members) -> VertexSet
{
    VertexSet result(universe);
    for (int v : members) {
        if (v < 0 || v >= universe)
            fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " outside [0," + std::to_string(universe) + ")");
        result.insert(v);
    }
    return result;
}

auto VertexSet::from_mask(int universe, std::uint64_t mask) -> VertexSet
{
    VertexSet result(universe);
    if (! result._words.empty())
        result._words[0] = mask;
    result.trim();
    return result;
}

auto VertexSet::contains(int v) const -> bool
{
    return v >= 0 && v < _universe && (_words[v / 64] >> (v % 64)) & 1;
}

auto VertexSet::insert(int v) -> void
{
    _words[v / 64] |= std::uint64_t{1} << (v % 64);
}

auto VertexSet::erase(int v) -> void
{
    _words[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

auto VertexSet::size() const -> int
{
    int result = 0;
    for (auto w : _words)
        result += std::popcount(w);
    return result;
}

auto VertexSet::empty() const -> bool
{
    return std::all_of(_words.begin(), _words.end(), [] (auto w) { return w == 0; });
}

auto VertexSet::first() const -> int
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        if (_words[w])
            return int(w * 64 + std::countr_zero(_words[w]));
    return -1;
}

auto VertexSet::members() const -> std::vector<int>
{
    std::vector<int> result;
    for_each([&] (int v) { result.push_back(v); });
    return result;
}

auto VertexSet::mask() const -> std::uint64_t
{
    return _words.empty() ? 0 : _words[0];
}

auto VertexSet::complement() const -> VertexSet
{
    VertexSet result(*this);
    for (auto & w : result._words)
        w = ~w;
    result.trim();
    return result;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0 ; w < std::min(_words.size(), other._words.size()) ; ++w)
        if (_words[w] & other._words[w])
            return true;
    return false;
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w) {
        auto o = w < other._words.size() ? other._words[w] : 0;
        if (_words[w] & ~o)
            return false;
    }
    return true;
}

auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < std::min(_words.size(), other._words.size()) ; ++w)
        _words[w] |= other._words[w];
    return *this;
}

auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        _words[w] &= w < other._words.size() ? other._words[w] : 0;
    return *this;
}

auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < std::min(_words.size(), other._words.size()) ; ++w)
        _words[w] &= ~other._words[w];
    return *this;
}

auto VertexSet::operator<(const VertexSet & other) const -> bool
{
    auto a = members(), b = other.members();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

auto gpprism::to_string(const VertexSet & s) -> std::string
{
    std::string result = "{";
    bool first = true;
    s.for_each([&] (int v) {
        if (! first)
            result += ",";
        first = false;
        result += std::to_string(v);
    });
    return result + "}";
}
