#include "selorder/building.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "selorder/error.hpp"

namespace selorder::building {

namespace {

int mod_n(std::int64_t x, int n)
{
    auto r = static_cast<int>(x % n);
    return r < 0 ? r + n : r;
}

void require_unramified(SplittingType const & s)
{
    if (!s.is_unramified())
        throw HypothesisError("hypothesis violation: prime ramified in L (" + s.to_string() + ")");
}

} // namespace

/* {{{ SplittingType */

SplittingType::SplittingType(int n, std::vector<LocalFactor> factors)
    : n_(n)
    , factors_(std::move(factors))
{
    if (n_ < 1 || factors_.empty())
        throw DomainError("splitting type needs n >= 1 and at least one factor");
    int sum = 0;
    for (auto const & [e, f] : factors_) {
        if (e < 1 || f < 1)
            throw DomainError("ramification indices and inertia degrees must be >= 1");
        sum += e * f;
    }
    if (sum != n_)
        throw DomainError("splitting type " + to_string() + " does not sum to n = " + std::to_string(n_));
}

SplittingType SplittingType::unramified(std::span<int const> inertia_degrees)
{
    std::vector<LocalFactor> v;
    int n = 0;
    for (int f : inertia_degrees) {
        v.push_back({1, f});
        n += f;
    }
    return SplittingType(n, std::move(v));
}

SplittingType SplittingType::unramified(std::initializer_list<int> inertia_degrees)
{
    return unramified(std::span<int const>(inertia_degrees.begin(), inertia_degrees.size()));
}

std::vector<int> SplittingType::inertia_degrees() const
{
    std::vector<int> r;
    for (auto const & x : factors_)
        r.push_back(x.f);
    return r;
}

bool SplittingType::is_unramified() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](auto const & x) { return x.e == 1; });
}

bool SplittingType::splits_completely() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](auto const & x) { return x.e == 1 && x.f == 1; });
}

bool SplittingType::has_degree_one_factor() const
{
    return std::any_of(factors_.begin(), factors_.end(), [](auto const & x) { return x.e == 1 && x.f == 1; });
}

SplittingType SplittingType::sorted() const
{
    auto v = factors_;
    std::sort(v.begin(), v.end(), [](LocalFactor const & a, LocalFactor const & b) {
        return a.f != b.f ? a.f < b.f : a.e < b.e;
    });
    return SplittingType(n_, std::move(v));
}

std::string SplittingType::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < factors_.size(); ++i)
        os << (i ? "," : "") << "(" << factors_[i].e << "," << factors_[i].f << ")";
    os << "]";
    return os.str();
}

/* }}} */

HomothetyClass canonicalize(std::span<std::int64_t const> raw)
{
    if (raw.empty())
        throw DomainError("homothety class needs at least one coordinate");
    HomothetyClass v;
    auto const m = *std::min_element(raw.begin(), raw.end());
    v.a_.reserve(raw.size());
    for (auto x : raw)
        v.a_.push_back(x - m);
    return v;
}

HomothetyClass canonicalize(std::initializer_list<std::int64_t> raw)
{
    return canonicalize(std::span<std::int64_t const>(raw.begin(), raw.size()));
}

HomothetyClass block_class(int n, int k, std::int64_t level)
{
    if (k < 0 || k > n)
        throw DomainError("block size out of range");
    std::vector<std::int64_t> raw(static_cast<size_t>(n), 0);
    std::fill(raw.begin(), raw.begin() + k, level);
    return canonicalize(raw);
}

std::string HomothetyClass::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream & operator<<(std::ostream & os, HomothetyClass const & v)
{
    os << "[";
    for (int i = 0; i < v.n(); ++i)
        os << (i ? "," : "") << v[static_cast<size_t>(i)];
    return os << "]";
}

int vertex_type(HomothetyClass const & v)
{
    std::int64_t s = std::accumulate(v.coords().begin(), v.coords().end(), std::int64_t(0));
    return mod_n(s, v.n());
}

int type_distance(HomothetyClass const & v1, HomothetyClass const & v2)
{
    if (v1.n() != v2.n())
        throw DomainError("type distance between vertices of different dimension");
    return mod_n(vertex_type(v2) - vertex_type(v1), v1.n());
}

bool contains_ring_of_integers(HomothetyClass const & v, SplittingType const & s)
{
    require_unramified(s);
    if (v.n() != s.n())
        throw DomainError("vertex dimension " + std::to_string(v.n()) + " differs from n = " + std::to_string(s.n()));
    size_t pos = 0;
    for (int f : s.inertia_degrees()) {
        for (int j = 1; j < f; ++j)
            if (v[pos + static_cast<size_t>(j)] != v[pos])
                return false;
        pos += static_cast<size_t>(f);
    }
    return true;
}

std::vector<int> admissible_types(SplittingType const & s)
{
    require_unramified(s);
    int d = 0;
    for (int f : s.inertia_degrees())
        d = std::gcd(d, f);
    std::vector<int> types;
    for (int t = 0; t < s.n(); t += d)
        types.push_back(t);
    return types;
}

std::vector<HomothetyClass> chamber_vertices(SplittingType const & s)
{
    require_unramified(s);
    std::vector<HomothetyClass> out;
    int partial = 0;
    auto const fs = s.inertia_degrees();
    for (size_t i = 0; i < fs.size(); ++i) {
        out.push_back(block_class(s.n(), partial, 1));
        partial += fs[i];
    }
    return out;
}

std::vector<HomothetyClass> enumerate_containing_vertices(SplittingType const & s, int bound)
{
    require_unramified(s);
    if (bound < 1)
        throw DomainError("enumeration bound must be positive");
    auto const fs = s.inertia_degrees();
    size_t const g = fs.size();
    std::vector<std::int64_t> level(g, 0);
    std::vector<HomothetyClass> out;
    for (;;) {
        if (*std::min_element(level.begin(), level.end()) == 0) {
            std::vector<std::int64_t> raw;
            raw.reserve(static_cast<size_t>(s.n()));
            for (size_t i = 0; i < g; ++i)
                raw.insert(raw.end(), static_cast<size_t>(fs[i]), level[i]);
            out.push_back(canonicalize(raw));
        }
        size_t i = 0;
        for (; i < g; ++i) {
            if (++level[i] < bound)
                break;
            level[i] = 0;
        }
        if (i == g)
            break;
    }
    return out;
}

std::vector<HomothetyClass> enumerate_containing_vertices(SplittingType const & s)
{
    return enumerate_containing_vertices(s, s.n());
}

std::vector<std::vector<int>> compositions(int n)
{
    std::vector<std::vector<int>> out;
    if (n < 1)
        return out;
    /* bit i of mask set: cut after position i+1 */
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(std::move(parts));
    }
    return out;
}

} // namespace selorder::building
