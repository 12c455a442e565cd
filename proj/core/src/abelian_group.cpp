#include "selorder/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "selorder/error.hpp"

namespace selorder {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::vector<Elem>> table, Elem identity)
    : table_(std::move(table))
    , id_(identity)
{
    std::size_t const n = table_.size();
    if (n == 0 || id_ >= n)
        throw DomainError("group table must be nonempty and contain the identity");
    for (auto const & row : table_) {
        if (row.size() != n)
            throw DomainError("group table must be square");
        for (Elem x : row)
            if (x >= n)
                throw DomainError("group table is not closed");
    }
    inv_.assign(n, n);
    for (Elem a = 0; a < n; ++a) {
        if (table_[id_][a] != a)
            throw DomainError("group table identity is wrong");
        for (Elem b = 0; b < n; ++b) {
            if (table_[a][b] != table_[b][a])
                throw DomainError("group table is not commutative");
            if (table_[a][b] == id_)
                inv_[a] = b;
        }
        if (inv_[a] == n)
            throw DomainError("group element without inverse");
    }
    order_.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
        std::size_t k = 1;
        for (Elem x = a; x != id_; x = table_[x][a]) {
            if (++k > n + 1)
                throw DomainError("group element of unbounded order");
        }
        order_[a] = k;
    }
}

FiniteAbelianGroup FiniteAbelianGroup::trivial()
{
    return cyclic(1);
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::size_t n)
{
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return FiniteAbelianGroup(std::move(t), 0);
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::power(Elem a, std::int64_t k) const
{
    auto const o = static_cast<std::int64_t>(order_[a]);
    k %= o;
    if (k < 0)
        k += o;
    Elem r = id_;
    for (std::int64_t i = 0; i < k; ++i)
        r = table_[r][a];
    return r;
}

std::size_t FiniteAbelianGroup::exponent() const
{
    std::size_t e = 1;
    for (auto o : order_)
        e = std::lcm(e, o);
    return e;
}

bool FiniteAbelianGroup::check_associativity() const
{
    std::size_t const n = size();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    return false;
    return true;
}

std::vector<FiniteAbelianGroup::Elem> FiniteAbelianGroup::subgroup_generated(std::span<Elem const> gens) const
{
    std::vector<char> in(size(), 0);
    std::vector<Elem> elems{id_};
    in[id_] = 1;
    for (Elem g : gens) {
        if (in[g])
            continue;
        /* closure of current subgroup under multiplication by g */
        std::vector<Elem> current = elems;
        for (Elem x = g; !in[x]; x = table_[x][g]) {
            for (Elem h : current) {
                Elem y = table_[h][x];
                if (!in[y]) {
                    in[y] = 1;
                    elems.push_back(y);
                }
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

FiniteAbelianGroup::Quotient FiniteAbelianGroup::quotient(std::span<Elem const> subgroup) const
{
    std::size_t const n = size();
    Quotient q;
    q.projection.assign(n, n);
    for (Elem a = 0; a < n; ++a) {
        if (q.projection[a] != n)
            continue;
        Elem const idx = q.representative.size();
        q.representative.push_back(a);
        for (Elem h : subgroup)
            q.projection[table_[a][h]] = idx;
    }
    std::size_t const m = q.representative.size();
    if (m * subgroup.size() != n)
        throw DomainError("quotient by a set that is not a subgroup");
    std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
    for (Elem i = 0; i < m; ++i)
        for (Elem j = 0; j < m; ++j)
            t[i][j] = q.projection[table_[q.representative[i]][q.representative[j]]];
    q.group = FiniteAbelianGroup(std::move(t), q.projection[id_]);
    return q;
}

std::optional<std::vector<FiniteAbelianGroup::CyclicFactor>> FiniteAbelianGroup::cyclic_decomposition(
    std::function<bool(Elem)> const & allowed) const
{
    std::vector<Elem> candidates;
    for (Elem a = 0; a < size(); ++a)
        if (a != id_ && (!allowed || allowed(a)))
            candidates.push_back(a);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Elem a, Elem b) { return order_[a] > order_[b]; });

    std::vector<CyclicFactor> chosen;
    /* depth-first search over independent generator sequences; the span
     * of the chosen generators has size equal to the product of their
     * orders exactly when they are independent */
    std::function<bool(std::vector<Elem> const &, std::size_t)> extend =
        [&](std::vector<Elem> const & span, std::size_t start) -> bool {
        if (span.size() == size())
            return true;
        for (std::size_t i = start; i < candidates.size(); ++i) {
            Elem g = candidates[i];
            if (std::binary_search(span.begin(), span.end(), g))
                continue;
            std::vector<Elem> gens;
            for (auto const & f : chosen)
                gens.push_back(f.generator);
            gens.push_back(g);
            auto next = subgroup_generated(gens);
            if (next.size() != span.size() * order_[g])
                continue;
            chosen.push_back({g, order_[g]});
            if (extend(next, i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend({id_}, 0))
        return std::nullopt;
    return chosen;
}

std::vector<std::size_t> FiniteAbelianGroup::coordinates(std::vector<CyclicFactor> const & basis, Elem x) const
{
    std::vector<std::size_t> e(basis.size(), 0);
    for (;;) {
        Elem acc = id_;
        for (std::size_t i = 0; i < basis.size(); ++i)
            acc = table_[acc][power(basis[i].generator, static_cast<std::int64_t>(e[i]))];
        if (acc == x)
            return e;
        std::size_t i = basis.size();
        while (i-- > 0) {
            if (++e[i] < basis[i].order)
                break;
            e[i] = 0;
            if (i == 0)
                throw DomainError("element not expressible in the given basis");
        }
        if (basis.empty())
            throw DomainError("element not expressible in the given basis");
    }
}

} // namespace selorder
