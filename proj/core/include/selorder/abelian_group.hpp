#ifndef SELORDER_ABELIAN_GROUP_HPP
#define SELORDER_ABELIAN_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace selorder {

/* A small finite abelian group given by its Cayley table.  Elements are
 * the indices 0..size()-1.  Class groups and their quotients are tiny in
 * every computation this library performs, so exhaustive algorithms are
 * used throughout. */
class FiniteAbelianGroup
{
  public:
    using Elem = std::size_t;

    FiniteAbelianGroup() = default;

    /* Validates closure, commutativity, identity and inverses; checking
     * associativity is cubic and left to check_associativity(). */
    FiniteAbelianGroup(std::vector<std::vector<Elem>> table, Elem identity);

    static FiniteAbelianGroup trivial();
    static FiniteAbelianGroup cyclic(std::size_t n);

    std::size_t size() const { return table_.size(); }
    Elem identity() const { return id_; }
    Elem op(Elem a, Elem b) const { return table_[a][b]; }
    Elem inverse(Elem a) const { return inv_[a]; }
    Elem power(Elem a, std::int64_t k) const;
    std::size_t order(Elem a) const { return order_[a]; }
    std::size_t exponent() const;

    bool check_associativity() const;

    /* sorted element list */
    std::vector<Elem> subgroup_generated(std::span<Elem const> gens) const;

    struct Quotient;
    /* quotient by a subgroup given as its element list */
    Quotient quotient(std::span<Elem const> subgroup) const;

    struct CyclicFactor {
        Elem generator;
        std::size_t order;
        bool operator==(CyclicFactor const &) const = default;
    };

    /* Writes the group as a direct product of nontrivial cyclic subgroups.
     * Candidates are tried in order of decreasing element order, then
     * increasing index; `allowed`, when set, restricts the generators.
     * Returns nothing when no decomposition uses only allowed generators. */
    std::optional<std::vector<CyclicFactor>> cyclic_decomposition(
        std::function<bool(Elem)> const & allowed = {}) const;

    /* exponents of x in a decomposition (mixed radix); x must be in the group */
    std::vector<std::size_t> coordinates(std::vector<CyclicFactor> const & basis, Elem x) const;

    bool operator==(FiniteAbelianGroup const &) const = default;

  private:
    std::vector<std::vector<Elem>> table_;
    Elem id_ = 0;
    std::vector<Elem> inv_;
    std::vector<std::size_t> order_;
};

struct FiniteAbelianGroup::Quotient {
    FiniteAbelianGroup group;
    /* element of the parent -> coset index */
    std::vector<Elem> projection;
    /* coset index -> least parent element in it */
    std::vector<Elem> representative;
};

} // namespace selorder

#endif /* SELORDER_ABELIAN_GROUP_HPP */
