#ifndef SELORDER_VERIFY_HPP
#define SELORDER_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "selorder/selectivity.hpp"

/* Exhaustive consistency suites: the block-constancy criterion against
 * the matrix oracle, uniqueness at inert primes, admissible types, class
 * group axioms and the invariants of a finished analysis. */

namespace selorder::verify {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<std::string> counterexample;

    bool passed() const { return failures == 0; }
};

struct Options {
    int n_max = 5;
    std::vector<long> primes{2, 3, 5};
    /* canonical classes with coordinates in [0, coord_bound) */
    int coord_bound = 3;
    /* test hook: corrupts the criterion side of local_equivalence */
    bool mutate = false;
};

SuiteResult local_equivalence(Options const & opt);
/* f = (n) for 3 <= n <= max(3, n_max), enumeration bounds 1..6 */
SuiteResult inert_uniqueness(Options const & opt);
/* all compositions of n <= n_max + 1 */
SuiteResult admissible_type_identity(Options const & opt);
/* the orders of the chamber vertices intersect to an order containing O_L */
SuiteResult chamber_intersection(Options const & opt);
SuiteResult class_group_laws(std::vector<long> const & m_values);

SuiteResult analysis_invariants(sel::Analysis const & A);

std::vector<SuiteResult> run_all(Options const & opt);

/* m for d in {-4, -23, -56, -84, -104} */
std::vector<long> default_class_group_fields();

} // namespace selorder::verify

#endif /* SELORDER_VERIFY_HPP */
