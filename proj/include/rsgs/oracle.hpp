#ifndef RSGS_ORACLE_HPP
#define RSGS_ORACLE_HPP

#include <span>
#include <vector>

#include "rsgs/parallel.hpp"
#include "rsgs/presentation.hpp"

namespace rsgs {

// ============================================================================
// oracle.hpp — brute-force verification back ends
// ============================================================================
//
// Nothing here is used by the rewriting engine itself.  count_good counts
// basis words through a multiset (Euler-transform) recurrence that shares no
// code with the enumerator.  quotient_dims measures the quotient algebra by
// exact linear algebra: close the relation set under one-sided products by
// good words up to a degree bound, echelonize, and count missing leading
// words per degree.  When the relations form a Gröbner-Shirshov basis these
// numbers must coincide with the per-degree counts of irreducible words.
// ============================================================================

// Per-degree dimensions, degree 1 upward.
struct DegreeTable {
    std::vector<std::size_t> dims;

    std::size_t max_degree() const noexcept { return dims.size(); }
    std::size_t at(std::size_t degree) const { return dims.at(degree - 1); }

    friend bool operator==(const DegreeTable&, const DegreeTable&) = default;
};

// Number of good words of exact length n over num_letters letters, via
// T(n) = k * M(n-1) with M the multiset transform of T (Euler transform
// convolution).  Exact; throws ResourceBoundError if the count does not fit
// std::size_t.
std::size_t count_good(std::size_t num_letters, std::size_t n);

// Per-degree dimensions of the quotient by the ideal generated by the
// relations, truncated at max_degree.
DegreeTable quotient_dims(const Presentation& S, std::size_t max_degree,
                          Execution exec = Execution::serial,
                          std::size_t cap = kDefaultEnumerationCap);

// Rank over the rationals of homogeneous vectors of the given degree, by
// dense exact Gaussian elimination.  The parallel lane distributes row
// updates; results are bit-identical.
std::size_t rank(std::span<const Poly> vectors, std::size_t degree,
                 Execution exec = Execution::serial);

}  // namespace rsgs

#endif  // RSGS_ORACLE_HPP
