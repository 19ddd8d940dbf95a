#ifndef RSGS_LIE_HPP
#define RSGS_LIE_HPP

#include <cstdint>
#include <vector>

#include "rsgs/groebner.hpp"

namespace rsgs {

// ============================================================================
// lie.hpp — universal enveloping right-symmetric algebras
// ============================================================================
//
// A finite-dimensional Lie algebra is given by structure constants over its
// ordered basis e_1 < ... < e_n.  Its universal enveloping right-symmetric
// algebra is presented by
//
//     f_ij = (e_i e_j) - (e_j e_i) - [e_i, e_j],   i > j,
//
// and that relation set is a Gröbner-Shirshov basis whenever the constants
// satisfy antisymmetry and the Jacobi identity; the irreducible words then
// form a PBW-type basis and the basis letters embed at degree one.
// verify_theorem() machine-checks this on a concrete algebra.
// ============================================================================

class LieAlgebra {
public:
    // Entry for [e_i, e_j], 0-based indices into the basis.
    struct Entry {
        std::size_t i = 0;
        std::size_t j = 0;
        std::vector<std::pair<std::size_t, Rational>> components;  // (m, alpha)
    };

    // Missing mirror pairs are completed by antisymmetry: when (i, j) is
    // given and (j, i) is not, [e_j, e_i] = -[e_i, e_j].  Conflicting
    // explicit pairs are kept as-is for validate() to report.
    LieAlgebra(Alphabet basis, const std::vector<Entry>& entries);

    const Alphabet& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    const Rational& constant(std::size_t i, std::size_t j,
                             std::size_t m) const;

    // [e_i, e_j] as a degree-one polynomial.
    Poly bracket(std::size_t i, std::size_t j) const;

    // Scales every structure constant; preserves validity.
    LieAlgebra scaled(const Rational& c) const;

private:
    Alphabet basis_;
    std::vector<Rational> table_;  // dense n*n*n

    Rational& at(std::size_t i, std::size_t j, std::size_t m);
};

struct LieViolation {
    enum class Kind : std::uint8_t { antisymmetry, jacobi };
    Kind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;              // jacobi only
    std::vector<Rational> defect;   // coordinates on the basis
};

// Empty exactly when antisymmetry and the Jacobi identity hold; checked
// exhaustively over all index pairs and triples, exactly.
std::vector<LieViolation> validate(const LieAlgebra& L);

// The relations f_ij for i > j, ordered by (i, j).  Throws InvalidLieError
// when validate() reports violations.
Presentation enveloping_presentation(const LieAlgebra& L);

struct TheoremReport {
    bool passed = false;
    std::vector<CompositionReport> compositions;
};

// Runs the full composition check on the enveloping presentation.  For
// these relations the only compositions are f_ij * e_k with i > j > k, and
// they all reduce to zero for a valid Lie algebra.
TheoremReport verify_theorem(const LieAlgebra& L,
                             Execution exec = Execution::serial,
                             std::size_t cap = kDefaultEnumerationCap);

struct PbwReport {
    std::vector<GoodWord> basis;
    std::vector<std::size_t> per_degree;  // per_degree[d-1] = count at degree d
    bool embedding_ok = false;
};

// Irreducible words of the enveloping presentation up to max_degree, plus
// the degree-one embedding check: all basis letters appear and their normal
// forms are pairwise distinct.
PbwReport pbw_basis(const LieAlgebra& L, std::size_t max_degree,
                    std::size_t cap = kDefaultEnumerationCap);

}  // namespace rsgs

#endif  // RSGS_LIE_HPP
