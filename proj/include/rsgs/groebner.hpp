#ifndef RSGS_GROEBNER_HPP
#define RSGS_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rsgs/parallel.hpp"
#include "rsgs/presentation.hpp"

namespace rsgs {

// ============================================================================
// groebner.hpp — Composition-Diamond machinery
// ============================================================================
//
// Subwords are bracket-complete factors, i.e. subtrees of the tree form.
// Two kinds of compositions exist:
//
//   inclusion             f - (f with g plugged in at an occurrence of the
//                         leading word of g inside the leading word of f)
//   right multiplication  f * [w] for every good word [w] below the last
//                         multiplier of the leading word of f (exactly the
//                         multipliers that break goodness when appended)
//
// A set is a Gröbner-Shirshov basis when every composition reduces to zero.
// reduce() records a replayable certificate: the subtracted occurrence,
// relation index, and coefficient of each step.
// ============================================================================

enum class Direction : std::uint8_t { left, right };
using Path = std::vector<Direction>;

// A subtree position inside the tree form of a good word.
struct Occurrence {
    GoodWord host;
    Path path;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// All paths where tree_form(pattern) equals a subtree of tree_form(host),
// in preorder (outermost first, left before right).  The root is included
// when host equals pattern.
std::vector<Occurrence> occurrences(const GoodWord& host,
                                    const GoodWord& pattern);

// Replaces the subtree at the occurrence by each monomial of g (bilinear),
// normalizing the results.  With g monic and the subtree equal to its
// leading word, the result's leading word is the host with coefficient 1.
// Throws PatternMismatchError otherwise.
Poly substitute(const Occurrence& occ, const Poly& g);

struct ReductionStep {
    std::size_t relation;
    Occurrence occurrence;  // host = leading word of the remainder here
    Rational coefficient;
};

struct ReduceResult {
    Poly normal_form;
    std::vector<ReductionStep> steps;
};

// Head reduction to normal form modulo S: while the leading word contains
// some relation's leading word as a subtree, subtract the matching multiple
// of the substituted relation; irreducible leading terms are peeled off.
// Every monomial of the result lies in Irr(S).  Site choice is
// leftmost-outermost (first match in preorder, ties to the lowest relation
// index).
ReduceResult reduce(const Poly& f, const Presentation& S);

// Replays the certificate: f - normal_form must equal the sum of the
// recorded substituted relations, and step hosts must strictly decrease.
bool verify_reduction_certificate(const Poly& f, const ReduceResult& result,
                                  const Presentation& S);

enum class CompositionKind : std::uint8_t { inclusion, right_multiplication };

struct CompositionReport {
    CompositionKind kind;
    std::size_t f_index = 0;
    std::size_t g_index = 0;                // == f_index for right mult.
    std::optional<Occurrence> occurrence;   // inclusion only
    std::optional<GoodWord> multiplier;     // right multiplication only
    Poly raw;
    Poly normal_form;
    std::vector<ReductionStep> steps;
    bool trivial = false;  // normal_form == 0
};

// Compositions of one ordered relation pair.  The root occurrence is
// skipped when f_index == g_index; distinct relations with equal leading
// words do produce the root composition (their difference).
std::vector<CompositionReport> inclusion_compositions(const Presentation& S,
                                                      std::size_t f_index,
                                                      std::size_t g_index);

std::vector<CompositionReport> rightmul_compositions(
    const Presentation& S, std::size_t f_index,
    std::size_t cap = kDefaultEnumerationCap);

// Every composition of S, in a fixed deterministic order (inclusion pairs
// ascending, then right multiplications ascending).  The reduction work is
// independent per composition and runs in parallel under
// Execution::parallel with bit-identical output.
std::vector<CompositionReport> all_compositions(
    const Presentation& S, Execution exec = Execution::serial,
    std::size_t cap = kDefaultEnumerationCap);

struct GsCheck {
    bool is_basis = false;
    std::vector<CompositionReport> reports;
};

GsCheck is_gs(const Presentation& S, Execution exec = Execution::serial,
              std::size_t cap = kDefaultEnumerationCap);

enum class CompletionStatus : std::uint8_t { complete, bound_reached };

struct CompletionResult {
    Presentation presentation;
    CompletionStatus status = CompletionStatus::complete;
};

// Shirshov-style completion: repeatedly append the smallest nontrivial
// composition remainder (made monic) and inter-reduce, until no nontrivial
// composition remains (Complete, with gs_verified set) or every remaining
// one exceeds max_degree (BoundReached).  The cap bounds relations added,
// not intermediate reductions.
CompletionResult complete(const Presentation& S, std::size_t max_degree,
                          Execution exec = Execution::serial,
                          std::size_t cap = kDefaultEnumerationCap);

// Reduces every relation modulo the others until stable; drops zeros.
Presentation interreduce(const Presentation& S);

// Good words of length <= max_degree containing no relation's leading word
// as a subtree; ascending.  A linear basis of the quotient when S is a
// Gröbner-Shirshov basis.
std::vector<GoodWord> irr(const Presentation& S, std::size_t max_degree,
                          std::size_t cap = kDefaultEnumerationCap);

// Decides f = g in the quotient algebra via normal forms.  Throws
// NotConfluentError unless S.gs_verified().
bool nf_equal(const Poly& f, const Poly& g, const Presentation& S);

}  // namespace rsgs

#endif  // RSGS_GROEBNER_HPP
