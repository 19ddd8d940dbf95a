#ifndef RSGS_PRESENTATION_HPP
#define RSGS_PRESENTATION_HPP

#include <vector>

#include "rsgs/poly.hpp"

namespace rsgs {

// An ordered alphabet together with a set of monic relations.  Relations
// are normalized to monic on construction; zero relations are rejected.
// Duplicate relations and reducible leading words are permitted — cleaning
// them up is inter-reduction's job, not the constructor's.
class Presentation {
public:
    Presentation() = default;

    Presentation(Alphabet alphabet, std::vector<Poly> relations);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Poly>& relations() const noexcept { return relations_; }
    std::size_t size() const noexcept { return relations_.size(); }

    // Confluence gate for nf_equal(): flips to true once is_gs() has
    // succeeded or complete() finished with status Complete.
    bool gs_verified() const noexcept { return gs_verified_; }
    void mark_gs_verified() noexcept { gs_verified_ = true; }

private:
    Alphabet alphabet_;
    std::vector<Poly> relations_;
    bool gs_verified_ = false;
};

}  // namespace rsgs

#endif  // RSGS_PRESENTATION_HPP
