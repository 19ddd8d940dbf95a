#include "rsgs/presentation.hpp"

#include "rsgs/errors.hpp"

namespace rsgs {

Presentation::Presentation(Alphabet alphabet, std::vector<Poly> relations)
    : alphabet_(std::move(alphabet)) {
    relations_.reserve(relations.size());
    for (Poly& r : relations) {
        if (r.is_zero()) {
            throw InvalidInputError("zero relation in presentation");
        }
        relations_.push_back(lc(r) == 1 ? std::move(r) : monic(r));
    }
}

}  // namespace rsgs
