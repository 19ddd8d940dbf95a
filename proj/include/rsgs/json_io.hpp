#ifndef RSGS_JSON_IO_HPP
#define RSGS_JSON_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rsgs/lie.hpp"

namespace rsgs {

// Presentation files are JSON:
//
//   {"generators": ["a", "b", "c"],
//    "relations": ["(c b) - a", "(c a) - b"]}
//
// or, for a Lie algebra given by structure constants (1-based indices,
// values as rational strings; mirror pairs completed by antisymmetry):
//
//   {"generators": ["e", "f", "h"],
//    "lie": {"dim": 3,
//            "constants": [{"i": 2, "j": 1, "value": {"3": "-1"}}]}}
//
// Generator declaration order is the letter order: first declared is least.
// At most one of "relations"/"lie" may be present.
struct PresentationFile {
    Alphabet alphabet;
    std::vector<Poly> relations;
    std::optional<LieAlgebra> lie;

    bool has_lie() const noexcept { return lie.has_value(); }

    // The relation presentation (empty for pure Lie files).
    Presentation presentation() const {
        return Presentation(alphabet, relations);
    }
};

PresentationFile parse_presentation_json(const nlohmann::json& doc);
PresentationFile load_presentation_file(const std::string& path);

nlohmann::json presentation_to_json(const Presentation& S);
void save_presentation_file(const std::string& path, const Presentation& S);

// FNV-1a over the raw bytes, as a fixed-width hex string; identifies the
// input in machine-readable reports.
std::string input_digest(std::string_view bytes);

}  // namespace rsgs

#endif  // RSGS_JSON_IO_HPP
