#include "rsgs/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "rsgs/errors.hpp"
#include "rsgs/parser.hpp"

namespace rsgs {

namespace {

std::size_t to_index(const nlohmann::json& value, std::size_t dimension,
                     const char* what) {
    if (!value.is_number_integer() || value.get<long long>() < 1 ||
        static_cast<std::size_t>(value.get<long long>()) > dimension) {
        throw InvalidInputError(std::string("lie constant field \"") + what +
                                "\" must be an integer in [1, dim]");
    }
    return static_cast<std::size_t>(value.get<long long>()) - 1;
}

LieAlgebra parse_lie(const nlohmann::json& lie, const Alphabet& alphabet) {
    if (!lie.is_object()) {
        throw InvalidInputError("\"lie\" must be an object");
    }
    std::size_t n = alphabet.size();
    if (lie.contains("dim")) {
        const auto& dim = lie.at("dim");
        if (!dim.is_number_integer() ||
            static_cast<std::size_t>(dim.get<long long>()) != n) {
            throw InvalidInputError(
                "\"lie.dim\" disagrees with the number of generators");
        }
    }
    std::vector<LieAlgebra::Entry> entries;
    if (lie.contains("constants")) {
        const auto& constants = lie.at("constants");
        if (!constants.is_array()) {
            throw InvalidInputError("\"lie.constants\" must be an array");
        }
        for (const auto& item : constants) {
            LieAlgebra::Entry entry;
            entry.i = to_index(item.at("i"), n, "i");
            entry.j = to_index(item.at("j"), n, "j");
            const auto& value = item.at("value");
            if (!value.is_object()) {
                throw InvalidInputError("lie constant \"value\" must map basis "
                                        "indices to rational strings");
            }
            for (const auto& [key, coeff] : value.items()) {
                std::size_t m = 0;
                try {
                    m = std::stoull(key);
                } catch (const std::exception&) {
                    throw InvalidInputError("lie constant component \"" + key +
                                            "\" is not a basis index");
                }
                if (m < 1 || m > n) {
                    throw InvalidInputError("lie constant component \"" + key +
                                            "\" out of range");
                }
                if (!coeff.is_string()) {
                    throw InvalidInputError(
                        "lie constant values must be rational strings");
                }
                entry.components.emplace_back(
                    m - 1, rational_from_string(coeff.get<std::string>()));
            }
            entries.push_back(std::move(entry));
        }
    }
    return LieAlgebra(alphabet, entries);
}

}  // namespace

PresentationFile parse_presentation_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("generators")) {
        throw InvalidInputError("presentation file must declare \"generators\"");
    }
    const auto& gens = doc.at("generators");
    if (!gens.is_array() || gens.empty()) {
        throw InvalidInputError("\"generators\" must be a nonempty array");
    }
    std::vector<std::string> names;
    for (const auto& g : gens) {
        if (!g.is_string()) {
            throw InvalidInputError("generator names must be strings");
        }
        names.push_back(g.get<std::string>());
    }

    PresentationFile file;
    file.alphabet = Alphabet(std::move(names));

    bool has_relations = doc.contains("relations");
    bool has_lie = doc.contains("lie");
    if (has_relations && has_lie) {
        throw InvalidInputError(
            "at most one of \"relations\"/\"lie\" may be present");
    }
    if (has_relations) {
        const auto& rels = doc.at("relations");
        if (!rels.is_array()) {
            throw InvalidInputError("\"relations\" must be an array");
        }
        for (const auto& r : rels) {
            if (!r.is_string()) {
                throw InvalidInputError("relations must be expression strings");
            }
            file.relations.push_back(
                parse_expression(r.get<std::string>(), file.alphabet));
        }
    }
    if (has_lie) {
        file.lie = parse_lie(doc.at("lie"), file.alphabet);
    }
    return file;
}

PresentationFile load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInputError("cannot open \"" + path + "\"");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError("JSON parse error in \"" + path +
                                "\": " + e.what());
    }
    return parse_presentation_json(doc);
}

nlohmann::json presentation_to_json(const Presentation& S) {
    nlohmann::json doc;
    doc["generators"] = S.alphabet().names();
    nlohmann::json rels = nlohmann::json::array();
    for (const Poly& r : S.relations()) {
        rels.push_back(to_string(r, S.alphabet()));
    }
    doc["relations"] = rels;
    return doc;
}

void save_presentation_file(const std::string& path, const Presentation& S) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInputError("cannot write \"" + path + "\"");
    }
    out << presentation_to_json(S).dump(2) << "\n";
}

std::string input_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << hash;
    return out.str();
}

}  // namespace rsgs
