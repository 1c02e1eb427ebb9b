// Shared test fixtures: the bundled definition file loaded once, with typed
// accessors for its entities.

#ifndef LFLAT_TESTS_FIXTURES_HPP
#define LFLAT_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lflat/dsl.hpp"

namespace lflat::fixtures {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string even_path() { return std::string(LFLAT_DATA_DIR) + "/even.lf"; }

inline const std::vector<Definition>& even_definitions() {
    static std::vector<Definition> defs = [] {
        ParseResult r = parse_file(read_file(even_path()));
        if (!r.ok()) throw std::runtime_error("even.lf has parse errors");
        auto link_errors = link_definitions(r.definitions);
        if (!link_errors.empty()) throw std::runtime_error("even.lf has link errors");
        return r.definitions;
    }();
    return defs;
}

template <typename T>
inline const T& even(const std::string& name) {
    for (const auto& d : even_definitions())
        if (d.name() == name)
            if (const auto* v = std::get_if<T>(&d.entity)) return *v;
    throw std::runtime_error("fixture entity not found: " + name);
}

inline Word w(std::initializer_list<const char*> symbols) {
    Word out;
    for (const char* s : symbols) out.emplace_back(s);
    return out;
}

}  // namespace lflat::fixtures

#endif  // LFLAT_TESTS_FIXTURES_HPP
