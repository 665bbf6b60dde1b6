#pragma once

// Polytope file format and report rendering.
//
//   # comment
//   dim 2
//   p auto            (optional; a positive integer or "auto")
//   vertex 0 0
//   vertex 1/3 0
//   vertex 0 1/2
//
// Reports are a flat "key: value" block; an equivalent JSON object can be
// rendered instead. Every number is an exact integer or "p/q" string.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "irrdec/error.hpp"
#include "irrdec/polytope.hpp"
#include "irrdec/rational.hpp"

namespace irrdec {

struct PolytopeFile {
    Polytope polytope;
    std::optional<Integer> p;  // nullopt for "auto" or absent

    Integer dilation() const { return p ? *p : minimal_dilation(polytope); }
};

inline PolytopeFile parse_polytope(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> dim;
    std::optional<Integer> p;
    bool saw_p = false;
    std::vector<RatVector> vertices;
    std::vector<std::size_t> vertex_lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key) || key[0] == '#') continue;
        std::vector<std::string> args;
        for (std::string a; fields >> a;) args.push_back(a);
        if (key == "dim") {
            if (dim) throw ParseError(lineno, "duplicate 'dim' line");
            Integer d;
            if (args.size() != 1 || !detail::parse_integer(args[0], d) || d < 1 || d > 64)
                throw ParseError(lineno, "expected 'dim <positive integer>'");
            dim = static_cast<std::size_t>(d);
        } else if (key == "p") {
            if (saw_p) throw ParseError(lineno, "duplicate 'p' line");
            saw_p = true;
            if (args.size() != 1) throw ParseError(lineno, "expected 'p <positive integer|auto>'");
            if (args[0] != "auto") {
                Integer v;
                if (!detail::parse_integer(args[0], v) || v < 1)
                    throw ParseError(lineno, "expected 'p <positive integer|auto>'");
                p = v;
            }
        } else if (key == "vertex") {
            if (!dim) throw ParseError(lineno, "'vertex' before 'dim'");
            if (args.size() != *dim)
                throw ParseError(lineno, "vertex has " + std::to_string(args.size()) + " coordinates, expected " +
                                             std::to_string(*dim));
            RatVector v(*dim);
            for (std::size_t i = 0; i < *dim; ++i) {
                try {
                    v[i] = parse_rational(args[i]);
                } catch (const DomainError& e) {
                    throw ParseError(lineno, e.what());
                }
            }
            for (std::size_t j = 0; j < vertices.size(); ++j)
                if (vertices[j] == v)
                    throw ParseError(lineno, "duplicate vertex (first given on line " +
                                                 std::to_string(vertex_lines[j]) + ")");
            vertices.push_back(std::move(v));
            vertex_lines.push_back(lineno);
        } else {
            throw ParseError(lineno, "unknown keyword '" + key + "'");
        }
    }
    if (!dim) throw ParseError(lineno, "missing 'dim' line");
    if (vertices.empty()) throw ParseError(lineno, "no vertices");
    PolytopeFile file{Polytope(*dim, std::move(vertices)), p};
    if (p && !dilation_is_integral(file.polytope, *p))
        throw ParseError(lineno, "p = " + p->str() + " does not make the polytope integral (minimal dilation " +
                                     minimal_dilation(file.polytope).str() + ")");
    return file;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// FNV-1a 64-bit digest, hex.
inline std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xf];
    return out;
}

enum class Status { pass, fail, error };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "error";
    }
}

struct Report {
    std::string command;
    std::vector<std::string> inputs;  // digests, one per input file
    Status status = Status::pass;
    std::vector<std::pair<std::string, std::string>> payload;

    void add(std::string key, std::string value) { payload.emplace_back(std::move(key), std::move(value)); }

    std::string text() const {
        std::string out = "command: " + command + "\n";
        for (std::size_t i = 0; i < inputs.size(); ++i)
            out += "input." + std::to_string(i) + ".digest: " + inputs[i] + "\n";
        out += "status: " + std::string(to_string(status)) + "\n";
        for (const auto& [k, v] : payload) out += k + ": " + v + "\n";
        return out;
    }

    std::string json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["status"] = to_string(status);
        nlohmann::ordered_json body = nlohmann::ordered_json::object();
        for (const auto& [k, v] : payload) body[k] = v;
        j["payload"] = body;
        return j.dump(2) + "\n";
    }
};

}  // namespace irrdec
