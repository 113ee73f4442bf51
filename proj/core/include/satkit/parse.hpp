#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satkit/poly.hpp"
#include "satkit/rational.hpp"

namespace satkit {

// Syntax error with a 1-based column into the input text.
struct ParseError : std::runtime_error {
    std::size_t column;
    ParseError(const std::string& msg, std::size_t col)
        : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
};

// Maps identifiers to variable slots for one parse.
class VarContext {
public:
    // z1..zn, plus x,y,z aliases for the first three slots and t when nvars is 1.
    static VarContext standard(std::size_t nvars);
    // Standard context shifted by one leading parameter slot (e.g. "s"),
    // so the parameter occupies variable 0 and z1..zn follow.
    static VarContext with_parameter(std::size_t nvars, const std::string& name);

    std::optional<std::size_t> lookup(const std::string& name) const;
    std::size_t nvars() const { return nvars_; }

private:
    std::map<std::string, std::size_t> names_;
    std::size_t nvars_ = 0;
};

Poly parse_poly(const std::string& text, const VarContext& ctx);

// Scans identifiers to pick the ambient variable count (minimum 1).
// Names listed in ignore are skipped; unknown identifiers raise ParseError.
std::size_t infer_nvars(const std::string& text,
                        const std::vector<std::string>& ignore = {});

// Canonical text form: grlex-descending terms, z1..zn names, round-trips
// through parse_poly.
std::string render_poly(const Poly& p);

// Comma-separated rationals, e.g. "1,0,1" or "1/2,-3".
std::vector<Rat> parse_direction(const std::string& text);

}  // namespace satkit
