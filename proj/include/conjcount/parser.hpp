#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "conjcount/counting.hpp"

namespace conjcount {

struct SyntaxError : std::runtime_error {
  SyntaxError(int line, int col, const std::string& message)
      : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + message),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct ArityError : std::runtime_error {
  explicit ArityError(const std::string& what) : std::runtime_error(what) {}
};

// Parses a system of generalized polynomials, one per line or separated by
// semicolons. Variables: z (or z1..zr), conj(z) / zbar for the conjugate.
// conj(...) accepts a bare variable only. Complex literals: a, ai, a+bi,
// a-bi with integer or p/q parts; a bare i means 1i. Mixing the bare z form
// with indexed z1.. raises ArityError.
ConjSystem parse_system(std::string_view text);

// Single polynomial; r is inferred from the variables used.
GenPoly parse_poly(std::string_view text);

// Constant expression (no variables allowed).
GaussianRational parse_gaussian(std::string_view text);

// Canonical parseable rendering (z / conj(z) variable style); terms in
// descending LEX order. parse_poly(to_input_string(p)) == p.
std::string to_input_string(const GenPoly& p);

}  // namespace conjcount
