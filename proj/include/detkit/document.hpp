#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "detkit/expr.hpp"
#include "detkit/matrix.hpp"
#include "detkit/ring.hpp"

namespace detkit {

struct DocumentError : std::runtime_error {
    unsigned line;
    DocumentError(const std::string& msg, unsigned line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/// Parsed line-oriented input document:
///   ring Z | ring Zmod 6 | ring Poly x y s | ring Frac x y
///   dim 2
///   matrix A = [[1,0],[0,0]]
///   matrix B = generic
///   scalar s = 3
/// Comments start with '#'. Generic matrices expand to fresh indeterminate
/// entries named <lowercase name>_i_j, appended to the polynomial ring's
/// variable table in declaration order.
struct InputDocument {
    Ring ring;
    unsigned n = 0;
    std::vector<std::pair<std::string, Matrix>> matrices;
    std::vector<std::pair<std::string, RingElement>> scalars;

    const Matrix* find_matrix(const std::string& name) const;
};

InputDocument parse_document(const std::string& text);

/// Environment exposing the document's bindings plus every ring variable as
/// a scalar.
Environment document_environment(const InputDocument& doc);

}  // namespace detkit
