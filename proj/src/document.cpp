#include "detkit/document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace detkit {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> parts;
    std::istringstream in(s);
    std::string word;
    while (in >> word) parts.push_back(word);
    return parts;
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return s != "det" && s != "tr" && s != "I";
}

struct RawLine {
    unsigned number;
    std::string text;
};

struct RawMatrix {
    unsigned line;
    std::string name;
    std::string literal;  // "generic" or a [[...],[...]] literal
};

struct RawScalar {
    unsigned line;
    std::string name;
    std::string expr_text;
};

/// Split a matrix literal [[e, e], [e, e]] into entry strings.
std::vector<std::vector<std::string>> split_matrix_literal(const std::string& text,
                                                           unsigned line) {
    std::string s = trim(text);
    if (s.size() < 4 || s.front() != '[' || s.back() != ']')
        throw DocumentError("matrix literal must look like [[...],[...]]", line);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string entry;
    int depth = 0;
    bool in_row = false;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {  // inside the outer brackets
        char c = s[i];
        if (c == '[') {
            if (!in_row && depth == 0) {
                in_row = true;
                ++depth;
                continue;
            }
            ++depth;
            entry += c;
        } else if (c == ']') {
            --depth;
            if (depth == 0 && in_row) {
                row.push_back(trim(entry));
                entry.clear();
                rows.push_back(std::move(row));
                row.clear();
                in_row = false;
            } else {
                entry += c;
            }
        } else if (c == ',' && depth == 1 && in_row) {
            row.push_back(trim(entry));
            entry.clear();
        } else if (c == ',' && depth == 0) {
            // separator between rows
        } else if (!in_row && std::isspace(static_cast<unsigned char>(c))) {
            // whitespace between rows
        } else if (!in_row) {
            throw DocumentError("unexpected character in matrix literal", line);
        } else {
            entry += c;
        }
    }
    if (depth != 0 || in_row) throw DocumentError("unbalanced brackets in matrix literal", line);
    if (rows.empty()) throw DocumentError("empty matrix literal", line);
    for (const auto& r : rows) {
        if (r.size() != rows.size())
            throw DocumentError("matrix literal must be square and match dim", line);
        for (const auto& e : r)
            if (e.empty()) throw DocumentError("empty entry in matrix literal", line);
    }
    return rows;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

const Matrix* InputDocument::find_matrix(const std::string& name) const {
    for (const auto& [n, m] : matrices)
        if (n == name) return &m;
    return nullptr;
}

InputDocument parse_document(const std::string& text) {
    // First pass: collect declarations.
    std::vector<RawLine> lines;
    {
        std::istringstream in(text);
        std::string line;
        unsigned number = 0;
        while (std::getline(in, line)) {
            ++number;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (!line.empty()) lines.push_back({number, line});
        }
    }

    bool have_ring = false, have_dim = false;
    unsigned ring_line = 0;
    std::string ring_kind;
    std::string modulus_text;
    std::vector<std::string> declared_vars;
    unsigned n = 0;
    std::vector<RawMatrix> raw_matrices;
    std::vector<RawScalar> raw_scalars;

    for (const RawLine& l : lines) {
        std::istringstream in(l.text);
        std::string keyword;
        in >> keyword;
        std::string rest = trim(l.text.substr(keyword.size()));
        if (keyword == "ring") {
            if (have_ring) throw DocumentError("duplicate ring declaration", l.number);
            have_ring = true;
            ring_line = l.number;
            std::vector<std::string> parts = split_ws(rest);
            if (parts.empty()) throw DocumentError("ring declaration needs a kind", l.number);
            ring_kind = parts[0];
            if (ring_kind == "Z") {
                if (parts.size() != 1) throw DocumentError("ring Z takes no arguments", l.number);
            } else if (ring_kind == "Zmod") {
                if (parts.size() != 2) throw DocumentError("ring Zmod needs one modulus", l.number);
                modulus_text = parts[1];
            } else if (ring_kind == "Poly" || ring_kind == "Frac") {
                for (std::size_t i = 1; i < parts.size(); ++i) {
                    if (!valid_identifier(parts[i]))
                        throw DocumentError("invalid variable name '" + parts[i] + "'", l.number);
                    declared_vars.push_back(parts[i]);
                }
                if (ring_kind == "Poly" && declared_vars.empty())
                    throw DocumentError("ring Poly needs at least one variable", l.number);
            } else {
                throw DocumentError("unknown ring kind '" + ring_kind +
                                        "' (expected Z, Zmod, Poly or Frac)",
                                    l.number);
            }
        } else if (keyword == "dim") {
            if (have_dim) throw DocumentError("duplicate dim declaration", l.number);
            have_dim = true;
            std::vector<std::string> parts = split_ws(rest);
            if (parts.size() != 1) throw DocumentError("dim needs one positive integer", l.number);
            try {
                long v = std::stol(parts[0]);
                if (v < 1) throw std::out_of_range("");
                n = static_cast<unsigned>(v);
            } catch (const std::exception&) {
                throw DocumentError("dim needs one positive integer", l.number);
            }
        } else if (keyword == "matrix" || keyword == "scalar") {
            std::size_t eq = rest.find('=');
            if (eq == std::string::npos)
                throw DocumentError(keyword + " declaration needs '='", l.number);
            std::string name = trim(rest.substr(0, eq));
            std::string value = trim(rest.substr(eq + 1));
            if (!valid_identifier(name))
                throw DocumentError("invalid " + keyword + " name '" + name + "'", l.number);
            if (value.empty()) throw DocumentError(keyword + " needs a value", l.number);
            if (keyword == "matrix") raw_matrices.push_back({l.number, name, value});
            else raw_scalars.push_back({l.number, name, value});
        } else {
            throw DocumentError("unknown keyword '" + keyword + "'", l.number);
        }
    }

    if (!have_ring) throw DocumentError("missing ring declaration", 1);
    if (!have_dim) throw DocumentError("missing dim declaration", 1);

    // Generic matrices extend the polynomial variable table deterministically.
    std::vector<std::string> all_vars = declared_vars;
    for (const RawMatrix& rm : raw_matrices) {
        if (rm.literal != "generic") continue;
        if (ring_kind != "Poly")
            throw DocumentError("matrix " + rm.name + " = generic requires ring Poly", rm.line);
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                all_vars.push_back(lower(rm.name) + "_" + std::to_string(i) + "_" +
                                   std::to_string(j));
    }
    {
        std::vector<std::string> sorted = all_vars;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw DocumentError("duplicate ring variable '" + *dup + "'", ring_line);
    }

    InputDocument doc;
    doc.n = n;
    if (ring_kind == "Z") doc.ring = RingContext::integers();
    else if (ring_kind == "Zmod") {
        try {
            doc.ring = RingContext::modular(Integer(modulus_text));
        } catch (const std::exception& e) {
            throw DocumentError(std::string("bad modulus: ") + e.what(), ring_line);
        }
    } else if (ring_kind == "Poly") doc.ring = RingContext::polynomial(all_vars);
    else doc.ring = declared_vars.empty()
                        ? RingContext::fraction_of(RingContext::integers())
                        : RingContext::fraction_of(RingContext::polynomial(declared_vars));

    // Scalar environment for entry expressions: every ring variable.
    Environment entry_env;
    entry_env.n = 1;
    entry_env.ring = doc.ring;
    if (ring_kind == "Poly") {
        for (std::uint32_t i = 0; i < all_vars.size(); ++i)
            entry_env.bindings.emplace(all_vars[i], RingElement::variable(doc.ring, i));
    } else if (ring_kind == "Frac" && !declared_vars.empty()) {
        const Ring& base = doc.ring->base();
        for (std::uint32_t i = 0; i < declared_vars.size(); ++i)
            entry_env.bindings.emplace(
                declared_vars[i],
                RingElement::fraction(doc.ring, RingElement::variable(base, i),
                                      RingElement::one(base)));
    }

    auto eval_scalar = [&](const std::string& source, unsigned line) {
        try {
            ExprPtr e = parse(source);
            EvalValue v = evaluate(*e, entry_env);
            if (const RingElement* s = std::get_if<RingElement>(&v)) return *s;
            throw DocumentError("expression must be scalar-valued", line);
        } catch (const ParseError& e) {
            throw DocumentError(std::string("in '") + source + "': " + e.what(), line);
        } catch (const EvalError& e) {
            throw DocumentError(std::string("in '") + source + "': " + e.what(), line);
        }
    };

    auto check_unique = [&](const std::string& name, unsigned line) {
        if (entry_env.bindings.count(name))
            throw DocumentError("name '" + name + "' collides with a ring variable", line);
        for (const auto& [existing, m] : doc.matrices)
            if (existing == name) throw DocumentError("duplicate name '" + name + "'", line);
        for (const auto& [existing, s] : doc.scalars)
            if (existing == name) throw DocumentError("duplicate name '" + name + "'", line);
    };

    std::uint32_t generic_offset = static_cast<std::uint32_t>(declared_vars.size());
    for (const RawMatrix& rm : raw_matrices) {
        check_unique(rm.name, rm.line);
        if (rm.literal == "generic") {
            Matrix m(doc.ring, n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    m.set(i, j, RingElement::variable(doc.ring, generic_offset + i * n + j));
            generic_offset += n * n;
            doc.matrices.emplace_back(rm.name, std::move(m));
            continue;
        }
        auto rows = split_matrix_literal(rm.literal, rm.line);
        if (rows.size() != n)
            throw DocumentError("matrix " + rm.name + " is " + std::to_string(rows.size()) + "x" +
                                    std::to_string(rows.size()) + " but dim is " +
                                    std::to_string(n),
                                rm.line);
        Matrix m(doc.ring, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.set(i, j, eval_scalar(rows[i][j], rm.line));
        doc.matrices.emplace_back(rm.name, std::move(m));
    }
    for (const RawScalar& rs : raw_scalars) {
        check_unique(rs.name, rs.line);
        doc.scalars.emplace_back(rs.name, eval_scalar(rs.expr_text, rs.line));
    }
    return doc;
}

Environment document_environment(const InputDocument& doc) {
    Environment env;
    env.n = doc.n;
    env.ring = doc.ring;
    if (doc.ring->kind() == RingKind::Polynomial) {
        for (std::uint32_t i = 0; i < doc.ring->var_count(); ++i)
            env.bindings.emplace(doc.ring->var_name(i), RingElement::variable(doc.ring, i));
    } else if (doc.ring->kind() == RingKind::Fraction &&
               doc.ring->base()->kind() == RingKind::Polynomial) {
        const Ring& base = doc.ring->base();
        for (std::uint32_t i = 0; i < base->var_count(); ++i)
            env.bindings.emplace(base->var_name(i),
                                 RingElement::fraction(doc.ring, RingElement::variable(base, i),
                                                       RingElement::one(base)));
    }
    for (const auto& [name, m] : doc.matrices) env.bindings.insert_or_assign(name, m);
    for (const auto& [name, s] : doc.scalars) env.bindings.insert_or_assign(name, s);
    return env;
}

}  // namespace detkit
