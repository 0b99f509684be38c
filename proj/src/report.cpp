#include "detkit/report.hpp"

#include <sstream>

namespace detkit {

namespace {

std::string poly_digest(const MultiPoly& p) {
    std::ostringstream out;
    out << "<poly: " << p.term_count() << " terms, deg " << p.degree() << ", content "
        << p.content().str() << ", probe " << p.eval_at_probe_point().str() << ">";
    return out.str();
}

}  // namespace

std::string serialize_value(const RingElement& v, std::size_t cap) {
    switch (v.kind()) {
        case RingKind::Integers:
        case RingKind::Modular:
            return v.to_string();
        case RingKind::Polynomial: {
            const MultiPoly& p = v.poly_value();
            return p.term_count() <= cap ? p.to_string() : poly_digest(p);
        }
        case RingKind::Fraction: {
            std::string n = serialize_value(v.fraction_num(), cap);
            if (v.fraction_den().is_one()) return n;
            std::string d = serialize_value(v.fraction_den(), cap);
            auto wrap = [](const std::string& s) {
                return s.find(' ') != std::string::npos ? "(" + s + ")" : s;
            };
            return wrap(n) + "/" + wrap(d);
        }
    }
    return "?";
}

}  // namespace detkit
