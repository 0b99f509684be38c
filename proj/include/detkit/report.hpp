#pragma once

#include <chrono>
#include <cstddef>
#include <string>

#include "detkit/ring.hpp"

namespace detkit {

struct ReportStats {
    std::size_t left_terms = 0;
    std::size_t right_terms = 0;
    std::chrono::microseconds elapsed{0};
};

/// Outcome of one identity check. `holds` is true exactly when the serialized
/// left and right values are equal in the ring; for expected counterexamples
/// the caller knows to expect holds == false.
struct IdentityReport {
    std::string identity;
    std::string ring;
    unsigned n = 0;
    bool holds = false;
    std::string left;
    std::string right;
    std::string witness;  // inequality witness / extra findings
    std::string note;     // recorded-but-not-asserted outcomes
    ReportStats stats;
};

/// Serialized ring value for reports. Polynomials above `cap` monomials are
/// replaced by a digest: term count, total degree, coefficient content and
/// the evaluation at the probe point (variable i -> i^2 + 2).
std::string serialize_value(const RingElement& v, std::size_t cap = 200);

/// Wall-clock helper for report stats.
class ScopedTimer {
public:
    explicit ScopedTimer(ReportStats& stats)
        : stats_(stats), start_(std::chrono::steady_clock::now()) {}
    ~ScopedTimer() {
        stats_.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start_);
    }

private:
    ReportStats& stats_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detkit
