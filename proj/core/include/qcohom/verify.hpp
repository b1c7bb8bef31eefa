#ifndef QCOHOM_VERIFY_HPP
#define QCOHOM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcohom/coeff_field.hpp"

namespace qcohom::verify {

/// Identifiers C1..C11 in order.
const std::vector<std::string> &all_claim_ids();

enum class Format { Json, Text };

struct VerifyConfig {
    int n = 3;
    CoeffField q = CoeffField::specialized(Rational(-1));
    std::uint64_t seed = 7;
    /// Subset of all_claim_ids(), run in canonical order.
    std::vector<std::string> claims = all_claim_ids();
    Format format = Format::Json;
    long trials = 100;
    /// Record wall-clock time in runtime_ms; off by default so reports are
    /// byte-identical across runs.
    bool timing = false;
    /// Test hook: claims whose private relation list gets an extra
    /// generator. Supported for C1 and C9.
    std::set<std::string> faults;
};

/// Throws ConfigError for an invalid configuration.
void validate(const VerifyConfig &config);

/// "all" or a comma separated list such as "C1,C4". Throws ConfigError.
std::vector<std::string> parse_claims(const std::string &spec);
/// "generic" or a nonzero rational. Throws ConfigError.
CoeffField parse_q(const std::string &spec);

using Value = std::variant<bool, long, std::string>;
/// Ordered key/value record.
using Record = std::vector<std::pair<std::string, Value>>;

struct ClaimRecord {
    std::string id;
    std::string description;
    Record expected;
    Record computed;
    std::string provenance;
    bool pass = false;

    /// Value stored under key in computed, or nullptr.
    const Value *computed_value(const std::string &key) const;
};

struct VerificationReport {
    VerifyConfig config;
    std::vector<ClaimRecord> claims;
    bool overall = false;
    long runtime_ms = 0;

    std::size_t failed_count() const;
};

/// Evaluates the selected claims concurrently; errors inside a claim are
/// recorded in that claim and do not affect the others. Deterministic in
/// the configuration. Throws ConfigError for an invalid configuration.
VerificationReport verify_all(const VerifyConfig &config);

/// JSON (keys "config", "claims", "overall", "runtime_ms") or text (one
/// line per claim, then "PASSED k/N" or "FAILED k/N" with k the number of
/// failed claims).
std::string emit_report(const VerificationReport &report, Format format);

} // namespace qcohom::verify

#endif
