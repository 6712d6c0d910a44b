#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coanet/oai/types.hpp"

namespace coanet {

/// A three-digit Dewey Decimal Classification code.
struct DdcClass {
    enum class Level { main, division, section };

    std::string code; // exactly three decimal digits, e.g. "004"

    /// Validates the three-digit form; anything else yields nullopt.
    static std::optional<DdcClass> from_code(std::string_view code);

    /// "004" -> section, "040" -> division, "400" -> main.
    Level level() const;

    /// First digit + "00": the containing main class.
    std::string main_class() const;

    friend auto operator<=>(const DdcClass&, const DdcClass&) = default;
};

/// Where DDC codes are recognized. The defaults follow DINI repository
/// conventions: "ddc:NNN" in dc:subject or setSpec, and bare three-digit
/// subjects. Extend `prefixes` for repositories with other spellings.
struct DdcPatterns {
    std::vector<std::string> prefixes{"ddc:"};
    bool bare_subject_digits = true;
};

/// Collect DDC codes from a record's dc:subject values and setSpec tokens.
/// Non-matching values are ignored; a record without any detectable DDC
/// yields the empty set.
std::set<DdcClass> extract_ddc(const OaiRecord& record, const DdcPatterns& patterns = {});

} // namespace coanet
