#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace coanet {

/// UTC datestamp with OAI-PMH granularity: date-only (YYYY-MM-DD) or
/// full seconds (YYYY-MM-DDThh:mm:ssZ). Formatting round-trips exactly.
class Datestamp {
public:
    Datestamp() = default;

    /// Throws std::invalid_argument on malformed input.
    static Datestamp parse(std::string_view text);
    static std::optional<Datestamp> try_parse(std::string_view text);

    /// Current time at seconds granularity.
    static Datestamp now();

    static Datestamp from_time(std::chrono::sys_seconds tp, bool date_only = false);

    std::string to_string() const;
    std::chrono::sys_seconds time_point() const { return tp_; }
    bool date_only() const { return date_only_; }

    friend auto operator<=>(const Datestamp& a, const Datestamp& b) {
        return a.tp_ <=> b.tp_;
    }
    friend bool operator==(const Datestamp& a, const Datestamp& b) {
        return a.tp_ == b.tp_ && a.date_only_ == b.date_only_;
    }

private:
    std::chrono::sys_seconds tp_{};
    bool date_only_ = true;
};

} // namespace coanet
