#include "coanet/util/datestamp.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace coanet {

namespace {

int parse_int(std::string_view s, int min, int max, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < min || value > max)
        throw std::invalid_argument(std::string("invalid ") + what + " in datestamp");
    return value;
}

} // namespace

Datestamp Datestamp::parse(std::string_view text) {
    using namespace std::chrono;

    // YYYY-MM-DD or YYYY-MM-DDThh:mm:ssZ
    if (text.size() != 10 && text.size() != 20)
        throw std::invalid_argument("datestamp must be YYYY-MM-DD or YYYY-MM-DDThh:mm:ssZ");
    if (text[4] != '-' || text[7] != '-')
        throw std::invalid_argument("datestamp missing date separators");

    int y = parse_int(text.substr(0, 4), 0, 9999, "year");
    int mo = parse_int(text.substr(5, 2), 1, 12, "month");
    int d = parse_int(text.substr(8, 2), 1, 31, "day");

    year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok())
        throw std::invalid_argument("datestamp names a nonexistent calendar day");

    Datestamp out;
    sys_seconds base{sys_days{ymd}};
    if (text.size() == 10) {
        out.tp_ = base;
        out.date_only_ = true;
        return out;
    }

    if (text[10] != 'T' || text[13] != ':' || text[16] != ':' || text[19] != 'Z')
        throw std::invalid_argument("datestamp missing time separators");
    int h = parse_int(text.substr(11, 2), 0, 23, "hour");
    int mi = parse_int(text.substr(14, 2), 0, 59, "minute");
    int s = parse_int(text.substr(17, 2), 0, 60, "second");

    out.tp_ = base + hours{h} + minutes{mi} + seconds{s};
    out.date_only_ = false;
    return out;
}

std::optional<Datestamp> Datestamp::try_parse(std::string_view text) {
    try {
        return parse(text);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Datestamp Datestamp::now() {
    auto tp = std::chrono::time_point_cast<std::chrono::seconds>(std::chrono::system_clock::now());
    return from_time(tp, false);
}

Datestamp Datestamp::from_time(std::chrono::sys_seconds tp, bool date_only) {
    Datestamp out;
    if (date_only)
        tp = std::chrono::sys_seconds{std::chrono::floor<std::chrono::days>(tp)};
    out.tp_ = tp;
    out.date_only_ = date_only;
    return out;
}

std::string Datestamp::to_string() const {
    using namespace std::chrono;
    sys_days sd = floor<days>(tp_);
    year_month_day ymd{sd};
    hh_mm_ss hms{tp_ - sd};

    char buf[40];
    if (date_only_) {
        std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                      static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    } else {
        std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ",
                      static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                      static_cast<unsigned>(ymd.day()), static_cast<int>(hms.hours().count()),
                      static_cast<int>(hms.minutes().count()),
                      static_cast<int>(hms.seconds().count()));
    }
    return buf;
}

} // namespace coanet
