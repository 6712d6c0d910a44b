#include "coanet/extract/ddc.hpp"

#include "coanet/util/strings.hpp"

namespace coanet {

std::optional<DdcClass> DdcClass::from_code(std::string_view code) {
    if (code.size() != 3 || !all_digits(code))
        return std::nullopt;
    return DdcClass{std::string(code)};
}

DdcClass::Level DdcClass::level() const {
    if (code[1] == '0' && code[2] == '0')
        return Level::main;
    if (code[2] == '0')
        return Level::division;
    return Level::section;
}

std::string DdcClass::main_class() const {
    return std::string{code[0], '0', '0'};
}

namespace {

std::optional<DdcClass> match_token(std::string_view raw, const DdcPatterns& patterns,
                                    bool allow_bare) {
    std::string_view token = trim(raw);
    for (const std::string& prefix : patterns.prefixes) {
        if (starts_with_ignore_case(token, prefix))
            return DdcClass::from_code(trim(token.substr(prefix.size())));
    }
    if (allow_bare && patterns.bare_subject_digits)
        return DdcClass::from_code(token);
    return std::nullopt;
}

} // namespace

std::set<DdcClass> extract_ddc(const OaiRecord& record, const DdcPatterns& patterns) {
    std::set<DdcClass> out;
    if (auto it = record.dc_fields.find("subject"); it != record.dc_fields.end()) {
        for (const std::string& subject : it->second) {
            if (auto ddc = match_token(subject, patterns, /*allow_bare=*/true))
                out.insert(*ddc);
        }
    }
    for (const std::string& set_spec : record.set_specs) {
        if (auto ddc = match_token(set_spec, patterns, /*allow_bare=*/false))
            out.insert(*ddc);
    }
    return out;
}

} // namespace coanet
