#include "coanet/service/params.hpp"

#include "coanet/errors.hpp"
#include "coanet/util/strings.hpp"

namespace coanet {

PartitionKey parse_ddc_param(const std::optional<std::string>& ddc) {
    if (!ddc)
        return PartitionKey::repository_wide();
    std::string code{trim(*ddc)};
    if (code.size() == 1 && all_digits(code))
        return PartitionKey::ddc_main(code + "00");
    if (code.size() == 3 && all_digits(code)) {
        if (code[1] == '0' && code[2] == '0')
            return PartitionKey::ddc_main(code);
        return PartitionKey::ddc_exact(code);
    }
    throw ConfigError("ddc must be one digit or a three-digit code, got '" + *ddc + "'");
}

EdgeMode parse_mode_param(const std::string& mode) {
    if (mode == "unweighted")
        return EdgeMode::unweighted;
    if (mode == "weighted")
        return EdgeMode::weighted;
    throw ConfigError("mode must be 'unweighted' or 'weighted', got '" + mode + "'");
}

} // namespace coanet
