#include "metafor/features/meta.hpp"

namespace metafor::features {

std::vector<std::string> meta_column_names() {
    return {"horizon", "is_daily", "is_weekly", "is_monthly"};
}

std::vector<double> meta_column_values(int horizon, core::Frequency frequency) {
    return {static_cast<double>(horizon),
            frequency == core::Frequency::Daily ? 1.0 : 0.0,
            frequency == core::Frequency::Weekly ? 1.0 : 0.0,
            frequency == core::Frequency::Monthly ? 1.0 : 0.0};
}

std::vector<std::string> model_column_names() {
    std::vector<std::string> names;
    for (const auto& spec : models::pool_catalog()) names.push_back("model." + spec.model_id);
    names.push_back("cap_seasonal");
    names.push_back("cap_complex");
    names.push_back("cap_decomposition");
    return names;
}

std::vector<double> model_column_values(const models::ForecasterSpec& spec) {
    std::vector<double> values;
    for (const auto& member : models::pool_catalog()) {
        values.push_back(member.model_id == spec.model_id ? 1.0 : 0.0);
    }
    values.push_back(spec.seasonal ? 1.0 : 0.0);
    values.push_back(spec.complex_model ? 1.0 : 0.0);
    values.push_back(spec.decomposition ? 1.0 : 0.0);
    return values;
}

} // namespace metafor::features
