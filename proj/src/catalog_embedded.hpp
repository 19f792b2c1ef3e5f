#pragma once

#include <string_view>
#include <vector>

namespace tilebalance::detail {

struct EmbeddedTemplate {
    std::string_view name;
    std::string_view json;
};

const std::vector<EmbeddedTemplate>& embedded_catalog();

}  // namespace tilebalance::detail
