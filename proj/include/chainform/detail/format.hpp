#pragma once

#include <string>
#include <vector>

namespace chainform::detail {

inline std::string join(const std::vector<int>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace chainform::detail
