#pragma once

#include <cstdint>
#include <vector>

namespace gspin {

/// Big-endian mixed-radix codec: digit 0 is the most significant.
struct MixedRadix {
    std::vector<std::uint64_t> radices;

    std::uint64_t card() const {
        std::uint64_t c = 1;
        for (auto r : radices) c *= r;
        return c;
    }

    std::uint64_t encode(const std::vector<int>& digits) const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < radices.size(); ++i) {
            v = v * radices[i] + static_cast<std::uint64_t>(digits[i]);
        }
        return v;
    }

    std::vector<int> decode(std::uint64_t v) const {
        std::vector<int> digits(radices.size(), 0);
        for (std::size_t i = radices.size(); i-- > 0;) {
            digits[i] = static_cast<int>(v % radices[i]);
            v /= radices[i];
        }
        return digits;
    }
};

} // namespace gspin
