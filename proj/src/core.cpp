#include "edlayout/core.hpp"

#include <cmath>
#include <cstdio>

namespace edl {

std::size_t Rng::below(std::size_t n) {
    if (n == 0) throw InvalidArgument("Rng::below: empty range");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return static_cast<std::size_t>(r % bound);
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InvalidArgument("Rng::between: hi < lo");
    return lo + static_cast<std::int64_t>(below(static_cast<std::size_t>(hi - lo) + 1));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t run_seed(std::uint64_t base, std::size_t index) {
    return splitmix64(base + static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ull);
}

std::string format_decimal(double value, int max_decimals) {
    if (!std::isfinite(value)) return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", max_decimals, value);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

std::string format_general(double value, int significant) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, value);
    return buf;
}

}  // namespace edl
