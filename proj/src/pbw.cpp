#include "voa/pbw.hpp"

namespace voa {

namespace {

void extend(std::vector<PBWKey>& out, std::vector<int32_t>& stack, int remaining,
            int max_part, int min_part) {
    if (remaining == 0) {
        PBWKey k;
        k.parts = stack;
        out.push_back(std::move(k));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= min_part; --p) {
        stack.push_back(p);
        extend(out, stack, remaining - p, p, min_part);
        stack.pop_back();
    }
}

}  // namespace

std::vector<PBWKey> partitions(int n, int min_part) {
    std::vector<PBWKey> out;
    if (n < 0) return out;
    std::vector<int32_t> stack;
    extend(out, stack, n, n, min_part);
    return out;
}

std::string pbw_string(const PBWKey& key, const std::string& hw_tag) {
    std::string s;
    for (int32_t p : key.parts) s += "L(-" + std::to_string(p) + ")";
    s += "|" + hw_tag + ">";
    return s;
}

}  // namespace voa
