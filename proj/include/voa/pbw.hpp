#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace voa {

// Basis label for Virasoro-type graded spaces: L(-p1)L(-p2)...L(-pk)
// applied to the highest-weight vector, with p1 >= p2 >= ... >= pk.
// Parts are >= 2 for vacuum spaces and >= 1 for highest-weight modules.
// The empty key is the vacuum / highest-weight vector itself.
struct PBWKey {
    std::vector<int32_t> parts;

    int degree() const {
        int d = 0;
        for (int32_t p : parts) d += p;
        return d;
    }

    bool empty() const { return parts.empty(); }

    PBWKey prepended(int32_t part) const {
        PBWKey k;
        k.parts.reserve(parts.size() + 1);
        k.parts.push_back(part);
        k.parts.insert(k.parts.end(), parts.begin(), parts.end());
        return k;
    }

    PBWKey tail() const {
        PBWKey k;
        k.parts.assign(parts.begin() + 1, parts.end());
        return k;
    }

    bool operator==(const PBWKey&) const = default;
};

// Order by degree, then descending lexicographic on parts, matching the
// enumeration order of partitions ([6] before [4,2] before [3,3] ...).
struct PBWKeyLess {
    bool operator()(const PBWKey& a, const PBWKey& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.parts > b.parts;
    }
};

struct PBWKeyHash {
    size_t operator()(const PBWKey& k) const {
        size_t h = 1469598103934665603ull;
        for (int32_t p : k.parts) {
            h ^= static_cast<size_t>(p);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// All partitions of n into parts >= min_part, weakly decreasing, in
// descending lexicographic order.
std::vector<PBWKey> partitions(int n, int min_part);

// Human-readable PBW notation, e.g. "L(-2)L(-2)|0>" with the given
// highest-weight tag ("0", "1/16", ...).
std::string pbw_string(const PBWKey& key, const std::string& hw_tag);

}  // namespace voa
