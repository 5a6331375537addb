#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hecke {

/// Start index of the lexicographically least rotation of `s`; smallest such
/// index when several rotations tie (periodic input). Linear time, two-pointer
/// minimum-expression scan.
template <class T>
std::size_t least_rotation(std::span<const T> s) {
    std::size_t const n = s.size();
    if (n < 2) return 0;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        T const& a = s[(i + k) % n];
        T const& b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (b < a)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return i < j ? i : j;
}

template <class T>
std::vector<T> rotated(std::span<const T> s, std::size_t t) {
    std::vector<T> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[(i + t) % s.size()]);
    return out;
}

/// True when `s` equals its own least rotation.
template <class T>
bool is_necklace(std::span<const T> s) {
    std::size_t const n = s.size();
    for (std::size_t t = 1; t < n; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            T const& a = s[(i + t) % n];
            T const& b = s[i];
            if (a < b) return false;
            if (b < a) break;
        }
    }
    return true;
}

/// Smallest d > 0 with s[i] == s[(i + d) % n] for all i; divides n.
template <class T>
std::size_t rotation_period(std::span<const T> s) {
    std::size_t const n = s.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i + d < n && ok; ++i) ok = s[i] == s[i + d];
        if (ok) return d;
    }
    return n;
}

}  // namespace hecke
