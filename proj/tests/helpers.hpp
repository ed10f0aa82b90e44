#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include <quadpart/quadpart.hpp>

namespace testutil {

using quadpart::AlgInt;
using quadpart::Int;
using quadpart::QuadField;

inline AlgInt el(const QuadField& f, long long x, long long y = 0) {
    return AlgInt(f, Int(x), Int(y));
}

using Coords = std::pair<long long, long long>;
using Multiset = std::vector<Coords>;

inline Multiset coords_of(const std::vector<AlgInt>& parts) {
    Multiset m;
    for (const AlgInt& p : parts) {
        m.emplace_back(p.x().convert_to<long long>(), p.y().convert_to<long long>());
    }
    std::sort(m.begin(), m.end());
    return m;
}

/// Order-insensitive signature of a list of partitions (multiset of
/// multisets of coordinate pairs).
inline std::vector<Multiset> signature(const std::vector<quadpart::Partition>& ps) {
    std::vector<Multiset> sig;
    for (const auto& p : ps) {
        sig.push_back(coords_of(p.parts));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

inline std::vector<Multiset> signature_of_tuples(const std::vector<std::vector<AlgInt>>& ts) {
    std::vector<Multiset> sig;
    for (const auto& t : ts) {
        sig.push_back(coords_of(t));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

/// Like signature_of_tuples but keeps the order inside each tuple (for
/// weighted-solution tuples, where position carries the weight).
inline std::vector<Multiset> ordered_signature(const std::vector<std::vector<AlgInt>>& ts) {
    std::vector<Multiset> sig;
    for (const auto& t : ts) {
        Multiset m;
        for (const AlgInt& p : t) {
            m.emplace_back(p.x().convert_to<long long>(), p.y().convert_to<long long>());
        }
        sig.push_back(std::move(m));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

inline std::vector<Multiset> expected(std::initializer_list<Multiset> raw) {
    std::vector<Multiset> sig;
    for (Multiset m : raw) {
        std::sort(m.begin(), m.end());
        sig.push_back(std::move(m));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

} // namespace testutil
