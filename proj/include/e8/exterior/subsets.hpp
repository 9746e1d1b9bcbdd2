#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "e8/scalar/errors.hpp"

namespace e8 {

/// Subsets of {1,...,9} are bit masks: element i is bit (i-1).
using Mask = std::uint16_t;

inline constexpr int kN = 9;
inline constexpr Mask kFullMask = (1u << kN) - 1;

/// Lexicographic enumeration of the k-subsets of {1,...,9} for every k.
class SubsetTables {
public:
    static const SubsetTables& get()
    {
        static const SubsetTables t;
        return t;
    }

    const std::vector<Mask>& of_degree(int k) const { return by_degree_[static_cast<std::size_t>(k)]; }
    int index(Mask m) const { return index_[m]; }
    Mask mask(int k, int idx) const { return by_degree_[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx)]; }
    int size(int k) const { return static_cast<int>(by_degree_[static_cast<std::size_t>(k)].size()); }

private:
    SubsetTables()
    {
        std::vector<int> cur;
        for (int k = 0; k <= kN; ++k) {
            cur.clear();
            collect(k, 1, cur);
        }
    }

    void collect(int k, int next, std::vector<int>& cur)
    {
        if (static_cast<int>(cur.size()) == k) {
            Mask m = 0;
            for (int i : cur) m |= static_cast<Mask>(1u << (i - 1));
            index_[m] = static_cast<int>(by_degree_[static_cast<std::size_t>(k)].size());
            by_degree_[static_cast<std::size_t>(k)].push_back(m);
            return;
        }
        for (int i = next; i <= kN; ++i) {
            cur.push_back(i);
            collect(k, i + 1, cur);
            cur.pop_back();
        }
    }

    std::array<std::vector<Mask>, kN + 1> by_degree_;
    std::array<int, 1u << kN> index_{};
};

inline int binomial9(int k)
{
    return SubsetTables::get().size(k);
}

/// Mask of a strictly increasing list of indices in 1..9.
inline Mask mask_of(std::span<const int> subset)
{
    Mask m = 0;
    int prev = 0;
    for (int i : subset) {
        if (i < 1 || i > kN) throw DomainError("subset element " + std::to_string(i) + " outside 1..9");
        if (i <= prev) throw DomainError("subset is not strictly increasing");
        m |= static_cast<Mask>(1u << (i - 1));
        prev = i;
    }
    return m;
}
inline Mask mask_of(std::initializer_list<int> subset) { return mask_of(std::span<const int>(subset.begin(), subset.size())); }

/// Position of the subset in the lexicographic order of subsets of its size.
inline int subset_index(std::span<const int> subset) { return SubsetTables::get().index(mask_of(subset)); }
inline int subset_index(std::initializer_list<int> subset) { return SubsetTables::get().index(mask_of(subset)); }

/// Inverse of `subset_index`.
inline std::vector<int> subset_at(int k, int idx)
{
    if (k < 0 || k > kN || idx < 0 || idx >= binomial9(k)) throw DomainError("subset index out of range");
    std::vector<int> out;
    const Mask m = SubsetTables::get().mask(k, idx);
    for (int i = 1; i <= kN; ++i)
        if (m & (1u << (i - 1))) out.push_back(i);
    return out;
}

inline int degree_of(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

/// Sign of the permutation sorting the concatenation (I, J) of two disjoint subsets;
/// 0 when they intersect.
inline int concat_sign(Mask a, Mask b)
{
    if (a & b) return 0;
    int inversions = 0;
    for (int j = 0; j < kN; ++j)
        if (b & (1u << j)) inversions += std::popcount(static_cast<unsigned>(a >> (j + 1)));
    return (inversions & 1) ? -1 : 1;
}

/// Sign of the permutation sorting an arbitrary sequence; 0 on repeated entries.
inline int sort_sign(std::span<const int> seq)
{
    int inversions = 0;
    for (std::size_t x = 0; x < seq.size(); ++x)
        for (std::size_t y = x + 1; y < seq.size(); ++y) {
            if (seq[x] == seq[y]) return 0;
            if (seq[x] > seq[y]) ++inversions;
        }
    return (inversions & 1) ? -1 : 1;
}

}  // namespace e8
