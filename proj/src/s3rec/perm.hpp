#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace s3rec {

// Permutation of {0, ..., N-1}; Perm<4> relabels tetrahedron vertices and
// Perm<3> relabels triangle vertices.
template <int N>
class Perm {
public:
    constexpr Perm()
    {
        for (int i = 0; i < N; ++i) image_[i] = static_cast<std::uint8_t>(i);
    }

    // Returns nullopt unless `images` is a bijection of {0..N-1}.
    static std::optional<Perm> from_images(const std::array<int, N>& images)
    {
        Perm p;
        std::array<bool, N> seen{};
        for (int i = 0; i < N; ++i) {
            int x = images[i];
            if (x < 0 || x >= N || seen[x]) return std::nullopt;
            seen[x] = true;
            p.image_[i] = static_cast<std::uint8_t>(x);
        }
        return p;
    }

    // Parses a word such as "0132" (image of 0, image of 1, ...).
    static std::optional<Perm> from_word(std::string_view word)
    {
        if (word.size() != N) return std::nullopt;
        std::array<int, N> images{};
        for (int i = 0; i < N; ++i) {
            char c = word[i];
            if (c < '0' || c > '9') return std::nullopt;
            images[i] = c - '0';
        }
        return from_images(images);
    }

    constexpr int operator[](int i) const { return image_[i]; }

    // (a * b)[i] = a[b[i]]
    friend constexpr Perm operator*(const Perm& a, const Perm& b)
    {
        Perm r;
        for (int i = 0; i < N; ++i) r.image_[i] = a.image_[b.image_[i]];
        return r;
    }

    constexpr Perm inverse() const
    {
        Perm r;
        for (int i = 0; i < N; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    // +1 for even permutations, -1 for odd.
    constexpr int sign() const
    {
        int inversions = 0;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                if (image_[i] > image_[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    std::string word() const
    {
        std::string s(N, '0');
        for (int i = 0; i < N; ++i) s[i] = static_cast<char>('0' + image_[i]);
        return s;
    }

    friend constexpr bool operator==(const Perm&, const Perm&) = default;

private:
    std::array<std::uint8_t, N> image_{};
};

using Perm4 = Perm<4>;
using Perm3 = Perm<3>;

}  // namespace s3rec
