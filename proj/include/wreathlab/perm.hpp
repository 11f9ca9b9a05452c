#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "wreathlab/errors.hpp"

namespace wreathlab {

inline constexpr int kMaxDegree = 64;

/// A bijection of {0,...,degree-1}. Fixed-size storage so elements are
/// trivially copyable and hash/compare run over raw bytes; entries past the
/// degree are zeroed, which makes lexicographic comparison within one degree
/// coincide with comparison of the image arrays. The identity is the
/// lexicographic minimum among permutations of its degree.
class Perm {
public:
    Perm() { im_.fill(0); }

    static Perm identity(int degree);

    /// Validates that `images` is a permutation of {0,...,n-1}.
    static Perm from_images(std::span<const int> images);

    /// Single cycle through `points` on `degree` points, e.g. cycle(4,{0,1,2}).
    static Perm cycle(int degree, std::span<const int> points);

    int degree() const { return deg_; }
    int operator[](int i) const { return im_[static_cast<std::size_t>(i)]; }

    bool is_identity() const;
    Perm inverse() const;

    /// Multiplicative order (lcm of cycle lengths).
    std::uint64_t order() const;

    /// Right-action composition: x·(p*q) = (x·p)·q.
    friend Perm compose(const Perm& p, const Perm& q);
    Perm operator*(const Perm& q) const { return compose(*this, q); }

    /// q^{-1} * p * q.
    Perm conjugated_by(const Perm& q) const;

    friend bool operator==(const Perm& a, const Perm& b) {
        return a.deg_ == b.deg_ && a.im_ == b.im_;
    }
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        if (auto c = a.deg_ <=> b.deg_; c != 0) return c;
        return a.im_ <=> b.im_;
    }

    /// Images as a plain vector (serialization).
    std::vector<int> images() const;

    /// Cycle notation, e.g. "(0 1 2)(4 5)"; "()" for the identity.
    std::string cycle_string() const;

private:
    std::uint8_t deg_ = 0;
    std::array<std::uint8_t, kMaxDegree> im_{};

    friend struct PermHash;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept {
        // FNV-1a over the 64 image bytes plus the degree.
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ULL;
        };
        std::uint64_t words[8];
        std::memcpy(words, p.im_.data(), sizeof(words));
        for (std::uint64_t w : words) mix(w);
        mix(p.deg_);
        return static_cast<std::size_t>(h);
    }
};

Perm compose(const Perm& p, const Perm& q);

/// p ⊕ q acting on degree(p)+degree(q) points, p on the first block.
Perm direct_sum(const Perm& p, const Perm& q);

/// Restrictions of a direct-sum permutation back to the two blocks.
Perm block_restrict(const Perm& p, int offset, int length);

}  // namespace wreathlab
