#include "wreathlab/perm.hpp"

#include <numeric>

namespace wreathlab {

Perm Perm::identity(int degree) {
    if (degree < 0 || degree > kMaxDegree)
        throw DomainError("permutation degree " + std::to_string(degree) +
                          " outside [0," + std::to_string(kMaxDegree) + "]");
    Perm p;
    p.deg_ = static_cast<std::uint8_t>(degree);
    for (int i = 0; i < degree; ++i) p.im_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return p;
}

Perm Perm::from_images(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    Perm p = identity(n);
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < n; ++i) {
        const int v = images[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw DomainError("images do not form a permutation of 0.." + std::to_string(n - 1));
        seen[static_cast<std::size_t>(v)] = true;
        p.im_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    }
    return p;
}

Perm Perm::cycle(int degree, std::span<const int> points) {
    Perm p = identity(degree);
    const int k = static_cast<int>(points.size());
    for (int i = 0; i < k; ++i) {
        const int a = points[static_cast<std::size_t>(i)];
        const int b = points[static_cast<std::size_t>((i + 1) % k)];
        if (a < 0 || a >= degree) throw DomainError("cycle point out of range");
        p.im_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    }
    // Reject repeated points (image would not be a bijection).
    return from_images(p.images());
}

bool Perm::is_identity() const {
    for (int i = 0; i < deg_; ++i)
        if (im_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm r;
    r.deg_ = deg_;
    for (int i = 0; i < deg_; ++i) r.im_[im_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return r;
}

std::uint64_t Perm::order() const {
    std::uint64_t ord = 1;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < deg_; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::uint64_t len = 0;
        int j = i;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            j = im_[static_cast<std::size_t>(j)];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.deg_ != q.deg_)
        throw DomainError("compose: degree mismatch (" + std::to_string(p.deg_) + " vs " +
                          std::to_string(q.deg_) + ")");
    Perm r;
    r.deg_ = p.deg_;
    for (int i = 0; i < p.deg_; ++i)
        r.im_[static_cast<std::size_t>(i)] = q.im_[p.im_[static_cast<std::size_t>(i)]];
    return r;
}

Perm Perm::conjugated_by(const Perm& q) const {
    return compose(compose(q.inverse(), *this), q);
}

std::vector<int> Perm::images() const {
    std::vector<int> v(static_cast<std::size_t>(deg_));
    for (int i = 0; i < deg_; ++i) v[static_cast<std::size_t>(i)] = im_[static_cast<std::size_t>(i)];
    return v;
}

std::string Perm::cycle_string() const {
    std::string s;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < deg_; ++i) {
        if (seen[static_cast<std::size_t>(i)] || im_[static_cast<std::size_t>(i)] == i) continue;
        s += '(';
        int j = i;
        bool first = true;
        do {
            if (!first) s += ' ';
            s += std::to_string(j);
            seen[static_cast<std::size_t>(j)] = true;
            j = im_[static_cast<std::size_t>(j)];
            first = false;
        } while (j != i);
        s += ')';
    }
    if (s.empty()) s = "()";
    return s;
}

Perm direct_sum(const Perm& p, const Perm& q) {
    const int n = p.degree(), m = q.degree();
    if (n + m > kMaxDegree) throw CapExceeded("direct_sum degree " + std::to_string(n + m) + " exceeds cap");
    std::vector<int> im(static_cast<std::size_t>(n + m));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = p[i];
    for (int i = 0; i < m; ++i) im[static_cast<std::size_t>(n + i)] = n + q[i];
    return Perm::from_images(im);
}

Perm block_restrict(const Perm& p, int offset, int length) {
    std::vector<int> im(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) im[static_cast<std::size_t>(i)] = p[offset + i] - offset;
    return Perm::from_images(im);
}

}  // namespace wreathlab
