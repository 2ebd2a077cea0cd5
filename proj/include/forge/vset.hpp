#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace forge {

/// Fixed-width vertex set. Polytopes are capped at kMaxVertices vertices.
struct VSet {
    static constexpr int kMaxVertices = 256;
    std::array<std::uint64_t, 4> w{0, 0, 0, 0};

    static VSet single(int i) {
        VSet s;
        s.set(i);
        return s;
    }
    static VSet full(int n) {
        VSet s;
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }

    void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= (1ULL << (i & 63)); }
    void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool empty() const { return !(w[0] | w[1] | w[2] | w[3]); }

    bool subset_of(const VSet& o) const {
        for (int i = 0; i < 4; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bool intersects(const VSet& o) const {
        for (int i = 0; i < 4; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    VSet operator&(const VSet& o) const {
        VSet r;
        for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    VSet operator|(const VSet& o) const {
        VSet r;
        for (int i = 0; i < 4; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    VSet minus(const VSet& o) const {
        VSet r;
        for (int i = 0; i < 4; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }

    bool operator==(const VSet& o) const { return w == o.w; }
    bool operator<(const VSet& o) const {  // order by lowest-index member first
        for (int i = 0; i < 4; ++i) {
            std::uint64_t a = w[i], b = o.w[i];
            if (a == b) continue;
            std::uint64_t diff = a ^ b;
            std::uint64_t low = diff & (~diff + 1);
            return (a & low) != 0;  // the set owning the lower differing bit sorts first
        }
        return false;
    }

    int lowest() const {
        for (int i = 0; i < 4; ++i)
            if (w[i]) return 64 * i + std::countr_zero(w[i]);
        return -1;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = 0; i < 4; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                out.push_back(64 * i + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }
};

struct VSetHash {
    std::size_t operator()(const VSet& s) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : s.w) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace forge
