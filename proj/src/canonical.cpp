#include "gtwist/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace gtwist {

std::string CanonicalKey::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

namespace {

// Appends one transformed row (relabeled via perm, optionally reversed,
// shifted to start at its smallest entry) to `out`, comparing against the
// same positions of `best` on the fly.  Returns -1/0/+1 like memcmp.
int emit_row(const std::vector<Vertex>& src, const std::vector<Vertex>& perm, bool inverted,
             std::vector<std::uint8_t>& out, const std::vector<std::uint8_t>& best,
             bool have_best, int state) {
    const int len = static_cast<int>(src.size());
    // Transformed row, in rotation order.
    std::uint8_t buf[kCanonicalKeyMaxN];
    int min_at = 0;
    for (int i = 0; i < len; ++i) {
        const Vertex mapped = perm[src[inverted ? len - 1 - i : i]];
        buf[i] = static_cast<std::uint8_t>(mapped);
        if (buf[i] < buf[min_at]) min_at = i;
    }
    for (int i = 0; i < len; ++i) {
        const std::uint8_t b = buf[(min_at + i) % len];
        if (have_best && state == 0) {
            const std::uint8_t ref = best[out.size()];
            if (b < ref)
                state = -1;
            else if (b > ref)
                return 1;
        }
        out.push_back(b);
    }
    return state;
}

}  // namespace

CanonicalKey canonical_key(const RotationSystem& rs) {
    const int n = rs.n();
    if (n > kCanonicalKeyMaxN)
        throw PreconditionError("canonical_key: n too large (max " +
                                std::to_string(kCanonicalKeyMaxN) + ")");
    std::vector<Vertex> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Vertex> inv_perm(static_cast<size_t>(n));

    std::vector<std::uint8_t> best;
    std::vector<std::uint8_t> scratch;
    scratch.reserve(1 + static_cast<size_t>(n) * (n - 1));
    do {
        for (Vertex v = 0; v < n; ++v) inv_perm[perm[v]] = v;
        for (int inverted = 0; inverted < 2; ++inverted) {
            scratch.clear();
            scratch.push_back(static_cast<std::uint8_t>(n));
            int state = 0;  // tri-state comparison vs best
            const bool have_best = !best.empty();
            for (Vertex v = 0; v < n && state <= 0; ++v)
                state = emit_row(rs.rotation(inv_perm[v]), perm, inverted != 0, scratch,
                                 best, have_best, state);
            if (state > 0) continue;  // worse than best, abandoned
            if (!have_best || state < 0) best = scratch;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CanonicalKey{std::move(best)};
}

}  // namespace gtwist
