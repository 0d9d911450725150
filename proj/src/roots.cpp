#include <cavity/roots.hpp>

#include <mutex>
#include <numbers>

namespace cavity {

namespace {

// levels[l] holds the leading zeros of j_l computed so far. Growing level l
// by c zeros needs c + 1 zeros at level l - 1.
class ZeroCache {
public:
    double get(int n, int l) {
        std::lock_guard lock(mutex_);
        ensure(l, n);
        return levels_[l][n - 1];
    }

private:
    void ensure(int l, int count) {
        if (static_cast<int>(levels_.size()) <= l) levels_.resize(l + 1);
        auto& level = levels_[l];
        if (static_cast<int>(level.size()) >= count) return;
        // Over-allocate so consecutive requests do not rebuild every level.
        const int target = std::max(count, 2 * static_cast<int>(level.size()) + 8);
        if (l == 0) {
            level.resize(target);
            for (int k = 0; k < target; ++k) level[k] = (k + 1) * std::numbers::pi;
            return;
        }
        ensure(l - 1, target + 1);
        level = generic::next_zero_level<double>(
            l, std::vector<double>(levels_[l - 1].begin(), levels_[l - 1].begin() + target + 1),
            kDefaultRootTol);
    }

    std::mutex mutex_;
    std::vector<std::vector<double>> levels_;
};

ZeroCache& cache() {
    static ZeroCache instance;
    return instance;
}

}  // namespace

BesselZero bessel_zero(int n, int l) {
    check_order(l);
    if (n < 1) throw DomainError("bessel_zero: n must be >= 1, got " + std::to_string(n));
    const double x = cache().get(n, l);
    return {n, l, x, x / std::numbers::pi};
}

std::vector<BesselZero> bessel_zeros(int l, int count) {
    std::vector<BesselZero> out;
    out.reserve(count);
    for (int n = 1; n <= count; ++n) out.push_back(bessel_zero(n, l));
    return out;
}

}  // namespace cavity
