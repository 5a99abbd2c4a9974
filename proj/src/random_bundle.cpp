#include "tvb/random_bundle.hpp"

#include <algorithm>
#include <numeric>

namespace tvb {

ToricBundle random_bundle(const Fan& fan, int max_rank, long long jump_lo, long long jump_hi,
                          std::mt19937_64& rng) {
    if (max_rank < 1 || jump_hi < jump_lo) throw ValidationError("bad random bundle parameters");
    const long long width = jump_hi - jump_lo + 1;
    std::uniform_int_distribution<int> rank_dist(1, max_rank);
    const int r = rank_dist(rng);

    // Each ray gets its own random invertible matrix; its prefix rows supply
    // the nested spans.
    std::uniform_int_distribution<int> entry(-2, 2);
    auto random_frame = [&] {
        QMat frame;
        while (true) {
            frame.clear();
            for (int i = 0; i < r; i++) {
                QVec row(r);
                for (int j = 0; j < r; j++) row[j] = entry(rng);
                frame.push_back(std::move(row));
            }
            if (determinant(frame) != 0) return frame;
        }
    };

    ToricBundle b;
    b.fan = fan;
    b.rank = r;
    for (size_t i = 0; i < fan.rays.size(); i++) {
        const QMat frame = random_frame();
        const int max_steps = static_cast<int>(std::min<long long>(r, width));
        std::uniform_int_distribution<int> steps_dist(1, max_steps);
        const int s = steps_dist(rng);

        std::vector<long long> throughs;
        {
            std::vector<long long> all(width);
            std::iota(all.begin(), all.end(), jump_lo);
            std::shuffle(all.begin(), all.end(), rng);
            throughs.assign(all.begin(), all.begin() + s);
            std::sort(throughs.begin(), throughs.end());
        }
        std::vector<int> dims{r};
        {
            std::vector<int> smaller(r - 1);
            std::iota(smaller.begin(), smaller.end(), 1);  // 1..r-1
            std::shuffle(smaller.begin(), smaller.end(), rng);
            smaller.resize(s - 1);
            std::sort(smaller.rbegin(), smaller.rend());
            dims.insert(dims.end(), smaller.begin(), smaller.end());
        }
        Filtration f;
        for (int k = 0; k < s; k++) {
            QMat prefix(frame.begin(), frame.begin() + dims[k]);
            f.steps.push_back({throughs[k], Subspace::span_of(std::move(prefix), r)});
        }
        b.filtrations.push_back(std::move(f));
    }
    return b;
}

}  // namespace tvb
