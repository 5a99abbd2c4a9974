#include "tvb/splitting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace tvb {

namespace {

struct ConeContext {
    std::vector<int> ray_ids;
    std::vector<IntVec> duals;
};

ConeContext cone_context(const ToricBundle& bundle, int cone) {
    if (cone < 0 || cone >= static_cast<int>(bundle.fan.max_cones.size())) {
        throw InternalError("cone index out of range");
    }
    return {bundle.fan.max_cones[cone], dual_generators(bundle.fan, cone)};
}

IntVec character_from_tuple(const ConeContext& ctx, const IntVec& tuple) {
    const size_t d = ctx.duals.size();
    IntVec u(d, 0);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) u[j] += tuple[i] * ctx.duals[i][j];
    }
    return u;
}

// Enumerates all tuples with tuple[i] drawn from jump_lists[i].
void for_each_tuple(const std::vector<std::vector<long long>>& jump_lists,
                    const std::function<void(const IntVec&)>& fn) {
    const size_t d = jump_lists.size();
    std::vector<size_t> pos(d, 0);
    IntVec tuple(d);
    while (true) {
        for (size_t i = 0; i < d; i++) tuple[i] = jump_lists[i][pos[i]];
        fn(tuple);
        size_t i = 0;
        while (i < d) {
            pos[i]++;
            if (pos[i] < jump_lists[i].size()) break;
            pos[i] = 0;
            i++;
        }
        if (i == d) break;
    }
}

int intersection_dim(const ToricBundle& bundle, const ConeContext& ctx, const IntVec& tuple,
                     std::map<IntVec, int>& memo) {
    auto it = memo.find(tuple);
    if (it != memo.end()) return it->second;
    Subspace cur = Subspace::full(bundle.rank);
    for (size_t i = 0; i < ctx.ray_ids.size() && !cur.is_zero(); i++) {
        cur = intersect(cur, bundle.filtrations[ctx.ray_ids[i]].value_at(tuple[i]));
    }
    const int dim = cur.dim();
    memo.emplace(tuple, dim);
    return dim;
}

int multiplicity_at(const ToricBundle& bundle, const ConeContext& ctx, const IntVec& tuple,
                    std::map<IntVec, int>& memo) {
    const size_t d = tuple.size();
    int m = 0;
    for (unsigned mask = 0; mask < (1u << d); mask++) {
        IntVec shifted = tuple;
        int bits = 0;
        for (size_t i = 0; i < d; i++) {
            if (mask & (1u << i)) {
                shifted[i]++;
                bits++;
            }
        }
        const int term = intersection_dim(bundle, ctx, shifted, memo);
        m += (bits % 2 == 0) ? term : -term;
    }
    return m;
}

std::vector<std::vector<long long>> jump_lists(const ToricBundle& bundle, const ConeContext& ctx) {
    std::vector<std::vector<long long>> lists;
    for (int ray : ctx.ray_ids) lists.push_back(bundle.filtrations[ray].jumps());
    return lists;
}

bool reproduces_filtrations(const ToricBundle& bundle, const ConeContext& ctx,
                            const std::vector<SplitEntry>& entries) {
    QMat all;
    for (const SplitEntry& e : entries) all.push_back(e.vector);
    if (Subspace::span_of(all, bundle.rank).dim() != bundle.rank) return false;
    for (size_t i = 0; i < ctx.ray_ids.size(); i++) {
        const Filtration& f = bundle.filtrations[ctx.ray_ids[i]];
        const IntVec& v = bundle.fan.rays[ctx.ray_ids[i]];
        std::set<long long> checkpoints;
        for (long long j : f.jumps()) {
            checkpoints.insert(j);
            checkpoints.insert(j + 1);
        }
        for (const SplitEntry& e : entries) {
            checkpoints.insert(dot(e.u, v));
            checkpoints.insert(dot(e.u, v) + 1);
        }
        for (long long j : checkpoints) {
            QMat rows;
            for (const SplitEntry& e : entries) {
                if (dot(e.u, v) >= j) rows.push_back(e.vector);
            }
            if (Subspace::span_of(std::move(rows), bundle.rank) != f.value_at(j)) return false;
        }
    }
    return true;
}

ConeSplitting search_splitting(const ToricBundle& bundle, int cone, const GroundSet& ground,
                               std::mt19937_64* rng) {
    const ConeContext ctx = cone_context(bundle, cone);
    const std::vector<CharacterCount> chars = cone_characters(bundle, cone);

    std::map<IntVec, int> char_index;
    for (size_t k = 0; k < chars.size(); k++) char_index.emplace(chars[k].u, static_cast<int>(k));

    std::vector<std::vector<int>> pools(chars.size());
    for (size_t gi = 0; gi < ground.vectors.size(); gi++) {
        IntVec tuple(ctx.ray_ids.size());
        for (size_t i = 0; i < ctx.ray_ids.size(); i++) {
            tuple[i] = bundle.filtrations[ctx.ray_ids[i]].filtration_value(ground.vectors[gi]);
        }
        auto it = char_index.find(character_from_tuple(ctx, tuple));
        if (it != char_index.end()) pools[it->second].push_back(static_cast<int>(gi));
    }
    if (rng) {
        for (auto& pool : pools) std::shuffle(pool.begin(), pool.end(), *rng);
    }

    std::ostringstream where;
    where << "maximal cone " << (cone + 1);

    // Per character, every multiplicity-sized subset of its pool whose images
    // are independent in E_u / E_{>u}.
    std::vector<std::vector<std::vector<int>>> options(chars.size());
    for (size_t k = 0; k < chars.size(); k++) {
        const auto [e_u, e_above] = cone_subspaces(bundle, cone, chars[k].u);
        if (e_u.dim() - e_above.dim() != chars[k].multiplicity) {
            std::ostringstream os;
            os << "filtrations are incompatible on " << where.str() << ": character "
               << format_vector(chars[k].u) << " has multiplicity " << chars[k].multiplicity
               << " but quotient dimension " << (e_u.dim() - e_above.dim());
            throw IncompatibleFiltrations(os.str());
        }
        const int want = chars[k].multiplicity;
        const auto& pool = pools[k];
        if (static_cast<int>(pool.size()) >= want) {
            std::vector<int> pick(want);
            std::function<void(int, int)> gen = [&](int start, int depth) {
                if (depth == want) {
                    std::vector<QVec> vecs;
                    for (int p : pick) vecs.push_back(ground.vectors[pool[p]]);
                    if (quotient_rank_of_images(vecs, e_u, e_above) == want) {
                        std::vector<int> chosen;
                        for (int p : pick) chosen.push_back(pool[p]);
                        options[k].push_back(std::move(chosen));
                    }
                    return;
                }
                for (int i = start; i <= static_cast<int>(pool.size()) - (want - depth); i++) {
                    pick[depth] = i;
                    gen(i + 1, depth + 1);
                }
            };
            gen(0, 0);
        }
        if (options[k].empty()) {
            std::ostringstream os;
            os << "filtrations are incompatible on " << where.str()
               << ": no ground-set vectors realize character " << format_vector(chars[k].u)
               << " with multiplicity " << chars[k].multiplicity;
            throw IncompatibleFiltrations(os.str());
        }
    }

    std::vector<size_t> pick(chars.size(), 0);
    while (true) {
        std::vector<SplitEntry> entries;
        for (size_t k = 0; k < chars.size(); k++) {
            for (int gi : options[k][pick[k]]) {
                entries.push_back({chars[k].u, ground.vectors[gi], gi});
            }
        }
        if (reproduces_filtrations(bundle, ctx, entries)) {
            return ConeSplitting{cone, std::move(entries)};
        }
        size_t k = chars.size();
        while (k > 0) {
            k--;
            pick[k]++;
            if (pick[k] < options[k].size()) break;
            pick[k] = 0;
            if (k == 0) {
                std::ostringstream os;
                os << "filtrations are incompatible on " << where.str()
                   << ": no selection of ground-set vectors reproduces every filtration";
                throw IncompatibleFiltrations(os.str());
            }
        }
    }
}

}  // namespace

std::vector<IntVec> candidate_characters(const ToricBundle& bundle, int cone) {
    const ConeContext ctx = cone_context(bundle, cone);
    std::vector<IntVec> out;
    for_each_tuple(jump_lists(bundle, ctx),
                   [&](const IntVec& tuple) { out.push_back(character_from_tuple(ctx, tuple)); });
    std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    return out;
}

std::vector<CharacterCount> cone_characters(const ToricBundle& bundle, int cone) {
    const ConeContext ctx = cone_context(bundle, cone);
    std::map<IntVec, int> memo;
    std::vector<CharacterCount> out;
    int total = 0;
    std::optional<std::pair<IntVec, int>> negative;
    for_each_tuple(jump_lists(bundle, ctx), [&](const IntVec& tuple) {
        const int m = multiplicity_at(bundle, ctx, tuple, memo);
        total += m;
        const IntVec u = character_from_tuple(ctx, tuple);
        if (m < 0 && !negative) negative = {u, m};
        if (m > 0) out.push_back({u, m});
    });
    if (negative) {
        std::ostringstream os;
        os << "filtrations are incompatible on maximal cone " << (cone + 1) << ": character "
           << format_vector(negative->first) << " has negative multiplicity " << negative->second;
        throw IncompatibleFiltrations(os.str());
    }
    if (total != bundle.rank) {
        throw InternalError("character multiplicities sum to " + std::to_string(total) +
                            " instead of the rank");
    }
    std::sort(out.begin(), out.end(),
              [](const CharacterCount& a, const CharacterCount& b) { return lex_less(a.u, b.u); });
    return out;
}

std::pair<Subspace, Subspace> cone_subspaces(const ToricBundle& bundle, int cone, const IntVec& u) {
    const ConeContext ctx = cone_context(bundle, cone);
    const int d = static_cast<int>(ctx.ray_ids.size());
    Subspace e_u = Subspace::full(bundle.rank);
    for (int i = 0; i < d; i++) {
        const IntVec& v = bundle.fan.rays[ctx.ray_ids[i]];
        e_u = intersect(e_u, bundle.filtrations[ctx.ray_ids[i]].value_at(dot(u, v)));
    }
    Subspace above = Subspace::zero(bundle.rank);
    for (int j = 0; j < d; j++) {
        IntVec shifted = u;
        for (int k = 0; k < d; k++) shifted[k] += ctx.duals[j][k];
        Subspace piece = Subspace::full(bundle.rank);
        for (int i = 0; i < d; i++) {
            const IntVec& v = bundle.fan.rays[ctx.ray_ids[i]];
            piece = intersect(piece, bundle.filtrations[ctx.ray_ids[i]].value_at(dot(shifted, v)));
        }
        above = sum(above, piece);
    }
    return {e_u, above};
}

ConeSplitting splitting_basis(const ToricBundle& bundle, int cone, const GroundSet& ground) {
    return search_splitting(bundle, cone, ground, nullptr);
}

ConeSplitting splitting_basis_shuffled(const ToricBundle& bundle, int cone, const GroundSet& ground,
                                       std::mt19937_64& rng) {
    return search_splitting(bundle, cone, ground, &rng);
}

}  // namespace tvb
