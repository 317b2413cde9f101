#include "kneser/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace kneser {

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_identity(std::span<const int> p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation inverse(std::span<const int> p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

Permutation compose(std::span<const int> a, std::span<const int> b) {
    Permutation r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators) : degree_(degree) {
    for (auto& g : generators) {
        if (static_cast<int>(g.size()) != degree) throw std::invalid_argument("generator of wrong degree");
        if (!is_identity(g)) generators_.push_back(std::move(g));
    }
    for (const auto& g : generators_) {
        Permutation r = sift(g, 0);
        if (!is_identity(r)) add_strong(std::move(r));
    }

    // Verify Schreier generators level by level, deepest first; a new strong
    // generator fixing base[0..j-1] only disturbs levels 0..j.
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
        bool restarted = false;
        const Level& lv = levels_[i];
        for (int x : std::vector<int>(lv.orbit)) {
            for (const auto& s : std::vector<Permutation>(strong_)) {
                bool fixes_prefix = true;
                for (int t = 0; t < i && fixes_prefix; ++t) fixes_prefix = s[base_[t]] == base_[t];
                if (!fixes_prefix) continue;
                const Level& cur = levels_[i];
                Permutation h = compose(inverse(cur.transversal[s[x]]), compose(s, cur.transversal[x]));
                Permutation r = sift(std::move(h), static_cast<std::size_t>(i) + 1);
                if (is_identity(r)) continue;
                int j = 0;
                while (j < static_cast<int>(base_.size()) && r[base_[j]] == base_[j]) ++j;
                add_strong(std::move(r));
                i = j;
                restarted = true;
                break;
            }
            if (restarted) break;
        }
        if (!restarted) --i;
    }
}

void PermutationGroup::add_strong(Permutation g) {
    bool fixes_base = true;
    for (int b : base_) fixes_base = fixes_base && g[b] == b;
    if (fixes_base) {
        int moved = 0;
        while (g[moved] == moved) ++moved;
        base_.push_back(moved);
        levels_.push_back(Level{moved, {}, {}});
    }
    strong_.push_back(std::move(g));
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);
}

void PermutationGroup::rebuild_level(std::size_t i) {
    Level& lv = levels_[i];
    lv.orbit.assign(1, lv.point);
    lv.transversal.assign(degree_, Permutation{});
    lv.transversal[lv.point] = identity_permutation(degree_);
    std::vector<const Permutation*> gens;
    for (const auto& s : strong_) {
        bool fixes_prefix = true;
        for (std::size_t t = 0; t < i && fixes_prefix; ++t) fixes_prefix = s[base_[t]] == base_[t];
        if (fixes_prefix) gens.push_back(&s);
    }
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        int x = lv.orbit[head];
        for (const auto* s : gens) {
            int y = (*s)[x];
            if (!lv.transversal[y].empty()) continue;
            lv.transversal[y] = compose(*s, lv.transversal[x]);
            lv.orbit.push_back(y);
        }
    }
}

Permutation PermutationGroup::sift(Permutation h, std::size_t from) const {
    for (std::size_t j = from; j < levels_.size(); ++j) {
        int x = h[levels_[j].point];
        const auto& u = levels_[j].transversal[x];
        if (u.empty()) return h;
        h = compose(inverse(u), h);
    }
    return h;
}

BigInt PermutationGroup::order() const {
    BigInt r = 1;
    for (const auto& lv : levels_) r *= lv.orbit.size();
    return r;
}

bool PermutationGroup::contains(std::span<const int> p) const {
    if (static_cast<int>(p.size()) != degree_) return false;
    return is_identity(sift(Permutation(p.begin(), p.end()), 0));
}

std::vector<int> PermutationGroup::orbit_representatives() const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : generators_)
        for (int x = 0; x < degree_; ++x) {
            int a = find(x), b = find(g[x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> rep(degree_);
    for (int x = 0; x < degree_; ++x) rep[x] = find(x);
    return rep;
}

}  // namespace kneser
