#include "kneser/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

namespace kneser {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    return h;
}

// Coordinates are vertices 0..n-1; selected codewords follow.
struct Graph {
    int coords = 0;
    int vertices = 0;
    int colors = 1;
    std::vector<int> start;
    std::vector<int> adj;
    std::vector<Symbol> color;
};

struct Partition {
    std::vector<int> lab;   // position -> vertex
    std::vector<int> pos;   // vertex -> position
    std::vector<int> cell;  // vertex -> first position of its cell
    std::vector<int> end;   // first position of a cell -> one past its last position
};

class Refiner {
public:
    explicit Refiner(const Graph& g)
        : g_(g), count_(g.vertices, 0), in_queue_(g.vertices, 0), cell_mark_(g.vertices, 0) {}

    std::uint64_t refine(Partition& p, const std::vector<int>& splitters) {
        std::uint64_t h = 0x51ed270b27a3f1c3ULL;
        queue_.clear();
        std::size_t head = 0;
        for (int s : splitters) {
            queue_.push_back(s);
            in_queue_[s] = 1;
        }
        while (head < queue_.size()) {
            int s = queue_[head++];
            in_queue_[s] = 0;
            members_.assign(p.lab.begin() + s, p.lab.begin() + p.end[s]);
            h = mix(h, static_cast<std::uint64_t>(s));
            for (int col = 1; col <= g_.colors; ++col) {
                touched_.clear();
                for (int v : members_) {
                    for (int e = g_.start[v]; e < g_.start[v + 1]; ++e) {
                        if (g_.color[e] != col) continue;
                        int u = g_.adj[e];
                        if (count_[u]++ == 0) touched_.push_back(u);
                    }
                }
                if (touched_.empty()) continue;
                cells_.clear();
                for (int u : touched_) {
                    int c = p.cell[u];
                    if (!cell_mark_[c]) {
                        cell_mark_[c] = 1;
                        cells_.push_back(c);
                    }
                }
                std::sort(cells_.begin(), cells_.end());
                for (int c : cells_) {
                    cell_mark_[c] = 0;
                    h = split(p, c, h);
                }
                for (int u : touched_) count_[u] = 0;
            }
        }
        return h;
    }

private:
    std::uint64_t split(Partition& p, int c, std::uint64_t h) {
        const int ce = p.end[c];
        int lo = count_[p.lab[c]], hi = lo;
        for (int i = c + 1; i < ce; ++i) {
            lo = std::min(lo, count_[p.lab[i]]);
            hi = std::max(hi, count_[p.lab[i]]);
        }
        if (lo == hi) return mix(h, (static_cast<std::uint64_t>(c) << 32) ^ static_cast<std::uint64_t>(lo));
        std::sort(p.lab.begin() + c, p.lab.begin() + ce,
                  [&](int a, int b) { return count_[a] < count_[b]; });
        for (int i = c; i < ce; ++i) p.pos[p.lab[i]] = i;

        pieces_.clear();
        for (int i = c; i < ce;) {
            int j = i + 1;
            while (j < ce && count_[p.lab[j]] == count_[p.lab[i]]) ++j;
            pieces_.push_back(i);
            h = mix(h, (static_cast<std::uint64_t>(i) << 40) ^ (static_cast<std::uint64_t>(j - i) << 20) ^
                           static_cast<std::uint64_t>(count_[p.lab[i]]));
            p.end[i] = j;
            for (int t = i; t < j; ++t) p.cell[p.lab[t]] = i;
            i = j;
        }
        if (in_queue_[c]) {
            for (int piece : pieces_) {
                if (piece == c) continue;
                in_queue_[piece] = 1;
                queue_.push_back(piece);
            }
        } else {
            int largest = pieces_.front();
            for (int piece : pieces_)
                if (p.end[piece] - piece > p.end[largest] - largest) largest = piece;
            for (int piece : pieces_) {
                if (piece == largest) continue;
                in_queue_[piece] = 1;
                queue_.push_back(piece);
            }
        }
        return h;
    }

    const Graph& g_;
    std::vector<int> count_;
    std::vector<char> in_queue_;
    std::vector<char> cell_mark_;
    std::vector<int> members_;
    std::vector<int> touched_;
    std::vector<int> cells_;
    std::vector<int> pieces_;
    std::vector<int> queue_;
};

// Incremental echelon basis used to test membership in the span of lighter words.
template <typename Word>
struct SpanTracker;

// Binary words as bit masks (bit i = coordinate i).
template <>
struct SpanTracker<std::uint64_t> {
    std::vector<std::uint64_t> rows;
    std::uint64_t reduce(std::uint64_t v) const {
        for (std::uint64_t r : rows)
            if (v & (r & -r)) v ^= r;
        return v;
    }
    void add(std::uint64_t v) {
        v = reduce(v);
        if (!v) return;
        // Keep every row free of the new pivot so reduce() can run in one pass.
        for (auto& r : rows)
            if (r & (v & -v)) r ^= v;
        rows.push_back(v);
    }
};

template <>
struct SpanTracker<Vector> {
    const Field& f;
    Matrix rows;
    std::vector<int> pivots;
    Vector reduce(Vector v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Symbol a = v[pivots[r]];
            if (a == 0) continue;
            Symbol na = f.neg(a);
            for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.add(v[t], f.mul(na, rows[r][t]));
        }
        return v;
    }
    void add(const Vector& word) {
        Vector v = reduce(word);
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) return;
        Symbol inv = f.inv(v[p]);
        for (auto& s : v) s = f.mul(s, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Symbol a = rows[r][p];
            if (a == 0) continue;
            Symbol na = f.neg(a);
            for (std::size_t t = 0; t < v.size(); ++t) rows[r][t] = f.add(rows[r][t], f.mul(na, v[t]));
        }
        rows.push_back(std::move(v));
        pivots.push_back(static_cast<int>(p));
    }
};

bool is_zero(std::uint64_t v) { return v == 0; }
bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](Symbol s) { return s == 0; });
}

// Given the nonzero codewords bucketed by weight, keeps the words that are not
// sums of lighter words, by increasing weight, until they span the code.
template <typename Word>
std::vector<Word> select_words(const std::vector<std::vector<Word>>& by_weight, SpanTracker<Word> span,
                               std::size_t dimension) {
    std::vector<Word> chosen;
    for (const auto& bucket : by_weight) {
        if (span.rows.size() == dimension) break;
        std::size_t first = chosen.size();
        for (const auto& w : bucket)
            if (!is_zero(span.reduce(w))) chosen.push_back(w);
        for (std::size_t i = first; i < chosen.size(); ++i) span.add(chosen[i]);
    }
    return chosen;
}

// Codewords that are not sums of lighter codewords, by increasing weight, until
// they span the code. The set is Aut(C)-invariant, so coordinate permutations
// preserving it are exactly the automorphisms of C.
Matrix spanning_low_weight_words(const Code& c, const CanonicalOptions& options) {
    const Field& f = c.field();
    const int n = c.length();
    const int k = c.dimension();
    double total = 1;
    for (int i = 0; i < k; ++i) total *= f.q();
    if (total > static_cast<double>(options.word_cap)) {
        throw std::length_error("canonical_form: code has more than " + std::to_string(options.word_cap) +
                                " codewords");
    }
    const auto& g = c.generators();
    if (f.q() == 2 && n <= 64) {
        std::vector<std::uint64_t> rows(k, 0);
        for (int r = 0; r < k; ++r)
            for (int i = 0; i < n; ++i)
                if (g[r][i]) rows[r] |= std::uint64_t{1} << i;
        std::vector<std::vector<std::uint64_t>> by_weight(n + 1);
        std::uint64_t cur = 0;
        // Gray code: step t flips the generator indexed by the lowest set bit of t.
        for (std::uint64_t t = 1; t < (std::uint64_t{1} << k); ++t) {
            cur ^= rows[std::countr_zero(t)];
            by_weight[std::popcount(cur)].push_back(cur);
        }
        for (auto& b : by_weight) std::sort(b.begin(), b.end());
        Matrix out;
        for (std::uint64_t w : select_words(by_weight, SpanTracker<std::uint64_t>{}, k)) {
            Vector v(n);
            for (int i = 0; i < n; ++i) v[i] = static_cast<Symbol>((w >> i) & 1);
            out.push_back(std::move(v));
        }
        return out;
    }
    std::vector<std::vector<Vector>> by_weight(n + 1);
    for (auto& w : c.codewords()) {
        int wt = weight(w);
        if (wt > 0) by_weight[wt].push_back(std::move(w));
    }
    return select_words(by_weight, SpanTracker<Vector>{f, {}, {}}, k);
}

class Search {
public:
    Search(const Code& code, const CanonicalOptions& options) : code_(code), n_(code.length()) {
        Matrix words = spanning_low_weight_words(code, options);
        graph_.coords = n_;
        graph_.vertices = n_ + static_cast<int>(words.size());
        graph_.colors = code.field().q() - 1;
        std::vector<std::vector<std::pair<int, Symbol>>> lists(graph_.vertices);
        for (std::size_t w = 0; w < words.size(); ++w) {
            int wv = n_ + static_cast<int>(w);
            for (int i = 0; i < n_; ++i) {
                Symbol s = words[w][i];
                if (s == 0) continue;
                lists[i].emplace_back(wv, s);
                lists[wv].emplace_back(i, s);
            }
        }
        graph_.start.assign(graph_.vertices + 1, 0);
        for (int v = 0; v < graph_.vertices; ++v) {
            graph_.start[v + 1] = graph_.start[v] + static_cast<int>(lists[v].size());
            for (auto [u, s] : lists[v]) {
                graph_.adj.push_back(u);
                graph_.color.push_back(s);
            }
        }

        // Root partition: all coordinates, then one cell per codeword weight.
        root_.lab.resize(graph_.vertices);
        root_.pos.resize(graph_.vertices);
        root_.cell.resize(graph_.vertices);
        root_.end.assign(graph_.vertices, 0);
        for (int v = 0; v < graph_.vertices; ++v) {
            root_.lab[v] = v;
            root_.pos[v] = v;
        }
        std::vector<int> splitters;
        auto open_cell = [&](int from, int to) {
            for (int i = from; i < to; ++i) root_.cell[i] = from;
            root_.end[from] = to;
            splitters.push_back(from);
        };
        if (n_ > 0) open_cell(0, n_);
        for (int i = n_; i < graph_.vertices;) {
            int j = i + 1;
            int wi = weight(words[i - n_]);
            while (j < graph_.vertices && weight(words[j - n_]) == wi) ++j;
            open_cell(i, j);
            i = j;
        }
        refiner_ = std::make_unique<Refiner>(graph_);
        refiner_->refine(root_, splitters);
    }

    CanonicalCode run() {
        std::vector<int> path;
        std::vector<std::uint64_t> invs;
        Partition p = root_;
        dfs(p, path, invs);

        CanonicalCode out{code_.permuted(best_.labeling), group_order(), {}, best_.labeling, generators_};
        out.fingerprint = sha256_hex(canonical_serialization(out.canon));
        return out;
    }

private:
    struct Leaf {
        std::vector<int> path;
        std::vector<std::uint64_t> invs;
        std::string cert;
        Permutation labeling;
    };

    int target_cell(const Partition& p) const {
        int best = -1, best_size = 0;
        for (int i = 0; i < n_;) {
            int size = p.end[i] - i;
            if (size > 1 && (best < 0 || size < best_size)) {
                best = i;
                best_size = size;
            }
            i = p.end[i];
        }
        return best;
    }

    static void individualize(Partition& p, int v) {
        int c = p.cell[v];
        int ce = p.end[c];
        if (ce - c == 1) return;
        int u = p.lab[c];
        int pv = p.pos[v];
        std::swap(p.lab[c], p.lab[pv]);
        p.pos[v] = c;
        p.pos[u] = pv;
        p.end[c] = c + 1;
        p.end[c + 1] = ce;
        for (int i = c + 1; i < ce; ++i) p.cell[p.lab[i]] = c + 1;
    }

    // Sign of (invs, cert) against a stored leaf, comparing only what is known so far.
    static int compare_prefix(const std::vector<std::uint64_t>& invs, const Leaf& leaf) {
        std::size_t common = std::min(invs.size(), leaf.invs.size());
        for (std::size_t i = 0; i < common; ++i) {
            if (invs[i] != leaf.invs[i]) return invs[i] < leaf.invs[i] ? -1 : 1;
        }
        if (invs.size() > leaf.invs.size()) return 1;
        return 0;
    }

    static bool less_leaf(const Leaf& a, const Leaf& b) {
        if (a.invs != b.invs) return a.invs < b.invs;
        return a.cert < b.cert;
    }

    static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
        return static_cast<int>(i);
    }

    // The generators found are a strong generating set for the base given by the
    // first leaf's path, so |Aut| is the product of the basic orbit lengths.
    BigInt group_order() const {
        BigInt order = 1;
        std::vector<int> prefix;
        for (int v : first_.path) {
            auto orbits = stabilizer_orbits(prefix);
            order *= static_cast<long>(std::count(orbits.begin(), orbits.end(), orbits[v]));
            prefix.push_back(v);
        }
        return order;
    }

    std::vector<int> stabilizer_orbits(const std::vector<int>& path) const {
        std::vector<int> parent(n_);
        for (int i = 0; i < n_; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& g : generators_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](int v) { return g[v] == v; });
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(g[x]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int x = 0; x < n_; ++x) parent[x] = find(x);
        return parent;
    }

    int leaf(const Partition& p, const std::vector<int>& path, const std::vector<std::uint64_t>& invs) {
        const int level = static_cast<int>(path.size());
        Permutation sigma(n_);
        for (int i = 0; i < n_; ++i) sigma[p.lab[i]] = i;
        Leaf cur{path, invs, code_.permuted(sigma).key(), std::move(sigma)};
        if (!have_first_) {
            first_ = cur;
            best_ = cur;
            have_first_ = true;
            return level;
        }
        if (cur.cert == first_.cert) {
            add_automorphism(first_, cur);
            return divergence(cur.path, first_.path);
        }
        if (cur.cert == best_.cert) {
            add_automorphism(best_, cur);
            return divergence(cur.path, best_.path);
        }
        if (less_leaf(cur, best_)) best_ = std::move(cur);
        return level;
    }

    void add_automorphism(const Leaf& known, const Leaf& found) {
        // known.labeling(C) == found.labeling(C)
        Permutation g = compose(inverse(known.labeling), found.labeling);
        if (!is_identity(g)) generators_.push_back(std::move(g));
    }

    int dfs(Partition& p, std::vector<int>& path, std::vector<std::uint64_t>& invs) {
        const int level = static_cast<int>(path.size());
        int t = target_cell(p);
        if (t < 0) return leaf(p, path, invs);

        std::vector<int> children(p.lab.begin() + t, p.lab.begin() + p.end[t]);
        std::sort(children.begin(), children.end());
        std::vector<int> orbits;
        std::size_t orbits_for = static_cast<std::size_t>(-1);
        for (int v : children) {
            if (orbits_for != generators_.size()) {
                orbits = stabilizer_orbits(path);
                orbits_for = generators_.size();
            }
            if (orbits[v] != v) continue;

            if (scratch_.size() <= static_cast<std::size_t>(level)) scratch_.resize(level + 1);
            Partition& child = scratch_[level];
            child = p;
            individualize(child, v);
            std::uint64_t h = refiner_->refine(child, {child.cell[v]});
            path.push_back(v);
            invs.push_back(h);
            bool explore = true;
            if (have_first_) {
                bool may_match_first = compare_prefix(invs, first_) == 0 && invs.size() <= first_.invs.size();
                bool may_beat_best = compare_prefix(invs, best_) <= 0;
                explore = may_match_first || may_beat_best;
            }
            int r = explore ? dfs(child, path, invs) : level + 1;
            path.pop_back();
            invs.pop_back();
            if (r < level) return r;
        }
        return level;
    }

    const Code& code_;
    int n_;
    Graph graph_;
    Partition root_;
    std::unique_ptr<Refiner> refiner_;
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<Permutation> generators_;
    // One partition per search depth, reused to avoid reallocation.
    std::deque<Partition> scratch_;
};

}  // namespace

CanonicalCode canonical_form(const Code& c, const CanonicalOptions& options) {
    return Search(c, options).run();
}

bool are_equivalent(const Code& c, const Code& d, const CanonicalOptions& options) {
    if (&c.field() != &d.field() || c.length() != d.length() || c.dimension() != d.dimension()) return false;
    return canonical_form(c, options).canon == canonical_form(d, options).canon;
}

std::string canonical_serialization(const Code& c) {
    std::string s = std::to_string(c.field().q()) + ":" + std::to_string(c.length()) + ":" +
                    std::to_string(c.dimension()) + ":";
    for (const auto& row : c.generators())
        for (Symbol x : row) s.push_back(static_cast<char>(x < 10 ? '0' + x : 'a' + (x - 10)));
    return s;
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

}  // namespace kneser
