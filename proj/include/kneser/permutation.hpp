#pragma once

#include <span>
#include <vector>

#include "kneser/exact.hpp"

namespace kneser {

/// perm[i] is the image of point i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
bool is_identity(std::span<const int> p);
Permutation inverse(std::span<const int> p);
/// (a * b)(x) = a(b(x)): apply b first.
Permutation compose(std::span<const int> a, std::span<const int> b);

/// Permutation group on {0..n-1} with a stabilizer chain built by Schreier-Sims.
class PermutationGroup {
public:
    PermutationGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<int>& base() const { return base_; }
    BigInt order() const;
    bool contains(std::span<const int> p) const;
    /// Orbit partition as a representative (the smallest point) for every point.
    std::vector<int> orbit_representatives() const;

private:
    struct Level {
        int point;
        std::vector<int> orbit;
        // transversal[x] maps the base point to x; empty when x is outside the orbit.
        std::vector<Permutation> transversal;
    };

    void add_strong(Permutation g);
    void rebuild_level(std::size_t i);
    Permutation sift(Permutation h, std::size_t from) const;

    int degree_;
    std::vector<Permutation> generators_;
    std::vector<int> base_;
    std::vector<Permutation> strong_;
    std::vector<Level> levels_;
};

}  // namespace kneser
