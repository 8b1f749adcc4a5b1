/**
 * @file poset.hpp
 * @brief Partial orders on [n] = {1..n}: ideals, maximal elements, prime
 *        ideals, label maps, and (label-preserving) order automorphisms.
 *
 * All public indices are 1-based, matching the usual [n] convention for
 * coordinate positions. Subsets of [n] travel as sorted vectors of ints.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwpi/errors.hpp"

namespace pwpi {

inline constexpr int kDefaultAutomorphismMaxN = 12;

class Poset {
  public:
    /**
     * Builds the poset whose order is the reflexive-transitive closure of the
     * given edges. Edges need not be actual cover relations; any acyclic set
     * works. A cycle in the closure raises CycleDetected.
     */
    static Poset from_cover_relations(int n, const std::vector<std::pair<int, int>>& covers) {
        if (n < 0) fail(ErrorKind::IndexOutOfRange, "negative ground-set size");
        Poset p;
        p.n_ = n;
        p.rel_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 1; i <= n; ++i) p.set(i, i);
        for (const auto& [lo, hi] : covers) {
            p.check_index(lo);
            p.check_index(hi);
            p.set(lo, hi);
        }
        // Floyd-Warshall closure
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= n; ++i)
                if (p.leq(i, k))
                    for (int j = 1; j <= n; ++j)
                        if (p.leq(k, j)) p.set(i, j);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (p.leq(i, j) && p.leq(j, i))
                    fail(ErrorKind::CycleDetected,
                         "elements " + std::to_string(i) + " and " + std::to_string(j) + " form a cycle");
        return p;
    }

    static Poset chain(int n) {
        std::vector<std::pair<int, int>> covers;
        for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
        return from_cover_relations(n, covers);
    }

    static Poset antichain(int n) { return from_cover_relations(n, {}); }

    int size() const { return n_; }

    bool leq(int i, int j) const {
        check_index(i);
        check_index(j);
        return rel_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] != 0;
    }

    bool strictly_less(int i, int j) const { return i != j && leq(i, j); }

    /// Smallest ideal containing J.
    std::vector<int> ideal_of(const std::vector<int>& generators) const {
        for (int j : generators) check_index(j);
        std::vector<int> ideal;
        for (int i = 1; i <= n_; ++i)
            for (int j : generators)
                if (leq(i, j)) {
                    ideal.push_back(i);
                    break;
                }
        return ideal;
    }

    std::vector<int> principal_ideal(int j) const { return ideal_of({j}); }

    /// Principal ideal minus its generator.
    std::vector<int> strict_down_set(int j) const {
        auto ideal = principal_ideal(j);
        std::erase(ideal, j);
        return ideal;
    }

    std::vector<int> maximal_elements(const std::vector<int>& subset) const {
        for (int j : subset) check_index(j);
        std::vector<int> maximal;
        for (int j : subset) {
            bool dominated = false;
            for (int i : subset)
                if (i != j && leq(j, i)) {
                    dominated = true;
                    break;
                }
            if (!dominated) maximal.push_back(j);
        }
        std::sort(maximal.begin(), maximal.end());
        maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
        return maximal;
    }

    bool is_ideal(const std::vector<int>& subset) const {
        for (int j : subset) check_index(j);
        for (int j : subset)
            for (int i = 1; i <= n_; ++i)
                if (leq(i, j) && std::find(subset.begin(), subset.end(), i) == subset.end()) return false;
        return true;
    }

    /// An ideal is prime when it has exactly one maximal element.
    bool is_prime_ideal(const std::vector<int>& subset) const {
        if (!is_ideal(subset)) fail(ErrorKind::NotAnIdeal, "subset is not down-closed");
        return maximal_elements(subset).size() == 1;
    }

    /// Transitive reduction, sorted; the canonical human-writable form.
    std::vector<std::pair<int, int>> cover_relations() const {
        std::vector<std::pair<int, int>> covers;
        for (int i = 1; i <= n_; ++i) {
            for (int j = 1; j <= n_; ++j) {
                if (i == j || !leq(i, j)) continue;
                bool direct = true;
                for (int k = 1; k <= n_ && direct; ++k)
                    if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
                if (direct) covers.emplace_back(i, j);
            }
        }
        std::sort(covers.begin(), covers.end());
        return covers;
    }

    bool operator==(const Poset&) const = default;

  private:
    void set(int i, int j) { rel_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = 1; }

    void check_index(int i) const {
        if (i < 1 || i > n_)
            fail(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<std::uint8_t> rel_;
};

/// The label map pi assigning a block dimension k_i >= 1 to each i in [n].
class LabelMap {
  public:
    explicit LabelMap(std::vector<int> sizes) : sizes_(std::move(sizes)) {
        for (std::size_t i = 0; i < sizes_.size(); ++i)
            if (sizes_[i] < 1)
                fail(ErrorKind::LabelMismatch, "label k_" + std::to_string(i + 1) + " must be positive");
        total_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
    }

    int size() const { return static_cast<int>(sizes_.size()); }
    int total() const { return total_; }

    int label(int i) const {
        if (i < 1 || i > size()) fail(ErrorKind::IndexOutOfRange, "label index outside 1..n");
        return sizes_[i - 1];
    }

    const std::vector<int>& sizes() const { return sizes_; }

    bool operator==(const LabelMap&) const = default;

  private:
    std::vector<int> sizes_;
    int total_ = 0;
};

/**
 * An order automorphism of P, optionally label-preserving. Validated at
 * construction: psi must be a bijection of [n] with i <= j iff psi(i) <= psi(j),
 * and k_{psi(i)} = k_i when a label map is supplied.
 */
class PosetAutomorphism {
  public:
    PosetAutomorphism(const Poset& poset, std::vector<int> images, const LabelMap* labels = nullptr)
        : images_(std::move(images)) {
        const int n = poset.size();
        if (static_cast<int>(images_.size()) != n)
            fail(ErrorKind::ShapeMismatch, "permutation word length differs from poset size");
        std::vector<char> seen(n + 1, 0);
        for (int v : images_) {
            if (v < 1 || v > n) fail(ErrorKind::IndexOutOfRange, "permutation image outside 1..n");
            if (seen[v]) fail(ErrorKind::ShapeMismatch, "permutation word repeats an image");
            seen[v] = 1;
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (poset.leq(i, j) != poset.leq(image(i), image(j)))
                    fail(ErrorKind::ShapeMismatch, "map does not preserve the order relation");
        if (labels != nullptr)
            for (int i = 1; i <= n; ++i)
                if (labels->label(i) != labels->label(image(i)))
                    fail(ErrorKind::LabelMismatch, "map does not preserve labels");
    }

    static PosetAutomorphism identity(int n) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 1);
        return PosetAutomorphism(Unchecked{}, std::move(id));
    }

    int size() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (image(i) != i) return false;
        return true;
    }

    PosetAutomorphism inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 1; i <= size(); ++i) inv[image(i) - 1] = i;
        return PosetAutomorphism(Unchecked{}, std::move(inv));
    }

    bool operator==(const PosetAutomorphism&) const = default;

    /// f.after(g): apply g first, then f.
    PosetAutomorphism after(const PosetAutomorphism& g) const {
        std::vector<int> composed(images_.size());
        for (int i = 1; i <= size(); ++i) composed[i - 1] = image(g.image(i));
        return PosetAutomorphism(Unchecked{}, std::move(composed));
    }

  private:
    struct Unchecked {};
    PosetAutomorphism(Unchecked, std::vector<int> images) : images_(std::move(images)) {}

    std::vector<int> images_;
};

namespace detail {

struct VertexSignature {
    int up = 0;    // elements strictly above
    int down = 0;  // elements strictly below
    int label = 0;
    bool operator==(const VertexSignature&) const = default;
};

}  // namespace detail

/**
 * All automorphisms of P (of (P, pi) when labels are given), in lexicographic
 * order of the permutation word. Backtracking prunes candidates by
 * (up-degree, down-degree, label) signatures and by order consistency with
 * the images already fixed. Guarded by max_n against factorial blowup.
 */
inline std::vector<PosetAutomorphism> enumerate_automorphisms(const Poset& poset,
                                                              const LabelMap* labels = nullptr,
                                                              int max_n = kDefaultAutomorphismMaxN) {
    const int n = poset.size();
    if (n > max_n)
        fail(ErrorKind::BudgetExceeded,
             "automorphism search limited to n <= " + std::to_string(max_n));
    if (labels != nullptr && labels->size() != n)
        fail(ErrorKind::ShapeMismatch, "label map size differs from poset size");

    std::vector<detail::VertexSignature> sig(n + 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (poset.leq(i, j)) ++sig[i].up;
            if (poset.leq(j, i)) ++sig[i].down;
        }
        sig[i].label = labels != nullptr ? labels->label(i) : 0;
    }

    std::vector<PosetAutomorphism> found;
    std::vector<int> images(n, 0);
    std::vector<char> used(n + 1, 0);

    auto search = [&](auto&& self, int pos) -> void {
        if (pos > n) {
            found.emplace_back(poset, images, labels);
            return;
        }
        for (int candidate = 1; candidate <= n; ++candidate) {
            if (used[candidate] || !(sig[pos] == sig[candidate])) continue;
            bool consistent = true;
            for (int prev = 1; prev < pos && consistent; ++prev) {
                if (poset.leq(prev, pos) != poset.leq(images[prev - 1], candidate)) consistent = false;
                if (poset.leq(pos, prev) != poset.leq(candidate, images[prev - 1])) consistent = false;
            }
            if (!consistent) continue;
            images[pos - 1] = candidate;
            used[candidate] = 1;
            self(self, pos + 1);
            used[candidate] = 0;
        }
    };
    search(search, 1);
    return found;
}

}  // namespace pwpi
