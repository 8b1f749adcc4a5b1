/**
 * @file isometry.hpp
 * @brief Linear isometries of a (P,w,pi)-space and their group structure.
 *
 * Maps act on row vectors, x -> x*M, with row (i, z) of M holding the image
 * of the basis vector e_{i,z}. Under this convention composition reads left
 * to right: M(apply A then B) = M(A) * M(B). A map belongs to the triangular
 * subgroup when block (row i, column j) vanishes unless j <= i in P and every
 * diagonal block preserves the block weight. The full isometry group is the
 * semidirect product of that subgroup with the label-preserving order
 * automorphisms acting by block permutation, which yields an exact order
 * formula and a structured enumeration to compare against the brute-force
 * oracle.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwpi/bigint.hpp"
#include "pwpi/errors.hpp"
#include "pwpi/field_linalg.hpp"
#include "pwpi/poset.hpp"
#include "pwpi/space.hpp"
#include "pwpi/weight.hpp"

namespace pwpi {

using LinearMap = Matrix;

struct Budgets {
    std::uint64_t matrices = kDefaultMatrixBudget;  // cap on q^(N^2) candidate streams
    std::uint64_t vectors = kDefaultVectorBudget;   // cap on q^N exhaustive vector sweeps
    std::uint64_t group = 1000000;                  // cap on materialized group size
};

/// The block-permutation isometry T_psi with T_psi(e_{j,z}) = e_{psi(j),z}.
inline LinearMap build_t_psi(const SpaceSpec& space, const PosetAutomorphism& psi) {
    if (psi.size() != space.block_count())
        fail(ErrorKind::ShapeMismatch, "permutation size differs from block count");
    for (int j = 1; j <= space.block_count(); ++j)
        if (space.block_size(psi.image(j)) != space.block_size(j))
            fail(ErrorKind::LabelMismatch, "blocks " + std::to_string(j) + " and " + std::to_string(psi.image(j)) +
                                               " have different dimensions");
    const int n_total = space.total_dim();
    LinearMap m(n_total, n_total);
    for (int j = 1; j <= space.block_count(); ++j)
        for (int z = 0; z < space.block_size(j); ++z)
            m.at(space.block_offset(j) + z, space.block_offset(psi.image(j)) + z) = 1;
    return m;
}

/**
 * Ground-truth isometry test: checks weight preservation on every one of the
 * q^N vectors. Requires an invertible map and q^N within the vector budget.
 */
inline bool is_isometry_exhaustive(const SpaceSpec& space, const LinearMap& map, const Budgets& budgets = {}) {
    const int n_total = space.total_dim();
    if (map.rows != n_total || map.cols != n_total)
        fail(ErrorKind::ShapeMismatch, "map must be N x N for this space");
    const auto count = checked_pow_u64(static_cast<std::uint64_t>(space.field().order()),
                                       static_cast<std::uint64_t>(n_total));
    if (!count.has_value() || *count > budgets.vectors)
        fail(ErrorKind::BudgetExceeded, "q^N exceeds the vector budget");
    if (!is_invertible(space.field(), map)) fail(ErrorKind::NotInvertible, "map is singular");

    VectorEnumerator vectors(space);
    while (auto x = vectors.next()) {
        BlockVector image{apply_map(space.field(), x->flat, map)};
        if (pwpi_weight(space, image) != pwpi_weight(space, *x)) return false;
    }
    return true;
}

namespace detail {

inline Matrix block_of(const SpaceSpec& space, const LinearMap& map, int i, int j) {
    Matrix block(space.block_size(i), space.block_size(j));
    for (int r = 0; r < block.rows; ++r)
        for (int c = 0; c < block.cols; ++c)
            block.at(r, c) = map.at(space.block_offset(i) + r, space.block_offset(j) + c);
    return block;
}

/// Does the row action alpha -> alpha*A preserve the block weight on GF(q)^k?
inline bool preserves_block_weight(const FieldSpec& field, const WeightFunction& weight, const Matrix& a) {
    const int k = a.rows;
    std::vector<Elem> alpha(k, 0);
    while (true) {
        const auto image = apply_map(field, alpha, a);
        if (block_weight(weight, image) != block_weight(weight, std::span<const Elem>(alpha))) return false;
        int pos = k - 1;
        while (pos >= 0 && alpha[pos] == field.order() - 1) alpha[pos--] = 0;
        if (pos < 0) return true;
        ++alpha[pos];
    }
}

}  // namespace detail

/**
 * Membership in the triangular subgroup: block (row i, column j) must vanish
 * unless j <= i in P, and every diagonal block must be invertible and
 * preserve the block weight (checked over all q^{k_i} block vectors).
 */
inline bool in_triangular_group(const SpaceSpec& space, const LinearMap& map) {
    const int n_total = space.total_dim();
    if (map.rows != n_total || map.cols != n_total)
        fail(ErrorKind::ShapeMismatch, "map must be N x N for this space");
    const auto& poset = space.poset();
    for (int i = 1; i <= space.block_count(); ++i) {
        for (int j = 1; j <= space.block_count(); ++j) {
            if (i == j || poset.leq(j, i)) continue;
            const auto block = detail::block_of(space, map, i, j);
            for (Elem e : block.entries)
                if (e != 0) return false;
        }
    }
    for (int i = 1; i <= space.block_count(); ++i) {
        const auto diag = detail::block_of(space, map, i, i);
        if (!is_invertible(space.field(), diag)) return false;
        if (!detail::preserves_block_weight(space.field(), space.weight(), diag)) return false;
    }
    return true;
}

/**
 * All invertible k x k matrices A with blockweight(alpha*A) = blockweight(alpha)
 * for every alpha, in lexicographic order. This is the isometry group of the
 * block weight on GF(q)^k; it supplies the diagonal blocks of the triangular
 * subgroup.
 */
inline std::vector<Matrix> enumerate_block_isometries(const FieldSpec& field, const WeightFunction& weight, int k,
                                                      std::uint64_t matrix_budget = kDefaultMatrixBudget) {
    std::vector<Matrix> members;
    MatrixEnumerator stream(k, field, /*invertible_only=*/true, matrix_budget);
    while (auto candidate = stream.next())
        if (detail::preserves_block_weight(field, weight, *candidate)) members.push_back(std::move(*candidate));
    return members;
}

/**
 * The order automorphism induced by an isometry: phi(i) is the unique maximal
 * element of the ideal generated by the pi-support of the image of alpha*e_i,
 * where alpha is the lexicographically first block vector of maximal block
 * weight. Raises NotPrime when that ideal has several maximal elements, which
 * happens exactly when the map was not an isometry.
 */
inline PosetAutomorphism phi_of(const SpaceSpec& space, const LinearMap& map) {
    const int n_total = space.total_dim();
    if (map.rows != n_total || map.cols != n_total)
        fail(ErrorKind::ShapeMismatch, "map must be N x N for this space");
    std::vector<int> images(space.block_count());
    for (int i = 1; i <= space.block_count(); ++i) {
        // lexicographically first representative of maximal block weight
        const int k = space.block_size(i);
        std::vector<Elem> alpha(k, 0);
        bool found = false;
        while (!found) {
            if (block_weight(space.weight(), std::span<const Elem>(alpha)) == space.weight().max_weight()) {
                found = true;
                break;
            }
            int pos = k - 1;
            while (pos >= 0 && alpha[pos] == space.field().order() - 1) alpha[pos--] = 0;
            if (pos < 0) break;
            ++alpha[pos];
        }
        if (!found) fail(ErrorKind::NotPrime, "no block vector attains the maximal weight");

        BlockVector x = space.zero_vector();
        std::copy(alpha.begin(), alpha.end(), x.flat.begin() + space.block_offset(i));
        const BlockVector image{apply_map(space.field(), x.flat, map)};
        const auto ideal = space.poset().ideal_of(pi_support(space, image));
        const auto maximal = space.poset().maximal_elements(ideal);
        if (maximal.size() != 1)
            fail(ErrorKind::NotPrime, "support ideal of block " + std::to_string(i) + " image has " +
                                          std::to_string(maximal.size()) + " maximal elements; map is not an isometry");
        images[i - 1] = maximal.front();
    }
    return PosetAutomorphism(space.poset(), std::move(images), &space.labels());
}

struct Decomposition {
    LinearMap triangular;
    PosetAutomorphism psi;
};

/**
 * Unique factorization M(T) = M(F) * M(T_psi) with F in the triangular
 * subgroup and psi = phi_of(T). DecompositionFailed signals that the input
 * was not an isometry.
 */
inline Decomposition decompose(const SpaceSpec& space, const LinearMap& map) {
    PosetAutomorphism psi = phi_of(space, map);
    const LinearMap t_psi_inv = build_t_psi(space, psi.inverse());
    LinearMap triangular = mat_mul(space.field(), map, t_psi_inv);
    if (!in_triangular_group(space, triangular))
        fail(ErrorKind::DecompositionFailed, "triangular factor fails membership; map is not an isometry");
    return Decomposition{std::move(triangular), std::move(psi)};
}

namespace detail {

/// Strictly comparable block pairs (row i, column j) with j < i in P.
inline std::vector<std::pair<int, int>> free_block_pairs(const SpaceSpec& space) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= space.block_count(); ++i)
        for (int j = 1; j <= space.block_count(); ++j)
            if (i != j && space.poset().leq(j, i)) pairs.emplace_back(i, j);
    return pairs;
}

struct GroupShape {
    std::vector<PosetAutomorphism> automorphisms;
    std::vector<std::vector<Matrix>> diagonal_choices;  // per block, 0-based
    std::vector<std::pair<int, int>> free_pairs;
    std::uint64_t free_entry_count = 0;
};

inline GroupShape analyze_group(const SpaceSpec& space, const Budgets& budgets) {
    GroupShape shape;
    shape.automorphisms = enumerate_automorphisms(space.poset(), &space.labels());
    std::map<int, std::vector<Matrix>> by_size;
    for (int i = 1; i <= space.block_count(); ++i) {
        const int k = space.block_size(i);
        auto it = by_size.find(k);
        if (it == by_size.end())
            it = by_size.emplace(k, enumerate_block_isometries(space.field(), space.weight(), k, budgets.matrices)).first;
        shape.diagonal_choices.push_back(it->second);
    }
    shape.free_pairs = free_block_pairs(space);
    for (const auto& [i, j] : shape.free_pairs)
        shape.free_entry_count += static_cast<std::uint64_t>(space.block_size(i)) * space.block_size(j);
    return shape;
}

}  // namespace detail

/// Exact order of the linear isometry group, computed from the factorization.
inline BigUint group_order(const SpaceSpec& space, const Budgets& budgets = {}) {
    const auto shape = detail::analyze_group(space, budgets);
    BigUint order(1);
    for (const auto& choices : shape.diagonal_choices) order *= choices.size();
    for (std::uint64_t e = 0; e < shape.free_entry_count; ++e)
        order *= static_cast<std::uint64_t>(space.field().order());
    order *= shape.automorphisms.size();
    return order;
}

/**
 * Structured stream of the full isometry group: every member appears exactly
 * once as M(F) * M(T_psi), iterating psi over the automorphisms (outermost),
 * then the diagonal blocks through the block-isometry lists, then the free
 * below-diagonal entries through GF(q) odometers. Deterministic order.
 */
class GroupEnumerator {
  public:
    explicit GroupEnumerator(const SpaceSpec& space, const Budgets& budgets = {}, bool triangular_only = false)
        : space_(&space), shape_(detail::analyze_group(space, budgets)), triangular_only_(triangular_only) {
        BigUint order(1);
        for (const auto& choices : shape_.diagonal_choices) order *= choices.size();
        for (std::uint64_t e = 0; e < shape_.free_entry_count; ++e)
            order *= static_cast<std::uint64_t>(space.field().order());
        if (!triangular_only) order *= shape_.automorphisms.size();
        if (order.exceeds(budgets.group))
            fail(ErrorKind::BudgetExceeded, "group order " + order.to_string() + " exceeds budget");
        order_ = order;
        diag_index_.assign(shape_.diagonal_choices.size(), 0);
        free_digits_.assign(shape_.free_entry_count, 0);
        for (const auto& choices : shape_.diagonal_choices)
            if (choices.empty()) done_ = true;  // cannot happen for a valid weight; identity always qualifies
        if (shape_.automorphisms.empty()) done_ = true;
        psi_matrix_ = done_ ? Matrix() : build_t_psi(space, shape_.automorphisms[0]);
    }

    const BigUint& order() const { return order_; }

    std::optional<LinearMap> next() {
        if (done_) return std::nullopt;
        LinearMap triangular = build_triangular();
        LinearMap result = triangular_only_ ? std::move(triangular)
                                            : mat_mul(space_->field(), triangular, psi_matrix_);
        advance();
        return result;
    }

  private:
    LinearMap build_triangular() const {
        const int n_total = space_->total_dim();
        LinearMap f(n_total, n_total);
        for (int i = 1; i <= space_->block_count(); ++i) {
            const Matrix& diag = shape_.diagonal_choices[i - 1][diag_index_[i - 1]];
            for (int r = 0; r < diag.rows; ++r)
                for (int c = 0; c < diag.cols; ++c)
                    f.at(space_->block_offset(i) + r, space_->block_offset(i) + c) = diag.at(r, c);
        }
        std::size_t digit = 0;
        for (const auto& [i, j] : shape_.free_pairs)
            for (int r = 0; r < space_->block_size(i); ++r)
                for (int c = 0; c < space_->block_size(j); ++c)
                    f.at(space_->block_offset(i) + r, space_->block_offset(j) + c) = free_digits_[digit++];
        return f;
    }

    void advance() {
        const Elem top = static_cast<Elem>(space_->field().order() - 1);
        for (std::size_t d = free_digits_.size(); d-- > 0;) {
            if (free_digits_[d] < top) {
                ++free_digits_[d];
                return;
            }
            free_digits_[d] = 0;
        }
        for (std::size_t b = diag_index_.size(); b-- > 0;) {
            if (diag_index_[b] + 1 < shape_.diagonal_choices[b].size()) {
                ++diag_index_[b];
                return;
            }
            diag_index_[b] = 0;
        }
        if (!triangular_only_ && ++psi_index_ < shape_.automorphisms.size()) {
            psi_matrix_ = build_t_psi(*space_, shape_.automorphisms[psi_index_]);
            return;
        }
        done_ = true;
    }

    const SpaceSpec* space_;
    detail::GroupShape shape_;
    bool triangular_only_;
    BigUint order_;
    std::size_t psi_index_ = 0;
    Matrix psi_matrix_;
    std::vector<std::size_t> diag_index_;
    std::vector<Elem> free_digits_;
    bool done_ = false;
};

/// Materialized structured enumeration, in stream order.
inline std::vector<LinearMap> enumerate_group(const SpaceSpec& space, const Budgets& budgets = {}) {
    GroupEnumerator stream(space, budgets);
    std::vector<LinearMap> members;
    while (auto m = stream.next()) members.push_back(std::move(*m));
    return members;
}

/// Materialized triangular subgroup, in stream order.
inline std::vector<LinearMap> enumerate_triangular_group(const SpaceSpec& space, const Budgets& budgets = {}) {
    GroupEnumerator stream(space, budgets, /*triangular_only=*/true);
    std::vector<LinearMap> members;
    while (auto m = stream.next()) members.push_back(std::move(*m));
    return members;
}

/**
 * Brute-force ground truth: filters every invertible N x N matrix through the
 * exhaustive isometry test. Output is in lexicographic order.
 */
inline std::vector<LinearMap> oracle_group(const SpaceSpec& space, const Budgets& budgets = {}) {
    const int n_total = space.total_dim();
    const auto vector_count = checked_pow_u64(static_cast<std::uint64_t>(space.field().order()),
                                              static_cast<std::uint64_t>(n_total));
    if (!vector_count.has_value() || *vector_count > budgets.vectors)
        fail(ErrorKind::BudgetExceeded, "q^N exceeds the vector budget");
    std::vector<LinearMap> members;
    MatrixEnumerator stream(n_total, space.field(), /*invertible_only=*/true, budgets.matrices);
    while (auto candidate = stream.next())
        if (is_isometry_exhaustive(space, *candidate, budgets)) members.push_back(std::move(*candidate));
    return members;
}

}  // namespace pwpi
