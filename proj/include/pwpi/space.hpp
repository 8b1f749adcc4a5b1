/**
 * @file space.hpp
 * @brief The (P,w,pi)-space: block vectors, pi-support, weight, and distance.
 *
 * A space bundles a field GF(q), a poset P on [n], a label map pi with block
 * sizes k_1..k_n, and a weight w on GF(q). Vectors live in GF(q)^N with
 * N = sum k_i, stored flat; coordinate (i, z) of block i sits at flat index
 * offset(i) + z - 1, blocks in index order. The weight of x sums the block
 * weight of x_i over the maximal elements of the ideal generated by the
 * pi-support and charges M_w for every non-maximal ideal member.
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pwpi/errors.hpp"
#include "pwpi/field_linalg.hpp"
#include "pwpi/poset.hpp"
#include "pwpi/weight.hpp"

namespace pwpi {

struct BlockVector {
    std::vector<Elem> flat;

    bool operator==(const BlockVector&) const = default;
};

class SpaceSpec {
  public:
    SpaceSpec(FieldSpec field, Poset poset, LabelMap labels, WeightFunction weight)
        : field_(std::move(field)), poset_(std::move(poset)), labels_(std::move(labels)), weight_(std::move(weight)) {
        if (labels_.size() != poset_.size())
            fail(ErrorKind::ShapeMismatch, "label map size differs from poset size");
        if (weight_.field_order() != field_.order())
            fail(ErrorKind::ShapeMismatch, "weight table order differs from field order");
        offsets_.assign(poset_.size() + 1, 0);
        for (int i = 1; i <= poset_.size(); ++i) offsets_[i] = offsets_[i - 1] + labels_.label(i);
    }

    const FieldSpec& field() const { return field_; }
    const Poset& poset() const { return poset_; }
    const LabelMap& labels() const { return labels_; }
    const WeightFunction& weight() const { return weight_; }

    int block_count() const { return poset_.size(); }
    int total_dim() const { return labels_.total(); }

    int block_size(int i) const { return labels_.label(i); }
    int block_offset(int i) const { return offsets_[i - 1]; }

    std::span<const Elem> block(const BlockVector& x, int i) const {
        check_shape(x);
        return {x.flat.data() + block_offset(i), static_cast<std::size_t>(block_size(i))};
    }

    void check_shape(const BlockVector& x) const {
        if (static_cast<int>(x.flat.size()) != total_dim())
            fail(ErrorKind::ShapeMismatch, "vector length " + std::to_string(x.flat.size()) +
                                               " differs from space dimension " + std::to_string(total_dim()));
    }

    BlockVector zero_vector() const { return BlockVector{std::vector<Elem>(total_dim(), 0)}; }

    bool operator==(const SpaceSpec& other) const {
        return field_ == other.field_ && poset_ == other.poset_ && labels_ == other.labels_ &&
               weight_ == other.weight_;
    }

  private:
    FieldSpec field_;
    Poset poset_;
    LabelMap labels_;
    WeightFunction weight_;
    std::vector<int> offsets_;
};

/// Assembles a BlockVector from per-block integer lists, validating shape and range.
inline BlockVector block_vector_from_blocks(const SpaceSpec& space, const std::vector<std::vector<int>>& blocks) {
    if (static_cast<int>(blocks.size()) != space.block_count())
        fail(ErrorKind::ShapeMismatch, "expected " + std::to_string(space.block_count()) + " blocks, got " +
                                           std::to_string(blocks.size()));
    BlockVector x = space.zero_vector();
    for (int i = 1; i <= space.block_count(); ++i) {
        const auto& block = blocks[i - 1];
        if (static_cast<int>(block.size()) != space.block_size(i))
            fail(ErrorKind::ShapeMismatch, "block " + std::to_string(i) + " must have length " +
                                               std::to_string(space.block_size(i)));
        for (int z = 0; z < space.block_size(i); ++z) {
            const int value = block[z];
            if (value < 0 || value >= space.field().order())
                fail(ErrorKind::ShapeMismatch, "entry " + std::to_string(value) + " outside 0..q-1");
            x.flat[space.block_offset(i) + z] = static_cast<Elem>(value);
        }
    }
    return x;
}

inline std::vector<std::vector<int>> blocks_of(const SpaceSpec& space, const BlockVector& x) {
    space.check_shape(x);
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= space.block_count(); ++i) {
        auto span = space.block(x, i);
        blocks.emplace_back(span.begin(), span.end());
    }
    return blocks;
}

/// supp_pi(x): indices of the nonzero blocks.
inline std::vector<int> pi_support(const SpaceSpec& space, const BlockVector& x) {
    space.check_shape(x);
    std::vector<int> support;
    for (int i = 1; i <= space.block_count(); ++i) {
        for (Elem u : space.block(x, i))
            if (u != 0) {
                support.push_back(i);
                break;
            }
    }
    return support;
}

/// The (P,w,pi)-weight of x.
inline int pwpi_weight(const SpaceSpec& space, const BlockVector& x) {
    const auto support = pi_support(space, x);
    const auto ideal = space.poset().ideal_of(support);
    const auto maximal = space.poset().maximal_elements(ideal);
    int total = 0;
    for (int i : maximal) total += block_weight(space.weight(), space.block(x, i));
    total += space.weight().max_weight() * static_cast<int>(ideal.size() - maximal.size());
    return total;
}

inline BlockVector vec_sub(const SpaceSpec& space, const BlockVector& x, const BlockVector& y) {
    space.check_shape(x);
    space.check_shape(y);
    BlockVector diff = space.zero_vector();
    for (int t = 0; t < space.total_dim(); ++t) diff.flat[t] = space.field().sub(x.flat[t], y.flat[t]);
    return diff;
}

/// d(x, y) = w(x - y).
inline int pwpi_distance(const SpaceSpec& space, const BlockVector& x, const BlockVector& y) {
    return pwpi_weight(space, vec_sub(space, x, y));
}

/**
 * Streams all q^N vectors in lexicographic order (first coordinate most
 * significant). Callers enforce their own budgets before looping.
 */
class VectorEnumerator {
  public:
    explicit VectorEnumerator(const SpaceSpec& space)
        : space_(&space), current_(space.zero_vector()) {}

    std::optional<BlockVector> next() {
        if (done_) return std::nullopt;
        BlockVector out = current_;
        const Elem top = static_cast<Elem>(space_->field().order() - 1);
        for (std::size_t t = current_.flat.size(); t-- > 0;) {
            if (current_.flat[t] < top) {
                ++current_.flat[t];
                return out;
            }
            current_.flat[t] = 0;
        }
        done_ = true;
        return out;
    }

  private:
    const SpaceSpec* space_;
    BlockVector current_;
    bool done_ = false;
};

}  // namespace pwpi
