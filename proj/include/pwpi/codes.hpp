/**
 * @file codes.hpp
 * @brief Linear codes in a (P,w,pi)-space: minimum distance and equivalence
 *        under the linear isometry group.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwpi/errors.hpp"
#include "pwpi/field_linalg.hpp"
#include "pwpi/isometry.hpp"
#include "pwpi/space.hpp"

namespace pwpi {

/// A linear code given by a full-rank generator matrix.
class LinearCode {
  public:
    LinearCode(const FieldSpec& field, Matrix generator) : generator_(std::move(generator)) {
        if (generator_.rows < 1) fail(ErrorKind::RankDeficient, "generator matrix needs at least one row");
        if (mat_rank(field, generator_) != generator_.rows)
            fail(ErrorKind::RankDeficient, "generator rows are linearly dependent");
    }

    const Matrix& generator() const { return generator_; }
    int dimension() const { return generator_.rows; }
    int length() const { return generator_.cols; }

  private:
    Matrix generator_;
};

namespace detail {

inline void check_code_shape(const SpaceSpec& space, const LinearCode& code) {
    if (code.length() != space.total_dim())
        fail(ErrorKind::ShapeMismatch, "code length " + std::to_string(code.length()) +
                                           " differs from space dimension " + std::to_string(space.total_dim()));
}

/// Calls fn(codeword) for each of the q^k codewords.
template <typename Fn>
void for_each_codeword(const SpaceSpec& space, const LinearCode& code, Fn&& fn) {
    const int k = code.dimension();
    std::vector<Elem> message(k, 0);
    while (true) {
        fn(apply_map(space.field(), message, code.generator()));
        int pos = k - 1;
        while (pos >= 0 && message[pos] == space.field().order() - 1) message[pos--] = 0;
        if (pos < 0) return;
        ++message[pos];
    }
}

}  // namespace detail

/// Minimum (P,w,pi)-weight over the nonzero codewords.
inline int min_distance(const SpaceSpec& space, const LinearCode& code, const Budgets& budgets = {}) {
    detail::check_code_shape(space, code);
    const auto count = checked_pow_u64(static_cast<std::uint64_t>(space.field().order()),
                                       static_cast<std::uint64_t>(code.dimension()));
    if (!count.has_value() || *count > budgets.vectors)
        fail(ErrorKind::BudgetExceeded, "q^k exceeds the vector budget");
    int best = -1;
    detail::for_each_codeword(space, code, [&](std::vector<Elem> word) {
        bool zero = true;
        for (Elem u : word)
            if (u != 0) zero = false;
        if (zero) return;
        const int w = pwpi_weight(space, BlockVector{std::move(word)});
        if (best < 0 || w < best) best = w;
    });
    return best;
}

struct EquivalenceWitness {
    LinearMap map;
    PosetAutomorphism psi;
};

/**
 * Searches the structured isometry group for a map carrying one code onto the
 * other (as sets of codewords, compared via canonical row-space forms).
 * Returns the first witness in enumeration order, tagged with its induced
 * poset automorphism, or nullopt when the codes are inequivalent.
 */
inline std::optional<EquivalenceWitness> are_equivalent(const SpaceSpec& space, const LinearCode& first,
                                                        const LinearCode& second, const Budgets& budgets = {}) {
    detail::check_code_shape(space, first);
    detail::check_code_shape(space, second);
    if (first.dimension() != second.dimension()) return std::nullopt;
    if (min_distance(space, first, budgets) != min_distance(space, second, budgets)) return std::nullopt;

    const Matrix target = rref(space.field(), second.generator());
    GroupEnumerator stream(space, budgets);
    while (auto map = stream.next()) {
        const Matrix image = mat_mul(space.field(), first.generator(), *map);
        if (rref(space.field(), image) == target)
            return EquivalenceWitness{*map, phi_of(space, *map)};
    }
    return std::nullopt;
}

}  // namespace pwpi
