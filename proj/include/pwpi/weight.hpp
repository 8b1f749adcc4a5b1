/**
 * @file weight.hpp
 * @brief Weight functions on GF(q) and the induced max-based block weight.
 *
 * A weight assigns a nonnegative integer to every field element subject to
 * w(u) = 0 iff u = 0, w(-u) = w(u), and w(u+v) <= w(u) + w(v). All three are
 * validated exhaustively at construction (q^2 pairs for subadditivity).
 * Weights stay integer-valued so every downstream computation is exact.
 */

#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pwpi/errors.hpp"
#include "pwpi/field_linalg.hpp"

namespace pwpi {

class WeightFunction {
  public:
    int field_order() const { return static_cast<int>(table_.size()); }
    int operator()(Elem u) const { return table_[u]; }

    /// M_w, the largest value the weight takes.
    int max_weight() const { return max_; }

    const std::vector<int>& table() const { return table_; }

    bool operator==(const WeightFunction&) const = default;

    friend WeightFunction make_weight(const FieldSpec& field, const std::vector<int>& table);

  private:
    WeightFunction(std::vector<int> table, int max) : table_(std::move(table)), max_(max) {}

    std::vector<int> table_;
    int max_ = 0;
};

inline WeightFunction make_weight(const FieldSpec& field, const std::vector<int>& table) {
    const int q = field.order();
    if (static_cast<int>(table.size()) != q)
        fail(ErrorKind::AxiomViolation, "weight table must assign all " + std::to_string(q) + " elements");
    for (int u = 0; u < q; ++u)
        if (table[u] < 0)
            fail(ErrorKind::AxiomViolation,
                 "axiom (a): w(" + std::to_string(u) + ") = " + std::to_string(table[u]) + " is negative");
    if (table[0] != 0) fail(ErrorKind::AxiomViolation, "axiom (b): w(0) must be 0");
    for (int u = 1; u < q; ++u)
        if (table[u] == 0) fail(ErrorKind::AxiomViolation, "axiom (b): w(" + std::to_string(u) + ") = 0 for nonzero element");
    for (int u = 0; u < q; ++u) {
        const Elem nu = field.neg(static_cast<Elem>(u));
        if (table[nu] != table[u])
            fail(ErrorKind::AxiomViolation, "axiom (c): w(-" + std::to_string(u) + ") = " + std::to_string(table[nu]) +
                                                " differs from w(" + std::to_string(u) + ") = " + std::to_string(table[u]));
    }
    for (int u = 0; u < q; ++u)
        for (int v = 0; v < q; ++v) {
            const Elem sum = field.add(static_cast<Elem>(u), static_cast<Elem>(v));
            if (table[sum] > table[u] + table[v])
                fail(ErrorKind::AxiomViolation, "axiom (d): w(" + std::to_string(u) + "+" + std::to_string(v) +
                                                    ") exceeds w(" + std::to_string(u) + ")+w(" + std::to_string(v) + ")");
        }
    return WeightFunction(table, *std::max_element(table.begin(), table.end()));
}

/// Block weight: the maximum coordinate weight within one block.
inline int block_weight(const WeightFunction& weight, std::span<const Elem> block) {
    if (block.empty()) fail(ErrorKind::EmptyBlock, "block weight of an empty block");
    int best = 0;
    for (Elem u : block) best = std::max(best, weight(u));
    return best;
}

/**
 * If w is a scalar multiple of the Hamming weight, returns the factor
 * (w(u) = alpha for every nonzero u); otherwise nullopt.
 */
inline std::optional<int> hamming_scalar_factor(const WeightFunction& weight) {
    const auto& table = weight.table();
    const int alpha = table[1];
    for (std::size_t u = 2; u < table.size(); ++u)
        if (table[u] != alpha) return std::nullopt;
    return alpha;
}

inline std::vector<int> hamming_table(int q) {
    std::vector<int> table(q, 1);
    table[0] = 0;
    return table;
}

/// Lee weight min(u, q-u); meaningful for prime fields where codes are residues.
inline std::vector<int> lee_table(int q) {
    std::vector<int> table(q, 0);
    for (int u = 1; u < q; ++u) table[u] = std::min(u, q - u);
    return table;
}

}  // namespace pwpi
