/**
 * @file space_io.hpp
 * @brief Space description files and the JSON wire forms for vectors,
 *        matrices, and generator matrices.
 *
 * A space file is a JSON document:
 *
 *   {
 *     "q": 2,
 *     "n": 2,
 *     "cover_relations": [[1, 2]],
 *     "labels": [1, 1],
 *     "weight": {"0": 0, "1": 1},
 *     "budgets": {"matrices": 67108864, "vectors": 1048576, "group": 1000000}
 *   }
 *
 * with budgets optional. Vectors are block lists like [[0],[1,0],[0]] and
 * matrices row lists like [[1,0],[1,1]], all entries decimal element codes.
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pwpi/errors.hpp"
#include "pwpi/isometry.hpp"
#include "pwpi/space.hpp"

namespace pwpi {

struct SpaceDescription {
    int q = 0;
    int n = 0;
    std::vector<std::pair<int, int>> cover_relations;
    std::vector<int> labels;
    std::vector<int> weight_table;
    std::optional<Budgets> budgets;
};

namespace detail {

inline int require_int(const nlohmann::json& doc, const std::string& field) {
    if (!doc.contains(field)) fail(ErrorKind::ParseError, "field '" + field + "': missing");
    const auto& value = doc.at(field);
    if (!value.is_number_integer()) fail(ErrorKind::ParseError, "field '" + field + "': expected an integer");
    return value.get<int>();
}

inline std::uint64_t require_u64(const nlohmann::json& value, const std::string& field) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0))
        fail(ErrorKind::ParseError, "field '" + field + "': expected a nonnegative integer");
    return value.get<std::uint64_t>();
}

}  // namespace detail

inline SpaceDescription parse_space_description(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::ParseError, "space description must be a JSON object");

    SpaceDescription desc;
    desc.q = detail::require_int(doc, "q");
    desc.n = detail::require_int(doc, "n");

    if (!doc.contains("cover_relations") || !doc.at("cover_relations").is_array())
        fail(ErrorKind::ParseError, "field 'cover_relations': expected an array of pairs");
    for (const auto& pair : doc.at("cover_relations")) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
            fail(ErrorKind::ParseError, "field 'cover_relations': each entry must be a pair of integers");
        desc.cover_relations.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }

    if (!doc.contains("labels") || !doc.at("labels").is_array())
        fail(ErrorKind::ParseError, "field 'labels': expected an array of integers");
    for (const auto& label : doc.at("labels")) {
        if (!label.is_number_integer()) fail(ErrorKind::ParseError, "field 'labels': entries must be integers");
        desc.labels.push_back(label.get<int>());
    }
    if (static_cast<int>(desc.labels.size()) != desc.n)
        fail(ErrorKind::ParseError, "field 'labels': expected " + std::to_string(desc.n) + " entries");

    if (!doc.contains("weight") || !doc.at("weight").is_object())
        fail(ErrorKind::ParseError, "field 'weight': expected an object keyed by element code");
    const auto& weight = doc.at("weight");
    if (weight.size() != static_cast<std::size_t>(desc.q))
        fail(ErrorKind::ParseError, "field 'weight': expected exactly " + std::to_string(desc.q) + " entries");
    desc.weight_table.resize(desc.q);
    for (int u = 0; u < desc.q; ++u) {
        const std::string key = std::to_string(u);
        if (!weight.contains(key)) fail(ErrorKind::ParseError, "field 'weight': missing key \"" + key + "\"");
        if (!weight.at(key).is_number_integer())
            fail(ErrorKind::ParseError, "field 'weight': value for \"" + key + "\" must be an integer");
        desc.weight_table[u] = weight.at(key).get<int>();
    }

    if (doc.contains("budgets")) {
        if (!doc.at("budgets").is_object()) fail(ErrorKind::ParseError, "field 'budgets': expected an object");
        Budgets budgets;
        const auto& b = doc.at("budgets");
        for (const auto& [key, value] : b.items()) {
            if (key == "matrices")
                budgets.matrices = detail::require_u64(value, "budgets.matrices");
            else if (key == "vectors")
                budgets.vectors = detail::require_u64(value, "budgets.vectors");
            else if (key == "group")
                budgets.group = detail::require_u64(value, "budgets.group");
            else
                fail(ErrorKind::ParseError, "field 'budgets': unknown key \"" + key + "\"");
        }
        desc.budgets = budgets;
    }

    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "q" && key != "n" && key != "cover_relations" && key != "labels" && key != "weight" &&
            key != "budgets")
            fail(ErrorKind::ParseError, "unknown field '" + key + "'");
    }
    return desc;
}

/// Constructs the fully validated space, naming the offending field on error.
inline SpaceSpec build_space(const SpaceDescription& desc) {
    auto wrap = [](const char* field, auto&& fn) -> decltype(fn()) {
        try {
            return fn();
        } catch (const Error& e) {
            throw Error(e.kind(), std::string("field '") + field + "': " + e.what());
        }
    };
    FieldSpec field = wrap("q", [&] { return make_field(desc.q); });
    Poset poset = wrap("cover_relations", [&] { return Poset::from_cover_relations(desc.n, desc.cover_relations); });
    LabelMap labels = wrap("labels", [&] { return LabelMap(desc.labels); });
    WeightFunction weight = wrap("weight", [&] { return make_weight(field, desc.weight_table); });
    return SpaceSpec(std::move(field), std::move(poset), std::move(labels), std::move(weight));
}

inline SpaceSpec parse_space_file(const std::string& text) { return build_space(parse_space_description(text)); }

/// Normalized description: canonical cover relations, weight keys "0".."q-1".
inline nlohmann::ordered_json space_to_json(const SpaceSpec& space, const std::optional<Budgets>& budgets = {}) {
    nlohmann::ordered_json doc;
    doc["q"] = space.field().order();
    doc["n"] = space.block_count();
    auto covers = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : space.poset().cover_relations()) covers.push_back({lo, hi});
    doc["cover_relations"] = std::move(covers);
    doc["labels"] = space.labels().sizes();
    nlohmann::ordered_json weight;
    for (int u = 0; u < space.field().order(); ++u) weight[std::to_string(u)] = space.weight().table()[u];
    doc["weight"] = std::move(weight);
    if (budgets.has_value()) {
        doc["budgets"] = {{"matrices", budgets->matrices}, {"vectors", budgets->vectors}, {"group", budgets->group}};
    }
    return doc;
}

inline std::string serialize_space(const SpaceSpec& space, const std::optional<Budgets>& budgets = {}) {
    return space_to_json(space, budgets).dump();
}

// ---------------------------------------------------------------------------
// Wire forms for vectors and matrices
// ---------------------------------------------------------------------------

inline BlockVector parse_block_vector(const SpaceSpec& space, const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, std::string("vector: ") + e.what());
    }
    if (!doc.is_array()) fail(ErrorKind::ParseError, "vector: expected a list of blocks");
    std::vector<std::vector<int>> blocks;
    for (const auto& block : doc) {
        if (!block.is_array()) fail(ErrorKind::ParseError, "vector: each block must be a list of integers");
        std::vector<int> entries;
        for (const auto& entry : block) {
            if (!entry.is_number_integer()) fail(ErrorKind::ParseError, "vector: entries must be integers");
            entries.push_back(entry.get<int>());
        }
        blocks.push_back(std::move(entries));
    }
    return block_vector_from_blocks(space, blocks);
}

inline nlohmann::ordered_json block_vector_to_json(const SpaceSpec& space, const BlockVector& x) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& block : blocks_of(space, x)) doc.push_back(block);
    return doc;
}

inline Matrix parse_matrix(const FieldSpec& field, const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, std::string("matrix: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) fail(ErrorKind::ParseError, "matrix: expected a nonempty list of rows");
    const std::size_t cols = doc[0].is_array() ? doc[0].size() : 0;
    Matrix m(static_cast<int>(doc.size()), static_cast<int>(cols));
    for (std::size_t r = 0; r < doc.size(); ++r) {
        const auto& row = doc[r];
        if (!row.is_array() || row.size() != cols)
            fail(ErrorKind::ParseError, "matrix: rows must be lists of equal length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer()) fail(ErrorKind::ParseError, "matrix: entries must be integers");
            const int value = row[c].get<int>();
            if (value < 0 || value >= field.order())
                fail(ErrorKind::ParseError, "matrix: entry " + std::to_string(value) + " outside 0..q-1");
            m.at(static_cast<int>(r), static_cast<int>(c)) = static_cast<Elem>(value);
        }
    }
    return m;
}

inline nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(static_cast<int>(m.at(r, c)));
        doc.push_back(std::move(row));
    }
    return doc;
}

}  // namespace pwpi
