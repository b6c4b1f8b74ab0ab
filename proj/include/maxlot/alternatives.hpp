#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <maxlot/errors.hpp>

namespace maxlot {

/// One alternative: its position in the fixed alternative list plus a label.
struct Alternative {
    int index = 0;
    std::string label;
};

/// The fixed, ordered list of alternatives of a problem instance. The list
/// order is the global lexicographic tie-break order used by lex_maximal and
/// by deterministic mechanisms.
class Alternatives {
  public:
    Alternatives() = default;

    explicit Alternatives(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) throw Error("alternative list must be non-empty");
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty()) throw Error("empty alternative label");
            for (std::size_t j = i + 1; j < labels_.size(); ++j)
                if (labels_[i] == labels_[j])
                    throw Error("duplicate alternative label '" + labels_[i] + "'");
        }
    }

    /// Labels a, b, c, ... for quick construction (m <= 26).
    static Alternatives default_labels(int count) {
        std::vector<std::string> labels;
        labels.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) labels.push_back(std::string(1, char('a' + i)));
        return Alternatives(std::move(labels));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
    const std::vector<std::string>& labels() const { return labels_; }

    Alternative at(int index) const { return Alternative{index, label(index)}; }

    std::optional<int> index_of(std::string_view label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return static_cast<int>(i);
        return std::nullopt;
    }

    friend bool operator==(const Alternatives& a, const Alternatives& b) {
        return a.labels_ == b.labels_;
    }

  private:
    std::vector<std::string> labels_;
};

}  // namespace maxlot
