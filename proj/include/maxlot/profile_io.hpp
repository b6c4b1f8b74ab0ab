#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <maxlot/errors.hpp>
#include <maxlot/profile.hpp>

namespace maxlot {

// Profile file grammar:
//
//   alternatives: a,b,c        header; the list order is the tie-break order
//   2: a > b = c               <count>: ranking, ties joined by '='
//   matrix 1:                  <count> voters with a raw SSB matrix,
//   0 1/2 -1                   followed by |A| rows of rationals
//   -1/2 0 1
//   1 -1 0
//   # comment                  '#' starts a comment anywhere in a line

namespace detail {

inline std::string_view trim_view(std::string_view s, int& column) {
    std::size_t begin = 0;
    while (begin < s.size() && (s[begin] == ' ' || s[begin] == '\t')) ++begin;
    std::size_t end = s.size();
    while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
    column += static_cast<int>(begin);
    return s.substr(begin, end - begin);
}

inline bool valid_label(std::string_view label) {
    if (label.empty()) return false;
    for (char c : label)
        if (c == ',' || c == '>' || c == '=' || c == ':' || c == '#' || c == ' ' || c == '\t')
            return false;
    return true;
}

/// Splits on a delimiter, keeping the 1-based column of each piece.
inline std::vector<std::pair<std::string_view, int>> split_with_columns(std::string_view text,
                                                                        char delimiter,
                                                                        int base_column) {
    std::vector<std::pair<std::string_view, int>> pieces;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == delimiter) {
            int column = base_column + static_cast<int>(start);
            std::string_view piece = text.substr(start, i - start);
            pieces.emplace_back(trim_view(piece, column), column);
            start = i + 1;
        }
    }
    return pieces;
}

inline long long parse_count(std::string_view text, int line, int column) {
    int col = column;
    text = trim_view(text, col);
    if (text.empty()) throw ParseError("missing voter count", line, col);
    for (char c : text)
        if (c < '0' || c > '9')
            throw ParseError(
                "voter count must be a positive integer, got '" + std::string(text) + "'", line,
                col);
    long long value = 0;
    for (char c : text) {
        value = value * 10 + (c - '0');
        if (value > 1000000000) throw ParseError("voter count too large", line, col);
    }
    if (value == 0) throw ParseError("voter count must be positive", line, col);
    return value;
}

struct RawLine {
    std::string_view text;
    int number;
};

inline std::vector<RawLine> content_lines(std::string_view text) {
    std::vector<RawLine> lines;
    int number = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            ++number;
            std::string_view line = text.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            const std::size_t hash = line.find('#');
            if (hash != std::string_view::npos) line = line.substr(0, hash);
            int column = 1;
            if (!trim_view(line, column).empty()) lines.push_back(RawLine{line, number});
            start = i + 1;
        }
    }
    return lines;
}

}  // namespace detail

/// Parses the profile file grammar above. Errors carry 1-based line/column.
inline Profile parse_profile(std::string_view text) {
    const std::vector<detail::RawLine> lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("missing 'alternatives:' header", 1, 1);

    // Header.
    int column = 1;
    std::string_view header = detail::trim_view(lines[0].text, column);
    constexpr std::string_view kPrefix = "alternatives:";
    if (header.substr(0, kPrefix.size()) != kPrefix)
        throw ParseError("expected 'alternatives: <labels>' header", lines[0].number, column);
    std::vector<std::string> labels;
    for (const auto& [piece, col] :
         detail::split_with_columns(header.substr(kPrefix.size()), ',',
                                    column + static_cast<int>(kPrefix.size()))) {
        if (!detail::valid_label(piece))
            throw ParseError("invalid alternative label '" + std::string(piece) + "'",
                             lines[0].number, col);
        for (const std::string& seen : labels)
            if (seen == piece)
                throw DuplicateAlternativeError("duplicate alternative '" + std::string(piece) + "'",
                                                lines[0].number, col);
        labels.emplace_back(piece);
    }
    const Alternatives alternatives(std::move(labels));
    const int m = alternatives.size();

    std::vector<Profile::Entry> entries;
    std::size_t i = 1;
    while (i < lines.size()) {
        int col = 1;
        std::string_view line = detail::trim_view(lines[i].text, col);
        const int line_no = lines[i].number;

        constexpr std::string_view kMatrix = "matrix";
        if (line.substr(0, kMatrix.size()) == kMatrix) {
            int count_col = col + static_cast<int>(kMatrix.size());
            std::string_view rest = detail::trim_view(line.substr(kMatrix.size()), count_col);
            if (rest.empty() || rest.back() != ':')
                throw ParseError("expected 'matrix <count>:'", line_no, count_col);
            rest.remove_suffix(1);
            const long long count = detail::parse_count(rest, line_no, count_col);
            if (lines.size() - i - 1 < static_cast<std::size_t>(m))
                throw ParseError("matrix block needs " + std::to_string(m) + " rows", line_no,
                                 col);
            std::vector<Rational> matrix_entries;
            matrix_entries.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
            for (int row = 0; row < m; ++row) {
                ++i;
                int row_col = 1;
                std::string_view row_text = detail::trim_view(lines[i].text, row_col);
                std::vector<std::pair<std::string_view, int>> cells;
                std::size_t start = 0;
                for (std::size_t k = 0; k <= row_text.size(); ++k) {
                    if (k == row_text.size() || row_text[k] == ' ' || row_text[k] == '\t') {
                        if (k > start)
                            cells.emplace_back(row_text.substr(start, k - start),
                                               row_col + static_cast<int>(start));
                        start = k + 1;
                    }
                }
                if (cells.size() != static_cast<std::size_t>(m))
                    throw ParseError("matrix row needs " + std::to_string(m) + " entries",
                                     lines[i].number, row_col);
                for (const auto& [cell, cell_col] : cells) {
                    try {
                        matrix_entries.push_back(rational_from_string(cell));
                    } catch (const Error&) {
                        throw ParseError("malformed rational '" + std::string(cell) + "'",
                                         lines[i].number, cell_col);
                    }
                }
            }
            try {
                entries.emplace_back(SSBMatrix(m, std::move(matrix_entries)), count);
            } catch (const NotSkewSymmetricError& e) {
                throw NotSkewSymmetricError("matrix block ending at line " +
                                            std::to_string(lines[i].number) + ": " + e.what());
            }
            ++i;
            continue;
        }

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("expected '<count>: <ranking>' or 'matrix <count>:'", line_no, col);
        const long long count = detail::parse_count(line.substr(0, colon), line_no, col);

        std::vector<std::vector<int>> classes;
        std::vector<bool> mentioned(static_cast<std::size_t>(m), false);
        const int ranking_col = col + static_cast<int>(colon) + 1;
        for (const auto& [class_text, class_col] : detail::split_with_columns(
                 line.substr(colon + 1), '>', ranking_col)) {
            std::vector<int> cls;
            for (const auto& [label, label_col] :
                 detail::split_with_columns(class_text, '=', class_col)) {
                if (label.empty())
                    throw ParseError("empty alternative in ranking", line_no, label_col);
                const auto index = alternatives.index_of(label);
                if (!index)
                    throw UnknownAlternativeError("unknown alternative '" + std::string(label) + "'",
                                                  line_no, label_col);
                if (mentioned[static_cast<std::size_t>(*index)])
                    throw DuplicateAlternativeError(
                        "alternative '" + std::string(label) + "' mentioned twice", line_no,
                        label_col);
                mentioned[static_cast<std::size_t>(*index)] = true;
                cls.push_back(*index);
            }
            classes.push_back(std::move(cls));
        }
        for (int alt = 0; alt < m; ++alt)
            if (!mentioned[static_cast<std::size_t>(alt)])
                throw ParseError("ranking does not mention alternative '" + alternatives.label(alt) +
                                     "'",
                                 line_no, col);
        entries.emplace_back(WeakOrder(std::move(classes)), count);
        ++i;
    }

    if (entries.empty()) throw EmptyProfileError("profile file has no voters");
    return Profile(alternatives, std::move(entries));
}

/// Serializes in the same grammar, types in canonical profile order.
inline std::string serialize_profile(const Profile& profile) {
    std::string out = "alternatives: ";
    const Alternatives& alts = profile.alternatives();
    for (int i = 0; i < alts.size(); ++i) {
        if (i > 0) out += ",";
        out += alts.label(i);
    }
    out += "\n";
    for (const auto& [type, count] : profile.entries()) {
        if (std::holds_alternative<WeakOrder>(type)) {
            out += std::to_string(count) + ": ";
            const WeakOrder& order = std::get<WeakOrder>(type);
            bool first_class = true;
            for (const auto& cls : order.classes()) {
                if (!first_class) out += " > ";
                first_class = false;
                bool first_alt = true;
                for (int alt : cls) {
                    if (!first_alt) out += " = ";
                    first_alt = false;
                    out += alts.label(alt);
                }
            }
            out += "\n";
        } else {
            const SSBMatrix& matrix = std::get<SSBMatrix>(type);
            out += "matrix " + std::to_string(count) + ":\n";
            for (int x = 0; x < matrix.size(); ++x) {
                for (int y = 0; y < matrix.size(); ++y) {
                    if (y > 0) out += " ";
                    out += to_string(matrix.at(x, y));
                }
                out += "\n";
            }
        }
    }
    return out;
}

}  // namespace maxlot
