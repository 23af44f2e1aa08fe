#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "springer/errors.hpp"
#include "springer/shape.hpp"

namespace springer {

/// Row-increasing numbering of a two-column diagram by 1..n.
/// Canonical storage is by columns: first_col() lists the first-column
/// entries top to bottom (a'_1..a'_r), second_col() the second-column
/// entries (b'_1..b'_s). Row p reads (a'_p, b'_p) for p <= s.
/// Immutable after construction.
class RowStandardTableau {
public:
    RowStandardTableau(TwoColumnShape shape, std::vector<int> first_col,
                       std::vector<int> second_col)
        : shape_(shape), first_(std::move(first_col)), second_(std::move(second_col)) {
        validate();
        build_position_maps();
    }

    const TwoColumnShape& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    const std::vector<int>& first_col() const { return first_; }
    const std::vector<int>& second_col() const { return second_; }

    /// 1-based row accessors.
    int a(int p) const { return first_.at(static_cast<size_t>(p) - 1); }
    int b(int p) const { return second_.at(static_cast<size_t>(p) - 1); }

    /// Column (1 or 2) holding the given entry.
    int column_of(int entry) const {
        check_entry(entry);
        return col_of_[static_cast<size_t>(entry)];
    }
    /// 1-based row holding the given entry.
    int row_of(int entry) const {
        check_entry(entry);
        return row_of_[static_cast<size_t>(entry)];
    }

    /// Sentinel standing for an absent right neighbor; larger than every entry.
    int infinity() const { return n() + 1; }

    /// Right neighbor of a first-column entry, or infinity() for a one-box row.
    int right_neighbor(int entry) const {
        check_entry(entry);
        if (column_of(entry) != 1)
            throw IndexError("entry " + std::to_string(entry) + " is not in the first column");
        int p = row_of(entry);
        return p <= shape_.s ? b(p) : infinity();
    }

    /// Left neighbor of a second-column entry.
    int left_neighbor(int entry) const {
        check_entry(entry);
        if (column_of(entry) != 2)
            throw IndexError("entry " + std::to_string(entry) + " is not in the second column");
        return a(row_of(entry));
    }

    bool is_standard() const {
        return std::is_sorted(first_.begin(), first_.end()) &&
               std::is_sorted(second_.begin(), second_.end());
    }

    /// Entries read row by row, left to right.
    std::vector<int> reading_word() const {
        std::vector<int> word;
        word.reserve(static_cast<size_t>(n()));
        for (int p = 1; p <= shape_.r; ++p) {
            word.push_back(a(p));
            if (p <= shape_.s) word.push_back(b(p));
        }
        return word;
    }

    /// Literal form: rows separated by ';', row entries by ','.
    std::string to_literal() const {
        std::string out;
        for (int p = 1; p <= shape_.r; ++p) {
            if (p > 1) out += ';';
            out += std::to_string(a(p));
            if (p <= shape_.s) {
                out += ',';
                out += std::to_string(b(p));
            }
        }
        return out;
    }

    bool operator==(const RowStandardTableau& o) const {
        return shape_ == o.shape_ && first_ == o.first_ && second_ == o.second_;
    }
    bool operator!=(const RowStandardTableau& o) const { return !(*this == o); }

    /// Orders by box count, then first-column length, then reading word.
    bool operator<(const RowStandardTableau& o) const {
        if (n() != o.n()) return n() < o.n();
        if (shape_.r != o.shape_.r) return shape_.r < o.shape_.r;
        return reading_word() < o.reading_word();
    }

private:
    void check_entry(int entry) const {
        if (entry < 1 || entry > n())
            throw IndexError("entry " + std::to_string(entry) + " outside 1.." +
                             std::to_string(n()));
    }

    void validate() const {
        if (static_cast<int>(first_.size()) != shape_.r ||
            static_cast<int>(second_.size()) != shape_.s)
            throw ValidityError("column lengths do not match shape " + to_string(shape_));
        std::vector<bool> seen(static_cast<size_t>(n()) + 1, false);
        auto mark = [&](int e) {
            if (e < 1 || e > n())
                throw ValidityError("entry " + std::to_string(e) + " outside 1.." +
                                    std::to_string(n()));
            if (seen[static_cast<size_t>(e)])
                throw ValidityError("entry " + std::to_string(e) + " appears twice");
            seen[static_cast<size_t>(e)] = true;
        };
        for (int e : first_) mark(e);
        for (int e : second_) mark(e);
        for (int p = 1; p <= shape_.s; ++p)
            if (a(p) >= b(p))
                throw ValidityError("row " + std::to_string(p) + " is not increasing: " +
                                    std::to_string(a(p)) + " before " + std::to_string(b(p)));
    }

    void build_position_maps() {
        col_of_.assign(static_cast<size_t>(n()) + 1, 0);
        row_of_.assign(static_cast<size_t>(n()) + 1, 0);
        for (int p = 1; p <= shape_.r; ++p) {
            col_of_[static_cast<size_t>(a(p))] = 1;
            row_of_[static_cast<size_t>(a(p))] = p;
        }
        for (int p = 1; p <= shape_.s; ++p) {
            col_of_[static_cast<size_t>(b(p))] = 2;
            row_of_[static_cast<size_t>(b(p))] = p;
        }
    }

    TwoColumnShape shape_;
    std::vector<int> first_;
    std::vector<int> second_;
    std::vector<int> col_of_;
    std::vector<int> row_of_;
};

/// Numbering increasing along rows and down both columns.
class StandardTableau : public RowStandardTableau {
public:
    StandardTableau(TwoColumnShape shape, std::vector<int> first_col,
                    std::vector<int> second_col)
        : RowStandardTableau(shape, std::move(first_col), std::move(second_col)) {
        if (!is_standard())
            throw ValidityError("columns are not increasing; tableau is row-standard only");
    }

    explicit StandardTableau(const RowStandardTableau& t)
        : StandardTableau(t.shape(), t.first_col(), t.second_col()) {}
};

/// Re-checks the column-increasing condition; throws ValidityError otherwise.
inline StandardTableau as_standard(const RowStandardTableau& t) { return StandardTableau(t); }

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline int parse_entry(std::string_view token) {
    token = trim(token);
    if (token.empty()) throw ParseError("empty entry token");
    size_t pos = 0;
    bool neg = token[0] == '-';
    if (neg) pos = 1;
    if (pos >= token.size()) throw ParseError("malformed entry '" + std::string(token) + "'");
    long value = 0;
    for (; pos < token.size(); ++pos) {
        char c = token[pos];
        if (c < '0' || c > '9')
            throw ParseError("malformed entry '" + std::string(token) + "'");
        value = value * 10 + (c - '0');
        if (value > 1000000) throw ParseError("entry out of range: '" + std::string(token) + "'");
    }
    return static_cast<int>(neg ? -value : value);
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

} // namespace detail

/// Parses the row literal format, e.g. "1,3;2,5;4;6" (rows top to bottom,
/// entries left to right, spaces around tokens ignored).
inline RowStandardTableau parse_row_standard(const TwoColumnShape& shape, std::string_view text) {
    std::vector<int> first, second;
    if (!detail::trim(text).empty()) {
        auto rows = detail::split(text, ';');
        if (static_cast<int>(rows.size()) != shape.r)
            throw ValidityError("expected " + std::to_string(shape.r) + " rows for shape " +
                                to_string(shape) + ", got " + std::to_string(rows.size()));
        for (size_t p = 0; p < rows.size(); ++p) {
            auto cells = detail::split(rows[p], ',');
            int want = shape.row_length(static_cast<int>(p) + 1);
            if (static_cast<int>(cells.size()) != want)
                throw ValidityError("row " + std::to_string(p + 1) + " must have " +
                                    std::to_string(want) + " entries for shape " +
                                    to_string(shape));
            first.push_back(detail::parse_entry(cells[0]));
            if (want == 2) second.push_back(detail::parse_entry(cells[1]));
        }
    } else if (shape.r != 0) {
        throw ValidityError("empty literal for nonempty shape " + to_string(shape));
    }
    return RowStandardTableau(shape, std::move(first), std::move(second));
}

inline StandardTableau parse_standard(const TwoColumnShape& shape, std::string_view text) {
    return as_standard(parse_row_standard(shape, text));
}

/// All row-standard tableaux of the shape, in reading-word lexicographic order.
inline std::vector<RowStandardTableau> enumerate_row_standard(const TwoColumnShape& shape) {
    const int n = shape.n();
    std::vector<RowStandardTableau> out;
    std::vector<int> first(static_cast<size_t>(shape.r), 0);
    std::vector<int> second(static_cast<size_t>(shape.s), 0);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);

    // Reading-word positions: (a_1, b_1, ..., a_s, b_s, a_{s+1}, ..., a_r).
    auto recurse = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            out.emplace_back(shape, first, second);
            return;
        }
        bool is_second;
        int row;
        if (pos < 2 * shape.s) {
            row = pos / 2;
            is_second = (pos % 2 == 1);
        } else {
            row = pos - shape.s;
            is_second = false;
        }
        int low = is_second ? first[static_cast<size_t>(row)] + 1 : 1;
        for (int e = low; e <= n; ++e) {
            if (used[static_cast<size_t>(e)]) continue;
            used[static_cast<size_t>(e)] = true;
            (is_second ? second : first)[static_cast<size_t>(row)] = e;
            self(self, pos + 1);
            used[static_cast<size_t>(e)] = false;
        }
    };
    recurse(recurse, 0);
    return out;
}

/// All standard tableaux of the shape: the column-increasing subset of the
/// row-standard enumeration, in the same reading-word order. Generated
/// directly with column pruning, so large one-column shapes stay cheap.
inline std::vector<StandardTableau> enumerate_standard(const TwoColumnShape& shape) {
    const int n = shape.n();
    std::vector<StandardTableau> out;
    std::vector<int> first(static_cast<size_t>(shape.r), 0);
    std::vector<int> second(static_cast<size_t>(shape.s), 0);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);

    auto recurse = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            out.emplace_back(shape, first, second);
            return;
        }
        bool is_second;
        int row;
        if (pos < 2 * shape.s) {
            row = pos / 2;
            is_second = (pos % 2 == 1);
        } else {
            row = pos - shape.s;
            is_second = false;
        }
        auto& col = is_second ? second : first;
        int low = 1;
        if (is_second) low = first[static_cast<size_t>(row)] + 1;
        if (row > 0) low = std::max(low, col[static_cast<size_t>(row) - 1] + 1);
        for (int e = low; e <= n; ++e) {
            if (used[static_cast<size_t>(e)]) continue;
            used[static_cast<size_t>(e)] = true;
            col[static_cast<size_t>(row)] = e;
            self(self, pos + 1);
            used[static_cast<size_t>(e)] = false;
        }
    };
    recurse(recurse, 0);
    return out;
}

/// The column-filled tableau: 1..r down the first column, r+1..n down the second.
inline StandardTableau t_bar(const TwoColumnShape& shape) {
    std::vector<int> first, second;
    for (int k = 1; k <= shape.r; ++k) first.push_back(k);
    for (int k = shape.r + 1; k <= shape.n(); ++k) second.push_back(k);
    return StandardTableau(shape, std::move(first), std::move(second));
}

/// Renumbering of the first column of a standard tableau: under each b_p put
/// the largest unused first-column entry below it, then fill the one-box rows
/// with the leftovers in increasing order. The second column is unchanged.
inline RowStandardTableau t_star(const StandardTableau& t) {
    const TwoColumnShape shape = t.shape();
    std::set<int> remaining(t.first_col().begin(), t.first_col().end());
    std::vector<int> first;
    first.reserve(static_cast<size_t>(shape.r));
    for (int p = 1; p <= shape.s; ++p) {
        auto it = remaining.lower_bound(t.b(p));
        if (it == remaining.begin())
            throw InternalError("no unused first-column entry below " + std::to_string(t.b(p)));
        --it;
        first.push_back(*it);
        remaining.erase(it);
    }
    for (int e : remaining) first.push_back(e);
    if (shape.s >= 1 && first[0] != t.b(1) - 1)
        throw InternalError("topmost renumbered entry must be " + std::to_string(t.b(1) - 1));
    return RowStandardTableau(shape, std::move(first), t.second_col());
}

/// Exchanges entries i and j; throws ValidityError when the result is not
/// row-standard, IndexError when i, j are out of range or equal.
inline RowStandardTableau switch_entries(const RowStandardTableau& t, int i, int j) {
    const int n = t.n();
    if (i < 1 || i > n || j < 1 || j > n)
        throw IndexError("entries to switch must lie in 1.." + std::to_string(n));
    if (i == j) throw IndexError("entries to switch must be distinct");
    std::vector<int> first = t.first_col();
    std::vector<int> second = t.second_col();
    auto swap_in = [&](std::vector<int>& col) {
        for (int& e : col) {
            if (e == i) e = j;
            else if (e == j) e = i;
        }
    };
    swap_in(first);
    swap_in(second);
    return RowStandardTableau(t.shape(), std::move(first), std::move(second));
}

/// A probe tableau together with the entries switched from the column-filled
/// tableau to reach it.
struct SwitchedTableau {
    RowStandardTableau tableau;
    int i;
    int j;
};

/// The row-standard single switches of the column-filled tableau: pairs (i,j)
/// with i <= r and i < j < i+r, ordered by (i,j).
inline std::vector<SwitchedTableau> x_set(const TwoColumnShape& shape) {
    std::vector<SwitchedTableau> out;
    const StandardTableau base = t_bar(shape);
    const int n = shape.n();
    for (int i = 1; i <= shape.r; ++i) {
        for (int j = i + 1; j <= std::min(n, i + shape.r - 1); ++j) {
            try {
                out.push_back(SwitchedTableau{switch_entries(base, i, j), i, j});
            } catch (const ValidityError&) {
                throw InternalError("switch (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") inside the window must be row-standard");
            }
        }
    }
    return out;
}

/// Per prefix 1..i, the column lengths (one-box rows, two-box rows) of the
/// subdiagram occupied by entries <= i. Index k of the result describes the
/// prefix of size k.
inline std::vector<std::pair<int, int>> subdiagram_chain(const RowStandardTableau& t) {
    const int n = t.n();
    std::vector<std::pair<int, int>> chain(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        int twos = 0;
        for (int e : t.second_col())
            if (e <= i) ++twos;
        chain[static_cast<size_t>(i)] = {i - 2 * twos, twos};
    }
    return chain;
}

} // namespace springer
