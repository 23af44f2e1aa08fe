#pragma once

#include <string>
#include <vector>

#include "springer/errors.hpp"

namespace springer {

/// Two-column Young diagram with column lengths r >= s >= 0 and n = r+s boxes.
/// Row p (1-based) has two boxes for p <= s and one box for s < p <= r.
struct TwoColumnShape {
    int r = 0;
    int s = 0;

    int n() const { return r + s; }
    int row_length(int p) const { return p <= s ? 2 : 1; }

    bool operator==(const TwoColumnShape& o) const { return r == o.r && s == o.s; }
    bool operator!=(const TwoColumnShape& o) const { return !(*this == o); }
};

inline TwoColumnShape make_shape(int r, int s) {
    if (r < 0 || s < 0)
        throw ShapeError("column lengths must be nonnegative, got r=" + std::to_string(r) +
                         ", s=" + std::to_string(s));
    if (s > r)
        throw ShapeError("second column may not be longer than the first: r=" +
                         std::to_string(r) + " < s=" + std::to_string(s));
    return TwoColumnShape{r, s};
}

inline std::string to_string(const TwoColumnShape& shape) {
    return "(" + std::to_string(shape.r) + "," + std::to_string(shape.s) + ")";
}

/// All two-column shapes with exactly n boxes, r ascending.
inline std::vector<TwoColumnShape> shapes_with_boxes(int n) {
    if (n < 0) throw ShapeError("box count must be nonnegative");
    std::vector<TwoColumnShape> out;
    for (int r = (n + 1) / 2; r <= n; ++r) out.push_back(TwoColumnShape{r, n - r});
    return out;
}

/// All two-column shapes with at most max_n boxes, ordered by (n, r).
inline std::vector<TwoColumnShape> shapes_up_to(int max_n) {
    std::vector<TwoColumnShape> out;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& sh : shapes_with_boxes(n)) out.push_back(sh);
    return out;
}

} // namespace springer
