#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "springer/errors.hpp"
#include "springer/shape.hpp"
#include "springer/tableau.hpp"

namespace springer {

using WindowPair = std::pair<int, int>;

/// Counts of fully-contained two-box rows per window: value(i,j) is the number
/// of rows (a,b) with i < a and b <= j, for 0 <= i < j <= n. Materialized as a
/// full upper-triangular array; O(1) query.
class PairInvariantTable {
public:
    PairInvariantTable(TwoColumnShape shape, const std::vector<int>& first_col,
                       const std::vector<int>& second_col)
        : shape_(shape), n_(shape.n()),
          values_(static_cast<size_t>(n_ + 1) * static_cast<size_t>(n_ + 1), 0) {
        for (int i = 0; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j) {
                int count = 0;
                for (int p = 0; p < shape.s; ++p)
                    if (first_col[static_cast<size_t>(p)] > i &&
                        second_col[static_cast<size_t>(p)] <= j)
                        ++count;
                values_[index(i, j)] = count;
            }
    }

    const TwoColumnShape& shape() const { return shape_; }
    int n() const { return n_; }

    int value(int i, int j) const {
        if (i < 0 || j > n_ || i >= j)
            throw IndexError("window (" + std::to_string(i) + "," + std::to_string(j) +
                             ") must satisfy 0 <= i < j <= " + std::to_string(n_));
        return values_[index(i, j)];
    }

    // Test hook: used only to demonstrate failure reporting.
    void corrupt(int i, int j, int delta) { values_[index(i, j)] += delta; }

private:
    size_t index(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(j);
    }

    TwoColumnShape shape_;
    int n_;
    std::vector<int> values_;
};

/// Window counts s_{j/i}(T') of a row-standard tableau.
inline PairInvariantTable s_table_of_rowstandard(const RowStandardTableau& t) {
    return PairInvariantTable(t.shape(), t.first_col(), t.second_col());
}

/// Window thresholds of the component indexed by a standard tableau: the
/// window counts of its renumbered representative.
inline PairInvariantTable s_table_of_component(const StandardTableau& t) {
    return s_table_of_rowstandard(t_star(t));
}

struct MembershipVerdict {
    bool member = false;
    /// Lexicographically smallest window violating the criterion; present
    /// exactly when member is false.
    std::optional<WindowPair> witness;
};

/// Fixed-point membership criterion: the flag of tp lies in the component of t
/// iff every window count of tp is bounded by the component threshold.
inline MembershipVerdict is_member(const StandardTableau& t, const RowStandardTableau& tp) {
    if (t.shape() != tp.shape())
        throw ValidityError("tableaux have different shapes: " + to_string(t.shape()) +
                            " vs " + to_string(tp.shape()));
    const PairInvariantTable bound = s_table_of_component(t);
    const PairInvariantTable got = s_table_of_rowstandard(tp);
    const int n = t.n();
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (got.value(i, j) > bound.value(i, j))
                return MembershipVerdict{false, WindowPair{i, j}};
    return MembershipVerdict{true, std::nullopt};
}

/// Dimension of the fiber component: r(r-1)/2 + s(s-1)/2.
inline int component_dimension(const TwoColumnShape& shape) {
    return shape.r * (shape.r - 1) / 2 + shape.s * (shape.s - 1) / 2;
}

/// Dimension of the full centralizer of the nilpotent map: r^2 + s^2.
inline int centralizer_dim_formula(const TwoColumnShape& shape) {
    return shape.r * shape.r + shape.s * shape.s;
}

/// Three-term count of flag-stabilizing centralizer parameters, evaluated on
/// the columns of an arbitrary row-standard tableau. For renumbered
/// representatives (second column increasing) it equals the true stabilizer
/// dimension r(r+1)/2 + s(s+1)/2; elsewhere it is validated against the
/// exact-linear-algebra oracle and differences are reported, not assumed.
inline int flag_stabilizer_dim_combinatorial(const RowStandardTableau& tp) {
    const TwoColumnShape shape = tp.shape();
    const auto& a = tp.first_col();
    const auto& b = tp.second_col();
    int total = 0;
    for (int p = 0; p < shape.r; ++p)
        for (int q = shape.s; q < shape.r; ++q)
            if (a[static_cast<size_t>(p)] <= a[static_cast<size_t>(q)]) ++total;
    for (int p = 0; p < shape.r; ++p)
        for (int q = 0; q < shape.s; ++q)
            if (a[static_cast<size_t>(p)] < b[static_cast<size_t>(q)]) ++total;
    for (int p = 0; p < shape.s; ++p)
        for (int q = p; q < shape.s; ++q)
            if (a[static_cast<size_t>(p)] <= a[static_cast<size_t>(q)]) ++total;
    return total;
}

/// Classification record for one component.
struct ComponentReport {
    StandardTableau tableau;
    int fixed_point_count = 0;
    int threshold = 0;
    int component_dim = 0;
    int tangent_dim = 0;
    bool singular = false;
    std::set<WindowPair> member_switch_pairs;

    explicit ComponentReport(StandardTableau t) : tableau(std::move(t)) {}
};

/// Counts how many probe tableaux (single switches of the column-filled
/// tableau) pass the membership criterion; the component is singular iff the
/// count exceeds r(r-1)/2.
inline ComponentReport classify(const StandardTableau& t) {
    const TwoColumnShape shape = t.shape();
    ComponentReport report{t};
    report.threshold = shape.r * (shape.r - 1) / 2;
    report.component_dim = component_dimension(shape);
    const PairInvariantTable bound = s_table_of_component(t);
    const int n = shape.n();
    for (const auto& probe : x_set(shape)) {
        const PairInvariantTable got = s_table_of_rowstandard(probe.tableau);
        bool member = true;
        for (int i = 0; i <= n && member; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (got.value(i, j) > bound.value(i, j)) {
                    member = false;
                    break;
                }
        if (member) report.member_switch_pairs.insert(WindowPair{probe.i, probe.j});
    }
    report.fixed_point_count = static_cast<int>(report.member_switch_pairs.size());
    report.tangent_dim = report.fixed_point_count + shape.s * (shape.s - 1) / 2;
    report.singular = report.fixed_point_count > report.threshold;
    return report;
}

enum class TangentRelationKind {
    window_past_r,    // j >= i+r: the coordinate vanishes on the tangent space
    nonmember_paired, // failed probe with j <= s: coordinates (i,j) and (i+r,j+r) agree
    nonmember_single, // failed probe with j > s: the coordinate vanishes
};

/// One linear functional vanishing on the tangent space at the column-filled
/// base point, described by the coordinate pairs it involves.
struct TangentRelation {
    TangentRelationKind kind;
    WindowPair pair;
    std::optional<WindowPair> partner;

    std::string description() const {
        auto coord = [](const WindowPair& p) {
            return "phi(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
        };
        if (partner) return coord(pair) + " - " + coord(*partner);
        return coord(pair);
    }
};

/// Tangent space of the component at the column-filled fixed point, described
/// by generators and orthogonal relations over the n(n-1)/2 chart coordinates.
struct TangentSpaceReport {
    int dim = 0;
    /// Probe pairs (i,j), i <= r, i < j < i+r, whose switch passes the
    /// criterion; each contributes the bare coordinate direction (i,j).
    std::set<WindowPair> member_pairs;
    /// Pairs with i > r; each contributes the coupled direction
    /// (i,j) + (i-r,j-r).
    std::set<WindowPair> paired_pairs;
    std::vector<TangentRelation> orthogonal_relations;
};

inline TangentSpaceReport tangent_dimension(const StandardTableau& t) {
    const TwoColumnShape shape = t.shape();
    const int n = shape.n();
    const int r = shape.r;
    const int s = shape.s;
    const ComponentReport report = classify(t);

    TangentSpaceReport out;
    out.member_pairs = report.member_switch_pairs;
    for (int i = r + 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.paired_pairs.insert(WindowPair{i, j});
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (j >= i + r) {
                out.orthogonal_relations.push_back(
                    TangentRelation{TangentRelationKind::window_past_r, WindowPair{i, j},
                                    std::nullopt});
            } else if (!out.member_pairs.count(WindowPair{i, j})) {
                if (j <= s)
                    out.orthogonal_relations.push_back(
                        TangentRelation{TangentRelationKind::nonmember_paired, WindowPair{i, j},
                                        WindowPair{i + r, j + r}});
                else
                    out.orthogonal_relations.push_back(
                        TangentRelation{TangentRelationKind::nonmember_single, WindowPair{i, j},
                                        std::nullopt});
            }
        }
    out.dim = static_cast<int>(out.member_pairs.size() + out.paired_pairs.size());
    if (out.dim != report.fixed_point_count + s * (s - 1) / 2)
        throw InternalError("tangent dimension bookkeeping mismatch");
    if (out.dim + static_cast<int>(out.orthogonal_relations.size()) != n * (n - 1) / 2)
        throw InternalError("tangent generators and relations must fill the chart");
    return out;
}

} // namespace springer
