#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "springer/certificates.hpp"
#include "springer/criterion.hpp"
#include "springer/errors.hpp"
#include "springer/flag_oracle.hpp"
#include "springer/parallel.hpp"
#include "springer/tableau.hpp"

namespace springer {

struct VerifyConfig {
    int max_n = 7;
    std::vector<std::uint64_t> seeds = {1, 2, 3};
    int parallelism = default_parallelism();
    /// Test hook: corrupts one window value inside the rank cross-check so the
    /// failure path can be demonstrated end to end.
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    std::vector<std::string> notes;

    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}
};

namespace verify_detail {

inline std::uint64_t row_standard_count_formula(const TwoColumnShape& shape) {
    std::uint64_t f = 1;
    for (int k = 2; k <= shape.n(); ++k) f *= static_cast<std::uint64_t>(k);
    for (int k = 0; k < shape.s; ++k) f /= 2;
    return f;
}

inline void note_fail(CheckResult& r, const std::string& detail) {
    if (r.passed) {
        r.passed = false;
        r.detail = detail;
    }
}

} // namespace verify_detail

/// Enumeration sizes: n!/2^s row-standard tableaux, standard = the
/// column-increasing ones, reading-word order strictly increasing.
inline CheckResult check_enumeration_counts(const VerifyConfig& cfg) {
    CheckResult result{"row-standard count n!/2^s; standard subset; enumeration order"};
    int bound = std::min(cfg.max_n, 8);
    std::uint64_t tableaux = 0;
    for (const auto& shape : shapes_up_to(bound)) {
        auto all = enumerate_row_standard(shape);
        tableaux += all.size();
        if (all.size() != verify_detail::row_standard_count_formula(shape)) {
            verify_detail::note_fail(result, "count mismatch for shape " + to_string(shape));
            return result;
        }
        for (size_t k = 1; k < all.size(); ++k)
            if (!(all[k - 1] < all[k])) {
                verify_detail::note_fail(result, "order not strictly increasing for shape " +
                                                     to_string(shape));
                return result;
            }
        auto standard = enumerate_standard(shape);
        size_t expect = 0;
        for (const auto& t : all)
            if (t.is_standard()) {
                if (expect >= standard.size() || standard[expect] != t) {
                    verify_detail::note_fail(result, "standard subset mismatch for shape " +
                                                         to_string(shape));
                    return result;
                }
                ++expect;
            }
        if (expect != standard.size()) {
            verify_detail::note_fail(result, "extra standard tableaux for shape " + to_string(shape));
            return result;
        }
    }
    result.detail = std::to_string(tableaux) + " tableaux over shapes with n <= " +
                    std::to_string(bound);
    return result;
}

/// The renumbered representative keeps the second column, permutes the first
/// column's entry set, and on the column-filled tableau takes the closed form
/// (r, r-1, ..., r-s+1, 1, ..., r-s).
inline CheckResult check_t_star_shape(const VerifyConfig& cfg) {
    CheckResult result{"renumbered representative: fixed second column, permuted first column"};
    int checked = 0;
    for (const auto& shape : shapes_up_to(cfg.max_n)) {
        for (const auto& t : enumerate_standard(shape)) {
            RowStandardTableau star = t_star(t);
            ++checked;
            std::multiset<int> got(star.first_col().begin(), star.first_col().end());
            std::multiset<int> want(t.first_col().begin(), t.first_col().end());
            if (star.second_col() != t.second_col() || got != want) {
                verify_detail::note_fail(result, "mismatch for " + t.to_literal());
                return result;
            }
        }
        RowStandardTableau star_bar = t_star(t_bar(shape));
        std::vector<int> expect;
        for (int p = 0; p < shape.s; ++p) expect.push_back(shape.r - p);
        for (int k = 1; k <= shape.r - shape.s; ++k) expect.push_back(k);
        if (star_bar.first_col() != expect) {
            verify_detail::note_fail(result, "closed form fails on shape " + to_string(shape));
            return result;
        }
    }
    result.detail = std::to_string(checked) + " standard tableaux, n <= " +
                    std::to_string(cfg.max_n);
    return result;
}

/// The probe set equals both the window rule {i <= r, i < j < i+r} and the
/// brute-force row-standard single switches of the column-filled tableau.
inline CheckResult check_probe_set(const VerifyConfig& cfg) {
    CheckResult result{"probe set matches window rule and brute-force switches"};
    for (const auto& shape : shapes_up_to(cfg.max_n)) {
        auto probes = x_set(shape);
        std::set<RowStandardTableau> from_rule;
        for (const auto& p : probes) {
            if (!(p.i <= shape.r && p.i < p.j && p.j < p.i + shape.r)) {
                verify_detail::note_fail(result, "pair outside the window rule on shape " +
                                                     to_string(shape));
                return result;
            }
            from_rule.insert(p.tableau);
        }
        if (from_rule.size() != probes.size()) {
            verify_detail::note_fail(result, "duplicate probes on shape " + to_string(shape));
            return result;
        }
        std::set<RowStandardTableau> brute;
        const StandardTableau base = t_bar(shape);
        for (int i = 1; i <= shape.r; ++i)
            for (int j = i + 1; j <= shape.n(); ++j) {
                try {
                    brute.insert(switch_entries(base, i, j));
                } catch (const ValidityError&) {
                }
            }
        if (brute != from_rule) {
            verify_detail::note_fail(result, "probe set differs from brute force on shape " +
                                                 to_string(shape));
            return result;
        }
    }
    result.detail = "shapes with n <= " + std::to_string(cfg.max_n);
    return result;
}

/// The column-filled tableau is standard and passes the criterion against
/// every component.
inline CheckResult check_tbar_universal(const VerifyConfig& cfg) {
    CheckResult result{"column-filled tableau accepted by every component"};
    int checked = 0;
    for (const auto& shape : shapes_up_to(cfg.max_n)) {
        const StandardTableau bar = t_bar(shape);
        if (!bar.is_standard()) {
            verify_detail::note_fail(result, "column-filled tableau not standard on " +
                                                 to_string(shape));
            return result;
        }
        for (const auto& t : enumerate_standard(shape)) {
            ++checked;
            if (!is_member(t, bar).member) {
                verify_detail::note_fail(result, "rejected by component " + t.to_literal());
                return result;
            }
        }
    }
    result.detail = std::to_string(checked) + " components, n <= " + std::to_string(cfg.max_n);
    return result;
}

/// Tableaux with the component's column content always pass the criterion.
/// Runs at its own exhaustive bound of n <= 8 even when max_n is smaller.
inline CheckResult check_same_content_members([[maybe_unused]] const VerifyConfig& cfg) {
    CheckResult result{"same column content implies membership"};
    const int bound = 8;
    int checked = 0;
    for (const auto& shape : shapes_up_to(bound)) {
        std::map<std::vector<int>, std::vector<const RowStandardTableau*>> by_content;
        auto all = enumerate_row_standard(shape);
        for (const auto& tp : all) {
            std::vector<int> key = tp.second_col();
            std::sort(key.begin(), key.end());
            by_content[key].push_back(&tp);
        }
        for (const auto& t : enumerate_standard(shape)) {
            std::vector<int> key = t.second_col();
            std::sort(key.begin(), key.end());
            const PairInvariantTable bound_table = s_table_of_component(t);
            const int n = shape.n();
            for (const RowStandardTableau* tp : by_content[key]) {
                ++checked;
                PairInvariantTable got = s_table_of_rowstandard(*tp);
                for (int i = 0; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        if (got.value(i, j) > bound_table.value(i, j)) {
                            verify_detail::note_fail(result,
                                                     "cell tableau rejected: component " +
                                                         t.to_literal() + ", tableau " +
                                                         tp->to_literal());
                            return result;
                        }
            }
        }
    }
    result.detail = std::to_string(checked) + " cell tableaux, n <= " + std::to_string(bound);
    return result;
}

/// Window tables never lose pairs when the window grows.
inline CheckResult check_table_monotonicity(const VerifyConfig& cfg) {
    CheckResult result{"window counts are monotone under window growth"};
    int bound = std::min(cfg.max_n, 7);
    for (const auto& shape : shapes_up_to(bound)) {
        const int n = shape.n();
        for (const auto& tp : enumerate_row_standard(shape)) {
            PairInvariantTable table = s_table_of_rowstandard(tp);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    int v = table.value(i, j);
                    if (v < 0 || v > shape.s ||
                        (i > 0 && table.value(i - 1, j) < v) ||
                        (j < n && table.value(i, j + 1) < v)) {
                        verify_detail::note_fail(result, "monotonicity fails for " +
                                                             tp.to_literal());
                        return result;
                    }
                }
        }
    }
    result.detail = "all row-standard tableaux, n <= " + std::to_string(bound);
    return result;
}

/// Member-probe counts never fall below r(r-1)/2, with equality exactly on the
/// nonsingular components; the tangent bookkeeping matches the verdict.
inline CheckResult check_threshold_and_tangent(const VerifyConfig& cfg) {
    CheckResult result{"probe count >= r(r-1)/2 with equality iff nonsingular; tangent bookkeeping"};
    int checked = 0;
    for (const auto& shape : shapes_up_to(cfg.max_n)) {
        const int n = shape.n();
        for (const auto& t : enumerate_standard(shape)) {
            ++checked;
            ComponentReport report = classify(t);
            if (report.fixed_point_count < report.threshold) {
                verify_detail::note_fail(result, "count below threshold for " + t.to_literal());
                return result;
            }
            if (!report.singular && report.fixed_point_count != report.threshold) {
                verify_detail::note_fail(result, "nonsingular without equality for " +
                                                     t.to_literal());
                return result;
            }
            TangentSpaceReport tangent = tangent_dimension(t);
            if (tangent.dim != report.tangent_dim ||
                tangent.dim + static_cast<int>(tangent.orthogonal_relations.size()) !=
                    n * (n - 1) / 2 ||
                report.singular != (report.tangent_dim > report.component_dim)) {
                verify_detail::note_fail(result, "tangent bookkeeping fails for " + t.to_literal());
                return result;
            }
        }
    }
    result.detail = std::to_string(checked) + " components, n <= " + std::to_string(cfg.max_n);
    return result;
}

/// The three-term stabilizer count takes the closed-form value on every
/// renumbered representative.
inline CheckResult check_stabilizer_formula_on_stars(const VerifyConfig& cfg) {
    CheckResult result{"three-term stabilizer count equals r(r+1)/2 + s(s+1)/2 on representatives"};
    for (const auto& shape : shapes_up_to(cfg.max_n)) {
        int want = shape.r * (shape.r + 1) / 2 + shape.s * (shape.s + 1) / 2;
        for (const auto& t : enumerate_standard(shape))
            if (flag_stabilizer_dim_combinatorial(t_star(t)) != want) {
                verify_detail::note_fail(result, "closed form fails for " + t.to_literal());
                return result;
            }
    }
    result.detail = "all standard tableaux, n <= " + std::to_string(cfg.max_n);
    return result;
}

namespace verify_detail {

// Seeded row-standard sample: a shuffled filling with each two-box row put in
// increasing order.
inline RowStandardTableau sample_row_standard(const TwoColumnShape& shape,
                                              std::mt19937_64& rng) {
    const int n = shape.n();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<size_t>(i)],
                  perm[static_cast<size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
    std::vector<int> first(perm.begin(), perm.begin() + shape.r);
    std::vector<int> second(perm.begin() + shape.r, perm.end());
    for (int p = 0; p < shape.s; ++p)
        if (first[static_cast<size_t>(p)] > second[static_cast<size_t>(p)])
            std::swap(first[static_cast<size_t>(p)], second[static_cast<size_t>(p)]);
    return RowStandardTableau(shape, std::move(first), std::move(second));
}

} // namespace verify_detail

/// Exact elimination ranks of u on every flag quotient agree with the
/// combinatorial window counts; exhaustive through n = 8, seeded samples
/// beyond.
inline CheckResult check_rank_oracle(const VerifyConfig& cfg) {
    CheckResult result{"rank of u on V_j/V_i equals the window count s_{j/i}"};
    std::uint64_t windows = 0;
    bool fault_pending = cfg.inject_fault;
    for (const auto& shape : shapes_up_to(cfg.max_n)) {
        const int n = shape.n();
        const NilpotentMap u = nilpotent_map(shape);
        std::vector<RowStandardTableau> picks;
        if (n <= 8) {
            picks = enumerate_row_standard(shape);
        } else {
            std::mt19937_64 rng(cfg.seeds.empty() ? 1 : cfg.seeds.front());
            for (int k = 0; k < 200; ++k)
                picks.push_back(verify_detail::sample_row_standard(shape, rng));
        }
        std::vector<std::string> failures(picks.size());
        const bool apply_fault = fault_pending && n >= 1;
        parallel_for(static_cast<int>(picks.size()), cfg.parallelism, [&](int idx) {
            const RowStandardTableau& tp = picks[static_cast<size_t>(idx)];
            PairInvariantTable table = s_table_of_rowstandard(tp);
            if (apply_fault && idx == 0) table.corrupt(0, n, 1);
            CoordinateFlag flag = flag_of_tableau(tp);
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (rank_quotient(flag, u, i, j) != table.value(i, j)) {
                        failures[static_cast<size_t>(idx)] =
                            "tableau " + tp.to_literal() + " window (" + std::to_string(i) +
                            "," + std::to_string(j) + ")";
                        return;
                    }
        });
        if (apply_fault) fault_pending = false;
        for (const auto& f : failures)
            if (!f.empty()) {
                verify_detail::note_fail(result, f + " on shape " + to_string(shape));
                return result;
            }
        windows += static_cast<std::uint64_t>(picks.size()) *
                   static_cast<std::uint64_t>(n * (n + 1) / 2);
    }
    result.detail = std::to_string(windows) + " windows, n <= " + std::to_string(cfg.max_n);
    return result;
}

/// Random invertible centralizer translates of the representative flag attain
/// the component thresholds on every window; resamples within the retry bound.
inline CheckResult check_generic_orbit_ranks(const VerifyConfig& cfg) {
    CheckResult result{"generic centralizer translates attain the window thresholds"};
    int checked = 0;
    for (const auto& shape : shapes_up_to(cfg.max_n)) {
        const int n = shape.n();
        if (n == 0) continue;
        const NilpotentMap u = nilpotent_map(shape);
        for (const auto& t : enumerate_standard(shape)) {
            const RowStandardTableau star = t_star(t);
            const CoordinateFlag base = flag_of_tableau(star);
            const PairInvariantTable want = s_table_of_component(t);
            for (std::uint64_t seed : cfg.seeds) {
                bool ok = false;
                for (int attempt = 0; attempt < kSampleRetryBound && !ok; ++attempt) {
                    Matrix<> g = random_centralizer_element(u, seed + 1000003ULL * attempt);
                    if (!(g * u.matrix == u.matrix * g))
                        throw InternalError("sample does not commute with u");
                    CoordinateFlag moved = transform_flag(g, base);
                    ok = true;
                    for (int i = 0; i <= n && ok; ++i)
                        for (int j = i + 1; j <= n; ++j)
                            if (rank_quotient(moved, u, i, j) != want.value(i, j)) {
                                ok = false;
                                break;
                            }
                }
                ++checked;
                if (!ok) {
                    verify_detail::note_fail(result, "no generic sample for " + t.to_literal() +
                                                         " seed " + std::to_string(seed));
                    return result;
                }
            }
        }
    }
    result.detail = std::to_string(checked) + " tableau/seed pairs, n <= " +
                    std::to_string(cfg.max_n) + ", retry bound " +
                    std::to_string(kSampleRetryBound);
    return result;
}

/// The commutator nullspace has dimension r^2 + s^2 on every shape.
inline CheckResult check_centralizer_dimension(const VerifyConfig& cfg) {
    CheckResult result{"centralizer dimension equals r^2 + s^2"};
    int bound = std::min(cfg.max_n, 8);
    for (const auto& shape : shapes_up_to(bound)) {
        if (centralizer_dim_oracle(nilpotent_map(shape)) != centralizer_dim_formula(shape)) {
            verify_detail::note_fail(result, "mismatch on shape " + to_string(shape));
            return result;
        }
    }
    result.detail = "shapes with n <= " + std::to_string(bound);
    return result;
}

/// The stabilizer oracle equals the closed form on representatives (hard) and
/// is compared against the three-term count on row-standard tableaux; window
/// counts with a decreasing second column may differ and are only noted.
inline CheckResult check_stabilizer_oracle(const VerifyConfig& cfg) {
    CheckResult result{"flag stabilizer oracle: closed form on representatives, formula comparison"};
    int bound = std::min(cfg.max_n, 7);
    int stars = 0;
    int compared = 0;
    int differing = 0;
    for (const auto& shape : shapes_up_to(bound)) {
        const NilpotentMap u = nilpotent_map(shape);
        int want = shape.r * (shape.r + 1) / 2 + shape.s * (shape.s + 1) / 2;
        for (const auto& t : enumerate_standard(shape)) {
            ++stars;
            if (flag_stabilizer_dim_oracle(u, t_star(t)) != want) {
                verify_detail::note_fail(result, "oracle misses closed form for " + t.to_literal());
                return result;
            }
        }
        if (shape.n() > 5) continue;
        for (const auto& tp : enumerate_row_standard(shape)) {
            ++compared;
            int oracle = flag_stabilizer_dim_oracle(u, tp);
            int formula = flag_stabilizer_dim_combinatorial(tp);
            if (oracle != formula) {
                ++differing;
                if (result.notes.size() < 3)
                    result.notes.push_back("three-term formula differs on " + tp.to_literal() +
                                           ": formula " + std::to_string(formula) + ", oracle " +
                                           std::to_string(oracle));
            }
        }
    }
    if (differing > 0)
        result.notes.push_back("formula/oracle differences on " + std::to_string(differing) +
                               " of " + std::to_string(compared) +
                               " row-standard tableaux (informational)");
    result.detail = std::to_string(stars) + " representatives exact, n <= " +
                    std::to_string(bound);
    return result;
}

/// u^2 = 0 and rank u = s for every constructed nilpotent map.
inline CheckResult check_nilpotent_structure(const VerifyConfig& cfg) {
    CheckResult result{"u squares to zero and has rank s"};
    for (const auto& shape : shapes_up_to(cfg.max_n)) {
        const NilpotentMap u = nilpotent_map(shape);
        if (!(u.matrix * u.matrix).is_zero() || rank(u.matrix) != shape.s) {
            verify_detail::note_fail(result, "structure fails on shape " + to_string(shape));
            return result;
        }
    }
    result.detail = "shapes with n <= " + std::to_string(cfg.max_n);
    return result;
}

/// The oracle chain of restricted Jordan types matches a component's
/// subdiagram chain exactly when the second columns carry the same entries.
inline CheckResult check_cell_chains(const VerifyConfig& cfg) {
    CheckResult result{"restricted Jordan chain matches the subdiagram chain iff columns agree"};
    int bound = std::min(cfg.max_n, 7);
    std::uint64_t pairs = 0;
    for (const auto& shape : shapes_up_to(bound)) {
        const NilpotentMap u = nilpotent_map(shape);
        auto all = enumerate_row_standard(shape);
        std::vector<std::vector<std::pair<int, int>>> oracle_chains(all.size());
        parallel_for(static_cast<int>(all.size()), cfg.parallelism, [&](int idx) {
            oracle_chains[static_cast<size_t>(idx)] =
                jordan_chain(flag_of_tableau(all[static_cast<size_t>(idx)]), u).as_pairs();
        });
        for (const auto& t : enumerate_standard(shape)) {
            auto t_chain = subdiagram_chain(t);
            std::multiset<int> content(t.second_col().begin(), t.second_col().end());
            for (size_t k = 0; k < all.size(); ++k) {
                ++pairs;
                std::multiset<int> other(all[k].second_col().begin(), all[k].second_col().end());
                bool same_cell = oracle_chains[k] == t_chain;
                if (same_cell != (other == content)) {
                    verify_detail::note_fail(result, "cell test fails: component " +
                                                         t.to_literal() + ", tableau " +
                                                         all[k].to_literal());
                    return result;
                }
            }
        }
    }
    result.detail = std::to_string(pairs) + " component/tableau pairs, n <= " +
                    std::to_string(bound);
    return result;
}

/// Exact rank algebra: rank-nullity and invariance of rank under permutations
/// and invertible factors, on seeded random matrices.
inline CheckResult check_rank_algebra(const VerifyConfig& cfg) {
    CheckResult result{"rank-nullity and rank invariance under invertible factors"};
    int cases = 0;
    for (std::uint64_t seed : cfg.seeds) {
        std::mt19937_64 rng(seed);
        auto draw = [&rng]() { return static_cast<int>(rng() % 19) - 9; };
        for (int trial = 0; trial < 40; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 5);
            int cols = 1 + static_cast<int>(rng() % 5);
            Matrix<> m(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) m.at(i, j) = draw();
            int rk = rank(m);
            ++cases;
            if (rk + nullspace_dim(m) != cols) {
                verify_detail::note_fail(result, "rank-nullity fails");
                return result;
            }
            Matrix<> shuffled(rows, cols);
            std::vector<int> perm(static_cast<size_t>(rows));
            for (int i = 0; i < rows; ++i) perm[static_cast<size_t>(i)] = i;
            for (int i = rows - 1; i > 0; --i)
                std::swap(perm[static_cast<size_t>(i)],
                          perm[static_cast<size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j)
                    shuffled.at(perm[static_cast<size_t>(i)], j) = m.at(i, j);
            if (rank(shuffled) != rk) {
                verify_detail::note_fail(result, "rank changed under row permutation");
                return result;
            }
            Matrix<> inv(rows, rows);
            do {
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < rows; ++j) inv.at(i, j) = draw();
            } while (rank(inv) != rows);
            if (rank(inv * m) != rk) {
                verify_detail::note_fail(result, "rank changed under invertible factor");
                return result;
            }
        }
    }
    result.detail = std::to_string(cases) + " random matrices, seeds " +
                    std::to_string(cfg.seeds.size());
    return result;
}

/// Replays the constructive proofs: every accepted tableau yields a validated
/// membership chain; every rejected one carries a witness window whose strict
/// inequality re-verifies.
inline CheckResult check_membership_chains(const VerifyConfig& cfg) {
    CheckResult result{"membership chains replay for members; witnesses re-verify for non-members"};
    int bound = std::min(cfg.max_n, 7);
    std::uint64_t members = 0;
    std::uint64_t rejected = 0;
    for (const auto& shape : shapes_up_to(bound)) {
        auto all = enumerate_row_standard(shape);
        for (const auto& t : enumerate_standard(shape)) {
            const PairInvariantTable bound_table = s_table_of_component(t);
            for (const auto& tp : all) {
                MembershipVerdict verdict = is_member(t, tp);
                if (verdict.member) {
                    ++members;
                    try {
                        Certificate cert = membership_chain(t, tp);
                        validate_certificate(cert, &t);
                    } catch (const Error& e) {
                        verify_detail::note_fail(result, "chain fails: component " +
                                                             t.to_literal() + ", tableau " +
                                                             tp.to_literal() + ": " + e.what());
                        return result;
                    }
                } else {
                    ++rejected;
                    if (!verdict.witness) {
                        verify_detail::note_fail(result, "missing witness for " + tp.to_literal());
                        return result;
                    }
                    auto [wi, wj] = *verdict.witness;
                    PairInvariantTable got = s_table_of_rowstandard(tp);
                    if (!(got.value(wi, wj) > bound_table.value(wi, wj))) {
                        verify_detail::note_fail(result, "witness does not re-verify for " +
                                                             tp.to_literal());
                        return result;
                    }
                }
            }
        }
    }
    result.detail = std::to_string(members) + " chains, " + std::to_string(rejected) +
                    " witnesses, n <= " + std::to_string(bound);
    return result;
}

/// Degeneration chains reach the column-filled tableau in at most n steps and
/// re-validate.
inline CheckResult check_degeneration_chains(const VerifyConfig& cfg) {
    CheckResult result{"degeneration chains reach the column-filled tableau within n steps"};
    int bound = std::min(cfg.max_n, 8);
    std::uint64_t chains = 0;
    for (const auto& shape : shapes_up_to(bound)) {
        auto all = enumerate_row_standard(shape);
        std::vector<std::string> failures(all.size());
        parallel_for(static_cast<int>(all.size()), cfg.parallelism, [&](int idx) {
            const RowStandardTableau& tp = all[static_cast<size_t>(idx)];
            try {
                Certificate cert = chain_to_tbar(tp);
                if (static_cast<int>(cert.steps.size()) > shape.n())
                    throw ProofViolationError("chain longer than n");
                validate_certificate(cert);
            } catch (const Error& e) {
                failures[static_cast<size_t>(idx)] = tp.to_literal() + ": " + e.what();
            }
        });
        chains += all.size();
        for (const auto& f : failures)
            if (!f.empty()) {
                verify_detail::note_fail(result, f);
                return result;
            }
    }
    result.detail = std::to_string(chains) + " chains, n <= " + std::to_string(bound);
    return result;
}

inline std::vector<CheckResult> run_verification(const VerifyConfig& cfg) {
    if (cfg.max_n < 1) throw ValidityError("max_n must be at least 1");
    std::vector<CheckResult> results;
    results.push_back(check_enumeration_counts(cfg));
    results.push_back(check_t_star_shape(cfg));
    results.push_back(check_probe_set(cfg));
    results.push_back(check_tbar_universal(cfg));
    results.push_back(check_same_content_members(cfg));
    results.push_back(check_table_monotonicity(cfg));
    results.push_back(check_threshold_and_tangent(cfg));
    results.push_back(check_stabilizer_formula_on_stars(cfg));
    results.push_back(check_rank_algebra(cfg));
    results.push_back(check_nilpotent_structure(cfg));
    results.push_back(check_rank_oracle(cfg));
    results.push_back(check_cell_chains(cfg));
    results.push_back(check_centralizer_dimension(cfg));
    results.push_back(check_stabilizer_oracle(cfg));
    results.push_back(check_generic_orbit_ranks(cfg));
    results.push_back(check_membership_chains(cfg));
    results.push_back(check_degeneration_chains(cfg));
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace springer
