#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "springer/criterion.hpp"
#include "springer/errors.hpp"
#include "springer/tableau.hpp"

namespace springer {

enum class MoveKind {
    toward_tbar, // one degeneration step of the column-filling induction
    case_A,      // switch i with a first-column entry i' whose right neighbor is larger
    case_B,      // switch i with the minimal landing entry j in the second column
};

inline std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::toward_tbar: return "toward_tbar";
        case MoveKind::case_A: return "case_A";
        case MoveKind::case_B: return "case_B";
    }
    return "?";
}

/// One entry switch in a certificate chain. `switched` is the primary pair;
/// toward_tbar steps may additionally swap the partner-column entries of the
/// two affected rows (`paired_switch`), which is the full limit of the
/// centralizer curve that realizes the step. Right-neighbor values use the
/// sentinel n+1 for a missing neighbor.
///
/// pivot_i is the minimal misplaced (toward_tbar) or minimal wrong-column
/// (case_A/case_B) entry; pivot_j is the occupant of the target box for
/// toward_tbar steps and the minimal second-column landing entry otherwise.
struct MoveStep {
    RowStandardTableau from;
    RowStandardTableau to;
    MoveKind kind;
    std::pair<int, int> switched;
    std::optional<std::pair<int, int>> paired_switch;
    int pivot_i = 0;
    int pivot_j = 0;
    std::optional<int> pivot_i_prime;
    std::optional<int> omega_i;
    std::optional<int> omega_i_prime;
};

enum class CertificateGoal { reached_tbar, reached_column_content };

inline std::string to_string(CertificateGoal goal) {
    return goal == CertificateGoal::reached_tbar ? "reached_tbar" : "reached_column_content";
}

/// A connected chain of switches certifying a degeneration (down to the
/// column-filled tableau) or a membership (to a tableau with the component's
/// column content).
struct Certificate {
    RowStandardTableau start;
    CertificateGoal goal;
    std::vector<MoveStep> steps;

    const RowStandardTableau& final_tableau() const {
        return steps.empty() ? start : steps.back().to;
    }
};

namespace detail {

inline RowStandardTableau apply_entry_switches(const RowStandardTableau& t,
                                               std::pair<int, int> primary,
                                               const std::optional<std::pair<int, int>>& paired) {
    std::vector<int> first = t.first_col();
    std::vector<int> second = t.second_col();
    auto swap_pair = [&](std::pair<int, int> pr) {
        for (auto* col : {&first, &second})
            for (int& e : *col) {
                if (e == pr.first) e = pr.second;
                else if (e == pr.second) e = pr.first;
            }
    };
    swap_pair(primary);
    if (paired) swap_pair(*paired);
    return RowStandardTableau(t.shape(), std::move(first), std::move(second));
}

/// Smallest entry sitting in a different box than in the column-filled
/// tableau, or 0 if none.
inline int minimal_misplaced_entry(const RowStandardTableau& t) {
    const TwoColumnShape shape = t.shape();
    for (int e = 1; e <= t.n(); ++e) {
        int want_col = e <= shape.r ? 1 : 2;
        int want_row = e <= shape.r ? e : e - shape.r;
        if (t.column_of(e) != want_col || t.row_of(e) != want_row) return e;
    }
    return 0;
}

} // namespace detail

/// Degeneration chain from tp down to the column-filled tableau. Each step
/// places the minimal misplaced entry i into its column-filled box by
/// switching it with the occupant; when i and the occupant share a column and
/// their rows' partner entries are out of order, the partner entries swap in
/// the same step. Length is at most n.
inline Certificate chain_to_tbar(const RowStandardTableau& tp) {
    const TwoColumnShape shape = tp.shape();
    Certificate cert{tp, CertificateGoal::reached_tbar, {}};
    RowStandardTableau cur = tp;
    while (true) {
        const int i = detail::minimal_misplaced_entry(cur);
        if (i == 0) break;
        const int target_row = i <= shape.r ? i : i - shape.r;
        const int occupant = i <= shape.r ? cur.a(target_row) : cur.b(target_row);
        std::optional<std::pair<int, int>> paired;
        if (i <= shape.r && cur.column_of(i) == 1) {
            int p = cur.row_of(i);
            if (p <= shape.s) {
                int x = cur.b(p);
                int y = cur.b(i);
                if (x < y) paired = std::pair<int, int>{x, y};
            }
        } else if (i > shape.r && cur.column_of(i) == 2) {
            int x = cur.a(cur.row_of(i));
            int y = cur.a(target_row);
            if (x < y) paired = std::pair<int, int>{x, y};
        } else if (i > shape.r) {
            throw InternalError("entry " + std::to_string(i) +
                                " cannot sit in the first column once 1..r are placed");
        }
        RowStandardTableau next = [&] {
            try {
                return detail::apply_entry_switches(cur, {i, occupant}, paired);
            } catch (const ValidityError&) {
                throw InternalError("degeneration step broke row order at entry " +
                                    std::to_string(i));
            }
        }();
        MoveStep step{cur, next, MoveKind::toward_tbar, {i, occupant}, paired,
                      i,   occupant, std::nullopt, std::nullopt, std::nullopt};
        cert.steps.push_back(std::move(step));
        if (detail::minimal_misplaced_entry(next) != 0 &&
            detail::minimal_misplaced_entry(next) <= i)
            throw InternalError("degeneration step did not advance past entry " +
                                std::to_string(i));
        cur = std::move(next);
    }
    return cert;
}

/// Membership chain for a criterion-accepted tableau: repeatedly moves the
/// minimal entry that sits in the wrong column into the second column (or
/// defers via a first-column switch), until the column content matches the
/// component tableau. Every intermediate must again pass the criterion; a
/// violation indicates a bug and raises ProofViolationError.
inline Certificate membership_chain(const StandardTableau& t, const RowStandardTableau& tp) {
    if (t.shape() != tp.shape())
        throw ValidityError("tableaux have different shapes");
    if (!is_member(t, tp).member)
        throw ValidityError("tableau fails the membership criterion; no chain exists");
    const TwoColumnShape shape = t.shape();
    const int n = shape.n();
    Certificate cert{tp, CertificateGoal::reached_column_content, {}};
    RowStandardTableau cur = tp;
    int guard = 0;
    while (true) {
        int i = 0;
        for (int e = 1; e <= n; ++e)
            if (cur.column_of(e) != t.column_of(e)) {
                i = e;
                break;
            }
        if (i == 0) break;
        if (++guard > n * n + n)
            throw ProofViolationError("membership chain failed to terminate");
        if (cur.column_of(i) != 1 || t.column_of(i) != 2)
            throw ProofViolationError("minimal differing entry " + std::to_string(i) +
                                      " should move from the first column to the second");
        int j = 0;
        for (int p = 1; p <= shape.s; ++p)
            if (cur.b(p) > i && cur.a(p) <= i && (j == 0 || cur.b(p) < j)) j = cur.b(p);
        if (j == 0)
            throw ProofViolationError("no landing entry above " + std::to_string(i) +
                                      " with a small left neighbor");
        const int omega_i = cur.right_neighbor(i);
        int i_prime = 0;
        for (int e = i + 1; e <= j; ++e)
            if (cur.column_of(e) == 1 && omega_i < cur.right_neighbor(e)) {
                i_prime = e;
                break;
            }
        MoveStep step{cur, cur, MoveKind::case_B, {i, j}, std::nullopt,
                      i,   j,   std::nullopt,     omega_i, std::nullopt};
        const int partner = i_prime != 0 ? i_prime : j;
        if (i_prime != 0) {
            step.kind = MoveKind::case_A;
            step.switched = {i, i_prime};
            step.pivot_i_prime = i_prime;
            step.omega_i_prime = cur.right_neighbor(i_prime);
        }
        try {
            step.to = switch_entries(cur, i, partner);
        } catch (const ValidityError&) {
            throw ProofViolationError("switching " + std::to_string(i) + " and " +
                                      std::to_string(partner) + " broke row order");
        }
        if (!is_member(t, step.to).member)
            throw ProofViolationError("intermediate tableau " + step.to.to_literal() +
                                      " fails the criterion");
        cur = step.to;
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

/// Independently re-checks a certificate: connectivity, per-step switch
/// reconstruction and row order, the per-kind pivot inequalities, and the
/// goal. For membership certificates pass the component tableau so every
/// intermediate is re-tested against the criterion. Throws
/// ProofViolationError on the first broken invariant.
inline void validate_certificate(const Certificate& cert,
                                 const StandardTableau* component = nullptr) {
    const RowStandardTableau* prev = &cert.start;
    for (size_t k = 0; k < cert.steps.size(); ++k) {
        const MoveStep& step = cert.steps[k];
        auto fail = [&](const std::string& why) {
            throw ProofViolationError("step " + std::to_string(k + 1) + ": " + why);
        };
        if (step.from != *prev) fail("chain is not connected");
        RowStandardTableau rebuilt = [&]() -> RowStandardTableau {
            try {
                return detail::apply_entry_switches(step.from, step.switched, step.paired_switch);
            } catch (const ValidityError&) {
                fail("recorded switches do not give a row-standard tableau");
                throw; // unreachable
            }
        }();
        if (rebuilt != step.to) fail("recorded result does not match the recorded switches");
        const int i = step.pivot_i;
        if (step.kind == MoveKind::toward_tbar) {
            if (step.switched.first != i) fail("primary switch must move the pivot entry");
            for (int e = 1; e < i; ++e)
                if (step.from.column_of(e) != step.to.column_of(e) ||
                    step.from.row_of(e) != step.to.row_of(e))
                    fail("entries below the pivot moved");
            int placed = detail::minimal_misplaced_entry(step.to);
            if (placed != 0 && placed <= i) fail("pivot entry still misplaced");
        } else {
            if (step.paired_switch) fail("membership steps switch a single pair");
            const int omega_i = step.from.right_neighbor(i);
            if (step.kind == MoveKind::case_A) {
                if (!step.pivot_i_prime) fail("case_A step lacks the partner entry");
                int ip = *step.pivot_i_prime;
                int omega_ip = step.from.right_neighbor(ip);
                if (!(i < ip && ip < omega_i && omega_i < omega_ip))
                    fail("case_A pivot inequalities i < i' < w(i) < w(i') do not hold");
                if (step.switched != std::pair<int, int>{i, ip}) fail("case_A switch mismatch");
            } else {
                int j = step.pivot_j;
                if (!(j < omega_i)) fail("case_B needs j below the right neighbor of i");
                if (step.from.left_neighbor(j) >= i) fail("case_B needs the left neighbor below i");
                if (step.switched != std::pair<int, int>{i, j}) fail("case_B switch mismatch");
            }
            if (component && !is_member(*component, step.to).member)
                fail("intermediate tableau fails the criterion");
        }
        prev = &step.to;
    }
    if (cert.goal == CertificateGoal::reached_tbar) {
        if (cert.final_tableau() != static_cast<const RowStandardTableau&>(t_bar(cert.start.shape())))
            throw ProofViolationError("chain does not end at the column-filled tableau");
    } else {
        if (!component)
            throw ProofViolationError("membership certificate needs the component tableau");
        std::multiset<int> got(cert.final_tableau().second_col().begin(),
                               cert.final_tableau().second_col().end());
        std::multiset<int> want(component->second_col().begin(), component->second_col().end());
        if (got != want)
            throw ProofViolationError("final tableau does not carry the component's column content");
        if (!is_member(*component, cert.start).member)
            throw ProofViolationError("start tableau fails the criterion");
    }
}

} // namespace springer
