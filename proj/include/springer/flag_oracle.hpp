#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "springer/errors.hpp"
#include "springer/exact_linalg.hpp"
#include "springer/shape.hpp"
#include "springer/tableau.hpp"

namespace springer {

/// The nilpotent endomorphism in its box-indexed basis: basis vectors
/// e_1..e_r sit on the first column top to bottom, e_{r+1}..e_n on the
/// second; u kills the first column and shifts the second column left.
struct NilpotentMap {
    TwoColumnShape shape;
    Matrix<> matrix;
};

inline NilpotentMap nilpotent_map(const TwoColumnShape& shape) {
    const int n = shape.n();
    Matrix<> m(n, n);
    for (int i = shape.r + 1; i <= n; ++i) m.at(i - shape.r - 1, i - 1) = 1;
    return NilpotentMap{shape, std::move(m)};
}

/// Complete flag given by an ordered basis: V_i is the span of the first i
/// columns. Construction checks exact linear independence.
class CoordinateFlag {
public:
    CoordinateFlag(TwoColumnShape shape, Matrix<> basis)
        : shape_(shape), basis_(std::move(basis)) {
        const int n = shape_.n();
        if (basis_.rows() != n || basis_.cols() != n)
            throw DimensionError("flag basis must be " + std::to_string(n) + "x" +
                                 std::to_string(n));
        if (rank(basis_) != n)
            throw ValidityError("flag basis vectors are linearly dependent");
    }

    const TwoColumnShape& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    const Matrix<>& basis() const { return basis_; }

    /// Basis of V_i as an n x i matrix.
    Matrix<> subspace(int i) const {
        if (i < 0 || i > n()) throw IndexError("subspace index outside 0..n");
        return basis_.left_columns(i);
    }

private:
    TwoColumnShape shape_;
    Matrix<> basis_;
};

/// 0-based basis index of the box holding the given entry.
inline int box_index(const RowStandardTableau& t, int entry) {
    int p = t.row_of(entry);
    return t.column_of(entry) == 1 ? p - 1 : t.shape().r + p - 1;
}

/// The coordinate flag of a row-standard tableau: the i-th subspace is
/// spanned by the basis vectors of the boxes numbered 1..i.
inline CoordinateFlag flag_of_tableau(const RowStandardTableau& t) {
    const int n = t.n();
    Matrix<> basis(n, n);
    for (int entry = 1; entry <= n; ++entry) basis.at(box_index(t, entry), entry - 1) = 1;
    return CoordinateFlag(t.shape(), std::move(basis));
}

inline bool is_u_stable(const CoordinateFlag& f, const NilpotentMap& u) {
    for (int i = 1; i < f.n(); ++i) {
        Matrix<> sub = f.subspace(i);
        if (rank(concat_columns(sub, u.matrix * sub)) != i) return false;
    }
    return true;
}

/// Rank of u on the quotient V_j/V_i, computed as dim(V_i + u(V_j)) - i.
inline int rank_quotient(const CoordinateFlag& f, const NilpotentMap& u, int i, int j) {
    if (i < 0 || j > f.n() || i >= j)
        throw IndexError("quotient window (" + std::to_string(i) + "," + std::to_string(j) +
                         ") must satisfy 0 <= i < j <= " + std::to_string(f.n()));
    return rank(concat_columns(f.subspace(i), u.matrix * f.subspace(j))) - i;
}

/// Column lengths (one-box rows, two-box rows) of u restricted to each flag
/// subspace; entry i describes V_i.
struct JordanChain {
    std::vector<int> ones;
    std::vector<int> twos;

    std::vector<std::pair<int, int>> as_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (size_t i = 0; i < ones.size(); ++i) out.emplace_back(ones[i], twos[i]);
        return out;
    }
};

inline JordanChain jordan_chain(const CoordinateFlag& f, const NilpotentMap& u) {
    if (!is_u_stable(f, u)) throw ValidityError("flag is not u-stable");
    const int n = f.n();
    JordanChain chain;
    chain.ones.resize(static_cast<size_t>(n) + 1);
    chain.twos.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        int twos = rank(u.matrix * f.subspace(i));
        int ones = i - 2 * twos;
        if (ones < 0 || (i > 0 && (twos < chain.twos[static_cast<size_t>(i) - 1] ||
                                   twos > chain.twos[static_cast<size_t>(i) - 1] + 1)))
            throw InternalError("restricted Jordan types must grow one box at a time");
        chain.ones[static_cast<size_t>(i)] = ones;
        chain.twos[static_cast<size_t>(i)] = twos;
    }
    return chain;
}

namespace detail {

// Row-major index of the unknown X[a][b] in the flattened commutator system.
inline int unknown_index(int n, int a, int b) { return a * n + b; }

// Equations X u - u X = 0, one row per output entry (p,q).
inline Matrix<> commutator_system(const NilpotentMap& u) {
    const int n = u.shape.n();
    Matrix<> sys(n * n, n * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            int row = p * n + q;
            for (int b = 0; b < n; ++b)
                if (u.matrix.at(b, q) != 0) sys.at(row, unknown_index(n, p, b)) += u.matrix.at(b, q);
            for (int a = 0; a < n; ++a)
                if (u.matrix.at(p, a) != 0) sys.at(row, unknown_index(n, a, q)) -= u.matrix.at(p, a);
        }
    return sys;
}

} // namespace detail

/// Dimension of the space of endomorphisms commuting with u, via the
/// homogeneous commutator system on n^2 unknowns.
inline int centralizer_dim_oracle(const NilpotentMap& u) {
    const int n = u.shape.n();
    if (n == 0) return 0;
    return nullspace_dim(detail::commutator_system(u));
}

/// Dimension of the space of endomorphisms commuting with u and stabilizing
/// every subspace of the coordinate flag of tp. For a coordinate flag the
/// stability conditions are triangularity in the box-permuted basis.
inline int flag_stabilizer_dim_oracle(const NilpotentMap& u, const RowStandardTableau& tp) {
    if (u.shape != tp.shape())
        throw ValidityError("map and tableau have different shapes");
    const int n = u.shape.n();
    if (n == 0) return 0;
    std::vector<int> box(static_cast<size_t>(n) + 1);
    for (int entry = 1; entry <= n; ++entry) box[static_cast<size_t>(entry)] = box_index(tp, entry);
    Matrix<> commutator = detail::commutator_system(u);
    Matrix<> triangular(n * (n - 1) / 2, n * n);
    int row = 0;
    for (int k = 1; k <= n; ++k)
        for (int m = k + 1; m <= n; ++m)
            triangular.at(row++, detail::unknown_index(n, box[static_cast<size_t>(m)],
                                                        box[static_cast<size_t>(k)])) = 1;
    Matrix<> sys(commutator.rows() + triangular.rows(), n * n);
    for (int i = 0; i < commutator.rows(); ++i)
        for (int j = 0; j < n * n; ++j) sys.at(i, j) = commutator.at(i, j);
    for (int i = 0; i < triangular.rows(); ++i)
        for (int j = 0; j < n * n; ++j) sys.at(commutator.rows() + i, j) = triangular.at(i, j);
    return nullspace_dim(sys);
}

/// Retry bound for rejection sampling of invertible centralizer elements.
inline constexpr int kSampleRetryBound = 8;

/// Deterministic invertible element of the centralizer: the free images
/// (second-column images arbitrary, one-box-row images in ker u) get small
/// random integer coordinates, redrawn until the result is invertible.
inline Matrix<> random_centralizer_element(const NilpotentMap& u, std::uint64_t seed) {
    const TwoColumnShape shape = u.shape;
    const int n = shape.n();
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() { return static_cast<int>(rng() % 19) - 9; };
    for (int attempt = 0; attempt < kSampleRetryBound; ++attempt) {
        Matrix<> g(n, n);
        for (int q = 1; q <= shape.s; ++q) {
            Matrix<> image(n, 1);
            for (int k = 0; k < n; ++k) image.at(k, 0) = draw();
            Matrix<> shifted = u.matrix * image;
            for (int k = 0; k < n; ++k) {
                g.at(k, shape.r + q - 1) = image.at(k, 0);
                g.at(k, q - 1) = shifted.at(k, 0);
            }
        }
        for (int p = shape.s + 1; p <= shape.r; ++p)
            for (int k = 0; k < shape.r; ++k) g.at(k, p - 1) = draw();
        if (rank(g) == n) return g;
    }
    throw DegenerateSampleError("no invertible centralizer sample within " +
                                std::to_string(kSampleRetryBound) + " draws for seed " +
                                std::to_string(seed));
}

/// Image of a flag under an invertible map.
inline CoordinateFlag transform_flag(const Matrix<>& g, const CoordinateFlag& f) {
    return CoordinateFlag(f.shape(), g * f.basis());
}

} // namespace springer
