#pragma once

#include <cstdint>
#include <vector>

#include "crowell/error.hpp"
#include "crowell/graph.hpp"
#include "crowell/poly.hpp"

namespace crowell {

// Independent cross-checks for the state enumeration, by the directed
// matrix-tree theorem: with L = D_in - A (in-degree Laplacian, A[i][j] =
// number of edges i->j), the minor of L with the root row and column
// deleted counts the spanning arborescences diverging from the root; with
// edge weights substituted for counts it computes their weighted sum.
// Nothing here walks trees, so agreement with the enumerator is meaningful.

namespace detail {

inline std::int64_t exact_quot(std::int64_t a, std::int64_t b) {
    if (b == 0 || a % b != 0) throw Error(ErrorKind::HypothesisViolation, "inexact integer division");
    return a / b;
}

inline IntPoly exact_quot(const IntPoly& a, const IntPoly& b) { return a.divide_exact(b); }

// Fraction-free (Bareiss) determinant.  T is int64 or IntPoly; every
// division is by a previous pivot and is exact.
template <typename T>
T bareiss_det(std::vector<std::vector<T>> m, const T& one, const T& zero) {
    const std::size_t k = m.size();
    if (k == 0) return one;
    T prev = one;
    bool negate = false;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (m[p][p] == zero) {
            std::size_t q = p + 1;
            while (q < k && m[q][p] == zero) ++q;
            if (q == k) return zero;
            std::swap(m[p], m[q]);
            negate = !negate;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j)
                m[i][j] = exact_quot(m[p][p] * m[i][j] - m[i][p] * m[p][j], prev);
            m[i][p] = zero;
        }
        prev = m[p][p];
    }
    T det = m[k - 1][k - 1];
    return negate ? zero - det : det;
}

} // namespace detail

// Number of states with the given root, without enumerating them.
inline std::int64_t arborescence_count_oracle(const CrowellGraph& g, int root) {
    if (root < 1 || root > g.n) throw Error(ErrorKind::NotFound, "no such vertex: " + std::to_string(root));
    std::vector<std::vector<std::int64_t>> L(
        static_cast<std::size_t>(g.n), std::vector<std::int64_t>(static_cast<std::size_t>(g.n), 0));
    for (const CrowellEdge& e : g.edges) {
        L[static_cast<std::size_t>(e.head - 1)][static_cast<std::size_t>(e.head - 1)] += 1;
        L[static_cast<std::size_t>(e.tail - 1)][static_cast<std::size_t>(e.head - 1)] -= 1;
    }
    std::vector<std::vector<std::int64_t>> minor;
    for (int i = 1; i <= g.n; ++i) {
        if (i == root) continue;
        std::vector<std::int64_t> row;
        for (int j = 1; j <= g.n; ++j)
            if (j != root) row.push_back(L[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
        minor.push_back(std::move(row));
    }
    return detail::bareiss_det<std::int64_t>(std::move(minor), 1, 0);
}

// The state sum and its normalization, without enumerating states.  Returns
// the pair (delta, m): delta is the weighted-arborescence determinant
// shifted and sign-fixed to have positive constant term, and m is the power
// with delta = (-t)^m * (weighted sum).
struct OraclePolynomial {
    IntPoly delta;
    int m = 0;
};

inline OraclePolynomial alexander_oracle(const CrowellGraph& g, int root) {
    if (root < 1 || root > g.n) throw Error(ErrorKind::NotFound, "no such vertex: " + std::to_string(root));
    const IntPoly zero;
    const IntPoly one = IntPoly::constant(1);
    const IntPoly minus_t({0, -1});
    std::vector<std::vector<IntPoly>> L(
        static_cast<std::size_t>(g.n), std::vector<IntPoly>(static_cast<std::size_t>(g.n), zero));
    for (const CrowellEdge& e : g.edges) {
        const IntPoly& w = (e.weight == Weight::MinusT) ? minus_t : one;
        auto h = static_cast<std::size_t>(e.head - 1);
        auto t = static_cast<std::size_t>(e.tail - 1);
        L[h][h] = L[h][h] + w;
        L[t][h] = L[t][h] - w;
    }
    std::vector<std::vector<IntPoly>> minor;
    for (int i = 1; i <= g.n; ++i) {
        if (i == root) continue;
        std::vector<IntPoly> row;
        for (int j = 1; j <= g.n; ++j)
            if (j != root) row.push_back(L[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
        minor.push_back(std::move(row));
    }
    IntPoly det = detail::bareiss_det<IntPoly>(std::move(minor), one, zero);
    if (det.is_zero()) throw Error(ErrorKind::NoStates, "no spanning arborescences from this root");

    // det = sum over states of (-t)^degree; the lowest degree present fixes
    // the normalization (-t)^m with m = -lowest.
    int lo = det.lowest_power();
    OraclePolynomial r;
    r.delta = det.shift_down(lo);
    if (r.delta.coeff(0) < 0) r.delta = -r.delta;
    r.m = -lo;
    return r;
}

} // namespace crowell
