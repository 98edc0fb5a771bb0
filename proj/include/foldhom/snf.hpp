#pragma once

// Integer Smith normal form.
//
// Boundary matrices are sparse and almost always reduce entirely through
// ±1 pivots, each of which contributes an invariant factor 1 and deletes a
// row and a column. Whatever is left goes through a dense SNF that pivots on
// the entry of least absolute value. Arithmetic is int64 with overflow
// checks; on overflow the whole computation is redone in cpp_int.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foldhom/errors.hpp"

namespace foldhom {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix.
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;  // sorted by row

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
        SparseMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (dense[i].size() != m.cols) throw PreconditionError("ragged matrix");
            for (std::size_t j = 0; j < m.cols; ++j)
                if (dense[i][j] != 0) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), dense[i][j]);
        }
        return m;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns) n += c.size();
        return n;
    }
};

struct SmithResult {
    std::size_t rank = 0;
    std::vector<BigInt> factors;  // nonzero invariant factors, d1 | d2 | ..., all positive
};

namespace detail {

struct ArithmeticOverflow : std::exception {};

template <class T>
T checked_mul(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
        std::int64_t out;
        if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow{};
        return out;
    } else {
        return a * b;
    }
}

template <class T>
T checked_sub(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
        std::int64_t out;
        if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticOverflow{};
        return out;
    } else {
        return a - b;
    }
}

template <class T>
T abs_value(const T& a) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
        if (a == INT64_MIN) throw ArithmeticOverflow{};
        return a < 0 ? -a : a;
    } else {
        return a < 0 ? T(-a) : a;
    }
}

/// Dense SNF with least-absolute-value pivoting. Returns the nonzero diagonal.
template <class T>
std::vector<T> dense_smith(std::vector<std::vector<T>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<T> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // least nonzero |entry| in the trailing block
        bool found = false;
        std::size_t pr = 0, pc = 0;
        T best{};
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (!found || abs_value(a[i][j]) < best)) {
                    best = abs_value(a[i][j]);
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const T q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const T q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: fold an offending row into the pivot row and retry
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] = a[t][k] + a[i][k];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs_value(a[t][t]));
        ++t;
    }
    return diag;
}

template <class T>
SmithResult sparse_smith(const SparseMatrix& m) {
    using Row = std::map<std::uint32_t, T>;  // col -> value
    std::vector<Row> rows(m.rows);
    std::vector<std::vector<std::uint32_t>> col_rows(m.cols);  // may hold stale rows
    for (std::uint32_t j = 0; j < m.cols; ++j) {
        for (const auto& [i, v] : m.columns[j]) {
            rows[i][j] = T(v);
            col_rows[j].push_back(i);
        }
    }
    std::vector<char> row_done(m.rows, 0), col_done(m.cols, 0);
    SmithResult out;

    auto col_count = [&](std::uint32_t j) {
        std::size_t n = 0;
        for (auto i : col_rows[j])
            if (!row_done[i] && rows[i].count(j)) ++n;
        return n;
    };

    // rows by current length; stale queue entries are skipped
    using Item = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (std::uint32_t i = 0; i < m.rows; ++i)
        if (!rows[i].empty()) queue.emplace(rows[i].size(), i);

    std::vector<std::uint32_t> stuck;
    while (!queue.empty()) {
        const auto [len, r] = queue.top();
        queue.pop();
        if (row_done[r] || rows[r].size() != len || rows[r].empty()) continue;
        // unit entry whose column is shortest
        std::optional<std::uint32_t> pivot;
        std::size_t best = SIZE_MAX;
        for (const auto& [j, v] : rows[r]) {
            if (abs_value(v) != 1) continue;
            const auto c = col_count(j);
            if (c < best) {
                best = c;
                pivot = j;
            }
        }
        if (!pivot) {
            stuck.push_back(r);
            continue;
        }
        const std::uint32_t c = *pivot;
        const T u = rows[r].at(c);
        for (auto i : std::vector<std::uint32_t>(col_rows[c])) {
            if (i == r || row_done[i]) continue;
            auto it = rows[i].find(c);
            if (it == rows[i].end()) continue;
            const T q = checked_mul(it->second, u);  // u = 1/u for units
            for (const auto& [j, v] : rows[r]) {
                T& cell = rows[i][j];
                const bool fresh = cell == 0;
                cell = checked_sub(cell, checked_mul(q, v));
                if (cell == 0) {
                    rows[i].erase(j);
                } else if (fresh) {
                    col_rows[j].push_back(i);
                }
            }
            queue.emplace(rows[i].size(), i);
        }
        row_done[r] = 1;
        col_done[c] = 1;
        ++out.rank;
        out.factors.emplace_back(1);
        // a stuck row may have gained a unit entry
        for (auto s : stuck)
            if (!row_done[s] && !rows[s].empty()) queue.emplace(rows[s].size(), s);
        stuck.clear();
    }

    // residual block
    std::vector<std::uint32_t> live_rows, live_cols;
    for (std::uint32_t i = 0; i < m.rows; ++i)
        if (!row_done[i] && !rows[i].empty()) live_rows.push_back(i);
    std::map<std::uint32_t, std::size_t> col_slot;
    for (auto i : live_rows)
        for (const auto& [j, v] : rows[i]) col_slot.emplace(j, 0);
    for (auto& [j, slot] : col_slot) {
        slot = live_cols.size();
        live_cols.push_back(j);
    }
    if (!live_rows.empty()) {
        if (live_rows.size() * live_cols.size() > 64'000'000ull)
            throw BudgetExceeded("residual SNF block too large", live_rows.size() * live_cols.size());
        std::vector<std::vector<T>> dense(live_rows.size(), std::vector<T>(live_cols.size(), T(0)));
        for (std::size_t a = 0; a < live_rows.size(); ++a)
            for (const auto& [j, v] : rows[live_rows[a]]) dense[a][col_slot[j]] = v;
        for (const auto& d : dense_smith(std::move(dense))) {
            ++out.rank;
            out.factors.emplace_back(d);
        }
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

}  // namespace detail

inline SmithResult smith_normal_form(const SparseMatrix& m) {
    try {
        return detail::sparse_smith<std::int64_t>(m);
    } catch (const detail::ArithmeticOverflow&) {
        return detail::sparse_smith<BigInt>(m);
    }
}

inline SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense) {
    return smith_normal_form(SparseMatrix::from_dense(dense));
}

}  // namespace foldhom
