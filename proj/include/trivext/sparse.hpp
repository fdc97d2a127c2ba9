#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace trivext {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no explicit zeros.
template <class T>
using SparseVec = std::vector<std::pair<std::uint32_t, T>>;

template <class F, class T = typename F::value_type>
T sparse_at(const SparseVec<T>& v, std::uint32_t index, const F& f)
{
    auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& e, std::uint32_t i) { return e.first < i; });
    return it != v.end() && it->first == index ? it->second : f.zero();
}

/// y += c * x
template <class F, class T = typename F::value_type>
void axpy(const F& f, SparseVec<T>& y, const T& c, const SparseVec<T>& x)
{
    if (f.is_zero(c) || x.empty())
        return;
    SparseVec<T> out;
    out.reserve(y.size() + x.size());
    auto a = y.begin();
    auto b = x.begin();
    while (a != y.end() || b != x.end()) {
        if (b == x.end() || (a != y.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == y.end() || b->first < a->first) {
            out.emplace_back(b->first, f.mul(c, b->second));
            ++b;
        } else {
            T s = f.add(a->second, f.mul(c, b->second));
            if (!f.is_zero(s))
                out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    y = std::move(out);
}

template <class F, class T = typename F::value_type>
void scale(const F& f, SparseVec<T>& v, const T& c)
{
    if (f.is_zero(c)) {
        v.clear();
        return;
    }
    for (auto& e : v)
        e.second = f.mul(e.second, c);
}

/// Sums duplicate indices of an unsorted list of terms and drops zeros.
template <class F, class T = typename F::value_type>
SparseVec<T> consolidate(const F& f, SparseVec<T> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<T> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second = f.add(out.back().second, t.second);
        else
            out.push_back(std::move(t));
        if (f.is_zero(out.back().second))
            out.pop_back();
    }
    return out;
}

/*
  Incrementally built basis of a row space. Every stored row has leading
  coefficient 1 at a column that no other row leads at, and has zeros at the
  leading columns of all rows inserted before it. reduce_fully() turns the
  rows into the reduced row-echelon form of the span.
*/
template <class F>
class RowEchelon {
public:
    using T = typename F::value_type;

    RowEchelon(F f, std::size_t ncols) : f_(std::move(f)), ncols_(ncols), row_of_col_(ncols, -1) {}

    std::size_t cols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec<T>>& rows() const { return rows_; }
    std::uint32_t pivot(std::size_t row) const { return rows_[row].front().first; }
    bool is_pivot(std::uint32_t col) const { return row_of_col_[col] >= 0; }
    int row_of(std::uint32_t col) const { return row_of_col_[col]; }

    /// Removes from v every entry at a pivot column.
    SparseVec<T> reduce(SparseVec<T> v) const
    {
        std::size_t pos = 0;
        while (pos < v.size()) {
            const std::uint32_t col = v[pos].first;
            const int r = row_of_col_[col];
            if (r < 0) {
                ++pos;
                continue;
            }
            T c = f_.neg(v[pos].second);
            axpy(f_, v, c, rows_[r]);
            // entries before pos are untouched; the entry at pos was cancelled
        }
        return v;
    }

    bool contains(const SparseVec<T>& v) const { return reduce(v).empty(); }

    /// Adds v to the span; returns false when v was already in it.
    bool insert(SparseVec<T> v)
    {
        v = reduce(std::move(v));
        if (v.empty())
            return false;
        T inv = f_.inv(v.front().second);
        scale(f_, v, inv);
        row_of_col_[v.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    /// Brings the rows into reduced row-echelon form, sorted by pivot.
    void reduce_fully()
    {
        for (std::size_t i = rows_.size(); i-- > 0;) {
            auto& row = rows_[i];
            std::size_t pos = 1;
            while (pos < row.size()) {
                const int r = row_of_col_[row[pos].first];
                if (r < 0) {
                    ++pos;
                    continue;
                }
                T c = f_.neg(row[pos].second);
                axpy(f_, row, c, rows_[r]);
            }
        }
        std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
        for (std::size_t i = 0; i < rows_.size(); ++i)
            row_of_col_[rows_[i].front().first] = static_cast<int>(i);
    }

private:
    F f_;
    std::size_t ncols_;
    std::vector<SparseVec<T>> rows_;
    std::vector<int> row_of_col_;
};

/*
  Right null space of the matrix whose rows are given, as a basis in reduced
  row-echelon form: each vector has a unit leading entry, no other basis
  vector is nonzero at that position, and vectors are sorted by leading
  position. The basis of a given subspace in this form is unique.
*/
template <class F>
std::vector<SparseVec<typename F::value_type>> null_space(const F& f, const std::vector<SparseVec<typename F::value_type>>& rows,
                                                          std::size_t ncols)
{
    using T = typename F::value_type;
    const auto flip = [ncols](std::uint32_t j) { return static_cast<std::uint32_t>(ncols - 1 - j); };

    // Eliminating with reversed column order makes the pivots the rightmost
    // independent columns, so each null vector leads at its free column.
    RowEchelon<F> ech(f, ncols);
    for (const auto& row : rows) {
        SparseVec<T> r;
        r.reserve(row.size());
        for (auto it = row.rbegin(); it != row.rend(); ++it)
            r.emplace_back(flip(it->first), it->second);
        ech.insert(std::move(r));
    }
    ech.reduce_fully();

    std::vector<SparseVec<T>> result(ncols);
    std::vector<char> is_free(ncols, 1);
    for (const auto& row : ech.rows()) {
        const std::uint32_t p = flip(row.front().first);
        is_free[p] = 0;
        for (std::size_t k = 1; k < row.size(); ++k) {
            const std::uint32_t free_col = flip(row[k].first);
            result[free_col].emplace_back(p, f.neg(row[k].second));
        }
    }
    std::vector<SparseVec<T>> basis;
    for (std::uint32_t j = 0; j < ncols; ++j) {
        if (!is_free[j])
            continue;
        auto& v = result[j];
        v.emplace_back(j, f.one());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Null space of the matrix given by its columns (each a sparse vector of length nrows).
template <class F>
std::vector<SparseVec<typename F::value_type>> null_space_of_columns(const F& f,
                                                                     const std::vector<SparseVec<typename F::value_type>>& columns,
                                                                     std::size_t nrows)
{
    using T = typename F::value_type;
    std::vector<SparseVec<T>> rows(nrows);
    for (std::uint32_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, v] : columns[j])
            rows[i].emplace_back(j, v);
    return null_space(f, rows, columns.size());
}

}  // namespace trivext
