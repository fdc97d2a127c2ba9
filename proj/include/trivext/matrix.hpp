#pragma once

#include "trivext/field.hpp"
#include "trivext/sparse.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace trivext {

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense matrix over an exact field, row-major.
template <class F>
class ExactMatrix {
public:
    using T = typename F::value_type;

    ExactMatrix() = default;
    ExactMatrix(F f, std::size_t rows, std::size_t cols) : f_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, f_.zero()) {}

    static ExactMatrix identity(F f, std::size_t n)
    {
        ExactMatrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = f.one();
        return m;
    }

    static ExactMatrix from_ints(F f, const std::vector<std::vector<long long>>& rows)
    {
        const std::size_t r = rows.size(), c = r ? rows.front().size() : 0;
        ExactMatrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("ExactMatrix::from_ints: ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = f.from_int(rows[i][j]);
        }
        return m;
    }

    const F& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    SparseVec<T> sparse_row(std::size_t i) const
    {
        SparseVec<T> v;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!f_.is_zero((*this)(i, j)))
                v.emplace_back(static_cast<std::uint32_t>(j), (*this)(i, j));
        return v;
    }

    ExactMatrix transpose() const
    {
        ExactMatrix t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    ExactMatrix operator*(const ExactMatrix& b) const
    {
        if (cols_ != b.rows_)
            throw std::invalid_argument("ExactMatrix: dimension mismatch in product");
        ExactMatrix c(f_, rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (f_.is_zero(a))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!f_.is_zero(b(k, j)))
                        c(i, j) = f_.add(c(i, j), f_.mul(a, b(k, j)));
            }
        return c;
    }

    ExactMatrix operator-() const
    {
        ExactMatrix n(*this);
        for (auto& x : n.data_)
            x = f_.neg(x);
        return n;
    }

    bool operator==(const ExactMatrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            return false;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!f_.equal(data_[k], b.data_[k]))
                return false;
        return true;
    }

    bool is_identity() const { return is_square() && *this == identity(f_, rows_); }

    std::size_t rank() const
    {
        RowEchelon<F> ech(f_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            ech.insert(sparse_row(i));
        return ech.rank();
    }

    /// Gauss-Jordan inverse; throws SingularMatrixError.
    ExactMatrix inverse() const
    {
        if (!is_square())
            throw std::invalid_argument("ExactMatrix::inverse: not square");
        const std::size_t n = rows_;
        ExactMatrix a(*this), inv = identity(f_, n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && f_.is_zero(a(piv, col)))
                ++piv;
            if (piv == n)
                throw SingularMatrixError("matrix is singular");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            const T s = f_.inv(a(col, col));
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) = f_.mul(a(col, j), s);
                inv(col, j) = f_.mul(inv(col, j), s);
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || f_.is_zero(a(i, col)))
                    continue;
                const T c = a(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a(i, j) = f_.sub(a(i, j), f_.mul(c, a(col, j)));
                    inv(i, j) = f_.sub(inv(i, j), f_.mul(c, inv(col, j)));
                }
            }
        }
        return inv;
    }

    ExactMatrix pow(unsigned long long e) const
    {
        if (!is_square())
            throw std::invalid_argument("ExactMatrix::pow: not square");
        ExactMatrix result = identity(f_, rows_), base(*this);
        while (e > 0) {
            if (e & 1)
                result = result * base;
            e >>= 1;
            if (e)
                base = base * base;
        }
        return result;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? ", " : "") << f_.format((*this)(i, j));
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    F f_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Basis of the right null space in canonical reduced row-echelon form.
template <class F>
std::vector<SparseVec<typename F::value_type>> kernel_basis(const ExactMatrix<F>& m)
{
    std::vector<SparseVec<typename F::value_type>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.sparse_row(i));
    return null_space(m.field(), rows, m.cols());
}

template <class F>
std::vector<typename F::value_type> densify(const F& f, const SparseVec<typename F::value_type>& v, std::size_t n)
{
    std::vector<typename F::value_type> out(n, f.zero());
    for (const auto& [i, x] : v)
        out[i] = x;
    return out;
}

}  // namespace trivext
