#include "tate/matrix.hpp"

#include <stdexcept>

#include "tate/parallel.hpp"

namespace tate {

RationalMatrix RationalMatrix::identity(long n, const Rat& scale) {
    RationalMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = scale;
    return m;
}

RationalMatrix RationalMatrix::constant(long rows, long cols, const Rat& value) {
    RationalMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.at(i, j) = value;
    return m;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Rat RationalMatrix::row_sum(long i) const {
    Rat s(0);
    for (long j = 0; j < cols_; ++j) s += at(i, j);
    return s;
}

Rat RationalMatrix::max_entry() const {
    if (a_.empty()) throw std::logic_error("max_entry: empty matrix");
    Rat m = a_[0];
    for (const Rat& x : a_)
        if (x > m) m = x;
    return m;
}

RationalMatrix RationalMatrix::shifted(const Rat& c) const {
    RationalMatrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + c;
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    parallel_for(rows_, [&](long i) {
        for (long t = 0; t < cols_; ++t) {
            const Rat& a = at(i, t);
            if (a == 0) continue;
            for (long j = 0; j < rhs.cols_; ++j) {
                const Rat& b = rhs.at(t, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    });
    return out;
}

}  // namespace tate
