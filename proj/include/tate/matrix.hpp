#pragma once

#include <vector>

#include "tate/rational.hpp"

namespace tate {

// Dense matrix of exact rationals. Row-major storage.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {}

    static RationalMatrix identity(long n, const Rat& scale = Rat(1));
    static RationalMatrix constant(long rows, long cols, const Rat& value);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rat& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Rat& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    bool operator==(const RationalMatrix& o) const = default;

    bool is_symmetric() const;
    Rat row_sum(long i) const;
    Rat max_entry() const;

    // this + c on every entry
    RationalMatrix shifted(const Rat& c) const;

    RationalMatrix transposed() const;

    // exact product; dimensions must agree
    RationalMatrix operator*(const RationalMatrix& rhs) const;

private:
    long rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Values of a level-k locally constant function in canonical coset order.
using SampledFunction = std::vector<Rat>;

}  // namespace tate
