#include "pushtrack/matrix.hpp"

#include "pushtrack/errors.hpp"

namespace pushtrack {

IntMatrix IntMatrix::identity(int dim, std::string provenance) {
    IntMatrix m(dim, std::move(provenance));
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (dim_ != rhs.dim_) fail(ErrorKind::BadParameters, "matrix dimension mismatch");
    IntMatrix out(dim_, provenance_);
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                const Int& y = rhs.at(k, j);
                if (y != 0) out.at(i, j) += x * y;
            }
        }
    }
    return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != dim_)
        fail(ErrorKind::BadParameters, "matrix/vector dimension mismatch");
    std::vector<Int> out(dim_);
    for (int i = 0; i < dim_; ++i) {
        Int acc = 0;
        for (int j = 0; j < dim_; ++j) {
            const Int& x = at(i, j);
            if (x != 0) acc += x * v[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

IntMatrix IntMatrix::pow(unsigned k) const {
    IntMatrix result = identity(dim_, provenance_);
    IntMatrix base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

Int IntMatrix::row_sum(int i) const {
    Int s = 0;
    for (int j = 0; j < dim_; ++j) s += at(i, j);
    return s;
}

Int IntMatrix::max_row_sum() const {
    Int best = 0;
    for (int i = 0; i < dim_; ++i) {
        Int s = row_sum(i);
        if (i == 0 || s > best) best = s;
    }
    return best;
}

Int IntMatrix::min_row_sum() const {
    Int best = 0;
    for (int i = 0; i < dim_; ++i) {
        Int s = row_sum(i);
        if (i == 0 || s < best) best = s;
    }
    return best;
}

void IntMatrix::set_block(int r0, int c0, int rows, int cols, const Int* block) {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) at(r0 + i, c0 + j) = block[i * cols + j];
}

void IntMatrix::set_block(int r0, int c0, const IntMatrix& block) {
    for (int i = 0; i < block.dim(); ++i)
        for (int j = 0; j < block.dim(); ++j) at(r0 + i, c0 + j) = block.at(i, j);
}

}  // namespace pushtrack
