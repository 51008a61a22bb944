#ifndef PUSHTRACK_MATRIX_HPP
#define PUSHTRACK_MATRIX_HPP

#include <string>
#include <vector>

#include "pushtrack/numeric.hpp"

namespace pushtrack {

// Dense square matrix of exact nonnegative integers. Incidence entries grow
// like 3^(2n), so entries are arbitrary precision throughout; desk-scale
// dimensions (a few hundred at most) keep dense products cheap.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(int dim, std::string provenance = {})
        : dim_(dim), a_(static_cast<size_t>(dim) * dim), provenance_(std::move(provenance)) {}

    static IntMatrix identity(int dim, std::string provenance = {});

    int dim() const { return dim_; }
    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.dim_ == y.dim_ && x.a_ == y.a_;
    }

    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    IntMatrix pow(unsigned k) const;

    Int row_sum(int i) const;
    Int max_row_sum() const;
    Int min_row_sum() const;

    // Copies `block` (rows x cols, row-major) to position (r0, c0).
    void set_block(int r0, int c0, int rows, int cols, const Int* block);
    void set_block(int r0, int c0, const IntMatrix& block);

  private:
    int dim_ = 0;
    std::vector<Int> a_;
    std::string provenance_;
};

}  // namespace pushtrack

#endif
