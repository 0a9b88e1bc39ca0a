#pragma once

#include "abelcover/cyclotomic.hpp"

#include <cstddef>
#include <vector>

namespace abelcover {

/// Dense matrix over Q(mu), row-major.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix from_rows(const std::vector<std::vector<CycloNum>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    CycloNum& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycloNum& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<CycloNum> data_;
};

struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<CycloNum>> kernel;  // basis of the right null space
};

/// Exact rank and kernel basis via division-controlled (Bareiss) elimination.
/// rank + kernel.size() == cols always; every kernel vector is annihilated
/// exactly. No floating point anywhere.
RankKernel matrix_rank_kernel(const ExactMatrix& m);

std::vector<CycloNum> matrix_apply(const ExactMatrix& m, const std::vector<CycloNum>& v);

}  // namespace abelcover
