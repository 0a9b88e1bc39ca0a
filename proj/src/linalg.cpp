#include "abelcover/linalg.hpp"

#include <cassert>

namespace abelcover {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<CycloNum>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw DomainError("ExactMatrix: ragged rows");
        for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<CycloNum> matrix_apply(const ExactMatrix& m, const std::vector<CycloNum>& v) {
    if (v.size() != m.cols()) throw DomainError("matrix_apply: size mismatch");
    std::vector<CycloNum> out(m.rows(), CycloNum(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

namespace {

BigInt lcm_big(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

// Scale each row so that every entry lies in Z[mu]; leaves the null space
// untouched and lets the Bareiss quotients divide exactly.
void clear_denominators(ExactMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            l = lcm_big(l, m.at(r, c).re_part().denominator());
            l = lcm_big(l, m.at(r, c).mu_part().denominator());
        }
        if (l == 1) continue;
        CycloNum s{Rational(l)};
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) *= s;
    }
}

}  // namespace

RankKernel matrix_rank_kernel(const ExactMatrix& input) {
    ExactMatrix m = input;
    clear_denominators(m);

    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();

    std::vector<std::size_t> pivot_col;  // pivot column of echelon row k
    CycloNum prev_pivot(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t src = row;
        while (src < nr && m.at(src, col).is_zero()) ++src;
        if (src == nr) continue;
        if (src != row)
            for (std::size_t c = 0; c < nc; ++c) std::swap(m.at(row, c), m.at(src, c));

        const CycloNum pivot = m.at(row, col);
        const CycloNum inv_prev = prev_pivot.inverse();
        for (std::size_t i = row + 1; i < nr; ++i) {
            const CycloNum factor = m.at(i, col);
            m.at(i, col) = CycloNum(0);
            if (factor.is_zero() && pivot == prev_pivot) continue;
            for (std::size_t c = col + 1; c < nc; ++c) {
                // One-step fraction-free update: exact over Z[mu].
                m.at(i, c) = (pivot * m.at(i, c) - factor * m.at(row, c)) * inv_prev;
            }
        }
        prev_pivot = pivot;
        pivot_col.push_back(col);
        ++row;
    }

    RankKernel out;
    out.rank = pivot_col.size();

    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycloNum> v(nc, CycloNum(0));
        v[f] = CycloNum(1);
        // Back-substitute through the echelon rows.
        for (std::size_t k = pivot_col.size(); k-- > 0;) {
            const std::size_t pc = pivot_col[k];
            CycloNum acc(0);
            for (std::size_t c = pc + 1; c < nc; ++c) {
                if (!v[c].is_zero()) acc += m.at(k, c) * v[c];
            }
            v[pc] = -acc / m.at(k, pc);
        }
        assert([&] {
            for (const CycloNum& e : matrix_apply(input, v))
                if (!e.is_zero()) return false;
            return true;
        }());
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace abelcover
