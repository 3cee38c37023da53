#include "crysext/field_linalg.hpp"

#include "crysext/error.hpp"

#include <utility>

namespace crysext {

FieldMatrix::FieldMatrix(const GaloisField& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw Error(ErrorKind::invalid_argument, "negative matrix dimension");
}

std::vector<int> FieldMatrix::row_reduce() {
    const auto& F = *field_;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int sel = -1;
        for (int r = row; r < rows_; ++r)
            if (at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
        const Code inv = F.inv(at(row, col));
        for (int c = 0; c < cols_; ++c) at(row, c) = F.mul(at(row, c), inv);
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            const Code factor = at(r, col);
            for (int c = 0; c < cols_; ++c) at(r, c) = F.sub(at(r, c), F.mul(factor, at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int FieldMatrix::rank() const {
    FieldMatrix copy(*this);
    return static_cast<int>(copy.row_reduce().size());
}

std::optional<std::vector<GaloisField::Code>> solve(const FieldMatrix& a, const std::vector<GaloisField::Code>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw Error(ErrorKind::invalid_argument, "solve: size mismatch");
    const auto& F = a.field();
    FieldMatrix aug(F, a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[static_cast<std::size_t>(r)];
    }
    const auto pivots = aug.row_reduce();
    std::vector<GaloisField::Code> x(static_cast<std::size_t>(a.cols()), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.cols()) return std::nullopt;
        x[static_cast<std::size_t>(pivots[i])] = aug.at(static_cast<int>(i), a.cols());
    }
    return x;
}

std::vector<std::vector<GaloisField::Code>> nullspace(const FieldMatrix& a) {
    const auto& F = a.field();
    FieldMatrix m(a);
    const auto pivots = m.row_reduce();
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<GaloisField::Code>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<GaloisField::Code> v(static_cast<std::size_t>(a.cols()), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[static_cast<std::size_t>(pivots[i])] = F.neg(m.at(static_cast<int>(i), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace crysext
