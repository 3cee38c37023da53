#pragma once

#include "crysext/galois_field.hpp"

#include <optional>
#include <vector>

namespace crysext {

/// Dense matrix over a GaloisField, row-major.
class FieldMatrix {
public:
    using Code = GaloisField::Code;

    FieldMatrix(const GaloisField& field, int rows, int cols);

    const GaloisField& field() const noexcept { return *field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Code at(int r, int c) const noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Code& at(int r, int c) noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    /// Reduced row echelon form in place; returns the pivot column of each
    /// nonzero row.
    std::vector<int> row_reduce();
    int rank() const;

private:
    const GaloisField* field_;
    int rows_;
    int cols_;
    std::vector<Code> data_;
};

/// Some x with A x = b, or nullopt.
std::optional<std::vector<GaloisField::Code>> solve(const FieldMatrix& a, const std::vector<GaloisField::Code>& b);

/// A basis of {x : A x = 0}.
std::vector<std::vector<GaloisField::Code>> nullspace(const FieldMatrix& a);

}  // namespace crysext
