#pragma once

#include <cstdint>
#include <vector>

#include "multimode/graph.hpp"

namespace mm {

// Dense boolean matrix with rows packed into 64-bit words.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words() const { return words_; }

    bool get(int i, int j) const { return (data_[idx(i, j)] >> (j & 63)) & 1u; }
    void set(int i, int j, bool v = true) {
        auto bit = std::uint64_t{1} << (j & 63);
        if (v) data_[idx(i, j)] |= bit; else data_[idx(i, j)] &= ~bit;
    }
    std::uint64_t* row(int i) { return data_.data() + static_cast<std::size_t>(i) * words_; }
    const std::uint64_t* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * words_; }

    std::int64_t popcount() const;
    BoolMatrix transpose() const;
    BoolMatrix operator&(const BoolMatrix& o) const;
    bool operator==(const BoolMatrix& o) const;
    // Lowest (i, j) in row-major order with a set bit, or (-1, -1).
    std::pair<int, int> first_set() const;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * words_ + (j >> 6); }
    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> data_;
};

// C[i,j] = OR_k A[i,k] AND B[k,j].
BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix bool_matmul_serial(const BoolMatrix& a, const BoolMatrix& b);

// C[u,v] = min_k A[u,k] + B[k,v]; entries with |value| > cap count as Infinite.
// A negative cap disables capping. Entries may be negative; kInf is +infinity.
DistanceMatrix min_plus_product(const DistanceMatrix& a, const DistanceMatrix& b, Dist cap = -1);
DistanceMatrix min_plus_product_serial(const DistanceMatrix& a, const DistanceMatrix& b, Dist cap = -1);

}  // namespace mm
