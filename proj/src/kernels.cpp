#include "multimode/kernels.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mm {

BoolMatrix::BoolMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(static_cast<std::size_t>(rows) * ((cols + 63) / 64), 0) {}

std::int64_t BoolMatrix::popcount() const {
    std::int64_t c = 0;
    for (auto w : data_) c += std::popcount(w);
    return c;
}

BoolMatrix BoolMatrix::transpose() const {
    BoolMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        const auto* r = row(i);
        for (int w = 0; w < words_; ++w) {
            auto bits = r[w];
            while (bits) {
                int j = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                t.set(j, i);
            }
        }
    }
    return t;
}

BoolMatrix BoolMatrix::operator&(const BoolMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("boolean AND dimension mismatch");
    BoolMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] &= o.data_[i];
    return r;
}

bool BoolMatrix::operator==(const BoolMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::pair<int, int> BoolMatrix::first_set() const {
    for (int i = 0; i < rows_; ++i) {
        const auto* r = row(i);
        for (int w = 0; w < words_; ++w)
            if (r[w]) return {i, w * 64 + std::countr_zero(r[w])};
    }
    return {-1, -1};
}

namespace {

void matmul_row(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& c, int i) {
    auto* out = c.row(i);
    const auto* ar = a.row(i);
    for (int w = 0; w < a.words(); ++w) {
        auto bits = ar[w];
        while (bits) {
            int k = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            const auto* br = b.row(k);
            for (int x = 0; x < b.words(); ++x) out[x] |= br[x];
        }
    }
}

void check_dims(int inner_a, int inner_b) {
    if (inner_a != inner_b) throw std::invalid_argument("matrix product dimension mismatch");
}

}  // namespace

BoolMatrix bool_matmul_serial(const BoolMatrix& a, const BoolMatrix& b) {
    check_dims(a.cols(), b.rows());
    BoolMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
    return c;
}

BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b) {
    check_dims(a.cols(), b.rows());
    BoolMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
    return c;
}

namespace {

DistanceMatrix capped(const DistanceMatrix& m, Dist cap) {
    if (cap < 0) return m;
    DistanceMatrix r = m;
    for (auto& x : r.a)
        if (x != kInf && (x > cap || x < -cap)) x = kInf;
    return r;
}

constexpr int kBlock = 64;

void minplus_rows(const DistanceMatrix& a, const DistanceMatrix& b, DistanceMatrix& c, int i0, int i1) {
    for (int k0 = 0; k0 < a.cols; k0 += kBlock) {
        int k1 = std::min(a.cols, k0 + kBlock);
        for (int i = i0; i < i1; ++i) {
            Dist* out = c.row(i);
            const Dist* ar = a.row(i);
            for (int k = k0; k < k1; ++k) {
                Dist x = ar[k];
                if (x == kInf) continue;
                const Dist* br = b.row(k);
                for (int j = 0; j < b.cols; ++j) {
                    Dist y = br[j];
                    if (y != kInf && x + y < out[j]) out[j] = x + y;
                }
            }
        }
    }
}

}  // namespace

DistanceMatrix min_plus_product_serial(const DistanceMatrix& a, const DistanceMatrix& b, Dist cap) {
    check_dims(a.cols, b.rows);
    auto ac = capped(a, cap);
    auto bc = capped(b, cap);
    DistanceMatrix c(a.rows, b.cols);
    minplus_rows(ac, bc, c, 0, a.rows);
    return c;
}

DistanceMatrix min_plus_product(const DistanceMatrix& a, const DistanceMatrix& b, Dist cap) {
    check_dims(a.cols, b.rows);
    auto ac = capped(a, cap);
    auto bc = capped(b, cap);
    DistanceMatrix c(a.rows, b.cols);
    int blocks = (a.rows + 15) / 16;
#pragma omp parallel for schedule(dynamic)
    for (int blk = 0; blk < blocks; ++blk) minplus_rows(ac, bc, c, blk * 16, std::min(a.rows, blk * 16 + 16));
    return c;
}

}  // namespace mm
