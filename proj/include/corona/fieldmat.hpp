// Exact linear algebra over the prime fields F_q, q in {2,3,5,7}, plus
// arbitrary-precision integer/rational aliases used throughout the library.
//
// Conventions:
//   * matrices are dense row-major with byte entries reduced mod q;
//   * a subspace of F_q^d is stored as its unique reduced row echelon basis,
//     so two Subspace values are equal iff they are the same subspace;
//   * Gf2Mat packs one row per 64-bit word (column j = bit j) and is the
//     fast path for q = 2; it must agree entrywise with Mat on the same input.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace corona {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

namespace fieldmat {

bool is_supported_prime(int q);
void require_supported_prime(int q);

// residue arithmetic helpers; inputs need not be reduced
inline uint8_t fmod(int q, int x) {
    int r = x % q;
    return static_cast<uint8_t>(r < 0 ? r + q : r);
}
uint8_t finv(int q, uint8_t a);  // multiplicative inverse, a != 0
inline uint8_t fneg(int q, uint8_t a) { return a == 0 ? 0 : static_cast<uint8_t>(q - a); }

class Mat {
public:
    Mat() = default;
    Mat(int q, int rows, int cols);
    static Mat identity(int q, int n);
    static Mat from_rows(int q, const std::vector<std::vector<int>>& rows);

    int q() const { return q_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint8_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { a_[static_cast<size_t>(r) * cols_ + c] = fmod(q_, v); }

    Mat mul(const Mat& other) const;
    Mat transpose() const;
    Mat hstack(const Mat& right) const;
    Mat vstack(const Mat& below) const;
    Mat submatrix(int r0, int r1, int c0, int c1) const;  // half-open ranges
    Mat scaled(uint8_t s) const;
    Mat negated() const;

    // in-place reduction to reduced row echelon form; returns pivot columns
    std::vector<int> rref();
    int rank() const;
    // rows form a basis of the right null space { x : A x = 0 }, in rref
    Mat nullspace() const;
    std::optional<Mat> inverse() const;
    // one solution x of A x = b (b is cols x 1), or nullopt if inconsistent
    std::optional<Mat> solve(const Mat& b) const;

    bool is_zero() const;
    bool operator==(const Mat& other) const;
    bool operator!=(const Mat& other) const { return !(*this == other); }

    std::vector<std::vector<int>> to_rows() const;

private:
    int q_ = 2;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint8_t> a_;
    void check_same_field(const Mat& other) const;
};

// bit-packed GF(2) matrix, cols <= 64; row i is word r_[i]
class Gf2Mat {
public:
    Gf2Mat() = default;
    Gf2Mat(int rows, int cols);
    static Gf2Mat from_mat(const Mat& m);  // m.q() must be 2
    Mat to_mat() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint64_t row(int i) const { return r_[i]; }
    void set_row(int i, uint64_t w) { r_[i] = w & mask_; }
    int at(int r, int c) const { return static_cast<int>((r_[r] >> c) & 1u); }

    std::vector<int> rref();
    int rank() const;
    Gf2Mat nullspace() const;

    bool operator==(const Gf2Mat& other) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    uint64_t mask_ = 0;
    std::vector<uint64_t> r_;
};

class Subspace {
public:
    Subspace() = default;
    // reduces the generator rows; zero rows are dropped
    static Subspace from_generators(const Mat& generators);
    static Subspace zero(int q, int ambient);
    static Subspace full(int q, int ambient);

    int q() const { return basis_.q(); }
    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }  // rref, rows == dim

    bool contains(const Mat& row_vector) const;
    // canonical bytes; equal iff equal subspaces of the same (q, ambient)
    std::string key() const;

    static Subspace intersect(const Subspace& u, const Subspace& v);
    static Subspace sum(const Subspace& u, const Subspace& v);
    static bool complementary(const Subspace& u, const Subspace& v);

    bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

private:
    Mat basis_;
};

}  // namespace fieldmat
}  // namespace corona
