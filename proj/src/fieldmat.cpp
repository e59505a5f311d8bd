#include "corona/fieldmat.hpp"

#include <algorithm>
#include <sstream>

namespace corona {
namespace fieldmat {

bool is_supported_prime(int q) { return q == 2 || q == 3 || q == 5 || q == 7; }

void require_supported_prime(int q) {
    if (!is_supported_prime(q))
        throw std::invalid_argument("field size must be one of 2, 3, 5, 7; got " +
                                    std::to_string(q));
}

uint8_t finv(int q, uint8_t a) {
    if (a == 0) throw std::invalid_argument("inverse of zero field element");
    // q <= 7, so a tiny scan beats a table
    for (int x = 1; x < q; ++x)
        if ((a * x) % q == 1) return static_cast<uint8_t>(x);
    throw std::logic_error("no inverse found; q not prime?");
}

Mat::Mat(int q, int rows, int cols) : q_(q), rows_(rows), cols_(cols) {
    require_supported_prime(q);
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, 0);
}

Mat Mat::identity(int q, int n) {
    Mat m(q, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::from_rows(int q, const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(q, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Mat::check_same_field(const Mat& other) const {
    if (q_ != other.q_)
        throw std::invalid_argument("mixed-field matrix operation: F_" + std::to_string(q_) +
                                    " vs F_" + std::to_string(other.q_));
}

Mat Mat::mul(const Mat& other) const {
    check_same_field(other);
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(q_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint8_t aik = at(i, k);
            if (!aik) continue;
            for (int j = 0; j < other.cols_; ++j) {
                int v = out.at(i, j) + aik * other.at(k, j);
                out.a_[static_cast<size_t>(i) * out.cols_ + j] = static_cast<uint8_t>(v % q_);
            }
        }
    return out;
}

Mat Mat::transpose() const {
    Mat out(q_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Mat Mat::hstack(const Mat& right) const {
    check_same_field(right);
    if (rows_ != right.rows_) throw std::invalid_argument("hstack row mismatch");
    Mat out(q_, rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
        for (int j = 0; j < right.cols_; ++j) out.set(i, cols_ + j, right.at(i, j));
    }
    return out;
}

Mat Mat::vstack(const Mat& below) const {
    check_same_field(below);
    if (cols_ != below.cols_) throw std::invalid_argument("vstack column mismatch");
    Mat out(q_, rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(rows_ + i, j, below.at(i, j));
    return out;
}

Mat Mat::submatrix(int r0, int r1, int c0, int c1) const {
    if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
        throw std::invalid_argument("submatrix range out of bounds");
    Mat out(q_, r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) out.set(i - r0, j - c0, at(i, j));
    return out;
}

Mat Mat::scaled(uint8_t s) const {
    Mat out = *this;
    for (auto& x : out.a_) x = static_cast<uint8_t>((x * s) % q_);
    return out;
}

Mat Mat::negated() const {
    Mat out = *this;
    for (auto& x : out.a_) x = fneg(q_, x);
    return out;
}

std::vector<int> Mat::rref() {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int piv = -1;
        for (int r = lead; r < rows_; ++r)
            if (at(r, col)) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols_; ++j)
                std::swap(a_[static_cast<size_t>(piv) * cols_ + j],
                          a_[static_cast<size_t>(lead) * cols_ + j]);
        uint8_t inv = finv(q_, at(lead, col));
        for (int j = 0; j < cols_; ++j) set(lead, j, at(lead, j) * inv);
        for (int r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            uint8_t f = at(r, col);
            if (!f) continue;
            for (int j = 0; j < cols_; ++j)
                set(r, j, at(r, j) + (q_ - f) * at(lead, j));
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

int Mat::rank() const {
    Mat tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

Mat Mat::nullspace() const {
    Mat tmp = *this;
    std::vector<int> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat out(q_, static_cast<int>(free_cols.size()), cols_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        out.set(static_cast<int>(k), fc, 1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            out.set(static_cast<int>(k), pivots[pi], fneg(q_, tmp.at(static_cast<int>(pi), fc)));
    }
    return out;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Mat aug = hstack(identity(q_, rows_));
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ ||
        (rows_ > 0 && pivots.back() >= rows_))
        return std::nullopt;
    return aug.submatrix(0, rows_, cols_, 2 * cols_);
}

std::optional<Mat> Mat::solve(const Mat& b) const {
    check_same_field(b);
    if (b.rows_ != rows_ || b.cols_ != 1) throw std::invalid_argument("solve expects rows x 1 rhs");
    Mat aug = hstack(b);
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
    Mat x(q_, cols_, 1);
    for (size_t pi = 0; pi < pivots.size(); ++pi) x.set(pivots[pi], 0, aug.at(static_cast<int>(pi), cols_));
    return x;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint8_t x) { return x == 0; });
}

bool Mat::operator==(const Mat& other) const {
    return q_ == other.q_ && rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

std::vector<std::vector<int>> Mat::to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = at(i, j);
    return out;
}

// ----- packed GF(2) -----

Gf2Mat::Gf2Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (cols < 0 || cols > 64) throw std::invalid_argument("Gf2Mat supports 0..64 columns");
    if (rows < 0) throw std::invalid_argument("negative matrix dimension");
    mask_ = cols == 64 ? ~0ull : ((1ull << cols) - 1);
    r_.assign(rows, 0);
}

Gf2Mat Gf2Mat::from_mat(const Mat& m) {
    if (m.q() != 2) throw std::invalid_argument("Gf2Mat::from_mat requires an F_2 matrix");
    Gf2Mat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        uint64_t w = 0;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) w |= 1ull << j;
        out.r_[i] = w;
    }
    return out;
}

Mat Gf2Mat::to_mat() const {
    Mat out(2, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    return out;
}

std::vector<int> Gf2Mat::rref() {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        uint64_t bit = 1ull << col;
        int piv = -1;
        for (int r = lead; r < rows_; ++r)
            if (r_[r] & bit) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(r_[piv], r_[lead]);
        for (int r = 0; r < rows_; ++r)
            if (r != lead && (r_[r] & bit)) r_[r] ^= r_[lead];
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

int Gf2Mat::rank() const {
    Gf2Mat tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

Gf2Mat Gf2Mat::nullspace() const {
    Gf2Mat tmp = *this;
    std::vector<int> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Gf2Mat out(static_cast<int>(free_cols.size()), cols_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        uint64_t w = 1ull << free_cols[k];
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            if (tmp.r_[pi] & (1ull << free_cols[k])) w |= 1ull << pivots[pi];
        out.r_[k] = w;
    }
    return out;
}

bool Gf2Mat::operator==(const Gf2Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && r_ == other.r_;
}

// ----- subspaces -----

Subspace Subspace::from_generators(const Mat& generators) {
    Mat b = generators;
    std::vector<int> pivots = b.rref();
    Subspace s;
    s.basis_ = b.submatrix(0, static_cast<int>(pivots.size()), 0, b.cols());
    return s;
}

Subspace Subspace::zero(int q, int ambient) {
    Subspace s;
    s.basis_ = Mat(q, 0, ambient);
    return s;
}

Subspace Subspace::full(int q, int ambient) {
    Subspace s;
    s.basis_ = Mat::identity(q, ambient);
    return s;
}

bool Subspace::contains(const Mat& row_vector) const {
    if (row_vector.rows() != 1 || row_vector.cols() != ambient())
        throw std::invalid_argument("contains expects a 1 x ambient row vector");
    Mat stacked = basis_.vstack(row_vector);
    return stacked.rank() == dim();
}

std::string Subspace::key() const {
    std::string out;
    out.push_back(static_cast<char>(q()));
    out.push_back(static_cast<char>(ambient()));
    out.push_back(static_cast<char>(dim()));
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < ambient(); ++j) out.push_back(static_cast<char>(basis_.at(i, j)));
    return out;
}

Subspace Subspace::sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("subspace sum ambient mismatch");
    return from_generators(u.basis_.vstack(v.basis_));
}

Subspace Subspace::intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient())
        throw std::invalid_argument("subspace intersection ambient mismatch");
    if (u.q() != v.q()) throw std::invalid_argument("mixed-field subspace operation");
    // rows x of [U; V]^T's left kernel split as (a | b) give a U = -(b V) in the
    // intersection; compute via the right nullspace of the transpose stack
    Mat stacked = u.basis_.vstack(v.basis_);          // (du+dv) x d
    Mat ker = stacked.transpose().nullspace();        // rows: (a | b) with a U + b V = 0
    int du = u.dim();
    Mat gens(u.q(), ker.rows(), u.ambient());
    for (int r = 0; r < ker.rows(); ++r) {
        // gen = a U with a = first du coords
        for (int j = 0; j < u.ambient(); ++j) {
            int acc = 0;
            for (int t = 0; t < du; ++t) acc += ker.at(r, t) * u.basis_.at(t, j);
            gens.set(r, j, acc);
        }
    }
    return from_generators(gens);
}

bool Subspace::complementary(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("complementary ambient mismatch");
    if (u.dim() + v.dim() != u.ambient()) return false;
    return sum(u, v).dim() == u.ambient();
}

}  // namespace fieldmat
}  // namespace corona
