#include "corona/quiver.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace corona {
namespace quiver {

using fieldmat::Mat;
using fieldmat::Subspace;
using matchings::Edge;
using matchings::Matching;
using roots::AdmissibleRoot;
using roots::RootKind;

void Rep::validate() const {
    fieldmat::require_supported_prime(q);
    if (static_cast<int>(flag_maps.size()) != std::max(0, len() - 1))
        throw std::invalid_argument("rep needs one flag map per consecutive pair");
    for (int t = 0; t + 1 < len(); ++t)
        if (flag_maps[t].rows() != flag_dims[t + 1] || flag_maps[t].cols() != flag_dims[t])
            throw std::invalid_argument("flag map shape mismatch at step " + std::to_string(t));
    if (branch_a.rows() != sink_dim() || branch_a.cols() != dim_a)
        throw std::invalid_argument("branch A map shape mismatch");
    if (branch_b.rows() != sink_dim() || branch_b.cols() != dim_b)
        throw std::invalid_argument("branch B map shape mismatch");
}

VarietyPoint VarietyPoint::make(int q, int m, int n, const Mat& a_rows, const Mat& b_rows) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative subspace dimension");
    if (a_rows.cols() != m + n || b_rows.cols() != m + n)
        throw std::invalid_argument("point subspaces must live in F_q^{m+n}");
    VarietyPoint pt;
    pt.q = q;
    pt.m = m;
    pt.n = n;
    pt.a = Subspace::from_generators(a_rows);
    pt.b = Subspace::from_generators(b_rows);
    if (pt.a.dim() != m || pt.b.dim() != n)
        throw std::invalid_argument("point subspace has wrong dimension");
    if (!Subspace::complementary(pt.a, pt.b))
        throw std::invalid_argument("point subspaces are not complementary");
    return pt;
}

Rep rep_from_point(const VarietyPoint& pt) {
    int d = pt.m + pt.n;
    Rep v;
    v.q = pt.q;
    v.flag_dims.resize(d);
    for (int t = 0; t < d; ++t) v.flag_dims[t] = t + 1;
    v.dim_a = pt.m;
    v.dim_b = pt.n;
    for (int t = 0; t + 1 < d; ++t) {
        Mat inc(pt.q, t + 2, t + 1);
        for (int s = 0; s <= t; ++s) inc.set(s, s, 1);
        v.flag_maps.push_back(inc);
    }
    v.branch_a = pt.a.basis().transpose();
    v.branch_b = pt.b.basis().transpose();
    if (d == 0) {
        v.branch_a = Mat(pt.q, 0, 0);
        v.branch_b = Mat(pt.q, 0, 0);
    }
    v.validate();
    return v;
}

Rep indecomposable_rep(const AdmissibleRoot& r, int m, int n, int q) {
    roots::DimVector dv = roots::root_dimension_vector(r, m, n);
    int len = m + n;
    Rep v;
    v.q = q;
    v.flag_dims = dv.flag;
    v.dim_a = dv.branch_a;
    v.dim_b = dv.branch_b;
    for (int t = 0; t + 1 < len; ++t) {
        int from = dv.flag[t], to = dv.flag[t + 1];
        Mat f(q, to, from);
        if (from == to) {
            for (int s = 0; s < from; ++s) f.set(s, s, 1);
        } else if (from == 1 && to == 2) {
            // pair root: the incoming line sits diagonally across the two
            // branch images, so both coordinates are 1
            f.set(0, 0, 1);
            f.set(1, 0, 1);
        }
        // from == 0: nothing to set
        v.flag_maps.push_back(f);
    }
    v.branch_a = Mat(q, v.sink_dim(), v.dim_a);
    v.branch_b = Mat(q, v.sink_dim(), v.dim_b);
    if (r.kind == RootKind::Pend) {
        v.branch_a.set(0, 0, 1);
    } else if (r.kind == RootKind::Free) {
        v.branch_b.set(0, 0, 1);
    } else {
        v.branch_a.set(0, 0, 1);
        v.branch_b.set(1, 0, 1);
    }
    v.validate();
    return v;
}

Rep direct_sum(const Rep& x, const Rep& y) {
    if (x.q != y.q || x.len() != y.len())
        throw std::invalid_argument("direct sum requires matching field and quiver length");
    auto block = [&](const Mat& a, const Mat& b) {
        Mat out(x.q, a.rows() + b.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b.at(i, j));
        return out;
    };
    Rep v;
    v.q = x.q;
    v.flag_dims.resize(x.len());
    for (int t = 0; t < x.len(); ++t) v.flag_dims[t] = x.flag_dims[t] + y.flag_dims[t];
    v.dim_a = x.dim_a + y.dim_a;
    v.dim_b = x.dim_b + y.dim_b;
    for (int t = 0; t + 1 < x.len(); ++t) v.flag_maps.push_back(block(x.flag_maps[t], y.flag_maps[t]));
    v.branch_a = block(x.branch_a, y.branch_a);
    v.branch_b = block(x.branch_b, y.branch_b);
    v.validate();
    return v;
}

bool is_injective(const Rep& v) {
    v.validate();
    for (const Mat& f : v.flag_maps)
        if (f.rank() != f.cols()) return false;
    return v.branch_a.rank() == v.branch_a.cols() && v.branch_b.rank() == v.branch_b.cols();
}

bool is_complementary(const Rep& v) {
    if (!is_injective(v)) return false;
    if (v.dim_a + v.dim_b != v.sink_dim()) return false;
    return v.branch_a.hstack(v.branch_b).rank() == v.sink_dim();
}

int hom_dim(const Rep& x, const Rep& y) {
    x.validate();
    y.validate();
    if (x.q != y.q) throw std::invalid_argument("hom between different fields");
    if (x.len() != y.len()) throw std::invalid_argument("hom between different quivers");
    int q = x.q;
    int len = x.len();

    // unknown blocks: X_t (y.d_t x x.d_t), X_A, X_B; row-major offsets
    std::vector<int> offset(len + 2, 0);
    int total = 0;
    for (int t = 0; t < len; ++t) {
        offset[t] = total;
        total += x.flag_dims[t] * y.flag_dims[t];
    }
    offset[len] = total;
    total += x.dim_a * y.dim_a;
    offset[len + 1] = total;
    total += x.dim_b * y.dim_b;
    if (total == 0) return 0;

    auto idx_flag = [&](int t, int r, int c) { return offset[t] + r * x.flag_dims[t] + c; };
    auto idx_a = [&](int r, int c) { return offset[len] + r * x.dim_a + c; };
    auto idx_b = [&](int r, int c) { return offset[len + 1] + r * x.dim_b + c; };

    int n_rows = 0;
    for (int t = 0; t + 1 < len; ++t) n_rows += y.flag_dims[t + 1] * x.flag_dims[t];
    n_rows += y.sink_dim() * x.dim_a + y.sink_dim() * x.dim_b;
    if (n_rows == 0) return total;

    Mat sys(q, n_rows, total);
    int row = 0;
    // y.map[t] X_t - X_{t+1} x.map[t] = 0
    for (int t = 0; t + 1 < len; ++t) {
        for (int r = 0; r < y.flag_dims[t + 1]; ++r)
            for (int c = 0; c < x.flag_dims[t]; ++c) {
                for (int k = 0; k < y.flag_dims[t]; ++k)
                    sys.set(row, idx_flag(t, k, c), sys.at(row, idx_flag(t, k, c)) + y.flag_maps[t].at(r, k));
                for (int k = 0; k < x.flag_dims[t + 1]; ++k)
                    sys.set(row, idx_flag(t + 1, r, k),
                            sys.at(row, idx_flag(t + 1, r, k)) - x.flag_maps[t].at(k, c));
                ++row;
            }
    }
    // X_sink x.branch - y.branch X_branch = 0, for A and B
    int sink = len - 1;
    for (int r = 0; r < y.sink_dim(); ++r)
        for (int c = 0; c < x.dim_a; ++c) {
            for (int k = 0; k < x.sink_dim(); ++k)
                sys.set(row, idx_flag(sink, r, k),
                        sys.at(row, idx_flag(sink, r, k)) + x.branch_a.at(k, c));
            for (int k = 0; k < y.dim_a; ++k)
                sys.set(row, idx_a(k, c), sys.at(row, idx_a(k, c)) - y.branch_a.at(r, k));
            ++row;
        }
    for (int r = 0; r < y.sink_dim(); ++r)
        for (int c = 0; c < x.dim_b; ++c) {
            for (int k = 0; k < x.sink_dim(); ++k)
                sys.set(row, idx_flag(sink, r, k),
                        sys.at(row, idx_flag(sink, r, k)) + x.branch_b.at(k, c));
            for (int k = 0; k < y.dim_b; ++k)
                sys.set(row, idx_b(k, c), sys.at(row, idx_b(k, c)) - y.branch_b.at(r, k));
            ++row;
        }

    int rank;
    if (q == 2 && total <= 64)
        rank = fieldmat::Gf2Mat::from_mat(sys).rank();
    else
        rank = sys.rank();
    return total - rank;
}

namespace {

long long bareiss_det(std::vector<std::vector<long long>> a) {
    int n = static_cast<int>(a.size());
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { swap_row = r; break; }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

HomMatrix build_hom_matrix(int m, int n, int q) {
    HomMatrix hm;
    hm.m = m;
    hm.n = n;
    hm.q = q;
    std::vector<AdmissibleRoot> all = roots::admissible_roots(m, n);
    int count = static_cast<int>(all.size());
    std::vector<Rep> reps;
    reps.reserve(count);
    for (const AdmissibleRoot& r : all) reps.push_back(indecomposable_rep(r, m, n, q));

    std::vector<std::vector<int>> h(count, std::vector<int>(count));
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) h[a][b] = hom_dim(reps[a], reps[b]);
    for (int a = 0; a < count; ++a)
        if (h[a][a] != 1)
            throw std::logic_error("indecomposable model has endomorphism dimension != 1");

    // topological order: nonzero homs between distinct roots point forward
    std::vector<int> indeg(count, 0);
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
            if (a != b && h[a][b] > 0) ++indeg[b];
    std::vector<int> order;
    std::vector<bool> done(count, false);
    while (static_cast<int>(order.size()) < count) {
        int pick = -1;
        for (int a = 0; a < count; ++a)
            if (!done[a] && indeg[a] == 0) { pick = a; break; }
        if (pick < 0) throw std::logic_error("hom relation between indecomposables has a cycle");
        done[pick] = true;
        order.push_back(pick);
        for (int b = 0; b < count; ++b)
            if (!done[b] && h[pick][b] > 0) --indeg[b];
    }

    hm.order.reserve(count);
    hm.models.reserve(count);
    hm.dims.assign(count, std::vector<int>(count));
    for (int a = 0; a < count; ++a) {
        hm.order.push_back(all[order[a]]);
        hm.models.push_back(reps[order[a]]);
    }
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) hm.dims[a][b] = h[order[a]][order[b]];
    for (int a = 0; a < count; ++a) {
        if (hm.dims[a][a] != 1) throw std::logic_error("hom matrix diagonal is not 1");
        for (int b = 0; b < a; ++b)
            if (hm.dims[a][b] != 0) throw std::logic_error("hom matrix is not unitriangular");
    }
    std::vector<std::vector<long long>> d64(count, std::vector<long long>(count));
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) d64[a][b] = hm.dims[a][b];
    hm.det = bareiss_det(std::move(d64));
    if (hm.det != 1 && hm.det != -1)
        throw std::logic_error("hom matrix determinant is not a unit");
    return hm;
}

}  // namespace

const HomMatrix& hom_matrix(int m, int n, int q) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, HomMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::tuple(m, n, q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_hom_matrix(m, n, q)).first;
    return it->second;
}

matchings::Matching classify_rep(const Rep& v, int m, int n) {
    v.validate();
    roots::DimVector target = roots::target_dim_vector(m, n);
    if (v.flag_dims != target.flag || v.dim_a != target.branch_a || v.dim_b != target.branch_b)
        throw std::invalid_argument("representation does not have the target dimension vector");

    const HomMatrix& hm = hom_matrix(m, n, v.q);
    int count = static_cast<int>(hm.order.size());
    std::vector<int> h(count);
    for (int a = 0; a < count; ++a) h[a] = hom_dim(hm.models[a], v);

    // unitriangular back-substitution for the multiplicities
    std::vector<int> mult(count);
    for (int a = count - 1; a >= 0; --a) {
        long long acc = h[a];
        for (int b = a + 1; b < count; ++b) acc -= static_cast<long long>(hm.dims[a][b]) * mult[b];
        mult[a] = static_cast<int>(acc);
    }
    roots::RootSet chosen;
    for (int a = 0; a < count; ++a) {
        if (mult[a] != 0 && mult[a] != 1)
            throw std::runtime_error("classification produced a multiplicity outside {0,1}");
        if (mult[a] == 1) chosen.push_back(hm.order[a]);
    }
    std::sort(chosen.begin(), chosen.end());
    roots::ValidationResult val = roots::validate_decomposition(chosen, m, n);
    if (!val.ok) throw std::runtime_error("classification is not a valid decomposition: " + val.reason);
    return roots::rootset_to_matching(chosen, m, n);
}

matchings::Matching classify_point(const VarietyPoint& pt) {
    Matching tag = classify_rep(rep_from_point(pt), pt.m, pt.n);

    // cross-check against the jump pattern of (dim U_t ^ A, dim U_t ^ B)
    int d = pt.m + pt.n;
    auto meet_dims = [&](const Subspace& s) {
        std::vector<int> out(d + 1, 0);
        for (int t = 1; t <= d; ++t) {
            Mat flag_rows(pt.q, t, d);
            for (int r = 0; r < t; ++r) flag_rows.set(r, r, 1);
            int sum_dim = flag_rows.vstack(s.basis()).rank();
            out[t] = t + s.dim() - sum_dim;
        }
        return out;
    };
    std::vector<int> da = meet_dims(pt.a), db = meet_dims(pt.b);
    roots::RootSet rs = roots::matching_to_rootset(tag, pt.m, pt.n);
    for (int t = 1; t <= d; ++t) {
        int ja = da[t] - da[t - 1], jb = db[t] - db[t - 1];
        int expect_a = 0, expect_b = 0;
        for (const AdmissibleRoot& r : rs) {
            if (r.kind == RootKind::Pend && r.i == t) expect_a = 1;
            if (r.kind == RootKind::Free && r.i == t) expect_b = 1;
            if (r.kind == RootKind::Pair && r.j == t) expect_a = expect_b = 1;
        }
        if (ja != expect_a || jb != expect_b)
            throw std::runtime_error("jump pattern disagrees with the hom classification");
    }
    return tag;
}

std::vector<int> leading_split_positions(int m, int n) {
    std::vector<int> out;
    for (int t = 1; t <= m; ++t) out.push_back(t);
    (void)n;
    return out;
}

std::vector<int> signed_split_positions(int half_m, int r) {
    matchings::GraphSpec spec{matchings::Variant::Signed, 2 * r};
    std::vector<int> out;
    for (int lab = -half_m; lab <= half_m; ++lab) {
        if (lab == 0) continue;
        out.push_back(matchings::position_for_label(spec, lab));
    }
    std::sort(out.begin(), out.end());
    return out;
}

fieldmat::Mat binary_representative_split(const Matching& s, int q,
                                          const std::vector<int>& a_positions) {
    if (s.spec.variant != matchings::Variant::Plain)
        throw std::invalid_argument("representative construction expects plain-corona positions");
    int d = s.spec.p;
    int m = static_cast<int>(a_positions.size());
    for (int p : a_positions)
        if (p < 1 || p > d) throw std::invalid_argument("split position outside 1..p");
    std::vector<bool> in_a(d + 1, false);
    for (int p : a_positions) {
        if (in_a[p]) throw std::invalid_argument("duplicate split position");
        in_a[p] = true;
    }
    std::vector<int> b_positions;
    for (int p = 1; p <= d; ++p)
        if (!in_a[p]) b_positions.push_back(p);
    if (s.size() != m)
        throw std::invalid_argument("matching size must equal the split size");

    // chi sends A-bound positions (pendants, opening pair ends) increasingly
    // onto the A slots, B-bound (free, closing pair ends) onto the B slots
    std::vector<int> a_bound, b_bound;
    for (const Edge& e : s.edges) {
        if (e.internal) {
            a_bound.push_back(e.i);
            b_bound.push_back(e.j);
        } else {
            a_bound.push_back(e.i);
        }
    }
    for (int lab : s.untouched_labels()) b_bound.push_back(lab);
    std::sort(a_bound.begin(), a_bound.end());
    std::sort(b_bound.begin(), b_bound.end());

    std::vector<int> chi(d + 1, 0);
    for (size_t t = 0; t < a_bound.size(); ++t) chi[a_bound[t]] = a_positions[t];
    for (size_t t = 0; t < b_bound.size(); ++t) chi[b_bound[t]] = b_positions[t];

    Mat g(q, d, d);
    for (const Edge& e : s.edges) {
        if (e.internal) {
            g.set(e.i - 1, chi[e.i] - 1, 1);
            g.set(e.j - 1, chi[e.i] - 1, 1);
            g.set(e.j - 1, chi[e.j] - 1, 1);
        } else {
            g.set(e.i - 1, chi[e.i] - 1, 1);
        }
    }
    for (int lab : s.untouched_labels()) g.set(lab - 1, chi[lab] - 1, 1);
    return g;
}

fieldmat::Mat binary_representative(const Matching& s, int m, int n, int q) {
    if (s.spec.p != m + n)
        throw std::invalid_argument("matching must live on the corona with m+n cores");
    return binary_representative_split(s, q, leading_split_positions(m, n));
}

VarietyPoint point_of_matrix(const Mat& g, const std::vector<int>& a_positions) {
    int d = g.rows();
    if (g.cols() != d) throw std::invalid_argument("representative matrix must be square");
    std::vector<bool> in_a(d + 1, false);
    for (int p : a_positions) in_a[p] = true;
    int m = static_cast<int>(a_positions.size());
    Mat a_rows(g.q(), m, d), b_rows(g.q(), d - m, d);
    int ra = 0, rb = 0;
    for (int p = 1; p <= d; ++p) {
        if (in_a[p]) {
            for (int r = 0; r < d; ++r) a_rows.set(ra, r, g.at(r, p - 1));
            ++ra;
        } else {
            for (int r = 0; r < d; ++r) b_rows.set(rb, r, g.at(r, p - 1));
            ++rb;
        }
    }
    return VarietyPoint::make(g.q(), m, d - m, a_rows, b_rows);
}

fieldmat::Mat apply_phi(const Mat& g) {
    int d = g.rows();
    if (g.cols() != d) throw std::invalid_argument("phi expects a square matrix");
    if (d % 2 != 0) throw std::invalid_argument("phi expects an even dimension");
    int q = g.q();
    Mat j(q, d, d);
    for (int i = 0; i < d; ++i) j.set(i, d - 1 - i, i < d / 2 ? -1 : 1);
    std::optional<Mat> gi = g.inverse();
    if (!gi) throw std::invalid_argument("phi expects an invertible matrix");
    // J^2 = -I, so J^{-1} = -J
    return j.mul(gi->transpose()).mul(j.negated());
}

fieldmat::Mat symplectic_representative(const Matching& signed_s, int q) {
    if (signed_s.spec.variant != matchings::Variant::Signed)
        throw std::invalid_argument("symplectic representative requires a signed-corona matching");
    if (q == 2) throw std::invalid_argument("symplectic representative requires odd characteristic");
    fieldmat::require_supported_prime(q);
    if (!(matchings::minus_matching(signed_s) == signed_s))
        throw std::invalid_argument("matching is not minus-invariant");
    if (!matchings::horizontal_edges(signed_s).empty())
        throw std::invalid_argument("matching has a horizontal edge");

    int r = signed_s.spec.p / 2;
    if (signed_s.size() % 2 != 0) throw std::logic_error("invariant horizontal-free matching of odd size");
    int half_m = signed_s.size() / 2;

    struct Block {
        enum Kind { PendPair, SameSign, Cross, FreePair } kind;
        int i, j;  // classes, i < j for the internal kinds
    };
    std::vector<Block> blocks;
    for (const Edge& e : signed_s.edges) {
        if (!e.internal) {
            if (e.i > 0) blocks.push_back({Block::PendPair, e.i, e.i});
        } else if (e.i > 0) {
            blocks.push_back({Block::SameSign, e.i, e.j});
        } else if (e.j > 0 && -e.i > e.j) {
            blocks.push_back({Block::Cross, e.j, -e.i});
        }
    }
    std::vector<bool> cls_used(r + 1, false);
    for (const Block& b : blocks) {
        cls_used[b.i] = true;
        cls_used[b.j] = true;
    }
    for (int c = 1; c <= r; ++c)
        if (!cls_used[c] && !signed_s.touches(c)) blocks.push_back({Block::FreePair, c, c});
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& x, const Block& y) { return std::tuple(x.i, x.j) < std::tuple(y.i, y.j); });

    matchings::GraphSpec spec = signed_s.spec;
    auto pos = [&](int lab) { return matchings::position_for_label(spec, lab) - 1; };
    Mat g(q, 2 * r, 2 * r);
    auto put = [&](int col_label, std::initializer_list<std::pair<int, int>> entries) {
        for (auto [lab, v] : entries) g.set(pos(lab), pos(col_label), v);
    };

    int next_a = 1, next_b = half_m + 1;
    for (const Block& b : blocks) {
        switch (b.kind) {
            case Block::PendPair: {
                int c = next_a++;
                put(c, {{b.i, 1}});
                put(-c, {{-b.i, 1}});
                break;
            }
            case Block::FreePair: {
                int f = next_b++;
                put(f, {{b.i, 1}});
                put(-f, {{-b.i, 1}});
                break;
            }
            case Block::SameSign: {
                int c = next_a++, f = next_b++;
                put(-c, {{-b.i, 1}});
                put(c, {{b.i, 1}, {b.j, -1}});
                put(-f, {{-b.j, 1}, {-b.i, 1}});
                put(f, {{b.j, 1}});
                break;
            }
            case Block::Cross: {
                int c = next_a++, f = next_b++;
                put(-c, {{-b.i, 1}, {b.j, 1}});
                put(c, {{b.i, 1}});
                put(-f, {{-b.j, 1}, {b.i, 1}});
                put(f, {{b.j, 1}});
                break;
            }
        }
    }
    if (next_a != half_m + 1 || next_b != r + 1)
        throw std::logic_error("symplectic block slot accounting failed");

    if (!(apply_phi(g) == g)) throw std::logic_error("symplectic representative is not phi-fixed");
    VarietyPoint pt = point_of_matrix(g, signed_split_positions(half_m, r));
    Matching tag = classify_point(pt);
    if (!(matchings::relabel_to_signed(tag) == signed_s))
        throw std::logic_error("symplectic representative classifies to the wrong matching");
    return g;
}

}  // namespace quiver
}  // namespace corona
