#include "corona/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>

namespace corona {
namespace orbits {

using fieldmat::fmod;
using fieldmat::Mat;
using matchings::Matching;
using quiver::VarietyPoint;

namespace {

constexpr int kEntriesPerWord = 21;  // 3 bits each, 63 bits used per word

// flat (m+n) x d byte workspace; rows 0..m-1 hold the A basis, m..m+n-1 the B
// basis, both kept in rref between group steps
struct Buf {
    int m = 0, n = 0, d = 0, q = 2;
    std::array<uint8_t, kMaxAmbient * kMaxAmbient> e{};

    uint8_t at(int r, int c) const { return e[static_cast<size_t>(r) * d + c]; }
    void set(int r, int c, int v) { e[static_cast<size_t>(r) * d + c] = fmod(q, v); }
};

void rref_rows(Buf& b, int r0, int r1) {
    int row = r0;
    for (int col = 0; col < b.d && row < r1; ++col) {
        int piv = -1;
        for (int r = row; r < r1; ++r)
            if (b.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < b.d; ++c) {
                uint8_t t = b.at(piv, c);
                b.set(piv, c, b.at(row, c));
                b.set(row, c, t);
            }
        uint8_t inv = fieldmat::finv(b.q, b.at(row, col));
        if (inv != 1)
            for (int c = 0; c < b.d; ++c) b.set(row, c, b.at(row, c) * inv);
        for (int r = r0; r < r1; ++r) {
            if (r == row) continue;
            uint8_t f = b.at(r, col);
            if (f == 0) continue;
            for (int c = 0; c < b.d; ++c) b.set(r, c, b.at(r, c) - f * b.at(row, c));
        }
        ++row;
    }
}

PackedPoint pack_buf(const Buf& b) {
    PackedPoint p;
    int k = 0;
    for (int r = 0; r < b.m + b.n; ++r)
        for (int c = 0; c < b.d; ++c, ++k)
            p.w[k / kEntriesPerWord] |= static_cast<uint64_t>(b.at(r, c))
                                        << (3 * (k % kEntriesPerWord));
    return p;
}

Buf unpack_buf(int m, int n, int q, const PackedPoint& p) {
    Buf b;
    b.m = m;
    b.n = n;
    b.d = m + n;
    b.q = q;
    int k = 0;
    for (int r = 0; r < m + n; ++r)
        for (int c = 0; c < b.d; ++c, ++k)
            b.e[static_cast<size_t>(r) * b.d + c] =
                static_cast<uint8_t>((p.w[k / kEntriesPerWord] >> (3 * (k % kEntriesPerWord))) & 7u);
    return b;
}

// one Borel generator in action form: coordinate i gains c * coordinate i+1,
// or coordinate i is scaled by c (torus)
struct GenOp {
    bool torus = false;
    int i = 0;
    uint8_t c = 1;
};

std::vector<GenOp> generator_ops(int q, int d) {
    std::vector<GenOp> ops;
    for (int i = 0; i + 1 < d; ++i)
        for (int c = 1; c < q; ++c) ops.push_back({false, i, static_cast<uint8_t>(c)});
    if (q > 2) {
        int prim = 2;
        while (true) {
            int pow = 1, ord = 0;
            do {
                pow = pow * prim % q;
                ++ord;
            } while (pow != 1);
            if (ord == q - 1) break;
            ++prim;
        }
        for (int i = 0; i < d; ++i) ops.push_back({true, i, static_cast<uint8_t>(prim)});
    }
    return ops;
}

void apply_op(const GenOp& g, Buf& b) {
    int rows = b.m + b.n;
    if (g.torus) {
        for (int r = 0; r < rows; ++r) b.set(r, g.i, b.at(r, g.i) * g.c);
    } else {
        for (int r = 0; r < rows; ++r) b.set(r, g.i, b.at(r, g.i) + g.c * b.at(r, g.i + 1));
    }
    rref_rows(b, 0, b.m);
    rref_rows(b, b.m, rows);
}

void check_dimensions(int m, int n, int q) {
    fieldmat::require_supported_prime(q);
    if (m < 0 || n < 0) throw std::invalid_argument("negative subspace dimension");
    if (m + n > kMaxAmbient)
        throw std::invalid_argument("ambient dimension exceeds the packing capacity of " +
                                    std::to_string(kMaxAmbient));
}

template <typename F>
void parallel_over(long long count, int threads, const F& body) {
    threads = static_cast<int>(
        std::max<long long>(1, std::min<long long>(threads, count == 0 ? 1 : count)));
    if (threads == 1) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (int t = 0; t < threads; ++t) {
        long long lo = count * t / threads, hi = count * (t + 1) / threads;
        pool.emplace_back([&, lo, hi] {
            try {
                body(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

size_t PackedPointHash::operator()(const PackedPoint& p) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t w : p.w) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<size_t>(h);
}

PackedPoint pack_point(const VarietyPoint& pt) {
    check_dimensions(pt.m, pt.n, pt.q);
    Buf b;
    b.m = pt.m;
    b.n = pt.n;
    b.d = pt.m + pt.n;
    b.q = pt.q;
    for (int r = 0; r < pt.m; ++r)
        for (int c = 0; c < b.d; ++c) b.set(r, c, pt.a.basis().at(r, c));
    for (int r = 0; r < pt.n; ++r)
        for (int c = 0; c < b.d; ++c) b.set(pt.m + r, c, pt.b.basis().at(r, c));
    return pack_buf(b);
}

quiver::VarietyPoint unpack_point(int m, int n, int q, const PackedPoint& key) {
    check_dimensions(m, n, q);
    Buf b = unpack_buf(m, n, q, key);
    int d = m + n;
    Mat a_rows(q, m, d), b_rows(q, n, d);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < d; ++c) a_rows.set(r, c, b.at(r, c));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < d; ++c) b_rows.set(r, c, b.at(m + r, c));
    return VarietyPoint::make(q, m, n, a_rows, b_rows);
}

BigInt gaussian_binomial(int d, int k, int q) {
    if (k < 0 || k > d) return 0;
    BigInt num = 1, den = 1, qq = q;
    for (int i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(qq, d - i) - 1;
        den *= boost::multiprecision::pow(qq, i + 1) - 1;
    }
    return num / den;
}

BigInt expected_point_count(int m, int n, int q) {
    return gaussian_binomial(m + n, m, q) * boost::multiprecision::pow(BigInt(q), m * n);
}

BigInt expected_orbit_count(int m, int n) {
    return matchings::count_matchings({matchings::Variant::Plain, m + n}, m);
}

std::vector<PackedPoint> enumerate_points(int m, int n, int q) {
    check_dimensions(m, n, q);
    int d = m + n;
    std::vector<PackedPoint> out;

    std::vector<int> pivots(m);
    for (int k = 0; k < m; ++k) pivots[k] = k;
    bool more_shapes = m <= d;
    while (more_shapes) {
        std::vector<bool> is_pivot(d, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<int> nonpivots;
        for (int c = 0; c < d; ++c)
            if (!is_pivot[c]) nonpivots.push_back(c);
        std::vector<std::pair<int, int>> free_a;  // (row, col) free slots of A
        for (int k = 0; k < m; ++k)
            for (int c = pivots[k] + 1; c < d; ++c)
                if (!is_pivot[c]) free_a.emplace_back(k, c);

        Buf base;
        base.m = m;
        base.n = n;
        base.d = d;
        base.q = q;
        for (int k = 0; k < m; ++k) base.set(k, pivots[k], 1);

        std::vector<uint8_t> avals(free_a.size(), 0);
        while (true) {
            Buf b = base;
            for (size_t s = 0; s < free_a.size(); ++s)
                b.set(free_a[s].first, free_a[s].second, avals[s]);

            // complements of A: e_u plus an arbitrary combination of A rows
            std::vector<uint8_t> cvals(static_cast<size_t>(n) * m, 0);
            while (true) {
                Buf full = b;
                for (int t = 0; t < n; ++t) {
                    full.set(m + t, nonpivots[t], full.at(m + t, nonpivots[t]) + 1);
                    for (int k = 0; k < m; ++k) {
                        uint8_t coef = cvals[static_cast<size_t>(t) * m + k];
                        if (coef == 0) continue;
                        for (int c = 0; c < d; ++c)
                            full.set(m + t, c, full.at(m + t, c) + coef * full.at(k, c));
                    }
                }
                rref_rows(full, m, m + n);
                out.push_back(pack_buf(full));

                size_t s = 0;
                while (s < cvals.size() && cvals[s] == static_cast<uint8_t>(q - 1))
                    cvals[s++] = 0;
                if (s == cvals.size()) break;
                ++cvals[s];
            }

            size_t s = 0;
            while (s < avals.size() && avals[s] == static_cast<uint8_t>(q - 1)) avals[s++] = 0;
            if (s == avals.size()) break;
            ++avals[s];
        }

        // next pivot combination in lexicographic order
        int k = m - 1;
        while (k >= 0 && pivots[k] == d - m + k) --k;
        if (k < 0) break;
        ++pivots[k];
        for (int t = k + 1; t < m; ++t) pivots[t] = pivots[t - 1] + 1;
    }

    if (BigInt(out.size()) != expected_point_count(m, n, q))
        throw std::logic_error("point enumeration disagrees with the closed-form count");
    return out;
}

std::vector<fieldmat::Mat> borel_generators(int q, int d) {
    fieldmat::require_supported_prime(q);
    std::vector<Mat> gens;
    for (const GenOp& op : generator_ops(q, d)) {
        Mat g = Mat::identity(q, d);
        if (op.torus)
            g.set(op.i, op.i, op.c);
        else
            g.set(op.i, op.i + 1, op.c);
        gens.push_back(g);
    }
    return gens;
}

bool Partition::bijection_certified() const {
    if (BigInt(points.size()) != expected_points) return false;
    if (BigInt(orbits.size()) != expected_orbits) return false;
    std::vector<Matching> tags;
    tags.reserve(orbits.size());
    for (const OrbitInfo& o : orbits) {
        if (o.tag.spec.p != m + n || o.tag.size() != m) return false;
        tags.push_back(o.tag);
    }
    std::sort(tags.begin(), tags.end());
    return std::adjacent_find(tags.begin(), tags.end()) == tags.end();
}

Partition borel_partition(int m, int n, int q, const CensusOptions& opt) {
    check_dimensions(m, n, q);
    Partition part;
    part.m = m;
    part.n = n;
    part.q = q;
    part.expected_points = expected_point_count(m, n, q);
    part.expected_orbits = expected_orbit_count(m, n);
    if (part.expected_points > opt.budget && !opt.budget_override)
        throw BudgetExceeded("point set of size " + part.expected_points.str() +
                             " exceeds the enumeration budget of " + std::to_string(opt.budget));

    part.points = enumerate_points(m, n, q);
    int64_t count = part.total_points();
    std::unordered_map<PackedPoint, int32_t, PackedPointHash> index;
    index.reserve(static_cast<size_t>(count) * 2);
    for (int64_t i = 0; i < count; ++i) index.emplace(part.points[i], static_cast<int32_t>(i));

    std::vector<GenOp> ops = generator_ops(q, m + n);
    part.orbit_of.assign(count, -1);
    int32_t orbit_count = 0;
    std::vector<int32_t> stack;
    for (int64_t s = 0; s < count; ++s) {
        if (part.orbit_of[s] >= 0) continue;
        int32_t id = orbit_count++;
        part.orbit_of[s] = id;
        stack.push_back(static_cast<int32_t>(s));
        while (!stack.empty()) {
            int32_t u = stack.back();
            stack.pop_back();
            for (const GenOp& op : ops) {
                Buf b = unpack_buf(m, n, q, part.points[u]);
                apply_op(op, b);
                auto it = index.find(pack_buf(b));
                if (it == index.end())
                    throw std::logic_error("group step left the enumerated point set");
                if (part.orbit_of[it->second] < 0) {
                    part.orbit_of[it->second] = id;
                    stack.push_back(it->second);
                }
            }
        }
    }

    // relabel so ids rank the least member key of each orbit
    std::vector<PackedPoint> least(orbit_count);
    std::vector<bool> seen(orbit_count, false);
    for (int64_t i = 0; i < count; ++i) {
        int32_t o = part.orbit_of[i];
        if (!seen[o] || part.points[i] < least[o]) {
            least[o] = part.points[i];
            seen[o] = true;
        }
    }
    std::vector<int32_t> by_key(orbit_count);
    for (int32_t o = 0; o < orbit_count; ++o) by_key[o] = o;
    std::sort(by_key.begin(), by_key.end(),
              [&](int32_t x, int32_t y) { return least[x] < least[y]; });
    std::vector<int32_t> new_id(orbit_count);
    for (int32_t rank = 0; rank < orbit_count; ++rank) new_id[by_key[rank]] = rank;
    for (int64_t i = 0; i < count; ++i) part.orbit_of[i] = new_id[part.orbit_of[i]];

    part.orbits.assign(orbit_count, OrbitInfo{});
    for (int64_t i = 0; i < count; ++i) ++part.orbits[part.orbit_of[i]].size;

    if (opt.classify_orbits && count > 0) {
        // deterministic reservoir of members per orbit, then classify each
        int cap = std::max(1, opt.samples_per_orbit);
        std::mt19937_64 rng(opt.seed);
        std::vector<std::vector<int64_t>> sample(orbit_count);
        std::vector<int64_t> seen_members(orbit_count, 0);
        for (int64_t i = 0; i < count; ++i) {
            int32_t o = part.orbit_of[i];
            int64_t k = seen_members[o]++;
            if (k < cap) {
                sample[o].push_back(i);
            } else {
                int64_t j = static_cast<int64_t>(rng() % static_cast<uint64_t>(k + 1));
                if (j < cap) sample[o][j] = i;
            }
        }
        std::vector<std::optional<Matching>> tags(orbit_count);
        parallel_over(orbit_count, opt.threads, [&](int64_t lo, int64_t hi) {
            for (int64_t o = lo; o < hi; ++o) {
                for (int64_t i : sample[o]) {
                    Matching t = quiver::classify_point(unpack_point(m, n, q, part.points[i]));
                    if (!tags[o]) {
                        tags[o] = t;
                    } else if (!(*tags[o] == t)) {
                        throw std::logic_error(
                            "two members of one orbit classify to different matchings");
                    }
                }
            }
        });
        for (int32_t o = 0; o < orbit_count; ++o) part.orbits[o].tag = *tags[o];
    }
    return part;
}

Mat gram_matrix(FormKind kind, int q, int d) {
    fieldmat::require_supported_prime(q);
    if (kind == FormKind::Symplectic) {
        if (d % 2 != 0) throw std::invalid_argument("symplectic form needs an even dimension");
        if (q == 2) throw std::invalid_argument("symplectic census requires odd characteristic");
    }
    Mat g(q, d, d);
    for (int i = 0; i < d; ++i)
        g.set(i, d - 1 - i, kind == FormKind::Symplectic && i >= d / 2 ? -1 : 1);
    return g;
}

bool isotropy_fixed(FormKind kind, const VarietyPoint& pt) {
    Mat g = gram_matrix(kind, pt.q, pt.m + pt.n);
    Mat ag = pt.a.basis().mul(g);
    if (!ag.mul(pt.b.basis().transpose()).is_zero()) return false;
    return ag.mul(pt.a.basis().transpose()).rank() == pt.m;
}

void mark_fixed_points(Partition& part, FormKind kind, int threads) {
    gram_matrix(kind, part.q, part.m + part.n);  // validate applicability up front
    int32_t orbit_count = static_cast<int32_t>(part.orbits.size());
    int64_t count = part.total_points();
    int lanes = std::max(1, threads);
    std::vector<std::vector<uint8_t>> flags(lanes, std::vector<uint8_t>(orbit_count, 0));
    std::atomic<int> next_lane{0};
    parallel_over(count, lanes, [&](int64_t lo, int64_t hi) {
        int lane = next_lane++;
        for (int64_t i = lo; i < hi; ++i) {
            VarietyPoint pt = unpack_point(part.m, part.n, part.q, part.points[i]);
            if (isotropy_fixed(kind, pt)) flags[lane][part.orbit_of[i]] = 1;
        }
    });
    for (int32_t o = 0; o < orbit_count; ++o) {
        bool hit = false;
        for (int lane = 0; lane < lanes; ++lane) hit = hit || flags[lane][o] != 0;
        if (kind == FormKind::Symplectic)
            part.orbits[o].has_sp_point = hit;
        else
            part.orbits[o].has_so_point = hit;
    }
}

long long fixed_orbit_count(const Partition& part, FormKind kind) {
    long long total = 0;
    for (const OrbitInfo& o : part.orbits)
        total += (kind == FormKind::Symplectic ? o.has_sp_point : o.has_so_point) ? 1 : 0;
    return total;
}

}  // namespace orbits
}  // namespace corona
