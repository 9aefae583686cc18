// spinalg: antisymmetric (e) and symmetric (g) structure constants of
// su(2S+1) over the Hermitian basis, computed two ways: closed-form
// expressions in 3jm/6j symbols, and the defining traces
//   e_ijk = Tr([C_i,C_j] C_k) / (2ic),   g_ijk = Tr({C_i,C_j} C_k) / (2c).
// The closed forms short-circuit on the rank-parity selection rules
// (e vanishes for k+k'+k'' even, g for k+k'+k'' odd).
#pragma once

#include "matrix.hpp"
#include "spin_basis.hpp"
#include "wigner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <ostream>
#include <thread>
#include <vector>

namespace spinalg {

/// Canonically sorted index triple i <= j <= k.
struct TripleKey {
    int i = 0, j = 0, k = 0;
    friend constexpr auto operator<=>(const TripleKey&, const TripleKey&) = default;
};

namespace detail {

// Sorts three values, returning the permutation parity (+1 even, -1 odd).
template <typename T>
inline int sort3(T& a, T& b, T& c) {
    int parity = 1;
    if (b < a) { std::swap(a, b); parity = -parity; }
    if (c < b) { std::swap(b, c); parity = -parity; }
    if (b < a) { std::swap(a, b); parity = -parity; }
    return parity;
}

} // namespace detail

/// Sparse tables of nonzero e and g values for one spin, keyed by sorted
/// triples over the traceless indices 1..n. Lookups for arbitrary index
/// order apply the permutation parity for e and no sign for g.
class StructureTables {
public:
    StructureTables(HalfInt spin, double norm_constant)
        : spin_(spin), c_(norm_constant) {}

    HalfInt spin() const { return spin_; }
    double norm_constant() const { return c_; }

    double e(int i, int j, int k) const {
        if (i == j || j == k || i == k) return 0.0;
        const int parity = detail::sort3(i, j, k);
        auto it = e_.find({i, j, k});
        return it == e_.end() ? 0.0 : parity * it->second;
    }

    double g(int i, int j, int k) const {
        detail::sort3(i, j, k);
        auto it = g_.find({i, j, k});
        return it == g_.end() ? 0.0 : it->second;
    }

    const std::map<TripleKey, double>& e_table() const { return e_; }
    const std::map<TripleKey, double>& g_table() const { return g_; }

    void set_e(TripleKey key, double value) { e_.emplace(key, value); }
    void set_g(TripleKey key, double value) { g_.emplace(key, value); }

private:
    HalfInt spin_;
    double c_;
    std::map<TripleKey, double> e_;
    std::map<TripleKey, double> g_;
};

namespace detail {

// F(k,k',k'',S) = (-1)^{2S}/sqrt(3) * sqrt(S(S+1)(2S+1)(2k+1)(2k'+1)(2k''+1))
//                 * {k k' k''; S S S}, kept exact.
inline SqrtRational coefficient_F_exact(int k, int kp, int kpp, HalfInt spin) {
    const int two_s = spin.twice();
    for (int rank : {k, kp, kpp})
        if (rank < 1 || rank > two_s)
            throw std::domain_error("coefficient_F: rank " + std::to_string(rank) +
                                    " out of range 1..2S for S=" + spin.str());
    // S(S+1)(2S+1) = t(t+2)(t+1)/4 with t = 2S
    BigRational radicand(BigInt(two_s) * (two_s + 2) * (two_s + 1) *
                             (2 * k + 1) * (2 * kp + 1) * (2 * kpp + 1),
                         BigInt(4) * 3);
    SqrtRational f = SqrtRational::sqrt_of(radicand) *
                     six_j(k, kp, kpp, spin, spin, spin);
    return odd(two_s) ? -f : f;
}

inline SqrtRational w3_ranks(int k, int kp, int kpp, int a, int b, int c) {
    return three_jm(k, kp, kpp, HalfInt::from_twice(2 * a), HalfInt::from_twice(2 * b),
                    HalfInt::from_twice(2 * c));
}

inline double sgn_pow(int q) { return odd(q) ? -1.0 : 1.0; }

enum class Pattern { XXY, YYY, XYZ, XXX, XYY, XXZ_YYZ, ZZZ, Vanishes };

inline Pattern classify_e(Kind a, Kind b, Kind c) {
    if (a == Kind::X && b == Kind::X && c == Kind::Y) return Pattern::XXY;
    if (a == Kind::Y && b == Kind::Y && c == Kind::Y) return Pattern::YYY;
    if (a == Kind::X && b == Kind::Y && c == Kind::Z) return Pattern::XYZ;
    return Pattern::Vanishes;
}

inline Pattern classify_g(Kind a, Kind b, Kind c) {
    if (a == Kind::X && b == Kind::X && c == Kind::X) return Pattern::XXX;
    if (a == Kind::X && b == Kind::Y && c == Kind::Y) return Pattern::XYY;
    if (a == Kind::X && b == Kind::X && c == Kind::Z) return Pattern::XXZ_YYZ;
    if (a == Kind::Y && b == Kind::Y && c == Kind::Z) return Pattern::XXZ_YYZ;
    if (a == Kind::Z && b == Kind::Z && c == Kind::Z) return Pattern::ZZZ;
    return Pattern::Vanishes;
}

struct Canonical {
    BasisLabel a, b, c;
    int parity;
};

inline Canonical canonicalize(HalfInt spin, BasisLabel a, BasisLabel b, BasisLabel c) {
    for (const BasisLabel& l : {a, b, c}) {
        if (l.kind == Kind::Unit)
            throw std::domain_error("structure constants are defined on the traceless set");
        if (!l.valid_for(spin))
            throw std::domain_error("label " + l.str() + " invalid for S=" + spin.str());
    }
    Canonical out{a, b, c, 1};
    out.parity = sort3(out.a, out.b, out.c);
    return out;
}

} // namespace detail

inline double coefficient_F(int k, int kp, int kpp, HalfInt spin) {
    return detail::coefficient_F_exact(k, kp, kpp, spin).to_double();
}

/// Closed-form antisymmetric constant for three basis labels, any order.
inline double e_analytic(HalfInt spin, BasisLabel li, BasisLabel lj, BasisLabel lk) {
    using namespace detail;
    const Canonical t = canonicalize(spin, li, lj, lk);
    if (t.a == t.b || t.b == t.c) return 0.0;
    const int K = t.a.k + t.b.k + t.c.k;
    if (!odd(K)) return 0.0;
    const Pattern pattern = classify_e(t.a.kind, t.b.kind, t.c.kind);
    if (pattern == Pattern::Vanishes) return 0.0;

    const int k = t.a.k, kp = t.b.k, kpp = t.c.k;
    const int q = t.a.q, qp = t.b.q, qpp = t.c.q;
    const SqrtRational F = coefficient_F_exact(k, kp, kpp, spin);
    const SqrtRational Fh = F * SqrtRational::sqrt_of(BigRational(1, 2)); // F/sqrt(2)
    double v = 0.0;
    switch (pattern) {
        case Pattern::XXY:
            v -= sgn_pow(q) * (Fh * w3_ranks(k, kp, kpp, q, -qp, -qpp)).to_double();
            v -= sgn_pow(qp) * (Fh * w3_ranks(k, kp, kpp, -q, qp, -qpp)).to_double();
            v -= sgn_pow(qpp) * (Fh * w3_ranks(k, kp, kpp, q, qp, -qpp)).to_double();
            break;
        case Pattern::YYY:
            v += sgn_pow(q) * (Fh * w3_ranks(k, kp, kpp, -q, qp, qpp)).to_double();
            v += sgn_pow(qp) * (Fh * w3_ranks(k, kp, kpp, q, -qp, qpp)).to_double();
            v += sgn_pow(qpp) * (Fh * w3_ranks(k, kp, kpp, q, qp, -qpp)).to_double();
            break;
        case Pattern::XYZ:
            v -= sgn_pow(q) * (F * w3_ranks(k, kp, kpp, q, -qp, 0)).to_double();
            break;
        default:
            return 0.0;
    }
    return t.parity * v;
}

/// Closed-form symmetric constant for three basis labels, any order.
inline double g_analytic(HalfInt spin, BasisLabel li, BasisLabel lj, BasisLabel lk) {
    using namespace detail;
    const Canonical t = canonicalize(spin, li, lj, lk);
    const int K = t.a.k + t.b.k + t.c.k;
    if (odd(K)) return 0.0;
    const Pattern pattern = classify_g(t.a.kind, t.b.kind, t.c.kind);
    if (pattern == Pattern::Vanishes) return 0.0;

    const int k = t.a.k, kp = t.b.k, kpp = t.c.k;
    const int q = t.a.q, qp = t.b.q, qpp = t.c.q;
    const SqrtRational F = coefficient_F_exact(k, kp, kpp, spin);
    const SqrtRational Fh = F * SqrtRational::sqrt_of(BigRational(1, 2));
    double v = 0.0;
    switch (pattern) {
        case Pattern::XXX:
            v += sgn_pow(q) * (Fh * w3_ranks(k, kp, kpp, q, -qp, -qpp)).to_double();
            v += sgn_pow(qp) * (Fh * w3_ranks(k, kp, kpp, -q, qp, -qpp)).to_double();
            v += sgn_pow(qpp) * (Fh * w3_ranks(k, kp, kpp, q, qp, -qpp)).to_double();
            break;
        case Pattern::XYY:
            v -= sgn_pow(q) * (Fh * w3_ranks(k, kp, kpp, q, -qp, -qpp)).to_double();
            v += sgn_pow(qp) * (Fh * w3_ranks(k, kp, kpp, -q, qp, -qpp)).to_double();
            v += sgn_pow(qpp) * (Fh * w3_ranks(k, kp, kpp, -q, -qp, qpp)).to_double();
            break;
        case Pattern::XXZ_YYZ:
            v += sgn_pow(q) * (F * w3_ranks(k, kp, kpp, q, -qp, 0)).to_double();
            break;
        case Pattern::ZZZ:
            // (-1)^q with q = 0 for Z labels
            v += (F * w3_ranks(k, kp, kpp, 0, 0, 0)).to_double();
            break;
        default:
            return 0.0;
    }
    return v;
}

/// e from the defining trace. The commutator trace must be purely imaginary
/// for Hermitian inputs; a real residue above 1e-12 throws.
inline double e_trace(const ComplexMatrix& ci, const ComplexMatrix& cj,
                      const ComplexMatrix& ck, double c) {
    if (ci.rows() != cj.rows() || cj.rows() != ck.rows())
        throw std::invalid_argument("e_trace: dimension mismatch");
    const std::complex<double> tr = (commutator(ci, cj) * ck).trace();
    const double value = tr.imag() / (2.0 * c);
    if (std::abs(tr.real() / (2.0 * c)) > 1e-12)
        throw std::runtime_error("e_trace: non-imaginary commutator trace");
    return value;
}

/// g from the defining trace; the anticommutator trace must be real.
inline double g_trace(const ComplexMatrix& ci, const ComplexMatrix& cj,
                      const ComplexMatrix& ck, double c) {
    if (ci.rows() != cj.rows() || cj.rows() != ck.rows())
        throw std::invalid_argument("g_trace: dimension mismatch");
    const std::complex<double> tr = (anticommutator(ci, cj) * ck).trace();
    const double value = tr.real() / (2.0 * c);
    if (std::abs(tr.imag() / (2.0 * c)) > 1e-12)
        throw std::runtime_error("g_trace: non-real anticommutator trace");
    return value;
}

/// Closed form of Tr(T_{k,q} T_{k',q'} T_{k'',q''}):
/// (-1)^{2S+k+k'+k''} (2S+1)^{3/2} sqrt((2k+1)(2k'+1)(2k''+1))
/// * {k k' k''; S S S} * (k k' k''; q q' q'').
inline std::complex<double> triple_trace(HalfInt spin, std::pair<int, int> kq1,
                                         std::pair<int, int> kq2, std::pair<int, int> kq3) {
    const auto [k1, q1] = kq1;
    const auto [k2, q2] = kq2;
    const auto [k3, q3] = kq3;
    const int d = spin.twice() + 1;
    SqrtRational v = SqrtRational::sqrt_of(BigRational(BigInt(d) * d * d *
                                                       (2 * k1 + 1) * (2 * k2 + 1) * (2 * k3 + 1)));
    v *= six_j(k1, k2, k3, spin, spin, spin);
    v *= detail::w3_ranks(k1, k2, k3, q1, q2, q3);
    double value = v.to_double();
    if (detail::odd(spin.twice() + k1 + k2 + k3)) value = -value;
    return {value, 0.0};
}

enum class Method { Analytic, Trace };

/// Sweeps all sorted triples over the traceless indices and stores values
/// with |v| > 1e-14. Both methods produce entrywise-equal tables; triples are
/// distributed over `threads` workers, the result is deterministic.
inline StructureTables build_tables(const BasisSet& basis, Method method, int threads = 1) {
    const int n = basis.traceless_count();
    const HalfInt spin = basis.spin();
    const double c = basis.norm_constant();
    constexpr double kSparseEps = 1e-14;

    std::vector<TripleKey> triples;
    triples.reserve(static_cast<size_t>(n) * n * n / 6 + n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) triples.push_back({i, j, k});

    // Trace method: precompute commutators/anticommutators per sorted pair.
    std::vector<ComplexMatrix> comm, anti;
    auto pair_index = [n](int i, int j) { // 1 <= i <= j <= n
        return (i - 1) * (n + 1) - (i - 1) * i / 2 + (j - i);
    };
    if (method == Method::Trace) {
        comm.resize(static_cast<size_t>(n) * (n + 1) / 2);
        anti.resize(comm.size());
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const ComplexMatrix p = basis.matrix(i) * basis.matrix(j);
                const ComplexMatrix q = basis.matrix(j) * basis.matrix(i);
                comm[pair_index(i, j)] = p - q;
                anti[pair_index(i, j)] = p + q;
            }
    }

    struct Entry {
        TripleKey key;
        double e, g;
    };
    const auto evaluate = [&](TripleKey t) -> Entry {
        Entry out{t, 0.0, 0.0};
        if (method == Method::Analytic) {
            out.e = e_analytic(spin, basis.label(t.i), basis.label(t.j), basis.label(t.k));
            out.g = g_analytic(spin, basis.label(t.i), basis.label(t.j), basis.label(t.k));
        } else {
            const ComplexMatrix& ck = basis.matrix(t.k);
            const auto& cm = comm[pair_index(t.i, t.j)];
            const auto& am = anti[pair_index(t.i, t.j)];
            out.e = (cm * ck).trace().imag() / (2.0 * c);
            out.g = (am * ck).trace().real() / (2.0 * c);
        }
        return out;
    };

    std::vector<Entry> entries(triples.size());
    threads = std::max(1, threads);
    if (threads == 1) {
        for (size_t t = 0; t < triples.size(); ++t) entries[t] = evaluate(triples[t]);
    } else {
        std::vector<std::thread> workers;
        std::atomic<size_t> next{0};
        for (int w = 0; w < threads; ++w)
            workers.emplace_back([&] {
                constexpr size_t kChunk = 256;
                for (;;) {
                    const size_t begin = next.fetch_add(kChunk);
                    if (begin >= triples.size()) return;
                    const size_t end = std::min(begin + kChunk, triples.size());
                    for (size_t t = begin; t < end; ++t) entries[t] = evaluate(triples[t]);
                }
            });
        for (auto& w : workers) w.join();
    }

    StructureTables tables(spin, c);
    for (const Entry& en : entries) {
        if (std::abs(en.e) > kSparseEps) tables.set_e(en.key, en.e);
        if (std::abs(en.g) > kSparseEps) tables.set_g(en.key, en.g);
    }
    return tables;
}

/// Assembles (c/d) E delta_ij + sum_k (g_ijk + i e_ijk) C_k, the right-hand
/// side of the algebra closure relation, for comparison with C_i C_j.
inline ComplexMatrix reconstruct_product(int i, int j, const StructureTables& tables,
                                         const BasisSet& basis) {
    const int n = basis.traceless_count();
    const int d = basis.dim();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    if (i == j) out = (tables.norm_constant() / d) * ComplexMatrix::Identity(d, d);
    for (int k = 1; k <= n; ++k) {
        const std::complex<double> z(tables.g(i, j, k), tables.e(i, j, k));
        if (z != std::complex<double>(0.0, 0.0)) out += z * basis.matrix(k);
    }
    return out;
}

/// CSV rows `type,i,j,k,label_i,label_j,label_k,value`: all e rows then all
/// g rows, each block in lexicographic (i,j,k) order, values with 17
/// significant digits.
inline void write_structure_csv(std::ostream& os, const StructureTables& tables,
                                const BasisSet& basis) {
    os << "type,i,j,k,label_i,label_j,label_k,value\n";
    const auto rows = [&](const std::map<TripleKey, double>& table, const char* type) {
        for (const auto& [key, value] : table) {
            os << type << ',' << key.i << ',' << key.j << ',' << key.k << ','
               << basis.label(key.i).str() << ',' << basis.label(key.j).str() << ','
               << basis.label(key.k).str() << ',' << format_double(value) << '\n';
        }
    };
    rows(tables.e_table(), "e");
    rows(tables.g_table(), "g");
}

} // namespace spinalg
