// spinalg: irreducible tensor operators and the Hermitian operator basis of
// su(2S+1) built from them (the Allard-Hard construction used in the NMR
// product-operator literature). Index 0 is the scaled unit element; indices
// 1..(2S+1)^2-1 are traceless, with 1,2,3 equal to Sx, Sy, Sz for every spin.
#pragma once

#include "half_int.hpp"
#include "matrix.hpp"
#include "wigner.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace spinalg {

enum class Kind { Unit, X, Y, Z };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Unit: return "Unit";
        case Kind::X: return "X";
        case Kind::Y: return "Y";
        case Kind::Z: return "Z";
    }
    return "?";
}

/// Label of one basis element: Unit, X:k:q, Y:k:q or Z:k.
/// X/Y require 1 <= q <= k; Z and Unit have q = 0.
struct BasisLabel {
    Kind kind = Kind::Unit;
    int k = 0;
    int q = 0;

    friend constexpr auto operator<=>(const BasisLabel&, const BasisLabel&) = default;

    bool valid_for(HalfInt spin) const {
        const int two_s = spin.twice();
        switch (kind) {
            case Kind::Unit: return k == 0 && q == 0;
            case Kind::X:
            case Kind::Y: return 1 <= q && q <= k && k <= two_s;
            case Kind::Z: return 1 <= k && k <= two_s && q == 0;
        }
        return false;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Unit: return "Unit";
            case Kind::X: return "X:" + std::to_string(k) + ":" + std::to_string(q);
            case Kind::Y: return "Y:" + std::to_string(k) + ":" + std::to_string(q);
            case Kind::Z: return "Z:" + std::to_string(k);
        }
        return "?";
    }

    static BasisLabel parse(std::string_view text);
};

inline BasisLabel BasisLabel::parse(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("BasisLabel: cannot parse \"" + std::string(text) + "\"");
    };
    if (text == "Unit") return {};
    if (text.size() < 3 || text[1] != ':') fail();
    Kind kind;
    switch (text[0]) {
        case 'X': kind = Kind::X; break;
        case 'Y': kind = Kind::Y; break;
        case 'Z': kind = Kind::Z; break;
        default: fail();
    }
    const auto number = [&](std::string_view d) -> int {
        if (d.empty() || d.size() > 4) fail();
        int v = 0;
        for (char c : d) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return v;
    };
    std::string_view rest = text.substr(2);
    auto colon = rest.find(':');
    if (kind == Kind::Z) {
        if (colon != std::string_view::npos) fail();
        return {kind, number(rest), 0};
    }
    if (colon == std::string_view::npos) fail();
    return {kind, number(rest.substr(0, colon)), number(rest.substr(colon + 1))};
}

/// Irreducible tensor operator T_{k,q} for spin S, with rows and columns
/// indexed by m descending from S to -S. Entries are
/// sqrt((2S+1)(2k+1)) (-1)^(S-m) (S k S; -m q m') and T_{0,0} is the identity.
inline ComplexMatrix tensor_operator(HalfInt spin, int k, int q) {
    const int two_s = spin.twice();
    if (two_s < 0 || k < 0 || k > two_s || std::abs(q) > k)
        throw std::domain_error("tensor_operator: rank k=" + std::to_string(k) +
                                ", q=" + std::to_string(q) + " out of range for S=" + spin.str());
    const int dim = two_s + 1;
    const SqrtRational scale = SqrtRational::sqrt_of(BigRational(dim * (2 * k + 1)));
    ComplexMatrix t = ComplexMatrix::Zero(dim, dim);
    for (int row = 0; row < dim; ++row) {
        const HalfInt m = HalfInt::from_twice(two_s - 2 * row);
        const int col = row + q; // m' = m - q
        if (col < 0 || col >= dim) continue;
        const HalfInt mp = HalfInt::from_twice(two_s - 2 * col);
        SqrtRational w = three_jm(spin, k, spin, -m, q, mp);
        if (w.is_zero()) continue;
        w *= scale;
        double v = w.to_double();
        if (detail::odd((spin - m).to_int())) v = -v;
        t(row, col) = v;
    }
    return t;
}

/// The complete Hermitian basis of (2S+1)x(2S+1) matrices in canonical order:
/// Unit first, then for each rank k = 1..2S the X elements q = 1..k, the
/// Y elements q = 1..k, and the Z element. Immutable after construction.
class BasisSet {
public:
    explicit BasisSet(HalfInt spin) : spin_(spin) {
        if (spin.twice() < 1)
            throw std::domain_error("BasisSet: spin must be a positive half-integer, got " + spin.str());
        const int two_s = spin.twice();
        const int dim = two_s + 1;
        // sqrt(S(S+1)/3) and sqrt(S(S+1)/6); S(S+1) = t(t+2)/4 with t = 2S
        const BigRational s_sp1(two_s * (two_s + 2), 4);
        const SqrtRational c3 = SqrtRational::sqrt_of(s_sp1 / 3);
        const SqrtRational c6 = SqrtRational::sqrt_of(s_sp1 / 6);

        // Exact T_{k,q} entry at row r, column r + q; every basis entry is a
        // single such product, rounded to double exactly once. The two terms
        // of an X or Y element sit on different diagonals, so they never mix.
        const auto t_entry = [&](int k, int q, int r) -> SqrtRational {
            const HalfInt m = HalfInt::from_twice(two_s - 2 * r);
            const HalfInt mp = HalfInt::from_twice(two_s - 2 * (r + q));
            SqrtRational w = three_jm(spin, k, spin, -m, q, mp);
            if (w.is_zero()) return w;
            w *= SqrtRational::sqrt_of(BigRational(dim * (2 * k + 1)));
            return detail::odd((spin - m).to_int()) ? -w : w;
        };

        labels_.push_back({Kind::Unit, 0, 0});
        matrices_.push_back(c3.to_double() * ComplexMatrix::Identity(dim, dim));
        for (int k = 1; k <= two_s; ++k) {
            for (int q = 1; q <= k; ++q) {
                ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
                for (int r = 0; r < dim; ++r) {
                    if (r - q >= 0) m(r, r - q) = (c6 * t_entry(k, -q, r)).to_double();
                    if (r + q < dim) {
                        SqrtRational v = c6 * t_entry(k, q, r);
                        m(r, r + q) = detail::odd(q) ? -v.to_double() : v.to_double();
                    }
                }
                labels_.push_back({Kind::X, k, q});
                matrices_.push_back(std::move(m));
            }
            for (int q = 1; q <= k; ++q) {
                ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
                for (int r = 0; r < dim; ++r) {
                    if (r - q >= 0)
                        m(r, r - q) = std::complex<double>(0, (c6 * t_entry(k, -q, r)).to_double());
                    if (r + q < dim) {
                        SqrtRational v = c6 * t_entry(k, q, r);
                        m(r, r + q) =
                            std::complex<double>(0, detail::odd(q) ? v.to_double() : -v.to_double());
                    }
                }
                labels_.push_back({Kind::Y, k, q});
                matrices_.push_back(std::move(m));
            }
            ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
            for (int r = 0; r < dim; ++r) z(r, r) = (c3 * t_entry(k, 0, r)).to_double();
            labels_.push_back({Kind::Z, k, 0});
            matrices_.push_back(std::move(z));
        }
        for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
            index_[labels_[i]] = i;
    }

    HalfInt spin() const { return spin_; }
    int dim() const { return spin_.twice() + 1; }
    /// Total element count (2S+1)^2, Unit included.
    int size() const { return static_cast<int>(labels_.size()); }
    /// Number of traceless elements n = (2S+1)^2 - 1.
    int traceless_count() const { return size() - 1; }

    /// Tr(C_r C_s) = c delta_rs on the traceless block; c = S(S+1)(2S+1)/3.
    double norm_constant() const {
        const int t = spin_.twice();
        return t * (t + 2) * (t + 1) / 12.0;
    }

    const ComplexMatrix& matrix(int index) const { return matrices_.at(index); }
    const BasisLabel& label(int index) const { return labels_.at(index); }
    const std::vector<BasisLabel>& labels() const { return labels_; }

    int index_of(const BasisLabel& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw std::out_of_range("BasisSet: no element " + label.str() + " for S=" + spin_.str());
        return it->second;
    }

private:
    HalfInt spin_;
    std::vector<BasisLabel> labels_;
    std::vector<ComplexMatrix> matrices_;
    std::map<BasisLabel, int> index_;
};

inline BasisSet hermitian_basis(HalfInt spin) { return BasisSet(spin); }

/// Index map from the canonical spin-1 order onto the historical qutrit
/// enumeration C_0..C_8 used in published operator tables. In that numbering
/// the rank-2 q=1 y element is C_5 and the rank-2 q=1 x element is C_7 (the
/// printed tables label them ambiguously; this map follows the matrices).
inline std::array<int, 9> spin1_compat_permutation(HalfInt spin) {
    if (spin != HalfInt(1))
        throw std::domain_error("spin1_compat_permutation: only defined for S=1, got " + spin.str());
    // canonical: Unit, X11, Y11, Z1, X21, X22, Y21, Y22, Z2
    return {0, 1, 2, 3, 7, 8, 5, 4, 6};
}

} // namespace spinalg
