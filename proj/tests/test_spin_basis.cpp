#include <spinalg/spin_basis.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <complex>
#include <vector>

using namespace spinalg;
using std::complex;

namespace {

constexpr complex<double> I{0.0, 1.0};

/// Spin matrices from the standard ladder construction, m descending.
struct SpinOps {
    ComplexMatrix sx, sy, sz;
    explicit SpinOps(HalfInt spin) {
        const int t = spin.twice();
        const int d = t + 1;
        ComplexMatrix sp = ComplexMatrix::Zero(d, d); // raising
        sz = ComplexMatrix::Zero(d, d);
        const double s = t / 2.0;
        for (int r = 0; r < d; ++r) {
            const double m = s - r;
            sz(r, r) = m;
            if (r + 1 < d) sp(r, r + 1) = std::sqrt(s * (s + 1) - (m - 1) * m);
        }
        const ComplexMatrix sm = sp.adjoint();
        sx = 0.5 * (sp + sm);
        sy = -0.5 * I * (sp - sm);
    }
};

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

const std::vector<HalfInt> kSpins = {HalfInt::from_twice(1), HalfInt(1), HalfInt::from_twice(3),
                                     HalfInt(2), HalfInt::from_twice(5), HalfInt(3)};

/// The published spin-1 operator table C_0..C_8.
std::array<ComplexMatrix, 9> spin1_reference() {
    std::array<ComplexMatrix, 9> c;
    for (auto& m : c) m = ComplexMatrix::Zero(3, 3);
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
    c[0] = std::sqrt(2.0 / 3.0) * ComplexMatrix::Identity(3, 3);
    c[1] << 0, 1 / r2, 0, 1 / r2, 0, 1 / r2, 0, 1 / r2, 0;
    c[2] << 0, -I / r2, 0, I / r2, 0, -I / r2, 0, I / r2, 0;
    c[3] << 1, 0, 0, 0, 0, 0, 0, 0, -1;
    c[4] << 0, 0, -I, 0, 0, 0, I, 0, 0;
    c[5] << 0, -I / r2, 0, I / r2, 0, I / r2, 0, -I / r2, 0;
    c[6] << 1 / r3, 0, 0, 0, -2 / r3, 0, 0, 0, 1 / r3;
    c[7] << 0, 1 / r2, 0, 1 / r2, 0, -1 / r2, 0, -1 / r2, 0;
    c[8] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
    return c;
}

/// Gell-Mann matrices lambda_1..lambda_8.
std::array<ComplexMatrix, 9> gell_mann() {
    std::array<ComplexMatrix, 9> l;
    for (auto& m : l) m = ComplexMatrix::Zero(3, 3);
    l[1] << 0, 1, 0, 1, 0, 0, 0, 0, 0;
    l[2] << 0, -I, 0, I, 0, 0, 0, 0, 0;
    l[3] << 1, 0, 0, 0, -1, 0, 0, 0, 0;
    l[4] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
    l[5] << 0, 0, -I, 0, 0, 0, I, 0, 0;
    l[6] << 0, 0, 0, 0, 0, 1, 0, 1, 0;
    l[7] << 0, 0, 0, 0, 0, -I, 0, I, 0;
    l[8] = ComplexMatrix::Zero(3, 3);
    l[8] << 1, 0, 0, 0, 1, 0, 0, 0, -2;
    l[8] /= std::sqrt(3.0);
    return l;
}

} // namespace

TEST_CASE("tensor_operator basics") {
    const HalfInt half = HalfInt::from_twice(1);
    CHECK(max_abs(tensor_operator(half, 0, 0) - ComplexMatrix::Identity(2, 2)) < 1e-15);
    CHECK(max_abs(tensor_operator(HalfInt(1), 0, 0) - ComplexMatrix::Identity(3, 3)) < 1e-15);

    ComplexMatrix t10 = tensor_operator(half, 1, 0);
    ComplexMatrix expected(2, 2);
    expected << 1, 0, 0, -1;
    CHECK(max_abs(t10 - expected) < 1e-15);

    CHECK_THROWS_AS(tensor_operator(half, 2, 0), std::domain_error);
    CHECK_THROWS_AS(tensor_operator(HalfInt(1), 1, 2), std::domain_error);
}

TEST_CASE("tensor_operator adjoint relation (T_kq)+ = (-1)^q T_k,-q") {
    for (HalfInt spin : {HalfInt::from_twice(1), HalfInt(1), HalfInt::from_twice(3)})
        for (int k = 0; k <= spin.twice(); ++k)
            for (int q = -k; q <= k; ++q) {
                const ComplexMatrix lhs = tensor_operator(spin, k, q).adjoint();
                ComplexMatrix rhs = tensor_operator(spin, k, -q);
                if (q % 2 != 0) rhs = -rhs;
                CHECK(max_abs(lhs - rhs) < 1e-12);
            }
}

TEST_CASE("tensor_operator orthogonality Tr T_kq T_k'q' = (-1)^q (2S+1) d_kk' d_q,-q'") {
    for (HalfInt spin : kSpins) {
        const int two_s = spin.twice();
        for (int k = 0; k <= two_s; ++k)
            for (int q = -k; q <= k; ++q) {
                const ComplexMatrix tkq = tensor_operator(spin, k, q);
                for (int kp = 0; kp <= two_s; ++kp)
                    for (int qp = -kp; qp <= kp; ++qp) {
                        const complex<double> tr =
                            (tkq * tensor_operator(spin, kp, qp)).trace();
                        double expected = 0.0;
                        if (k == kp && q == -qp) expected = (q % 2 != 0) ? -(two_s + 1) : two_s + 1;
                        CHECK(std::abs(tr - complex<double>(expected)) < 1e-12);
                    }
            }
    }
}

TEST_CASE("spin-1/2 basis equals the Pauli spin operators exactly") {
    const BasisSet basis(HalfInt::from_twice(1));
    REQUIRE(basis.size() == 4);
    ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 0.5, 0.5, 0;
    sy << 0, -0.5 * I, 0.5 * I, 0;
    sz << 0.5, 0, 0, -0.5;
    CHECK(max_abs(basis.matrix(0) - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);
    CHECK(max_abs(basis.matrix(1) - sx) < 1e-15);
    CHECK(max_abs(basis.matrix(2) - sy) < 1e-15);
    CHECK(max_abs(basis.matrix(3) - sz) < 1e-15);
}

TEST_CASE("BasisSet rejects invalid spins") {
    CHECK_THROWS_AS(BasisSet(HalfInt(0)), std::domain_error);
    CHECK_THROWS_AS(BasisSet(HalfInt(-1)), std::domain_error);
}

TEST_CASE("canonical order and label lookups") {
    const BasisSet basis(HalfInt(1));
    REQUIRE(basis.size() == 9);
    CHECK(basis.label(0) == BasisLabel{Kind::Unit, 0, 0});
    CHECK(basis.label(1) == BasisLabel{Kind::X, 1, 1});
    CHECK(basis.label(2) == BasisLabel{Kind::Y, 1, 1});
    CHECK(basis.label(3) == BasisLabel{Kind::Z, 1, 0});
    CHECK(basis.label(4) == BasisLabel{Kind::X, 2, 1});
    CHECK(basis.label(5) == BasisLabel{Kind::X, 2, 2});
    CHECK(basis.label(6) == BasisLabel{Kind::Y, 2, 1});
    CHECK(basis.label(7) == BasisLabel{Kind::Y, 2, 2});
    CHECK(basis.label(8) == BasisLabel{Kind::Z, 2, 0});
    CHECK(basis.index_of({Kind::X, 1, 1}) == 1);
    CHECK(basis.index_of({Kind::Unit, 0, 0}) == 0);
    CHECK_THROWS_AS(basis.index_of({Kind::X, 2, 3}), std::out_of_range);
    for (int i = 0; i < basis.size(); ++i) CHECK(basis.index_of(basis.label(i)) == i);
}

TEST_CASE("labels render and parse") {
    CHECK(BasisLabel{Kind::X, 2, 1}.str() == "X:2:1");
    CHECK(BasisLabel{Kind::Z, 2, 0}.str() == "Z:2");
    CHECK(BasisLabel{Kind::Unit, 0, 0}.str() == "Unit");
    CHECK(BasisLabel::parse("Y:3:2") == BasisLabel{Kind::Y, 3, 2});
    CHECK(BasisLabel::parse("Z:1") == BasisLabel{Kind::Z, 1, 0});
    CHECK(BasisLabel::parse("Unit") == BasisLabel{Kind::Unit, 0, 0});
    for (const char* bad : {"", "W:1:1", "X:1", "Z:1:1", "X:a:1", "unit"})
        CHECK_THROWS_AS(BasisLabel::parse(bad), std::invalid_argument);
}

TEST_CASE("spin-1 basis matches the published C_0..C_8 table") {
    const BasisSet basis(HalfInt(1));
    const auto ref = spin1_reference();
    const auto perm = spin1_compat_permutation(HalfInt(1));
    for (int i = 0; i < 9; ++i) CHECK(max_abs(basis.matrix(i) - ref[perm[i]]) < 1e-12);
    CHECK_THROWS_AS(spin1_compat_permutation(HalfInt(2)), std::domain_error);
    CHECK_THROWS_AS(spin1_compat_permutation(HalfInt::from_twice(1)), std::domain_error);

    // named mappings: the rank-2 y element with q=2 is C_4, with q=1 C_5,
    // z is C_6, x with q=1 is C_7, x with q=2 is C_8
    CHECK(perm[basis.index_of({Kind::Y, 2, 2})] == 4);
    CHECK(perm[basis.index_of({Kind::Y, 2, 1})] == 5);
    CHECK(perm[basis.index_of({Kind::Z, 2, 0})] == 6);
    CHECK(perm[basis.index_of({Kind::X, 2, 1})] == 7);
    CHECK(perm[basis.index_of({Kind::X, 2, 2})] == 8);
    CHECK(perm[basis.index_of({Kind::Unit, 0, 0})] == 0);
}

TEST_CASE("spin-1 basis relates to the Gell-Mann matrices as published") {
    const BasisSet basis(HalfInt(1));
    const auto l = gell_mann();
    const auto perm = spin1_compat_permutation(HalfInt(1));
    std::array<ComplexMatrix, 9> c; // appendix numbering
    for (int i = 0; i < 9; ++i) c[perm[i]] = basis.matrix(i);
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
    CHECK(max_abs(c[1] - (l[1] + l[6]) / r2) < 1e-12);
    CHECK(max_abs(c[2] - (l[2] + l[7]) / r2) < 1e-12);
    CHECK(max_abs(c[3] - (0.5 * l[3] + 0.5 * r3 * l[8])) < 1e-12);
    CHECK(max_abs(c[4] - l[5]) < 1e-12);
    CHECK(max_abs(c[5] - (l[2] - l[7]) / r2) < 1e-12);
    CHECK(max_abs(c[6] - (0.5 * r3 * l[3] - 0.5 * l[8])) < 1e-12);
    CHECK(max_abs(c[7] - (l[1] - l[6]) / r2) < 1e-12);
    CHECK(max_abs(c[8] - l[4]) < 1e-12);
}

TEST_CASE("basis elements are Hermitian, traceless and correctly counted") {
    for (HalfInt spin : kSpins) {
        const BasisSet basis(spin);
        const int d = spin.twice() + 1;
        CHECK(basis.dim() == d);
        CHECK(basis.size() == d * d);
        CHECK(basis.traceless_count() == d * d - 1);
        for (int i = 0; i < basis.size(); ++i) {
            CHECK(is_hermitian(basis.matrix(i), 1e-12));
            if (i >= 1) CHECK(std::abs(basis.matrix(i).trace()) < 1e-12);
        }
    }
}

TEST_CASE("Gram matrix is c times the identity") {
    for (HalfInt spin : kSpins) {
        const BasisSet basis(spin);
        const double c = basis.norm_constant();
        for (int r = 0; r < basis.size(); ++r)
            for (int s = r; s < basis.size(); ++s) {
                const complex<double> tr = (basis.matrix(r) * basis.matrix(s)).trace();
                const double expected = r == s ? c : 0.0;
                CHECK(std::abs(tr - complex<double>(expected)) < 1e-12);
            }
    }
    CHECK(BasisSet(HalfInt(1)).norm_constant() == 2.0); // Tr C_a C_b = 2 delta_ab
}

TEST_CASE("Z elements are diagonal and commute exactly") {
    for (HalfInt spin : kSpins) {
        const BasisSet basis(spin);
        std::vector<int> z_indices;
        for (int i = 0; i < basis.size(); ++i)
            if (basis.label(i).kind == Kind::Z) z_indices.push_back(i);
        CHECK(static_cast<int>(z_indices.size()) == spin.twice());
        for (int zi : z_indices) {
            const ComplexMatrix& m = basis.matrix(zi);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c)
                    if (r != c) CHECK(m(r, c) == complex<double>(0.0, 0.0));
        }
        for (int a : z_indices)
            for (int b : z_indices)
                CHECK(max_abs(commutator(basis.matrix(a), basis.matrix(b))) == 0.0);
    }
}

TEST_CASE("indices 1..3 are the spin operators for every spin") {
    for (HalfInt spin : kSpins) {
        const BasisSet basis(spin);
        const SpinOps ops(spin);
        CHECK(max_abs(basis.matrix(1) - ops.sx) < 1e-12);
        CHECK(max_abs(basis.matrix(2) - ops.sy) < 1e-12);
        CHECK(max_abs(basis.matrix(3) - ops.sz) < 1e-12);
    }
}
