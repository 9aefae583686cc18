// Exact Wigner symbols and the two routes to a structure constant.
#include <spinalg/spinalg.hpp>

#include <iostream>

using namespace spinalg;

int main() {
    const auto w3 = three_jm(1, 1, 1, 1, -1, 0);
    const auto w6 = six_j(1, 1, 1, 1, 1, 1);
    std::cout << "(1 1 1; 1 -1 0)   = " << w3.str() << " = " << format_double(w3.to_double())
              << "\n";
    std::cout << "{1 1 1; 1 1 1}    = " << w6.str() << " = " << format_double(w6.to_double())
              << "\n";

    // symmetry holds exactly, not just to rounding
    std::cout << "column swap exact: "
              << (three_jm(1, 1, 1, -1, 1, 0) == -w3 ? "yes" : "no") << "\n\n";

    const BasisSet basis(HalfInt::parse("3/2"));
    const int i = basis.index_of({Kind::X, 2, 1});
    const int j = basis.index_of({Kind::Y, 2, 1});
    const int k = basis.index_of({Kind::Z, 1, 0});
    const double closed =
        e_analytic(basis.spin(), basis.label(i), basis.label(j), basis.label(k));
    const double traced = e_trace(basis.matrix(i), basis.matrix(j), basis.matrix(k),
                                  basis.norm_constant());
    std::cout << "spin 3/2, e(" << basis.label(i).str() << ", " << basis.label(j).str() << ", "
              << basis.label(k).str() << ")\n";
    std::cout << "  closed form: " << format_double(closed) << "\n";
    std::cout << "  trace:       " << format_double(traced) << "\n";
    return 0;
}
