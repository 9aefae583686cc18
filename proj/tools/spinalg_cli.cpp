// spinalg command-line front end.
//
// Subcommands: wigner, basis, structconst, evolve1, evolve2, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <spinalg/spinalg.hpp>
#include <spinalg/trajectory_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace spinalg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

HalfInt parse_spin(const std::string& text) {
    const HalfInt spin = HalfInt::parse(text);
    if (spin.twice() < 1)
        throw std::invalid_argument("spin must be a positive half-integer, got \"" + text + "\"");
    return spin;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

// ---- coefficient lists -----------------------------------------------------
//
// Inline entries look like "X:1:1=2.0" (one qudit) or "X:1:1,Unit=0.5" (two
// qudits). A JSON coefficient file carries the same keys: {"h": {"X:1:1": 2.0}}.

std::pair<std::string, double> split_entry(const std::string& entry) {
    const auto eq = entry.rfind('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
        throw std::invalid_argument("coefficient entry must look like LABEL=value: \"" + entry +
                                    "\"");
    size_t consumed = 0;
    const std::string value_text = entry.substr(eq + 1);
    double value = 0;
    try {
        value = std::stod(value_text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad coefficient value in \"" + entry + "\"");
    }
    if (consumed != value_text.size())
        throw std::invalid_argument("bad coefficient value in \"" + entry + "\"");
    return {entry.substr(0, eq), value};
}

std::map<std::string, double> collect_entries(const std::vector<std::string>& inline_entries,
                                              const std::string& file_path) {
    std::map<std::string, double> out;
    if (!file_path.empty()) {
        std::ifstream in(file_path);
        if (!in) throw std::invalid_argument("cannot read coefficient file " + file_path);
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw std::invalid_argument("bad JSON in " + file_path + ": " + e.what());
        }
        if (!doc.contains("h") || !doc["h"].is_object())
            throw std::invalid_argument(file_path + " must contain an object field \"h\"");
        for (const auto& [key, value] : doc["h"].items()) {
            if (!value.is_number())
                throw std::invalid_argument("non-numeric coefficient for \"" + key + "\"");
            out[key] = value.get<double>();
        }
    }
    for (const auto& entry : inline_entries) {
        const auto [label, value] = split_entry(entry);
        out[label] = value;
    }
    return out;
}

Eigen::VectorXd coeffs_one(const std::map<std::string, double>& entries, const BasisSet& basis) {
    Eigen::VectorXd h = Eigen::VectorXd::Zero(basis.size());
    for (const auto& [key, value] : entries)
        h(basis.index_of(BasisLabel::parse(key))) = value;
    return h;
}

Eigen::MatrixXd coeffs_two(const std::map<std::string, double>& entries, const BasisSet& b1,
                           const BasisSet& b2) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(b1.size(), b2.size());
    for (const auto& [key, value] : entries) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("two-qudit coefficient keys need two labels: \"" + key +
                                        "\"");
        const int a = b1.index_of(BasisLabel::parse(key.substr(0, comma)));
        const int b = b2.index_of(BasisLabel::parse(key.substr(comma + 1)));
        h(a, b) = value;
    }
    return h;
}

// ---- wigner ----------------------------------------------------------------

int cmd_wigner(const std::string& kind, const std::vector<std::string>& args) {
    std::vector<HalfInt> values;
    values.reserve(args.size());
    for (const auto& a : args) values.push_back(HalfInt::parse(a));
    if (values.size() != 6)
        throw std::invalid_argument("expected 6 numbers, got " + std::to_string(values.size()));
    SqrtRational result;
    if (kind == "3jm")
        result = three_jm(values[0], values[1], values[2], values[3], values[4], values[5]);
    else if (kind == "6j")
        result = six_j(values[0], values[1], values[2], values[3], values[4], values[5]);
    else
        throw std::invalid_argument("wigner kind must be 3jm or 6j, got \"" + kind + "\"");
    if (result.is_zero())
        std::cout << "0\n";
    else
        std::cout << result.str() << " = " << format_double(result.to_double()) << "\n";
    return kExitOk;
}

// ---- basis -----------------------------------------------------------------

int cmd_basis(const std::string& spin_text, const std::string& out_path,
              const std::string& format) {
    const BasisSet basis(parse_spin(spin_text));
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (format == "jsonl") {
        for (int i = 0; i < basis.size(); ++i) {
            const BasisLabel& label = basis.label(i);
            json rec;
            rec["index"] = i;
            rec["label"] = label.str();
            rec["kind"] = kind_name(label.kind);
            rec["k"] = label.k;
            rec["q"] = label.q;
            std::vector<std::array<double, 2>> entries;
            const ComplexMatrix& m = basis.matrix(i);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c)
                    entries.push_back({m(r, c).real(), m(r, c).imag()});
            rec["entries"] = entries;
            os << rec.dump() << "\n";
        }
    } else if (format == "csv") {
        os << "index,label,k,q,row,col,re,im\n";
        for (int i = 0; i < basis.size(); ++i) {
            const BasisLabel& label = basis.label(i);
            const ComplexMatrix& m = basis.matrix(i);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c)
                    os << i << ',' << label.str() << ',' << label.k << ',' << label.q << ',' << r
                       << ',' << c << ',' << format_double(m(r, c).real()) << ','
                       << format_double(m(r, c).imag()) << "\n";
        }
    } else {
        throw std::invalid_argument("format must be jsonl or csv, got \"" + format + "\"");
    }
    return kExitOk;
}

// ---- structconst -----------------------------------------------------------

int cmd_structconst(const std::string& spin_text, const std::string& method,
                    const std::string& out_path, int threads) {
    const BasisSet basis(parse_spin(spin_text));
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (method == "analytic" || method == "trace") {
        const StructureTables tables = build_tables(
            basis, method == "analytic" ? Method::Analytic : Method::Trace, threads);
        write_structure_csv(os, tables, basis);
        return kExitOk;
    }
    if (method != "both")
        throw std::invalid_argument("method must be analytic, trace or both, got \"" + method +
                                    "\"");
    const StructureTables analytic = build_tables(basis, Method::Analytic, threads);
    const StructureTables trace = build_tables(basis, Method::Trace, threads);
    const int n = basis.traceless_count();
    double max_e = 0.0, max_g = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) {
                max_e = std::max(max_e, std::abs(analytic.e(i, j, k) - trace.e(i, j, k)));
                max_g = std::max(max_g, std::abs(analytic.g(i, j, k) - trace.g(i, j, k)));
            }
    write_structure_csv(os, analytic, basis);
    std::cout << "max |e_analytic - e_trace| = " << format_double(max_e) << "\n";
    std::cout << "max |g_analytic - g_trace| = " << format_double(max_g) << "\n";
    return (max_e > 1e-10 || max_g > 1e-10) ? kExitVerifyFail : kExitOk;
}

// ---- evolve ----------------------------------------------------------------

struct EvolveOptions {
    std::string spin, spin2;
    std::vector<std::string> h_entries, r0_entries;
    std::string h_file;
    double dt = 1e-3;
    int steps = 10000;
    std::string out_path;
    bool oracle_check = false;
};

int report_trajectory(const Trajectory& traj) {
    double drift = 0.0;
    for (double b : traj.bloch_lengths)
        drift = std::max(drift, std::abs(b - traj.bloch_lengths.front()));
    std::cout << "initial bloch length = " << format_double(traj.bloch_lengths.front()) << "\n";
    std::cout << "final bloch length   = " << format_double(traj.bloch_lengths.back()) << "\n";
    std::cout << "max bloch drift      = " << format_double(drift) << "\n";
    return kExitOk;
}

int cmd_evolve1(const EvolveOptions& opt) {
    const BasisSet basis(parse_spin(opt.spin));
    const StructureTables tables = build_tables(basis, Method::Analytic);
    const Eigen::VectorXd h = coeffs_one(collect_entries(opt.h_entries, opt.h_file), basis);
    Eigen::VectorXd r0 = coeffs_one(collect_entries(opt.r0_entries, ""), basis);
    r0(0) = 1.0;

    const Trajectory traj = integrate(r0, opt.dt, opt.steps, [&](const Eigen::VectorXd& y) {
        return deriv_one_qudit(y, h, tables);
    });

    std::ofstream file;
    std::ostream& os = open_output(opt.out_path, file);
    json header;
    header["spin"] = basis.spin().str();
    header["h"] = coeff_map(h, basis);
    write_trajectory_jsonl(os, traj, header);
    report_trajectory(traj);

    if (opt.oracle_check) {
        const ComplexMatrix rho0 = bloch_to_density({basis.spin(), r0}, basis);
        const ComplexMatrix hm = hamiltonian_from_coeffs(h, basis);
        double worst = 0.0;
        const int stride = std::max(1, opt.steps / 1000);
        for (size_t s = 0; s < traj.states.size(); s += stride) {
            const Eigen::VectorXd ref =
                density_to_bloch(oracle_evolve(rho0, hm, traj.times[s]), basis).r;
            worst = std::max(worst, (traj.states[s] - ref).cwiseAbs().maxCoeff());
        }
        std::cout << "max R deviation vs oracle = " << format_double(worst) << "\n";
        if (worst > 1e-6) return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_evolve2(const EvolveOptions& opt) {
    const BasisSet b1(parse_spin(opt.spin));
    const BasisSet b2(parse_spin(opt.spin2));
    const StructureTables t1 = build_tables(b1, Method::Analytic);
    const StructureTables t2 = build_tables(b2, Method::Analytic);
    const Eigen::MatrixXd h = coeffs_two(collect_entries(opt.h_entries, opt.h_file), b1, b2);
    Eigen::MatrixXd r0 = coeffs_two(collect_entries(opt.r0_entries, ""), b1, b2);
    r0(0, 0) = 1.0;

    const TwoQuditKernel kernel(t1, t2);
    const int rows = b1.size(), cols = b2.size();
    const Trajectory traj =
        integrate(flatten_row_major(r0), opt.dt, opt.steps, [&](const Eigen::VectorXd& y) {
            return flatten_row_major(kernel.deriv(unflatten_row_major(y, rows, cols), h));
        });

    std::ofstream file;
    std::ostream& os = open_output(opt.out_path, file);
    json header;
    header["spin"] = b1.spin().str();
    header["spin2"] = b2.spin().str();
    header["h"] = coeff_map2(h, b1, b2);
    write_trajectory_jsonl(os, traj, header);
    report_trajectory(traj);

    if (opt.oracle_check) {
        const ComplexMatrix rho0 = bloch_to_density2({b1.spin(), b2.spin(), r0}, b1, b2);
        const ComplexMatrix hm = hamiltonian_from_coeffs2(h, b1, b2);
        double worst = 0.0;
        const int stride = std::max(1, opt.steps / 1000);
        for (size_t s = 0; s < traj.states.size(); s += stride) {
            const Eigen::MatrixXd ref =
                density_to_bloch2(oracle_evolve(rho0, hm, traj.times[s]), b1, b2).r;
            worst = std::max(
                worst, (unflatten_row_major(traj.states[s], rows, cols) - ref).cwiseAbs().maxCoeff());
        }
        std::cout << "max R deviation vs oracle = " << format_double(worst) << "\n";
        if (worst > 1e-6) return kExitVerifyFail;
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyContext {
    BasisSet basis;
    std::unique_ptr<BasisSet> basis2; // only with --spin2
    bool all_passed = true;

    void report(const std::string& name, bool passed, const std::string& detail = "") {
        std::cout << (passed ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!passed) all_passed = false;
    }
};

void suite_appendix(VerifyContext& ctx) {
    if (ctx.basis.spin() != HalfInt(1))
        throw std::invalid_argument("the appendix suite is defined for --spin 1");
    const auto perm = spin1_compat_permutation(HalfInt(1));
    std::array<int, 9> inv{};
    for (int i = 0; i < 9; ++i) inv[perm[i]] = i;
    const StructureTables t = build_tables(ctx.basis, Method::Analytic);
    const double s3 = std::sqrt(3.0);
    struct Row {
        int a, b, c;
        double v;
    };
    const std::vector<Row> golden_e = {
        {1, 2, 3, .5},     {1, 5, 8, .5}, {2, 5, 4, .5},     {2, 7, 8, .5},     {3, 7, 5, .5},
        {4, 7, 1, .5},     {1, 5, 6, s3 / 2}, {6, 7, 2, s3 / 2}, {3, 4, 8, -1.0},
    };
    const std::vector<Row> golden_g = {
        {3, 3, 6, 1 / s3},   {4, 4, 6, 1 / s3},   {6, 6, 6, -1 / s3},  {6, 8, 8, 1 / s3},
        {5, 5, 6, -.5 / s3}, {1, 1, 6, -.5 / s3}, {2, 2, 6, -.5 / s3}, {6, 7, 7, -.5 / s3},
        {2, 3, 5, .5},       {1, 1, 8, .5},       {5, 5, 8, .5},       {1, 2, 4, .5},
        {1, 3, 7, .5},       {2, 2, 8, -.5},      {7, 7, 8, -.5},      {4, 7, 5, -.5},
    };
    double worst = 0.0;
    for (const Row& r : golden_e)
        worst = std::max(worst, std::abs(t.e(inv[r.a], inv[r.b], inv[r.c]) - r.v));
    for (const Row& r : golden_g)
        worst = std::max(worst, std::abs(t.g(inv[r.a], inv[r.b], inv[r.c]) - r.v));
    const bool counts = t.e_table().size() == golden_e.size() &&
                        t.g_table().size() == golden_g.size();
    ctx.report("appendix golden tables", counts && worst < 1e-12,
               "max deviation " + format_double(worst));
}

void suite_orthogonality(VerifyContext& ctx) {
    const BasisSet& basis = ctx.basis;
    double worst = 0.0;
    for (int r = 0; r < basis.size(); ++r)
        for (int s = r; s < basis.size(); ++s) {
            const double expected = r == s ? basis.norm_constant() : 0.0;
            worst = std::max(worst,
                             std::abs((basis.matrix(r) * basis.matrix(s)).trace().real() - expected));
        }
    ctx.report("gram orthogonality", worst < 1e-12, "max deviation " + format_double(worst));
}

void suite_kparity(VerifyContext& ctx) {
    const BasisSet& basis = ctx.basis;
    const StructureTables trace = build_tables(basis, Method::Trace);
    const int n = basis.traceless_count();
    bool exact = true;
    double worst = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) {
                const int rank_sum = basis.label(i).k + basis.label(j).k + basis.label(k).k;
                if (rank_sum % 2 == 0) {
                    if (e_analytic(basis.spin(), basis.label(i), basis.label(j),
                                   basis.label(k)) != 0.0)
                        exact = false;
                    worst = std::max(worst, std::abs(trace.e(i, j, k)));
                } else {
                    if (g_analytic(basis.spin(), basis.label(i), basis.label(j),
                                   basis.label(k)) != 0.0)
                        exact = false;
                    worst = std::max(worst, std::abs(trace.g(i, j, k)));
                }
            }
    ctx.report("rank-parity selection rules", exact && worst < 1e-12,
               "max trace residue " + format_double(worst));
}

void suite_closure(VerifyContext& ctx) {
    const BasisSet& basis = ctx.basis;
    const StructureTables t = build_tables(basis, Method::Analytic);
    const int n = basis.traceless_count();
    double worst = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const ComplexMatrix direct = basis.matrix(i) * basis.matrix(j);
            worst = std::max(
                worst, (direct - reconstruct_product(i, j, t, basis)).cwiseAbs().maxCoeff());
        }
    ctx.report("algebra closure", worst < 1e-10, "max deviation " + format_double(worst));
}

void suite_jacobi(VerifyContext& ctx) {
    const BasisSet& basis = ctx.basis;
    const StructureTables t = build_tables(basis, Method::Analytic);
    const int n = basis.traceless_count();
    double worst = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    double sum = 0.0;
                    for (int m = 1; m <= n; ++m)
                        sum += t.e(i, j, m) * t.e(m, k, l) + t.e(j, k, m) * t.e(m, i, l) +
                               t.e(k, i, m) * t.e(m, j, l);
                    worst = std::max(worst, std::abs(sum));
                }
    ctx.report("jacobi identity", worst < 1e-10, "max residue " + format_double(worst));
}

void suite_conservation(VerifyContext& ctx) {
    std::mt19937 rng(2024);
    std::normal_distribution<double> gauss;
    const int steps = 10000;
    const double dt = 1e-3;
    double drift = 0.0;
    if (!ctx.basis2) {
        const StructureTables t = build_tables(ctx.basis, Method::Analytic);
        Eigen::VectorXd h(ctx.basis.size()), r0 = Eigen::VectorXd::Zero(ctx.basis.size());
        for (int i = 0; i < h.size(); ++i) h(i) = gauss(rng);
        r0(0) = 1.0;
        for (int i = 1; i < r0.size(); ++i) r0(i) = 0.5 * gauss(rng);
        const auto traj = integrate(r0, dt, steps, [&](const Eigen::VectorXd& y) {
            return deriv_one_qudit(y, h, t);
        });
        for (double b : traj.bloch_lengths)
            drift = std::max(drift, std::abs(b - traj.bloch_lengths.front()));
    } else {
        const StructureTables t1 = build_tables(ctx.basis, Method::Analytic);
        const StructureTables t2 = build_tables(*ctx.basis2, Method::Analytic);
        const TwoQuditKernel kernel(t1, t2);
        const int rows = ctx.basis.size(), cols = ctx.basis2->size();
        Eigen::MatrixXd h(rows, cols), r0 = Eigen::MatrixXd::Zero(rows, cols);
        for (int a = 0; a < rows; ++a)
            for (int b = 0; b < cols; ++b) h(a, b) = gauss(rng);
        r0(0, 0) = 1.0;
        for (int a = 1; a < rows; ++a) r0(a, 0) = 0.3 * gauss(rng);
        for (int b = 1; b < cols; ++b) r0(0, b) = 0.3 * gauss(rng);
        const auto traj = integrate(flatten_row_major(r0), dt, steps,
                                    [&](const Eigen::VectorXd& y) {
                                        return flatten_row_major(
                                            kernel.deriv(unflatten_row_major(y, rows, cols), h));
                                    });
        for (double b : traj.bloch_lengths)
            drift = std::max(drift, std::abs(b - traj.bloch_lengths.front()));
    }
    ctx.report("bloch length conservation", drift < 1e-8, "max drift " + format_double(drift));
}

int cmd_verify(const std::string& spin_text, const std::string& spin2_text,
               const std::string& suite) {
    VerifyContext ctx{BasisSet(parse_spin(spin_text)), nullptr};
    if (!spin2_text.empty())
        ctx.basis2 = std::make_unique<BasisSet>(parse_spin(spin2_text));
    const std::map<std::string, void (*)(VerifyContext&)> suites = {
        {"appendix", suite_appendix},   {"orthogonality", suite_orthogonality},
        {"kparity", suite_kparity},     {"closure", suite_closure},
        {"jacobi", suite_jacobi},       {"conservation", suite_conservation},
    };
    if (suite == "all") {
        for (const auto& [name, fn] : suites) {
            if (name == "appendix" && ctx.basis.spin() != HalfInt(1)) continue;
            fn(ctx);
        }
    } else {
        auto it = suites.find(suite);
        if (it == suites.end())
            throw std::invalid_argument("unknown suite \"" + suite + "\"");
        it->second(ctx);
    }
    return ctx.all_passed ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermitian su(2S+1) operator bases, their structure constants, and real-form "
                 "qudit dynamics"};
    app.require_subcommand(1);
    // --h is a Hamiltonian coefficient on the evolve subcommands, so keep
    // help on --help only, everywhere, for consistency.
    app.set_help_flag("--help", "print help");

    // wigner
    auto* wigner_cmd = app.add_subcommand("wigner", "evaluate a 3jm or 6j symbol exactly");
    wigner_cmd->set_help_flag("--help", "print help");
    std::string wigner_kind;
    std::vector<std::string> wigner_args;
    wigner_cmd->add_option("kind", wigner_kind, "3jm or 6j")->required();
    wigner_cmd->add_option("values", wigner_args, "six half-integers")->expected(-1);

    // basis
    auto* basis_cmd = app.add_subcommand("basis", "write the Hermitian basis matrices");
    basis_cmd->set_help_flag("--help", "print help");
    std::string basis_spin, basis_out, basis_format = "jsonl";
    basis_cmd->add_option("--spin", basis_spin, "spin, e.g. 1/2, 1, 3/2")->required();
    basis_cmd->add_option("--out", basis_out, "output path (default stdout)");
    basis_cmd->add_option("--format", basis_format, "jsonl or csv");

    // structconst
    auto* sc_cmd = app.add_subcommand("structconst", "write structure-constant tables as CSV");
    sc_cmd->set_help_flag("--help", "print help");
    std::string sc_spin, sc_method = "analytic", sc_out;
    int sc_threads = 1;
    sc_cmd->add_option("--spin", sc_spin)->required();
    sc_cmd->add_option("--method", sc_method, "analytic, trace or both");
    sc_cmd->add_option("--out", sc_out, "output path (default stdout)");
    sc_cmd->add_option("--threads", sc_threads, "worker threads")->envname("SPINALG_THREADS");

    // evolve1 / evolve2
    EvolveOptions ev1, ev2;
    auto* ev1_cmd = app.add_subcommand("evolve1", "integrate one qudit in Bloch coordinates");
    ev1_cmd->set_help_flag("--help", "print help");
    ev1_cmd->add_option("--spin", ev1.spin)->required();
    ev1_cmd->add_option("--h", ev1.h_entries, "Hamiltonian coefficient LABEL=value");
    ev1_cmd->add_option("--h-file", ev1.h_file, "JSON coefficient file");
    ev1_cmd->add_option("--r0", ev1.r0_entries, "initial Bloch component LABEL=value");
    ev1_cmd->add_option("--dt", ev1.dt, "time step");
    ev1_cmd->add_option("--steps", ev1.steps, "step count");
    ev1_cmd->add_option("--out", ev1.out_path, "trajectory JSONL path (default stdout)");
    ev1_cmd->add_flag("--oracle-check", ev1.oracle_check,
                      "compare against the exact propagator");

    auto* ev2_cmd = app.add_subcommand("evolve2", "integrate two coupled qudits");
    ev2_cmd->set_help_flag("--help", "print help");
    ev2_cmd->add_option("--spin", ev2.spin)->required();
    ev2_cmd->add_option("--spin2", ev2.spin2)->required();
    ev2_cmd->add_option("--h", ev2.h_entries, "coefficient LABEL1,LABEL2=value");
    ev2_cmd->add_option("--h-file", ev2.h_file, "JSON coefficient file");
    ev2_cmd->add_option("--r0", ev2.r0_entries, "initial component LABEL1,LABEL2=value");
    ev2_cmd->add_option("--dt", ev2.dt, "time step");
    ev2_cmd->add_option("--steps", ev2.steps, "step count");
    ev2_cmd->add_option("--out", ev2.out_path, "trajectory JSONL path (default stdout)");
    ev2_cmd->add_flag("--oracle-check", ev2.oracle_check,
                      "compare against the exact propagator");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->set_help_flag("--help", "print help");
    std::string verify_spin, verify_spin2, verify_suite = "all";
    verify_cmd->add_option("--spin", verify_spin)->required();
    verify_cmd->add_option("--spin2", verify_spin2, "second spin for conservation");
    verify_cmd->add_option("--suite", verify_suite,
                           "appendix|orthogonality|kparity|closure|jacobi|conservation|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (wigner_cmd->parsed()) return cmd_wigner(wigner_kind, wigner_args);
        if (basis_cmd->parsed()) return cmd_basis(basis_spin, basis_out, basis_format);
        if (sc_cmd->parsed()) return cmd_structconst(sc_spin, sc_method, sc_out, sc_threads);
        if (ev1_cmd->parsed()) return cmd_evolve1(ev1);
        if (ev2_cmd->parsed()) return cmd_evolve2(ev2);
        if (verify_cmd->parsed()) return cmd_verify(verify_spin, verify_spin2, verify_suite);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
