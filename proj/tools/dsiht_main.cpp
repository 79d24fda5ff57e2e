#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsiht/decompose.hpp"
#include "dsiht/demo.hpp"
#include "dsiht/heap.hpp"
#include "dsiht/matio.hpp"

namespace {

// Exit codes: 1 bad flags, 2 unreadable/unparseable input, 3 rank-deficient
// stage, 4 failed demo check.
constexpr int kExitFlags = 1;
constexpr int kExitParse = 2;
constexpr int kExitRankDeficient = 3;
constexpr int kExitDemo = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::vector<dsiht::CpxScalar> read_vector(const std::string& path) {
    const dsiht::CpxMatrix m = dsiht::parse_matrix(read_file(path));
    if (m.rows() != 1 && m.cols() != 1)
        throw dsiht::ParseError(1, 1, "expected a vector (one row or one column)");
    std::vector<dsiht::CpxScalar> v(m.rows() * m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = m.data()[i];
    return v;
}

std::string format_vector(const std::vector<dsiht::CpxScalar>& v, int digits) {
    dsiht::CpxMatrix m(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
    return dsiht::format_matrix(m, digits);
}

dsiht::BasicKind kind_from(const std::string& s) {
    if (s == "t") return dsiht::BasicKind::T;
    if (s == "m") return dsiht::BasicKind::M;
    if (s == "g") return dsiht::BasicKind::G;
    throw CLI::ValidationError("--type", "unknown type '" + s + "'");
}

struct BenchRow {
    std::size_t n;
    double norm_dsiht, norm_householder;
    double time_dsiht_ms, time_householder_ms;
};

BenchRow bench_one(std::size_t n, std::uint64_t seed, int trials) {
    using clock = std::chrono::steady_clock;
    BenchRow row{n, 0, 0, 0, 0};
    for (int t = 0; t < trials; ++t) {
        const dsiht::CpxMatrix x =
            dsiht::random_int_complex_matrix(n, seed + static_cast<std::uint64_t>(t));

        auto t0 = clock::now();
        const dsiht::DecompResult d =
            dsiht::qr_decompose(x, dsiht::TypeSchedule::uniform(dsiht::BasicKind::M, n));
        auto t1 = clock::now();
        const dsiht::DecompResult h = dsiht::householder_qr(x);
        auto t2 = clock::now();

        row.norm_dsiht += d.residual_norm;
        row.norm_householder += h.residual_norm;
        row.time_dsiht_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.time_householder_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
    }
    row.norm_dsiht /= trials;
    row.norm_householder /= trials;
    row.time_dsiht_ms /= trials;
    row.time_householder_ms /= trials;
    return row;
}

int run_decompose(const std::string& input, const std::string& type_str,
                  const std::string& schedule_csv, const std::string& mode,
                  const std::string& out_q, const std::string& out_r, int digits) {
    dsiht::CpxMatrix x;
    try {
        x = dsiht::parse_matrix(read_file(input));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    if (!x.square()) {
        std::cerr << "error: input matrix is " << x.rows() << "x" << x.cols()
                  << ", expected square\n";
        return kExitParse;
    }

    dsiht::TypeSchedule schedule;
    try {
        if (!schedule_csv.empty())
            schedule = dsiht::TypeSchedule::parse(schedule_csv);
        else if (type_str == "analytic")
            schedule = dsiht::TypeSchedule::analytic(x.rows());
        else
            schedule = dsiht::TypeSchedule::uniform(kind_from(type_str), x.rows());
        schedule.validate(x.rows());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFlags;
    }

    dsiht::DecompResult res;
    try {
        res = mode == "ql" ? dsiht::ql_decompose(x, schedule) : dsiht::qr_decompose(x, schedule);
    } catch (const dsiht::RankDeficientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRankDeficient;
    }

    try {
        if (!out_q.empty()) write_file(out_q, dsiht::format_matrix(res.q, digits));
        if (!out_r.empty()) write_file(out_r, dsiht::format_matrix(res.factor, digits));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    std::cout << "residual=" << res.residual_norm << " unitarity=" << res.unitarity_error
              << "\n";
    return 0;
}

int run_transform(const std::string& gen_path, const std::string& sig_path,
                  const std::string& type_str, const std::string& path_str,
                  const std::string& out) {
    std::vector<dsiht::CpxScalar> gen_values, signal;
    try {
        gen_values = read_vector(gen_path);
        signal = read_vector(sig_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    std::vector<dsiht::CpxScalar> result;
    try {
        const dsiht::Generator gen(gen_values);
        if (type_str == "analytic") {
            if (path_str != "natural") {
                std::cerr << "error: the analytic engine only supports --path natural\n";
                return kExitFlags;
            }
            result = dsiht::dsiht_analytic(gen, signal);
        } else {
            const auto path =
                path_str == "strong" ? dsiht::HeapPath::Strong : dsiht::HeapPath::Natural;
            result = dsiht::dsiht(gen, signal, kind_from(type_str), path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    const std::string text = format_vector(result, 6);
    if (out.empty()) {
        std::cout << text;
    } else {
        try {
            write_file(out, text);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitParse;
        }
    }
    return 0;
}

int run_bench(std::vector<std::size_t> sizes, std::uint64_t seed, int trials, bool parallel) {
    std::sort(sizes.begin(), sizes.end());
    std::vector<BenchRow> rows(sizes.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sizes.size()); ++i)
            rows[i] = bench_one(sizes[i], seed, trials);
    } else {
        for (std::size_t i = 0; i < sizes.size(); ++i) rows[i] = bench_one(sizes[i], seed, trials);
    }
    std::cout << "n\tnorm_dsiht\tnorm_householder\ttime_dsiht_ms\ttime_householder_ms\n";
    for (const BenchRow& r : rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%zu\t%.6e\t%.6e\t%.3f\t%.3f\n", r.n, r.norm_dsiht,
                      r.norm_householder, r.time_dsiht_ms, r.time_householder_ms);
        std::cout << buf;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QR/QL decompositions of complex matrices via signal-induced heap transforms"};
    app.require_subcommand(1);

    // decompose
    auto* dec = app.add_subcommand("decompose", "factor a square matrix as QR or QL");
    std::string input, type_str = "t", schedule_csv, mode = "qr", out_q, out_r;
    int digits = 6;
    dec->add_option("input", input, "matrix file")->required();
    auto* type_opt = dec->add_option("--type", type_str, "kernel type: t, m, g, or analytic")
                         ->check(CLI::IsMember({"t", "m", "g", "analytic"}));
    dec->add_option("--schedule", schedule_csv, "per-stage kinds, e.g. t,m,g,t,t")
        ->excludes(type_opt);
    dec->add_option("--mode", mode, "qr (default) or ql")->check(CLI::IsMember({"qr", "ql"}));
    dec->add_option("--out-q", out_q, "write the unitary factor here");
    dec->add_option("--out-r", out_r, "write the triangular factor here");
    dec->add_option("--digits", digits, "significant digits for output files")
        ->check(CLI::Range(1, 17));

    // transform
    auto* tra = app.add_subcommand("transform", "apply a generator-induced transform to a signal");
    std::string gen_path, sig_path, tpath = "natural", tout, ttype = "t";
    tra->add_option("generator", gen_path, "generator vector file")->required();
    tra->add_option("signal", sig_path, "signal vector file")->required();
    tra->add_option("--type", ttype, "kernel type: t, m, g, or analytic")
        ->check(CLI::IsMember({"t", "m", "g", "analytic"}));
    tra->add_option("--path", tpath, "natural (default) or strong")
        ->check(CLI::IsMember({"natural", "strong"}));
    tra->add_option("--out", tout, "output file (stdout when omitted)");

    // demo
    app.add_subcommand("demo", "replay the built-in worked examples");

    // bench
    auto* ben = app.add_subcommand("bench", "residual-norm benchmark against Householder");
    std::vector<std::size_t> sizes{6, 13, 17, 19, 21, 40, 64, 100, 128, 201, 256, 400};
    std::uint64_t seed = 1;
    int trials = 1;
    bool parallel = false;
    ben->add_option("--sizes", sizes, "matrix sizes")->delimiter(',');
    ben->add_option("--seed", seed, "random seed");
    ben->add_option("--trials", trials, "trials per size")->check(CLI::PositiveNumber);
    ben->add_flag("--parallel", parallel, "distribute sizes across workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitFlags;
    }

    if (dec->parsed())
        return run_decompose(input, type_str, schedule_csv, mode, out_q, out_r, digits);
    if (tra->parsed()) return run_transform(gen_path, sig_path, ttype, tpath, tout);
    if (app.get_subcommand("demo")->parsed()) {
        const int failures = dsiht::demo::run_all(&std::cout);
        return failures == 0 ? 0 : kExitDemo;
    }
    if (ben->parsed()) return run_bench(sizes, seed, trials, parallel);
    return kExitFlags;
}
