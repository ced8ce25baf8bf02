// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kybermat/io.hpp"
#include "kybermat/matvec.hpp"
#include "kybermat/opreport.hpp"
#include "kybermat/oracle.hpp"
#include "kybermat/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using namespace kybermat;

bool check(bool ok, const std::string& what)
{
    std::cout << "selftest " << what << ": " << (ok ? "ok" : "FAILED") << "\n";
    return ok;
}

int run_selftest(bool inject_twiddle_fault)
{
    bool ok = true;
    SplitMix64 rng(0xC0FFEE);

    for (std::size_t m : {std::size_t{64}, std::size_t{128}}) {
        TwiddleTables t = build_tables(m);
        if (inject_twiddle_fault)
            t.zetas[1] = static_cast<Residue>((t.zetas[1] + 1) % kQ);

        const Polynomial f = random_polynomial(rng, m);
        OpCounter ctx;
        const NttVector v = ntt_forward(f, t, ctx);
        ok &= check(v == ntt_eval_reference(f, build_tables(m)),
                    "ntt matches direct evaluation (m=" + std::to_string(m) + ")");
        ok &= check(ntt_inverse(v, t, ctx) == f,
                    "inverse ntt roundtrip (m=" + std::to_string(m) + ")");
    }

    for (std::size_t k = 1; k <= 4; ++k) {
        const auto a = random_matrix(rng, k, kRingDegree);
        const PolyVector r = random_poly_vector(rng, k, kRingDegree);
        const PolyVector want = matvec_schoolbook(a, r);
        for (Algorithm alg :
             {Algorithm::baseline4mult, Algorithm::baseline5mult,
              Algorithm::proposed2, Algorithm::unshared4, Algorithm::proposed4}) {
            PipelineCounters pc;
            ok &= check(matvec_pipeline(alg, a, r, pc) == want,
                        std::string(algorithm_name(alg)) +
                            " matches schoolbook (k=" + std::to_string(k) + ")");
        }
    }

    for (Algorithm alg : {Algorithm::baseline4mult, Algorithm::proposed2,
                          Algorithm::proposed4}) {
        const ComplexityReport rep = measure(alg, 2);
        const bool good = rep.measured.modmul == rep.cf.modmul &&
                          rep.measured.modadd == rep.cf.modadd;
        std::cout << "opcounts " << algorithm_name(alg) << " k=2 "
                  << (good ? "PASS" : "FAIL") << " (" << rep.measured.modmul
                  << "," << rep.measured.modadd << ")\n";
        ok &= good;
    }
    for (Algorithm alg : {Algorithm::baseline5mult, Algorithm::unshared4}) {
        // published adder formulas for these differ from the dataflow; only
        // the multiplier count is asserted
        const ComplexityReport rep = measure(alg, 2);
        const bool good = rep.measured.modmul == rep.cf.modmul;
        std::cout << "opcounts " << algorithm_name(alg) << " k=2 "
                  << (good ? "PASS" : "FAIL") << " (" << rep.measured.modmul
                  << "," << rep.measured.modadd << ") modmul-only\n";
        ok &= good;
    }

    std::cout << "selftest: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_gen(std::size_t k, std::size_t L, std::uint64_t seed,
            const std::string& out)
{
    SplitMix64 rng(seed);
    const auto a = random_matrix(rng, k, kRingDegree);
    const PolyVector r = random_poly_vector(rng, k, kRingDegree);

    OpCounter scratch;
    const NttDomainMatrix an = matrix_to_ntt(a, L, scratch);

    const std::string matrix_path = out + ".matrix";
    const std::string vector_path = out + ".vector";
    {
        std::ofstream os(matrix_path);
        if (!os) {
            std::cerr << "gen: cannot open " << matrix_path << " for writing\n";
            return kExitIo;
        }
        write_matrix(os, an);
        if (!os.flush()) {
            std::cerr << "gen: write failed on " << matrix_path << "\n";
            return kExitIo;
        }
    }
    {
        std::ofstream os(vector_path);
        if (!os) {
            std::cerr << "gen: cannot open " << vector_path << " for writing\n";
            return kExitIo;
        }
        write_poly_vector(os, r, L, "vector");
        if (!os.flush()) {
            std::cerr << "gen: write failed on " << vector_path << "\n";
            return kExitIo;
        }
    }
    std::cout << "wrote " << matrix_path << " and " << vector_path << " (k=" << k
              << " L=" << L << " seed=" << seed << ")\n";
    return kExitOk;
}

int run_matvec(const std::string& alg_name, const std::string& in,
               const std::string& out, bool verify)
{
    const bool schoolbook = (alg_name == "schoolbook");
    Algorithm alg = Algorithm::proposed2;
    if (!schoolbook) {
        try {
            alg = algorithm_from_name(alg_name);
        } catch (const std::invalid_argument& e) {
            std::cerr << "matvec: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    NttDomainMatrix an;
    PolyVector r;
    std::size_t L = 0;
    try {
        std::ifstream ms(in + ".matrix");
        if (!ms)
            throw IoError("cannot open " + in + ".matrix");
        an = read_matrix(ms);

        std::ifstream vs(in + ".vector");
        if (!vs)
            throw IoError("cannot open " + in + ".vector");
        r = read_poly_vector(vs, &L);
        if (L != an.L || an.k != r.k())
            throw IoError("matrix and vector documents do not match");
        if (!schoolbook && an.L != algorithm_L(alg))
            throw IoError("input dimensions do not fit algorithm " + alg_name);
    } catch (const IoError& e) {
        std::cerr << "matvec: " << e.what() << "\n";
        return kExitIo;
    }

    OpCounter scratch;
    std::vector<std::vector<Polynomial>> a(an.k, std::vector<Polynomial>(an.k));
    for (std::size_t i = 0; i < an.k; ++i)
        for (std::size_t j = 0; j < an.k; ++j) {
            NttDomainVector one;
            one.k = 1;
            one.L = an.L;
            one.entries = {an.entries[i][j]};
            a[i][j] = vector_from_ntt(one, scratch).entries[0];
        }

    PipelineCounters pc;
    NttDomainVector un;
    if (schoolbook) {
        // oracle path: multiply in the coefficient domain, then transform
        // so the output file is byte-identical to the fast algorithms'
        un = vector_to_ntt(matvec_schoolbook(a, r), an.L, scratch);
    } else {
        const NttDomainVector rn = vector_to_ntt(r, an.L, pc.transform);
        un = matvec_stage(alg, an, rn, pc.stage);
    }

    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "matvec: cannot open " << out << " for writing\n";
            return kExitIo;
        }
        write_vector(os, un, "output");
        if (!os.flush()) {
            std::cerr << "matvec: write failed on " << out << "\n";
            return kExitIo;
        }
    }

    if (!schoolbook)
        std::cout << "modmul=" << pc.stage.modmul << " modadd=" << pc.stage.modadd
                  << "\n";

    if (verify) {
        const PolyVector got = vector_from_ntt(un, scratch);
        if (got == matvec_schoolbook(a, r)) {
            std::cout << "EQUAL\n";
        } else {
            std::cout << "DIFFER\n";
            return kExitVerifyFailed;
        }
    }
    return kExitOk;
}

int run_count(const std::vector<std::size_t>& ks)
{
    for (std::size_t k : ks)
        if (k < 1 || k > 4) {
            std::cerr << "count: k must be in 1..4\n";
            return kExitUsage;
        }
    for (const ComplexityReport& rep : measure_all(ks))
        std::cout << format_report_line(rep) << "\n";
    std::cout << reduction_summary();
    return kExitOk;
}

int run_bench(const std::string& alg_name, std::size_t k, std::size_t iters)
{
    SplitMix64 rng(42);
    const auto a = random_matrix(rng, k, kRingDegree);
    const PolyVector r = random_poly_vector(rng, k, kRingDegree);

    Algorithm alg = Algorithm::proposed2;
    const bool schoolbook = (alg_name == "schoolbook");
    if (!schoolbook) {
        try {
            alg = algorithm_from_name(alg_name);
        } catch (const std::invalid_argument& e) {
            std::cerr << "bench: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    std::vector<std::uint64_t> ns(iters);
    for (std::size_t it = 0; it < iters; ++it) {
        const auto t0 = std::chrono::steady_clock::now();
        if (schoolbook) {
            (void)matvec_schoolbook(a, r);
        } else {
            PipelineCounters pc;
            (void)matvec_pipeline(alg, a, r, pc);
        }
        ns[it] = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::steady_clock::now() - t0)
                .count());
    }
    std::sort(ns.begin(), ns.end());
    std::cout << "alg=" << alg_name << " k=" << k << " iters=" << iters
              << " median_ns=" << ns[iters / 2] << " min_ns=" << ns.front()
              << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"NTT-domain matrix-vector polynomial multiplication for Kyber"};
    app.require_subcommand(1);

    auto* selftest = app.add_subcommand("selftest", "run built-in checks");
    bool fault = false;
    selftest->add_flag("--inject-twiddle-fault", fault)->group("");

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::size_t gen_k = 2, gen_L = 2;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--k", gen_k, "module rank")->check(CLI::Range(2, 4));
    gen->add_option("--L", gen_L, "decimation factor")
        ->check(CLI::IsMember({2, 4}));
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--out", gen_out, "output path prefix")->required();

    auto* mv = app.add_subcommand("matvec", "multiply matrix by vector");
    std::string mv_alg = "proposed2", mv_in, mv_out;
    bool mv_verify = false;
    mv->add_option("--alg", mv_alg, "algorithm name or schoolbook");
    mv->add_option("--in", mv_in, "instance path prefix from gen")->required();
    mv->add_option("--out", mv_out, "output path");
    mv->add_flag("--verify", mv_verify, "check against the schoolbook oracle");

    auto* count = app.add_subcommand("count", "print operation-count report");
    std::vector<std::size_t> count_ks = {2, 3, 4};
    std::string count_format = "text";
    count->add_option("--k-list", count_ks, "ranks to report");
    count->add_option("--format", count_format, "output format")
        ->check(CLI::IsMember({"text"}));

    auto* bench = app.add_subcommand("bench", "time an algorithm");
    std::string bench_alg = "proposed2";
    std::size_t bench_k = 2, bench_iters = 100;
    bench->add_option("--alg", bench_alg, "algorithm name or schoolbook");
    bench->add_option("--k", bench_k, "module rank")->check(CLI::Range(1, 4));
    bench->add_option("--iters", bench_iters, "iterations")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*selftest)
            return run_selftest(fault);
        if (*gen)
            return run_gen(gen_k, gen_L, gen_seed, gen_out);
        if (*mv)
            return run_matvec(mv_alg, mv_in, mv_out, mv_verify);
        if (*count)
            return run_count(count_ks);
        if (*bench)
            return run_bench(bench_alg, bench_k, bench_iters);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
