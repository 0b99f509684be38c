#include "detkit/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "detkit/document.hpp"
#include "detkit/equivalence.hpp"
#include "detkit/expr.hpp"
#include "detkit/identities.hpp"
#include "detkit/random.hpp"

namespace detkit {

namespace {

void print_report(std::ostream& out, const IdentityReport& r, bool timing) {
    out << "== " << r.identity << " (ring " << r.ring << ", n=" << r.n << ") ==\n";
    out << "lhs: " << r.left << "\n";
    out << "rhs: " << r.right << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    if (!r.witness.empty()) out << "witness: " << r.witness << "\n";
    out << "terms: lhs " << r.stats.left_terms << ", rhs " << r.stats.right_terms << "\n";
    if (timing)
        out << "elapsed: " << std::fixed << std::setprecision(1)
            << (static_cast<double>(r.stats.elapsed.count()) / 1000.0) << " ms\n";
}

// ---------------------------------------------------------------- examples

int cmd_examples(std::ostream& out, bool timing, long eval_lo, long eval_hi) {
    bool all_ok = true;
    auto section = [&](const IdentityReport& r, bool expect_holds, bool extra_ok = true) {
        print_report(out, r, timing);
        bool ok = (r.holds == expect_holds) && extra_ok;
        if (!expect_holds) out << "expected: fails (counterexample)\n";
        out << (ok ? "[PASS]" : "[FAIL]") << "\n\n";
        all_ok = all_ok && ok;
    };

    section(example31(), true);
    section(example33(), true);

    {
        Ring zs = RingContext::polynomial({"s"});
        IdentityReport r = trace_counterexample(RingElement::variable(zs, 0), 2);
        section(r, false, r.left == "s" && r.right == "0");
    }

    section(phk_report(), true);

    {
        NonequivalenceFixture fx = nonequivalence_fixture(eval_lo, eval_hi);
        out << "== nonequivalence fixture (ring Z[x], n=2) ==\n";
        out << "P = " << fx.p.to_string() << "\n";
        out << "Q = " << fx.q.to_string() << "\n";
        out << "recomputed P, Q match the expected matrices: " << (fx.matches_expected ? "yes" : "NO")
            << "\n";
        for (const std::string& f : fx.findings) out << "  " << f << "\n";
        out << (fx.matches_expected ? "[PASS]" : "[FAIL]") << "\n\n";
        all_ok = all_ok && fx.matches_expected;
    }

    out << "overall: " << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}

// ------------------------------------------------------------------- prove

int cmd_prove(const std::string& id, unsigned n, bool force, bool timing, std::ostream& out,
              std::ostream& err) {
    static const std::map<std::string, unsigned> budgets = {
        {"ternary-det", 3},     {"trace", 3},           {"sylvester", 4},
        {"theorem32-det", 4},   {"theorem32-trace", 4}, {"theorem32-charpoly", 4}};

    if (n < 1) {
        err << "prove: n must be >= 1\n";
        return 2;
    }
    IdentityReport r;
    if (id == "fraction-proof") {
        if (n > 2) err << "warning: fraction-proof above n = 2 exceeds the intended budget\n";
        r = fraction_proof_check(n);
    } else {
        auto it = budgets.find(id);
        if (it == budgets.end()) {
            err << "prove: unknown identity '" << id << "'; expected one of";
            for (const auto& [name, cap] : budgets) err << " " << name;
            err << " fraction-proof\n";
            return 2;
        }
        if (n > it->second && !force) {
            err << "prove: n = " << n << " exceeds the default budget " << it->second << " for "
                << id << "; rerun with --force\n";
            return 2;
        }
        r = prove_identity_generic(id, n);
    }
    print_report(out, r, timing);
    out << (r.holds ? "PASS" : "FAIL") << "\n";
    return r.holds ? 0 : 1;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& expression, const std::string& input_path, std::ostream& out,
               std::ostream& err) {
    std::ifstream in(input_path);
    if (!in) {
        err << "verify: cannot open input file '" << input_path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    InputDocument doc;
    ExprPtr expr;
    try {
        doc = parse_document(buffer.str());
        expr = parse(expression);
    } catch (const DocumentError& e) {
        err << "verify: " << input_path << ": " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "verify: expression: " << e.what() << "\n";
        return 2;
    }

    Environment env = document_environment(doc);
    try {
        EvalValue v = evaluate(*expr, env);
        out << "expression: " << to_string(*expr) << "\n";
        out << "ring " << doc.ring->description() << ", n = " << doc.n << "\n";
        if (const bool* b = std::get_if<bool>(&v)) {
            EvalValue lhs = evaluate(*expr->kids[0], env);
            EvalValue rhs = evaluate(*expr->kids[1], env);
            auto show = [](const EvalValue& x) {
                if (const Matrix* m = std::get_if<Matrix>(&x)) return m->to_string();
                return serialize_value(std::get<RingElement>(x));
            };
            out << "lhs: " << show(lhs) << "\n";
            out << "rhs: " << show(rhs) << "\n";
            out << "result: " << (*b ? "true" : "false") << "\n";
            return *b ? 0 : 1;
        }
        if (const Matrix* m = std::get_if<Matrix>(&v)) out << "value: " << m->to_string() << "\n";
        else out << "value: " << serialize_value(std::get<RingElement>(v)) << "\n";
        return 0;
    } catch (const EvalError& e) {
        err << "verify: " << e.what() << "\n";
        return 2;
    }
}

// ----------------------------------------------------------------- witness

int cmd_witness(const std::string& input_path, std::ostream& out, std::ostream& err) {
    std::ifstream in(input_path);
    if (!in) {
        err << "witness: cannot open input file '" << input_path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    InputDocument doc;
    try {
        doc = parse_document(buffer.str());
    } catch (const DocumentError& e) {
        err << "witness: " << input_path << ": " << e.what() << "\n";
        return 2;
    }
    const Matrix* a = doc.find_matrix("A");
    const Matrix* b = doc.find_matrix("B");
    const Matrix* x = doc.find_matrix("X");
    if (!a || !b || !x) {
        err << "witness: the document must bind matrices A, B and X\n";
        return 2;
    }

    SLWitness w = sl_witness(*a, *b, *x);
    auto [p, q] = ternary_pair(*a, *b, *x);
    out << "ring " << doc.ring->description() << ", n = " << doc.n << "\n";
    out << "P = A+B-AXB = " << p.to_string() << "\n";
    out << "Q = A+B-BXA = " << q.to_string() << "\n";
    out << "left factors (product = U):\n";
    for (const auto& [name, factor] : w.left_factors)
        out << "  " << name << " = " << factor.to_string() << "\n";
    out << "right factors (product = V):\n";
    for (const auto& [name, factor] : w.right_factors)
        out << "  " << name << " = " << factor.to_string() << "\n";
    out << "U = " << w.u.to_string() << "\n";
    out << "V = " << w.v.to_string() << "\n";
    out << "det(U) = " << w.u.det().to_string() << ", det(V) = " << w.v.det().to_string() << "\n";
    Matrix product = w.u * suspend(p, doc.n) * w.v;
    out << "U*diag(P,I)*V = " << product.to_string() << "\n";
    out << "diag(Q,I)     = " << suspend(q, doc.n).to_string() << "\n";
    out << "U*diag(P,I)*V == diag(Q,I): verified\n";

    if (a->is_invertible() && b->is_invertible()) {
        auto [u2, v2] = direct_equivalence_witness(*a, *b, *x);
        out << "direct equivalence (A, B invertible):\n";
        out << "U' = B*A^-1 = " << u2.to_string() << "\n";
        out << "V' = B^-1*A = " << v2.to_string() << "\n";
        out << "U'*P*V' == Q: verified\n";
    } else {
        out << "direct equivalence: skipped (A or B not invertible)\n";
    }
    return 0;
}

// ------------------------------------------------------------------- bench

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

int cmd_bench(const std::string& range_text, const std::string& ring_text, unsigned trials,
              std::uint64_t seed, bool timing, std::ostream& out, std::ostream& err) {
    std::size_t dots = range_text.find("..");
    unsigned lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = static_cast<unsigned>(std::stoul(range_text));
        } else {
            lo = static_cast<unsigned>(std::stoul(range_text.substr(0, dots)));
            hi = static_cast<unsigned>(std::stoul(range_text.substr(dots + 2)));
        }
        if (lo < 1 || hi < lo) throw std::out_of_range("");
    } catch (const std::exception&) {
        err << "bench: bad --n range '" << range_text << "' (expected a..b with 1 <= a <= b)\n";
        return 2;
    }

    Ring ring;
    if (ring_text == "Z") ring = RingContext::integers();
    else if (ring_text.rfind("Z/", 0) == 0) {
        try {
            ring = RingContext::modular(Integer(ring_text.substr(2)));
        } catch (const std::exception&) {
            err << "bench: bad modulus in '" << ring_text << "'\n";
            return 2;
        }
    } else if (ring_text == "Z[x]" || ring_text == "Zx") {
        ring = RingContext::polynomial({"x"});
    } else {
        err << "bench: unknown ring '" << ring_text << "' (expected Z, Z/<m> or Z[x])\n";
        return 2;
    }

    out << "algorithm,ring,n,trial,nanoseconds,result_digest\n";
    bool mismatch = false;
    for (unsigned n = lo; n <= hi; ++n) {
        for (unsigned trial = 0; trial < trials; ++trial) {
            Rng rng(seed * 1000003ULL + n * 1009ULL + trial);
            Matrix m = random_matrix(ring, n, rng);
            struct Algo {
                const char* name;
                RingElement (Matrix::*fn)() const;
            };
            std::vector<Algo> algos = {{"cofactor", &Matrix::det_cofactor},
                                       {"berkowitz", &Matrix::det_berkowitz}};
            if (ring->supports_exact_division()) algos.push_back({"bareiss", &Matrix::det_bareiss});

            std::string first_digest;
            for (const Algo& algo : algos) {
                auto t0 = std::chrono::steady_clock::now();
                RingElement d = (m.*algo.fn)();
                auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                std::ostringstream digest;
                digest << std::hex << std::setw(16) << std::setfill('0')
                       << fnv1a64(d.to_string());
                if (first_digest.empty()) first_digest = digest.str();
                else if (digest.str() != first_digest) mismatch = true;
                out << algo.name << "," << ring->description() << "," << n << "," << trial << ","
                    << (timing ? ns : 0) << "," << digest.str() << "\n";
            }
        }
    }
    if (mismatch) {
        err << "bench: determinant digests disagree between algorithms\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact determinant identities over commutative rings"};
    app.name("detkit");
    app.require_subcommand(1);

    bool no_timing = false;
    auto add_no_timing = [&no_timing](CLI::App* cmd) {
        cmd->add_flag("--no-timing", no_timing, "omit timings for byte-stable output");
    };

    long eval_lo = -10, eval_hi = 10;
    CLI::App* examples =
        app.add_subcommand("examples", "run the built-in fixtures and check them");
    examples->add_option("--eval-min", eval_lo, "lower end of the fixture evaluation range");
    examples->add_option("--eval-max", eval_hi, "upper end of the fixture evaluation range");
    add_no_timing(examples);

    std::string prove_id;
    unsigned prove_n = 1;
    bool force = false;
    CLI::App* prove = app.add_subcommand("prove", "prove an identity for generic matrices");
    prove->add_option("identity", prove_id, "identity id, e.g. ternary-det")->required();
    prove->add_option("--n", prove_n, "matrix dimension")->required();
    prove->add_flag("--force", force, "allow n beyond the default budget");
    add_no_timing(prove);

    std::string verify_expr, verify_input;
    CLI::App* verify = app.add_subcommand("verify", "evaluate a DSL (in)equality on an input file");
    verify->add_option("expression", verify_expr, "DSL expression, e.g. \"det(I)==1\"")->required();
    verify->add_option("--input", verify_input, "input document")->required();
    add_no_timing(verify);

    std::string witness_input;
    CLI::App* witness =
        app.add_subcommand("witness", "emit verified SL-equivalence witnesses for A, B, X");
    witness->add_option("--input", witness_input, "input document binding A, B, X")->required();
    add_no_timing(witness);

    std::string bench_range = "2..4", bench_ring = "Z";
    unsigned bench_trials = 3;
    std::uint64_t bench_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "time the determinant algorithms (CSV)");
    bench->add_option("--n", bench_range, "dimension range a..b");
    bench->add_option("--ring", bench_ring, "Z, Z/<m> or Z[x]");
    bench->add_option("--trials", bench_trials, "trials per dimension");
    bench->add_option("--seed", bench_seed, "random seed");
    add_no_timing(bench);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "detkit: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(examples)) return cmd_examples(out, !no_timing, eval_lo, eval_hi);
        if (app.got_subcommand(prove))
            return cmd_prove(prove_id, prove_n, force, !no_timing, out, err);
        if (app.got_subcommand(verify)) return cmd_verify(verify_expr, verify_input, out, err);
        if (app.got_subcommand(witness)) return cmd_witness(witness_input, out, err);
        if (app.got_subcommand(bench))
            return cmd_bench(bench_range, bench_ring, bench_trials, bench_seed, !no_timing, out,
                             err);
    } catch (const DocumentError& e) {
        err << "detkit: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "detkit: " << e.what() << "\n";
        return 2;
    } catch (const EvalError& e) {
        err << "detkit: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "detkit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "detkit: check failed: " << e.what() << "\n";
        return 1;
    }
    err << "detkit: no subcommand\n";
    return 2;
}

}  // namespace detkit
