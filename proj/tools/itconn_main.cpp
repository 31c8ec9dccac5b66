// Batch front end. Every command reads one JSON document, runs exact checks
// and prints a report; exit status 0 means every check passed, 1 a
// mathematical failure, 2 bad input.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "cli_io.hpp"
#include "itconn/fp.hpp"
#include "itconn/galois.hpp"
#include "itconn/solver.hpp"

using namespace itconn;
using cli::Json;

namespace {

struct Options {
    std::optional<uint32_t> p;
    std::optional<unsigned> N, L;
    std::optional<uint64_t> seed;
    std::string format = "text";
    std::string out;
    bool timings = false;
    std::string input;
    std::string example;
    std::vector<int> only;

    uint64_t effective_seed() const { return seed ? *seed : acceptance::default_seed(); }
};

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void line(int criterion, const std::string& check, bool ok, const std::string& detail = {}) {
        Json l;
        l["criterion"] = "C" + std::to_string(criterion);
        l["check"] = check;
        l["pass"] = ok;
        if (!detail.empty()) l["detail"] = detail;
        lines_.push_back(std::move(l));
        pass_ = pass_ && ok;
    }
    Json& data() { return data_; }
    bool pass() const { return pass_; }

    std::string render(const std::string& format) const {
        if (format == "json") {
            Json j;
            j["command"] = command_;
            j["pass"] = pass_;
            j["checks"] = lines_;
            if (!data_.empty()) j["data"] = data_;
            return j.dump(2) + "\n";
        }
        std::ostringstream os;
        os << command_ << ": " << (pass_ ? "pass" : "fail") << "\n";
        for (const auto& l : lines_) {
            os << (l["pass"].get<bool>() ? "PASS " : "FAIL ") << l["criterion"].get<std::string>() << " "
               << l["check"].get<std::string>();
            if (l.contains("detail")) os << " -- " << l["detail"].get<std::string>();
            os << "\n";
        }
        for (const auto& [k, v] : data_.items()) os << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        return os.str();
    }

private:
    std::string command_;
    bool pass_ = true;
    Json lines_ = Json::array();
    Json data_ = Json::object();
};

// Command-line overrides replace the matching document fields.
Json load_document(const Options& o) {
    Json j = cli::load_json(o.input);
    if (!j.is_object()) throw InputError("the input document must be a JSON object");
    if (o.p) j["p"] = *o.p;
    if (o.N) j["N"] = *o.N;
    if (o.L) j["L"] = *o.L;
    return j;
}

Report cmd_check_iterative(const Options& o) {
    const Json j = load_document(o);
    std::string domain;
    const auto rep = cli::check_iterative_document(j, 0, domain);
    Report r("check-iterative");
    std::string detail = "checked order " + std::to_string(rep.checked_order);
    if (rep.first_failure) {
        const auto& f = *rep.first_failure;
        detail = "first failure at inner " + std::to_string(f.inner) + ", outer " + std::to_string(f.outer) +
                 " on generator " + std::to_string(f.generator) + ": " + f.lhs + " != " + f.rhs;
    }
    r.line(1, "iterativity on " + domain + " domain", rep.verdict, detail);
    r.data()["verdict"] = rep.verdict;
    r.data()["checked_order"] = rep.checked_order;
    if (rep.first_failure) {
        const auto& f = *rep.first_failure;
        r.data()["first_failure"] = {{"inner", f.inner}, {"outer", f.outer}, {"generator", f.generator},
                                     {"lhs", f.lhs}, {"rhs", f.rhs}};
    }
    return r;
}

std::string pair_string(const std::pair<uint64_t, uint64_t>& kl) {
    return "(" + std::to_string(kl.first) + ", " + std::to_string(kl.second) + ")";
}

Report cmd_solve(const Options& o) {
    const Json j = load_document(o);
    const uint32_t p = cli::read_prime(j);
    const std::size_t n = cli::read_unsigned(j, "n");
    const unsigned L = cli::read_unsigned(j, "L");
    const std::size_t N = cli::read_unsigned(j, "N");
    if (n == 0) throw InputError("'n' must be positive");
    idmod::IterableEquation E{p, n, L, cli::read_matrices(j, "A", p, n)};
    if (E.A.size() != L) throw InputError("'A' must hold one matrix per level below L");
    if (N >= ipow(p, L)) throw InputError("N must stay below p^L so every needed order is determined");

    Report r("solve");
    const auto compat = idmod::check_compatibility(E);
    r.line(7, "compatibility of the p-power data", compat.pass,
           compat.first_failure ? "first failing identity at (k, l) = " + pair_string(*compat.first_failure)
                                : std::to_string(compat.pairs_checked) + " pairs");
    if (!compat.pass) return r;
    const auto Y = solver::solve_fundamental(E, N);
    const auto res = solver::verify_solution(Y, E, N);
    std::string detail = "residual zero to t^" + std::to_string(N);
    if (!res.pass)
        detail = "order " + std::to_string(res.failures.front().first) + " fails at t^" +
                 std::to_string(res.failures.front().second);
    r.line(7, "theta^(q)(Y) = A_q Y for every p-power q <= N", res.pass, detail);
    Json y = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(Y.entry_string(a, b));
        y.push_back(row);
    }
    r.data()["N"] = N;
    r.data()["Y"] = y;
    return r;
}

Report cmd_extract_projsys(const Options& o) {
    const Json j = load_document(o);
    idmod::IDStructure s;
    s.p = cli::read_prime(j);
    s.n = cli::read_unsigned(j, "n");
    s.L = cli::read_unsigned(j, "L");
    if (s.n == 0) throw InputError("'n' must be positive");
    s.C = cli::read_matrices(j, "C", s.p, s.n);
    if (s.C.size() != s.L) throw InputError("'C' must hold one matrix per level below L");

    Report r("extract-projsys");
    const auto compat = idmod::check_compatibility(s);
    r.line(6, "iterativity of the connection data", compat.pass,
           compat.first_failure ? "first failing identity at (k, l) = " + pair_string(*compat.first_failure) : "");
    if (!compat.pass) return r;
    const auto B = idmod::kernel_descent(s, s.L);
    bool full = true;
    for (const auto& b : B) full = full && rank(b) == s.n;
    r.line(6, "every descent level has full rank n", full, std::to_string(B.size()) + " lattices");
    Json lat = Json::array();
    for (const auto& b : B) lat.push_back(cli::render_matrix(b));
    r.data()["B"] = lat;
    return r;
}

Report cmd_roundtrip(const Options& o) {
    const Json j = load_document(o);
    const uint32_t p = cli::read_prime(j);
    const std::size_t n = cli::read_unsigned(j, "n");
    const unsigned L = cli::read_unsigned(j, "L");
    if (n == 0) throw InputError("'n' must be positive");
    auto s = idmod::FcProjSystem::identity(p, n, L);
    auto B = cli::read_matrices(j, "B", p, n);
    if (B.size() == L) B.insert(B.begin(), s.B[0]);
    if (B.size() != L + 1) throw InputError("'B' must hold B_1..B_L (or B_0..B_L)");
    s.B = B;
    idmod::check_chain(s);

    Report r("roundtrip");
    const auto c = idmod::to_connection(s);
    const auto compat = idmod::check_compatibility(c);
    r.line(6, "to_connection gives an iterative connection", compat.pass,
           compat.first_failure ? "first failing identity at (k, l) = " + pair_string(*compat.first_failure) : "");
    if (!compat.pass) return r;
    const auto back = idmod::kernel_descent(c, L);
    for (unsigned l = 0; l <= L; ++l) {
        r.line(6, "descent level " + std::to_string(l) + " has full rank", rank(back[l]) == n);
        r.line(6, "descent level " + std::to_string(l) + " spans the input lattice",
               idmod::same_lattice(s.B[l], back[l], l));
    }
    Json cm = Json::array();
    for (const auto& m : c.C) cm.push_back(cli::render_matrix(m));
    r.data()["C"] = cm;
    return r;
}

hopf::FpVec minus_one(const hopf::HopfAlgebra& h, std::size_t idx) {
    hopf::FpVec v = h.basis(idx);
    v[0] = (v[0] + h.p - 1) % h.p;
    return v;
}

std::vector<LaurentElem> powers(const LaurentElem& x, uint32_t p) {
    std::vector<LaurentElem> v;
    for (uint32_t k = 0; k < p; ++k) v.push_back(x.pow(k));
    return v;
}

Report verify_gm(const Json& j) {
    const uint32_t p = cli::read_prime(j);
    const unsigned L = cli::read_unsigned(j, "L");
    const int D = j.contains("D") ? static_cast<int>(cli::read_unsigned(j, "D")) : 3;
    const auto g = galois::gm_symbolic_ring(p, cli::read_digits(j, "digits"), L, D);
    Report r("verify-example gm");
    r.line(9, "theta is iterative on s^j, |j| <= D", g.iterative, std::to_string(g.monomials_checked) + " monomials");
    r.line(9, "G_m comodule axioms", g.coaction_axioms);
    r.line(9, "invariants of the diagonal coaction", g.invariants);
    r.line(9, "digit data degenerate in a constant", g.degenerate_constant);
    return r;
}

Report verify_pair(const Json& j, bool multiplicative, uint64_t seed) {
    const uint32_t p = cli::read_prime(j);
    const unsigned L = cli::read_unsigned(j, "L");
    const auto digits = cli::read_digits(j, "digits");
    std::vector<uint32_t> digits2;
    if (j.contains("digits2")) {
        digits2 = cli::read_digits(j, "digits2");
    } else {
        digits2 = digits;
        if (digits2.size() > 2) digits2[2] = (digits2[2] + 1) % p;
    }
    const auto R = multiplicative ? galois::mupmup_ring(p, digits, digits2, L) : galois::alpalp_ring(p, digits, digits2, L);
    Report r(std::string("verify-example ") + (multiplicative ? "mupmup" : "alpalp"));

    const auto rel = multiplicative ? galois::mupmup_relation_theta(*R, digits, digits2)
                                    : galois::alpalp_relation_theta(*R, digits, digits2);
    r.line(9, "theta respects r_i^p in F", galois::relations_respected(*R, rel));
    const auto it = galois::iterative_on(*R->theta, {R->r(0), R->r(1), R->r(0) * R->r(1)});
    r.line(9, "theta is iterative on the generators", it.verdict, "order " + std::to_string(it.checked_order));

    const auto co = multiplicative ? galois::mu_coaction(R) : galois::alpha_coaction(R);
    const auto& h = *co.H;
    const auto ax = galois::check_coaction(co);
    r.line(9, "comodule axioms", ax.pass(),
           std::string("coassociative ") + (ax.coassociative ? "yes" : "no") + ", counital " +
               (ax.counital ? "yes" : "no") + ", theta-equivariant " + (ax.equivariant ? "yes" : "no"));
    const auto tor = galois::check_torsor(co);
    r.line(9, "gamma is a theta-equivariant isomorphism", tor.pass(),
           tor.failure ? *tor.failure
                       : "rank " + std::to_string(tor.rank) + " of " + std::to_string(tor.source_dim));

    if (multiplicative) {
        for (uint32_t k = 0; k < p; ++k) {
            const auto inv = galois::invariant_subalgebra(co, hopf::ideal(h, {minus_one(h, k * p + 1)}));
            const std::string pw = k == 1 ? "1 " : "1^" + std::to_string(k) + " ";
            const std::string xs = k == 0 ? "x2" : "x" + pw + "x2", rs = k == 0 ? "r2" : "r" + pw + "r2";
            r.line(9, "invariants of {" + xs + " = 1} are F[" + rs + "]",
                   galois::same_f_span(*R, inv, powers(R->r(0).pow(static_cast<int64_t>(k)) * R->r(1), p)));
        }
        const auto inv = galois::invariant_subalgebra(co, hopf::ideal(h, {minus_one(h, p)}));
        r.line(9, "invariants of {x1 = 1} are F[r1]", galois::same_f_span(*R, inv, powers(R->r(0), p)));
    } else {
        for (uint32_t a = 0; a <= p; ++a) {
            // the p + 1 lines of F_p^2: (1, b) for b < p, then (0, 1)
            const uint32_t c1 = a < p ? 1 : 0, c2 = a < p ? a : 1;
            hopf::FpVec gen(h.dim, 0);
            gen[p] = c1;
            gen[1] = c2;
            const auto inv = galois::invariant_subalgebra(co, hopf::ideal(h, {gen}));
            const LaurentElem x = R->r(0).scaled(RatFunc::constant(p, c1)) + R->r(1).scaled(RatFunc::constant(p, c2));
            auto combo = [&](const char* v) {
                const std::string x = std::string(v) + "1", y = std::string(v) + "2";
                if (c1 == 0) return y;
                if (c2 == 0) return x;
                return x + " + " + (c2 == 1 ? "" : std::to_string(c2) + " ") + y;
            };
            r.line(9, "invariants of {" + combo("y") + " = 0} are F[" + combo("r") + "]",
                   galois::same_f_span(*R, inv, powers(x, p)));
        }
    }
    r.line(9, "E^G = F", galois::same_f_span(*R, galois::invariant_subalgebra(co, hopf::ideal(h, {})), {R->one()}));

    const auto cs = galois::constants_of_square(R);
    r.line(8, "dim_K C(E (x)_F E) = dim_K K[G]", cs.dim == h.dim,
           std::to_string(cs.dim) + " vs " + std::to_string(h.dim));
    const auto red = galois::reduced_and_separable(R, h);
    r.line(10, "K[G] reduced iff E (x)_F E reduced", red.consistent(),
           std::string("K[G] ") + (red.hopf_reduced ? "reduced" : "nonreduced") + ", E (x) E " +
               (red.square_reduced ? "reduced" : "nonreduced"));

    const std::size_t space = ipow(p, static_cast<unsigned>(R->basis_size()));
    const auto simple = galois::theta_simplicity(*R, space <= 4096 ? 0 : 40, seed);
    r.line(9, "E is theta-simple", simple.pass,
           simple.failure ? *simple.failure : std::to_string(simple.checked) + " elements");
    if (multiplicative) {
        const auto b = galois::ideal_bijection(*R);
        r.line(9, "ideals of K[mu_p] match theta-ideals of E (x) K[mu_p]", b.pass() && b.ideals_of_L == b.theta_ideals,
               std::to_string(b.ideals_of_L) + " ideals, " + std::to_string(b.theta_ideals) + " theta-ideals");
    }
    return r;
}

Report cmd_verify_example(const Options& o) {
    const Json j = load_document(o);
    if (o.example == "gm") return verify_gm(j);
    if (o.example == "mupmup") return verify_pair(j, true, o.effective_seed());
    if (o.example == "alpalp") return verify_pair(j, false, o.effective_seed());
    throw InputError("unknown example '" + o.example + "'");
}

Report cmd_suite(const Options& o) {
    const uint64_t seed = o.effective_seed();
    Report r("suite");
    Json times = Json::object();
    for (const auto& c : acceptance::run_suite(seed, o.only)) {
        r.line(c.id, c.title, c.pass, c.detail);
        if (o.timings) times["C" + std::to_string(c.id)] = std::round(c.seconds * 100) / 100;
    }
    r.data()["seed"] = seed;
    if (o.timings) r.data()["seconds"] = times;
    return r;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact checks for iterative derivations, connections and their Galois examples"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--p", o.p, "prime, overrides the input document");
    app.add_option("--N", o.N, "truncation order, overrides the input document");
    app.add_option("--L", o.L, "depth, overrides the input document");
    app.add_option("--seed", o.seed, "seed for sampled checks (default: ITCONN_SEED, then a fixed value)");
    app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", o.out, "write the report here instead of stdout");

    std::function<Report()> run;
    auto add = [&](const char* name, const char* help, std::function<Report()> f) {
        auto* sub = app.add_subcommand(name, help);
        sub->callback([&run, f] { run = f; });
        return sub;
    };
    add("check-iterative", "check the iteration rule of a higher derivation", [&] { return cmd_check_iterative(o); })
        ->add_option("input", o.input, "higher_derivation JSON ('-' for stdin)")->required();
    add("solve", "solve an iterable higher differential equation", [&] { return cmd_solve(o); })
        ->add_option("input", o.input, "ide JSON")->required();
    add("extract-projsys", "descend an iterative connection to its lattice chain", [&] { return cmd_extract_projsys(o); })
        ->add_option("input", o.input, "connection JSON {p, n, L, C}")->required();
    add("roundtrip", "lattice chain to connection and back", [&] { return cmd_roundtrip(o); })
        ->add_option("input", o.input, "chain JSON {p, n, L, B}")->required();
    auto* ve = add("verify-example", "verify a worked Galois example", [&] { return cmd_verify_example(o); });
    ve->add_option("example", o.example, "gm, mupmup or alpalp")->required()->check(CLI::IsMember({"gm", "mupmup", "alpalp"}));
    ve->add_option("input", o.input, "parameter JSON {p, digits, digits2?, L, D?}")->required();
    auto* suite = add("suite", "replay every acceptance criterion", [&] { return cmd_suite(o); });
    suite->add_option("--only", o.only, "criterion numbers to run");
    suite->add_flag("--timings", o.timings, "include wall-clock seconds (reports are then not byte-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report r = run();
        emit(o, r.render(o.format));
        return r.pass() ? 0 : 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        const std::string name = app.get_subcommands().front()->get_name();
        const int id = name == "check-iterative" ? 1 : name == "solve" ? 7 : name == "verify-example" ? 9 : 6;
        Report r(name);
        r.line(id, "computation", false, e.what());
        try {
            emit(o, r.render(o.format));
        } catch (const InputError&) {
        }
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
