#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcohom/errors.hpp"
#include "qcohom/ideal_io.hpp"
#include "qcohom/ig_model.hpp"
#include "qcohom/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int write_output(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return kExitConfig;
    }
    out << text;
    return kExitPass;
}

struct VerifyArgs {
    int n = 3;
    std::string q = "-1";
    std::uint64_t seed = 7;
    std::string claims = "all";
    long trials = 100;
    std::string format = "json";
    std::string out;
    bool timing = false;
    std::vector<std::string> faults;
};

int run_verify(const VerifyArgs &a) {
    using namespace qcohom::verify;
    VerifyConfig cfg;
    cfg.n = a.n;
    cfg.q = parse_q(a.q);
    cfg.seed = a.seed;
    cfg.claims = parse_claims(a.claims);
    cfg.trials = a.trials;
    cfg.format = a.format == "text" ? Format::Text : Format::Json;
    cfg.timing = a.timing;
    cfg.faults.insert(a.faults.begin(), a.faults.end());
    const auto report = verify_all(cfg);
    const int io = write_output(emit_report(report, cfg.format), a.out);
    if (io != kExitPass)
        return io;
    return report.overall ? kExitPass : kExitFail;
}

int run_gb(const std::string &input, const std::string &order, const std::string &out) {
    const auto parsed = qcohom::io::read_ideal_file(input, qcohom::io::parse_order(order));
    return write_output(qcohom::io::groebner_json(parsed), out);
}

int run_zcount(int n) {
    using namespace qcohom;
    const auto z = ig::z_count(n);
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["ordered_pair_count"] = z.ordered_pair_count;
    doc["point_count"] = z.point_count;
    // The saturated point count must not depend on the value of q.
    nlohmann::ordered_json sat = nlohmann::ordered_json::object();
    bool consistent = true;
    for (long q : {-1L, 2L, 5L}) {
        const auto ab = ig::build_relations<Rational>({n, ig::Variant::ABQuantum, CoeffField::specialized(Rational(q))});
        const auto d = quotient_dim(saturate_at_origin(ab.ideal()));
        const long points = d ? static_cast<long>(*d) : -1;
        sat[std::to_string(q)] = points;
        consistent = consistent && points == z.point_count;
    }
    doc["saturated_points_by_q"] = std::move(sat);
    doc["consistent"] = consistent;
    std::cout << doc.dump(2) << "\n";
    return consistent ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact verification of the quantum cohomology of IG(2, 2n)"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Evaluate claims C1..C11 and print a report");
    verify->add_option("--n", va.n, "n >= 2")->capture_default_str();
    verify->add_option("--q", va.q, "nonzero rational value of q, or 'generic' for Q(q)")->capture_default_str();
    verify->add_option("--seed", va.seed, "seed for random draws")->capture_default_str();
    verify->add_option("--claims", va.claims, "'all' or a list such as C1,C4")->capture_default_str();
    verify->add_option("--trials", va.trials, "trials per four-point case")->capture_default_str();
    verify->add_option("--format", va.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    verify->add_option("--out", va.out, "write the report to a file");
    verify->add_flag("--timing", va.timing, "record wall-clock runtime (output no longer byte-stable)");
    verify->add_option("--inject-fault", va.faults, "test hook: perturb the relations of a claim")->group("");

    std::string gb_input, gb_order = "grevlex", gb_out;
    auto *gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
    gb->add_option("--input", gb_input, "ideal file (json)")->required();
    gb->add_option("--order", gb_order, "lex or grevlex")->check(CLI::IsMember({"lex", "grevlex"}))->capture_default_str();
    gb->add_option("--out", gb_out, "write the basis to a file");

    int z_n = 2;
    auto *zcount = app.add_subcommand("zcount", "Count solutions of the z-substitution system");
    zcount->add_option("--n", z_n, "n >= 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (*verify)
            return run_verify(va);
        if (*gb)
            return run_gb(gb_input, gb_order, gb_out);
        if (*zcount)
            return run_zcount(z_n);
    } catch (const qcohom::ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qcohom::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qcohom::UnsupportedN &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qcohom::EmptyGeneratorList &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitConfig;
}
