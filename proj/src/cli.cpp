#include "cospec/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cospec/canonical.hpp"
#include "cospec/construct.hpp"
#include "cospec/corpus.hpp"
#include "cospec/parallel.hpp"

namespace cospec {

namespace {

namespace fs = std::filesystem;

struct cli_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Graph> read_family(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw cli_input_error("cannot open family file: " + path);
    std::vector<Graph> graphs = load_family_file(in);
    if (graphs.empty()) throw cli_input_error("family file contains no graphs: " + path);
    return graphs;
}

Corpus read_corpus(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw cli_input_error("cannot open corpus file: " + path);
    return load_corpus(in);
}

CospectralFamily verified_family_from_file(const std::string& path, SpectrumKind kind)
{
    return make_verified_family(read_family(path), kind);
}

void write_certificate(const Certificate& cert, const std::string& out_path, std::ostream& out)
{
    const nlohmann::json j = cert;
    if (out_path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        std::ofstream file(out_path);
        if (!file) throw cli_input_error("cannot write certificate to " + out_path);
        file << j.dump(2) << '\n';
    }
}

void write_construction(const ConstructionResult& result, const std::string& out_dir,
                        std::ostream& out)
{
    if (out_dir.empty()) {
        write_graph_lines(out, result.family.members);
        out << nlohmann::json(result.certificate).dump(2) << '\n';
        return;
    }
    fs::create_directories(out_dir);
    const fs::path family_path = fs::path(out_dir) / "family.g6";
    const fs::path cert_path = fs::path(out_dir) / "certificate.json";
    std::ofstream family_file(family_path);
    if (!family_file) throw cli_input_error("cannot write " + family_path.string());
    write_graph_lines(family_file, result.family.members);
    std::ofstream cert_file(cert_path);
    if (!cert_file) throw cli_input_error("cannot write " + cert_path.string());
    cert_file << nlohmann::json(result.certificate).dump(2) << '\n';
    out << "family of " << result.family.size() << " graphs on " << result.family.order()
        << " vertices (" << to_string(result.condition_used) << ") -> " << family_path.string()
        << '\n';
}

struct Options {
    std::string g6_a, g6_b;
    std::string family_g, family_h;
    std::string corpus_path;
    std::string mode;
    std::string kind_name = "adjacency";
    std::string out_path;
    int i_star = -1, j_star = -1;
    int power_k = 1;
    long long p = 1, q = 1;
    int n_max = 6;
    int min_size = 2;
    bool coprime_filter = false;
    bool prime_filter = false;
};

int dispatch(const CLI::App& app, const Options& opt, std::ostream& out)
{
    const auto kind = [&] { return spectrum_kind_from_string(opt.kind_name); };

    if (app.got_subcommand("product")) {
        out << emit_graph6(cartesian_product(parse_graph6(opt.g6_a), parse_graph6(opt.g6_b)))
            << '\n';
        return 0;
    }

    if (app.got_subcommand("factorize")) {
        const FactorMultiset factors = prime_factorize(parse_graph6(opt.g6_a));
        for (const auto& [factor, mult] : factors.factors)
            out << emit_graph6(factor) << ' ' << mult << '\n';
        return 0;
    }

    if (app.got_subcommand("charpoly")) {
        const CharPoly poly = char_poly(parse_graph6(opt.g6_a), kind());
        bool first = true;
        for (const std::string& c : poly.decimal_coeffs()) {
            if (!first) out << ' ';
            out << c;
            first = false;
        }
        out << '\n';
        return 0;
    }

    if (app.got_subcommand("iso")) {
        const bool iso = are_isomorphic(parse_graph6(opt.g6_a), parse_graph6(opt.g6_b));
        out << (iso ? "isomorphic" : "non-isomorphic") << '\n';
        return iso ? 0 : 1;
    }

    if (app.got_subcommand("verify")) {
        const Certificate cert = verify_family(read_family(opt.family_g), kind());
        write_certificate(cert, opt.out_path, out);
        return cert.valid() ? 0 : 1;
    }

    if (app.got_subcommand("check-conditions")) {
        const CospectralFamily gf = verified_family_from_file(opt.family_g, kind());
        const CospectralFamily hf = verified_family_from_file(opt.family_h, kind());
        const CrossSpectraResult cross = verify_cross_spectra(gf, hf);
        out << "cross_spectra_distinct: " << (cross.distinct ? "yes" : "no");
        if (!cross.distinct) out << " (" << cross.witness << ")";
        out << '\n';
        bool any = false;
        const ConditionResult results[3] = {condition1(gf, hf), condition2(gf, hf),
                                            condition3(gf, hf)};
        for (int c = 0; c < 3; ++c) {
            out << "condition" << (c + 1) << ": " << (results[c].holds ? "holds" : "fails")
                << " (" << results[c].witness << ")\n";
            any = any || results[c].holds;
        }
        return any && cross.distinct ? 0 : 1;
    }

    if (app.got_subcommand("construct")) {
        if (opt.mode == "theorem3") {
            const CospectralFamily seed = verified_family_from_file(opt.family_g, kind());
            write_construction(build_power_family(seed, opt.power_k), opt.out_path, out);
            return 0;
        }
        if (opt.family_h.empty())
            throw CLI::ValidationError("construct", "mode " + opt.mode +
                                                        " needs two family files");
        const CospectralFamily gf = verified_family_from_file(opt.family_g, kind());
        const CospectralFamily hf = verified_family_from_file(opt.family_h, kind());
        ConstructionResult result;
        if (opt.mode == "theorem1") {
            result = build_product_family(gf, hf);
        } else if (opt.mode == "theorem2") {
            if ((opt.i_star < 0) != (opt.j_star < 0))
                throw CLI::ValidationError("construct", "--i and --j must be given together");
            result = opt.i_star >= 0 ? build_relaxed_family(gf, hf, opt.i_star, opt.j_star)
                                     : build_relaxed_family_auto(gf, hf);
        } else if (opt.mode == "fallback") {
            result = fallback_family(gf, hf);
        } else {
            throw CLI::ValidationError("construct", "unknown mode: " + opt.mode);
        }
        write_construction(result, opt.out_path, out);
        return 0;
    }

    if (app.got_subcommand("count-triplets")) {
        out << count_new_triplets(opt.p, opt.q).str() << '\n';
        return 0;
    }

    if (app.got_subcommand("gen-corpus")) {
        const Corpus corpus = generate_small_corpus(opt.n_max);
        std::ofstream file(opt.out_path);
        if (!file) throw cli_input_error("cannot write corpus to " + opt.out_path);
        file << "# connected graphs on 1.." << opt.n_max
             << " vertices, one per isomorphism class\n";
        write_graph_lines(file, corpus.graphs);
        std::map<int, int> per_order;
        for (const Graph& g : corpus.graphs) ++per_order[g.order()];
        for (auto [n, count] : per_order)
            out << "n=" << n << ": " << count << " classes\n";
        out << "total: " << corpus.graphs.size() << " graphs -> " << opt.out_path << '\n';
        return 0;
    }

    if (app.got_subcommand("find-seeds")) {
        const Corpus corpus = read_corpus(opt.corpus_path);
        SeedOptions seed_opts;
        seed_opts.min_size = opt.min_size;
        seed_opts.require_coprime = opt.coprime_filter;
        seed_opts.require_prime = opt.prime_filter;
        const auto families = find_seed_families(corpus, kind(), seed_opts);

        const fs::path dir = opt.out_path.empty() ? fs::path(".") : fs::path(opt.out_path);
        fs::create_directories(dir);
        int index = 0;
        for (const CospectralFamily& family : families) {
            std::ostringstream name;
            name << "seeds_" << to_string(family.kind) << "_n" << family.order() << "_"
                 << index++ << ".g6";
            const fs::path path = dir / name.str();
            std::ofstream file(path);
            if (!file) throw cli_input_error("cannot write " + path.string());
            write_graph_lines(file, family.members);
            out << "wrote " << path.string() << " (order " << family.order() << ", size "
                << family.size() << ")\n";
        }
        out << "families found: " << families.size() << '\n';
        return 0;
    }

    throw CLI::ValidationError("cospec", "no subcommand given");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    par::thread_limit(); // resolve COSPEC_THREADS before any kernel runs

    CLI::App app{"constructs and certifies connected cospectral graph families "
                 "via Cartesian products"};
    app.require_subcommand(0, 1);
    Options opt;

    auto add_kind = [&](CLI::App* cmd) {
        cmd->add_option("--kind", opt.kind_name, "spectrum kind: adjacency|laplacian")
            ->check(CLI::IsMember({"adjacency", "laplacian"}));
    };

    auto* product = app.add_subcommand("product", "Cartesian product of two graph6 graphs");
    product->add_option("first", opt.g6_a, "first graph6 string")->required();
    product->add_option("second", opt.g6_b, "second graph6 string")->required();

    auto* factorize =
        app.add_subcommand("factorize", "Cartesian prime factorization of a connected graph");
    factorize->add_option("graph", opt.g6_a, "graph6 string")->required();

    auto* charpoly_cmd =
        app.add_subcommand("charpoly", "exact characteristic polynomial coefficients");
    charpoly_cmd->add_option("graph", opt.g6_a, "graph6 string")->required();
    add_kind(charpoly_cmd);

    auto* iso = app.add_subcommand("iso", "exact isomorphism test for two graphs");
    iso->add_option("first", opt.g6_a, "first graph6 string")->required();
    iso->add_option("second", opt.g6_b, "second graph6 string")->required();

    auto* verify = app.add_subcommand("verify", "verify a family file and emit a certificate");
    verify->add_option("family", opt.family_g, "family file (graph6 lines)")->required();
    add_kind(verify);
    verify->add_option("--out", opt.out_path, "write the certificate JSON here");

    auto* check =
        app.add_subcommand("check-conditions", "evaluate construction conditions for two families");
    check->add_option("famG", opt.family_g, "first family file")->required();
    check->add_option("famH", opt.family_h, "second family file")->required();
    add_kind(check);

    auto* construct = app.add_subcommand(
        "construct", "build a product/cross/power family with a certificate");
    construct->add_option("mode", opt.mode, "theorem1|theorem2|fallback|theorem3")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "fallback", "theorem3"}));
    construct->add_option("famG", opt.family_g, "first family file (seed file for theorem3)")
        ->required();
    construct->add_option("famH", opt.family_h, "second family file");
    add_kind(construct);
    construct->add_option("--i", opt.i_star, "row index of the coprime pair (theorem2)");
    construct->add_option("--j", opt.j_star, "column index of the coprime pair (theorem2)");
    construct->add_option("--k", opt.power_k, "Cartesian power (theorem3)");
    construct->add_option("--out", opt.out_path, "output directory for family.g6 + certificate.json");

    auto* count = app.add_subcommand("count-triplets",
                                     "closed-form count of newly generated cospectral triplets");
    count->add_option("--p", opt.p, "first family size")->required();
    count->add_option("--q", opt.q, "second family size")->required();

    auto* gen = app.add_subcommand("gen-corpus",
                                   "enumerate all connected graphs up to n vertices");
    gen->add_option("--nmax", opt.n_max, "largest order to enumerate (<= 8)")->required();
    gen->add_option("--out", opt.out_path, "corpus file to write")->required();

    auto* seeds = app.add_subcommand("find-seeds",
                                     "discover cospectral families in a corpus by spectral grouping");
    seeds->add_option("corpus", opt.corpus_path, "corpus file (graph6 lines)")->required();
    add_kind(seeds);
    seeds->add_option("--min-size", opt.min_size, "smallest family size to emit");
    seeds->add_flag("--coprime", opt.coprime_filter, "keep a pairwise-coprime subset per family");
    seeds->add_flag("--prime", opt.prime_filter, "keep only Cartesian prime members");
    seeds->add_option("--out", opt.out_path, "directory for family files (default: .)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (app.get_subcommands().empty()) {
            out << app.help();
            return 0;
        }
        return dispatch(app, opt, out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const construction_error& e) {
        err << "construction refused: " << e.what() << '\n';
        return 1;
    } catch (const family_error& e) {
        err << "verification failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace cospec
