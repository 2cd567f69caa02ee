#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spheres/io.hpp"
#include "spheres/oracle.hpp"

namespace {

using spheres::Json;

// Exit codes: 0 a verdict was produced (false verdicts included), 2 the
// input or the request was invalid, 3 a resource limit or overflow was hit.
constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitLimit = 3;

struct Options {
    std::string input = "-";
    std::string format = "text";
    bool certificate = false;
    int overlap_radius = 0;
    int dim_cap = 5;
    std::uint64_t seed = 1;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw spheres::ParseError("missing_input", "", "cannot open input file " + path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

const spheres::SphereClass& find_class(const spheres::InputDocument& doc,
                                       const std::string& name) {
    const spheres::SphereClass* cls = doc.find(name);
    if (!cls) {
        throw spheres::ParseError("unknown_class", "/classes",
                                  "no class named \"" + name + "\" in the input document");
    }
    return *cls;
}

void emit(const Json& payload, const Options& opt, const std::string& text) {
    if (opt.format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string render_certificate(const Json& cert, int indent = 2) {
    // The text format is a rendering of the JSON payload, so certificates are
    // shown as their (compact) JSON.
    return std::string(static_cast<std::size_t>(indent), ' ') + "certificate: " + cert.dump() +
           "\n";
}

int run_check(const spheres::InputDocument& doc, const std::string& name, const Options& opt) {
    const spheres::SphereClass& cls = find_class(doc, name);
    const spheres::CoverEmbedResult cover = spheres::embeddable_in_cover(cls);
    const spheres::ManifoldResult manifold =
        spheres::embeddable_in_M(cls, {opt.overlap_radius});

    Json payload{{"command", "check"},
                 {"name", name},
                 {"verdict", manifold.verdict},
                 {"cover_verdict", cover.verdict}};
    if (opt.certificate) {
        payload["certificate"] = spheres::certificate_to_json(manifold);
        payload["cover_certificate"] = spheres::certificate_to_json(cover);
    }

    std::ostringstream text;
    text << "class " << name << ": embeddable in M: " << (manifold.verdict ? "yes" : "no")
         << "\n  embeddable in the cover: " << (cover.verdict ? "yes" : "no") << "\n";
    if (opt.certificate) {
        text << render_certificate(spheres::certificate_to_json(manifold));
        text << render_certificate(spheres::certificate_to_json(cover));
    }
    emit(payload, opt, text.str());
    return kExitOk;
}

int run_disjoint(const spheres::InputDocument& doc, const std::string& first,
                 const std::string& second, bool cover_only, const Options& opt) {
    const spheres::SphereClass& a = find_class(doc, first);
    const spheres::SphereClass& b = find_class(doc, second);

    Json payload{{"command", "disjoint"},
                 {"names", Json::array({first, second})},
                 {"mode", cover_only ? "cover" : "manifold"}};
    Json cert;
    bool verdict = false;
    if (cover_only) {
        const spheres::CoverDisjointResult r = spheres::disjoint_in_cover(a, b);
        verdict = r.verdict;
        cert = spheres::certificate_to_json(r);
    } else {
        const spheres::ManifoldResult r = spheres::disjoint_in_M(a, b, {opt.overlap_radius});
        verdict = r.verdict;
        cert = spheres::certificate_to_json(r);
    }
    payload["verdict"] = verdict;
    if (opt.certificate) payload["certificate"] = cert;

    std::ostringstream text;
    text << "classes " << first << ", " << second << ": disjoint in "
         << (cover_only ? "the cover" : "M") << ": " << (verdict ? "yes" : "no") << "\n";
    if (opt.certificate) text << render_certificate(cert);
    emit(payload, opt, text.str());
    return kExitOk;
}

int run_complex(const spheres::InputDocument& doc, const Options& opt) {
    std::vector<spheres::SphereClass> classes;
    classes.reserve(doc.classes.size());
    for (const auto& nc : doc.classes) classes.push_back(nc.cls);

    const spheres::ComplexOutput complex =
        spheres::build_complex(classes, opt.dim_cap, {opt.overlap_radius});
    const Json payload = spheres::complex_to_json(complex, opt.certificate);

    std::ostringstream text;
    text << "splitting complex: " << complex.vertices.size() << " vertices, "
         << complex.edges.size() << " edges, " << complex.simplices.size() << " simplices, "
         << complex.rejected.size() << " rejected\n";
    for (std::size_t i = 0; i < complex.vertices.size(); ++i) {
        text << "  vertex " << i << ": " << spheres::to_string(complex.vertices[i].canonical)
             << " from inputs";
        for (int s : complex.vertices[i].sources) text << " " << doc.classes[static_cast<std::size_t>(s)].name;
        text << "\n";
    }
    for (const auto& [i, j] : complex.edges) text << "  edge " << i << " -- " << j << "\n";
    for (const auto& r : complex.rejected) {
        text << "  rejected " << doc.classes[static_cast<std::size_t>(r.index)].name << ": "
             << r.reason << "\n";
    }
    emit(payload, opt, text.str());
    return kExitOk;
}

int run_oracle(const spheres::InputDocument& doc, const std::string& name, int max_len,
               int random_trials, const Options& opt) {
    const spheres::SphereClass& cls = find_class(doc, name);
    const spheres::SupportHull h = spheres::hull(cls);
    const int effective_len = max_len > 0 ? max_len : spheres::hull_diameter(h) + 4;

    const bool geodesic_verdict = spheres::embeddable_in_cover(cls).verdict;
    std::uint64_t paths = 0;
    std::uint64_t mismatches = 0;
    spheres::Weight max_abs = 0;
    spheres::enumerate_paths(h, effective_len, [&](const spheres::HullPath& p) {
        ++paths;
        const spheres::Weight sum = spheres::path_intersection_sum(p.steps, cls);
        const spheres::Weight direct =
            p.start == p.end ? 0 : spheres::pair_intersection_number({p.start, p.end}, cls);
        if (sum != direct) ++mismatches;
        const spheres::Weight mag = sum < 0 ? -sum : sum;
        if (mag > max_abs) max_abs = mag;
    });
    const bool exhaustive_verdict = max_abs <= 1;

    Json payload{{"command", "oracle"},
                 {"name", name},
                 {"max_len", effective_len},
                 {"geodesic_verdict", geodesic_verdict},
                 {"exhaustive_verdict", exhaustive_verdict},
                 {"agree", geodesic_verdict == exhaustive_verdict && mismatches == 0},
                 {"paths_enumerated", paths},
                 {"path_mismatches", mismatches}};

    if (random_trials > 0) {
        int disagreements = 0;
        for (int t = 0; t < random_trials; ++t) {
            const std::uint64_t s = opt.seed + static_cast<std::uint64_t>(t);
            const spheres::SphereClass c = spheres::random_class(
                doc.rank, 1 + static_cast<int>(s % 4), static_cast<int>(s % 3), 2, s);
            const spheres::SupportHull ch = spheres::hull(c);
            spheres::Weight worst = 0;
            spheres::enumerate_paths(ch, spheres::hull_diameter(ch) + 4,
                                     [&](const spheres::HullPath& p) {
                                         const spheres::Weight v =
                                             spheres::path_intersection_sum(p.steps, c);
                                         const spheres::Weight mag = v < 0 ? -v : v;
                                         if (mag > worst) worst = mag;
                                     });
            if ((worst <= 1) != spheres::embeddable_in_cover(c).verdict) ++disagreements;
        }
        payload["random_trials"] = Json{{"count", random_trials}, {"disagreements", disagreements}};
    }

    std::ostringstream text;
    text << "oracle " << name << ": geodesic " << (geodesic_verdict ? "yes" : "no")
         << ", exhaustive " << (exhaustive_verdict ? "yes" : "no") << " over " << paths
         << " paths (max_len " << effective_len << "), " << mismatches << " mismatches\n";
    if (random_trials > 0) {
        text << "  random trials: " << random_trials << ", disagreements: "
             << payload["random_trials"]["disagreements"].get<int>() << "\n";
    }
    emit(payload, opt, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision procedures for embedded sphere systems over a free group"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--input,-i", opt.input, "Input document (JSON file, '-' for stdin)")
        ->capture_default_str();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--certificate", opt.certificate, "Include certificates in the output");
    app.add_option("--overlap-radius", opt.overlap_radius, "Extra overlap search radius")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--dim-cap", opt.dim_cap, "Maximum simplex dimension")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for randomized oracle trials")
        ->capture_default_str();

    std::string check_name;
    CLI::App* check = app.add_subcommand("check", "Decide embeddability of one class");
    check->add_option("name", check_name, "Class name")->required();
    check->fallthrough();

    std::string disjoint_first, disjoint_second;
    bool cover_only = false;
    CLI::App* disjoint = app.add_subcommand("disjoint", "Decide disjointness of two classes");
    disjoint->add_option("first", disjoint_first, "First class name")->required();
    disjoint->add_option("second", disjoint_second, "Second class name")->required();
    disjoint->add_flag("--cover-only", cover_only, "Decide in the cover instead of M");
    disjoint->fallthrough();

    CLI::App* complex = app.add_subcommand("complex", "Build the splitting subcomplex");
    complex->fallthrough();

    std::string oracle_name;
    int max_len = 0;
    int random_trials = 0;
    CLI::App* oracle = app.add_subcommand("oracle", "Cross-check a verdict by path enumeration");
    oracle->add_option("name", oracle_name, "Class name")->required();
    oracle->add_option("--max-len", max_len, "Path length bound (default: hull diameter + 4)")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--random", random_trials, "Extra randomized cross-check trials")
        ->check(CLI::NonNegativeNumber);
    oracle->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        const spheres::InputDocument doc = spheres::parse_input(read_input(opt.input));
        if (check->parsed()) return run_check(doc, check_name, opt);
        if (disjoint->parsed()) return run_disjoint(doc, disjoint_first, disjoint_second, cover_only, opt);
        if (complex->parsed()) return run_complex(doc, opt);
        return run_oracle(doc, oracle_name, max_len, random_trials, opt);
    } catch (const spheres::ParseError& e) {
        std::cerr << "error: " << e.what() << " [" << e.code << "]\n";
        return kExitBadInput;
    } catch (const spheres::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const spheres::WeightOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const spheres::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
