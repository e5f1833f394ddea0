#include "xifn/cli.hpp"

#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "xifn/io.hpp"

namespace xifn::cli {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string fmt_err(double e) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << e;
    return os.str();
}

std::string cab_str(const std::array<i64, 3>& cab) {
    return "[" + std::to_string(cab[0]) + "," + std::to_string(cab[1]) + "," +
           std::to_string(cab[2]) + "]";
}

}  // namespace

std::string sample_csv(Algebra kind, Family fam, const Vec2i& weight, int resolution) {
    if (resolution < 2) throw std::invalid_argument("sample: resolution must be >= 2");
    const auto tris = family_triangles(kind, fam);

    Rat xmin = tris[0][0].x, xmax = xmin, ymin = tris[0][0].y, ymax = ymin;
    for (const auto& tri : tris)
        for (const Vec2q& v : tri) {
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y);
            ymax = std::max(ymax, v.y);
        }

    std::ostringstream os;
    os << "x,y,re,im,mask\n";
    const i64 steps = resolution - 1;
    for (int iy = 0; iy < resolution; ++iy) {
        Rat y = ymin + Rat(iy, steps) * (ymax - ymin);
        for (int ix = 0; ix < resolution; ++ix) {
            Rat x = xmin + Rat(ix, steps) * (xmax - xmin);
            const Vec2q p{x, y};
            Complex v = xi(fam, weight, EvalPoint::rational(p), kind);
            int mask = domain_membership(p, kind, fam) != Membership::Outside ? 1 : 0;
            os << fmt(to_double(x)) << "," << fmt(to_double(y)) << "," << fmt(v.real()) << ","
               << fmt(v.imag()) << "," << mask << "\n";
        }
    }
    return os.str();
}

TablesReport make_tables_report(Algebra kind, i64 M) {
    if (M < 1) throw std::invalid_argument("tables: M must be >= 1");
    const WeylSystem& sys = weyl_system(kind);
    TablesReport rep;
    std::ostringstream os;
    nlohmann::json jrows = nlohmann::json::array();
    os << "tables " << to_string(kind) << " M=" << M << "\n";

    auto emit = [&](const std::string& what, const std::string& pattern,
                    const std::array<i64, 3>& got, const std::array<i64, 3>& want, i64 count) {
        bool ok = got == want;
        rep.pass = rep.pass && ok;
        os << what << "  " << pattern << ": e=" << got[0] << " s=" << got[1] << " l=" << got[2]
           << "  expected " << want[0] << "/" << want[1] << "/" << want[2];
        if (count >= 0) os << "  (n=" << count << ")";
        os << "  " << (ok ? "PASS" : "FAIL") << "\n";
        jrows.push_back({{"table", what},
                         {"pattern", pattern},
                         {"computed", got},
                         {"expected", want},
                         {"instances", count},
                         {"pass", ok}});
    };

    // Table 1 is M-independent; fixed instances per weight pattern.
    const std::vector<Vec2i> t1_instances[4] = {
        {{1, 1}, {2, 3}, {5, 2}}, {{1, 0}, {2, 0}, {4, 0}}, {{0, 1}, {0, 3}, {0, 5}}, {{0, 0}}};
    for (int pat = 0; pat < 4; ++pat) {
        std::array<i64, 3> got{-1, -1, -1}, want{};
        bool consistent = true;
        for (int s = 0; s < 3; ++s) {
            want[s] = table1_d(kind, pat, static_cast<SubgroupLabel>(s));
            for (const Vec2i& la : t1_instances[pat]) {
                i64 v = stab_order_d(sys.kernels[s], la);
                if (got[s] == -1) got[s] = v;
                consistent = consistent && got[s] == v;
            }
        }
        rep.pass = rep.pass && consistent;
        emit("d  ", weight_pattern_name(pat), got, want,
             static_cast<i64>(t1_instances[pat].size()));
    }

    // Table 2 over the actual F_M / Lambda_M points, grouped by pattern.
    std::map<int, std::pair<std::array<i64, 3>, i64>> eps_rows, h_rows;  // pattern -> (vals, n)
    bool consistent = true;
    for (const GridPoint& g : plain_grid(kind, M)) {
        std::array<i64, 3> v{};
        for (int s = 0; s < 3; ++s)
            v[s] = orbit_size_torus(sys.kernels[s], TorusPoint::reduce(g.alphavee));
        auto [it, fresh] = eps_rows.try_emplace(cab_pattern(g.cab), std::make_pair(v, i64(0)));
        if (!fresh && it->second.first != v) consistent = false;
        it->second.second++;
    }
    for (const WeightPoint& w : plain_weights(kind, M)) {
        std::array<i64, 3> v{};
        for (int s = 0; s < 3; ++s) v[s] = stab_order_h(sys.kernels[s], w.omega, M, *sys.data);
        auto [it, fresh] = h_rows.try_emplace(cab_pattern(w.cab), std::make_pair(v, i64(0)));
        if (!fresh && it->second.first != v) consistent = false;
        it->second.second++;
    }
    rep.pass = rep.pass && consistent;
    for (const auto& [pat, row] : eps_rows) {
        std::array<i64, 3> want{};
        for (int s = 0; s < 3; ++s) want[s] = table2_eps(kind, pat, static_cast<SubgroupLabel>(s));
        emit("eps", cab_pattern_name(pat), row.first, want, row.second);
    }
    for (const auto& [pat, row] : h_rows) {
        std::array<i64, 3> want{};
        for (int s = 0; s < 3; ++s) want[s] = table2_h(kind, pat, static_cast<SubgroupLabel>(s));
        emit("h  ", cab_pattern_name(pat), row.first, want, row.second);
    }

    nlohmann::json jexcl;
    {
        std::ostringstream ex;
        auto ge = grid_exclusions(kind, Family::EMinus, M);
        auto we = weight_exclusions(kind, Family::EMinus, M);
        ex << "e- grid exclusions:";
        for (const auto& c : ge) ex << " " << cab_str(c);
        ex << "\ne- weight exclusions:";
        for (const auto& c : we) ex << " " << cab_str(c);
        os << ex.str() << "\n";
        jexcl = {{"grid", ge}, {"weights", we}};
    }
    os << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";

    // the JSON form also carries the exact grid/weight sets per family
    nlohmann::json sets = nlohmann::json::object();
    for (Family fam : kAllFamilies) sets[to_string(fam)] = grid_to_json(kind, fam, M);

    rep.text = os.str();
    rep.json = {{"algebra", to_string(kind)}, {"M", M},          {"rows", jrows},
                {"e-_exclusions", jexcl},     {"sets", sets},    {"pass", rep.pass}};
    return rep;
}

VerifyReport run_verify(const CheckOptions& opt, const std::string& suite) {
    using Runner = std::vector<CheckResult> (*)(const CheckOptions&);
    struct Entry {
        const char* name;
        Runner run;
    };
    static const Entry entries[] = {
        {"constants", [](const CheckOptions&) { return check_constants(); }},
        {"group", check_group_axioms},
        {"tables", check_tables},
        {"sizes", check_set_sizes},
        {"closed-forms", check_closed_forms},
        {"identities", check_sum_identities},
        {"invariance", check_invariances},
        {"zeros", check_boundary_zeros},
        {"continuous", check_continuous_orthogonality},
        {"discrete", check_discrete_orthogonality},
        {"transforms", check_transform_roundtrips},
        {"products", check_products},
    };

    bool matched = false;
    VerifyReport rep;
    std::ostringstream os;
    int total = 0, failed = 0;
    for (const Entry& e : entries) {
        if (suite != "all" && suite != e.name) continue;
        matched = true;
        for (const CheckResult& r : e.run(opt)) {
            const char* tag = r.info_only ? "INFO" : (r.pass ? "PASS" : "FAIL");
            os << "[" << tag << "] " << r.name;
            if (r.max_err > 0.0) os << "  max_err=" << fmt_err(r.max_err);
            if (!r.detail.empty()) os << "  (" << r.detail << ")";
            os << "\n";
            if (!r.info_only) {
                ++total;
                if (!r.pass) ++failed;
            } else if (!r.pass) {
                // an INFO finding that fails its own sanity condition is a failure
                ++total;
                ++failed;
            }
        }
    }
    if (!matched)
        throw std::invalid_argument(
            "unknown suite '" + suite +
            "' (expected all, constants, group, tables, sizes, closed-forms, identities, "
            "invariance, zeros, continuous, discrete, transforms or products)");
    rep.pass = failed == 0;
    os << "summary: " << total << " checks, " << (total - failed) << " passed, " << failed
       << " failed\n";
    rep.text = os.str();
    return rep;
}

std::string decompose_text(Family left, Family right, const Vec2i& la, const Vec2i& lb,
                           const SignedWeightSum& sum, double check_err) {
    std::ostringstream os;
    auto weight_str = [](const Vec2i& w) {
        return "(" + std::to_string(w.x) + "," + std::to_string(w.y) + ")";
    };
    os << "Xi[" << to_string(left) << "]_" << weight_str(la) << " * Xi[" << to_string(right)
       << "]_" << weight_str(lb) << " =";
    for (std::size_t i = 0; i < sum.terms.size(); ++i) {
        const SignedWeightTerm& t = sum.terms[i];
        os << " " << (t.sign > 0 ? "+" : "-") << " Xi[" << to_string(sum.target) << "]_"
           << weight_str(t.weight);
    }
    os << "   (numeric check max error " << fmt_err(check_err) << ")";
    return os.str();
}

nlohmann::json decompose_json(Algebra kind, Family left, Family right, const Vec2i& la,
                              const Vec2i& lb, const SignedWeightSum& sum, double check_err) {
    nlohmann::json terms = nlohmann::json::array();
    for (const SignedWeightTerm& t : sum.terms)
        terms.push_back({{"sign", t.sign}, {"weight", {t.weight.x, t.weight.y}}});
    return {{"algebra", to_string(kind)},
            {"left", {{"family", to_string(left)}, {"weight", {la.x, la.y}}}},
            {"right", {{"family", to_string(right)}, {"weight", {lb.x, lb.y}}}},
            {"target_family", to_string(sum.target)},
            {"terms", terms},
            {"check_max_error", check_err}};
}

namespace {

Vec2i parse_weight_arg(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("weight must be given as a,b (got '" + s + "')");
    try {
        return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("weight must be two integers a,b (got '" + s + "')");
    }
}

void emit(const std::string& out, const std::string& contents) {
    if (out.empty())
        std::cout << contents;
    else
        write_file(out, contents);
}

struct TransformFlags {
    std::string input, out, direction = "forward";
    bool roundtrip = false;
    std::string algebra, family;
    i64 M = 0;
    std::uint64_t seed = 1;
};

int cmd_transform(const TransformFlags& f) {
    nlohmann::json parsed;
    bool have_input = !f.input.empty();
    if (have_input) {
        try {
            parsed = nlohmann::json::parse(read_file(f.input));
        } catch (const nlohmann::json::parse_error& e) {
            throw SchemaError(std::string("input is not valid JSON: ") + e.what());
        }
        // refuse mismatched explicit flags
        if (!f.algebra.empty() && parsed.contains("algebra") &&
            parsed["algebra"].get<std::string>() != f.algebra)
            throw std::invalid_argument("--algebra " + f.algebra +
                                        " does not match the input file (" +
                                        parsed["algebra"].get<std::string>() + ")");
        if (!f.family.empty() && parsed.contains("family") &&
            parsed["family"].get<std::string>() != f.family)
            throw std::invalid_argument("--family " + f.family +
                                        " does not match the input file (" +
                                        parsed["family"].get<std::string>() + ")");
        if (f.M != 0 && parsed.contains("M") && parsed["M"].get<i64>() != f.M)
            throw std::invalid_argument("--M " + std::to_string(f.M) +
                                        " does not match the input file (M=" +
                                        std::to_string(parsed["M"].get<i64>()) + ")");
    }

    if (f.roundtrip) {
        SampleVector samples{Algebra::C2, Family::SPlus, 4, {}};
        if (have_input) {
            samples = sample_from_json(parsed);
        } else {
            if (f.algebra.empty() || f.family.empty() || f.M == 0)
                throw std::invalid_argument(
                    "--roundtrip without --input needs --algebra, --family and --M "
                    "to synthesize random data");
            samples.alg = parse_algebra(f.algebra);
            samples.fam = parse_family(f.family);
            samples.M = f.M;
            std::mt19937_64 rng(f.seed);
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::size_t n = grid_points(samples.alg, samples.fam, samples.M).size();
            for (std::size_t i = 0; i < n; ++i) samples.values.push_back({gauss(rng), gauss(rng)});
        }
        DiscreteSetup setup = make_discrete_setup(samples.alg, samples.fam, samples.M);
        SampleVector back = inverse_discrete(forward_discrete(samples, setup), setup);
        double err = 0.0;
        for (std::size_t i = 0; i < samples.values.size(); ++i)
            err = std::max(err, std::abs(back.values[i] - samples.values[i]));
        std::cout << "roundtrip " << to_string(samples.alg) << " " << to_string(samples.fam)
                  << " M=" << samples.M << ": max reconstruction error " << fmt_err(err) << "\n";
        if (!f.out.empty()) write_file(f.out, to_json(back).dump(2) + "\n");
        return kExitOk;
    }

    if (!have_input) throw std::invalid_argument("transform needs --input (or --roundtrip)");
    if (f.direction == "forward") {
        CoeffVector c = forward_discrete(sample_from_json(parsed));
        emit(f.out, to_json(c).dump(2) + "\n");
    } else if (f.direction == "inverse") {
        SampleVector s = inverse_discrete(coeff_from_json(parsed));
        emit(f.out, to_json(s).dump(2) + "\n");
    } else {
        throw std::invalid_argument("--direction must be forward or inverse (got '" +
                                    f.direction + "')");
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Generalized E-function (Xi-function) families of C2 and G2"};
    app.require_subcommand(1);

    std::string algebra = "c2", family = "s+", family2, format = "csv", out, input;
    std::string weight_s = "1,0", weight2_s = "0,0", direction = "forward", suite = "all";
    i64 M = 0;
    int resolution = 64;
    std::uint64_t seed = 1;
    bool roundtrip = false;
    double tol_identity = 1e-10, tol_gram = 1e-8;

    auto* sample = app.add_subcommand("sample", "sample one Xi function as masked CSV");
    sample->add_option("--algebra", algebra, "c2 or g2");
    sample->add_option("--family", family, "e+, e-, s+, s-, l+ or l-");
    sample->add_option("--weight", weight_s, "weight a,b in omega-coordinates");
    sample->add_option("--resolution", resolution, "points per axis (>= 2)");
    sample->add_option("--out", out, "output path (default stdout)");

    auto* tables = app.add_subcommand("tables", "recompute the stabilizer/orbit tables");
    tables->add_option("--algebra", algebra, "c2 or g2");
    tables->add_option("--M", M, "grid density for the torus tables")->required();
    tables->add_option("--format", format, "csv|text or json");
    tables->add_option("--out", out, "output path (default stdout)");

    auto* transform = app.add_subcommand("transform", "discrete Xi transform of a JSON vector");
    std::string t_algebra, t_family;
    transform->add_option("--input", input, "input JSON (SampleVector or CoeffVector)");
    transform->add_option("--direction", direction, "forward or inverse");
    transform->add_option("--out", out, "output path (default stdout)");
    transform->add_flag("--roundtrip", roundtrip, "forward then inverse, report max error");
    transform->add_option("--algebra", t_algebra, "expected algebra (checked against the file)");
    transform->add_option("--family", t_family, "expected family (checked against the file)");
    transform->add_option("--M", M, "expected M (checked against the file)");
    transform->add_option("--seed", seed, "seed for synthesized roundtrip data");

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite, "all or one suite name");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--M", M, "largest grid density (default 8)");
    verify->add_option("--tol-identity", tol_identity, "identity-check tolerance");
    verify->add_option("--tol-gram", tol_gram, "relative Gram tolerance");
    std::string v_algebra = "both";
    verify->add_option("--algebra", v_algebra, "both (default), c2 or g2");
    verify->add_option("--out", out, "also write the report here");

    auto* decompose_cmd = app.add_subcommand("decompose", "product decomposition of two Xi's");
    decompose_cmd->add_option("--algebra", algebra, "c2 or g2");
    decompose_cmd->add_option("--family", family, "left factor family");
    decompose_cmd->add_option("--family2", family2, "right factor family (default: --family)");
    decompose_cmd->add_option("--weight", weight_s, "left weight a,b");
    decompose_cmd->add_option("--weight2", weight2_s, "right weight a,b");
    decompose_cmd->add_option("--format", format, "text or json");
    decompose_cmd->add_option("--out", out, "output path (default stdout)");
    decompose_cmd->add_option("--seed", seed, "seed for the numeric check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sample->parsed()) {
            Algebra kind = parse_algebra(algebra);
            emit(out, sample_csv(kind, parse_family(family), parse_weight_arg(weight_s),
                                 resolution));
            return kExitOk;
        }
        if (tables->parsed()) {
            TablesReport rep = make_tables_report(parse_algebra(algebra), M);
            emit(out, format == "json" ? rep.json.dump(2) + "\n" : rep.text);
            return rep.pass ? kExitOk : kExitVerifyFailed;
        }
        if (transform->parsed()) {
            TransformFlags f;
            f.input = input;
            f.out = out;
            f.direction = direction;
            f.roundtrip = roundtrip;
            f.algebra = t_algebra;
            f.family = t_family;
            f.M = M;
            f.seed = seed;
            return cmd_transform(f);
        }
        if (verify->parsed()) {
            CheckOptions opt;
            opt.seed = seed;
            opt.tol_identity = tol_identity;
            opt.tol_gram = tol_gram;
            if (M > 0) {
                opt.m_max_discrete = M;
                opt.m_max_roundtrip = M;
            }
            if (v_algebra != "both") opt.only_algebra = parse_algebra(v_algebra);
            VerifyReport rep = run_verify(opt, suite);
            std::cout << rep.text;
            if (!out.empty()) write_file(out, rep.text);
            return rep.pass ? kExitOk : kExitVerifyFailed;
        }
        if (decompose_cmd->parsed()) {
            Algebra kind = parse_algebra(algebra);
            Family left = parse_family(family);
            Family right = family2.empty() ? left : parse_family(family2);
            Vec2i la = parse_weight_arg(weight_s), lb = parse_weight_arg(weight2_s);
            SignedWeightSum sum = decompose(left, right, la, lb, kind);
            double err = verify_decomposition(sum, left, right, la, lb, kind, 50, seed);
            std::string text = decompose_text(left, right, la, lb, sum, err) + "\n";
            nlohmann::json j = decompose_json(kind, left, right, la, lb, sum, err);
            if (format == "json")
                emit(out, j.dump(2) + "\n");
            else
                emit(out, text + j.dump(2) + "\n");
            return kExitOk;
        }
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace xifn::cli
