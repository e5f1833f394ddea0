#include "xifn/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace xifn {

namespace {

using nlohmann::json;

std::string sheet_name(Sheet s) { return s == Sheet::Base ? "base" : "reflected"; }

Sheet parse_sheet(const std::string& s) {
    if (s == "base") return Sheet::Base;
    if (s == "reflected") return Sheet::Reflected;
    throw SchemaError("bad sheet tag '" + s + "'");
}

std::string cab_str(const std::array<i64, 3>& cab, Sheet sheet) {
    std::ostringstream os;
    os << "[" << cab[0] << "," << cab[1] << "," << cab[2] << "]/" << sheet_name(sheet);
    return os.str();
}

json vector_to_json(Algebra alg, Family fam, i64 M, const char* kind,
                    const std::vector<Complex>& values,
                    const std::vector<std::array<i64, 3>>& cabs, const std::vector<Sheet>& sheets) {
    if (values.size() != cabs.size())
        throw std::invalid_argument(std::string("cannot serialize ") + kind + ": " +
                                    std::to_string(values.size()) + " values for " +
                                    std::to_string(cabs.size()) + " points");
    json entries = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
        entries.push_back({{"cab", cabs[i]},
                           {"sheet", sheet_name(sheets[i])},
                           {"re", values[i].real()},
                           {"im", values[i].imag()}});
    }
    return json{{"algebra", to_string(alg)},
                {"family", to_string(fam)},
                {"M", M},
                {"kind", kind},
                {"entries", entries}};
}

struct Header {
    Algebra alg;
    Family fam;
    i64 M;
};

Header parse_header(const json& j, const char* expected_kind) {
    for (const char* key : {"algebra", "family", "M", "kind", "entries"})
        if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    if (j.at("kind").get<std::string>() != expected_kind)
        throw SchemaError("file kind is '" + j.at("kind").get<std::string>() + "', expected '" +
                          expected_kind + "'");
    return {parse_algebra(j.at("algebra").get<std::string>()),
            parse_family(j.at("family").get<std::string>()), j.at("M").get<i64>()};
}

// Align entries keyed by (cab, sheet) with the canonical point ordering.
std::vector<Complex> align_entries(const json& j,
                                   const std::vector<std::array<i64, 3>>& cabs,
                                   const std::vector<Sheet>& sheets, const char* what) {
    std::map<std::pair<std::array<i64, 3>, Sheet>, Complex> byKey;
    for (const json& e : j.at("entries")) {
        if (!e.contains("cab") || !e.contains("re") || !e.contains("im"))
            throw SchemaError("entry missing cab/re/im");
        std::array<i64, 3> cab = e.at("cab").get<std::array<i64, 3>>();
        Sheet sheet = e.contains("sheet") ? parse_sheet(e.at("sheet").get<std::string>())
                                          : Sheet::Base;
        auto key = std::make_pair(cab, sheet);
        if (byKey.count(key))
            throw SchemaError(std::string(what) + ": duplicate entry " + cab_str(cab, sheet));
        byKey[key] = Complex(e.at("re").get<double>(), e.at("im").get<double>());
    }

    std::vector<Complex> values(cabs.size());
    std::string missing;
    for (std::size_t i = 0; i < cabs.size(); ++i) {
        auto it = byKey.find({cabs[i], sheets[i]});
        if (it == byKey.end()) {
            if (!missing.empty()) missing += ", ";
            missing += cab_str(cabs[i], sheets[i]);
            continue;
        }
        values[i] = it->second;
        byKey.erase(it);
    }
    if (!missing.empty())
        throw SchemaError(std::string(what) + ": missing entries for " + missing);
    if (!byKey.empty())
        throw SchemaError(std::string(what) + ": " + std::to_string(byKey.size()) +
                          " entries do not belong to the set (first: " +
                          cab_str(byKey.begin()->first.first, byKey.begin()->first.second) + ")");
    return values;
}

}  // namespace

nlohmann::json to_json(const SampleVector& v) {
    auto grid = grid_points(v.alg, v.fam, v.M);
    std::vector<std::array<i64, 3>> cabs;
    std::vector<Sheet> sheets;
    for (const GridPoint& g : grid) {
        cabs.push_back(g.cab);
        sheets.push_back(g.sheet);
    }
    return vector_to_json(v.alg, v.fam, v.M, "samples", v.values, cabs, sheets);
}

nlohmann::json to_json(const CoeffVector& v) {
    auto weights = weight_points(v.alg, v.fam, v.M);
    std::vector<std::array<i64, 3>> cabs;
    std::vector<Sheet> sheets;
    for (const WeightPoint& w : weights) {
        cabs.push_back(w.cab);
        sheets.push_back(w.sheet);
    }
    return vector_to_json(v.alg, v.fam, v.M, "coefficients", v.values, cabs, sheets);
}

SampleVector sample_from_json(const nlohmann::json& j) {
    Header h = parse_header(j, "samples");
    auto grid = grid_points(h.alg, h.fam, h.M);
    std::vector<std::array<i64, 3>> cabs;
    std::vector<Sheet> sheets;
    for (const GridPoint& g : grid) {
        cabs.push_back(g.cab);
        sheets.push_back(g.sheet);
    }
    return {h.alg, h.fam, h.M, align_entries(j, cabs, sheets, "sample vector")};
}

CoeffVector coeff_from_json(const nlohmann::json& j) {
    Header h = parse_header(j, "coefficients");
    auto weights = weight_points(h.alg, h.fam, h.M);
    std::vector<std::array<i64, 3>> cabs;
    std::vector<Sheet> sheets;
    for (const WeightPoint& w : weights) {
        cabs.push_back(w.cab);
        sheets.push_back(w.sheet);
    }
    return {h.alg, h.fam, h.M, align_entries(j, cabs, sheets, "coefficient vector")};
}

nlohmann::json grid_to_json(Algebra kind, Family fam, i64 M) {
    using nlohmann::json;
    json grid = json::array();
    for (const GridPoint& g : grid_points(kind, fam, M)) {
        i64 den = M * root_data(kind).det_cartan;
        Vec2q scaled = Rat(den) * g.alphavee;
        grid.push_back({{"cab", g.cab},
                        {"sheet", sheet_name(g.sheet)},
                        {"coords", {{"num", {scaled.x.numerator(), scaled.y.numerator()}},
                                    {"den", den}}}});
    }
    json weights = json::array();
    for (const WeightPoint& w : weight_points(kind, fam, M))
        weights.push_back({{"cab", w.cab},
                           {"sheet", sheet_name(w.sheet)},
                           {"omega", {w.omega.x, w.omega.y}}});
    return json{{"algebra", to_string(kind)}, {"family", to_string(fam)}, {"M", M},
                {"grid", grid},             {"weights", weights}};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path.string());
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace xifn
