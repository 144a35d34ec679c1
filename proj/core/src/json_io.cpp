#include "waring/json_io.hpp"

#include <json.hpp>

#include "waring/parse.hpp"

namespace waring {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered rational_node(const Rational& r) { return ordered(r.str()); }

ordered coords_node(const std::vector<Rational>& v) {
    ordered arr = ordered::array();
    for (const auto& c : v) arr.push_back(c.str());
    return arr;
}

ordered decomposition_node(const Decomposition& d) {
    ordered arr = ordered::array();
    for (const auto& t : d.terms()) {
        ordered term;
        term["coeff"] = t.coeff.str();
        term["linear"] = coords_node(t.linear.coeffs());
        arr.push_back(std::move(term));
    }
    return arr;
}

ordered certificate_node(const RankCertificate& c, std::size_t x_vars) {
    ordered node;
    node["lower"] = c.lower;
    node["upper"] = c.upper;
    if (c.exact)
        node["exact"] = *c.exact;
    else
        node["exact"] = nullptr;
    node["method"] = to_string(c.method);
    if (c.witness)
        node["witness"] = decomposition_node(*c.witness);
    else
        node["witness"] = nullptr;
    if (c.apolar_pair) {
        ordered pair = ordered::array();
        pair.push_back(print_form(c.apolar_pair->first, x_vars));
        pair.push_back(print_form(c.apolar_pair->second, x_vars));
        node["apolar_pair"] = std::move(pair);
    } else {
        node["apolar_pair"] = nullptr;
    }
    return node;
}

ordered point_set_node(const PointSet& z) {
    ordered node;
    node["ambient_dim"] = z.ambient_dim();
    ordered pts = ordered::array();
    for (const auto& p : z.points()) pts.push_back(coords_node(p.coords()));
    node["points"] = std::move(pts);
    return node;
}

ordered verdict_node(const LemmaVerdict& v) {
    ordered node;
    node["lemma"] = v.lemma;
    ordered hyps = ordered::array();
    for (const auto& h : v.hypotheses) {
        ordered hn;
        hn["name"] = h.name;
        hn["holds"] = h.holds;
        hn["detail"] = h.detail;
        hyps.push_back(std::move(hn));
    }
    node["hypotheses"] = std::move(hyps);
    node["hypotheses_met"] = v.hypotheses_met;
    if (v.conclusion_holds)
        node["conclusion_holds"] = *v.conclusion_holds;
    else
        node["conclusion_holds"] = nullptr;
    ordered data;
    for (const auto& [k, val] : v.data) data[k] = val;
    node["data"] = std::move(data);
    return node;
}

Rational rational_from_node(const json& node) {
    if (!node.is_string()) throw std::invalid_argument("expected a rational string");
    return Rational::from_string(node.get<std::string>());
}

PointSet point_set_from_node(const json& node) {
    if (!node.is_object() || !node.contains("ambient_dim") || !node.contains("points"))
        throw std::invalid_argument("point set needs ambient_dim and points");
    const std::size_t ambient = node.at("ambient_dim").get<std::size_t>();
    std::vector<ProjPoint> pts;
    for (const auto& p : node.at("points")) {
        std::vector<Rational> coords;
        for (const auto& c : p) coords.push_back(rational_from_node(c));
        if (coords.size() != ambient + 1)
            throw std::invalid_argument("point has wrong coordinate count");
        pts.emplace_back(std::move(coords));
    }
    return PointSet(ambient, std::move(pts));
}

LinearSubspace subspace_from_node(const json& node, std::size_t ambient) {
    if (!node.is_object() || !node.contains("equations"))
        throw std::invalid_argument("subspace needs equations");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : node.at("equations")) {
        std::vector<Rational> row;
        for (const auto& c : r) row.push_back(rational_from_node(c));
        if (row.size() != ambient + 1)
            throw std::invalid_argument("equation has wrong coordinate count");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("subspace needs at least one equation");
    LinearSubspace s;
    s.ambient_dim = ambient;
    s.equations = MatrixQ::from_rows(rows);
    return s;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

}  // namespace

std::string to_json(const Rational& r) { return rational_node(r).dump(); }

std::string to_json(const Form& f, std::size_t x_vars) {
    return ordered(print_form(f, x_vars)).dump();
}

std::string to_json(const Decomposition& d) { return decomposition_node(d).dump(); }

std::string to_json(const RankCertificate& c, std::size_t x_vars) {
    return certificate_node(c, x_vars).dump();
}

std::string to_json(const PointSet& z) { return point_set_node(z).dump(); }

std::string to_json(const LinearSubspace& s) {
    ordered node;
    ordered rows = ordered::array();
    for (std::size_t i = 0; i < s.equations.rows(); ++i)
        rows.push_back(coords_node(s.equations.row(i)));
    node["equations"] = std::move(rows);
    return node.dump();
}

std::string to_json(const LemmaVerdict& v) { return verdict_node(v).dump(); }

std::string to_json(const SacReport& r, const VariableSplit& split) {
    ordered node;
    node["rank_F"] = certificate_node(r.rank_f, split.x_vars);
    node["rank_G"] = certificate_node(r.rank_g, 0);  // y-block names
    if (r.certified_sum_rank)
        node["certified_sum_rank"] = *r.certified_sum_rank;
    else
        node["certified_sum_rank"] = nullptr;
    node["path"] = to_string(r.path);
    ordered paths = ordered::array();
    for (const SacPath p : r.applicable_paths) paths.push_back(to_string(p));
    node["applicable_paths"] = std::move(paths);
    node["sum_lower"] = r.sum_lower;
    node["sum_upper"] = r.sum_upper;
    ordered checks = ordered::array();
    for (const auto& c : r.consistency) {
        ordered cn;
        cn["name"] = c.name;
        cn["holds"] = c.holds;
        cn["detail"] = c.detail;
        checks.push_back(std::move(cn));
    }
    node["consistency"] = std::move(checks);
    node["all_consistent"] = r.all_consistent();
    return node.dump();
}

std::string to_json(const SacInstance& inst) {
    ordered node;
    node["degree"] = inst.f.degree();
    node["seed"] = inst.seed;
    node["split"] = {{"x_vars", inst.split.x_vars}, {"y_vars", inst.split.y_vars}};
    node["F"] = print_form(inst.f, inst.split.x_vars);
    node["G"] = print_form(inst.g, inst.split.x_vars);
    node["rank_F"] = inst.rank_f;
    node["rank_G"] = inst.rank_g;
    node["witness_F"] = decomposition_node(inst.witness_f);
    node["witness_G"] = decomposition_node(inst.witness_g);
    return node.dump();
}

std::string to_json(const CelineConfig& cfg) {
    ordered node;
    node["u"] = cfg.u;
    node["W"] = point_set_node(cfg.w);
    node["seed"] = cfg.seed;
    return node.dump();
}

std::string to_json(const ResidConfig& cfg) {
    ordered node;
    node["u"] = cfg.u;
    ordered r;
    ordered rows = ordered::array();
    for (std::size_t i = 0; i < cfg.r.equations.rows(); ++i)
        rows.push_back(coords_node(cfg.r.equations.row(i)));
    r["equations"] = std::move(rows);
    node["R"] = std::move(r);
    node["W1"] = point_set_node(cfg.w1);
    node["W2"] = point_set_node(cfg.w2);
    node["seed"] = cfg.seed;
    return node.dump();
}

std::string to_json(const SkewConfig& cfg) {
    ordered node;
    node["i"] = cfg.i;
    node["ZF"] = point_set_node(cfg.zf);
    node["ZG"] = point_set_node(cfg.zg);
    node["seed"] = cfg.seed;
    return node.dump();
}

std::string to_json(const Add2Config& cfg) {
    ordered node;
    node["d"] = cfg.d;
    node["ZF"] = point_set_node(cfg.zf);
    node["ZG"] = point_set_node(cfg.zg);
    node["ZH"] = point_set_node(cfg.zh);
    node["seed"] = cfg.seed;
    return node.dump();
}

PointSet point_set_from_json(const std::string& text) {
    return point_set_from_node(parse_json(text));
}

CelineConfig celine_config_from_json(const std::string& text) {
    const json j = parse_json(text);
    CelineConfig cfg;
    if (!j.contains("u") || !j.contains("W"))
        throw std::invalid_argument("celine config needs u and W");
    cfg.u = j.at("u").get<int>();
    cfg.w = point_set_from_node(j.at("W"));
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

ResidConfig resid_config_from_json(const std::string& text) {
    const json j = parse_json(text);
    ResidConfig cfg;
    if (!j.contains("u") || !j.contains("R") || !j.contains("W1") || !j.contains("W2"))
        throw std::invalid_argument("resid config needs u, R, W1, W2");
    cfg.u = j.at("u").get<int>();
    cfg.w1 = point_set_from_node(j.at("W1"));
    cfg.w2 = point_set_from_node(j.at("W2"));
    cfg.r = subspace_from_node(j.at("R"), cfg.w1.ambient_dim());
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

SkewConfig skew_config_from_json(const std::string& text) {
    const json j = parse_json(text);
    SkewConfig cfg;
    if (!j.contains("i") || !j.contains("ZF") || !j.contains("ZG"))
        throw std::invalid_argument("skew config needs i, ZF, ZG");
    cfg.i = j.at("i").get<int>();
    cfg.zf = point_set_from_node(j.at("ZF"));
    cfg.zg = point_set_from_node(j.at("ZG"));
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

Add2Config add2_config_from_json(const std::string& text) {
    const json j = parse_json(text);
    Add2Config cfg;
    if (!j.contains("d") || !j.contains("ZF") || !j.contains("ZG") || !j.contains("ZH"))
        throw std::invalid_argument("add2 config needs d, ZF, ZG, ZH");
    cfg.d = j.at("d").get<int>();
    cfg.zf = point_set_from_node(j.at("ZF"));
    cfg.zg = point_set_from_node(j.at("ZG"));
    cfg.zh = point_set_from_node(j.at("ZH"));
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

}  // namespace waring
