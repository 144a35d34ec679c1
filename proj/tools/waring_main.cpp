#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "waring/apolarity.hpp"
#include "waring/instances.hpp"
#include "waring/json_io.hpp"
#include "waring/lemmas.hpp"
#include "waring/parse.hpp"
#include "waring/points.hpp"
#include "waring/rank.hpp"
#include "waring/sac.hpp"

namespace {

using namespace waring;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string linear_text(const LinearForm& l, std::size_t x_vars) {
    Form f(l.num_vars(), 1);
    for (std::size_t i = 0; i < l.num_vars(); ++i) {
        Monomial m{std::vector<int>(l.num_vars(), 0)};
        m.exponents[i] = 1;
        f.add_term(m, l.coeff(i));
    }
    return print_form(f, x_vars);
}

std::string decomposition_text(const Decomposition& d, std::size_t x_vars,
                               const std::string& indent) {
    std::ostringstream out;
    for (const auto& t : d.terms())
        out << indent << t.coeff.str() << " * (" << linear_text(t.linear, x_vars) << ")^"
            << d.degree() << "\n";
    return out.str();
}

std::string certificate_text(const RankCertificate& c, std::size_t x_vars,
                             const std::string& indent = "") {
    std::ostringstream out;
    out << indent << "lower bound: " << c.lower << "\n";
    out << indent << "upper bound: " << c.upper << "\n";
    out << indent << "exact rank:  "
        << (c.exact ? std::to_string(*c.exact) : std::string("not determined")) << "\n";
    out << indent << "method:      " << to_string(c.method) << "\n";
    if (c.witness) {
        out << indent << "witness (" << c.witness->size() << " powers):\n"
            << decomposition_text(*c.witness, x_vars, indent + "  ");
    }
    if (c.apolar_pair) {
        out << indent << "apolar generators: " << print_form(c.apolar_pair->first, x_vars)
            << "  ;  " << print_form(c.apolar_pair->second, x_vars) << "\n";
    }
    return out.str();
}

std::string verdict_text(const LemmaVerdict& v) {
    std::ostringstream out;
    out << "lemma: " << v.lemma << "\n";
    for (const auto& h : v.hypotheses) {
        out << "  [" << (h.holds ? "ok" : "--") << "] " << h.name;
        if (!h.detail.empty()) out << "  (" << h.detail << ")";
        out << "\n";
    }
    out << "hypotheses met: " << (v.hypotheses_met ? "yes" : "no") << "\n";
    if (v.conclusion_holds)
        out << "conclusion: " << (*v.conclusion_holds ? "holds" : "VIOLATED") << "\n";
    else
        out << "conclusion: not evaluated (hypotheses not met)\n";
    for (const auto& [k, val] : v.data) out << "  " << k << ": " << val << "\n";
    return out.str();
}

std::string report_text(const SacReport& r, const VariableSplit& split) {
    std::ostringstream out;
    out << "rank of F:\n" << certificate_text(r.rank_f, split.x_vars, "  ");
    out << "rank of G:\n" << certificate_text(r.rank_g, 0, "  ");
    out << "path: " << to_string(r.path) << "\n";
    out << "applicable paths:";
    if (r.applicable_paths.empty()) out << " none";
    for (const SacPath p : r.applicable_paths) out << " " << to_string(p);
    out << "\n";
    out << "certified rank of F + G: "
        << (r.certified_sum_rank ? std::to_string(*r.certified_sum_rank)
                                 : std::string("not certified"))
        << "\n";
    out << "bounds for F + G: [" << r.sum_lower << ", " << r.sum_upper << "]\n";
    for (const auto& c : r.consistency) {
        out << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
    }
    out << "all consistent: " << (r.all_consistent() ? "yes" : "NO") << "\n";
    return out.str();
}

bool is_violation(const LemmaVerdict& v) {
    return v.hypotheses_met && v.conclusion_holds && !*v.conclusion_holds;
}

int run_rank(const std::string& form_text, const std::string& format) {
    const ParsedExpression p = parse_form(form_text);
    const RankCertificate cert = certify_rank(p.form);
    if (format == "json")
        std::cout << to_json(cert, p.x_vars) << "\n";
    else
        std::cout << "form: " << print_form(p.form, p.x_vars) << "\n"
                  << certificate_text(cert, p.x_vars);
    return kExitOk;
}

int run_apolar(const std::string& form_text, int k, const std::string& format) {
    const ParsedExpression p = parse_form(form_text);
    const std::vector<Form> basis = apolar_graded_piece(p.form, k);
    if (format == "json") {
        std::ostringstream out;
        out << "{\"form\":" << to_json(p.form, p.x_vars) << ",\"degree\":" << k
            << ",\"dimension\":" << basis.size() << ",\"basis\":[";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i) out << ",";
            out << to_json(basis[i], p.x_vars);
        }
        out << "]}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "form: " << print_form(p.form, p.x_vars) << "\n"
                  << "apolar ideal, degree " << k << ": dimension " << basis.size() << "\n";
        for (const Form& b : basis) std::cout << "  " << print_form(b, p.x_vars) << "\n";
    }
    return kExitOk;
}

int run_essential(const std::string& form_text, const std::string& format) {
    const ParsedExpression p = parse_form(form_text);
    const EssentialReduction red = essential_reduction(p.form);
    const std::size_t n = red.substitution.rows();
    if (format == "json") {
        std::ostringstream out;
        out << "{\"form\":" << to_json(p.form, p.x_vars) << ",\"essential_variables\":" << n
            << ",\"reduced\":" << to_json(red.reduced, n) << ",\"substitution\":[";
        for (std::size_t i = 0; i < red.substitution.rows(); ++i) {
            if (i) out << ",";
            out << "[";
            for (std::size_t j = 0; j < red.substitution.cols(); ++j) {
                if (j) out << ",";
                out << "\"" << red.substitution.at(i, j).str() << "\"";
            }
            out << "]";
        }
        out << "]}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "form: " << print_form(p.form, p.x_vars) << "\n"
                  << "essential variables: " << n << "\n"
                  << "reduced form: " << print_form(red.reduced, n) << "\n";
        for (std::size_t i = 0; i < red.substitution.rows(); ++i)
            std::cout << "  x" << i << " <- "
                      << linear_text(LinearForm(red.substitution.row(i)), p.x_vars) << "\n";
    }
    return kExitOk;
}

int run_hilbert(const std::string& path, int t, const std::string& format) {
    const PointSet z = point_set_from_json(read_file(path));
    const std::size_t h = hilbert_function(z, t);
    const long dh = first_difference(z, t);
    const std::size_t h1 = h1_deficiency(z, t);
    if (format == "json") {
        std::ostringstream out;
        out << "{\"size\":" << z.size() << ",\"ambient_dim\":" << z.ambient_dim()
            << ",\"degree\":" << t << ",\"h\":" << h << ",\"Dh\":" << dh << ",\"h1\":" << h1
            << ",\"separated\":" << (h1 == 0 ? "true" : "false") << "}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "points: " << z.size() << " in P^" << z.ambient_dim() << "\n"
                  << "h(" << t << ") = " << h << "\n"
                  << "Dh(" << t << ") = " << dh << "\n"
                  << "h1(" << t << ") = " << h1
                  << (h1 == 0 ? "  (separated)" : "  (NOT separated)") << "\n";
    }
    return kExitOk;
}

int run_sac_check(const std::string& f_text, const std::string& g_text,
                  const std::string& format) {
    const ParsedExpression pf = parse_form(f_text);
    const ParsedExpression pg = parse_form(g_text);
    if (pf.y_vars != 0)
        throw std::invalid_argument("F must use only x-variables (found a y-variable)");
    if (pg.x_vars != 0)
        throw std::invalid_argument("G must use only y-variables (found an x-variable)");
    const VariableSplit split{pf.x_vars, pg.y_vars};
    const Form f = embed(pf.form, split.total(), 0);
    const Form g = embed(pg.form, split.total(), split.x_vars);
    const SacReport report = classify_and_certify(f, g, split);
    if (format == "json")
        std::cout << to_json(report, split) << "\n";
    else
        std::cout << report_text(report, split);
    if (!report.all_consistent()) {
        std::cerr << "violation: " << to_json(report, split) << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

struct LemmaRun {
    LemmaVerdict verdict;
    std::string config_json;
};

LemmaRun run_lemma_config(const std::string& which, const std::string& config_text) {
    if (which == "celine") {
        const CelineConfig cfg = celine_config_from_json(config_text);
        return {check_celine(cfg.w, cfg.u), to_json(cfg)};
    }
    if (which == "resid") {
        const ResidConfig cfg = resid_config_from_json(config_text);
        return {check_residue_lemma(cfg.w1, cfg.w2, cfg.r, cfg.u), to_json(cfg)};
    }
    if (which == "skew") {
        const SkewConfig cfg = skew_config_from_json(config_text);
        return {check_skew_union(cfg.zf, cfg.zg, cfg.i), to_json(cfg)};
    }
    const Add2Config cfg = add2_config_from_json(config_text);
    return {check_add2_configuration(cfg.zf, cfg.zg, cfg.zh, cfg.d), to_json(cfg)};
}

LemmaRun run_lemma_seeded(const std::string& which, std::uint64_t seed) {
    if (which == "celine") {
        const CelineConfig cfg = random_celine_config(seed);
        return {check_celine(cfg.w, cfg.u), to_json(cfg)};
    }
    if (which == "resid") {
        const ResidConfig cfg = random_resid_config(seed);
        return {check_residue_lemma(cfg.w1, cfg.w2, cfg.r, cfg.u), to_json(cfg)};
    }
    if (which == "skew") {
        const SkewConfig cfg = random_skew_config(seed);
        return {check_skew_union(cfg.zf, cfg.zg, cfg.i), to_json(cfg)};
    }
    const Add2Config cfg = random_add2_config(seed);
    return {check_add2_configuration(cfg.zf, cfg.zg, cfg.zh, cfg.d), to_json(cfg)};
}

int run_lemma(const std::string& which, const std::optional<std::string>& config_path,
              const std::optional<long>& fuzz, std::uint64_t seed, const std::string& format) {
    if (config_path) {
        const LemmaRun run = run_lemma_config(which, read_file(*config_path));
        if (format == "json")
            std::cout << to_json(run.verdict) << "\n";
        else
            std::cout << verdict_text(run.verdict);
        if (is_violation(run.verdict)) {
            std::cerr << "violation: {\"config\":" << run.config_json
                      << ",\"verdict\":" << to_json(run.verdict) << "}\n";
            return kExitViolation;
        }
        return kExitOk;
    }

    const long n = *fuzz;
    if (n < 1) throw std::invalid_argument("--fuzz needs a positive count");
    long met = 0, held = 0;
    std::vector<std::string> violations;
    for (long i = 0; i < n; ++i) {
        const LemmaRun run = run_lemma_seeded(which, mix_seed(seed, static_cast<std::uint64_t>(i)));
        if (run.verdict.hypotheses_met) {
            ++met;
            if (run.verdict.conclusion_holds && *run.verdict.conclusion_holds) ++held;
        }
        if (is_violation(run.verdict))
            violations.push_back("{\"index\":" + std::to_string(i) + ",\"config\":" +
                                 run.config_json + ",\"verdict\":" + to_json(run.verdict) + "}");
    }
    if (format == "json") {
        std::ostringstream out;
        out << "{\"lemma\":\"" << which << "\",\"total\":" << n << ",\"seed\":" << seed
            << ",\"hypotheses_met\":" << met << ",\"conclusions_held\":" << held
            << ",\"violations\":[";
        for (std::size_t i = 0; i < violations.size(); ++i) {
            if (i) out << ",";
            out << violations[i];
        }
        out << "]}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "lemma " << which << ": " << n << " seeded configurations (seed " << seed
                  << ")\n"
                  << "  hypotheses met:   " << met << "\n"
                  << "  conclusions held: " << held << "\n"
                  << "  violations:       " << violations.size() << "\n";
    }
    for (const std::string& v : violations) std::cerr << "violation: " << v << "\n";
    return violations.empty() ? kExitOk : kExitViolation;
}

int run_gen(int d, std::size_t r, std::size_t s, std::uint64_t seed, const std::string& format) {
    const SacInstance inst = random_instance(d, r, s, seed);
    if (format == "json") {
        std::cout << to_json(inst) << "\n";
    } else {
        std::cout << "degree: " << inst.f.degree() << "\n"
                  << "seed: " << inst.seed << "\n"
                  << "F = " << print_form(inst.f, inst.split.x_vars) << "  (rank " << inst.rank_f
                  << ")\n"
                  << decomposition_text(inst.witness_f, inst.split.x_vars, "  ")
                  << "G = " << print_form(inst.g, inst.split.x_vars) << "  (rank " << inst.rank_g
                  << ")\n"
                  << decomposition_text(inst.witness_g, inst.split.x_vars, "  ");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Waring-rank, apolarity and point-geometry toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format (json or text)")
        ->check(CLI::IsMember({"json", "text"}));

    std::string rank_form;
    CLI::App* rank_cmd = app.add_subcommand("rank", "Certify the Waring rank of a form");
    rank_cmd->add_option("form", rank_form, "Homogeneous form, e.g. \"x0*x1^2\"")->required();
    rank_cmd->fallthrough();

    std::string apolar_form;
    int apolar_degree = 0;
    CLI::App* apolar_cmd =
        app.add_subcommand("apolar", "Basis of the degree-k piece of the apolar ideal");
    apolar_cmd->add_option("form", apolar_form, "Homogeneous form")->required();
    apolar_cmd->add_option("--degree", apolar_degree, "Degree k of the graded piece")->required();
    apolar_cmd->fallthrough();

    std::string essential_form;
    CLI::App* essential_cmd =
        app.add_subcommand("essential", "Essential variables and the reduction to them");
    essential_cmd->add_option("form", essential_form, "Homogeneous form")->required();
    essential_cmd->fallthrough();

    std::string hilbert_path;
    int hilbert_degree = 0;
    CLI::App* hilbert_cmd =
        app.add_subcommand("hilbert", "Hilbert function data of a finite point set");
    hilbert_cmd->add_option("pointset", hilbert_path, "Point-set JSON file")->required();
    hilbert_cmd->add_option("--degree", hilbert_degree, "Degree t to evaluate at")->required();
    hilbert_cmd->fallthrough();

    std::string sac_f, sac_g;
    CLI::App* sac_cmd = app.add_subcommand(
        "sac-check", "Certify rank additivity for forms in disjoint variable blocks");
    sac_cmd->add_option("F", sac_f, "Form in the x-block, e.g. \"x0^3\"")->required();
    sac_cmd->add_option("G", sac_g, "Form in the y-block, e.g. \"y0^3\"")->required();
    sac_cmd->fallthrough();

    std::string lemma_which;
    std::string lemma_config;
    long lemma_fuzz = 0;
    std::uint64_t lemma_seed = 0;
    CLI::App* lemma_cmd =
        app.add_subcommand("lemma", "Replay a point-geometry lemma on configurations");
    lemma_cmd->add_option("which", lemma_which, "One of: celine, resid, skew, add2")
        ->required()
        ->check(CLI::IsMember({"celine", "resid", "skew", "add2"}));
    CLI::Option* lemma_config_opt =
        lemma_cmd->add_option("--config", lemma_config, "Configuration JSON file");
    CLI::Option* lemma_fuzz_opt =
        lemma_cmd->add_option("--fuzz", lemma_fuzz, "Number of seeded random configurations");
    lemma_cmd->add_option("--seed", lemma_seed, "Base seed for --fuzz");
    lemma_config_opt->excludes(lemma_fuzz_opt);
    lemma_fuzz_opt->excludes(lemma_config_opt);
    lemma_cmd->fallthrough();

    int gen_degree = 0;
    std::size_t gen_rank = 0;
    std::size_t gen_rank_g = 0;
    std::uint64_t gen_seed = 0;
    CLI::App* gen_cmd =
        app.add_subcommand("gen", "Generate a seeded additivity instance with rank witnesses");
    gen_cmd->add_option("--degree", gen_degree, "Degree of both forms")->required();
    gen_cmd->add_option("--rank", gen_rank, "Target rank of F")->required();
    CLI::Option* gen_rank_g_opt =
        gen_cmd->add_option("--rank-g", gen_rank_g, "Target rank of G (defaults to --rank)");
    gen_cmd->add_option("--seed", gen_seed, "Seed");
    gen_cmd->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rank_cmd->parsed()) return run_rank(rank_form, format);
        if (apolar_cmd->parsed()) return run_apolar(apolar_form, apolar_degree, format);
        if (essential_cmd->parsed()) return run_essential(essential_form, format);
        if (hilbert_cmd->parsed()) return run_hilbert(hilbert_path, hilbert_degree, format);
        if (sac_cmd->parsed()) return run_sac_check(sac_f, sac_g, format);
        if (lemma_cmd->parsed()) {
            std::optional<std::string> config_path;
            std::optional<long> fuzz;
            if (lemma_config_opt->count() > 0) config_path = lemma_config;
            if (lemma_fuzz_opt->count() > 0) fuzz = lemma_fuzz;
            if (!config_path && !fuzz)
                throw std::invalid_argument("lemma needs either --config or --fuzz");
            return run_lemma(lemma_which, config_path, fuzz, lemma_seed, format);
        }
        if (gen_cmd->parsed()) {
            const std::size_t s = gen_rank_g_opt->count() > 0 ? gen_rank_g : gen_rank;
            return run_gen(gen_degree, gen_rank, s, gen_seed, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
