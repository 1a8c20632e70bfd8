// Command line front end: dimension checks, relation suites, diagram
// evaluation and bubble values, with JSON reports.

#include "schurcat/bimrep.hpp"
#include "schurcat/laurent.hpp"
#include "schurcat/qschur.hpp"
#include "schurcat/soergel.hpp"
#include "schurcat/supersym.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace schurcat;

namespace {

int finish(const Report& rep, const std::string& json_path) {
    if (!json_path.empty()) {
        std::ofstream os(json_path);
        os << rep.json() << "\n";
    }
    std::cout << rep.summary() << "\n";
    return rep.all_ok() ? 0 : 1;
}

RelFamily family_from_name(const std::string& name) {
    if (name == "biadjoint") return RelFamily::Biadjoint;
    if (name == "cyclic-dot") return RelFamily::CyclicDot;
    if (name == "cyclic-cross") return RelFamily::CyclicCross;
    if (name == "bubbles") return RelFamily::BubbleValues;
    if (name == "redtobubbles") return RelFamily::ReduceToBubbles;
    if (name == "EF") return RelFamily::EFDecomp;
    if (name == "infgrass") return RelFamily::InfGrass;
    if (name == "nilhecke") return RelFamily::NilHecke;
    if (name == "downup") return RelFamily::DownUp;
    if (name == "r2") return RelFamily::R2;
    if (name == "dotslide") return RelFamily::DotSlide;
    if (name == "r3easy") return RelFamily::R3Easy;
    if (name == "r3hard") return RelFamily::R3Hard;
    if (name == "bubbleslides") return RelFamily::BubbleSlides;
    if (name == "otherr3") return RelFamily::OtherR3;
    if (name == "r3extra") return RelFamily::R3Extra;
    if (name == "signs") return RelFamily::Signs;
    if (name == "sideways") return RelFamily::SidewaysExpansion;
    if (name == "all" || name.empty()) return RelFamily::All;
    throw CLI::ValidationError("unknown relation family: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Schur diagrammatics toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string json_path;
    app.add_option("--json", json_path, "write a JSON report to this path");

    // schur-dim n d
    int n = 2, d = 2;
    auto* dim = app.add_subcommand("schur-dim", "dimension of S_q(n,d), two routes");
    dim->add_option("n", n)->required();
    dim->add_option("d", d)->required();

    auto* pres = app.add_subcommand("check-presentation", "Serre-style presentation suite");
    pres->add_option("n", n)->required();
    pres->add_option("d", d)->required();

    auto* hk = app.add_subcommand("hecke-check", "Hecke algebra relations on V^{(x)d}");
    hk->add_option("d", d)->required();
    int hk_n = 0;
    hk->add_option("--n", hk_n, "ambient n (default d)");

    auto* sig = app.add_subcommand("sigma-check", "sigma_{n,d} and Schur-Weyl commutation");
    sig->add_option("n", n)->required();
    sig->add_option("d", d)->required();

    auto* tau_cmd = app.add_subcommand("tau-check", "anti-involution bookkeeping");
    tau_cmd->add_option("n", n)->required();
    tau_cmd->add_option("d", d)->required();

    std::string family = "all";
    int threads = 0;
    std::uint64_t seed = 12345;
    int max_degree = 6;
    auto* rel = app.add_subcommand("check-relations", "diagrammatic relation suite");
    rel->add_option("n", n)->required();
    rel->add_option("d", d)->required();
    rel->add_option("--family", family, "relation family (default all)");
    rel->add_option("--threads", threads, "worker threads (default: hardware)");
    rel->add_option("--seed", seed, "seed for the random evaluation panel");
    rel->add_option("--max-degree", max_degree, "series truncation degree");

    std::string diagram_file;
    auto* evald = app.add_subcommand("eval-diagram", "evaluate a diagram word file");
    evald->add_option("file", diagram_file)->required();

    bool bub_cw = false;
    int bub_r = 0, bub_i = 1;
    std::string bub_lambda;
    auto* bubc = app.add_subcommand("bubble", "closed-form dotted bubble value");
    bubc->add_flag("--cw", bub_cw, "clockwise (default counterclockwise)");
    bubc->add_option("-r", bub_r, "dot count (may be negative)")->required();
    bubc->add_option("-i", bub_i, "color")->required();
    bubc->add_option("--lambda", bub_lambda, "weight, comma separated")->required();
    bubc->add_option("--n", n);
    bubc->add_option("--d", d);

    int ss_a = 1, ss_b = 1;
    std::string ss_alpha;
    auto* ssch = app.add_subcommand("super-schur", "supersymmetric Schur polynomial");
    ssch->add_option("a", ss_a)->required();
    ssch->add_option("b", ss_b)->required();
    ssch->add_option("alpha", ss_alpha, "partition, comma separated")->required();

    auto* soe = app.add_subcommand("soergel-check", "Soergel relations under Sigma");
    soe->add_option("n", n)->required();
    soe->add_option("d", d)->required();
    soe->add_option("--threads", threads);

    auto* dpc = app.add_subcommand("divided-power-check", "divided power idempotents");
    dpc->add_option("n", n)->required();
    dpc->add_option("d", d)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (dim->parsed()) {
            std::cout << schur_dimension(n, d) << "\n";
            return 0;
        }
        if (pres->parsed()) return finish(check_schur_presentation(n, d), json_path);
        if (hk->parsed()) return finish(check_hecke(d, hk_n > 0 ? hk_n : d), json_path);
        if (sig->parsed()) return finish(sigma_check(n, d), json_path);
        if (tau_cmd->parsed()) return finish(tau_check(n, d), json_path);
        if (rel->parsed())
            return finish(relation_suite(n, d, family_from_name(family), threads, seed, max_degree),
                          json_path);
        if (evald->parsed()) {
            std::ifstream is(diagram_file);
            if (!is) {
                std::cerr << "cannot open " << diagram_file << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << is.rdbuf();
            DiagramWord w = DiagramWord::parse(buf.str());
            EvaluatedMap m = eval_diagram(w);
            if (m.zero) {
                std::cout << "zero map (label outside Lambda(n,d))\n";
                return 0;
            }
            nlohmann::json j;
            j["degree"] = m.raw_degree ? nlohmann::json(*m.raw_degree) : nlohmann::json();
            j["basis_size"] = m.images.size();
            j["images"] = nlohmann::json::array();
            for (size_t k = 0; k < m.images.size(); ++k) {
                auto e = m.basis_exponents(k);
                std::string key;
                for (size_t g = 0; g < e.size(); ++g)
                    key += (g ? "," : "") + std::to_string(e[g]);
                j["images"].push_back({{"exponents", key}, {"value", m.images[k].str()}});
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (bubc->parsed()) {
            GlWeight lam;
            std::istringstream ls(bub_lambda);
            std::string item;
            while (std::getline(ls, item, ',')) lam.push_back(std::stoi(item));
            if (n == 2 && (int)lam.size() != n) n = (int)lam.size();
            d = weight_sum(lam);
            std::cout << bubble_value(bub_cw, bub_r, bub_i, lam, (int)lam.size(), d).str()
                      << "\n";
            return 0;
        }
        if (ssch->parsed()) {
            Partition alpha;
            std::istringstream ls(ss_alpha);
            std::string item;
            while (std::getline(ls, item, ',')) alpha.push_back(std::stoi(item));
            SuperPair p{make_alphabet("x", ss_a), make_alphabet("y", ss_b)};
            std::cout << super_schur(alpha, p).str() << "\n";
            return 0;
        }
        if (soe->parsed()) {
            Report r = soergel_relation_suite(n, d, threads);
            r.merge(soergel_ek_oracle(n, d));
            r.sort();
            return finish(r, json_path);
        }
        if (dpc->parsed()) return finish(divided_power_check(n, d), json_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
