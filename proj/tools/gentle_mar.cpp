// Command-line front end: load an algebra file, run the string/MAR/tilting
// machinery, and emit text, JSON or DOT.
//
// Exit codes: 0 success, 1 domain error (JSON diagnostics on stderr),
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gentle/bar.hpp"
#include "gentle/endo.hpp"
#include "gentle/homext.hpp"
#include "gentle/io.hpp"
#include "gentle/mar.hpp"
#include "gentle/modules.hpp"
#include "gentle/oracle.hpp"
#include "gentle/quiver.hpp"

using namespace gentle;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::BadInput, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

BoundQuiver load_algebra(const std::string& path) { return io::parse_algebra(load_json(path)); }

int oracle_prime() {
    if (const char* env = std::getenv("GENTLE_MAR_PRIME")) return std::atoi(env);
    return 101;
}

void print_module_line(const StringWord& w) {
    std::cout << io::stack_text(w) << "   [" << w.canonical().text() << "]\n";
}

void print_module_set(const ModuleSet& s, const std::string& format) {
    if (format == "json") {
        std::cout << io::module_set_to_json(s).dump(2) << "\n";
        return;
    }
    for (const auto& w : s) print_module_line(w);
}

json hom_element_json(const HomBasisElement& h) {
    const char* kind = h.kind == HomKind::Mono ? "mono"
                       : h.kind == HomKind::Epi ? "epi"
                       : h.kind == HomKind::TwoSided ? "iso"
                                                     : "through";
    return json{{"kind", kind},
                {"factor", io::module_to_json(h.factor)},
                {"source_letters", {h.in_source.lo, h.in_source.hi}},
                {"target_letters", {h.in_target.lo, h.in_target.hi}},
                {"flip", h.flip}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal almost rigid modules over gentle algebras"};
    app.require_subcommand(1);

    std::string algebra_path, set_path, word_text, second_word, presentation_path, relabel_path;
    std::string format = "text";
    int max_len = 6;
    int prime = oracle_prime();
    bool dot = false;
    std::string mar_choice;

    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("algebra", algebra_path, "algebra JSON file")->required();
    };

    auto* validate = app.add_subcommand("validate", "check gentleness and finite dimensionality");
    add_algebra(validate);

    auto* strings_cmd = app.add_subcommand("strings", "list strings up to a length bound");
    strings_cmd->add_option("--max-len", max_len, "length bound");
    add_algebra(strings_cmd);

    auto* module_cmd = app.add_subcommand("module", "module utilities");
    module_cmd->require_subcommand(1);
    auto* module_info = module_cmd->add_subcommand("info", "dimension vector, top, socle, cover");
    module_info->add_option("word", word_text, "string word, e.g. \"b g ~a\" or \"@1\"")->required();
    add_algebra(module_info);

    auto* hom_cmd = app.add_subcommand("hom", "basis of Hom(M(w), M(v))");
    hom_cmd->add_option("w", word_text)->required();
    hom_cmd->add_option("v", second_word)->required();
    hom_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_algebra(hom_cmd);

    auto* ext_cmd = app.add_subcommand("ext1", "basis of Ext^1(M(v), M(w))");
    ext_cmd->add_option("v", word_text)->required();
    ext_cmd->add_option("w", second_word)->required();
    ext_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_algebra(ext_cmd);

    auto* ar_cmd = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver (band-free only)");
    ar_cmd->add_flag("--dot", dot, "emit DOT");
    add_algebra(ar_cmd);

    auto* almost = app.add_subcommand("almost-rigid", "test a module set for almost rigidity");
    almost->add_option("set", set_path, "module-set JSON file")->required();
    add_algebra(almost);

    auto* required_cmd = app.add_subcommand("required", "summands of every MAR module");
    required_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_algebra(required_cmd);

    auto* mproj_cmd = app.add_subcommand("mproj", "the MAR module containing all projectives");
    mproj_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_algebra(mproj_cmd);

    auto* minj_cmd = app.add_subcommand("minj", "the MAR module containing all injectives");
    minj_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_algebra(minj_cmd);

    auto* complete_cmd = app.add_subcommand("complete", "complete an almost rigid set to a MAR");
    complete_cmd->add_option("set", set_path)->required();
    complete_cmd->add_option("--max-len", max_len, "candidate length bound");
    complete_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_algebra(complete_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate-mars", "all MARs within a length bound");
    enum_cmd->add_option("--max-len", max_len, "candidate length bound");
    add_algebra(enum_cmd);

    auto* bar_cmd = app.add_subcommand("bar", "the arrow-subdivision algebra");
    add_algebra(bar_cmd);

    auto* gmap_cmd = app.add_subcommand("gmap", "image of a string in the subdivided algebra");
    gmap_cmd->add_option("word", word_text)->required();
    add_algebra(gmap_cmd);

    auto* tilt_cmd = app.add_subcommand("tilting-check", "tilting conditions for a module set");
    tilt_cmd->add_option("set", set_path)->required();
    add_algebra(tilt_cmd);

    auto* endo_cmd = app.add_subcommand("endo", "endomorphism algebra presentation");
    endo_cmd->add_option("--set", set_path, "module-set JSON file");
    endo_cmd->add_option("--mar", mar_choice, "mproj or minj instead of a set file")
        ->check(CLI::IsMember({"mproj", "minj"}));
    endo_cmd->add_option("--format", format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    endo_cmd->add_option("--relabel", relabel_path, "JSON map vertex -> display label");
    add_algebra(endo_cmd);

    auto* tensor_cmd = app.add_subcommand("tensor", "relation-extension of a presentation");
    tensor_cmd->add_option("presentation", presentation_path, "presentation JSON file")->required();
    tensor_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "numeric verification backend");
    oracle_cmd->require_subcommand(1);
    oracle_cmd->add_option("--prime", prime, "field characteristic");
    auto* cross = oracle_cmd->add_subcommand("crosscheck", "compare Hom/Ext bases with the oracle");
    cross->add_option("--max-len", max_len, "string length bound");
    add_algebra(cross);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            auto q = load_algebra(algebra_path);
            auto rep = validate_gentle(q);
            std::cout << "gentle: " << (rep.gentle ? "true" : "false") << "\n";
            std::cout << "finite_dimensional: " << (is_finite_dimensional(q) ? "true" : "false")
                      << "\n";
            for (auto [name, value] : {std::pair<const char*, bool>{"G1", rep.g1},
                                       {"G2", rep.g2},
                                       {"G3", rep.g3},
                                       {"G4", rep.g4}})
                std::cout << "  " << name << ": " << (value ? "pass" : "fail") << "\n";
            if (rep.witness)
                std::cout << "  witness: " << rep.witness->condition << " at "
                          << rep.witness->detail << "\n";
        } else if (*strings_cmd) {
            auto q = load_algebra(algebra_path);
            auto all = enumerate_strings(q, max_len);
            if (detect_bands(q))
                std::cout << "note: bands exist; enumeration is incomplete at any bound\n";
            std::cout << all.size() << " strings of length <= " << max_len << "\n";
            for (const auto& w : all) print_module_line(w);
        } else if (*module_info) {
            auto q = load_algebra(algebra_path);
            auto w = io::parse_word_text(q, word_text);
            auto m = realize(w);
            std::cout << "word: " << w.canonical().text() << "\n";
            std::cout << "stack: " << io::stack_text(w) << "\n";
            std::cout << "series:\n";
            {
                std::istringstream layers(io::stack_text(w));
                std::string layer;
                while (std::getline(layers, layer, '/')) std::cout << "  " << layer << "\n";
            }
            std::cout << "dim:";
            for (int v = 0; v < q.vertex_count(); ++v)
                std::cout << " " << q.vertex_id(v) << ":" << m.dim.dims[v];
            std::cout << "  total " << m.dim.total() << "\n";
            std::cout << "top:";
            for (const auto& v : top(w)) std::cout << " " << v;
            std::cout << "\nsocle:";
            for (const auto& v : socle(w)) std::cout << " " << v;
            auto pc = projective_cover(w);
            std::cout << "\ncover tops:";
            for (const auto& v : pc.covers) std::cout << " " << v;
            std::cout << "\nsyzygy:";
            for (const auto& z : pc.kernel) std::cout << " [" << io::stack_text(z) << "]";
            std::cout << "\n";
        } else if (*hom_cmd) {
            auto q = load_algebra(algebra_path);
            auto w = io::parse_word_text(q, word_text);
            auto v = io::parse_word_text(q, second_word);
            auto basis = hom_basis(w, v);
            if (format == "json") {
                json arr = json::array();
                for (const auto& h : basis) arr.push_back(hom_element_json(h));
                std::cout << json{{"dim", basis.size()}, {"basis", arr}}.dump(2) << "\n";
                return 0;
            }
            std::cout << "dim Hom = " << basis.size() << "\n";
            for (const auto& h : basis) {
                const char* kind = h.kind == HomKind::Mono ? "mono"
                                   : h.kind == HomKind::Epi ? "epi"
                                   : h.kind == HomKind::TwoSided ? "iso"
                                                                 : "through";
                std::cout << "  " << kind << " via [" << io::stack_text(h.factor) << "]\n";
            }
        } else if (*ext_cmd) {
            auto q = load_algebra(algebra_path);
            auto v = io::parse_word_text(q, word_text);
            auto w = io::parse_word_text(q, second_word);
            auto ext = ext1_basis(v, w);
            if (format == "json") {
                json arrows = json::array(), overlaps = json::array();
                for (const auto& ae : ext.arrow_exts)
                    arrows.push_back({{"arrow", ae.arrow}, {"middle", io::module_to_json(ae.middle)}});
                for (const auto& ov : ext.overlap_exts) {
                    json o{{"overlap", io::module_to_json(ov.overlap)},
                           {"e1", io::module_to_json(ov.e1)},
                           {"e2", io::module_to_json(ov.e2)}};
                    if (ov.a) o["a"] = *ov.a;
                    if (ov.b) o["b"] = *ov.b;
                    if (ov.c) o["c"] = *ov.c;
                    if (ov.d) o["d"] = *ov.d;
                    overlaps.push_back(std::move(o));
                }
                std::cout << json{{"dim", ext.size()},
                                  {"arrow_extensions", arrows},
                                  {"overlap_extensions", overlaps}}
                                 .dump(2)
                          << "\n";
                return 0;
            }
            std::cout << "dim Ext^1 = " << ext.size() << " (" << ext.arrow_exts.size()
                      << " arrow, " << ext.overlap_exts.size() << " overlap)\n";
            for (const auto& ae : ext.arrow_exts)
                std::cout << "  arrow " << ae.arrow << ": middle [" << io::stack_text(ae.middle)
                          << "]\n";
            for (const auto& ov : ext.overlap_exts)
                std::cout << "  overlap [" << io::stack_text(ov.overlap) << "]: middles ["
                          << io::stack_text(ov.e1) << "] + [" << io::stack_text(ov.e2) << "]\n";
        } else if (*ar_cmd) {
            auto q = load_algebra(algebra_path);
            auto ar = ar_quiver(q);
            if (dot) {
                std::cout << io::ar_quiver_to_dot(ar);
            } else {
                std::cout << ar.nodes.size() << " modules\n";
                for (auto [f, t, m] : ar.edges)
                    std::cout << "  [" << io::stack_text(ar.nodes[f]) << "] -> ["
                              << io::stack_text(ar.nodes[t]) << "]"
                              << (m > 1 ? " x" + std::to_string(m) : "") << "\n";
            }
        } else if (*almost) {
            auto q = load_algebra(algebra_path);
            auto s = io::parse_module_set(q, load_json(set_path));
            auto rep = is_almost_rigid(q, s);
            std::cout << "almost_rigid: " << (rep.almost_rigid ? "true" : "false") << "\n";
            if (rep.witness)
                std::cout << "  overlap witness: [" << io::stack_text(rep.witness->overlap)
                          << "] between [" << io::stack_text(rep.witness->sub) << "] and ["
                          << io::stack_text(rep.witness->quotient) << "]\n";
            auto cert = mar_certificate(q, s);
            std::cout << "size: " << s.size() << " of " << q.vertex_count() + q.arrow_count()
                      << (cert.mar() ? " (maximal almost rigid)" : "") << "\n";
        } else if (*required_cmd) {
            print_module_set(required_summands(load_algebra(algebra_path)), format);
        } else if (*mproj_cmd) {
            print_module_set(m_proj(load_algebra(algebra_path)), format);
        } else if (*minj_cmd) {
            print_module_set(m_inj(load_algebra(algebra_path)), format);
        } else if (*complete_cmd) {
            auto q = load_algebra(algebra_path);
            auto s = io::parse_module_set(q, load_json(set_path));
            print_module_set(complete_to_mar(q, s, max_len), format);
        } else if (*enum_cmd) {
            auto q = load_algebra(algebra_path);
            auto en = enumerate_mars(q, max_len);
            if (en.bands_present)
                std::cout << "note: bands exist; enumeration is incomplete at any bound\n";
            std::cout << en.mars.size() << " maximal almost rigid modules\n";
            for (size_t i = 0; i < en.mars.size(); ++i) {
                std::cout << "#" << i + 1 << ":";
                for (const auto& w : en.mars[i]) std::cout << " [" << io::stack_text(w) << "]";
                std::cout << "\n";
            }
        } else if (*bar_cmd) {
            auto q = load_algebra(algebra_path);
            auto B = bar_algebra(q);
            json j = io::algebra_to_json(B.bar);
            json table = json::object();
            for (const auto& [a, v] : B.vertex_of_arrow)
                table[a] = {{"vertex", v},
                            {"first", B.split.at(a).first},
                            {"second", B.split.at(a).second}};
            j["arrow_correspondence"] = table;
            std::cout << j.dump(2) << "\n";
        } else if (*gmap_cmd) {
            auto q = load_algebra(algebra_path);
            auto B = bar_algebra(q);
            auto img = g_string(B, io::parse_word_text(q, word_text));
            std::cout << img.canonical().text() << "\n";
            std::cout << "stack: " << io::stack_text(img) << "\n";
        } else if (*tilt_cmd) {
            auto q = load_algebra(algebra_path);
            auto s = io::parse_module_set(q, load_json(set_path));
            auto rep = tilting_check(q, s);
            std::cout << "pd_at_most_1: " << (rep.pd_ok ? "pass" : "fail") << "\n";
            std::cout << "ext_vanishing: " << (rep.ext_ok ? "pass" : "fail") << "\n";
            std::cout << "summand_count: " << (rep.count_ok ? "pass" : "fail") << "\n";
            std::cout << "tilting: " << (rep.tilting() ? "true" : "false") << "\n";
            if (!rep.detail.empty()) std::cout << "  " << rep.detail << "\n";
        } else if (*endo_cmd) {
            auto q = load_algebra(algebra_path);
            ModuleSet t;
            if (mar_choice == "mproj")
                t = m_proj(q);
            else if (mar_choice == "minj")
                t = m_inj(q);
            else if (!set_path.empty())
                t = io::parse_module_set(q, load_json(set_path));
            else
                throw Error(Errc::BadInput, "endo needs a set file or --mar");
            auto p = endomorphism_presentation(q, t);
            std::map<std::string, std::string> labels;
            for (const auto& [v, w] : p.vertex_labels) labels[v] = io::stack_text(w);
            if (!relabel_path.empty()) {
                json rl = load_json(relabel_path);
                for (const auto& [k, v] : rl.items()) labels[k] = v.get<std::string>();
            }
            if (format == "json") {
                std::cout << io::presentation_to_json(p).dump(2) << "\n";
            } else if (format == "dot") {
                std::cout << io::algebra_to_dot(p.quiver, labels);
            } else {
                std::cout << p.quiver.vertex_count() << " vertices, " << p.quiver.arrow_count()
                          << " arrows, " << p.quiver.relation_pairs().size() << " relations\n";
                for (const auto& v : p.quiver.vertices())
                    std::cout << "  " << v << " = [" << labels[v] << "]\n";
                for (const Arrow& a : p.quiver.arrows())
                    std::cout << "  " << a.name << ": " << a.source << " -> " << a.target << "\n";
                for (auto [x, y] : p.quiver.relation_pairs())
                    std::cout << "  relation " << p.quiver.arrow(x).name << " "
                              << p.quiver.arrow(y).name << "\n";
            }
        } else if (*tensor_cmd) {
            json j = load_json(presentation_path);
            AlgebraPresentation p{io::parse_algebra(j), {}, false};
            auto b = tensor_algebra(p);
            if (format == "json") {
                json out = io::algebra_to_json(b.quiver);
                out["infinite_dimensional"] = b.infinite_dimensional;
                std::cout << out.dump(2) << "\n";
            } else if (format == "dot") {
                std::cout << io::algebra_to_dot(b.quiver);
            } else {
                std::cout << b.quiver.vertex_count() << " vertices, " << b.quiver.arrow_count()
                          << " arrows, " << b.quiver.relation_pairs().size() << " relations\n";
                std::cout << "infinite_dimensional: "
                          << (b.infinite_dimensional ? "true" : "false") << "\n";
            }
        } else if (*cross) {
            auto q = load_algebra(algebra_path);
            oracle::FieldConfig field{prime};
            auto all = enumerate_strings(q, max_len);
            long long pairs = 0, hom_bad = 0, ext_bad = 0;
            for (const auto& m : all) {
                auto repm = oracle::matrix_rep(m, field);
                auto cover = oracle::projective_cover_numeric(q, repm);
                for (const auto& n : all) {
                    auto repn = oracle::matrix_rep(n, field);
                    ++pairs;
                    if ((int)hom_basis(m, n).size() != oracle::hom_dim_numeric(q, repm, repn))
                        ++hom_bad;
                    if ((int)ext1_basis(m, n).size() !=
                        oracle::ext1_dim_numeric(q, repm, repn, &cover))
                        ++ext_bad;
                }
            }
            std::cout << "pairs: " << pairs << " (strings of length <= " << max_len << ", prime "
                      << prime << ")\n";
            std::cout << "hom mismatches: " << hom_bad << "\n";
            std::cout << "ext mismatches: " << ext_bad << "\n";
            if (hom_bad || ext_bad) return 1;
        }
    } catch (const Error& e) {
        json err{{"error", errc_name(e.code())}, {"message", e.what()}};
        if (e.position()) err["position"] = *e.position();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "Unexpected"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
