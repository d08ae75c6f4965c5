#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "augss/io.hpp"

using namespace augss;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitInvalidComplex = 3;
constexpr int kExitNotRealizable = 10;

json load_document(const std::string& file, const std::string& inline_spec) {
    if (!inline_spec.empty()) return json::parse(inline_spec);
    std::ifstream in(file);
    if (!in) throw SchemaError("cannot open input file: " + file);
    json doc;
    in >> doc;
    return doc;
}

KoszulCycle cycle_from_options(const KoszulComplex& K, const std::string& cycle_json) {
    return parse_cycle(K, json::parse(cycle_json));
}

int cmd_group(const std::string& file, const std::string& inline_spec) {
    ParsedInput in = parse_input(load_document(file, inline_spec));
    const AlgebraPtr& A = in.algebra;
    std::cout << "group: " << A->group().name << "  order " << A->size() << "  p=" << A->p()
              << "\n";
    std::cout << "L = " << A->L() << "\n";
    std::cout << "ideal dims:";
    for (std::size_t k = 0; k <= A->L() + 1; ++k) std::cout << " " << A->ideal_power(k).dim();
    std::cout << "\njennings alpha:";
    for (std::size_t d : A->jennings().alpha) std::cout << " " << d;
    GradedRing gr = gr_cup(A);
    std::cout << "\ngr_cup poincare:";
    for (std::size_t d : gr.dims) std::cout << " " << d;
    std::cout << "\n";
    D1Expression d1 = d1_solver(A);
    for (std::size_t j = 0; j < d1.alpha.size(); ++j)
        std::cout << "d1(y" << j + 1 << ") = " << d1.pretty(j) << "\n";
    return 0;
}

int cmd_ss(const std::string& file, const std::string& inline_spec, long page_no,
           const std::string& format, bool all_pages) {
    if (page_no < 0) throw SchemaError("ss: page index must be nonnegative");
    ParsedInput in = parse_input(load_document(file, inline_spec));
    if (!in.complex) throw SchemaError("ss: the document has no complex");
    FreeComplex C = *in.complex;
    if (C.direction() == Direction::chain) C = dualize(C);
    FilteredComplex FC = filter(C);
    std::size_t last = all_pages ? FC.L() + 1 : static_cast<std::size_t>(page_no);
    std::size_t first = all_pages ? 1 : static_cast<std::size_t>(page_no);
    for (std::size_t r = first; r <= last; ++r) {
        PageTable pt = page(FC, r);
        if (format == "ascii")
            std::cout << page_to_ascii(pt);
        else if (format == "json")
            std::cout << page_to_json(pt).dump(2) << "\n";
        else if (format == "csv")
            std::cout << page_to_csv(pt);
        else
            throw SchemaError("ss: unknown format " + format);
    }
    ConvergenceReport rep = einfty_check(FC);
    std::cout << "E_inf totals per q:";
    for (std::size_t t : rep.einf_totals) std::cout << " " << t;
    std::cout << "\nH^q dims:         ";
    for (std::size_t t : rep.h_dims) std::cout << " " << t;
    std::cout << "\nconverged: " << (rep.converged ? "yes" : "NO") << "\n";
    return rep.converged ? 0 : 1;
}

int cmd_koszul(Scalar p, std::size_t a) {
    KoszulComplex K = build_koszul(p, a);
    std::cout << "koszul complex over F_" << p << "(Z/" << p << ")^" << a << "\nranks:";
    for (std::size_t r : K.complex.ranks()) std::cout << " " << r;
    HomologyRecord H = homology(K.complex);
    std::cout << "\nhomology dims:";
    for (std::size_t d : H.dims) std::cout << " " << d;
    std::cout << "\ntotal homology: " << H.total() << "\n";
    std::cout << "H_1 generators: [lambda_i^{p-1} z_i], i = 1.." << a << "\n";
    return 0;
}

int cmd_cone(Scalar p, std::size_t a, const std::string& cycle_json, bool dual, bool emit) {
    KoszulComplex K = build_koszul(p, a);
    KoszulCycle w = cycle_from_options(K, cycle_json);
    FreeComplex C = dual ? dual_cone(K, w) : build_cone(K, w);
    if (emit) {
        std::cout << complex_to_json(C, true).dump(2) << "\n";
        return 0;
    }
    std::cout << (dual ? "dual cone" : "cone") << " of degree-" << w.r << " cycle\nranks:";
    for (std::size_t r : C.ranks()) std::cout << " " << r;
    HomologyRecord H = homology(C);
    std::cout << "\nhomology dims:";
    for (std::size_t d : H.dims) std::cout << " " << d;
    std::cout << "\ntotal homology: " << H.total() << "\n";
    return 0;
}

int cmd_obstruct(Scalar p, std::size_t a, const std::string& cycle_json) {
    KoszulComplex K = build_koszul(p, a);
    KoszulCycle w = cycle_from_options(K, cycle_json);
    ObstructionResult res = leibniz_obstruction(K, w);
    if (std::holds_alternative<NoObstruction>(res)) {
        std::cout << json{{"obstruction", false},
                          {"reason", std::get<NoObstruction>(res).reason}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    const auto& wit = std::get<ObstructionWitness>(res);
    json out = witness_to_json(wit);
    out["obstruction"] = true;
    std::cout << out.dump(2) << "\n";
    return kExitNotRealizable;
}

int cmd_realize(Scalar p, std::size_t a, const std::string& cycle_json, bool emit_model) {
    KoszulComplex K = build_koszul(p, a);
    KoszulCycle w = cycle_from_options(K, cycle_json);
    RealizationResult res = realize_cone(K, w);
    std::cout << realization_to_json(res, emit_model).dump(2) << "\n";
    return 0;
}

int cmd_minimize(const std::string& file, const std::string& inline_spec) {
    ParsedInput in = parse_input(load_document(file, inline_spec));
    if (!in.complex) throw SchemaError("minimize: the document has no complex");
    MinimizeResult res = minimize(*in.complex);
    json out = complex_to_json(res.complex, in.structured);
    out["minimal_profile"] = res.profile;
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral sequences of augmentation-filtered complexes over F_pG"};
    app.require_subcommand(1);

    std::string file, inline_spec, cycle_json = "{\"r\":0,\"mu\":{}}";
    std::string format = "ascii";
    long page_no = 1;
    bool all_pages = false, dual = false, emit = false, emit_model = false;
    Scalar p = 2;
    std::size_t a = 2;

    auto* g = app.add_subcommand("group", "Jennings data, gr_cup and d_1 of a p-group");
    g->add_option("file", file);
    g->add_option("--spec", inline_spec, "inline JSON document");

    auto* ss = app.add_subcommand(
        "ss", "spectral sequence pages of a filtered complex (chain input is dualized)");
    ss->add_option("file", file);
    ss->add_option("--spec", inline_spec);
    ss->add_option("--page", page_no, "page index r");
    ss->add_option("--format", format, "ascii, json or csv");
    ss->add_flag("--all-pages", all_pages, "print pages 1..L+1");

    auto* ko = app.add_subcommand("koszul", "the Koszul complex and its homology");
    ko->add_option("-p", p)->required();
    ko->add_option("-a", a)->required();

    auto* co = app.add_subcommand("cone", "mapping cone of multiplication by a cycle");
    co->add_option("-p", p)->required();
    co->add_option("-a", a)->required();
    co->add_option("--cycle", cycle_json, "e.g. {\"r\":2,\"mu\":{\"1,2\":1}}");
    co->add_flag("--dual", dual);
    co->add_flag("--emit", emit, "emit the complex as JSON");

    auto* ob = app.add_subcommand("obstruct", "the Leibniz-rule realizability obstruction");
    ob->add_option("-p", p)->required();
    ob->add_option("-a", a)->required();
    ob->add_option("--cycle", cycle_json);

    auto* re = app.add_subcommand("realize", "decide realizability of the mapping cone");
    re->add_option("-p", p)->required();
    re->add_option("-a", a)->required();
    re->add_option("--cycle", cycle_json);
    re->add_flag("--emit-model", emit_model);

    auto* mi = app.add_subcommand("minimize", "Gaussian cancellation to the minimal complex");
    mi->add_option("file", file);
    mi->add_option("--spec", inline_spec);

    CLI11_PARSE(app, argc, argv);

    try {
        if (g->parsed()) return cmd_group(file, inline_spec);
        if (ss->parsed()) return cmd_ss(file, inline_spec, page_no, format, all_pages);
        if (ko->parsed()) return cmd_koszul(p, a);
        if (co->parsed()) return cmd_cone(p, a, cycle_json, dual, emit);
        if (ob->parsed()) return cmd_obstruct(p, a, cycle_json);
        if (re->parsed()) return cmd_realize(p, a, cycle_json, emit_model);
        if (mi->parsed()) return cmd_minimize(file, inline_spec);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid complex: " << e.what() << "\n";
        return kExitInvalidComplex;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
