#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kleinian/emit.hpp"
#include "kleinian/error.hpp"
#include "kleinian/fixtures.hpp"

namespace py = pybind11;

namespace {

using namespace kleinian;

std::string type_label(Family f, int rank) {
    FiniteSubgroup g;
    g.family = f;
    g.rank = family_rank(f, rank);
    return g.label();
}

std::string group_json(const std::string& family, int rank) {
    FiniteSubgroup g = build_group(parse_family(family), rank);
    return emit_group(g, conjugacy_classes(g), Format::Json);
}

std::string chartable_json(const std::string& family, int rank) {
    return emit_chartable(character_table(build_group(parse_family(family), rank)), Format::Json);
}

std::string quiver_json(const std::string& family, int rank) {
    FiniteSubgroup g = build_group(parse_family(family), rank);
    return emit_quiver(g.label(), mckay_graph(character_table(g)), Format::Json);
}

std::string quiver_dot(const std::string& family, int rank) {
    FiniteSubgroup g = build_group(parse_family(family), rank);
    return emit_quiver(g.label(), mckay_graph(character_table(g)), Format::Dot);
}

std::string spectrum_json(const std::string& family, int rank, const std::string& poly,
                          bool raw_grading) {
    Polynomial f;
    std::string type;
    if (!poly.empty()) {
        if (!family.empty()) throw UsageError("give either poly or family, not both");
        f = parse_polynomial(poly);
        type = "custom";
    } else if (!family.empty()) {
        Family fam = parse_family(family);
        f = FixtureTables::embedded().table1(fam, rank).polynomial;
        type = type_label(fam, rank);
    } else {
        throw UsageError("spectrum needs a family or a polynomial");
    }
    return emit_spectrum(type, analyze_singularity(f, raw_grading), Format::Json);
}

std::string coxeter_json(const std::string& family, int rank) {
    Family fam = parse_family(family);
    DynkinDiagram d = reference_diagram(fam, rank, false);
    CoxeterElement t = coxeter_element(d);
    return emit_coxeter(type_label(fam, rank), t, coxeter_exponents(t), Format::Json);
}

std::string orbifold_json(const std::string& family, int rank) {
    Family fam = parse_family(family);
    FiniteSubgroup g = build_group(fam, rank);
    auto sectors = sector_data(g, conjugacy_classes(g));
    SingularityAnalysis analysis =
        analyze_singularity(FixtureTables::embedded().table1(fam, rank).polynomial);
    return emit_orbifold(compare_spectrum_orbifold(analysis.sp, sectors, fam), Format::Json);
}

std::string verify_json(const std::string& family, int rank, bool all_families, int max_rank) {
    std::vector<VerificationCase> cases;
    if (all_families)
        cases = run_all(max_rank, FixtureTables::embedded());
    else if (!family.empty())
        cases.push_back(run_verification(parse_family(family), rank, FixtureTables::embedded()));
    else
        throw UsageError("verify needs a family or all_families=True");
    return emit_verification(cases, Format::Json);
}

} // namespace

PYBIND11_MODULE(_kleinian, m) {
    m.doc() = "Exact computations around finite subgroups of SL(2,C) and Kleinian "
              "surface singularities. The *_json functions return the same "
              "deterministic documents as the CLI; the kleinian package wraps "
              "them as dictionaries.";

    py::register_exception<kleinian::UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<kleinian::InternalError>(m, "InternalError", PyExc_RuntimeError);

    m.def("group_json", &group_json, py::arg("family"), py::arg("rank") = 0);
    m.def("chartable_json", &chartable_json, py::arg("family"), py::arg("rank") = 0);
    m.def("quiver_json", &quiver_json, py::arg("family"), py::arg("rank") = 0);
    m.def("quiver_dot", &quiver_dot, py::arg("family"), py::arg("rank") = 0);
    m.def("spectrum_json", &spectrum_json, py::arg("family") = "", py::arg("rank") = 0,
          py::arg("poly") = "", py::arg("raw_grading") = false);
    m.def("coxeter_json", &coxeter_json, py::arg("family"), py::arg("rank") = 0);
    m.def("orbifold_json", &orbifold_json, py::arg("family"), py::arg("rank") = 0);
    m.def("verify_json", &verify_json, py::arg("family") = "", py::arg("rank") = 0,
          py::arg("all_families") = false, py::arg("max_rank") = 10);
}
