#include "kleinian/emit.hpp"

#include "kleinian/error.hpp"

#include "json.hpp"

#include <sstream>

namespace kleinian {

using nlohmann::json;

namespace {

[[noreturn]] void unsupported(const std::string& artifact, Format format) {
    const char* names[] = {"json", "tsv", "dot", "text"};
    throw UsageError(artifact + " cannot be emitted as " +
                     names[static_cast<int>(format)]);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json spectrum_entries_json(const std::vector<std::pair<Rational, int>>& entries) {
    json arr = json::array();
    for (const auto& [lambda, mult] : entries)
        arr.push_back(json{{"lambda", rational_str(lambda)}, {"mult", mult}});
    return arr;
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "tsv") return Format::Tsv;
    if (name == "dot") return Format::Dot;
    if (name == "text") return Format::Text;
    throw UsageError("unknown format '" + name + "' (expected json, tsv, dot or text)");
}

std::string emit_group(const FiniteSubgroup& group, const std::vector<ConjugacyClass>& classes,
                       Format format) {
    if (format == Format::Json) {
        json j;
        j["label"] = group.label();
        j["family"] = family_name(group.family);
        j["rank"] = group.rank;
        j["order"] = group.order();
        j["cyclotomic_order"] = group.cyclotomic_order;
        j["classes"] = json::array();
        for (const ConjugacyClass& c : classes)
            j["classes"].push_back(json{{"element_order", c.element_order},
                                        {"size", c.size},
                                        {"trace", c.trace.str()}});
        return dump(j);
    }
    if (format == Format::Tsv) {
        std::ostringstream out;
        out << "# " << group.label() << "\torder=" << group.order() << "\n";
        out << "# element_order\tsize\ttrace\n";
        for (const ConjugacyClass& c : classes)
            out << c.element_order << "\t" << c.size << "\t" << c.trace.str() << "\n";
        return out.str();
    }
    unsupported("group", format);
}

std::string emit_chartable(const CharacterTable& table, Format format) {
    if (format == Format::Json) {
        json j;
        j["order"] = table.group_order;
        j["exponent"] = table.exponent;
        j["dimensions"] = table.dimensions;
        j["classes"] = json::array();
        for (const ConjugacyClass& c : table.classes)
            j["classes"].push_back(json{{"element_order", c.element_order}, {"size", c.size}});
        j["values"] = json::array();
        for (const auto& row : table.values) {
            json r = json::array();
            for (const Cyclotomic& v : row) r.push_back(v.str());
            j["values"].push_back(r);
        }
        return dump(j);
    }
    if (format == Format::Tsv) {
        std::ostringstream out;
        out << "# dim";
        for (const ConjugacyClass& c : table.classes)
            out << "\t" << "o" << c.element_order << "s" << c.size;
        out << "\n";
        for (std::size_t a = 0; a < table.values.size(); ++a) {
            out << table.dimensions[a];
            for (const Cyclotomic& v : table.values[a]) out << "\t" << v.str();
            out << "\n";
        }
        return out.str();
    }
    unsupported("character table", format);
}

std::string emit_quiver(const std::string& label, const McKayGraph& mckay, Format format) {
    if (format == Format::Dot) return graph_to_dot(mckay.graph, label);
    if (format == Format::Json) {
        json j;
        j["label"] = label;
        j["trivial_vertex"] = mckay.trivial_vertex;
        j["vertices"] = json::array();
        for (int i = 0; i < mckay.graph.vertex_count(); ++i)
            j["vertices"].push_back(json{
                {"label", mckay.graph.labels[static_cast<std::size_t>(i)]},
                {"mark", mckay.graph.marks[static_cast<std::size_t>(i)]}});
        j["adjacency"] = mckay.graph.adjacency;
        return dump(j);
    }
    if (format == Format::Tsv) {
        std::ostringstream out;
        out << "# " << label << ": vertex\tvertex\tmultiplicity\n";
        for (int i = 0; i < mckay.graph.vertex_count(); ++i)
            for (int j = i + 1; j < mckay.graph.vertex_count(); ++j) {
                int m = mckay.graph.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (m > 0) out << i << "\t" << j << "\t" << m << "\n";
            }
        return out.str();
    }
    unsupported("quiver", format);
}

std::string emit_spectrum(const std::string& type, const SingularityAnalysis& analysis,
                          Format format) {
    if (format == Format::Json) {
        json j;
        j["type"] = type;
        j["weights"] = json::array();
        for (const Rational& w : analysis.weighted.weights) j["weights"].push_back(rational_str(w));
        j["d"] = to_int64(analysis.weighted.d);
        j["mu"] = to_int64(analysis.mu);
        j["spectrum"] = spectrum_entries_json(analysis.sp.entries);
        return dump(j);
    }
    if (format == Format::Tsv) {
        std::ostringstream out;
        for (const auto& [lambda, mult] : analysis.sp.entries)
            out << rational_str(lambda) << "\t" << mult << "\n";
        return out.str();
    }
    unsupported("spectrum", format);
}

std::string emit_coxeter(const std::string& type, const CoxeterElement& element,
                         const std::vector<Rational>& exponents, Format format) {
    if (format == Format::Json) {
        json j;
        j["type"] = type;
        j["h"] = element.order;
        j["exponents"] = json::array();
        for (const Rational& e : exponents) j["exponents"].push_back(rational_str(e));
        return dump(j);
    }
    if (format == Format::Tsv) {
        std::ostringstream out;
        for (const Rational& e : exponents) out << rational_str(e) << "\n";
        return out.str();
    }
    unsupported("coxeter element", format);
}

std::string emit_orbifold(const OrbifoldComparison& report, Format format) {
    if (format == Format::Json) {
        json j;
        j["mu"] = to_int64(report.mu);
        j["classes"] = report.classes;
        j["spectrum"] = spectrum_entries_json(report.spectrum);
        j["sector_exponents"] = json::array();
        for (const auto& [lo, hi] : report.sector_exponents)
            j["sector_exponents"].push_back(json::array({rational_str(lo), rational_str(hi)}));
        if (report.a_family_exact_match)
            j["a_family_exact_match"] = *report.a_family_exact_match;
        else
            j["a_family_exact_match"] = nullptr;
        j["notes"] = report.notes;
        return dump(j);
    }
    if (format == Format::Tsv) {
        std::ostringstream out;
        out << "mu\t" << int_str(report.mu) << "\n";
        out << "classes\t" << report.classes << "\n";
        for (const auto& [lo, hi] : report.sector_exponents)
            out << "sector\t" << rational_str(lo) << "\t" << rational_str(hi) << "\n";
        out << "one_per_class_match\t" << (report.one_per_class_match ? "true" : "false") << "\n";
        if (report.a_family_exact_match)
            out << "a_family_exact_match\t" << (*report.a_family_exact_match ? "true" : "false")
                << "\n";
        return out.str();
    }
    unsupported("orbifold report", format);
}

std::string emit_verification(const std::vector<VerificationCase>& cases, Format format) {
    if (format == Format::Text) {
        std::ostringstream out;
        int failures = 0;
        for (const VerificationCase& vc : cases) {
            out << "== " << vc.label() << ": " << (vc.passed() ? "PASS" : "FAIL") << " ==\n";
            for (const CheckResult& c : vc.checks) {
                out << "[" << check_status_name(c.status) << "] " << c.name << ": " << c.actual
                    << " (expected: " << c.expected << ") [" << c.provenance << "]\n";
                if (c.status == CheckStatus::Fail) ++failures;
            }
        }
        out << "cases: " << cases.size() << ", failed checks: " << failures << "\n";
        return out.str();
    }
    if (format == Format::Json) {
        json arr = json::array();
        for (const VerificationCase& vc : cases) {
            json j;
            j["family"] = family_name(vc.family);
            j["rank"] = vc.rank;
            j["passed"] = vc.passed();
            j["checks"] = json::array();
            for (const CheckResult& c : vc.checks)
                j["checks"].push_back(json{{"name", c.name},
                                           {"status", check_status_name(c.status)},
                                           {"expected", c.expected},
                                           {"actual", c.actual},
                                           {"provenance", c.provenance}});
            arr.push_back(j);
        }
        return dump(arr);
    }
    if (format == Format::Tsv) {
        std::ostringstream out;
        out << "# family\trank\tcheck\tstatus\texpected\tactual\tprovenance\n";
        for (const VerificationCase& vc : cases)
            for (const CheckResult& c : vc.checks)
                out << family_name(vc.family) << "\t" << vc.rank << "\t" << c.name << "\t"
                    << check_status_name(c.status) << "\t" << c.expected << "\t" << c.actual
                    << "\t" << c.provenance << "\n";
        return out.str();
    }
    unsupported("verification report", format);
}

} // namespace kleinian
