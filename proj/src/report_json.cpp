#include "uniprod/report_json.hpp"

#include <sstream>

namespace uniprod {

namespace {

Json constraint_list(const ConstraintSet& cs) {
    Json out = Json::array();
    for (const auto& c : cs.items()) out.push_back(c.render());
    return out;
}

Json string_list(const std::vector<std::string>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s);
    return out;
}

const char* factorizer_name(Factorizer f) {
    return f == Factorizer::free_product ? "free" : "tensor";
}

Json branch_to_json(const BranchReport& br, std::size_t index) {
    Json j;
    j["index"] = index + 1;
    j["path"] = string_list(br.branch.path);
    Json assignments = Json::object();
    for (const auto& [v, val] : br.branch.assignments) assignments[v] = val.render();
    j["assignments"] = assignments;
    j["free"] = string_list(br.branch.free_params);
    Json residual = Json::array();
    for (const auto& c : br.branch.residual) residual.push_back(c.render());
    j["residual"] = residual;
    j["verified"] = br.verified;
    if (br.normalizable) {
        Json rule;
        rule["provenance"] = br.normalized.provenance;
        rule["rhs"] = br.normalized.rhs.render();
        rule["rhs_latex"] = br.normalized.rhs.render_latex();
        j["normalized"] = rule;
    } else {
        j["normalized"] = nullptr;
    }
    return j;
}

}  // namespace

Json flags_to_json(const SymmetryFlags& flags) {
    Json j;
    j["phi1_tracial"] = flags.phi1_tracial;
    j["phi2_tracial_each_arg"] = flags.phi2_tracial_each_arg;
    j["phi2_symmetric"] = flags.phi2_symmetric;
    return j;
}

Json report_to_json(const DerivationReport& r) {
    Json j;
    j["pattern"] = render_symbol(r.pattern.symbol);
    j["pattern_latex"] = render_symbol_latex(r.pattern.symbol);
    j["flags"] = flags_to_json(r.pattern.flags);
    j["first_order"] = factorizer_name(r.first_order);
    j["first_order_via_rules"] = r.first_order_via_rules;
    j["context_path"] = string_list(r.context_path);

    Json params = Json::array();
    for (const auto& [name, origin] : r.params) {
        Json p;
        p["name"] = name;
        p["class"] = origin.class_key();
        p["unknown"] = origin.unknown;
        p["monomial"] = render_monomial(origin.monomial);
        params.push_back(p);
    }
    j["parameters"] = params;

    Json ansatz;
    ansatz["unknowns"] = string_list(r.ansatz.unknowns);
    Json monos = Json::array();
    for (const auto& m : r.ansatz.monomials) monos.push_back(render_monomial(m));
    ansatz["monomials"] = monos;
    j["ansatz"] = ansatz;

    Json constraints;
    Json units = Json::array();
    for (const auto& u : r.units) {
        Json uj;
        uj["letter"] = render_letter(u.letter);
        uj["constraints"] = constraint_list(u.constraints);
        units.push_back(uj);
    }
    constraints["units"] = units;

    Json exchange;
    exchange["applicable"] = r.exchange.applicable;
    if (!r.exchange.notice.empty()) exchange["notice"] = r.exchange.notice;
    exchange["constraints"] = constraint_list(r.exchange.constraints);
    constraints["exchange"] = exchange;

    Json sym;
    sym["applicable"] = r.phi2_symmetry_applicable;
    sym["constraints"] = constraint_list(r.phi2_symmetry);
    constraints["phi2_symmetry"] = sym;

    Json trac;
    trac["applicable"] = r.traciality_applicable;
    trac["constraints"] = constraint_list(r.traciality);
    constraints["traciality"] = trac;

    Json assoc = Json::array();
    for (const auto& c : r.associativity) {
        Json cj;
        cj["instance"] = render_symbol(c.instance);
        Json routes = Json::array();
        for (const auto& route : c.routes) {
            Json rj;
            rj["label"] = route.label;
            rj["group"] = string_list(route.group);
            rj["feasible"] = route.feasible;
            if (!route.feasible) rj["missing_shape"] = route.missing_shape;
            routes.push_back(rj);
        }
        cj["routes"] = routes;
        cj["constraints"] = constraint_list(c.constraints);
        cj["notices"] = string_list(c.notices);
        assoc.push_back(cj);
    }
    constraints["associativity"] = assoc;
    constraints["combined"] = constraint_list(r.combined);
    j["constraints"] = constraints;

    Json spots = Json::array();
    for (const auto& s : r.spot_checks) {
        Json sj;
        sj["instance"] = s.instance;
        sj["route"] = s.route;
        sj["monomial"] = render_monomial(s.monomial);
        sj["coefficient"] = s.coefficient.render();
        spots.push_back(sj);
    }
    j["spot_checks"] = spots;

    j["unknowns"] = string_list(r.unknowns);
    Json branches = Json::array();
    for (std::size_t i = 0; i < r.branches.size(); ++i)
        branches.push_back(branch_to_json(r.branches[i], i));
    j["branches"] = branches;
    j["notices"] = string_list(r.notices);
    j["branch_cap"] = r.branch_cap;
    return j;
}

Json reports_payload(const std::vector<DerivationReport>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back(report_to_json(r));
    return out;
}

Json make_document(const Json& invocation, const Json& payload) {
    Json doc;
    doc["schema_version"] = "1.0";
    doc["invocation"] = invocation;
    doc["payload"] = payload;
    return doc;
}

std::string render_document(const Json& doc) { return doc.dump(2) + "\n"; }

std::string report_to_text(const DerivationReport& r) {
    std::ostringstream os;
    os << "pattern " << render_symbol(r.pattern.symbol) << "\n";
    if (!r.context_path.empty()) {
        os << "context:";
        for (const auto& s : r.context_path) os << " " << s;
        os << "\n";
    }
    os << "ansatz (" << r.ansatz.unknowns.size() << " unknowns):\n";
    for (std::size_t i = 0; i < r.ansatz.monomials.size(); ++i)
        os << "  " << r.ansatz.unknowns[i] << " * " << render_monomial(r.ansatz.monomials[i])
           << "\n";
    for (const auto& u : r.units) {
        os << "unit " << render_letter(u.letter) << ":";
        for (const auto& c : u.constraints.items()) os << " " << c.render();
        if (u.constraints.empty()) os << " (none)";
        os << "\n";
    }
    os << "exchange:";
    if (r.exchange.applicable) {
        for (const auto& c : r.exchange.constraints.items()) os << " " << c.render();
        if (r.exchange.constraints.empty()) os << " (none)";
    } else {
        os << " not applicable";
    }
    os << "\n";
    for (const auto& c : r.associativity) {
        os << "instance " << render_symbol(c.instance) << ":";
        for (const auto& route : c.routes)
            os << " " << route.label << (route.feasible ? "" : "[missing " + route.missing_shape + "]");
        os << "\n";
        for (const auto& k : c.constraints.items()) os << "  " << k.render() << "\n";
    }
    os << "combined constraints (" << r.combined.size() << "):\n";
    for (const auto& c : r.combined.items()) os << "  " << c.render() << "\n";
    os << "branches (" << r.branches.size() << "):\n";
    for (std::size_t i = 0; i < r.branches.size(); ++i) {
        const auto& br = r.branches[i];
        os << "  branch " << (i + 1) << (br.verified ? "" : " UNVERIFIED") << ":";
        for (const auto& [v, val] : br.branch.assignments)
            os << " " << v << " = " << val.render() << ";";
        if (!br.branch.free_params.empty()) {
            os << " free:";
            for (const auto& f : br.branch.free_params) os << " " << f;
        }
        os << "\n";
        for (const auto& c : br.branch.residual) os << "    residual " << c.render() << "\n";
        if (br.normalizable)
            os << "    normalized: " << render_symbol(r.pattern.symbol) << " = "
               << br.normalized.rhs.render() << "\n";
    }
    for (const auto& n : r.notices) os << "note: " << n << "\n";
    return os.str();
}

std::string report_to_latex(const DerivationReport& r) {
    std::ostringstream os;
    os << "\\section*{" << render_symbol_latex(r.pattern.symbol) << "}\n";
    os << "\\begin{align*}\n";
    os << render_symbol_latex(r.pattern.symbol) << " &= ";
    for (std::size_t i = 0; i < r.ansatz.monomials.size(); ++i) {
        if (i) os << " + ";
        os << "\\alpha_{" << (i + 1) << "} " << render_monomial_latex(r.ansatz.monomials[i]);
    }
    os << "\\\\\n\\end{align*}\n";
    os << "Constraints:\n\\begin{itemize}\n";
    for (const auto& c : r.combined.items())
        os << "  \\item $" << c.render_latex() << " = 0$\n";
    os << "\\end{itemize}\n";
    os << "Branches:\n\\begin{itemize}\n";
    for (std::size_t i = 0; i < r.branches.size(); ++i) {
        const auto& br = r.branches[i];
        os << "  \\item";
        if (br.normalizable)
            os << " $" << render_symbol_latex(r.pattern.symbol) << " = "
               << br.normalized.rhs.render_latex() << "$\n";
        else
            os << " unresolved case with residual\n";
    }
    os << "\\end{itemize}\n";
    return os.str();
}

std::string reports_to_text(const std::vector<DerivationReport>& rs) {
    std::string out;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) out += "\n";
        out += report_to_text(rs[i]);
    }
    return out;
}

std::string reports_to_latex(const std::vector<DerivationReport>& rs) {
    std::string out;
    for (const auto& r : rs) out += report_to_latex(r);
    return out;
}

}  // namespace uniprod
