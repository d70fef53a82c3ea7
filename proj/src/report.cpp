#include "logdiv/report.hpp"

#include <sstream>

#include "logdiv/parser.hpp"

namespace logdiv {

Json series_to_json(const Series &s, const std::vector<std::string> &vars) {
    Json coeffs = Json::array();
    for (const auto &[m, c] : s.terms())
        coeffs.push_back(Json::array({Json(m.exp), rat_to_string(c)}));
    Json j;
    j["expr"] = print_series(s, vars);
    j["truncation"] = s.exact() ? Json("exact") : Json(*s.truncation());
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json derivation_to_json(const Derivation &d, const std::vector<std::string> &vars) {
    Json exprs = Json::array();
    Json coeffs = Json::array();
    for (int i = 0; i < d.nvars(); ++i) {
        exprs.push_back(print_series(d.coeff(i), vars));
        Json cl = Json::array();
        for (const auto &[m, c] : d.coeff(i).terms())
            cl.push_back(Json::array({Json(m.exp), rat_to_string(c)}));
        coeffs.push_back(std::move(cl));
    }
    Json j;
    j["coefficients"] = std::move(exprs);
    j["coefficient_lists"] = std::move(coeffs);
    auto k = d.truncation();
    j["truncation"] = k ? Json(*k) : Json("exact");
    return j;
}

Json validity_to_json(const Validity &v) {
    if (v.exact)
        return Json("exact");
    Json j;
    j["mod"] = v.k;
    return j;
}

namespace {

Json traces_to_json(const std::vector<std::optional<Rat>> &traces) {
    Json j = Json::array();
    for (const auto &t : traces)
        j.push_back(t ? Json(rat_to_string(*t)) : Json(nullptr));
    return j;
}

Json basis_to_json(const SaitoBasis &b, const std::vector<std::string> &vars) {
    Json j;
    j["certified"] = true;
    Json ds = Json::array();
    for (const Derivation &d : b.derivations)
        ds.push_back(derivation_to_json(d, vars));
    j["derivations"] = std::move(ds);
    Json mat = Json::array();
    for (const auto &row : b.saito_matrix) {
        Json r = Json::array();
        for (const Series &e : row)
            r.push_back(print_series(e, vars));
        mat.push_back(std::move(r));
    }
    j["saito_matrix"] = std::move(mat);
    j["determinant"] = series_to_json(b.determinant, vars);
    j["unit"] = series_to_json(b.unit, vars);
    Json cofs = Json::array();
    for (const LogWitness &w : b.witnesses)
        cofs.push_back(print_series(w.cofactor, vars));
    j["cofactors"] = std::move(cofs);
    j["validity"] = validity_to_json(b.validity);
    return j;
}

} // namespace

Json analyze_report_json(const AnalysisReport &r, const std::vector<std::string> &vars) {
    Json j;
    j["schema"] = "logdiv.analyze.v1";
    Json input;
    input["variables"] = vars;
    input["f"] = print_series(r.f, vars);
    Json cfg;
    cfg["order"] = r.options.order;
    cfg["degree"] = r.options.degree;
    cfg["skip_reduced_check"] = r.options.skip_reduced_check;
    input["config"] = std::move(cfg);
    j["input"] = std::move(input);

    j["reduced"] = r.reduced ? Json(*r.reduced) : Json(nullptr);
    j["order_of_f"] = r.order_of_f;

    Json prod;
    prod["verdict"] = r.product.is_product;
    prod["bound"] = r.product.bound;
    prod["witness"] = r.product.witness
                          ? derivation_to_json(r.product.witness->derivation, vars)
                          : Json(nullptr);
    if (r.split) {
        Json sp;
        Json chg = Json::array();
        for (const Series &s : r.split->change)
            chg.push_back(print_series(s, vars));
        sp["change"] = std::move(chg);
        sp["straightened_variable"] = vars[static_cast<size_t>(r.split->straightened_var)];
        sp["unit"] = series_to_json(r.split->unit, vars);
        sp["g"] = series_to_json(r.split->g, vars);
        sp["order"] = r.split->k;
        prod["split"] = std::move(sp);
    } else {
        prod["split"] = nullptr;
    }
    if (r.reduction) {
        // the recursion drops the coordinate of the trivial witness direction
        std::vector<std::string> subvars;
        for (size_t i = 0; i < vars.size(); ++i)
            if (!r.product.witness ||
                r.product.witness->derivation.coeff(static_cast<int>(i)).is_zero())
                subvars.push_back(vars[i]);
        prod["reduction"] = analyze_report_json(*r.reduction, subvars);
    } else {
        prod["reduction"] = nullptr;
    }
    j["product"] = std::move(prod);

    if (r.basis) {
        j["basis"] = basis_to_json(*r.basis, vars);
    } else {
        Json jb;
        jb["certified"] = false;
        jb["bound"] = r.options.degree;
        j["basis"] = std::move(jb);
    }
    j["generators"] = Json{{"found", r.generators_found}, {"used", r.generators_used}};

    Json seh;
    seh["found"] = r.seh.found;
    seh["bound"] = r.seh.bound;
    seh["witness"] = r.seh.euler ? derivation_to_json(*r.seh.euler, vars) : Json(nullptr);
    seh["validity"] = validity_to_json(r.seh.validity);
    seh["via"] = r.seh.via_unit_cofactor ? "unit_cofactor" : "membership";
    j["seh"] = std::move(seh);

    Json ob;
    ob["applicable"] = r.order_bound.applicable;
    ob["holds"] = r.order_bound.applicable ? Json(r.order_bound.holds) : Json(nullptr);
    ob["order"] = r.order_bound.order;
    j["order_bound_check"] = std::move(ob);

    if (r.plane_nilpotency) {
        Json pn;
        pn["applicable"] = r.plane_nilpotency->applicable;
        if (!r.plane_nilpotency->applicable) {
            pn["reason"] = r.plane_nilpotency->reason;
        } else {
            Json entries = Json::array();
            for (const auto &[idx, nil] : r.plane_nilpotency->entries)
                entries.push_back(Json{{"index", idx}, {"nilpotent", nil}});
            pn["entries"] = std::move(entries);
            pn["all_nilpotent"] = r.plane_nilpotency->all_nilpotent;
        }
        j["plane_nilpotency"] = std::move(pn);
    } else {
        j["plane_nilpotency"] = nullptr;
    }

    j["traces"] = traces_to_json(r.traces);
    j["lct_obstruction"] = to_string(r.lct.verdict);
    j["lct_note"] = r.lct.note;
    j["notes"] = r.notes;
    return j;
}

Json sn_report_json(const SNDecomposition &sn, const Derivation &input,
                    const std::vector<std::string> &vars) {
    Json j;
    j["schema"] = "logdiv.sn.v1";
    j["input"] = derivation_to_json(input, vars);
    j["order"] = sn.k;
    j["semisimple"] = derivation_to_json(sn.semisimple, vars);
    j["nilpotent"] = derivation_to_json(sn.nilpotent, vars);
    return j;
}

Json diag_report_json(const DiagNormalization &d, const std::vector<Rat> &lambda,
                      const std::vector<std::string> &vars) {
    Json j;
    j["schema"] = "logdiv.normalize.diag.v1";
    Json lam = Json::array();
    for (const Rat &l : lambda)
        lam.push_back(rat_to_string(l));
    j["lambda"] = std::move(lam);
    j["order"] = d.k;
    j["unit"] = series_to_json(d.unit, vars);
    j["normalized"] = series_to_json(d.normalized, vars);
    j["eigenvalue"] = rat_to_string(d.eigenvalue);
    j["cofactor"] = series_to_json(d.cofactor, vars);
    return j;
}

Json plane_report_json(const PlaneBasisNormalForm &p, const std::vector<std::string> &vars) {
    Json j;
    j["schema"] = "logdiv.normalize.plane.v1";
    j["kind"] = p.kind == PlaneBasisKind::CASE_1 ? "CASE_1" : "CASE_2";
    j["parameter"] = rat_to_string(p.case2_parameter);
    Json chg = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c)
            row.push_back(rat_to_string(p.coordinate_change.at(i, c)));
        chg.push_back(std::move(row));
    }
    j["coordinate_change"] = std::move(chg);
    j["transformed_f"] = series_to_json(p.transformed_f, vars);
    Json basis = Json::array();
    for (const Derivation &d : p.transformed_basis)
        basis.push_back(derivation_to_json(d, vars));
    j["transformed_basis"] = std::move(basis);
    j["validity"] = validity_to_json(p.validity);
    return j;
}

namespace {

std::string validity_text(const Validity &v) {
    return v.exact ? "exact" : "mod m^" + std::to_string(v.k);
}

void derivation_text(std::ostream &os, const Derivation &d,
                     const std::vector<std::string> &vars) {
    os << "[";
    for (int i = 0; i < d.nvars(); ++i)
        os << (i ? ", " : "") << print_series(d.coeff(i), vars);
    os << "]";
}

} // namespace

std::string analyze_report_text(const AnalysisReport &r, const std::vector<std::string> &vars) {
    std::ostringstream os;
    os << "analysis of f = " << print_series(r.f, vars) << "   (order " << r.options.order
       << ", degree bound " << r.options.degree << ")\n";
    os << "  reduced:        "
       << (r.reduced ? (*r.reduced ? "yes" : "NO") : "not checked") << "\n";
    os << "  order of f:     " << r.order_of_f << "\n";
    os << "  product:        " << (r.product.is_product ? "yes" : "no")
       << " (degree bound " << r.product.bound << ")";
    if (r.product.witness) {
        os << ", witness ";
        derivation_text(os, r.product.witness->derivation, vars);
    }
    os << "\n";
    if (r.split)
        os << "    split: g = " << print_series(r.split->g, vars) << ", unit = "
           << print_series(r.split->unit, vars) << " (mod m^" << r.split->k << ")\n";
    if (r.basis) {
        os << "  basis:          certified (" << validity_text(r.basis->validity)
           << "), det(A) = " << print_series(r.basis->determinant, vars) << "\n";
        for (size_t i = 0; i < r.basis->derivations.size(); ++i) {
            os << "    delta_" << i + 1 << " = ";
            derivation_text(os, r.basis->derivations[i], vars);
            os << ", cofactor " << print_series(r.basis->witnesses[i].cofactor, vars) << "\n";
        }
    } else {
        os << "  basis:          not certified at degree bound " << r.options.degree << "\n";
    }
    os << "  seh:            " << (r.seh.found ? "yes" : "refuted at bound") << " (bound "
       << r.seh.bound << ")";
    if (r.seh.euler) {
        os << ", witness ";
        derivation_text(os, *r.seh.euler, vars);
    }
    os << "\n";
    if (r.order_bound.applicable)
        os << "  order bound:    order(f) >= n+1 "
           << (r.order_bound.holds ? "holds" : "VIOLATED") << "\n";
    if (r.plane_nilpotency && r.plane_nilpotency->applicable) {
        os << "  plane curve:    singular-cofactor basis elements nilpotent: "
           << (r.plane_nilpotency->all_nilpotent ? "all" : "NOT ALL") << "\n";
    }
    os << "  traces:         [";
    for (size_t i = 0; i < r.traces.size(); ++i)
        os << (i ? ", " : "") << (r.traces[i] ? rat_to_string(*r.traces[i]) : "non-singular");
    os << "]\n";
    os << "  lct obstruction: " << to_string(r.lct.verdict) << "\n";
    if (!r.lct.note.empty())
        os << "    " << r.lct.note << "\n";
    for (const std::string &n : r.notes)
        os << "  note: " << n << "\n";
    if (r.reduction) {
        std::vector<std::string> subvars;
        for (size_t i = 0; i < vars.size(); ++i)
            if (!r.product.witness ||
                r.product.witness->derivation.coeff(static_cast<int>(i)).is_zero())
                subvars.push_back(vars[i]);
        os << "  reduced germ analysis:\n";
        std::istringstream sub(analyze_report_text(*r.reduction, subvars));
        std::string line;
        while (std::getline(sub, line))
            os << "  | " << line << "\n";
    }
    return os.str();
}

std::string sn_report_text(const SNDecomposition &sn, const std::vector<std::string> &vars) {
    std::ostringstream os;
    os << "jordan decomposition mod m^" << sn.k << "\n  semisimple: ";
    derivation_text(os, sn.semisimple, vars);
    os << "\n  nilpotent:  ";
    derivation_text(os, sn.nilpotent, vars);
    os << "\n";
    return os.str();
}

std::string diag_report_text(const DiagNormalization &d, const std::vector<std::string> &vars) {
    std::ostringstream os;
    os << "diagonal normalization mod m^" << d.k << "\n";
    os << "  unit u      = " << print_series(d.unit, vars) << "\n";
    os << "  g = u^-1 f  = " << print_series(d.normalized, vars) << "\n";
    os << "  eigenvalue  = " << rat_to_string(d.eigenvalue) << "\n";
    os << "  cofactor c  = " << print_series(d.cofactor, vars) << "\n";
    return os.str();
}

std::string plane_report_text(const PlaneBasisNormalForm &p, const std::vector<std::string> &vars) {
    std::ostringstream os;
    os << "plane basis normal form: " << (p.kind == PlaneBasisKind::CASE_1 ? "CASE_1" : "CASE_2");
    if (p.kind == PlaneBasisKind::CASE_2)
        os << " (a = " << rat_to_string(p.case2_parameter) << ")";
    os << "\n  transformed f = " << print_series(p.transformed_f, vars) << "\n";
    for (size_t i = 0; i < p.transformed_basis.size(); ++i) {
        os << "  delta_" << i + 1 << " = ";
        derivation_text(os, p.transformed_basis[i], vars);
        os << "\n";
    }
    os << "  certified " << validity_text(p.validity) << "\n";
    return os.str();
}

} // namespace logdiv
