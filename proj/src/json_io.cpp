#include "wreathlab/json_io.hpp"

#include <sstream>

namespace wreathlab {

namespace {

ojson perm_json(const Perm& p) { return ojson(p.images()); }

std::string invariants_string(const std::vector<std::uint64_t>& inv) {
    std::string s = "[";
    for (std::size_t i = 0; i < inv.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(inv[i]);
    }
    return s + "]";
}

}  // namespace

ojson group_summary_json(const GroupPtr& g) {
    return ojson{{"label", g->label()}, {"order", g->order()}, {"degree", g->degree()}};
}

ojson tower_spec_json(const TowerSpec& spec) {
    return ojson{{"orders", spec.orders},
                 {"bracketing", spec.bracketing == Bracketing::descending ? "desc" : "asc"},
                 {"expression", spec.to_string()}};
}

ojson hom_json(const Homomorphism& hom) {
    ojson images = ojson::array();
    for (const Perm& p : hom.gen_images()) images.push_back(perm_json(p));
    return ojson{{"schema", kCertSchema},
                 {"kind", "homomorphism"},
                 {"anchor", hom.anchor()},
                 {"domain", group_summary_json(hom.domain())},
                 {"codomain", group_summary_json(hom.codomain())},
                 {"generator_images", images},
                 {"verified", hom.verified()},
                 {"surjective", hom.surjective()},
                 {"kernel_order", hom.kernel_order()}};
}

ojson semiabelian_json(const GroupPtr& g, const SemiabelianCertificate& cert) {
    ojson chain = ojson::array();
    for (const SemiabelianStep& step : cert.chain) {
        ojson a = ojson::array(), h = ojson::array();
        for (const Perm& p : step.abelian_normal) a.push_back(perm_json(p));
        for (const Perm& p : step.complement) h.push_back(perm_json(p));
        chain.push_back(ojson{{"abelian_normal_order", step.abelian_normal.size()},
                              {"complement_order", step.complement.size()},
                              {"abelian_normal", a},
                              {"complement", h}});
    }
    ojson j{{"schema", kCertSchema},
            {"kind", "semiabelian"},
            {"group", group_summary_json(g)},
            {"verdict", cert.verdict ? "yes" : "no"},
            {"chain", chain},
            {"terminal", cert.terminal}};
    if (!cert.verdict) j["counterexample_note"] = cert.counterexample_note;
    return j;
}

ojson wl_certificate_json(const WlCertificate& cert) {
    ojson j{{"schema", kCertSchema},
            {"kind", "wl"},
            {"group", cert.group_label},
            {"order", cert.order},
            {"dg", cert.dg_value},
            {"dl", cert.dl_value},
            {"lower", ojson{{"value", cert.lower}, {"reasons", cert.lower_reasons}}}};
    if (cert.upper) {
        ojson up{{"value", *cert.upper}};
        if (cert.witness_spec) up["tower"] = tower_spec_json(*cert.witness_spec);
        if (cert.witness) up["witness"] = hom_json(*cert.witness);
        j["upper"] = up;
    }
    if (cert.exact) j["exact"] = *cert.exact;
    j["method"] = cert.method;
    j["search"] = ojson{{"refuted_up_to", cert.refuted_up_to},
                        {"caps_interfered", cert.caps_interfered},
                        {"budget_hit", cert.budget_hit},
                        {"nodes", cert.nodes}};
    return j;
}

ojson wl_eq_dg_json(const WlEqDgCheck& check) {
    ojson j{{"schema", kCertSchema},
            {"kind", "wl-eq-dg"},
            {"decided", check.decided},
            {"wl_equals_dg", check.decided ? ojson(check.wl_equals_dg) : ojson(nullptr)}};
    if (check.witness_prime) j["witness_prime"] = *check.witness_prime;
    if (check.witness_spec) j["witness_tower"] = tower_spec_json(*check.witness_spec);
    if (check.witness_hom) j["witness"] = hom_json(*check.witness_hom);
    j["refuted_at_dg"] = check.refuted_at_dg;
    j["search_complete"] = check.search_complete;
    j["discrepancy"] = check.discrepancy;
    if (!check.note.empty()) j["note"] = check.note;
    return j;
}

ojson conductor_json(const ConductorRecord& rec) {
    return ojson{{"schema", kCertSchema},
                 {"kind", "cyclic-realization"},
                 {"group", "C" + std::to_string(rec.n)},
                 {"prime", rec.prime},
                 {"ramified_primes", 1},
                 {"candidates_checked", rec.candidates_checked},
                 {"note", rec.note}};
}

ojson survey_row_json(const SurveyRow& row) {
    ojson j{{"label", row.label},
            {"order", row.order},
            {"abelian_invariants", row.ab_invariants},
            {"dg", row.dg_value},
            {"dl", row.dl_value},
            {"nilpotent", row.nilpotent},
            {"semiabelian", row.semiabelian},
            {"wl_lower", row.wl_lower},
            {"wl_upper", row.wl_upper ? ojson(*row.wl_upper) : ojson(nullptr)},
            {"wl_exact", row.wl_exact ? ojson(*row.wl_exact) : ojson(nullptr)},
            {"wl_method", row.wl_method},
            {"wl_eq_dg", row.wl_eq_dg_decided ? ojson(row.wl_eq_dg) : ojson(nullptr)}};
    if (row.witness_prime) j["witness_prime"] = *row.witness_prime;
    if (row.witness_spec) j["witness_tower"] = row.witness_spec->to_string();
    j["iso_to"] = row.iso_to;
    j["notes"] = row.notes;
    return j;
}

ojson survey_json(const std::vector<SurveyRow>& rows, std::uint64_t seed) {
    ojson arr = ojson::array();
    for (const SurveyRow& r : rows) arr.push_back(survey_row_json(r));
    return ojson{{"schema", kCertSchema}, {"kind", "survey"}, {"seed", seed}, {"rows", arr}};
}

std::string survey_tsv(const std::vector<SurveyRow>& rows) {
    std::ostringstream out;
    out << "label\torder\tinvariants\tdg\tdl\tnilpotent\tsemiabelian\twl\twl_eq_dg\twitness\tiso_to\tnotes\n";
    for (const SurveyRow& r : rows) {
        out << r.label << '\t' << r.order << '\t' << invariants_string(r.ab_invariants) << '\t'
            << r.dg_value << '\t' << r.dl_value << '\t' << (r.nilpotent ? "yes" : "no") << '\t'
            << (r.semiabelian ? "yes" : "no") << '\t';
        if (r.wl_exact)
            out << *r.wl_exact;
        else if (r.wl_upper)
            out << "[" << r.wl_lower << "," << *r.wl_upper << "]";
        else
            out << ">=" << r.wl_lower;
        out << '\t' << (r.wl_eq_dg_decided ? (r.wl_eq_dg ? "yes" : "no") : "?") << '\t';
        if (r.witness_prime)
            out << "p=" << *r.witness_prime << " " << (r.witness_spec ? r.witness_spec->to_string() : "");
        out << '\t' << r.iso_to << '\t' << r.notes << '\n';
    }
    return out.str();
}

}  // namespace wreathlab

