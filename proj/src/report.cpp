#include "acolen/report.hpp"

#include "acolen/literal.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>

namespace acolen {

using ordered = nlohmann::ordered_json;

namespace {

ordered rational_obj(const BigRat& x) {
    ordered j;
    j["num"] = numerator(x).str();
    j["den"] = denominator(x).str();
    j["decimal"] = decimal_string(x);
    return j;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw input_error("unknown output format: " + name);
}

std::string emit_sequence_csv(const std::vector<SequencePoint>& seq) {
    std::ostringstream os;
    os << "index,colength,a_n_num,a_n_den\n";
    for (const auto& p : seq)
        os << p.index << "," << p.colength.str() << "," << numerator(p.a).str() << ","
           << denominator(p.a).str() << "\n";
    return os.str();
}

std::string emit_sequence_json(const std::vector<SequencePoint>& seq) {
    ordered arr = ordered::array();
    for (const auto& p : seq) {
        ordered j;
        j["index"] = p.index;
        j["colength"] = p.colength.str();
        j["a_n"] = rational_obj(p.a);
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string emit_sequence_text(const std::vector<SequencePoint>& seq) {
    std::ostringstream os;
    size_t wi = 5, wc = 8;
    for (const auto& p : seq) {
        wi = std::max(wi, std::to_string(p.index).size());
        wc = std::max(wc, p.colength.str().size());
    }
    os << std::setw(static_cast<int>(wi)) << "index" << "  " << std::setw(static_cast<int>(wc))
       << "colength" << "  a_n\n";
    for (const auto& p : seq)
        os << std::setw(static_cast<int>(wi)) << p.index << "  " << std::setw(static_cast<int>(wc))
           << p.colength.str() << "  " << decimal_string(p.a) << "\n";
    return os.str();
}

std::string emit_sequence(const std::vector<SequencePoint>& seq, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::csv: return emit_sequence_csv(seq);
        case OutputFormat::json: return emit_sequence_json(seq);
        case OutputFormat::text: return emit_sequence_text(seq);
    }
    throw input_error("unknown format");
}

std::string emit_report_json(const VerifyReport& rep) {
    ordered j;
    j["claim"] = rep.claim;
    j["witness_range"] = rep.witness_range;
    j["lhs"] = rational_obj(rep.lhs);
    j["rhs"] = rational_obj(rep.rhs);
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass;
    if (rep.inconclusive) j["inconclusive"] = true;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j.dump(2);
}

std::string emit_report_text(const VerifyReport& rep) {
    std::ostringstream os;
    os << (rep.pass ? "PASS" : "FAIL") << (rep.inconclusive ? " (inconclusive)" : "") << ": "
       << rep.claim << "\n"
       << "  range:     " << rep.witness_range << "\n"
       << "  lhs:       " << decimal_string(rep.lhs) << "\n"
       << "  rhs:       " << decimal_string(rep.rhs) << "\n"
       << "  tolerance: " << rep.tolerance << "\n";
    if (!rep.notes.empty()) os << "  notes:     " << rep.notes << "\n";
    return os.str();
}

std::string emit_report(const VerifyReport& rep, OutputFormat fmt) {
    if (fmt == OutputFormat::json) return emit_report_json(rep);
    return emit_report_text(rep);
}

std::string emit_limit_json(const LimitEstimate& est) {
    ordered j;
    j["samples"] = est.samples.size();
    j["first_index"] = est.samples.front().index;
    j["last_index"] = est.samples.back().index;
    j["liminf_estimate"] = rational_obj(est.liminf_estimate);
    j["limsup_estimate"] = rational_obj(est.limsup_estimate);
    if (est.limit) j["limit"] = rational_obj(*est.limit);
    j["eta"] = rational_obj(est.eta);
    j["rate_envelope"] = rational_obj(est.rate_envelope);
    j["rate_constant_ls"] = est.rate_constant_ls;
    j["tolerance"] = est.tolerance;
    j["bbl_constant"] = est.bbl_c;
    return j.dump(2);
}

std::string emit_limit_text(const LimitEstimate& est) {
    std::ostringstream os;
    os << "samples:   " << est.samples.size() << " (indices " << est.samples.front().index << ".."
       << est.samples.back().index << ")\n"
       << "liminf ~=  " << decimal_string(est.liminf_estimate) << "\n"
       << "limsup ~=  " << decimal_string(est.limsup_estimate) << "\n";
    if (est.limit)
        os << "limit  ~=  " << decimal_string(*est.limit) << " (tolerance " << est.tolerance << ")\n";
    else
        os << "limit:     not declared at tolerance " << est.tolerance << "\n";
    os << "eta:       " << decimal_string(est.eta) << "\n"
       << "C (env):   " << decimal_string(est.rate_envelope) << "\n"
       << "C (lsq):   " << est.rate_constant_ls << "\n"
       << "BBL c:     " << est.bbl_c << "\n";
    return os.str();
}

namespace {

ordered witness_obj(const WitnessSearch& w) {
    ordered j;
    j["found"] = w.found;
    if (w.found) j["witness"] = w.witness;
    j["degree_bound"] = w.degree_bound;
    return j;
}

}  // namespace

std::string emit_classification_json(const ClassificationReport& rep) {
    ordered j;
    j["checked_bound"] = rep.checked_bound;
    j["index"] = rep.index == IndexKind::natural ? "natural" : "p-power";
    if (rep.graded) j["graded"] = *rep.graded;
    if (rep.weakly_graded) j["weakly_graded"] = witness_obj(*rep.weakly_graded);
    if (rep.p_family) j["p_family"] = *rep.p_family;
    if (rep.weakly_p) j["weakly_p"] = witness_obj(*rep.weakly_p);
    if (rep.inverse_p_family) j["inverse_p_family"] = *rep.inverse_p_family;
    if (rep.weakly_inverse_p) j["weakly_inverse_p"] = witness_obj(*rep.weakly_inverse_p);
    if (rep.f_graded) j["f_graded"] = *rep.f_graded;
    if (rep.bbl) {
        ordered b;
        b["found"] = rep.bbl->found;
        b["c"] = rep.bbl->c;
        b["unbounded_trend"] = rep.bbl->unbounded_trend;
        j["bbl"] = b;
    }
    if (rep.bal) {
        ordered b;
        b["found"] = rep.bal->found;
        b["c"] = rep.bal->c;
        j["bal"] = b;
    }
    return j.dump(2);
}

std::string emit_classification_text(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "checked bound: " << rep.checked_bound << "\n";
    auto flag = [&](const char* name, const std::optional<bool>& v) {
        if (v) os << name << ": " << (*v ? "yes" : "no") << "\n";
    };
    auto wit = [&](const char* name, const std::optional<WitnessSearch>& w) {
        if (!w) return;
        os << name << ": " << (w->found ? "witness " + monomial_to_string(w->witness) : "none found")
           << " (degree bound " << w->degree_bound << ")\n";
    };
    flag("graded", rep.graded);
    wit("weakly graded", rep.weakly_graded);
    flag("p-family", rep.p_family);
    wit("weakly p", rep.weakly_p);
    flag("inverse p-family", rep.inverse_p_family);
    wit("weakly inverse p", rep.weakly_inverse_p);
    flag("F-graded", rep.f_graded);
    if (rep.bbl)
        os << "BBL: " << (rep.bbl->found ? "c = " + std::to_string(rep.bbl->c) : "not established")
           << (rep.bbl->unbounded_trend ? " (threshold trend looks superlinear)" : "") << "\n";
    if (rep.bal)
        os << "BAL: " << (rep.bal->found ? "c = " + std::to_string(rep.bal->c) : "no constant found")
           << "\n";
    return os.str();
}

}  // namespace acolen
