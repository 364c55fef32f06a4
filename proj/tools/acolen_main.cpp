#include "acolen/asymptotics.hpp"
#include "acolen/charp.hpp"
#include "acolen/literal.hpp"
#include "acolen/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace acolen;
using ordered = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Common {
    std::string format = "text";
    int threads = 0;
};

MonomialIdeal load_ideal(const std::string& arg, int d) {
    std::string text = arg;
    size_t start = text.find_first_not_of(" \t\n");
    if (start != std::string::npos && (text[start] == '{')) return ideal_from_json(slurp_arg(arg));
    if (start != std::string::npos && text[start] != 'x' && text[start] != '0' && text[start] != '1') {
        // maybe a file path
        std::string contents = slurp_arg(arg);
        size_t s2 = contents.find_first_not_of(" \t\n");
        if (s2 != std::string::npos && contents[s2] == '{') return ideal_from_json(contents);
        return parse_ideal_literal(contents, d);
    }
    return parse_ideal_literal(text, d);
}

FamilyEvaluator load_family(const std::string& arg) { return FamilyEvaluator(family_from_json(slurp_arg(arg))); }

std::vector<Int> plan_indices(const FamilyEvaluator& F, Int n_max, Int e_max) {
    if (F.index_kind() == IndexKind::p_power) {
        Int q = 1;
        std::vector<Int> idx;
        for (Int e = 0; e <= e_max; ++e) {
            idx.push_back(q);
            q *= F.p();
        }
        return idx;
    }
    return F.indices_up_to(n_max);
}

int run_colength(const std::string& ideal_arg, int d, bool points, const Common& c) {
    MonomialIdeal I = load_ideal(ideal_arg, d);
    ColengthResult r = points ? colength_with_points(I) : colength(I, c.threads);
    if (!r.finite) {
        std::cerr << "error: ideal is not m-primary; colength is infinite\n";
        return kExitInput;
    }
    OutputFormat fmt = parse_format(c.format);
    if (fmt == OutputFormat::json) {
        ordered j;
        j["ideal"] = ordered::parse(ideal_to_json(I));
        j["colength"] = r.value.str();
        j["method"] = r.method == ColengthMethod::box_enumeration ? "box-enumeration"
                                                                  : "inclusion-exclusion";
        if (r.complement_points) {
            j["complement_points"] = ordered::array();
            for (const auto& p : *r.complement_points) j["complement_points"].push_back(p);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.value.str() << "\n";
        if (r.complement_points) {
            for (const auto& p : *r.complement_points) std::cout << monomial_to_string(p) << "\n";
        }
    }
    return kExitPass;
}

int run_ideal_op(const std::string& op, const std::string& a_arg, const std::string& b_arg, int d,
                 Int n, Int q, Int p, const Common& c) {
    MonomialIdeal A = load_ideal(a_arg, d);
    MonomialIdeal R = A;
    if (op == "normalize") {
        R = A;
    } else if (op == "sum" || op == "product" || op == "intersect" || op == "colon") {
        if (b_arg.empty()) throw input_error("--other is required for " + op);
        MonomialIdeal B = load_ideal(b_arg, A.dim());
        if (op == "sum") R = sum(A, B);
        if (op == "product") R = product(A, B);
        if (op == "intersect") R = intersect(A, B);
        if (op == "colon") R = colon(A, B);
    } else if (op == "power") {
        R = power(A, n);
    } else if (op == "bracket") {
        R = bracket_power(A, q);
    } else if (op == "generalized-bracket") {
        R = generalized_bracket_power(A, n, p);
    } else if (op == "closure") {
        R = integral_closure(A);
    } else {
        throw input_error("unknown ideal op: " + op);
    }
    OutputFormat fmt = parse_format(c.format);
    if (fmt == OutputFormat::json)
        std::cout << ideal_to_json(R) << "\n";
    else
        std::cout << ideal_to_literal(R) << "\n";
    return kExitPass;
}

int run_classify(const std::string& family_arg, Int bound, Int degree, const Common& c) {
    FamilyEvaluator F = load_family(family_arg);
    auto rep = classify(F, bound, degree);
    OutputFormat fmt = parse_format(c.format);
    std::cout << (fmt == OutputFormat::json ? emit_classification_json(rep)
                                            : emit_classification_text(rep));
    if (fmt == OutputFormat::json) std::cout << "\n";
    return kExitPass;
}

int run_sequence(const std::string& family_arg, Int n_max, Int e_max, const Common& c) {
    FamilyEvaluator F = load_family(family_arg);
    auto seq = colength_sequence(F, plan_indices(F, n_max, e_max), c.threads);
    std::cout << emit_sequence(seq, parse_format(c.format));
    return kExitPass;
}

int run_limit(const std::string& family_arg, Int n_max, Int e_max, double tol, const Common& c) {
    FamilyEvaluator F = load_family(family_arg);
    auto est = limit_estimate(F, plan_indices(F, n_max, e_max), tol, c.threads);
    OutputFormat fmt = parse_format(c.format);
    std::cout << (fmt == OutputFormat::json ? emit_limit_json(est) + "\n" : emit_limit_text(est));
    return kExitPass;
}

int run_trajectory(const std::string& family_arg, const std::string& point, Int window,
                   const Common& c) {
    FamilyEvaluator F = load_family(family_arg);
    RatPoint x;
    std::stringstream ss(point);
    std::string coord;
    while (std::getline(ss, coord, ',')) x.push_back(parse_rational(coord));
    auto tc = trajectory_classify(F, x, F.indices_up_to(window));
    const char* name = tc.kind == TrajectoryKind::nabla_low     ? "nabla_low"
                       : tc.kind == TrajectoryKind::delta_up    ? "delta_up"
                       : tc.kind == TrajectoryKind::oscillating ? "oscillating"
                                                                : "undetermined";
    if (parse_format(c.format) == OutputFormat::json) {
        ordered j;
        j["classification"] = name;
        j["window"] = {tc.window.front(), tc.window.back()};
        std::string bits;
        for (bool b : tc.complement_bits) bits += b ? '1' : '0';
        j["complement_bits"] = bits;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << name << " (window " << tc.window.front() << ".." << tc.window.back() << ")\n";
    }
    return kExitPass;
}

int run_height(const std::string& family_arg, Int probe, Int extent, const std::string& step,
               double tol, const Common& c) {
    FamilyEvaluator F = load_family(family_arg);
    auto grid = hyperplane_grid(F.dim(), extent, parse_rational(step));
    auto hs = height_sample(F, grid, probe, tol);
    auto audit = lipschitz_audit(hs);
    if (parse_format(c.format) == OutputFormat::json) {
        ordered j;
        j["probe_level"] = probe;
        j["tolerance"] = tol;
        j["points"] = ordered::array();
        for (const auto& pt : hs.points) {
            ordered e;
            ordered y = ordered::array();
            for (const auto& cc : pt.y)
                y.push_back(numerator(cc).str() + "/" + denominator(cc).str());
            e["y"] = y;
            e["phi"] = pt.phi();
            e["unbounded"] = pt.unbounded;
            j["points"].push_back(std::move(e));
        }
        j["lipschitz_max_ratio"] = audit.max_ratio;
        j["lipschitz_c3"] = audit.c3;
        j["lipschitz_pass"] = audit.pass;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& pt : hs.points) {
            for (size_t k = 0; k < pt.y.size(); ++k)
                std::cout << (k ? "," : "(") << decimal_string(pt.y[k], 4);
            std::cout << ")  phi = " << (pt.unbounded ? "unbounded" : std::to_string(pt.phi()))
                      << "\n";
        }
        std::cout << "Lipschitz: max ratio " << audit.max_ratio << " vs c3 " << audit.c3 << " -> "
                  << (audit.pass ? "PASS" : "FAIL") << "\n";
    }
    return audit.pass ? kExitPass : kExitFail;
}

int run_multiplicity(const std::string& ideal_arg, int d, const std::string& kind, Int p,
                     const Common& c) {
    MonomialIdeal I = load_ideal(ideal_arg, d);
    OutputFormat fmt = parse_format(c.format);
    if (kind == "hilbert-samuel") {
        auto hs = hilbert_samuel(I);
        if (!hs.stabilized) {
            std::cerr << "error: finite differences did not stabilize; lengths trace:";
            for (const auto& v : hs.lengths) std::cerr << " " << v.str();
            std::cerr << "\n";
            return kExitFail;
        }
        if (fmt == OutputFormat::json) {
            ordered j;
            j["kind"] = "hilbert-samuel";
            j["value"] = hs.value.str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << hs.value.str() << "\n";
        }
        return kExitPass;
    }
    if (kind == "hilbert-kunz") {
        BigRat v = hilbert_kunz(I, p);
        if (fmt == OutputFormat::json) {
            ordered j;
            j["kind"] = "hilbert-kunz";
            j["num"] = numerator(v).str();
            j["den"] = denominator(v).str();
            j["decimal"] = decimal_string(v);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << decimal_string(v) << "\n";
        }
        return kExitPass;
    }
    throw input_error("unknown multiplicity kind: " + kind);
}

int emit_verdict(const VerifyReport& rep, const Common& c) {
    std::cout << emit_report(rep, parse_format(c.format));
    if (parse_format(c.format) == OutputFormat::json) std::cout << "\n";
    return rep.pass ? kExitPass : kExitFail;
}

int run_paper_example(Int p, int d, Int emax, const Common& c) {
    FamilyEvaluator F(FamilySpec::generalized_bracket_of(MonomialIdeal::maximal(d), p));
    std::vector<Int> idx;
    Int q = p;
    for (Int e = 1; e <= emax; ++e) {
        idx.push_back(q - 1);
        q *= p;
    }
    auto seq = colength_sequence(F, idx, c.threads);
    BigRat limit(binomial(p + d - 2, d), big_pow(BigInt(p), static_cast<unsigned>(d)) -
                                             binomial(p + d - 2, d - 1));
    OutputFormat fmt = parse_format(c.format);
    if (fmt == OutputFormat::csv) {
        std::cout << emit_sequence_csv(seq);
    } else if (fmt == OutputFormat::json) {
        ordered j;
        j["p"] = p;
        j["d"] = d;
        j["limit_num"] = numerator(limit).str();
        j["limit_den"] = denominator(limit).str();
        j["sequence"] = ordered::parse(emit_sequence_json(seq));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "a_n = l(R/m^[n])/n^" << d << " along n = " << p << "^e - 1:\n";
        std::cout << emit_sequence_text(seq);
        std::cout << "closed-form limit: " << numerator(limit).str() << "/"
                  << denominator(limit).str() << " = " << decimal_string(limit) << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acolen: exact asymptotic colengths for families of monomial ideals"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "output format: json|csv|text")
        ->capture_default_str();
    app.add_option("--threads", common.threads,
                   "worker threads (0 = hardware); ACOLEN_THREADS overrides");

    std::string ideal_arg, other_arg, family_a, family_b, op, point, kind, step = "1/16";
    int d = 0;
    Int n = 0, q = 2, p = 2, n_max = 60, e_max = 6, bound = 20, degree = 2, window = 60;
    Int probe = 256, extent = 4;
    double tol = 1e-3;
    bool points = false;

    auto* c_colength = app.add_subcommand("colength", "lattice colength of an m-primary ideal");
    c_colength->add_option("--ideal", ideal_arg, "ideal literal, JSON, or file")->required();
    c_colength->add_option("--d", d, "ambient dimension (inferred when omitted)");
    c_colength->add_flag("--points", points, "also list the complement lattice points");

    auto* c_op = app.add_subcommand("ideal-op", "ideal arithmetic");
    c_op->add_option("--op", op,
                     "normalize|sum|product|intersect|colon|power|bracket|generalized-bracket|closure")
        ->required();
    c_op->add_option("--ideal", ideal_arg, "first ideal")->required();
    c_op->add_option("--other", other_arg, "second ideal (binary ops)");
    c_op->add_option("--d", d, "ambient dimension");
    c_op->add_option("--n", n, "exponent for power / generalized-bracket index");
    c_op->add_option("--q", q, "bracket power index");
    c_op->add_option("--p", p, "prime for generalized-bracket");

    auto* c_classify = app.add_subcommand("classify", "family classification report");
    c_classify->add_option("--family", family_a, "family JSON or file")->required();
    c_classify->add_option("--bound", bound, "index bound (natural) or q bound (p-power)");
    c_classify->add_option("--witness-degree", degree, "degree bound for witness searches");

    auto* c_seq = app.add_subcommand("sequence", "exact colength sequence a_n");
    c_seq->add_option("--family", family_a, "family JSON or file")->required();
    c_seq->add_option("--n-max", n_max, "largest natural index");
    c_seq->add_option("--emax", e_max, "largest exponent for p-power families");

    auto* c_limit = app.add_subcommand("limit", "windowed limit estimate");
    c_limit->add_option("--family", family_a, "family JSON or file")->required();
    c_limit->add_option("--n-max", n_max, "largest natural index");
    c_limit->add_option("--emax", e_max, "largest exponent for p-power families");
    c_limit->add_option("--tol", tol, "declare a limit when limsup-liminf is below this");

    auto* c_traj = app.add_subcommand("trajectory", "classify [x]_n membership trajectory");
    c_traj->add_option("--family", family_a, "family JSON or file")->required();
    c_traj->add_option("--point", point, "rational coordinates, e.g. \"1/2,1/2\"")->required();
    c_traj->add_option("--window", window, "probe indices 1..window");

    auto* c_height = app.add_subcommand("height", "height function samples and Lipschitz audit");
    c_height->add_option("--family", family_a, "family JSON or file")->required();
    c_height->add_option("--probe", probe, "surrogate level n");
    c_height->add_option("--extent", extent, "grid extent per axis");
    c_height->add_option("--step", step, "grid step (rational)");
    c_height->add_option("--tol", tol, "bracket tolerance");

    auto* c_mult = app.add_subcommand("multiplicity", "Hilbert-Samuel / Hilbert-Kunz multiplicity");
    c_mult->add_option("--ideal", ideal_arg, "ideal literal, JSON, or file")->required();
    c_mult->add_option("--kind", kind, "hilbert-samuel|hilbert-kunz")->required();
    c_mult->add_option("--d", d, "ambient dimension");
    c_mult->add_option("--p", p, "prime for hilbert-kunz");

    auto* c_verify = app.add_subcommand("verify", "theorem verification harnesses");
    c_verify->require_subcommand(1);
    auto* v_mink = c_verify->add_subcommand("minkowski", "Minkowski inequality for a pair");
    v_mink->add_option("--family-a", family_a, "first family")->required();
    v_mink->add_option("--family-b", family_b, "second family")->required();
    v_mink->add_option("--n", bound, "index bound");
    v_mink->add_option("--tol", tol, "tolerance on the estimated limits");
    auto* v_volmult = c_verify->add_subcommand("volmult", "volume = multiplicity");
    v_volmult->add_option("--family", family_a, "family")->required();
    v_volmult->add_option("--n", bound, "index bound");
    v_volmult->add_option("--tol", tol, "tolerance");
    auto* v_pos = c_verify->add_subcommand("positivity", "BAL <=> positive limit");
    v_pos->add_option("--family", family_a, "family")->required();
    v_pos->add_option("--n", bound, "index bound");
    auto* v_bro = c_verify->add_subcommand("brosowsky", "region volume vs limit for F-graded systems");
    v_bro->add_option("--family", family_a, "family")->required();
    v_bro->add_option("--emax", e_max, "probe exponent E");
    auto* v_ok = c_verify->add_subcommand("okbasis", "OK basis and Frobenius cover checks");
    v_ok->add_option("--d", d, "dimension")->required();
    v_ok->add_option("--p", p, "prime")->required();
    v_ok->add_option("--ideal", ideal_arg, "optional ideal for the cover check");

    auto* c_paper = app.add_subcommand("paper-example",
                                       "l(R/m^[p^e-1])/(p^e-1)^d table and its closed-form limit");
    c_paper->add_option("--p", p, "prime")->required();
    c_paper->add_option("--d", d, "dimension")->required();
    c_paper->add_option("--emax", e_max, "largest exponent");

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInput : kExitPass;
    }

    try {
        if (*c_colength) return run_colength(ideal_arg, d, points, common);
        if (*c_op) return run_ideal_op(op, ideal_arg, other_arg, d, n, q, p, common);
        if (*c_classify) return run_classify(family_a, bound, degree, common);
        if (*c_seq) return run_sequence(family_a, n_max, e_max, common);
        if (*c_limit) return run_limit(family_a, n_max, e_max, tol, common);
        if (*c_traj) return run_trajectory(family_a, point, window, common);
        if (*c_height) return run_height(family_a, probe, extent, step, tol, common);
        if (*c_mult) return run_multiplicity(ideal_arg, d, kind, p, common);
        if (*v_mink) {
            FamilyEvaluator A = load_family(family_a), B = load_family(family_b);
            return emit_verdict(verify_minkowski(A, B, bound, tol), common);
        }
        if (*v_volmult) {
            FamilyEvaluator A = load_family(family_a);
            return emit_verdict(verify_volume_multiplicity(A, bound, tol), common);
        }
        if (*v_pos) {
            FamilyEvaluator A = load_family(family_a);
            return emit_verdict(verify_positivity(A, bound), common);
        }
        if (*v_bro) {
            FamilyEvaluator A = load_family(family_a);
            return emit_verdict(verify_brosowsky(A, e_max), common);
        }
        if (*v_ok) {
            bool ok = verify_ok_basis(ok_basis(d, p));
            if (!ideal_arg.empty()) ok = ok && frobenius_cover_check(load_ideal(ideal_arg, d), p);
            VerifyReport rep;
            rep.claim = "OK basis conditions and Frobenius cover";
            rep.witness_range = "d=" + std::to_string(d) + ", p=" + std::to_string(p);
            rep.lhs = BigRat(ok ? 1 : 0);
            rep.rhs = BigRat(1);
            rep.pass = ok;
            return emit_verdict(rep, common);
        }
        if (*c_paper) return run_paper_example(p, d, e_max, common);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInput;
}
