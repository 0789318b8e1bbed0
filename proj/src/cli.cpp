/* Subcommand dispatch: argument parsing, per-stage reports, text and JSON. */

#include "tcone/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcone/classify.hpp"
#include "tcone/errors.hpp"
#include "tcone/koszul.hpp"
#include "tcone/search.hpp"
#include "tcone/tangent_cone.hpp"

namespace tcone {
namespace {

using nlohmann::json;

std::vector<Elem> parse_elems(const std::string& text, const char* what) {
    std::vector<Elem> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const size_t b = tok.find_first_not_of(" \t");
        const size_t e = tok.find_last_not_of(" \t");
        tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw CLI::ValidationError(what, "not a positive integer: '" + tok + "'");
        out.push_back(std::stoll(tok));
    }
    if (out.empty()) throw CLI::ValidationError(what, "empty list");
    return out;
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

const char* verdict_label(KoszulVerdict v) {
    switch (v) {
        case KoszulVerdict::Koszul: return "Koszul";
        case KoszulVerdict::NotKoszul: return "NotKoszul";
        default: return "Unknown";
    }
}

std::string family_label(const std::optional<FamilyParams>& p) {
    if (!p) return "none";
    std::string s = p->kind == FamilyKind::I ? "I" : "II";
    return s + " (u=" + std::to_string(p->u) + ", u'=" + std::to_string(p->u_prime) +
           ", u''=" + std::to_string(p->u_dprime) + ")";
}

json family_json(const std::optional<FamilyParams>& p) {
    if (!p) return nullptr;
    return {{"kind", p->kind == FamilyKind::I ? "I" : "II"},
            {"u", p->u},
            {"u_prime", p->u_prime},
            {"u_dprime", p->u_dprime}};
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& polys, int nvars) {
    const MonomialOrder ord = MonomialOrder::grevlex(nvars);
    std::vector<std::string> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(to_string(f, ord));
    return out;
}

ClassificationRecord stamped_record(const NumericalSemigroup& H) {
    ClassificationRecord rec = analyze_semigroup(H);
    rec.timestamp = utc_timestamp();
    rec.version = kVersion;
    return rec;
}

void print_record(std::ostream& out, const ClassificationRecord& rec) {
    out << "generators: " << join(rec.generators) << "\n"
        << "multiplicity: " << rec.multiplicity << "\n"
        << "embedding dimension: " << rec.embdim << "\n"
        << "quadratic: " << yes_no(rec.is_quadratic) << "\n"
        << "h-vector: " << join(rec.h_vector) << "\n"
        << "cohen-macaulay: " << yes_no(rec.is_cm) << "\n"
        << "quadratic revlex basis: " << yes_no(rec.qgb_revlex) << "\n"
        << "family: " << family_label(rec.family_match) << "\n"
        << "koszul: " << verdict_label(rec.koszul_verdict) << " (" << rec.koszul_certificate
        << ")\n";
}

std::string record_line(const ClassificationRecord& rec) {
    std::string s = rec.key() + " | h=" + join(rec.h_vector) +
                    " | quadratic=" + yes_no(rec.is_quadratic) + " cm=" + yes_no(rec.is_cm) +
                    " qgb=" + yes_no(rec.qgb_revlex) + " | family=";
    if (rec.family_match) {
        const FamilyParams& p = *rec.family_match;
        s += std::string(p.kind == FamilyKind::I ? "I" : "II") + "(" + std::to_string(p.u) + "," +
             std::to_string(p.u_prime) + "," + std::to_string(p.u_dprime) + ")";
    } else {
        s += "none";
    }
    s += std::string(" | koszul=") + verdict_label(rec.koszul_verdict) + "(" +
         rec.koszul_certificate + ")";
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("Io", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Returns 1 + the largest variable index with a nonzero exponent.
int used_vars(const std::vector<Polynomial>& polys) {
    int nv = 1;
    for (const auto& f : polys)
        for (const auto& t : f.terms())
            for (int i = 0; i < kMaxVars; ++i)
                if (t.m.e[i]) nv = std::max(nv, i + 1);
    return nv;
}

void cmd_analyze(std::ostream& out, const std::string& gens, bool as_json) {
    ClassificationRecord rec = stamped_record(
        NumericalSemigroup::from_candidates(parse_elems(gens, "generators")));
    if (as_json)
        out << record_to_json(rec) << "\n";
    else
        print_record(out, rec);
}

void cmd_toric(std::ostream& out, const std::string& gens, bool as_json) {
    NumericalSemigroup H = NumericalSemigroup::from_candidates(parse_elems(gens, "generators"));
    Ideal T = toric_ideal(H);
    auto strs = poly_strings(T.gens, T.nvars);
    if (as_json) {
        out << json{{"nvars", T.nvars}, {"generators", strs}}.dump() << "\n";
    } else {
        for (const auto& s : strs) out << s << "\n";
    }
}

void cmd_tangent_cone(std::ostream& out, const std::string& gens, bool as_json) {
    NumericalSemigroup H = NumericalSemigroup::from_candidates(parse_elems(gens, "generators"));
    TangentCone tc = analyze_tangent_cone(H);
    auto strs = poly_strings(tc.istar.gens, tc.istar.nvars);
    if (as_json) {
        out << json{{"nvars", tc.istar.nvars},
                    {"quadratic", tc.quadratic},
                    {"h_vector", tc.h},
                    {"generators", strs}}
                   .dump()
            << "\n";
    } else {
        out << "quadratic: " << yes_no(tc.quadratic) << "\n"
            << "h-vector: " << join(tc.h) << "\n";
        for (const auto& s : strs) out << s << "\n";
    }
}

void cmd_cm(std::ostream& out, const std::string& gens, bool as_json) {
    NumericalSemigroup H = NumericalSemigroup::from_candidates(parse_elems(gens, "generators"));
    CMCertificate cert = H.cm_tangent_cone();
    if (as_json) {
        json j{{"cm", cert.cm}, {"witness", nullptr}};
        if (cert.witness) {
            j["witness"] = cert.witness->coeffs;
            j["witness_value"] = cert.witness_value;
        }
        out << j.dump() << "\n";
        return;
    }
    out << "cohen-macaulay: " << yes_no(cert.cm) << "\n";
    if (cert.witness)
        out << "witness: " << join(cert.witness->coeffs) << " (value " << cert.witness_value
            << ")\n";
}

void cmd_hvector(std::ostream& out, const std::string& gens, bool as_json) {
    NumericalSemigroup H = NumericalSemigroup::from_candidates(parse_elems(gens, "generators"));
    std::vector<Elem> h = H.h_vector_arith();
    if (as_json)
        out << json{{"h_vector", h}}.dump() << "\n";
    else
        out << join(h) << "\n";
}

void classify_grid(std::ostream& out, const std::string& spec, bool as_json) {
    std::vector<Elem> b = parse_elems(spec, "--grid");
    if (b.size() != 3) throw CLI::ValidationError("--grid", "expected three bounds u,u',u''");
    int checked = 0;
    std::vector<std::string> failures;
    for (FamilyKind kind : {FamilyKind::I, FamilyKind::II})
        for (long long up = 3; up <= b[1]; up += 2)
            for (long long u = 1; u <= b[0]; ++u)
                for (long long udp = kind == FamilyKind::I ? 1 : 0; udp <= b[2]; ++udp) {
                    FamilyParams p{kind, u, up, udp};
                    NumericalSemigroup H = family_member(p);
                    TangentCone tc = analyze_tangent_cone(H);
                    auto back = classify_non_cm_quadratic_5(H);
                    ++checked;
                    if (!tc.quadratic || tc.cm || !back || !(*back == p))
                        failures.push_back(H.key());
                }
    if (as_json)
        out << json{{"checked", checked}, {"failures", failures}}.dump() << "\n";
    else
        out << "checked " << checked
            << " family members: quadratic, non-CM, parameters recovered\n";
    if (!failures.empty()) {
        for (const auto& k : failures) out << "failed: " << k << "\n";
        fail("PropertyFailed", std::to_string(failures.size()) + " family members failed");
    }
}

void cmd_classify(std::ostream& out, const std::string& gens, const std::string& grid,
                  bool as_json) {
    if (gens.empty() == grid.empty())
        throw CLI::RequiredError("exactly one of generators or --grid");
    if (!grid.empty()) {
        classify_grid(out, grid, as_json);
        return;
    }
    NumericalSemigroup H = NumericalSemigroup::from_candidates(parse_elems(gens, "generators"));
    auto match = classify_non_cm_quadratic_5(H);
    if (as_json)
        out << json{{"family_match", family_json(match)}}.dump() << "\n";
    else
        out << "family: " << family_label(match) << "\n";
}

void cmd_construct(std::ostream& out, int n, const std::string& us, bool as_json) {
    ConstructionParams p{n, {}};
    for (Elem v : parse_elems(us, "--u")) p.us.push_back(v);
    Construction c = construct_general(p);
    auto strs = poly_strings(c.relations, n + 2);
    bool in_kernel = true;
    for (const auto& f : c.relations)
        in_kernel = in_kernel && binomial_in_toric(f, c.order);
    if (as_json) {
        out << json{{"order", c.order},
                    {"generators", c.H.generators()},
                    {"relations", strs},
                    {"relations_in_kernel", in_kernel}}
                   .dump()
            << "\n";
        return;
    }
    out << "order: " << join(c.order) << "\n"
        << "generators: " << join(c.H.generators()) << "\n"
        << "relations:\n";
    for (const auto& s : strs) out << "  " << s << "\n";
    out << "relations in kernel: " << yes_no(in_kernel) << "\n";
}

void cmd_glue(std::ostream& out, const std::string& gens, Elem ell, bool as_json) {
    NumericalSemigroup L = NumericalSemigroup::from_candidates(parse_elems(gens, "generators"));
    NumericalSemigroup G = glue_quadratic(L, ell);
    if (as_json)
        out << json{{"generators", G.generators()}}.dump() << "\n";
    else
        out << "generators: " << join(G.generators()) << "\n";
}

void cmd_search(std::ostream& out, const SweepSpec& spec, bool as_json) {
    if (!spec.out_path.empty()) {
        int written = analyze_and_persist(spec);
        if (as_json)
            out << json{{"written", written}, {"path", spec.out_path}}.dump() << "\n";
        else
            out << "wrote " << written << " new records to " << spec.out_path << "\n";
        return;
    }
    for (const auto& rec : analyze_all(spec))
        out << (as_json ? record_to_json(rec) : record_line(rec)) << "\n";
}

void cmd_koszul(std::ostream& out, const std::string& ideal_path, int nvars, int truncation,
                const std::string& filtration_path, bool as_json) {
    std::vector<Polynomial> polys = parse_polynomial_list(read_file(ideal_path), kMaxVars);
    if (polys.empty()) fail("Parse", "no polynomials in " + ideal_path);
    if (nvars > 0 && nvars < used_vars(polys))
        fail("InvalidParams", "--nvars below the largest variable used");
    Ideal J{nvars > 0 ? nvars : used_vars(polys), std::move(polys)};

    bool quadratic = true;
    for (const auto& f : J.gens)
        quadratic = quadratic && f.is_homogeneous() && f.degree() == 2;

    json j{{"nvars", J.nvars}, {"generators", J.gens.size()}, {"quadratic", quadratic}};
    std::ostringstream text;
    text << "variables: " << J.nvars << "\n"
         << "generators: " << J.gens.size() << (quadratic ? " (all quadrics)" : "") << "\n";

    if (quadratic) {
        QuadraticGBDecision dec = quadratic_gb_nonexistence(J);
        if (dec.nonexistent) {
            std::vector<std::string> obs;
            for (const auto& m : dec.obstructions)
                obs.push_back(to_string(Polynomial::term(m, 1)));
            j["quadratic_gb"] = {{"exists", false}, {"obstructions", obs}};
            text << "quadratic basis (any order): none; obstructions: ";
            for (size_t i = 0; i < obs.size(); ++i) text << (i ? ", " : "") << obs[i];
            text << "\n";
        } else {
            j["quadratic_gb"] = {{"exists", true}, {"weights", *dec.order_weights}};
            text << "quadratic basis (any order): weights " << join(*dec.order_weights) << "\n";
        }
    }

    if (J.nvars <= 6) {
        auto flag = grobner_flag_search(J);
        j["flag"] = flag ? json(*flag) : json(nullptr);
        text << "koszul flag: " << (flag ? "x" + join(*flag) : std::string("none")) << "\n";
    }

    auto basis = buchberger(J.gens, MonomialOrder::grevlex(J.nvars));
    std::vector<Polynomial> leads;
    for (const auto& f : basis)
        leads.push_back(Polynomial::term(f.leading_term(MonomialOrder::grevlex(J.nvars)).m, 1));
    auto [hp, dim] = hilbert_h_polynomial(hilbert_numerator(leads, J.nvars), J.nvars);
    std::vector<long long> h;
    for (const auto& c : hp) h.push_back(c.get_si());
    j["h_polynomial"] = h;
    j["dimension"] = dim;
    text << "h-polynomial: " << join(h) << " (dimension " << dim << ")\n";
    if (std::all_of(h.begin(), h.end(), [](long long c) { return c >= 0; })) {
        SeriesNegativity neg = poincare_negativity(h, truncation);
        if (neg.found) {
            j["series_negativity"] = {{"found", true},
                                      {"index", neg.index},
                                      {"value", neg.value.get_str()}};
            text << "series inverse: first negative coefficient " << neg.value.get_str()
                 << " at degree " << neg.index << "\n";
        } else {
            j["series_negativity"] = {{"found", false}, {"truncation", truncation}};
            text << "series inverse: nonnegative through degree " << truncation << "\n";
        }
    } else {
        j["series_negativity"] = nullptr;
        text << "series inverse: skipped (negative h-polynomial entries)\n";
    }

    if (!filtration_path.empty()) {
        std::vector<std::vector<int>> family;
        std::stringstream fs(read_file(filtration_path));
        std::string line;
        while (std::getline(fs, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::vector<int> member;
            if (line != "0")
                for (Elem v : parse_elems(line, "--filtration")) member.push_back(static_cast<int>(v));
            family.push_back(std::move(member));
        }
        FiltrationCheck check = verify_koszul_filtration(J, family);
        j["filtration"] = {{"valid", check.valid},
                           {"steps", check.steps.size()},
                           {"failure", check.failure}};
        text << "filtration: "
             << (check.valid ? "valid (" + std::to_string(check.steps.size()) + " steps)"
                             : "invalid - " + check.failure)
             << "\n";
    }

    out << (as_json ? j.dump() + "\n" : text.str());
}

void cmd_table1(std::ostream& out, const SweepSpec& spec, const std::string& in_path,
                bool as_json) {
    std::vector<ClassificationRecord> recs;
    if (!in_path.empty()) {
        std::stringstream ss(read_file(in_path));
        std::string line;
        int lineno = 0;
        while (std::getline(ss, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                recs.push_back(record_from_json(line));
            } catch (const Error&) {
                fail("Parse", in_path + " line " + std::to_string(lineno));
            }
        }
    } else {
        recs = analyze_all(spec);
    }
    Table1Report rep = table1_report(recs);
    out << (as_json ? report_to_json(rep) + "\n" : report_to_text(rep));
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tangent cones of numerical semigroup rings"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    bool as_json = false;

    std::string gens, grid, us, ideal_path, filtration_path, in_path;
    int n = 3, truncation = 30, nvars = 0;
    Elem ell = 0;
    SweepSpec spec;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "JSON output"); };
    auto add_gens = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("generators", gens, "comma-separated generators");
        if (required) opt->required();
    };
    auto add_sweep = [&](CLI::App* sub) {
        sub->add_option("--embdim", spec.embdim, "embedding dimension");
        sub->add_option("--mult-min", spec.mult_min, "smallest multiplicity");
        sub->add_option("--mult-max", spec.mult_max, "largest multiplicity");
        sub->add_option("--bound", spec.bound, "largest allowed generator");
        sub->add_option("--jobs", spec.jobs, "worker threads (0 = all cores)");
        sub->add_flag("--quadratic-only", spec.quadratic_only, "keep quadratic records only");
        sub->add_flag("--non-cm-only", spec.non_cm_only, "keep non-Cohen-Macaulay records only");
    };

    auto* analyze = app.add_subcommand("analyze", "full record for one semigroup");
    add_gens(analyze), add_json(analyze);
    analyze->callback([&] { cmd_analyze(out, gens, as_json); });

    auto* toric = app.add_subcommand("toric", "defining ideal of the semigroup ring");
    add_gens(toric), add_json(toric);
    toric->callback([&] { cmd_toric(out, gens, as_json); });

    auto* tcone = app.add_subcommand("tangent-cone", "ideal of initial forms");
    add_gens(tcone), add_json(tcone);
    tcone->callback([&] { cmd_tangent_cone(out, gens, as_json); });

    auto* cm = app.add_subcommand("cm", "Cohen-Macaulay test with witness");
    add_gens(cm), add_json(cm);
    cm->callback([&] { cmd_cm(out, gens, as_json); });

    auto* hvector = app.add_subcommand("hvector", "h-vector of the tangent cone");
    add_gens(hvector), add_json(hvector);
    hvector->callback([&] { cmd_hvector(out, gens, as_json); });

    auto* classify = app.add_subcommand("classify", "match against the non-CM families");
    add_gens(classify, false), add_json(classify);
    classify->add_option("--grid", grid, "check all family members up to bounds u,u',u''");
    classify->callback([&] { cmd_classify(out, gens, grid, as_json); });

    auto* construct = app.add_subcommand("construct", "power-of-two semigroup with relations");
    construct->add_option("--n", n, "construction size (multiplicity 2^n)")->required();
    construct->add_option("--u", us, "comma-separated parameters u_1..u_n")->required();
    add_json(construct);
    construct->callback([&] { cmd_construct(out, n, us, as_json); });

    auto* glue = app.add_subcommand("glue", "double a semigroup and adjoin an odd member");
    add_gens(glue);
    glue->add_option("element", ell, "odd member to adjoin")->required();
    add_json(glue);
    glue->callback([&] { cmd_glue(out, gens, ell, as_json); });

    auto* search = app.add_subcommand("search", "sweep and analyze semigroups");
    add_sweep(search), add_json(search);
    search->add_option("--out", spec.out_path, "append new records to this JSONL file");
    search->callback([&] { cmd_search(out, spec, as_json); });

    auto* koszul = app.add_subcommand("koszul", "Koszul toolbox for a quadric ideal");
    koszul->add_option("--ideal", ideal_path, "polynomial list file")->required();
    koszul->add_option("--nvars", nvars, "ambient variables (default: inferred)");
    koszul->add_option("--truncation", truncation, "series truncation degree");
    koszul->add_option("--filtration", filtration_path,
                       "variable-subset family file (one comma-separated subset per line, 0 = zero ideal)");
    add_json(koszul);
    koszul->callback(
        [&] { cmd_koszul(out, ideal_path, nvars, truncation, filtration_path, as_json); });

    auto* table1 = app.add_subcommand("table1", "h-vector census of quadratic records");
    add_sweep(table1), add_json(table1);
    table1->add_option("--in", in_path, "read records from this JSONL file instead");
    table1->callback([&] { cmd_table1(out, spec, in_path, as_json); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace tcone
