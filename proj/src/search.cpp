/* Sweep enumeration, parallel analysis, JSONL persistence, census report. */

#include "tcone/search.hpp"

#include <algorithm>
#include <atomic>
#include <ctime>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tcone/errors.hpp"
#include "tcone/tangent_cone.hpp"

namespace tcone {

namespace {

using nlohmann::json;

void validate(const SweepSpec& spec) {
    if (spec.embdim < 1 || spec.embdim > kMaxVars - 1)
        fail("InvalidParams", "embedding dimension out of range");
    if (spec.mult_min < 1 || spec.mult_min > spec.mult_max)
        fail("InvalidParams", "multiplicity range must be positive and ordered");
    if (spec.bound < spec.mult_max) fail("InvalidParams", "generator bound below multiplicity range");
    if (spec.jobs < 0) fail("InvalidParams", "worker count must be nonnegative");
}

// depth-first extension of a prefix whose membership table is `in`
void extend(const SweepSpec& spec, std::vector<Elem>& prefix, std::vector<char>& in,
            const std::function<void(const NumericalSemigroup&)>& sink) {
    if (static_cast<int>(prefix.size()) == spec.embdim) {
        Elem g = 0;
        for (Elem a : prefix) g = std::gcd(g, a);
        if (g != 1) return;
        NumericalSemigroup H = NumericalSemigroup::from_minimal(prefix);
        if (spec.quadratic_only && !H.quadratic_necessary()) return;
        sink(H);
        return;
    }
    const Elem lo = prefix.back() + 1;
    for (Elem c = lo; c <= spec.bound; ++c) {
        if (in[c]) continue;  // c is redundant over the prefix
        std::vector<char> next = in;
        for (Elem v = 0; v + c <= spec.bound; ++v)
            if (next[v]) next[v + c] = 1;
        prefix.push_back(c);
        extend(spec, prefix, next, sink);
        prefix.pop_back();
    }
}

std::string verdict_name(KoszulVerdict v) {
    switch (v) {
        case KoszulVerdict::Koszul: return "Koszul";
        case KoszulVerdict::NotKoszul: return "NotKoszul";
        default: return "Unknown";
    }
}

KoszulVerdict verdict_from(const std::string& name) {
    if (name == "Koszul") return KoszulVerdict::Koszul;
    if (name == "NotKoszul") return KoszulVerdict::NotKoszul;
    if (name == "Unknown") return KoszulVerdict::Unknown;
    fail("Parse", "unknown verdict '" + name + "'");
}

}  // namespace

std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string ClassificationRecord::key() const {
    std::ostringstream out;
    for (size_t i = 0; i < generators.size(); ++i) out << (i ? "," : "") << generators[i];
    return out.str();
}

void enumerate_semigroups(const SweepSpec& spec,
                          const std::function<void(const NumericalSemigroup&)>& sink) {
    validate(spec);
    for (Elem a1 = spec.mult_min; a1 <= spec.mult_max; ++a1) {
        if (spec.embdim == 1 && a1 != 1) continue;
        if (spec.embdim > 1 && a1 == 1) continue;  // <1> has embedding dimension 1
        std::vector<char> in(spec.bound + 1, 0);
        for (Elem v = 0; v <= spec.bound; v += a1) in[v] = 1;
        std::vector<Elem> prefix{a1};
        extend(spec, prefix, in, sink);
    }
}

std::vector<NumericalSemigroup> enumerate_semigroups(const SweepSpec& spec) {
    std::vector<NumericalSemigroup> out;
    enumerate_semigroups(spec, [&](const NumericalSemigroup& H) { out.push_back(H); });
    return out;
}

ClassificationRecord analyze_semigroup(const NumericalSemigroup& H) {
    ClassificationRecord rec;
    rec.generators = H.generators();
    rec.multiplicity = H.multiplicity();
    rec.embdim = H.embdim();
    TangentCone tc = analyze_tangent_cone(H);
    rec.is_quadratic = tc.quadratic;
    rec.h_vector = tc.h;
    rec.is_cm = tc.cm;
    rec.qgb_revlex = tc.quadratic && tc.qgb_revlex;
    // matched independently of the quadratic/CM flags so that sweeps can
    // check the equivalence rather than assume it
    if (rec.embdim == 5) rec.family_match = classify_non_cm_quadratic_5(H);
    KoszulAssessment ka = assess_koszul(rec.is_quadratic, rec.is_cm, rec.qgb_revlex,
                                        rec.family_match.has_value(), rec.h_vector);
    rec.koszul_verdict = ka.verdict;
    rec.koszul_certificate = ka.certificate;
    return rec;
}

std::vector<ClassificationRecord> analyze_all(const SweepSpec& spec) {
    std::vector<NumericalSemigroup> all = enumerate_semigroups(spec);
    std::vector<ClassificationRecord> recs(all.size());
    std::atomic<size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_guard;
    auto worker = [&] {
        for (size_t i; (i = cursor.fetch_add(1)) < all.size();) {
            try {
                recs[i] = analyze_semigroup(all[i]);
            } catch (...) {
                std::lock_guard<std::mutex> hold(error_guard);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    size_t jobs = spec.jobs > 0 ? spec.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<size_t>(1, all.size()));
    std::vector<std::thread> pool;
    for (size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    const std::string stamp = utc_timestamp();
    std::vector<ClassificationRecord> kept;
    for (auto& rec : recs) {
        if (spec.quadratic_only && !rec.is_quadratic) continue;
        if (spec.non_cm_only && rec.is_cm) continue;
        rec.timestamp = stamp;
        rec.version = kVersion;
        kept.push_back(std::move(rec));
    }
    return kept;
}

std::string record_to_json(const ClassificationRecord& rec) {
    json j;
    j["canonical_key"] = rec.key();
    j["generators"] = rec.generators;
    j["multiplicity"] = rec.multiplicity;
    j["embdim"] = rec.embdim;
    j["is_quadratic"] = rec.is_quadratic;
    j["h_vector"] = rec.h_vector;
    j["is_cm"] = rec.is_cm;
    j["qgb_revlex"] = rec.qgb_revlex;
    if (rec.family_match) {
        j["family_match"] = {{"kind", rec.family_match->kind == FamilyKind::I ? "I" : "II"},
                             {"u", rec.family_match->u},
                             {"u_prime", rec.family_match->u_prime},
                             {"u_dprime", rec.family_match->u_dprime}};
    } else {
        j["family_match"] = nullptr;
    }
    j["koszul_verdict"] = verdict_name(rec.koszul_verdict);
    j["koszul_certificate"] = rec.koszul_certificate;
    j["timestamp"] = rec.timestamp;
    j["version"] = rec.version;
    return j.dump();
}

ClassificationRecord record_from_json(const std::string& line) {
    try {
        json j = json::parse(line);
        ClassificationRecord rec;
        rec.generators = j.at("generators").get<std::vector<Elem>>();
        rec.multiplicity = j.at("multiplicity").get<Elem>();
        rec.embdim = j.at("embdim").get<int>();
        rec.is_quadratic = j.at("is_quadratic").get<bool>();
        rec.h_vector = j.at("h_vector").get<std::vector<long long>>();
        rec.is_cm = j.at("is_cm").get<bool>();
        rec.qgb_revlex = j.at("qgb_revlex").get<bool>();
        if (!j.at("family_match").is_null()) {
            const json& f = j.at("family_match");
            FamilyParams p;
            p.kind = f.at("kind").get<std::string>() == "I" ? FamilyKind::I : FamilyKind::II;
            p.u = f.at("u").get<long long>();
            p.u_prime = f.at("u_prime").get<long long>();
            p.u_dprime = f.at("u_dprime").get<long long>();
            rec.family_match = p;
        }
        rec.koszul_verdict = verdict_from(j.at("koszul_verdict").get<std::string>());
        rec.koszul_certificate = j.at("koszul_certificate").get<std::string>();
        rec.timestamp = j.at("timestamp").get<std::string>();
        rec.version = j.at("version").get<std::string>();
        return rec;
    } catch (const json::exception& e) {
        fail("Parse", std::string("bad record line: ") + e.what());
    }
}

int analyze_and_persist(const SweepSpec& spec) {
    if (spec.out_path.empty()) fail("InvalidParams", "output path required");
    std::set<std::string> present;
    {
        std::ifstream read(spec.out_path);
        std::string line;
        int number = 0;
        while (std::getline(read, line)) {
            ++number;
            if (line.empty()) continue;
            try {
                present.insert(record_from_json(line).key());
            } catch (const Error& e) {
                fail("Io", spec.out_path + ":" + std::to_string(number) + ": " + e.what());
            }
        }
    }
    std::vector<ClassificationRecord> recs = analyze_all(spec);
    std::ofstream out(spec.out_path, std::ios::app);
    if (!out) fail("Io", "cannot open '" + spec.out_path + "' for appending");
    int written = 0;
    for (const auto& rec : recs) {
        if (present.count(rec.key())) continue;
        out << record_to_json(rec) << '\n';
        if (!out) fail("Io", "while writing record " + rec.key());
        present.insert(rec.key());
        ++written;
    }
    return written;
}

const std::vector<std::vector<long long>>& tabulated_h_vectors() {
    static const std::vector<std::vector<long long>> table = {
        {1, 4},          {1, 4, 1},    {1, 4, 2}, {1, 4, 2, 1},
        {1, 4, 3},       {1, 4, 3, 1}, {1, 4, 4}, {1, 4, 4, 1},
        {1, 4, 5},       {1, 4, 5, 1}, {1, 4, 5, 2},
        {1, 4, 6, 4, 1},
    };
    return table;
}

Table1Report table1_report(const std::vector<ClassificationRecord>& records) {
    Table1Report rep;
    const auto& known = tabulated_h_vectors();
    std::map<std::pair<Elem, std::vector<long long>>, HVectorRow> groups;
    for (const auto& rec : records) {
        if (rec.embdim != 5 || !rec.is_quadratic) continue;
        auto key = std::make_pair(rec.multiplicity, rec.h_vector);
        auto [it, fresh] = groups.try_emplace(key);
        HVectorRow& row = it->second;
        if (fresh) {
            row.multiplicity = rec.multiplicity;
            row.h = rec.h_vector;
            row.example = rec.generators;
            row.tabulated = std::find(known.begin(), known.end(), rec.h_vector) != known.end();
        }
        ++row.count;
        if (rec.h_vector == std::vector<long long>{1, 4, 5}) rep.h145_realized = true;
        if (!row.tabulated) rep.unexpected.push_back(rec.key());
        bool drops = false;
        for (size_t i = 1; i < rec.h_vector.size(); ++i) drops = drops || rec.h_vector[i] < 0;
        if (drops) rep.decreasing.push_back(rec.key());
    }
    for (auto& [key, row] : groups) rep.rows.push_back(std::move(row));
    return rep;
}

std::string report_to_text(const Table1Report& rep) {
    std::ostringstream out;
    out << "multiplicity | h-vector | count | example | tabulated\n";
    for (const auto& row : rep.rows) {
        out << row.multiplicity << " | (";
        for (size_t i = 0; i < row.h.size(); ++i) out << (i ? "," : "") << row.h[i];
        out << ") | " << row.count << " | <";
        for (size_t i = 0; i < row.example.size(); ++i) out << (i ? "," : "") << row.example[i];
        out << "> | " << (row.tabulated ? "yes" : "NO");
        out << '\n';
    }
    out << "h-vector (1,4,5) realized: " << (rep.h145_realized ? "yes" : "no") << '\n';
    out << "records with decreasing Hilbert function: " << rep.decreasing.size() << '\n';
    for (const auto& k : rep.decreasing) out << "  " << k << '\n';
    out << "records outside the tabulated census: " << rep.unexpected.size() << '\n';
    for (const auto& k : rep.unexpected) out << "  " << k << '\n';
    return out.str();
}

std::string report_to_json(const Table1Report& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"multiplicity", row.multiplicity},
                        {"h_vector", row.h},
                        {"count", row.count},
                        {"example", row.example},
                        {"tabulated", row.tabulated}});
    json j{{"rows", rows},
           {"h145_realized", rep.h145_realized},
           {"decreasing", rep.decreasing},
           {"unexpected", rep.unexpected}};
    return j.dump(2);
}

}  // namespace tcone
