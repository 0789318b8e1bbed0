#pragma once

/*
 * Exhaustive sweeps: enumerate numerical semigroups by embedding dimension
 * and bounds, analyze them in parallel, persist results as JSONL, and
 * summarize the h-vector census for quadratic five-generator semigroups.
 */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcone/classify.hpp"
#include "tcone/koszul.hpp"
#include "tcone/semigroup.hpp"
#include "tcone/version.hpp"

namespace tcone {

struct SweepSpec {
    int embdim = 5;
    Elem mult_min = 2;
    Elem mult_max = 16;
    Elem bound = 60;              // largest allowed generator
    bool quadratic_only = false;  // enumeration prunes by the arithmetic
                                  // necessary condition; analysis then drops
                                  // records that are not actually quadratic
    bool non_cm_only = false;     // analysis drops Cohen-Macaulay records
    int jobs = 0;                 // worker threads; 0 = hardware concurrency
    std::string out_path;         // JSONL target for analyze_and_persist
};

struct ClassificationRecord {
    std::vector<Elem> generators;
    Elem multiplicity = 0;
    int embdim = 0;
    bool is_quadratic = false;
    std::vector<long long> h_vector;
    bool is_cm = false;
    bool qgb_revlex = false;
    std::optional<FamilyParams> family_match;  // computed for every 5-generator record
    KoszulVerdict koszul_verdict = KoszulVerdict::Unknown;
    std::string koszul_certificate;
    std::string timestamp;  // ISO-8601 UTC, one per run
    std::string version;

    std::string key() const;  // canonical "a1,a2,...,an"
    bool operator==(const ClassificationRecord&) const = default;
};

// Every numerical semigroup with the given embedding dimension, multiplicity
// in [mult_min, mult_max], and largest generator <= bound, visited exactly
// once in ascending lexicographic order of the sorted minimal generating
// set.  A candidate extension is pruned as soon as it lies in the semigroup
// of the previous generators, which is exact: a generator can only ever be
// redundant because of smaller ones.  Error("InvalidParams") on bad bounds.
void enumerate_semigroups(const SweepSpec& spec,
                          const std::function<void(const NumericalSemigroup&)>& sink);
std::vector<NumericalSemigroup> enumerate_semigroups(const SweepSpec& spec);

// Current time as ISO-8601 UTC ("2024-01-01T00:00:00Z"); stamps records.
std::string utc_timestamp();

// Full analysis of one semigroup; timestamp and version are left empty.
ClassificationRecord analyze_semigroup(const NumericalSemigroup& H);

// Parallel map over the enumeration; record order matches enumeration
// order regardless of the worker count, and all records of a run carry the
// same timestamp.
std::vector<ClassificationRecord> analyze_all(const SweepSpec& spec);

// One record per JSONL line.  Error("Parse") on malformed input.
std::string record_to_json(const ClassificationRecord& rec);
ClassificationRecord record_from_json(const std::string& line);

// Appends the records whose canonical key is not already present in the
// file (creating it if needed) and returns how many were written.
// Error("Io") on unreadable or unwritable paths, naming the offending line
// or record.
int analyze_and_persist(const SweepSpec& spec);

// h-vectors realized by quadratic five-generator semigroups in previous
// censuses; (1,4,5) is listed with no known example realizing it.
const std::vector<std::vector<long long>>& tabulated_h_vectors();

struct HVectorRow {
    Elem multiplicity = 0;
    std::vector<long long> h;
    int count = 0;
    std::vector<Elem> example;  // first record seen with this (e, h)
    bool tabulated = false;
};

struct Table1Report {
    std::vector<HVectorRow> rows;         // quadratic 5-generator records, grouped
    bool h145_realized = false;           // did (1,4,5) show up?
    std::vector<std::string> decreasing;  // keys whose Hilbert function decreases
    std::vector<std::string> unexpected;  // keys with an untabulated h-vector
};

// Groups quadratic embdim-5 records by (multiplicity, h-vector); flags
// h-vectors outside the tabulated census and any Hilbert-function decrease
// (a negative h-entry, since HF(i) is the running sum of the h-vector).
Table1Report table1_report(const std::vector<ClassificationRecord>& records);

std::string report_to_text(const Table1Report& rep);
std::string report_to_json(const Table1Report& rep);

}  // namespace tcone
