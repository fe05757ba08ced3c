#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace fairdea {

using GroupLabel = std::string;

/// One allocation episode. Inputs x1 (waitlist days) and x2 (KDPI) are the
/// criteria to minimise, y1 (graft days) the criterion to maximise.
struct PatientRecord {
    std::string id;
    GroupLabel group;
    double x1 = 0.0; // waitlist duration, days, > 0
    double x2 = 0.0; // KDPI, in (0, 1]
    double y1 = 0.0; // graft lifespan, days, > 0
    std::map<std::string, double> confounders;

    bool operator==(const PatientRecord&) const = default;
};

struct Cohort {
    std::vector<PatientRecord> records;
    std::vector<GroupLabel> group_set; // ordered, every group has >= 1 record

    std::size_t size() const { return records.size(); }
};

/// Column-name mapping for CSV ingestion/serialisation. Any column not
/// mapped here is parsed as a numeric confounder.
struct CsvSchema {
    std::string id = "id";
    std::string group = "group";
    std::string x1 = "waitlist_days";
    std::string x2 = "kdpi";
    std::string y1 = "graft_days";
};

/// Parse and validate a cohort from UTF-8 CSV with a header row.
/// `declared_groups` (when non-empty) is an allow-list fixing group order;
/// rows outside it raise unknown_group. Row order is preserved.
Cohort load_cohort(std::istream& in, const CsvSchema& schema = {},
                   const std::vector<GroupLabel>& declared_groups = {});
Cohort load_cohort_file(const std::string& path, const CsvSchema& schema = {},
                        const std::vector<GroupLabel>& declared_groups = {});

void save_cohort(const Cohort& cohort, std::ostream& out, const CsvSchema& schema = {});
void save_cohort_file(const Cohort& cohort, const std::string& path,
                      const CsvSchema& schema = {});

std::map<GroupLabel, std::size_t> group_counts(const Cohort& cohort);

/// Rank-preserving affine map into the positive orthant:
/// out_i = v_i - min(v) + epsilon.
std::vector<double> shift_to_positive(std::span<const double> values, double epsilon);

/// Epsilon used by the pipeline when bridging debiased scores into DEA:
/// 1e-3 * column range, falling back to 1e-3 for constant columns.
double default_shift_epsilon(std::span<const double> values);

/// Shortest round-trip decimal formatting (used by every CSV/JSON writer so
/// serialise->parse is the identity).
std::string format_double(double value);

} // namespace fairdea
