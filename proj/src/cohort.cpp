#include "fairdea/cohort.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "fairdea/errors.hpp"

namespace fairdea {

namespace {

// Minimal CSV: comma separator, optional double-quoted fields with ""
// escaping. No multi-line fields.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted)
        throw Error(Errc::malformed_row, "row " + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(std::move(cur));
    return fields;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

double parse_number(const std::string& text, std::size_t row, const std::string& column) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw Error(Errc::malformed_row, "row " + std::to_string(row) + " column " + column +
                                             ": expected a number, got '" + text + "'");
    if (!std::isfinite(value))
        throw Error(Errc::malformed_row,
                    "row " + std::to_string(row) + " column " + column + ": non-finite value");
    return value;
}

} // namespace

Cohort load_cohort(std::istream& in, const CsvSchema& schema,
                   const std::vector<GroupLabel>& declared_groups) {
    std::string line;
    if (!std::getline(in, line)) throw Error(Errc::empty_input, "CSV stream has no header row");
    std::vector<std::string> header = split_csv_line(line, 1);

    auto col_of = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw Error(Errc::missing_column, "CSV header lacks column '" + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    std::size_t c_id = col_of(schema.id);
    std::size_t c_group = col_of(schema.group);
    std::size_t c_x1 = col_of(schema.x1);
    std::size_t c_x2 = col_of(schema.x2);
    std::size_t c_y1 = col_of(schema.y1);

    std::vector<std::pair<std::size_t, std::string>> confounder_cols;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c != c_id && c != c_group && c != c_x1 && c != c_x2 && c != c_y1)
            confounder_cols.emplace_back(c, header[c]);
    }

    std::unordered_set<std::string> allowed(declared_groups.begin(), declared_groups.end());

    Cohort cohort;
    std::unordered_set<std::string> seen_ids;
    std::vector<GroupLabel> order;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        std::vector<std::string> fields = split_csv_line(line, row);
        if (fields.size() != header.size())
            throw Error(Errc::malformed_row, "row " + std::to_string(row) + ": expected " +
                                                 std::to_string(header.size()) + " fields, got " +
                                                 std::to_string(fields.size()));
        PatientRecord rec;
        rec.id = fields[c_id];
        rec.group = fields[c_group];
        rec.x1 = parse_number(fields[c_x1], row, schema.x1);
        rec.x2 = parse_number(fields[c_x2], row, schema.x2);
        rec.y1 = parse_number(fields[c_y1], row, schema.y1);
        for (auto& [c, name] : confounder_cols)
            rec.confounders[name] = parse_number(fields[c], row, name);

        if (rec.x1 <= 0.0)
            throw Error(Errc::domain_violation,
                        "row " + std::to_string(row) + " column " + schema.x1 + ": must be > 0");
        if (rec.y1 <= 0.0)
            throw Error(Errc::domain_violation,
                        "row " + std::to_string(row) + " column " + schema.y1 + ": must be > 0");
        if (rec.x2 <= 0.0 || rec.x2 > 1.0)
            throw Error(Errc::domain_violation, "row " + std::to_string(row) + " column " +
                                                    schema.x2 + ": must lie in (0, 1]");
        if (!seen_ids.insert(rec.id).second)
            throw Error(Errc::duplicate_id,
                        "row " + std::to_string(row) + ": id '" + rec.id + "' already present");
        if (!allowed.empty() && !allowed.count(rec.group))
            throw Error(Errc::unknown_group, "row " + std::to_string(row) + ": group '" +
                                                 rec.group + "' not in the declared group set");
        if (std::find(order.begin(), order.end(), rec.group) == order.end())
            order.push_back(rec.group);
        cohort.records.push_back(std::move(rec));
    }
    if (cohort.records.empty()) throw Error(Errc::empty_input, "CSV contains no data rows");

    if (!declared_groups.empty()) {
        // declared order, restricted to groups actually present
        for (const auto& g : declared_groups)
            if (std::find(order.begin(), order.end(), g) != order.end())
                cohort.group_set.push_back(g);
    } else {
        cohort.group_set = std::move(order);
    }
    if (cohort.group_set.size() < 2)
        throw Error(Errc::domain_violation, "cohort must contain at least 2 groups, found " +
                                                std::to_string(cohort.group_set.size()));
    return cohort;
}

Cohort load_cohort_file(const std::string& path, const CsvSchema& schema,
                        const std::vector<GroupLabel>& declared_groups) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
    return load_cohort(in, schema, declared_groups);
}

void save_cohort(const Cohort& cohort, std::ostream& out, const CsvSchema& schema) {
    std::set<std::string> confounder_names;
    for (const auto& rec : cohort.records)
        for (const auto& [name, _] : rec.confounders) confounder_names.insert(name);

    out << schema.id << ',' << schema.group << ',' << schema.x1 << ',' << schema.x2 << ','
        << schema.y1;
    for (const auto& name : confounder_names) out << ',' << csv_escape(name);
    out << '\n';
    for (const auto& rec : cohort.records) {
        out << csv_escape(rec.id) << ',' << csv_escape(rec.group) << ',' << format_double(rec.x1)
            << ',' << format_double(rec.x2) << ',' << format_double(rec.y1);
        for (const auto& name : confounder_names) {
            auto it = rec.confounders.find(name);
            if (it == rec.confounders.end())
                throw Error(Errc::missing_column,
                            "record '" + rec.id + "' lacks confounder '" + name + "'");
            out << ',' << format_double(it->second);
        }
        out << '\n';
    }
}

void save_cohort_file(const Cohort& cohort, const std::string& path, const CsvSchema& schema) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
    save_cohort(cohort, out, schema);
}

std::map<GroupLabel, std::size_t> group_counts(const Cohort& cohort) {
    std::map<GroupLabel, std::size_t> counts;
    for (const auto& rec : cohort.records) ++counts[rec.group];
    return counts;
}

std::vector<double> shift_to_positive(std::span<const double> values, double epsilon) {
    if (values.empty()) throw Error(Errc::empty_input, "shift_to_positive on empty sequence");
    if (epsilon <= 0.0) throw Error(Errc::bad_config, "shift epsilon must be > 0");
    double lo = *std::min_element(values.begin(), values.end());
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] - lo + epsilon;
    return out;
}

double default_shift_epsilon(std::span<const double> values) {
    if (values.empty()) throw Error(Errc::empty_input, "epsilon of empty sequence");
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double range = *hi - *lo;
    return range > 1e-12 ? 1e-3 * range : 1e-3;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

} // namespace fairdea
