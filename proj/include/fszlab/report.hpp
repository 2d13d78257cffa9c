#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fszlab/constructions.hpp"
#include "fszlab/group.hpp"
#include "fszlab/indicator.hpp"

namespace fszlab {

enum class Command { Fsz, FszPlus, Indicators, Zeta, Catalog, VerifyProperties };
enum class OutputFormat { Json, Csv, Text };

Command command_from_name(const std::string& name);
std::string command_name(Command c);

struct RunConfig {
    Command command = Command::Fsz;
    std::optional<FamilySpec> family;
    std::optional<int64_t> psl2_q;      // --family psl2 q
    std::optional<std::string> file;
    std::string degrees = "auto";       // "auto" or comma-separated list
    bool plus = false;
    bool fail_fast = false;
    bool no_reductions = false;
    int workers = 1;
    std::optional<std::string> out_path;
    OutputFormat format = OutputFormat::Text;
    uint64_t seed = 20110210;           // verify-properties randomization
};

/// One indicator listing row.
struct IndicatorEntry {
    int u_class = -1;
    int64_t n = 0;
    std::string kind;        // "abelian-centralizer" or "cyclic-restriction"
    std::string label;       // eta exponents, or "g=<id>,j=<j>"
    std::string value;       // CycNum rendering
    std::string classification;
};

struct ZetaEntry {
    int u_class = -1;
    int64_t n = 0;
    ElementId g;
    int64_t count = 0;
};

struct PropertyResult {
    std::string name;
    int64_t instances = 0;
    int64_t failures = 0;
};

/// Everything a run can produce; renderers pick out what applies.
struct ReportDocument {
    std::string command;
    std::string group_name;
    int64_t order = 0;
    int64_t exponent = 0;
    int64_t class_count = 0;
    std::vector<int64_t> degrees;
    std::optional<FszVerdict> verdict;
    std::vector<IndicatorEntry> indicators;
    std::vector<ZetaEntry> zeta;
    std::vector<PropertyResult> properties;
    std::vector<std::pair<std::string, std::string>> catalog_rows;  // label, value
    bool failed = false;   // non-FSZ detected or property failure
    int64_t elapsed_ms = 0;
};

/// Execute a configuration end to end (build/load, dispatch, collect).
ReportDocument run(const RunConfig& config);

/// Render a document in the requested format.
std::string render(const ReportDocument& doc, OutputFormat format);

/// Write the rendered report to config.out_path (or stdout); returns bytes
/// written.
int64_t emit(const ReportDocument& doc, const RunConfig& config);

/// Exit code for a finished run: 0 pass, 1 fail.
int exit_code(const ReportDocument& doc);

}  // namespace fszlab
