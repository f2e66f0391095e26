#pragma once

#include <array>
#include <string>
#include <vector>

#include "helix/epsilon.hpp"

namespace helix {

/// One row of the published low-order catalog, exactly as printed.
/// Foundations are encoded by the epsilon indices of their entries
/// (O(n) = n, T(-1) = 1/3, the bundle E_mu of index t = t). Resolution
/// text is kept verbatim for reporting; only the multiplicities take
/// part in the audit. A multiplicity of 0 means the table omits it.
struct PrintedRow {
    std::string label;
    std::string index;
    unsigned order;
    std::string printed_slope;
    std::array<std::string, 4> printed_ch;
    long long printed_h0;
    std::array<std::string, 4> printed_foundation;
    std::array<long long, 2> printed_multiplicity;
    std::array<std::string, 2> printed_resolution;
};

/// The embedded reference table (20 rows of orders 1..3).
const std::vector<PrintedRow>& reference_table();

struct FieldDiff {
    std::string field;
    std::string printed;
    std::string computed;
};

struct CatalogRow {
    BundleRecord rec;
    const PrintedRow* printed = nullptr;
    std::vector<FieldDiff> discrepancies;  // value-level disagreements
    std::vector<std::string> notes;        // presentation-level remarks
};

/// Recomputes every reference row and diffs it field by field against the
/// printed values. Disagreements are data, not errors: the known ch2
/// misprints surface here, and on those rows the computed value is
/// cross-checked against both resolutions and the printed h^0 instead.
std::vector<CatalogRow> audit_table(EpsilonMap& eps);

std::string audit_to_json(const std::vector<CatalogRow>& rows);
std::string audit_to_text(const std::vector<CatalogRow>& rows);
bool audit_clean_outside_ch2(const std::vector<CatalogRow>& rows);

enum class TableFormat { Json, Csv, Markdown };

/// One catalog row per normalized 3-adic index in (0,1) of order
/// <= max_order, sorted by index.
std::string generate_table(EpsilonMap& eps, unsigned max_order, TableFormat format);

}  // namespace helix
