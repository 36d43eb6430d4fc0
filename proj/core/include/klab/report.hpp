#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klab {

/// num/den to `digits` decimals, rounding half to even, in exact integer
/// arithmetic. Empty when den is zero.
std::string format_decimal(std::uint64_t num, std::uint64_t den, int digits = 6);

struct ReportHeader {
  std::string family;
  std::string ring;
  std::string target;
  std::map<std::string, std::string> parameters;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::string tool_version;

  friend bool operator==(const ReportHeader&, const ReportHeader&) = default;
};

struct ReportRow {
  std::string family;
  unsigned n = 0;
  std::optional<std::uint64_t> t;
  std::size_t i = 0;
  std::uint64_t len_hi = 0;
  std::uint64_t len_r_mod_i = 0;
  std::uint64_t len_m_mod_im = 0;
  /// ℓ(H^i) / ℓ(R/I_n), unreduced.
  std::uint64_t ratio_num = 0;
  std::uint64_t ratio_den = 0;
  std::string ratio_dec;
  std::optional<unsigned> cert_n;
  /// "certified", "cap_exceeded" or "error".
  std::string status;
  std::string error;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct Citation {
  unsigned n = 0;
  std::string quantity;
  std::uint64_t value = 0;
  std::string basis;

  friend bool operator==(const Citation&, const Citation&) = default;
};

struct ExperimentReport {
  ReportHeader header;
  std::vector<ReportRow> rows;
  std::vector<Citation> citations;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Fills ratio columns from the length columns.
void set_ratio(ReportRow& row);

enum class ReportFormat { kCsv, kJson };
ReportFormat parse_report_format(const std::string& name);

inline constexpr const char* kCsvHeader =
    "family,n,t,i,len_Hi,len_R_mod_I,len_M_mod_IM,ratio_num,ratio_den,ratio_dec,cert_N,status";

std::string to_csv(const ExperimentReport& r);
std::string to_json(const ExperimentReport& r);
/// Inverse of to_json; throws ParseError on malformed documents.
ExperimentReport report_from_json(const std::string& text);

std::string render(const ExperimentReport& r, ReportFormat format);
/// Writes the rendered report; throws IoError naming the path.
void emit_report(const ExperimentReport& r, ReportFormat format, const std::filesystem::path& path);

/// Writes `content` next to `path` and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace klab
