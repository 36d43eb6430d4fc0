#include "klab/report.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "klab/error.hpp"

namespace klab {

using json = nlohmann::ordered_json;

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::string format_decimal(std::uint64_t num, std::uint64_t den, int digits) {
  if (den == 0) return {};
  u128 scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  u128 scaled = static_cast<u128>(num) * scale;
  u128 q = scaled / den, rem = scaled % den;
  u128 twice = rem * 2;
  if (twice > den || (twice == den && q % 2 == 1)) ++q;
  u128 whole = q / scale, frac = q % scale;
  auto str = [](u128 v) {
    std::string s;
    do {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    } while (v > 0);
    return s;
  };
  std::string f = str(frac);
  if (digits == 0) return str(whole);
  return str(whole) + "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
}

void set_ratio(ReportRow& row) {
  row.ratio_num = row.len_hi;
  row.ratio_den = row.len_r_mod_i;
  row.ratio_dec = format_decimal(row.ratio_num, row.ratio_den);
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw ArgumentError("unknown report format '" + name + "' (expected csv or json)");
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& row : r.rows) {
    out << row.family << ',' << row.n << ',';
    if (row.t) out << *row.t;
    out << ',' << row.i << ',' << row.len_hi << ',' << row.len_r_mod_i << ',' << row.len_m_mod_im << ','
        << row.ratio_num << ',' << row.ratio_den << ',' << row.ratio_dec << ',';
    if (row.cert_n) out << *row.cert_n;
    out << ',' << row.status << '\n';
  }
  return out.str();
}

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string to_json(const ExperimentReport& r) {
  json doc;
  json h;
  h["family"] = r.header.family;
  h["ring"] = r.header.ring;
  h["target"] = r.header.target;
  h["parameters"] = json::object();
  for (const auto& [k, v] : r.header.parameters) h["parameters"][k] = v;
  h["prime"] = r.header.prime;
  h["seed"] = r.header.seed;
  h["tool_version"] = r.header.tool_version;
  doc["header"] = h;
  doc["rows"] = json::array();
  for (const auto& row : r.rows) {
    doc["rows"].push_back({{"family", row.family},
                           {"n", row.n},
                           {"t", opt(row.t)},
                           {"i", row.i},
                           {"len_Hi", row.len_hi},
                           {"len_R_mod_I", row.len_r_mod_i},
                           {"len_M_mod_IM", row.len_m_mod_im},
                           {"ratio_num", row.ratio_num},
                           {"ratio_den", row.ratio_den},
                           {"ratio_dec", row.ratio_dec},
                           {"cert_N", opt(row.cert_n)},
                           {"status", row.status},
                           {"error", row.error}});
  }
  doc["citations"] = json::array();
  for (const auto& c : r.citations) {
    doc["citations"].push_back({{"n", c.n}, {"quantity", c.quantity}, {"value", c.value}, {"basis", c.basis}});
  }
  return doc.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
  try {
    json doc = json::parse(text);
    ExperimentReport r;
    const auto& h = doc.at("header");
    r.header.family = h.at("family").get<std::string>();
    r.header.ring = h.at("ring").get<std::string>();
    r.header.target = h.at("target").get<std::string>();
    for (const auto& [k, v] : h.at("parameters").items()) r.header.parameters[k] = v.get<std::string>();
    r.header.prime = h.at("prime").get<std::uint64_t>();
    r.header.seed = h.at("seed").get<std::uint64_t>();
    r.header.tool_version = h.at("tool_version").get<std::string>();
    for (const auto& j : doc.at("rows")) {
      ReportRow row;
      row.family = j.at("family").get<std::string>();
      row.n = j.at("n").get<unsigned>();
      row.t = get_opt<std::uint64_t>(j, "t");
      row.i = j.at("i").get<std::size_t>();
      row.len_hi = j.at("len_Hi").get<std::uint64_t>();
      row.len_r_mod_i = j.at("len_R_mod_I").get<std::uint64_t>();
      row.len_m_mod_im = j.at("len_M_mod_IM").get<std::uint64_t>();
      row.ratio_num = j.at("ratio_num").get<std::uint64_t>();
      row.ratio_den = j.at("ratio_den").get<std::uint64_t>();
      row.ratio_dec = j.at("ratio_dec").get<std::string>();
      row.cert_n = get_opt<unsigned>(j, "cert_N");
      row.status = j.at("status").get<std::string>();
      row.error = j.value("error", std::string{});
      r.rows.push_back(std::move(row));
    }
    for (const auto& j : doc.at("citations")) {
      r.citations.push_back({j.at("n").get<unsigned>(), j.at("quantity").get<std::string>(),
                             j.at("value").get<std::uint64_t>(), j.at("basis").get<std::string>()});
    }
    return r;
  } catch (const json::parse_error& e) {
    throw ParseError("malformed report JSON", e.byte);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report does not match the schema: ") + e.what(), 0);
  }
}

std::string render(const ExperimentReport& r, ReportFormat format) {
  return format == ReportFormat::kCsv ? to_csv(r) : to_json(r);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot move report into " + path.string() + ": " + ec.message());
  }
}

void emit_report(const ExperimentReport& r, ReportFormat format, const std::filesystem::path& path) {
  if (path.has_parent_path() && !std::filesystem::is_directory(path.parent_path())) {
    throw IoError("directory for " + path.string() + " does not exist");
  }
  write_file_atomic(path, render(r, format));
}

}  // namespace klab
