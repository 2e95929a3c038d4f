#include "holomove/motion_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "holomove/errors.hpp"
#include "json.hpp"

namespace holomove::motion {

using nlohmann::json;

namespace {

constexpr const char* format_name = "holomove-motion";

json encode(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double decode(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
  }
  throw input_error("motion document: expected a number, got " + j.dump());
}

json encode(complex z) { return json::array({encode(z.real()), encode(z.imag())}); }

complex decode_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw input_error("motion document: expected [re, im], got " + j.dump());
  return {decode(j[0]), decode(j[1])};
}

json encode_list(const std::vector<complex>& v) {
  json out = json::array();
  for (complex z : v) out.push_back(encode(z));
  return out;
}

std::vector<complex> decode_list(const json& j) {
  if (!j.is_array()) throw input_error("motion document: expected a list");
  std::vector<complex> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(decode_complex(x));
  return out;
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw input_error(std::string("motion document: missing field ") + key);
  return *it;
}

}  // namespace

std::string to_json(const MotionDocument& doc) {
  const MotionSample& m = doc.sample;
  if (m.values.size() != m.rows() * m.cols()) throw input_error("value matrix has the wrong size");
  json j;
  j["format"] = format_name;
  j["version"] = motion_format_version;
  j["base_param"] = encode(m.base_param);
  j["marked_point"] = m.marked_at_infinity ? json("infinity") : encode(m.marked_point);
  j["e_connected"] = m.e_connected;
  j["E_points"] = encode_list(m.E_points);
  j["param_points"] = encode_list(m.param_points);
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(encode_list(m.row(r)));
  j["values"] = std::move(rows);
  if (doc.contour) {
    const auto& c = *doc.contour;
    j["contour"] = {{"center", encode(c.center())},
                    {"radius", c.radius()},
                    {"samples", c.samples()},
                    {"orientation", c.orientation() == Orientation::positive ? "positive" : "negative"}};
  }
  return j.dump(1);
}

MotionDocument from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("motion document: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != format_name)
    throw input_error("motion document: not a holomove motion file");
  if (field(j, "version") != motion_format_version)
    throw input_error("motion document: unsupported version " + field(j, "version").dump());

  MotionDocument doc;
  MotionSample& m = doc.sample;
  m.base_param = decode_complex(field(j, "base_param"));
  const json& marked = field(j, "marked_point");
  if (marked.is_string() && marked.get<std::string>() == "infinity") {
    m.marked_at_infinity = true;
  } else {
    m.marked_point = decode_complex(marked);
  }
  m.e_connected = field(j, "e_connected").get<bool>();
  m.E_points = decode_list(field(j, "E_points"));
  m.param_points = decode_list(field(j, "param_points"));
  const json& rows = field(j, "values");
  if (!rows.is_array() || rows.size() != m.rows()) throw input_error("motion document: row count mismatch");
  for (const auto& r : rows) {
    auto row = decode_list(r);
    if (row.size() != m.cols()) throw input_error("motion document: row length mismatch");
    m.values.insert(m.values.end(), row.begin(), row.end());
  }
  if (const auto it = j.find("contour"); it != j.end()) {
    const std::string o = field(*it, "orientation").get<std::string>();
    if (o != "positive" && o != "negative") throw input_error("motion document: bad orientation " + o);
    doc.contour = CircleContour(decode_complex(field(*it, "center")), field(*it, "radius").get<double>(),
                                field(*it, "samples").get<int>(),
                                o == "positive" ? Orientation::positive : Orientation::negative);
  }
  return doc;
}

void write_json(const std::filesystem::path& path, const MotionDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << to_json(doc) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

MotionDocument read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string to_csv(const MotionSample& m) {
  if (m.values.size() != m.rows() * m.cols()) throw input_error("value matrix has the wrong size");
  std::string out = "lambda_re,lambda_im";
  for (std::size_t i = 0; i < m.cols(); ++i)
    out += ",H" + std::to_string(i) + "_re,H" + std::to_string(i) + "_im";
  out += '\n';
  char buf[64];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
  };
  for (std::size_t j = 0; j < m.rows(); ++j) {
    put(m.param_points[j].real());
    out += ',';
    put(m.param_points[j].imag());
    for (std::size_t i = 0; i < m.cols(); ++i) {
      out += ',';
      put(m.at(j, i).real());
      out += ',';
      put(m.at(j, i).imag());
    }
    out += '\n';
  }
  return out;
}

MotionSample from_csv(const std::string& text, complex base, complex marked, bool marked_at_infinity,
                      bool e_connected) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("lambda_re,lambda_im", 0) != 0)
    throw input_error("motion csv: missing header");
  const std::size_t fields = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
  if (fields < 4 || fields % 2 != 0) throw input_error("motion csv: malformed header");
  const std::size_t cols = (fields - 2) / 2;

  MotionSample m;
  m.base_param = base;
  m.marked_point = marked;
  m.marked_at_infinity = marked_at_infinity;
  m.e_connected = e_connected;
  std::vector<double> nums;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nums.clear();
    const char* p = line.c_str();
    for (;;) {
      char* end = nullptr;
      nums.push_back(std::strtod(p, &end));
      if (end == p) throw input_error("motion csv: bad number in line: " + line);
      p = end;
      if (*p == '\0') break;
      if (*p != ',') throw input_error("motion csv: bad separator in line: " + line);
      ++p;
    }
    if (nums.size() != fields) throw input_error("motion csv: wrong field count in line: " + line);
    m.param_points.emplace_back(nums[0], nums[1]);
    for (std::size_t i = 0; i < cols; ++i) m.values.emplace_back(nums[2 + 2 * i], nums[3 + 2 * i]);
  }
  m.E_points.resize(cols);
  const auto it = std::find(m.param_points.begin(), m.param_points.end(), base);
  if (it == m.param_points.end()) throw input_error("motion csv: base parameter row not found");
  const auto j = static_cast<std::size_t>(it - m.param_points.begin());
  for (std::size_t i = 0; i < cols; ++i) m.E_points[i] = m.values[j * cols + i];
  return m;
}

}  // namespace holomove::motion
