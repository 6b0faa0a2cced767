// Copyright 2026 The Etfkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "etfkit/frame_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "etfkit/error.hpp"
#include "json.hpp"

namespace etfkit {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedFile, "malformed frame file: " + what);
}

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing \"") + key + "\"");
  return *it;
}

std::uint64_t as_count(const json& v, const char* what) {
  if (!v.is_number_unsigned()) {
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
      return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    malformed(std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

double as_double(const json& v) {
  if (!v.is_number()) malformed("vector entries must be numbers");
  const double x = v.get<double>();
  if (!std::isfinite(x)) malformed("vector entries must be finite");
  return x;
}

void write_uint_list(std::ostringstream& out, const std::vector<std::uint32_t>& xs) {
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << ']';
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string frame_to_json(const Frame& frame) {
  const Provenance& prov = frame.provenance;
  std::ostringstream out;
  out << "{\n";
  out << "  \"format_version\": " << kFrameFormatVersion << ",\n";
  out << "  \"n\": " << frame.n << ",\n";
  out << "  \"d\": " << frame.d << ",\n";
  out << "  \"construction\": \"" << construction_name(prov.construction) << "\",\n";
  if (prov.field) {
    out << "  \"field\": {\"p\": " << prov.field->p << ", \"m\": " << prov.field->m
        << ", \"modulus\": ";
    write_uint_list(out, prov.field->modulus);
    out << "},\n";
  }
  std::vector<std::string> params;
  if (prov.dropped_index) {
    params.push_back("\"dropped_index\": " + std::to_string(*prov.dropped_index));
  }
  if (prov.character_c) {
    params.push_back("\"character_c\": " + std::to_string(*prov.character_c));
  }
  if (prov.conference_k) {
    params.push_back("\"conference_k\": " + std::to_string(*prov.conference_k));
  }
  if (!params.empty()) {
    out << "  \"parameters\": {";
    for (std::size_t i = 0; i < params.size(); ++i) out << (i ? ", " : "") << params[i];
    out << "},\n";
  }
  out << "  \"vectors\": [\n";
  for (std::size_t k = 0; k < frame.n; ++k) {
    out << "    [";
    for (std::size_t l = 0; l < frame.d; ++l) {
      const Complex z = frame.synthesis(l, k);
      out << (l ? ", " : "") << '[' << format_double(z.real()) << ", "
          << format_double(z.imag()) << ']';
    }
    out << ']' << (k + 1 < frame.n ? "," : "") << '\n';
  }
  out << "  ]\n}\n";
  return out.str();
}

Frame frame_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");

  if (as_count(member(doc, "format_version"), "format_version") !=
      static_cast<std::uint64_t>(kFrameFormatVersion)) {
    malformed("unsupported format_version");
  }
  const std::uint64_t n = as_count(member(doc, "n"), "n");
  const std::uint64_t d = as_count(member(doc, "d"), "d");
  if (n == 0 || d == 0) malformed("n and d must be positive");

  const json& tag = member(doc, "construction");
  if (!tag.is_string()) malformed("construction must be a string");
  const auto construction = parse_construction(tag.get<std::string>());
  if (!construction) malformed("unknown construction \"" + tag.get<std::string>() + "\"");

  Provenance prov;
  prov.construction = *construction;
  if (auto it = doc.find("field"); it != doc.end()) {
    if (!it->is_object()) malformed("field must be an object");
    FieldDescriptor fd;
    fd.p = static_cast<std::uint32_t>(as_count(member(*it, "p"), "p"));
    fd.m = static_cast<std::uint32_t>(as_count(member(*it, "m"), "m"));
    const json& mod = member(*it, "modulus");
    if (!mod.is_array()) malformed("modulus must be an array");
    for (const auto& c : mod) {
      fd.modulus.push_back(static_cast<std::uint32_t>(as_count(c, "modulus entry")));
    }
    prov.field = std::move(fd);
  }
  if (auto it = doc.find("parameters"); it != doc.end()) {
    if (!it->is_object()) malformed("parameters must be an object");
    if (auto p = it->find("dropped_index"); p != it->end()) {
      prov.dropped_index = as_count(*p, "dropped_index");
    }
    if (auto p = it->find("character_c"); p != it->end()) {
      prov.character_c = static_cast<std::uint32_t>(as_count(*p, "character_c"));
    }
    if (auto p = it->find("conference_k"); p != it->end()) {
      prov.conference_k = static_cast<std::uint32_t>(as_count(*p, "conference_k"));
    }
  }

  const json& vectors = member(doc, "vectors");
  if (!vectors.is_array() || vectors.size() != n) {
    malformed("vectors must be an array of n entries");
  }
  ComplexMatrix t(d, n);
  for (std::size_t k = 0; k < n; ++k) {
    const json& vec = vectors[k];
    if (!vec.is_array() || vec.size() != d) {
      malformed("vector " + std::to_string(k) + " must have d entries");
    }
    for (std::size_t l = 0; l < d; ++l) {
      const json& pair = vec[l];
      if (!pair.is_array() || pair.size() != 2) {
        malformed("entries must be [re, im] pairs");
      }
      t(l, k) = Complex(as_double(pair[0]), as_double(pair[1]));
    }
  }
  return Frame{n, d, std::move(t), std::move(prov)};
}

void write_frame_file(const Frame& frame, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
  out << frame_to_json(frame);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path);
}

Frame read_frame_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return frame_from_json(buf.str());
}

std::string report_to_json(const VerificationReport& report) {
  json doc;
  doc["format_version"] = kFrameFormatVersion;
  doc["subject"] = report.subject;
  doc["verdict"] = report.verdict();
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"target", c.target},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  doc["checks"] = std::move(checks);
  if (report.comparison) {
    doc["comparison"] = {
        {"verdict", std::string(comparison_name(report.comparison->verdict))},
        {"direct_deviation", report.comparison->direct_deviation},
        {"conjugate_deviation", report.comparison->conjugate_deviation}};
  }
  return doc.dump(2);
}

}  // namespace etfkit
