#include "wehrl/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include <fmt/format.h>

namespace wehrl {
namespace {

void dump_into(const OrderedJson& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case OrderedJson::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += OrderedJson(key).dump();
        out += ": ";
        dump_into(item, indent + 2, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case OrderedJson::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // short arrays of scalars stay on one line (amplitude pairs, p lists)
      const bool flat = std::all_of(v.begin(), v.end(), [](const OrderedJson& e) { return e.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          dump_into(v[i], indent, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(v[i], indent + 2, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case OrderedJson::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

OrderedJson state_to_json(const SpinState& u) {
  OrderedJson amps = OrderedJson::array();
  for (const auto& c : u.amplitudes()) amps.push_back(OrderedJson::array({c.real(), c.imag()}));
  OrderedJson doc;
  doc["two_j"] = u.j().twice();
  doc["amplitudes"] = std::move(amps);
  return doc;
}

SpinState state_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("two_j") || !doc.contains("amplitudes")) {
    throw Error(ErrorCode::ParseError, "state JSON needs \"two_j\" and \"amplitudes\"");
  }
  const auto& tj = doc.at("two_j");
  if (!tj.is_number_integer()) throw Error(ErrorCode::ParseError, "\"two_j\" must be an integer");
  const auto& arr = doc.at("amplitudes");
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "\"amplitudes\" must be an array");
  std::vector<cplx> amps;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw Error(ErrorCode::ParseError, "each amplitude must be [re, im]");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return SpinState(HalfInt(tj.get<int>()), std::move(amps));
}

SpinState state_from_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return state_from_json(doc);
}

OrderedJson scan_report_to_json(const ScanReport& report) {
  OrderedJson violations = OrderedJson::array();
  for (const auto& v : report.violations) {
    OrderedJson item;
    item["state"] = state_to_json(v.state);
    item["p"] = v.p ? OrderedJson(*v.p) : OrderedJson(nullptr);
    item["margin"] = v.margin;
    violations.push_back(std::move(item));
  }
  OrderedJson doc;
  doc["j"] = OrderedJson{{"twice", report.j.twice()}};
  doc["p_values"] = report.p_values;
  doc["sample_count"] = report.sample_count;
  doc["seed"] = report.seed;
  doc["min_margin"] = report.min_margin;
  doc["argmin_state"] = state_to_json(report.argmin_state);
  doc["grid"] = OrderedJson{{"n_theta", report.n_theta}, {"n_phi", report.n_phi}};
  doc["violations"] = std::move(violations);
  return doc;
}

OrderedJson beta_report_to_json(const BetaScanReport& report) {
  auto row_json = [](const BetaScanRow& r) {
    OrderedJson item;
    item["a"] = r.a;
    item["b"] = r.b;
    item["p"] = r.p;
    item["margin"] = r.margin;
    item["label"] = r.proven ? "proven" : "conjecture data";
    return item;
  };
  OrderedJson rows = OrderedJson::array();
  for (const auto& r : report.rows) rows.push_back(row_json(r));
  OrderedJson doc;
  doc["kind"] = "beta";
  doc["min_margin"] = report.min_margin;
  doc["argmin"] = row_json(report.argmin);
  doc["rows"] = std::move(rows);
  return doc;
}

std::string dump_json(const OrderedJson& doc) {
  std::string out;
  dump_into(doc, 0, out);
  out += "\n";
  return out;
}

void write_file_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace wehrl
