#include "spinorlab/json_writer.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace spinorlab {

namespace {

void write_string(std::string& out, const std::string& s) {
  // nlohmann's own escaping is locale-independent and handles UTF-8.
  out += nlohmann::json(s).dump();
}

void write_value(std::string& out, const nlohmann::json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      // object_t is a std::map, so iteration is already key-sorted.
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_string(out, it.key());
        out += ": ";
        write_value(out, it.value(), depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Short arrays of scalars stay on one line ([re, im] pairs, 4-vectors).
      bool flat = v.size() <= 6;
      for (const auto& e : v) flat = flat && e.is_primitive();
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          write_value(out, v[i], depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write_value(out, v[i], depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    case nlohmann::json::value_t::string:
      write_string(out, v.get_ref<const std::string&>());
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x,
                                 std::chars_format::general, 17);
  std::string s(buf, res.ptr);
  // Keep floats recognisable as floats when read back.
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

std::string write_json(const nlohmann::json& value) {
  std::string out;
  write_value(out, value, 0);
  out += "\n";
  return out;
}

}  // namespace spinorlab
