#include "enso/target_table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "enso/errors.hpp"

namespace enso::report {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double parse_double(std::string_view s, std::size_t line) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v)) {
    throw UsageError("target table line " + std::to_string(line) + ": bad number '" + t + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

ModelParams parse_params(std::string_view spec, std::size_t line) {
  std::map<std::string, std::string> kv;
  std::istringstream is{std::string(spec)};
  std::string token;
  while (is >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw UsageError("target table line " + std::to_string(line) + ": expected key=value, got '" +
                       token + "'");
    }
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  auto get = [&](const char* key) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
      throw UsageError("target table line " + std::to_string(line) + ": missing '" + key + "'");
    }
    return parse_double(it->second, line);
  };
  const ModelKind kind = parse_model_kind(kv.count("model") ? kv["model"] : "");
  if (kind == ModelKind::coupled) {
    CoupledParams p;
    p.c = get("c");
    p.eta = get("eta");
    p.gamma = get("gamma");
    p.theta = get("theta");
    return p;
  }
  DelayedParams p;
  p.alpha = get("alpha");
  p.beta = get("beta");
  p.sigma = get("sigma");
  return p;
}

}  // namespace

const TargetTable::Entry& TargetTable::column(std::string_view method, double eps) const {
  const std::string want = lower(method);
  for (const auto& c : columns) {
    if (lower(c.method) == want && std::abs(c.eps - eps) <= 1e-12) return c;
  }
  throw UsageError("target table has no column " + std::string(method) + "@eps=" +
                   std::to_string(eps));
}

TargetTable parse_target_table(std::string_view text) {
  TargetTable table;
  bool have_params = false;
  bool have_header = false;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(std::string_view(line).substr(1));
      if (body.rfind("title:", 0) == 0) {
        table.title = trim(std::string_view(body).substr(6));
      } else if (body.rfind("model=", 0) == 0) {
        table.params = parse_params(body, line_no);
        have_params = true;
      }
      continue;
    }
    const auto fields = split(line, ',');
    if (!have_header) {
      if (fields.empty() || fields[0] != "t") {
        throw UsageError("target table line " + std::to_string(line_no) +
                         ": header must start with 't'");
      }
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto at = fields[i].find("@eps=");
        if (at == std::string::npos) {
          throw UsageError("target table line " + std::to_string(line_no) + ": column '" +
                           fields[i] + "' is not METHOD@eps=VALUE");
        }
        table.columns.push_back(
            {fields[i].substr(0, at), parse_double(fields[i].substr(at + 5), line_no), {}});
      }
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size() + 1) {
      throw UsageError("target table line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.columns.size() + 1) + " fields");
    }
    table.ts.push_back(parse_double(fields[0], line_no));
    for (std::size_t i = 1; i < fields.size(); ++i) {
      table.columns[i - 1].values.push_back(parse_double(fields[i], line_no));
    }
  }
  if (!have_params) throw UsageError("target table: missing '# model=...' line");
  if (!have_header || table.ts.empty()) throw UsageError("target table: no data rows");
  return table;
}

TargetTable load_target_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open target table " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_target_table(os.str());
}

}  // namespace enso::report
