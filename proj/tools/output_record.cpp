#include "output_record.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "annular/closed_forms.hpp"

namespace annular::cli {

namespace {

using nlohmann::ordered_json;

const char* const kParameterOrder[] = {"p", "q", "s"};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

int OutputRecord::edges() const {
  int total = 0;
  for (const auto& [name, value] : parameters) {
    if (name == "p" || name == "q") total += value;
  }
  return total / 2;
}

void OutputRecord::derive_genus() {
  genus.clear();
  invalid_k.clear();
  for (const auto& [k, count] : distribution) {
    const auto g = genus_of(k, edges(), vertices);
    if (g) {
      genus[*g] += count;
    } else {
      invalid_k.push_back(k);
    }
  }
}

std::string to_json(const OutputRecord& record) {
  ordered_json j;
  j["parameters"] = ordered_json::object();
  for (const char* name : kParameterOrder) {
    if (auto it = record.parameters.find(name); it != record.parameters.end()) j["parameters"][name] = it->second;
  }
  j["method"] = record.method;
  j["vertices"] = record.vertices;
  j["distribution"] = ordered_json::object();
  for (const auto& [k, count] : record.distribution) j["distribution"][std::to_string(k)] = to_decimal(count);
  j["genus"] = ordered_json::object();
  for (const auto& [g, count] : record.genus) j["genus"][std::to_string(g)] = to_decimal(count);
  j["invalid_k"] = record.invalid_k;
  if (record.seconds) j["seconds"] = *record.seconds;
  return j.dump(2);
}

OutputRecord from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  OutputRecord record;
  for (const auto& [name, value] : j.at("parameters").items()) record.parameters[name] = value.get<int>();
  record.method = j.at("method").get<std::string>();
  record.vertices = j.at("vertices").get<int>();
  for (const auto& [k, count] : j.at("distribution").items()) {
    record.distribution[std::stoi(k)] = BigInt(count.get<std::string>());
  }
  for (const auto& [g, count] : j.at("genus").items()) record.genus[std::stoi(g)] = BigInt(count.get<std::string>());
  record.invalid_k = j.at("invalid_k").get<std::vector<int>>();
  if (j.contains("seconds")) record.seconds = j.at("seconds").get<double>();
  return record;
}

std::string to_csv(const OutputRecord& record) {
  std::ostringstream out;
  out << "p,q,s,method,vertices,k,genus,count,seconds\n";
  auto param = [&](const char* name) {
    auto it = record.parameters.find(name);
    return it == record.parameters.end() ? std::string() : std::to_string(it->second);
  };
  std::string seconds;
  if (record.seconds) {
    std::ostringstream s;
    s << std::setprecision(17) << *record.seconds;
    seconds = s.str();
  }
  for (const auto& [k, count] : record.distribution) {
    const auto g = genus_of(k, record.edges(), record.vertices);
    out << param("p") << ',' << param("q") << ',' << param("s") << ',' << record.method << ',' << record.vertices << ','
        << k << ',' << (g ? std::to_string(*g) : std::string("invalid")) << ',' << to_decimal(count) << ',' << seconds
        << '\n';
  }
  return out.str();
}

OutputRecord from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "p,q,s,method,vertices,k,genus,count,seconds") {
    throw std::invalid_argument("unexpected CSV header");
  }
  OutputRecord record;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 9) throw std::invalid_argument("CSV row needs 9 fields: " + line);
    if (first) {
      for (std::size_t t = 0; t < 3; ++t) {
        if (!fields[t].empty()) record.parameters[kParameterOrder[t]] = std::stoi(fields[t]);
      }
      record.method = fields[3];
      record.vertices = std::stoi(fields[4]);
      if (!fields[8].empty()) record.seconds = std::stod(fields[8]);
      first = false;
    }
    record.distribution[std::stoi(fields[5])] = BigInt(fields[7]);
  }
  record.derive_genus();
  return record;
}

std::string to_table(const OutputRecord& record) {
  std::ostringstream out;
  bool first = true;
  for (const char* name : kParameterOrder) {
    if (auto it = record.parameters.find(name); it != record.parameters.end()) {
      out << (first ? "" : " ") << name << '=' << it->second;
      first = false;
    }
  }
  out << " method=" << record.method;
  if (record.seconds) out << " seconds=" << std::fixed << std::setprecision(3) << *record.seconds;
  out << '\n';
  out << std::left << std::setw(6) << "k" << std::setw(8) << "genus" << "count\n";
  for (const auto& [k, count] : record.distribution) {
    const auto g = genus_of(k, record.edges(), record.vertices);
    out << std::left << std::setw(6) << k << std::setw(8) << (g ? std::to_string(*g) : std::string("INVALID"))
        << to_decimal(count) << '\n';
  }
  return out.str();
}

}  // namespace annular::cli
