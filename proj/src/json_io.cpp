#include "scg/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scg/cpr.hpp"

namespace scg {

using nlohmann::json;

std::string tuple_to_json(const GeneratorTuple& t) {
  json j;
  j["n"] = t.degree;
  j["rank"] = t.rank();
  j["offset"] = t.label_offset;
  json gens = json::array();
  for (const auto& g : t.gens) {
    json images = json::array();
    for (int x = 1; x <= t.degree; ++x) images.push_back(g(x));
    gens.push_back(std::move(images));
  }
  j["generators"] = std::move(gens);
  return j.dump(2) + "\n";  // keys are emitted sorted: byte-stable output
}

std::string tuple_to_jsonl(const GeneratorTuple& t, const std::string* key_hex) {
  json j;
  if (key_hex) j["key"] = *key_hex;
  j["n"] = t.degree;
  j["rank"] = t.rank();
  j["offset"] = t.label_offset;
  json gens = json::array();
  for (const auto& g : t.gens) {
    json images = json::array();
    for (int x = 1; x <= t.degree; ++x) images.push_back(g(x));
    gens.push_back(std::move(images));
  }
  j["generators"] = std::move(gens);
  return j.dump();
}

GeneratorTuple tuple_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
    throw std::invalid_argument("representation record needs 'n' and 'generators'");
  GeneratorTuple t;
  t.degree = j.at("n").get<int>();
  t.label_offset = j.value("offset", 0);
  for (const auto& images : j.at("generators")) {
    std::vector<int> img = images.get<std::vector<int>>();
    if (static_cast<int>(img.size()) != t.degree)
      throw std::invalid_argument("generator image sequence has length " +
                                  std::to_string(img.size()) + ", expected n = " +
                                  std::to_string(t.degree));
    t.gens.push_back(Permutation::from_images(img));
  }
  if (j.contains("rank") && j.at("rank").get<int>() != t.rank())
    throw std::invalid_argument("'rank' disagrees with the number of generators");
  return t;
}

GeneratorTuple tuple_from_text(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw std::invalid_argument("empty input");
  if (text[pos] == '{') return tuple_from_json(text);
  // anything else goes down the CPR path, which reports line-exact errors
  return to_tuple(parse_cpr_text(text));
}

GeneratorTuple load_tuple_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return tuple_from_text(buf.str());
}

void save_tuple_file(const GeneratorTuple& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << tuple_to_json(t);
}

}  // namespace scg
