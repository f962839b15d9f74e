#include "fracinv/io/corpus.hpp"
#include "fracinv/io/system_json.hpp"

#include <map>
#include <stdexcept>

namespace fracinv::io {
namespace {

#include "corpus_data.inc"

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> t = [] {
    std::map<std::string, std::string> m;
    for (const auto& e : kCorpus) m.emplace(e.name, e.text);
    return m;
  }();
  return t;
}

} // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : table()) out.push_back(name);
  return out;
}

bool corpus_has(const std::string& name) { return table().count(name) != 0; }

const std::string& corpus_text(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw std::out_of_range("no such system: " + name);
  return it->second;
}

PolyField2D corpus_field(const std::string& name) {
  return parse_system_json(corpus_text(name));
}

} // namespace fracinv::io
