#include "hmoduli/diagonal_file.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hmoduli {

std::pair<Algebra, Diagonal> parse_diagonal_stream(std::istream& in,
                                                   unsigned min_truncation) {
  std::vector<GeneratorSpec> generators;
  std::map<std::string, std::pair<std::size_t, std::string>> diagonal_text;
  unsigned truncation = min_truncation;

  std::string line;
  std::size_t lineno = 0;
  const auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("diagonal file line " +
                                std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "truncation") {
      long t = 0;
      if (!(ls >> t) || t <= 0) fail("expected a positive truncation");
      truncation = std::max<unsigned>(truncation, static_cast<unsigned>(t));
    } else if (keyword == "generator") {
      std::string name;
      long degree = 0;
      if (!(ls >> name >> degree) || degree <= 0)
        fail("expected 'generator <name> <positive degree>'");
      generators.push_back({name, static_cast<unsigned>(degree)});
    } else if (keyword == "diagonal") {
      std::string name, eq;
      if (!(ls >> name >> eq) || eq != "=")
        fail("expected 'diagonal <name> = <element>'");
      std::string rest;
      std::getline(ls, rest);
      if (diagonal_text.count(name)) fail("duplicate diagonal for " + name);
      diagonal_text[name] = {lineno, rest};
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  if (generators.empty())
    throw std::invalid_argument("diagonal file declares no generators");
  for (const auto& g : generators)
    truncation = std::max(truncation, g.degree);

  const Algebra a(generators, truncation);
  const Algebra square = tensor_square(a);
  std::vector<Element> images;
  for (const auto& g : generators) {
    const auto it = diagonal_text.find(g.name);
    if (it == diagonal_text.end())
      throw std::invalid_argument("missing diagonal for generator " + g.name);
    try {
      images.push_back(parse_element(square, it->second.second));
    } catch (const std::exception& e) {
      throw std::invalid_argument("diagonal file line " +
                                  std::to_string(it->second.first) + ": " +
                                  e.what());
    }
  }
  return {a, Diagonal::from_morphism(Morphism(a, square, std::move(images)))};
}

std::pair<Algebra, Diagonal> parse_diagonal_file(const std::string& path,
                                                 unsigned min_truncation) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open diagonal file: " + path);
  return parse_diagonal_stream(in, min_truncation);
}

}  // namespace hmoduli
