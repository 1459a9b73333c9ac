#include "targets.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "monideal/error.hpp"
#include "monideal/graph_ideals.hpp"
#include "monideal/ideal_io.hpp"

namespace monideal::cli {

namespace {

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(s, &pos);
  if (pos != s.size() || v > 1000) throw InvalidArgument("bad number '" + s + "'");
  return static_cast<std::size_t>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::optional<GraphSource> parse_family(std::string_view text) {
  static const std::regex bipartite(R"(K(\d+),(\d+))");
  static const std::regex cyc(R"(C(\d+))");
  static const std::regex wheel(R"(wheel:(\d+),(\d+),\[(\d+(?:,\d+)*)\])");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, bipartite)) {
    return GraphSource{complete_bipartite(to_size(m[1]), to_size(m[2])), s, std::nullopt};
  }
  if (std::regex_match(s, m, cyc)) return GraphSource{cycle(to_size(m[1])), s, std::nullopt};
  if (std::regex_match(s, m, wheel)) {
    HWheelSpec spec;
    spec.h = to_size(m[1]);
    spec.rim_length = to_size(m[2]);
    std::stringstream list(m[3]);
    for (std::string item; std::getline(list, item, ',');) spec.radial.push_back(to_size(item));
    return GraphSource{build_h_wheel(spec), s, spec};
  }
  return std::nullopt;
}

GraphSource load_graph(std::string_view family_or_file) {
  if (auto g = parse_family(family_or_file)) return std::move(*g);
  const std::string path(family_or_file);
  if (path.ends_with(".json")) return GraphSource{parse_graph_json(read_file(path)), path, std::nullopt};
  throw InvalidArgument("unknown graph family '" + path +
                        "' (expected Kr,s, Cn, wheel:h,rim,[i,...] or a .json file)");
}

Target resolve_target(std::string_view text) {
  static const std::regex graph_target(R"((.+)-(ni|di|jt(\d+)))");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, graph_target)) {
    const std::string source = m[1];
    if (parse_family(source) || source.ends_with(".json")) {
      Target t;
      t.graph = load_graph(source);
      t.origin = "graph";
      t.label = s;
      t.construction = m[2];
      const auto& G = t.graph->graph;
      if (t.construction == "ni") {
        t.ideal = ni_ideal(G);
      } else if (t.construction == "di") {
        t.ideal = di_ideal(G);
      } else {
        t.ideal = partial_cover_ideal(G, to_size(m[3]));
      }
      return t;
    }
  }
  Target t;
  t.ideal = read_ideal_file(s);
  t.origin = "file";
  t.label = s;
  return t;
}

std::string ideal_digest(const MonomialIdeal& I) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : format_ideal(I)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace monideal::cli
