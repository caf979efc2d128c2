#include "cubicay/ball_io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "cubicay/errors.hpp"

namespace cubicay {
namespace {

using nlohmann::ordered_json;

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string ball_to_json(const CayleyBall& ball) {
  ordered_json j;
  j["meta"] = {{"family", ball.spec.name()},
               {"n", ball.spec.n},
               {"m", ball.spec.m},
               {"radius", ball.radius}};
  ordered_json verts = ordered_json::array();
  for (int i = 0; i < ball.size(); ++i)
    verts.push_back({{"id", ball.verts[static_cast<std::size_t>(i)]},
                     {"depth", ball.depth[static_cast<std::size_t>(i)]}});
  j["vertices"] = std::move(verts);
  ordered_json edges = ordered_json::array();
  for (const BallEdge& e : ball.edges)
    edges.push_back({{"u", ball.verts[static_cast<std::size_t>(e.u)]},
                     {"v", ball.verts[static_cast<std::size_t>(e.v)]},
                     {"label", std::string(1, e.label)}});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

CayleyBall ball_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw BadParameter(std::string("ball json parse error: ") + e.what());
  }
  const auto& meta = j.at("meta");
  FamilySpec spec = make_spec(family_from_name(meta.at("family").get<std::string>()),
                              meta.at("n").get<int>(), meta.at("m").get<int>());
  const int radius = meta.at("radius").get<int>();

  std::vector<Word> names;
  std::vector<int> depths;
  for (const auto& v : j.at("vertices")) {
    names.push_back(v.at("id").get<std::string>());
    depths.push_back(v.at("depth").get<int>());
  }
  std::unordered_map<Word, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    index.emplace(names[static_cast<std::size_t>(i)], i);

  const bool a_directed = !spec.a_is_involution();
  std::vector<BallEdge> edges;
  for (const auto& e : j.at("edges")) {
    const auto ui = index.find(e.at("u").get<std::string>());
    const auto vi = index.find(e.at("v").get<std::string>());
    const std::string label = e.at("label").get<std::string>();
    if (ui == index.end() || vi == index.end() || label.size() != 1)
      throw BadParameter("ball json: bad edge");
    edges.push_back({ui->second, vi->second, label[0], label[0] == 'a' && a_directed});
  }

  CayleyBall ball = make_synthetic_ball(std::move(names), std::move(edges), std::move(depths), radius);
  ball.spec = spec;
  ball.synthetic = false;

  // rebuild the step table from edges
  auto slot = [](char letter) {
    switch (letter) {
      case 'a': return 0;
      case 'A': return 1;
      case 'b': return 2;
      case 'c': return 3;
    }
    throw BadParameter("bad edge label");
  };
  for (const BallEdge& e : ball.edges) {
    if (e.directed) {
      ball.step[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(slot('a'))] = e.v;
      ball.step[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(slot('A'))] = e.u;
    } else {
      ball.step[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(slot(e.label))] = e.v;
      ball.step[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(slot(e.label))] = e.u;
    }
  }
  return ball;
}

std::string ball_to_dot(const CayleyBall& ball) {
  std::ostringstream out;
  out << "digraph ball {\n";
  for (int i = 0; i < ball.size(); ++i)
    out << "  \"" << ball.verts[static_cast<std::size_t>(i)] << "\" [depth="
        << ball.depth[static_cast<std::size_t>(i)] << "];\n";
  for (const BallEdge& e : ball.edges) {
    out << "  \"" << ball.verts[static_cast<std::size_t>(e.u)] << "\" -> \""
        << ball.verts[static_cast<std::size_t>(e.v)] << "\" [label=\"" << e.label << "\"";
    if (!e.directed) out << ", dir=none";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string ball_to_graphml(const CayleyBall& ball) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\""
      << " xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\""
      << " xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns"
      << " http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
      << "  <key id=\"depth\" for=\"node\" attr.name=\"depth\" attr.type=\"int\"/>\n"
      << "  <key id=\"label\" for=\"edge\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <graph id=\"ball\" edgedefault=\"undirected\">\n";
  for (int i = 0; i < ball.size(); ++i)
    out << "    <node id=\"" << xml_escape(ball.verts[static_cast<std::size_t>(i)])
        << "\"><data key=\"depth\">" << ball.depth[static_cast<std::size_t>(i)]
        << "</data></node>\n";
  for (const BallEdge& e : ball.edges)
    out << "    <edge source=\"" << xml_escape(ball.verts[static_cast<std::size_t>(e.u)])
        << "\" target=\"" << xml_escape(ball.verts[static_cast<std::size_t>(e.v)])
        << "\" directed=\"" << (e.directed ? "true" : "false") << "\"><data key=\"label\">"
        << e.label << "</data></edge>\n";
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string export_ball(const CayleyBall& ball, const std::string& format) {
  if (format == "json") return ball_to_json(ball);
  if (format == "dot") return ball_to_dot(ball);
  if (format == "graphml") return ball_to_graphml(ball);
  throw UnknownFormat(format);
}

}  // namespace cubicay
