#include "genusdp/emb_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "genusdp/errors.hpp"

namespace genusdp {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw InputError("line " + std::to_string(lineno) + ": " + what);
}

int parse_int(int lineno, const std::string& tok, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(lineno, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

EmbeddedGraph read_emb(std::istream& in) {
  int n = -1, m = -1;
  struct RotationLine {
    int lineno;
    std::vector<int> edge_ids;
  };
  std::vector<RotationLine> vlines;
  std::vector<int> vline_of;  // vertex -> index into vlines, -1 if none
  struct EdgeLine {
    int lineno;
    EmbeddedEdge edge;
  };
  std::vector<EdgeLine> elines;
  std::vector<int> eline_of;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;

    if (toks[0] == "emb") {
      if (n >= 0) fail(lineno, "duplicate header");
      if (toks.size() != 3) fail(lineno, "header must be 'emb <vertices> <edges>'");
      n = parse_int(lineno, toks[1], "a vertex count");
      m = parse_int(lineno, toks[2], "an edge count");
      if (n < 0 || m < 0) fail(lineno, "counts must be nonnegative");
      vline_of.assign(n, -1);
      eline_of.assign(m, -1);
      continue;
    }
    if (n < 0) fail(lineno, "'emb <vertices> <edges>' header must come first");

    if (toks[0] == "v") {
      if (toks.size() < 2) fail(lineno, "rotation line needs a vertex id");
      std::string idtok = toks[1];
      size_t rest = 2;
      if (!idtok.empty() && idtok.back() == ':') {
        idtok.pop_back();
      } else if (toks.size() > 2 && toks[2] == ":") {
        rest = 3;
      } else {
        fail(lineno, "rotation line needs ':' after the vertex id");
      }
      const int v = parse_int(lineno, idtok, "a vertex id");
      if (v < 0 || v >= n) fail(lineno, "vertex id " + std::to_string(v) + " out of range");
      if (vline_of[v] >= 0) fail(lineno, "vertex " + std::to_string(v) + " listed twice");
      RotationLine rl;
      rl.lineno = lineno;
      for (size_t i = rest; i < toks.size(); ++i)
        rl.edge_ids.push_back(parse_int(lineno, toks[i], "an edge id"));
      vline_of[v] = static_cast<int>(vlines.size());
      vlines.push_back(std::move(rl));
      continue;
    }

    if (toks[0] == "e") {
      if (toks.size() != 5) fail(lineno, "edge line must be 'e <id> <u> <v> <+|->'");
      const int e = parse_int(lineno, toks[1], "an edge id");
      if (e < 0 || e >= m) fail(lineno, "edge id " + std::to_string(e) + " out of range");
      if (eline_of[e] >= 0) fail(lineno, "edge " + std::to_string(e) + " listed twice");
      EdgeLine el;
      el.lineno = lineno;
      el.edge.u = parse_int(lineno, toks[2], "a vertex id");
      el.edge.v = parse_int(lineno, toks[3], "a vertex id");
      if (el.edge.u < 0 || el.edge.u >= n || el.edge.v < 0 || el.edge.v >= n)
        fail(lineno, "edge endpoint out of range");
      if (toks[4] == "+")
        el.edge.sign = 1;
      else if (toks[4] == "-")
        el.edge.sign = -1;
      else
        fail(lineno, "edge sign must be '+' or '-'");
      eline_of[e] = static_cast<int>(elines.size());
      elines.push_back(el);
      continue;
    }

    fail(lineno, "unknown directive '" + toks[0] + "'");
  }

  if (n < 0) throw InputError("missing 'emb <vertices> <edges>' header");
  for (int e = 0; e < m; ++e)
    if (eline_of[e] < 0) throw InputError("edge " + std::to_string(e) + " has no 'e' line");
  for (int v = 0; v < n; ++v)
    if (vline_of[v] < 0) throw InputError("vertex " + std::to_string(v) + " has no 'v' line");

  EmbeddedGraph g;
  g.vertex_count = n;
  g.edges.resize(m);
  for (int e = 0; e < m; ++e) g.edges[e] = elines[eline_of[e]].edge;
  g.rotation.resize(n);

  std::vector<int> placed(2 * m, 0);
  for (int v = 0; v < n; ++v) {
    const RotationLine& rl = vlines[vline_of[v]];
    std::vector<int> loop_seen(m, 0);
    for (int e : rl.edge_ids) {
      if (e < 0 || e >= m) fail(rl.lineno, "edge id " + std::to_string(e) + " out of range");
      const EmbeddedEdge& ed = g.edges[e];
      int end;
      if (ed.u == ed.v) {
        if (ed.u != v)
          fail(rl.lineno, "edge " + std::to_string(e) + " is not incident to vertex " +
                              std::to_string(v));
        if (loop_seen[e] >= 2)
          fail(rl.lineno, "loop " + std::to_string(e) + " listed more than twice");
        end = loop_seen[e]++;
      } else if (ed.u == v) {
        end = 0;
      } else if (ed.v == v) {
        end = 1;
      } else {
        fail(rl.lineno, "edge " + std::to_string(e) + " is not incident to vertex " +
                            std::to_string(v));
      }
      const int dart = EmbeddedGraph::dart_at(e, end);
      if (placed[dart]++)
        fail(rl.lineno, "edge " + std::to_string(e) + " listed too often at vertex " +
                            std::to_string(v));
      g.rotation[v].push_back(dart);
    }
  }
  for (int e = 0; e < m; ++e)
    for (int end = 0; end < 2; ++end)
      if (!placed[EmbeddedGraph::dart_at(e, end)]) {
        const std::string where = " (line " + std::to_string(elines[eline_of[e]].lineno) + ")";
        if (g.edges[e].u == g.edges[e].v)
          throw InputError("loop " + std::to_string(e) + where +
                           " must be listed twice in the rotation of vertex " +
                           std::to_string(g.edges[e].u));
        throw InputError("edge " + std::to_string(e) + where +
                         " is missing from the rotation of vertex " +
                         std::to_string(end == 0 ? g.edges[e].u : g.edges[e].v));
      }

  try {
    g.validate();
  } catch (const EmbeddingError& err) {
    throw InputError(err.what());
  }
  return g;
}

EmbeddedGraph read_emb_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_emb(in);
  } catch (const InputError& err) {
    throw InputError(path + ": " + err.what());
  }
}

void write_emb(std::ostream& out, const EmbeddedGraph& g) {
  g.validate();
  out << "emb " << g.vertex_count << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count; ++v) {
    out << "v " << v << ':';
    for (int d : g.rotation[v]) out << ' ' << EmbeddedGraph::edge_of(d);
    out << '\n';
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const EmbeddedEdge& ed = g.edges[e];
    out << "e " << e << ' ' << ed.u << ' ' << ed.v << ' ' << (ed.sign > 0 ? '+' : '-') << '\n';
  }
}

std::string to_emb(const EmbeddedGraph& g) {
  std::ostringstream out;
  write_emb(out, g);
  return out.str();
}

void write_emb_file(const std::string& path, const EmbeddedGraph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_emb(out, g);
}

}  // namespace genusdp
