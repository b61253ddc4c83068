#include "twistknot/pd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>

#include "twistknot/error.hpp"

namespace tk {

PDCode parse_pd(const std::string& text) {
  PDCode pd;
  std::regex num(R"(-?\d+)");
  std::vector<int> vals;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), num); it != std::sregex_iterator(); ++it)
    vals.push_back(std::stoi(it->str()));
  if (vals.size() % 4 != 0) throw ParseError("PD code length is not a multiple of 4");
  for (std::size_t i = 0; i < vals.size(); i += 4) pd.push_back({vals[i], vals[i + 1], vals[i + 2], vals[i + 3]});
  return pd;
}

namespace {

struct Slot {
  int crossing;
  int pos;
};

struct Walk {
  // For each crossing: which slot the over strand enters through (1 or 3).
  std::vector<int> over_in;
  // Edge order along the knot, starting from the edge leaving crossing 0's under strand.
  std::vector<int> edges;
  std::map<int, int> edge_rank;
};

Walk walk_diagram(const PDCode& pd) {
  if (pd.empty()) throw ParseError("PD code has no crossings (use an explicit presentation for the unknot)");
  std::map<int, std::vector<Slot>> where;
  for (int c = 0; c < static_cast<int>(pd.size()); ++c)
    for (int k = 0; k < 4; ++k) where[pd[c][k]].push_back({c, k});
  for (auto& [e, s] : where)
    if (s.size() != 2) throw ParseError("edge " + std::to_string(e) + " does not appear exactly twice");
  const std::size_t nedges = where.size();
  if (nedges != 2 * pd.size()) throw ParseError("PD code edge count is not twice the crossing count");

  Walk w;
  w.over_in.assign(pd.size(), -1);
  std::vector<int> under_done(pd.size(), 0);
  int c = 0, out_pos = 2;  // leave crossing 0 along its under strand
  for (std::size_t step = 0; step < nedges; ++step) {
    int e = pd[c][out_pos];
    if (w.edge_rank.count(e)) throw ParseError("PD code describes more than one component");
    w.edge_rank[e] = static_cast<int>(w.edges.size());
    w.edges.push_back(e);
    const auto& s = where[e];
    Slot nxt = (s[0].crossing == c && s[0].pos == out_pos) ? s[1] : s[0];
    c = nxt.crossing;
    switch (nxt.pos) {
      case 0:
        out_pos = 2;
        ++under_done[c];
        break;
      case 1:
      case 3:
        if (w.over_in[c] >= 0) throw ParseError("over strand traversed twice at one crossing");
        w.over_in[c] = nxt.pos;
        out_pos = 4 - nxt.pos;
        break;
      default:
        throw ParseError("traversal entered a crossing through its outgoing under-strand");
    }
  }
  if (!(c == 0 && out_pos == 2)) throw ParseError("PD traversal did not close up");
  for (std::size_t k = 0; k < pd.size(); ++k)
    if (under_done[k] != 1 || w.over_in[k] < 0) throw ParseError("PD code describes more than one component");
  return w;
}

}  // namespace

std::vector<int> crossing_signs(const PDCode& pd) {
  Walk w = walk_diagram(pd);
  std::vector<int> s(pd.size());
  // slots counterclockwise from the incoming under strand: the over strand
  // running from slot 3 to slot 1 crosses from the right, a positive crossing
  for (std::size_t c = 0; c < pd.size(); ++c) s[c] = w.over_in[c] == 3 ? 1 : -1;
  return s;
}

Presentation wirtinger_from_pd(const PDCode& pd) {
  Walk w = walk_diagram(pd);
  const int n = static_cast<int>(pd.size());
  auto signs = crossing_signs(pd);
  // arcs: consecutive edges merged across over-passages; a new arc starts after each under-passage
  std::map<int, int> arc_of_edge;
  int arc = 0;
  // start with the edge leaving an under crossing: edges[0] leaves crossing 0's under strand
  std::map<int, std::vector<Slot>> where;
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) where[pd[c][k]].push_back({c, k});
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    int e = w.edges[i];
    arc_of_edge[e] = arc;
    // the crossing this edge runs into: if we pass under it, the next edge is a new arc
    const auto& s = where[e];
    bool ends_under = (s[0].pos == 0) || (s[1].pos == 0);
    if (ends_under) ++arc;
  }
  if (arc != n) throw ParseError("arc count differs from crossing count");
  std::vector<Word> rels;
  for (int c = 0; c < n; ++c) {
    int in = arc_of_edge[pd[c][0]], out = arc_of_edge[pd[c][2]], over = arc_of_edge[pd[c][1]];
    int s = signs[c];
    // relator x_over^s x_in x_over^-s x_out^-1
    rels.push_back({{over, s}, {in, 1}, {over, -s}, {out, -1}});
  }
  // order relators by the arc that ends at their crossing, matching the diagram traversal
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return arc_of_edge[pd[a][2]] < arc_of_edge[pd[b][2]]; });
  std::vector<Word> sorted;
  for (int k : order) sorted.push_back(free_reduce(rels[k]));
  Presentation p = make_presentation(n, std::move(sorted));
  validate_knot_presentation(p);
  return p;
}

}  // namespace tk
