#include "twistknot/pretzel.hpp"

#include <array>
#include <cstdlib>

#include "twistknot/error.hpp"

namespace tk {

namespace {

enum Port { NW = 0, NE = 1, SW = 2, SE = 3 };

struct Crossing {
  int region;
  bool a_over;  // strand NW-SE passes over strand NE-SW
};

struct PortRef {
  int crossing;
  int port;
};

}  // namespace

Presentation pretzel_presentation(const std::vector<int>& twists) {
  const int m = static_cast<int>(twists.size());
  if (m < 1) throw ParseError("pretzel needs at least one tangle");
  std::vector<Crossing> xs;
  std::vector<int> first(m), last(m);
  for (int i = 0; i < m; ++i) {
    if (twists[i] == 0) throw ParseError("pretzel tangles must be nonzero");
    first[i] = static_cast<int>(xs.size());
    for (int k = 0; k < std::abs(twists[i]); ++k) xs.push_back({i, twists[i] > 0});
    last[i] = static_cast<int>(xs.size()) - 1;
  }
  const int n = static_cast<int>(xs.size());
  // neighbour[c][port] = the port glued to it
  std::vector<std::array<PortRef, 4>> nb(n);
  auto glue = [&](PortRef a, PortRef b) {
    nb[a.crossing][a.port] = b;
    nb[b.crossing][b.port] = a;
  };
  for (int i = 0; i < m; ++i) {
    for (int c = first[i]; c < last[i]; ++c) {
      glue({c, SW}, {c + 1, NW});
      glue({c, SE}, {c + 1, NE});
    }
    int j = (i + 1) % m;
    glue({first[i], NE}, {first[j], NW});
    glue({last[i], SE}, {last[j], SW});
  }
  // a strand entering port p leaves through the diagonally opposite port
  auto opposite = [](int p) { return 3 - p; };
  // planar direction when travelling from port a to port b of a crossing
  auto direction = [](int from) -> std::array<int, 2> {
    switch (from) {
      case NW: return {1, -1};
      case SE: return {-1, 1};
      case NE: return {-1, -1};
      default: return {1, 1};
    }
  };

  struct Passage {
    int crossing;
    bool over;
    int dx, dy;
  };
  std::vector<Passage> seq;
  int c = first[0], in_port = SE;
  std::vector<int> visits(n, 0);
  for (int step = 0; step < 2 * n; ++step) {
    bool strand_a = in_port == NW || in_port == SE;
    bool over = strand_a == xs[c].a_over;
    auto d = direction(in_port);
    seq.push_back({c, over, d[0], d[1]});
    ++visits[c];
    PortRef nx = nb[c][opposite(in_port)];
    c = nx.crossing;
    in_port = nx.port;
  }
  if (!(c == first[0] && in_port == SE)) throw ParseError("pretzel diagram has more than one component");
  for (int v : visits)
    if (v != 2) throw ParseError("pretzel diagram has more than one component");

  // rotate so the sequence starts just after an under-passage
  std::size_t start = 0;
  while (seq[start].over) ++start;
  std::vector<Passage> rot(seq.begin() + start + 1, seq.end());
  rot.insert(rot.end(), seq.begin(), seq.begin() + start + 1);

  std::vector<int> arc_at(rot.size());
  int arc = 0;
  for (std::size_t k = 0; k < rot.size(); ++k) {
    arc_at[k] = arc;
    if (!rot[k].over) ++arc;
  }
  // per crossing: incoming/outgoing under arcs, over arc and directions
  std::vector<int> in_arc(n), out_arc(n), over_arc(n);
  std::vector<std::array<int, 2>> under_dir(n), over_dir(n);
  for (std::size_t k = 0; k < rot.size(); ++k) {
    int x = rot[k].crossing;
    if (rot[k].over) {
      over_arc[x] = arc_at[k];
      over_dir[x] = {rot[k].dx, rot[k].dy};
    } else {
      in_arc[x] = arc_at[k];
      out_arc[x] = (arc_at[k] + 1) % n;
      under_dir[x] = {rot[k].dx, rot[k].dy};
    }
  }
  std::vector<Word> rels(n);
  for (int x = 0; x < n; ++x) {
    int cross = over_dir[x][0] * under_dir[x][1] - over_dir[x][1] * under_dir[x][0];
    int s = cross > 0 ? 1 : -1;
    rels[out_arc[x]] = free_reduce({{over_arc[x], s}, {in_arc[x], 1}, {over_arc[x], -s}, {out_arc[x], -1}});
  }
  Presentation p = make_presentation(n, std::move(rels));
  validate_knot_presentation(p);
  return p;
}

}  // namespace tk
