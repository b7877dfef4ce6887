#include "obtwist/surface.hpp"

#include <algorithm>
#include <sstream>

#include "obtwist/errors.hpp"

namespace obt {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int find_union(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  parent[find_union(parent, a)] = find_union(parent, b);
}

[[noreturn]] void corrupt(const std::string& msg) {
  throw Error(ErrorCode::CatalogCorrupt, msg);
}

}  // namespace

int SurfaceModel::boundary_index(const std::string& label) const {
  for (int i = 0; i < num_boundaries(); ++i)
    if (boundary_labels[i] == label) return i;
  throw Error(ErrorCode::UnknownGenerator, id + ": no boundary named " + label);
}

const BoundaryInfo& SurfaceModel::boundary(const std::string& label) const {
  return boundaries[static_cast<size_t>(boundary_index(label))];
}

int SurfaceModel::cut_side(int cut, int dir) const {
  for (int s = 0; s < static_cast<int>(polygon.size()); ++s)
    if (polygon[s].kind == SideKind::Cut && polygon[s].cut == cut &&
        polygon[s].dir == dir)
      return s;
  corrupt(id + ": missing cut side");
}

int SurfaceModel::exit_side(Letter l) const {
  return cut_side(letter_cut(l), letter_dir(l));
}

int SurfaceModel::reentry_side(Letter l) const {
  return cut_side(letter_cut(l), -letter_dir(l));
}

const CurveWord& SurfaceModel::curve(const std::string& name) const {
  auto it = generators.find(name);
  if (it != generators.end()) return it->second;
  auto jt = aux_curves.find(name);
  if (jt != aux_curves.end()) return jt->second;
  throw Error(ErrorCode::UnknownGenerator, id + ": no curve named " + name);
}

int SurfaceModel::intersection_entry(const std::string& x,
                                     const std::string& y) const {
  if (x == y) return 0;
  auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  auto it = intersection_table.find(key);
  if (it == intersection_table.end())
    throw Error(ErrorCode::Internal,
                id + ": no intersection entry for " + x + "," + y);
  return it->second;
}

int SurfaceModel::euler_characteristic() const {
  int n = static_cast<int>(polygon.size());
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  // Side s runs corner s -> corner s+1.  Gluing a cut's two copies reverses
  // the perimeter direction: start(+) ~ end(-), end(+) ~ start(-).
  for (int c = 0; c < num_cuts(); ++c) {
    int sp = cut_side(c, +1);
    int sm = cut_side(c, -1);
    unite(parent, sp, (sm + 1) % n);
    unite(parent, (sp + 1) % n, sm);
  }
  int v = 0;
  for (int i = 0; i < n; ++i)
    if (find_union(parent, i) == i) ++v;
  int boundary_sides = 0;
  for (const Side& s : polygon)
    if (s.kind == SideKind::Boundary) ++boundary_sides;
  int e = num_cuts() + boundary_sides;
  return v - e + 1;
}

std::vector<Letter> SurfaceModel::parse_letters(const std::string& text) const {
  std::vector<Letter> out;
  for (const std::string& tok : tokenize(text)) {
    std::string name = tok;
    int dir = +1;
    if (!name.empty() && (name.back() == '-' || name.back() == '+')) {
      dir = name.back() == '-' ? -1 : +1;
      name.pop_back();
    }
    auto it = std::find(cut_names.begin(), cut_names.end(), name);
    if (it == cut_names.end())
      throw Error(ErrorCode::ParseError, id + ": unknown cut in word: " + tok);
    int cut = static_cast<int>(it - cut_names.begin());
    out.push_back(dir * (cut + 1));
  }
  return out;
}

std::string SurfaceModel::print_letters(const std::vector<Letter>& letters) const {
  std::string out;
  for (Letter l : letters) {
    if (!out.empty()) out += ' ';
    out += cut_names[static_cast<size_t>(letter_cut(l))];
    if (letter_dir(l) < 0) out += '-';
  }
  return out;
}

std::vector<Letter> BoundaryInfo::cycle_from_mark(int m) const {
  size_t p = static_cast<size_t>(mark_walk_pos[static_cast<size_t>(m)]);
  std::vector<Letter> out;
  size_t n = cycle.size();
  for (size_t j = 0; j < n; ++j) out.push_back(cycle[(p + j) % n]);
  return out;
}

std::vector<Letter> BoundaryInfo::neg_cycle_from_mark(int m) const {
  size_t p = static_cast<size_t>(mark_walk_pos[static_cast<size_t>(m)]);
  std::vector<Letter> out;
  size_t n = cycle.size();
  for (size_t j = 0; j < n; ++j)
    out.push_back(-cycle[(p + n - 1 - j) % n]);
  return out;
}

namespace {

struct SurfaceParser {
  SurfaceModel m;
  std::map<std::string, std::vector<int>> mark_decls;  // label -> piece decls

  void parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      try {
        handle(toks, line);
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        corrupt("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    derive();
  }

  void handle(const std::vector<std::string>& toks, const std::string& line) {
    const std::string& key = toks[0];
    if (key == "surface") {
      m.id = need(toks, 1);
    } else if (key == "genus") {
      m.genus = std::stoi(need(toks, 1));
    } else if (key == "boundary") {
      m.boundary_labels.push_back(need(toks, 1));
    } else if (key == "cut") {
      m.cut_names.push_back(need(toks, 1));
    } else if (key == "polygon") {
      parse_polygon(toks);
    } else if (key == "marks") {
      std::vector<int> pieces;
      for (size_t i = 2; i < toks.size(); ++i) pieces.push_back(std::stoi(toks[i]));
      if (pieces.empty()) corrupt("marks line without pieces");
      mark_decls[need(toks, 1)] = pieces;
    } else if (key == "gen" || key == "aux") {
      parse_curve(key, line);
    } else if (key == "arc") {
      parse_arc(line);
    } else if (key == "isotopic") {
      parse_isotopic(toks);
    } else if (key == "itable") {
      const std::string& a = need(toks, 1);
      const std::string& b = need(toks, 2);
      int v = std::stoi(need(toks, 3));
      if (v < 0) corrupt("negative intersection entry");
      auto p = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      m.intersection_table[p] = v;
    } else if (key == "rewrite") {
      parse_rewrite(toks);
    } else if (key == "planar") {
      m.planar = need(toks, 1) == "yes";
    } else if (key == "cap") {
      parse_cap(line);
    } else {
      corrupt("unknown directive: " + key);
    }
  }

  static const std::string& need(const std::vector<std::string>& toks, size_t i) {
    if (i >= toks.size()) corrupt("missing token");
    return toks[i];
  }

  void parse_polygon(const std::vector<std::string>& toks) {
    for (size_t i = 1; i < toks.size(); ++i) {
      const std::string& t = toks[i];
      Side side;
      auto colon = t.find(':');
      if (colon != std::string::npos) {
        side.kind = SideKind::Boundary;
        std::string label = t.substr(0, colon);
        side.piece = std::stoi(t.substr(colon + 1));
        auto it = std::find(m.boundary_labels.begin(), m.boundary_labels.end(), label);
        if (it == m.boundary_labels.end()) corrupt("undeclared boundary: " + label);
        side.bcomp = static_cast<int>(it - m.boundary_labels.begin());
      } else {
        if (t.size() < 2 || (t.back() != '+' && t.back() != '-'))
          corrupt("bad polygon side: " + t);
        side.kind = SideKind::Cut;
        side.dir = t.back() == '+' ? +1 : -1;
        std::string name = t.substr(0, t.size() - 1);
        auto it = std::find(m.cut_names.begin(), m.cut_names.end(), name);
        if (it == m.cut_names.end()) corrupt("undeclared cut: " + name);
        side.cut = static_cast<int>(it - m.cut_names.begin());
      }
      m.polygon.push_back(side);
    }
  }

  // gen NAME = letters...   /   aux NAME = letters...
  void parse_curve(const std::string& kind, const std::string& line) {
    auto eq = line.find('=');
    if (eq == std::string::npos) corrupt("curve line without =");
    auto head = tokenize(line.substr(0, eq));
    if (head.size() != 2) corrupt("bad curve declaration");
    CurveWord cw;
    cw.surface = m.id;
    cw.letters = m.parse_letters(line.substr(eq + 1));
    if (cw.letters.empty()) corrupt("empty curve word: " + head[1]);
    if (kind == "gen") {
      m.generator_order.push_back(head[1]);
      m.generators[head[1]] = cw;
    } else {
      m.aux_curves[head[1]] = cw;
    }
  }

  // arc LABEL = letters... : B.m -> B.m       (letters may be empty)
  void parse_arc(const std::string& line) {
    auto eq = line.find('=');
    auto colon = line.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || colon == std::string::npos)
      corrupt("bad arc line");
    auto head = tokenize(line.substr(0, eq));
    if (head.size() != 2) corrupt("bad arc declaration");
    ArcWord arc;
    arc.surface = m.id;
    arc.letters = m.parse_letters(line.substr(eq + 1, colon - eq - 1));
    auto ends = tokenize(line.substr(colon + 1));
    if (ends.size() != 3 || ends[1] != "->") corrupt("bad arc endpoints");
    arc.start = parse_end(ends[0]);
    arc.end = parse_end(ends[2]);
    m.test_arcs[head[1]] = arc;
  }

  ArcEnd parse_end(const std::string& t) {
    auto dot = t.find('.');
    if (dot == std::string::npos) corrupt("bad arc endpoint: " + t);
    ArcEnd e;
    std::string label = t.substr(0, dot);
    auto it = std::find(m.boundary_labels.begin(), m.boundary_labels.end(), label);
    if (it == m.boundary_labels.end()) corrupt("bad arc boundary: " + label);
    e.boundary = static_cast<int>(it - m.boundary_labels.begin());
    e.mark = std::stoi(t.substr(dot + 1));
    return e;
  }

  // isotopic LABEL : gen gen ...
  void parse_isotopic(const std::vector<std::string>& toks) {
    if (toks.size() < 4 || toks[2] != ":") corrupt("bad isotopic line");
    std::vector<std::string> gens(toks.begin() + 3, toks.end());
    m.boundary_parallel[toks[1]] = gens;
  }

  // rewrite chain a b 12 -> target
  void parse_rewrite(const std::vector<std::string>& toks) {
    if (toks.size() != 7 || toks[1] != "chain" || toks[5] != "->")
      corrupt("bad rewrite line");
    ChainRewrite r;
    r.gens = {toks[2], toks[3]};
    r.run_length = std::stoi(toks[4]);
    r.target = toks[6];
    if (r.run_length < 2 || r.run_length % 2 != 0)
      corrupt("bad rewrite run length");
    m.rewrites.push_back(r);
  }

  // cap B -> last | outside | TARGET : g->g, g->trivial, g->boundary b ; bmap B->b, ...
  void parse_cap(const std::string& line) {
    auto toks = tokenize(line);
    const std::string& label = need(toks, 1);
    if (need(toks, 2) != "->") corrupt("bad cap line");
    const std::string& target = need(toks, 3);
    CapSpec spec;
    if (target == "last") {
      spec.kind = CapTargetKind::Last;
    } else if (target == "outside") {
      spec.kind = CapTargetKind::Outside;
    } else {
      spec.kind = CapTargetKind::Surface;
      spec.table.source = m.id;
      spec.table.capped_boundary = label;
      spec.table.target = target;
      auto colon = line.find(':');
      if (colon == std::string::npos) corrupt("cap line without image list");
      std::string rest = line.substr(colon + 1);
      auto semi = rest.find(';');
      std::string images = rest.substr(0, semi);
      std::string bmap = semi == std::string::npos ? "" : rest.substr(semi + 1);
      for (const std::string& item : split_commas(images)) {
        auto arrow = item.find("->");
        if (arrow == std::string::npos) corrupt("bad cap image: " + item);
        std::string from = trim(item.substr(0, arrow));
        auto rhs = tokenize(item.substr(arrow + 2));
        CapImage img;
        if (rhs.size() == 1 && rhs[0] == "trivial") {
          img.kind = CapImageKind::Trivial;
        } else if (rhs.size() == 2 && rhs[0] == "boundary") {
          img.kind = CapImageKind::BoundaryParallel;
          img.target_boundary = rhs[1];
        } else if (rhs.size() == 1) {
          img.kind = CapImageKind::Generator;
          img.target_gen = rhs[0];
        } else {
          corrupt("bad cap image: " + item);
        }
        spec.table.generator_images[from] = img;
      }
      auto bm = tokenize(bmap);
      if (bm.empty() || bm[0] != "bmap") corrupt("cap line without bmap");
      for (size_t i = 1; i < bm.size(); ++i) {
        std::string item = bm[i];
        if (!item.empty() && item.back() == ',') item.pop_back();
        auto arrow = item.find("->");
        if (arrow == std::string::npos) corrupt("bad bmap entry: " + item);
        spec.table.boundary_map[item.substr(0, arrow)] = item.substr(arrow + 2);
      }
    }
    m.caps[label] = spec;
  }

  static std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!tokenize(cur).empty()) out.push_back(cur);
    return out;
  }

  static std::string trim(const std::string& s) {
    auto toks = tokenize(s);
    if (toks.size() != 1) corrupt("bad name: " + s);
    return toks[0];
  }

  void derive() {
    basic_checks();
    trace_boundaries();
    structural_checks();
  }

  void basic_checks() {
    if (m.id.empty()) corrupt("missing surface id");
    if (m.boundary_labels.empty()) corrupt("no boundary components");
    if (m.cut_names.empty()) corrupt("no cuts");
    if (m.polygon.empty()) corrupt("no polygon");
    // each cut appears exactly once per direction
    for (int c = 0; c < m.num_cuts(); ++c) {
      int plus = 0, minus = 0;
      for (const Side& s : m.polygon)
        if (s.kind == SideKind::Cut && s.cut == c)
          (s.dir > 0 ? plus : minus)++;
      if (plus != 1 || minus != 1)
        corrupt("cut " + m.cut_names[static_cast<size_t>(c)] +
                " must appear exactly once per direction");
    }
    // boundary pieces: consecutive declaration indices per label
    std::map<int, std::vector<int>> pieces;
    for (const Side& s : m.polygon)
      if (s.kind == SideKind::Boundary)
        pieces[s.bcomp].push_back(s.piece);
    for (int b = 0; b < m.num_boundaries(); ++b) {
      auto it = pieces.find(b);
      if (it == pieces.end())
        corrupt("boundary " + m.boundary_labels[static_cast<size_t>(b)] +
                " has no polygon sides");
      auto v = it->second;
      std::sort(v.begin(), v.end());
      for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (v[static_cast<size_t>(k)] != k)
          corrupt("boundary pieces of " +
                  m.boundary_labels[static_cast<size_t>(b)] +
                  " must be 0..n-1");
    }
    int chi = m.euler_characteristic();
    int expected = 2 - 2 * m.genus - m.num_boundaries();
    if (chi != expected)
      corrupt(m.id + ": Euler characteristic " + std::to_string(chi) +
              ", expected " + std::to_string(expected));
  }

  // Walk each boundary circle.  From the end corner of boundary side s the
  // perimeter continues with side s+1; while that side is a cut copy, an arc
  // hugging the boundary crosses it (exiting through that copy) and emerges
  // just before the end corner of the partner copy.
  void trace_boundaries() {
    int n = static_cast<int>(m.polygon.size());
    std::vector<bool> visited(static_cast<size_t>(n), false);
    std::vector<BoundaryInfo> infos;
    for (int start = 0; start < n; ++start) {
      if (m.polygon[static_cast<size_t>(start)].kind != SideKind::Boundary ||
          visited[static_cast<size_t>(start)])
        continue;
      BoundaryInfo info;
      info.label =
          m.boundary_labels[static_cast<size_t>(m.polygon[static_cast<size_t>(start)].bcomp)];
      int s = start;
      int guard = 0;
      do {
        if (visited[static_cast<size_t>(s)]) corrupt("boundary walk revisits a side");
        visited[static_cast<size_t>(s)] = true;
        if (m.polygon[static_cast<size_t>(s)].bcomp !=
            m.polygon[static_cast<size_t>(start)].bcomp)
          corrupt("boundary walk mixes labels: " + info.label);
        info.walk.push_back(s);
        int t = (s + 1) % n;
        int hops = 0;
        while (m.polygon[static_cast<size_t>(t)].kind == SideKind::Cut) {
          const Side& cs = m.polygon[static_cast<size_t>(t)];
          info.cycle.push_back(cs.dir * (cs.cut + 1));
          t = (m.cut_side(cs.cut, -cs.dir) + 1) % n;
          if (++hops > n) corrupt("boundary walk stuck in cuts");
        }
        if (hops != 1)
          corrupt("boundary corner must cross exactly one cut");
        s = t;
        if (++guard > 4 * n) corrupt("boundary walk does not close");
      } while (s != start);
      infos.push_back(info);
    }
    // order infos by declared label order
    m.boundaries.clear();
    for (const std::string& label : m.boundary_labels) {
      bool found = false;
      for (auto& info : infos)
        if (info.label == label) {
          if (found) corrupt("boundary " + label + " splits into several circles");
          m.boundaries.push_back(info);
          found = true;
        }
      if (!found) corrupt("boundary " + label + " traced no circle");
    }
    // marks
    for (auto& info : m.boundaries) {
      auto it = mark_decls.find(info.label);
      if (it == mark_decls.end())
        corrupt("boundary " + info.label + " has no marked point");
      for (int piece : it->second) {
        int side = -1;
        int bcomp = m.boundary_index(info.label);
        for (int sidx = 0; sidx < static_cast<int>(m.polygon.size()); ++sidx) {
          const Side& sd = m.polygon[static_cast<size_t>(sidx)];
          if (sd.kind == SideKind::Boundary && sd.bcomp == bcomp && sd.piece == piece)
            side = sidx;
        }
        if (side < 0) corrupt("mark on unknown piece of " + info.label);
        if (std::find(info.mark_sides.begin(), info.mark_sides.end(), side) !=
            info.mark_sides.end())
          corrupt("two marks on one piece of " + info.label);
        info.mark_sides.push_back(side);
        auto pos = std::find(info.walk.begin(), info.walk.end(), side);
        info.mark_walk_pos.push_back(static_cast<int>(pos - info.walk.begin()));
      }
      // the two hugging directions from each mark must be distinguishable
      for (int mk = 0; mk < static_cast<int>(info.mark_sides.size()); ++mk) {
        auto pos = info.cycle_from_mark(mk);
        auto neg = info.neg_cycle_from_mark(mk);
        if (!pos.empty() && !neg.empty() && pos[0] == neg[0])
          corrupt("hugging directions coincide at a mark of " + info.label);
      }
    }
  }

  void structural_checks() {
    // generator words reduced
    for (auto& [name, cw] : m.generators) check_curve_word(name, cw);
    for (auto& [name, cw] : m.aux_curves) {
      if (m.generators.count(name)) corrupt("aux shadows generator: " + name);
      check_curve_word(name, cw);
    }
    // test arcs: one per boundary, valid marks, reduced words
    for (const std::string& label : m.boundary_labels) {
      auto it = m.test_arcs.find(label);
      if (it == m.test_arcs.end()) corrupt("no test arc for boundary " + label);
      const ArcWord& arc = it->second;
      if (free_reduce(arc.letters) != arc.letters)
        corrupt("test arc word not reduced: " + label);
      check_end(arc.start);
      check_end(arc.end);
      if (m.boundary_labels[static_cast<size_t>(arc.start.boundary)] != label)
        corrupt("test arc for " + label + " does not start there");
      if (arc.start.boundary == arc.end.boundary && arc.start.mark == arc.end.mark)
        corrupt("test arc endpoints coincide: " + label);
    }
    // isotopic lists name real generators
    for (auto& [label, gens] : m.boundary_parallel) {
      m.boundary_index(label);
      for (auto& g : gens)
        if (!m.generators.count(g)) corrupt("isotopic names unknown generator " + g);
    }
    // intersection table complete over generator pairs
    for (size_t i = 0; i < m.generator_order.size(); ++i)
      for (size_t j = i + 1; j < m.generator_order.size(); ++j) {
        const std::string& a = m.generator_order[i];
        const std::string& b = m.generator_order[j];
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (!m.intersection_table.count(key))
          corrupt("intersection table missing " + a + "," + b);
      }
    // rewrites reference known curves
    for (auto& r : m.rewrites) {
      for (auto& g : r.gens)
        if (!m.generators.count(g)) corrupt("rewrite names unknown generator " + g);
      if (!m.has_curve(r.target)) corrupt("rewrite targets unknown curve " + r.target);
    }
    // caps cover every boundary
    for (const std::string& label : m.boundary_labels) {
      auto it = m.caps.find(label);
      if (it == m.caps.end()) corrupt("no cap entry for boundary " + label);
      if (it->second.kind != CapTargetKind::Surface) continue;
      const CappingTable& t = it->second.table;
      for (auto& name : m.generator_order)
        if (!t.generator_images.count(name))
          corrupt("cap " + label + " missing image of " + name);
      for (auto& [name, cw] : m.aux_curves)
        if (!t.generator_images.count(name))
          corrupt("cap " + label + " missing image of " + name);
      for (const std::string& other : m.boundary_labels)
        if (other != label && !t.boundary_map.count(other))
          corrupt("cap " + label + " missing boundary image of " + other);
    }
  }

  void check_curve_word(const std::string& name, const CurveWord& cw) {
    if (cyclic_reduce(cw.letters) != cw.letters)
      corrupt("curve word not cyclically reduced: " + name);
  }

  void check_end(const ArcEnd& e) {
    if (e.boundary < 0 || e.boundary >= m.num_boundaries())
      corrupt("arc endpoint on unknown boundary");
    const BoundaryInfo& info = m.boundaries[static_cast<size_t>(e.boundary)];
    if (e.mark < 0 || e.mark >= static_cast<int>(info.mark_sides.size()))
      corrupt("arc endpoint at unknown mark");
  }
};

}  // namespace

SurfaceModel parse_surface_text(const std::string& text) {
  SurfaceParser p;
  p.parse(text);
  return p.m;
}

}  // namespace obt
