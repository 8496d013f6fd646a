#pragma once

#include <boost/algorithm/string.hpp>

#include <cstdint>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "taftknot/exactnum.hpp"

namespace taftknot {

struct ParseError : Error {
  using Error::Error;
};

// Morse fragments. Extrema carry the sign of their rotation: + is counterclockwise.
enum class Frag : std::uint8_t { Up, Down, CapCcw, CapCw, CupCcw, CupCw, CrossPos, CrossNeg };

inline int frag_inputs(Frag f) {
  switch (f) {
    case Frag::Up:
    case Frag::Down: return 1;
    case Frag::CupCcw:
    case Frag::CupCw: return 0;
    default: return 2;
  }
}
inline int frag_outputs(Frag f) {
  switch (f) {
    case Frag::Up:
    case Frag::Down: return 1;
    case Frag::CapCcw:
    case Frag::CapCw: return 0;
    default: return 2;
  }
}
inline bool is_cross(Frag f) { return f == Frag::CrossPos || f == Frag::CrossNeg; }
inline bool is_cap(Frag f) { return f == Frag::CapCcw || f == Frag::CapCw; }
inline bool is_cup(Frag f) { return f == Frag::CupCcw || f == Frag::CupCw; }

inline std::string frag_str(Frag f) {
  switch (f) {
    case Frag::Up: return "up";
    case Frag::Down: return "down";
    case Frag::CapCcw: return "cap+";
    case Frag::CapCw: return "cap-";
    case Frag::CupCcw: return "cup+";
    case Frag::CupCw: return "cup-";
    case Frag::CrossPos: return "x+";
    case Frag::CrossNeg: return "x-";
  }
  return "?";
}
inline Frag parse_frag(const std::string& s) {
  static const std::pair<const char*, Frag> names[] = {{"up", Frag::Up},         {"down", Frag::Down},   {"cap+", Frag::CapCcw},
                                                       {"cap-", Frag::CapCw},    {"cup+", Frag::CupCcw}, {"cup-", Frag::CupCw},
                                                       {"x+", Frag::CrossPos}, {"x-", Frag::CrossNeg}};
  for (const auto& [n, f] : names)
    if (s == n) return f;
  throw ParseError("unknown Morse fragment '" + s + "'");
}

// Rows are listed bottom to top. `bottom` gives the boundary strands entering
// the first row (true = oriented upward); empty for a closed diagram.
struct MorseWord {
  std::vector<bool> bottom;
  std::vector<std::vector<Frag>> rows;
};

using Level = std::vector<bool>;

// orientation of every level, bottom boundary first; throws on inconsistency
inline std::vector<Level> morse_levels(const MorseWord& m) {
  std::vector<Level> out{m.bottom};
  for (size_t r = 0; r < m.rows.size(); ++r) {
    const Level& in = out.back();
    Level next;
    size_t p = 0;
    auto need = [&](size_t k) {
      if (p + k > in.size())
        throw ParseError("row " + std::to_string(r + 1) + ": fragments consume more strands than the " + std::to_string(in.size()) +
                         " below");
    };
    auto bad = [&](Frag f) { return ParseError("row " + std::to_string(r + 1) + ": '" + frag_str(f) + "' does not match the orientation below"); };
    for (Frag f : m.rows[r]) {
      switch (f) {
        case Frag::Up:
        case Frag::Down:
          need(1);
          if (in[p] != (f == Frag::Up)) throw bad(f);
          next.push_back(in[p]);
          p += 1;
          break;
        case Frag::CrossPos:
        case Frag::CrossNeg:
          need(2);
          next.push_back(in[p + 1]);
          next.push_back(in[p]);
          p += 2;
          break;
        case Frag::CapCcw:
          need(2);
          if (in[p] || !in[p + 1]) throw bad(f);
          p += 2;
          break;
        case Frag::CapCw:
          need(2);
          if (!in[p] || in[p + 1]) throw bad(f);
          p += 2;
          break;
        case Frag::CupCcw:
          next.push_back(false);
          next.push_back(true);
          break;
        case Frag::CupCw:
          next.push_back(true);
          next.push_back(false);
          break;
      }
    }
    if (p != in.size())
      throw ParseError("row " + std::to_string(r + 1) + ": " + std::to_string(in.size() - p) + " strand(s) below are not continued");
    out.push_back(std::move(next));
  }
  return out;
}

inline std::string morse_to_text(const MorseWord& m) {
  std::string out;
  if (!m.bottom.empty()) {
    out += "bottom:";
    for (size_t i = 0; i < m.bottom.size(); ++i) out += std::string(i ? "," : " ") + (m.bottom[i] ? "up" : "down");
    out += "\n";
  }
  for (const auto& row : m.rows) {
    for (size_t i = 0; i < row.size(); ++i) out += (i ? ", " : "") + frag_str(row[i]);
    out += "\n";
  }
  return out;
}

// One row per line, bottom row first, fragments comma separated. Blank lines
// and '#' comments are skipped. An optional `bottom: up,down,..` line declares
// boundary strands; without it they are read off the leading up/down fragments.
inline MorseWord parse_morse(const std::string& text) {
  MorseWord m;
  bool have_bottom = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    if (boost::algorithm::starts_with(line, "bottom:")) {
      if (!m.rows.empty() || have_bottom) throw ParseError("'bottom:' must come first");
      std::vector<std::string> toks;
      std::string rest = line.substr(7);
      boost::algorithm::split(toks, rest, boost::is_any_of(", \t"), boost::token_compress_on);
      for (auto t : toks) {
        boost::algorithm::trim(t);
        if (t.empty()) continue;
        if (t == "up") m.bottom.push_back(true);
        else if (t == "down") m.bottom.push_back(false);
        else throw ParseError("boundary strand must be up or down, got '" + t + "'");
      }
      have_bottom = true;
      continue;
    }
    std::vector<std::string> toks;
    boost::algorithm::split(toks, line, boost::is_any_of(","));
    std::vector<Frag> row;
    for (auto t : toks) {
      boost::algorithm::trim(t);
      if (t.empty()) throw ParseError("empty fragment in row '" + line + "'");
      row.push_back(parse_frag(t));
    }
    m.rows.push_back(std::move(row));
  }
  if (m.rows.empty()) throw ParseError("Morse word has no rows");
  if (!have_bottom) {
    for (Frag f : m.rows.front()) {
      if (is_cross(f) || is_cap(f)) throw ParseError("first row needs strands below it; declare them with 'bottom:'");
      if (f == Frag::Up || f == Frag::Down) m.bottom.push_back(f == Frag::Up);
    }
  }
  morse_levels(m);
  return m;
}

inline MorseWord read_morse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read Morse file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_morse(ss.str());
}

// ---------------------------------------------------------------------------
// braids

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +-i for sigma_i^{+-1}, 1 <= i < strands
};

inline void validate_braid(const BraidWord& b) {
  if (b.strands < 1) throw ParseError("a braid needs at least one strand");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) >= b.strands)
      throw ParseError("generator " + std::to_string(l) + " out of range for " + std::to_string(b.strands) + " strands");
}

// tokens: signed integers, `s<i>` or `s<i>^-1`; strands defaults to max index + 1
inline BraidWord parse_braid(const std::string& text, int strands = 0) {
  std::vector<std::string> toks;
  std::string t = boost::algorithm::trim_copy(text);
  BraidWord b;
  if (!t.empty()) boost::algorithm::split(toks, t, boost::is_any_of(" ,\t"), boost::token_compress_on);
  int top = 0;
  for (const auto& tok : toks) {
    std::string s = tok;
    int sign = 1;
    try {
      size_t used = 0;
      if (!s.empty() && (s[0] == 's' || s[0] == 'S')) {
        s = s.substr(1);
        auto caret = s.find('^');
        if (caret != std::string::npos) {
          std::string e = s.substr(caret + 1);
          if (e == "-1") sign = -1;
          else if (e != "1") throw ParseError("bad exponent in '" + tok + "'");
          s = s.substr(0, caret);
        }
      }
      int v = std::stoi(s, &used);
      if (used != s.size() || v == 0) throw ParseError("malformed braid token '" + tok + "'");
      b.letters.push_back(sign * v);
      top = std::max(top, std::abs(v));
    } catch (const std::logic_error&) {
      throw ParseError("malformed braid token '" + tok + "'");
    }
  }
  b.strands = strands > 0 ? strands : top + 1;
  validate_braid(b);
  return b;
}

inline std::string braid_str(const BraidWord& b) {
  std::string out;
  for (int l : b.letters) out += (out.empty() ? "" : " ") + std::to_string(l);
  return out;
}

// Trace closure: braid strands oriented up on the left, return strands down on the right.
inline MorseWord braid_closure(const BraidWord& b) {
  validate_braid(b);
  int m = b.strands;
  MorseWord w;
  auto pad = [](std::vector<Frag>& row, int k, Frag f) { row.insert(row.end(), k, f); };
  for (int k = 0; k < m; ++k) {
    std::vector<Frag> row;
    pad(row, k, Frag::Up);
    row.push_back(Frag::CupCw);
    pad(row, k, Frag::Down);
    w.rows.push_back(row);
  }
  for (int l : b.letters) {
    int i = std::abs(l) - 1;
    std::vector<Frag> row;
    pad(row, i, Frag::Up);
    row.push_back(l > 0 ? Frag::CrossPos : Frag::CrossNeg);
    pad(row, m - i - 2, Frag::Up);
    pad(row, m, Frag::Down);
    w.rows.push_back(row);
  }
  for (int k = m - 1; k >= 0; --k) {
    std::vector<Frag> row;
    pad(row, k, Frag::Up);
    row.push_back(Frag::CapCw);
    pad(row, k, Frag::Down);
    w.rows.push_back(row);
  }
  return w;
}

inline int permutation_cycles(const BraidWord& b) {
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : b.letters) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
  std::vector<bool> seen(b.strands);
  int cycles = 0;
  for (int i = 0; i < b.strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// analysis

// Lines through a crossing: 1 joins bottom-left and top-right, 2 joins bottom-right and top-left.
struct CrossingInfo {
  int row = 0, pos = 0;
  int sign = 1;
  bool line1_up = true, line2_up = true;
  int over_line = 1;
  // one strand up, one down, with the up strand on line 2: the down strand's decoration is conjugated
  bool sideways_left() const { return !line1_up && line2_up; }
};

// sign of a crossing whose given line is over, for the given line orientations
inline int crossing_sign(int over_line, bool line1_up, bool line2_up) {
  int s1 = line1_up == line2_up ? 1 : -1;
  return over_line == 1 ? s1 : -s1;
}
inline int over_line_of(int sign, bool line1_up, bool line2_up) { return crossing_sign(1, line1_up, line2_up) == sign ? 1 : 2; }

struct Step {
  enum Kind : std::uint8_t { Segment, Crossing, Extremum } kind = Segment;
  int level = 0, pos = 0;  // segment
  bool up = true;
  int crossing = -1, line = 0;  // crossing pass
  bool over = false;
  Frag extremum = Frag::Up;  // cap/cup fragment
  int turn = 0;              // +1 counterclockwise, -1 clockwise
  bool leftward() const { return extremum == Frag::CapCcw || extremum == Frag::CupCw; }
};

// a crossing line met along a component, with the extremum counts from it to the end of the walk
struct CrossingLine {
  int step = 0;
  int crossing = 0, line = 0;
  bool over = false;
  int u_up = 0;    // leftward caps minus leftward cups
  int u_down = 0;  // rightward cups minus rightward caps
};

struct Component {
  std::vector<Step> steps;  // starts at the base segment; a closed walk returns to it
  bool closed = true;
  int turn2 = 0;  // twice the Whitney degree
  std::vector<CrossingLine> lines;
};

struct LinkDiagram {
  MorseWord morse;
  std::vector<Level> levels;
  std::vector<CrossingInfo> crossings;
  std::vector<Component> components;
  int writhe = 0;
  int turn2 = 0;
  bool closed() const { return levels.front().empty() && levels.back().empty(); }
  int whitney2() const { return turn2; }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

inline std::vector<CrossingLine> crossing_lines(const std::vector<Step>& steps) {
  std::vector<CrossingLine> out;
  for (size_t i = 0; i < steps.size(); ++i)
    if (steps[i].kind == Step::Crossing) out.push_back({static_cast<int>(i), steps[i].crossing, steps[i].line, steps[i].over, 0, 0});
  int up = 0, down = 0;
  size_t k = out.size();
  for (size_t i = steps.size(); i-- > 0;) {
    const Step& s = steps[i];
    if (s.kind == Step::Extremum) {
      if (s.extremum == Frag::CapCcw) ++up;
      if (s.extremum == Frag::CupCw) --up;
      if (s.extremum == Frag::CupCcw) ++down;
      if (s.extremum == Frag::CapCw) --down;
    } else if (s.kind == Step::Crossing) {
      --k;
      out[k].u_up = up;
      out[k].u_down = down;
    }
  }
  return out;
}

namespace detail {

struct RowIndex {
  std::vector<int> in_frag, in_off, out_frag, out_off;  // per position
  std::vector<int> in_start, out_start;                 // per fragment
};

}  // namespace detail

inline LinkDiagram analyze(const MorseWord& m) {
  LinkDiagram d;
  d.morse = m;
  d.levels = morse_levels(m);
  size_t R = m.rows.size();
  std::vector<detail::RowIndex> idx(R);
  std::vector<std::vector<int>> crossing_id(R);
  for (size_t r = 0; r < R; ++r) {
    auto& ix = idx[r];
    int ip = 0, op = 0;
    crossing_id[r].assign(m.rows[r].size(), -1);
    for (size_t f = 0; f < m.rows[r].size(); ++f) {
      Frag fr = m.rows[r][f];
      ix.in_start.push_back(ip);
      ix.out_start.push_back(op);
      for (int k = 0; k < frag_inputs(fr); ++k) {
        ix.in_frag.push_back(static_cast<int>(f));
        ix.in_off.push_back(k);
      }
      for (int k = 0; k < frag_outputs(fr); ++k) {
        ix.out_frag.push_back(static_cast<int>(f));
        ix.out_off.push_back(k);
      }
      if (is_cross(fr)) {
        CrossingInfo c;
        c.row = static_cast<int>(r);
        c.pos = ip;
        c.sign = fr == Frag::CrossPos ? 1 : -1;
        c.line1_up = d.levels[r][ip];
        c.line2_up = d.levels[r][ip + 1];
        c.over_line = over_line_of(c.sign, c.line1_up, c.line2_up);
        crossing_id[r][f] = static_cast<int>(d.crossings.size());
        d.crossings.push_back(c);
        d.writhe += c.sign;
      }
      ip += frag_inputs(fr);
      op += frag_outputs(fr);
    }
  }

  std::vector<std::vector<bool>> seen(d.levels.size());
  for (size_t j = 0; j < d.levels.size(); ++j) seen[j].assign(d.levels[j].size(), false);

  // walk from a segment until returning to it or leaving through the boundary
  auto walk = [&](int level, int pos) {
    Component comp;
    int j = level, p = pos;
    while (true) {
      bool up = d.levels[j][p];
      if (seen[j][p]) {
        if (j != level || p != pos) throw Error("Morse walk re-entered a segment");
        break;
      }
      seen[j][p] = true;
      Step seg;
      seg.kind = Step::Segment;
      seg.level = j;
      seg.pos = p;
      seg.up = up;
      comp.steps.push_back(seg);
      if (up) {
        if (j == static_cast<int>(R)) {
          comp.closed = false;
          break;
        }
        const auto& ix = idx[j];
        int f = ix.in_frag[p], off = ix.in_off[p];
        Frag fr = m.rows[j][f];
        if (fr == Frag::Up) {
          p = ix.out_start[f];
          j += 1;
        } else if (is_cross(fr)) {
          Step s;
          s.kind = Step::Crossing;
          s.crossing = crossing_id[j][f];
          s.line = off == 0 ? 1 : 2;
          s.over = d.crossings[s.crossing].over_line == s.line;
          comp.steps.push_back(s);
          p = ix.out_start[f] + 1 - off;
          j += 1;
        } else {  // cap
          Step s;
          s.kind = Step::Extremum;
          s.extremum = fr;
          s.turn = fr == Frag::CapCcw ? 1 : -1;
          comp.steps.push_back(s);
          comp.turn2 += s.turn;
          p = ix.in_start[f] + 1 - off;
        }
      } else {
        if (j == 0) {
          comp.closed = false;
          break;
        }
        const auto& ix = idx[j - 1];
        int f = ix.out_frag[p], off = ix.out_off[p];
        Frag fr = m.rows[j - 1][f];
        if (fr == Frag::Down) {
          p = ix.in_start[f];
          j -= 1;
        } else if (is_cross(fr)) {
          Step s;
          s.kind = Step::Crossing;
          s.crossing = crossing_id[j - 1][f];
          s.line = off == 0 ? 2 : 1;
          s.over = d.crossings[s.crossing].over_line == s.line;
          comp.steps.push_back(s);
          p = ix.in_start[f] + (off == 0 ? 1 : 0);
          j -= 1;
        } else {  // cup
          Step s;
          s.kind = Step::Extremum;
          s.extremum = fr;
          s.turn = fr == Frag::CupCcw ? 1 : -1;
          comp.steps.push_back(s);
          comp.turn2 += s.turn;
          p = ix.out_start[f] + 1 - off;
        }
      }
    }
    if (comp.closed && comp.turn2 % 2 != 0) throw Error("closed component with half-integral Whitney degree");
    comp.lines = crossing_lines(comp.steps);
    d.turn2 += comp.turn2;
    d.components.push_back(std::move(comp));
  };

  // open strands first: bottom ends going up, then top ends going down
  for (size_t p = 0; p < d.levels.front().size(); ++p)
    if (d.levels.front()[p]) walk(0, static_cast<int>(p));
  for (size_t p = 0; p < d.levels.back().size(); ++p)
    if (!d.levels.back()[p]) walk(static_cast<int>(R), static_cast<int>(p));
  for (size_t j = 0; j < d.levels.size(); ++j)
    for (size_t p = 0; p < d.levels[j].size(); ++p)
      if (!seen[j][p] && d.levels[j][p]) walk(static_cast<int>(j), static_cast<int>(p));
  for (size_t j = 0; j < d.levels.size(); ++j)
    for (size_t p = 0; p < d.levels[j].size(); ++p)
      if (!seen[j][p]) throw Error("segment not reached by any component");
  return d;
}

// the same closed component walked from another upward segment
inline Component rebase(const Component& c, size_t step) {
  if (!c.closed) throw Error("only closed components can be rebased");
  if (c.steps[step].kind != Step::Segment || !c.steps[step].up) throw Error("base point must be an upward segment");
  Component r = c;
  std::rotate(r.steps.begin(), r.steps.begin() + static_cast<long>(step), r.steps.end());
  r.lines = crossing_lines(r.steps);
  return r;
}
inline std::vector<size_t> base_points(const Component& c) {
  std::vector<size_t> out;
  for (size_t i = 0; i < c.steps.size(); ++i)
    if (c.steps[i].kind == Step::Segment && c.steps[i].up) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// transformations

inline MorseWord mirror(const MorseWord& m) {
  MorseWord r = m;
  for (auto& row : r.rows)
    for (auto& f : row) {
      if (f == Frag::CrossPos) f = Frag::CrossNeg;
      else if (f == Frag::CrossNeg) f = Frag::CrossPos;
    }
  return r;
}

inline MorseWord reverse_orientation(const MorseWord& m) {
  MorseWord r = m;
  r.bottom.flip();
  for (auto& row : r.rows)
    for (auto& f : row) {
      switch (f) {
        case Frag::Up: f = Frag::Down; break;
        case Frag::Down: f = Frag::Up; break;
        case Frag::CapCcw: f = Frag::CapCw; break;
        case Frag::CapCw: f = Frag::CapCcw; break;
        case Frag::CupCcw: f = Frag::CupCw; break;
        case Frag::CupCw: f = Frag::CupCcw; break;
        default: break;
      }
    }
  return r;
}

namespace detail {

inline Frag pass(bool up) { return up ? Frag::Up : Frag::Down; }
inline Frag cup_for(bool left_up) { return left_up ? Frag::CupCw : Frag::CupCcw; }
inline Frag cap_for(bool left_up) { return left_up ? Frag::CapCw : Frag::CapCcw; }

// row passing every strand of `lv` except a block [p, p+k) replaced by `mid`
inline std::vector<Frag> row_with(const Level& lv, int p, int k, std::vector<Frag> mid) {
  std::vector<Frag> row;
  for (int i = 0; i < p; ++i) row.push_back(pass(lv[i]));
  row.insert(row.end(), mid.begin(), mid.end());
  for (size_t i = p + k; i < lv.size(); ++i) row.push_back(pass(lv[i]));
  return row;
}

inline MorseWord with_rows(const MorseWord& m, int level, const std::vector<std::vector<Frag>>& rows) {
  MorseWord r = m;
  r.rows.insert(r.rows.begin() + level, rows.begin(), rows.end());
  morse_levels(r);
  return r;
}

inline void check_slot(const std::vector<Level>& lv, int level, int pos, int width) {
  if (level < 0 || level >= static_cast<int>(lv.size())) throw Error("level out of range");
  if (pos < 0 || pos + width > static_cast<int>(lv[level].size())) throw Error("strand position out of range");
}

}  // namespace detail

// A crossing at (pos, pos+1) on top of `level` with the given line over.
inline std::vector<Frag> crossing_row(const Level& lv, int pos, int over_line) {
  return detail::row_with(lv, pos, 2, {crossing_sign(over_line, lv[pos], lv[pos + 1]) > 0 ? Frag::CrossPos : Frag::CrossNeg});
}

enum class CurlSide { Left, Right };

// A kink on the strand at (level, pos): the loop sits on the given side, its crossing has the given sign.
inline MorseWord add_curl(const MorseWord& m, int level, int pos, CurlSide side, int sign) {
  auto lv = morse_levels(m);
  detail::check_slot(lv, level, pos, 1);
  bool o = lv[level][pos];
  Frag x = sign > 0 ? Frag::CrossPos : Frag::CrossNeg;
  std::vector<std::vector<Frag>> rows;
  Level a = lv[level];
  if (side == CurlSide::Right) {
    // new pair at pos+1, pos+2; the strand crosses to pos+1 and closes with the cup's left end
    bool cup_left = !o;
    rows.push_back(detail::row_with(a, pos + 1, 0, {detail::cup_for(cup_left)}));
    a.insert(a.begin() + pos + 1, {cup_left, !cup_left});
    rows.push_back(detail::row_with(a, pos, 2, {x}));
    std::swap(a[pos], a[pos + 1]);
    rows.push_back(detail::row_with(a, pos, 2, {detail::cap_for(a[pos])}));
  } else {
    bool cup_left = o;
    rows.push_back(detail::row_with(a, pos, 0, {detail::cup_for(cup_left)}));
    a.insert(a.begin() + pos, {cup_left, !cup_left});
    rows.push_back(detail::row_with(a, pos + 1, 2, {x}));
    std::swap(a[pos + 1], a[pos + 2]);
    rows.push_back(detail::row_with(a, pos + 1, 2, {detail::cap_for(a[pos + 1])}));
  }
  return detail::with_rows(m, level, rows);
}

// Two crossings between the strands at (pos, pos+1) that cancel by a second Reidemeister move.
inline MorseWord add_r2(const MorseWord& m, int level, int pos, int over_line) {
  auto lv = morse_levels(m);
  detail::check_slot(lv, level, pos, 2);
  Level a = lv[level];
  std::vector<std::vector<Frag>> rows{crossing_row(a, pos, over_line)};
  std::swap(a[pos], a[pos + 1]);
  // the same strand stays over; it now runs along the other line
  rows.push_back(crossing_row(a, pos, 3 - over_line));
  return detail::with_rows(m, level, rows);
}

// Three crossings on strands (pos, pos+1, pos+2) in braid form; `word` lists
// (slot, over_line) with slot 0 for (pos, pos+1) and 1 for (pos+1, pos+2).
inline MorseWord add_braid_rows(const MorseWord& m, int level, int pos, const std::vector<std::pair<int, int>>& word) {
  auto lv = morse_levels(m);
  detail::check_slot(lv, level, pos, 3);
  Level a = lv[level];
  std::vector<std::vector<Frag>> rows;
  for (auto [slot, over] : word) {
    rows.push_back(crossing_row(a, pos + slot, over));
    std::swap(a[pos + slot], a[pos + slot + 1]);
  }
  return detail::with_rows(m, level, rows);
}

// The two sides of a third Reidemeister move, as (unoriented) braid words:
// s1^e s2^e s1^e = s2^e s1^e s2^e and s1^e s2^d s1^-e = s2^-e s1^d s2^e, with over line 1 for exponent +1.
inline std::pair<MorseWord, MorseWord> r3_pair(const MorseWord& m, int level, int pos, int e, int d, bool conjugate_form) {
  auto line = [](int x) { return x > 0 ? 1 : 2; };
  std::vector<std::pair<int, int>> lhs, rhs;
  if (!conjugate_form) {
    lhs = {{0, line(e)}, {1, line(e)}, {0, line(e)}};
    rhs = {{1, line(e)}, {0, line(e)}, {1, line(e)}};
  } else {
    lhs = {{0, line(e)}, {1, line(d)}, {0, line(-e)}};
    rhs = {{1, line(-e)}, {0, line(d)}, {1, line(e)}};
  }
  return {add_braid_rows(m, level, pos, lhs), add_braid_rows(m, level, pos, rhs)};
}

// ---------------------------------------------------------------------------
// built-in knots and links

struct BuiltinKnot {
  const char* name;
  int strands;
  std::vector<int> word;
};

inline const std::vector<BuiltinKnot>& builtin_table() {
  static const std::vector<BuiltinKnot> table{
      {"O", 1, {}},
      {"Hopf_L", 2, {-1, -1}},
      {"Hopf_R", 2, {1, 1}},
      {"3_1_L", 2, {-1, -1, -1}},
      {"3_1_R", 2, {1, 1, 1}},
      {"4_1", 3, {1, -2, 1, -2}},
      {"5_1_L", 2, {-1, -1, -1, -1, -1}},
      {"5_1_R", 2, {1, 1, 1, 1, 1}},
      {"5_2_L", 3, {-1, -1, -1, -2, 1, -2}},
      {"5_2_R", 3, {1, 1, 1, 2, -1, 2}},
  };
  return table;
}

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& k : builtin_table()) out.emplace_back(k.name);
  return out;
}

inline BraidWord builtin_braid(const std::string& name) {
  for (const auto& k : builtin_table())
    if (name == k.name) return BraidWord{k.strands, k.word};
  throw ParseError("unknown knot '" + name + "'; known: " + boost::algorithm::join(builtin_names(), ", "));
}
inline MorseWord builtin_morse(const std::string& name) { return braid_closure(builtin_braid(name)); }
inline LinkDiagram builtin_knot(const std::string& name) { return analyze(builtin_morse(name)); }

// the open 1-1 tangle obtained by cutting the leftmost braid strand of a closure
inline MorseWord open_closure(const BraidWord& b) {
  validate_braid(b);
  int m = b.strands;
  MorseWord w;
  w.bottom = {true};
  auto pad = [](std::vector<Frag>& row, int k, Frag f) { row.insert(row.end(), k, f); };
  for (int k = 1; k < m; ++k) {
    std::vector<Frag> row;
    pad(row, k, Frag::Up);
    row.push_back(Frag::CupCw);
    pad(row, k - 1, Frag::Down);
    w.rows.push_back(row);
  }
  for (int l : b.letters) {
    int i = std::abs(l) - 1;
    std::vector<Frag> row;
    pad(row, i, Frag::Up);
    row.push_back(l > 0 ? Frag::CrossPos : Frag::CrossNeg);
    pad(row, m - i - 2, Frag::Up);
    pad(row, m - 1, Frag::Down);
    w.rows.push_back(row);
  }
  for (int k = m - 1; k >= 1; --k) {
    std::vector<Frag> row;
    pad(row, k, Frag::Up);
    row.push_back(Frag::CapCw);
    pad(row, k - 1, Frag::Down);
    w.rows.push_back(row);
  }
  if (w.rows.empty()) w.rows.push_back({Frag::Up});
  return w;
}

// a single vertical strand, oriented upward
inline MorseWord straight_strand() { return MorseWord{{true}, {{Frag::Up}}}; }

}  // namespace taftknot
