#include "knotinv/knotio.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace knotinv::knotio {

using grouppres::Letter;
using grouppres::Word;

BraidWord parse_braid(const std::string& text, std::optional<int> strands) {
  BraidWord b;
  std::istringstream is(text);
  std::string tok;
  std::size_t position = 0;
  int max_index = 0;
  while (is >> tok) {
    ++position;
    int letter = 0;
    try {
      if (tok[0] == 's' || tok[0] == 'S') {
        std::size_t used = 0;
        int idx = std::stoi(tok.substr(1), &used);
        if (used + 1 != tok.size() || idx <= 0) throw std::invalid_argument(tok);
        letter = tok[0] == 's' ? idx : -idx;
      } else {
        std::size_t used = 0;
        letter = std::stoi(tok, &used);
        if (used != tok.size() || letter == 0) throw std::invalid_argument(tok);
      }
    } catch (const std::exception&) {
      throw UnknownToken(position, tok);
    }
    b.letters.push_back(letter);
    max_index = std::max(max_index, std::abs(letter));
  }
  b.strands = strands.value_or(max_index + 1);
  for (int letter : b.letters)
    if (std::abs(letter) >= b.strands) throw IndexOutOfRange(letter, b.strands);
  return b;
}

PlanarDiagram parse_pd(std::istream& is) {
  PlanarDiagram d;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "X") {
      PlanarDiagram::Crossing c{};
      std::string sign;
      if (!(ls >> c.under_in >> c.over_in >> c.under_out >> c.over_out >> sign) ||
          (sign != "+" && sign != "-"))
        throw std::invalid_argument("bad crossing line: " + line);
      c.sign = sign == "+" ? 1 : -1;
      d.crossings.push_back(c);
    } else if (head == "A") {
      int label;
      while (ls >> label) d.arcs.push_back(label);
    } else {
      throw std::invalid_argument("bad planar-diagram line: " + line);
    }
  }
  return d;
}

PlanarDiagram parse_pd_text(const std::string& text) {
  std::istringstream is(text);
  return parse_pd(is);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct RawRelator {
  int out, over, in, sign;
};

// Quotients raw generator slots by the union-find classes, renumbers the
// classes by first appearance and assembles the presentation.
Presentation assemble(int slots, UnionFind& uf, const std::vector<RawRelator>& raw) {
  std::map<int, int> compact;
  std::vector<int> order;
  auto gen_of = [&](int slot) {
    int root = uf.find(slot);
    auto [it, inserted] = compact.try_emplace(root, static_cast<int>(order.size()));
    if (inserted) order.push_back(root);
    return it->second;
  };
  // Scan all slots in order so generator numbering follows first appearance.
  std::vector<int> slot_gen(slots);
  for (int s = 0; s < slots; ++s) slot_gen[s] = gen_of(s);

  Presentation p;
  for (std::size_t i = 0; i < order.size(); ++i)
    p.generators.push_back("x" + std::to_string(i + 1));
  for (const RawRelator& r : raw) {
    Letter over = static_cast<Letter>(slot_gen[r.over] + 1);
    Letter in = static_cast<Letter>(slot_gen[r.in] + 1);
    Letter out = static_cast<Letter>(slot_gen[r.out] + 1);
    // out = over^sign * in * over^-sign  <=>  over^s in over^-s out^-1 = 1
    Letter o = r.sign > 0 ? over : -over;
    Word rel = Word::reduce({o, in, static_cast<Letter>(-o), static_cast<Letter>(-out)});
    if (!rel.empty()) p.relators.push_back(rel);
  }
  p.meridian = p.generators.empty() ? Word() : Word::single(1);
  p.validate();
  return p;
}

}  // namespace

Presentation wirtinger_from_braid(const BraidWord& b) {
  const int n = b.strands;
  // Slot 0..n-1: the arcs entering the braid at the top; one new slot per
  // crossing for the broken under-strand.
  int slots = n + static_cast<int>(b.letters.size());
  UnionFind uf(slots);
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);
  std::vector<RawRelator> raw;
  int next_slot = n;
  for (int letter : b.letters) {
    int i = std::abs(letter) - 1;  // positions i, i+1 cross
    int fresh = next_slot++;
    if (letter > 0) {
      // position i passes over position i+1
      raw.push_back({fresh, current[i], current[i + 1], +1});
      int over = current[i];
      current[i] = fresh;
      current[i + 1] = over;
    } else {
      raw.push_back({fresh, current[i + 1], current[i], -1});
      int over = current[i + 1];
      current[i + 1] = fresh;
      current[i] = over;
    }
  }
  // Closure: bottom position j joins top position j.
  for (int j = 0; j < n; ++j) uf.unite(current[j], j);
  return assemble(slots, uf, raw);
}

Presentation wirtinger_from_pd(const PlanarDiagram& d) {
  std::map<int, int> label_count;
  for (const auto& c : d.crossings)
    for (int label : {c.under_in, c.over_in, c.under_out, c.over_out}) ++label_count[label];
  for (const auto& [label, count] : label_count)
    if (count != 2) throw MalformedArc(label, count);

  std::map<int, int> slot_of;  // edge label -> slot, in order of appearance
  auto slot = [&](int label) {
    return slot_of.try_emplace(label, static_cast<int>(slot_of.size())).first->second;
  };
  for (const auto& c : d.crossings)
    for (int label : {c.under_in, c.over_in, c.under_out, c.over_out}) slot(label);
  for (int label : d.arcs) slot(label);

  UnionFind uf(static_cast<int>(slot_of.size()));
  std::vector<RawRelator> raw;
  for (const auto& c : d.crossings) {
    // The over-strand runs through the crossing unbroken.
    uf.unite(slot(c.over_in), slot(c.over_out));
    raw.push_back({slot(c.under_out), slot(c.over_in), slot(c.under_in), c.sign});
  }
  return assemble(static_cast<int>(slot_of.size()), uf, raw);
}

Presentation presentation_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open knot input: " + path);
  std::ostringstream buffer;
  buffer << f.rdbuf();
  std::string text = buffer.str();

  bool pd = false;
  std::istringstream is(text);
  std::string line;
  std::optional<int> strands;
  std::string braid_tokens;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "X" || head == "A") {
      pd = true;
      break;
    }
    if (head == "strands") {
      int n;
      ls >> n;
      strands = n;
      continue;
    }
    braid_tokens += line + " ";
  }
  if (pd) return wirtinger_from_pd(parse_pd_text(text));
  return wirtinger_from_braid(parse_braid(braid_tokens, strands));
}

}  // namespace knotinv::knotio
