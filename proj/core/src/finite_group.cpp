#include "knotinv/finite_group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace knotinv::grouppres {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const int n = order();
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  validate();
}

int FiniteGroup::evaluate(const Word& w, std::span<const int> images) const {
  int acc = 0;
  for (Letter l : w.letters()) {
    int img = images[generator_of(l)];
    acc = mul(acc, l > 0 ? img : inv(img));
  }
  return acc;
}

void FiniteGroup::validate() const {
  const int n = order();
  if (n == 0) throw std::invalid_argument("empty group table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n)
      throw std::invalid_argument("ragged group table");
    if (table_[0][a] != a || table_[a][0] != a)
      throw std::invalid_argument("element 0 is not an identity in " + name_);
    if (inverse_[a] < 0) throw std::invalid_argument("missing inverse in " + name_);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("non-associative table in " + name_);
}

namespace {

FiniteGroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup("C" + std::to_string(n), std::move(t));
}

// Dihedral group of order 2n: elements (r, s) = r in Z_n, s in {0,1},
// with (r1,s1)(r2,s2) = (r1 + (-1)^{s1} r2, s1+s2).
FiniteGroup dihedral(int n, const std::string& name) {
  const int order = 2 * n;
  auto id = [n](int r, int s) { return s * n + ((r % n) + n) % n; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int r1 = a % n, s1 = a / n, r2 = b % n, s2 = b / n;
      t[a][b] = id(r1 + (s1 ? -r2 : r2), (s1 + s2) % 2);
    }
  return FiniteGroup(name, std::move(t));
}

// Quaternion group {1,-1,i,-i,j,-j,k,-k} as signed basis products.
FiniteGroup quaternion8() {
  // index: 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
  auto pack = [](int axis, int sign) {
    return axis == 0 ? (sign > 0 ? 0 : 1) : 2 * axis + (sign > 0 ? 0 : 1);
  };
  auto axis = [](int e) { return e / 2; };
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  // i*j=k j*k=i k*i=j, squares are -1
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = axis(a), bx = axis(b);
      int s = sign(a) * sign(b), cx;
      if (ax == 0) {
        cx = bx;
      } else if (bx == 0) {
        cx = ax;
      } else if (ax == bx) {
        cx = 0;
        s = -s;
      } else {
        cx = 6 - ax - bx;  // the remaining axis of {1,2,3}
        if ((ax == 1 && bx == 2) || (ax == 2 && bx == 3) || (ax == 3 && bx == 1)) {
          // cyclic order, positive product
        } else {
          s = -s;
        }
      }
      t[a][b] = pack(cx, s);
    }
  return FiniteGroup("Q8", std::move(t));
}

// Permutation group from all permutations of {0..n-1}, optionally even only.
FiniteGroup permutation_group(int n, bool even_only, const std::string& name) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    if (!even_only || inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Put the identity first.
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index[c];
    }
  return FiniteGroup(name, std::move(t));
}

}  // namespace

const std::vector<FiniteGroup>& builtin_group_library() {
  static const std::vector<FiniteGroup> lib = [] {
    std::vector<FiniteGroup> g;
    for (int n = 1; n <= 12; ++n) g.push_back(cyclic(n));
    g.push_back(permutation_group(3, false, "S3"));
    g.push_back(dihedral(4, "D4"));
    g.push_back(quaternion8());
    g.push_back(permutation_group(4, true, "A4"));
    g.push_back(dihedral(6, "D6"));
    g.push_back(permutation_group(4, false, "S4"));
    return g;
  }();
  return lib;
}

std::vector<FiniteGroup> read_group_library(std::istream& is) {
  std::vector<FiniteGroup> out;
  std::string line, name;
  int counter = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      name = line.substr(line.find_first_not_of("# \t", 1) == std::string::npos
                             ? 1
                             : line.find_first_not_of("# \t", 1));
      continue;
    }
    std::istringstream hs(line);
    std::string kw;
    int n = 0;
    if (!(hs >> kw >> n) || kw != "order" || n <= 0)
      throw std::invalid_argument("expected 'order n' header, got: " + line);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r) {
      if (!std::getline(is, line)) throw std::invalid_argument("truncated group table");
      std::istringstream rs(line);
      for (int c = 0; c < n; ++c)
        if (!(rs >> table[r][c]) || table[r][c] < 0 || table[r][c] >= n)
          throw std::invalid_argument("bad table entry in row " + std::to_string(r));
    }
    out.emplace_back(name.empty() ? "G" + std::to_string(n) + "#" + std::to_string(counter)
                                  : name,
                     std::move(table));
    name.clear();
    ++counter;
  }
  return out;
}

void write_group_library(std::ostream& os, const std::vector<FiniteGroup>& groups) {
  for (const auto& g : groups) {
    os << "# " << g.name() << '\n';
    os << "order " << g.order() << '\n';
    for (int a = 0; a < g.order(); ++a) {
      for (int b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
      os << '\n';
    }
  }
}

std::vector<FiniteGroup> load_group_library_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open group library: " + path);
  return read_group_library(f);
}

namespace {

// Backtracking over generator images; a relator is checked as soon as every
// generator it mentions has an image.
struct HomSearch {
  const Presentation& p;
  const FiniteGroup& g;
  std::vector<std::vector<std::size_t>> checks;  // relators ready at depth i
  std::vector<int> images;
  std::function<void(std::span<const int>)> emit;

  HomSearch(const Presentation& pres, const FiniteGroup& grp) : p(pres), g(grp) {
    checks.resize(p.rank() + 1);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      int last = p.relators[r].max_generator();
      checks[last + 1 >= 1 ? last + 1 : 0].push_back(r);
    }
    images.assign(p.rank(), 0);
  }

  bool relators_ok(std::size_t depth) const {
    for (std::size_t r : checks[depth])
      if (g.evaluate(p.relators[r], images) != 0) return false;
    return true;
  }

  void run(std::size_t depth) {
    if (!relators_ok(depth)) return;
    if (depth == p.rank()) {
      emit(images);
      return;
    }
    for (int img = 0; img < g.order(); ++img) {
      images[depth] = img;
      run(depth + 1);
    }
    images[depth] = 0;
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_homs(const Presentation& p, const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  HomSearch search(p, g);
  search.emit = [&](std::span<const int> images) {
    out.emplace_back(images.begin(), images.end());
  };
  search.run(0);
  return out;
}

std::uint64_t hom_count(const Presentation& p, const FiniteGroup& g, int cap) {
  if (g.order() > cap)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
  std::uint64_t n = 0;
  HomSearch search(p, g);
  search.emit = [&](std::span<const int>) { ++n; };
  search.run(0);
  return n;
}

}  // namespace knotinv::grouppres
