#include "knotinv/equality.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace knotinv::grouppres {

namespace {

std::vector<Letter> inverse_of(std::span<const Letter> w) {
  std::vector<Letter> inv(w.size());
  std::transform(w.rbegin(), w.rend(), inv.begin(), [](Letter l) { return -l; });
  return inv;
}

std::vector<RewriteRule> build_rules(const Presentation& p) {
  std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> seen;
  std::vector<RewriteRule> rules;
  for (const Word& r : p.relators) {
    if (r.empty()) continue;
    const auto base = r.letters();
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<Letter> s = dir == 0 ? base : inverse_of(base);
      for (std::size_t rot = 0; rot < s.size(); ++rot) {
        std::vector<Letter> cyc(s.begin() + rot, s.end());
        cyc.insert(cyc.end(), s.begin(), s.begin() + rot);
        for (std::size_t k = 1; k <= cyc.size(); ++k) {
          std::vector<Letter> pat(cyc.begin(), cyc.begin() + k);
          std::vector<Letter> rep =
              inverse_of(std::span<const Letter>(cyc).subspan(k));
          if (seen.insert({pat, rep}).second) rules.push_back({pat, rep});
        }
      }
    }
  }
  return rules;
}

}  // namespace

WordOracle::WordOracle(Presentation p, OracleLimits limits, std::vector<FiniteGroup> library)
    : pres_(std::move(p)), limits_(limits), library_(std::move(library)) {
  pres_.validate();
  rules_ = build_rules(pres_);
  for (int r = 0; r < static_cast<int>(rules_.size()); ++r)
    rules_by_first_[rules_[r].pattern.front()].push_back(r);
  hom_cache_.resize(library_.size());
}

void WordOracle::neighbors(const Word& w, std::size_t len_cap,
                           const std::function<void(Word)>& sink) const {
  const auto& ls = w.letters();
  std::vector<Letter> next;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto bucket = rules_by_first_.find(ls[i]);
    if (bucket == rules_by_first_.end()) continue;
    for (int ri : bucket->second) {
      const RewriteRule& rule = rules_[ri];
      const std::size_t k = rule.pattern.size();
      if (i + k > ls.size()) continue;
      if (!std::equal(rule.pattern.begin() + 1, rule.pattern.end(), ls.begin() + i + 1))
        continue;
      next.assign(ls.begin(), ls.begin() + i);
      next.insert(next.end(), rule.replacement.begin(), rule.replacement.end());
      next.insert(next.end(), ls.begin() + i + k, ls.end());
      Word n = Word::reduce(next);
      if (n.size() <= len_cap) sink(std::move(n));
    }
  }
}

bool WordOracle::one_move_apart(const Word& from, const Word& to) const {
  bool found = false;
  neighbors(from, to.size() + from.size() + 8, [&](Word n) {
    if (n == to) found = true;
  });
  return found;
}

struct WordOracle::Ball {
  std::unordered_map<Word, Word, WordHash> parent;  // word -> predecessor
  Word least;
  bool complete = true;
};

WordOracle::Ball WordOracle::explore(const Word& start, std::size_t node_cap,
                                     std::size_t len_cap) const {
  Ball ball;
  ball.least = start;
  ball.parent.emplace(start, start);
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    if (ball.parent.size() >= node_cap) {
      ball.complete = false;
      break;
    }
    Word cur = std::move(queue.front());
    queue.pop_front();
    neighbors(cur, len_cap, [&](Word n) {
      if (ball.parent.contains(n)) return;
      if (n < ball.least) ball.least = n;
      ball.parent.emplace(n, cur);
      queue.push_back(std::move(n));
    });
  }
  return ball;
}

Word WordOracle::canonical(const Word& w) const {
  {
    std::scoped_lock lock(mu_);
    if (auto it = canon_cache_.find(w); it != canon_cache_.end()) return it->second;
  }
  Ball ball = explore(w, limits_.max_ball_nodes, w.size() + limits_.canon_slack);
  std::scoped_lock lock(mu_);
  if (!ball.complete) budget_hit_ = true;
  if (ball.complete) {
    for (const auto& [word, _] : ball.parent) canon_cache_.emplace(word, ball.least);
  } else {
    canon_cache_.emplace(w, ball.least);
  }
  return ball.least;
}

bool WordOracle::dedup_budget_hit() const {
  std::scoped_lock lock(mu_);
  return budget_hit_;
}

const std::vector<std::vector<int>>& WordOracle::homs_into(std::size_t idx) const {
  std::scoped_lock lock(mu_);
  if (!hom_cache_[idx]) hom_cache_[idx] = enumerate_homs(pres_, library_[idx]);
  return *hom_cache_[idx];
}

EqualityVerdict WordOracle::equal(const Word& u, const Word& v, std::size_t budget) const {
  EqualityVerdict verdict;
  if (u.max_generator() >= static_cast<int>(pres_.rank()) ||
      v.max_generator() >= static_cast<int>(pres_.rank()))
    throw std::invalid_argument("word not over the presentation's generators");

  if (u == v) {
    verdict.tag = EqualityVerdict::Tag::Equal;
    verdict.trace = {u};
    return verdict;
  }

  // Bidirectional breadth-first rewriting, expanding the smaller frontier.
  const std::size_t len_cap = std::max(u.size(), v.size()) + limits_.proof_slack;
  struct Side {
    std::unordered_map<Word, Word, WordHash> parent;
    std::deque<Word> frontier;
    std::size_t depth = 0;
  };
  Side a, b;
  a.parent.emplace(u, u);
  a.frontier.push_back(u);
  b.parent.emplace(v, v);
  b.frontier.push_back(v);
  std::optional<Word> meet;
  std::size_t nodes = 0;

  auto expand = [&](Side& self, Side& other) {
    std::deque<Word> next;
    for (const Word& cur : self.frontier) {
      neighbors(cur, len_cap, [&](Word n) {
        if (meet || self.parent.contains(n)) return;
        self.parent.emplace(n, cur);
        ++nodes;
        if (other.parent.contains(n)) {
          meet = n;
          return;
        }
        next.push_back(std::move(n));
      });
      if (meet) break;
    }
    self.frontier = std::move(next);
    ++self.depth;
  };

  while (!meet && a.depth + b.depth < budget && nodes < limits_.max_ball_nodes &&
         (!a.frontier.empty() || !b.frontier.empty())) {
    Side& smaller = (a.frontier.size() <= b.frontier.size() && !a.frontier.empty()) ||
                            b.frontier.empty()
                        ? a
                        : b;
    expand(smaller, &smaller == &a ? b : a);
  }

  if (meet) {
    std::vector<Word> from_u;
    for (Word cur = *meet;; cur = a.parent.at(cur)) {
      from_u.push_back(cur);
      if (cur == u) break;
    }
    std::reverse(from_u.begin(), from_u.end());
    for (Word cur = *meet; cur != v;) {
      cur = b.parent.at(cur);
      from_u.push_back(cur);
    }
    verdict.tag = EqualityVerdict::Tag::Equal;
    verdict.trace = std::move(from_u);
    if (verdict.trace.size() - 1 > budget || !verify(u, v, verdict))
      throw std::logic_error("equality trace failed replay");
    return verdict;
  }

  // Look for a separating finite quotient.
  for (std::size_t gi = 0; gi < library_.size(); ++gi) {
    const FiniteGroup& g = library_[gi];
    if (g.order() > limits_.quotient_cap) continue;
    for (const auto& hom : homs_into(gi)) {
      int iu = g.evaluate(u, hom);
      int iv = g.evaluate(v, hom);
      if (iu != iv) {
        verdict.tag = EqualityVerdict::Tag::Distinct;
        verdict.quotient = g.name();
        verdict.images = hom;
        verdict.image_u = iu;
        verdict.image_v = iv;
        if (!verify(u, v, verdict)) throw std::logic_error("distinct witness failed replay");
        return verdict;
      }
    }
  }

  verdict.tag = EqualityVerdict::Tag::Unknown;
  return verdict;
}

bool WordOracle::verify(const Word& u, const Word& v, const EqualityVerdict& verdict) const {
  switch (verdict.tag) {
    case EqualityVerdict::Tag::Equal: {
      if (verdict.trace.empty() || verdict.trace.front() != u || verdict.trace.back() != v)
        return false;
      for (std::size_t i = 0; i + 1 < verdict.trace.size(); ++i)
        if (!one_move_apart(verdict.trace[i], verdict.trace[i + 1])) return false;
      return true;
    }
    case EqualityVerdict::Tag::Distinct: {
      auto it = std::find_if(library_.begin(), library_.end(), [&](const FiniteGroup& g) {
        return g.name() == verdict.quotient;
      });
      if (it == library_.end()) return false;
      for (const Word& r : pres_.relators)
        if (it->evaluate(r, verdict.images) != 0) return false;
      int iu = it->evaluate(u, verdict.images);
      int iv = it->evaluate(v, verdict.images);
      return iu == verdict.image_u && iv == verdict.image_v && iu != iv;
    }
    case EqualityVerdict::Tag::Unknown:
      return true;
  }
  return false;
}

std::vector<Word> WordOracle::enumerate_words(int maxlen) const {
  std::vector<Word> out;
  std::set<Word> reps;
  std::vector<Word> level{Word()};
  auto consider = [&](const Word& w) {
    if (reps.insert(canonical(w)).second) out.push_back(w);
  };
  consider(Word());
  const int gens = static_cast<int>(pres_.rank());
  std::vector<Letter> alphabet;
  for (int g = 0; g < gens; ++g) {
    alphabet.push_back(static_cast<Letter>(g + 1));
    alphabet.push_back(static_cast<Letter>(-(g + 1)));
  }
  std::sort(alphabet.begin(), alphabet.end(),
            [](Letter x, Letter y) { return letter_key(x) < letter_key(y); });
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (Letter l : alphabet) {
        if (!w.empty() && w.letters().back() == -l) continue;
        std::vector<Letter> ls = w.letters();
        ls.push_back(l);
        next.push_back(Word::reduce(ls));
      }
    }
    for (const Word& w : next) consider(w);
    level = std::move(next);
  }
  return out;
}

}  // namespace knotinv::grouppres
