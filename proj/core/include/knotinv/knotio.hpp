#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotinv/presentation.hpp"

namespace knotinv::knotio {

using grouppres::Presentation;

// Braid word on a fixed strand count; letters are signed Artin generator
// indices (+i for sigma_i, -i for its inverse, 1 <= i < strands).
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

// Planar diagram code. Edge labels are the segments of the 4-valent diagram;
// every label occurs exactly twice over all crossings. In "X a b c d s",
// a is the incoming under-edge, c the outgoing under-edge, b and d the two
// over-edges, and s the crossing sign.
struct PlanarDiagram {
  struct Crossing {
    int under_in, over_in, under_out, over_out;
    int sign;  // +1 or -1
  };
  std::vector<Crossing> crossings;
  std::vector<int> arcs;  // explicit labels for crossingless components
};

struct UnknownToken : std::runtime_error {
  UnknownToken(std::size_t position, const std::string& token)
      : std::runtime_error("unknown braid token '" + token + "' at position " +
                           std::to_string(position)),
        position(position) {}
  std::size_t position;
};

struct IndexOutOfRange : std::runtime_error {
  IndexOutOfRange(int letter, int strands)
      : std::runtime_error("braid letter " + std::to_string(letter) +
                           " out of range for " + std::to_string(strands) + " strands"),
        letter(letter) {}
  int letter;
};

struct MalformedArc : std::runtime_error {
  MalformedArc(int label, int count)
      : std::runtime_error("arc label " + std::to_string(label) + " appears " +
                           std::to_string(count) + " times (expected 2)"),
        label(label) {}
  int label;
};

// Tokens are signed integers or s<i> / S<i> (S meaning the inverse). The
// strand count is taken from `strands` when given, else max index + 1.
BraidWord parse_braid(const std::string& text, std::optional<int> strands = std::nullopt);

// Lines "X a b c d +" or "X a b c d -", one crossing each; lines "A l1 l2..."
// declare crossingless arcs; '#' starts a comment.
PlanarDiagram parse_pd(std::istream& is);
PlanarDiagram parse_pd_text(const std::string& text);

// Wirtinger presentation of the closed-braid knot group: one generator per
// arc of the closed diagram, one conjugation relator per crossing, meridian
// the first generator. The over-strand conjugates the under-strand
// left-to-right: under_out = over^e under_in over^-e with e the crossing sign.
Presentation wirtinger_from_braid(const BraidWord& b);
Presentation wirtinger_from_pd(const PlanarDiagram& d);

// Detects PD lines (X/A prefixes) vs braid tokens and dispatches.
Presentation presentation_from_file(const std::string& path);

}  // namespace knotinv::knotio
