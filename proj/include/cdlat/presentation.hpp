#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdlat/config.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

// A finite presentation <generators | relators>. Relators are stored as
// words over the generators; an input relation u = v is normalized to the
// relator u v^-1. Words are freely and cyclically reduced, and relations
// that reduce to nothing are dropped, so every stored relator is nonempty.
//
// Grammar for parse():
//   file    := "gens" namelist ";" "rels" relist ";"
//   namelist:= name ("," name)*
//   relist  := rel ("," rel)*
//   rel     := word | word "=" word
//   word    := term ("*" term)*
//   term    := name ("^" integer)?
// Whitespace is insignificant; names match [A-Za-z][A-Za-z0-9_]*; integers
// may be negative.
struct Presentation {
  struct Letter {
    int gen;   // index into generators
    int sign;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
  };
  using Word = std::vector<Letter>;

  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::string name;  // from a "# name" file header; may be empty

  // Normalized one-line DSL text (used as a default group label).
  std::string render() const;
};

// Parses a single presentation. Throws ParseError with line/column on bad
// syntax and UsageError on semantic problems (no generators, duplicate or
// unknown names).
Presentation parse_presentation(std::string_view text);

// Parses a corpus file: blocks of DSL text, each preceded by a "# name"
// comment line. Names must be unique.
std::vector<Presentation> parse_presentation_file(std::string_view text);

// Completed coset table of the trivial subgroup: one row per group element,
// one column per generator and per generator inverse. After enumeration the
// table is total and every relator traces back to its starting coset.
class CosetTable {
 public:
  int num_cosets() const { return static_cast<int>(rows_.size()) / width_; }
  int num_generators() const { return width_ / 2; }

  // Column 2*g is generator g, column 2*g+1 its inverse.
  int apply(int coset, int column) const {
    return rows_[static_cast<std::size_t>(coset) * width_ + column];
  }
  int apply_letter(int coset, Presentation::Letter l) const {
    return apply(coset, 2 * l.gen + (l.sign < 0 ? 1 : 0));
  }
  int apply_word(int coset, const Presentation::Word& w) const {
    for (Presentation::Letter l : w) coset = apply_letter(coset, l);
    return coset;
  }

 private:
  friend CosetTable enumerate_cosets(const Presentation&, int);
  std::vector<int> rows_;
  int width_ = 0;
};

// Runs coset enumeration (HLT strategy with immediate coincidence handling)
// over the trivial subgroup. Throws ResourceError naming the limit when more
// than max_cosets cosets would be needed, which is also how a presentation
// of an infinite group fails.
CosetTable enumerate_cosets(const Presentation& p, int max_cosets);

// A group built from a presentation, plus the element index each generator
// landed on.
struct PresentedGroup {
  Group group;
  std::vector<int> generator_elements;
};

// Builds the multiplication table from the completed coset table via the
// regular action.
PresentedGroup enumerate(const Presentation& p, int max_cosets);
PresentedGroup enumerate(const Presentation& p);

}  // namespace cdlat
