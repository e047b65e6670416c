#pragma once

// Text formats: `.salg` documents (a superalgebra, optionally followed by an
// odd derivation and rational points) and `.shc` documents (a Harish-Chandra
// pair). Polynomials use the same grammar SuperPoly::str() renders.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "salg/hcgroup.hpp"
#include "salg/superalgebra.hpp"

namespace salg {

struct SourcePos {
  int line = 1;
  int col = 1;
};

/// Syntax or semantic error; what() starts with "line:col: ".
class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

struct DerivationDecl {
  std::string name;
  /// Images in the order written; generators not mentioned map to 0.
  std::vector<std::pair<std::string, SuperPoly>> images;

  GeneratorImages generator_images(const RingPtr& ring) const;
};

struct AlgebraDoc {
  std::string name;
  RingPtr ring;
  std::vector<SuperPoly> relations;
  std::optional<DerivationDecl> derivation;
  std::vector<PointIdeal> points;

  SuperAlgebra algebra() const { return SuperAlgebra(ring, relations); }
};

struct PairDoc {
  HCPair pair;
};

struct Manifest {
  std::variant<AlgebraDoc, PairDoc> doc;
  /// Where named pieces start, e.g. "relation 2", "image y", "bracket 1 2".
  std::map<std::string, SourcePos> spans;
};

Manifest parse_manifest(std::string_view text, Field field = {});
std::string render_manifest(const Manifest& m);

AlgebraDoc parse_algebra(std::string_view text, Field field = {});
HCPair parse_pair(std::string_view text, Field field = {});

SuperPoly parse_poly(std::string_view text, const RingPtr& ring);
/// Comma-separated polynomials.
std::vector<SuperPoly> parse_poly_list(std::string_view text, const RingPtr& ring);
/// `x -> p; y -> q` (an optional leading `name:` is ignored); unmentioned
/// generators map to 0.
GeneratorImages parse_images(std::string_view text, const RingPtr& source, const RingPtr& target);
/// `x = 1, z = -2/3`.
PointIdeal parse_point(std::string_view text, Field field = {});
/// `g=[[..]]; e=[a1, ..., at]`; either part may be omitted.
HCElement parse_hc_element(std::string_view text, const HCGroup& group);

}  // namespace salg
