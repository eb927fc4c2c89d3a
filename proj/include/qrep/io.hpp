#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "qrep/canonical.hpp"
#include "qrep/repcat.hpp"

// JSON formats.
//
//   quiver          {"vertices": [1, 2], "arrows": [{"id": "a1", "src": 1, "tgt": 2}],
//                    "declarations": ["Acyclic"]}  or  {"template": "A_3"}
//   base object     {"base": "fp", "p": 5, "dim": 3} | {"base": "q", "dim": 2}
//                   | {"base": "fgab", "rank": 1, "torsion": [2, 4]}
//                   | {"base": "fgab", "orders": [2, 0]}
//                   | {"base": "nested", "quiver": ..., "inner": {"base": "fp", "p": 5},
//                      "rep": representation}
//   representation  {"support": {"1": obj, "2": obj}, "arrows": {"a1": matrix}}
//   morphism        {"components": {"1": matrix}}
//
// A bare integer is accepted for an object over a field (its dimension) or
// over Z (its free rank). fgab generators are ordered torsion first, then
// free. Matrices are row lists with rows indexed by target generators;
// entries are integers or decimal strings ("1/2" over Q). Over a nested base
// an arrow map is a morphism object instead of a matrix.

namespace qrep::io {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// Parses JSON text; syntax errors carry the 1-based line and column.
Json parse(const std::string& text, const std::string& source = "<input>");
Json read_file(const std::string& path);

Quiver quiver_from_json(const Json& j);
Json to_json(const Quiver& q);

// --base q | fp:P | fgab | nested:<template>:fp:P
struct BaseSpec {
  enum class Kind { Q, Fp, FgAb, Nested } kind = Kind::Fp;
  std::uint64_t p = 5;
  std::string inner_template;  // nested only; the inner base is always fp:P

  std::string str() const;
};
BaseSpec parse_base_spec(const std::string& text);

using AnyRepCategory = std::variant<FpRep, QRep, ZRep, NestedFpRep>;
AnyRepCategory make_category(const Quiver& q, const BaseSpec& base, std::uint64_t budget);

// Base objects and morphisms.
Json object_to_json(const FpMod& c, const FpMod::Obj& x);
Json object_to_json(const QMod& c, const QMod::Obj& x);
Json object_to_json(const ZMod& c, const ZMod::Obj& x);
Json object_to_json(const FpRep& c, const FpRep::Obj& x);
FpMod::Obj object_from_json(const FpMod& c, const Json& j);
QMod::Obj object_from_json(const QMod& c, const Json& j);
ZMod::Obj object_from_json(const ZMod& c, const Json& j);
FpRep::Obj object_from_json(const FpRep& c, const Json& j);

template <class R>
Json morphism_to_json(const ModuleCategory<R>& c, const ModMor<R>& f);
Json morphism_to_json(const FpRep& c, const FpRep::Mor& f);
template <class R>
ModMor<R> morphism_from_json(const ModuleCategory<R>& c, const ModObj<R>& src,
                             const ModObj<R>& tgt, const Json& j);
FpRep::Mor morphism_from_json(const FpRep& c, const FpRep::Obj& src, const FpRep::Obj& tgt,
                              const Json& j);

// Representations and morphisms of representations.
template <class B>
Json rep_to_json(const RepCategory<B>& cat, const Representation<B>& f);
template <class B>
Representation<B> rep_from_json(const RepCategory<B>& cat, const Json& j);
template <class B>
Json rep_morphism_to_json(const RepCategory<B>& cat, const RepMorphism<B>& f);

template <class B>
Json to_json(const RepCategory<B>& cat, const CanonicalPresentation<B>& p);
template <class B>
Json to_json(const RepCategory<B>& cat, const CanonicalCopresentation<B>& p);

}  // namespace qrep::io
