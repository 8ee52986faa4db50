#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dercalc/matrix.hpp"

namespace dercalc {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  std::string joined() const;
};

struct MorData {
  std::string name;
  ObjId src = 0;
  ObjId tgt = 0;
};

// A finite category as explicit tables. Everything downstream walks these
// tables exhaustively, hence the size guardrails.
struct FinCategory {
  static constexpr std::size_t kMaxObjects = 64;
  static constexpr std::size_t kMaxMorphisms = 4096;

  std::string name;
  std::vector<std::string> objects;
  std::vector<MorData> morphisms;
  std::vector<MorId> identity;                         // per object
  std::unordered_map<std::uint64_t, MorId> compose_table;  // key(g,f) for g after f

  static std::uint64_t key(MorId g, MorId f) {
    return (static_cast<std::uint64_t>(g) << 32) | f;
  }

  std::size_t num_objects() const { return objects.size(); }
  std::size_t num_morphisms() const { return morphisms.size(); }

  bool composable(MorId g, MorId f) const {
    return morphisms[f].tgt == morphisms[g].src;
  }
  // g∘f; throws Error when the pair is not composable or not tabulated.
  MorId compose(MorId g, MorId f) const;

  std::optional<ObjId> object_by_name(const std::string& n) const;
  std::optional<MorId> morphism_by_name(const std::string& n) const;

  std::vector<MorId> hom(ObjId a, ObjId b) const;

  bool operator==(const FinCategory& o) const;
};

using CatPtr = std::shared_ptr<const FinCategory>;

// Structural identity of the tables, names included.
bool same_cat(const CatPtr& a, const CatPtr& b);

// Empty report iff all category laws hold; otherwise one line per violated
// pair/triple. Total: never throws on malformed input.
ValidationReport validate_category(const FinCategory& c);

// Builds lookup state, runs validate_category and the size guardrails,
// throws Error on any violation.
CatPtr make_category(FinCategory c);

// -- standard categories ----------------------------------------------------

CatPtr terminal_category();               // e
CatPtr empty_category();
CatPtr ordinal(std::size_t n);            // [n]: 0 -> 1 -> ... -> n
CatPtr discrete_category(std::size_t n);
// Poset from a relation table of strict pairs (a <= b). The table must be
// antisymmetric and transitively closed; violations are rejected naming the
// offending pair.
CatPtr poset_category(std::string name, std::vector<std::string> object_names,
                      const std::vector<std::pair<std::string, std::string>>& le_pairs);
CatPtr corner_category();                 // objects (0,0),(1,0),(0,1)
CatPtr square_category();                 // [1] x [1]
CatPtr opposite_category(const CatPtr& c);
CatPtr cocone_category(const CatPtr& c);  // c with a new final object appended

struct Product {
  CatPtr cat;
  std::vector<std::vector<ObjId>> obj;                // [o1][o2]
  std::unordered_map<std::uint64_t, MorId> mor;       // key(m1,m2)
  MorId mor_at(MorId m1, MorId m2) const { return mor.at(FinCategory::key(m1, m2)); }
};
Product product_category(const CatPtr& a, const CatPtr& b);

struct Coproduct {
  CatPtr cat;
  std::vector<std::vector<ObjId>> obj;                // [part][object]
  std::vector<std::vector<MorId>> mor;
};
Coproduct coproduct_category(const std::vector<CatPtr>& parts);

// -- functors and transformations -------------------------------------------

struct FinFunctor {
  CatPtr source, target;
  std::vector<ObjId> obj;  // per source object
  std::vector<MorId> mor;  // per source morphism

  ObjId on_obj(ObjId a) const { return obj[a]; }
  MorId on_mor(MorId m) const { return mor[m]; }
  bool operator==(const FinFunctor& o) const;
};

ValidationReport validate_functor(const FinFunctor& u);
FinFunctor make_functor(CatPtr source, CatPtr target, std::vector<ObjId> obj,
                        std::vector<MorId> mor);  // validates, throws on failure

FinFunctor identity_functor(const CatPtr& c);
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);  // g∘f
// Functor into a thin category determined by its object assignment; throws
// when some required hom-set of the target is not a singleton.
FinFunctor thin_functor(const CatPtr& source, const CatPtr& target, std::vector<ObjId> obj);
FinFunctor classifier(const CatPtr& c, ObjId k);               // e -> c
FinFunctor to_terminal(const CatPtr& c);                       // c -> e
FinFunctor opposite_functor(const FinFunctor& u);
FinFunctor product_functor(const Product& src, const Product& dst, const FinFunctor& f1,
                           const FinFunctor& f2);
FinFunctor product_pr1(const Product& p, const CatPtr& a, const CatPtr& b);
FinFunctor product_pr2(const Product& p, const CatPtr& a, const CatPtr& b);
FinFunctor coproduct_injection(const Coproduct& cp, const CatPtr& part, std::size_t index);

struct FinNatTrans {
  FinFunctor source, target;       // parallel u, v : J -> K
  std::vector<MorId> component;    // per object of J, a morphism of K

  bool operator==(const FinNatTrans& o) const;
};

ValidationReport validate_nat(const FinNatTrans& t);
FinNatTrans make_nat(FinFunctor source, FinFunctor target, std::vector<MorId> component);

FinNatTrans identity_nat(const FinFunctor& u);
FinNatTrans vcompose(const FinNatTrans& b, const FinNatTrans& a);      // b after a
FinNatTrans whisker_left(const FinFunctor& h, const FinNatTrans& a);   // h∘u ⇒ h∘v
FinNatTrans whisker_right(const FinNatTrans& a, const FinFunctor& h);  // u∘h ⇒ v∘h

// -- comma categories --------------------------------------------------------

struct CommaObject {
  ObjId j1, j2;
  MorId f;  // u1(j1) -> u2(j2)
};

// The oriented pullback of the cospan u1 : J1 -> K <- J2 : u2. Objects are
// ordered lexicographically in (j1, j2, f) so two runs build identical tables.
struct CommaResult {
  CatPtr cat;
  std::vector<CommaObject> objects;
  FinFunctor pr1, pr2;
  FinNatTrans cell;  // u1∘pr1 ⇒ u2∘pr2
  std::optional<ObjId> find(ObjId j1, ObjId j2, MorId f) const;
};

CommaResult comma_category(const FinFunctor& u1, const FinFunctor& u2);

// (u/k) and (k/u) specialisations; pr is the projection to the source of u.
struct SliceResult {
  CommaResult comma;
  FinFunctor pr;  // to source(u)
  FinFunctor pi;  // to e
};
SliceResult comma_over(const FinFunctor& u, ObjId k);   // (u/k)
SliceResult comma_under(ObjId k, const FinFunctor& u);  // (k/u)

// Strict pullback of w : C -> D <- B : q; objects are pairs (c, b) with
// w(c) = q(b), ordered lexicographically.
struct PullbackResult {
  CatPtr cat;
  FinFunctor to_c, to_b;
  std::vector<std::pair<ObjId, ObjId>> objects;
};
PullbackResult strict_pullback_category(const FinFunctor& w, const FinFunctor& q);

// -- structural predicates ---------------------------------------------------

struct BoolWitness {
  bool value = false;
  std::string witness;  // set when value is false (or when noteworthy)
  explicit operator bool() const { return value; }
};

BoolWitness is_fully_faithful(const FinFunctor& u);
BoolWitness is_injective_on_objects(const FinFunctor& u);

enum class SieveKind { Sieve, Cosieve, Both, Neither };
std::string to_string(SieveKind k);
// Requires u fully faithful and injective on objects; throws Error naming a
// witness otherwise.
SieveKind sieve_kind(const FinFunctor& u);

// l : B -> A left adjoint to r : A -> B with unit : id_B ⇒ r∘l and
// counit : l∘r ⇒ id_A. Verifies shapes and both triangle identities.
BoolWitness check_adjunction(const FinFunctor& l, const FinFunctor& r, const FinNatTrans& unit,
                             const FinNatTrans& counit);

struct AdjunctionData {
  FinFunctor l, r;
  FinNatTrans unit, counit;
};
// The forced adjunction pi_C ⊣ (final object) or (initial object) ⊣ pi_C.
AdjunctionData final_object_adjunction(const CatPtr& c);    // requires a final object
AdjunctionData initial_object_adjunction(const CatPtr& c);  // requires an initial object

enum class Extremal { Initial, Final };
std::optional<ObjId> extremal_object(const CatPtr& c, Extremal kind);

BoolWitness is_grothendieck_opfibration(const FinFunctor& u);

// -- oriented squares ----------------------------------------------------------

// DownLeft: cell : q∘v ⇒ w∘p.  UpRight: cell : w∘p ⇒ q∘v.
enum class Orientation { DownLeft, UpRight };
std::string to_string(Orientation o);

struct OrientedSquare {
  std::string name;
  FinFunctor top;     // v : A -> B
  FinFunctor left;    // p : A -> C
  FinFunctor bottom;  // w : C -> D
  FinFunctor right;   // q : B -> D
  FinNatTrans cell;
  Orientation orientation = Orientation::DownLeft;
};

ValidationReport validate_square(const OrientedSquare& s);
OrientedSquare make_square(std::string name, FinFunctor top, FinFunctor left, FinFunctor bottom,
                           FinFunctor right, FinNatTrans cell, Orientation orientation);
// Square with identity cell for a strictly commuting frame.
OrientedSquare commuting_square(std::string name, FinFunctor top, FinFunctor left,
                                FinFunctor bottom, FinFunctor right, Orientation orientation);

enum class PasteDirection { Horizontal, Vertical };
// Horizontal: s2 to the right of s1 (s1.right == s2.left).
// Vertical: s2 below s1 (s1.bottom == s2.top).
OrientedSquare paste(const OrientedSquare& s1, const OrientedSquare& s2, PasteDirection dir);

}  // namespace dercalc
