#include <doctest.h>

#include <random>

#include "finrel/relation.hpp"
#include "support/oracles.hpp"

using namespace finrel;

namespace {

Value A(const char* s) { return Value::atom(s); }
Value A(int n) { return Value::atom(static_cast<std::int64_t>(n)); }

Rel R(std::vector<std::pair<Value, Value>> ps) { return Rel(std::move(ps)); }

}  // namespace

TEST_SUITE("relations") {

TEST_CASE("dom and ran are the first and second member sets") {
  const Rel r = R({{A("a"), A(1)}, {A("b"), A(1)}});
  CHECK(dom(r) == VSet({A("a"), A("b")}));
  CHECK(ran(r) == VSet({A(1)}));
  CHECK(dom(Rel()).empty());
}

TEST_CASE("composition chains through a middle element") {
  CHECK(compose(R({{A(1), A("u")}}), R({{A("a"), A(1)}})) == R({{A("a"), A("u")}}));
  const Rel r = R({{A("a"), A(1)}, {A("b"), A(2)}});
  CHECK(compose(r, identity(dom(r))) == r);
  CHECK(compose(R({{A(2), A("x")}}), R({{A("a"), A(1)}})).empty());
}

TEST_CASE("converse flips pairs and is an involution") {
  CHECK(converse(R({{A("a"), A(1)}})) == R({{A(1), A("a")}}));
  CHECK(converse(Rel()).empty());
  const auto pool = VSet(oracles::atoms({"a", "b"}));
  for (const Rel& r : oracles::all_relations(pool, pool)) {
    CHECK(converse(converse(r)) == r);
    CHECK(dom(converse(r)) == ran(r));
    CHECK(ran(converse(r)) == dom(r));
  }
}

TEST_CASE("identity relates every element to itself") {
  CHECK(identity(VSet({A("a"), A("b")})) == R({{A("a"), A("a")}, {A("b"), A("b")}}));
  CHECK(identity(VSet()).empty());
  CHECK(compose(identity(VSet({A(1)})), R({{A("a"), A(1)}})) == R({{A("a"), A(1)}}));
}

TEST_CASE("relation-from holds by carrier containment") {
  const Rel r = R({{A("a"), A(1)}});
  CHECK(is_relation_from(r, VSet({A("a"), A("b")}), VSet({A(1), A(2)})));
  CHECK_FALSE(is_relation_from(r, VSet({A("b")}), VSet({A(1)})));
}

TEST_CASE("both relation-from evaluators agree on all 512 relations over 3x3") {
  const auto pool = oracles::atoms({"a", "b", "c"});
  const VSet p(pool);
  const auto rels = oracles::all_relations(p, p);
  CHECK(rels.size() == 512);
  std::size_t checked = 0;
  for (const Rel& r : rels)
    for (const VSet& x : oracles::all_subsets(pool))
      for (const VSet& y : oracles::all_subsets(pool)) {
        CHECK(is_relation_from(r, x, y) == is_relation_from_product(r, x, y));
        ++checked;
      }
  CHECK(checked == 512u * 8u * 8u);
}

TEST_CASE("functionality: no two pairs share a first member") {
  CHECK(is_functional(R({{A("a"), A(1)}, {A("b"), A(1)}})));
  CHECK_FALSE(is_functional(R({{A("a"), A(1)}, {A("a"), A(2)}})));
}

TEST_CASE("pointwise and point-free functionality agree on all 512 relations") {
  const VSet p(oracles::atoms({"a", "b", "c"}));
  for (const Rel& r : oracles::all_relations(p, p))
    CHECK(is_functional(r) == (compose(r, converse(r)) == identity(ran(r))));
}

TEST_CASE("relation set operations") {
  const Rel r = R({{A("a"), A(1)}, {A("b"), A(2)}});
  CHECK(r.holds(A("a"), A(1)));
  CHECK_FALSE(r.holds(A(1), A("a")));
  CHECK(intersection_of(r, R({{A("b"), A(2)}})) == R({{A("b"), A(2)}}));
  CHECK(restrict_dom(r, VSet({A("a")})) == R({{A("a"), A(1)}}));
  CHECK(union_of(r, R({{A("c"), A(3)}})).size() == 3);
  CHECK(difference_of(r, R({{A("a"), A(1)}})) == R({{A("b"), A(2)}}));
}

TEST_CASE("composition is associative: exhaustive at two atoms, sampled at three") {
  const VSet p2(oracles::atoms({"a", "b"}));
  const auto rels2 = oracles::all_relations(p2, p2);
  for (const Rel& a : rels2)
    for (const Rel& b : rels2)
      for (const Rel& c : rels2)
        CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));

  const VSet p3(oracles::atoms({"a", "b", "c"}));
  const auto rels3 = oracles::all_relations(p3, p3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, rels3.size() - 1);
  for (int k = 0; k < 300; ++k) {
    const Rel& a = rels3[pick(rng)];
    const Rel& b = rels3[pick(rng)];
    const Rel& c = rels3[pick(rng)];
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
  }
}

TEST_CASE("converse antidistributes over composition") {
  const VSet p(oracles::atoms({"a", "b"}));
  const auto rels = oracles::all_relations(p, p);
  for (const Rel& s : rels)
    for (const Rel& r : rels)
      CHECK(converse(compose(s, r)) == compose(converse(r), converse(s)));
}

TEST_CASE("the target carrier of a relation is not recoverable") {
  // every nonempty relation runs into its range and into any strictly larger
  // set alike, so "the codomain of R" has no unique value
  const VSet p(oracles::atoms({"a", "b"}));
  const Value extra = A("z");
  for (const Rel& r : oracles::all_relations(p, p)) {
    if (r.empty()) continue;
    const VSet y = ran(r);
    const VSet yp = union_of(y, VSet({extra}));
    CHECK(is_relation_from(r, dom(r), y));
    CHECK(is_relation_from(r, dom(r), yp));
    CHECK(y != yp);
  }
}

}  // TEST_SUITE
