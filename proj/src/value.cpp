#include "finrel/value.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

#include "finrel/errors.hpp"
#include "finrel/function.hpp"

namespace finrel {

struct Value::Repr {
  std::variant<std::int64_t, std::string, std::pair<Value, Value>, VSet, Fun> v;
};

Value::Value() : Value(atom(std::int64_t{0})) {}

Value Value::atom(std::int64_t n) {
  return Value(std::make_shared<const Repr>(Repr{{n}}));
}

Value Value::atom(std::string name) {
  return Value(std::make_shared<const Repr>(Repr{{std::move(name)}}));
}

Value Value::pair(Value first, Value second) {
  return Value(std::make_shared<const Repr>(
      Repr{{std::make_pair(std::move(first), std::move(second))}}));
}

Value Value::set(VSet elements) {
  return Value(std::make_shared<const Repr>(Repr{{std::move(elements)}}));
}

Value Value::function(Fun f) {
  return Value(std::make_shared<const Repr>(Repr{{std::move(f)}}));
}

ValueKind Value::kind() const { return static_cast<ValueKind>(repr_->v.index()); }

bool Value::is_atom() const {
  return kind() == ValueKind::IntAtom || kind() == ValueKind::SymAtom;
}

std::int64_t Value::int_payload() const { return std::get<std::int64_t>(repr_->v); }
const std::string& Value::sym_payload() const { return std::get<std::string>(repr_->v); }
const Value& Value::first() const { return std::get<2>(repr_->v).first; }
const Value& Value::second() const { return std::get<2>(repr_->v).second; }
const VSet& Value::set_elements() const { return std::get<VSet>(repr_->v); }
const Fun& Value::fun() const { return std::get<Fun>(repr_->v); }

namespace {

template <class T>
int cmp3(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

int compare(const Value& a, const Value& b) {
  if (a.repr_ == b.repr_) return 0;
  const int ka = static_cast<int>(a.kind());
  const int kb = static_cast<int>(b.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.kind()) {
    case ValueKind::IntAtom:
      return cmp3(a.int_payload(), b.int_payload());
    case ValueKind::SymAtom:
      return cmp3<std::string>(a.sym_payload(), b.sym_payload());
    case ValueKind::Pair: {
      if (int c = compare(a.first(), b.first())) return c;
      return compare(a.second(), b.second());
    }
    case ValueKind::Set:
      return compare(a.set_elements(), b.set_elements());
    case ValueKind::Function:
      return compare(a.fun(), b.fun());
  }
  return 0;
}

bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }

VSet::VSet(std::vector<Value> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end(),
            [](const Value& a, const Value& b) { return compare(a, b) < 0; });
  elems_.erase(std::unique(elems_.begin(), elems_.end(),
                           [](const Value& a, const Value& b) { return compare(a, b) == 0; }),
               elems_.end());
}

bool VSet::contains(const Value& v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v,
                            [](const Value& a, const Value& b) { return compare(a, b) < 0; });
}

bool VSet::subset_of(const VSet& other) const {
  for (const Value& v : elems_)
    if (!other.contains(v)) return false;
  return true;
}

int compare(const VSet& a, const VSet& b) {
  const auto& xs = a.elements();
  const auto& ys = b.elements();
  const std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(xs[i], ys[i])) return c;
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  return 0;
}

VSet union_of(const VSet& a, const VSet& b) {
  std::vector<Value> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return VSet(std::move(out));
}

VSet intersection_of(const VSet& a, const VSet& b) {
  std::vector<Value> out;
  for (const Value& v : a)
    if (b.contains(v)) out.push_back(v);
  return VSet(std::move(out));
}

VSet difference_of(const VSet& a, const VSet& b) {
  std::vector<Value> out;
  for (const Value& v : a)
    if (!b.contains(v)) out.push_back(v);
  return VSet(std::move(out));
}

VSet cartesian(const VSet& x, const VSet& y) {
  std::vector<Value> out;
  out.reserve(x.size() * y.size());
  for (const Value& a : x)
    for (const Value& b : y) out.push_back(Value::pair(a, b));
  return VSet(std::move(out));
}

namespace {

void render(const Value& v, std::ostream& os) {
  switch (v.kind()) {
    case ValueKind::IntAtom:
      os << v.int_payload();
      break;
    case ValueKind::SymAtom:
      os << v.sym_payload();
      break;
    case ValueKind::Pair:
      os << '(';
      render(v.first(), os);
      os << ", ";
      render(v.second(), os);
      os << ')';
      break;
    case ValueKind::Set: {
      os << '{';
      bool sep = false;
      for (const Value& e : v.set_elements()) {
        if (sep) os << ", ";
        render(e, os);
        sep = true;
      }
      os << '}';
      break;
    }
    case ValueKind::Function: {
      os << '{';
      bool sep = false;
      for (const auto& [k, val] : v.fun().entries()) {
        if (sep) os << ", ";
        render(k, os);
        os << " -> ";
        render(val, os);
        sep = true;
      }
      os << '}';
      break;
    }
  }
}

}  // namespace

std::string to_string(const Value& v) {
  std::ostringstream os;
  render(v, os);
  return os.str();
}

std::string to_string(const VSet& s) { return to_string(Value::set(s)); }

}  // namespace finrel
