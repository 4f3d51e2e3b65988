#pragma once

#include "chc/Sort.h"
#include "chc/Term.h"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace chc {

using Rat = boost::multiprecision::cpp_rational;

class Value;

/// Finite table with a default element; canonical form stores no entry whose
/// value equals the default.
struct ArrayVal {
    Sort sort; // the Array sort
    std::shared_ptr<const Value> dflt;
    std::map<Value, Value> entries;
};

/// Ground value of some sort: Bool constant, integer, exact rational,
/// bit-vector constant (unsigned residue), or array table.
class Value {
public:
    enum class K { Bool, Int, Rat, Bv, Arr };

    static Value boolean(bool b);
    static Value integer(Int v);
    static Value rational(Rat r);
    static Value bitvec(Int v, unsigned width); // reduced mod 2^width
    static Value array(std::shared_ptr<const ArrayVal> a);

    K kind() const { return kind_; }
    bool getBool() const { return b_; }
    const Int& getInt() const { return i_; }
    const Rat& getRat() const { return r_; }
    const Int& bvBits() const { return i_; }
    unsigned bvWidth() const { return width_; }
    const ArrayVal& getArray() const { return *arr_; }

    Sort sort() const;

    /// Literal term of this value (not defined for arrays with non-literal structure;
    /// arrays render as const/store chains).
    Term toTerm() const;

    std::string str() const;

    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }
    bool operator<(const Value& o) const; // total order, for map keys

private:
    K kind_ = K::Bool;
    bool b_ = false;
    Int i_;
    Rat r_;
    unsigned width_ = 0;
    std::shared_ptr<const ArrayVal> arr_;
};

/// Map from variable name to ground value.
using Valuation = std::map<std::string, Value>;

/// Evaluates a quantifier-free term under a (possibly partial) valuation.
/// Returns nullopt ("Unknown") when a needed variable is unassigned or on
/// Int/Real division by zero. BitVec arithmetic wraps modulo 2^width;
/// Int div/mod follow SMT-LIB v2 Euclidean semantics; BitVec division by
/// zero follows the SMT-LIB >= 2.6 total semantics.
std::optional<Value> evaluate(Term t, const Valuation& v);

/// Euclidean division helpers exposed for tests.
Int euclideanDiv(const Int& a, const Int& b);
Int euclideanMod(const Int& a, const Int& b);

} // namespace chc
