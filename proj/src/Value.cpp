#include "chc/Value.h"

#include <sstream>

namespace chc {

Value Value::boolean(bool b) {
    Value v;
    v.kind_ = K::Bool;
    v.b_ = b;
    return v;
}

Value Value::integer(Int i) {
    Value v;
    v.kind_ = K::Int;
    v.i_ = std::move(i);
    return v;
}

Value Value::rational(Rat r) {
    Value v;
    v.kind_ = K::Rat;
    v.r_ = std::move(r);
    return v;
}

Value Value::bitvec(Int i, unsigned width) {
    Int m = Int(1) << width;
    i %= m;
    if (i < 0) { i += m; }
    Value v;
    v.kind_ = K::Bv;
    v.i_ = std::move(i);
    v.width_ = width;
    return v;
}

Value Value::array(std::shared_ptr<const ArrayVal> a) {
    Value v;
    v.kind_ = K::Arr;
    v.arr_ = std::move(a);
    return v;
}

Sort Value::sort() const {
    switch (kind_) {
        case K::Bool: return Sort::boolSort();
        case K::Int: return Sort::intSort();
        case K::Rat: return Sort::realSort();
        case K::Bv: return Sort::bitVec(width_);
        case K::Arr: return arr_->sort;
    }
    throw ChcError("unreachable value kind");
}

Term Value::toTerm() const {
    switch (kind_) {
        case K::Bool: return mkBool(b_);
        case K::Int: return mkIntLit(i_);
        case K::Rat: return mkRealLit(boost::multiprecision::numerator(r_), boost::multiprecision::denominator(r_));
        case K::Bv: return mkBvLit(i_, width_);
        case K::Arr: {
            Term acc = mkConstArray(arr_->sort, arr_->dflt->toTerm());
            for (const auto& [idx, val] : arr_->entries) {
                acc = mkStore(acc, idx.toTerm(), val.toTerm());
            }
            return acc;
        }
    }
    throw ChcError("unreachable value kind");
}

std::string Value::str() const { return toTerm().str(); }

bool Value::operator==(const Value& o) const {
    if (kind_ != o.kind_) { return false; }
    switch (kind_) {
        case K::Bool: return b_ == o.b_;
        case K::Int: return i_ == o.i_;
        case K::Rat: return r_ == o.r_;
        case K::Bv: return width_ == o.width_ && i_ == o.i_;
        case K::Arr:
            return arr_->sort == o.arr_->sort && *arr_->dflt == *o.arr_->dflt && arr_->entries == o.arr_->entries;
    }
    return false;
}

bool Value::operator<(const Value& o) const {
    if (kind_ != o.kind_) { return kind_ < o.kind_; }
    switch (kind_) {
        case K::Bool: return b_ < o.b_;
        case K::Int: return i_ < o.i_;
        case K::Rat: return r_ < o.r_;
        case K::Bv: return width_ != o.width_ ? width_ < o.width_ : i_ < o.i_;
        case K::Arr: {
            if (arr_->sort != o.arr_->sort) { return arr_->sort < o.arr_->sort; }
            if (!(*arr_->dflt == *o.arr_->dflt)) { return *arr_->dflt < *o.arr_->dflt; }
            return arr_->entries < o.arr_->entries;
        }
    }
    return false;
}

// --- evaluation ----------------------------------------------------------------

Int euclideanDiv(const Int& a, const Int& b) {
    Int r = euclideanMod(a, b);
    return (a - r) / b;
}

Int euclideanMod(const Int& a, const Int& b) {
    Int babs = b < 0 ? Int(-b) : b;
    Int r = a % babs;
    if (r < 0) { r += babs; }
    return r;
}

namespace {

using MaybeValue = std::optional<Value>;

Rat toRat(const Value& v) {
    if (v.kind() == Value::K::Int) { return Rat(v.getInt()); }
    return v.getRat();
}

Int bvToSigned(const Int& bits, unsigned w) {
    Int half = Int(1) << (w - 1);
    if (bits >= half) { return bits - (Int(1) << w); }
    return bits;
}

MaybeValue evalApp(Term t, const Valuation& val);

MaybeValue evalRec(Term t, const Valuation& val) {
    switch (t.kind()) {
        case Kind::Var: {
            auto it = val.find(t.name());
            if (it == val.end()) { return std::nullopt; }
            if (it->second.sort() != t.sort()) {
                throw SortError("valuation assigns wrong sort to " + t.name());
            }
            return it->second;
        }
        case Kind::BoolLit: return Value::boolean(t.boolVal());
        case Kind::IntLit: return Value::integer(t.intVal());
        case Kind::RealLit: return Value::rational(Rat(t.realNum(), t.realDen()));
        case Kind::BvLit: return Value::bitvec(t.intVal(), t.sort().bvWidth());
        case Kind::PredApp: return std::nullopt;
        case Kind::Quant: return std::nullopt;
        case Kind::App: return evalApp(t, val);
    }
    return std::nullopt;
}

MaybeValue evalApp(Term t, const Valuation& val) {
    const Op op = t.op();

    // short-circuiting boolean structure
    if (op == Op::And || op == Op::Or) {
        bool isAnd = (op == Op::And);
        bool anyUnknown = false;
        for (const Term& a : t.args()) {
            MaybeValue v = evalRec(a, val);
            if (!v) {
                anyUnknown = true;
            } else if (v->getBool() != isAnd) {
                return Value::boolean(!isAnd);
            }
        }
        if (anyUnknown) { return std::nullopt; }
        return Value::boolean(isAnd);
    }
    if (op == Op::Not) {
        MaybeValue v = evalRec(t.arg(0), val);
        if (!v) { return std::nullopt; }
        return Value::boolean(!v->getBool());
    }
    if (op == Op::Implies) {
        MaybeValue a = evalRec(t.arg(0), val);
        MaybeValue b = evalRec(t.arg(1), val);
        if (a && !a->getBool()) { return Value::boolean(true); }
        if (b && b->getBool()) { return Value::boolean(true); }
        if (a && b) { return Value::boolean(!a->getBool() || b->getBool()); }
        return std::nullopt;
    }
    if (op == Op::Ite) {
        MaybeValue c = evalRec(t.arg(0), val);
        if (c) { return evalRec(c->getBool() ? t.arg(1) : t.arg(2), val); }
        MaybeValue a = evalRec(t.arg(1), val);
        MaybeValue b = evalRec(t.arg(2), val);
        if (a && b && *a == *b) { return a; }
        return std::nullopt;
    }

    // multiplication by a known zero is zero even when other factors are unknown
    if (op == Op::Mul || op == Op::BvMul) {
        std::vector<MaybeValue> vs;
        bool anyUnknown = false;
        for (const Term& a : t.args()) {
            vs.push_back(evalRec(a, val));
            anyUnknown |= !vs.back();
        }
        for (const MaybeValue& v : vs) {
            if (v) {
                bool zero = false;
                if (v->kind() == Value::K::Int) { zero = v->getInt() == 0; }
                else if (v->kind() == Value::K::Rat) { zero = v->getRat() == 0; }
                else if (v->kind() == Value::K::Bv) { zero = v->bvBits() == 0; }
                if (zero) { return *v; }
            }
        }
        if (anyUnknown) { return std::nullopt; }
        if (op == Op::Mul) {
            if (vs[0]->kind() == Value::K::Int) {
                Int acc = 1;
                for (const MaybeValue& v : vs) { acc *= v->getInt(); }
                return Value::integer(acc);
            }
            Rat acc = 1;
            for (const MaybeValue& v : vs) { acc *= toRat(*v); }
            return Value::rational(acc);
        }
        unsigned w = t.sort().bvWidth();
        Int acc = 1;
        for (const MaybeValue& v : vs) { acc *= v->bvBits(); }
        return Value::bitvec(acc, w);
    }

    // strict operators: evaluate all arguments first
    std::vector<Value> vs;
    vs.reserve(t.numArgs());
    for (const Term& a : t.args()) {
        MaybeValue v = evalRec(a, val);
        if (!v) { return std::nullopt; }
        vs.push_back(std::move(*v));
    }

    auto cmpRat = [&](auto f) {
        if (vs[0].kind() == Value::K::Int) { return Value::boolean(f(Rat(vs[0].getInt()), Rat(vs[1].getInt()))); }
        return Value::boolean(f(vs[0].getRat(), vs[1].getRat()));
    };

    switch (op) {
        case Op::Iff: return Value::boolean(vs[0].getBool() == vs[1].getBool());
        case Op::Xor: return Value::boolean(vs[0].getBool() != vs[1].getBool());
        case Op::Eq: return Value::boolean(vs[0] == vs[1]);
        case Op::Distinct: {
            for (std::size_t i = 0; i < vs.size(); ++i) {
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    if (vs[i] == vs[j]) { return Value::boolean(false); }
                }
            }
            return Value::boolean(true);
        }
        case Op::Neg:
            if (vs[0].kind() == Value::K::Int) { return Value::integer(-vs[0].getInt()); }
            return Value::rational(-vs[0].getRat());
        case Op::Add: {
            if (vs[0].kind() == Value::K::Int) {
                Int acc = 0;
                for (const Value& v : vs) { acc += v.getInt(); }
                return Value::integer(acc);
            }
            Rat acc = 0;
            for (const Value& v : vs) { acc += toRat(v); }
            return Value::rational(acc);
        }
        case Op::Sub:
            if (vs[0].kind() == Value::K::Int) { return Value::integer(vs[0].getInt() - vs[1].getInt()); }
            return Value::rational(vs[0].getRat() - vs[1].getRat());
        case Op::IntDiv:
            if (vs[1].getInt() == 0) { return std::nullopt; }
            return Value::integer(euclideanDiv(vs[0].getInt(), vs[1].getInt()));
        case Op::Mod:
            if (vs[1].getInt() == 0) { return std::nullopt; }
            return Value::integer(euclideanMod(vs[0].getInt(), vs[1].getInt()));
        case Op::RealDiv:
            if (vs[1].getRat() == 0) { return std::nullopt; }
            return Value::rational(vs[0].getRat() / vs[1].getRat());
        case Op::Le: return cmpRat([](const Rat& a, const Rat& b) { return a <= b; });
        case Op::Lt: return cmpRat([](const Rat& a, const Rat& b) { return a < b; });
        case Op::Ge: return cmpRat([](const Rat& a, const Rat& b) { return a >= b; });
        case Op::Gt: return cmpRat([](const Rat& a, const Rat& b) { return a > b; });
        default: break;
    }

    if (t.arg(0).sort().isBitVec() || op == Op::BvConcat) {
        unsigned w = t.arg(0).sort().bvWidth();
        const Int& a = vs[0].bvBits();
        auto mk = [&](const Int& x) { return Value::bitvec(x, w); };
        switch (op) {
            case Op::BvNeg: return mk(-a);
            case Op::BvNot: return mk(~a); // reduced mod 2^w by bitvec()
            case Op::BvAdd: return mk(a + vs[1].bvBits());
            case Op::BvSub: return mk(a - vs[1].bvBits());
            case Op::BvUDiv:
                if (vs[1].bvBits() == 0) { return mk((Int(1) << w) - 1); }
                return mk(a / vs[1].bvBits());
            case Op::BvURem:
                if (vs[1].bvBits() == 0) { return mk(a); }
                return mk(a % vs[1].bvBits());
            case Op::BvAnd: return mk(a & vs[1].bvBits());
            case Op::BvOr: return mk(a | vs[1].bvBits());
            case Op::BvXor: return mk(a ^ vs[1].bvBits());
            case Op::BvShl: {
                const Int& sh = vs[1].bvBits();
                if (sh >= w) { return mk(Int(0)); }
                return mk(a << static_cast<unsigned>(sh));
            }
            case Op::BvLshr: {
                const Int& sh = vs[1].bvBits();
                if (sh >= w) { return mk(Int(0)); }
                return mk(a >> static_cast<unsigned>(sh));
            }
            case Op::BvAshr: {
                const Int& sh = vs[1].bvBits();
                Int sa = bvToSigned(a, w);
                if (sh >= w) { return mk(sa < 0 ? Int(-1) : Int(0)); }
                // arithmetic shift: floor division by 2^sh
                Int div = Int(1) << static_cast<unsigned>(sh);
                Int q = sa / div;
                if (sa < 0 && sa % div != 0) { q -= 1; }
                return mk(q);
            }
            case Op::BvUlt: return Value::boolean(a < vs[1].bvBits());
            case Op::BvUle: return Value::boolean(a <= vs[1].bvBits());
            case Op::BvUgt: return Value::boolean(a > vs[1].bvBits());
            case Op::BvUge: return Value::boolean(a >= vs[1].bvBits());
            case Op::BvSlt: return Value::boolean(bvToSigned(a, w) < bvToSigned(vs[1].bvBits(), w));
            case Op::BvSle: return Value::boolean(bvToSigned(a, w) <= bvToSigned(vs[1].bvBits(), w));
            case Op::BvSgt: return Value::boolean(bvToSigned(a, w) > bvToSigned(vs[1].bvBits(), w));
            case Op::BvSge: return Value::boolean(bvToSigned(a, w) >= bvToSigned(vs[1].bvBits(), w));
            case Op::BvExtract: {
                Int shifted = a >> t.param1();
                return Value::bitvec(shifted, t.param0() - t.param1() + 1);
            }
            case Op::BvConcat: {
                unsigned wb = t.arg(1).sort().bvWidth();
                return Value::bitvec((a << wb) | vs[1].bvBits(), w + wb);
            }
            case Op::BvZeroExt: return Value::bitvec(a, w + t.param0());
            case Op::BvSignExt: return Value::bitvec(bvToSigned(a, w), w + t.param0());
            default: break;
        }
    }

    switch (op) {
        case Op::Select: {
            const ArrayVal& arr = vs[0].getArray();
            auto it = arr.entries.find(vs[1]);
            if (it != arr.entries.end()) { return it->second; }
            return *arr.dflt;
        }
        case Op::Store: {
            const ArrayVal& arr = vs[0].getArray();
            auto copy = std::make_shared<ArrayVal>(arr);
            if (vs[2] == *arr.dflt) {
                copy->entries.erase(vs[1]);
            } else {
                copy->entries[vs[1]] = vs[2];
            }
            return Value::array(copy);
        }
        case Op::ConstArray: {
            auto arr = std::make_shared<ArrayVal>();
            arr->sort = t.sort();
            arr->dflt = std::make_shared<Value>(vs[0]);
            return Value::array(arr);
        }
        default: break;
    }
    throw ChcError("evaluate: unhandled operator in " + t.str());
}

} // namespace

std::optional<Value> evaluate(Term t, const Valuation& v) { return evalRec(t, v); }

} // namespace chc
