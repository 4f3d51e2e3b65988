#include "chc/Term.h"

#include "chc/SmtLib.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace chc {

// --- sort interning ----------------------------------------------------------

namespace {

struct SortKey {
    SortKind kind;
    unsigned width;
    const Sort::Node* index;
    const Sort::Node* elem;
    bool operator==(const SortKey& o) const {
        return kind == o.kind && width == o.width && index == o.index && elem == o.elem;
    }
};

struct SortKeyHash {
    std::size_t operator()(const SortKey& k) const {
        std::size_t h = static_cast<std::size_t>(k.kind);
        h = h * 31 + k.width;
        h = h * 31 + std::hash<const void*>()(k.index);
        h = h * 31 + std::hash<const void*>()(k.elem);
        return h;
    }
};

class SortManager {
public:
    static SortManager& instance() {
        static SortManager m;
        return m;
    }

    const Sort::Node* get(SortKind kind, unsigned width, const Sort::Node* index, const Sort::Node* elem) {
        std::lock_guard<std::mutex> lock(mutex_);
        SortKey key{kind, width, index, elem};
        auto it = table_.find(key);
        if (it != table_.end()) { return it->second; }
        nodes_.push_back(Sort::Node{kind, width, index, elem});
        const Sort::Node* n = &nodes_.back();
        table_.emplace(key, n);
        return n;
    }

private:
    std::mutex mutex_;
    std::deque<Sort::Node> nodes_;
    std::unordered_map<SortKey, const Sort::Node*, SortKeyHash> table_;
};

Sort fromNode(const Sort::Node* n) {
    // Sort has a private ctor; rebuild through the public factories.
    switch (n->kind) {
        case SortKind::Bool: return Sort::boolSort();
        case SortKind::Int: return Sort::intSort();
        case SortKind::Real: return Sort::realSort();
        case SortKind::BitVec: return Sort::bitVec(n->width);
        case SortKind::Array: return Sort::array(fromNode(n->index), fromNode(n->elem));
    }
    throw ChcError("unreachable sort kind");
}

} // namespace

Sort Sort::boolSort() { return Sort(SortManager::instance().get(SortKind::Bool, 0, nullptr, nullptr)); }
Sort Sort::intSort() { return Sort(SortManager::instance().get(SortKind::Int, 0, nullptr, nullptr)); }
Sort Sort::realSort() { return Sort(SortManager::instance().get(SortKind::Real, 0, nullptr, nullptr)); }

Sort Sort::bitVec(unsigned width) {
    if (width < 1) { throw SortError("BitVec width must be >= 1"); }
    return Sort(SortManager::instance().get(SortKind::BitVec, width, nullptr, nullptr));
}

Sort Sort::array(Sort index, Sort elem) {
    if (!index.valid() || !elem.valid()) { throw SortError("invalid array component sort"); }
    return Sort(SortManager::instance().get(SortKind::Array, 0, index.raw(), elem.raw()));
}

unsigned Sort::bvWidth() const {
    if (!isBitVec()) { throw SortError("bvWidth on non-BitVec sort"); }
    return node_->width;
}

Sort Sort::arrayIndex() const {
    if (!isArray()) { throw SortError("arrayIndex on non-Array sort"); }
    return fromNode(node_->index);
}

Sort Sort::arrayElem() const {
    if (!isArray()) { throw SortError("arrayElem on non-Array sort"); }
    return fromNode(node_->elem);
}

std::string Sort::str() const { return smtlib::printSort(*this); }

// --- term interning ----------------------------------------------------------

namespace {

std::size_t hashCombine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hashNode(const Term::Node& n) {
    std::size_t h = static_cast<std::size_t>(n.kind);
    h = hashCombine(h, static_cast<std::size_t>(n.op));
    h = hashCombine(h, static_cast<std::size_t>(n.quant));
    h = hashCombine(h, std::hash<const void*>()(n.sort.raw()));
    h = hashCombine(h, std::hash<std::string>()(n.name));
    h = hashCombine(h, std::hash<std::string>()(n.num.str()));
    h = hashCombine(h, std::hash<std::string>()(n.den.str()));
    h = hashCombine(h, n.p0);
    h = hashCombine(h, n.p1);
    for (const Term& a : n.args) { h = hashCombine(h, std::hash<const void*>()(a.raw())); }
    for (const auto& [name, sort] : n.bound) {
        h = hashCombine(h, std::hash<std::string>()(name));
        h = hashCombine(h, std::hash<const void*>()(sort.raw()));
    }
    return h;
}

bool sameNode(const Term::Node& a, const Term::Node& b) {
    return a.kind == b.kind && a.op == b.op && a.quant == b.quant && a.sort == b.sort && a.name == b.name &&
           a.num == b.num && a.den == b.den && a.p0 == b.p0 && a.p1 == b.p1 && a.args == b.args && a.bound == b.bound;
}

} // namespace

class TermManager {
public:
    static TermManager& instance() {
        static TermManager m;
        return m;
    }

    Term intern(Term::Node&& node) {
        node.hash = hashNode(node);
        std::lock_guard<std::mutex> lock(mutex_);
        auto range = table_.equal_range(node.hash);
        for (auto it = range.first; it != range.second; ++it) {
            if (sameNode(*it->second, node)) { return Term(it->second); }
        }
        nodes_.push_back(std::move(node));
        const Term::Node* n = &nodes_.back();
        table_.emplace(n->hash, n);
        return Term(n);
    }

private:
    std::mutex mutex_;
    std::deque<Term::Node> nodes_;
    std::unordered_multimap<std::size_t, const Term::Node*> table_;
};

namespace {

Term intern(Term::Node&& node) { return TermManager::instance().intern(std::move(node)); }

void requireBool(const Term& t, const char* who) {
    if (!t.sort().isBool()) { throw SortError(std::string(who) + ": expected Bool, got " + t.sort().str() + " in " + t.str()); }
}

void requireArith(const Term& t, const char* who) {
    if (!t.sort().isArith()) { throw SortError(std::string(who) + ": expected Int/Real, got " + t.sort().str() + " in " + t.str()); }
}

void requireSameSort(const Term& a, const Term& b, const char* who) {
    if (a.sort() != b.sort()) {
        throw SortError(std::string(who) + ": sort mismatch " + a.sort().str() + " vs " + b.sort().str() + " in " + b.str());
    }
}

Term mkApp(Op op, Sort sort, std::vector<Term> args, unsigned p0 = 0, unsigned p1 = 0) {
    Term::Node n;
    n.kind = Kind::App;
    n.op = op;
    n.sort = sort;
    n.args = std::move(args);
    n.p0 = p0;
    n.p1 = p1;
    return intern(std::move(n));
}

Int twoPow(unsigned w) {
    Int r = 1;
    r <<= w;
    return r;
}

} // namespace

// --- leaf constructors ---------------------------------------------------------

Term mkVar(const std::string& name, Sort sort) {
    if (name.empty()) { throw SortError("variable with empty name"); }
    Term::Node n;
    n.kind = Kind::Var;
    n.sort = sort;
    n.name = name;
    return intern(std::move(n));
}

Term mkBool(bool b) {
    Term::Node n;
    n.kind = Kind::BoolLit;
    n.sort = Sort::boolSort();
    n.num = b ? 1 : 0;
    return intern(std::move(n));
}

Term mkTrue() { return mkBool(true); }
Term mkFalse() { return mkBool(false); }

Term mkIntLit(const Int& v) {
    Term::Node n;
    n.kind = Kind::IntLit;
    n.sort = Sort::intSort();
    n.num = v;
    return intern(std::move(n));
}

Term mkRealLit(const Int& num, const Int& den) {
    if (den == 0) { throw SortError("rational literal with zero denominator"); }
    Int n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    Int g = boost::multiprecision::gcd(n < 0 ? Int(-n) : n, d);
    if (g > 1) { n /= g; d /= g; }
    Term::Node node;
    node.kind = Kind::RealLit;
    node.sort = Sort::realSort();
    node.num = n;
    node.den = d;
    return intern(std::move(node));
}

Term mkBvLit(const Int& value, unsigned width) {
    Sort s = Sort::bitVec(width);
    Int m = twoPow(width);
    Int v = value % m;
    if (v < 0) { v += m; }
    Term::Node n;
    n.kind = Kind::BvLit;
    n.sort = s;
    n.num = v;
    return intern(std::move(n));
}

// --- boolean constructors ------------------------------------------------------

Term mkNot(Term t) {
    requireBool(t, "not");
    if (t.isTrue()) { return mkFalse(); }
    if (t.isFalse()) { return mkTrue(); }
    if (t.isApp(Op::Not)) { return t.arg(0); }
    return mkApp(Op::Not, Sort::boolSort(), {t});
}

static Term mkNaryBool(Op op, std::vector<Term> ts) {
    // flatten, drop units, dominate
    bool isAnd = (op == Op::And);
    Term unit = isAnd ? mkTrue() : mkFalse();
    Term zero = isAnd ? mkFalse() : mkTrue();
    std::vector<Term> flat;
    std::unordered_set<const void*> seen;
    std::function<void(const Term&)> add = [&](const Term& t) {
        requireBool(t, isAnd ? "and" : "or");
        if (t == unit) { return; }
        if (t.isApp(op)) {
            for (const Term& a : t.args()) { add(a); }
            return;
        }
        if (seen.insert(t.raw()).second) { flat.push_back(t); }
    };
    for (const Term& t : ts) {
        add(t);
        if (!flat.empty() && flat.back() == zero) { return zero; }
    }
    for (const Term& t : flat) {
        if (t == zero) { return zero; }
    }
    if (flat.empty()) { return unit; }
    if (flat.size() == 1) { return flat[0]; }
    return mkApp(op, Sort::boolSort(), std::move(flat));
}

Term mkAnd(std::vector<Term> ts) { return mkNaryBool(Op::And, std::move(ts)); }
Term mkAnd(Term a, Term b) { return mkAnd(std::vector<Term>{a, b}); }
Term mkOr(std::vector<Term> ts) { return mkNaryBool(Op::Or, std::move(ts)); }
Term mkOr(Term a, Term b) { return mkOr(std::vector<Term>{a, b}); }

Term mkImplies(Term a, Term b) {
    requireBool(a, "=>");
    requireBool(b, "=>");
    return mkApp(Op::Implies, Sort::boolSort(), {a, b});
}

Term mkIff(Term a, Term b) {
    requireBool(a, "iff");
    requireBool(b, "iff");
    return mkApp(Op::Iff, Sort::boolSort(), {a, b});
}

Term mkXor(Term a, Term b) {
    requireBool(a, "xor");
    requireBool(b, "xor");
    return mkApp(Op::Xor, Sort::boolSort(), {a, b});
}

Term mkIte(Term c, Term t, Term e) {
    requireBool(c, "ite");
    requireSameSort(t, e, "ite");
    if (c.isTrue()) { return t; }
    if (c.isFalse()) { return e; }
    if (t == e) { return t; }
    return mkApp(Op::Ite, t.sort(), {c, t, e});
}

Term mkEq(Term a, Term b) {
    requireSameSort(a, b, "=");
    return mkApp(Op::Eq, Sort::boolSort(), {a, b});
}

Term mkDistinct(std::vector<Term> ts) {
    if (ts.size() < 2) { throw SortError("distinct needs at least two arguments"); }
    for (std::size_t i = 1; i < ts.size(); ++i) { requireSameSort(ts[0], ts[i], "distinct"); }
    return mkApp(Op::Distinct, Sort::boolSort(), std::move(ts));
}

// --- arithmetic constructors -----------------------------------------------------

Term mkNeg(Term a) {
    requireArith(a, "-");
    return mkApp(Op::Neg, a.sort(), {a});
}

static Term mkNaryArith(Op op, const char* who, std::vector<Term> ts) {
    if (ts.empty()) { throw SortError(std::string(who) + ": needs arguments"); }
    for (const Term& t : ts) { requireArith(t, who); }
    for (std::size_t i = 1; i < ts.size(); ++i) { requireSameSort(ts[0], ts[i], who); }
    if (ts.size() == 1) { return ts[0]; }
    return mkApp(op, ts[0].sort(), std::move(ts));
}

Term mkAdd(std::vector<Term> ts) { return mkNaryArith(Op::Add, "+", std::move(ts)); }
Term mkAdd(Term a, Term b) { return mkAdd(std::vector<Term>{a, b}); }
Term mkMul(std::vector<Term> ts) { return mkNaryArith(Op::Mul, "*", std::move(ts)); }
Term mkMul(Term a, Term b) { return mkMul(std::vector<Term>{a, b}); }

Term mkSub(Term a, Term b) {
    requireArith(a, "-");
    requireSameSort(a, b, "-");
    return mkApp(Op::Sub, a.sort(), {a, b});
}

Term mkIntDiv(Term a, Term b) {
    if (!a.sort().isInt() || !b.sort().isInt()) { throw SortError("div: expects Int arguments"); }
    return mkApp(Op::IntDiv, Sort::intSort(), {a, b});
}

Term mkMod(Term a, Term b) {
    if (!a.sort().isInt() || !b.sort().isInt()) { throw SortError("mod: expects Int arguments"); }
    return mkApp(Op::Mod, Sort::intSort(), {a, b});
}

Term mkRealDiv(Term a, Term b) {
    if (!a.sort().isReal() || !b.sort().isReal()) { throw SortError("/: expects Real arguments"); }
    return mkApp(Op::RealDiv, Sort::realSort(), {a, b});
}

static Term mkCmp(Op op, const char* who, Term a, Term b) {
    requireArith(a, who);
    requireSameSort(a, b, who);
    return mkApp(op, Sort::boolSort(), {a, b});
}

Term mkLe(Term a, Term b) { return mkCmp(Op::Le, "<=", a, b); }
Term mkLt(Term a, Term b) { return mkCmp(Op::Lt, "<", a, b); }
Term mkGe(Term a, Term b) { return mkCmp(Op::Ge, ">=", a, b); }
Term mkGt(Term a, Term b) { return mkCmp(Op::Gt, ">", a, b); }

// --- bit-vector constructors ------------------------------------------------------

Term mkBvApp(Op op, Term a, Term b) {
    if (!a.sort().isBitVec()) { throw SortError("bv op: expected BitVec, got " + a.sort().str()); }
    requireSameSort(a, b, "bv op");
    switch (op) {
        case Op::BvAdd: case Op::BvSub: case Op::BvMul: case Op::BvUDiv: case Op::BvURem:
        case Op::BvAnd: case Op::BvOr: case Op::BvXor: case Op::BvShl: case Op::BvLshr: case Op::BvAshr:
            return mkApp(op, a.sort(), {a, b});
        case Op::BvUlt: case Op::BvUle: case Op::BvUgt: case Op::BvUge:
        case Op::BvSlt: case Op::BvSle: case Op::BvSgt: case Op::BvSge:
            return mkApp(op, Sort::boolSort(), {a, b});
        default: throw SortError("mkBvApp: not a binary bit-vector operator");
    }
}

Term mkBvNeg(Term a) {
    if (!a.sort().isBitVec()) { throw SortError("bvneg: expected BitVec"); }
    return mkApp(Op::BvNeg, a.sort(), {a});
}

Term mkBvNot(Term a) {
    if (!a.sort().isBitVec()) { throw SortError("bvnot: expected BitVec"); }
    return mkApp(Op::BvNot, a.sort(), {a});
}

Term mkBvExtract(Term a, unsigned hi, unsigned lo) {
    if (!a.sort().isBitVec()) { throw SortError("extract: expected BitVec"); }
    unsigned w = a.sort().bvWidth();
    if (hi < lo || hi >= w) { throw SortError("extract: bad indices"); }
    return mkApp(Op::BvExtract, Sort::bitVec(hi - lo + 1), {a}, hi, lo);
}

Term mkBvConcat(Term a, Term b) {
    if (!a.sort().isBitVec() || !b.sort().isBitVec()) { throw SortError("concat: expected BitVec"); }
    return mkApp(Op::BvConcat, Sort::bitVec(a.sort().bvWidth() + b.sort().bvWidth()), {a, b});
}

Term mkBvZeroExt(Term a, unsigned by) {
    if (!a.sort().isBitVec()) { throw SortError("zero_extend: expected BitVec"); }
    return mkApp(Op::BvZeroExt, Sort::bitVec(a.sort().bvWidth() + by), {a}, by);
}

Term mkBvSignExt(Term a, unsigned by) {
    if (!a.sort().isBitVec()) { throw SortError("sign_extend: expected BitVec"); }
    return mkApp(Op::BvSignExt, Sort::bitVec(a.sort().bvWidth() + by), {a}, by);
}

// --- array constructors --------------------------------------------------------

Term mkSelect(Term arr, Term idx) {
    if (!arr.sort().isArray()) { throw SortError("select: expected Array, got " + arr.sort().str()); }
    if (arr.sort().arrayIndex() != idx.sort()) { throw SortError("select: index sort mismatch in " + idx.str()); }
    return mkApp(Op::Select, arr.sort().arrayElem(), {arr, idx});
}

Term mkStore(Term arr, Term idx, Term val) {
    if (!arr.sort().isArray()) { throw SortError("store: expected Array"); }
    if (arr.sort().arrayIndex() != idx.sort()) { throw SortError("store: index sort mismatch"); }
    if (arr.sort().arrayElem() != val.sort()) { throw SortError("store: element sort mismatch"); }
    return mkApp(Op::Store, arr.sort(), {arr, idx, val});
}

Term mkConstArray(Sort arraySort, Term elem) {
    if (!arraySort.isArray()) { throw SortError("const array: expected Array sort"); }
    if (arraySort.arrayElem() != elem.sort()) { throw SortError("const array: element sort mismatch"); }
    return mkApp(Op::ConstArray, arraySort, {elem});
}

// --- quantifiers / predicates -----------------------------------------------------

Term mkQuant(QuantKind q, std::vector<std::pair<std::string, Sort>> bound, Term body) {
    requireBool(body, "quantifier");
    if (bound.empty()) { return body; }
    Term::Node n;
    n.kind = Kind::Quant;
    n.quant = q;
    n.sort = Sort::boolSort();
    n.args = {body};
    n.bound = std::move(bound);
    return intern(std::move(n));
}

Term mkExists(std::vector<std::pair<std::string, Sort>> bound, Term body) {
    return mkQuant(QuantKind::Exists, std::move(bound), body);
}

Term mkForall(std::vector<std::pair<std::string, Sort>> bound, Term body) {
    return mkQuant(QuantKind::Forall, std::move(bound), body);
}

Term mkPredApp(const std::string& name, std::vector<Term> args) {
    Term::Node n;
    n.kind = Kind::PredApp;
    n.sort = Sort::boolSort();
    n.name = name;
    n.args = std::move(args);
    return intern(std::move(n));
}

// --- utilities -----------------------------------------------------------------

namespace {

void freeVarsRec(Term t, std::set<std::string>& bound, std::map<std::string, Sort>& out) {
    switch (t.kind()) {
        case Kind::Var:
            if (bound.find(t.name()) == bound.end()) { out.emplace(t.name(), t.sort()); }
            return;
        case Kind::BoolLit: case Kind::IntLit: case Kind::RealLit: case Kind::BvLit:
            return;
        case Kind::App: case Kind::PredApp:
            for (const Term& a : t.args()) { freeVarsRec(a, bound, out); }
            return;
        case Kind::Quant: {
            std::vector<std::string> added;
            for (const auto& [name, sort] : t.boundVars()) {
                if (bound.insert(name).second) { added.push_back(name); }
            }
            freeVarsRec(t.arg(0), bound, out);
            for (const auto& name : added) { bound.erase(name); }
            return;
        }
    }
}

} // namespace

std::map<std::string, Sort> freeVars(Term t) {
    std::map<std::string, Sort> out;
    std::set<std::string> bound;
    freeVarsRec(t, bound, out);
    return out;
}

bool occursFree(Term t, const std::string& name) {
    auto fv = freeVars(t);
    return fv.find(name) != fv.end();
}

namespace {

Term substituteRec(Term t, const std::map<std::string, Term>& bindings,
                   std::unordered_map<const void*, Term>& memo) {
    if (bindings.empty()) { return t; }
    auto mit = memo.find(t.raw());
    if (mit != memo.end()) { return mit->second; }
    Term result = t;
    switch (t.kind()) {
        case Kind::Var: {
            auto it = bindings.find(t.name());
            if (it != bindings.end()) {
                if (it->second.sort() != t.sort()) {
                    throw SortError("substitute: binding for " + t.name() + " changes sort");
                }
                result = it->second;
            }
            break;
        }
        case Kind::BoolLit: case Kind::IntLit: case Kind::RealLit: case Kind::BvLit:
            break;
        case Kind::App: {
            std::vector<Term> args;
            args.reserve(t.numArgs());
            bool changed = false;
            for (const Term& a : t.args()) {
                Term na = substituteRec(a, bindings, memo);
                changed |= (na != a);
                args.push_back(na);
            }
            if (changed) {
                Term::Node n;
                n.kind = Kind::App;
                n.op = t.op();
                n.sort = t.sort();
                n.p0 = t.param0();
                n.p1 = t.param1();
                n.args = std::move(args);
                result = intern(std::move(n));
            }
            break;
        }
        case Kind::PredApp: {
            std::vector<Term> args;
            args.reserve(t.numArgs());
            bool changed = false;
            for (const Term& a : t.args()) {
                Term na = substituteRec(a, bindings, memo);
                changed |= (na != a);
                args.push_back(na);
            }
            if (changed) { result = mkPredApp(t.name(), std::move(args)); }
            break;
        }
        case Kind::Quant: {
            // drop shadowed bindings; rename bound vars that would capture
            std::map<std::string, Term> inner = bindings;
            for (const auto& [name, sort] : t.boundVars()) { inner.erase(name); }
            if (inner.empty()) { break; }
            std::set<std::string> rhsFree;
            for (const auto& [from, to] : inner) {
                for (const auto& [n, s] : freeVars(to)) { rhsFree.insert(n); }
            }
            std::vector<std::pair<std::string, Sort>> bound = t.boundVars();
            std::map<std::string, Term> renames;
            std::set<std::string> used = rhsFree;
            for (const auto& [n, s] : freeVars(t.arg(0))) { used.insert(n); }
            for (auto& [name, sort] : bound) {
                if (rhsFree.count(name)) {
                    std::string fresh = freshName(name, used);
                    used.insert(fresh);
                    renames.emplace(name, mkVar(fresh, sort));
                    name = fresh;
                }
            }
            Term body = t.arg(0);
            if (!renames.empty()) {
                std::unordered_map<const void*, Term> renameMemo;
                body = substituteRec(body, renames, renameMemo);
            }
            std::unordered_map<const void*, Term> bodyMemo;
            body = substituteRec(body, inner, bodyMemo);
            result = mkQuant(t.quantKind(), std::move(bound), body);
            break;
        }
    }
    memo.emplace(t.raw(), result);
    return result;
}

} // namespace

Term substitute(Term t, const std::map<std::string, Term>& bindings) {
    if (bindings.empty()) { return t; }
    std::unordered_map<const void*, Term> memo;
    return substituteRec(t, bindings, memo);
}

namespace {

bool isAtomOp(Op op) {
    switch (op) {
        case Op::Eq: case Op::Distinct: case Op::Le: case Op::Lt: case Op::Ge: case Op::Gt:
        case Op::BvUlt: case Op::BvUle: case Op::BvUgt: case Op::BvUge:
        case Op::BvSlt: case Op::BvSle: case Op::BvSgt: case Op::BvSge:
        case Op::Select: // boolean-valued select
            return true;
        default:
            return false;
    }
}

void collectAtomsRec(Term t, std::vector<Term>& out, std::unordered_set<const void*>& seen) {
    if (!t.sort().isBool()) { return; }
    switch (t.kind()) {
        case Kind::Var:
        case Kind::PredApp:
            if (seen.insert(t.raw()).second) { out.push_back(t); }
            return;
        case Kind::BoolLit:
            return;
        case Kind::Quant:
            collectAtomsRec(t.arg(0), out, seen);
            return;
        case Kind::App:
            if (isAtomOp(t.op())) {
                if (seen.insert(t.raw()).second) { out.push_back(t); }
                return;
            }
            for (const Term& a : t.args()) { collectAtomsRec(a, out, seen); }
            return;
        default:
            return;
    }
}

} // namespace

std::vector<Term> collectAtoms(Term t) {
    std::vector<Term> out;
    std::unordered_set<const void*> seen;
    collectAtomsRec(t, out, seen);
    return out;
}

bool containsPredApp(Term t) {
    if (t.kind() == Kind::PredApp) { return true; }
    if (t.kind() == Kind::Quant) { return containsPredApp(t.arg(0)); }
    if (t.kind() == Kind::App) {
        for (const Term& a : t.args()) {
            if (containsPredApp(a)) { return true; }
        }
    }
    return false;
}

bool containsQuant(Term t) {
    if (t.kind() == Kind::Quant) { return true; }
    if (t.kind() == Kind::App || t.kind() == Kind::PredApp) {
        for (const Term& a : t.args()) {
            if (containsQuant(a)) { return true; }
        }
    }
    return false;
}

namespace {

Sort sortOfApp(Term t) {
    const auto& args = t.args();
    auto argSort = [&](std::size_t i) { return sortOf(args[i]); };
    switch (t.op()) {
        case Op::Not:
            if (!argSort(0).isBool()) { throw SortError("ill-sorted not at " + t.arg(0).str()); }
            return Sort::boolSort();
        case Op::And: case Op::Or:
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (!argSort(i).isBool()) { throw SortError("ill-sorted and/or at " + args[i].str()); }
            }
            return Sort::boolSort();
        case Op::Implies: case Op::Iff: case Op::Xor:
            if (!argSort(0).isBool() || !argSort(1).isBool()) { throw SortError("ill-sorted connective at " + t.str()); }
            return Sort::boolSort();
        case Op::Ite:
            if (!argSort(0).isBool() || argSort(1) != argSort(2)) { throw SortError("ill-sorted ite at " + t.str()); }
            return argSort(1);
        case Op::Eq:
            if (argSort(0) != argSort(1)) { throw SortError("ill-sorted = at " + t.arg(1).str()); }
            return Sort::boolSort();
        case Op::Distinct:
            for (std::size_t i = 1; i < args.size(); ++i) {
                if (argSort(0) != argSort(i)) { throw SortError("ill-sorted distinct at " + args[i].str()); }
            }
            return Sort::boolSort();
        case Op::Neg:
            if (!argSort(0).isArith()) { throw SortError("ill-sorted negation at " + t.str()); }
            return argSort(0);
        case Op::Add: case Op::Mul: case Op::Sub:
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (argSort(i) != argSort(0) || !argSort(0).isArith()) { throw SortError("ill-sorted arithmetic at " + args[i].str()); }
            }
            return argSort(0);
        case Op::IntDiv: case Op::Mod:
            if (!argSort(0).isInt() || !argSort(1).isInt()) { throw SortError("ill-sorted div/mod at " + t.str()); }
            return Sort::intSort();
        case Op::RealDiv:
            if (!argSort(0).isReal() || !argSort(1).isReal()) { throw SortError("ill-sorted / at " + t.str()); }
            return Sort::realSort();
        case Op::Le: case Op::Lt: case Op::Ge: case Op::Gt:
            if (argSort(0) != argSort(1) || !argSort(0).isArith()) { throw SortError("ill-sorted comparison at " + t.str()); }
            return Sort::boolSort();
        case Op::BvNeg: case Op::BvNot:
            if (!argSort(0).isBitVec()) { throw SortError("ill-sorted bv unary at " + t.str()); }
            return argSort(0);
        case Op::BvAdd: case Op::BvSub: case Op::BvMul: case Op::BvUDiv: case Op::BvURem:
        case Op::BvAnd: case Op::BvOr: case Op::BvXor: case Op::BvShl: case Op::BvLshr: case Op::BvAshr:
            if (!argSort(0).isBitVec() || argSort(0) != argSort(1)) { throw SortError("ill-sorted bv op at " + t.str()); }
            return argSort(0);
        case Op::BvUlt: case Op::BvUle: case Op::BvUgt: case Op::BvUge:
        case Op::BvSlt: case Op::BvSle: case Op::BvSgt: case Op::BvSge:
            if (!argSort(0).isBitVec() || argSort(0) != argSort(1)) { throw SortError("ill-sorted bv comparison at " + t.str()); }
            return Sort::boolSort();
        case Op::BvExtract:
            if (!argSort(0).isBitVec() || t.param0() < t.param1() || t.param0() >= argSort(0).bvWidth()) {
                throw SortError("ill-sorted extract at " + t.str());
            }
            return Sort::bitVec(t.param0() - t.param1() + 1);
        case Op::BvConcat:
            if (!argSort(0).isBitVec() || !argSort(1).isBitVec()) { throw SortError("ill-sorted concat at " + t.str()); }
            return Sort::bitVec(argSort(0).bvWidth() + argSort(1).bvWidth());
        case Op::BvZeroExt: case Op::BvSignExt:
            if (!argSort(0).isBitVec()) { throw SortError("ill-sorted extend at " + t.str()); }
            return Sort::bitVec(argSort(0).bvWidth() + t.param0());
        case Op::Select:
            if (!argSort(0).isArray() || argSort(0).arrayIndex() != argSort(1)) { throw SortError("ill-sorted select at " + t.str()); }
            return argSort(0).arrayElem();
        case Op::Store:
            if (!argSort(0).isArray() || argSort(0).arrayIndex() != argSort(1) || argSort(0).arrayElem() != argSort(2)) {
                throw SortError("ill-sorted store at " + t.str());
            }
            return argSort(0);
        case Op::ConstArray:
            if (!t.sort().isArray() || t.sort().arrayElem() != argSort(0)) { throw SortError("ill-sorted const array at " + t.str()); }
            return t.sort();
    }
    throw SortError("unknown operator");
}

} // namespace

Sort sortOf(Term t) {
    switch (t.kind()) {
        case Kind::Var: case Kind::BoolLit: case Kind::IntLit: case Kind::RealLit: case Kind::BvLit:
            return t.sort();
        case Kind::PredApp:
            for (const Term& a : t.args()) { sortOf(a); }
            return Sort::boolSort();
        case Kind::Quant: {
            Sort body = sortOf(t.arg(0));
            if (!body.isBool()) { throw SortError("quantifier body must be Bool at " + t.arg(0).str()); }
            return Sort::boolSort();
        }
        case Kind::App:
            return sortOfApp(t);
    }
    throw SortError("unknown term kind");
}

std::string freshName(const std::string& base, const std::set<std::string>& used) {
    if (used.find(base) == used.end()) { return base; }
    for (int k = 0;; ++k) {
        std::string cand = base + "!" + std::to_string(k);
        if (used.find(cand) == used.end()) { return cand; }
    }
}

std::string Term::str() const { return smtlib::printTerm(*this); }

} // namespace chc
