#pragma once

#include "chc/Errors.h"
#include "chc/Sort.h"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chc {

using Int = boost::multiprecision::cpp_int;

enum class Kind { Var, BoolLit, IntLit, RealLit, BvLit, App, PredApp, Quant };

enum class QuantKind { Exists, Forall };

enum class Op {
    // boolean
    Not, And, Or, Implies, Iff, Xor, Ite, Eq, Distinct,
    // arithmetic (Int/Real)
    Neg, Add, Sub, Mul, IntDiv, Mod, RealDiv, Le, Lt, Ge, Gt,
    // bit-vectors
    BvNeg, BvNot, BvAdd, BvSub, BvMul, BvUDiv, BvURem,
    BvAnd, BvOr, BvXor, BvShl, BvLshr, BvAshr,
    BvUlt, BvUle, BvUgt, BvUge, BvSlt, BvSle, BvSgt, BvSge,
    BvExtract, BvConcat, BvZeroExt, BvSignExt,
    // arrays
    Select, Store, ConstArray,
};

/// Immutable, interned term handle. Equality is pointer equality and
/// coincides with structural equality of the trees.
class Term {
public:
    struct Node {
        Kind kind;
        Op op = Op::Not;            // App only
        QuantKind quant = QuantKind::Exists; // Quant only
        Sort sort;
        std::string name;           // Var, PredApp
        Int num;                    // IntLit value, BvLit bits, RealLit numerator
        Int den;                    // RealLit denominator (> 0)
        unsigned p0 = 0, p1 = 0;    // extract hi/lo, extend amount
        std::vector<Term> args;
        std::vector<std::pair<std::string, Sort>> bound; // Quant only
        std::size_t hash = 0;
    };

    Term() : node_(nullptr) {}

    Kind kind() const { return node_->kind; }
    Op op() const { return node_->op; }
    QuantKind quantKind() const { return node_->quant; }
    Sort sort() const { return node_->sort; }
    const std::string& name() const { return node_->name; }
    const Int& intVal() const { return node_->num; }
    const Int& realNum() const { return node_->num; }
    const Int& realDen() const { return node_->den; }
    bool boolVal() const { return node_->num != 0; }
    unsigned param0() const { return node_->p0; }
    unsigned param1() const { return node_->p1; }
    const std::vector<Term>& args() const { return node_->args; }
    Term arg(std::size_t i) const { return node_->args[i]; }
    std::size_t numArgs() const { return node_->args.size(); }
    const std::vector<std::pair<std::string, Sort>>& boundVars() const { return node_->bound; }
    std::size_t hash() const { return node_->hash; }

    bool valid() const { return node_ != nullptr; }
    bool isVar() const { return node_->kind == Kind::Var; }
    bool isLiteralValue() const {
        Kind k = node_->kind;
        return k == Kind::BoolLit || k == Kind::IntLit || k == Kind::RealLit || k == Kind::BvLit;
    }
    bool isApp(Op o) const { return node_->kind == Kind::App && node_->op == o; }
    bool isTrue() const { return node_->kind == Kind::BoolLit && node_->num != 0; }
    bool isFalse() const { return node_->kind == Kind::BoolLit && node_->num == 0; }

    bool operator==(const Term& o) const { return node_ == o.node_; }
    bool operator!=(const Term& o) const { return node_ != o.node_; }
    bool operator<(const Term& o) const { return node_ < o.node_; } // arbitrary but stable within a run

    const Node* raw() const { return node_; }
    std::string str() const; // SMT-LIB concrete syntax, see SmtLib.h

private:
    friend class TermManager;
    explicit Term(const Node* n) : node_(n) {}
    const Node* node_;
};

// --- constructors -----------------------------------------------------------
// All constructors check sorts and throw SortError on ill-typed applications.

Term mkVar(const std::string& name, Sort sort);
Term mkBool(bool b);
Term mkTrue();
Term mkFalse();
Term mkIntLit(const Int& v);
Term mkRealLit(const Int& num, const Int& den); // normalized, den != 0
Term mkBvLit(const Int& value, unsigned width); // value reduced mod 2^width

Term mkNot(Term t);
Term mkAnd(std::vector<Term> ts); // flattens, drops true, false dominates
Term mkAnd(Term a, Term b);
Term mkOr(std::vector<Term> ts);
Term mkOr(Term a, Term b);
Term mkImplies(Term a, Term b);
Term mkIff(Term a, Term b);
Term mkXor(Term a, Term b);
Term mkIte(Term c, Term t, Term e);
Term mkEq(Term a, Term b);
Term mkDistinct(std::vector<Term> ts);

Term mkNeg(Term a);
Term mkAdd(std::vector<Term> ts);
Term mkAdd(Term a, Term b);
Term mkSub(Term a, Term b);
Term mkMul(std::vector<Term> ts);
Term mkMul(Term a, Term b);
Term mkIntDiv(Term a, Term b);
Term mkMod(Term a, Term b);
Term mkRealDiv(Term a, Term b);
Term mkLe(Term a, Term b);
Term mkLt(Term a, Term b);
Term mkGe(Term a, Term b);
Term mkGt(Term a, Term b);

Term mkBvApp(Op op, Term a, Term b); // add/sub/mul/udiv/urem/and/or/xor/shl/lshr/ashr and comparisons
Term mkBvNeg(Term a);
Term mkBvNot(Term a);
Term mkBvExtract(Term a, unsigned hi, unsigned lo);
Term mkBvConcat(Term a, Term b);
Term mkBvZeroExt(Term a, unsigned by);
Term mkBvSignExt(Term a, unsigned by);

Term mkSelect(Term arr, Term idx);
Term mkStore(Term arr, Term idx, Term val);
Term mkConstArray(Sort arraySort, Term elem);

Term mkQuant(QuantKind q, std::vector<std::pair<std::string, Sort>> bound, Term body);
Term mkExists(std::vector<std::pair<std::string, Sort>> bound, Term body);
Term mkForall(std::vector<std::pair<std::string, Sort>> bound, Term body);

Term mkPredApp(const std::string& name, std::vector<Term> args);

// --- utilities ---------------------------------------------------------------

/// Free variables, name -> sort. Deterministic (name-ordered).
std::map<std::string, Sort> freeVars(Term t);

bool occursFree(Term t, const std::string& name);

/// Capture-avoiding simultaneous substitution of variables by terms.
/// Bindings must be sort-preserving (SortError otherwise).
Term substitute(Term t, const std::map<std::string, Term>& bindings);

/// Atomic boolean subterms (comparisons, boolean vars, predicate atoms),
/// deduplicated, stable order. Boolean literals excluded; negations stripped.
std::vector<Term> collectAtoms(Term t);

bool containsPredApp(Term t);
bool containsQuant(Term t);

/// Recomputes the sort of a term bottom-up, throwing SortError on any
/// ill-sorted application. Total on terms built through the constructors.
Sort sortOf(Term t);

/// Fresh-name helper: returns base if unused (per `used`), else base!k.
std::string freshName(const std::string& base, const std::set<std::string>& used);

} // namespace chc
