#include "chc/SmtLib.h"
#include "chc/Term.h"
#include "chc/Value.h"

#include <gtest/gtest.h>

using namespace chc;

namespace {
Term iv(const std::string& n) { return mkVar(n, Sort::intSort()); }
Term bv(const std::string& n) { return mkVar(n, Sort::boolSort()); }
} // namespace

TEST(Sorts, BitVecWidthValidation) {
    EXPECT_THROW(Sort::bitVec(0), SortError);
    EXPECT_EQ(Sort::bitVec(8).bvWidth(), 8u);
    Sort a = Sort::array(Sort::intSort(), Sort::boolSort());
    EXPECT_EQ(a.arrayIndex(), Sort::intSort());
    EXPECT_EQ(a.arrayElem(), Sort::boolSort());
}

TEST(Terms, InterningGivesStructuralEquality) {
    Term a = mkAdd(iv("x"), mkIntLit(1));
    Term b = mkAdd(iv("x"), mkIntLit(1));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.raw(), b.raw());
    Term c = mkAdd(iv("x"), mkIntLit(2));
    EXPECT_NE(a, c);
}

TEST(Terms, SortOfExamples) {
    // (+ 1 2) -> Int
    EXPECT_EQ(sortOf(mkAdd(mkIntLit(1), mkIntLit(2))), Sort::intSort());
    // (and x 3) with x:Bool -> SortError at the Int literal
    EXPECT_THROW(mkAnd(bv("x"), Term(mkIntLit(3))), SortError);
    // (select a i) with a:Array(Int,Bool), i:Int -> Bool
    Term arr = mkVar("a", Sort::array(Sort::intSort(), Sort::boolSort()));
    EXPECT_EQ(sortOf(mkSelect(arr, iv("i"))), Sort::boolSort());
}

TEST(Terms, ConstructorsRejectIllSorted) {
    EXPECT_THROW(mkEq(iv("x"), bv("b")), SortError);
    EXPECT_THROW(mkIntDiv(mkRealLit(1, 2), mkRealLit(1, 2)), SortError);
    EXPECT_THROW(mkSelect(iv("x"), iv("i")), SortError);
    EXPECT_THROW(mkBvExtract(mkBvLit(3, 4), 4, 0), SortError);
}

TEST(Terms, SubstituteBasics) {
    Term x = iv("x"), y = iv("y");
    // substitute(x+y, {x -> 0}) = 0+y
    Term t = mkAdd(x, y);
    Term r = substitute(t, {{"x", mkIntLit(0)}});
    EXPECT_EQ(r, mkAdd(mkIntLit(0), y));
    // empty substitution is identity (same node)
    EXPECT_EQ(substitute(t, {}), t);
    // simultaneous: x'=x+1 under {x -> 2, x' -> z}
    Term xp = iv("xp"), z = iv("z");
    Term eq = mkEq(xp, mkAdd(x, mkIntLit(1)));
    Term s = substitute(eq, {{"x", mkIntLit(2)}, {"xp", z}});
    EXPECT_EQ(s, mkEq(z, mkAdd(mkIntLit(2), mkIntLit(1))));
}

TEST(Terms, SubstituteCaptureAvoidance) {
    Term x = iv("x"), y = iv("y");
    // substitute(exists y. x=y, {y -> 1}): bound occurrence untouched
    Term q = mkExists({{"y", Sort::intSort()}}, mkEq(x, y));
    EXPECT_EQ(substitute(q, {{"y", mkIntLit(1)}}), q);
    // substitute(exists y. x=y, {x -> y}) must rename the binder
    Term r = substitute(q, {{"x", y}});
    ASSERT_EQ(r.kind(), Kind::Quant);
    EXPECT_NE(r.boundVars()[0].first, "y");
    Term body = r.arg(0);
    EXPECT_EQ(body.arg(0), y);
    EXPECT_EQ(body.arg(1), mkVar(r.boundVars()[0].first, Sort::intSort()));
}

TEST(Terms, SubstituteEvaluateCommute) {
    // evaluate(substitute(t, {x -> c}), v) == evaluate(t, v + {x -> c})
    Term x = iv("x"), y = iv("y");
    Term t = mkLt(mkAdd(x, y), mkIntLit(10));
    Valuation v{{"y", Value::integer(3)}};
    Term sub = substitute(t, {{"x", mkIntLit(5)}});
    Valuation vx = v;
    vx.emplace("x", Value::integer(5));
    EXPECT_EQ(evaluate(sub, v), evaluate(t, vx));
}

TEST(Terms, FreeVarsAndQuantifiers) {
    Term x = iv("x");
    Term q = mkExists({{"y", Sort::intSort()}}, mkEq(x, mkVar("y", Sort::intSort())));
    auto fv = freeVars(q);
    EXPECT_EQ(fv.size(), 1u);
    EXPECT_TRUE(fv.count("x"));
}

TEST(Eval, Basics) {
    Term x = iv("x");
    EXPECT_EQ(evaluate(mkLt(x, mkIntLit(5)), {{"x", Value::integer(4)}}), Value::boolean(true));
    // partial: x+y with only x assigned -> Unknown
    EXPECT_EQ(evaluate(mkAdd(x, iv("y")), {{"x", Value::integer(2)}}), std::nullopt);
    // division by zero -> Unknown
    EXPECT_EQ(evaluate(mkIntDiv(mkIntLit(1), mkIntLit(0)), {}), std::nullopt);
    EXPECT_EQ(evaluate(mkRealDiv(mkRealLit(1, 1), mkRealLit(0, 1)), {}), std::nullopt);
}

TEST(Eval, EuclideanDivMod) {
    // SMT-LIB v2 semantics: 0 <= mod < |b|
    EXPECT_EQ(euclideanDiv(7, 2), 3);
    EXPECT_EQ(euclideanMod(7, 2), 1);
    EXPECT_EQ(euclideanDiv(-7, 2), -4);
    EXPECT_EQ(euclideanMod(-7, 2), 1);
    EXPECT_EQ(euclideanDiv(7, -2), -3);
    EXPECT_EQ(euclideanMod(7, -2), 1);
    EXPECT_EQ(euclideanDiv(-7, -2), 4);
    EXPECT_EQ(euclideanMod(-7, -2), 1);
}

TEST(Eval, BitVecWraparound) {
    // (bvadd #xF #x1) over BitVec(4) -> #x0
    Term t = mkBvApp(Op::BvAdd, mkBvLit(0xF, 4), mkBvLit(1, 4));
    EXPECT_EQ(evaluate(t, {}), Value::bitvec(0, 4));
    // signed comparison: 0b100 (=-4) < 0b011 (=3) signed, but not unsigned
    Term slt = mkBvApp(Op::BvSlt, mkBvLit(4, 3), mkBvLit(3, 3));
    EXPECT_EQ(evaluate(slt, {}), Value::boolean(true));
    Term ult = mkBvApp(Op::BvUlt, mkBvLit(4, 3), mkBvLit(3, 3));
    EXPECT_EQ(evaluate(ult, {}), Value::boolean(false));
    // shifts
    EXPECT_EQ(evaluate(mkBvApp(Op::BvShl, mkBvLit(1, 4), mkBvLit(5, 4)), {}), Value::bitvec(0, 4));
    EXPECT_EQ(evaluate(mkBvApp(Op::BvAshr, mkBvLit(0b1000, 4), mkBvLit(1, 4)), {}), Value::bitvec(0b1100, 4));
    // division by zero (total per SMT-LIB >= 2.6)
    EXPECT_EQ(evaluate(mkBvApp(Op::BvUDiv, mkBvLit(5, 4), mkBvLit(0, 4)), {}), Value::bitvec(0xF, 4));
    EXPECT_EQ(evaluate(mkBvApp(Op::BvURem, mkBvLit(5, 4), mkBvLit(0, 4)), {}), Value::bitvec(5, 4));
    // extract / concat / extends
    EXPECT_EQ(evaluate(mkBvExtract(mkBvLit(0b1101, 4), 2, 1), {}), Value::bitvec(0b10, 2));
    EXPECT_EQ(evaluate(mkBvConcat(mkBvLit(0b11, 2), mkBvLit(0b01, 2)), {}), Value::bitvec(0b1101, 4));
    EXPECT_EQ(evaluate(mkBvZeroExt(mkBvLit(0b10, 2), 2), {}), Value::bitvec(0b0010, 4));
    EXPECT_EQ(evaluate(mkBvSignExt(mkBvLit(0b10, 2), 2), {}), Value::bitvec(0b1110, 4));
}

TEST(Eval, Arrays) {
    Sort as = Sort::array(Sort::intSort(), Sort::intSort());
    Term arr = mkConstArray(as, mkIntLit(0));
    Term stored = mkStore(arr, mkIntLit(2), mkIntLit(7));
    EXPECT_EQ(evaluate(mkSelect(stored, mkIntLit(2)), {}), Value::integer(7));
    EXPECT_EQ(evaluate(mkSelect(stored, mkIntLit(3)), {}), Value::integer(0));
    // storing the default back yields the canonical const array value
    Term undone = mkStore(stored, mkIntLit(2), mkIntLit(0));
    EXPECT_EQ(evaluate(undone, {}), evaluate(arr, {}));
}

TEST(Printing, SmtLibSyntax) {
    EXPECT_EQ(mkIntLit(-1).str(), "(- 1)");
    EXPECT_EQ(mkIntLit(42).str(), "42");
    EXPECT_EQ(mkBvLit(0xAB, 8).str(), "#xab");
    EXPECT_EQ(mkBvLit(0b101, 3).str(), "#b101");
    EXPECT_EQ(mkRealLit(1, 2).str(), "(/ 1.0 2.0)");
    EXPECT_EQ(mkRealLit(-3, 1).str(), "(- 3.0)");
    Term x = iv("x");
    EXPECT_EQ(mkLe(x, mkIntLit(5)).str(), "(<= x 5)");
    EXPECT_EQ(smtlib::quoteSymbol("a b"), "|a b|");
    EXPECT_EQ(smtlib::quoteSymbol("ok!"), "ok!");
    Term q = mkExists({{"y", Sort::intSort()}}, mkEq(x, mkVar("y", Sort::intSort())));
    EXPECT_EQ(q.str(), "(exists ((y Int)) (= x y))");
    EXPECT_EQ(mkBvExtract(mkBvLit(5, 4), 2, 0).str(), "((_ extract 2 0) #x5)");
}

TEST(Printing, CollectAtoms) {
    Term x = iv("x");
    Term f = mkAnd(mkLt(x, mkIntLit(5)), mkOr(mkNot(mkEq(x, mkIntLit(0))), bv("p")));
    auto atoms = collectAtoms(f);
    ASSERT_EQ(atoms.size(), 3u);
}
