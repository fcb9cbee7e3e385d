#include "bihom/catalog.hpp"

namespace bihom {

namespace {

using Cells = std::vector<std::string>;

const Cells kZero{"0", "0", "0", "0"};
const Cells kScalar{"c1", "0", "0", "c1"};
const Cells kDiagC{"c1", "0", "0", "c2"};
const Cells kLowerC{"0", "0", "0", "c2"};
const Cells kUpperC{"0", "c2", "0", "0"};
const Cells kUnipotentC{"c1", "c2", "0", "c1"};
const Cells kDiagD{"d1", "0", "0", "d2"};
const Cells kUpperD{"d1", "0", "0", "0"};
const Cells kLowerD{"0", "0", "0", "d2"};
const Cells kNilD{"0", "d2", "0", "0"};

const Cells kTwistB{"0", "0", "0", "b"};
const Cells kTwistY{"0", "0", "0", "y"};
const Cells kIdentity{"1", "0", "0", "1"};
const Cells kShiftZ{"0", "z", "0", "0"};
const Cells kShift{"0", "1", "0", "0"};
const Cells kJordan{"1", "1", "0", "1"};

ParamSpec free_param(const char* name) { return {name, false}; }
ParamSpec nonzero(const char* name) { return {name, true}; }

ExpectedRow row(std::string guard, Cells centroid, Cells der, std::optional<bool> small = {},
                std::optional<bool> cn = {}) {
  return {std::move(guard), {std::move(centroid)}, {std::move(der)}, small, cn};
}

constexpr const char* kOrigin = "k==0 && l==0";
constexpr const char* kOffOrigin = "!(k==0 && l==0)";

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;

  c.push_back({"L1_1", "L_1^1", {free_param("z1"), nonzero("b"), nonzero("y")},
               {{1, 1, 1, "1"}, {1, 2, 1, "1"}, {2, 1, 1, "z1"}}, kTwistB, kTwistY,
               {{{"z1", "0"}, {"b", "2"}, {"y", "3"}}},
               {row("k==0 && l==0 && z1==0", kDiagC, kZero, false, true),
                row("k==0 && l==0 && z1!=0", kScalar, kZero, true, true),
                row(kOffOrigin, kLowerC, kLowerD)},
               {1, 0}, false, "z1!=0"});

  c.push_back({"L2_1", "L_2^1", {nonzero("b"), nonzero("y")},
               {{1, 1, 1, "1"}, {2, 1, 1, "1"}}, kTwistB, kTwistY, {},
               {row(kOrigin, kScalar, kZero, true, true), row(kOffOrigin, kLowerC, kLowerD)},
               {1, 0}, false, "1"});

  c.push_back({"L3_1", "L_3^1", {nonzero("b"), nonzero("y")}, {{1, 1, 1, "1"}}, kTwistB,
               kTwistY, {},
               {row(kOrigin, kScalar, kLowerD, false, true), row(kOffOrigin, kLowerC, kLowerD)},
               {1, 0}, true, "0"});

  c.push_back({"L4_1", "L_4^1", {free_param("z1"), nonzero("b"), nonzero("y")},
               {{1, 2, 1, "1"}, {2, 1, 1, "z1"}}, kTwistB, kTwistY,
               {{{"z1", "0"}, {"b", "2"}, {"y", "3"}},
                {{"z1", "0"}, {"b", "2"}, {"y", "1/2"}},
                {{"z1", "2"}, {"b", "2"}, {"y", "1/2"}}},
               {row("k==0 && l==0 && z1==0", kDiagC, kUpperD, false, true),
                row("k==0 && l==0 && z1!=0", kScalar, kUpperD, true, true),
                row("!(k==0 && l==0) && z1==0 && b^k*y^l==1", kDiagC, kDiagD),
                row("!(k==0 && l==0) && b^k*y^l!=1", kLowerC, kLowerD),
                row("!(k==0 && l==0) && z1!=0 && b^k*y^l==1", kLowerC, kDiagD)},
               {1, 0}, false, "z1!=0"});

  c.push_back({"L5_1", "L_5^1", {nonzero("b"), nonzero("y")}, {{2, 1, 1, "1"}}, kTwistB, kTwistY,
               {{{"b", "2"}, {"y", "1/2"}}},
               {row(kOrigin, kScalar, kUpperD, true, true),
                row("!(k==0 && l==0) && b^k*y^l==1", kLowerC, kDiagD),
                row("!(k==0 && l==0) && b^k*y^l!=1", kLowerC, kLowerD)},
               {1, 0}, false, "1"});

  c.push_back({"L1_2", "L_1^2", {nonzero("b"), nonzero("y")}, {{1, 1, 1, "1"}},
               {"1", "0", "0", "b"}, kTwistY, {},
               {row("l==0", kDiagC, kLowerD, false, true), row("l!=0", kLowerC, kLowerD)},
               {1, 0}, true, "0"});

  c.push_back({"L1_3", "L_1^3", {nonzero("a"), nonzero("y")}, {{1, 2, 1, "1"}},
               {"a", "0", "0", "1"}, kTwistY, {{{"a", "2"}, {"y", "1"}}},
               {row("l==0", kDiagC, kUpperD, false, true),
                row("l!=0 && y^l==1", kDiagC, kDiagD),
                row("l!=0 && y^l!=1", kLowerC, kLowerD)},
               {1, 0}, false, "0"});

  c.push_back({"L1_4", "L_1^4", {nonzero("y")}, {{1, 1, 1, "1"}, {1, 2, 1, "1"}}, kIdentity,
               kTwistY, {},
               {row("l==0", kDiagC, kZero, false, true), row("l!=0", kLowerC, kLowerD)},
               {1, 0}, false, "0"});

  c.push_back({"L1_5", "L_1^5", {nonzero("b"), nonzero("y")}, {{1, 1, 1, "1"}}, kTwistB,
               {"1", "0", "0", "y"}, {},
               {row("k==0", kDiagC, kLowerD, false), row("k!=0", kLowerC, kLowerD)},
               {1, 0}, true, "0"});

  c.push_back({"L1_6", "L_1^6", {nonzero("b")}, {{1, 1, 1, "1"}, {2, 1, 1, "1"}}, kTwistB,
               kIdentity, {},
               {row("k==0", kScalar, kLowerD, true, true), row("k!=0", kLowerC, kZero)},
               {1, 0}, false, "0"});

  c.push_back({"L1_7", "L_1^7", {nonzero("b"), nonzero("x")}, {{2, 1, 1, "1"}}, kTwistB,
               {"x", "0", "0", "1"}, {{{"b", "2"}, {"x", "1"}}, {{"b", "1"}, {"x", "2"}}},
               {row("k==0", {"c1", "0", "0", "c1/x^l"}, kUpperD, true, true),
                row("k!=0 && x==1", kLowerC, kDiagD),
                row("k!=0 && x!=1", kLowerC, kLowerD)},
               {1, 0}, false, "0"});

  c.push_back({"L1_8", "L_1^8", {nonzero("a"), nonzero("x")},
               {{1, 2, 1, "1"}, {2, 1, 1, "-x/a"}}, {"a", "0", "0", "1"}, {"x", "0", "0", "1"},
               {},
               {row("1", {"c1", "0", "0", "c1/(a^k*x^l)"}, kUpperD, true, true)},
               {1, 0}, false, "1"});

  c.push_back({"L1_9", "L_1^9", {}, {{1, 1, 1, "1"}, {2, 2, 2, "1"}}, {"1", "0", "0", "0"},
               {"0", "0", "0", "1"}, {},
               {row("k==0 && l==0", kScalar, kZero, false, true),
                row("k==0 && l!=0", kZero, kZero), row("k!=0", kLowerC, kLowerD)},
               {1, 0}, true, "0"});

  c.push_back({"L1_10", "L_1^10", {},
               {{1, 2, 1, "1"}, {1, 2, 2, "1"}, {2, 1, 1, "-1"}, {2, 1, 2, "-1"}}, kIdentity,
               kIdentity, {},
               {row("1", kScalar, {"d1", "d2", "d1", "d2"}, true, false)},
               {1, 1}, false, "1"});

  c.push_back({"L1_11", "L_1^11", {nonzero("z")}, {{2, 1, 1, "1"}, {2, 2, 1, "1"}}, kIdentity,
               kShiftZ, {},
               {row("l==0", kUnipotentC, kZero, false, true), row("l>=1", kUpperC, kNilD)},
               {1, 0}, false, "0"});

  c.push_back({"L2_11", "L_2^11", {}, {{2, 1, 1, "1"}}, kIdentity, kShift, {},
               {row("l==0", kUnipotentC, kZero, false, true), row("l>=1", kUpperC, kNilD)},
               {1, 0}, false, "0"});

  c.push_back({"L3_11", "L_3^11", {}, {{2, 2, 1, "1"}}, kIdentity, kShift, {},
               {row("l==0", kUnipotentC, kNilD, true, true), row("l>=1", kUpperC, kNilD)},
               {1, 0}, false, "1"});

  c.push_back({"L1_12", "L_1^12", {}, {{1, 2, 1, "1"}, {2, 1, 1, "-1"}, {2, 2, 1, "-1"}},
               kIdentity, kJordan, {},
               {row("l==0", kScalar, kNilD, true, true),
                row("l>=1", {"c1", "l*c1", "0", "c1"}, kNilD)},
               {1, 0}, false, "1"});

  c.push_back({"L1_13", "L_1^13", {free_param("z1"), free_param("t1"), nonzero("z")},
               {{1, 2, 1, "1"}, {2, 1, 1, "z1"}, {2, 2, 1, "t1"}}, kShift, kShiftZ,
               {{{"z1", "-1"}, {"t1", "2"}, {"z", "3"}}, {{"z1", "0"}, {"t1", "2"}, {"z", "3"}}},
               {row("k==0 && l==0 && z1==-1", kScalar, kNilD, true, true),
                row("k==0 && l==0 && z1==0", kScalar, kZero, true, true),
                row("k==0 && l==0 && z1!=-1", kScalar, kZero, true, true),
                row("(k==0 && l==1) || (k==1 && l==0)", kUpperC, kNilD),
                row("k>1 && l>1", kUpperC, kNilD)},
               {1, 0}, false, "1"});

  c.push_back({"L2_13", "L_2^13", {free_param("t1"), nonzero("z")},
               {{2, 1, 1, "1"}, {2, 2, 1, "t1"}}, kShift, kShiftZ, {{{"t1", "0"}, {"z", "2"}}},
               {row(kOrigin, kUnipotentC, kZero, false, true),
                row("(k==0 && l==1) || (k==1 && l==0)", kUpperC, kNilD),
                row("k>1 && l>1", kUpperC, kNilD)},
               {1, 0}, false, "0"});

  c.push_back({"L3_13", "L_3^13", {nonzero("z")}, {{2, 2, 1, "1"}}, kShift, kShiftZ, {},
               {row(kOrigin, kUnipotentC, kNilD, true, true), row(kOffOrigin, kUpperC, kNilD)},
               {1, 0}, false, "0"});

  c.push_back({"L1_14", "L_1^14", {nonzero("z")}, {{2, 2, 1, "1"}}, kJordan, kShiftZ, {},
               {row(kOrigin, kUnipotentC, kNilD, false, true), row("l>=1", kUpperC, kNilD)},
               {1, 0}, false, "0"});

  c.push_back({"L1_15", "L_1^15", {free_param("t1")}, {{1, 2, 1, "1"}, {2, 2, 1, "t1"}}, kShift,
               kIdentity, {{{"t1", "0"}}},
               {row("k==0", kScalar, kZero, true, true), row("k>=1", kUpperC, kNilD)},
               {1, 0}, false, "1"});

  c.push_back({"L1_16", "L_1^16", {nonzero("z")}, {{2, 2, 1, "1"}}, kShift, {"1", "z", "0", "1"},
               {},
               {row("k==0", kUnipotentC, kUpperC, true, true), row("k>=1", kUpperC, kNilD)},
               {1, 0}, false, "1"});

  c.push_back({"L1_17", "L_1^17", {nonzero("z")},
               {{1, 2, 1, "1"}, {2, 1, 1, "-1"}, {2, 2, 1, "1-z"}}, kJordan, {"1", "z", "0", "1"},
               {}, {row("1", {"c1", "(l*z+k)*c1", "0", "c1"}, kUpperC, true, true)},
               {1, 0}, false, "1"});

  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

}  // namespace bihom
