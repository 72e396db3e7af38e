// Generated by tools/embed_fixture.py from data/classification.json. Do not edit.
#pragma once

#include <string_view>

namespace ecn {

inline constexpr std::string_view kClassificationFixture = R"json({
  "format": "ecn-classification",
  "version": 1,
  "placeholders": {"$k": "the row's k", "$k4": "min(4, k)"},
  "rows": [
    {"m": 4, "steps": [1], "k": [2, 2], "row": "Table 2: ECN(4_{1},2)", "resolution": {"kind": "Predicate", "id": "CN42"}},
    {"m": 4, "steps": [2], "k": [2, 2], "row": "Table 2: ECN(4_{2},2)", "resolution": {"kind": "PileMerge", "groups": [[0, 2], [1, 3]], "target": "NIM(2)"}},
    {"m": 4, "steps": [1, 2], "k": [2, 2], "row": "Table 2: ECN(4_{1,2},2)", "resolution": {"kind": "MooreEquivalent"}},
    {"m": 5, "steps": [1], "k": [2, 2], "row": "Table 2: ECN(5_{1},2)", "resolution": {"kind": "Predicate", "id": "CN52"}},
    {"m": 5, "steps": [1], "k": [3, 3], "row": "Table 2: ECN(5_{1},3)", "resolution": {"kind": "Predicate", "id": "CN53"}},
    {"m": 5, "steps": [2], "k": [2, 3], "row": "Table 2: ECN(5_{2},i) (2<=i<=3)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(5_{1},$k)", "multiplier": 3, "offset": 0}},
    {"m": 5, "steps": [1, 2], "k": [2, 3], "row": "Table 2: ECN(5_{1,2},i) (2<=i<=3)", "resolution": {"kind": "MooreEquivalent"}},

    {"m": 6, "steps": [1], "k": [2, 2], "row": "Table 3: ECN(6_{1},2)", "resolution": {"kind": "Unsolved"}},
    {"m": 6, "steps": [1], "k": [3, 3], "row": "Table 3: ECN(6_{1},3)", "resolution": {"kind": "Predicate", "id": "CN63"}},
    {"m": 6, "steps": [1], "k": [4, 4], "row": "Table 3: ECN(6_{1},4)", "resolution": {"kind": "Predicate", "id": "CN64"}},
    {"m": 6, "steps": [2], "k": [2, 2], "row": "Table 3: ECN(6_{2},2)", "resolution": {"kind": "DisjunctiveSum", "components": [{"piles": [0, 2, 4], "ruleset": "MN(3,2)"}, {"piles": [1, 3, 5], "ruleset": "MN(3,2)"}]}},
    {"m": 6, "steps": [2], "k": [3, 4], "row": "Table 3: ECN(6_{2},i) (3<=i<=4)", "resolution": {"kind": "PileMerge", "groups": [[0, 2, 4], [1, 3, 5]], "target": "NIM(2)"}},
    {"m": 6, "steps": [3], "k": [2, 4], "row": "Table 3: ECN(6_{3},i) (2<=i<=4)", "resolution": {"kind": "PileMerge", "groups": [[0, 3], [1, 4], [2, 5]], "target": "NIM(3)"}},
    {"m": 6, "steps": [1, 2], "k": [2, 2], "row": "Table 3: ECN(6_{1,2},2)", "resolution": {"kind": "Predicate", "id": "ECN6122"}},
    {"m": 6, "steps": [1, 2], "k": [3, 3], "row": "Table 3: ECN(6_{1,2},3)", "resolution": {"kind": "Predicate", "id": "ECN6123"}},
    {"m": 6, "steps": [1, 2], "k": [4, 4], "row": "Table 3: ECN(6_{1,2},4)", "resolution": {"kind": "Predicate", "id": "ECN6124"}},
    {"m": 6, "steps": [1, 3], "k": [2, 2], "row": "Table 3: ECN(6_{1,3},2)", "resolution": {"kind": "Predicate", "id": "ECN6132"}},
    {"m": 6, "steps": [1, 3], "k": [3, 3], "row": "Table 3: ECN(6_{1,3},3)", "resolution": {"kind": "Unsolved"}},
    {"m": 6, "steps": [1, 3], "k": [4, 4], "row": "Table 3: ECN(6_{1,3},4)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(6_{1},4)", "multiplier": 1, "offset": 0}},
    {"m": 6, "steps": [2, 3], "k": [2, 2], "row": "Table 3: ECN(6_{2,3},2)", "resolution": {"kind": "Unsolved"}},
    {"m": 6, "steps": [2, 3], "k": [3, 3], "row": "Table 3: ECN(6_{2,3},3)", "resolution": {"kind": "Predicate", "id": "ECN6233"}},
    {"m": 6, "steps": [2, 3], "k": [4, 4], "row": "Table 3: ECN(6_{2,3},4)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(6_{2,3},3)", "multiplier": 1, "offset": 0}},
    {"m": 6, "steps": [1, 2, 3], "k": [2, 2], "row": "Table 3: ECN(6_{1,2,3},2)", "resolution": {"kind": "MooreEquivalent"}},
    {"m": 6, "steps": [1, 2, 3], "k": [3, 3], "row": "Table 3: ECN(6_{1,2,3},3)", "resolution": {"kind": "Unsolved"}},
    {"m": 6, "steps": [1, 2, 3], "k": [4, 4], "row": "Table 3: ECN(6_{1,2,3},4)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(6_{1,2},4)", "multiplier": 1, "offset": 0}},

    {"m": 7, "steps": [1], "k": [2, 3], "row": "Table 4: ECN(7_{1},i) (2<=i<=3)", "resolution": {"kind": "Unsolved"}},
    {"m": 7, "steps": [1], "k": [4, 4], "row": "Table 4: ECN(7_{1},4)", "resolution": {"kind": "Predicate", "id": "CN74"}},
    {"m": 7, "steps": [1], "k": [5, 5], "row": "Table 4: ECN(7_{1},5)", "resolution": {"kind": "Unsolved"}},
    {"m": 7, "steps": [2], "k": [2, 5], "row": "Table 4: ECN(7_{2},i) (2<=i<=5)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(7_{1},$k)", "multiplier": 4, "offset": 0}},
    {"m": 7, "steps": [3], "k": [2, 5], "row": "Table 4: ECN(7_{3},i) (2<=i<=5)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(7_{1},$k)", "multiplier": 5, "offset": 0}},
    {"m": 7, "steps": [1, 2], "k": [2, 3], "row": "Table 4: ECN(7_{1,2},i) (2<=i<=3)", "resolution": {"kind": "Unsolved"}},
    {"m": 7, "steps": [1, 2], "k": [4, 4], "row": "Table 4: ECN(7_{1,2},4)", "resolution": {"kind": "Predicate", "id": "ECN7124"}},
    {"m": 7, "steps": [1, 2], "k": [5, 5], "row": "Table 4: ECN(7_{1,2},5)", "resolution": {"kind": "Predicate", "id": "ECN7125"}},
    {"m": 7, "steps": [1, 3], "k": [2, 5], "row": "Table 4: ECN(7_{1,3},i) (2<=i<=5)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(7_{1,2},$k)", "multiplier": 5, "offset": 0}},
    {"m": 7, "steps": [2, 3], "k": [2, 5], "row": "Table 4: ECN(7_{2,3},i) (2<=i<=5)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(7_{1,2},$k)", "multiplier": 4, "offset": 0}},
    {"m": 7, "steps": [1, 2, 3], "k": [2, 2], "row": "Table 4: ECN(7_{1,2,3},2)", "resolution": {"kind": "MooreEquivalent"}},
    {"m": 7, "steps": [1, 2, 3], "k": [3, 4], "row": "Table 4: ECN(7_{1,2,3},i) (3<=i<=4)", "resolution": {"kind": "Unsolved"}},
    {"m": 7, "steps": [1, 2, 3], "k": [5, 5], "row": "Table 4: ECN(7_{1,2,3},5)", "resolution": {"kind": "MooreEquivalent"}},

    {"m": 8, "steps": [1], "k": [2, 5], "row": "Table 5: ECN(8_{1},i) (2<=i<=5)", "resolution": {"kind": "Unsolved"}},
    {"m": 8, "steps": [1], "k": [6, 6], "row": "Table 5: ECN(8_{1},6)", "resolution": {"kind": "Predicate", "id": "CN86"}},
    {"m": 8, "steps": [2], "k": [2, 6], "row": "Table 5: ECN(8_{2},i) (2<=i<=6)", "resolution": {"kind": "DisjunctiveSum", "components": [{"piles": [0, 2, 4, 6], "ruleset": "CN(4,$k4)"}, {"piles": [1, 3, 5, 7], "ruleset": "CN(4,$k4)"}]}},
    {"m": 8, "steps": [3], "k": [2, 6], "row": "Table 5: ECN(8_{3},i) (2<=i<=6)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(8_{1},$k)", "multiplier": 3, "offset": 0}},
    {"m": 8, "steps": [4], "k": [2, 6], "row": "Table 5: ECN(8_{4},i) (2<=i<=6)", "resolution": {"kind": "PileMerge", "groups": [[0, 4], [1, 5], [2, 6], [3, 7]], "target": "NIM(4)"}},
    {"m": 8, "steps": [1, 2], "k": [2, 6], "row": "Table 5: ECN(8_{1,2},i) (2<=i<=6)", "resolution": {"kind": "Unsolved"}},
    {"m": 8, "steps": [1, 3], "k": [2, 2], "row": "Table 5: ECN(8_{1,3},2)", "resolution": {"kind": "Predicate", "id": "ECN8132"}},
    {"m": 8, "steps": [1, 3], "k": [3, 3], "row": "Table 5: ECN(8_{1,3},3)", "resolution": {"kind": "Unsolved"}},
    {"m": 8, "steps": [1, 3], "k": [4, 4], "row": "Table 5: ECN(8_{1,3},4)", "resolution": {"kind": "Predicate", "id": "ECN8134"}},
    {"m": 8, "steps": [1, 3], "k": [5, 5], "row": "Table 5: ECN(8_{1,3},5)", "resolution": {"kind": "Unsolved"}},
    {"m": 8, "steps": [1, 3], "k": [6, 6], "row": "Table 5: ECN(8_{1,3},6)", "resolution": {"kind": "Predicate", "id": "ECN8136"}},
    {"m": 8, "steps": [1, 4], "k": [2, 4], "row": "Table 5: ECN(8_{1,4},i) (2<=i<=4)", "resolution": {"kind": "Unsolved"}},
    {"m": 8, "steps": [1, 4], "k": [5, 6], "row": "Table 5: ECN(8_{1,4},i) (5<=i<=6)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(8_{1},$k)", "multiplier": 1, "offset": 0}},
    {"m": 8, "steps": [2, 3], "k": [2, 6], "row": "Table 5: ECN(8_{2,3},i) (2<=i<=6)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(8_{1,2},$k)", "multiplier": 3, "offset": 0}},
    {"m": 8, "steps": [2, 4], "k": [2, 6], "row": "Table 5: ECN(8_{2,4},i) (2<=i<=6)", "resolution": {"kind": "DisjunctiveSum", "components": [{"piles": [0, 2, 4, 6], "ruleset": "ECN(4_{1,2},$k4)"}, {"piles": [1, 3, 5, 7], "ruleset": "ECN(4_{1,2},$k4)"}]}},
    {"m": 8, "steps": [3, 4], "k": [2, 6], "row": "Table 5: ECN(8_{3,4},i) (2<=i<=6)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(8_{1,4},$k)", "multiplier": 3, "offset": 0}},
    {"m": 8, "steps": [1, 2, 3], "k": [2, 5], "row": "Table 5: ECN(8_{1,2,3},i) (2<=i<=5)", "resolution": {"kind": "Unsolved"}},
    {"m": 8, "steps": [1, 2, 3], "k": [6, 6], "row": "Table 5: ECN(8_{1,2,3},6)", "resolution": {"kind": "Predicate", "id": "ECN81236"}},
    {"m": 8, "steps": [1, 2, 4], "k": [2, 2], "row": "Table 5: ECN(8_{1,2,4},2)", "resolution": {"kind": "Unsolved"}},
    {"m": 8, "steps": [1, 2, 4], "k": [3, 6], "row": "Table 5: ECN(8_{1,2,4},i) (3<=i<=6)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(8_{1,2},$k)", "multiplier": 1, "offset": 0}},
    {"m": 8, "steps": [1, 3, 4], "k": [2, 4], "row": "Table 5: ECN(8_{1,3,4},i) (2<=i<=4)", "resolution": {"kind": "Unsolved"}},
    {"m": 8, "steps": [1, 3, 4], "k": [5, 6], "row": "Table 5: ECN(8_{1,3,4},i) (5<=i<=6)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(8_{1,3},$k)", "multiplier": 1, "offset": 0}},
    {"m": 8, "steps": [2, 3, 4], "k": [2, 6], "row": "Table 5: ECN(8_{2,3,4},i) (2<=i<=6)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(8_{1,2,4},$k)", "multiplier": 3, "offset": 0}},
    {"m": 8, "steps": [1, 2, 3, 4], "k": [2, 2], "row": "Table 5: ECN(8_{1,2,3,4},2)", "resolution": {"kind": "MooreEquivalent"}},
    {"m": 8, "steps": [1, 2, 3, 4], "k": [3, 6], "row": "Table 5: ECN(8_{1,2,3,4},i) (3<=i<=6)", "resolution": {"kind": "IsomorphicTo", "target": "ECN(8_{1,2,3},$k)", "multiplier": 1, "offset": 0}}
  ]
}
)json";

}  // namespace ecn
