// Shared builders for the algebras the tests exercise.

#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gentle/io.hpp"
#include "gentle/quiver.hpp"
#include "gentle/strings.hpp"

namespace testsup {

using gentle::Arrow;
using gentle::BoundQuiver;
using gentle::Letter;
using gentle::StringWord;

inline BoundQuiver load_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    nlohmann::json j;
    in >> j;
    return gentle::io::parse_algebra(j);
}

// arrows a: 2->1, b: 1->4, g: 4->2, d: 2->3; I = {ab, ga}
inline BoundQuiver ex1() { return load_fixture("ex1.json"); }
inline BoundQuiver orpheus() { return load_fixture("orpheus.json"); }
inline BoundQuiver cyc3() { return load_fixture("cyc3.json"); }
inline BoundQuiver zigzag3() { return load_fixture("zigzag3.json"); }
inline BoundQuiver kronecker() { return load_fixture("kronecker.json"); }
inline BoundQuiver a2() { return load_fixture("a2.json"); }
inline BoundQuiver vee() { return load_fixture("vee.json"); }

inline BoundQuiver k1() { return BoundQuiver({"1"}, {}, {}); }

// 1 -a-> 2 -b-> 3 with an extra arrow g: 1->3, no relations (walk example)
inline BoundQuiver walk_example() {
    return BoundQuiver({"1", "2", "3"},
                       {{"a", "1", "2"}, {"b", "2", "3"}, {"g", "1", "3"}}, {});
}

// a: 1->3, b: 2->3, g: 3->4 with ag in the ideal (cohook example)
inline BoundQuiver cohook_example() {
    return BoundQuiver({"1", "2", "3", "4"},
                       {{"a", "1", "3"}, {"b", "2", "3"}, {"g", "3", "4"}}, {{"a", "g"}});
}

// one vertex, one loop with square zero
inline BoundQuiver loop_algebra() {
    return BoundQuiver({"1"}, {{"a", "1", "1"}}, {{"a", "a"}});
}

inline StringWord word(const BoundQuiver& q, const std::string& text) {
    return gentle::io::parse_word_text(q, text);
}

inline std::vector<StringWord> words(const BoundQuiver& q, const std::vector<std::string>& texts) {
    std::vector<StringWord> out;
    for (const auto& t : texts) out.push_back(word(q, t));
    return out;
}

}  // namespace testsup
