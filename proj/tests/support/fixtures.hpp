#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "cpath/path.hpp"
#include "cpath/syntax.hpp"
#include "cpath/term.hpp"

namespace fx {

inline cpath::Term T(const std::string& text) { return cpath::parseTerm(text); }
inline cpath::Path P(const std::string& text) { return cpath::parsePath(text); }

// (λx.(λy.yx)(λw.zw))v and its successors on the way to z v
inline const char* kM =
    "(app (lam x (app (lam y (app (var y) (var x))) (lam w (app (var z) (var w))))) (var v))";
inline const char* kM1 = "(app (lam x (app (lam y (app (var y) (var x))) (var z))) (var v))";
inline const char* kM2 = "(app (lam y (app (var y) (var v))) (var z))";
inline const char* kN = "(app (var z) (var v))";

inline std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string golden(const std::string& name) {
    return slurp(std::string(CPATH_GOLDEN_DIR) + "/" + name);
}

}  // namespace fx
