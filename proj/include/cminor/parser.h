// Copyright 2026 The Cminor Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Concrete syntax: parser and pretty-printer for programs, statements and
// expressions. print_program output always parses back to an equal AST.
//
//   program  := ("global" ident "[" nat "]" ";" | "gamma" A ";" | fundef)*
//   fundef   := "fn" ident "(" idents ")" ":" nat ["requires" A] ["ensures" A]
//               "{" ["locals" idents ";"] ["stack" nat ";"] stmt* "}"
//   stmt     := ident "=" e ";" | "store" chunk "[" e "]" "=" e ";"
//             | "loop" ["invariant" A] "{" stmt* "}"
//             | "block" ["exits" A] "{" stmt* "}"
//             | "exit" nat ";" | "skip" ";" | "return" [es] ";"
//             | "if" "(" e ")" "{" stmt* "}" ["else" "{" stmt* "}"]
//             | ["(" idents ")" "="] "call" primary "(" [es] ")" ";"
//             | "assert" A ";" | "assert" A "{" stmt* "}"
//             | "{" stmt* "}"
//
// Expressions use C precedence. Unsigned and float variants of operators
// carry a suffix written without a space: "/u", "%u", ">>u", "<u", "==f",
// "+f" and so on. Unary forms: "-e", "~e", "negf(e)", "int8s(e)",
// "int8u(e)", "int16s(e)", "int16u(e)", "intoffloat(e)", "floatofint(e)",
// "floatofintu(e)". Other primaries: integer and float literals, "nan",
// "inf", "undef", "ptr(b, ofs)", "const(lit)", "&name", "stack(n)",
// chunk "[" e "]" (load) and variables. A call target naming no variable
// refers to the global of that name.

#ifndef CMINOR_PARSER_H_
#define CMINOR_PARSER_H_

#include <string>

#include "cminor/syntax.h"

namespace cminor {

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

Program parse_program(const std::string& text);

std::string print_program(const Program& p);
std::string print_stmt(const Stmt& s, int indent = 0);
std::string print_expr(const Expr& e);

}  // namespace cminor

#endif  // CMINOR_PARSER_H_
