// Copyright 2026 The viperkit Authors
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

#ifndef VIPERKIT_CPG_CONST_EVAL_H_
#define VIPERKIT_CPG_CONST_EVAL_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "viperkit/frontend/ast.h"

namespace viperkit::cpg {

// An integer byte count or UNKNOWN. Arithmetic that overflows int64, divides
// by zero, or touches UNKNOWN yields UNKNOWN.
class ConstValue {
 public:
  ConstValue() = default;
  static ConstValue Of(std::int64_t v) { return ConstValue(v); }
  static ConstValue Unknown() { return ConstValue(); }

  bool known() const { return value_.has_value(); }
  std::int64_t value() const { return *value_; }
  std::string ToString() const;

  friend ConstValue operator+(ConstValue a, ConstValue b);
  friend ConstValue operator-(ConstValue a, ConstValue b);
  friend ConstValue operator*(ConstValue a, ConstValue b);
  // C semantics: truncation toward zero.
  friend ConstValue operator/(ConstValue a, ConstValue b);
  friend ConstValue operator%(ConstValue a, ConstValue b);
  ConstValue operator-() const;

  friend bool operator==(const ConstValue&, const ConstValue&) = default;

 private:
  explicit ConstValue(std::int64_t v) : value_(v) {}
  std::optional<std::int64_t> value_;
};

// Byte sizes of scalar types. Defaults to LP64.
class SizeofModel {
 public:
  SizeofModel();

  // Size of a canonical base type name ("int", "unsigned long", "wchar_t").
  ConstValue BaseSize(std::string_view base) const;
  std::int64_t pointer_size() const { return pointer_size_; }
  std::int64_t wchar_size() const;

  // Overrides one entry; "pointer" sets the pointer size.
  void Set(const std::string& type, std::int64_t bytes);

 private:
  std::map<std::string, std::int64_t, std::less<>> sizes_;
  std::int64_t pointer_size_ = 8;
};

// Resolves identifiers appearing in sizeof(expr) to declared types.
using TypeLookup =
    std::function<const frontend::AstNode*(std::string_view name)>;

struct EvalContext {
  const frontend::Ast* ast = nullptr;
  const SizeofModel* sizes = nullptr;
  // Optional; without it sizeof(variable) is UNKNOWN.
  TypeLookup lookup;
};

// Folds integer and character literals, unary +/-, binary + - * / %,
// casts, sizeof(type), sizeof(variable), sizeof("literal"), and object-like
// #define constants. Anything else is UNKNOWN.
ConstValue EvalConst(const EvalContext& ctx, frontend::AstId expr);

// Size in bytes of a declared type. Array dimensions must fold; a `[]`
// dimension is sized from `init` when given (string literal or init list).
ConstValue TypeSize(const EvalContext& ctx, const frontend::TypeInfo& type,
                    frontend::AstId init = frontend::kNoNode);

}  // namespace viperkit::cpg

#endif  // VIPERKIT_CPG_CONST_EVAL_H_
